"""Search for trees that are optimal in diameter and in order at once.

For a set ``D`` the lab takes the closed-form minimum diameter, pins down
the minimum order (closed form, else exhaustive search up to the best known
construction), then scans every realization of that order for the smallest
diameter.  No verdict is assumed in advance.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from . import oracle
from .core import DegreeSet, SignedTree, degree_set, diameter
from .diameter import diam_formula
from .order import sigma_formula, sigma_upper_bound
from .serialize import to_dict
from .validity import is_valid, require_valid


class Verdict(str, Enum):
    JOINT = "joint-optimum-exists"
    HOLDS = "conjecture-holds-at-scale"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class OptimalityReport:
    degree_set: DegreeSet
    diam: int
    sigma: int
    sigma_exact: bool
    sigma_source: str
    min_diam_at_sigma: int | None
    verdict: Verdict
    family: str
    witness: SignedTree | None = None
    note: str = ""

    @property
    def counterexample(self) -> bool:
        return self.verdict is Verdict.JOINT and len(self.degree_set) > 2

    def to_dict(self) -> dict:
        return {
            "D": list(self.degree_set),
            "family": self.family,
            "diam": self.diam,
            "sigma": self.sigma,
            "sigma_exact": self.sigma_exact,
            "sigma_source": self.sigma_source,
            "min_diam_at_sigma": self.min_diam_at_sigma,
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else to_dict(self.witness),
            "note": self.note,
        }


def verify_report(report: OptimalityReport) -> bool:
    """Re-check the witness, if any, against set, order and diameter."""
    T = report.witness
    if T is None:
        return report.verdict is not Verdict.JOINT
    return (
        degree_set(T) == report.degree_set
        and T.order == report.sigma
        and diameter(T) == report.diam
    )


def _exact_sigma(D: DegreeSet, bound: int, config) -> tuple[int, bool, str]:
    value = sigma_formula(D)
    if value is not None:
        return value, True, "formula"
    upper = sigma_upper_bound(D).value
    found = oracle.min_order_realizing(D, min(upper, bound), config)
    if found is not None:
        return found.value, True, "oracle"
    if upper <= bound:
        raise AssertionError(f"oracle missed a realization of {{{D}}} at order {upper}")
    return upper, False, "upper-bound"


def joint_optimality(D: DegreeSet, bound: int = 12,
                     config: oracle.EnumerationConfig | None = None) -> OptimalityReport:
    require_valid(D)
    if len(D) < 2:
        raise ValueError("joint optimality needs |D| >= 2")
    config = config or oracle.EnumerationConfig(max_order=bound, dedup=False)
    f = diam_formula(D)
    sigma, exact, source = _exact_sigma(D, bound, config)

    def report(verdict, min_diam=None, witness=None, note=""):
        return OptimalityReport(D, f.value, sigma, exact, source, min_diam, verdict,
                                f.branch, witness, note)

    if not exact or sigma > bound:
        return report(Verdict.UNDECIDED, note=f"order {sigma} not enumerable within bound {bound}")

    table = oracle.order_table(sigma, config.jobs)
    hits = table.hits(oracle.encode(D))
    diams = table.diameters[hits[:, 0]]
    k = int(diams.argmin())
    best = int(diams[k])
    if best < f.value:
        raise AssertionError(f"order-{sigma} realization of {{{D}}} beats diam formula: {best}")
    if best == f.value:
        i, mask = hits[k]
        note = "joint optimum with |D| > 2" if len(D) > 2 else ""
        return report(Verdict.JOINT, best, table.tree(i, mask), note)
    return report(Verdict.HOLDS, best)


def candidate_sets(universe: Iterable[int], sizes: Iterable[int]) -> list[DegreeSet]:
    values = sorted(set(universe))
    out = []
    for k in sorted(set(sizes)):
        for combo in itertools.combinations(values, k):
            D = DegreeSet(combo)
            if is_valid(D):
                out.append(D)
    return out


def sweep(universe: Iterable[int], sizes: Iterable[int] | int = 3, bound: int = 12,
          config: oracle.EnumerationConfig | None = None) -> list[OptimalityReport]:
    """Reports for every valid set drawn from ``universe``; counterexamples first."""
    if isinstance(sizes, int):
        sizes = [sizes]
    sizes = [k for k in sizes if k >= 2]
    reports = [joint_optimality(D, bound, config) for D in candidate_sets(universe, sizes)]
    return sorted(reports, key=lambda r: not r.counterexample)


def to_jsonl(reports: Iterable[OptimalityReport]) -> str:
    return "".join(json.dumps(r.to_dict(), separators=(",", ":")) + "\n" for r in reports)


CSV_FIELDS = ["D", "family", "diam", "sigma", "sigma_exact", "sigma_source",
              "min_diam_at_sigma", "verdict", "witness", "note"]


def to_csv(reports: Iterable[OptimalityReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = r.to_dict()
        row["D"] = ",".join(str(v) for v in r.degree_set)
        row["witness"] = "" if r.witness is None else json.dumps(row["witness"], separators=(",", ":"))
        row["min_diam_at_sigma"] = "" if r.min_diam_at_sigma is None else r.min_diam_at_sigma
        writer.writerow(row)
    return buf.getvalue()
