"""Exhaustive enumeration of small signed trees.

For each order ``n`` every free-tree skeleton is crossed with all
``2 ** (n - 1)`` sign masks (bit ``j`` set = edge ``j`` negative).  Signed
degrees are computed for a whole skeleton at once with a mask-by-incidence
matrix product, and each realized degree set is packed into a 64-bit word
(bit ``d + OFFSET`` for member ``d``), so set membership questions become
integer comparisons over numpy arrays.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .core import DegreeSet, InvalidDegreeSet, SignedTree, canonical_key, negate_signs
from .freetrees import Skeleton, free_trees, skeleton_tree
from .validity import is_valid

OFFSET = 31
MAX_ORDER = 16


@dataclass(frozen=True)
class EnumerationConfig:
    max_order: int = 10
    dedup: bool = True
    jobs: int = 1
    early_stop: str | None = None

    def __post_init__(self):
        if self.max_order < 2:
            raise ValueError("max_order must be >= 2")
        if self.max_order > MAX_ORDER:
            raise ValueError(f"max_order above {MAX_ORDER} is outside desk scale")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.early_stop not in (None, "first"):
            raise ValueError(f"unknown early_stop {self.early_stop!r}")


def max_jobs() -> int:
    return os.cpu_count() or 1


class Realization(NamedTuple):
    value: int
    witness: SignedTree


def encode(D) -> int | None:
    """Bit-packed set; ``None`` if a member cannot occur below MAX_ORDER."""
    code = 0
    for d in D:
        if abs(d) > OFFSET:
            return None
        code |= 1 << (d + OFFSET)
    return code


def decode(code: int) -> DegreeSet:
    code = int(code)
    return DegreeSet(i - OFFSET for i in range(64) if (code >> i) & 1)


# -- tables ------------------------------------------------------------------


def _sign_rows(m: int) -> np.ndarray:
    masks = np.arange(1 << m, dtype=np.int64)[:, None]
    bits = (masks >> np.arange(m, dtype=np.int64)) & 1
    return (1 - 2 * bits).astype(np.int16)


def _skeleton_diameter(skel: Skeleton, n: int) -> int:
    if n == 1:
        return 0
    adj = [[] for _ in range(n)]
    for u, v in skel:
        adj[u].append(v)
        adj[v].append(u)

    def far(s):
        dist = [-1] * n
        dist[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    stack.append(y)
        best = max(range(n), key=dist.__getitem__)
        return best, dist[best]

    a, _ = far(0)
    return far(a)[1]


def _skeleton_codes(job: tuple[Skeleton, int]) -> np.ndarray:
    skel, n = job
    m = n - 1
    if m == 0:
        return np.array([1 << OFFSET], dtype=np.uint64)
    inc = np.zeros((m, n), dtype=np.int16)
    for j, (u, v) in enumerate(skel):
        inc[j, u] = 1
        inc[j, v] = 1
    sdeg = _sign_rows(m) @ inc
    bits = np.left_shift(np.uint64(1), (sdeg + OFFSET).astype(np.uint64))
    return np.bitwise_or.reduce(bits, axis=1)


def _pmap(func, items, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=chunk))


@dataclass
class OrderTable:
    """Degree-set codes of every signed tree of one order.

    ``codes[i, mask]`` is the packed degree set of skeleton ``i`` under
    ``mask``; ``diameters[i]`` is the skeleton's diameter.
    """

    order: int
    skeletons: list[Skeleton]
    diameters: np.ndarray
    codes: np.ndarray = field(repr=False)

    def tree(self, i: int, mask: int) -> SignedTree:
        return skeleton_tree(self.skeletons[i], self.order, int(mask))

    def hits(self, code: int | None) -> np.ndarray:
        """``(skeleton, mask)`` index pairs realizing ``code``, row-major."""
        if code is None:
            return np.empty((0, 2), dtype=np.int64)
        return np.argwhere(self.codes == np.uint64(code))


def build_order_table(n: int, jobs: int = 1) -> OrderTable:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order {n} outside supported range 1..{MAX_ORDER}")
    skels = free_trees(n)
    rows = _pmap(_skeleton_codes, [(s, n) for s in skels], jobs)
    diam = np.array([_skeleton_diameter(s, n) for s in skels], dtype=np.int64)
    return OrderTable(n, skels, diam, np.vstack(rows))


_TABLES: dict[int, OrderTable] = {}


def order_table(n: int, jobs: int = 1) -> OrderTable:
    """Cached :func:`build_order_table`; contents do not depend on ``jobs``."""
    if n not in _TABLES:
        _TABLES[n] = build_order_table(n, jobs)
    return _TABLES[n]


# -- queries -----------------------------------------------------------------


def enumerate_free_trees(n: int, backend: str = "wrom") -> list[Skeleton]:
    return free_trees(n, backend)


def _dedup(trees):
    seen = set()
    out = []
    for T in trees:
        key = canonical_key(T)
        if key not in seen:
            seen.add(key)
            out.append(T)
    return out


def enumerate_signed_trees(n: int, config: EnumerationConfig | None = None) -> list[SignedTree]:
    config = config or EnumerationConfig()
    skels = free_trees(n)
    trees = [skeleton_tree(s, n, mask) for s in skels for mask in range(1 << (n - 1))]
    return _dedup(trees) if config.dedup else trees


def _require_valid(D: DegreeSet) -> None:
    if not is_valid(D):
        raise InvalidDegreeSet(f"{{{D}}} contains neither 1 nor -1")


def realizations(D: DegreeSet, n: int, config: EnumerationConfig | None = None) -> list[SignedTree]:
    """Every signed tree of order exactly ``n`` realizing ``D``."""
    config = config or EnumerationConfig()
    table = order_table(n, config.jobs)
    trees = [table.tree(i, mask) for i, mask in table.hits(encode(D))]
    return _dedup(trees) if config.dedup else trees


def min_order_realizing(D: DegreeSet, bound: int | None = None,
                        config: EnumerationConfig | None = None) -> Realization | None:
    """Smallest order ``<= bound`` realizing ``D``; ``None`` if there is none."""
    config = config or EnumerationConfig()
    bound = config.max_order if bound is None else bound
    _require_valid(D)
    code = encode(D)
    for n in range(2, bound + 1):
        hits = order_table(n, config.jobs).hits(code)
        if len(hits):
            i, mask = hits[0]
            return Realization(n, order_table(n).tree(i, mask))
    return None


def min_diameter_realizing(D: DegreeSet, order_bound: int | None = None,
                           config: EnumerationConfig | None = None) -> Realization | None:
    """Smallest diameter over realizations of order ``<= order_bound``."""
    config = config or EnumerationConfig()
    order_bound = config.max_order if order_bound is None else order_bound
    _require_valid(D)
    code = encode(D)
    best = None
    for n in range(2, order_bound + 1):
        table = order_table(n, config.jobs)
        hits = table.hits(code)
        if not len(hits):
            continue
        diams = table.diameters[hits[:, 0]]
        k = int(np.argmin(diams))
        if best is None or diams[k] < best[0]:
            best = (int(diams[k]), n, *hits[k])
    if best is None:
        return None
    d, n, i, mask = best
    return Realization(d, order_table(n).tree(i, mask))


def realizable_sets(n: int, config: EnumerationConfig | None = None) -> set[DegreeSet]:
    if n < 2:
        raise ValueError("realizable_sets needs n >= 2")
    config = config or EnumerationConfig()
    return {decode(c) for c in np.unique(order_table(n, config.jobs).codes)}


def minimum_diameters(max_order: int, config: EnumerationConfig | None = None) -> dict[DegreeSet, int]:
    """Smallest diameter of each degree set realized at order ``<= max_order``."""
    config = config or EnumerationConfig()
    best: dict[int, int] = {}
    for n in range(2, max_order + 1):
        table = order_table(n, config.jobs)
        for diam in np.unique(table.diameters):
            codes = np.unique(table.codes[table.diameters == diam])
            d = int(diam)
            for c in codes.tolist():
                if best.get(c, d + 1) > d:
                    best[c] = d
    return {decode(c): d for c, d in best.items()}


# -- structural audit ----------------------------------------------------------


@dataclass
class AuditReport:
    degree_set: DegreeSet
    sigma: int
    optima: int
    violations: list[tuple[SignedTree, list[str]]]
    mirrored: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations


def _g0_violations(T: SignedTree) -> list[str]:
    sdeg = T.signed_degrees()
    deg = T.degrees()
    neg = T.negative_edges
    problems = []
    for u, v, _ in neg:
        if sdeg[u] != 0 or sdeg[v] != 0:
            problems.append(f"negative edge {u}{v} has an endpoint with nonzero signed degree")
    if len(neg) != 1:
        problems.append(f"{len(neg)} negative edges instead of 1")
    for u, v, _ in neg:
        if deg[u] != 2 or deg[v] != 2:
            problems.append(f"negative edge {u}{v} has an endpoint of degree != 2")
    return problems


def audit_optimal_structure(D: DegreeSet, bound: int | None = None,
                            config: EnumerationConfig | None = None) -> AuditReport:
    """Check every order-optimal realization of ``{1, 0} + positives`` for the G0 pattern.

    Each negative edge must join two vertices of signed degree 0, there must
    be exactly one negative edge, and both its ends must have degree 2.  A
    mirrored set ``{-1, 0} + negatives`` is audited through its negation.
    """
    config = config or EnumerationConfig()
    mirrored = 1 not in D
    E = -D if mirrored else D
    if 1 not in E or 0 not in E or E.negatives or -1 in E:
        raise ValueError(f"audit applies to {{1, 0}} plus positives (or the mirror), got {{{D}}}")
    found = min_order_realizing(E, bound, config)
    if found is None:
        raise ValueError(f"sigma({{{D}}}) exceeds the order bound")
    optima = realizations(E, found.value, config)
    violations = []
    for T in optima:
        problems = _g0_violations(T)
        if problems:
            violations.append((negate_signs(T) if mirrored else T, problems))
    return AuditReport(D, found.value, len(optima), violations, mirrored)

