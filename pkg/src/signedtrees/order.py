"""Minimum order of a degree set.

Closed forms exist for ``{1} + positives`` (``2 - n + sum``) and
``{1, 0} + positives`` (``4 - n + sum``), and for their negations.  Every
other valid set only gets an upper bound from the best available
construction; the oracle gives exact values at small orders.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import NEG, POS, DegreeSet, SignedTree, attach_leaves, build_star, negate_signs
from .diameter import build_min_diameter
from .validity import check, first_pendant, realize_any, require_valid


class NotCovered(LookupError):
    """The set lies outside the families with a known minimum order."""


@dataclass(frozen=True)
class OrderResult:
    value: int
    exact: bool
    witness: SignedTree
    branch: str


def _family(D: DegreeSet) -> str | None:
    if D.negatives or -1 in D:
        return None
    return "positive-zero" if 0 in D else "positive"


def sigma_formula(D: DegreeSet) -> int | None:
    """Closed-form minimum order, or ``None`` outside the solved families."""
    require_valid(D)
    if 1 not in D:
        return sigma_formula(-D)
    if _family(D) is None:
        return None
    xs = D.positives
    base = 4 if 0 in D else 2
    return base - len(xs) + sum(xs)


def _positive_chain(xs) -> SignedTree:
    # Each new star hangs off the newest leaf, so the result is a caterpillar.
    xs = sorted(xs)
    if not xs:
        return SignedTree(2, ((0, 1, POS),))
    T = build_star(xs[0], POS)
    for x in xs[1:]:
        T = attach_leaves(T, T.order - 1, x - 1, POS)
    return T


def _with_g0_tail(T: SignedTree) -> SignedTree:
    # q -(-)- u -(+)- u1 at a leaf q of signed degree 1: q and u drop to 0.
    q = first_pendant(T, 1)
    T = attach_leaves(T, q, 1, NEG)
    return attach_leaves(T, T.order - 1, 1, POS)


def build_min_order(D: DegreeSet) -> OrderResult:
    require_valid(D)
    if 1 not in D:
        r = build_min_order(-D)
        return OrderResult(r.value, True, negate_signs(r.witness), "mirror-of-" + r.branch)
    family = _family(D)
    if family is None:
        raise NotCovered(f"no closed-form order for {{{D}}}")
    T = _positive_chain(D.positives)
    if family == "positive-zero":
        T = _with_g0_tail(T)
    check(T, D)
    value = sigma_formula(D)
    if T.order != value:
        raise AssertionError(f"witness order {T.order} differs from formula {value}")
    return OrderResult(value, True, T, family)


def sigma_upper_bound(D: DegreeSet) -> OrderResult:
    """Order of the smallest witness any constructor here produces."""
    require_valid(D)
    candidates = []
    if sigma_formula(D) is not None:
        candidates.append(build_min_order(D).witness)
    candidates.append(realize_any(D))
    candidates.append(build_min_diameter(D).witness)
    best = min(candidates, key=lambda T: T.order)
    return OrderResult(best.order, False, best, "upper-bound")
