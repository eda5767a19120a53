"""Which degree sets a signed tree can realize, and one realization for each."""
from __future__ import annotations

from .core import (
    NEG,
    POS,
    DegreeSet,
    InvalidDegreeSet,
    SignedTree,
    attach_leaves,
    attach_signed_leaves,
    build_caterpillar,
    degree_set,
    negate_signs,
)


def is_valid(D: DegreeSet) -> bool:
    """A tree has at least two leaves, and a leaf has signed degree +1 or -1."""
    if not len(D):
        raise InvalidDegreeSet("degree set is empty")
    return 1 in D or -1 in D


def require_valid(D: DegreeSet) -> None:
    if not is_valid(D):
        raise InvalidDegreeSet(f"invalid: {{{D}}} needs 1 or -1")


def first_pendant(T: SignedTree, sdeg: int) -> int:
    """Lowest-id leaf with the given signed degree."""
    deg, sd = T.degrees(), T.signed_degrees()
    for v in range(T.order):
        if deg[v] == 1 and sd[v] == sdeg:
            return v
    raise LookupError(f"no pendant with signed degree {sdeg}")


def repair_negative_pendants(T: SignedTree) -> SignedTree:
    """Give every leaf of signed degree -1 two positive leaves, lifting it to 1."""
    deg, sd = T.degrees(), T.signed_degrees()
    for v in [v for v in range(T.order) if deg[v] == 1 and sd[v] == -1]:
        T = attach_leaves(T, v, 2, POS)
    return T


def check(T: SignedTree, D: DegreeSet) -> SignedTree:
    got = degree_set(T)
    if got != D:
        raise AssertionError(f"construction realized {{{got}}} instead of {{{D}}}")
    return T


def realize_any(D: DegreeSet) -> SignedTree:
    """Some signed tree whose degree set is exactly ``D``.

    Positive members become spine vertices of a caterpillar with positive
    leaves.  A negative member ``y`` becomes a spine vertex of degree
    ``|y| + 4`` with negative leaves; the spine itself is all positive, so
    that vertex sits at ``2 - (|y| + 2) = y``.
    """
    require_valid(D)
    if 1 not in D:
        return negate_signs(realize_any(-D))
    xs, ys = D.positives, D.negatives
    spine = [*xs, *(abs(y) + 4 for y in ys)]
    if spine:
        k = len(xs)

        def rule(slot):
            if slot[0] == "spine":
                return POS
            return POS if slot[1] <= k else NEG

        T = build_caterpillar(spine, rule)
    else:
        T = SignedTree(2, ((0, 1, POS),))

    if -1 in D and -1 not in T.signed_degrees():
        T = attach_signed_leaves(T, first_pendant(T, 1), (POS, NEG))
    if -1 not in D:
        T = repair_negative_pendants(T)
    if 0 in D:
        T = attach_leaves(T, first_pendant(T, 1), 1, NEG)
        if -1 not in D:
            T = attach_leaves(T, T.order - 1, 2, POS)
    return check(T, D)
