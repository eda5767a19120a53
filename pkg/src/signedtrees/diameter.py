"""Minimum diameter of a degree set: closed form and optimal witnesses.

Sets without 1 are handled through their negation.  With ``1`` in the set,
let ``m`` count members below -1, ``n`` members above 1 and ``z`` flag 0:

=====================  ======================================
-1 in D                t = m + n + z: 0,1 -> 2; 2 -> 3; else 4
-1 absent, m >= 1      m: 1 -> 4; 2 -> 5; else 6
-1 absent, m = 0, 0    n: 0,1 -> 3; else 4
-1 absent, m = 0       n: 0 -> 1; 1 -> 2; 2 -> 3; else 4
=====================  ======================================
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    NEG,
    POS,
    DegreeSet,
    SignedTree,
    attach_leaves,
    attach_signed_leaves,
    build_star,
    diameter,
    limiting_pendants,
    negate_signs,
)
from .oracle import encode, order_table
from .validity import check, repair_negative_pendants, require_valid


class NotAchievable(Exception):
    """No witness of the requested diameter was found within the search budget."""

    def __init__(self, D: DegreeSet, k: int, bound: int):
        super().__init__(f"no realization of {{{D}}} with diameter {k} found (order bound {bound})")
        self.D, self.k, self.bound = D, k, bound


class DiamFormula(NamedTuple):
    value: int
    branch: str
    detail: str


@dataclass(frozen=True)
class DiamResult:
    value: int
    branch: str
    detail: str
    witness: SignedTree


def _by_count(count: int, table: dict[int, int], default: int) -> int:
    return table.get(count, default)


def diam_formula(D: DegreeSet) -> DiamFormula:
    require_valid(D)
    if 1 not in D:
        f = diam_formula(-D)
        return DiamFormula(f.value, "mirror-of-" + f.branch, f.detail)
    m, n, z = len(D.negatives), len(D.positives), int(0 in D)
    if -1 in D:
        t = m + n + z
        branch = "derived-edge-case" if t == 0 else "plus-minus-one"
        return DiamFormula(_by_count(t, {0: 2, 1: 2, 2: 3}, 4), branch, f"n={t}")
    if m:
        return DiamFormula(_by_count(m, {1: 4, 2: 5}, 6), "negatives", f"m={m}")
    if z:
        return DiamFormula(_by_count(n, {0: 3, 1: 3}, 4), "positive-zero", f"n={n}")
    branch = "derived-edge-case" if n == 0 else "positive"
    return DiamFormula(_by_count(n, {0: 1, 1: 2, 2: 3}, 4), branch, f"n={n}")


# -- constructions (1 in D) ----------------------------------------------------


def positive_tree(xs) -> SignedTree:
    """All-positive optimum for ``{1} + xs``: star, double star or star of stars."""
    xs = sorted(xs)
    if not xs:
        return SignedTree(2, ((0, 1, POS),))
    if len(xs) == 2:
        return attach_leaves(build_star(xs[0], POS), 1, xs[1] - 1, POS)
    T = build_star(xs[-1], POS)
    for i, x in enumerate(xs[:-1]):
        T = attach_leaves(T, i + 1, x - 1, POS)
    return T


def _positive_zero_tree(xs) -> SignedTree:
    xs = sorted(xs)
    if not xs:
        return SignedTree(4, ((0, 1, POS), (1, 2, NEG), (2, 3, POS)))
    if len(xs) == 1:
        # 0 -- 1 negative; 0 keeps one positive leaf, 1 gets x + 1.
        T = SignedTree(2, ((0, 1, NEG),))
        T = attach_leaves(T, 0, 1, POS)
        return attach_leaves(T, 1, xs[0] + 1, POS)
    # Center of degree x_n + 2: x_n + 1 positive leaves and a negative child
    # carrying one positive leaf (signed degree 0).
    T = build_star(xs[-1] + 1, POS)
    T = attach_leaves(T, 0, 1, NEG)
    T = attach_leaves(T, T.order - 1, 1, POS)
    for i, x in enumerate(xs[:-1]):
        T = attach_leaves(T, i + 1, x - 1, POS)
    return T


def _negatives_tree(abs_ys, xs, zero: bool) -> SignedTree:
    """Mirror of the positive shape on ``|y|`` values, leaves lifted to +1.

    ``abs_ys`` may repeat values; that only adds spine vertices with an
    already present signed degree, which is how a longer witness is made.
    """
    a = sorted(abs_ys)
    if len(a) == 1:
        T = build_star(a[0], NEG)
    elif len(a) == 2:
        T = SignedTree(2, ((0, 1, NEG),))
        T = attach_leaves(T, 0, a[0] - 1, NEG)
        T = attach_leaves(T, 1, a[1] - 1, NEG)
    else:
        T = build_star(a[-1], NEG)
        for i, y in enumerate(a[:-1]):
            T = attach_leaves(T, i + 1, y - 1, NEG)
    T = repair_negative_pendants(T)
    center = 0
    for x in sorted(xs):
        T = attach_signed_leaves(T, center, (NEG, POS))
        T = attach_leaves(T, T.order - 2, x + 1, POS)
    if zero:
        T = attach_signed_leaves(T, center, (NEG, POS))
        T = attach_leaves(T, T.order - 2, 1, POS)
    return T


def _plus_minus_one_tree(D: DegreeSet) -> SignedTree:
    zs = sorted(D.others)
    if not zs:
        return attach_signed_leaves(SignedTree.single_vertex(), 0, (POS, POS, NEG))
    # Optimal all-positive tree for {1, delta+1, ..., delta+n}; then pull the
    # vertex at delta+i down to z_i with delta+i-z_i negative leaves.
    delta = max(2, *(abs(z) for z in zs)) + 1
    T = positive_tree([delta + i for i in range(1, len(zs) + 1)])
    sd = T.signed_degrees()
    targets = [sd.index(delta + i) for i in range(1, len(zs) + 1)]
    for v, i, z in zip(targets, range(1, len(zs) + 1), zs):
        T = attach_leaves(T, v, delta + i - z, NEG)
    return T


def _construct(D: DegreeSet) -> SignedTree:
    if -1 in D:
        return _plus_minus_one_tree(D)
    if D.negatives:
        return _negatives_tree([abs(y) for y in D.negatives], D.positives, 0 in D)
    if 0 in D:
        return _positive_zero_tree(D.positives)
    return positive_tree(D.positives)


def build_min_diameter(D: DegreeSet) -> DiamResult:
    """A witness of minimum diameter, checked against the closed form."""
    f = diam_formula(D)
    if 1 in D:
        T = _construct(D)
    else:
        T = negate_signs(_construct(-D))
    check(T, D)
    if diameter(T) != f.value:
        raise AssertionError(f"witness for {{{D}}} has diameter {diameter(T)}, expected {f.value}")
    return DiamResult(f.value, f.branch, f.detail, T)


# -- longer witnesses ----------------------------------------------------------


def _grow_by_one(T: SignedTree, D: DegreeSet) -> SignedTree | None:
    p = min(limiting_pendants(T))
    if -1 in D:
        # Two opposite leaves keep p's signed degree and add +1 and -1.
        return attach_signed_leaves(T, p, (POS, NEG))
    if D.positives:
        x = min(D.positives)
        return attach_leaves(T, p, x - 1, POS)
    return None


def _grow_by_two(T: SignedTree) -> SignedTree:
    # p keeps +1; the negative child is lifted back to +1 by two leaves.
    p = min(limiting_pendants(T))
    T = attach_signed_leaves(T, p, (POS, NEG))
    return attach_leaves(T, T.order - 1, 2, POS)


def _alternative_bases(D: DegreeSet, k: int, order_bound: int):
    """Realizations whose diameter is at most ``k`` and of the same parity."""
    ys = [abs(y) for y in D.negatives]
    if ys and -1 not in D:
        for extra in (1, 2):
            if len(ys) + extra <= 3:
                yield _negatives_tree(ys + [ys[-1]] * extra, D.positives, 0 in D)
    code = encode(D)
    for n in range(2, order_bound + 1):
        table = order_table(n)
        hits = table.hits(code)
        diams = table.diameters[hits[:, 0]]
        ok = (diams <= k) & ((k - diams) % 2 == 0)
        if ok.any():
            i, mask = hits[int(ok.argmax())]
            yield table.tree(i, mask)


def build_with_diameter(D: DegreeSet, k: int, order_bound: int = 10) -> SignedTree:
    """A realization of ``D`` with diameter exactly ``k``, best effort.

    Extends a minimum-diameter witness at a limiting leaf, one or two levels
    at a time.  When only two-level steps are available and the parity is
    wrong, other bases are tried, ending with every realization of order
    ``<= order_bound``.  Raises :class:`NotAchievable` when all of that fails.
    """
    f = diam_formula(D)
    if k < f.value:
        raise ValueError(f"diameter {k} is below diam({{{D}}}) = {f.value}")
    if 1 not in D:
        return negate_signs(build_with_diameter(-D, k, order_bound))
    T = build_min_diameter(D).witness
    if _grow_by_one(T, D) is not None:
        while diameter(T) < k:
            T = _grow_by_one(T, D)
        return check(T, D)
    if (k - f.value) % 2:
        for base in _alternative_bases(D, k, order_bound):
            d = diameter(base)
            if d <= k and (k - d) % 2 == 0:
                T = base
                break
        else:
            raise NotAchievable(D, k, order_bound)
    while diameter(T) < k:
        T = _grow_by_two(T)
    check(T, D)
    if diameter(T) != k:
        raise AssertionError(f"grew to diameter {diameter(T)}, wanted {k}")
    return T
