import itertools

import pytest

from signedtrees import oracle
from signedtrees.core import (
    NEG,
    DegreeSet,
    InvalidDegreeSet,
    build_caterpillar,
    canonical_key,
    degree_set,
    diameter,
    limiting_pendants,
)
from signedtrees.diameter import (
    NotAchievable,
    build_min_diameter,
    build_with_diameter,
    diam_formula,
)
from signedtrees.validity import is_valid

from .catalog import CATALOG


def S(*vals):
    return DegreeSet(vals)


@pytest.mark.parametrize(
    "vals, expected",
    [
        ((1, 0), 3),
        ((1, -2, -3), 5),
        ((1, -2, -3, -4), 6),
        ((1, -2, 7), 4),
        ((1, -1, 3), 2),
        ((1, -1, 2, -2), 3),
        ((1,), 1),
        ((1, -1), 2),
    ],
)
def test_formula_examples(vals, expected):
    assert diam_formula(S(*vals)).value == expected


def test_formula_branches():
    assert diam_formula(S(1, -4, -5))[1:] == ("negatives", "m=2")
    assert diam_formula(S(-1, 4)).branch == "mirror-of-negatives"
    assert diam_formula(S(1)).branch == "derived-edge-case"
    assert diam_formula(S(1, -1)).branch == "derived-edge-case"
    assert diam_formula(S(1, 0, 2)).branch == "positive-zero"
    with pytest.raises(InvalidDegreeSet):
        diam_formula(S(0, 2))


@pytest.mark.parametrize("D", list(CATALOG), ids=str)
def test_catalog_witnesses(D):
    r = build_min_diameter(D)
    assert r.value == CATALOG[D]
    assert degree_set(r.witness) == D
    assert diameter(r.witness) == r.value


def test_figure_shapes():
    pos = build_min_diameter(S(1, 4, 5)).witness
    assert diameter(pos) == 3
    assert sorted(d for d in pos.degrees() if d > 1) == [4, 5]
    neg = build_min_diameter(S(1, -4, -5)).witness
    assert diameter(neg) == 5 and degree_set(neg) == S(1, -4, -5)
    mixed = build_min_diameter(S(1, -1, 0)).witness
    assert diameter(mixed) == 2
    assert {s for _, _, s in mixed.edges} == {1, -1}


def test_mirror_symmetry():
    for D in CATALOG:
        assert diam_formula(D).value == diam_formula(-D).value


def test_monotone_under_inclusion():
    sets = list(CATALOG)
    for A, B in itertools.product(sets, sets):
        if A != B and A.issubset(B) and 1 in A and -1 not in B:
            assert diam_formula(A).value <= diam_formula(B).value, (A, B)


def test_oracle_agrees_on_small_sets():
    for r in range(1, 6):
        for combo in itertools.combinations(range(-2, 3), r):
            D = DegreeSet(combo)
            if not is_valid(D):
                continue
            found = oracle.min_diameter_realizing(D, 10)
            assert found is not None and found.value == diam_formula(D).value, D


def test_limiting_pendant_attachment():
    # No vertex of negative signed degree is a leaf or next to a limiting leaf,
    # in any tree whose degree set avoids -1.
    for n in range(2, 10):
        for T in oracle.enumerate_signed_trees(n):
            sd = T.signed_degrees()
            if -1 in sd:
                continue
            lim = limiting_pendants(T)
            adj = T.adjacency()
            deg = T.degrees()
            for v in range(n):
                if sd[v] < 0:
                    assert deg[v] > 1
                    assert not any(y in lim for y, _ in adj[v])


def test_with_diameter_caterpillar():
    T = build_with_diameter(S(1, 2), 5)
    assert diameter(T) == 5 and degree_set(T) == S(1, 2)
    assert canonical_key(T) == canonical_key(build_caterpillar((2, 2, 2, 2)))


def test_with_diameter_two_stars():
    T = build_with_diameter(S(1), 3)
    assert T.order == 6 and diameter(T) == 3
    assert set(T.signed_degrees()) == {1}
    (u, v, _), = T.negative_edges
    assert T.degrees()[u] == T.degrees()[v] == 3


def test_with_diameter_not_achievable():
    with pytest.raises(NotAchievable):
        build_with_diameter(S(1), 2)
    # Independently: every diameter-2 tree is a star, and no star has all signed degrees 1.
    for n in range(3, 11):
        assert not any(
            diameter(T) == 2 and set(T.signed_degrees()) == {1}
            for T in oracle.realizations(S(1), n)
        )


def test_with_diameter_below_minimum_rejected():
    with pytest.raises(ValueError):
        build_with_diameter(S(1, 0), 2)


@pytest.mark.parametrize("vals", [(1,), (1, 0), (1, -2), (1, 2), (1, -2, 0), (-1, 0), (1, -1), (1, -2, -3), (-1, 3)])
def test_with_diameter_range(vals):
    D = S(*vals)
    lo = diam_formula(D).value
    for k in range(lo, lo + 5):
        if D == S(1) and k == 2:
            continue
        T = build_with_diameter(D, k)
        assert diameter(T) == k and degree_set(T) == D


def test_with_diameter_mirror_negates():
    T = build_with_diameter(S(-1, 0), 5)
    assert degree_set(T) == S(-1, 0) and diameter(T) == 5
    assert NEG in {s for _, _, s in T.edges}
