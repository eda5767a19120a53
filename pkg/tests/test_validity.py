import itertools

import pytest

from signedtrees import oracle
from signedtrees.core import DegreeSet, InvalidDegreeSet, canonical_key, degree_set, negate_signs
from signedtrees.validity import is_valid, realize_any


def all_sets(lo, hi, max_size=None):
    values = range(lo, hi + 1)
    top = max_size or len(values)
    for r in range(1, top + 1):
        for combo in itertools.combinations(values, r):
            yield DegreeSet(combo)


def test_is_valid_examples():
    assert not is_valid(DegreeSet([2, 3]))
    assert is_valid(DegreeSet([1, -5, 0, 7]))
    assert is_valid(DegreeSet([-1]))
    with pytest.raises(InvalidDegreeSet):
        is_valid(DegreeSet())


def test_realize_any_examples():
    for vals in ([1, -1], [1, 2, -3]):
        D = DegreeSet(vals)
        assert degree_set(realize_any(D)) == D
    with pytest.raises(InvalidDegreeSet):
        realize_any(DegreeSet([0, 2]))


@pytest.mark.parametrize("D", [D for D in all_sets(-6, 6, max_size=4) if is_valid(D)], ids=str)
def test_realize_any_exact(D):
    assert degree_set(realize_any(D)) == D


def test_negation_symmetry():
    for D in all_sets(-4, 4, max_size=4):
        assert is_valid(D) == is_valid(-D)
        if is_valid(D) and 1 not in D:
            # The mirror path is taken, so the two witnesses coincide up to isomorphism.
            assert canonical_key(realize_any(-D)) == canonical_key(negate_signs(realize_any(D)))


def test_validity_matches_oracle_small():
    realized = set()
    for n in range(2, 9):
        realized |= oracle.realizable_sets(n)
    for D in all_sets(-2, 2):
        assert is_valid(D) == (D in realized)
