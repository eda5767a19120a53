"""
Signed degrees and valid sets
=============================

A signed tree labels each edge + or -.  The signed degree of a vertex is
its + edges minus its - edges.

"""

from signedtrees import DegreeSet, SignedTree, degree_set, is_valid, realize_any, to_dot
from signedtrees.core import NEG, POS, attach_signed_leaves

# A center with two + leaves and one - leaf.
T = attach_signed_leaves(SignedTree.single_vertex(), 0, (POS, POS, NEG))
print(T.signed_degrees())
print(degree_set(T))

# Every tree has a leaf, and a leaf has signed degree 1 or -1, so a
# realizable set must contain one of them.
for text in ["2,3", "1,5", "-1,-4,0"]:
    D = DegreeSet.parse(text)
    print(f"{{{D}}}", "valid" if is_valid(D) else "invalid")

# Any valid set has a witness.
W = realize_any(DegreeSet.parse("-1,-4,0"))
print(W.order, degree_set(W))
print(to_dot(W, sdeg=True))
