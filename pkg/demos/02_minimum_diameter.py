"""
Minimum diameter
================

The smallest diameter of a tree realizing D depends only on how many
members of each kind D has.

"""

from signedtrees import DegreeSet, build_min_diameter, build_with_diameter, diam_formula, diameter

for text in ["1", "1,4", "1,2,3", "1,0", "1,0,2,5", "1,-4,-5", "1,-1,3", "-1,2,3,4"]:
    D = DegreeSet.parse(text)
    f = diam_formula(D)
    T = build_min_diameter(D).witness
    print(f"{{{D}}}".ljust(12), f"{f.value:>2}  {f.branch:<24} witness order {T.order}, diameter {diameter(T)}")

# Larger diameters are reached by growing a minimum tree while the set stays put.
D = DegreeSet.parse("1,2")
for k in range(2, 7):
    T = build_with_diameter(D, k)
    print(k, T.order, diameter(T))
