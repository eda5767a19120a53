"""
Diameter and order together
===========================

Can one tree have both the smallest diameter and the fewest vertices?
The sweep checks every three-element valid set over a small range.

"""

from signedtrees import DegreeSet, conjecture, to_json

r = conjecture.joint_optimality(DegreeSet.parse("1,2,3"))
print(r.verdict.value, r.diam, r.sigma, to_json(r.witness))

reports = conjecture.sweep(range(-2, 4), 3, bound=12)
for r in reports:
    print(f"{{{r.degree_set}}}".ljust(12), r.verdict.value.ljust(26), r.diam, r.sigma, r.min_diam_at_sigma)

print(conjecture.to_csv(reports[:3]))
