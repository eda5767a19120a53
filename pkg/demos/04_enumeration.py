"""
Exhaustive enumeration
======================

Free trees come from level sequences; each one is expanded into all of its
sign patterns at once with numpy.

"""

import numpy as np

from signedtrees import DegreeSet, oracle, to_json
from signedtrees.freetrees import prufer_free_trees, wrom_free_trees

# Two independent generators agree on class counts.
for n in range(1, 10):
    print(n, len(list(wrom_free_trees(n))), len(prufer_free_trees(n)))

# Order 10: every skeleton times every sign mask.
table = oracle.order_table(10)
print(table.codes.shape, "signed trees,", len(np.unique(table.codes)), "distinct degree sets")

# Which degree sets show up first at order 4?
new = oracle.realizable_sets(4) - oracle.realizable_sets(3) - oracle.realizable_sets(2)
print([str(D) for D in sorted(new)])

# Smallest diameter among all trees of order <= 10 realizing {1, -2, 2}.
r = oracle.min_diameter_realizing(DegreeSet.parse("1,-2,2"), 10)
print(r.value, to_json(r.witness))
