"""
Minimum order
=============

For {1} plus positives, and for {1, 0} plus positives, the fewest
vertices has a closed form.  Other sets get an upper bound here and an
exact value from the oracle.

"""

from signedtrees import DegreeSet, build_min_order, oracle, sigma_formula, sigma_upper_bound, to_json

for text in ["1,2,3", "1,0,2", "1,0,2,3", "-1,0,-4"]:
    D = DegreeSet.parse(text)
    r = build_min_order(D)
    print(f"{{{D}}}: sigma={sigma_formula(D)} branch={r.branch} {to_json(r.witness)}")

# Outside those families: compare the constructive bound with brute force.
for text in ["1,-1,2", "1,-2,3", "-1,0,3"]:
    D = DegreeSet.parse(text)
    upper = sigma_upper_bound(D).value
    exact = oracle.min_order_realizing(D, upper)
    print(f"{{{D}}}: upper bound {upper}, exhaustive minimum {exact.value}")

# In every order-optimal tree for {1, 0, 2, 3} the lone - edge joins two
# degree-2 vertices of signed degree 0.
print(oracle.audit_optimal_structure(DegreeSet.parse("1,0,2,3"), 10))
