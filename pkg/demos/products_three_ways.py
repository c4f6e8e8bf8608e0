"""
Products in Cat, decided three ways
===================================

In the sub-2-category of Cat on the interval a, the point b and a copy p of
the interval, p with its two projections is a product of a and b.  The
three characterizations of bilimits agree on it, and on every other cone.
"""
from fin2cat import library as L
from fin2cat.bilimits import biterminal_in_cart_check, theorem_check
from fin2cat.diagrams import diagram_from_maps, enumerate_cones

P = L.product_witness()
print("product witness:", P.size())
pair = L.discrete_pair()
F = diagram_from_maps(pair, P, {"a": "a", "b": "b"})
E = frozenset(pair.id1.values())

for x in ("p", "a", "b"):
    for lam in enumerate_cones(F, E, x):
        t = theorem_check(F, E, x, lam)
        flag = "bilimit" if t.bilimit else "       "
        print(f"{flag} {t.bilimit!s:5} {t.limiting_bifinal!s:5} "
              f"{t.modified_projection_biequiv!s:5}  {lam.label}")
        if t.bilimit:
            # a bilimit is biterminal among cartesian edges of the slice
            assert biterminal_in_cart_check(F, E, x, lam)
