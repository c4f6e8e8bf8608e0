"""
Categories of elements
======================

The representable weight W(y) = C(y, x)^op has the lax slice tr(C/x) as its
2-category of elements.  Compare the two constructions on every curated
example and check the fibers.
"""
from fin2cat import library as L
from fin2cat.corpus import arrow_weight
from fin2cat.elements import build_elements, fiber_is_isomorphic, representable_weight
from fin2cat.fibration import verify_1fibration
from fin2cat.slice import build_object_slice

for name, C in sorted(L.curated().items()):
    for x in C.objects:
        El = build_elements(representable_weight(C, x))
        S = build_object_slice(C, x)
        print(f"{name:24} {x:3} El={El.total.size()} slice={S.total.size()}")

# a weight that is not representable: J = D1, W(0) = the arrow, W(1) = a point
El = build_elements(arrow_weight())
print("arrow weight:", El.total.size())
print("fibers isomorphic:", [fiber_is_isomorphic(El, i) for i in ("0", "1")])
print("projection is a 1-fibration:", bool(verify_1fibration(El.proj)))
