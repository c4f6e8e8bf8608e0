"""
The lax slice over the walking 2-cell
=====================================

Build tr(D2/1), look at which edges are cartesian, and find the contraction
that makes (1, id) bifinal.
"""
from fin2cat import library as L
from fin2cat.diagrams import Cone
from fin2cat.finality import find_contraction, is_M_final
from fin2cat.kernel import hom_cat
from fin2cat.slice import build_object_slice, cart_subcat, is_cartesian_oracle

# D2 has two parallel 1-cells f, g: 0 -> 1 and a 2-cell a: f => g
C = L.D2()
S = build_object_slice(C, "1")
T = S.total
print("objects of tr(D2/1):", sorted(T.objects))
print("size (objects, 1-cells, 2-cells):", T.size())

# an edge is cartesian for the projection exactly when its 2-cell component
# is invertible; the oracle checks unique lifting by brute force instead
for e in sorted(T.one_cells):
    print(f"{'cart ' if e in S.marked else '     '} oracle={is_cartesian_oracle(S, e)!s:5}  {e}")

top = S.object_of(Cone.make("1", {"*": "1_1"}, {"1_*": "1_1_1"}))
g0 = S.object_of(Cone.make("0", {"*": "g"}, {"1_*": "1_g"}))
print("hom((0,g), (1,id)) has", len(hom_cat(T, g0, top).objects), "objects;",
      "in the cartesian part it has", len(cart_subcat(S).hom(g0, top)))

H, why = find_contraction(T, top)
for a in sorted(T.objects):
    print(f"gamma at {a}: {H.gamma1[a]}")
print("(1, id) is M_cart-final:", bool(is_M_final(T, S.marked, top)))
