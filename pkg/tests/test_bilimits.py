import pytest

from fin2cat import library as L
from fin2cat.bilimits import (bilimit_cones, biterminal_in_cart_check, build_modified_cones,
                              is_biequivalence, is_bilimit, is_limiting_bifinal,
                              q_always_biequivalence_check, theorem_check)
from fin2cat.corpus import all_2functors, shape_2cell, shape_pair
from fin2cat.diagrams import (Cone, TwoFunctor, diagram_from_maps, empty_diagram,
                              enumerate_cones, identity_2functor, point_diagram,
                              validate_functor)
from fin2cat.kernel import InvalidStructure, is_biterminal
from fin2cat.slice import build_object_slice
from oracles import naive_cones, naive_modifications


def id_cone(C, c):
    return Cone.make(c, {"*": C.id1[c]}, {"1_*": C.id2[C.id1[c]]})


def product_instance():
    P = L.product_witness()
    pair = shape_pair()
    F = diagram_from_maps(pair, P, {"a": "a", "b": "b"})
    pa, pb = L.product_projections(P)
    lam = Cone.make("p", {"a": pa, "b": pb}, {"1_a": P.id2[pa], "1_b": P.id2[pb]})
    return F, frozenset(pair.id1.values()), lam


@pytest.mark.parametrize("C", list(L.curated().values()), ids=lambda C: C.name)
def test_identity_point_cone_is_a_bilimit(C):
    for c in C.objects:
        F = point_diagram(C, c)
        assert is_bilimit(F, {"1_*"}, c, id_cone(C, c))
        t = theorem_check(F, {"1_*"}, c, id_cone(C, c))
        assert (t.bilimit, t.limiting_bifinal, t.modified_projection_biequiv) == (True,) * 3
        assert biterminal_in_cart_check(F, {"1_*"}, c, id_cone(C, c))
        assert q_always_biequivalence_check(F, {"1_*"}, c, id_cone(C, c))


@pytest.mark.parametrize("C", list(L.curated().values()), ids=lambda C: C.name)
def test_empty_diagram_bilimit_iff_biterminal(C):
    F = empty_diagram(C)
    for x in C.objects:
        lam = Cone.make(x, {}, {})
        v = is_bilimit(F, set(), x, lam)
        assert bool(v) == is_biterminal(C, x)
        assert bool(is_limiting_bifinal(F, set(), x, lam)) == bool(v)
        if not v:
            assert v.witness[0] in C.objects
            t = theorem_check(F, set(), x, lam)
            assert (t.bilimit, t.limiting_bifinal, t.modified_projection_biequiv) == (False,) * 3
            assert biterminal_in_cart_check(F, set(), x, lam) is None


def test_product_witness():
    F, E, lam = product_instance()
    assert is_bilimit(F, E, "p", lam)
    assert is_limiting_bifinal(F, E, "p", lam)
    t = theorem_check(F, E, "p", lam)
    assert (t.bilimit, t.limiting_bifinal, t.modified_projection_biequiv) == (True,) * 3
    assert biterminal_in_cart_check(F, E, "p", lam)
    # a cone at a whose first leg is not invertible is not a product
    assert any(not is_bilimit(F, E, c.vertex, c) for c in enumerate_cones(F, E, "a"))


def test_biequivalence_examples():
    D2 = L.D2()
    assert is_biequivalence(identity_2functor(D2))
    W = L.walking_iso()
    inc = TwoFunctor(L.D0(), W, {"0": "0"}, {"1_0": "1_0"}, {"1_1_0": "1_1_0"})
    assert is_biequivalence(validate_functor(inc))
    D1 = L.D1()
    const = TwoFunctor(D1, D1, {"0": "0", "1": "0"}, {f: "1_0" for f in D1.one_cells},
                       {a: "1_1_0" for a in D1.two_cells})
    v = is_biequivalence(validate_functor(const))
    assert not v and v.reason.startswith("hom functor")


def test_cone_vertex_must_match():
    C = L.D2()
    with pytest.raises(InvalidStructure):
        is_bilimit(point_diagram(C, "1"), {"1_*"}, "0", id_cone(C, "1"))


def brute_modified_objects(F, E, lam):
    """(x, h, α, σ) with σ: λ·h ⇒ α invertible, by plain enumeration."""
    C = F.target
    n = 0
    for x in C.objects:
        for h in C.hom(x, lam.vertex):
            lh = Cone.make(x, {i: C.comp1[(g, h)] for i, g in lam.legs},
                           {k: C.rwhisk[(a, h)] for k, a in lam.cells})
            for legs, cells in naive_cones(F, E, x):
                alpha = Cone(x, legs, cells)
                for sigma in naive_modifications(F, lh, alpha):
                    if all(C.inverses[s] is not None for _, s in sigma):
                        n += 1
    return n


@pytest.mark.parametrize("C", [L.walking_inv_2cell(), L.parallel_2cells(), L.posets_2cat()],
                         ids=lambda C: C.name)
def test_modified_cone_objects_by_brute_force(C):
    J = shape_2cell()
    for F in all_2functors(J, C, limit=3):
        E = frozenset(J.id1.values())
        for x in C.objects:
            for lam in enumerate_cones(F, E, x):
                M = build_modified_cones(F, E, x, lam)
                assert len(M.total.objects) == brute_modified_objects(F, E, lam)
                assert is_biequivalence(M.q)


def test_modified_cones_over_empty_diagram_match_object_slice():
    C = L.composable_2cells()
    for x in C.objects:
        M = build_modified_cones(empty_diagram(C), set(), x, Cone.make(x, {}, {}))
        assert M.total.size() == build_object_slice(C, x).total.size()


def test_three_verdicts_agree_on_walking_2cell_diagrams():
    for C in (L.D2(), L.walking_inv_2cell(), L.parallel_2cells()):
        J = shape_2cell()
        for F in all_2functors(J, C):
            for E in (frozenset(J.id1.values()), frozenset(J.one_cells)):
                for lam in [c for x in C.objects for c in enumerate_cones(F, E, x)]:
                    t = theorem_check(F, E, lam.vertex, lam)
                    assert t.agree


def test_bilimit_cones_of_point_diagram_are_equivalences():
    W = L.idempotent_equivalence()
    F = point_diagram(W, "1")
    legs = {c.leg("*") for c in bilimit_cones(F, {"1_*"})}
    assert legs == {f for f in W.one_cells if W.one_cells[f][1] == "1"}
