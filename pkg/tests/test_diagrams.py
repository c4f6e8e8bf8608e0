import pytest

from fin2cat import library as L
from fin2cat.corpus import all_2functors, shape_2cell, shape_arrow, shape_pair
from fin2cat.diagrams import (Cone, LaxTransformation, TwoFunctor, cone_as_transformation,
                              cone_category, cone_failure, diagram_from_maps, empty_diagram,
                              enumerate_cones, identity_2functor, lambda_star,
                              modifications, point_diagram, postcompose_cone,
                              validate_cone, validate_functor, validate_lax_transformation)
from fin2cat.kernel import InvalidStructure, categories_isomorphic, hom_cat
from oracles import naive_cones, naive_modifications, sorted_items


def test_validate_functor_examples():
    D2, D1 = L.D2(), L.D1()
    validate_functor(identity_2functor(D2))
    const = TwoFunctor(D2, D1, {"0": "0", "1": "0"}, {f: "1_0" for f in D2.one_cells},
                       {a: "1_1_0" for a in D2.two_cells})
    validate_functor(const)
    bad = identity_2functor(D2)
    bad = TwoFunctor(D2, D2, bad.on_objects, bad.on_one, {**bad.on_two, "a": "1_f"})
    with pytest.raises(InvalidStructure, match="boundary"):
        validate_functor(bad)


def test_identity_transformation_is_valid_for_any_marking():
    C = L.composable_2cells()
    F = identity_2functor(C)
    t = LaxTransformation(F, F, frozenset(C.one_cells), {x: C.id1[x] for x in C.objects},
                          {f: C.id2[f] for f in C.one_cells})
    validate_lax_transformation(t)


def test_point_cone_is_a_transformation():
    C = L.D2()
    F = point_diagram(C, "1")
    for f in C.hom("0", "1"):
        lam = Cone.make("0", {"*": f}, {"1_*": C.id2[f]})
        validate_lax_transformation(cone_as_transformation(F, {"1_*"}, lam))


def test_broken_compatibility_is_reported():
    J, C = L.D2(), L.parallel_2cells()
    F = diagram_from_maps(J, C, {"0": "0", "1": "1"}, {"f": "f", "g": "g"}, {"a": "a"})
    lam = Cone.make("0", {"0": "1_0", "1": "g"}, {"1_0": "1_1_0", "1_1": "1_g", "f": "b",
                                                  "g": "1_g"})
    assert cone_failure(F, {"1_0", "1_1"}, lam) == ("compatibility", "a")
    with pytest.raises(InvalidStructure):
        validate_cone(F, {"1_0", "1_1"}, lam)
    ok = Cone.make("0", {"0": "1_0", "1": "g"}, {"1_0": "1_1_0", "1_1": "1_g", "f": "a",
                                                 "g": "1_g"})
    assert cone_failure(F, {"1_0", "1_1"}, ok) is None


def test_point_cones_are_one_cells():
    C = L.D2()
    F = point_diagram(C, "1")
    for x in C.objects:
        assert [c.leg("*") for c in enumerate_cones(F, {"1_*"}, x)] == list(C.hom(x, "1"))


def test_empty_diagram_has_one_cone_per_vertex():
    C = L.composable_2cells()
    for x in C.objects:
        assert enumerate_cones(empty_diagram(C), set(), x) == [Cone.make(x, {}, {})]


def _as_pairs(cones):
    return sorted((c.legs, c.cells) for c in cones)


def test_arrow_into_walking_2cell_matches_brute_force():
    J, C = shape_arrow(), L.D2()
    F = diagram_from_maps(J, C, {"0": "0", "1": "1"}, {"f": "f"})
    assert _as_pairs(enumerate_cones(F, J.id1.values(), "0")) == naive_cones(F, J.id1.values(), "0")


@pytest.mark.parametrize("C", [L.D2(), L.walking_inv_2cell(), L.parallel_2cells(),
                               L.posets_2cat(), L.composable_2cells()], ids=lambda C: C.name)
def test_pruned_enumeration_equals_brute_force(C):
    for J in (shape_arrow(), shape_2cell(), shape_pair()):
        ids = frozenset(J.id1.values())
        for F in all_2functors(J, C, limit=6):
            for E in (ids, frozenset(J.one_cells)):
                for x in C.objects:
                    assert _as_pairs(enumerate_cones(F, E, x)) == naive_cones(F, E, x)


@pytest.mark.parametrize("C", [L.D2(), L.walking_inv_2cell(), L.posets_2cat()],
                         ids=lambda C: C.name)
def test_modifications_match_brute_force(C):
    J = shape_2cell()
    for F in all_2functors(J, C, limit=4):
        for x in C.objects:
            cones = enumerate_cones(F, J.id1.values(), x)
            for a in cones:
                for b in cones:
                    got = sorted(sorted_items(m) for m in modifications(F, a, b))
                    assert got == naive_modifications(F, a, b)


def test_cone_category_examples():
    C = L.D2()
    for c in C.objects:
        for x in C.objects:
            cc = cone_category(point_diagram(C, c), {"1_*"}, x).category
            assert categories_isomorphic(cc, hom_cat(C, x, c))
    cc = cone_category(empty_diagram(C), set(), "0").category
    assert len(cc.objects) == 1 and len(cc.morphisms) == 1
    F = point_diagram(C, "0")
    assert cone_category(F, {"1_*"}, "1").category.objects == ()


def test_postcomposition_is_strictly_associative():
    C = L.composable_2cells()
    F = point_diagram(C, "2")
    for lam in enumerate_cones(F, {"1_*"}, "0") + enumerate_cones(F, {"1_*"}, "1"):
        assert postcompose_cone(F, lam, C.id1[lam.vertex]) == lam
    lam = Cone.make("2", {"*": "1_2"}, {"1_*": "1_1_2"})
    for f in C.hom("1", "2"):
        for g in C.hom("0", "1"):
            assert postcompose_cone(F, postcompose_cone(F, lam, f), g) == \
                postcompose_cone(F, lam, C.comp1[(f, g)])
            assert postcompose_cone(F, lam, f).leg("*") == f


def test_lambda_star_at_identity_is_identity():
    C = L.walking_inv_2cell()
    for c in C.objects:
        F = point_diagram(C, c)
        lam = Cone.make(c, {"*": C.id1[c]}, {"1_*": C.id2[C.id1[c]]})
        for x in C.objects:
            u = lambda_star(F, {"1_*"}, c, lam, x)
            cc = cone_category(F, {"1_*"}, x)
            assert all(cc.cones[u.on_objects[f]].leg("*") == f for f in u.source.objects)
            assert len(set(u.on_morphisms.values())) == len(u.source.morphisms)


def test_lambda_star_empty_diagram_goes_to_a_point():
    C = L.D2()
    lam = Cone.make("1", {}, {})
    u = lambda_star(empty_diagram(C), set(), "1", lam, "0")
    assert set(u.on_objects.values()) == {"0||"}
    assert len(u.target.objects) == 1


def test_lambda_star_agrees_with_recomputed_postcomposites():
    C = L.posets_2cat()
    J = shape_arrow()
    for F in all_2functors(J, C, limit=3):
        for ell in C.objects:
            for lam in enumerate_cones(F, J.id1.values(), ell):
                for x in C.objects:
                    u = lambda_star(F, J.id1.values(), ell, lam, x)
                    cc = cone_category(F, J.id1.values(), x)
                    for f in u.source.objects:
                        want = {i: C.comp1[(g, f)] for i, g in lam.legs}
                        assert cc.cones[u.on_objects[f]].leg_map == want
