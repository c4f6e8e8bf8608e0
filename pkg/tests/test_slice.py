import pytest

from fin2cat import library as L
from fin2cat.corpus import all_2functors, shape_2cell, shape_arrow, shape_pair
from fin2cat.diagrams import Cone, TwoFunctor, empty_diagram, validate_functor
from fin2cat.fibration import verify_1fibration, verify_2fibration
from fin2cat.kernel import hom_cat, terminal_objects, validate_twocat
from fin2cat.slice import (build_object_slice, build_slice, cart_subcat, is_cartesian_char,
                           is_cartesian_oracle)


def pt(x, f, C):
    return Cone.make(x, {"*": f}, {"1_*": C.id2[f]})


@pytest.fixture(scope="module")
def trD2():
    C = L.D2()
    return C, build_object_slice(C, "1")


def edge(S, a, b, f, mu):
    return S.index.one_id[(a, b, f, (("*", mu),))]


def test_walking_2cell_slice_objects(trD2):
    C, S = trD2
    assert sorted(S.index.obj.values()) == sorted([pt("0", "f", C), pt("0", "g", C),
                                                   pt("1", "1_1", C)])
    assert len(S.total.one_cells) == 7
    g0, top = S.object_of(pt("0", "g", C)), S.object_of(pt("1", "1_1", C))
    H = hom_cat(S.total, g0, top)
    assert terminal_objects(H) == [edge(S, pt("0", "g", C), pt("1", "1_1", C), "g", "1_g")]


def test_cartesian_examples(trD2):
    C, S = trD2
    g, f, top = pt("0", "g", C), pt("0", "f", C), pt("1", "1_1", C)
    for o in S.total.objects:
        assert is_cartesian_char(S, S.total.id1[o])
        assert is_cartesian_oracle(S, S.total.id1[o])
    e = edge(S, g, top, "f", "a")
    assert not is_cartesian_char(S, e) and not is_cartesian_oracle(S, e)
    e = edge(S, f, top, "f", "1_f")
    assert is_cartesian_char(S, e) and is_cartesian_oracle(S, e)


def test_cart_subcat_hom(trD2):
    C, S = trD2
    K = cart_subcat(S)
    g0, top = S.object_of(pt("0", "g", C)), S.object_of(pt("1", "1_1", C))
    assert K.hom(g0, top) == (edge(S, pt("0", "g", C), pt("1", "1_1", C), "g", "1_g"),)


def test_arrow_slice():
    C = L.D1()
    S = build_object_slice(C, "1")
    assert len(S.total.objects) == 2
    assert all(a == S.total.id2[f] for a, (f, g) in S.total.two_cells.items())


def test_point_slice_is_trivial():
    S = build_object_slice(L.D0(), "0")
    assert S.total.size() == (1, 1, 1)


def test_empty_diagram_slice_is_C():
    C = L.composable_2cells()
    S = build_slice(empty_diagram(C), set())
    assert S.total.size() == C.size()
    p = validate_functor(S.proj)
    assert len(set(p.on_objects.values())) == len(C.objects)
    assert len(set(p.on_one.values())) == len(C.one_cells)
    assert len(set(p.on_two.values())) == len(C.two_cells)
    assert set(S.marked) == set(S.total.one_cells)
    assert cart_subcat(S).size() == C.size()


@pytest.mark.parametrize("C", list(L.curated().values()), ids=lambda C: C.name)
def test_object_slices_characterization(C):
    for x in C.objects:
        S = build_object_slice(C, x)
        validate_twocat(S.total)
        for e in S.total.one_cells:
            assert is_cartesian_char(S, e) == is_cartesian_oracle(S, e)
        assert verify_1fibration(S.proj)


@pytest.mark.parametrize("C", [L.D2(), L.walking_inv_2cell(), L.parallel_2cells(),
                               L.posets_2cat()], ids=lambda C: C.name)
def test_diagram_slices_characterization(C):
    for J in (shape_arrow(), shape_2cell(), shape_pair()):
        for F in all_2functors(J, C, limit=3):
            for E in (J.id1.values(), J.one_cells):
                S = build_slice(F, E)
                for e in S.total.one_cells:
                    assert is_cartesian_char(S, e) == is_cartesian_oracle(S, e)
                assert verify_1fibration(S.proj)


def test_non_fibration_is_rejected():
    D1 = L.D1()
    p = TwoFunctor(D1, D1, {"0": "1", "1": "1"}, {f: "1_1" for f in D1.one_cells},
                   {a: "1_1_1" for a in D1.two_cells})
    validate_functor(p)
    v = verify_2fibration(p)
    assert not v and v.witness
    assert not verify_1fibration(p)
