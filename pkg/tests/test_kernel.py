import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from fin2cat import library as L
from fin2cat.build import make_twocat
from fin2cat.corpus import random_twocat
from fin2cat.kernel import (Functor1, InvalidStructure, cats_equivalent, categories_isomorphic,
                            dual_co, dual_op, functor_is_equivalence, hom_cat,
                            is_biterminal, is_equivalence_1cell, is_invertible_2cell,
                            opposite, skeleton, terminal_objects, validate_twocat)


@pytest.mark.parametrize("C", list(L.curated().values()), ids=lambda C: C.name)
def test_curated_examples_validate(C):
    validate_twocat(C)
    validate_twocat(dual_op(C))
    validate_twocat(dual_co(C))


def test_broken_unit_law_reports_alpha():
    C = L.D2()
    bad = dataclasses.replace(C, vcomp={**C.vcomp, ("a", "1_f"): "1_f"})
    with pytest.raises(InvalidStructure) as e:
        validate_twocat(bad)
    assert "a" in e.value.witness


def test_associativity_hole_is_caught():
    cells = {"a": ("0", "1"), "b": ("1", "2"), "c": ("2", "3"), "ba": ("0", "2"),
             "cb": ("1", "3"), "cba": ("0", "3"), "k": ("0", "3")}
    comp = {("b", "a"): "ba", ("c", "b"): "cb", ("c", "ba"): "cba", ("cb", "a"): "k"}
    C = make_twocat(["0", "1", "2", "3"], cells, comp=comp, validate=False)
    with pytest.raises(InvalidStructure) as e:
        validate_twocat(C)
    assert "assoc" in e.value.law


def test_broken_interchange_is_caught():
    # h∗₀a must equal the whiskered composite; point it at the wrong 2-cell
    C = L.composable_2cells()
    bad = dataclasses.replace(C, lwhisk={**C.lwhisk, ("h", "a"): "1_hf"})
    with pytest.raises(InvalidStructure):
        validate_twocat(bad)


def test_hom_cat_examples():
    D2 = L.D2()
    H = hom_cat(D2, "0", "1")
    assert set(H.objects) == {"f", "g"}
    assert [m for m in H.morphisms if H.morphisms[m][0] != H.morphisms[m][1]] == ["a"]
    assert hom_cat(D2, "1", "0").objects == ()
    H1 = hom_cat(L.D1(), "0", "1")
    assert H1.objects == ("f",) and len(H1.morphisms) == 1


def test_duals():
    for C in L.curated().values():
        assert dataclasses.replace(dual_op(dual_op(C)), name=C.name) == C
        assert dataclasses.replace(dual_co(dual_co(C)), name=C.name) == C
        for x in C.objects:
            for y in C.objects:
                a, b = hom_cat(dual_co(C), x, y), opposite(hom_cat(C, x, y))
                assert a.objects == b.objects and a.morphisms == b.morphisms
    co = dual_co(L.D2())
    assert co.two_cells["a"] == ("g", "f")


def test_invertible_2cells_and_equivalences():
    D2, W = L.D2(), L.walking_inv_2cell()
    assert is_invertible_2cell(D2, "1_f")
    assert not is_invertible_2cell(D2, "a")
    assert all(is_invertible_2cell(W, a) for a in W.two_cells)
    assert is_equivalence_1cell(L.D1(), "1_0")
    assert not is_equivalence_1cell(L.D1(), "f")
    assert is_equivalence_1cell(L.walking_iso(), "f")
    assert is_equivalence_1cell(L.idempotent_equivalence(), "f")


def test_terminal_objects():
    assert terminal_objects(L.fincat_arrow()) == ["1"]
    assert terminal_objects(hom_cat(L.D2(), "0", "1")) == ["g"]
    assert terminal_objects(L.fincat_discrete(2)) == []


def test_functor_equivalence_examples():
    A = L.fincat_arrow()
    ident = Functor1(A, A, {a: a for a in A.objects}, {m: m for m in A.morphisms})
    assert functor_is_equivalence(ident)
    P, Ch = L.fincat_point(), L.fincat_chaotic(2)
    o = Ch.objects[0]
    inc = Functor1(P, Ch, {"0": o}, {"0>0": Ch.identity[o]})
    assert functor_is_equivalence(inc)
    const = Functor1(A, A, {"0": "0", "1": "0"}, {m: A.identity["0"] for m in A.morphisms})
    assert not functor_is_equivalence(const)


def test_cats_equivalent_examples():
    A = L.fincat_arrow()
    assert cats_equivalent(A, A)
    assert cats_equivalent(L.fincat_chaotic(2), L.fincat_point())
    assert not cats_equivalent(A, L.fincat_discrete(2))
    assert len(skeleton(L.fincat_chaotic(3)).objects) == 1


def test_biterminal_examples():
    assert is_biterminal(L.D1(), "1")
    assert not is_biterminal(L.D2(), "1")
    assert is_biterminal(L.D0(), "0")


def _random_poset(rng, n):
    elems = [str(i) for i in range(n)]
    rel = [(a, b) for i, a in enumerate(elems) for b in elems[i + 1:] if rng.random() < 0.4]
    return L.poset_category(elems, rel)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_random_posets_are_valid_in_every_guise(seed, n):
    A = _random_poset(random.Random(seed), n)
    validate_twocat(L.locally_discrete_renamed(A))
    validate_twocat(L.locally_chaotic(A))
    assert categories_isomorphic(A, opposite(opposite(A)))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_corpus_twocats_are_valid(seed):
    C = random_twocat(random.Random(seed))
    validate_twocat(C)
    validate_twocat(dual_co(dual_op(C)))
