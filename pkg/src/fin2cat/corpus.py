"""Deterministic test corpus: 2-categories, slices, diagrams with cones, weights.

Random members are drawn from ``random.Random(seed)`` so the corpus is a
pure function of the seed.
"""
import dataclasses
import random
from itertools import product

from . import library as L
from .build import make_twocat
from .diagrams import (TwoFunctor, empty_diagram, enumerate_cones, point_diagram,
                       validate_functor)
from .elements import CatValuedFunctor, constant_weight, representable_weight
from .kernel import Functor1, dual_co, dual_op, validate_twocat

DEFAULT_SEED = 20240611


def shape_empty():
    return make_twocat([], name="∅")


def shape_point():
    return make_twocat(["*"], name="Δ0")


def shape_arrow():
    return L.D1()


def shape_2cell():
    return L.D2()


def shape_pair():
    return L.discrete_pair()


def shape_cospan():
    return make_twocat(["0", "1", "2"], {"u": ("0", "2"), "v": ("1", "2")}, name="cospan")


def duals(C):
    return [dual_op(C), dual_co(C), dual_op(dual_co(C))]


def random_twocat(rng, name=""):
    """A sub-2-category of Cat generated by a few random functors between
    small categories (so all laws hold by construction)."""
    pool = [L.fincat_point, L.interval_cat, lambda: L.fincat_discrete(2),
            lambda: L.fincat_chaotic(2), L.fincat_parallel]
    while True:
        k = rng.choice([1, 2, 2, 3])
        cats = {f"c{n}": rng.choice(pool)() for n in range(k)}
        gens = {}
        names = sorted(cats)
        for n in range(rng.randint(1, 3)):
            s, t = rng.choice(names), rng.choice(names)
            fs = L.all_functors(cats[s], cats[t])
            if fs:
                om, mm = rng.choice(fs)
                gens[f"g{n}"] = (s, t, om, mm)
        C = L.cat_2cat(cats, gens, name=name)
        if len(C.one_cells) <= 24 and len(C.two_cells) <= 48:
            return C


def curated_twocats():
    return list(L.curated().values())


def kernel_corpus(seed=DEFAULT_SEED, n_random=6):
    """Curated examples, their duals, their object slices and random ones."""
    from .slice import build_object_slice
    out = []
    for C in curated_twocats():
        out.append(C)
        out.extend(duals(C))
    for C in curated_twocats():
        if len(C.one_cells) > 12:
            continue
        for x in C.objects:
            S = build_object_slice(C, x)
            out.append(dataclasses.replace(S.total, name=f"tr({C.name}/{x})"))
    rng = random.Random(seed)
    for n in range(n_random):
        out.append(random_twocat(rng, name=f"random{n}"))
    return out


# ---------------------------------------------------------------------------
# Diagrams


def all_2functors(J, C, limit=None):
    """Every strict 2-functor J → C (backtracking; J tiny)."""
    objs = sorted(J.objects)
    ids = set(J.id1.values())
    ones = sorted(f for f in J.one_cells if f not in ids)
    twos = sorted(a for a in J.two_cells if a not in set(J.id2.values()))
    out = []
    for om in product(C.objects, repeat=len(objs)):
        omap = dict(zip(objs, om))
        choices1 = [C.hom(omap[J.src(f)], omap[J.tgt(f)]) for f in ones]
        for fm in product(*choices1):
            on_one = {J.id1[x]: C.id1[omap[x]] for x in objs}
            on_one.update(zip(ones, fm))
            if any(C.comp1[(on_one[g], on_one[f])] != on_one[h]
                   for (g, f), h in J.comp1.items()):
                continue
            choices2 = [C.cells(on_one[J.src2(a)], on_one[J.tgt2(a)]) for a in twos]
            for am in product(*choices2):
                on_two = {J.id2[f]: C.id2[on_one[f]] for f in J.one_cells}
                on_two.update(zip(twos, am))
                u = TwoFunctor(J, C, omap, on_one, on_two)
                try:
                    validate_functor(u)
                except ValueError:
                    continue
                out.append(u)
                if limit and len(out) >= limit:
                    return out
    return out


@dataclasses.dataclass(frozen=True)
class Instance:
    name: str
    F: TwoFunctor
    E: frozenset
    ell: str
    lam: object


def _markings(J):
    ids = set(J.id1.values())
    non = sorted(f for f in J.one_cells if f not in ids)
    out = []
    for bits in product([False, True], repeat=len(non)):
        out.append(frozenset(ids | {f for f, b in zip(non, bits) if b}))
    return out


def diagram_instances(C, J, per_diagram=None, max_diagrams=None, markings=None):
    out = []
    Fs = all_2functors(J, C, limit=max_diagrams)
    for n, F in enumerate(Fs):
        for E in (markings or _markings(J)):
            cones = [lam for x in sorted(C.objects) for lam in enumerate_cones(F, E, x)]
            if per_diagram:
                cones = cones[:per_diagram]
            for lam in cones:
                nm = f"{C.name}/{J.name}#{n}/E{len(E)}/{lam.label}"
                out.append(Instance(nm, F, E, lam.vertex, lam))
    return out


def theorem_corpus():
    """(diagram, cone) instances over J in {∅, Δ0, Δ1, Δ2, pair}."""
    out = []
    for C in [L.D2(), L.walking_iso(), L.walking_inv_2cell(), L.idempotent_equivalence(),
              L.posets_2cat(), L.composable_2cells()]:
        F = empty_diagram(C)
        for x in C.objects:
            for lam in enumerate_cones(F, frozenset(), x):
                out.append(Instance(f"{C.name}/∅/{x}", F, frozenset(), x, lam))
    for C in [L.D2(), L.walking_inv_2cell(), L.posets_2cat()]:
        for c in C.objects:
            F = point_diagram(C, c)
            for x in C.objects:
                for lam in enumerate_cones(F, {"1_*"}, x):
                    out.append(Instance(f"{C.name}/Δ0({c})/{lam.label}", F,
                                        frozenset({"1_*"}), x, lam))
    for C in [L.D2(), L.walking_inv_2cell(), L.posets_2cat(), L.composable_2cells()]:
        out.extend(diagram_instances(C, shape_arrow(), max_diagrams=6))
    for C in [L.walking_inv_2cell(), L.posets_2cat(), L.parallel_2cells()]:
        out.extend(diagram_instances(C, shape_2cell(), max_diagrams=4))
    P = L.product_witness()
    pair = shape_pair()
    F = validate_functor(TwoFunctor(pair, P, {"a": "a", "b": "b"},
                                    {"1_a": "1_a", "1_b": "1_b"},
                                    {"1_1_a": "1_1_a", "1_1_b": "1_1_b"}))
    for x in ("p", "a", "b"):
        for lam in enumerate_cones(F, pair.id1.values(), x):
            out.append(Instance(f"product/{lam.label}", F, frozenset(pair.id1.values()), x, lam))
    out.extend(diagram_instances(L.posets_2cat(), pair, max_diagrams=4))
    return out


def locally_discrete_instances():
    """1-categories seen as 2-categories, with every 1-cell of J marked."""
    cats = [
        L.poset_category(["0", "1", "2", "t"], [("0", "t"), ("1", "t"), ("2", "0"), ("2", "1")],
                         name="square"),
        L.poset_category(["0", "1", "m"], [("m", "0"), ("m", "1")], name="span"),
        L.fincat_parallel(),
        L.fincat_chaotic(2),
        L.poset_category(["0", "1", "2"], [("0", "1"), ("1", "2")], name="chain3"),
    ]
    out = []
    for A in cats:
        C = L.locally_discrete_renamed(A, name=f"ld({A.name})")
        for J in (shape_point(), shape_arrow(), shape_pair(), shape_cospan()):
            E = frozenset(J.one_cells)
            for n, F in enumerate(all_2functors(J, C, limit=4)):
                for x in sorted(C.objects):
                    for lam in enumerate_cones(F, E, x):
                        out.append(Instance(f"{C.name}/{J.name}#{n}/{lam.label}", F, E, x, lam))
    return out


# ---------------------------------------------------------------------------
# Weights


def arrow_weight():
    """J = Δ1, W(0) = Δ1, W(1) = Δ0, W(f) picks the object 1."""
    J = L.D1()
    A, P = L.fincat_arrow(), L.fincat_point()
    idA = Functor1(A, A, {a: a for a in A.objects}, {m: m for m in A.morphisms})
    idP = Functor1(P, P, {"0": "0"}, {"0>0": "0>0"})
    pick = Functor1(P, A, {"0": "1"}, {"0>0": "1>1"})
    return CatValuedFunctor(J, {"0": A, "1": P}, {"1_0": idA, "1_1": idP, "f": pick},
                            {"1_1_0": {a: A.identity[a] for a in A.objects},
                             "1_1_1": {"0": "0>0"}, "1_f": {"0": "1>1"}}, name="arrow_weight")


def weight_corpus():
    out = [arrow_weight()]
    for C in curated_twocats():
        if len(C.one_cells) > 20:
            continue
        for x in C.objects:
            out.append(representable_weight(C, x))
    for J in (shape_point(), shape_arrow(), shape_2cell(), shape_pair()):
        for A in (L.fincat_point(), L.fincat_arrow(), L.fincat_parallel()):
            out.append(constant_weight(J, A))
    return out


def validated(Cs):
    return [validate_twocat(C) for C in Cs]
