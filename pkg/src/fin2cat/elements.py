"""The 2-category of elements of a Cat-valued weight, and weighted bilimits.

A weight W is contravariant on 1-cells and on 2-cells (a strict 2-functor
J^op_co → Cat): for k: i → j it gives a functor W(k): W(j) → W(i), and for
Λ: k ⇒ k′ a natural transformation W(Λ): W(k′) ⇒ W(k).  With this variance
the projection El_W → J is a 1-fibration and the representable weight
W(y) = B(y, x)^op reproduces the lax slice tr(B/x).

Cells of El_W:
    objects   (i, w) with w in W(i)
    1-cells   (k, φ): (i, w) → (j, w′) with φ: w → W(k)(w′) in W(i)
    2-cells   Λ: (k, φ) ⇒ (k′, φ′) with φ = W(Λ)_{w′} ∘ φ′
"""
from dataclasses import dataclass

from .build import CellIndex, assemble
from .diagrams import Cone, TwoFunctor, compose_2functors, validate_functor
from .fibration import verify_1fibration
from .kernel import (DEFAULT_CAP, FinCat, Functor1, InvalidStructure, TwoCat,
                     categories_isomorphic, hom_cat, opposite, validate_fincat,
                     validate_functor1, validate_marking, Marking)


@dataclass(frozen=True)
class CatValuedFunctor:
    source: TwoCat
    cats: dict        # object i -> FinCat W(i)
    on_one: dict      # 1-cell k: i → j -> Functor1 W(j) → W(i)
    on_two: dict      # 2-cell Λ: k ⇒ k′ -> {w′ in W(j): W(k′)w′ → W(k)w′}
    name: str = ""


def validate_weight(W):
    J = W.source
    for i in sorted(J.objects):
        if i not in W.cats:
            raise InvalidStructure("weight misses an object", [i])
        validate_fincat(W.cats[i])
    for k in sorted(J.one_cells):
        i, j = J.one_cells[k]
        u = W.on_one.get(k)
        if u is None or u.source != W.cats[j] or u.target != W.cats[i]:
            raise InvalidStructure("weight functor has wrong boundary", [k])
        validate_functor1(u)
    for i in sorted(J.objects):
        u = W.on_one[J.id1[i]]
        A = W.cats[i]
        if any(u.on_objects[a] != a for a in A.objects) or \
                any(u.on_morphisms[m] != m for m in A.morphisms):
            raise InvalidStructure("identity 1-cell not sent to identity functor", [i])
    for (l, k), lk in sorted(J.comp1.items()):
        wl, wk, wlk = W.on_one[l], W.on_one[k], W.on_one[lk]
        A = W.cats[J.tgt(l)]
        if any(wlk.on_objects[a] != wk.on_objects[wl.on_objects[a]] for a in A.objects) or \
                any(wlk.on_morphisms[m] != wk.on_morphisms[wl.on_morphisms[m]]
                    for m in A.morphisms):
            raise InvalidStructure("composition not preserved", [l, k])
    for L in sorted(J.two_cells):
        k, k2 = J.two_cells[L]
        i, j = J.one_cells[k]
        Wi, Wj = W.cats[i], W.cats[j]
        comp = W.on_two.get(L, {})
        u, u2 = W.on_one[k], W.on_one[k2]
        for w in Wj.objects:
            if Wi.morphisms.get(comp.get(w)) != (u2.on_objects[w], u.on_objects[w]):
                raise InvalidStructure("bad natural transformation component", [L, w])
        for m, (w, w2) in sorted(Wj.morphisms.items()):
            if Wi.comp[(u.on_morphisms[m], comp[w])] != Wi.comp[(comp[w2], u2.on_morphisms[m])]:
                raise InvalidStructure("naturality", [L, m])
    for f in sorted(J.one_cells):
        comp = W.on_two[J.id2[f]]
        Wi = W.cats[J.src(f)]
        for w, m in comp.items():
            if m != Wi.identity[W.on_one[f].on_objects[w]]:
                raise InvalidStructure("identity 2-cell not sent to identity", [f])
    for (b, a), c in sorted(J.vcomp.items()):
        # a: k ⇒ k′, b: k′ ⇒ k″; W(b∗₁a) = W(a) ∘ W(b)
        Wi = W.cats[J.obj_src(a)]
        for w, m in W.on_two[c].items():
            if m != Wi.comp[(W.on_two[a][w], W.on_two[b][w])]:
                raise InvalidStructure("vertical composition not preserved", [b, a])
    for (h, a), c in sorted(J.lwhisk.items()):
        Wi = W.cats[J.obj_src(a)]
        wh = W.on_one[h]
        for w, m in W.on_two[c].items():
            if m != W.on_two[a][wh.on_objects[w]]:
                raise InvalidStructure("left whiskering not preserved", [h, a])
    for (a, h), c in sorted(J.rwhisk.items()):
        wh = W.on_one[h]
        for w, m in W.on_two[c].items():
            if m != wh.on_morphisms[W.on_two[a][w]]:
                raise InvalidStructure("right whiskering not preserved", [a, h])
    return W


def constant_weight(J, A):
    """W(i) = A for all i, every 1-cell to the identity functor."""
    ident = Functor1(A, A, {a: a for a in A.objects}, {m: m for m in A.morphisms})
    return CatValuedFunctor(J, {i: A for i in J.objects}, {k: ident for k in J.one_cells},
                            {L: {a: A.identity[a] for a in A.objects} for L in J.two_cells},
                            name=f"const({A.name})")


def representable_weight(B, x):
    """W(y) = B(y, x)^op, W(f) = −∘f, W(Λ)_β = β ∗₀ Λ."""
    cats = {y: opposite(hom_cat(B, y, x)) for y in B.objects}
    on_one = {}
    for f, (y, z) in B.one_cells.items():
        on_one[f] = Functor1(cats[z], cats[y], {b: B.comp1[(b, f)] for b in cats[z].objects},
                             {m: B.rwhisk[(m, f)] for m in cats[z].morphisms})
    on_two = {L: {b: B.lwhisk[(b, L)] for b in cats[B.obj_tgt(L)].objects}
              for L in B.two_cells}
    return CatValuedFunctor(B, cats, on_one, on_two, name=f"{B.name}(-,{x})")


@dataclass(frozen=True)
class ElementsResult:
    total: TwoCat
    proj: TwoFunctor
    weight: CatValuedFunctor
    index: CellIndex

    def object_of(self, i, w):
        return self.index.obj_id[(i, w)]

    def fiber(self, i):
        """The fiber over i as a FinCat: objects (i, w), morphisms (1_i, φ)."""
        J = self.weight.source
        e = J.id1[i]
        objs = tuple(sorted(o for o, (j, _) in self.index.obj.items() if j == i))
        mor = {f: st for f, st in self.total.one_cells.items() if self.index.one[f][2] == e
               and st[0] in objs}
        comp = {k: v for k, v in self.total.comp1.items() if k[0] in mor and k[1] in mor}
        return FinCat(objs, mor, {o: self.total.id1[o] for o in objs}, comp,
                      name=f"fiber({i})")

    def fiber_map(self, i):
        """The evident functor fiber(i) → W(i)."""
        Fb = self.fiber(i)
        return Functor1(Fb, self.weight.cats[i],
                        {o: self.index.obj[o][1] for o in Fb.objects},
                        {f: self.index.one[f][3] for f in Fb.morphisms})


def build_elements(W, cap=DEFAULT_CAP, validate=True):
    J = W.source
    objects = [(i, w) for i in sorted(J.objects) for w in W.cats[i].objects]
    cap.check("elements", len(objects), 0)
    ones = {}
    for k, (i, j) in sorted(J.one_cells.items()):
        Wi, u = W.cats[i], W.on_one[k]
        for w in Wi.objects:
            for w2 in W.cats[j].objects:
                for phi in Wi.hom(w, u.on_objects[w2]):
                    ones[((i, w), (j, w2), k, phi)] = ((i, w), (j, w2))
        cap.check("elements", len(objects), len(ones))
    twos = {}
    by_hom = {}
    for e, ab in ones.items():
        by_hom.setdefault(ab, []).append(e)
    for ((i, w), (j, w2)), es in by_hom.items():
        Wi = W.cats[i]
        for e in es:
            for e2 in es:
                for L in J.cells(e[2], e2[2]):
                    if e[3] == Wi.comp[(W.on_two[L][w2], e2[3])]:
                        twos[(e, e2, L)] = (e, e2)

    def id1(o):
        i, w = o
        return (o, o, J.id1[i], W.cats[i].identity[w])

    def comp1(e2, e1):
        a, _, k, phi = e1
        _, c, l, psi = e2
        Wi = W.cats[a[0]]
        return (a, c, J.comp1[(l, k)], Wi.comp[(W.on_one[k].on_morphisms[psi], phi)])

    def id2(e):
        return (e, e, J.id2[e[2]])

    def vcomp(t2, t1):
        return (t1[0], t2[1], J.vcomp[(t2[2], t1[2])])

    def lwhisk(h, t):
        return (comp1(h, t[0]), comp1(h, t[1]), J.lwhisk[(h[2], t[2])])

    def rwhisk(t, h):
        return (comp1(t[0], h), comp1(t[1], h), J.rwhisk[(t[2], h[2])])

    def lab_obj(o):
        return f"{o[0]}:{o[1]}"

    def lab_one(e):
        return f"({e[2]};{e[3]}):{lab_obj(e[0])}→{lab_obj(e[1])}"

    def lab_two(t):
        return f"{t[2]}:{lab_one(t[0])}⇒{lab_one(t[1])}"

    total, index = assemble(objects, ones, twos, id1=id1, comp1=comp1, id2=id2,
                            vcomp=vcomp, lwhisk=lwhisk, rwhisk=rwhisk,
                            label_obj=lab_obj, label_one=lab_one, label_two=lab_two,
                            name=f"El({W.name})", validate=validate)
    proj = TwoFunctor(total, J,
                      {o: index.obj[o][0] for o in total.objects},
                      {f: index.one[f][2] for f in total.one_cells},
                      {t: index.two[t][2] for t in total.two_cells}, name="U")
    return ElementsResult(total, proj, W, index)


def fiber_is_isomorphic(El, i):
    """The evident map fiber(i) → W(i) is a bijective functor, and an
    independent isomorphism search agrees."""
    u = validate_functor1(El.fiber_map(i))
    A, B = u.source, u.target
    bij = (len(set(u.on_objects.values())) == len(A.objects) == len(B.objects)
           and len(set(u.on_morphisms.values())) == len(A.morphisms) == len(B.morphisms))
    return bij and categories_isomorphic(A, B)


def restrict_cone(El, lam):
    """Pull a cone over F back to a cone over F∘U."""
    legs, cells = lam.leg_map, lam.cell_map
    U = El.proj
    return Cone.make(lam.vertex, {o: legs[U.on_objects[o]] for o in El.total.objects},
                     {f: cells[U.on_one[f]] for f in El.total.one_cells})


def weighted_diagram(F, W, cap=DEFAULT_CAP):
    """(El_W, F∘U)."""
    El = build_elements(W, cap=cap)
    return El, validate_functor(compose_2functors(F, El.proj))


def weighted_bilimit(F, W, E_W, ell, lam, cap=DEFAULT_CAP):
    """Whether the cone ``lam`` over F∘U is an E_W-bilimit.  ``E_W`` is a set
    of 1-cells of El_W supplied by the caller; it is not computed here."""
    from .bilimits import is_bilimit
    El, G = weighted_diagram(F, W, cap=cap)
    M = validate_marking(El.total, Marking(frozenset(E_W)))
    return is_bilimit(G, M.marked, ell, lam)


def image_marking(El, E):
    """All 1-cells of El_W lying over a 1-cell in E."""
    return {f for f in El.total.one_cells if El.index.one[f][2] in E}

