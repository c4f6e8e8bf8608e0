"""Strict 2-functors, lax transformations, cones and cone categories.

Orientation conventions.  For a lax transformation α: F ⇒ G the component at
k: i → j is a 2-cell ``α_k: G(k)∘α_i ⇒ α_j∘F(k)``.  A cone with vertex x over
F is a lax transformation from the constant functor at x, so its cells are
``α_k: F(k)∘α_i ⇒ α_j``.  A modification μ from a cone β to a cone α at the
same vertex has components ``μ_i: β_i ⇒ α_i``.
"""
from dataclasses import dataclass

from .build import make_twocat
from .kernel import (FinCat, Functor1, InvalidStructure, TwoCat, hom_cat,
                     validate_functor1)


@dataclass(frozen=True)
class TwoFunctor:
    source: TwoCat
    target: TwoCat
    on_objects: dict
    on_one: dict
    on_two: dict
    name: str = ""

    def __call__(self, cell):
        """Apply to a cell of any dimension."""
        for table in (self.on_objects, self.on_one, self.on_two):
            if cell in table:
                return table[cell]
        raise KeyError(cell)


def validate_functor(u):
    """Return ``u`` if it is a strict 2-functor, else raise InvalidStructure."""
    J, C = u.source, u.target
    for x in sorted(J.objects):
        if u.on_objects.get(x) not in C.id1:
            raise InvalidStructure("object map not total", [x])
    for f in sorted(J.one_cells):
        g = u.on_one.get(f)
        if g not in C.one_cells:
            raise InvalidStructure("1-cell map not total", [f])
        s, t = J.one_cells[f]
        if C.one_cells[g] != (u.on_objects[s], u.on_objects[t]):
            raise InvalidStructure("1-cell boundary not preserved", [f, g])
    for a in sorted(J.two_cells):
        b = u.on_two.get(a)
        if b not in C.two_cells:
            raise InvalidStructure("2-cell map not total", [a])
        f, g = J.two_cells[a]
        if C.two_cells[b] != (u.on_one[f], u.on_one[g]):
            raise InvalidStructure("2-cell boundary not preserved", [a, b])
    for x in sorted(J.objects):
        if u.on_one[J.id1[x]] != C.id1[u.on_objects[x]]:
            raise InvalidStructure("identity 1-cell not preserved", [x])
    for f in sorted(J.one_cells):
        if u.on_two[J.id2[f]] != C.id2[u.on_one[f]]:
            raise InvalidStructure("identity 2-cell not preserved", [f])
    for (g, f), h in sorted(J.comp1.items()):
        if C.comp1[(u.on_one[g], u.on_one[f])] != u.on_one[h]:
            raise InvalidStructure("comp1 not preserved", [g, f])
    for (b, a), c in sorted(J.vcomp.items()):
        if C.vcomp[(u.on_two[b], u.on_two[a])] != u.on_two[c]:
            raise InvalidStructure("vcomp not preserved", [b, a])
    for (h, a), c in sorted(J.lwhisk.items()):
        if C.lwhisk[(u.on_one[h], u.on_two[a])] != u.on_two[c]:
            raise InvalidStructure("lwhisk not preserved", [h, a])
    for (a, h), c in sorted(J.rwhisk.items()):
        if C.rwhisk[(u.on_two[a], u.on_one[h])] != u.on_two[c]:
            raise InvalidStructure("rwhisk not preserved", [a, h])
    return u


def identity_2functor(C):
    return TwoFunctor(C, C, {x: x for x in C.objects}, {f: f for f in C.one_cells},
                      {a: a for a in C.two_cells}, name=f"id_{C.name}")


def compose_2functors(v, u):
    """v ∘ u."""
    return TwoFunctor(u.source, v.target,
                      {x: v.on_objects[y] for x, y in u.on_objects.items()},
                      {f: v.on_one[g] for f, g in u.on_one.items()},
                      {a: v.on_two[b] for a, b in u.on_two.items()})


def constant_2functor(J, C, x):
    i, e = C.id1[x], C.id2[C.id1[x]]
    return TwoFunctor(J, C, {j: x for j in J.objects}, {k: i for k in J.one_cells},
                      {a: e for a in J.two_cells}, name=f"Δ{x}")


def empty_2cat():
    return make_twocat([], name="∅")


def point_diagram(C, c):
    """The 2-functor Δ0 → C picking out ``c``."""
    J = make_twocat(["*"], name="D0*")
    return TwoFunctor(J, C, {"*": c}, {"1_*": C.id1[c]}, {"1_1_*": C.id2[C.id1[c]]},
                      name=f"pt({c})")


def empty_diagram(C):
    return TwoFunctor(empty_2cat(), C, {}, {}, {}, name="empty")


def diagram_from_maps(J, C, objects, one=None, two=None):
    """Build and validate a 2-functor; identity cells are filled in."""
    on_one = {J.id1[x]: C.id1[objects[x]] for x in J.objects}
    on_one.update(one or {})
    on_two = {J.id2[f]: C.id2[on_one[f]] for f in J.one_cells if f in on_one}
    on_two.update(two or {})
    return validate_functor(TwoFunctor(J, C, dict(objects), on_one, on_two))


# ---------------------------------------------------------------------------
# Lax transformations


@dataclass(frozen=True)
class LaxTransformation:
    F: TwoFunctor
    G: TwoFunctor
    marking: frozenset
    comp1: dict   # object of J -> 1-cell Fi → Gi
    comp2: dict   # 1-cell k of J -> 2-cell G(k)∘α_i ⇒ α_j∘F(k)


def validate_lax_transformation(t):
    F, G = t.F, t.G
    J, C = F.source, F.target
    for i in sorted(J.objects):
        a = t.comp1.get(i)
        if a not in C.one_cells or C.one_cells[a] != (F.on_objects[i], G.on_objects[i]):
            raise InvalidStructure("bad 1-cell component", [i])
    for k in sorted(J.one_cells):
        i, j = J.one_cells[k]
        want = (C.comp1[(G.on_one[k], t.comp1[i])], C.comp1[(t.comp1[j], F.on_one[k])])
        c = t.comp2.get(k)
        if c not in C.two_cells or C.two_cells[c] != want:
            raise InvalidStructure("bad 2-cell component", [k])
    for i in sorted(J.objects):
        if t.comp2[J.id1[i]] != C.id2[t.comp1[i]]:
            raise InvalidStructure("identity", [J.id1[i]])
    for k in sorted(t.marking):
        if C.inverses[t.comp2[k]] is None:
            raise InvalidStructure("marking", [k])
    for (l, k), lk in sorted(J.comp1.items()):
        want = C.vcomp[(C.rwhisk[(t.comp2[l], F.on_one[k])],
                        C.lwhisk[(G.on_one[l], t.comp2[k])])]
        if t.comp2[lk] != want:
            raise InvalidStructure("compositions", [l, k])
    for d in sorted(J.two_cells):
        k, l = J.two_cells[d]
        i, j = J.one_cells[k]
        lhs = C.vcomp[(t.comp2[l], C.rwhisk[(G.on_two[d], t.comp1[i])])]
        rhs = C.vcomp[(C.lwhisk[(t.comp1[j], F.on_two[d])], t.comp2[k])]
        if lhs != rhs:
            raise InvalidStructure("compatibility", [d])
    return t


# ---------------------------------------------------------------------------
# Cones


@dataclass(frozen=True, order=True)
class Cone:
    """An E-lax cone: vertex, legs (object of J, 1-cell) and cells (1-cell of
    J, 2-cell), both as sorted tuples of pairs."""

    vertex: str
    legs: tuple
    cells: tuple

    @classmethod
    def make(cls, vertex, legs, cells):
        return cls(vertex, tuple(sorted(legs.items())), tuple(sorted(cells.items())))

    def leg(self, i):
        return dict(self.legs)[i]

    def cell(self, k):
        return dict(self.cells)[k]

    @property
    def leg_map(self):
        return dict(self.legs)

    @property
    def cell_map(self):
        return dict(self.cells)

    @property
    def label(self):
        legs = ",".join(f for _, f in self.legs)
        cells = ",".join(a for _, a in self.cells)
        return f"{self.vertex}|{legs}|{cells}"


def cone_as_transformation(F, E, cone):
    """The cone seen as a lax transformation Δx ⇒ F."""
    J = F.source
    return LaxTransformation(constant_2functor(J, F.target, cone.vertex), F,
                             frozenset(E), cone.leg_map, cone.cell_map)


def cone_failure(F, E, cone):
    """None if ``cone`` is a valid E-lax cone over F, else (condition, cell)."""
    J, C = F.source, F.target
    x = cone.vertex
    legs, cells = cone.leg_map, cone.cell_map
    if set(legs) != set(J.objects) or set(cells) != set(J.one_cells):
        return ("components do not cover J",)
    for i in sorted(J.objects):
        if C.one_cells.get(legs[i]) != (x, F.on_objects[i]):
            return ("bad leg", i)
    for k in sorted(J.one_cells):
        i, j = J.one_cells[k]
        if C.two_cells.get(cells[k]) != (C.comp1[(F.on_one[k], legs[i])], legs[j]):
            return ("bad cell", k)
    for i in sorted(J.objects):
        if cells[J.id1[i]] != C.id2[legs[i]]:
            return ("identity", J.id1[i])
    for k in sorted(E):
        if C.inverses[cells[k]] is None:
            return ("marking", k)
    for (l, k), lk in sorted(J.comp1.items()):
        if cells[lk] != C.vcomp[(cells[l], C.lwhisk[(F.on_one[l], cells[k])])]:
            return ("compositions", l, k)
    for d in sorted(J.two_cells):
        k, l = J.two_cells[d]
        i = J.src(k)
        if cells[k] != C.vcomp[(cells[l], C.rwhisk[(F.on_two[d], legs[i])])]:
            return ("compatibility", d)
    return None


def validate_cone(F, E, cone):
    bad = cone_failure(F, E, cone)
    if bad:
        raise InvalidStructure(bad[0], bad[1:])
    return cone


def enumerate_cones(F, E, x):
    """All E-lax cones over F with vertex x, sorted.

    Legs are chosen first (objects of J in sorted order), then the cells of
    the non-identity 1-cells of J in sorted order.  After each cell is chosen
    every composition and 2-cell equation whose cells are all assigned is
    checked, so dead branches are cut early.
    """
    J, C = F.source, F.target
    E = frozenset(E)
    objs = sorted(J.objects)
    ids = {J.id1[i] for i in objs}
    ks = sorted(k for k in J.one_cells if k not in ids)

    # equations indexed by the last cell (in ks order) they mention
    pos = {k: n for n, k in enumerate(ks)}
    for k in ids:
        pos[k] = -1
    comps_at = {k: [] for k in ks}
    for (l, k), lk in J.comp1.items():
        if l in ids or k in ids:
            continue
        last = max(pos[l], pos[k], pos[lk])
        comps_at[ks[last]].append((l, k, lk))
    twos_at = {k: [] for k in ks}
    for d, (k, l) in J.two_cells.items():
        last = max(pos[k], pos[l])
        if last >= 0:
            twos_at[ks[last]].append(d)
    out = []

    def fits(legs, cells, k):
        for l, k2, lk in comps_at[k]:
            if cells[lk] != C.vcomp[(cells[l], C.lwhisk[(F.on_one[l], cells[k2])])]:
                return False
        for d in twos_at[k]:
            a, b = J.two_cells[d]
            i = J.src(a)
            if cells[a] != C.vcomp[(cells[b], C.rwhisk[(F.on_two[d], legs[i])])]:
                return False
        return True

    def choose_cells(n, legs, cells):
        if n == len(ks):
            out.append(Cone.make(x, legs, cells))
            return
        k = ks[n]
        i, j = J.one_cells[k]
        for a in C.cells(C.comp1[(F.on_one[k], legs[i])], legs[j]):
            if k in E and C.inverses[a] is None:
                continue
            cells[k] = a
            if fits(legs, cells, k):
                choose_cells(n + 1, legs, cells)
            del cells[k]

    def feasible(legs):
        for k in ks:
            i, j = J.one_cells[k]
            if i in legs and j in legs and not C.cells(C.comp1[(F.on_one[k], legs[i])], legs[j]):
                return False
        return True

    def choose_legs(n, legs):
        if n == len(objs):
            cells = {J.id1[i]: C.id2[legs[i]] for i in objs}
            # 2-cells between identities of J only involve identity cells
            for d, (k, l) in J.two_cells.items():
                if k in ids and l in ids:
                    i = J.src(k)
                    if cells[k] != C.vcomp[(cells[l], C.rwhisk[(F.on_two[d], legs[i])])]:
                        return
            choose_cells(0, legs, cells)
            return
        i = objs[n]
        for f in C.hom(x, F.on_objects[i]):
            legs[i] = f
            if feasible(legs):
                choose_legs(n + 1, legs)
            del legs[i]

    choose_legs(0, {})
    return sorted(out)


def enumerate_all_cones(F, E):
    return [c for x in sorted(F.target.objects) for c in enumerate_cones(F, E, x)]


# ---------------------------------------------------------------------------
# Modifications and the cone category


@dataclass(frozen=True)
class Modification:
    """Components ``μ_i: source_i ⇒ target_i`` between cones at one vertex."""

    source: Cone
    target: Cone
    components: tuple   # sorted (object of J, 2-cell) pairs

    @property
    def comp_map(self):
        return dict(self.components)


def modification_failure(F, source, target, comps):
    """None if ``comps`` is a modification source ⇒ target, else (reason, k).

    The equation is target_k ∗₁ (F(k) ∗₀ μ_i) = μ_j ∗₁ source_k."""
    J, C = F.source, F.target
    sl, tl = source.leg_map, target.leg_map
    for i in sorted(J.objects):
        if C.two_cells.get(comps.get(i)) != (sl[i], tl[i]):
            return ("bad component", i)
    sc, tc = source.cell_map, target.cell_map
    for k in sorted(J.one_cells):
        i, j = J.one_cells[k]
        lhs = C.vcomp[(tc[k], C.lwhisk[(F.on_one[k], comps[i])])]
        rhs = C.vcomp[(comps[j], sc[k])]
        if lhs != rhs:
            return ("modification square", k)
    return None


def modifications(F, source, target):
    """All modifications source ⇒ target (backtracking over objects of J)."""
    J, C = F.source, F.target
    objs = sorted(J.objects)
    sl, tl = source.leg_map, target.leg_map
    sc, tc = source.cell_map, target.cell_map
    ks = sorted(J.one_cells)
    out = []

    def go(n, comps):
        if n == len(objs):
            out.append(dict(comps))
            return
        i = objs[n]
        for a in C.cells(sl[i], tl[i]):
            comps[i] = a
            ok = True
            for k in ks:
                s, t = J.one_cells[k]
                if s in comps and t in comps:
                    if (C.vcomp[(tc[k], C.lwhisk[(F.on_one[k], comps[s])])]
                            != C.vcomp[(comps[t], sc[k])]):
                        ok = False
                        break
            if ok:
                go(n + 1, comps)
            del comps[i]

    go(0, {})
    return out


def mod_label(source, target, comps):
    body = ",".join(comps[i] for i in sorted(comps))
    return f"[{body}]:{source.label}=>{target.label}"


@dataclass(frozen=True)
class ConeCategory:
    category: FinCat
    cones: dict        # object id -> Cone
    ids: dict          # Cone -> object id


def cone_category(F, E, x, cones=None):
    """[J, C]_E(Δx, F) as a FinCat whose objects are cone labels."""
    C = F.target
    cones = enumerate_cones(F, E, x) if cones is None else cones
    ids = {c: c.label for c in cones}
    if len(set(ids.values())) != len(ids):
        raise InvalidStructure("cone label collision", [x])
    morphs, comps_of = {}, {}
    for a in cones:
        for b in cones:
            for m in modifications(F, a, b):
                lab = mod_label(a, b, m)
                morphs[lab] = (ids[a], ids[b])
                comps_of[lab] = m
    identity = {ids[c]: mod_label(c, c, {i: C.id2[f] for i, f in c.legs}) for c in cones}
    by_src = {}
    for lab, (s, t) in morphs.items():
        by_src.setdefault(s, []).append(lab)
    cone_of = {v: k for k, v in ids.items()}
    comp = {}
    for f, (s, t) in morphs.items():
        for g in by_src.get(t, ()):
            mf, mg = comps_of[f], comps_of[g]
            h = {i: C.vcomp[(mg[i], mf[i])] for i in mf}
            comp[(g, f)] = mod_label(cone_of[s], cone_of[morphs[g][1]], h)
    cat = FinCat(tuple(sorted(ids.values())), morphs, identity, comp,
                 name=f"Cones({x})")
    return ConeCategory(cat, cone_of, ids)


def postcompose_cone(F, lam, f):
    """λ·f: legs λ_i∘f, cells λ_k ∗₀ f."""
    C = F.target
    if C.tgt(f) != lam.vertex:
        raise InvalidStructure("boundary mismatch", [f, lam.vertex])
    return Cone.make(C.src(f), {i: C.comp1[(g, f)] for i, g in lam.legs},
                     {k: C.rwhisk[(a, f)] for k, a in lam.cells})


def postcompose_mod(F, lam, z):
    """λ·ζ for ζ: f ⇒ g, as components λ_i ∗₀ ζ."""
    C = F.target
    if C.obj_tgt(z) != lam.vertex:
        raise InvalidStructure("boundary mismatch", [z, lam.vertex])
    return {i: C.lwhisk[(g, z)] for i, g in lam.legs}


def lambda_star(F, E, ell, lam, x, cone_cat=None):
    """The functor λ·(−): C(x, ℓ) → [J, C]_E(Δx, F)."""
    C = F.target
    cc = cone_category(F, E, x) if cone_cat is None else cone_cat
    H = hom_cat(C, x, ell)
    on_obj, on_mor = {}, {}
    for f in H.objects:
        c = postcompose_cone(F, lam, f)
        if c not in cc.ids:
            raise InvalidStructure("postcomposite is not a cone", [f])
        on_obj[f] = cc.ids[c]
    for z, (f, g) in H.morphisms.items():
        comps = postcompose_mod(F, lam, z)
        a = postcompose_cone(F, lam, f)
        b = postcompose_cone(F, lam, g)
        on_mor[z] = mod_label(a, b, comps)
    return validate_functor1(Functor1(H, cc.category, on_obj, on_mor))
