"""Builtin example 2-categories and 1-categories.

Object ids of the walking shapes are "0", "1"; the arrow of Δ1 is "f", the
two parallel arrows of Δ2 are "f", "g" and the 2-cell is "a".
"""
from .build import make_twocat
from .kernel import FinCat, TwoCat, validate_fincat, validate_twocat, chaotic_category


# ---------------------------------------------------------------------------
# 1-categories


def poset_category(elements, leq, name=""):
    """Category of a preorder given as a set of pairs (a, b) meaning a ≤ b.
    Reflexive-transitive closure is taken; the arrow a→b is named "a>b"."""
    elements = tuple(elements)
    rel = {(a, a) for a in elements} | set(leq)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    mor = {f"{a}>{b}": (a, b) for a, b in rel}
    comp = {(f"{b}>{c}", f"{a}>{b}"): f"{a}>{c}"
            for a, b in rel for (b2, c) in rel if b == b2}
    return validate_fincat(FinCat(elements, mor, {a: f"{a}>{a}" for a in elements},
                                  comp, name=name))


def fincat_point():
    return poset_category(["0"], [], name="Δ0")


def fincat_arrow():
    return poset_category(["0", "1"], [("0", "1")], name="Δ1")


def fincat_discrete(n=2):
    return poset_category([str(i) for i in range(n)], [], name=f"disc{n}")


def fincat_chaotic(n=2):
    A = chaotic_category([str(i) for i in range(n)])
    return FinCat(A.objects, A.morphisms, A.identity, A.comp, name=f"chaotic{n}")


def fincat_parallel():
    """Two parallel arrows u, v: 0 → 1."""
    mor = {"1_0": ("0", "0"), "1_1": ("1", "1"), "u": ("0", "1"), "v": ("0", "1")}
    comp = {("1_0", "1_0"): "1_0", ("1_1", "1_1"): "1_1"}
    for m in ("u", "v"):
        comp[(m, "1_0")] = m
        comp[("1_1", m)] = m
    return validate_fincat(FinCat(("0", "1"), mor, {"0": "1_0", "1": "1_1"}, comp,
                                  name="parallel"))


def fincat_monoid(elements, mult, unit, name=""):
    """One-object category of a finite monoid."""
    mor = {m: ("*", "*") for m in elements}
    comp = {(g, f): mult(g, f) for g in elements for f in elements}
    return validate_fincat(FinCat(("*",), mor, {"*": unit}, comp, name=name))


# ---------------------------------------------------------------------------
# Turning 1-categories into 2-categories


def locally_discrete(A, name=""):
    """A 1-category as a 2-category with only identity 2-cells."""
    return make_twocat(A.objects,
                       {m: st for m, st in A.morphisms.items() if m not in A.identity.values()},
                       comp={k: v for k, v in A.comp.items()
                             if k[0] not in A.identity.values() and k[1] not in A.identity.values()},
                       name=name or A.name)


def _rename_identities(A):
    """Rename so that identities follow the 1_x convention of make_twocat."""
    ren = {m: m for m in A.morphisms}
    for a, i in A.identity.items():
        ren[i] = f"1_{a}"
    return ren


def locally_discrete_renamed(A, name=""):
    ren = _rename_identities(A)
    B = FinCat(A.objects, {ren[m]: st for m, st in A.morphisms.items()},
               {a: ren[i] for a, i in A.identity.items()},
               {(ren[g], ren[f]): ren[h] for (g, f), h in A.comp.items()}, name=A.name)
    return locally_discrete(B, name=name)


def locally_chaotic(A, name=""):
    """Exactly one 2-cell between any two parallel 1-cells (all invertible)."""
    ren = _rename_identities(A)
    one = {ren[m]: st for m, st in A.morphisms.items()}
    comp = {(ren[g], ren[f]): ren[h] for (g, f), h in A.comp.items()}
    two = {}
    for f, (x, y) in one.items():
        for g, st in one.items():
            if st == (x, y) and f != g:
                two[f"{f}~{g}"] = (f, g)

    def cell(f, g):
        return f"1_{f}" if f == g else f"{f}~{g}"

    vcomp = {(cell(g, h), cell(f, g)): cell(f, h)
             for (f, g) in list(two.values()) + [(f, f) for f in one]
             for h, st in one.items() if st == one[f]}
    lw, rw = {}, {}
    for (f, g) in list(two.values()) + [(f, f) for f in one]:
        x, y = one[f]
        for h, (s, t) in one.items():
            if s == y:
                lw[(h, cell(f, g))] = cell(comp[(h, f)], comp[(h, g)])
            if t == x:
                rw[(cell(f, g), h)] = cell(comp[(f, h)], comp[(g, h)])
    C = make_twocat(A.objects, {f: st for f, st in one.items() if not f.startswith("1_")
                                or f[2:] not in A.objects},
                    comp=comp, two_cells=two, vcomp=vcomp, lwhisk=lw, rwhisk=rw,
                    name=name or f"chaotic({A.name})")
    return C


# ---------------------------------------------------------------------------
# Sub-2-categories of Cat


def all_functors(A, B):
    """Every functor A → B as (object map, morphism map), in sorted order."""
    objs = list(A.objects)
    morphs = sorted(m for m in A.morphisms if m not in set(A.identity.values()))
    out = []

    def go_obj(k, omap):
        if k == len(objs):
            go_mor(0, omap, {A.identity[a]: B.identity[omap[a]] for a in objs})
            return
        for b in B.objects:
            omap[objs[k]] = b
            go_obj(k + 1, omap)
        omap.pop(objs[k], None)

    def ok(mmap):
        for (g, f), h in A.comp.items():
            if g in mmap and f in mmap and h in mmap and B.comp[(mmap[g], mmap[f])] != mmap[h]:
                return False
        return True

    def go_mor(k, omap, mmap):
        if k == len(morphs):
            out.append((dict(omap), dict(mmap)))
            return
        m = morphs[k]
        s, t = A.morphisms[m]
        for n in B.hom(omap[s], omap[t]):
            mmap[m] = n
            if ok(mmap):
                go_mor(k + 1, omap, mmap)
            del mmap[m]

    go_obj(0, {})
    return out


def natural_transformations(A, B, F, G):
    """All families (component per object of A) natural from F to G."""
    objs = list(A.objects)
    out = []
    Fo, Fm = F
    Go, Gm = G

    def go(k, comp):
        if k == len(objs):
            for m, (s, t) in A.morphisms.items():
                if B.comp[(Gm[m], comp[s])] != B.comp[(comp[t], Fm[m])]:
                    return
            out.append(tuple(comp[a] for a in objs))
            return
        a = objs[k]
        for c in B.hom(Fo[a], Go[a]):
            comp[a] = c
            go(k + 1, comp)
        comp.pop(a, None)

    go(0, {})
    return out


def cat_2cat(cats, generators=None, name=""):
    """Sub-2-category of Cat on the named FinCats.

    With ``generators`` None every functor is taken; otherwise the 1-cells are
    the closure under composition of the identities and the given functors
    (a dict name -> (src name, tgt name, object map, morphism map)).  2-cells
    are all natural transformations.
    """
    names = sorted(cats)
    funcs = {}   # key -> (src, tgt, omap, mmap)

    def key(s, t, omap, mmap):
        A = cats[s]
        return (s, t, tuple(omap[a] for a in A.objects),
                tuple(mmap[m] for m in sorted(A.morphisms)))

    def label(k):
        s, t, objs, _ = k
        return f"{s}>{t}[{','.join(objs)}]"

    def compose(kg, kf):
        _, t, og, mg = funcs[kg]
        s, _, of, mf = funcs[kf]
        omap = {a: og[of[a]] for a in cats[s].objects}
        mmap = {m: mg[mf[m]] for m in cats[s].morphisms}
        return key(s, t, omap, mmap), (s, t, omap, mmap)

    idk = {}
    for n in names:
        A = cats[n]
        om = {a: a for a in A.objects}
        mm = {m: m for m in A.morphisms}
        k = key(n, n, om, mm)
        funcs[k] = (n, n, om, mm)
        idk[n] = k
    if generators is None:
        for s in names:
            for t in names:
                for om, mm in all_functors(cats[s], cats[t]):
                    funcs.setdefault(key(s, t, om, mm), (s, t, om, mm))
    else:
        for s, t, om, mm in generators.values():
            funcs.setdefault(key(s, t, om, mm), (s, t, om, mm))
        changed = True
        while changed:
            changed = False
            for kg in sorted(funcs):
                for kf in sorted(funcs):
                    if funcs[kf][1] != funcs[kg][0]:
                        continue
                    k, val = compose(kg, kf)
                    if k not in funcs:
                        funcs[k] = val
                        changed = True

    labels = {}
    for k in sorted(funcs):
        lab = label(k)
        if lab in labels.values():
            lab = f"{lab}{{{','.join(k[3])}}}"
        labels[k] = lab
    for n in names:
        labels[idk[n]] = f"1_{n}"

    comp1 = {}
    for kg in funcs:
        for kf in funcs:
            if funcs[kf][1] == funcs[kg][0]:
                comp1[(labels[kg], labels[kf])] = labels[compose(kg, kf)[0]]

    cells = {}   # (kf, kg, comps) -> id
    for kf in sorted(funcs):
        s, t = funcs[kf][:2]
        for kg in sorted(funcs):
            if funcs[kg][:2] != (s, t):
                continue
            F = funcs[kf][2:]
            G = funcs[kg][2:]
            for comps in natural_transformations(cats[s], cats[t], F, G):
                if kf == kg and all(c == cats[t].identity[F[0][a]]
                                    for a, c in zip(cats[s].objects, comps)):
                    cid = f"1_{labels[kf]}"
                else:
                    cid = f"{labels[kf]}=>{labels[kg]}:{','.join(comps)}"
                cells[(kf, kg, comps)] = cid
    def find(kf, kg, comps):
        return cells[(kf, kg, tuple(comps))]

    vcomp, lw, rw = {}, {}, {}
    for (kf, kg, ca), a in cells.items():
        s, t = funcs[kf][:2]
        B = cats[t]
        objs = cats[s].objects
        for (kg2, kh, cb), b in cells.items():
            if kg2 == kg:
                vcomp[(b, a)] = find(kf, kh, [B.comp[(y, x)] for x, y in zip(ca, cb)])
        for kh in funcs:
            hs, ht, hom_, hmm = funcs[kh]
            if hs == t:
                new = [hmm[c] for c in ca]
                lw[(labels[kh], a)] = find(compose(kh, kf)[0], compose(kh, kg)[0], new)
            if ht == s:
                new = [ca[objs.index(hom_[z])] for z in cats[hs].objects]
                rw[(a, labels[kh])] = find(compose(kf, kh)[0], compose(kg, kh)[0], new)

    C = TwoCat(
        objects=tuple(names),
        one_cells={labels[k]: v[:2] for k, v in funcs.items()},
        id1={n: labels[idk[n]] for n in names},
        comp1=comp1,
        two_cells={cid: (labels[kf], labels[kg]) for (kf, kg, _), cid in cells.items()},
        id2={labels[k]: f"1_{labels[k]}" for k in funcs},
        vcomp=vcomp, lwhisk=lw, rwhisk=rw, name=name,
    )
    return validate_twocat(C)


# ---------------------------------------------------------------------------
# Curated 2-categories


def D0():
    return make_twocat(["0"], name="D0")


def D1():
    return make_twocat(["0", "1"], {"f": ("0", "1")}, name="D1")


def D2():
    return make_twocat(["0", "1"], {"f": ("0", "1"), "g": ("0", "1")},
                       two_cells={"a": ("f", "g")}, name="D2")


def walking_iso():
    return make_twocat(["0", "1"], {"f": ("0", "1"), "g": ("1", "0")},
                       comp={("g", "f"): "1_0", ("f", "g"): "1_1"}, name="walking_iso")


def walking_inv_2cell():
    return make_twocat(["0", "1"], {"f": ("0", "1"), "g": ("0", "1")},
                       two_cells={"a": ("f", "g"), "b": ("g", "f")},
                       vcomp={("b", "a"): "1_f", ("a", "b"): "1_g"},
                       name="walking_inv_2cell")


def parallel_2cells():
    """f, g: 0 → 1 with two distinct 2-cells a, b: f ⇒ g."""
    return make_twocat(["0", "1"], {"f": ("0", "1"), "g": ("0", "1")},
                       two_cells={"a": ("f", "g"), "b": ("f", "g")}, name="parallel_2cells")


def discrete_pair():
    return make_twocat(["a", "b"], name="discrete_pair")


def composable_2cells():
    """Δ1 ∘ Δ2: 0 --f,g--> 1 --h--> 2 with a: f ⇒ g."""
    return make_twocat(
        ["0", "1", "2"],
        {"f": ("0", "1"), "g": ("0", "1"), "h": ("1", "2"), "hf": ("0", "2"), "hg": ("0", "2")},
        comp={("h", "f"): "hf", ("h", "g"): "hg"},
        two_cells={"a": ("f", "g"), "ha": ("hf", "hg")},
        lwhisk={("h", "a"): "ha"}, name="composable")


def span_2cell():
    """A cospan 0 → 2 ← 1 where the left leg carries a 2-cell."""
    return make_twocat(
        ["0", "1", "2"],
        {"f": ("0", "2"), "g": ("0", "2"), "k": ("1", "2")},
        two_cells={"a": ("f", "g")}, name="cospan_2cell")


def idempotent_equivalence():
    """An adjoint equivalence 0 ⇄ 1 that is not an isomorphism: g∘f = e, an
    idempotent isomorphic to 1_0 through invertible 2-cells."""
    mor = {"1_0": ("0", "0"), "e": ("0", "0"), "1_1": ("1", "1"), "d": ("1", "1"),
           "f": ("0", "1"), "g": ("1", "0")}
    comp = {}
    table = {("g", "f"): "e", ("f", "g"): "d", ("e", "e"): "e", ("d", "d"): "d",
             ("f", "e"): "f", ("d", "f"): "f", ("g", "d"): "g", ("e", "g"): "g"}
    for m, (s, t) in mor.items():
        comp[(m, f"1_{s}")] = m
        comp[(f"1_{t}", m)] = m
    comp.update(table)
    A = validate_fincat(FinCat(("0", "1"), mor, {"0": "1_0", "1": "1_1"}, comp,
                               name="idem_equiv"))
    return locally_chaotic(A, name="idempotent_equivalence")


def point_cat():
    return fincat_point()


def interval_cat():
    return poset_category(["0", "1"], [("0", "1")], name="I")


def product_witness():
    """Full sub-2-category of Cat on a = I, b = the point, p = a copy of I.
    With the projections p → a (identity-like) and p → b, p is a 2-product."""
    I = interval_cat()
    P = poset_category(["p0", "p1"], [("p0", "p1")], name="P")
    return cat_2cat({"a": I, "b": point_cat(), "p": P}, name="product_witness")


def product_projections(C):
    """The projection 1-cells of ``product_witness``."""
    pa = next(f for f in C.hom("p", "a") if f == "p>a[0,1]")
    pb = C.hom("p", "b")[0]
    return pa, pb


def posets_2cat():
    """Full sub-2-category of Cat on the point and the interval."""
    return cat_2cat({"pt": point_cat(), "I": interval_cat()}, name="Pos2")


def curated():
    """Name -> TwoCat for every hand-built example."""
    return {C.name: C for C in (
        D0(), D1(), D2(), walking_iso(), walking_inv_2cell(), parallel_2cells(),
        discrete_pair(), composable_2cells(), span_2cell(), idempotent_equivalence(),
        product_witness(), posets_2cat())}


def builtin_examples():
    """The examples named by the CLI, including the slice tr(Δ2/1)."""
    from .slice import build_object_slice
    out = {"D0": D0(), "D1": D1(), "D2": D2(), "walking_iso": walking_iso(),
           "discrete_pair": discrete_pair(), "product_witness": product_witness()}
    S = build_object_slice(D2(), "1")
    total = S.total
    out["tr(D2/1)"] = TwoCat(total.objects, total.one_cells, total.id1, total.comp1,
                             total.two_cells, total.id2, total.vcomp, total.lwhisk,
                             total.rwhisk, name="tr(D2/1)")
    out["walking_inv_2cell"] = walking_inv_2cell()
    return out
