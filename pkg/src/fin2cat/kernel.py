"""Finite, fully tabulated strict 2-categories and 1-categories.

Every composite is stored explicitly.  Ids are opaque strings; tables are
plain dicts keyed by tuples of ids.  Horizontal composition of 2-cells is not
stored: it is derived from the two whiskerings, and validation checks that
both whiskered orders agree (interchange).
"""
from dataclasses import dataclass
from functools import cached_property


class InvalidStructure(ValueError):
    """A table violates a law.  ``law`` names it, ``witness`` gives the cells."""

    def __init__(self, law, witness=(), detail=""):
        self.law = law
        self.witness = tuple(witness)
        self.detail = detail
        msg = f"{law}: {', '.join(map(str, self.witness))}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class SizeCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Cap:
    objects: int = 64
    one_cells: int = 512

    def check(self, what, n_objects, n_one_cells):
        if n_objects > self.objects or n_one_cells > self.one_cells:
            raise SizeCapExceeded(
                f"{what}: {n_objects} objects / {n_one_cells} 1-cells exceeds cap "
                f"({self.objects} / {self.one_cells})")


DEFAULT_CAP = Cap()


@dataclass(frozen=True)
class Verdict:
    """Boolean answer carrying the smallest counterexample when false."""

    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok

    @classmethod
    def fail(cls, reason, *witness):
        return cls(False, reason, tuple(witness))


TRUE = Verdict(True)


# ---------------------------------------------------------------------------
# 1-categories


@dataclass(frozen=True)
class FinCat:
    objects: tuple
    morphisms: dict      # id -> (src, tgt)
    identity: dict       # object -> morphism
    comp: dict           # (g, f) -> g∘f
    name: str = ""

    def src(self, m):
        return self.morphisms[m][0]

    def tgt(self, m):
        return self.morphisms[m][1]

    @cached_property
    def homs(self):
        out = {(a, b): [] for a in self.objects for b in self.objects}
        for m in sorted(self.morphisms):
            out[self.morphisms[m]].append(m)
        return {k: tuple(v) for k, v in out.items()}

    def hom(self, a, b):
        return self.homs[(a, b)]

    @cached_property
    def inverses(self):
        inv = {}
        for m, (a, b) in self.morphisms.items():
            inv[m] = next((n for n in self.hom(b, a)
                           if self.comp[(n, m)] == self.identity[a]
                           and self.comp[(m, n)] == self.identity[b]), None)
        return inv

    def is_iso(self, m):
        return self.inverses[m] is not None

    def isomorphic(self, a, b):
        return any(self.is_iso(m) for m in self.hom(a, b))


def validate_fincat(A):
    objs = set(A.objects)
    if len(objs) != len(A.objects):
        raise InvalidStructure("duplicate object", [o for o in A.objects if A.objects.count(o) > 1][:1])
    for m in sorted(A.morphisms):
        s, t = A.morphisms[m]
        if s not in objs or t not in objs:
            raise InvalidStructure("dangling morphism boundary", [m, s, t])
    for a in A.objects:
        i = A.identity.get(a)
        if i not in A.morphisms or A.morphisms[i] != (a, a):
            raise InvalidStructure("bad identity", [a, i])
    composable = sorted((g, f) for f, (_, b) in A.morphisms.items()
                        for c in A.objects for g in A.hom(b, c))
    if set(A.comp) != set(composable):
        extra = sorted(set(A.comp) - set(composable))
        missing = sorted(set(composable) - set(A.comp))
        raise InvalidStructure("composition table not total on composable pairs",
                               (missing or extra)[0])
    for g, f in composable:
        h = A.comp[(g, f)]
        if A.morphisms.get(h) != (A.src(f), A.tgt(g)):
            raise InvalidStructure("composite has wrong boundary", [g, f, h])
    for f in sorted(A.morphisms):
        a, b = A.morphisms[f]
        if A.comp[(f, A.identity[a])] != f or A.comp[(A.identity[b], f)] != f:
            raise InvalidStructure("unit law", [f])
    for f in sorted(A.morphisms):
        b = A.tgt(f)
        for c in A.objects:
            for g in A.hom(b, c):
                for d in A.objects:
                    for h in A.hom(c, d):
                        if A.comp[(h, A.comp[(g, f)])] != A.comp[(A.comp[(h, g)], f)]:
                            raise InvalidStructure("associativity", [h, g, f])
    return A


def opposite(A):
    return FinCat(
        objects=A.objects,
        morphisms={m: (t, s) for m, (s, t) in A.morphisms.items()},
        identity=dict(A.identity),
        comp={(f, g): h for (g, f), h in A.comp.items()},
        name=f"{A.name}^op" if A.name else "",
    )


def discrete_category(objects):
    objects = tuple(objects)
    ids = {o: f"1_{o}" for o in objects}
    return FinCat(objects, {ids[o]: (o, o) for o in objects}, ids,
                  {(ids[o], ids[o]): ids[o] for o in objects})


def chaotic_category(objects):
    """Exactly one morphism between any two objects."""
    objects = tuple(objects)
    mor = {f"{a}>{b}": (a, b) for a in objects for b in objects}
    return FinCat(objects, mor, {o: f"{o}>{o}" for o in objects},
                  {(f"{b}>{c}", f"{a}>{b}"): f"{a}>{c}"
                   for a in objects for b in objects for c in objects})


@dataclass(frozen=True)
class Functor1:
    source: FinCat
    target: FinCat
    on_objects: dict
    on_morphisms: dict

    def __call__(self, m):
        return self.on_morphisms[m]


def validate_functor1(u):
    A, B = u.source, u.target
    for a in A.objects:
        if u.on_objects.get(a) not in B.identity:
            raise InvalidStructure("object map not total", [a])
    for m in sorted(A.morphisms):
        n = u.on_morphisms.get(m)
        if n not in B.morphisms:
            raise InvalidStructure("morphism map not total", [m])
        s, t = A.morphisms[m]
        if B.morphisms[n] != (u.on_objects[s], u.on_objects[t]):
            raise InvalidStructure("boundary not preserved", [m, n])
    for a in A.objects:
        if u.on_morphisms[A.identity[a]] != B.identity[u.on_objects[a]]:
            raise InvalidStructure("identity not preserved", [a])
    for (g, f), h in sorted(A.comp.items()):
        if u.on_morphisms[h] != B.comp[(u.on_morphisms[g], u.on_morphisms[f])]:
            raise InvalidStructure("composition not preserved", [g, f])
    return u


def identity_functor(A):
    return Functor1(A, A, {a: a for a in A.objects}, {m: m for m in A.morphisms})


def terminal_objects(A):
    """Objects t with exactly one arrow from every object."""
    return [t for t in A.objects if all(len(A.hom(a, t)) == 1 for a in A.objects)]


def functor_equivalence_failure(u):
    """None when ``u`` is an equivalence, else (clause, witness...)."""
    A, B = u.source, u.target
    for a in A.objects:
        for b in A.objects:
            images = [u.on_morphisms[m] for m in A.hom(a, b)]
            if len(set(images)) != len(images):
                return ("not faithful", a, b)
            if len(images) != len(B.hom(u.on_objects[a], u.on_objects[b])):
                return ("not full", a, b)
    image = {u.on_objects[a] for a in A.objects}
    for z in B.objects:
        if not any(B.isomorphic(y, z) for y in sorted(image)):
            return ("not essentially surjective", z)
    return None


def functor_is_equivalence(u):
    return functor_equivalence_failure(u) is None


def skeleton(A):
    """Full subcategory on the least object of each isomorphism class."""
    reps = []
    for a in A.objects:
        if not any(A.isomorphic(r, a) for r in reps):
            reps.append(a)
    keep = set(reps)
    morphisms = {m: st for m, st in A.morphisms.items() if st[0] in keep and st[1] in keep}
    return FinCat(tuple(reps), morphisms, {r: A.identity[r] for r in reps},
                  {k: v for k, v in A.comp.items() if k[0] in morphisms and k[1] in morphisms})


def _hom_profile(A, a):
    return (len(A.hom(a, a)),
            tuple(sorted(len(A.hom(a, b)) for b in A.objects)),
            tuple(sorted(len(A.hom(b, a)) for b in A.objects)))


def categories_isomorphic(A, B):
    """Backtracking search for an isomorphism of finite categories."""
    if len(A.objects) != len(B.objects) or len(A.morphisms) != len(B.morphisms):
        return False
    prof_a = {a: _hom_profile(A, a) for a in A.objects}
    prof_b = {b: _hom_profile(B, b) for b in B.objects}
    if sorted(prof_a.values()) != sorted(prof_b.values()):
        return False
    objs = list(A.objects)

    def assign_objects(k, omap, used):
        if k == len(objs):
            return assign_morphisms(omap)
        a = objs[k]
        for b in B.objects:
            if b in used or prof_b[b] != prof_a[a]:
                continue
            if any(len(A.hom(a, a2)) != len(B.hom(b, omap[a2]))
                   or len(A.hom(a2, a)) != len(B.hom(omap[a2], b)) for a2 in objs[:k]):
                continue
            omap[a] = b
            if assign_objects(k + 1, omap, used | {b}):
                return True
            del omap[a]
        return False

    def assign_morphisms(omap):
        morphs = sorted(m for m in A.morphisms if m not in set(A.identity.values()))
        mmap = {A.identity[a]: B.identity[omap[a]] for a in objs}

        def consistent(m):
            # every composite whose three entries are already mapped must agree
            for (g, f), h in A.comp.items():
                if m not in (g, f, h):
                    continue
                if g in mmap and f in mmap and h in mmap:
                    if B.comp[(mmap[g], mmap[f])] != mmap[h]:
                        return False
            return True

        def go(k, used):
            if k == len(morphs):
                return True
            m = morphs[k]
            s, t = A.morphisms[m]
            for n in B.hom(omap[s], omap[t]):
                if n in used:
                    continue
                mmap[m] = n
                if consistent(m) and go(k + 1, used | {n}):
                    return True
                del mmap[m]
            return False

        return go(0, set(mmap.values()))

    return assign_objects(0, {}, set())


def cats_equivalent(A, B):
    return categories_isomorphic(skeleton(A), skeleton(B))


# ---------------------------------------------------------------------------
# 2-categories


@dataclass(frozen=True)
class TwoCat:
    objects: tuple
    one_cells: dict      # id -> (src, tgt)
    id1: dict            # object -> 1-cell
    comp1: dict          # (g, f) -> g∘f
    two_cells: dict      # id -> (source 1-cell, target 1-cell)
    id2: dict            # 1-cell -> 2-cell
    vcomp: dict          # (b, a) -> b ∗₁ a
    lwhisk: dict         # (h, a) -> h ∗₀ a
    rwhisk: dict         # (a, h) -> a ∗₀ h
    name: str = ""

    def src(self, f):
        return self.one_cells[f][0]

    def tgt(self, f):
        return self.one_cells[f][1]

    def src2(self, a):
        return self.two_cells[a][0]

    def tgt2(self, a):
        return self.two_cells[a][1]

    def obj_src(self, a):
        return self.src(self.src2(a))

    def obj_tgt(self, a):
        return self.tgt(self.src2(a))

    @cached_property
    def homs(self):
        out = {(x, y): [] for x in self.objects for y in self.objects}
        for f in sorted(self.one_cells):
            out[self.one_cells[f]].append(f)
        return {k: tuple(v) for k, v in out.items()}

    def hom(self, x, y):
        return self.homs[(x, y)]

    @cached_property
    def cells2(self):
        out = {}
        for a in sorted(self.two_cells):
            out.setdefault(self.two_cells[a], []).append(a)
        return {k: tuple(v) for k, v in out.items()}

    def cells(self, f, g):
        """2-cells f ⇒ g."""
        return self.cells2.get((f, g), ())

    @cached_property
    def two_cells_by_hom(self):
        out = {(x, y): [] for x in self.objects for y in self.objects}
        for a in sorted(self.two_cells):
            out[self.one_cells[self.two_cells[a][0]]].append(a)
        return {k: tuple(v) for k, v in out.items()}

    def comp(self, *fs):
        """comp(h, g, f) = h∘g∘f."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.comp1[(g, out)]
        return out

    def v(self, *cells):
        """v(c, b, a) = c ∗₁ b ∗₁ a (a first)."""
        out = cells[-1]
        for b in reversed(cells[:-1]):
            out = self.vcomp[(b, out)]
        return out

    def hcomp(self, b, a):
        """Horizontal composite b ∗₀ a, defined as (b ∗₀ f′) ∗₁ (g ∗₀ a)."""
        g = self.src2(b)
        f2 = self.tgt2(a)
        return self.vcomp[(self.rwhisk[(b, f2)], self.lwhisk[(g, a)])]

    @cached_property
    def inverses(self):
        inv = {}
        for a, (f, g) in self.two_cells.items():
            inv[a] = next((b for b in self.cells(g, f)
                           if self.vcomp[(b, a)] == self.id2[f]
                           and self.vcomp[(a, b)] == self.id2[g]), None)
        return inv

    @cached_property
    def identity_one_cells(self):
        return frozenset(self.id1.values())

    def size(self):
        return len(self.objects), len(self.one_cells), len(self.two_cells)


def hom_cat(C, x, y):
    """The category C(x, y): 1-cells x→y and the 2-cells between them."""
    for o in (x, y):
        if o not in C.id1:
            raise KeyError(f"unknown object {o}")
    objs = C.hom(x, y)
    morph = {a: C.two_cells[a] for a in C.two_cells_by_hom[(x, y)]}
    comp = {}
    for a in morph:
        g = C.tgt2(a)
        for h in objs:
            for b in C.cells(g, h):
                comp[(b, a)] = C.vcomp[(b, a)]
    return FinCat(objs, morph, {f: C.id2[f] for f in objs}, comp,
                  name=f"{C.name}({x},{y})")


def _composable_1(C):
    for f in sorted(C.one_cells):
        y = C.tgt(f)
        for z in C.objects:
            for g in C.hom(y, z):
                yield g, f


def _check_table(C, table, expected, name):
    keys = set(table)
    if keys != expected:
        missing = sorted(expected - keys)
        if missing:
            raise InvalidStructure(f"{name} not total", missing[0])
        raise InvalidStructure(f"{name} defined on non-composable pair", sorted(keys - expected)[0])


def validate_twocat(C):
    """Return ``C`` if every 2-category law holds, else raise InvalidStructure
    naming the first violated law (ids are scanned in sorted order)."""
    objs = set(C.objects)
    if len(objs) != len(C.objects):
        raise InvalidStructure("duplicate object id", [])
    for f in sorted(C.one_cells):
        s, t = C.one_cells[f]
        for o in (s, t):
            if o not in objs:
                raise InvalidStructure("dangling object reference", [f, o])
    for x in sorted(objs):
        i = C.id1.get(x)
        if i is None:
            raise InvalidStructure("missing identity 1-cell", [x])
        if C.one_cells.get(i) != (x, x):
            raise InvalidStructure("identity 1-cell has wrong boundary", [x, i])
    for a in sorted(C.two_cells):
        f, g = C.two_cells[a]
        for h in (f, g):
            if h not in C.one_cells:
                raise InvalidStructure("dangling 1-cell reference", [a, h])
        if C.one_cells[f] != C.one_cells[g]:
            raise InvalidStructure("non-parallel 2-cell boundary", [a, f, g])
    for f in sorted(C.one_cells):
        i = C.id2.get(f)
        if i is None:
            raise InvalidStructure("missing identity 2-cell", [f])
        if C.two_cells.get(i) != (f, f):
            raise InvalidStructure("identity 2-cell has wrong boundary", [f, i])

    # horizontal composition of 1-cells
    pairs1 = list(_composable_1(C))
    _check_table(C, C.comp1, set(pairs1), "comp1")
    for g, f in pairs1:
        h = C.comp1[(g, f)]
        if C.one_cells.get(h) != (C.src(f), C.tgt(g)):
            raise InvalidStructure("comp1 result has wrong boundary", [g, f, h])
    for f in sorted(C.one_cells):
        x, y = C.one_cells[f]
        if C.comp1[(f, C.id1[x])] != f or C.comp1[(C.id1[y], f)] != f:
            raise InvalidStructure("comp1 unit law", [f])
    for g, f in pairs1:
        gf = C.comp1[(g, f)]
        for w in C.objects:
            for h in C.hom(C.tgt(g), w):
                if C.comp1[(h, gf)] != C.comp1[(C.comp1[(h, g)], f)]:
                    raise InvalidStructure("comp1 associativity", [h, g, f])

    # vertical composition
    pairs2 = [(b, a) for a in sorted(C.two_cells) for h in C.hom(*C.one_cells[C.tgt2(a)])
              for b in C.cells(C.tgt2(a), h)]
    _check_table(C, C.vcomp, set(pairs2), "vcomp")
    for b, a in pairs2:
        c = C.vcomp[(b, a)]
        if C.two_cells.get(c) != (C.src2(a), C.tgt2(b)):
            raise InvalidStructure("vcomp result has wrong boundary", [b, a, c])
    for a in sorted(C.two_cells):
        f, g = C.two_cells[a]
        if C.vcomp[(a, C.id2[f])] != a:
            raise InvalidStructure("vcomp unit law", [a, C.id2[f]])
        if C.vcomp[(C.id2[g], a)] != a:
            raise InvalidStructure("vcomp unit law", [C.id2[g], a])
    for b, a in pairs2:
        ba = C.vcomp[(b, a)]
        for h in C.hom(*C.one_cells[C.tgt2(b)]):
            for c in C.cells(C.tgt2(b), h):
                if C.vcomp[(c, ba)] != C.vcomp[(C.vcomp[(c, b)], a)]:
                    raise InvalidStructure("vcomp associativity", [c, b, a])

    # whiskering
    lkeys = {(h, a) for a in C.two_cells for z in C.objects
             for h in C.hom(C.obj_tgt(a), z)}
    rkeys = {(a, h) for a in C.two_cells for w in C.objects
             for h in C.hom(w, C.obj_src(a))}
    _check_table(C, C.lwhisk, lkeys, "lwhisk")
    _check_table(C, C.rwhisk, rkeys, "rwhisk")
    for h, a in sorted(lkeys):
        f, g = C.two_cells[a]
        r = C.lwhisk[(h, a)]
        if C.two_cells.get(r) != (C.comp1[(h, f)], C.comp1[(h, g)]):
            raise InvalidStructure("lwhisk result has wrong boundary", [h, a, r])
    for a, h in sorted(rkeys):
        f, g = C.two_cells[a]
        r = C.rwhisk[(a, h)]
        if C.two_cells.get(r) != (C.comp1[(f, h)], C.comp1[(g, h)]):
            raise InvalidStructure("rwhisk result has wrong boundary", [a, h, r])

    for x in sorted(objs):
        i = C.id1[x]
        for a in sorted(C.two_cells):
            if C.obj_tgt(a) == x and C.lwhisk[(i, a)] != a:
                raise InvalidStructure("lwhisk by identity 1-cell", [i, a])
            if C.obj_src(a) == x and C.rwhisk[(a, i)] != a:
                raise InvalidStructure("rwhisk by identity 1-cell", [a, i])
    for h, a in sorted(lkeys):
        f, g = C.two_cells[a]
        if a == C.id2[f] and C.lwhisk[(h, a)] != C.id2[C.comp1[(h, f)]]:
            raise InvalidStructure("lwhisk of identity 2-cell", [h, a])
        for w in C.objects:
            for h2 in C.hom(C.tgt(h), w):
                if C.lwhisk[(C.comp1[(h2, h)], a)] != C.lwhisk[(h2, C.lwhisk[(h, a)])]:
                    raise InvalidStructure("lwhisk composition", [h2, h, a])
    for a, h in sorted(rkeys):
        f, g = C.two_cells[a]
        if a == C.id2[f] and C.rwhisk[(a, h)] != C.id2[C.comp1[(f, h)]]:
            raise InvalidStructure("rwhisk of identity 2-cell", [a, h])
        for w in C.objects:
            for h2 in C.hom(w, C.src(h)):
                if C.rwhisk[(a, C.comp1[(h, h2)])] != C.rwhisk[(C.rwhisk[(a, h)], h2)]:
                    raise InvalidStructure("rwhisk composition", [a, h, h2])
    for b, a in pairs2:
        ba = C.vcomp[(b, a)]
        x, y = C.one_cells[C.src2(a)]
        for z in C.objects:
            for h in C.hom(y, z):
                if C.lwhisk[(h, ba)] != C.vcomp[(C.lwhisk[(h, b)], C.lwhisk[(h, a)])]:
                    raise InvalidStructure("lwhisk preserves vcomp", [h, b, a])
            for h in C.hom(z, x):
                if C.rwhisk[(ba, h)] != C.vcomp[(C.rwhisk[(b, h)], C.rwhisk[(a, h)])]:
                    raise InvalidStructure("rwhisk preserves vcomp", [b, a, h])
    for a in sorted(C.two_cells):
        x, y = C.one_cells[C.src2(a)]
        for w in C.objects:
            for k in C.hom(w, x):
                ak = C.rwhisk[(a, k)]
                for z in C.objects:
                    for h in C.hom(y, z):
                        if C.lwhisk[(h, ak)] != C.rwhisk[(C.lwhisk[(h, a)], k)]:
                            raise InvalidStructure("whiskering associativity", [h, a, k])

    # interchange
    for a in sorted(C.two_cells):
        f, f2 = C.two_cells[a]
        y = C.tgt(f)
        for z in C.objects:
            for b in C.two_cells_by_hom[(y, z)]:
                g, g2 = C.two_cells[b]
                left = C.vcomp[(C.rwhisk[(b, f2)], C.lwhisk[(g, a)])]
                right = C.vcomp[(C.lwhisk[(g2, a)], C.rwhisk[(b, f)])]
                if left != right:
                    raise InvalidStructure("interchange", [b, a], f"{left} != {right}")
    return C


def dual_op(C):
    """Reverse the 1-cells."""
    return TwoCat(
        objects=C.objects,
        one_cells={f: (t, s) for f, (s, t) in C.one_cells.items()},
        id1=dict(C.id1),
        comp1={(f, g): h for (g, f), h in C.comp1.items()},
        two_cells=dict(C.two_cells),
        id2=dict(C.id2),
        vcomp=dict(C.vcomp),
        lwhisk={(h, a): r for (a, h), r in C.rwhisk.items()},
        rwhisk={(a, h): r for (h, a), r in C.lwhisk.items()},
        name=f"{C.name}^op" if C.name else "",
    )


def dual_co(C):
    """Reverse the 2-cells."""
    return TwoCat(
        objects=C.objects,
        one_cells=dict(C.one_cells),
        id1=dict(C.id1),
        comp1=dict(C.comp1),
        two_cells={a: (g, f) for a, (f, g) in C.two_cells.items()},
        id2=dict(C.id2),
        vcomp={(a, b): c for (b, a), c in C.vcomp.items()},
        lwhisk=dict(C.lwhisk),
        rwhisk=dict(C.rwhisk),
        name=f"{C.name}_co" if C.name else "",
    )


def is_invertible_2cell(C, a):
    if a not in C.two_cells:
        raise KeyError(a)
    return C.inverses[a] is not None


def inverse_2cell(C, a):
    inv = C.inverses[a]
    if inv is None:
        raise ValueError(f"2-cell {a} is not invertible")
    return inv


def isomorphic_1cells(C, f, g):
    return any(C.inverses[a] is not None for a in C.cells(f, g))


def equivalence_inverses(C, f):
    """All g: y→x with g∘f ≅ 1_x and f∘g ≅ 1_y."""
    x, y = C.one_cells[f]
    return [g for g in C.hom(y, x)
            if isomorphic_1cells(C, C.comp1[(g, f)], C.id1[x])
            and isomorphic_1cells(C, C.comp1[(f, g)], C.id1[y])]


def is_equivalence_1cell(C, f):
    if f not in C.one_cells:
        raise KeyError(f)
    return bool(equivalence_inverses(C, f))


def is_biterminal(C, x):
    """Every hom C(z, x) is nonempty and has exactly one 2-cell between any
    two of its objects (so it is equivalent to the terminal category)."""
    if x not in C.objects:
        raise KeyError(x)
    for z in C.objects:
        fs = C.hom(z, x)
        if not fs:
            return False
        if any(len(C.cells(f, g)) != 1 for f in fs for g in fs):
            return False
    return True


def biterminal_failure(C, x):
    for z in C.objects:
        fs = C.hom(z, x)
        if not fs:
            return ("empty hom", z)
        for f in fs:
            for g in fs:
                if len(C.cells(f, g)) != 1:
                    return ("hom not chaotic", z, f, g)
    return None


@dataclass(frozen=True)
class Marking:
    marked: frozenset

    def __contains__(self, f):
        return f in self.marked

    def __iter__(self):
        return iter(sorted(self.marked))

    def __len__(self):
        return len(self.marked)


def validate_marking(C, M):
    for f in sorted(M.marked):
        if f not in C.one_cells:
            raise InvalidStructure("marked cell is not a 1-cell", [f])
    for x in sorted(C.objects):
        if C.id1[x] not in M.marked:
            raise InvalidStructure("marking misses an identity", [C.id1[x]])
    return M


def marking(C, cells=()):
    """The marking consisting of ``cells`` plus every identity."""
    return validate_marking(C, Marking(frozenset(cells) | set(C.id1.values())))


def minimal_marking(C):
    return marking(C)


def maximal_marking(C):
    return marking(C, C.one_cells)
