"""The marked lax slice C^{/F}_E over a diagram, and its cartesian edges.

Objects are E-lax cones (x, α).  A 1-cell (x, α) → (y, β) is a pair (f, μ)
with f: x → y and μ a modification β·f ⇒ α.  A 2-cell (f, μ) ⇒ (f′, μ′) is a
2-cell Ξ: f ⇒ f′ of C with μ′_i ∗₁ (β_i ∗₀ Ξ) = μ_i.  Cells are tabulated
from these descriptions and the result is validated like any other TwoCat.
"""
from dataclasses import dataclass

from .build import CellIndex, assemble, sub_twocat
from .diagrams import (TwoFunctor, enumerate_all_cones, modifications, point_diagram,
                       postcompose_cone)
from .fibration import cartesian_1cell_failure
from .kernel import DEFAULT_CAP, Marking, TwoCat


@dataclass(frozen=True)
class SliceResult:
    total: TwoCat
    proj: TwoFunctor
    marked: Marking
    diagram: TwoFunctor
    marking: frozenset
    index: CellIndex

    def cone(self, obj):
        return self.index.obj[obj]

    def object_of(self, cone):
        return self.index.obj_id[cone]

    def edge(self, e):
        """(f, {i: μ_i}) for a 1-cell of the total 2-category."""
        _, _, f, mu = self.index.one[e]
        return f, dict(mu)


def _one_label(key):
    a, b, f, mu = key
    return f"({f};{','.join(m for _, m in mu)}):<{a.label}>→<{b.label}>"


def _two_label(key):
    e, e2, xi = key
    return f"{xi}:{_one_label(e)}⇒{_one_label(e2)}"


def build_slice(F, E, cap=DEFAULT_CAP, validate=True):
    """C^{/F}_E with its projection to C and the marking by invertible μ."""
    C = F.target
    E = frozenset(E)
    cones = enumerate_all_cones(F, E)
    cap.check("slice", len(cones), 0)
    by_vertex = {}
    for c in cones:
        by_vertex.setdefault(c.vertex, []).append(c)

    ones = {}
    for b in cones:
        for f in sorted(f for f in C.one_cells if C.tgt(f) == b.vertex):
            bf = postcompose_cone(F, b, f)
            for a in by_vertex.get(C.src(f), ()):
                for mu in modifications(F, bf, a):
                    ones[(a, b, f, tuple(sorted(mu.items())))] = (a, b)
                    cap.check("slice", len(cones), len(ones))

    twos = {}
    hom_of = {}
    for e in ones:
        hom_of.setdefault(ones[e], []).append(e)
    for (a, b), es in hom_of.items():
        for e in es:
            f, mu = e[2], dict(e[3])
            for e2 in es:
                f2, mu2 = e2[2], dict(e2[3])
                for xi in C.cells(f, f2):
                    if all(C.vcomp[(mu2[i], C.lwhisk[(g, xi)])] == mu[i] for i, g in b.legs):
                        twos[(e, e2, xi)] = (e, e2)

    def id1(a):
        return (a, a, C.id1[a.vertex], tuple((i, C.id2[g]) for i, g in a.legs))

    def comp1(e2, e1):
        a, b, f, mu = e1
        _, c, g, nu = e2
        nu = dict(nu)
        return (a, c, C.comp1[(g, f)],
                tuple((i, C.vcomp[(m, C.rwhisk[(nu[i], f)])]) for i, m in mu))

    def id2(e):
        return (e, e, C.id2[e[2]])

    def vcomp(t2, t1):
        return (t1[0], t2[1], C.vcomp[(t2[2], t1[2])])

    def lwhisk(h, t):
        return (comp1(h, t[0]), comp1(h, t[1]), C.lwhisk[(h[2], t[2])])

    def rwhisk(t, h):
        return (comp1(t[0], h), comp1(t[1], h), C.rwhisk[(t[2], h[2])])

    total, index = assemble(
        cones, ones, twos, id1=id1, comp1=comp1, id2=id2, vcomp=vcomp,
        lwhisk=lwhisk, rwhisk=rwhisk, label_obj=lambda c: c.label,
        label_one=_one_label, label_two=_two_label,
        name=f"slice({F.name or 'F'})", validate=validate)
    proj = TwoFunctor(
        total, C,
        {o: index.obj[o].vertex for o in total.objects},
        {e: index.one[e][2] for e in total.one_cells},
        {t: index.two[t][2] for t in total.two_cells}, name="p")
    marked = Marking(frozenset(
        e for e in total.one_cells
        if all(C.inverses[m] is not None for _, m in index.one[e][3])))
    return SliceResult(total, proj, marked, F, E, index)


def build_object_slice(C, c, cap=DEFAULT_CAP, validate=True):
    """tr(C/c): the slice over the point diagram at c."""
    F = point_diagram(C, c)
    return build_slice(F, {"1_*"}, cap=cap, validate=validate)


def is_cartesian_char(S, e):
    """Every component μ_i of the edge is invertible."""
    if e not in S.total.one_cells:
        raise KeyError(e)
    return e in S.marked


def is_cartesian_oracle(S, e):
    """Exhaustive unique-lifting check for the projection."""
    if e not in S.total.one_cells:
        raise KeyError(e)
    return cartesian_1cell_failure(S.proj, e) is None


def cartesian_edges(S):
    return sorted(S.marked)


def cart_subcat(S):
    """Same objects; each hom restricted to the full subcategory on cartesian
    edges.  Closure under composition is checked on the way."""
    return sub_twocat(S.total, S.marked.marked, name=f"{S.total.name}_cart")

