"""E-bilimits decided three ways, and the 2-category of modified cones.

1. ``is_bilimit``: λ·(−): C(x, ℓ) → [J, C]_E(Δx, F) is an equivalence of
   categories for every x.
2. ``is_limiting_bifinal``: the slice C^{/F} has a contraction centred at
   (ℓ, λ) that is a contraction for the marking by cartesian edges.
3. ``is_biequivalence`` of the projection r from modified cones to C^{/F}.
"""
from dataclasses import dataclass

from .build import CellIndex, assemble
from .diagrams import (Cone, TwoFunctor, cone_category, cone_failure,
                       enumerate_cones, lambda_star)
from .finality import TheoremViolation, find_contraction, is_M_contraction
from .kernel import (DEFAULT_CAP, TRUE, Functor1, InvalidStructure, TwoCat, Verdict,
                     functor_equivalence_failure, hom_cat, is_biterminal,
                     is_equivalence_1cell)
from .slice import SliceResult, build_object_slice, build_slice, cart_subcat


def _check_cone(F, E, lam):
    bad = cone_failure(F, E, lam)
    if bad:
        raise InvalidStructure(f"not an E-lax cone: {bad[0]}", bad[1:])


def is_bilimit(F, E, ell, lam):
    """TRUE iff λ∗ is an equivalence at every vertex; else the first failing
    vertex with the failing clause."""
    E = frozenset(E)
    _check_cone(F, E, lam)
    if lam.vertex != ell:
        raise InvalidStructure("cone vertex differs from ℓ", [lam.vertex, ell])
    for x in sorted(F.target.objects):
        u = lambda_star(F, E, ell, lam, x, cone_category(F, E, x))
        bad = functor_equivalence_failure(u)
        if bad:
            return Verdict.fail(bad[0], x, *bad[1:])
    return TRUE


def is_limiting_bifinal(F, E, ell, lam, S=None, cap=DEFAULT_CAP):
    """TRUE iff the slice has a contraction centred at (ℓ, λ) whose
    components are cartesian and whose 2-cells at cartesian edges are
    invertible."""
    E = frozenset(E)
    _check_cone(F, E, lam)
    S = build_slice(F, E, cap=cap) if S is None else S
    center = S.object_of(lam)
    H, why = find_contraction(S.total, center)
    if H is None:
        return Verdict.fail("no contraction: " + why.reason, *why.witness)
    v = is_M_contraction(S.total, S.marked, H)
    if not v:
        return Verdict.fail("contraction not limiting: " + v.reason, *v.witness)
    return TRUE


# ---------------------------------------------------------------------------
# Biequivalences


def hom_functor(u, x, y):
    A, B = u.source, u.target
    H = hom_cat(A, x, y)
    K = hom_cat(B, u.on_objects[x], u.on_objects[y])
    return Functor1(H, K, {f: u.on_one[f] for f in H.objects},
                    {a: u.on_two[a] for a in H.morphisms})


def is_biequivalence(u):
    """Every hom functor is an equivalence and every target object receives
    an equivalence 1-cell from the image of some source object."""
    A, B = u.source, u.target
    for x in sorted(A.objects):
        for y in sorted(A.objects):
            bad = functor_equivalence_failure(hom_functor(u, x, y))
            if bad:
                return Verdict.fail(f"hom functor {bad[0]}", x, y)
    images = sorted({u.on_objects[c] for c in A.objects})
    for z in sorted(B.objects):
        if not any(is_equivalence_1cell(B, f) for w in images for f in B.hom(w, z)):
            return Verdict.fail("not essentially surjective", z)
    return TRUE


# ---------------------------------------------------------------------------
# Modified cones


@dataclass(frozen=True)
class ModifiedConesResult:
    total: TwoCat
    q: TwoFunctor
    r: TwoFunctor
    index: CellIndex
    slice: SliceResult
    point_slice: SliceResult


def build_modified_cones(F, E, ell, lam, S=None, cap=DEFAULT_CAP):
    """Objects (x, h, α, σ) with σ: λ·h ⇒ α invertible; 1-cells (f, ζ, μ) with
    ζ: g∘f ⇒ h and μ_i ∗₁ (τ_i ∗₀ f) = σ_i ∗₁ (λ_i ∗₀ ζ); 2-cells Ξ: f ⇒ f′
    compatible with both ζ and μ.  Returned with its projections q to
    tr(C/ℓ) and r to C^{/F}."""
    C = F.target
    E = frozenset(E)
    _check_cone(F, E, lam)
    S = build_slice(F, E, cap=cap) if S is None else S
    P = build_object_slice(C, ell, cap=cap)
    lam_id = S.object_of(lam)

    objects = []   # (x, h, alpha, sigma)
    for e in sorted(S.total.one_cells):
        if S.total.one_cells[e][1] != lam_id or e not in S.marked:
            continue
        alpha, _, h, sigma = S.index.one[e]
        objects.append((alpha.vertex, h, alpha, sigma))
    cap.check("modified cones", len(objects), 0)
    lam_legs = lam.leg_map

    def mu_formula(src, tgt, f, zeta):
        # μ_i = σ_i ∗₁ (λ_i ∗₀ ζ) ∗₁ (τ_i⁻¹ ∗₀ f)
        sigma, tau = dict(src[3]), dict(tgt[3])
        return tuple((i, C.v(sigma[i], C.lwhisk[(lam_legs[i], zeta)],
                             C.rwhisk[(C.inverses[tau[i]], f)]))
                     for i in sorted(sigma))

    slice_edges = {}
    for e, (a, b) in S.total.one_cells.items():
        slice_edges.setdefault((a, b), []).append(S.index.one[e])

    ones = {}
    for A in objects:
        x, h, alpha, sigma = A
        for B in objects:
            y, g, beta, tau = B
            cands = slice_edges.get((S.object_of(alpha), S.object_of(beta)), ())
            for (_, _, f, mu) in cands:
                for zeta in C.cells(C.comp1[(g, f)], h):
                    md, sd, td = dict(mu), dict(sigma), dict(tau)
                    if all(C.vcomp[(md[i], C.rwhisk[(td[i], f)])]
                           == C.vcomp[(sd[i], C.lwhisk[(lam_legs[i], zeta)])] for i in md):
                        if mu != mu_formula(A, B, f, zeta):
                            raise InvalidStructure("μ differs from its determined value",
                                                   [f, zeta])
                        ones[(A, B, f, zeta, mu)] = (A, B)
                        cap.check("modified cones", len(objects), len(ones))

    twos = {}
    by_hom = {}
    for e, ab in ones.items():
        by_hom.setdefault(ab, []).append(e)
    for (A, B), es in by_hom.items():
        g, beta = B[1], B[2]
        for e in es:
            for e2 in es:
                f, zeta, mu = e[2], e[3], dict(e[4])
                f2, zeta2, mu2 = e2[2], e2[3], dict(e2[4])
                for xi in C.cells(f, f2):
                    if C.vcomp[(zeta2, C.lwhisk[(g, xi)])] != zeta:
                        continue
                    if all(C.vcomp[(mu2[i], C.lwhisk[(bl, xi)])] == mu[i] for i, bl in beta.legs):
                        twos[(e, e2, xi)] = (e, e2)

    def id1(A):
        x, h, alpha, _ = A
        return (A, A, C.id1[x], C.id2[h], tuple((i, C.id2[a]) for i, a in alpha.legs))

    def comp1(e2, e1):
        A, _, f, zeta, mu = e1
        _, D, g, zeta2, mu2 = e2
        m2 = dict(mu2)
        return (A, D, C.comp1[(g, f)], C.vcomp[(zeta, C.rwhisk[(zeta2, f)])],
                tuple((i, C.vcomp[(m, C.rwhisk[(m2[i], f)])]) for i, m in mu))

    def id2(e):
        return (e, e, C.id2[e[2]])

    def vcomp(t2, t1):
        return (t1[0], t2[1], C.vcomp[(t2[2], t1[2])])

    def lwhisk(h, t):
        return (comp1(h, t[0]), comp1(h, t[1]), C.lwhisk[(h[2], t[2])])

    def rwhisk(t, h):
        return (comp1(t[0], h), comp1(t[1], h), C.rwhisk[(t[2], h[2])])

    def lab_obj(A):
        x, h, alpha, sigma = A
        return f"{h};{','.join(s for _, s in sigma)}:<{alpha.label}>"

    def lab_one(e):
        A, B, f, zeta, mu = e
        return f"({f};{zeta};{','.join(m for _, m in mu)}):[{lab_obj(A)}]→[{lab_obj(B)}]"

    def lab_two(t):
        return f"{t[2]}:{lab_one(t[0])}⇒{lab_one(t[1])}"

    total, index = assemble(objects, ones, twos, id1=id1, comp1=comp1, id2=id2,
                            vcomp=vcomp, lwhisk=lwhisk, rwhisk=rwhisk,
                            label_obj=lab_obj, label_one=lab_one, label_two=lab_two,
                            name="modified cones")

    def pcone(x, h):
        return Cone.make(x, {"*": h}, {"1_*": C.id2[h]})

    def q_one(e):
        A, B, f, zeta, _ = e
        return P.index.one_id[(pcone(A[0], A[1]), pcone(B[0], B[1]), f, (("*", zeta),))]

    def r_one(e):
        A, B, f, _, mu = e
        return S.index.one_id[(A[2], B[2], f, mu)]

    q = TwoFunctor(
        total, P.total,
        {o: P.index.obj_id[pcone(*index.obj[o][:2])] for o in total.objects},
        {e: q_one(index.one[e]) for e in total.one_cells},
        {t: P.index.two_id[(P.index.one[q_one(index.two[t][0])],
                            P.index.one[q_one(index.two[t][1])], index.two[t][2])]
         for t in total.two_cells}, name="q")
    r = TwoFunctor(
        total, S.total,
        {o: S.index.obj_id[index.obj[o][2]] for o in total.objects},
        {e: r_one(index.one[e]) for e in total.one_cells},
        {t: S.index.two_id[(S.index.one[r_one(index.two[t][0])],
                            S.index.one[r_one(index.two[t][1])], index.two[t][2])]
         for t in total.two_cells}, name="r")
    return ModifiedConesResult(total, q, r, index, S, P)


# ---------------------------------------------------------------------------
# The main harness


@dataclass(frozen=True)
class TheoremVerdict:
    bilimit: bool
    limiting_bifinal: bool
    modified_projection_biequiv: bool
    agree: bool
    witnesses: dict


def theorem_check(F, E, ell, lam, cap=DEFAULT_CAP, strict=True):
    """Decide the three characterizations and compare them.  A disagreement
    raises TheoremViolation (with ``strict``) carrying all witnesses."""
    E = frozenset(E)
    S = build_slice(F, E, cap=cap)
    b = is_bilimit(F, E, ell, lam)
    c = is_limiting_bifinal(F, E, ell, lam, S=S, cap=cap)
    M = build_modified_cones(F, E, ell, lam, S=S, cap=cap)
    r = is_biequivalence(M.r)
    w = {name: (v.reason, v.witness) for name, v in
         (("bilimit", b), ("limiting_bifinal", c), ("modified_projection_biequiv", r))
         if not v}
    agree = bool(b) == bool(c) == bool(r)
    if strict and not agree:
        raise TheoremViolation(f"verdicts disagree: {bool(b)}, {bool(c)}, {bool(r)}; {w}")
    return TheoremVerdict(bool(b), bool(c), bool(r), agree, w)


def q_always_biequivalence_check(F, E, ell, lam, cap=DEFAULT_CAP):
    M = build_modified_cones(F, E, ell, lam, cap=cap)
    return is_biequivalence(M.q)


def biterminal_in_cart_check(F, E, ell, lam, cap=DEFAULT_CAP):
    """None when (ℓ, λ) is not a bilimit (nothing to check), else whether
    (ℓ, λ) is biterminal among cartesian edges."""
    E = frozenset(E)
    if not is_bilimit(F, E, ell, lam):
        return None
    S = build_slice(F, E, cap=cap)
    return is_biterminal(cart_subcat(S), S.object_of(lam))


def bilimit_cones(F, E):
    """All (ℓ, λ) that are E-bilimits of F."""
    E = frozenset(E)
    return [lam for x in sorted(F.target.objects) for lam in enumerate_cones(F, E, x)
            if is_bilimit(F, E, x, lam)]

