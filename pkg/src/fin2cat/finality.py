"""Contractions, marked contractions and finality of an object.

A contraction with center c is stored as its components: a 1-cell
``gamma1[a]: a → c`` for every object and a 2-cell
``gamma2[f]: γ_y∘f ⇒ γ_x`` for every 1-cell f: x → y.
"""
from dataclasses import dataclass

from .kernel import TRUE, Verdict, hom_cat, terminal_objects


class TheoremViolation(AssertionError):
    """Two characterizations that must agree did not.  Always a bug."""


@dataclass(frozen=True)
class Contraction:
    center: str
    gamma1: dict
    gamma2: dict


def verify_contraction(C, H):
    """TRUE if H satisfies the contraction conditions, else the first failure."""
    c = H.center
    if c not in C.id1:
        return Verdict.fail("unknown center", c)
    for a in sorted(C.objects):
        g = H.gamma1.get(a)
        if C.one_cells.get(g) != (a, c):
            return Verdict.fail("bad 1-cell component", a)
    for f in sorted(C.one_cells):
        x, y = C.one_cells[f]
        want = (C.comp1[(H.gamma1[y], f)], H.gamma1[x])
        if C.two_cells.get(H.gamma2.get(f)) != want:
            return Verdict.fail("bad 2-cell component", f)
    if H.gamma1[c] != C.id1[c]:
        return Verdict.fail("center component is not the identity", c)
    for a in sorted(C.objects):
        g = H.gamma1[a]
        if H.gamma2[g] != C.id2[g]:
            return Verdict.fail("γ of a component is not an identity", a)
    for (g, f), gf in sorted(C.comp1.items()):
        if H.gamma2[gf] != C.vcomp[(H.gamma2[f], C.rwhisk[(H.gamma2[g], f)])]:
            return Verdict.fail("composition", g, f)
    for al in sorted(C.two_cells):
        f, g = C.two_cells[al]
        y = C.tgt(f)
        if H.gamma2[f] != C.vcomp[(H.gamma2[g], C.lwhisk[(H.gamma1[y], al)])]:
            return Verdict.fail("2-cell compatibility", al)
    return TRUE


def terminal_homs(C, c):
    """Terminal objects of C(a, c) for every a."""
    return {a: terminal_objects(hom_cat(C, a, c)) for a in sorted(C.objects)}


def find_contraction(C, c, prescribed=None):
    """Return (Contraction or None, Verdict).

    γ_a is the prescribed 1-cell when given, else the least terminal object
    of C(a, c) (γ_c = 1_c); γ_g is the unique 2-cell γ_b∘g ⇒ γ_a."""
    prescribed = dict(prescribed or {})
    if c not in C.id1:
        raise KeyError(c)
    term = terminal_homs(C, c)
    if C.id1[c] not in term[c]:
        return None, Verdict.fail("identity of the center is not terminal", c)
    if prescribed.get(c, C.id1[c]) != C.id1[c]:
        return None, Verdict.fail("prescribed component at the center is not the identity", c)
    g1 = {}
    for a in sorted(C.objects):
        if a == c:
            g1[a] = C.id1[c]
        elif a in prescribed:
            if prescribed[a] not in term[a]:
                return None, Verdict.fail("prescribed 1-cell is not terminal", a, prescribed[a])
            g1[a] = prescribed[a]
        elif term[a]:
            g1[a] = term[a][0]
        else:
            return None, Verdict.fail("no terminal object in hom", a, c)
    g2 = {}
    for f, (x, y) in sorted(C.one_cells.items()):
        (g2[f],) = C.cells(C.comp1[(g1[y], f)], g1[x])
    return Contraction(c, g1, g2), TRUE


def is_M_contraction(C, M, H):
    for a in sorted(C.objects):
        if H.gamma1[a] not in M:
            return Verdict.fail("component not marked", a)
    for f in sorted(M):
        if C.inverses[H.gamma2[f]] is None:
            return Verdict.fail("2-cell at a marked edge not invertible", f)
    return TRUE


def is_quasi_terminal(C, c):
    for a, ts in terminal_homs(C, c).items():
        if not ts:
            return Verdict.fail("no terminal object in hom", a, c)
    return TRUE


def is_pre_final(C, c):
    q = is_quasi_terminal(C, c)
    if not q:
        return q
    if C.id1[c] not in terminal_objects(hom_cat(C, c, c)):
        return Verdict.fail("identity of c is not terminal", c)
    return TRUE


def is_M_final(C, M, c):
    v = is_pre_final(C, c)
    if not v:
        return v
    for a in sorted(C.objects):
        if not any(f in M for f in C.hom(a, c)):
            return Verdict.fail("no marked edge into c", a)
    term = terminal_homs(C, c)
    for f in sorted(M):
        a, b = C.one_cells[f]
        for t in term[b]:
            if C.comp1[(t, f)] not in term[a]:
                return Verdict.fail("precomposition does not preserve terminal objects", f, t)
    return TRUE


def m_contraction_with(C, M, c, choices):
    """An M-contraction extending ``choices`` if one exists, else None.

    Components not prescribed are the least marked terminal edge; since
    terminal objects are unique up to isomorphism the M-condition does not
    depend on that choice."""
    term = terminal_homs(C, c)
    full = dict(choices)
    for a in sorted(C.objects):
        if a not in full:
            marked = [t for t in term[a] if t in M]
            if not marked:
                return None
            full[a] = marked[0]
    H, ok = find_contraction(C, c, full)
    if H is None or not is_M_contraction(C, M, H):
        return None
    return H


@dataclass(frozen=True)
class FinalityReport:
    m_final: bool
    m_bifinal: bool
    agree: bool
    witness: tuple = ()


def point_finality_report(C, M, c, choices, strict=True):
    """Compare M-finality of c with existence of an M-contraction through the
    given marked choices a ↦ f_a.  Objects left out of ``choices`` get the
    least marked terminal edge.  Finality of {c} → (C, M) over all
    2-functors is not decided directly; these two characterizations stand in
    for it."""
    choices = dict(choices)
    for a, f in choices.items():
        if f not in M or C.one_cells.get(f) != (a, c):
            raise ValueError(f"choice at {a} is not a marked edge into {c}")
    if choices.get(c, C.id1[c]) != C.id1[c]:
        raise ValueError("choice at the center must be the identity")
    fin = is_M_final(C, M, c)
    H = m_contraction_with(C, M, c, choices)
    agree = bool(fin) == (H is not None)
    if strict and not agree:
        raise TheoremViolation(f"M-final={bool(fin)} but M-contraction={H is not None} at {c}")
    return FinalityReport(bool(fin), H is not None, agree, fin.witness)
