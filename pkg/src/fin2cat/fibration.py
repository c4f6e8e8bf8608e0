"""Cartesian cells and fibrations, decided by exhaustive lifting checks."""
from .kernel import TRUE, Verdict


def cartesian_1cell_failure(p, f):
    """None if the 1-cell ``f`` of the total 2-category is p-cartesian.

    That is: for every object a, whiskering with f induces a bijection from
    E(a, x) onto the pullback of E(a, y) and B(pa, px) over B(pa, py), both on
    objects and on morphisms.
    """
    E, B = p.source, p.target
    x, y = E.one_cells[f]
    pf = p.on_one[f]
    for a in sorted(E.objects):
        pa = p.on_objects[a]
        lifts = {}
        for kb in E.hom(a, x):
            lifts.setdefault((E.comp1[(f, kb)], p.on_one[kb]), []).append(kb)
        for g in E.hom(a, y):
            for k in B.hom(pa, p.on_objects[x]):
                if B.comp1[(pf, k)] != p.on_one[g]:
                    continue
                n = len(lifts.get((g, k), ()))
                if n != 1:
                    return ("1-cell lift " + ("missing" if n == 0 else "not unique"), a, g, k)
        cells = {}
        for b in E.two_cells_by_hom[(a, x)]:
            cells.setdefault((E.lwhisk[(f, b)], p.on_two[b]), []).append(b)
        for al in E.two_cells_by_hom[(a, y)]:
            for t in B.two_cells_by_hom[(pa, p.on_objects[x])]:
                if B.lwhisk[(pf, t)] != p.on_two[al]:
                    continue
                n = len(cells.get((al, t), ()))
                if n != 1:
                    return ("2-cell lift " + ("missing" if n == 0 else "not unique"), a, al, t)
    return None


def is_cartesian_1cell(p, f):
    bad = cartesian_1cell_failure(p, f)
    return TRUE if bad is None else Verdict.fail(*bad)


def cartesian_2cell(p, al):
    """Whether the 2-cell ``al`` is cartesian for the hom functor
    p_{x,y}: E(x, y) → B(px, py)."""
    E, B = p.source, p.target
    h0, h = E.two_cells[al]
    x, y = E.one_cells[h]
    for g in E.hom(x, y):
        by = {}
        for b in E.cells(g, h0):
            by.setdefault((E.vcomp[(al, b)], p.on_two[b]), []).append(b)
        for c in E.cells(g, h):
            for t in B.cells(p.on_one[g], p.on_one[h0]):
                if B.vcomp[(p.on_two[al], t)] != p.on_two[c]:
                    continue
                if len(by.get((c, t), ())) != 1:
                    return False
    return True


def verify_2fibration(p, one_fibration=False):
    """Check the fibration clauses exhaustively.

    (1) cartesian lifts of 1-cells exist; (2) every hom functor is a
    cartesian fibration of categories; (3) cartesian 2-cells are closed under
    horizontal composition.  With ``one_fibration`` also (4) every 2-cell is
    cartesian.
    """
    E, B = p.source, p.target
    lifted = {(E.one_cells[f][1], p.on_one[f]) for f in E.one_cells
              if cartesian_1cell_failure(p, f) is None}
    for e in sorted(E.objects):
        pe = p.on_objects[e]
        for b in sorted(B.objects):
            for k in B.hom(b, pe):
                if (e, k) not in lifted:
                    return Verdict.fail("no cartesian lift of 1-cell", e, k)
    cart2 = {a for a in E.two_cells if cartesian_2cell(p, a)}
    for h, (x, y) in sorted(E.one_cells.items()):
        have = {p.on_two[a] for g in E.hom(x, y) for a in E.cells(g, h) if a in cart2}
        for g0 in B.hom(p.on_objects[x], p.on_objects[y]):
            for t in B.cells(g0, p.on_one[h]):
                if t not in have:
                    return Verdict.fail("no cartesian lift of 2-cell", h, t)
    for (b, a) in _composable_2cells(E):
        if a in cart2 and b in cart2 and E.hcomp(b, a) not in cart2:
            return Verdict.fail("cartesian 2-cells not closed under horizontal composition", b, a)
    if one_fibration:
        for a in sorted(E.two_cells):
            if a not in cart2:
                return Verdict.fail("2-cell not cartesian", a)
    return TRUE


def _composable_2cells(E):
    for a in sorted(E.two_cells):
        y = E.obj_tgt(a)
        for z in E.objects:
            for b in E.two_cells_by_hom[(y, z)]:
                yield b, a


def verify_1fibration(p):
    return verify_2fibration(p, one_fibration=True)
