"""Brute-force oracles that share no code with the library's decision procedures."""
from itertools import product


def one_cones(C, F, y):
    """Strict 1-categorical cones over F with vertex y, read off comp1 alone."""
    J = F.source
    objs = sorted(J.objects)
    homs = [[f for f, st in C.one_cells.items() if st == (y, F.on_objects[i])] for i in objs]
    out = []
    for legs in product(*homs):
        c = dict(zip(objs, legs))
        if all(C.comp1[(F.on_one[k], c[s])] == c[t] for k, (s, t) in J.one_cells.items()):
            out.append(c)
    return out


def is_one_limit(C, F, ell, legs):
    """Every cone factors through (ell, legs) by exactly one 1-cell."""
    for y in C.objects:
        through = [f for f, st in C.one_cells.items() if st == (y, ell)]
        images = [{i: C.comp1[(g, f)] for i, g in legs.items()} for f in through]
        cones = one_cones(C, F, y)
        if len(images) != len(cones):
            return False
        if sorted(map(sorted_items, images)) != sorted(map(sorted_items, cones)):
            return False
    return True


def sorted_items(d):
    return tuple(sorted(d.items()))


def naive_cones(F, E, x):
    """Every (legs, cells) assignment, filtered by the cone equations."""
    J, C = F.source, F.target
    objs = sorted(J.objects)
    ks = sorted(J.one_cells)
    out = []
    for legs in product(*[[f for f, st in C.one_cells.items() if st == (x, F.on_objects[i])]
                          for i in objs]):
        a = dict(zip(objs, legs))
        cell_choices = []
        for k in ks:
            i, j = J.one_cells[k]
            src = C.comp1[(F.on_one[k], a[i])]
            cell_choices.append([c for c, st in C.two_cells.items() if st == (src, a[j])])
        for cells in product(*cell_choices):
            c = dict(zip(ks, cells))
            if _is_cone(F, E, a, c):
                out.append((sorted_items(a), sorted_items(c)))
    return sorted(out)


def _is_cone(F, E, a, c):
    J, C = F.source, F.target
    for i in J.objects:
        if c[J.id1[i]] != C.id2[a[i]]:
            return False
    for k in E:
        if not any(C.vcomp.get((b, c[k])) == C.id2[C.two_cells[c[k]][0]] and
                   C.vcomp.get((c[k], b)) == C.id2[C.two_cells[c[k]][1]]
                   for b in C.two_cells):
            return False
    for (l, k), lk in J.comp1.items():
        if c[lk] != C.vcomp[(c[l], C.lwhisk[(F.on_one[l], c[k])])]:
            return False
    for d, (k, k2) in J.two_cells.items():
        i = J.one_cells[k][0]
        if c[k] != C.vcomp[(c[k2], C.rwhisk[(F.on_two[d], a[i])])]:
            return False
    return True


def naive_modifications(F, source, target):
    J, C = F.source, F.target
    objs = sorted(J.objects)
    sl, tl = dict(source.legs), dict(target.legs)
    sc, tc = dict(source.cells), dict(target.cells)
    out = []
    for comps in product(*[[c for c, st in C.two_cells.items() if st == (sl[i], tl[i])]
                           for i in objs]):
        m = dict(zip(objs, comps))
        if all(C.vcomp[(tc[k], C.lwhisk[(F.on_one[k], m[i])])] == C.vcomp[(m[j], sc[k])]
               for k, (i, j) in J.one_cells.items()):
            out.append(sorted_items(m))
    return sorted(out)


def hom_has_terminal(C, a, c, want=None):
    """Some 1-cell a → c (``want`` if given) receives exactly one 2-cell from each."""
    fs = [f for f, st in C.one_cells.items() if st == (a, c)]
    cands = [want] if want is not None else fs
    return any(all(sum(1 for t in C.two_cells.values() if t == (g, f)) == 1 for g in fs)
               for f in cands)


def terminal_hom_condition(C, c):
    return all(hom_has_terminal(C, a, c) for a in C.objects) and \
        hom_has_terminal(C, c, c, C.id1[c])


def interchange_holds(C):
    """(β∗₀f′)∗₁(g∗₀α) = (g′∗₀α)∗₁(β∗₀f) for every horizontally composable pair."""
    for a, (f, f2) in C.two_cells.items():
        x, y = C.one_cells[f]
        for b, (g, g2) in C.two_cells.items():
            if C.one_cells[g][0] != y:
                continue
            lhs = C.vcomp[(C.rwhisk[(b, f2)], C.lwhisk[(g, a)])]
            rhs = C.vcomp[(C.lwhisk[(g2, a)], C.rwhisk[(b, f)])]
            if lhs != rhs:
                return False
    return True
