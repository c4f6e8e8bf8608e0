"""Helpers that produce fully tabulated TwoCats.

``make_twocat`` is for hand-written examples: identities and every composite
involving an identity are filled in, so only the non-trivial entries need to
be listed.  ``assemble`` tabulates a 2-category whose cells are structured
keys (tuples) and whose compositions are given as functions on keys; it is
what the slice, cone and elements constructions use.
"""
from dataclasses import dataclass

from .kernel import InvalidStructure, TwoCat, validate_twocat


def id1_name(x):
    return f"1_{x}"


def id2_name(f):
    return f"1_{f}"


def make_twocat(objects, one_cells=None, comp=None, two_cells=None, vcomp=None,
                lwhisk=None, rwhisk=None, name="", validate=True):
    objects = tuple(objects)
    id1 = {x: id1_name(x) for x in objects}
    cells1 = {id1[x]: (x, x) for x in objects}
    cells1.update({f: tuple(st) for f, st in (one_cells or {}).items()})

    comp1 = {}
    for f, (x, y) in cells1.items():
        comp1[(f, id1[x])] = f
        comp1[(id1[y], f)] = f
    for (g, f), h in (comp or {}).items():
        comp1[(g, f)] = h

    id2 = {f: id2_name(f) for f in cells1}
    cells2 = {id2[f]: (f, f) for f in cells1}
    cells2.update({a: tuple(fg) for a, fg in (two_cells or {}).items()})

    vc = {}
    for a, (f, g) in cells2.items():
        vc[(a, id2[f])] = a
        vc[(id2[g], a)] = a
    vc.update(vcomp or {})

    lw, rw = {}, {}
    for a, (f, g) in cells2.items():
        x, y = cells1[f]
        lw[(id1[y], a)] = a
        rw[(a, id1[x])] = a
    for f, (x, y) in cells1.items():
        for h, (s, t) in cells1.items():
            if s == y and (h, f) in comp1:
                lw[(h, id2[f])] = id2[comp1[(h, f)]]
            if t == x and (f, h) in comp1:
                rw[(id2[f], h)] = id2[comp1[(f, h)]]
    lw.update(lwhisk or {})
    rw.update(rwhisk or {})

    C = TwoCat(objects, cells1, id1, comp1, cells2, id2, vc, lw, rw, name=name)
    return validate_twocat(C) if validate else C


@dataclass(frozen=True)
class CellIndex:
    """Maps between the string ids of an assembled TwoCat and its keys."""

    obj: dict      # id -> key
    one: dict
    two: dict
    obj_id: dict   # key -> id
    one_id: dict
    two_id: dict


def _ids(keys, label, what):
    ids = {k: label(k) for k in keys}
    if len(set(ids.values())) != len(ids):
        seen = {}
        for k, i in ids.items():
            if i in seen:
                raise InvalidStructure(f"{what} label collision", [i])
            seen[i] = k
    return ids


def assemble(objects, one_cells, two_cells, *, id1, comp1, id2, vcomp, lwhisk,
             rwhisk, label_obj=str, label_one=str, label_two=str, name="",
             validate=True):
    """Tabulate a 2-category from keyed cells.

    ``one_cells`` maps key -> (src key, tgt key); ``two_cells`` maps key ->
    (src 1-cell key, tgt 1-cell key).  The composition callables take and
    return keys.  A result key that is not a cell raises InvalidStructure.
    """
    objects = list(objects)
    oid = _ids(objects, label_obj, "object")
    fid = _ids(one_cells, label_one, "1-cell")
    aid = _ids(two_cells, label_two, "2-cell")

    def look(table, key, what, args):
        try:
            return table[key]
        except KeyError:
            raise InvalidStructure(f"{what} not closed", args) from None

    out_of = {}
    into = {}
    for f, (s, t) in one_cells.items():
        out_of.setdefault(s, []).append(f)
        into.setdefault(t, []).append(f)
    cells_between = {}
    for a, (f, g) in two_cells.items():
        cells_between.setdefault(f, []).append(a)

    T_id1 = {oid[x]: look(fid, id1(x), "identity 1-cell", [oid[x]]) for x in objects}
    T_comp1 = {}
    for f, (x, y) in one_cells.items():
        for g in out_of.get(y, ()):
            T_comp1[(fid[g], fid[f])] = look(fid, comp1(g, f), "comp1", [fid[g], fid[f]])
    T_id2 = {fid[f]: look(aid, id2(f), "identity 2-cell", [fid[f]]) for f in one_cells}
    T_vcomp = {}
    for a, (f, g) in two_cells.items():
        for b in cells_between.get(g, ()):
            T_vcomp[(aid[b], aid[a])] = look(aid, vcomp(b, a), "vcomp", [aid[b], aid[a]])
    T_l, T_r = {}, {}
    for a, (f, g) in two_cells.items():
        x, y = one_cells[f]
        for h in out_of.get(y, ()):
            T_l[(fid[h], aid[a])] = look(aid, lwhisk(h, a), "lwhisk", [fid[h], aid[a]])
        for h in into.get(x, ()):
            T_r[(aid[a], fid[h])] = look(aid, rwhisk(a, h), "rwhisk", [aid[a], fid[h]])

    C = TwoCat(
        objects=tuple(sorted(oid.values())),
        one_cells={fid[f]: (oid[s], oid[t]) for f, (s, t) in one_cells.items()},
        id1=T_id1, comp1=T_comp1,
        two_cells={aid[a]: (fid[f], fid[g]) for a, (f, g) in two_cells.items()},
        id2=T_id2, vcomp=T_vcomp, lwhisk=T_l, rwhisk=T_r, name=name,
    )
    index = CellIndex(
        obj={v: k for k, v in oid.items()}, one={v: k for k, v in fid.items()},
        two={v: k for k, v in aid.items()}, obj_id=oid, one_id=fid, two_id=aid)
    if validate:
        validate_twocat(C)
    return C, index


def sub_twocat(C, keep_one_cells, name=""):
    """Sub-2-category on all objects, the given 1-cells (identities are always
    kept) and every 2-cell between kept 1-cells.  Raises InvalidStructure if
    the kept 1-cells are not closed under composition."""
    keep = set(keep_one_cells) | set(C.id1.values())
    for (g, f), h in sorted(C.comp1.items()):
        if g in keep and f in keep and h not in keep:
            raise InvalidStructure("sub-2-category not closed under comp1", [g, f, h])
    two = {a: fg for a, fg in C.two_cells.items() if fg[0] in keep and fg[1] in keep}
    D = TwoCat(
        objects=C.objects,
        one_cells={f: C.one_cells[f] for f in keep},
        id1=dict(C.id1),
        comp1={k: v for k, v in C.comp1.items() if k[0] in keep and k[1] in keep},
        two_cells=two,
        id2={f: C.id2[f] for f in keep},
        vcomp={k: v for k, v in C.vcomp.items() if k[0] in two and k[1] in two},
        lwhisk={k: v for k, v in C.lwhisk.items() if k[0] in keep and k[1] in two},
        rwhisk={k: v for k, v in C.rwhisk.items() if k[0] in two and k[1] in keep},
        name=name,
    )
    return validate_twocat(D)
