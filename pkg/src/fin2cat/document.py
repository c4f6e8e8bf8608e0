"""Canonical JSON documents for 2-categories, diagrams, markings, cones and weights.

A document is ``{"format": "fin2cat", "version": 1, "kind": ..., "payload": ...}``.
Serialization sorts keys and every table, so equal structures give equal
bytes.  Parsing checks syntax (line and column), then the schema (path),
then that every id refers to something declared.
"""
import json
from dataclasses import dataclass

import jsonschema

from .diagrams import Cone, TwoFunctor
from .elements import CatValuedFunctor
from .kernel import FinCat, Functor1, TwoCat

FORMAT = "fin2cat"
VERSION = 1
KINDS = ("twocat", "functor", "marking", "cone", "weight", "report")


class DocumentError(ValueError):
    pass


class SyntaxProblem(DocumentError):
    def __init__(self, msg, line, column):
        self.line, self.column = line, column
        super().__init__(f"syntax error at line {line}, column {column}: {msg}")


class SchemaViolation(DocumentError):
    def __init__(self, msg, path):
        self.path = path
        where = "/".join(str(p) for p in path) or "<root>"
        super().__init__(f"schema violation at {where}: {msg}")


class ResolutionError(DocumentError):
    def __init__(self, what, ident):
        self.ident = ident
        super().__init__(f"unresolved {what}: {ident!r}")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: dict
    version: int = VERSION


# ---------------------------------------------------------------------------
# Schema

_ids = {"type": "array", "items": {"type": "string"}}
_pair = {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}
_triple = {"type": "array", "items": {"type": "string"}, "minItems": 3, "maxItems": 3}
_strmap = {"type": "object", "additionalProperties": {"type": "string"}}
_pairmap = {"type": "object", "additionalProperties": _pair}
_table = {"type": "array", "items": _triple}


def _obj(props, required=None):
    return {"type": "object", "properties": props, "additionalProperties": False,
            "required": sorted(required if required is not None else props)}


_twocat = _obj({"name": {"type": "string"}, "objects": _ids, "one_cells": _pairmap,
                "identities": _strmap, "comp1": _table, "two_cells": _pairmap,
                "identity_2cells": _strmap, "vcomp": _table, "lwhisk": _table,
                "rwhisk": _table})
_fincat = _obj({"name": {"type": "string"}, "objects": _ids, "morphisms": _pairmap,
                "identities": _strmap, "comp": _table})
_functor = _obj({"name": {"type": "string"}, "source": _twocat, "target": _twocat,
                 "objects": _strmap, "one_cells": _strmap, "two_cells": _strmap})
_marking = _obj({"marked": _ids})
_cone = _obj({"vertex": {"type": "string"}, "legs": _strmap, "cells": _strmap})
_functor1 = _obj({"objects": _strmap, "morphisms": _strmap})
_weight = _obj({"name": {"type": "string"}, "source": _twocat,
                "categories": {"type": "object", "additionalProperties": _fincat},
                "one_cells": {"type": "object", "additionalProperties": _functor1},
                "two_cells": {"type": "object", "additionalProperties": _strmap}})
_report = _obj({"command": {"type": "string"}, "verdict": {"type": ["boolean", "null"]},
                "reason": {"type": "string"}, "witness": {"type": "array"},
                "details": {"type": "object"}})

_PAYLOAD = {"twocat": _twocat, "functor": _functor, "marking": _marking,
            "cone": _cone, "weight": _weight, "report": _report}

SCHEMA = {
    "type": "object",
    "properties": {"format": {"const": FORMAT}, "version": {"const": VERSION},
                   "kind": {"enum": list(KINDS)}, "payload": {"type": "object"}},
    "required": ["format", "version", "kind", "payload"],
    "additionalProperties": False,
}


def _check(instance, schema, prefix=()):
    v = jsonschema.Draft202012Validator(schema)
    errs = sorted(v.iter_errors(instance), key=lambda e: (list(map(str, e.absolute_path)),
                                                          e.message))
    if errs:
        e = errs[0]
        raise SchemaViolation(e.message, list(prefix) + list(e.absolute_path))


# ---------------------------------------------------------------------------
# Text


def serialize(doc):
    data = {"format": FORMAT, "version": doc.version, "kind": doc.kind, "payload": doc.payload}
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SyntaxProblem(e.msg, e.lineno, e.colno) from None
    _check(data, SCHEMA)
    _check(data["payload"], _PAYLOAD[data["kind"]], ("payload",))
    return Document(data["kind"], data["payload"], data["version"])


def read(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# Structures to payloads


def _rows(table):
    return sorted([*k, v] for k, v in table.items())


def twocat_payload(C):
    return {
        "name": C.name,
        "objects": sorted(C.objects),
        "one_cells": {f: list(st) for f, st in C.one_cells.items()},
        "identities": dict(C.id1),
        "comp1": _rows(C.comp1),
        "two_cells": {a: list(fg) for a, fg in C.two_cells.items()},
        "identity_2cells": dict(C.id2),
        "vcomp": _rows(C.vcomp),
        "lwhisk": _rows(C.lwhisk),
        "rwhisk": _rows(C.rwhisk),
    }


def fincat_payload(A):
    return {"name": A.name, "objects": sorted(A.objects),
            "morphisms": {m: list(st) for m, st in A.morphisms.items()},
            "identities": dict(A.identity), "comp": _rows(A.comp)}


def functor_payload(u):
    return {"name": u.name, "source": twocat_payload(u.source),
            "target": twocat_payload(u.target), "objects": dict(u.on_objects),
            "one_cells": dict(u.on_one), "two_cells": dict(u.on_two)}


def cone_payload(lam):
    return {"vertex": lam.vertex, "legs": dict(lam.legs), "cells": dict(lam.cells)}


def marking_payload(cells):
    return {"marked": sorted(cells)}


def weight_payload(W):
    return {"name": W.name, "source": twocat_payload(W.source),
            "categories": {i: fincat_payload(A) for i, A in W.cats.items()},
            "one_cells": {k: {"objects": dict(u.on_objects), "morphisms": dict(u.on_morphisms)}
                          for k, u in W.on_one.items()},
            "two_cells": {L: dict(c) for L, c in W.on_two.items()}}


def to_document(obj):
    if isinstance(obj, TwoCat):
        return Document("twocat", twocat_payload(obj))
    if isinstance(obj, TwoFunctor):
        return Document("functor", functor_payload(obj))
    if isinstance(obj, Cone):
        return Document("cone", cone_payload(obj))
    if isinstance(obj, CatValuedFunctor):
        return Document("weight", weight_payload(obj))
    if isinstance(obj, (set, frozenset)):
        return Document("marking", marking_payload(obj))
    raise TypeError(f"no document kind for {type(obj).__name__}")


def report_document(command, verdict, reason="", witness=(), details=None):
    return Document("report", {"command": command, "verdict": verdict, "reason": reason,
                               "witness": [str(w) for w in witness],
                               "details": details or {}})


# ---------------------------------------------------------------------------
# Payloads to structures (resolution only; laws are checked by validators)


def _need(ident, known, what):
    if ident not in known:
        raise ResolutionError(what, ident)
    return ident


def twocat_from_payload(p):
    objs = set(p["objects"])
    ones = p["one_cells"]
    for f, (s, t) in sorted(ones.items()):
        _need(s, objs, f"source object of 1-cell {f}")
        _need(t, objs, f"target object of 1-cell {f}")
    for x, f in sorted(p["identities"].items()):
        _need(x, objs, "object")
        _need(f, ones, "identity 1-cell")
    for row in p["comp1"]:
        for f in row:
            _need(f, ones, "1-cell in comp1")
    twos = p["two_cells"]
    for a, (f, g) in sorted(twos.items()):
        _need(f, ones, f"source 1-cell of 2-cell {a}")
        _need(g, ones, f"target 1-cell of 2-cell {a}")
    for f, a in sorted(p["identity_2cells"].items()):
        _need(f, ones, "1-cell")
        _need(a, twos, "identity 2-cell")
    for key in ("vcomp",):
        for row in p[key]:
            for a in row:
                _need(a, twos, f"2-cell in {key}")
    for h, a, c in p["lwhisk"]:
        _need(h, ones, "1-cell in lwhisk")
        _need(a, twos, "2-cell in lwhisk")
        _need(c, twos, "2-cell in lwhisk")
    for a, h, c in p["rwhisk"]:
        _need(h, ones, "1-cell in rwhisk")
        _need(a, twos, "2-cell in rwhisk")
        _need(c, twos, "2-cell in rwhisk")
    return TwoCat(tuple(sorted(objs)), {f: tuple(st) for f, st in ones.items()},
                  dict(p["identities"]), {(g, f): h for g, f, h in p["comp1"]},
                  {a: tuple(fg) for a, fg in twos.items()}, dict(p["identity_2cells"]),
                  {(b, a): c for b, a, c in p["vcomp"]},
                  {(h, a): c for h, a, c in p["lwhisk"]},
                  {(a, h): c for a, h, c in p["rwhisk"]}, name=p["name"])


def fincat_from_payload(p):
    objs = set(p["objects"])
    mor = p["morphisms"]
    for m, (s, t) in sorted(mor.items()):
        _need(s, objs, f"source of morphism {m}")
        _need(t, objs, f"target of morphism {m}")
    for x, m in sorted(p["identities"].items()):
        _need(x, objs, "object")
        _need(m, mor, "identity morphism")
    for row in p["comp"]:
        for m in row:
            _need(m, mor, "morphism in comp")
    return FinCat(tuple(sorted(objs)), {m: tuple(st) for m, st in mor.items()},
                  dict(p["identities"]), {(g, f): h for g, f, h in p["comp"]}, name=p["name"])


def functor_from_payload(p):
    J, C = twocat_from_payload(p["source"]), twocat_from_payload(p["target"])
    for x, y in sorted(p["objects"].items()):
        _need(x, J.id1, "source object")
        _need(y, C.id1, "target object")
    for f, g in sorted(p["one_cells"].items()):
        _need(f, J.one_cells, "source 1-cell")
        _need(g, C.one_cells, "target 1-cell")
    for a, b in sorted(p["two_cells"].items()):
        _need(a, J.two_cells, "source 2-cell")
        _need(b, C.two_cells, "target 2-cell")
    return TwoFunctor(J, C, dict(p["objects"]), dict(p["one_cells"]), dict(p["two_cells"]),
                      name=p["name"])


def cone_from_payload(p, F=None):
    """With a diagram F the ids are resolved against J and C."""
    if F is not None:
        J, C = F.source, F.target
        _need(p["vertex"], C.id1, "cone vertex")
        for i, f in sorted(p["legs"].items()):
            _need(i, J.id1, "object of J")
            _need(f, C.one_cells, "leg")
        for k, a in sorted(p["cells"].items()):
            _need(k, J.one_cells, "1-cell of J")
            _need(a, C.two_cells, "cone 2-cell")
    return Cone.make(p["vertex"], p["legs"], p["cells"])


def marking_from_payload(p, C=None):
    if C is not None:
        for f in p["marked"]:
            _need(f, C.one_cells, "marked 1-cell")
    return frozenset(p["marked"])


def weight_from_payload(p):
    J = twocat_from_payload(p["source"])
    cats = {}
    for i, q in sorted(p["categories"].items()):
        _need(i, J.id1, "object of J")
        cats[i] = fincat_from_payload(q)
    on_one = {}
    for k, q in sorted(p["one_cells"].items()):
        _need(k, J.one_cells, "1-cell of J")
        i, j = J.one_cells[k]
        A, B = cats.get(j), cats.get(i)
        if A is None or B is None:
            raise ResolutionError("category for an end of 1-cell", k)
        for w, v in sorted(q["objects"].items()):
            _need(w, A.identity, f"object of W({j})")
            _need(v, B.identity, f"object of W({i})")
        for m, n in sorted(q["morphisms"].items()):
            _need(m, A.morphisms, f"morphism of W({j})")
            _need(n, B.morphisms, f"morphism of W({i})")
        on_one[k] = Functor1(A, B, dict(q["objects"]), dict(q["morphisms"]))
    on_two = {}
    for L, comps in sorted(p["two_cells"].items()):
        _need(L, J.two_cells, "2-cell of J")
        i = J.obj_src(L)
        if i not in cats:
            raise ResolutionError("category for the source of 2-cell", L)
        for w, m in sorted(comps.items()):
            _need(m, cats[i].morphisms, f"morphism of W({i})")
        on_two[L] = dict(comps)
    return CatValuedFunctor(J, cats, on_one, on_two, name=p["name"])


_FROM = {"twocat": twocat_from_payload, "functor": functor_from_payload,
         "weight": weight_from_payload, "cone": cone_from_payload,
         "marking": marking_from_payload}


def from_document(doc, expect=None):
    if expect is not None and doc.kind != expect:
        raise SchemaViolation(f"expected a {expect} document, got {doc.kind}", ["kind"])
    if doc.kind not in _FROM:
        raise SchemaViolation(f"{doc.kind} documents carry no structure", ["kind"])
    return _FROM[doc.kind](doc.payload)
