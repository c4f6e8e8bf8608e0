"""Command-line front end.

Exit codes: 0 verdict true, 1 verdict false, 2 input error, 3 size cap.
"""
import argparse
import os
import random
import sys

from . import corpus, document as D, library
from .bilimits import is_bilimit, theorem_check
from .diagrams import cone_failure, enumerate_cones, validate_functor
from .elements import build_elements, fiber_is_isomorphic, validate_weight
from .fibration import verify_1fibration
from .finality import find_contraction, is_M_final, point_finality_report
from .kernel import (Cap, InvalidStructure, SizeCapExceeded, dual_co, dual_op, hom_cat,
                     validate_marking, validate_twocat, Marking)
from .slice import build_slice, is_cartesian_char, is_cartesian_oracle

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


class Report:
    def __init__(self, command):
        self.command = command
        self.verdict = None
        self.reason = ""
        self.witness = ()
        self.details = {}
        self.lines = []

    def line(self, text=""):
        self.lines.append(text)

    def render(self, machine):
        if machine:
            return D.serialize(D.report_document(self.command, self.verdict, self.reason,
                                                 self.witness, self.details))
        out = list(self.lines)
        if self.verdict is not None:
            out.append(f"verdict: {'true' if self.verdict else 'false'}")
        if self.reason:
            out.append(f"reason: {self.reason}")
        if self.witness:
            out.append("witness: " + ", ".join(map(str, self.witness)))
        return "\n".join(out) + "\n"


_FLAG = {"twocat": "input", "functor": "diagram", "weight": "weight"}


def _load(path, kind):
    if not path:
        raise InputError(f"missing --{_FLAG[kind]} file")
    try:
        doc = D.read(path)
    except OSError as e:
        raise InputError(str(e)) from None
    return D.from_document(doc, expect=kind), doc


def _twocat(args):
    C, _ = _load(args.input, "twocat")
    return validate_twocat(C)


def _diagram(args):
    F, _ = _load(args.diagram, "functor")
    validate_twocat(F.source)
    validate_twocat(F.target)
    return validate_functor(F)


def _marking(args, C):
    """The marking file if given, else identities only."""
    if args.marking:
        doc = D.read(args.marking)
        cells = D.from_document(doc, expect="marking")
        for f in sorted(cells):
            if f not in C.one_cells:
                raise D.ResolutionError("marked 1-cell", f)
        return validate_marking(C, Marking(frozenset(cells) | frozenset(C.id1.values()))).marked
    return frozenset(C.id1.values())


def _cone(args, F):
    if not args.cone:
        raise InputError("missing --cone file")
    doc = D.read(args.cone)
    D.from_document(doc, expect="cone")
    return D.cone_from_payload(doc.payload, F)


def _one_arg(args, name):
    v = getattr(args, name)
    if v is None:
        raise InputError(f"missing --{name}")
    return v


# ---------------------------------------------------------------------------
# Commands


def cmd_validate(args, rep):
    if not args.input:
        raise InputError("missing --input file")
    doc = D.read(args.input)
    obj = D.from_document(doc)
    if doc.kind == "twocat":
        validate_twocat(obj)
        rep.line(f"twocat {obj.name or '(unnamed)'}: {len(obj.objects)} objects, "
                 f"{len(obj.one_cells)} 1-cells, {len(obj.two_cells)} 2-cells")
    elif doc.kind == "functor":
        validate_twocat(obj.source)
        validate_twocat(obj.target)
        validate_functor(obj)
        rep.line(f"2-functor {obj.name or '(unnamed)'}: valid")
    elif doc.kind == "weight":
        validate_twocat(obj.source)
        validate_weight(obj)
        rep.line(f"weight {obj.name or '(unnamed)'}: valid")
    elif doc.kind == "cone":
        F = _diagram(args)
        E = _marking(args, F.source)
        lam = D.cone_from_payload(doc.payload, F)
        bad = cone_failure(F, E, lam)
        if bad:
            raise InvalidStructure(bad[0], bad[1:])
        rep.line(f"cone {lam.label}: valid")
    elif doc.kind == "marking":
        rep.line(f"marking with {len(obj)} 1-cells: well formed")
    rep.verdict = True


def cmd_hom(args, rep):
    C = _twocat(args)
    x, y = _one_arg(args, "source"), _one_arg(args, "target")
    for z in (x, y):
        if z not in C.id1:
            raise D.ResolutionError("object", z)
    H = hom_cat(C, x, y)
    rep.line(f"{C.name}({x}, {y}): {len(H.objects)} objects, {len(H.morphisms)} 2-cells")
    for f in sorted(H.objects):
        rep.line(f"  1-cell {f}")
    for a, (f, g) in sorted(H.morphisms.items()):
        rep.line(f"  2-cell {a}: {f} => {g}")
    rep.details = {"objects": sorted(H.objects),
                   "morphisms": {a: list(st) for a, st in H.morphisms.items()}}
    rep.verdict = True


def cmd_dual(args, rep):
    C = _twocat(args)
    D2 = {"op": dual_op, "co": dual_co, "coop": lambda c: dual_op(dual_co(c))}[args.mode](C)
    args.raw_output = D.serialize(D.to_document(D2))
    rep.verdict = True


def cmd_slice(args, rep):
    F = _diagram(args)
    E = _marking(args, F.source)
    S = build_slice(F, E, cap=args.cap)
    T = S.total
    rep.line(f"slice over {F.name or 'F'}: {len(T.objects)} objects, {len(T.one_cells)} 1-cells, "
             f"{len(T.two_cells)} 2-cells, {len(S.marked)} cartesian 1-cells")
    for o in sorted(T.objects):
        rep.line(f"  object {o}")
    rep.details = {"objects": len(T.objects), "one_cells": len(T.one_cells),
                   "two_cells": len(T.two_cells), "cartesian": len(S.marked),
                   "slice": D.twocat_payload(T)}
    rep.verdict = True


def cmd_cones(args, rep):
    F = _diagram(args)
    E = _marking(args, F.source)
    C = F.target
    xs = [args.vertex] if args.vertex else sorted(C.objects)
    out = []
    for x in xs:
        if x not in C.id1:
            raise D.ResolutionError("vertex", x)
        for lam in enumerate_cones(F, E, x):
            out.append(lam.label)
            rep.line(lam.label)
    rep.line(f"{len(out)} cones")
    rep.details = {"cones": out}
    rep.verdict = bool(out)


def cmd_cartesian(args, rep):
    F = _diagram(args)
    E = _marking(args, F.source)
    S = build_slice(F, E, cap=args.cap)
    bad = []
    for e in sorted(S.total.one_cells):
        a, b = is_cartesian_char(S, e), is_cartesian_oracle(S, e)
        if args.verbose:
            rep.line(f"{'cartesian' if a else 'plain    '} {e}")
        if a != b:
            bad.append(e)
    rep.line(f"{len(S.total.one_cells)} edges, {len(S.marked)} cartesian, "
             f"{len(bad)} disagreements with the lifting oracle")
    rep.details = {"edges": len(S.total.one_cells), "cartesian": sorted(S.marked),
                   "disagreements": bad}
    rep.verdict = not bad
    if bad:
        rep.reason = "characterization disagrees with the lifting oracle"
        rep.witness = tuple(bad[:1])


def cmd_contraction(args, rep):
    C = _twocat(args)
    c = _one_arg(args, "center")
    if c not in C.id1:
        raise D.ResolutionError("center", c)
    H, why = find_contraction(C, c)
    if H is None:
        rep.verdict, rep.reason, rep.witness = False, why.reason, why.witness
        return
    for a in sorted(C.objects):
        rep.line(f"  γ_{a} = {H.gamma1[a]}")
    rep.details = {"center": c, "gamma1": dict(H.gamma1), "gamma2": dict(H.gamma2)}
    rep.verdict = True


def cmd_final(args, rep):
    C = _twocat(args)
    c = _one_arg(args, "center")
    if c not in C.id1:
        raise D.ResolutionError("center", c)
    M = _marking(args, C)
    v = is_M_final(C, M, c)
    r = point_finality_report(C, M, c, {}, strict=False)
    rep.line(f"M-final: {r.m_final}")
    rep.line(f"M-contraction exists: {r.m_bifinal}")
    rep.details = {"m_final": r.m_final, "m_contraction": r.m_bifinal, "agree": r.agree}
    rep.verdict = bool(v)
    if not v:
        rep.reason, rep.witness = v.reason, v.witness


def cmd_bilimit(args, rep):
    F = _diagram(args)
    E = _marking(args, F.source)
    lam = _cone(args, F)
    bad = cone_failure(F, E, lam)
    if bad:
        raise InvalidStructure(bad[0], bad[1:])
    v = is_bilimit(F, E, lam.vertex, lam)
    rep.line(f"cone {lam.label}")
    rep.verdict = bool(v)
    if not v:
        rep.reason, rep.witness = v.reason, v.witness


def cmd_theorem_check(args, rep):
    F = _diagram(args)
    E = _marking(args, F.source)
    lam = _cone(args, F)
    bad = cone_failure(F, E, lam)
    if bad:
        raise InvalidStructure(bad[0], bad[1:])
    t = theorem_check(F, E, lam.vertex, lam, cap=args.cap, strict=False)
    rep.line(f"bilimit (hom equivalence):        {t.bilimit}")
    rep.line(f"limiting contraction:             {t.limiting_bifinal}")
    rep.line(f"modified cone projection biequiv: {t.modified_projection_biequiv}")
    rep.line(f"agree: {t.agree}")
    rep.details = {"bilimit": t.bilimit, "limiting_bifinal": t.limiting_bifinal,
                   "modified_projection_biequiv": t.modified_projection_biequiv,
                   "agree": t.agree,
                   "witnesses": {k: [r, [str(w) for w in ws]] for k, (r, ws) in t.witnesses.items()}}
    rep.verdict = t.agree and t.bilimit
    if not t.agree:
        rep.reason = "characterizations disagree"
    elif not t.bilimit:
        rep.reason, rep.witness = t.witnesses["bilimit"]


def cmd_elements(args, rep):
    W, _ = _load(args.weight, "weight")
    validate_twocat(W.source)
    validate_weight(W)
    El = build_elements(W, cap=args.cap)
    T = El.total
    rep.line(f"El({W.name}): {len(T.objects)} objects, {len(T.one_cells)} 1-cells, "
             f"{len(T.two_cells)} 2-cells")
    fibers = {i: fiber_is_isomorphic(El, i) for i in sorted(W.source.objects)}
    for i, ok in fibers.items():
        rep.line(f"  fiber over {i} isomorphic to W({i}): {ok}")
    fib = verify_1fibration(El.proj)
    rep.line(f"projection is a 1-fibration: {bool(fib)}")
    rep.details = {"objects": len(T.objects), "one_cells": len(T.one_cells),
                   "two_cells": len(T.two_cells), "fibers": fibers, "one_fibration": bool(fib)}
    rep.verdict = all(fibers.values()) and bool(fib)
    if not fib:
        rep.reason, rep.witness = fib.reason, fib.witness


def cmd_examples(args, rep):
    ex = library.builtin_examples()
    if args.seed is not None:
        ex = {f"random{args.seed}": corpus.random_twocat(random.Random(args.seed),
                                                         name=f"random{args.seed}")}
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    for name in sorted(ex):
        C = validate_twocat(ex[name])
        rep.line(f"{name}: {len(C.objects)} objects, {len(C.one_cells)} 1-cells, "
                 f"{len(C.two_cells)} 2-cells")
        if args.out:
            with open(os.path.join(args.out, f"{_filename(name)}.json"), "w",
                      encoding="utf-8") as fh:
                fh.write(D.serialize(D.to_document(C)))
    if args.name:
        if args.name not in ex:
            raise InputError(f"unknown example {args.name!r}")
        args.raw_output = D.serialize(D.to_document(ex[args.name]))
    rep.details = {"examples": sorted(ex)}
    rep.verdict = True


def _filename(name):
    return "".join(ch if ch.isalnum() or ch in "_-" else "_" for ch in name).strip("_")


COMMANDS = {
    "validate": cmd_validate, "hom": cmd_hom, "dual": cmd_dual, "slice": cmd_slice,
    "cones": cmd_cones, "cartesian": cmd_cartesian, "contraction": cmd_contraction,
    "final": cmd_final, "bilimit": cmd_bilimit, "theorem-check": cmd_theorem_check,
    "elements": cmd_elements, "examples": cmd_examples,
}


def _cap(text):
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("cap is N or N,M") from None
    if len(parts) == 1:
        return Cap(parts[0], 8 * parts[0])
    if len(parts) == 2:
        return Cap(*parts)
    raise argparse.ArgumentTypeError("cap is N or N,M")


def build_parser():
    p = argparse.ArgumentParser(prog="fin2cat",
                                description="Finite 2-categories, slices and bilimits.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--input", help="twocat (or any) document")
    p.add_argument("--diagram", help="functor document J → C")
    p.add_argument("--cone", help="cone document")
    p.add_argument("--marking", help="marking document (identities are always marked)")
    p.add_argument("--weight", help="weight document")
    p.add_argument("--machine", action="store_true", help="print the report as a document")
    p.add_argument("--cap", type=_cap, default=Cap(),
                   help="size cap: N objects (8N 1-cells) or N,M")
    p.add_argument("--seed", type=int, help="emit a seeded random corpus 2-category")
    p.add_argument("--source", help="hom: source object")
    p.add_argument("--target", help="hom: target object")
    p.add_argument("--center", help="contraction/final: the center object")
    p.add_argument("--vertex", help="cones: restrict to one vertex")
    p.add_argument("--mode", choices=["op", "co", "coop"], default="op", help="dual kind")
    p.add_argument("--name", help="examples: print this example as a document")
    p.add_argument("--out", help="examples: write every example into this directory")
    p.add_argument("--verbose", action="store_true")
    return p


def run(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_TRUE
    args.raw_output = None
    rep = Report(args.command)
    try:
        COMMANDS[args.command](args, rep)
    except SizeCapExceeded as e:
        stderr.write(f"size cap exceeded: {e}\n")
        return EXIT_CAP
    except InvalidStructure as e:
        rep.verdict, rep.reason, rep.witness = False, f"invalid structure: {e.law}", e.witness
        stdout.write(rep.render(args.machine))
        return EXIT_INPUT
    except (D.DocumentError, InputError, OSError) as e:
        stderr.write(f"input error: {e}\n")
        return EXIT_INPUT
    if args.raw_output is not None:
        stdout.write(args.raw_output)
    else:
        stdout.write(rep.render(args.machine))
    return EXIT_TRUE if rep.verdict else EXIT_FALSE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
