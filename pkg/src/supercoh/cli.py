"""Command-line front end.

Exit status: 0 on success, 1 on a mathematical failure (axiom violation,
non-cocycle, non-exact sequence), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import hashlib
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import corpus
from .cochain import Cochain, CochainIndex, cochain_space, cohomology
from .extension import (ExtensionError, NotACocycleError, build_central_extension, class_of,
                        extensions_equivalent)
from .field import Field
from .fiveseq import check_exactness, lemma32_check, multiplier
from .generate import GenerationError, random_nilpotent
from .linalg import rank
from .io import AlgebraDocument, ParseError, parse_document, serialize_extension, serialize_algebra
from .superalg import AlgebraError, GradedSubspace, SuperAlgebra, validate

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_DEGREE = 3
NODE_KEYS = ("inf1_injective", "exact_at_Hom_L", "exact_at_Hom_H", "exact_at_H2_quotient")


class UsageError(Exception):
    pass


class MathFailure(Exception):
    pass


class Report:
    def __init__(self, command: str, source: str = "", text: Optional[str] = None):
        self.command = command
        self.source = source
        self.digest = "sha256:" + hashlib.sha256(text.encode()).hexdigest() if text is not None else None
        self.entries = []
        self.verdict = "pass"

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, tuple) and len(value) == 2 and all(isinstance(x, int) for x in value):
            value = f"({value[0]}|{value[1]})"
        self.entries.append((key, str(value)))

    def render(self, porcelain: bool) -> str:
        head = [("command", self.command)]
        if self.source:
            head.append(("input", self.source))
        if self.digest:
            head.append(("digest", self.digest))
        if porcelain:
            rows = head + self.entries + [("verdict", self.verdict)]
            return "".join(f"{k} = {v}\n" for k, v in rows)
        width = max((len(k) for k, _ in self.entries), default=0)
        out = [f"{self.command}: {self.source}" if self.source else self.command]
        if self.digest:
            out.append(f"  ({self.digest[:23]}...)")
        out += [f"  {k.ljust(width)}  {v}" for k, v in self.entries]
        out.append(f"verdict: {self.verdict.upper()}")
        return "\n".join(out) + "\n"


def _read_source(arg: str) -> tuple:
    if arg == "-":
        return "<stdin>", sys.stdin.read()
    path = Path(arg)
    if path.is_file():
        return arg, path.read_text(encoding="utf-8")
    name = arg[:-4] if arg.endswith(".alg") else arg
    if name in corpus.names():
        return f"builtin:{name}", corpus.text(name)
    raise UsageError(f"no such file or built-in algebra: {arg}")


def _load(arg: str, report_cmd: str) -> tuple:
    source, text = _read_source(arg)
    try:
        doc = parse_document(text, check=False)
    except ParseError as exc:
        raise UsageError(f"{source}: {exc}") from None
    report = Report(report_cmd, source, text)
    val = validate(doc.algebra)
    if not val.ok:
        for c in val.checks:
            report.add(c.axiom.replace(" ", "_"), "pass" if c.passed else f"FAIL at ({', '.join(c.witness)})")
        report.verdict = "fail"
        raise MathFailure(report)
    return doc, report


def _format_index(A: SuperAlgebra, ix: CochainIndex) -> str:
    if not ix.args:
        return "1"
    even = "^".join(A.labels[i] for i in ix.even)
    odd = ".".join(A.labels[i] for i in ix.odd)
    return "^".join(x for x in (even, odd) if x)


def _format_cochain(f: Cochain) -> str:
    A = f.algebra
    terms = [f"{c}*{_format_index(A, ix)}" for ix, c in zip(f.space.basis, f.coeffs) if c]
    return " + ".join(terms) if terms else "0"


def _parse_coords(A: SuperAlgebra, coords_text: str) -> Cochain:
    space = cochain_space(A, 2)
    try:
        coords = [A.field(Fraction(tok)) for tok in coords_text.replace(",", " ").split()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad cocycle coordinates {coords_text!r}: {exc}") from None
    if len(coords) != space.dim:
        raise UsageError(f"expected {space.dim} coordinates (dim C^2), got {len(coords)}")
    return Cochain(A, 2, coords)


def _ideal(doc: AlgebraDocument, labels: Optional[str]) -> GradedSubspace:
    A = doc.algebra
    names = [s for s in labels.replace(",", " ").split()] if labels else list(doc.central)
    try:
        return GradedSubspace.from_labels(A, names)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None


# -- commands ----------------------------------------------------------------

def cmd_validate(args) -> Report:
    doc, report = _load(args.file, "validate")
    A = doc.algebra
    report.add("name", A.name)
    report.add("field", A.field)
    report.add("dims", A.graded_dim)
    for c in validate(A).checks:
        report.add(c.axiom.replace(" ", "_"), "pass")
    return report


def cmd_cohomology(args) -> Report:
    n = args.degree
    if n < 0:
        raise UsageError("degree must be non-negative")
    if n > DEFAULT_MAX_DEGREE and not args.allow_high_degree:
        raise UsageError(f"degree {n} > {DEFAULT_MAX_DEGREE}; pass --allow-high-degree")
    doc, report = _load(args.file, "cohomology")
    A = doc.algebra
    res = cohomology(A, n)
    report.add("degree", n)
    _cohomology_entries(report, res, f"{n}")
    if args.show_basis:
        for k, ix in enumerate(cochain_space(A, n).basis, start=1):
            report.add(f"C{n}_basis_{k}", _format_index(A, ix))
    return report


def _cohomology_entries(report: Report, res, tag: str, show_reps: bool = True) -> None:
    report.add(f"C{tag}_dims", cochain_space(res.algebra, res.degree).graded_dim)
    for name, d in (("Z", res.z_dims), ("B", res.b_dims), ("H", res.dims)):
        report.add(f"{name}{tag}_even", d[0])
        report.add(f"{name}{tag}_odd", d[1])
    if show_reps:
        for k, f in enumerate(res.cocycle_reps, start=1):
            report.add(f"rep_{k}", _format_cochain(f))


def cmd_multiplier(args) -> Report:
    doc, report = _load(args.file, "multiplier")
    res = multiplier(doc.algebra)
    _cohomology_entries(report, res, "2")
    report.add("multiplier_dims", res.dims)
    return report


def cmd_fiveseq(args) -> Report:
    doc, report = _load(args.file, "fiveseq")
    if not args.ideal and not doc.central:
        raise UsageError("fiveseq needs --ideal (or a 'central' line in the file)")
    H = _ideal(doc, args.ideal)
    try:
        res = check_exactness(doc.algebra, H)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None
    lem = lemma32_check(doc.algebra, H)
    report.add("ideal_dims", H.graded_dim)
    for name, d in res.dims.items():
        report.add(f"dim_{name}", d)
    for name, m in res.matrices.items():
        report.add(f"rank_{name}", rank(m))
    for key, (_, ok) in zip(NODE_KEYS, res.nodes):
        report.add(key, ok)
    report.add("exact", res.passed)
    report.add("L2_cap_H_dims", lem.intersection_dims)
    report.add("im_Tra_dims", lem.image_dims)
    report.add("L2_cap_H_matches_im_Tra", lem.passed)
    if not (res.passed and lem.passed):
        report.verdict = "fail"
        raise MathFailure(report)
    return report


def _build(A: SuperAlgebra, coords_text: str, parity: Optional[int]):
    theta = _parse_coords(A, coords_text)
    if theta.parity is None:
        raise UsageError("cocycle mixes even and odd coordinates")
    try:
        return theta, build_central_extension(A, theta, parity=parity)
    except NotACocycleError as exc:
        raise MathFailure(str(exc)) from None
    except ExtensionError as exc:
        raise UsageError(str(exc)) from None


def cmd_extend(args) -> tuple:
    doc, report = _load(args.file, "extend")
    A = doc.algebra
    theta, e = _build(A, args.cocycle, args.parity)
    report.add("cocycle", _format_cochain(theta))
    report.add("parity", e.center_parity)
    report.add("total_dims", e.total.graded_dim)
    report.add("total_valid", validate(e.total).ok)
    report.add("class", _fmt_vec(class_of(e)))
    return report, serialize_extension(e)


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def cmd_classify(args) -> Report:
    doc, report = _load(args.file, "classify")
    A = doc.algebra
    if not args.cocycle:
        raise UsageError("classify needs at least one --cocycle")
    h2 = cohomology(A, 2)
    exts = []
    for k, coords_text in enumerate(args.cocycle, start=1):
        theta, e = _build(A, coords_text, args.parity)
        exts.append(e)
        report.add(f"class_{k}", _fmt_vec(class_of(e, h2)))
    for i in range(len(exts)):
        for j in range(i + 1, len(exts)):
            try:
                ok, _ = extensions_equivalent(exts[i], exts[j])
            except ExtensionError as exc:
                raise UsageError(str(exc)) from None
            report.add(f"equivalent_{i + 1}_{j + 1}", ok)
    return report


def cmd_generate(args) -> str:
    try:
        field = Field(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        A = random_nilpotent(field, args.even, args.odd, random.Random(args.seed),
                             name=args.name or f"nil_{args.even}_{args.odd}_s{args.seed}")
    except GenerationError as exc:
        raise MathFailure(str(exc)) from None
    return f"# random_nilpotent seed={args.seed}\n" + serialize_algebra(A)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="supercoh", description="Lie superalgebra cohomology toolkit")
    p.add_argument("--porcelain", action="store_true", help="machine-readable key = value output")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="algebra file, '-' for stdin, or a built-in corpus name")
        sp.add_argument("--porcelain", action="store_true", default=argparse.SUPPRESS)
        return sp

    with_file("validate", "check the superalgebra axioms")
    sp = with_file("cohomology", "compute H^n(L, F)")
    sp.add_argument("--degree", type=int, default=2)
    sp.add_argument("--show-basis", action="store_true", help="list the C^n basis in coordinate order")
    sp.add_argument("--allow-high-degree", action="store_true")
    with_file("multiplier", "Schur multiplier as H^2(L, F)")
    sp = with_file("fiveseq", "check exactness of the five-term sequence")
    sp.add_argument("--ideal", help="comma-separated labels spanning a central graded ideal")
    for name, help in (("extend", "central extension from a 2-cocycle"),
                       ("classify", "compare extension classes of 2-cocycles")):
        sp = with_file(name, help)
        sp.add_argument("--cocycle", action="append" if name == "classify" else "store",
                        required=name == "extend", help="coordinates in C^2 basis order")
        sp.add_argument("--parity", type=int, choices=(0, 1))
    sp = sub.add_parser("generate", help="random nilpotent superalgebra")
    sp.add_argument("--even", type=int, required=True)
    sp.add_argument("--odd", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--field", type=int, default=0, help="0 for Q, else a prime >= 5")
    sp.add_argument("--name")
    sp.add_argument("--porcelain", action="store_true", default=argparse.SUPPRESS)
    sp = sub.add_parser("corpus", help="list or print built-in algebras")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--porcelain", action="store_true", default=argparse.SUPPRESS)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "generate":
            out.write(cmd_generate(args))
            return EXIT_OK
        if args.command == "corpus":
            if args.name:
                try:
                    out.write(corpus.text(args.name))
                except KeyError as exc:
                    raise UsageError(str(exc)) from None
            else:
                out.write("".join(f"{n}\n" for n in corpus.names()))
            return EXIT_OK
        if args.command == "extend":
            report, text = cmd_extend(args)
            out.write("".join(f"# {line}\n" for line in report.render(True).splitlines()))
            out.write(text)
            return EXIT_OK
        handler = {"validate": cmd_validate, "cohomology": cmd_cohomology, "multiplier": cmd_multiplier,
                   "fiveseq": cmd_fiveseq, "classify": cmd_classify}[args.command]
        out.write(handler(args).render(args.porcelain))
        return EXIT_OK
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MathFailure as exc:
        payload = exc.args[0] if exc.args else ""
        if isinstance(payload, Report):
            out.write(payload.render(args.porcelain))
        else:
            print(f"failure: {payload}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
