"""Line-oriented algebra files.

::

    algebra h3
    field Q                 # or: field Fp 5
    even x y z
    odd
    bracket x y = 1*z       # coeff*label [+ coeff*label ...], coeff = int or n/d
    central z               # optional, marks the central subspace of an extension
    end

``#`` starts a comment.  Brackets not listed are zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .extension import CentralExtension
from .field import Field
from .superalg import GradedSubspace, SuperAlgebra, ValidationReport, validate

_LABEL = re.compile(r"^[^\s*=+#/]+$")
_TERM = re.compile(r"^(?:([+-]?\d+(?:/\d+)?)\*)?([^\s*=+#]+)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class AlgebraValidationError(ValueError):
    """Parsed fine, but the structure constants violate an axiom."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(str(c) for c in report.failures()))


@dataclass(frozen=True)
class AlgebraDocument:
    algebra: SuperAlgebra
    central: tuple = ()

    def extension(self) -> CentralExtension:
        if not self.central:
            raise ParseError("file has no central annotation")
        M = GradedSubspace.from_labels(self.algebra, self.central)
        return CentralExtension.from_ideal(self.algebra, M, name=f"{self.algebra.name}/{'+'.join(self.central)}")


def _parse_field(args: list, line: int) -> Field:
    if args == ["Q"]:
        return Field(0)
    if len(args) == 2 and args[0] == "Fp":
        try:
            p = int(args[1])
        except ValueError:
            raise ParseError(f"bad characteristic {args[1]!r}", line) from None
        try:
            return Field(p)
        except ValueError as exc:
            raise ParseError(str(exc), line) from None
    raise ParseError("expected 'field Q' or 'field Fp <prime>'", line)


def _parse_rhs(rhs: str, line: int) -> list:
    tokens = rhs.split()
    if tokens == ["0"]:
        return []
    terms = []
    sign = 1
    expect_term = True
    for tok in tokens:
        if tok in "+-" and len(tok) == 1:
            if expect_term:
                raise ParseError(f"unexpected {tok!r}", line)
            sign = 1 if tok == "+" else -1
            expect_term = True
            continue
        if not expect_term:
            raise ParseError(f"missing '+' before {tok!r}", line)
        mt = _TERM.match(tok)
        if not mt:
            raise ParseError(f"bad term {tok!r}", line)
        try:
            coeff = Fraction(mt.group(1)) if mt.group(1) else Fraction(1)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {tok!r}", line) from None
        terms.append((sign * coeff, mt.group(2)))
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError("dangling operator in bracket", line)
    return terms


def parse_document(text: str, check: bool = True) -> AlgebraDocument:
    name = field = even = odd = None
    central = None
    brackets = {}
    ended = False
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise ParseError("content after 'end'", no)
        key, *args = line.split()
        if key == "algebra":
            if name is not None:
                raise ParseError("duplicate 'algebra' line", no)
            if len(args) != 1:
                raise ParseError("expected 'algebra <name>'", no)
            name = args[0]
        elif key == "field":
            if field is not None:
                raise ParseError("duplicate 'field' line", no)
            field = _parse_field(args, no)
        elif key in ("even", "odd"):
            if (even if key == "even" else odd) is not None:
                raise ParseError(f"duplicate '{key}' line", no)
            for lab in args:
                if not _LABEL.match(lab):
                    raise ParseError(f"bad label {lab!r}", no)
            if key == "even":
                even = args
            else:
                odd = args
        elif key == "bracket":
            if field is None or even is None or odd is None:
                raise ParseError("'bracket' before 'field', 'even' and 'odd'", no)
            head, eq, rhs = line[len("bracket"):].partition("=")
            pair = head.split()
            if not eq or len(pair) != 2:
                raise ParseError("expected 'bracket <a> <b> = <terms>'", no)
            if tuple(pair) in brackets:
                raise ParseError(f"bracket {pair[0]} {pair[1]} given twice", no)
            brackets[tuple(pair)] = (_parse_rhs(rhs, no), no)
        elif key == "central":
            if central is not None:
                raise ParseError("duplicate 'central' line", no)
            central = tuple(args)
        elif key == "end":
            if args:
                raise ParseError("'end' takes no arguments", no)
            ended = True
        else:
            raise ParseError(f"unknown key {key!r}", no)
    if not ended:
        raise ParseError("missing 'end'")
    for what, val in (("algebra", name), ("field", field), ("even", even), ("odd", odd)):
        if val is None:
            raise ParseError(f"missing '{what}' line")
    labels = list(even) + list(odd)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise ParseError(f"duplicate label {lab!r}")
        seen.add(lab)
    index = {lab: k for k, lab in enumerate(labels)}
    structure = {}
    for (a, b), (terms, no) in brackets.items():
        for lab in (a, b):
            if lab not in index:
                raise ParseError(f"unknown label {lab!r}", no)
        vec = [Fraction(0)] * len(labels)
        for c, lab in terms:
            if lab not in index:
                raise ParseError(f"unknown label {lab!r}", no)
            vec[index[lab]] += c
        try:
            structure[(index[a], index[b])] = [field(c) for c in vec]
        except ZeroDivisionError as exc:
            raise ParseError(str(exc), no) from None
    for lab in central or ():
        if lab not in index:
            raise ParseError(f"unknown central label {lab!r}")
    A = SuperAlgebra(name, field, even, odd, structure)
    if check:
        report = validate(A)
        if not report.ok:
            raise AlgebraValidationError(report)
    return AlgebraDocument(A, central or ())


def parse_algebra(text: str, check: bool = True) -> SuperAlgebra:
    return parse_document(text, check=check).algebra


def _format_terms(A: SuperAlgebra, vec) -> str:
    terms = [f"{c}*{A.labels[k]}" for k, c in enumerate(vec) if c]
    return " + ".join(terms) if terms else "0"


def serialize_algebra(A: SuperAlgebra, central: Iterable[str] = ()) -> str:
    """Canonical text: only ``i <= j`` brackets, in basis order."""
    field = "Q" if A.field.is_rational else f"Fp {A.field.characteristic}"
    lines = [
        f"algebra {A.name}",
        f"field {field}",
        " ".join(["even", *A.even_labels]),
        " ".join(["odd", *A.odd_labels]),
    ]
    for (i, j), vec in sorted(A.canonical_structure().items()):
        lines.append(f"bracket {A.labels[i]} {A.labels[j]} = {_format_terms(A, vec)}")
    central = list(central)
    if central:
        lines.append(" ".join(["central", *central]))
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_extension(e: CentralExtension) -> str:
    K = e.total
    labels = []
    for v in e.center_sub.vectors():
        support = [k for k, x in enumerate(v) if x]
        if len(support) != 1:
            raise ValueError("central subspace is not spanned by basis elements")
        labels.append(K.labels[support[0]])
    return serialize_algebra(K, central=labels)
