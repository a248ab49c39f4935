"""Built-in example algebras shipped as ``.alg`` files."""

from __future__ import annotations

from importlib import resources
from typing import Optional

from ..field import Field
from ..io import parse_algebra
from ..superalg import SuperAlgebra


def names() -> list:
    return sorted(p.name[:-4] for p in resources.files(__name__).iterdir() if p.name.endswith(".alg"))


def text(name: str) -> str:
    path = resources.files(__name__) / f"{name}.alg"
    if not path.is_file():
        raise KeyError(f"no built-in algebra {name!r}")
    return path.read_text(encoding="utf-8")


def load(name: str, field: Optional[Field] = None) -> SuperAlgebra:
    A = parse_algebra(text(name))
    return A if field is None else A.over(field)


def all_algebras(field: Optional[Field] = None) -> list:
    return [load(n, field) for n in names()]
