"""Finite-dimensional Lie superalgebras given by structure constants.

The basis is ordered with all even elements first, then all odd ones.
A bracket ``[b_i, b_j]`` is a coefficient vector over that basis.  Only
one of ``(i, j)`` / ``(j, i)`` needs to be declared; the other follows
from super anticommutativity::

    [b_j, b_i] = -(-1)^(|b_i||b_j|) [b_i, b_j]

Declaring both is allowed, and :func:`validate` reports any disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Mapping, Optional, Sequence

from .field import Field
from .linalg import Matrix, Subspace, extend_basis, kernel_basis, solve, unit_vector


class AlgebraError(ValueError):
    """Invalid algebra data (shape, labels, non-central quotient, ...)."""


def sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True, eq=False)
class SuperAlgebra:
    name: str
    field: Field
    even_labels: tuple
    odd_labels: tuple
    # (i, j) -> coefficient vector, exactly as declared (either order allowed)
    structure: Mapping = dc_field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "even_labels", tuple(self.even_labels))
        object.__setattr__(self, "odd_labels", tuple(self.odd_labels))
        labels = self.labels
        if len(set(labels)) != len(labels):
            raise AlgebraError(f"duplicate label in {labels}")
        n = len(labels)
        clean = {}
        for (i, j), vec in dict(self.structure).items():
            if not (0 <= i < n and 0 <= j < n):
                raise AlgebraError(f"bracket index ({i}, {j}) out of range")
            vec = tuple(self.field(x) for x in vec)
            if len(vec) != n:
                raise AlgebraError(f"bracket ({i}, {j}) has {len(vec)} coefficients, expected {n}")
            if any(vec):
                clean[(i, j)] = vec
        object.__setattr__(self, "structure", clean)

    @classmethod
    def from_brackets(cls, name: str, field: Field, even: Sequence[str], odd: Sequence[str],
                      brackets: Mapping) -> "SuperAlgebra":
        """Build from ``{(label_a, label_b): {label: coeff, ...}}``."""
        labels = tuple(even) + tuple(odd)
        index = {lab: k for k, lab in enumerate(labels)}
        structure = {}
        for (a, b), combo in brackets.items():
            vec = [0] * len(labels)
            for lab, c in combo.items():
                vec[index[lab]] += c
            structure[(index[a], index[b])] = vec
        return cls(name, field, even, odd, structure)

    @property
    def labels(self) -> tuple:
        return self.even_labels + self.odd_labels

    @property
    def m(self) -> int:
        return len(self.even_labels)

    @property
    def q(self) -> int:
        return len(self.odd_labels)

    @property
    def dim(self) -> int:
        return self.m + self.q

    @property
    def graded_dim(self) -> tuple:
        return (self.m, self.q)

    def parity(self, i: int) -> int:
        return 0 if i < self.m else 1

    @cached_property
    def parities(self) -> tuple:
        return tuple(self.parity(i) for i in range(self.dim))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise AlgebraError(f"unknown label {label!r}") from None

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def vector_parity(self, v: Sequence) -> Optional[int]:
        """0 or 1 for a nonzero homogeneous vector, 0 for zero, ``None`` if mixed."""
        has_even = any(v[:self.m])
        has_odd = any(v[self.m:])
        if has_even and has_odd:
            return None
        return 1 if has_odd else 0

    @cached_property
    def table(self) -> tuple:
        """Effective bracket table ``table[i][j]`` over all ordered basis pairs."""
        n = self.dim
        zero = self.zero_vector()
        rows = [[zero] * n for _ in range(n)]
        s = self.structure
        for i in range(n):
            for j in range(i, n):
                if (i, j) in s:
                    v = s[(i, j)]
                elif (j, i) in s:
                    eps = -sign(self.parity(i) * self.parity(j))
                    v = tuple(eps * x for x in s[(j, i)])
                else:
                    continue
                rows[i][j] = v
                if j != i:
                    eps = -sign(self.parity(i) * self.parity(j))
                    rows[j][i] = tuple(eps * x for x in v)
        return tuple(tuple(r) for r in rows)

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.table[i][j]

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        return bracket(self, u, v)

    def canonical_structure(self) -> dict:
        """Nonzero brackets ``(i, j) -> vec`` for ``i <= j`` only."""
        t = self.table
        return {(i, j): t[i][j] for i in range(self.dim) for j in range(i, self.dim) if any(t[i][j])}

    def over(self, field: Field) -> "SuperAlgebra":
        """Same structure constants read in another field."""
        return SuperAlgebra(self.name, field, self.even_labels, self.odd_labels,
                            {k: [_transfer(field, x) for x in v] for k, v in self.structure.items()})

    def renamed(self, name: str) -> "SuperAlgebra":
        return SuperAlgebra(name, self.field, self.even_labels, self.odd_labels, self.structure)

    @cached_property
    def _key(self):
        return (self.field, self.even_labels, self.odd_labels, tuple(sorted(self.canonical_structure().items())))

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"SuperAlgebra({self.name!r}, {self.field}, ({self.m}|{self.q}))"


def _transfer(field: Field, x):
    if hasattr(x, "numerator"):
        # rationals with p-coprime denominators carry over
        return field(x)
    return field(int(x))


def abelian(field: Field, m: int, q: int, name: Optional[str] = None) -> SuperAlgebra:
    even = [f"e{i + 1}" for i in range(m)]
    odd = [f"f{i + 1}" for i in range(q)]
    return SuperAlgebra(name or f"abelian_{m}_{q}", field, even, odd, {})


def direct_sum(a: SuperAlgebra, b: SuperAlgebra, name: Optional[str] = None) -> SuperAlgebra:
    """``a (+) b`` with labels of ``b`` suffixed by ``'`` on collision."""
    if a.field != b.field:
        raise AlgebraError("direct sum over different fields")
    used = set(a.labels)

    def fresh(lab):
        while lab in used:
            lab += "'"
        used.add(lab)
        return lab

    b_even = [fresh(x) for x in b.even_labels]
    b_odd = [fresh(x) for x in b.odd_labels]
    # new global positions
    pos_a = list(range(a.m)) + [a.m + b.m + k for k in range(a.q)]
    pos_b = [a.m + k for k in range(b.m)] + [a.m + b.m + a.q + k for k in range(b.q)]
    n = a.dim + b.dim
    structure = {}
    for src, pos in ((a, pos_a), (b, pos_b)):
        for (i, j), v in src.canonical_structure().items():
            vec = [0] * n
            for k, c in enumerate(v):
                vec[pos[k]] = c
            structure[(pos[i], pos[j])] = vec
    return SuperAlgebra(name or f"{a.name}+{b.name}", a.field,
                        list(a.even_labels) + b_even, list(a.odd_labels) + b_odd, structure)


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    passed: bool
    witness: Optional[tuple] = None  # labels of the first violating basis tuple

    def __str__(self):
        if self.passed:
            return f"{self.axiom}: pass"
        return f"{self.axiom}: FAIL at ({', '.join(self.witness)})"


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)


PARITY = "parity homogeneity"
ANTICOMMUTATIVITY = "super anticommutativity"
JACOBI = "super Jacobi"


def _check_parity(A: SuperAlgebra) -> Optional[tuple]:
    for (i, j) in sorted(A.structure):
        expected = (A.parity(i) + A.parity(j)) % 2
        if any(c and A.parity(k) != expected for k, c in enumerate(A.structure[(i, j)])):
            return (i, j)
    return None


def _check_anticommutativity(A: SuperAlgebra) -> Optional[tuple]:
    s = A.structure
    zero = A.zero_vector()
    for i in range(A.dim):
        for j in range(i, A.dim):
            if i == j:
                if A.parity(i) == 0 and (i, i) in s:
                    return (i, i)
                continue
            if (i, j) in s and (j, i) in s:
                eps = -sign(A.parity(i) * A.parity(j))
                if tuple(eps * x for x in s[(i, j)]) != s.get((j, i), zero):
                    return (i, j)
    return None


def jacobiator(A: SuperAlgebra, i: int, j: int, k: int) -> tuple:
    """(-1)^{|x||z|}[[x,y],z] + (-1)^{|y||x|}[[y,z],x] + (-1)^{|z||y|}[[z,x],y] on basis elements."""
    p = A.parities
    t = A.table
    out = list(A.zero_vector())
    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
        s = sign(p[a] * p[c])
        inner = t[a][b]
        for l, coef in enumerate(inner):
            if coef:
                for r, x in enumerate(t[l][c]):
                    if x:
                        out[r] = out[r] + s * coef * x
    return tuple(out)


def _check_jacobi(A: SuperAlgebra) -> Optional[tuple]:
    for i, j, k in product(range(A.dim), repeat=3):
        if any(jacobiator(A, i, j, k)):
            return (i, j, k)
    return None


def validate(A: SuperAlgebra) -> ValidationReport:
    """Exhaustive check of the three axiom families on basis tuples."""
    checks = []
    for name, fn in ((PARITY, _check_parity), (ANTICOMMUTATIVITY, _check_anticommutativity),
                     (JACOBI, _check_jacobi)):
        bad = fn(A)
        checks.append(AxiomCheck(name, bad is None, None if bad is None else tuple(A.labels[x] for x in bad)))
    return ValidationReport(tuple(checks))


# -- brackets and homomorphisms ----------------------------------------------

def bracket(A: SuperAlgebra, u: Sequence, v: Sequence) -> tuple:
    """Bilinear extension of the structure constants."""
    if len(u) != A.dim or len(v) != A.dim:
        raise AlgebraError(f"vectors must have length {A.dim}")
    F = A.field
    out = [F.zero] * A.dim
    t = A.table
    for i, a in enumerate(u):
        if not a:
            continue
        a = F(a)
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(t[i][j]):
                if c:
                    out[k] = out[k] + ab * c
    return tuple(out)


def is_homomorphism(phi: Matrix, A: SuperAlgebra, B: SuperAlgebra) -> bool:
    """``phi`` (``B.dim x A.dim``) is even and preserves brackets on basis pairs."""
    if phi.shape != (B.dim, A.dim):
        return False
    cols = phi.columns()
    for i, c in enumerate(cols):
        if any(c) and B.vector_parity(c) != A.parity(i):
            return False
    for i in range(A.dim):
        for j in range(A.dim):
            if phi.apply(A.table[i][j]) != B.bracket(cols[i], cols[j]):
                return False
    return True


# -- graded subspaces ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GradedSubspace:
    """A Z2-graded subspace ``even_part (+) odd_part`` of an algebra."""

    ambient: SuperAlgebra
    even_part: Subspace
    odd_part: Subspace

    @classmethod
    def span(cls, A: SuperAlgebra, vectors: Iterable[Sequence]) -> "GradedSubspace":
        evens, odds = [], []
        for v in vectors:
            v = tuple(A.field(x) for x in v)
            if len(v) != A.dim:
                raise AlgebraError(f"vector of length {len(v)} in a {A.dim}-dimensional algebra")
            par = A.vector_parity(v)
            if par is None:
                raise AlgebraError(f"non-homogeneous vector {v}")
            (odds if par else evens).append(v[A.m:] if par else v[:A.m])
        return cls(A, Subspace(A.field, A.m, evens), Subspace(A.field, A.q, odds))

    @classmethod
    def from_parts(cls, A: SuperAlgebra, even_vectors: Iterable, odd_vectors: Iterable) -> "GradedSubspace":
        return cls(A, Subspace(A.field, A.m, even_vectors), Subspace(A.field, A.q, odd_vectors))

    @classmethod
    def from_labels(cls, A: SuperAlgebra, labels: Iterable[str]) -> "GradedSubspace":
        return cls.span(A, [A.basis_vector(A.index(lab)) for lab in labels])

    @classmethod
    def zero(cls, A: SuperAlgebra) -> "GradedSubspace":
        return cls.from_parts(A, [], [])

    @classmethod
    def full(cls, A: SuperAlgebra) -> "GradedSubspace":
        return cls(A, Subspace.full(A.field, A.m), Subspace.full(A.field, A.q))

    @property
    def graded_dim(self) -> tuple:
        return (self.even_part.dim, self.odd_part.dim)

    @property
    def dim(self) -> int:
        return self.even_part.dim + self.odd_part.dim

    def vectors(self) -> tuple:
        """Canonical homogeneous basis in ambient coordinates: even part first."""
        F, m, q = self.ambient.field, self.ambient.m, self.ambient.q
        zq, zm = (F.zero,) * q, (F.zero,) * m
        return tuple(v + zq for v in self.even_part.vectors) + tuple(zm + v for v in self.odd_part.vectors)

    def as_subspace(self) -> Subspace:
        return Subspace(self.ambient.field, self.ambient.dim, self.vectors())

    def coordinates(self, v: Sequence) -> Optional[tuple]:
        """Coefficients of ``v`` over :meth:`vectors`, or ``None`` if outside."""
        m = self.ambient.m
        ce = self.even_part.coordinates(v[:m])
        co = self.odd_part.coordinates(v[m:])
        if ce is None or co is None:
            return None
        return ce + co

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def _check(self, other):
        if other.ambient != self.ambient:
            raise AlgebraError("graded subspaces of different algebras")

    def __and__(self, other: "GradedSubspace") -> "GradedSubspace":
        self._check(other)
        return GradedSubspace(self.ambient, self.even_part & other.even_part, self.odd_part & other.odd_part)

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        self._check(other)
        return GradedSubspace(self.ambient, self.even_part + other.even_part, self.odd_part + other.odd_part)

    def __le__(self, other: "GradedSubspace") -> bool:
        self._check(other)
        return self.even_part <= other.even_part and self.odd_part <= other.odd_part

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.even_part == other.even_part
                and self.odd_part == other.odd_part)

    def __hash__(self):
        return hash((self.ambient, self.even_part, self.odd_part))

    def __repr__(self):
        return f"GradedSubspace({self.ambient.name}, ({self.graded_dim[0]}|{self.graded_dim[1]}))"


def derived_subalgebra(A: SuperAlgebra) -> GradedSubspace:
    """``L^2``: span of the brackets of all basis pairs."""
    m = A.m
    vecs = [A.table[i][j] for i in range(A.dim) for j in range(i, A.dim)]
    return GradedSubspace.from_parts(A, [v[:m] for v in vecs], [v[m:] for v in vecs])


def center(A: SuperAlgebra) -> GradedSubspace:
    """``Z(A) = {v : [v, b_k] = 0 for every basis element b_k}``, computed per parity block."""
    F, n = A.field, A.dim
    parts = []
    for block in (range(A.m), range(A.m, n)):
        block = list(block)
        # rows: (k, coordinate r) ; columns: block index i
        rows = [[A.table[i][k][r] for i in block] for k in range(n) for r in range(n)]
        if not block:
            parts.append(Subspace(F, 0))
            continue
        parts.append(kernel_basis(Matrix.from_rows(F, rows, cols=len(block))) if rows
                     else Subspace.full(F, len(block)))
    return GradedSubspace(A, parts[0], parts[1])


def is_central_graded_ideal(A: SuperAlgebra, H: GradedSubspace) -> bool:
    return H <= center(A)


def complement_indices(A: SuperAlgebra, H: GradedSubspace) -> list:
    """Global basis indices completing ``H`` to a basis, chosen greedily per parity block."""
    F = A.field
    even = extend_basis(H.even_part, [unit_vector(F, A.m, i) for i in range(A.m)])
    odd = extend_basis(H.odd_part, [unit_vector(F, A.q, i) for i in range(A.q)])
    return even + [A.m + i for i in odd]


def quotient(A: SuperAlgebra, H: GradedSubspace, name: Optional[str] = None) -> tuple:
    """``(A/H, pi)`` for a central graded ideal ``H``.

    The quotient basis is the image of :func:`complement_indices`, so
    ``pi`` maps those basis elements to the quotient's unit vectors.
    """
    if H.ambient != A:
        raise AlgebraError("subspace belongs to another algebra")
    if not is_central_graded_ideal(A, H):
        raise AlgebraError("quotient requires a central graded ideal")
    F, n = A.field, A.dim
    comp = complement_indices(A, H)
    k = len(comp)
    full = Matrix.from_columns(F, [A.basis_vector(i) for i in comp] + list(H.vectors()), rows=n)
    pi_cols = []
    for i in range(n):
        x = solve(full, A.basis_vector(i))
        pi_cols.append(x[:k])
    pi = Matrix.from_columns(F, pi_cols, rows=k)
    structure = {}
    for a in range(k):
        for b in range(a, k):
            v = pi.apply(A.table[comp[a]][comp[b]])
            if any(v):
                structure[(a, b)] = v
    labels = [A.labels[i] for i in comp]
    n_even = sum(1 for i in comp if A.parity(i) == 0)
    Q = SuperAlgebra(name or f"{A.name}/H", F, labels[:n_even], labels[n_even:], structure)
    return Q, pi


def central_basis_elements(A: SuperAlgebra) -> list:
    """Indices of basis elements lying in the center."""
    return [i for i in range(A.dim) if all(not any(A.table[i][j]) for j in range(A.dim))]


def basis_central_ideals(A: SuperAlgebra) -> list:
    """Every central graded ideal spanned by a subset of basis elements (the empty one included)."""
    idx = central_basis_elements(A)
    out = []
    for k in range(len(idx) + 1):
        for subset in combinations(idx, k):
            out.append(GradedSubspace.span(A, [A.basis_vector(i) for i in subset]))
    return out
