"""Central extensions, sections and factor sets.

A central extension ``0 -> M -> K -> L -> 0`` is stored as the total
algebra ``K``, the central graded subspace ``M``, and the projection
matrix ``pi`` onto ``L = K/M``.  Classification (``class_of``,
``extensions_equivalent``) is restricted to one-dimensional ``M``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .cochain import Cochain, CohomologyResult, cohomology, is_coboundary, is_cocycle
from .linalg import Matrix, kernel_basis, rank, solve
from .superalg import (GradedSubspace, SuperAlgebra, center, complement_indices,
                       is_homomorphism, quotient)


class ExtensionError(ValueError):
    pass


class NotACocycleError(ExtensionError):
    pass


@dataclass(frozen=True, eq=False)
class CentralExtension:
    total: SuperAlgebra
    center_sub: GradedSubspace
    proj: Matrix
    base: SuperAlgebra

    @classmethod
    def from_ideal(cls, K: SuperAlgebra, M: GradedSubspace, name: Optional[str] = None) -> "CentralExtension":
        """``0 -> M -> K -> K/M -> 0`` for a central graded ideal ``M``."""
        L, pi = quotient(K, M, name=name)
        return cls(K, M, pi, L)

    def problems(self) -> list:
        """Violated invariants, as human-readable strings (empty when valid)."""
        K, L, pi, M = self.total, self.base, self.proj, self.center_sub
        out = []
        if pi.shape != (L.dim, K.dim):
            return [f"projection has shape {pi.shape}, expected {(L.dim, K.dim)}"]
        if rank(pi) != L.dim:
            out.append("projection is not surjective")
        if kernel_basis(pi) != M.as_subspace():
            out.append("kernel of the projection differs from the central subspace")
        if not (M <= center(K)):
            out.append("subspace is not central")
        if not is_homomorphism(pi, K, L):
            out.append("projection is not a homomorphism")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    @property
    def center_basis(self) -> tuple:
        return self.center_sub.vectors()

    @property
    def center_parity(self) -> Optional[int]:
        d = self.center_sub.graded_dim
        if d == (1, 0):
            return 0
        if d == (0, 1):
            return 1
        return None


@dataclass(frozen=True, eq=False)
class Section:
    """Even linear right inverse ``mu: L -> K`` of ``pi`` (``K.dim x L.dim`` matrix)."""

    map: Matrix

    def __call__(self, x: Sequence) -> tuple:
        return self.map.apply(x)


def is_section(e: CentralExtension, mu: Section) -> bool:
    if mu.map.shape != (e.total.dim, e.base.dim):
        return False
    if e.proj @ mu.map != Matrix.identity(e.base.field, e.base.dim):
        return False
    # μ is even: images of homogeneous basis vectors are homogeneous of the same parity
    K, L = e.total, e.base
    return all(not any(c) or K.vector_parity(c) == L.parity(i) for i, c in enumerate(mu.map.columns()))


def _fresh_label(labels, stem="c") -> str:
    if stem not in labels:
        return stem
    k = 1
    while f"{stem}{k}" in labels:
        k += 1
    return f"{stem}{k}"


def build_central_extension(L: SuperAlgebra, theta: Cochain, parity: Optional[int] = None,
                            label: str = "c", force: bool = False) -> CentralExtension:
    """``K = L (+) <c>`` with ``[x, y]_K = [x, y]_L + theta(x, y) c``.

    ``c`` takes the parity of ``theta`` so that the bracket stays homogeneous.
    ``force=True`` skips the cocycle check (the result then fails Jacobi).
    """
    if theta.algebra != L or theta.degree != 2:
        raise ExtensionError("theta must be a 2-cochain on L")
    eps = theta.parity
    if eps is None:
        raise ExtensionError("theta is not homogeneous")
    if theta.is_zero():
        eps = parity or 0
    elif parity is not None and parity != eps:
        raise ExtensionError(f"theta has parity {eps}, not {parity}")
    if not force and not is_cocycle(theta):
        raise NotACocycleError("theta is not a 2-cocycle")
    m, n = L.m, L.dim
    c = _fresh_label(L.labels, label)
    pos_c = m if eps == 0 else n
    new = [i if (eps == 1 or i < m) else i + 1 for i in range(n)]
    structure = {}
    for i in range(n):
        for j in range(i, n):
            vec = [0] * (n + 1)
            for k, x in enumerate(L.table[i][j]):
                vec[new[k]] = x
            vec[pos_c] = theta(i, j)
            structure[(new[i], new[j])] = vec
    even = list(L.even_labels) + ([c] if eps == 0 else [])
    odd = list(L.odd_labels) + ([c] if eps == 1 else [])
    K = SuperAlgebra(f"{L.name}~", L.field, even, odd, structure)
    M = GradedSubspace.span(K, [K.basis_vector(pos_c)])
    pi = Matrix.from_columns(L.field, [L.basis_vector(new.index(k)) if k != pos_c else L.zero_vector()
                                       for k in range(n + 1)], rows=n)
    return CentralExtension(K, M, pi, L)


def canonical_section(e: CentralExtension) -> Section:
    """Right inverse of ``pi`` landing in the greedy basis complement of ``M``."""
    K, L = e.total, e.base
    comp = complement_indices(K, e.center_sub)
    if len(comp) != L.dim:
        raise ExtensionError("complement dimension does not match the base")
    P = e.proj.submatrix(range(L.dim), comp)
    cols = []
    for i in range(L.dim):
        x = solve(P, L.basis_vector(i))
        if x is None:
            raise ExtensionError("projection is not invertible on the complement")
        v = [K.field.zero] * K.dim
        for k, a in zip(comp, x):
            v[k] = a
        cols.append(v)
    return Section(Matrix.from_columns(K.field, cols, rows=K.dim))


def random_section(e: CentralExtension, rng: random.Random, base: Optional[Section] = None) -> Section:
    """``mu + lambda`` for a random even linear ``lambda: L -> M``."""
    mu = base or canonical_section(e)
    K, L, M = e.total, e.base, e.center_sub
    F = K.field
    de, _ = M.graded_dim
    mvecs = M.vectors()
    cols = []
    for i, col in enumerate(mu.map.columns()):
        col = list(col)
        group = mvecs[:de] if L.parity(i) == 0 else mvecs[de:]
        for v in group:
            a = F.random(rng)
            for k, x in enumerate(v):
                col[k] = col[k] + a * x
        cols.append(col)
    return Section(Matrix.from_columns(F, cols, rows=K.dim))


@dataclass(frozen=True, eq=False)
class FactorSet:
    """``f(x, y) = [mu x, mu y] - mu([x, y])``, tabulated on all ordered basis pairs of ``L``."""

    extension: CentralExtension
    section: Section
    values: tuple  # values[i][j] is a vector of K

    def __call__(self, i: int, j: int) -> tuple:
        return self.values[i][j]

    def coordinates(self, i: int, j: int) -> tuple:
        c = self.extension.center_sub.coordinates(self.values[i][j])
        if c is None:
            raise ExtensionError(f"factor set value at ({i}, {j}) is outside the central subspace")
        return c

    def compose(self, alpha: Sequence) -> Cochain:
        """``alpha o f`` for a functional ``alpha`` given over the canonical basis of ``M``."""
        L = self.extension.base
        F = L.field
        alpha = [F(a) for a in alpha]

        def value(args):
            c = self.coordinates(*args)
            return sum((a * x for a, x in zip(alpha, c)), F.zero)

        return Cochain.from_function(L, 2, value)

    @cached_property
    def components(self) -> tuple:
        d = self.extension.center_sub.dim
        return tuple(self.compose([int(k == t) for t in range(d)]) for k in range(d))

    @property
    def cochain(self) -> Cochain:
        if self.extension.center_sub.dim != 1:
            raise ExtensionError("a single cochain needs a one-dimensional central subspace")
        return self.components[0]


def factor_set(e: CentralExtension, mu: Section) -> FactorSet:
    if not is_section(e, mu):
        raise ExtensionError("map is not an even section of the projection")
    K, L = e.total, e.base
    images = mu.map.columns()
    values = []
    for i in range(L.dim):
        row = []
        for j in range(L.dim):
            a = K.bracket(images[i], images[j])
            b = mu(L.table[i][j])
            row.append(tuple(x - y for x, y in zip(a, b)))
        values.append(tuple(row))
    return FactorSet(e, mu, tuple(values))


def class_of(e: CentralExtension, h2: Optional[CohomologyResult] = None) -> tuple:
    """Coordinates in ``H^2(L, F)`` of the class of ``e`` (one-dimensional ``M`` only)."""
    if e.center_sub.dim != 1:
        raise ExtensionError("classification is implemented for one-dimensional central subspaces only")
    h2 = h2 or cohomology(e.base, 2)
    return h2.coordinates(factor_set(e, canonical_section(e)).cochain)


def extensions_equivalent(e1: CentralExtension, e2: CentralExtension) -> tuple:
    """``(True, rho)`` with a verified equivalence ``rho: K1 -> K2``, or ``(False, None)``."""
    if e1.base != e2.base:
        raise ExtensionError("extensions of different algebras")
    if e1.center_parity is None or e2.center_parity is None:
        raise ExtensionError("equivalence is implemented for one-dimensional central subspaces only")
    if e1.center_parity != e2.center_parity:
        raise ExtensionError("central subspaces of different parity")
    L, K1, K2 = e1.base, e1.total, e2.total
    mu1, mu2 = canonical_section(e1), canonical_section(e2)
    f1 = factor_set(e1, mu1).cochain
    f2 = factor_set(e2, mu2).cochain
    ok, sigma = is_coboundary(f1 - f2)
    if not ok:
        return False, None
    # (f1 - f2)(x, y) = -sigma([x, y]);  rho(mu1 x + t c1) = mu2 x + (sigma(x) + t) c2
    c1, c2 = e1.center_basis[0], e2.center_basis[0]
    F = L.field
    cols = []
    for k in range(K1.dim):
        ek = K1.basis_vector(k)
        x = e1.proj.apply(ek)
        t = e1.center_sub.coordinates(tuple(a - b for a, b in zip(ek, mu1(x))))[0]
        s = sigma.on_vectors(x) + t
        cols.append(tuple(a + s * b for a, b in zip(mu2(x), c2)))
    rho = Matrix.from_columns(F, cols, rows=K2.dim)
    if not is_homomorphism(rho, K1, K2):
        raise ExtensionError("constructed map is not a homomorphism")
    if rho.apply(c1) != tuple(F(x) for x in c2):
        raise ExtensionError("constructed map does not fix the central subspace")
    if e2.proj @ rho != e1.proj:
        raise ExtensionError("constructed map does not cover the identity of L")
    return True, rho


def split_extension(L: SuperAlgebra, parity: int = 0) -> CentralExtension:
    return build_central_extension(L, Cochain.zero(L, 2), parity=parity)


__all__ = [
    "CentralExtension", "Section", "FactorSet", "ExtensionError", "NotACocycleError",
    "build_central_extension", "canonical_section", "random_section", "factor_set", "class_of",
    "extensions_equivalent", "split_extension", "is_section",
]
