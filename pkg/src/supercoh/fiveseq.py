"""The five-term sequence of a central extension and the Schur multiplier.

For a central graded ideal ``H`` of ``L`` with quotient map ``pi``::

    0 -> Hom(L/H, F) --Inf--> Hom(L, F) --Res--> Hom(H, F) --Tra--> H^2(L/H, F) --Inf--> H^2(L, F)

All spaces get fixed bases and all four maps become matrices in them, so
exactness is an equality of canonical subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from .cochain import CohomologyResult, cohomology, pullback
from .extension import CentralExtension, Section, canonical_section, factor_set
from .linalg import Matrix, Subspace, image_basis, kernel_basis, rank
from .superalg import (AlgebraError, GradedSubspace, SuperAlgebra, derived_subalgebra,
                       is_central_graded_ideal, quotient)


@dataclass(frozen=True, eq=False)
class HomSpace:
    """Functionals killing all brackets, as coordinate vectors over the source basis.

    For a :class:`GradedSubspace` source the coordinates are taken over its
    canonical basis :meth:`GradedSubspace.vectors`.
    """

    source: Union[SuperAlgebra, GradedSubspace]
    basis: tuple
    graded_dim: tuple
    space: Subspace

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, g) -> tuple:
        c = self.space.coordinates(g)
        if c is None:
            raise ValueError("functional does not kill the derived subalgebra")
        return c


def _hom_from_constraints(F, source, n_even, n_odd, constraints) -> HomSpace:
    """Functionals on an ``(n_even|n_odd)`` space, homogeneous, vanishing on ``constraints``."""
    basis = []
    dims = []
    for lo, hi in ((0, n_even), (n_even, n_even + n_odd)):
        width = hi - lo
        rows = [v[lo:hi] for v in constraints if any(v[lo:hi])]
        if width == 0:
            dims.append(0)
            continue
        ker = kernel_basis(Matrix.from_rows(F, rows, cols=width)) if rows else Subspace.full(F, width)
        for v in ker.vectors:
            basis.append((F.zero,) * lo + v + (F.zero,) * (n_even + n_odd - hi))
        dims.append(ker.dim)
    n = n_even + n_odd
    return HomSpace(source, tuple(basis), tuple(dims), Subspace(F, n, basis))


def hom_space(X: Union[SuperAlgebra, GradedSubspace]) -> HomSpace:
    """Basis of ``Hom(X, F)``: linear functionals vanishing on ``X^2``."""
    if isinstance(X, SuperAlgebra):
        return _hom_from_constraints(X.field, X, X.m, X.q, derived_subalgebra(X).vectors())
    A = X.ambient
    vecs = X.vectors()
    constraints = []
    for a in vecs:
        for b in vecs:
            c = X.coordinates(A.bracket(a, b))
            if c is None:
                raise AlgebraError("subspace is not a subalgebra")
            constraints.append(c)
    de, do = X.graded_dim
    return _hom_from_constraints(A.field, X, de, do, constraints)


def _matrix(F, images, rows) -> Matrix:
    return Matrix.from_columns(F, images, rows=rows)


@dataclass(frozen=True, eq=False)
class _Setup:
    L: SuperAlgebra
    H: GradedSubspace
    Q: SuperAlgebra
    ext: CentralExtension
    hom_Q: HomSpace
    hom_L: HomSpace
    hom_H: HomSpace
    h2_Q: CohomologyResult
    h2_L: CohomologyResult


def _setup(L: SuperAlgebra, H: GradedSubspace) -> _Setup:
    if H.ambient != L:
        raise AlgebraError("ideal belongs to another algebra")
    if not is_central_graded_ideal(L, H):
        raise AlgebraError("H is not a central graded ideal")
    Q, pi = quotient(L, H, name=f"{L.name}/H")
    ext = CentralExtension(L, H, pi, Q)
    return _Setup(L, H, Q, ext, hom_space(Q), hom_space(L), hom_space(H), cohomology(Q, 2), cohomology(L, 2))


def _inf1(s: _Setup) -> Matrix:
    pi = s.ext.proj
    images = [s.hom_L.coordinates(pi.transpose().apply(g)) for g in s.hom_Q.basis]
    return _matrix(s.L.field, images, s.hom_L.dim)


def _res(s: _Setup) -> Matrix:
    F = s.L.field
    hvecs = s.H.vectors()
    images = []
    for g in s.hom_L.basis:
        restricted = [sum((a * b for a, b in zip(g, h)), F.zero) for h in hvecs]
        images.append(s.hom_H.coordinates(restricted))
    return _matrix(F, images, s.hom_H.dim)


def _tra(s: _Setup, section: Optional[Section] = None) -> Matrix:
    f = factor_set(s.ext, section or canonical_section(s.ext))
    images = [s.h2_Q.coordinates(f.compose(alpha)) for alpha in s.hom_H.basis]
    return _matrix(s.L.field, images, s.h2_Q.dim)


def _inf2(s: _Setup) -> Matrix:
    images = [s.h2_L.coordinates(pullback(beta, s.ext.proj, s.L)) for beta in s.h2_Q.cocycle_reps]
    return _matrix(s.L.field, images, s.h2_L.dim)


def inf1_matrix(L: SuperAlgebra, H: GradedSubspace) -> Matrix:
    """``Hom(L/H, F) -> Hom(L, F)``, ``g -> g o pi``."""
    return _inf1(_setup(L, H))


def res_matrix(L: SuperAlgebra, H: GradedSubspace) -> Matrix:
    """``Hom(L, F) -> Hom(H, F)``, restriction."""
    return _res(_setup(L, H))


def tra_matrix(L: SuperAlgebra, H: GradedSubspace, section: Optional[Section] = None) -> Matrix:
    """``Hom(H, F) -> H^2(L/H, F)``, ``alpha -> class of alpha o f`` for the factor set ``f`` of ``section``."""
    return _tra(_setup(L, H), section)


def inf2_matrix(L: SuperAlgebra, H: GradedSubspace) -> Matrix:
    """``H^2(L/H, F) -> H^2(L, F)``, pullback along ``pi``."""
    return _inf2(_setup(L, H))


def quotient_extension(L: SuperAlgebra, H: GradedSubspace) -> CentralExtension:
    """The extension ``0 -> H -> L -> L/H -> 0`` used by :func:`tra_matrix`."""
    return _setup(L, H).ext


NODES = ("Inf1 injective", "Im Inf1 = ker Res", "Im Res = ker Tra", "Im Tra = ker Inf2")


@dataclass(frozen=True, eq=False)
class FiveSeqReport:
    algebra: SuperAlgebra
    ideal: GradedSubspace
    dims: dict      # name -> (even|odd)
    matrices: dict  # "inf1", "res", "tra", "inf2" -> Matrix
    nodes: tuple    # (description, verdict) in sequence order

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.nodes)

    def lines(self) -> list:
        out = [f"{name} = ({d[0]}|{d[1]})" for name, d in self.dims.items()]
        out += [f"rank {name} = {rank(m)}" for name, m in self.matrices.items()]
        out += [f"{desc}: {'ok' if ok else 'FAIL'}" for desc, ok in self.nodes]
        return out


def check_exactness(L: SuperAlgebra, H: GradedSubspace) -> FiveSeqReport:
    s = _setup(L, H)
    inf1, res, tra, inf2 = _inf1(s), _res(s), _tra(s), _inf2(s)
    nodes = (
        (NODES[0], rank(inf1) == inf1.cols),
        (NODES[1], image_basis(inf1) == kernel_basis(res)),
        (NODES[2], image_basis(res) == kernel_basis(tra)),
        (NODES[3], image_basis(tra) == kernel_basis(inf2)),
    )
    dims = {
        "Hom(L/H)": s.hom_Q.graded_dim,
        "Hom(L)": s.hom_L.graded_dim,
        "Hom(H)": s.hom_H.graded_dim,
        "H2(L/H)": s.h2_Q.dims,
        "H2(L)": s.h2_L.dims,
    }
    return FiveSeqReport(L, H, dims, {"inf1": inf1, "res": res, "tra": tra, "inf2": inf2}, nodes)


@dataclass(frozen=True)
class TransgressionImageCheck:
    intersection_dims: tuple  # graded dim of L^2 ∩ Z
    image_dims: tuple         # graded dim of Im Tra
    tra_surjective: bool
    quotient_h2_dims: tuple

    @property
    def dims_agree(self) -> bool:
        return self.intersection_dims == self.image_dims

    @property
    def surjective_case_ok(self) -> Optional[bool]:
        if not self.tra_surjective:
            return None
        return self.intersection_dims == self.quotient_h2_dims

    @property
    def passed(self) -> bool:
        return self.dims_agree and self.surjective_case_ok is not False


def lemma32_check(L: SuperAlgebra, Z: GradedSubspace) -> TransgressionImageCheck:
    """Compare ``dim(L^2 ∩ Z)`` with ``dim Im(Tra)`` as graded dimensions."""
    s = _setup(L, Z)
    tra = _tra(s)
    de = s.hom_H.graded_dim[0]
    even_cols = list(range(de))
    odd_cols = list(range(de, tra.cols))
    rows = list(range(tra.rows))
    image = (rank(tra.submatrix(rows, even_cols)) if even_cols and rows else 0,
             rank(tra.submatrix(rows, odd_cols)) if odd_cols and rows else 0)
    inter = (derived_subalgebra(L) & Z).graded_dim
    return TransgressionImageCheck(inter, image, rank(tra) == s.h2_Q.dim, s.h2_Q.dims)


def multiplier(L: SuperAlgebra) -> CohomologyResult:
    """The Schur multiplier, computed as ``H^2(L, F)``."""
    return replace(cohomology(L, 2), label="M")
