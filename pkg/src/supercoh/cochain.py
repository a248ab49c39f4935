"""Cochains with trivial coefficients and their cohomology.

A degree-``n`` cochain is a multilinear form ``f`` on ``L`` obeying the
super exchange rule

    f(..., a, b, ...) = -(-1)^(|a||b|) f(..., b, a, ...)

so it is alternating in even arguments and symmetric in pairs of odd
ones.  Such a form is determined by its values on *canonical* argument
tuples: a strictly increasing run of even basis indices followed by a
weakly increasing run of odd ones.  Those tuples (:class:`CochainIndex`)
order the coordinates of every cochain, sorted lexicographically on
``(even, odd)``.

The differential is

    (df)(x1..x_{n+1}) = sum_{i<j} (-1)^(j + |xj|(|x_{i+1}|+...+|x_{j-1}|))
                        f(x1, .., x_{i-1}, [xi, xj], x_{i+1}, .., ^xj, .., x_{n+1})

with 1-based ``j``.  In degree one this gives ``(d sigma)(x, y) = sigma([x, y])``;
coboundary witnesses in degree two are reported with the opposite sign,
``f(x, y) = -sigma([x, y])`` (see :func:`is_coboundary`).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Callable, NamedTuple, Optional, Sequence

from .linalg import Matrix, Subspace, extend_basis, kernel_basis, solve
from .superalg import AlgebraError, SuperAlgebra, sign


class CochainIndex(NamedTuple):
    even: tuple
    odd: tuple

    @property
    def parity(self) -> int:
        return len(self.odd) % 2

    @property
    def args(self) -> tuple:
        return self.even + self.odd

    @property
    def degree(self) -> int:
        return len(self.even) + len(self.odd)


def cochain_dim(m: int, q: int, n: int) -> int:
    """``dim C^n`` for a ``(m|q)`` algebra."""
    return sum(comb(m, a) * comb(q + (n - a) - 1, n - a) for a in range(n + 1)) if q else comb(m, n)


@dataclass(frozen=True)
class CochainSpace:
    algebra: SuperAlgebra
    degree: int
    basis: tuple
    position: dict = dc_field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def block(self, parity: int) -> list:
        """Coordinate positions of the cochains of the given parity."""
        return [k for k, ix in enumerate(self.basis) if ix.parity == parity]

    @property
    def graded_dim(self) -> tuple:
        return (len(self.block(0)), len(self.block(1)))


@lru_cache(maxsize=512)
def cochain_space(A: SuperAlgebra, n: int) -> CochainSpace:
    if n < 0:
        raise ValueError("negative degree")
    basis = []
    odd_range = range(A.m, A.dim)
    for a in range(n + 1):
        for ev in combinations(range(A.m), a):
            for od in combinations_with_replacement(odd_range, n - a):
                basis.append(CochainIndex(ev, od))
    basis.sort()
    basis = tuple(basis)
    return CochainSpace(A, n, basis, {ix: k for k, ix in enumerate(basis)})


def cochain_basis(A: SuperAlgebra, n: int) -> list:
    return list(cochain_space(A, n).basis)


def canonicalize(A: SuperAlgebra, args: Sequence[int]) -> tuple:
    """``(s, index)`` with ``f(args) = s * f(index.args)``; ``(0, None)`` on a repeated even argument.

    Every inversion is undone by exactly one adjacent swap, and a swap of
    ``a, b`` contributes ``-(-1)^(|a||b|)``, i.e. ``-1`` unless both are odd.
    """
    m = A.m
    s = 1
    n = len(args)
    for i in range(n):
        ai = args[i]
        for j in range(i + 1, n):
            aj = args[j]
            if ai == aj and ai < m:
                return 0, None
            if ai > aj and not (ai >= m and aj >= m):
                s = -s
    srt = sorted(args)
    k = 0
    while k < n and srt[k] < m:
        k += 1
    return s, CochainIndex(tuple(srt[:k]), tuple(srt[k:]))


@dataclass(frozen=True, eq=False)
class Cochain:
    algebra: SuperAlgebra
    degree: int
    coeffs: tuple

    def __post_init__(self):
        F = self.algebra.field
        coeffs = tuple(F(x) for x in self.coeffs)
        if len(coeffs) != cochain_space(self.algebra, self.degree).dim:
            raise ValueError(f"expected {cochain_space(self.algebra, self.degree).dim} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, A: SuperAlgebra, n: int) -> "Cochain":
        return cls(A, n, (0,) * cochain_space(A, n).dim)

    @classmethod
    def basis_form(cls, A: SuperAlgebra, index: CochainIndex) -> "Cochain":
        space = cochain_space(A, index.degree)
        c = [0] * space.dim
        c[space.position[index]] = 1
        return cls(A, index.degree, c)

    @classmethod
    def from_function(cls, A: SuperAlgebra, n: int, fn: Callable[[tuple], object]) -> "Cochain":
        """Cochain whose value on each canonical tuple is ``fn(tuple)``.

        ``fn`` is trusted to be super skew-symmetric; only canonical tuples are sampled.
        """
        return cls(A, n, [fn(ix.args) for ix in cochain_space(A, n).basis])

    @property
    def space(self) -> CochainSpace:
        return cochain_space(self.algebra, self.degree)

    @property
    def parity(self) -> Optional[int]:
        """Parity of a homogeneous cochain (0 for zero); ``None`` when mixed."""
        pars = {ix.parity for ix, c in zip(self.space.basis, self.coeffs) if c}
        if len(pars) > 1:
            return None
        return pars.pop() if pars else 0

    def component(self, parity: int) -> "Cochain":
        return Cochain(self.algebra, self.degree,
                       [c if ix.parity == parity else 0 for ix, c in zip(self.space.basis, self.coeffs)])

    def __call__(self, *args: int):
        return evaluate(self, args)

    def on_vectors(self, *vectors: Sequence):
        """Multilinear evaluation on arbitrary vectors."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of arguments")
        F = self.algebra.field
        supports = [[(i, F(x)) for i, x in enumerate(v) if x] for v in vectors]
        total = F.zero
        for choice in product(*supports):
            coef = F.one
            for _, x in choice:
                coef = coef * x
            total = total + coef * evaluate(self, tuple(i for i, _ in choice))
        return total

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same(self, other: "Cochain"):
        if other.algebra != self.algebra or other.degree != self.degree:
            raise ValueError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._same(other)
        return Cochain(self.algebra, self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._same(other)
        return Cochain(self.algebra, self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Cochain":
        return Cochain(self.algebra, self.degree, [-a for a in self.coeffs])

    def __rmul__(self, c) -> "Cochain":
        c = self.algebra.field(c)
        return Cochain(self.algebra, self.degree, [c * a for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.algebra == other.algebra and self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra, self.degree, self.coeffs))

    def __repr__(self):
        return f"Cochain(deg {self.degree}, {[str(c) for c in self.coeffs]})"


def evaluate(f: Cochain, args: Sequence[int]):
    """Value of ``f`` on a tuple of basis indices."""
    if len(args) != f.degree:
        raise ValueError(f"{f.degree}-cochain evaluated on {len(args)} arguments")
    s, ix = canonicalize(f.algebra, tuple(args))
    if ix is None:
        return f.algebra.field.zero
    c = f.coeffs[f.space.position[ix]]
    return c if s == 1 else -c


@lru_cache(maxsize=512)
def differential_matrix(A: SuperAlgebra, n: int) -> Matrix:
    """Matrix of ``d: C^n -> C^{n+1}`` in the canonical cochain bases."""
    src = cochain_space(A, n)
    tgt = cochain_space(A, n + 1)
    F = A.field
    p = A.parities
    rows = [[F.zero] * src.dim for _ in range(tgt.dim)]
    for r, ix in enumerate(tgt.basis):
        x = ix.args
        row = rows[r]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                # 1-based position of x_j is j + 1
                s = sign(j + 1 + p[x[j]] * sum(p[x[t]] for t in range(i + 1, j)))
                br = A.table[x[i]][x[j]]
                if not any(br):
                    continue
                rest = x[:i] + (None,) + x[i + 1:j] + x[j + 1:]
                for k, c in enumerate(br):
                    if not c:
                        continue
                    args = tuple(k if a is None else a for a in rest)
                    s2, target = canonicalize(A, args)
                    if target is None:
                        continue
                    col = src.position[target]
                    row[col] = row[col] + (s * s2) * c
    return Matrix.from_rows(F, rows, cols=src.dim)


def differential(f: Cochain) -> Cochain:
    return Cochain(f.algebra, f.degree + 1, differential_matrix(f.algebra, f.degree).apply(f.coeffs))


def is_cocycle(f: Cochain) -> bool:
    return differential(f).is_zero()


def is_coboundary(f: Cochain) -> tuple:
    """``(True, sigma)`` when ``f`` is a coboundary, else ``(False, None)``.

    The witness satisfies ``f = d sigma``, except in degree two where it follows
    the convention ``f(x, y) = -sigma([x, y])`` (that is, ``f = d(-sigma)``).
    """
    n = f.degree
    A = f.algebra
    if n == 0:
        return (f.is_zero(), None)
    x = solve(differential_matrix(A, n - 1), f.coeffs)
    if x is None:
        return False, None
    sigma = Cochain(A, n - 1, x)
    if n == 2:
        sigma = -sigma
    return True, sigma


def cyclic_sum(f: Cochain, i: int, j: int, k: int):
    """``(-1)^{|x||z|}f([x,y],z) + (-1)^{|y||x|}f([y,z],x) + (-1)^{|z||y|}f([z,x],y)`` on basis elements."""
    if f.degree != 2:
        raise ValueError("cyclic identity is for 2-cochains")
    A = f.algebra
    p = A.parities
    total = A.field.zero
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        v = f.on_vectors(A.table[a][b], A.basis_vector(c))
        total = total + sign(p[a] * p[c]) * v
    return total


def pullback(f: Cochain, phi: Matrix, A: SuperAlgebra) -> Cochain:
    """``(phi^* f)(x1..xn) = f(phi x1, .., phi xn)`` for a linear map ``phi: A -> f.algebra``."""
    cols = phi.columns()
    return Cochain.from_function(A, f.degree, lambda args: f.on_vectors(*(cols[a] for a in args)))


def module_action_value(A: SuperAlgebra, x: Sequence, f: Cochain, args: Sequence[int]):
    """``(x.f)(args)`` straight from the defining sum, for any argument order.

    ``f`` must be homogeneous; :func:`module_action` splits it first.
    """
    px = A.vector_parity(x)
    pf = f.parity
    if px is None or pf is None:
        raise AlgebraError("module action needs homogeneous x and f")
    p = A.parities
    total = A.field.zero
    for i in range(len(args)):
        s = sign(px * (pf + sum(p[a] for a in args[:i])))
        vecs = [A.basis_vector(a) for a in args]
        vecs[i] = A.bracket(x, vecs[i])
        total = total - s * f.on_vectors(*vecs)
    return total


def module_action(A: SuperAlgebra, x: Sequence, f: Cochain) -> Cochain:
    """``(x.f)(x1..xn) = -sum_i (-1)^{|x|(|f|+|x1|+..+|x_{i-1}|)} f(x1, .., [x, xi], .., xn)``."""
    if A.vector_parity(x) is None:
        raise AlgebraError("module action needs a homogeneous element")
    if f.algebra != A:
        raise AlgebraError("cochain over another algebra")
    result = Cochain.zero(A, f.degree)
    for pf in (0, 1):
        g = f.component(pf)
        if not g.is_zero():
            result = result + Cochain.from_function(A, f.degree, lambda args, g=g: module_action_value(A, x, g, args))
    return result


# -- cohomology ----------------------------------------------------------------

@dataclass(frozen=True)
class _Block:
    positions: tuple   # global coordinates of this parity block in C^n
    reps: tuple        # representative cocycles, block-local coordinates
    solver: Matrix     # columns: reps then a B^n basis (block-local)


@dataclass(frozen=True, eq=False)
class CohomologyResult:
    algebra: SuperAlgebra
    degree: int
    dims: tuple
    z_dims: tuple
    b_dims: tuple
    cocycle_reps: tuple
    label: str = "H"
    _blocks: tuple = dc_field(default=(), repr=False)

    @property
    def dim(self) -> int:
        return self.dims[0] + self.dims[1]

    def coordinates(self, f: Cochain) -> tuple:
        """Coordinates of the class of the cocycle ``f`` over ``cocycle_reps``."""
        if f.algebra != self.algebra or f.degree != self.degree:
            raise ValueError("cochain is not in this complex")
        if not is_cocycle(f):
            raise ValueError("not a cocycle")
        out = []
        for blk in self._blocks:
            local = [f.coeffs[k] for k in blk.positions]
            if not blk.positions:
                continue
            x = solve(blk.solver, local)
            assert x is not None
            out.extend(x[:len(blk.reps)])
        return tuple(out)

    def same_class(self, f: Cochain, g: Cochain) -> bool:
        return self.coordinates(f) == self.coordinates(g)

    def summary(self) -> str:
        return (f"{self.label}^{self.degree}({self.algebra.name}) = ({self.dims[0]}|{self.dims[1]}); "
                f"Z = ({self.z_dims[0]}|{self.z_dims[1]}), B = ({self.b_dims[0]}|{self.b_dims[1]})")

    def same_as(self, other: "CohomologyResult") -> bool:
        """Equal dims and identical representatives (labels ignored)."""
        return (self.algebra == other.algebra and self.degree == other.degree and self.dims == other.dims
                and self.z_dims == other.z_dims and self.b_dims == other.b_dims
                and self.cocycle_reps == other.cocycle_reps)


def _check_blocks(A: SuperAlgebra, d: Matrix, src: CochainSpace, tgt: CochainSpace) -> None:
    for r, ix in enumerate(tgt.basis):
        for c, jx in enumerate(src.basis):
            if ix.parity != jx.parity and d[r, c]:
                raise AlgebraError(f"differential mixes parities in {A.name}; is the algebra graded?")


def cohomology(A: SuperAlgebra, n: int) -> CohomologyResult:
    """``H^n = Z^n / B^n`` with a deterministic representative basis per parity.

    Representatives are the canonical ``Z^n`` basis vectors that extend
    the canonical ``B^n`` basis, taken greedily in pivot order.
    """
    if n < 0:
        raise ValueError("negative degree")
    F = A.field
    space = cochain_space(A, n)
    d_n = differential_matrix(A, n)
    _check_blocks(A, d_n, space, cochain_space(A, n + 1))
    d_prev = differential_matrix(A, n - 1) if n >= 1 else None
    if d_prev is not None:
        _check_blocks(A, d_prev, cochain_space(A, n - 1), space)
    blocks, reps, dims, zd, bd = [], [], [], [], []
    for parity in (0, 1):
        pos = tuple(space.block(parity))
        Z = kernel_basis(d_n.submatrix(range(d_n.rows), pos))
        if d_prev is None:
            B = Subspace(F, len(pos))
        else:
            prev_pos = cochain_space(A, n - 1).block(parity)
            B = Subspace(F, len(pos), [tuple(col[k] for k in pos) for col in
                                        (d_prev.column(c) for c in prev_pos)])
        chosen = extend_basis(B, Z.vectors)
        local_reps = tuple(Z.vectors[k] for k in chosen)
        solver = Matrix.from_columns(F, list(local_reps) + list(B.vectors), rows=len(pos))
        blocks.append(_Block(pos, local_reps, solver))
        for v in local_reps:
            full = [0] * space.dim
            for k, x in zip(pos, v):
                full[k] = x
            reps.append(Cochain(A, n, full))
        dims.append(len(local_reps))
        zd.append(Z.dim)
        bd.append(B.dim)
    return CohomologyResult(A, n, tuple(dims), tuple(zd), tuple(bd), tuple(reps), "H", tuple(blocks))
