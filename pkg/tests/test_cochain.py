import random
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import enumerate_cochain_dim, h2_dims_bilinear
from strategies import algebras, small_algebras
from supercoh import corpus
from supercoh.cochain import (Cochain, CochainIndex, canonicalize, cochain_basis, cochain_dim, cochain_space,
                              cohomology, cyclic_sum, differential, differential_matrix, evaluate,
                              is_coboundary, is_cocycle, module_action, module_action_value)
from supercoh.field import GF, QQ
from supercoh.linalg import Matrix, Subspace, kernel_basis, rank
from supercoh.superalg import AlgebraError, abelian


def sgn(k):
    return -1 if k % 2 else 1


def random_cochain(A, n, rng, parity=None):
    space = cochain_space(A, n)
    coeffs = []
    for ix in space.basis:
        keep = parity is None or ix.parity == parity
        coeffs.append(A.field.random(rng) if keep else A.field.zero)
    return Cochain(A, n, coeffs)


def form(A, n, *labels):
    """The basis form dual to the canonical index with the given labels."""
    s, ix = canonicalize(A, [A.index(x) for x in labels])
    assert s == 1
    return Cochain.basis_form(A, ix)


# -- basis --------------------------------------------------------------------

def test_basis_abelian_2_0():
    A = abelian(QQ, 2, 0)
    assert cochain_basis(A, 2) == [CochainIndex((0, 1), ())]
    assert cochain_space(A, 2).graded_dim == (1, 0)


def test_basis_1_1_degree_2():
    A = abelian(QQ, 1, 1)
    basis = cochain_basis(A, 2)
    assert basis == [CochainIndex((), (1, 1)), CochainIndex((0,), (1,))]
    assert [ix.parity for ix in basis] == [0, 1]
    assert cochain_space(A, 2).graded_dim == (1, 1)


def test_basis_0_1_degree_3():
    A = abelian(QQ, 0, 1)
    assert cochain_basis(A, 3) == [CochainIndex((), (0, 0, 0))]
    assert cochain_space(A, 3).graded_dim == (0, 1)


def test_degree_zero_basis():
    assert cochain_basis(abelian(QQ, 2, 2), 0) == [CochainIndex((), ())]


def test_basis_is_lexicographic():
    A = abelian(QQ, 2, 2)
    for n in range(4):
        basis = cochain_basis(A, n)
        assert basis == sorted(basis)
        assert len(set(basis)) == len(basis)
        for ix in basis:
            assert all(a < b for a, b in zip(ix.even, ix.even[1:]))
            assert all(a <= b for a, b in zip(ix.odd, ix.odd[1:]))
            assert ix.degree == n


@pytest.mark.parametrize("m", range(4))
@pytest.mark.parametrize("q", range(4))
@pytest.mark.parametrize("n", range(5))
def test_cochain_dim_formula(m, q, n):
    formula = sum(comb(m, a) * comb(q + n - a - 1, n - a) for a in range(n + 1)) if q else comb(m, n)
    assert cochain_dim(m, q, n) == formula == enumerate_cochain_dim(m, q, n)
    assert cochain_space(abelian(QQ, m, q), n).dim == formula


# -- evaluation -----------------------------------------------------------------

def test_evaluate_examples():
    A = abelian(QQ, 2, 2)
    e12 = form(A, 2, "e1", "e2")
    assert evaluate(e12, (1, 0)) == -1
    ff = form(A, 2, "f1", "f1")
    assert evaluate(ff, (2, 2)) == 1
    for f in (e12, ff, form(A, 2, "e1", "f2")):
        assert evaluate(f, (0, 0)) == 0


def test_odd_pair_symmetric():
    A = abelian(QQ, 1, 2)
    f = form(A, 2, "f1", "f2")
    assert evaluate(f, (1, 2)) == evaluate(f, (2, 1)) == 1
    g = form(A, 2, "e1", "f1")
    assert evaluate(g, (1, 0)) == -1


@given(small_algebras(), st.integers(1, 4), st.integers(0, 10**6))
def test_evaluate_permutation_path_invariance(A, n, seed):
    if A.dim == 0:
        return
    rng = random.Random(seed)
    f = random_cochain(A, n, rng)
    p = A.parities
    base = tuple(rng.randrange(A.dim) for _ in range(n))
    value = evaluate(f, base)
    for _ in range(3):
        # wander through random adjacent swaps, accumulating signs
        args, s = list(base), 1
        for _ in range(rng.randint(0, 12)):
            if n < 2:
                break
            i = rng.randrange(n - 1)
            s *= -sgn(p[args[i]] * p[args[i + 1]])
            args[i], args[i + 1] = args[i + 1], args[i]
        assert evaluate(f, args) == s * value


def test_on_vectors_is_multilinear(h3):
    rng = random.Random(3)
    f = random_cochain(h3, 2, rng)
    u = tuple(h3.field.random(rng) for _ in range(3))
    v = tuple(h3.field.random(rng) for _ in range(3))
    w = tuple(h3.field.random(rng) for _ in range(3))
    uv = tuple(a + b for a, b in zip(u, v))
    assert f.on_vectors(uv, w) == f.on_vectors(u, w) + f.on_vectors(v, w)
    assert f.on_vectors(u, u) == 0


# -- differential -----------------------------------------------------------------

def literal_delta(A, f, args):
    """The defining sum of the differential, evaluated on an arbitrary argument tuple."""
    p = A.parities
    total = A.field.zero
    n1 = len(args)
    for i in range(n1):
        for j in range(i + 1, n1):
            s = sgn(j + 1 + p[args[j]] * sum(p[args[t]] for t in range(i + 1, j)))
            vecs = [A.basis_vector(a) for a in args]
            vecs[i] = A.bracket(vecs[i], vecs[j])
            del vecs[j]
            total = total + s * f.on_vectors(*vecs)
    return total


@pytest.mark.parametrize("n", range(4))
def test_differential_zero_on_abelian(n):
    assert differential_matrix(abelian(GF(7), 2, 2), n).is_zero()


def test_h3_delta1_rank(h3):
    d = differential_matrix(h3, 1)
    assert d.shape == (3, 3)
    assert rank(d) == 1


def test_degree_one_differential_reads_bracket(h3):
    sigma = form(h3, 1, "z")
    d = differential(sigma)
    assert d(0, 1) == 1 and d(1, 0) == -1
    assert d(0, 2) == 0 and d(1, 2) == 0


@given(small_algebras(), st.integers(0, 2), st.integers(0, 10**6))
def test_differential_matches_literal_formula(A, n, seed):
    if A.dim == 0:
        return
    rng = random.Random(seed)
    f = random_cochain(A, n, rng)
    d = differential(f)
    for args in product(range(A.dim), repeat=n + 1):
        assert evaluate(d, args) == literal_delta(A, f, args)


@given(algebras())
def test_delta_squared_zero(A):
    for n in (0, 1, 2):
        d1, d2 = differential_matrix(A, n), differential_matrix(A, n + 1)
        if d1.cols and d2.rows:
            assert (d2 @ d1).is_zero()


@given(algebras(), st.integers(0, 3))
def test_differential_preserves_parity(A, n):
    src, tgt = cochain_space(A, n), cochain_space(A, n + 1)
    d = differential_matrix(A, n)
    for r, ti in enumerate(tgt.basis):
        for c, si in enumerate(src.basis):
            if d[r, c]:
                assert ti.parity == si.parity


@given(algebras(), st.integers(0, 10**6))
def test_cyclic_sum_equals_signed_delta(A, seed):
    f = random_cochain(A, 2, random.Random(seed))
    d = differential(f)
    p = A.parities
    for x, y, z in product(range(A.dim), repeat=3):
        assert cyclic_sum(f, x, y, z) == sgn(p[x] * p[z]) * d(x, y, z)


@given(algebras())
def test_z2_equals_cyclic_kernel(A):
    F = A.field
    space = cochain_space(A, 2)
    if space.dim == 0:
        return
    rows = []
    basis_forms = [Cochain.basis_form(A, ix) for ix in space.basis]
    for x, y, z in product(range(A.dim), repeat=3):
        rows.append([cyclic_sum(g, x, y, z) for g in basis_forms])
    cyclic_kernel = kernel_basis(Matrix.from_rows(F, rows, cols=space.dim))
    assert cyclic_kernel == kernel_basis(differential_matrix(A, 2))


# -- cocycles and coboundaries --------------------------------------------------

def test_zero_is_cocycle_and_coboundary(h3):
    z = Cochain.zero(h3, 2)
    assert is_cocycle(z)
    ok, sigma = is_coboundary(z)
    assert ok and sigma.is_zero()


def test_h3_area_form_witness(h3):
    f = form(h3, 2, "x", "y")
    assert is_cocycle(f)
    ok, sigma = is_coboundary(f)
    assert ok
    assert sigma(h3.index("z")) == -1
    assert sigma(h3.index("x")) == sigma(h3.index("y")) == 0


@pytest.mark.parametrize("labels", [("e1", "e2"), ("f1", "f1"), ("e1", "f1")])
def test_abelian_forms_not_coboundaries(labels):
    A = abelian(QQ, 2, 1)
    f = form(A, 2, *labels)
    assert is_cocycle(f)
    assert is_coboundary(f) == (False, None)


@given(algebras(), st.integers(0, 10**6))
def test_degree_two_witness_convention(A, seed):
    rng = random.Random(seed)
    sigma = random_cochain(A, 1, rng)
    f = Cochain.from_function(A, 2, lambda args: -sigma.on_vectors(A.table[args[0]][args[1]]))
    ok, tau = is_coboundary(f)
    assert ok
    for i, j in product(range(A.dim), repeat=2):
        assert f(i, j) == -tau.on_vectors(A.table[i][j])


@given(small_algebras(), st.integers(0, 10**6))
def test_degree_three_witness(A, seed):
    g = random_cochain(A, 2, random.Random(seed))
    f = differential(g)
    ok, tau = is_coboundary(f)
    assert ok and differential(tau) == f


# -- cohomology ---------------------------------------------------------------------

@pytest.mark.parametrize("m", range(4))
@pytest.mark.parametrize("q", range(4))
def test_abelian_h2(m, q):
    assert cohomology(abelian(QQ, m, q), 2).dims == (m * (m - 1) // 2 + q * (q + 1) // 2, m * q)


def test_h3_h2(h3):
    res = cohomology(h3, 2)
    assert res.dims == (2, 0)
    assert res.z_dims == (3, 0) and res.b_dims == (1, 0)


@pytest.mark.parametrize("F", [QQ, GF(5), GF(7)])
def test_sh11_h2(F):
    assert cohomology(corpus.load("sh11", F), 2).dims == (0, 0)


@pytest.mark.parametrize("name", corpus.names())
def test_corpus_h2_matches_bilinear_oracle(name):
    for F in (QQ, GF(5), GF(7)):
        A = corpus.load(name, F)
        assert cohomology(A, 2).dims == h2_dims_bilinear(A)


@pytest.mark.parametrize("name", corpus.names())
@pytest.mark.parametrize("n", [1, 2, 3])
def test_corpus_cohomology_field_independent(name, n):
    dims = {cohomology(corpus.load(name, F), n).dims for F in (QQ, GF(5), GF(7))}
    assert len(dims) == 1


@given(algebras(), st.sampled_from([1, 2]))
def test_cohomology_invariants(A, n):
    res = cohomology(A, n)
    assert res.dims == tuple(z - b for z, b in zip(res.z_dims, res.b_dims))
    assert len(res.cocycle_reps) == res.dim
    assert [f.parity for f in res.cocycle_reps] == [0] * res.dims[0] + [1] * res.dims[1]
    for f in res.cocycle_reps:
        assert is_cocycle(f)
    # reps are independent modulo coboundaries
    space = cochain_space(A, n)
    B = Subspace(A.field, space.dim, differential_matrix(A, n - 1).columns())
    span = Subspace(A.field, space.dim, list(B.vectors) + [f.coeffs for f in res.cocycle_reps])
    assert span.dim == B.dim + res.dim
    assert sum(res.b_dims) == B.dim


@given(algebras(), st.integers(0, 10**6))
def test_coordinates_of_shifted_cocycle(A, seed):
    rng = random.Random(seed)
    res = cohomology(A, 2)
    F = A.field
    coeffs = [F.random(rng) for _ in res.cocycle_reps]
    f = Cochain.zero(A, 2)
    for c, r in zip(coeffs, res.cocycle_reps):
        f = f + c * r
    g = f + differential(random_cochain(A, 1, rng))
    assert res.coordinates(g) == tuple(coeffs)
    assert res.same_class(f, g)


def test_coordinates_reject_non_cocycle():
    A = corpus.load("nil22")
    res = cohomology(A, 2)
    bad = next(Cochain.basis_form(A, ix) for ix in cochain_basis(A, 2)
               if not is_cocycle(Cochain.basis_form(A, ix)))
    with pytest.raises(ValueError):
        res.coordinates(bad)


def test_cohomology_is_deterministic(h3):
    a = cohomology(h3, 2)
    b = cohomology(corpus.load("h3"), 2)
    assert a.same_as(b)
    assert [f.coeffs for f in a.cocycle_reps] == [f.coeffs for f in b.cocycle_reps]


# -- module action ----------------------------------------------------------------

def test_module_action_abelian_is_zero():
    A = abelian(QQ, 2, 2)
    rng = random.Random(0)
    for n in (1, 2):
        f = random_cochain(A, n, rng)
        for i in range(A.dim):
            assert module_action(A, A.basis_vector(i), f).is_zero()


def test_module_action_h3_example(h3):
    sigma = form(h3, 1, "z")
    x = h3.basis_vector(h3.index("x"))
    assert module_action(h3, x, sigma)(h3.index("y")) == -1


def test_module_action_zero_element(h3):
    f = random_cochain(h3, 2, random.Random(1))
    assert module_action(h3, h3.zero_vector(), f).is_zero()


def test_module_action_rejects_mixed_element(sh11):
    f = random_cochain(sh11, 1, random.Random(1))
    with pytest.raises(AlgebraError):
        module_action(sh11, (1, 1), f)


@given(small_algebras(), st.integers(1, 3), st.integers(0, 10**6))
def test_module_action_exchange_rule(A, n, seed):
    if A.dim == 0:
        return
    rng = random.Random(seed)
    p = A.parities
    for pf in (0, 1):
        f = random_cochain(A, n, rng, parity=pf)
        for i in range(A.dim):
            x = A.basis_vector(i)
            for args in product(range(A.dim), repeat=n):
                val = module_action_value(A, x, f, args)
                for k in range(n - 1):
                    swapped = list(args)
                    swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
                    other = module_action_value(A, x, f, swapped)
                    assert val == -sgn(p[args[k]] * p[args[k + 1]]) * other
                assert module_action(A, x, f)(*args) == val


@given(small_algebras(fields=st.just(GF(5))), st.integers(0, 10**6))
def test_module_action_parity(A, seed):
    rng = random.Random(seed)
    for pf in (0, 1):
        f = random_cochain(A, 2, rng, parity=pf)
        for i in range(A.dim):
            g = module_action(A, A.basis_vector(i), f)
            if not g.is_zero():
                assert g.parity == (pf + A.parity(i)) % 2

