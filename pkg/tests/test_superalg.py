import pytest
from hypothesis import given

from strategies import algebras
from supercoh import corpus
from supercoh.field import GF, QQ
from supercoh.superalg import (ANTICOMMUTATIVITY, JACOBI, PARITY, AlgebraError, GradedSubspace, SuperAlgebra,
                               abelian, basis_central_ideals, center, complement_indices, derived_subalgebra,
                               direct_sum, is_central_graded_ideal, is_homomorphism, jacobiator, quotient,
                               validate)


def vec(A, **coeffs):
    v = [0] * A.dim
    for lab, c in coeffs.items():
        v[A.index(lab)] = c
    return tuple(A.field(x) for x in v)


# -- validate -----------------------------------------------------------------

def test_validate_abelian():
    assert validate(abelian(QQ, 2, 1)).ok


def test_validate_h3(h3):
    report = validate(h3)
    assert report.ok
    assert [c.axiom for c in report.checks] == [PARITY, ANTICOMMUTATIVITY, JACOBI]


def test_validate_inconsistent_declaration():
    A = SuperAlgebra.from_brackets("bad", QQ, ["x", "y"], [], {("x", "y"): {"x": 1}, ("y", "x"): {"x": 1}})
    check = validate(A)[ANTICOMMUTATIVITY]
    assert not check.passed
    assert check.witness == ("x", "y")


def test_consistent_double_declaration_accepted():
    A = SuperAlgebra.from_brackets("ok", QQ, ["x", "y", "z"], [], {("x", "y"): {"z": 1}, ("y", "x"): {"z": -1}})
    assert validate(A).ok


def test_odd_pair_symmetric_declaration():
    A = SuperAlgebra.from_brackets("s", QQ, ["z"], ["f", "g"], {("f", "g"): {"z": 1}, ("g", "f"): {"z": 1}})
    assert validate(A).ok


def test_parity_violation():
    A = SuperAlgebra.from_brackets("bad", QQ, ["x", "y"], ["f"], {("x", "y"): {"f": 1}})
    check = validate(A)[PARITY]
    assert not check.passed and check.witness == ("x", "y")


def test_even_self_bracket_rejected():
    A = SuperAlgebra.from_brackets("bad", QQ, ["x", "y"], [], {("x", "x"): {"y": 1}})
    assert not validate(A)[ANTICOMMUTATIVITY].passed


def test_jacobi_failure_has_witness():
    # [x,y]=y, [x,z]=z, [y,z]=x fails Jacobi
    A = SuperAlgebra.from_brackets("bad", QQ, ["x", "y", "z"], [],
                                   {("x", "y"): {"y": 1}, ("x", "z"): {"z": 1}, ("y", "z"): {"x": 1}})
    check = validate(A)[JACOBI]
    assert not check.passed
    assert any(jacobiator(A, *(A.index(w) for w in check.witness)))


def test_sl2_passes():
    A = SuperAlgebra.from_brackets("sl2", QQ, ["h", "e", "f"], [],
                                   {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}})
    assert validate(A).ok


def test_osp12_passes():
    # osp(1|2): even h, e, f; odd u, v
    br = {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1},
          ("h", "u"): {"u": 1}, ("h", "v"): {"v": -1}, ("e", "v"): {"u": -1}, ("f", "u"): {"v": -1},
          ("u", "u"): {"e": 2}, ("v", "v"): {"f": -2}, ("u", "v"): {"h": 1}}
    A = SuperAlgebra.from_brackets("osp12", QQ, ["h", "e", "f"], ["u", "v"], br)
    assert validate(A).ok


@given(algebras())
def test_generated_and_corpus_algebras_valid(A):
    assert validate(A).ok


# -- bracket --------------------------------------------------------------------

def test_bracket_examples(h3, sh11):
    assert h3.bracket(vec(h3, x=1), vec(h3, y=1)) == vec(h3, z=1)
    assert h3.bracket(vec(h3, y=1), vec(h3, x=1)) == vec(h3, z=-1)
    v = vec(h3, x=2, y=-3, z=5)
    assert not any(h3.bracket(v, v))
    assert sh11.bracket(vec(sh11, f=1), vec(sh11, f=1)) == vec(sh11, z=1)


def test_bracket_dimension_mismatch(h3):
    with pytest.raises(AlgebraError):
        h3.bracket((1, 0), (0, 1, 0))


@given(algebras())
def test_brackets_of_homogeneous_are_homogeneous(A):
    for i in range(A.dim):
        for j in range(A.dim):
            v = A.table[i][j]
            if any(v):
                assert A.vector_parity(v) == (A.parity(i) + A.parity(j)) % 2


@given(algebras())
def test_table_super_anticommutative(A):
    for i in range(A.dim):
        for j in range(A.dim):
            s = -1 if A.parity(i) * A.parity(j) else 1
            assert A.table[j][i] == tuple(-s * x for x in A.table[i][j])


# -- derived subalgebra, center, ideals -------------------------------------------

@pytest.mark.parametrize("m,q", [(0, 0), (2, 1), (3, 3)])
def test_abelian_derived_and_center(m, q):
    A = abelian(QQ, m, q)
    assert derived_subalgebra(A).graded_dim == (0, 0)
    assert center(A).graded_dim == (m, q)


def test_h3_derived_and_center(h3):
    z = GradedSubspace.from_labels(h3, ["z"])
    assert derived_subalgebra(h3) == z
    assert center(h3) == z


def test_sh11_derived_and_center(sh11):
    z = GradedSubspace.from_labels(sh11, ["z"])
    assert derived_subalgebra(sh11) == z and z.graded_dim == (1, 0)
    assert center(sh11) == z


def test_center_of_sl2_is_zero():
    A = SuperAlgebra.from_brackets("sl2", QQ, ["h", "e", "f"], [],
                                   {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}})
    assert center(A).dim == 0
    assert derived_subalgebra(A).dim == 3


def test_central_ideal_examples(h3):
    assert is_central_graded_ideal(h3, GradedSubspace.zero(h3))
    assert is_central_graded_ideal(h3, GradedSubspace.from_labels(h3, ["z"]))
    assert not is_central_graded_ideal(h3, GradedSubspace.from_labels(h3, ["x"]))


def test_graded_span_rejects_mixed_vector(sh11):
    with pytest.raises(AlgebraError):
        GradedSubspace.span(sh11, [vec(sh11, z=1, f=1)])


@given(algebras())
def test_center_elements_commute(A):
    Z = center(A)
    for v in Z.vectors():
        for i in range(A.dim):
            assert not any(A.bracket(v, A.basis_vector(i)))


@given(algebras())
def test_center_contains_every_central_basis_element(A):
    Z = center(A)
    for H in basis_central_ideals(A):
        assert H <= Z
        assert is_central_graded_ideal(A, H)


# -- quotient -------------------------------------------------------------------

def test_h3_quotient_is_abelian(h3):
    Q, pi = quotient(h3, GradedSubspace.from_labels(h3, ["z"]))
    assert Q.graded_dim == (2, 0)
    assert not Q.structure
    assert Q.labels == ("x", "y")


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (0, 2), (2, 1)])
def test_abelian_quotient(a, b):
    A = abelian(GF(5), 3, 2)
    H = GradedSubspace.from_labels(A, [f"e{i + 1}" for i in range(a)] + [f"f{i + 1}" for i in range(b)])
    Q, _ = quotient(A, H)
    assert Q.graded_dim == (3 - a, 2 - b)
    assert not Q.structure


def test_sh11_quotient(sh11):
    Q, _ = quotient(sh11, GradedSubspace.from_labels(sh11, ["z"]))
    assert Q.graded_dim == (0, 1) and not Q.structure


def test_quotient_rejects_noncentral(h3):
    with pytest.raises(AlgebraError):
        quotient(h3, GradedSubspace.from_labels(h3, ["x"]))


def test_complement_is_lowest_index_greedy(h3):
    H = GradedSubspace.span(h3, [vec(h3, x=1, z=1)])
    # x is not in span{x + z}, so it is picked first; z is then redundant
    assert complement_indices(h3, H) == [0, 1]


@given(algebras())
def test_quotients_valid_and_projection_homomorphic(A):
    for H in basis_central_ideals(A):
        Q, pi = quotient(A, H)
        assert validate(Q).ok
        assert is_homomorphism(pi, A, Q)
        comp = complement_indices(A, H)
        # pi o (inclusion of the complement) = id
        for k, i in enumerate(comp):
            assert pi.apply(A.basis_vector(i)) == Q.basis_vector(k)
        for v in H.vectors():
            assert not any(pi.apply(v))


# -- constructions --------------------------------------------------------------

def test_direct_sum_labels_and_validity():
    h3 = corpus.load("h3")
    S = direct_sum(h3, h3)
    assert S.graded_dim == (6, 0)
    assert len(set(S.labels)) == 6
    assert validate(S).ok
    assert center(S).graded_dim == (2, 0)


def test_over_changes_field(h3):
    B = h3.over(GF(7))
    assert B.field == GF(7)
    assert validate(B).ok
    assert B != h3


def test_equality_ignores_declaration_order():
    a = SuperAlgebra.from_brackets("h", QQ, ["x", "y", "z"], [], {("x", "y"): {"z": 1}})
    b = SuperAlgebra.from_brackets("h", QQ, ["x", "y", "z"], [], {("y", "x"): {"z": -1}})
    assert a == b and hash(a) == hash(b)
