"""Brute-force commutant solver used as the independent cross-check."""

import random

import pytest

from centra import (
    Matrix,
    NotSquareError,
    Poly,
    ShapeMismatchError,
    TooLargeError,
    block_permutation_matrix,
    commutant_basis,
    commutant_dimension,
    commutes,
    companion_matrix,
    jordan_form,
    make_spec,
    prime_field,
    sylvester_system,
)

F2 = prime_field(2)
F3 = prime_field(3)
F5 = prime_field(5)


def test_identity_commutant_is_everything():
    basis = commutant_basis(Matrix.identity(F3, 2))
    assert len(basis) == 4
    assert commutant_dimension(Matrix.identity(F3, 2)) == 4


def test_irreducible_companion_dimension():
    c = companion_matrix(Poly.parse("x^2+1", F3))
    basis = commutant_basis(c)
    assert len(basis) == 2
    for b in basis:
        assert b * c == c * b


def test_nilpotent_two_chains():
    # chains of lengths 2 and 1: dimension 2*min+2*min+... = 5
    a = Matrix(F5, [[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    assert commutant_dimension(a) == 5
    basis = commutant_basis(a)
    assert len(basis) == 5
    stacked = Matrix(F5, [b.flat() for b in basis])
    assert stacked.rank() == 5


def test_sylvester_system_shape():
    a = Matrix(F3, [[1, 2], [0, 1]])
    sys = sylvester_system(a)
    assert sys.rows == 4 and sys.cols == 4
    # row for entry (i, j) applies a on the left minus a on the right
    x = Matrix(F3, [[1, 1], [0, 1]])
    vec = [x[i % 2, i // 2] for i in range(4)]
    prod = [sum((sys[r, k] * vec[k] for k in range(4) if vec[k]), F3.zero)
            for r in range(4)]
    lhs = a * x - x * a
    assert prod == [lhs[i % 2, i // 2] for i in range(4)]
    with pytest.raises(NotSquareError):
        sylvester_system(Matrix(F3, [[1, 2, 0]]))


def test_commutes_predicate():
    a = Matrix(F3, [[0, 0], [1, 0]])
    assert commutes(a, Matrix.identity(F3, 2))
    assert commutes(a, a)
    assert not commutes(a, a.transpose())
    with pytest.raises(ShapeMismatchError):
        commutes(a, Matrix.identity(F3, 3))
    with pytest.raises(NotSquareError):
        commutes(Matrix(F3, [[1, 2]]), Matrix(F3, [[1, 2]]))


def test_dimension_invariant_under_conjugation():
    rng = random.Random(21)
    spec = make_spec(Poly.parse("x^2+1", F3), (2, 1))
    g = jordan_form(spec)
    base = commutant_dimension(g)
    order = list(range(3))
    for _ in range(5):
        rng.shuffle(order)
        pm = block_permutation_matrix(F3, order, 2)
        assert commutant_dimension(pm.inverse() * g * pm) == base


def test_direct_sum_additivity_for_coprime_blocks():
    # distinct eigenvalues: the commutant splits along the two summands
    g1 = jordan_form(make_spec(Poly.parse("x+1", F5), (2,)))
    g2 = jordan_form(make_spec(Poly.parse("x+2", F5), (1, 1)))
    n1, n2 = g1.rows, g2.rows
    big = Matrix(F5, [[g1[i, j] if i < n1 and j < n1
                       else g2[i - n1, j - n1] if i >= n1 and j >= n1
                       else 0 for j in range(n1 + n2)]
                      for i in range(n1 + n2)])
    assert commutant_dimension(big) == \
        commutant_dimension(g1) + commutant_dimension(g2)


def test_basis_elements_commute_pairwise_with_generator():
    a = jordan_form(make_spec(Poly.parse("x^2+x+1", F2), (2, 2)))
    basis = commutant_basis(a)
    assert len(basis) == commutant_dimension(a)
    for b in basis:
        assert commutes(a, b)


def test_size_cap(monkeypatch):
    a = Matrix.identity(F2, 3)
    with pytest.raises(TooLargeError):
        commutant_basis(a, max_n=2)
    with pytest.raises(TooLargeError):
        commutant_dimension(a, max_n=2)
    monkeypatch.setenv("CENTRA_MAX_N", "2")
    with pytest.raises(TooLargeError):
        commutant_dimension(a)
    # explicit parameter wins over the environment
    assert commutant_dimension(a, max_n=5) == 9
    monkeypatch.setenv("CENTRA_MAX_N", "50")
    assert commutant_dimension(a) == 9
