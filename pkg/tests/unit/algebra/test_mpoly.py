from fractions import Fraction

import pytest

from qasc.algebra import (
    MPoly,
    elementary,
    from_monomial_basis,
    monomial_symmetric,
    schur,
    to_monomial_basis,
    vandermonde,
)
from qasc.partition import Partition
from qasc.utils import NonDivisibilityError, NotSymmetricError, QascValueError


def _xs(n: int) -> list[MPoly]:
    return [MPoly.variable(n, i) for i in range(n)]


def test_mpoly_arithmetic():
    x1, x2 = _xs(2)
    p = (x1 + x2) * (x1 - x2)
    assert p == x1**2 - x2**2
    assert p.degree() == 2
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((1, 1)) == 0
    assert (p - p).is_zero()
    assert x1.scale(Fraction(1, 2)).coefficient((1, 0)) == Fraction(1, 2)
    assert MPoly.one(2) + 1 == MPoly.constant(2, 2)


def test_mpoly_zero_terms_dropped():
    p = MPoly(2, {(1, 0): 0, (0, 1): "3/4"})
    assert len(p) == 1
    assert p.coefficient((0, 1)) == Fraction(3, 4)


def test_mpoly_invalid_exponent():
    with pytest.raises(QascValueError):
        MPoly(2, {(1,): 1})

    with pytest.raises(QascValueError):
        MPoly(2, {(1, -1): 1})


def test_exact_divide():
    x1, x2 = _xs(2)
    assert (x1**2 - x2**2).exact_divide(x1 - x2) == x1 + x2

    with pytest.raises(NonDivisibilityError):
        (x1 + x2).exact_divide(x1 - x2)

    with pytest.raises(QascValueError):
        x1.exact_divide(MPoly.zero(2))


def test_evaluate_and_truncate():
    x1, x2 = _xs(2)
    p = x1**3 + x1 * x2 + 1
    assert p.evaluate([Fraction(1, 2), 2]) == Fraction(1, 8) + 1 + 1
    assert p.truncate(2) == x1 * x2 + 1
    assert p.substitute(0, 0) == MPoly.one(2)

    with pytest.raises(QascValueError):
        p.evaluate([1])


def test_json_form():
    x1, x2 = _xs(2)
    p = x1**2 - x2.scale(Fraction(3, 2)) + 1
    data = p.to_json()
    assert data["nvars"] == 2
    assert data["terms"] == [
        {"exp": [0, 0], "coef": "1"},
        {"exp": [0, 1], "coef": "-3/2"},
        {"exp": [2, 0], "coef": "1"},
    ]
    assert str(p) == "x1^2 - 3/2*x2 + 1"
    assert MPoly.from_json(data) == p

    with pytest.raises(QascValueError):
        MPoly.from_json({"terms": []})


def test_symmetry():
    x1, x2 = _xs(2)
    assert (x1 * x2 + x1 + x2).is_symmetric()
    assert not (x1 + 2 * x2).is_symmetric()
    assert x1.swap(0, 1) == x2


@pytest.mark.parametrize(
    "parts, n, expected_terms",
    [
        ([2, 1], 3, 6),
        ([1, 1], 3, 3),
        ([2], 2, 2),
        ([], 4, 1),
    ],
)
def test_monomial_symmetric(parts: list[int], n: int, expected_terms: int):
    m = monomial_symmetric(Partition(parts), n)
    assert len(m) == expected_terms
    assert m.is_symmetric()


def test_monomial_basis_round_trip():
    e1 = elementary(1, 2)
    coeffs = to_monomial_basis(e1 * e1)
    assert coeffs == {Partition([2]): 1, Partition([1, 1]): 2}
    assert from_monomial_basis(coeffs, 2) == e1 * e1

    x1, _ = _xs(2)
    with pytest.raises(NotSymmetricError):
        to_monomial_basis(x1)


def test_schur_and_vandermonde():
    x1, x2 = _xs(2)
    assert vandermonde(2) == x1 - x2
    assert schur(Partition([1, 1]), 2) == x1 * x2
    assert schur(Partition([2]), 2) == x1**2 + x1 * x2 + x2**2

    with pytest.raises(QascValueError):
        schur(Partition([1, 1, 1]), 2)
