from fractions import Fraction

import pytest

from qasc.algebra import MPoly, ParamPoint, elementary, monomial_symmetric
from qasc.macdonald import (
    e0_action_P,
    from_macdonald_basis,
    lassalle_binomials,
    lassalle_expansion_check,
    macdonald_P,
    macdonald_property_check,
    pieri_checks,
    pieri_e1_P,
    positivity_check,
    to_macdonald_basis,
)
from qasc.partition import Partition
from qasc.utils import ParameterError, QascValueError, ResonanceError

Q = Fraction(1, 2)
T = Fraction(1, 3)


def _pt(n: int = 2) -> ParamPoint:
    return ParamPoint(q=Q, t=T, nvars=n)


def test_low_degree_polynomials():
    pt = _pt()
    m2 = monomial_symmetric(Partition([2]), 2)
    m11 = monomial_symmetric(Partition([1, 1]), 2)
    assert macdonald_P(Partition(), pt) == monomial_symmetric(Partition(), 2)
    assert macdonald_P(Partition([1]), pt) == elementary(1, 2)
    assert macdonald_P(Partition([1, 1]), pt) == m11
    coef = (1 + Q) * (1 - T) / (1 - Q * T)
    assert macdonald_P(Partition([2]), pt) == m2 + m11.scale(coef)


@pytest.mark.parametrize(
    "parts, n, expected",
    [
        ([2], 2, {(2,): 1, (1, 1): Fraction(6, 5)}),
        ([2], 3, {(2,): 1, (1, 1): Fraction(6, 5)}),
        ([2, 1], 2, {(2, 1): 1}),
        ([2, 1], 3, {(2, 1): 1, (1, 1, 1): Fraction(38, 17)}),
        ([3], 2, {(3,): 1, (2, 1): Fraction(14, 11)}),
        ([3], 3, {(3,): 1, (2, 1): Fraction(14, 11), (1, 1, 1): Fraction(84, 55)}),
    ],
)
def test_known_coefficients(parts, n, expected):
    expected_poly = sum(
        (
            monomial_symmetric(Partition(list(mu)), n).scale(Fraction(coef))
            for mu, coef in expected.items()
        ),
        MPoly.zero(n),
    )
    assert macdonald_P(Partition(parts), _pt(n)) == expected_poly


def test_known_coefficients_closed_forms():
    q, t = Fraction(2, 5), Fraction(3, 7)
    pt = ParamPoint(q=q, t=t, nvars=3)
    m3, m21, m111 = (
        monomial_symmetric(Partition(p), 3) for p in ([3], [2, 1], [1, 1, 1])
    )
    p21 = m21 + m111.scale((1 - t) * (2 + q + t + 2 * q * t) / (1 - q * t**2))
    assert macdonald_P(Partition([2, 1]), pt) == p21
    c21 = (1 - t) * (1 + q + q**2) / (1 - q**2 * t)
    c111 = (1 - t) ** 2 * (1 + q) * (1 + q + q**2) / ((1 - q * t) * (1 - q**2 * t))
    assert macdonald_P(Partition([3]), pt) == m3 + m21.scale(c21) + m111.scale(c111)


def test_inversion_symmetry():
    pt = _pt(3)
    for parts in ([2, 1], [3], [2, 2]):
        kappa = Partition(parts)
        assert macdonald_P(kappa, pt) == macdonald_P(kappa, pt.inverted())


def test_stability_in_n():
    p3 = macdonald_P(Partition([2, 1]), _pt(3)).substitute(2, 0)
    p2 = macdonald_P(Partition([2, 1]), _pt(2)).embed(3)
    assert p3 == p2


def test_resonance():
    pt = ParamPoint(q=Q, t=1 / Q, nvars=2)
    with pytest.raises(ResonanceError) as err:
        macdonald_P(Partition([2]), pt)
    assert err.value.pair == (Partition([2]), Partition([1, 1]))


def test_too_long():
    with pytest.raises(QascValueError):
        macdonald_P(Partition([1, 1, 1]), _pt())


def test_basis_change():
    pt = _pt()
    e1 = elementary(1, 2)
    coefficients = to_macdonald_basis(e1 * e1, pt)
    assert coefficients == {
        Partition([2]): 1,
        Partition([1, 1]): 2 - (1 + Q) * (1 - T) / (1 - Q * T),
    }
    assert from_macdonald_basis(coefficients, pt) == e1 * e1


def test_pieri_expansions():
    pt = _pt()
    assert dict(pieri_e1_P(Partition(), pt)) == {Partition([1]): 1}
    assert dict(e0_action_P(Partition([1]), pt)) == {Partition(): 1 + T}
    assert e0_action_P(Partition(), pt) == []


@pytest.mark.parametrize("n", [1, 2, 3])
def test_macdonald_checks(n: int):
    pt = _pt(n)
    assert macdonald_property_check(pt, 3).passed
    assert pieri_checks(pt, 3).passed
    assert positivity_check(pt, 3).passed


def test_positivity_needs_unit_interval():
    with pytest.raises(ParameterError):
        positivity_check(ParamPoint(q=2, t=T, nvars=2), 2)


def test_lassalle_binomials():
    pt = _pt()
    binomials = lassalle_binomials(Partition(), pt, 2)
    assert binomials[Partition()] == 1
    assert binomials[Partition([1])] == 1
    assert lassalle_expansion_check(Partition([1]), pt, 3).passed
