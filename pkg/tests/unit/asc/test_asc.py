from fractions import Fraction

import pytest

from qasc.algebra import MPoly, ParamPoint, elementary
from qasc.asc import (
    AscPoly,
    ImplementedRoutes,
    asc_u,
    asc_u_eigen,
    asc_u_expop,
    asc_u_genfun,
    asc_v,
    asc_v_expop,
    route_agreement,
    to_asc_basis,
)
from qasc.partition import Partition, partitions_up_to
from qasc.qseries import u1, v1
from qasc.utils import NotSymmetricError, QascValueError, ResonanceError

Q = Fraction(1, 2)
T = Fraction(1, 3)


def _pt(n: int = 2, a: Fraction = Fraction(-1)) -> ParamPoint:
    return ParamPoint(q=Q, t=T, a=a, nvars=n)


def test_degree_one():
    pt = _pt()
    u = asc_u(Partition([1]), pt)
    assert isinstance(u, AscPoly)
    assert u.family == "U"
    assert u.poly == elementary(1, 2)

    a = Fraction(-2, 5)
    u = asc_u(Partition([1]), _pt(a=a)).poly
    assert u == elementary(1, 2) - (1 + a) * (1 + T)
    assert asc_u(Partition(), pt).poly == MPoly.one(2)


def test_one_variable_reduction():
    pt = _pt(1, Fraction(-1, 3))
    for m in range(4):
        kappa = Partition([m])
        assert asc_u(kappa, pt).poly == u1(m, pt).to_mpoly()
        assert asc_v(kappa, pt).poly == v1(m, pt).to_mpoly()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_routes_agree(n: int):
    pt = _pt(n, Fraction(-1, 2))
    for kappa in partitions_up_to(2, n):
        eigen = asc_u_eigen(kappa, pt).poly
        assert asc_u_genfun(kappa, pt).poly == eigen
        assert asc_u_expop(kappa, pt).poly == eigen
        assert asc_v_expop(kappa, pt).poly == asc_v(kappa, pt).poly
        assert route_agreement(kappa, pt).passed


def test_v_family_metadata():
    pt = _pt()
    v = asc_v(Partition([1]), pt)
    assert v.family == "V"
    assert v.pt == pt
    data = v.to_json()
    assert data["family"] == "V"
    assert data["kappa"] == [1]
    assert data["params"] == {"q": "1/2", "t": "1/3", "a": "-1", "n": "2"}


def test_to_asc_basis():
    pt = _pt()
    u = asc_u(Partition([2, 1]), pt).poly
    assert to_asc_basis(u, pt) == {Partition([2, 1]): 1}
    e1 = elementary(1, 2)
    assert to_asc_basis(e1, pt) == {Partition([1]): 1}

    with pytest.raises(NotSymmetricError):
        to_asc_basis(MPoly.variable(2, 0), pt)


def test_too_long_partition():
    with pytest.raises(QascValueError):
        asc_u(Partition([1, 1, 1]), _pt())


def test_resonance():
    # e~((2)) = q^-2 = 1 = e~(()) at q = -1
    pt = ParamPoint(q=-1, t=T, a=-1, nvars=1)
    with pytest.raises(ResonanceError) as err:
        asc_u(Partition([2]), pt)
    assert err.value.pair == (Partition([2]), Partition())


def test_implemented_routes():
    routes = ImplementedRoutes()
    assert routes.available_routes == ["eigen", "genfun", "expop"]

    with pytest.raises(QascValueError):
        routes.get_route("unknown")

    with pytest.raises(QascValueError):
        routes.add_route("eigen", routes.get_route("genfun"))

    eigen = routes.get_route("eigen")
    routes.add_route("eigen", eigen, overwrite=True)
    assert routes.get_route("eigen") is eigen
