import math

import pytest

import arithgeo as ag


def test_version():
    assert ag.__version__ == "1.0.0"


def test_splitting():
    assert ag.splitting(-4, 5) == "split"
    assert ag.splitting(-4, 3) == "inert"
    assert ag.splitting(-4, 2) == "ramified"
    assert ag.is_fundamental_discriminant(-4)
    assert not ag.is_fundamental_discriminant(-16)
    with pytest.raises(ag.PreconditionError):
        ag.splitting(-4, 9)


def test_construct_fields():
    fc = ag.construct_fields(-4, 2)
    assert fc["certified"]
    assert [f["x"] for f in fc["fields"]] == [1, 3]
    assert [f["disc_bound"] for f in fc["fields"]] == [20480, 53248]
    assert fc["fields"][0]["minimal_polynomial"] == "T^4 - 2T^2 + 5"


def test_census_counts():
    assert ag.in_P(-4, 1, 41)
    assert not ag.in_P(-4, 1, 3)
    with pytest.raises(ag.BoundaryPrimeError):
        ag.in_P(-4, 1, 5)
    assert ag.squarefree_count(-4, 1, 40) == 0
    assert ag.squarefree_count(-4, 1, 41) == 1
    assert ag.algebra_count(-4, 1, 1682) == 1
    assert ag.algebra_count(-4, 1, 1681) == 0
    assert ag.prime_count(-4, 1, 100) == 2


def test_recover():
    r = ag.recover(-4, [5])
    assert r["recovered"] == [5]
    assert r["equals_pairing"]
    with pytest.raises(ag.BoundStarvation):
        ag.recover(-4, [5], d_bound=2)


def test_surface_demo():
    s = ag.surface_demo(3)
    assert s["q"] == [43, 19, 29, 7]
    assert [r["coarea"]["exact"] for r in s["rows"]] == ["84*pi", "36*pi", "56*pi"]


def test_units_and_volumes():
    assert ag.fundamental_unit(5) == (1, 1, -1)
    a, b, _ = ag.fundamental_unit(409)
    assert a * a - 409 * b * b in (4, -4)
    assert ag.geodesic_length(5) == pytest.approx(4 * math.log((1 + math.sqrt(5)) / 2))
    value, terms, tail = ag.dirichlet_L2(-4, 1e-10)
    assert value == pytest.approx(0.915965594177, abs=1e-9)
    assert tail <= 1e-10
    v = ag.kleinian_covolume(-4, [5])
    assert (v["numerator"], v["denominator"]) == (16, 3)
    assert ag.fuchsian_coarea({2, 3})["value"] == pytest.approx(2 * math.pi / 3)
