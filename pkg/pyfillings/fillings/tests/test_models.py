import pytest

import pyfillings as pf
from pyfillings.fillings import model_bases

# (model, base, weights)
models = [
    ("TwoLines_P2", "P2", {"L": 1, "C1": 1}),
    ("CuspCubic_P2", "P2", {"D": 9}),
    ("CuspQuadric_Q", "Q", {"D": 8}),
    ("CuspQuadricOneFibre_Q", "Q", {"D": 8, "A": 0}),
    ("CuspCubicPlusLine_blownP2", "P2", {"D": 8, "A": 0}),
    ("CuspQuadricTwoFibres_Q", "Q", {"D": 8, "A": 0, "B": 0}),
    ("CuspQuadricThreeFibres_Q", "Q", {"D": 8, "A": 0, "B": 0, "C": 0}),
]


def test_models():
    assert sorted(pf.standard_models) == sorted(m for m, _, _ in models)
    for name, base, weights in models:
        config = pf.standard_model(name)
        assert model_bases[name] == base
        assert config.lattice.base_model == base
        assert {x: config.weight(x) for x in config.curves} == weights, name
        assert config.check()


def test_cusp_points():
    for name in ["CuspQuadricOneFibre_Q", "CuspCubicPlusLine_blownP2", "CuspQuadricTwoFibres_Q"]:
        config = pf.standard_model(name)
        cusp = config.cusp_point()
        assert cusp.multiplicity("D") == 2
        assert cusp.local_intersection("A", "D") == 2

    config = pf.standard_model("CuspQuadricTwoFibres_Q")
    assert config.cusp_point().local_intersection("A", "B") == 1
    assert pf.standard_model("TwoLines_P2").cusp_point() is None


def test_three_fibres():
    config = pf.standard_model("CuspQuadricThreeFibres_Q")
    # C is in the ruling of A
    assert config.intersection("A", "C") == 0
    assert config.intersection("D", "C") == 2
    assert config.intersection("B", "C") == 1
    assert [p.pid for p in config.points_on("C")] == ["x1", "x2", "x3"]
    assert config.role("C") == pf.ROLE_STRING


def test_fresh_copies():
    one = pf.standard_model("CuspCubic_P2")
    pf.blow_up(one, pf.RewriteStep(pf.BLOW_UP_FRESH, "D"))
    one.curves.pop("D")
    assert "D" in pf.standard_model("CuspCubic_P2").curves


def test_unknown():
    with pytest.raises(pf.DomainError):
        pf.standard_model("Cubic_P3")


if __name__ == "__main__":
    test_models()
    test_three_fibres()
