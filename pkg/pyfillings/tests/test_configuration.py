from unittest import TestCase

import numpy as np
import pytest

import pyfillings as pf
from pyfillings.configuration import Curve, Point


def new_curves(before, after):
    return [x for x in after.curves if x not in before.curves]


def test_cusp_blow_up_and_down():
    config = pf.standard_model("CuspCubic_P2")
    assert config.weight("D") == 9
    assert config.kind("D") == pf.CUSPIDAL

    up = pf.blow_up(config, pf.RewriteStep(pf.BLOW_UP_AT_POINT, "cusp"))
    assert up.weight("D") == 5
    assert up.kind("D") == pf.EMBEDDED
    assert up.cusp_point() is None
    (e,) = new_curves(config, up)
    assert up.weight(e) == -1
    # the exceptional curve is tangent to D
    assert up.intersection("D", e) == 2
    (p,) = up.points_on(e)
    assert p.local_intersection("D", e) == 2

    down = pf.blow_down(up, e)
    assert down.weight("D") == 9
    assert down.kind("D") == pf.CUSPIDAL
    assert down.cusp_point().members == ["D"]


def test_fresh_blow_up():
    config = pf.standard_model("CuspCubic_P2")
    up = pf.blow_up(config, pf.RewriteStep(pf.BLOW_UP_FRESH, "D"))
    (e,) = new_curves(config, up)
    assert up.weight("D") == 8
    assert up.kind("D") == pf.CUSPIDAL
    assert up.neighbors(e) == ["D"]
    assert up.intersection("D", e) == 1
    assert up.lattice.rank == 2
    # the input is untouched
    assert config.lattice.rank == 1


def test_blow_up_node_and_back():
    config = pf.standard_model("TwoLines_P2")
    up = pf.blow_up(config, pf.RewriteStep(pf.BLOW_UP_AT_POINT, "x1", "E"))
    assert up.weight("L") == 0
    assert up.weight("C1") == 0
    assert up.intersection("L", "C1") == 0
    assert up.neighbors("E") == ["L", "C1"]

    down = pf.blow_down(up, "E")
    assert down.weight("L") == 1
    assert down.intersection("L", "C1") == 1
    assert down.neighbors("L") == ["C1"]


def test_apply_and_steps():
    config = pf.standard_model("CuspCubic_P2")
    steps = [
        pf.RewriteStep(pf.BLOW_UP_FRESH, "D", "E1"),
        pf.RewriteStep(pf.BLOW_UP_FRESH, "E1", "E2"),
        pf.RewriteStep(pf.BLOW_DOWN, "E2"),
    ]
    out = config.apply(steps)
    assert sorted(out.curves) == ["D", "E1"]
    assert out.weight("E1") == -1

    for step in steps:
        assert pf.RewriteStep.from_list(step.to_list()) == step


def test_from_graph():
    g = pf.normalized_divisor("T:7")
    config = pf.Configuration.from_graph(g)
    assert config.check()
    names, M = config.intersection_matrix()
    for i, u in enumerate(names):
        assert M[i, i] == g.weight(u)
        for j, v in enumerate(names):
            if i != j:
                assert M[i, j] == g.multiplicity(u, v)
    assert config.to_graph().edges == g.edges


def test_string_order():
    config = pf.transform_target("T:19").configuration
    assert config.string_order() == ["C1", "C2", "C3"]
    cyclic = pf.transform_target("A:7,3").configuration
    assert cyclic.string_order() == ["C1", "C2"]


def test_renamed_and_roles():
    config = pf.standard_model("TwoLines_P2")
    other = config.renamed({"C1": "M"}).with_roles({"M": "E"})
    assert other.role("M") == "E"
    assert other.intersection("L", "M") == 1
    assert other.points["x1"].members == ["L", "M"]
    assert config.role("C1") == "C"


def test_serialization():
    config = pf.standard_model("CuspQuadricThreeFibres_Q")
    up = pf.blow_up(config, pf.RewriteStep(pf.BLOW_UP_AT_POINT, "x1"))
    again = pf.Configuration.from_dict(up.to_dict())
    assert again == up
    assert again.check()


def test_c1_squared_drops_with_blow_ups():
    config = pf.standard_model("CuspQuadric_Q")
    assert config.c1_squared() == 8
    up = pf.blow_up(config, pf.RewriteStep(pf.BLOW_UP_FRESH, "D"))
    assert up.c1_squared() == 7


def test_random_rewrite_sequences():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        config = pf.standard_model(pf.standard_models[rng.integers(len(pf.standard_models))])
        created = []
        for _ in range(int(rng.integers(1, 7))):
            c1 = config.c1_squared()
            if len(created) > 0 and config.weight(created[-1]) == -1 and rng.random() < 0.4:
                config = pf.blow_down(config, created.pop())
                assert config.c1_squared() == c1 + 1
            else:
                points = sorted(config.points)
                if len(points) > 0 and rng.random() < 0.5:
                    step = pf.RewriteStep(pf.BLOW_UP_AT_POINT, points[rng.integers(len(points))])
                else:
                    curves = sorted(config.curves)
                    step = pf.RewriteStep(pf.BLOW_UP_FRESH, curves[rng.integers(len(curves))])
                up = pf.blow_up(config, step)
                (e,) = new_curves(config, up)
                created.append(e)
                config = up
                assert config.c1_squared() == c1 - 1

            lattice = config.lattice
            assert lattice.signature() == (1, lattice.rank - 1)
            assert abs(int(round(np.linalg.det(lattice.gram.astype(float))))) == 1


class TestRejections(TestCase):
    def setUp(self):
        self.config = pf.standard_model("CuspQuadricTwoFibres_Q")

    def test_unknown_names(self):
        with self.assertRaises(pf.ConfigurationError):
            pf.blow_up(self.config, pf.RewriteStep(pf.BLOW_UP_AT_POINT, "nowhere"))
        with self.assertRaises(pf.ConfigurationError):
            pf.blow_up(self.config, pf.RewriteStep(pf.BLOW_UP_FRESH, "Z"))

    def test_blow_down_needs_minus_one(self):
        with self.assertRaises(pf.ConfigurationError) as cm:
            pf.blow_down(self.config, "A")
        self.assertEqual(cm.exception.name, "A")

    def test_blow_down_cuspidal(self):
        with self.assertRaises(pf.ConfigurationError):
            pf.blow_down(pf.standard_model("CuspCubic_P2"), "D")

    def test_existing_name(self):
        with self.assertRaises(pf.ConfigurationError):
            pf.blow_up(self.config, pf.RewriteStep(pf.BLOW_UP_FRESH, "D", "A"))

    def test_bad_steps(self):
        with self.assertRaises(pf.DomainError):
            pf.RewriteStep("flip", "D")
        with self.assertRaises(pf.DomainError):
            pf.RewriteStep(pf.BLOW_DOWN, "E1", "E2")


class TestCheck(TestCase):
    def setUp(self):
        self.lat = pf.AmbientLattice.projective_plane()

    def test_missing_point(self):
        config = pf.Configuration(
            self.lat,
            [Curve("X", pf.line_class(self.lat)), Curve("Y", pf.line_class(self.lat))],
            [],
        )
        with pytest.raises(pf.ConfigurationError):
            config.check()

    def test_cuspidal_without_cusp(self):
        config = pf.Configuration(self.lat, [Curve("D", pf.line_class(self.lat, 3, pf.CUSPIDAL))], [])
        with pytest.raises(pf.ConfigurationError):
            config.check()

    def test_adjunction(self):
        config = pf.Configuration(self.lat, [Curve("X", pf.line_class(self.lat, 2, pf.CUSPIDAL))], [Point("c", {"X": 2})])
        with pytest.raises(pf.ConfigurationError):
            config.check()

    def test_local_below_product(self):
        p = Point("x", {"X": 1, "Y": 1}, local={frozenset(("X", "Y")): 0})
        config = pf.Configuration(
            self.lat,
            [Curve("X", pf.line_class(self.lat)), Curve("Y", pf.line_class(self.lat))],
            [p],
        )
        with pytest.raises(pf.ConfigurationError):
            config.check()

    def test_valid(self):
        config = pf.Configuration(
            self.lat,
            [Curve("X", pf.line_class(self.lat)), Curve("Y", pf.line_class(self.lat))],
            [Point("x", {"X": 1, "Y": 1})],
        )
        assert config.check()
        assert np.array_equal(config.intersection_matrix()[1], [[1, 1], [1, 1]])


if __name__ == "__main__":
    test_cusp_blow_up_and_down()
    test_fresh_blow_up()
    test_blow_up_node_and_back()
