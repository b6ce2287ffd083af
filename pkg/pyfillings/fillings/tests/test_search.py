import unittest

import pyfillings as pf
from pyfillings.fillings import (
    CyclicSearch,
    Type32Search,
    attachment_steps,
    blowup_bound,
    is_path,
    read_descriptor,
    replay,
    string_curves,
    string_graph,
)


def fresh(target, n=1):
    return [pf.RewriteStep(pf.BLOW_UP_FRESH, target) for _ in range(n)]


class TestSearchCaps(unittest.TestCase):
    def test_validation(self):
        for kwargs in [{"max_blowups": 0}, {"max_solutions": -1}, {"time_budget": 0.0}]:
            with self.assertRaises(pf.DomainError):
                pf.SearchCaps(**kwargs)

    def test_resolved(self):
        target = pf.transform_target("T:7")
        # k + drop of the string + drop of D + slack
        self.assertEqual(blowup_bound(target), 1 + 5 + 4 + 4)
        caps = pf.SearchCaps().resolved(target)
        self.assertEqual(caps.max_blowups, 14)
        self.assertEqual(caps.max_solutions, 100000)
        self.assertEqual(caps.time_budget, 600.0)
        self.assertEqual(pf.SearchCaps(max_blowups=3).resolved(target).max_blowups, 3)
        self.assertEqual(repr(pf.SearchCaps(1, 2, 3.0)), "SearchCaps(1, 2, 3.0)")

    def test_cyclic_bound_ignores_dd(self):
        target = pf.transform_target("A:4,1")
        self.assertEqual(blowup_bound(target), 3 + 9 + 4)


class TestExhaustion(unittest.TestCase):
    def test_blowups(self):
        search = Type32Search(pf.transform_target("T:19"), caps=pf.SearchCaps(max_blowups=2))
        with self.assertRaises(pf.SearchCapsExhausted) as cm:
            search.run()
        self.assertEqual(cm.exception.caps.max_blowups, 2)

    def test_realization_above_cap(self):
        # T:7 grows in one blow-up but needs seven in all
        search = Type32Search(pf.transform_target("T:7"), caps=pf.SearchCaps(max_blowups=5))
        with self.assertRaises(pf.SearchCapsExhausted):
            search.run()

    def test_solutions(self):
        search = Type32Search(pf.transform_target("T:19"), caps=pf.SearchCaps(max_solutions=1))
        with self.assertRaises(pf.SearchCapsExhausted):
            search.run()

    def test_time(self):
        search = Type32Search(pf.transform_target("T:19"), caps=pf.SearchCaps(time_budget=1e-9))
        with self.assertRaises(pf.SearchCapsExhausted):
            search.run()

    def test_wrong_shape(self):
        with self.assertRaises(pf.DomainError):
            CyclicSearch(pf.transform_target("T:7"))


class TestRealization(unittest.TestCase):
    def setUp(self):
        (self.r,) = Type32Search(pf.transform_target("T:7")).realizations()

    def test_steps(self):
        r = self.r
        self.assertEqual(r.model, "CuspCubic_P2")
        self.assertEqual(len(r.steps), 4)
        self.assertEqual(r.extra, fresh("D", 3))
        self.assertEqual(r.blowups, 7)
        self.assertEqual(r.configuration.lattice.rank, 8)

    def test_replay(self):
        r = self.r
        self.assertEqual(replay(r.model, r.steps + r.extra), r.configuration)
        config = replay(r.model, r.steps)
        self.assertEqual(config.weight("D"), 8)

    def test_read_back(self):
        r = self.r
        d, t = read_descriptor(r.configuration, r.descriptor.singularity, "P2")
        self.assertEqual(d, r.descriptor)
        self.assertEqual(t, 3)
        self.assertEqual(str(d), "(T:7;5,-4;3x1) P2")


class TestReadDescriptor(unittest.TestCase):
    def test_cyclic(self):
        config = replay("TwoLines_P2", fresh("C1", 3))
        d, t = read_descriptor(config, pf.parse_singularity("A:2,1"), "P2")
        self.assertEqual(str(d), "(A:2,1;1,-2;3x1) P2")
        self.assertEqual(t, 0)

    def test_curve_outside_frame(self):
        config = replay("TwoLines_P2", [pf.RewriteStep(pf.BLOW_UP_AT_POINT, "x1")])
        with self.assertRaises(pf.ConfigurationError):
            read_descriptor(config, pf.parse_singularity("A:2,1"), "P2")

    def test_string_not_a_chain(self):
        # p3 is where C1 meets its first exceptional curve
        steps = fresh("C1") + [pf.RewriteStep(pf.BLOW_UP_AT_POINT, "p3")] + fresh("C1")
        config = replay("TwoLines_P2", steps)
        with self.assertRaises(pf.ConfigurationError):
            read_descriptor(config, pf.parse_singularity("A:7,3"), "P2")

    def test_bad_step(self):
        with self.assertRaises(pf.ConfigurationError):
            replay("CuspCubic_P2", [pf.RewriteStep(pf.BLOW_UP_AT_POINT, "x9")])


class TestHelpers(unittest.TestCase):
    def test_string_graph(self):
        config = pf.transform_target("T:19").configuration
        self.assertEqual(sorted(string_curves(config)), ["C1", "C2", "C3"])
        G = string_graph(config, string_curves(config))
        self.assertTrue(is_path(G))
        self.assertTrue(G.has_edge("C1", "C2"))
        self.assertFalse(G.has_edge("C1", "C3"))

    def test_attachment_steps(self):
        steps = attachment_steps(["X", "Y"], [-1, -2], [-3, -2])
        self.assertEqual(steps, fresh("X", 2))
        self.assertIsNone(attachment_steps(["X"], [-4], [-3]))


if __name__ == "__main__":
    unittest.main()
