"""
The enumerator against the golden descriptor lists.

Run this file directly with ``--regold`` to overwrite the specific rows of
the golden file with the current results.
"""
import json
import os
import sys
import tempfile
import unittest
import warnings

import pytest

import pyfillings as pf
from pyfillings import golden
from pyfillings.catalog import polyhedral_families

# largest b of the specific rows compared by the test suite
b_max = 6

# generic rows checked past their b_min
generic_extra = ["T:35", "T:37", "O:71", "O:85", "I:241"]


def gold_ids(data=None):
    """Specific rows up to ``b_max``, every generic row at its ``b_min`` and the extra instances"""
    if data is None:
        data = golden.load()
    ids = set(s for s in golden.golden_ids(b_max, data=data) if s.b <= b_max)
    ids.update(s for s in golden.golden_ids(data=data) if str(s) not in data["specific"])
    ids.update(pf.parse_singularity(s) for s in generic_extra)
    return sorted(ids, key=lambda s: (polyhedral_families.index(s.family), s.m))


def enumerate_quietly(s):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return pf.enumerate_fillings(s)


@pytest.mark.parametrize("s", [str(s) for s in gold_ids()])
def test_goldfile_row(s):
    found = [str(d) for d in enumerate_quietly(s)]
    assert found == [str(d) for d in golden.expected_descriptors(s)]


def regold_all():
    data = golden.load()
    golden.regold({str(s): enumerate_quietly(s) for s in gold_ids(data) if str(s) in data["specific"]})


class GoldTest(unittest.TestCase):
    def test_covered_ids(self):
        ids = [str(s) for s in gold_ids()]
        for s in ["T:7", "T:19", "I:97", "I:113", "T:37", "O:85", "I:241"]:
            self.assertIn(s, ids)
        # one instance of each generic row
        for s in ["T:29", "T:31", "T:33", "O:59", "O:67", "O:73", "O:77", "I:143", "I:157", "I:211"]:
            self.assertIn(s, ids)
        self.assertNotIn("I:161", ids)

    def test_hand_checked(self):
        self.assertEqual([str(d) for d in pf.enumerate_fillings("T:3")], ["(T:3;4,-2;1x1) P2"])
        self.assertEqual(len(pf.enumerate_fillings("T:9")), 2)
        self.assertIn(
            "(T:19;5,-2,-2,-4;1x1,2x3) Q", [str(d) for d in pf.enumerate_fillings("T:19")]
        )
        self.assertEqual(
            [str(d) for d in pf.enumerate_fillings("T:5")],
            ["(T:5;4,-2;1x1) Q case I", "(T:5;4,-2;1,1;) Q case II"],
        )
        self.assertEqual([str(d) for d in pf.enumerate_fillings("O:5")], ["(O:5;2;) Q case I"])

    def test_base_filter(self):
        q = pf.enumerate_fillings("T:19", base="Q")
        self.assertEqual([d.base for d in q], ["Q"])
        with self.assertRaises(pf.DomainError):
            pf.enumerate_fillings("T:19", base="P3")


class TestGoldenData(unittest.TestCase):
    def test_generic_instantiation(self):
        (d,) = golden.expected_descriptors("T:31")
        self.assertEqual(str(d), "(T:31;5,-2,-2,-2,-2,-4;3x5) P2")

        found = [str(d) for d in golden.expected_descriptors("T:33")]
        self.assertEqual(found, ["(T:33;5,-2,-2,-2,-2,-3,-2;1x5,1x6) P2"])

        found = [str(d) for d in golden.expected_descriptors("O:67")]
        self.assertEqual(
            found,
            [
                "(O:67;5,-2,-2,-2,-2,-3,-2,-2;1x5,1x7) P2",
                "(O:67;5,-2,-2,-2,-2,-3,-2,-2;1x6) P2",
            ],
        )

    def test_specific_rows_first(self):
        found = golden.expected_descriptors("T:7")
        self.assertEqual([str(d) for d in found], ["(T:7;5,-4;3x1) P2"])

    def test_case2_rows_of_i113(self):
        found = [d for d in golden.expected_descriptors("I:113") if d.case == pf.fillings.CASE_II]
        self.assertEqual([str(d) for d in found], ["(I:113;5,-2,-2,-3,-3;1,3;2x4) Q case II"])

    def test_ids(self):
        ids = golden.golden_ids(4)
        self.assertEqual(ids[0], pf.parse_singularity("T:1"))
        self.assertTrue(all(s.b <= 4 for s in ids))
        self.assertIn(pf.parse_singularity("I:29"), golden.golden_ids())

    def test_missing(self):
        with self.assertRaises(pf.DomainError):
            golden.expected_descriptors("T:37", data={"specific": {}, "generic": []})

    def test_regold(self):
        path = os.path.join(tempfile.mkdtemp(), "golden.json")
        with open(path, "w") as f:
            json.dump({"specific": {}, "generic": []}, f)
        golden.regold({"T:7": pf.enumerate_fillings("T:7")}, path)
        data = golden.load(path)
        self.assertEqual(
            data["specific"]["T:7"],
            [{"dd": 5, "string": [-4], "attachments": [[3, 1]], "case": None, "base": "P2"}],
        )
        with self.assertRaises(pf.DomainError):
            golden.regold({"A:4,1": []}, path)


if __name__ == "__main__":
    if "--regold" in sys.argv:
        sys.argv.remove("--regold")
        regold_all()
    unittest.main()
