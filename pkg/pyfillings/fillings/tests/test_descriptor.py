import unittest

import pyfillings as pf
from pyfillings.fillings import CASE_I, CASE_II, case2_violation, constraint_check_case2, satisfies_bound_c


class TestDescriptor(unittest.TestCase):
    def test_text(self):
        d = pf.FillingDescriptor("T:19", 5, [-2, -2, -4], attachments=[(1, 1), (2, 3)], base="Q")
        self.assertEqual(str(d), "(T:19;5,-2,-2,-4;1x1,2x3) Q")

        d = pf.FillingDescriptor("T:5", 4, [-2], attachments=[(1, 1)], case=CASE_I, base="Q")
        self.assertEqual(str(d), "(T:5;4,-2;1x1) Q case I")

        d = pf.FillingDescriptor("T:5", 4, [-2], case=CASE_II, ij=(1, 1), base="Q")
        self.assertEqual(str(d), "(T:5;4,-2;1,1;) Q case II")

        d = pf.FillingDescriptor("T:1", 3, [])
        self.assertEqual(str(d), "(T:1;3;) P2")

    def test_json(self):
        d = pf.FillingDescriptor("T:5", 4, [-2], case=CASE_II, ij=(1, 1), base="Q")
        data = d.to_json()
        self.assertEqual(data["ij"], [1, 1])
        self.assertEqual(pf.FillingDescriptor.from_json(data), d)

        row = {"dd": 5, "string": [-4], "attachments": [[3, 1]], "case": None, "base": "P2"}
        d = pf.FillingDescriptor.from_json(row, singularity="T:7")
        self.assertEqual(str(d), "(T:7;5,-4;3x1) P2")
        self.assertNotIn("ij", d.to_json())

    def test_merge_and_counts(self):
        d = pf.FillingDescriptor("A:4,1", 1, [-2, -2, -2], attachments=[(1, 3), (1, 1), (1, 1)])
        self.assertEqual(d.attachments, ((2, 1), (1, 3)))
        self.assertEqual(d.attachment_counts(), [2, 0, 1])
        self.assertEqual(d.c, (2, 2, 2))
        self.assertEqual(d.k, 3)

    def test_order(self):
        one = pf.FillingDescriptor("T:5", 4, [-2], attachments=[(1, 1)], case=CASE_I, base="Q")
        two = pf.FillingDescriptor("T:5", 4, [-2], case=CASE_II, ij=(1, 1), base="Q")
        self.assertLess(one, two)
        p2 = pf.FillingDescriptor("T:19", 5, [-2, -2, -4], attachments=[(1, 1), (2, 3)])
        q = pf.FillingDescriptor("T:19", 5, [-2, -2, -4], attachments=[(1, 1), (2, 3)], base="Q")
        self.assertEqual(sorted([q, p2]), [p2, q])
        self.assertEqual(len({p2, q, p2}), 2)

    def test_errors(self):
        with self.assertRaises(pf.DomainError):
            pf.FillingDescriptor("T:7", 5, [-4], attachments=[(0, 1)])
        with self.assertRaises(pf.DomainError):
            pf.FillingDescriptor("T:7", 5, [-4], attachments=[(1, 2)])
        with self.assertRaises(pf.DomainError):
            pf.FillingDescriptor("T:7", 5, [-4], case="III")
        with self.assertRaises(pf.DomainError):
            pf.FillingDescriptor("T:5", 4, [-2], case=CASE_II)
        with self.assertRaises(pf.DomainError):
            pf.FillingDescriptor("T:5", 4, [-2], case=CASE_I, ij=(1, 1))
        with self.assertRaises(pf.DomainError):
            pf.FillingDescriptor("T:5", 4, [-2], case=CASE_II, ij=(1, 2))
        with self.assertRaises(pf.DomainError):
            pf.FillingDescriptor("T:7", 5, [-4], base="P1xP1")


class TestCase2Constraints(unittest.TestCase):
    def case2(self, s, string, ij):
        return pf.FillingDescriptor(s, 5, string, case=CASE_II, ij=ij, base="Q")

    def test_valid(self):
        for d in [
            self.case2("T:5", [-2], (1, 1)),
            self.case2("T:11", [-3, -2], (1, 1)),
            self.case2("T:17", [-2, -3, -2], (2, 3)),
        ]:
            self.assertIsNone(case2_violation(d))
            self.assertTrue(constraint_check_case2(d))

    def test_a(self):
        self.assertEqual(case2_violation(self.case2("T:11", [-3, -2], (2, 2))), "a")

    def test_b(self):
        self.assertEqual(case2_violation(self.case2("T:11", [-2, -3], (1, 1))), "b")

    def test_order(self):
        self.assertEqual(case2_violation(self.case2("T:11", [-3, -3], (2, 1))), "i<=j")

    def test_c(self):
        # O:53 has b = 6, so c_4 has to be at least 6
        d = self.case2("O:53", [-2, -2, -2, -3], (1, 4))
        self.assertFalse(satisfies_bound_c(d))
        self.assertEqual(case2_violation(d), "c")
        self.assertFalse(constraint_check_case2(d))

        d = self.case2("O:53", [-2, -2, -2, -6], (1, 4))
        self.assertTrue(satisfies_bound_c(d))

        # I:161 has b = 7, c_5 does not exist on a string of length 4
        d = self.case2("I:161", [-2, -2, -2, -3], (1, 4))
        self.assertTrue(satisfies_bound_c(d))

    def test_only_case2(self):
        with self.assertRaises(pf.DomainError):
            case2_violation(pf.FillingDescriptor("T:7", 5, [-4]))


if __name__ == "__main__":
    unittest.main()
