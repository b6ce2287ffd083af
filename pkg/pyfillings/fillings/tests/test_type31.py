import warnings

import pytest

import pyfillings as pf
from pyfillings import golden
from pyfillings.fillings import CASE_I, CASE_II, Type31Search, constraint_check_case2


def test_two_cases():
    search = Type31Search(pf.transform_target("T:5"))
    one, two = search.realizations()

    assert one.descriptor.case == CASE_I
    assert one.model == "CuspQuadricTwoFibres_Q"
    assert one.configuration.weight("B") == -1
    assert pf.RewriteStep(pf.BLOW_UP_FRESH, "B") in one.steps

    assert two.descriptor.case == CASE_II
    assert two.model == "CuspQuadricThreeFibres_Q"
    assert two.descriptor.ij == (1, 1)
    assert [step.target for step in two.steps] == ["x1", "x3"]
    assert len(two.extra) == 3


def test_growth_parameters():
    search = Type31Search(pf.transform_target("T:11"))
    assert search.growth_depth("CuspQuadricTwoFibres_Q") == 2
    assert search.growth_depth("CuspQuadricThreeFibres_Q") == 1
    assert search.dd_floor("CuspQuadricThreeFibres_Q") == search.dd_floor("CuspQuadricTwoFibres_Q") + 1


def test_case2_descriptors_keep_a_and_b():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for s in ["T:11", "T:17", "O:17"]:
            for d in pf.enumerate_fillings(s):
                if d.case == CASE_II:
                    i, j = d.ij
                    assert i <= j
                    assert i == 1 or d.c[i - 1] != 2
                    assert j == d.k or d.c[j - 1] != 2


def test_bound_c_warning():
    search = Type31Search(pf.transform_target("O:53"))
    with pytest.warns(UserWarning, match="b <= max"):
        found = search.run()
    missing = [d for d in found if d.case == CASE_II and not constraint_check_case2(d)]
    assert [str(d) for d in missing] == ["(O:53;5,-2,-2,-2,-5;4,4;1x3) Q case II"]


def test_i113_matches_golden():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        found = pf.enumerate_fillings("I:113")
    assert [str(d) for d in found] == [str(d) for d in golden.expected_descriptors("I:113")]
    assert "(I:113;5,-2,-2,-3,-3;4,4;1x2) Q case II" not in [str(d) for d in found]


def test_inner_minus_one_before_fibre():
    # I:83 keeps its (3,3) row, whose -1 curve is the first curve of the string
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        found = [str(d) for d in pf.enumerate_fillings("I:83")]
    assert "(I:83;5,-2,-3,-3;3,3;1x1,1x2) Q case II" in found

    search = Type31Search(pf.transform_target("I:113"))
    for r in search.realizations():
        if r.descriptor.case == CASE_II:
            assert r.descriptor.ij == (1, 3)


if __name__ == "__main__":
    test_two_cases()
    test_growth_parameters()
    test_i113_matches_golden()
