import pyfillings as pf
from pyfillings.fillings import DihedralSearch, Type32Search


def test_empty_string():
    (r,) = DihedralSearch(pf.transform_target("D:3,2")).realizations()
    assert str(r.descriptor) == "(D:3,2;4;) P2"
    assert r.model == "CuspCubicPlusLine_blownP2"
    assert r.steps == []
    assert len(r.extra) == 4


def test_one_curve():
    found = pf.enumerate_fillings("D:7,3")
    assert [str(d) for d in found] == ["(D:7,3;5,-4;3x1) P2"]


def test_no_fresh_blow_ups_of_d_on_the_quadric():
    search = DihedralSearch(pf.transform_target("D:7,3"))
    assert not search.keep_extra("CuspQuadricOneFibre_Q")
    assert search.keep_extra("CuspCubicPlusLine_blownP2")
    assert not Type32Search(pf.transform_target("T:7")).keep_extra("CuspQuadric_Q")


def test_a_stays_a_zero_curve():
    for r in DihedralSearch(pf.transform_target("D:7,3")).realizations():
        assert r.configuration.weight("A") == 0
        assert all(step.target != "A" for step in r.steps + r.extra)


if __name__ == "__main__":
    test_empty_string()
    test_one_curve()
