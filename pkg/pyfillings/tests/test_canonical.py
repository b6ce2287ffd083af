import pyfillings as pf


def fresh(config, target, name=None):
    return pf.blow_up(config, pf.RewriteStep(pf.BLOW_UP_FRESH, target, name))


def test_renaming_is_isomorphic():
    config = fresh(pf.standard_model("CuspCubic_P2"), "D", "E1")
    other = config.renamed({"E1": "X"})
    assert pf.is_isomorphic(config, other)


def test_blow_up_order_does_not_matter():
    model = pf.standard_model("TwoLines_P2")
    one = fresh(fresh(model, "L", "E1"), "C1", "E2")
    two = fresh(fresh(model, "C1", "E1"), "L", "E2")
    assert pf.is_isomorphic(one, two)


def test_different_configurations():
    model = pf.standard_model("CuspCubic_P2")
    at_cusp = pf.blow_up(model, pf.RewriteStep(pf.BLOW_UP_AT_POINT, "cusp"))
    elsewhere = fresh(model, "D")
    assert not pf.is_isomorphic(at_cusp, elsewhere)
    # E2 hangs from E1 in one and from D in the other
    one = fresh(fresh(model, "D", "E1"), "E1", "E2")
    two = fresh(fresh(model, "D", "E1"), "D", "E2")
    assert not pf.is_isomorphic(one, two)


def test_roles_are_part_of_the_class():
    model = pf.standard_model("TwoLines_P2")
    swapped = model.with_roles({"L": "C", "C1": "L"})
    assert pf.is_isomorphic(model, swapped)
    assert not pf.is_isomorphic(model, model.with_roles({"C1": "L"}))


def test_index():
    model = pf.standard_model("TwoLines_P2")
    index = pf.ConfigurationIndex()
    assert index.add(model)
    assert not index.add(model.renamed({"C1": "M"}))
    assert index.add(fresh(model, "L"))
    assert not index.add(fresh(model, "L", "Z"))
    assert index.add(fresh(model, "C1"))
    assert len(index) == 3


def test_incidence_graph():
    G = pf.incidence_graph(pf.standard_model("CuspQuadricOneFibre_Q"))
    assert G.number_of_nodes() == 3
    # D and A pass through the cusp and are tangent there
    assert G.has_edge(("c", "D"), ("c", "A"))
    assert G.edges[("c", "D"), ("p", "cusp")]["label"] == ("through", 2)


if __name__ == "__main__":
    test_index()
