import pytest

import digdom


def test_fig1_pair():
    g, h = digdom.family("fig1G"), digdom.family("fig1H")
    assert digdom.domination_number(g)[0] == 2
    assert digdom.domination_number(h)[0] == 3
    value, witness = digdom.domination_number(digdom.cartesian_product(g, h))
    assert value == 5
    assert len(witness) == 5


def test_gm_family():
    for m in range(1, 5):
        d = digdom.family(f"Gm:{m}")
        assert digdom.packing_number(d)[0] == m
        assert digdom.domination_number(d)[0] == m + 1


def test_digraph_construction():
    d = digdom.Digraph(3, [(0, 1), (1, 2), (2, 0)], ["a", "b", "c"])
    assert d.order == 3 and len(d) == 3
    assert d.arc_count == 3
    assert d.has_arc(0, 1) and not d.has_arc(1, 0)
    assert d.in_neighbours(0) == [2]
    assert d == digdom.family("cycle:3")
    with pytest.raises(ValueError):
        digdom.Digraph(2, [(1, 1)])


def test_arc_list_round_trip():
    d = digdom.family("ditree:n=9,seed=4")
    assert digdom.parse_arc_list(digdom.format_arc_list(d)) == d
    with pytest.raises(digdom.ParseError):
        digdom.parse_arc_list("n 2\n0 2\n")


def test_total_domination():
    c = digdom.family("cycle:3")
    assert digdom.total_domination_number(digdom.direct_product(c, c))[0] == 9
    assert digdom.total_domination_number(digdom.Digraph(2, [(0, 1)])) is None


def test_invariants_and_oracle():
    d = digdom.family("digraph:n=7,seed=3,p=0.3")
    report = digdom.invariants(d, "sample", timing=False)
    assert report["id"] == "sample"
    assert report["gamma"]["value"] == digdom.brute_force_invariant(d, "gamma")
    assert report["rho"]["value"] == digdom.brute_force_invariant(d, "rho")
    assert report["rho"]["value"] <= report["gamma"]["value"]


def test_vizing_failure_record():
    record = digdom.check_vizing(digdom.family("fig1G"), digdom.family("fig1H"))
    assert record["verdict"] == "fails"
    assert (record["lhs"], record["rhs"]) == (5, 6)
    bound = digdom.check_half_bound(digdom.family("fig1G"), digdom.family("fig1H"))
    assert bound["verdict"] == "holds"


def test_run_suite():
    records, summary, errors = digdom.run_suite("task = packing_eq_domination ditrees:4\n", jobs=2)
    assert not errors
    assert summary["records"] == 432
    assert all(r["verdict"] == "holds" for r in records)
    with pytest.raises(digdom.SuiteConfigError):
        digdom.run_suite("task = nosuch x\n")


def test_timeout_is_reported():
    d = digdom.family("digraph:n=150,seed=4,p=0.03")
    with pytest.raises(TimeoutError):
        digdom.domination_number(d, timeout=0.001)
