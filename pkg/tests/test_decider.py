from __future__ import annotations

import pytest

from conftest import named, random_graph
from oracles import brute_clique_cycle, has_directed_cycle
from traag.decider import (
    ChainStep,
    CliqueCycle,
    NonOrderabilityChain,
    OrientedEdgeCert,
    TowerCert,
    certify_not_left_orderable,
    check_retraction,
    classify,
    nonorderability_chain,
    torsion_witness,
)
from traag.errors import NoOrientedCycle, UnknownVertex
from traag.mixed_graph import Edge, OrientedCycleCert, find_oriented_cycle, parse_graph
from traag.words import abelianize, parse_word, reduce


@pytest.mark.parametrize(
    "name, expected",
    [
        ("GK", (True, True, False)),
        ("GT", (False, False, False)),
        ("GC4", (True, False, False)),
        ("GP3", (True, True, True)),
        ("GS", (True, True, False)),
    ],
)
def test_classify_examples(name, expected):
    g = named(name)
    c = classify(g)
    assert (c.torsion_free, c.left_orderable, c.bi_orderable) == expected
    assert c.validate(g)


def test_classify_klein_certificates():
    c = classify(named("GK"))
    kinds = [type(x) for x in c.certificates]
    assert kinds == [TowerCert, OrientedEdgeCert]
    assert c.certificates[0].tower.vertices == ("b", "a")
    assert c.certificates[1].edge == Edge("b", "a", oriented=True)


def test_classify_triangle_certificates():
    c = classify(named("GT"))
    kinds = [type(x) for x in c.certificates]
    assert kinds == [CliqueCycle, NonOrderabilityChain, OrientedEdgeCert]
    w = c.certificates[0].witness
    assert (w.word, w.order, w.nontrivial) == (parse_word("a b c"), 2, True)


def test_classify_matches_graph_predicates(rng):
    for _ in range(300):
        g = random_graph(rng)
        c = classify(g)
        arcs = [(e.u, e.v) for e in g.oriented_edges]
        assert c.torsion_free == (not brute_clique_cycle(g))
        assert c.left_orderable == (not has_directed_cycle(g.vertices, arcs))
        assert c.bi_orderable == (not arcs)
        assert c.bi_orderable <= c.left_orderable <= c.torsion_free
        assert c.validate(g)
        if not c.left_orderable:
            chain = next(x for x in c.certificates if isinstance(x, NonOrderabilityChain))
            assert all(g.edge_between(s.origin, s.target).oriented for s in chain.steps)


def test_nonorderability_chain_triangle():
    chain = certify_not_left_orderable(named("GT"))
    assert [(s.origin, s.target) for s in chain.steps] == [("a", "b"), ("b", "c"), ("c", "a")]
    assert chain.steps[0].relation_text == "b a b^-1 = a^-1"
    assert chain.lines()[-1].endswith("contradiction")
    assert len(chain.lines()) == 4
    assert chain.validate(named("GT"))


def test_nonorderability_chain_c4():
    chain = certify_not_left_orderable(named("GC4"))
    assert len(chain.steps) == 4
    assert chain.validate(named("GC4"))


def test_nonorderability_requires_cycle():
    with pytest.raises(NoOrientedCycle):
        certify_not_left_orderable(named("GK"))


def test_chain_validation_rejects_tampering():
    g = named("GT")
    chain = certify_not_left_orderable(g)
    broken = NonOrderabilityChain(chain.cycle, (ChainStep(0, "a", "b"), ChainStep(1, "c", "b"), chain.steps[2]))
    assert not broken.validate(g)
    fake = nonorderability_chain(OrientedCycleCert((Edge("a", "b", True), Edge("b", "a", True))))
    assert not fake.validate(named("GK"))


def test_torsion_witness_examples():
    w = torsion_witness(named("GT"), 16)
    assert w.word == parse_word("a b c") and w.order == 2
    assert reduce(named("GT"), w.word) != ()
    assert not abelianize(named("GT"), w.word).is_zero()
    assert torsion_witness(named("GC4"), 16) is None
    assert torsion_witness(named("GP3"), 16) is None


def test_torsion_witness_probe_exhausted_is_honest():
    # a larger clique: every probe bound is reported, never a fake order
    g = parse_graph(
        "vertex a\nvertex b\nvertex c\nvertex d\n"
        "arrow a b\narrow b c\narrow c d\narrow d a\narrow a c\nedge b d\n"
    )
    w = torsion_witness(g, 2)
    assert w is not None
    if w.order is None:
        assert w.exhausted and w.k_max == 2
    else:
        assert reduce(g, w.word) and not reduce(g, w.word * w.order)


@pytest.mark.parametrize("name, v", [("GS", "a"), ("GK", "b"), ("GP3", "b")])
def test_check_retraction_pass(name, v):
    r = check_retraction(named(name), v)
    assert r.passed and r.relators_checked == len(named(name).edges)


def test_check_retraction_not_a_source():
    assert check_retraction(named("GT"), "a").status == "not-a-source"
    with pytest.raises(UnknownVertex):
        check_retraction(named("GT"), "z")


def test_check_retraction_single_vertex():
    g = parse_graph("vertex a\n")
    assert check_retraction(g, "a").passed


def test_check_retraction_random(rng):
    for _ in range(200):
        g = random_graph(rng, max_vertices=7)
        for v in g.vertices:
            r = check_retraction(g, v, samples=4)
            assert r.passed == g.is_source(v)


def test_json_shape_is_stable():
    d = classify(named("GT")).to_dict()
    assert list(d) == ["torsion_free", "left_orderable", "bi_orderable", "certificates"]
    assert [c["kind"] for c in d["certificates"]] == ["clique_cycle", "non_orderability_chain", "oriented_edge"]
    assert classify(named("GT")).to_dict() == d


def test_chain_uses_found_cycle():
    g = named("GC4")
    assert certify_not_left_orderable(g).cycle == find_oriented_cycle(g)
