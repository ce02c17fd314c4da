"""Decide torsion-freeness and left/bi-orderability from the defining graph.

* torsion-free   iff no oriented cycle has pairwise adjacent vertices
* left-orderable iff there is no oriented cycle at all
* bi-orderable   iff there are no oriented edges

Every verdict that fails carries a certificate, and a left-orderable verdict
carries the source-elimination tower.  Certificates revalidate against the
graph with ``validate``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Union

from .errors import NoOrientedCycle
from .mixed_graph import (
    CliqueCycleCert,
    Edge,
    MixedGraph,
    OrientedCycleCert,
    PolyFreeTower,
    find_clique_supported_cycle,
    find_oriented_cycle,
    relators,
    source_elimination_order,
)
from .words import (
    Word,
    abelianize,
    eq,
    format_word,
    is_identity,
    project_kill_source,
    random_word,
    reduce,
    torsion_probe,
)

DEFAULT_K_MAX = 16


@dataclass(frozen=True)
class TorsionWitness:
    word: Word
    order: int | None  # None: the probe bound was reached without finding the order
    k_max: int
    nontrivial: bool

    @property
    def exhausted(self) -> bool:
        return self.order is None


@dataclass(frozen=True)
class OrientedEdgeCert:
    edge: Edge

    def validate(self, g: MixedGraph) -> bool:
        return self.edge.oriented and g.edge_between(self.edge.u, self.edge.v) == self.edge

    def to_dict(self) -> dict:
        return {"kind": "oriented_edge", "origin": self.edge.u, "target": self.edge.v}

    def describe(self) -> str:
        return f"oriented edge {self.edge.u}→{self.edge.v}"


@dataclass(frozen=True)
class CliqueCycle:
    cert: CliqueCycleCert
    witness: TorsionWitness | None = None

    def validate(self, g: MixedGraph) -> bool:
        if not self.cert.validate(g):
            return False
        w = self.witness
        if w is None or w.order is None:
            return True
        return bool(reduce(g, w.word)) and torsion_probe(g, w.word, w.order) == w.order

    def to_dict(self) -> dict:
        d = {
            "kind": "clique_cycle",
            "cycle": list(self.cert.cycle.vertices),
            "support": list(self.cert.support),
        }
        if self.witness is not None:
            d["witness"] = {
                "word": format_word(self.witness.word),
                "order": self.witness.order,
                "k_max": self.witness.k_max,
                "nontrivial": self.witness.nontrivial,
            }
        return d

    def describe(self) -> str:
        text = f"oriented cycle on a complete subgraph {self.cert.cycle}"
        w = self.witness
        if w is not None and w.order is not None:
            text += f"; ({format_word(w.word)})^{w.order} = 1"
        elif w is not None:
            text += f"; probe exhausted at k_max={w.k_max}"
        return text


@dataclass(frozen=True)
class ChainStep:
    i: int
    origin: str
    target: str

    @property
    def relation_text(self) -> str:
        t, o = self.target, self.origin
        return f"{t} {o} {t}^-1 = {o}^-1"

    def inequality_text(self) -> str:
        o, t = self.origin, self.target
        return f"max{{{o}, {o}^-1}} < max{{{t}, {t}^-1}}"


@dataclass(frozen=True)
class NonOrderabilityChain:
    """One strict inequality per cycle edge, closing into ``max < max`` for the first vertex."""

    cycle: OrientedCycleCert
    steps: tuple[ChainStep, ...]

    def validate(self, g: MixedGraph) -> bool:
        if not self.cycle.validate(g) or len(self.steps) != len(self.cycle.edges):
            return False
        for k, (s, e) in enumerate(zip(self.steps, self.cycle.edges)):
            if s.i != k or (s.origin, s.target) != (e.u, e.v):
                return False
            if g.edge_between(s.origin, s.target) != Edge(s.origin, s.target, oriented=True):
                return False
        return all(a.target == b.origin for a, b in zip(self.steps, self.steps[1:] + self.steps[:1]))

    def lines(self) -> list[str]:
        out = [
            f"step {s.i}: {s.inequality_text()}   "
            f"[<{s.origin}, {s.target}> is a Klein bottle group: {s.relation_text}]"
            for s in self.steps
        ]
        x = self.steps[0].origin
        out.append(f"hence max{{{x}, {x}^-1}} < max{{{x}, {x}^-1}}: contradiction")
        return out

    def to_dict(self) -> dict:
        return {
            "kind": "non_orderability_chain",
            "cycle": list(self.cycle.vertices),
            "steps": [
                {"i": s.i, "origin": s.origin, "target": s.target, "relation": s.relation_text}
                for s in self.steps
            ],
            "conclusion": "contradiction",
        }

    def describe(self) -> str:
        return f"oriented cycle {self.cycle}"


@dataclass(frozen=True)
class TowerCert:
    tower: PolyFreeTower

    def validate(self, g: MixedGraph) -> bool:
        return self.tower.validate(g)

    def to_dict(self) -> dict:
        return {"kind": "poly_free_tower", "vertices": list(self.tower.vertices)}

    def describe(self) -> str:
        return f"tower: {self.tower}"


@dataclass(frozen=True)
class CycleCert:
    cycle: OrientedCycleCert

    def validate(self, g: MixedGraph) -> bool:
        return self.cycle.validate(g)

    def to_dict(self) -> dict:
        return {"kind": "oriented_cycle", "cycle": list(self.cycle.vertices)}

    def describe(self) -> str:
        return f"oriented cycle {self.cycle}"


Certificate = Union[OrientedEdgeCert, CycleCert, CliqueCycle, NonOrderabilityChain, TowerCert]


@dataclass(frozen=True)
class Classification:
    torsion_free: bool
    left_orderable: bool
    bi_orderable: bool
    certificates: tuple[Certificate, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "torsion_free": self.torsion_free,
            "left_orderable": self.left_orderable,
            "bi_orderable": self.bi_orderable,
            "certificates": [c.to_dict() for c in self.certificates],
        }

    def validate(self, g: MixedGraph) -> bool:
        return all(c.validate(g) for c in self.certificates)


def nonorderability_chain(cycle: OrientedCycleCert) -> NonOrderabilityChain:
    steps = tuple(ChainStep(i, e.u, e.v) for i, e in enumerate(cycle.edges))
    return NonOrderabilityChain(cycle, steps)


def certify_not_left_orderable(g: MixedGraph) -> NonOrderabilityChain:
    cycle = find_oriented_cycle(g)
    if cycle is None:
        raise NoOrientedCycle("the graph has no oriented cycle, so the group is left-orderable")
    return nonorderability_chain(cycle)


def _probe_cycle(g: MixedGraph, cert: CliqueCycleCert, k_max: int) -> TorsionWitness:
    w = tuple((v, 1) for v in cert.cycle.vertices)
    nontrivial = bool(reduce(g, w)) or not abelianize(g, w).is_zero()
    return TorsionWitness(w, torsion_probe(g, w, k_max), k_max, nontrivial)


def torsion_witness(g: MixedGraph, k_max: int = DEFAULT_K_MAX) -> TorsionWitness | None:
    """Probe the product of the vertices of a clique-supported cycle for finite order.

    None means the graph criterion says the group is torsion-free.  A witness
    with ``order is None`` means torsion exists but the probe bound was hit.
    """
    cert = find_clique_supported_cycle(g)
    if cert is None:
        return None
    return _probe_cycle(g, cert, k_max)


def classify(g: MixedGraph, k_max: int = DEFAULT_K_MAX) -> Classification:
    certs: list[Certificate] = []
    clique_cycle = find_clique_supported_cycle(g)
    if clique_cycle is not None:
        certs.append(CliqueCycle(clique_cycle, _probe_cycle(g, clique_cycle, k_max)))

    tower = source_elimination_order(g)
    cycle = find_oriented_cycle(g)
    assert (cycle is None) == isinstance(tower, PolyFreeTower)
    if cycle is None:
        certs.append(TowerCert(tower))
    else:
        certs.append(nonorderability_chain(cycle))

    oriented = g.oriented_edges
    if oriented:
        certs.append(OrientedEdgeCert(oriented[0]))

    return Classification(
        torsion_free=clique_cycle is None,
        left_orderable=cycle is None,
        bi_orderable=not oriented,
        certificates=tuple(certs),
    )


@dataclass(frozen=True)
class RetractionReport:
    vertex: str
    status: str  # "pass" | "fail" | "not-a-source"
    relators_checked: int = 0
    samples_checked: int = 0
    offending: Word | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def check_retraction(
    g: MixedGraph, v: str, samples: int = 16, seed: int = 0, max_len: int = 12
) -> RetractionReport:
    """Check that killing the source ``v`` defines a retraction onto V - {v}.

    Every relator must map to the identity of the subgroup on V - {v}, and
    the retraction must fix a seeded sample of words over V - {v}.
    """
    g.index(v)
    if not g.is_source(v):
        return RetractionReport(v, "not-a-source")
    rest = [u for u in g.vertices if u != v]
    sub = g.without(v) if rest else None
    rels = relators(g)
    for r in rels:
        image = project_kill_source(g, v, r)
        if image and (sub is None or not is_identity(sub, image)):
            return RetractionReport(v, "fail", len(rels), 0, r)
    if sub is None:
        return RetractionReport(v, "pass", len(rels), 0)
    rng = random.Random(seed)
    words = [((u, 1),) for u in rest] + [random_word(rng, rest, max_len) for _ in range(samples)]
    for w in words:
        if not eq(sub, project_kill_source(g, v, w), w):
            return RetractionReport(v, "fail", len(rels), len(words), w)
    return RetractionReport(v, "pass", len(rels), len(words))

