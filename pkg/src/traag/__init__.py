"""Twisted right-angled Artin groups: word problem, orderability, certificates."""

from .decider import Classification, check_retraction, classify, certify_not_left_orderable, torsion_witness
from .mixed_graph import (
    Edge,
    MixedGraph,
    build_graph,
    find_clique_supported_cycle,
    find_oriented_cycle,
    format_graph,
    maximal_cliques,
    parse_graph,
    relators,
    source_elimination_order,
    star,
)
from .words import (
    abelianize,
    canonical_form,
    eq,
    format_word,
    is_identity,
    parse_word,
    project_kill_source,
    pull_generator_front,
    reduce,
    torsion_probe,
)

__all__ = [
    "Classification",
    "Edge",
    "MixedGraph",
    "abelianize",
    "build_graph",
    "canonical_form",
    "certify_not_left_orderable",
    "check_retraction",
    "classify",
    "eq",
    "find_clique_supported_cycle",
    "find_oriented_cycle",
    "format_graph",
    "format_word",
    "is_identity",
    "maximal_cliques",
    "parse_graph",
    "parse_word",
    "project_kill_source",
    "pull_generator_front",
    "reduce",
    "relators",
    "source_elimination_order",
    "star",
    "torsion_probe",
    "torsion_witness",
]
