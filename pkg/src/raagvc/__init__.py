"""Partial conjugations of right-angled Artin groups: the vertex-conjugating
subgroup of Aut(G_Γ), its presentation, and factorization into generators."""

from .autos import Endo, apply, compose, equal, identity, is_vertex_conjugating
from .factorization import GeneratorTable, evaluate, factor, oracle_bfs
from .graph import Graph, parse_graph
from .presentation import build_presentation, export, relations_R, verify_all
from .whitehead import PartialConjugation, enumerate_S, inner, one_term_generators
from .words import are_conjugate, cyclic_normal_form, normal_form, parse_word

__all__ = [
    "Endo",
    "GeneratorTable",
    "Graph",
    "PartialConjugation",
    "apply",
    "are_conjugate",
    "build_presentation",
    "compose",
    "cyclic_normal_form",
    "enumerate_S",
    "equal",
    "evaluate",
    "export",
    "factor",
    "identity",
    "inner",
    "is_vertex_conjugating",
    "normal_form",
    "one_term_generators",
    "oracle_bfs",
    "parse_graph",
    "parse_word",
    "relations_R",
    "verify_all",
]
