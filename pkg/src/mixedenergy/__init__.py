"""Hermitian energy of mixed graphs: exact optimality, spectra, switching and census tools."""

from .graphs import Graph, automorphisms, complete_graph, hypercube, named_graph, parse_graph6, emit_graph6
from .mixed import EdgeState, MixedGraph, emit_mixed_json, fixture, parse_mixed_json
from .hermitian import build_hermitian, hermitian_square, is_optimum
from .spectra import eigenvalues, energy_bound, hermitian_energy, skew_energy
from .cycles import CycleType, analyze, optimum_by_cycles
from .switching import SwitchingFunction, apply_switching, partition_classes, switching_equivalent
from .hypercube import phi0, reduce_to_phi0, verify_phi0
from .census import SearchSpace, enumerate_optimum, run_census

__all__ = [
    "Graph", "automorphisms", "complete_graph", "hypercube", "named_graph", "parse_graph6", "emit_graph6",
    "EdgeState", "MixedGraph", "emit_mixed_json", "fixture", "parse_mixed_json",
    "build_hermitian", "hermitian_square", "is_optimum",
    "eigenvalues", "energy_bound", "hermitian_energy", "skew_energy",
    "CycleType", "analyze", "optimum_by_cycles",
    "SwitchingFunction", "apply_switching", "partition_classes", "switching_equivalent",
    "phi0", "reduce_to_phi0", "verify_phi0",
    "SearchSpace", "enumerate_optimum", "run_census",
]
