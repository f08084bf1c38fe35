"""Rainbow pair-pancyclicity in strongly edge-colored graphs."""

from .clique import RainbowClique, find_maximal_fresh_clique
from .cycles import ColoredCycle, EdgeClass
from .engine import PancyclicCertificate, Status, extend_once, pair_pancyclicity, seed_cycle
from .graph import ColoredGraph, ValidationReport, from_edge_list, validate_coloring

__all__ = [
    "ColoredCycle",
    "ColoredGraph",
    "EdgeClass",
    "PancyclicCertificate",
    "RainbowClique",
    "Status",
    "ValidationReport",
    "extend_once",
    "find_maximal_fresh_clique",
    "from_edge_list",
    "pair_pancyclicity",
    "seed_cycle",
    "validate_coloring",
]
