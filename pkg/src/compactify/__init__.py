"""Combinatorial invariants and verdicts for simple linear compactifications of semisimple groups."""
from .brothers import (adjoint_little_brothers, h_sets, lambda_bar, little_brother_report,
                       little_brothers, q_maximal_set, regularize)
from .cartan import (CharacterLattice, RootSystem, RootSystemSpec, adjoint, all_sublattices,
                     build_root_system, diagram_analyze, highest_short_root, parse_group,
                     parse_weight, parse_weights, preset_lattice, simply_connected)
from .classify import (classify_pi, colored_cone, factoriality, normality, smoothness,
                       timashev_check)
from .orders import (DOMINANCE, RATIONAL, Order, compare, lambda_dominance, lambda_rational,
                     maximal_elements, phi_plus_lambda)
from .weights import (apply_word, cone_lambda_contains, dominant_conjugate, pi_g_plus, pi_plus,
                      weyl_orbit)

__version__ = "0.1.0"

__all__ = [
    "CharacterLattice",
    "DOMINANCE",
    "Order",
    "RATIONAL",
    "RootSystem",
    "RootSystemSpec",
    "adjoint",
    "adjoint_little_brothers",
    "all_sublattices",
    "apply_word",
    "build_root_system",
    "classify_pi",
    "colored_cone",
    "compare",
    "cone_lambda_contains",
    "diagram_analyze",
    "dominant_conjugate",
    "factoriality",
    "h_sets",
    "highest_short_root",
    "lambda_bar",
    "lambda_dominance",
    "lambda_rational",
    "little_brother_report",
    "little_brothers",
    "maximal_elements",
    "normality",
    "parse_group",
    "parse_weight",
    "parse_weights",
    "phi_plus_lambda",
    "pi_g_plus",
    "pi_plus",
    "preset_lattice",
    "q_maximal_set",
    "regularize",
    "simply_connected",
    "smoothness",
    "timashev_check",
    "weyl_orbit",
    "lattice_contains",
]


def lattice_contains(L: CharacterLattice, mu) -> bool:
    return L.contains(mu)
