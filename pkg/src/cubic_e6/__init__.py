"""Exact root-system, Weyl-orbit and line combinatorics of cubic surfaces,
with symbolic classification of lines and singularities on explicit cubic
forms."""
from .configs import SingularityConfig, parse_config
from .errors import ConfigError, CubicE6Error, InputError, InvariantViolation
from .exact import BinaryForm, QPoly, gcd_binary, hilbert_function, resultant_binary, substitute_linear
from .lattice import LatticeVector, enumerate_lines, enumerate_roots, pairing, reflect
from .surface import build_model, line_orbits, root_census, skew_hilbert_count, table1

__all__ = [
    "BinaryForm", "ConfigError", "CubicE6Error", "InputError", "InvariantViolation",
    "LatticeVector", "QPoly", "SingularityConfig", "build_model", "enumerate_lines",
    "enumerate_roots", "gcd_binary", "hilbert_function", "line_orbits", "pairing",
    "parse_config", "reflect", "resultant_binary", "root_census", "skew_hilbert_count",
    "substitute_linear", "table1",
]
