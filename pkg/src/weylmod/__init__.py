"""Exact Whittaker-module computations for the rank-one Weyl algebra.

Public surface: exact sparse vectors over the creation polynomial model
(core), Whittaker frames and mode/matrix-unit/Casimir actions (frame,
weylact), current-algebra and Virasoro modes with a generic vertex-operator
mode engine (winf, engine), simple quotients with the complete
Whittaker-vector solver and cyclicity probes (quotient), the finite 2l-by-2l
analog (glfinite), verification suites (suites) and a batch CLI (cli).
"""

from .core import Q, Vec, add_scaled, avar, enumerate_monomials, mono, svar
from .frame import DEFAULT, VACUUM, Frame, HypothesisError
from .textio import ParseError, format_vec, parse_op, parse_vec, parse_word
from .weylact import (
    act_a,
    act_astar,
    act_E,
    act_I,
    act_op,
    act_word,
    iw_vector,
    whittaker_defect,
)
from .winf import act_H, act_Jk, act_L, act_Lw, relation_probe
from .engine import delta_twist, mode_act
from .quotient import (
    act_quot,
    cyclicity_probe,
    ipow_w,
    non_tensor_witness,
    project,
    whittaker_space,
)

__version__ = "0.1.0"

__all__ = [
    "Q", "Vec", "add_scaled", "avar", "svar", "mono", "enumerate_monomials",
    "Frame", "HypothesisError", "DEFAULT", "VACUUM",
    "ParseError", "parse_vec", "format_vec", "parse_op", "parse_word",
    "act_a", "act_astar", "act_E", "act_I", "act_op", "act_word",
    "iw_vector", "whittaker_defect",
    "act_Jk", "act_L", "act_Lw", "act_H", "relation_probe",
    "mode_act", "delta_twist",
    "project", "act_quot", "ipow_w", "whittaker_space", "cyclicity_probe",
    "non_tensor_witness",
    "__version__",
]
