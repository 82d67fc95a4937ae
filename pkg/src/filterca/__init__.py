"""Filter cellular automaton over F2 and the exact Jost solutions of its
discrete Schrödinger operator."""

from .evolution import RuleForm, Trajectory, evolve, reverse_step, step
from .invariants import InvariantRecord, check_trajectory, f2_transport_check, invariant_record
from .jost import (
    JostTable,
    MeasureVector,
    MonodromyRecord,
    PreconditionError,
    asymptotic_tail_sum,
    f_measures,
    jost_closed,
    jost_mod2_island,
    jost_product,
    jost_sweep,
    monodromy,
    reconstruct_potential,
    reflection_relation_check,
    sum_rules_check,
    trivial_solution,
)
from .lattice import CaState, Island, StateParseError, format_state, islands, parse_state, reflect, support
from .lax import build_A, build_L, jost_transport_check, schrodinger_residual_mod2, verify_lax
from .polyring import F2Poly, IntPoly, LaurentInt, div_exact_one_minus_z, geometric, substitute_inverse

__version__ = "0.1.0"
