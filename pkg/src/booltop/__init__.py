"""Boolean-valued one-dimensional topological theories of regular languages."""
from .boolsemi import BoolMatrix, Semimodule, coevaluation, dual, is_distributive, reduced_tensor, tensor
from .circauto import CircularDfa, dcfa_accepts, minimal_dcfa, validate_dcfa
from .errors import (BooltopError, DomainError, InvalidAutomaton, LimitExceeded, NotCircular, NotCuttable,
                     NotProjective, RegexSyntaxError, SizeLimit)
from .lang import Dfa, Nfa, minimize, opposite, parse_regex, regex_dfa, rotation_closure, syntactic_monoid
from .measure import complexity, joint_complexity, relative_complexity
from .pairing import PairingTheory, pairing_state_space
from .theory import (Evaluation, canonical_circular, general_state_space, half_state_space, id_decomposition,
                     is_cuttable, pm_state_space, tqft_check)

__version__ = "0.1.0"

__all__ = [
    "BoolMatrix", "Semimodule", "coevaluation", "dual", "is_distributive", "reduced_tensor", "tensor",
    "CircularDfa", "dcfa_accepts", "minimal_dcfa", "validate_dcfa",
    "BooltopError", "DomainError", "InvalidAutomaton", "LimitExceeded", "NotCircular", "NotCuttable",
    "NotProjective", "RegexSyntaxError", "SizeLimit",
    "Dfa", "Nfa", "minimize", "opposite", "parse_regex", "regex_dfa", "rotation_closure", "syntactic_monoid",
    "complexity", "joint_complexity", "relative_complexity",
    "PairingTheory", "pairing_state_space",
    "Evaluation", "canonical_circular", "general_state_space", "half_state_space", "id_decomposition",
    "is_cuttable", "pm_state_space", "tqft_check",
]
