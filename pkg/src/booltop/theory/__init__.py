from .decomposition import (IdDecomposition, canonical_circular, id_decomposition, is_cuttable,
                            word_circular_value)
from .diagrams import (ArcMonoid, Diagram, Pattern, PmDiagram, PmStateSpace, StateSpace, TensorReport,
                       TqftReport, arc_monoid, dual_signs, general_state_space, matchings, pm_state_space,
                       sign_sequences, tensor_compare, tqft_check)
from .evaluation import Evaluation, alpha_eval, show_word
from .halfspace import HalfSpace, NfaEnumeration, half_state_space, minimal_dfa_from_space, minimal_nfas
