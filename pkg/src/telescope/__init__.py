"""Telescopes of extended finite group actions.

A finitely generated torsion group acting on a tower of finite quotients
is glued, one fresh point and one transposition per quotient, into a
subgroup of a product of symmetric groups.  This package makes every
finite truncation of that construction computable and machine-checks the
facts it rests on: uniform return bounds for traces, torsion bounds,
subdirectness onto full symmetric groups, and the even-signed kernel
projecting onto alternating groups from some component on.
"""

from .perm import Permutation, PermGroup, orbit
from .words import (Letter, TAU, Word, build_v, build_w, evaluate_word,
                    parse_word, reduce_word, terminal_subword, trace)
from .selfsim import (BudgetExceeded, LevelAction, NotContracting,
                      WreathRecursion, grigorchuk, gupta_sidki_3,
                      invert_signed, reduce_signed)
from .reports import CheckReport
from .tower import (ExtendedAction, TelescopeGroup, build_telescope,
                    divides_factorial, extend_action, transitivity_report,
                    verify_fundamental_general, verify_orbit_bound,
                    verify_torsion_bound, verify_trace_lemmas)
from .certify import (Certificate, alt_cutoff, check_perfect, check_subdirect,
                      check_tail_injectivity, component_table,
                      emit_certificate, perfectness_scan, sign_vectors)

__version__ = "0.1.0"

__all__ = [
    "Permutation", "PermGroup", "orbit",
    "Letter", "TAU", "Word", "build_v", "build_w", "evaluate_word",
    "parse_word", "reduce_word", "terminal_subword", "trace",
    "BudgetExceeded", "LevelAction", "NotContracting", "WreathRecursion",
    "grigorchuk", "gupta_sidki_3", "invert_signed", "reduce_signed",
    "CheckReport",
    "ExtendedAction", "TelescopeGroup", "build_telescope", "divides_factorial",
    "extend_action", "transitivity_report", "verify_fundamental_general",
    "verify_orbit_bound", "verify_torsion_bound", "verify_trace_lemmas",
    "Certificate", "alt_cutoff", "check_perfect", "check_subdirect",
    "check_tail_injectivity", "component_table", "emit_certificate",
    "perfectness_scan", "sign_vectors",
    "__version__",
]
