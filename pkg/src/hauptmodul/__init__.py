"""Exact verification of the level-13 Hauptmodul identities.

Submodules: ``exactnum`` (Q(zeta_13) and Q(sqrt 13)), ``repgroup``
(matrices, relations, closures), ``invariants`` (polynomial forms and the
group action), ``qexpand`` (exact Puiseux series), ``numcheck``
(floating-point spot checks) and ``cli``.
"""

from .errors import HauptmodulError
from .exactnum import Cyclotomic13, QuadSqrt13, SQRT13, const, zeta
from .qexpand import PuiseuxSeries, verify_q_identity
from .repgroup import CycMatrix, build_matrix, enumerate_group, projective_eq, verify_group_relation
from .invariants import MultiPoly, build_form, invariance_scalar, substitute, verify_symbolic_identity

__version__ = "0.1.0"

__all__ = [
    "HauptmodulError", "Cyclotomic13", "QuadSqrt13", "SQRT13", "const", "zeta",
    "PuiseuxSeries", "verify_q_identity", "CycMatrix", "build_matrix", "enumerate_group",
    "projective_eq", "verify_group_relation", "MultiPoly", "build_form", "invariance_scalar",
    "substitute", "verify_symbolic_identity",
]
