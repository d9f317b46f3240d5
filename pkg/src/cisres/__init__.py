"""Resultants over commutative idempotent semirings.

Computes the product-form resultant ``R`` and the Sylvester permanent ``S``
for polynomials given by their roots, over several concrete carriers, and
provides the boolean-matrix machinery that explains why the two coincide.
"""

from .errors import (CisError, DimensionError, EnumerationLimitError, InstanceMismatchError,
                     InvalidParameterError, ParseError, PreconditionError)
from .instances import INSTANCE_TAGS, make_instance, standard_instances
from .polynomial import CisPolynomial, poly_from_roots, poly_mul
from .representations import (BoolMatrix, SylPair, TermExponent, Trace, enumerate_res_reps,
                              enumerate_syl_reps, flush_pair, normalize_term, res_from_syl,
                              sort_pair, syl_from_res)
from .resultant import (RootVectors, Verdict, permanent, resultant_product,
                        sweep_main_theorem, sylvester_expression, sylvester_matrix,
                        verify_main_theorem)
from .semiring import AXIOMS, CisValue, Semiring, check_axioms

__version__ = "0.1.0"
