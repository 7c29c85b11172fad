"""Exact finite-field toolkit for primitive transformation shift registers.

Construction and stepping of word-oriented shift registers whose
characteristic map is a polynomial resultant, primitivity testing with
certificates, exhaustive and closed-form censuses, a constructive search,
and regeneration of the bundled reference tables.
"""

from .cosets import (ConjugateClassSummary, CosetPartition, conjugate_class_summary,
                     count_trace_one_classes, cyclotomic_partition,
                     primitive_trace_one_count, trace_one_class_summaries)
from .counting import (closed_form_count, count_matrices_with_charpoly,
                       enumerate_special_primitives, enumerate_tsrp_bruteforce,
                       gl_matrices, gl_order, primitive_elements,
                       tsrp_count_theorem, tsrp_upper_bound)
from .errors import (BadDegree, BaseNotSubfield, BudgetExhausted,
                     CoefficientNotDescended, CompositeCharacteristic,
                     DimensionMismatch, DivisionByZeroPoly, ExistenceViolation,
                     FactorizationOverflow, FiberSizeViolation, InvalidParity,
                     NonSquareMatrix, ReducibleModulus, ScaleExceeded, SingularB,
                     TsrforgeError, UnknownKind, ZeroConstantTerm, ZeroElement)
from .factorint import (Factorization, euler_phi, factor_integer,
                        merged_factorization, moebius, multiplicative_order_from)
from .fields import (Field, FieldElement, format_element, make_extension_field,
                     make_field, make_prime_field, subfield_degree, subfield_maps)
from .guards import check_custom, check_enumeration, check_field, guard_bits
from .matrices import Matrix, companion_matrix, matrix_charpoly
from .parallel import deterministic_map, first_hit
from .polys import (Polynomial, format_poly, parse_poly, poly_divrem, poly_gcd,
                    poly_mod, poly_modpow)
from .primitivity import (PrimitivityCertificate, conjugate_product,
                          is_irreducible, is_primitive_element,
                          is_primitive_poly, minimal_polynomial)
from .search import (ConjectureWitness, SearchProvenance, SearchResult,
                     find_trace_one_quadratic, primitive_polys, reciprocal,
                     search_primitive_tsr, verify_conjecture)
from .tables import (fiber_census, generate_table, membership_report,
                     regenerate_row, row_counts)
from .tsr import (Decomposition, TsrSpec, TsrState, build_transition_matrix,
                  is_primitive_tsr, mn_decompose, tap_polynomial,
                  tsr_charpoly_direct, tsr_charpoly_formula, tsr_period,
                  tsr_step)
from .verify import CheckResult, first_failure, run_checks

__version__ = "0.1.0"
