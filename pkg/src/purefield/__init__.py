"""Integral bases and discriminants of pure number fields Q(a**(1/n))."""

from .arith import (Factorization, SquarefreeDecomposition, bezout, factorize, floor_sum,
                    mod_inverse, p_adic_valuation, squarefree_decompose)
from .basis import (BasisElement, ExponentProfile, IntegralBasis, beta_combine, c_sequence,
                    canonicalize, compute, delta_element, eta_element, exponent_profile,
                    integral_basis, prime_power_basis, unit_adjusters, validate_field)
from .discriminant import DiscriminantFactorization, d_K_formula
from .errors import DomainError, HypothesisViolation, NotInvertibleError, RankError
from .field import (FieldElement, PureField, char_poly, disc_of_elements, element_mul, hnf,
                    is_algebraic_integer, module_span_equal, multiplication_matrix,
                    transition_determinant)
from .periodicity import PeriodClass, period_modulus, transfer_check

__version__ = "0.1.0"
