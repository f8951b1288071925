"""Exact abelianization invariants of Fibonacci-type cyclically presented groups."""

from .circulant import AbelianGroupStructure, Circulant, abelian_structure, circulant_from_poly, det_circulant, smith_normal_form
from .cpg import FibParams, H, abelianization, rank_via_gcd, representer_poly, res_FG, rank2_torsionfree
from .cyclo import cyclotomic, divisors, padic_valuation, res_cyclo_closed, totient
from .eisen import EisInt, GrowParams, eis_norm, lucas, rq_norm
from .errors import DomainError, NotApplicable, NotDivisible, ZeroPolynomial
from .exactpoly import IntPoly, divexact, gcd_primitive, resultant, resultant_sylvester_oracle

__version__ = "0.1.0"
