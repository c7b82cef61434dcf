"""Exact quasisymmetric functions, the internal coproduct, ABS morphisms and
the Bernstein homomorphism."""

from .bernstein import (
    abs_morphism,
    bernstein_map,
    bernstein_on_qsym,
    xi_alpha,
    xi_alpha_convolution,
    xi_alpha_general,
    zeta_alpha,
    zeta_alpha_convolution,
)
from .compositions import Composition, compositions_of, parse_composition
from .config import degree_cap, set_degree_cap
from .hopf import HopfPresentation, audit_hopf, convolve, generic_antipode
from .instances import Character, get_instance, make_binomial, make_lambda, make_qsym
from .lincomb import LinComb
from .qsym import (
    M,
    delta_P,
    delta_P_prime,
    eps_P,
    is_symmetric,
    m_lambda,
    qsym_antipode,
    qsym_coprod,
    qsym_counit,
    qsym_mul,
)
from .rings import QQ, ZZ, ModularRing, ring_from_spec
from .suites import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "M", "QQ", "SUITES", "ZZ", "Character", "Composition", "HopfPresentation", "LinComb",
    "ModularRing", "abs_morphism", "audit_hopf", "bernstein_map", "bernstein_on_qsym",
    "compositions_of", "convolve", "degree_cap", "delta_P", "delta_P_prime", "eps_P",
    "generic_antipode", "get_instance", "is_symmetric", "m_lambda", "make_binomial",
    "make_lambda", "make_qsym", "parse_composition", "qsym_antipode", "qsym_coprod",
    "qsym_counit", "qsym_mul", "ring_from_spec", "run_suite", "set_degree_cap", "xi_alpha",
    "xi_alpha_convolution", "xi_alpha_general", "zeta_alpha", "zeta_alpha_convolution",
]
