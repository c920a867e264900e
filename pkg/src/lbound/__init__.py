"""Explicit upper and lower bounds for log|L(σ+it)| in the Selberg class under GRH.

The package is organised as: L-function descriptors (lfunc), the extremal
minorant/majorant pair (extremal), verification of their constants
(constants), gamma-factor estimates (gamma), the explicit formula (explicit),
prime sums (primes), the bounds engine (bounds) and file/CLI plumbing (io, cli).
"""
from .bounds import (
    BoundReport,
    E_down,
    E_up,
    corollary_combined,
    reconcile_theorem7,
    theorem7_upper,
    theorem8_lower,
    theorems_1_to_6,
)
from .errors import (
    ConvergenceError,
    DescriptorError,
    DomainError,
    IncompleteDataError,
    LboundError,
    ParseError,
)
from .extremal import ExtremalContext, f_sigma, g_delta, ghat, m_delta, mhat
from .io import load_descriptor, load_zeros
from .lfunc import SelbergDescriptor, builtin_descriptor, derive_invariants, tau, zeta_descriptor

__version__ = "0.1.0"
