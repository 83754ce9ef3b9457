"""Combinatorics of Bruhat-Tits strata for unramified unitary Rapoport-Zink spaces."""

from .counts import nu_eval, nu_symbolic, parabolic_order, unitary_order
from .intpoly import IntPoly

__all__ = ["IntPoly", "nu_eval", "nu_symbolic", "parabolic_order", "unitary_order"]
__version__ = "0.1.0"
