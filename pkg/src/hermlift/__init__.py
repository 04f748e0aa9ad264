"""Hermitian-lifted locally recoverable codes over F_{q^2}, q = p^l."""

__version__ = "0.1.0"

from .gf import GF, field_create
from .curve import HermitianCurve, make_line
from .code import build_code
from .recovery import erasure_simulation, recover_symbol, recovery_sets

__all__ = [
    "GF",
    "field_create",
    "HermitianCurve",
    "make_line",
    "build_code",
    "erasure_simulation",
    "recover_symbol",
    "recovery_sets",
]
