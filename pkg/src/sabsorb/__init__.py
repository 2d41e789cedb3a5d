"""
sabsorb: exact S-n-absorbing ideal theory on finite commutative rings.

Rings are stored as operation tables; ideals and multiplicative sets as
member sets. Everything is decided by exhaustive search with explicit
witnesses and counterexamples.
"""
from .errors import SAbsorbError
from .models import OmegaValue, Report, Verdict

__version__ = "0.1.0"

__all__ = ["OmegaValue", "Report", "SAbsorbError", "Verdict", "__version__"]
