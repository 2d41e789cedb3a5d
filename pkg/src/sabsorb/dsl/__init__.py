"""Text format for rings, ideals, multiplicative sets, elements and maps."""
from .elaborate import build_amalgamation, elaborate
from .parser import parse
from .render import render

__all__ = ["build_amalgamation", "elaborate", "parse", "render"]
