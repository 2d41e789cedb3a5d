"""Finite rings, ideals, multiplicative sets, localizations and amalgamations."""
