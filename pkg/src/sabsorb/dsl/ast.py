"""Syntax tree of the ring description language."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

# --- elements ---------------------------------------------------------------


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Term:
    coeff: int
    var: str | None = None
    exp: int = 0


@dataclass(frozen=True)
class Poly:
    terms: tuple[Term, ...]


@dataclass(frozen=True)
class Pair:
    left: Element
    right: Element


Element = Union[IntLit, Poly, Pair]


# --- ideals, multiplicative sets, homomorphisms ------------------------------


@dataclass(frozen=True)
class IdealSpec:
    elems: tuple[Element, ...]


@dataclass(frozen=True)
class MultSpec:
    elems: tuple[Element, ...]
    include_one: bool = True


@dataclass(frozen=True)
class HomRef:
    kind: Literal["id", "reduce", "table"]
    values: tuple[int, ...] = ()


# --- rings ------------------------------------------------------------------


@dataclass(frozen=True)
class Zmod:
    n: int


@dataclass(frozen=True)
class Product:
    left: RingExpr
    right: RingExpr


@dataclass(frozen=True)
class PolyQuot:
    base: RingExpr
    var: str
    modulus: Poly


@dataclass(frozen=True)
class Quot:
    base: RingExpr
    ideal: IdealSpec


@dataclass(frozen=True)
class Amalg:
    base: RingExpr
    hom: HomRef
    ideal: IdealSpec


RingExpr = Union[Zmod, Product, PolyQuot, Quot, Amalg]

Node = Union[RingExpr, IdealSpec, MultSpec, HomRef, IntLit, Poly, Pair]
