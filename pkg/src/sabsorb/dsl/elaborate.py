"""Turn parsed descriptions into rings, ideals, multiplicative sets and maps."""
from __future__ import annotations

from ..errors import HomomorphismError, SemanticError
from ..rings.amalgam import Amalgamation, amalgamate
from ..rings.core import (
    AmalgamInfo,
    FiniteRing,
    PolyInfo,
    ProductInfo,
    QuotientInfo,
    RingElement,
    RingHom,
    ZmodInfo,
    check_poly_degree,
    identity_hom,
    make_hom,
    make_poly_quotient,
    make_product,
    make_zmod,
)
from ..rings.ideals import Ideal, ideal_generated, radical, zero_ideal
from ..rings.multiplicative import MultSet, mult_closure
from ..rings.quotient import make_quotient
from .ast import (
    Amalg,
    Element,
    HomRef,
    IdealSpec,
    IntLit,
    MultSpec,
    Node,
    Pair,
    Poly,
    PolyQuot,
    Product,
    Quot,
    RingExpr,
    Zmod,
)

Artifact = FiniteRing | Ideal | MultSet | RingElement | RingHom


def elaborate(node: Node, context: FiniteRing | None = None) -> Artifact:
    """
    Build the object a syntax tree describes.

    Rings need no context; ideals, multiplicative sets, elements and
    homomorphisms are interpreted in ``context``.
    """
    if isinstance(node, (Zmod, Product, PolyQuot, Quot, Amalg)):
        return build_ring(node)
    if context is None:
        raise SemanticError(f"{type(node).__name__} needs a ring to live in")
    if isinstance(node, IdealSpec):
        return build_ideal(node, context)
    if isinstance(node, MultSpec):
        return build_multset(node, context)
    if isinstance(node, HomRef):
        return build_hom(node, context)
    return RingElement(context, element_index(node, context))


# =============================================================================
# RINGS
# =============================================================================

def build_ring(node: RingExpr) -> FiniteRing:
    if isinstance(node, Zmod):
        return make_zmod(node.n)
    if isinstance(node, Product):
        return make_product(build_ring(node.left), build_ring(node.right))
    if isinstance(node, PolyQuot):
        base = build_ring(node.base)
        coeffs = poly_terms(node.modulus, node.var)
        check_poly_degree(base, max(coeffs), node.var)
        modulus = [coeffs.get(k, 0) for k in range(max(coeffs) + 1)]
        return make_poly_quotient(base, modulus, node.var)
    if isinstance(node, Quot):
        base = build_ring(node.base)
        quotient, _ = make_quotient(base, build_ideal(node.ideal, base))
        return quotient
    return build_amalgamation(node).ring


def build_amalgamation(node: Amalg) -> Amalgamation:
    A = build_ring(node.base)
    f = build_hom(node.hom, A)
    return amalgamate(A, f, build_ideal(node.ideal, f.target))


def poly_terms(poly: Poly, var: str) -> dict[int, int]:
    """Integer coefficients keyed by exponent."""
    coeffs: dict[int, int] = {}
    for term in poly.terms:
        if term.var is not None and term.var != var:
            raise SemanticError(f"unknown variable '{term.var}' (ring variable is '{var}')")
        exp = 0 if term.var is None else term.exp
        coeffs[exp] = coeffs.get(exp, 0) + term.coeff
    return coeffs


# =============================================================================
# IDEALS, MULTIPLICATIVE SETS, HOMOMORPHISMS
# =============================================================================

def build_ideal(node: IdealSpec, ring: FiniteRing) -> Ideal:
    return ideal_generated(ring, [element_index(e, ring) for e in node.elems])


def build_multset(node: MultSpec, ring: FiniteRing) -> MultSet:
    gens = [element_index(e, ring) for e in node.elems]
    return mult_closure(ring, gens, include_one=node.include_one)


def build_hom(node: HomRef, ring: FiniteRing) -> RingHom:
    """Homomorphisms start at ``ring``; id and table map it to itself."""
    if node.kind == "id":
        return identity_hom(ring)
    if node.kind == "reduce":
        nil = radical(zero_ideal(ring))
        quotient, proj = make_quotient(ring, nil)
        return RingHom(ring, quotient, proj.table, "reduce")
    try:
        return make_hom(ring, ring, node.values,
                        f"table({','.join(str(v) for v in node.values)})")
    except HomomorphismError as exc:
        raise SemanticError(str(exc)) from exc


# =============================================================================
# ELEMENTS
# =============================================================================

def _integer(ring: FiniteRing, value: int) -> int:
    """value·1 by double-and-add."""
    result, base = ring.zero, ring.one
    while value:
        if value & 1:
            result = ring.add(result, base)
        base = ring.add(base, base)
        value >>= 1
    return result


def element_index(node: Element, ring: FiniteRing) -> int:
    info = ring.construction
    if isinstance(node, IntLit):
        return _integer(ring, node.value)
    if isinstance(info, QuotientInfo):
        return info.projection[element_index(node, info.parent)]
    if isinstance(node, Pair):
        if isinstance(info, ProductInfo):
            left = element_index(node.left, info.left)
            right = element_index(node.right, info.right)
            return left * info.right.order + right
        if isinstance(info, AmalgamInfo):
            pair = (element_index(node.left, info.left), element_index(node.right, info.right))
            try:
                return info.pairs.index(pair)
            except ValueError:
                raise SemanticError(f"pair is not an element of {ring.descriptor}") from None
        raise SemanticError(f"pair literal in {ring.descriptor}, which is not a product")
    if isinstance(info, PolyInfo):
        return _poly_value(node, ring, info)
    if isinstance(info, ZmodInfo):
        raise SemanticError(f"polynomial literal in {ring.descriptor}")
    raise SemanticError(f"polynomial literal in {ring.descriptor}, which has no variable")


def _poly_value(poly: Poly, ring: FiniteRing, info: PolyInfo) -> int:
    n = info.base.order
    degree = len(info.modulus) - 1
    x = n if degree >= 2 else (-info.modulus[0]) % n
    total = ring.zero
    for term in poly.terms:
        if term.var is not None and term.var != info.var:
            raise SemanticError(f"unknown variable '{term.var}' in {ring.descriptor}")
        monomial = ring.one if term.var is None else ring.power(x, term.exp)
        total = ring.add(total, ring.mul(_integer(ring, term.coeff), monomial))
    return total
