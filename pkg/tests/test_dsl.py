"""Description language: parsing, elaboration, rendering and error positions."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sabsorb.dsl import elaborate, parse, render
from sabsorb.dsl.ast import IdealSpec, IntLit, MultSpec, PolyQuot, Product, Zmod
from sabsorb.errors import (
    ArityError,
    CapacityError,
    DslError,
    DslSyntaxError,
    LexicalError,
    SAbsorbError,
    SemanticError,
)

RING_TEXTS = [
    "Z/12",
    "product(Z/4, Z/9)",
    "Z/2[x]/(x^3)",
    "Z/2[x]/(x^2+x+1)",
    "quot(Z/12, ideal(4))",
    "amalg(Z/4, id, ideal(2))",
    "amalg(Z/8, reduce, ideal(1))",
    "product(Z/2[x]/(x^2), Z/3)",
]


def test_parse_shapes():
    assert parse("Z/12") == Zmod(12)
    assert parse("product(Z/2, Z/3)") == Product(Zmod(2), Zmod(3))
    assert isinstance(parse("Z/2[x]/(x^3)"), PolyQuot)
    assert parse("ideal()", "ideal") == IdealSpec(())
    assert parse("mult(4)+noone", "multset") == MultSpec((IntLit(4),), include_one=False)


@pytest.mark.parametrize("text", RING_TEXTS)
def test_ring_descriptors_round_trip(text):
    assert render(elaborate(parse(text))) == text


@pytest.mark.parametrize("text", ["ideal()", "ideal(6)", "ideal(2)", "ideal(1)"])
def test_ideal_round_trip(z12, text):
    assert render(elaborate(parse(text, "ideal"), z12)) == text


def test_ideal_renders_minimal_generators(z12):
    assert render(elaborate(parse("ideal(8, 6)", "ideal"), z12)) == "ideal(2)"


@pytest.mark.parametrize("text", ["mult(4)", "mult(2)+noone", "mult(1)"])
def test_multset_round_trip(z12, text):
    assert render(elaborate(parse(text, "multset"), z12)) == text


def test_elements(build):
    r = build("product(Z/4, Z/9)")
    e = elaborate(parse("(1,2)", "element"), r)
    assert e.index == 11
    assert render(e) == "(1,2)"
    p = build("Z/6[x]/(x^2)")
    assert elaborate(parse("2*x+3", "element"), p).index == 15
    amal = build("amalg(Z/4, id, ideal(2))")
    assert render(elaborate(parse("(1,3)", "element"), amal)) == "(1,3)"


def test_table_homomorphisms(build):
    z4 = build("Z/4")
    assert elaborate(parse("table(0,1,2,3)", "hom"), z4).table == (0, 1, 2, 3)
    with pytest.raises(SemanticError):
        elaborate(parse("table(0,3,2,1)", "hom"), z4)


# =============================================================================
# ERRORS
# =============================================================================

def test_missing_modulus_position():
    with pytest.raises(DslSyntaxError) as info:
        parse("Z/")
    assert (info.value.line, info.value.column) == (1, 3)
    assert "INT" in info.value.expected


def test_bad_character_position():
    with pytest.raises(LexicalError) as info:
        parse("Z/12 $")
    assert info.value.column == 6


def test_trailing_input():
    with pytest.raises(DslSyntaxError) as info:
        parse("Z/12 Z/3")
    assert info.value.column == 6
    assert "end of input" in info.value.expected


def test_arity_errors():
    with pytest.raises(ArityError) as info:
        parse("product(Z/2)")
    assert info.value.column == 12
    with pytest.raises(ArityError):
        parse("mult()", "multset")
    with pytest.raises(ArityError):
        parse("quot(Z/4, ideal(2), ideal(2))")


def test_multiline_position():
    with pytest.raises(DslSyntaxError) as info:
        parse("product(Z/2,\n  Z/)")
    assert (info.value.line, info.value.column) == (2, 5)


def test_long_integer_literal():
    with pytest.raises(LexicalError) as info:
        parse("Z/" + "9" * 5000)
    assert info.value.column == 3
    assert parse("Z/" + "9" * 18) == Zmod(int("9" * 18))


@pytest.mark.parametrize("text", ["Z/2[x]/(x^30000)", "Z/2[x]/(x^3000000000)",
                                  "Z/3[x]/(x^6)"])
def test_poly_degree_over_cap(text):
    with pytest.raises(CapacityError):
        elaborate(parse(text))


def test_empty_input():
    with pytest.raises(DslSyntaxError):
        parse("   ")


def test_semantic_errors(z12):
    with pytest.raises(SemanticError):
        elaborate(parse("ideal(x)", "ideal"), z12)
    with pytest.raises(SemanticError):
        elaborate(parse("ideal((1,1))", "ideal"), z12)
    with pytest.raises(SemanticError):
        elaborate(parse("ideal(2)", "ideal"))
    with pytest.raises(SemanticError):
        elaborate(parse("Z/4[x]/(y^2)"))


# =============================================================================
# FUZZING
# =============================================================================

ALPHABET = "Z/()[],+*^ 0123456789xyidealmultproductquotamalgnoonereducetable$\n"


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet=ALPHABET, max_size=40),
       st.sampled_from(["ring", "ideal", "multset", "element", "hom"]))
def test_parser_raises_only_dsl_errors(text, sort):
    try:
        parse(text, sort)
    except DslError as exc:
        assert exc.line >= 1 and exc.column >= 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(RING_TEXTS), st.data())
def test_mutated_descriptors_fail_cleanly(text, data):
    cut = data.draw(st.integers(0, len(text) - 1))
    mutated = text[:cut] + text[cut + 1:]
    try:
        parse(mutated)
    except DslError as exc:
        assert str(exc).startswith(f"{exc.line}:{exc.column}:")


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(st.sampled_from(RING_TEXTS), st.data())
def test_edited_descriptors_elaborate_cleanly(text, data):
    cut = data.draw(st.integers(0, len(text)))
    kind = data.draw(st.sampled_from(["delete", "insert", "replace"]))
    char = data.draw(st.sampled_from(ALPHABET))
    if kind == "delete":
        edited = text[:cut] + text[cut + 1:]
    elif kind == "insert":
        edited = text[:cut] + char + text[cut:]
    else:
        edited = text[:cut] + char + text[cut + 1:]
    try:
        ring = elaborate(parse(edited))
    except DslError as exc:
        assert str(exc).startswith(f"{exc.line}:{exc.column}:")
        return
    except SAbsorbError:
        return
    # an accepted edit is a real ring whose canonical text builds it again
    again = elaborate(parse(render(ring)))
    assert again.order == ring.order
    assert render(again) == render(ring)
