"""
Recursive-descent parser for the ring description language.

    ring      := atom { "[" IDENT "]" "/" "(" poly ")" }
    atom      := "Z" "/" INT | "product" "(" ring "," ring ")"
               | "quot" "(" ring "," idealspec ")"
               | "amalg" "(" ring "," homref "," idealspec ")"
    idealspec := "ideal" "(" [elem {"," elem}] ")"
    multspec  := "mult" "(" elem {"," elem} ")" ["+" "noone"]
    elem      := "(" elem "," elem ")" | poly
    poly      := term {"+" term}
    term      := INT ["*" IDENT ["^" INT]] | IDENT ["^" INT]
    homref    := "id" | "reduce" | "table" "(" INT {"," INT} ")"
"""
from __future__ import annotations

from collections.abc import Callable
from typing import Literal

from ..errors import ArityError, DslSyntaxError
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
    Term,
    Zmod,
)
from .lexer import SHOWN, Token, tokenize

Sort = Literal["ring", "ideal", "multset", "element", "hom"]

RING_KEYWORDS = ("Z", "product", "quot", "amalg")
HOM_KEYWORDS = ("id", "reduce", "table")


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "EOF" else repr(tok.value)


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    # --- token plumbing --------------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...], tok: Token | None = None) -> DslSyntaxError:
        tok = tok or self.peek()
        return DslSyntaxError(f"unexpected {_describe(tok)}", tok.line, tok.column, expected)

    def expect(self, kind: str) -> Token:
        if self.peek().kind != kind:
            raise self.fail((SHOWN[kind],))
        return self.advance()

    def keyword(self, *words: str) -> Token:
        tok = self.peek()
        if tok.kind != "IDENT" or tok.value not in words:
            raise self.fail(tuple(f"'{w}'" for w in words))
        return self.advance()

    def integer(self) -> int:
        return int(self.expect("INT").value)

    def arguments(self, name: str, parsers: list[Callable[[], object]]) -> list[object]:
        """Fixed-arity call: "(" a {"," b} ")"."""
        self.expect("LPAREN")
        values = []
        for k, parse_one in enumerate(parsers):
            if k:
                tok = self.peek()
                if tok.kind == "RPAREN":
                    raise ArityError(f"{name} takes {len(parsers)} arguments, got {k}",
                                     tok.line, tok.column, ("','",))
                self.expect("COMMA")
            elif self.peek().kind == "RPAREN":
                tok = self.peek()
                raise ArityError(f"{name} takes {len(parsers)} arguments, got 0",
                                 tok.line, tok.column, ("INT", "IDENT", "'('"))
            values.append(parse_one())
        tok = self.peek()
        if tok.kind == "COMMA":
            raise ArityError(f"{name} takes {len(parsers)} arguments", tok.line, tok.column,
                             ("')'",))
        self.expect("RPAREN")
        return values

    # --- rings -----------------------------------------------------------------

    def ring(self) -> RingExpr:
        node = self.ring_atom()
        while self.peek().kind == "LBRACK":
            self.advance()
            var = self.expect("IDENT").value
            self.expect("RBRACK")
            self.expect("SLASH")
            self.expect("LPAREN")
            modulus = self.poly()
            self.expect("RPAREN")
            node = PolyQuot(node, var, modulus)
        return node

    def ring_atom(self) -> RingExpr:
        word = self.keyword(*RING_KEYWORDS).value
        if word == "Z":
            self.expect("SLASH")
            return Zmod(self.integer())
        if word == "product":
            left, right = self.arguments("product", [self.ring, self.ring])
            return Product(left, right)
        if word == "quot":
            base, ideal = self.arguments("quot", [self.ring, self.ideal])
            return Quot(base, ideal)
        base, hom, ideal = self.arguments("amalg", [self.ring, self.hom, self.ideal])
        return Amalg(base, hom, ideal)

    # --- ideals and multiplicative sets ---------------------------------------

    def elem_list(self, allow_empty: bool, name: str) -> tuple[Element, ...]:
        self.expect("LPAREN")
        elems: list[Element] = []
        if self.peek().kind == "RPAREN":
            if not allow_empty:
                tok = self.peek()
                raise ArityError(f"{name} needs at least one generator", tok.line, tok.column,
                                 ("INT", "IDENT", "'('"))
        else:
            elems.append(self.elem())
            while self.peek().kind == "COMMA":
                self.advance()
                elems.append(self.elem())
        self.expect("RPAREN")
        return tuple(elems)

    def ideal(self) -> IdealSpec:
        self.keyword("ideal")
        return IdealSpec(self.elem_list(True, "ideal"))

    def multset(self) -> MultSpec:
        self.keyword("mult")
        elems = self.elem_list(False, "mult")
        if self.peek().kind == "PLUS":
            self.advance()
            self.keyword("noone")
            return MultSpec(elems, include_one=False)
        return MultSpec(elems)

    # --- elements --------------------------------------------------------------

    def elem(self) -> Element:
        if self.peek().kind == "LPAREN":
            left, right = self.arguments("pair", [self.elem, self.elem])
            return Pair(left, right)
        poly = self.poly()
        if len(poly.terms) == 1 and poly.terms[0].var is None:
            return IntLit(poly.terms[0].coeff)
        return poly

    def poly(self) -> Poly:
        terms = [self.term()]
        while self.peek().kind == "PLUS" and self.tokens[self.pos + 1].value != "noone":
            self.advance()
            terms.append(self.term())
        return Poly(tuple(terms))

    def term(self) -> Term:
        tok = self.peek()
        if tok.kind == "INT":
            coeff = self.integer()
            if self.peek().kind != "STAR":
                return Term(coeff)
            self.advance()
            var = self.expect("IDENT").value
        elif tok.kind == "IDENT":
            coeff, var = 1, self.advance().value
        else:
            raise self.fail(("INT", "IDENT"))
        exp = 1
        if self.peek().kind == "CARET":
            self.advance()
            exp = self.integer()
        return Term(coeff, var, exp)

    # --- homomorphisms ---------------------------------------------------------

    def hom(self) -> HomRef:
        word = self.keyword(*HOM_KEYWORDS).value
        if word != "table":
            return HomRef(word)
        self.expect("LPAREN")
        values = [self.integer()]
        while self.peek().kind == "COMMA":
            self.advance()
            values.append(self.integer())
        self.expect("RPAREN")
        return HomRef("table", tuple(values))


def parse(text: str, sort: Sort = "ring") -> Node:
    """Parse ``text`` as the given sort; the whole input must be consumed."""
    if not text.strip():
        raise DslSyntaxError("empty input", 1, 1, ("INT", "IDENT"))
    parser = Parser(text)
    entry = {
        "ring": parser.ring,
        "ideal": parser.ideal,
        "multset": parser.multset,
        "element": parser.elem,
        "hom": parser.hom,
    }[sort]
    node = entry()
    if parser.peek().kind != "EOF":
        raise parser.fail(("end of input",))
    return node
