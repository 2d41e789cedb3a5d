"""Tokenizer for the ring description language."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import LexicalError

PUNCTUATION = {
    "/": "SLASH",
    "(": "LPAREN",
    ")": "RPAREN",
    "[": "LBRACK",
    "]": "RBRACK",
    ",": "COMMA",
    "+": "PLUS",
    "*": "STAR",
    "^": "CARET",
}

# display names used in "expected" sets
SHOWN = {kind: f"'{char}'" for char, kind in PUNCTUATION.items()} | {
    "INT": "INT",
    "IDENT": "IDENT",
    "EOF": "end of input",
}

# longer literals are rejected before int() sees them
MAX_INT_DIGITS = 18
DIGITS = frozenset("0123456789")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        start = col
        if ch in DIGITS:
            j = i
            while j < len(text) and text[j] in DIGITS:
                j += 1
            if j - i > MAX_INT_DIGITS:
                raise LexicalError(f"integer literal longer than {MAX_INT_DIGITS} digits",
                                   line, start, expected=("INT",))
            tokens.append(Token("INT", text[i:j], line, start))
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], line, start))
        elif ch in PUNCTUATION:
            j = i + 1
            tokens.append(Token(PUNCTUATION[ch], ch, line, start))
        else:
            raise LexicalError(f"unexpected character {ch!r}", line, start,
                               expected=("INT", "IDENT", *(f"'{c}'" for c in PUNCTUATION)))
        col += j - i
        i = j
    tokens.append(Token("EOF", "", line, col))
    return tokens
