"""Comment stripping, NCLOC counting, and tokenization for Java source text.

The stripper is a character state machine that understands string and char
literals, so comment markers inside literals are left alone. Comment bytes
are replaced with spaces (newlines kept), which preserves line and column
positions for everything downstream and makes stripping idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

_CODE, _LINE_COMMENT, _BLOCK_COMMENT, _STRING, _CHAR = range(5)


@dataclass
class StrippedSource:
    text: str
    ncloc: int
    warnings: list[str] = field(default_factory=list)


def strip_comments_and_count(source: str) -> StrippedSource:
    """Remove // and /* */ comments and count non-comment lines of code.

    Lenient by design: an unterminated block comment runs to end of file, an
    unterminated string or char literal is closed at the next newline (Java
    literals cannot span lines); both are reported as warnings, never errors.
    """
    out: list[str] = []
    warnings: list[str] = []
    state = _CODE
    line = 1
    opened_at = 0
    i = 0
    n = len(source)
    while i < n:
        c = source[i]
        nxt = source[i + 1] if i + 1 < n else ""
        if state == _CODE:
            if c == "/" and nxt == "/":
                state = _LINE_COMMENT
                out.append("  ")
                i += 2
                continue
            if c == "/" and nxt == "*":
                state = _BLOCK_COMMENT
                opened_at = line
                out.append("  ")
                i += 2
                continue
            if c == '"':
                state = _STRING
                opened_at = line
            elif c == "'":
                state = _CHAR
                opened_at = line
            elif c == "\n":
                line += 1
            out.append(c)
            i += 1
        elif state == _LINE_COMMENT:
            if c == "\n":
                out.append("\n")
                line += 1
                state = _CODE
            else:
                out.append(" ")
            i += 1
        elif state == _BLOCK_COMMENT:
            if c == "*" and nxt == "/":
                out.append("  ")
                state = _CODE
                i += 2
                continue
            if c == "\n":
                out.append("\n")
                line += 1
            else:
                out.append(" ")
            i += 1
        else:  # _STRING or _CHAR
            quote = '"' if state == _STRING else "'"
            if c == "\\" and nxt:
                out.append(c)
                out.append(nxt)
                if nxt == "\n":
                    line += 1
                i += 2
                continue
            if c == quote:
                out.append(c)
                state = _CODE
            elif c == "\n":
                kind = "string" if state == _STRING else "char"
                warnings.append(f"unterminated {kind} literal opened on line {opened_at}")
                out.append("\n")
                line += 1
                state = _CODE
            else:
                out.append(c)
            i += 1
    if state == _BLOCK_COMMENT:
        warnings.append(f"unterminated block comment opened on line {opened_at}")
    elif state in (_STRING, _CHAR):
        kind = "string" if state == _STRING else "char"
        warnings.append(f"unterminated {kind} literal opened on line {opened_at}")
    text = "".join(out)
    ncloc = sum(1 for ln in text.split("\n") if ln.strip())
    return StrippedSource(text=text, ncloc=ncloc, warnings=warnings)


@dataclass(slots=True)
class Token:
    kind: str  # "ident" | "number" | "string" | "char" | "punct"
    text: str
    line: int


# Multi-character operators, longest first. "..." is kept whole so varargs
# parameters survive as one token; ">>" and ">>>" are rebalanced by the
# parser when they close nested generics.
_PUNCT4 = (">>>=",)
_PUNCT3 = (">>>", ">>=", "<<=", "...")
_PUNCT2 = (
    "&&", "||", "++", "--", "==", "!=", "<=", ">=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "<<", ">>", "->", "::",
)


def _ident_start(c: str) -> bool:
    return c.isalpha() or c == "_" or c == "$"


def _ident_part(c: str) -> bool:
    return c.isalnum() or c == "_" or c == "$"


def tokenize(text: str) -> list[Token]:
    """Tokenize comment-free Java text. Never raises on malformed input."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    line = 1
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
            continue
        if c.isspace():
            i += 1
            continue
        if c == '"' or c == "'":
            quote = c
            j = i + 1
            while j < n:
                d = text[j]
                if d == "\\" and j + 1 < n:
                    j += 2
                    continue
                if d == quote or d == "\n":
                    break
                j += 1
            end = j + 1 if j < n and text[j] == quote else j
            tokens.append(Token("string" if quote == '"' else "char", text[i:end], line))
            i = end
            continue
        if _ident_start(c):
            j = i + 1
            while j < n and _ident_part(text[j]):
                j += 1
            tokens.append(Token("ident", text[i:j], line))
            i = j
            continue
        if c.isdigit() or (c == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n:
                d = text[j]
                if d.isalnum() or d == "." or d == "_":
                    j += 1
                elif d in "+-" and text[j - 1] in "eEpP":
                    j += 1
                else:
                    break
            tokens.append(Token("number", text[i:j], line))
            i = j
            continue
        matched = ""
        for group in (_PUNCT4, _PUNCT3, _PUNCT2):
            for op in group:
                if text.startswith(op, i):
                    matched = op
                    break
            if matched:
                break
        if not matched:
            matched = c
        tokens.append(Token("punct", matched, line))
        i += len(matched)
    return tokens
