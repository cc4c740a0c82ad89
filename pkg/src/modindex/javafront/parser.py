"""Structural Java parser: type declarations, members, and member usage.

This is a brace-matching recursive parser over the token stream, not a
compiler front end. It recovers every named type declaration (top-level and
nested), its fields and methods, per-method field-access and call sets, the
branch-keyword count per method, and the raw type-name chains referenced in
the declaration. Anything it cannot make sense of is skipped with a
diagnostic; it never raises on malformed input.

Supported grammar is core Java up to version 8; newer constructs (records,
sealed types, switch arrows, text blocks) are tolerated leniently and
degrade to diagnostics at worst.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from pathlib import Path

from .lexer import Token, StrippedSource, strip_comments_and_count, tokenize
from .model import (
    Diagnostic,
    FieldDecl,
    ImportContext,
    KIND_CLASS,
    KIND_ENUM,
    KIND_INTERFACE,
    MethodDecl,
    SourceFile,
    TypeDecl,
)

JAVA_KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

_MODIFIERS = frozenset(
    """public protected private static final abstract native synchronized
    transient volatile strictfp default sealed""".split()
)

_TYPE_KEYWORDS = frozenset({"class", "interface", "enum", "record"})

_KIND_BY_KEYWORD = {
    "class": KIND_CLASS,
    "interface": KIND_INTERFACE,
    "enum": KIND_ENUM,
    "record": KIND_CLASS,
}

# Branch keywords counted as decision points (plus ternary ?, && and ||).
_DECISION_KEYWORDS = frozenset({"if", "for", "while", "do", "case", "catch"})

# Block-opening statement keywords added to the (approximate) statement tally
# on top of the semicolon count.
_STATEMENT_KEYWORDS = frozenset({"if", "for", "while", "do", "switch", "try"})

_MAX_DIAGNOSTICS = 25


def parse_file(source_text: str, path: str | Path) -> SourceFile:
    """Parse one Java compilation unit into a SourceFile model."""
    display_path = str(path)
    stripped = strip_comments_and_count(source_text)
    tokens = tokenize(stripped.text)
    parser = _Parser(tokens, display_path)
    parser.run()
    diagnostics = [Diagnostic(display_path, 1, w) for w in stripped.warnings]
    diagnostics.extend(parser.diagnostics)
    _assign_line_counts(parser.decls, stripped)
    raw_line_count = len(source_text.splitlines())
    return SourceFile(
        path=display_path,
        package_name=parser.package,
        raw_line_count=raw_line_count,
        ncloc=stripped.ncloc,
        type_decls=parser.decls,
        diagnostics=diagnostics,
    )


def _assign_line_counts(decls: list[TypeDecl], stripped: StrippedSource) -> None:
    """Attribute each code line to the innermost enclosing declaration."""
    if not decls:
        return
    lines = stripped.text.split("\n")
    has_code = [bool(ln.strip()) for ln in lines]
    owner: dict[int, int] = {}
    # Wider spans first so nested declarations overwrite their parents.
    order = sorted(range(len(decls)), key=lambda k: (decls[k].start_line, -decls[k].end_line))
    for k in order:
        d = decls[k]
        for lineno in range(d.start_line, d.end_line + 1):
            owner[lineno] = k
    counts = [0] * len(decls)
    for lineno, k in owner.items():
        if 1 <= lineno <= len(lines) and has_code[lineno - 1]:
            counts[k] += 1
    for k, d in enumerate(decls):
        d.ncloc = counts[k]


class _Parser:
    def __init__(self, tokens: list[Token], path: str):
        self.toks = tokens
        self.n = len(tokens)
        self.i = 0
        self.path = path
        self.package = ""
        self.imports = ImportContext()
        self.decls: list[TypeDecl] = []
        self.diagnostics: list[Diagnostic] = []
        self._suppressed = False

    # ------------------------------------------------------------------
    # cursor helpers

    def _tok(self, k: int = 0) -> Token | None:
        j = self.i + k
        return self.toks[j] if j < self.n else None

    def _text(self, k: int = 0) -> str:
        t = self._tok(k)
        return t.text if t else ""

    def _kind(self, k: int = 0) -> str:
        t = self._tok(k)
        return t.kind if t else ""

    def _line(self, k: int = 0) -> int:
        t = self._tok(k)
        if t:
            return t.line
        return self.toks[-1].line if self.toks else 1

    def _at_end(self) -> bool:
        return self.i >= self.n

    def _diag(self, line: int, message: str) -> None:
        if len(self.diagnostics) >= _MAX_DIAGNOSTICS:
            if not self._suppressed:
                self.diagnostics.append(
                    Diagnostic(self.path, line, "further diagnostics suppressed")
                )
                self._suppressed = True
            return
        self.diagnostics.append(Diagnostic(self.path, line, message))

    # ------------------------------------------------------------------
    # compilation unit

    def run(self) -> None:
        self._parse_header()
        while not self._at_end():
            before = self.i
            refs = Counter()
            start_line = self._line()
            self._collect_prefix(refs)
            t = self._text()
            if t in _TYPE_KEYWORDS or (t == "@" and self._text(1) == "interface"):
                self._parse_type(None, start_line, refs)
            elif t == ";":
                self.i += 1
            elif t == "":
                break
            else:
                self._diag(self._line(), f"unexpected token '{t}' at top level, skipping")
                if t == "{":
                    self._skip_balanced("{", "}")
                else:
                    self.i += 1
            if self.i == before:
                self.i += 1  # guard against stalls on malformed input

    def _parse_header(self) -> None:
        refs = Counter()  # annotations on package declarations are dropped
        while self._text() == "@" and self._text(1) != "interface":
            self._skip_annotation(refs)
        if self._text() == "package":
            self.i += 1
            self.package = self._read_dotted_name()
            if self._text() == ";":
                self.i += 1
        singles: dict[str, str] = {}
        wildcards: list[str] = []
        while self._text() == "import":
            self.i += 1
            if self._text() == "static":
                self.i += 1
            name = self._read_dotted_name()
            if self._text() == "." and self._text(1) == "*":
                self.i += 2
                if name:
                    wildcards.append(name)
            elif name:
                simple = name.rsplit(".", 1)[-1]
                # Static member imports register the owning class under the
                # member name; harmless for resolution since the target must
                # exist in the universe to count.
                singles.setdefault(simple, name)
            if self._text() == ";":
                self.i += 1
            else:
                self._diag(self._line(), "malformed import statement")
                self._skip_to_semicolon()
        self.imports = ImportContext(single=singles, wildcards=tuple(wildcards))

    def _read_dotted_name(self) -> str:
        parts: list[str] = []
        while self._kind() == "ident":
            parts.append(self._text())
            self.i += 1
            if self._text() == "." and self._kind(1) == "ident":
                self.i += 1
            elif self._text() == "." and self._text(1) == "*":
                break
            else:
                break
        return ".".join(parts)

    # ------------------------------------------------------------------
    # shared skip/scan helpers

    def _skip_annotation(self, refs: Counter) -> None:
        """At '@': consume the annotation and record its type name."""
        self.i += 1
        name = self._read_dotted_name()
        if name:
            last = name.rsplit(".", 1)[-1]
            if last[:1].isupper():
                refs[name] += 1
        if self._text() == "(":
            lo = self.i
            self._skip_balanced("(", ")")
            self._scan_refs(lo, self.i, refs)

    def _collect_prefix(self, refs: Counter) -> None:
        """Consume leading annotations and modifier keywords."""
        while True:
            t = self._text()
            if t == "@" and self._text(1) != "interface":
                self._skip_annotation(refs)
            elif t in _MODIFIERS:
                self.i += 1
            else:
                return

    def _skip_balanced(self, open_t: str, close_t: str) -> None:
        """At an opening token: skip to just past its matching close.

        Tolerates any nesting of (), {} and [] inside; stops at end of
        input if unbalanced.
        """
        assert self._text() == open_t
        stack = [open_t]
        self.i += 1
        pairs = {"(": ")", "{": "}", "[": "]"}
        closers = {")": "(", "}": "{", "]": "["}
        while not self._at_end() and stack:
            t = self._text()
            if t in pairs:
                stack.append(t)
            elif t in closers:
                if stack and stack[-1] == closers[t]:
                    stack.pop()
                elif t == "}" and "{" not in stack:
                    # Unbalanced close beyond our own region: bail out and
                    # let the caller resynchronize on it.
                    return
            self.i += 1

    def _skip_generics(self, refs: Counter) -> None:
        """At '<': skip a type-argument or type-parameter section."""
        lo = self.i
        depth = 0
        guard = 0
        while not self._at_end():
            t = self._text()
            if t == "<":
                depth += 1
            elif t == ">":
                depth -= 1
            elif t == ">>":
                depth -= 2
            elif t == ">>>":
                depth -= 3
            elif t == ">=":
                depth -= 1
            elif t in (";", "{", "}"):
                break  # malformed; leave the stopper for the caller
            elif t == "(":
                self._skip_balanced("(", ")")
                continue
            self.i += 1
            guard += 1
            if depth <= 0 or guard > 4000:
                break
        self._scan_refs(lo, self.i, refs)

    def _skip_to_semicolon(self) -> None:
        while not self._at_end():
            t = self._text()
            if t == ";":
                self.i += 1
                return
            if t == "}":
                return
            if t == "{":
                self._skip_balanced("{", "}")
                continue
            self.i += 1

    # ------------------------------------------------------------------
    # reference and member-usage scanning (ranges of already-consumed tokens)

    def _scan_refs(self, lo: int, hi: int, refs: Counter) -> None:
        """Record dotted name chains whose head resolves to a plausible type.

        A chain ``a.b.Foo.BAR`` is recorded up to its last uppercase-initial
        segment; lowercase-only chains (locals, package-only prefixes) are
        ignored. String and char tokens never participate.
        """
        toks = self.toks
        j = lo
        while j < hi:
            t = toks[j]
            if t.kind != "ident" or (j > lo and toks[j - 1].text == "."):
                j += 1
                continue
            names = [t.text]
            k = j
            while k + 2 < hi and toks[k + 1].text == "." and toks[k + 2].kind == "ident":
                names.append(toks[k + 2].text)
                k += 2
            upper = -1
            for idx, seg in enumerate(names):
                if seg[:1].isupper():
                    upper = idx
            if upper >= 0:
                refs[".".join(names[: upper + 1])] += 1
            j = k + 1

    def _scan_candidates(self, lo: int, hi: int) -> list[tuple[str, bool]]:
        """Collect (name, is_call) member-usage candidates from a body range.

        Unqualified names and ``this``-qualified names are kept; anything
        qualified by another expression is discarded because the receiver's
        type is unknown to a name-based front end.
        """
        toks = self.toks
        out: list[tuple[str, bool]] = []
        for j in range(lo, hi):
            t = toks[j]
            if t.kind != "ident" or t.text in JAVA_KEYWORDS:
                continue
            prev = toks[j - 1].text if j > lo else ""
            nxt = toks[j + 1].text if j + 1 < hi else ""
            if prev == "." or prev == "::":
                qualifier = toks[j - 2].text if j - 2 >= lo else ""
                qualifier_prev = toks[j - 3].text if j - 3 >= lo else ""
                if qualifier == "this" and qualifier_prev != ".":
                    out.append((t.text, nxt == "(" or prev == "::"))
                continue
            if prev == "new" or prev == "@":
                continue
            out.append((t.text, nxt == "("))
        return out

    def _body_statistics(self, lo: int, hi: int) -> tuple[int, int]:
        """Approximate statement count and decision-point count for a range."""
        toks = self.toks
        statements = 0
        decisions = 0
        for j in range(lo, hi):
            t = toks[j]
            if t.kind == "punct":
                if t.text == ";":
                    statements += 1
                elif t.text in ("&&", "||"):
                    decisions += 1
                elif t.text == "?":
                    prev = toks[j - 1].text if j > lo else ""
                    if prev not in ("<", ","):
                        decisions += 1  # ternary, not a generics wildcard
            elif t.kind == "ident":
                if t.text in _DECISION_KEYWORDS:
                    decisions += 1
                if t.text in _STATEMENT_KEYWORDS:
                    statements += 1
        return statements, decisions

    # ------------------------------------------------------------------
    # type declarations

    def _parse_type(self, enclosing: TypeDecl | None, start_line: int, prefix_refs: Counter) -> None:
        t = self._text()
        if t == "@":  # @interface
            self.i += 2
            kind = KIND_INTERFACE
            keyword = "@interface"
        else:
            kind = _KIND_BY_KEYWORD[t]
            keyword = t
            self.i += 1
        if self._kind() != "ident":
            self._diag(self._line(), f"missing name after '{keyword}'")
            self._skip_to_semicolon()
            return
        simple = self._text()
        self.i += 1
        if enclosing is not None:
            qualified = f"{enclosing.qualified_name}.{simple}"
        elif self.package:
            qualified = f"{self.package}.{simple}"
        else:
            qualified = simple
        decl = TypeDecl(
            qualified_name=qualified,
            simple_name=simple,
            package_name=self.package,
            kind=kind,
            start_line=start_line,
            imports_in_scope=self.imports,
            enclosing_name=enclosing.qualified_name if enclosing else None,
        )
        decl.referenced_name_counts.update(prefix_refs)
        self.decls.append(decl)
        if self._text() == "<":
            self._skip_generics(decl.referenced_name_counts)
        if keyword == "record" and self._text() == "(":
            for type_name, name in self._parse_params(decl.referenced_name_counts):
                decl.fields.append(FieldDecl(name=name, declared_type_name=type_name, line=start_line))
        # extends / implements / permits clause, up to the body brace
        clause_lo = self.i
        while not self._at_end() and self._text() not in ("{", ";"):
            if self._text() == "(":
                self._skip_balanced("(", ")")
            else:
                self.i += 1
        self._scan_refs(clause_lo, self.i, decl.referenced_name_counts)
        if self._text() != "{":
            self._diag(self._line(), f"missing body for type '{simple}'")
            decl.end_line = self._line()
            if self._text() == ";":
                self.i += 1
            return
        self.i += 1  # consume '{'
        usage: list[tuple[MethodDecl, list[tuple[str, bool]]]] = []
        if kind == KIND_ENUM:
            self._parse_enum_constants(decl)
        self._parse_members(decl, usage)
        decl.end_line = self._line(-1) if self.i > 0 else decl.start_line
        self._bind_member_usage(decl, usage)

    def _parse_enum_constants(self, decl: TypeDecl) -> None:
        refs = decl.referenced_name_counts
        while not self._at_end():
            t = self._text()
            if t == ";":
                self.i += 1
                return
            if t == "}":
                return  # constant list without member section
            while self._text() == "@":
                self._skip_annotation(refs)
            if self._kind() != "ident" or self._text() in JAVA_KEYWORDS:
                self._diag(self._line(), "malformed enum constant list")
                self._skip_to_semicolon()
                return
            name = self._text()
            line = self._line()
            self.i += 1
            if self._text() == "(":
                lo = self.i
                self._skip_balanced("(", ")")
                self._scan_refs(lo, self.i, refs)
            if self._text() == "{":
                lo = self.i
                self._skip_balanced("{", "}")
                self._scan_refs(lo, self.i, refs)
                statements, _ = self._body_statistics(lo, self.i)
                decl.extra_statement_count += statements
            decl.fields.append(FieldDecl(name=name, declared_type_name=decl.simple_name, line=line))
            if self._text() == ",":
                self.i += 1

    def _parse_members(self, decl: TypeDecl, usage: list) -> None:
        while True:
            t = self._text()
            if t == "":
                self._diag(self._line(), f"unexpected end of file in '{decl.simple_name}'")
                return
            if t == "}":
                self.i += 1
                return
            if t == ";":
                self.i += 1
                continue
            before = self.i
            start_line = self._line()
            prefix_refs = Counter()
            self._collect_prefix(prefix_refs)
            t = self._text()
            if t in _TYPE_KEYWORDS or (t == "@" and self._text(1) == "interface"):
                self._parse_type(decl, start_line, prefix_refs)
                continue
            decl.referenced_name_counts.update(prefix_refs)
            if t == "{":  # instance or static initializer block
                lo = self.i
                self._skip_balanced("{", "}")
                self._scan_refs(lo, self.i, decl.referenced_name_counts)
                statements, _ = self._body_statistics(lo, self.i)
                decl.extra_statement_count += statements
                continue
            if t == "<":
                self._skip_generics(decl.referenced_name_counts)
            classifier, pos = self._classify_member()
            if classifier == "(":
                self._parse_method(decl, usage, pos, start_line)
            elif classifier in ("=", ";"):
                self._parse_field(decl, start_line)
            else:
                self._diag(start_line, f"malformed member in '{decl.simple_name}', skipping")
                self.i = max(pos, self.i)
                if self._text() == "{":
                    self._skip_balanced("{", "}")
                elif self._text() not in ("}", ""):
                    self.i += 1
            if self.i == before:
                self.i += 1

    def _classify_member(self) -> tuple[str, int]:
        """Look ahead to the first top-level '(', '=', ';', '{' or '}'."""
        j = self.i
        angle = 0
        guard = 0
        while j < self.n:
            t = self.toks[j].text
            if angle == 0 and t in ("(", "=", ";", "{", "}"):
                return t, j
            if t == "<":
                angle += 1
            elif t == ">":
                angle = max(0, angle - 1)
            elif t == ">>":
                angle = max(0, angle - 2)
            elif t == ">>>":
                angle = max(0, angle - 3)
            elif angle > 0 and t in (";", "}"):
                return t, j  # malformed generics; treat as boundary
            j += 1
            guard += 1
            if guard > 4000:
                break
        return "", j

    # ------------------------------------------------------------------
    # members

    def _parse_params(self, refs: Counter) -> list[tuple[str, str]]:
        """At '(': parse a parameter list into (erased type, name) pairs.

        Unlike expression contexts, a declaration's parameter list can never
        contain '{' or ';'; hitting one means the ')' is missing, so the scan
        stops there and leaves the stopper for the caller.
        """
        lo = self.i
        depth = 0
        closed = False
        while not self._at_end():
            t = self._text()
            if t in ("(", "["):
                depth += 1
            elif t in (")", "]"):
                depth -= 1
                if depth == 0 and t == ")":
                    self.i += 1
                    closed = True
                    break
            elif t in ("{", ";", "}"):
                self._diag(self._line(), "unterminated parameter list")
                break
            self.i += 1
        hi = self.i - 1 if closed else self.i  # exclude the closing ')'
        self._scan_refs(lo + 1, hi, refs)
        params: list[tuple[str, str]] = []
        ranges: list[tuple[int, int]] = []
        depth_angle = 0
        depth_paren = 0
        start = lo + 1
        for j in range(lo + 1, hi):
            t = self.toks[j].text
            if t == "<":
                depth_angle += 1
            elif t == ">":
                depth_angle = max(0, depth_angle - 1)
            elif t == ">>":
                depth_angle = max(0, depth_angle - 2)
            elif t == ">>>":
                depth_angle = max(0, depth_angle - 3)
            elif t in ("(", "[", "{"):
                depth_paren += 1
            elif t in (")", "]", "}"):
                depth_paren = max(0, depth_paren - 1)
            elif t == "," and depth_angle == 0 and depth_paren == 0:
                ranges.append((start, j))
                start = j + 1
        if start < hi:
            ranges.append((start, hi))
        for a, b in ranges:
            parsed = self._parse_one_param(a, b)
            if parsed is not None:
                params.append(parsed)
        return params

    def _parse_one_param(self, lo: int, hi: int) -> tuple[str, str] | None:
        pieces: list[str] = []
        name = ""
        varargs = False
        trailing_brackets = 0
        j = lo
        angle = 0
        while j < hi:
            t = self.toks[j]
            if t.text == "@":
                j += 1
                while j < hi and (self.toks[j].kind == "ident" or self.toks[j].text == "."):
                    j += 1
                if j < hi and self.toks[j].text == "(":
                    depth = 1
                    j += 1
                    while j < hi and depth:
                        if self.toks[j].text == "(":
                            depth += 1
                        elif self.toks[j].text == ")":
                            depth -= 1
                        j += 1
                continue
            if t.text == "<":
                angle += 1
            elif t.text in (">", ">>", ">>>"):
                angle = max(0, angle - {">": 1, ">>": 2, ">>>": 3}[t.text])
            elif angle == 0:
                if t.text == "final":
                    pass
                elif t.text == "...":
                    varargs = True
                elif t.kind == "ident":
                    if name:
                        pieces.append(name)
                    name = t.text
                elif t.text == ".":
                    if name:
                        name += "."
                        j += 1
                        if j < hi and self.toks[j].kind == "ident":
                            name += self.toks[j].text
                            j += 1
                        continue
                elif t.text == "[":
                    if j + 1 < hi and self.toks[j + 1].text == "]":
                        if name:
                            trailing_brackets += 1
                        else:
                            pieces.append("[]")
                        j += 2
                        continue
            j += 1
        if not name:
            return None
        if name == "this":  # explicit receiver parameter, not a real one
            return None
        if "." in name and not pieces:
            # Qualified type with no separate name token is malformed; bail.
            return None
        type_text = "".join(pieces) if pieces else ""
        if not type_text:
            return None
        if trailing_brackets:
            type_text += "[]" * trailing_brackets
        if varargs:
            type_text += "[]"
        return type_text, name

    def _parse_method(self, decl: TypeDecl, usage: list, paren_pos: int, start_line: int) -> None:
        name_tok = self.toks[paren_pos - 1] if paren_pos - 1 >= 0 else None
        if name_tok is None or name_tok.kind != "ident" or name_tok.text in JAVA_KEYWORDS:
            self._diag(start_line, f"malformed method signature in '{decl.simple_name}'")
            self.i = paren_pos
            self._skip_balanced("(", ")")
            if self._text() == "{":
                self._skip_balanced("{", "}")
            else:
                self._skip_to_semicolon()
            return
        return_lo, return_hi = self.i, paren_pos - 1
        self._scan_refs(return_lo, return_hi, decl.referenced_name_counts)
        is_constructor = return_hi == return_lo and name_tok.text == decl.simple_name
        self.i = paren_pos
        params = self._parse_params(decl.referenced_name_counts)
        # throws clause / annotation-member default, up to body or ';'
        tail_lo = self.i
        while not self._at_end() and self._text() not in ("{", ";", "}"):
            if self._text() == "(":
                self._skip_balanced("(", ")")
            else:
                self.i += 1
        self._scan_refs(tail_lo, self.i, decl.referenced_name_counts)
        method = MethodDecl(
            name=name_tok.text,
            key=f"{name_tok.text}({','.join(p[0] for p in params)})",
            is_constructor=is_constructor,
            line=start_line,
        )
        candidates: list[tuple[str, bool]] = []
        if self._text() == "{":
            lo = self.i
            self._skip_balanced("{", "}")
            self._scan_refs(lo, self.i, decl.referenced_name_counts)
            method.statement_count, method.decision_points = self._body_statistics(lo, self.i)
            candidates = self._scan_candidates(lo + 1, self.i - 1)
        elif self._text() == ";":
            self.i += 1
        existing = {m.key for m in decl.methods}
        if method.key in existing:
            suffix = 2
            while f"{method.key}#{suffix}" in existing:
                suffix += 1
            method.key = f"{method.key}#{suffix}"
        decl.methods.append(method)
        usage.append((method, candidates))

    def _parse_field(self, decl: TypeDecl, start_line: int) -> None:
        """Parse one field declaration (possibly multiple declarators)."""
        lo = self.i
        # Type expression: tokens up to the first declarator name.
        angle = 0
        type_pieces: list[str] = []
        last_ident_chain = ""
        while not self._at_end():
            t = self._tok()
            assert t is not None
            if t.text == "<":
                angle += 1
            elif t.text in (">", ">>", ">>>"):
                angle = max(0, angle - {">": 1, ">>": 2, ">>>": 3}[t.text])
            elif angle == 0:
                if t.kind == "ident" and t.text not in JAVA_KEYWORDS:
                    nxt = self._text(1)
                    if nxt in ("=", ";", ",", "["):
                        break  # this ident is the declarator name
                    if nxt == "." and self._kind(2) == "ident":
                        pass  # qualified type segment
                    elif nxt in (">", ">>", ">>>", "<"):
                        pass  # generic argument
                elif t.text in ("=", ";", ",", "}"):
                    break
            if angle == 0 and (t.kind == "ident" or t.text in (".", "[", "]")):
                type_pieces.append(t.text)
            self.i += 1
        declared_type = "".join(type_pieces)
        if angle:
            declared_type = declared_type  # generics already skipped from pieces
        self._scan_refs(lo, self.i, decl.referenced_name_counts)
        if not declared_type or self._kind() != "ident":
            self._diag(start_line, f"malformed field declaration in '{decl.simple_name}'")
            self._skip_to_semicolon()
            return
        while True:
            if self._kind() != "ident":
                break
            name = self._text()
            line = self._line()
            self.i += 1
            while self._text() == "[" and self._text(1) == "]":
                self.i += 2
            decl.fields.append(FieldDecl(name=name, declared_type_name=declared_type, line=line))
            if self._text() == "=":
                self.i += 1
                init_lo = self.i
                depth = 0
                while not self._at_end():
                    t = self._text()
                    if t in ("(", "[", "{"):
                        self._skip_balanced(t, {"(": ")", "[": "]", "{": "}"}[t])
                        continue
                    if depth == 0 and t in (",", ";", "}"):
                        break
                    self.i += 1
                self._scan_refs(init_lo, self.i, decl.referenced_name_counts)
            if self._text() == ",":
                self.i += 1
                continue
            break
        if self._text() == ";":
            self.i += 1

    # ------------------------------------------------------------------
    # post-processing

    def _bind_member_usage(self, decl: TypeDecl, usage: list) -> None:
        """Filter raw usage candidates against the class's own members."""
        field_names = decl.field_names()
        keys_by_simple_name: dict[str, list[str]] = defaultdict(list)
        for m in decl.declared_methods():
            keys_by_simple_name[m.name].append(m.key)
        for method, candidates in usage:
            for name, is_call in candidates:
                if is_call and name in keys_by_simple_name:
                    method.called_methods.update(keys_by_simple_name[name])
                elif not is_call and name in field_names:
                    method.accessed_fields.add(name)
