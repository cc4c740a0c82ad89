"""Data model produced by the structural Java parser.

Everything here is a plain immutable-after-parse record; nothing holds a
reference back to the token stream, so parsed files can be shared freely
across threads.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

KIND_CLASS = "class"
KIND_INTERFACE = "interface"
KIND_ENUM = "enum"


@dataclass
class ImportContext:
    """Import statements of one compilation unit, pre-split for resolution.

    ``single`` maps a simple name to its fully qualified import target
    (covers both plain and static single-type imports); ``wildcards`` lists
    the package names pulled in via ``import pkg.*``.
    """

    single: dict[str, str] = field(default_factory=dict)
    wildcards: tuple[str, ...] = ()


@dataclass
class FieldDecl:
    name: str
    declared_type_name: str
    line: int = 0


@dataclass
class MethodDecl:
    """One declared method or constructor.

    ``key`` is ``name(Type1,Type2)`` built from the erased parameter type
    names; it is unique within a class. ``accessed_fields`` and
    ``called_methods`` only ever contain members of the declaring class
    (enforced after the class body has been fully parsed).
    """

    name: str
    key: str
    is_constructor: bool = False
    statement_count: int = 0
    decision_points: int = 0
    accessed_fields: set[str] = field(default_factory=set)
    called_methods: set[str] = field(default_factory=set)
    line: int = 0


@dataclass
class TypeDecl:
    """A named type declaration: class, interface, or enum.

    Nested named types are separate TypeDecls; anonymous and method-local
    classes are folded into the enclosing declaration's counts.
    ``referenced_name_counts`` maps raw (possibly dotted) type-name chains
    seen in the declaration to their occurrence counts; resolution against
    the analyzed universe happens later.
    """

    qualified_name: str
    simple_name: str
    package_name: str
    kind: str
    start_line: int = 0
    end_line: int = 0
    ncloc: int = 0
    methods: list[MethodDecl] = field(default_factory=list)
    fields: list[FieldDecl] = field(default_factory=list)
    referenced_name_counts: Counter = field(default_factory=Counter)
    imports_in_scope: ImportContext = field(default_factory=ImportContext)
    enclosing_name: str | None = None
    # Statements contributed by initializer blocks and enum-constant bodies,
    # which belong to the class but to no declared method.
    extra_statement_count: int = 0

    @property
    def referenced_names(self) -> set[str]:
        return set(self.referenced_name_counts)

    def field_names(self) -> set[str]:
        return {f.name for f in self.fields}

    def declared_methods(self) -> list[MethodDecl]:
        """Methods excluding constructors (the F / LCOM4 population)."""
        return [m for m in self.methods if not m.is_constructor]


@dataclass
class Diagnostic:
    path: str
    line: int
    message: str

    def __str__(self) -> str:
        return f"{self.path}:{self.line}: {self.message}"


@dataclass
class SourceFile:
    path: str
    package_name: str
    raw_line_count: int
    ncloc: int
    type_decls: list[TypeDecl] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)
