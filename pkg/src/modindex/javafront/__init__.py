"""Lenient structural front end for Java source trees.

The front end recovers the structural facts the metrics layer needs —
packages, type declarations, fields, methods, member usage, and referenced
type names — without building a full compiler AST. Malformed input degrades
to diagnostics, never exceptions.
"""

from .lexer import StrippedSource, Token, strip_comments_and_count, tokenize
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
from .parser import parse_file
from .references import (
    Universe,
    build_universe,
    resolve_reference_weights,
    resolve_references,
)
from .scanner import find_java_files, parse_tree

__all__ = [
    "Diagnostic",
    "FieldDecl",
    "ImportContext",
    "KIND_CLASS",
    "KIND_ENUM",
    "KIND_INTERFACE",
    "MethodDecl",
    "SourceFile",
    "StrippedSource",
    "Token",
    "TypeDecl",
    "Universe",
    "build_universe",
    "find_java_files",
    "parse_file",
    "parse_tree",
    "resolve_reference_weights",
    "resolve_references",
    "strip_comments_and_count",
    "tokenize",
]
