"""Resolution of referenced type names against the analyzed class universe.

Name chains recorded by the parser are matched to declared types using the
usual Java lookup order: enclosing-type scope, explicit imports, the
declaring package, then wildcard imports. Only types that exist inside the
analyzed tree resolve; JDK and third-party names drop out naturally because
they are never declared in the universe.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .model import Diagnostic, SourceFile, TypeDecl


@dataclass
class Universe:
    """Lookup tables over every type declared in the analyzed tree."""

    by_qualified: dict[str, TypeDecl] = field(default_factory=dict)
    #: package name -> simple name -> qualified name (top-level types only)
    top_level: dict[str, dict[str, str]] = field(default_factory=dict)
    #: enclosing qualified name -> member simple name -> qualified name
    nested: dict[str, dict[str, str]] = field(default_factory=dict)
    #: qualified name -> path of the declaring source file
    source_paths: dict[str, str] = field(default_factory=dict)

    @property
    def packages(self) -> set[str]:
        return set(self.top_level)


def build_universe(files: list[SourceFile], diagnostics: list[Diagnostic]) -> Universe:
    """Index all parsed declarations; duplicate qualified names keep the first."""
    universe = Universe()
    top_level: dict[str, dict[str, str]] = defaultdict(dict)
    nested: dict[str, dict[str, str]] = defaultdict(dict)
    for sf in files:
        for decl in sf.type_decls:
            if decl.qualified_name in universe.by_qualified:
                other = universe.source_paths[decl.qualified_name]
                diagnostics.append(
                    Diagnostic(
                        sf.path,
                        decl.start_line,
                        f"duplicate type '{decl.qualified_name}' (first declared in {other})",
                    )
                )
                continue
            universe.by_qualified[decl.qualified_name] = decl
            universe.source_paths[decl.qualified_name] = sf.path
            if decl.enclosing_name is None:
                top_level[decl.package_name][decl.simple_name] = decl.qualified_name
            else:
                nested[decl.enclosing_name][decl.simple_name] = decl.qualified_name
    universe.top_level = dict(top_level)
    universe.nested = dict(nested)
    return universe


def resolve_reference_weights(
    decl: TypeDecl, universe: Universe, diagnostics: list[Diagnostic]
) -> dict[str, int]:
    """Map the declaration's raw name chains to qualified names, with counts.

    Chains that do not resolve to an analyzed type are dropped, as are
    references from a type to itself.
    """
    weights: dict[str, int] = {}
    for chain, count in decl.referenced_name_counts.items():
        resolved = _resolve_chain(chain, decl, universe, diagnostics)
        if resolved is None or resolved == decl.qualified_name:
            continue
        weights[resolved] = weights.get(resolved, 0) + count
    return weights


def resolve_references(
    decl: TypeDecl, universe: Universe, diagnostics: list[Diagnostic]
) -> set[str]:
    """The set of analyzed types the declaration refers to."""
    return set(resolve_reference_weights(decl, universe, diagnostics))


def _resolve_chain(
    chain: str, decl: TypeDecl, universe: Universe, diagnostics: list[Diagnostic]
) -> str | None:
    parts = chain.split(".")
    if len(parts) > 1:
        # Fully or partially qualified: prefer the longest declared prefix.
        # Prefixes of length one are excluded here so that a field access
        # like Engine.MAX never shadows simple-name lookup rules.
        for k in range(len(parts), 1, -1):
            candidate = ".".join(parts[:k])
            if candidate in universe.by_qualified:
                return candidate
    head = _resolve_simple(parts[0], decl, universe, diagnostics)
    if head is None:
        return None
    current = head
    for segment in parts[1:]:
        child = universe.nested.get(current, {}).get(segment)
        if child is None:
            break
        current = child
    return current


def _resolve_simple(
    name: str, decl: TypeDecl, universe: Universe, diagnostics: list[Diagnostic]
) -> str | None:
    # 1. Enclosing-type scope: own members, then each enclosing level.
    scope: TypeDecl | None = decl
    while scope is not None:
        member = universe.nested.get(scope.qualified_name, {}).get(name)
        if member is not None:
            return member
        if scope.simple_name == name:
            return scope.qualified_name
        parent = scope.enclosing_name
        scope = universe.by_qualified.get(parent) if parent else None
    # 2. Explicit single-type imports. An import pointing outside the
    # analyzed tree claims the name; lookup must not fall through to the
    # declaring package or wildcards in that case.
    imported = decl.imports_in_scope.single.get(name)
    if imported is not None:
        return imported if imported in universe.by_qualified else None
    # 3. Top-level types of the declaring package.
    own_package = universe.top_level.get(decl.package_name, {}).get(name)
    if own_package is not None:
        return own_package
    # 4. Wildcard imports, restricted to analyzed packages.
    matches = []
    for wildcard in decl.imports_in_scope.wildcards:
        candidate = universe.top_level.get(wildcard, {}).get(name)
        if candidate is not None:
            matches.append(candidate)
    if len(matches) == 1:
        return matches[0]
    if len(matches) > 1:
        path = universe.source_paths.get(decl.qualified_name, "")
        diagnostics.append(
            Diagnostic(
                path,
                decl.start_line,
                f"ambiguous reference '{name}' in '{decl.qualified_name}': "
                + " vs ".join(sorted(matches)),
            )
        )
    return None
