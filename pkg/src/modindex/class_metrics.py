"""Per-class structural metrics: size, function count, cohesion, complexity.

Cohesion is measured as the number of connected components over the class's
non-constructor methods, where two methods are connected if they access a
common field or one calls the other (direction ignored). A fully cohesive
class has one component; each additional component is a candidate split.
"""

from __future__ import annotations

from dataclasses import dataclass

from .javafront.model import MethodDecl, TypeDecl


@dataclass(frozen=True, slots=True)
class ClassMetrics:
    """Raw measurements for one type declaration."""

    qualified_name: str
    package_name: str
    kind: str
    ncloc: int
    functions: int
    lcom4: int
    max_method_complexity: int
    total_complexity: int
    statements: int

    def to_dict(self) -> dict:
        return {
            "qualified_name": self.qualified_name,
            "package_name": self.package_name,
            "kind": self.kind,
            "ncloc": self.ncloc,
            "functions": self.functions,
            "lcom4": self.lcom4,
            "max_method_complexity": self.max_method_complexity,
            "total_complexity": self.total_complexity,
            "statements": self.statements,
        }


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:  # path compression
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def component_count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


def lack_of_cohesion(methods: list[MethodDecl]) -> int:
    """Connected components over non-constructor methods.

    Methods sharing an accessed field are connected, as are caller/callee
    pairs in either direction. A class with no non-constructor methods has
    zero components.
    """
    members = [m for m in methods if not m.is_constructor]
    if not members:
        return 0
    index = {m.key: i for i, m in enumerate(members)}
    uf = _UnionFind(len(members))
    by_field: dict[str, int] = {}
    for i, m in enumerate(members):
        for field_name in m.accessed_fields:
            first = by_field.setdefault(field_name, i)
            uf.union(first, i)
        for callee_key in m.called_methods:
            j = index.get(callee_key)
            if j is not None and j != i:
                uf.union(i, j)
    return uf.component_count()


def cyclomatic_complexity(method: MethodDecl) -> int:
    """Decision points plus one."""
    return method.decision_points + 1


def measure_class(decl: TypeDecl) -> ClassMetrics:
    """Compute all raw metrics for one declaration."""
    declared = decl.declared_methods()
    complexities = [cyclomatic_complexity(m) for m in decl.methods]
    return ClassMetrics(
        qualified_name=decl.qualified_name,
        package_name=decl.package_name,
        kind=decl.kind,
        ncloc=decl.ncloc,
        functions=len(declared),
        lcom4=lack_of_cohesion(decl.methods),
        max_method_complexity=max(complexities, default=0),
        total_complexity=sum(complexities),
        statements=sum(m.statement_count for m in decl.methods) + decl.extra_statement_count,
    )
