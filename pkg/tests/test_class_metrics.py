"""Cohesion components, cyclomatic complexity, and class measurement."""

from __future__ import annotations

import random

from modindex.class_metrics import cyclomatic_complexity, lack_of_cohesion, measure_class
from modindex.javafront.model import MethodDecl
from modindex.javafront.parser import parse_file

from oracles import brute_force_components


def _method(name, fields=(), calls=(), constructor=False, decisions=0):
    return MethodDecl(
        name=name,
        key=f"{name}()",
        is_constructor=constructor,
        decision_points=decisions,
        accessed_fields=set(fields),
        called_methods={f"{c}()" for c in calls},
    )


def test_shared_field_connects():
    methods = [_method("a", fields={"x"}), _method("b", fields={"x"})]
    assert lack_of_cohesion(methods) == 1


def test_disjoint_methods_are_separate_components():
    methods = [_method("a", fields={"x"}), _method("b", fields={"y"}), _method("c")]
    assert lack_of_cohesion(methods) == 3


def test_call_connects_in_either_direction():
    methods = [_method("a", calls={"b"}), _method("b")]
    assert lack_of_cohesion(methods) == 1
    methods = [_method("a"), _method("b", calls={"a"})]
    assert lack_of_cohesion(methods) == 1


def test_transitive_connection():
    methods = [
        _method("a", fields={"x"}),
        _method("b", fields={"x", "y"}),
        _method("c", fields={"y"}),
    ]
    assert lack_of_cohesion(methods) == 1


def test_constructors_are_excluded():
    methods = [
        _method("C", fields={"x", "y"}, constructor=True),
        _method("a", fields={"x"}),
        _method("b", fields={"y"}),
    ]
    # without the constructor bridging them, a and b stay apart
    assert lack_of_cohesion(methods) == 2


def test_no_methods_means_zero_components():
    assert lack_of_cohesion([]) == 0
    assert lack_of_cohesion([_method("C", constructor=True)]) == 0


def test_cyclomatic_complexity_is_decisions_plus_one():
    assert cyclomatic_complexity(_method("a")) == 1
    assert cyclomatic_complexity(_method("a", decisions=4)) == 5


def test_measure_class_aggregates():
    parsed = parse_file(
        "package p;\n"
        "class C {\n"
        "    int x;\n"
        "    C() { x = 1; if (x > 0) { x = 2; } }\n"
        "    void a() { x++; }\n"
        "    void b() { if (x > 1) { a(); } }\n"
        "}\n",
        "C.java",
    )
    metrics = measure_class(parsed.type_decls[0])
    assert metrics.qualified_name == "p.C"
    assert metrics.functions == 2  # the constructor is not a function
    assert metrics.lcom4 == 1
    assert metrics.max_method_complexity == 2
    # constructors still contribute complexity: 2 (ctor) + 1 (a) + 2 (b)
    assert metrics.total_complexity == 5
    assert metrics.ncloc == 6


def test_union_find_agrees_with_brute_force():
    rng = random.Random(1404)
    field_pool = [f"f{i}" for i in range(10)]
    for _ in range(300):
        n = rng.randint(0, 12)
        field_sets = [
            {rng.choice(field_pool) for _ in range(rng.randint(0, 3))} for _ in range(n)
        ]
        call_edges = [
            {rng.randrange(n) for _ in range(rng.randint(0, 2))} if n else set()
            for _ in range(n)
        ]
        methods = [
            _method(f"m{i}", fields=field_sets[i], calls={f"m{j}" for j in call_edges[i]})
            for i in range(n)
        ]
        assert lack_of_cohesion(methods) == brute_force_components(field_sets, call_edges)
