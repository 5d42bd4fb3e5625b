"""Frozen-expectation self-checks behind the ``verify`` subcommand.

Each corpus row names a computation and the outcome it must reproduce.
The bundled corpus freezes the sharp, independently cross-checked forms
of the package's headline facts: the worked classification tables, the
equation presentations and their tangent reductions, the hook-product
identities (at box level where that holds, after diagonal collapse
where the box-level statement provably fails — with the counterexample
recorded as an expected inequality), the Euler specialisation, the
finite-field point counts, and a seeded random-instance property sweep.
"""

from __future__ import annotations

import json
import random
from importlib import resources

from .components import classify, differential_injective, dimension_recursive
from .diagram import YoungDiagram
from .equations import (
    ambient_and_bundle,
    check_grading,
    tangent_embedding,
    type_i_ideal,
    type_ii_ideal,
)
from .errors import CapExceeded, DomainError
from .poly import SparsePoly, divmod_in_x, parse_poly, var_a, var_b, var_c
from .pointcount import count_points, evaluate_motive
from .rpp import (
    RPP,
    all_factorizations,
    complete_factorization,
    enumerate_rpps,
    indicators,
    standard_factorization,
)
from .series import (
    collapse_to_diagonals,
    diagonal_support,
    euler_series,
    hook_product,
    motivic_series,
    rpp_series_bruteforce,
)

_ROW_KINDS: dict = {}


def _kind(name: str):
    def register(fn):
        _ROW_KINDS[name] = fn
        return fn

    return register


# -- row implementations ------------------------------------------------------


def _factorization_texts(factorization) -> dict:
    return {ind.to_text(): m for ind, m in factorization.terms.items()}


def _witness_texts(diagram, witness) -> dict | None:
    if witness is None:
        return None
    return {ind.to_text(): c for ind, c in zip(indicators(diagram), witness) if c}


@_kind("classify")
def _row_classify(row: dict) -> list:
    n = RPP.from_text(row["rpp"])
    expected = row["expected"]
    problems = []
    inds = indicators(n.diagram)
    if len(inds) != expected["n_indicators"]:
        problems.append(f"{len(inds)} indicators != {expected['n_indicators']}")
    if n.weight() != expected["weight"]:
        problems.append(f"weight {n.weight()} != {expected['weight']}")
    reports = classify(n)
    if len(reports) != len(expected["components"]):
        problems.append(f"{len(reports)} components != {len(expected['components'])}")
        return problems
    facts = all_factorizations(n)
    std = facts.index(standard_factorization(n))
    if std != expected["standard_index"]:
        problems.append(f"standard factorisation at {std} != {expected['standard_index']}")
    comp = complete_factorization(n)
    comp_idx = facts.index(comp) if comp is not None else None
    if comp_idx != expected["complete_index"]:
        problems.append(f"complete factorisation at {comp_idx} != {expected['complete_index']}")
    for k, (report, want) in enumerate(zip(reports, expected["components"])):
        got = {
            "factorization": _factorization_texts(report.factorization),
            "smooth": report.smooth,
            "bijective_on_points": report.bijective_on_points,
            "differential_injective": report.differential_injective,
            "witness": _witness_texts(n.diagram, report.relation_witness),
        }
        for key, value in want.items():
            if got[key] != value:
                problems.append(f"component {k}: {key} {got[key]!r} != {value!r}")
        if report.dimension != expected["weight"]:
            problems.append(f"component {k}: dimension {report.dimension}")
    return problems


@_kind("equations")
def _row_equations(row: dict) -> list:
    n = RPP.from_text(row["rpp"])
    if row["type"] == "I":
        ideal = type_i_ideal(n)
    else:
        ideal = type_ii_ideal(n, minimal_border=row.get("minimal_border", False))
    expected = row["expected"]
    problems = []
    for key, got in [
        ("n_vars", ideal.n_vars),
        ("n_generators", ideal.n_generators),
        ("group_sizes", ideal.group_sizes()),
        ("condition_count", ideal.condition_count),
    ]:
        if key in expected and got != expected[key]:
            problems.append(f"{key} {got} != {expected[key]}")
    if ideal.n_vars - ideal.condition_count != n.weight():
        problems.append("vars minus conditions is not the weight")
    if not check_grading(ideal):
        problems.append("presentation is not homogeneous")
    if "first_generator" in expected:
        got = str(ideal.generators[0])
        if got != expected["first_generator"]:
            problems.append(f"first generator {got!r}")
        if parse_poly(expected["first_generator"]) != ideal.generators[0]:
            problems.append("first generator does not round-trip")
    if "tangent" in expected:
        dim, reduced = tangent_embedding(ideal)
        if dim != expected["tangent"]["dim"]:
            problems.append(f"tangent dimension {dim} != {expected['tangent']['dim']}")
        degrees = reduced.generator_degrees()
        if degrees != expected["tangent"]["degrees"]:
            problems.append(f"reduced degrees {degrees} != {expected['tangent']['degrees']}")
    return problems


@_kind("ambient")
def _row_ambient(row: dict) -> list:
    n = RPP.from_text(row["rpp"])
    summary = ambient_and_bundle(n)
    problems = []
    if summary.to_json_obj() != row["expected"]:
        problems.append(f"{summary.to_json_obj()} != {row['expected']}")
    if summary.expected_dim != n.weight():
        problems.append("expected dimension is not the weight")
    return problems


@_kind("gansner-box")
def _row_gansner_box(row: dict) -> list:
    diagram = YoungDiagram(row["cols"])
    max_size = row["max_size"]
    lhs = rpp_series_bruteforce(diagram, max_size)
    rhs = hook_product(diagram, 1, -1, max_size)
    problems = []
    if (lhs == rhs) != row["expected_equal"]:
        problems.append(f"box-level equality is {lhs == rhs}")
    if not row["expected_equal"]:
        lhs_only = tuple(row["lhs_only"])
        rhs_only = tuple(row["rhs_only"])
        if not (lhs.coefficient(lhs_only) == SparsePoly.constant(1) and rhs.coefficient(lhs_only).is_zero()):
            problems.append(f"recorded sum-side counterexample {lhs_only} is stale")
        if not (rhs.coefficient(rhs_only) == SparsePoly.constant(1) and lhs.coefficient(rhs_only).is_zero()):
            problems.append(f"recorded product-side counterexample {rhs_only} is stale")
    return problems


@_kind("gansner-diagonal")
def _row_gansner_diagonal(row: dict) -> list:
    diagram = YoungDiagram(row["cols"])
    max_size = row["max_size"]
    lhs = collapse_to_diagonals(diagram, rpp_series_bruteforce(diagram, max_size))
    rhs = collapse_to_diagonals(diagram, hook_product(diagram, 1, -1, max_size))
    if lhs != rhs:
        return ["diagonal-collapsed series differ"]
    return []


@_kind("euler-single")
def _row_euler_single(row: dict) -> list:
    diagram = YoungDiagram(row["cols"])
    max_size = row["max_size"]
    series = euler_series(diagram, row["chi"], max_size, single_variable=True)
    problems = []
    if "hook_lengths" in row["expected"]:
        got = sorted((diagram.hook_length(b) for b in diagram.boxes), reverse=True)
        if got != row["expected"]["hook_lengths"]:
            problems.append(f"hook lengths {got}")
    got = {str(exp[0]): evaluate_motive(poly, 1) for exp, poly in series.coefficients.items()}
    if got != row["expected"]["coefficients"]:
        problems.append(f"coefficients {got}")
    if row["chi"] == 1:
        counts = {}
        for rpp in enumerate_rpps(diagram, max_size):
            counts[str(rpp.size)] = counts.get(str(rpp.size), 0) + 1
        if counts != got:
            problems.append("series disagrees with direct enumeration")
    return problems


@_kind("motivic-specialization")
def _row_motivic_specialization(row: dict) -> list:
    diagram = YoungDiagram(row["cols"])
    max_size = row["max_size"]
    problems = []
    if motivic_series(diagram, "A1", max_size).substitute_L(1) != euler_series(diagram, 1, max_size):
        problems.append("affine-line series at L=1 is not the chi=1 Euler series")
    if motivic_series(diagram, "P1", max_size).substitute_L(1) != euler_series(diagram, 2, max_size):
        problems.append("projective-line series at L=1 is not the chi=2 Euler series")
    return problems


@_kind("count-points")
def _row_count_points(row: dict) -> list:
    n = RPP.from_text(row["rpp"])
    p = row["p"]
    count = count_points(n, p)
    coeff = motivic_series(n.diagram, "A1", n.size).coefficient(n.values)
    motive = evaluate_motive(coeff, p)
    problems = []
    if count != row["expected_count"]:
        problems.append(f"count {count} != {row['expected_count']}")
    if motive != row["expected_motive_box"]:
        problems.append(f"box coefficient {motive} != {row['expected_motive_box']}")
    if (count == motive) != row["expected_match"]:
        problems.append(f"match is {count == motive}")
    return problems


@_kind("count-points-diagonal")
def _row_count_points_diagonal(row: dict) -> list:
    diagram = YoungDiagram(row["cols"])
    p = row["p"]
    max_size = row["max_size"]
    positions = {d: k for k, d in enumerate(diagonal_support(diagram))}
    n_diags = len(positions)

    def trace(exponents) -> tuple:
        out = [0] * n_diags
        for box, e in zip(diagram.boxes, exponents):
            out[positions[box.j - box.i]] += e
        return tuple(out)

    counted: dict = {}
    for rpp in enumerate_rpps(diagram, max_size):
        key = trace(rpp.values)
        counted[key] = counted.get(key, 0) + count_points(rpp, p)
    predicted: dict = {}
    for exp, poly in motivic_series(diagram, "A1", max_size).coefficients.items():
        key = trace(exp)
        predicted[key] = predicted.get(key, 0) + evaluate_motive(poly, p)
    predicted = {k: v for k, v in predicted.items() if v}
    counted = {k: v for k, v in counted.items() if v}
    if counted != predicted:
        diff = sorted(set(counted.items()) ^ set(predicted.items()))
        return [f"diagonal totals differ, first at {diff[0]}"]
    return []


@_kind("random-properties")
def _row_random_properties(row: dict) -> list:
    failures, cases = run_random_properties(row["seed"], row["n_cases"])
    problems = [f"{len(failures)} of {cases} cases failed"] if failures else []
    return problems + failures[:3]


# -- seeded random-instance property sweep ------------------------------------


def random_instance(rng: random.Random, max_boxes: int = 6, max_entry: int = 5) -> RPP:
    """A random RPP on a random diagram, conditioned to the search caps."""
    while True:
        cols = []
        budget = rng.randint(1, max_boxes)
        height = budget
        while budget > 0:
            h = rng.randint(1, min(height, budget))
            cols.append(h)
            height = h
            budget -= h
        diagram = YoungDiagram(cols)
        values = {}
        for box in diagram.boxes:
            floor = max(
                values.get((box.i - 1, box.j), 0), values.get((box.i, box.j - 1), 0)
            )
            values[box] = min(max_entry, floor + rng.choice((0, 0, 1, 1, 2)))
        n = RPP(diagram, tuple(values[b] for b in diagram.boxes))
        if n.weight() <= 12:
            return n


def _random_nested_polynomials(rng: random.Random, n: RPP) -> dict:
    """Monic integer polynomials per box, nested by left/up divisibility."""
    if n.is_zero():
        return {box: SparsePoly.constant(1) for box in n.diagram.boxes}
    factorization = standard_factorization(n)
    factors = []
    for indicator, multiplicity in factorization.terms.items():
        poly = SparsePoly.x_power(multiplicity)
        for k in range(multiplicity):
            poly = poly + SparsePoly.x_power(k) * rng.randint(-3, 3)
        factors.append((indicator, poly))
    tuples = {}
    for box in n.diagram.boxes:
        product = SparsePoly.constant(1)
        for indicator, poly in factors:
            if indicator.value(box):
                product = product * poly
        tuples[box] = product
    return tuples


def check_random_instance(rng: random.Random) -> list:
    """All random-instance invariants for one instance; empty when clean."""
    n = random_instance(rng)
    label = n.to_text()
    problems = []
    omega = n.weight()
    if sum(n.derivative().values) != omega:
        problems.append(f"{label}: derivative total is not the weight")
    if dimension_recursive(n) != omega:
        problems.append(f"{label}: recursive dimension != weight")
    try:
        facts = all_factorizations(n)
    except CapExceeded:
        facts = None
    if facts is not None and any(f.length != omega for f in facts):
        problems.append(f"{label}: a factorisation length differs from the weight")
    if not n.is_zero():
        candidates = [standard_factorization(n)]
        complete = complete_factorization(n)
        if complete is not None:
            candidates.append(complete)
        for fact in candidates:
            injective, _ = differential_injective(fact)
            if not injective:
                problems.append(f"{label}: standard/complete component not smooth")
        if omega <= 3 and facts is not None:
            for fact in facts:
                injective, _ = differential_injective(fact)
                if not injective:
                    problems.append(f"{label}: weight <= 3 component not smooth")
    ideal_i = type_i_ideal(n)
    ideal_ii = type_ii_ideal(n)
    ideal_iim = type_ii_ideal(n, minimal_border=True)
    for tag, ideal in (("I", ideal_i), ("II", ideal_ii), ("II-minimal", ideal_iim)):
        if ideal.n_vars - ideal.condition_count != omega:
            problems.append(f"{label}: type {tag} vars minus conditions != weight")
        if not check_grading(ideal):
            problems.append(f"{label}: type {tag} presentation inhomogeneous")
    tuples = _random_nested_polynomials(rng, n)
    assignment = {}
    for box, poly in tuples.items():
        degree = n.value(box)
        for k in range(1, degree + 1):
            assignment[var_a(box.i, box.j, k)] = poly.coefficient_of_x(degree - k)
    for g in ideal_i.generators:
        if not g.substitute(assignment).is_zero():
            problems.append(f"{label}: type I generator nonzero on a nested tuple")
            break
    assignment = {}
    for box, poly in tuples.items():
        for kind, shift in (("left", (-1, 0)), ("up", (0, -1))):
            other = (box.i + shift[0], box.j + shift[1])
            divisor = tuples.get(other, SparsePoly.constant(1))
            quotient, remainder = _exact_quotient(poly, divisor)
            if quotient is None:
                problems.append(f"{label}: nested tuple fails {kind} divisibility")
                continue
            degree = n.value(box) - (n.value(other) if other in tuples else 0)
            maker = var_b if kind == "left" else var_c
            for k in range(1, degree + 1):
                assignment[maker(box.i, box.j, k)] = quotient.coefficient_of_x(degree - k)
    for tag, ideal in (("II", ideal_ii), ("II-minimal", ideal_iim)):
        for g in ideal.generators:
            if not g.substitute(assignment).is_zero():
                problems.append(f"{label}: type {tag} generator nonzero on a nested tuple")
                break
    return problems


def _exact_quotient(poly: SparsePoly, divisor: SparsePoly):
    quotient, remainder = divmod_in_x(poly, divisor)
    if not remainder.is_zero():
        return None, remainder
    return quotient, remainder


def run_random_properties(seed: int, n_cases: int) -> tuple:
    """Run the instance check repeatedly; (failure messages, case count)."""
    rng = random.Random(seed)
    failures = []
    for _ in range(n_cases):
        failures.extend(check_random_instance(rng))
    return failures, n_cases


# -- corpus loading and running -----------------------------------------------


def load_corpus(path: str | None = None) -> dict:
    if path is None:
        ref = resources.files("rpphilb").joinpath("data/verify_corpus.json")
        try:
            text = ref.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise DomainError("parse-error", "bundled verify corpus is missing", None)
    else:
        try:
            with open(path, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise DomainError("parse-error", f"cannot read corpus: {exc}", str(path))
    try:
        corpus = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError("parse-error", f"corpus is not valid JSON: {exc}", str(path))
    rows = corpus.get("rows") if isinstance(corpus, dict) else None
    if not rows:
        raise DomainError("parse-error", "verify corpus has no rows", str(path))
    return corpus


def run_corpus(corpus: dict) -> list:
    """Replay every row; list of (name, passed, detail)."""
    results = []
    for row in corpus["rows"]:
        name = row.get("name", "<unnamed>")
        fn = _ROW_KINDS.get(row.get("kind"))
        if fn is None:
            results.append((name, False, f"unknown row kind {row.get('kind')!r}"))
            continue
        try:
            problems = fn(row)
        except DomainError as exc:
            problems = [f"{exc.code}: {exc.message}"]
        except (KeyError, TypeError, ValueError) as exc:
            problems = [f"malformed row: {exc!r}"]
        if problems:
            results.append((name, False, "; ".join(problems)))
        else:
            results.append((name, True, "ok"))
    return results
