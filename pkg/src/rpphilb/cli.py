"""Command-line surface tying the modules together.

Subcommands mirror the library: ``indicators``, ``weight``,
``factorizations``, ``classify``, ``equations``, ``series``,
``count-points``, and ``verify``.  Diagram and filling arguments accept
the text forms ("2,2" for column heights, "0 2 / 2 4" for a filling) or
``@file.json`` with the JSON forms.  ``--format json`` switches every
subcommand to machine-readable output; errors are emitted as
``{code, message, offending_input}`` on stderr with exit code 1 for bad
input and 2 for an exhausted cap or budget (``verify`` also exits 2
when a corpus row fails).  Output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .components import classify
from .diagram import YoungDiagram
from .equations import tangent_embedding, type_i_ideal, type_ii_ideal
from .errors import DomainError
from .pointcount import count_points, evaluate_motive
from .rpp import (
    RPP,
    all_factorizations,
    complete_factorization,
    indicators,
    standard_factorization,
)
from .series import euler_series, motivic_series
from .verify import load_corpus, run_corpus


class _Parser(argparse.ArgumentParser):
    """argparse surface whose usage errors become domain errors."""

    def error(self, message):
        raise DomainError("unsupported-option", message)


def _load_structured(raw: str):
    if raw.startswith("@"):
        path = raw[1:]
        try:
            with open(path, encoding="utf-8") as handle:
                return json.load(handle)
        except OSError as exc:
            raise DomainError("parse-error", f"cannot read {path}: {exc}", raw)
        except json.JSONDecodeError as exc:
            raise DomainError("parse-error", f"{path} is not valid JSON: {exc}", raw)
    return raw


def _diagram_arg(raw: str) -> YoungDiagram:
    obj = _load_structured(raw)
    if isinstance(obj, str):
        return YoungDiagram.from_text(obj)
    return YoungDiagram.from_json_obj(obj)


def _rpp_arg(raw: str) -> RPP:
    obj = _load_structured(raw)
    if isinstance(obj, str):
        return RPP.from_text(obj)
    return RPP.from_json_obj(obj)


def _emit(args, json_obj, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _factorization_text(fact) -> str:
    if not fact.terms:
        return "(empty)"
    return " + ".join(
        f"{m}*[{ind.to_text()}]" if m != 1 else f"[{ind.to_text()}]"
        for ind, m in fact.terms.items()
    )


# -- subcommands ---------------------------------------------------------------


def _cmd_indicators(args) -> int:
    diagram = _diagram_arg(args.diagram)
    inds = indicators(diagram)
    obj = {
        "cols": list(diagram.cols),
        "count": len(inds),
        "indicators": [{"rows": ind.rows(), "text": ind.to_text()} for ind in inds],
    }
    lines = [f"{len(inds)} indicators on {diagram.to_text()}"]
    lines += [f"{k + 1}: {ind.to_text()}" for k, ind in enumerate(inds)]
    _emit(args, obj, lines)
    return 0


def _cmd_weight(args) -> int:
    n = _rpp_arg(args.rpp)
    obj = {"cols": list(n.diagram.cols), "rows": n.rows(), "weight": n.weight()}
    _emit(args, obj, [str(n.weight())])
    return 0


def _cmd_factorizations(args) -> int:
    n = _rpp_arg(args.rpp)
    facts = all_factorizations(n)
    standard_index = None
    if not n.is_zero():
        standard_index = facts.index(standard_factorization(n))
    complete = complete_factorization(n)
    complete_index = facts.index(complete) if complete is not None else None
    obj = {
        "weight": n.weight(),
        "count": len(facts),
        "standard_index": standard_index,
        "complete_index": complete_index,
        "factorizations": [
            [{"indicator": ind.to_text(), "multiplicity": m} for ind, m in f.terms.items()]
            for f in facts
        ],
    }
    lines = [f"{len(facts)} factorizations of weight {n.weight()}"]
    for k, f in enumerate(facts):
        marks = "".join(
            [" (standard)" if k == standard_index else "", " (complete)" if k == complete_index else ""]
        )
        lines.append(f"{k + 1}: {_factorization_text(f)}{marks}")
    _emit(args, obj, lines)
    return 0


def _cmd_classify(args) -> int:
    n = _rpp_arg(args.rpp)
    reports = classify(n)
    n_singular = sum(not r.smooth for r in reports)
    lines = [f"{len(reports)} components, {n_singular} singular"]
    for k, report in enumerate(reports):
        flags = "smooth" if report.smooth else "singular"
        if not report.smooth:
            flags += ", bijective on points" if report.bijective_on_points else ", not bijective"
        line = f"T{k + 1}: dim {report.dimension}, {flags} — {_factorization_text(report.factorization)}"
        if report.relation_witness:
            witness = {
                ind.to_text(): c
                for ind, c in zip(indicators(n.diagram), report.relation_witness)
                if c
            }
            terms = " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*[{t}]" for t, c in witness.items())
            line += f" ; witness {terms}"
        lines.append(line)
    _emit(args, [r.to_json_obj() for r in reports], lines)
    return 0


def _cmd_equations(args) -> int:
    n = _rpp_arg(args.rpp)
    if args.type == "I":
        if args.minimal_border:
            raise DomainError(
                "unsupported-option", "--minimal-border applies to type II only", "--minimal-border"
            )
        ideal = type_i_ideal(n)
    else:
        ideal = type_ii_ideal(n, minimal_border=args.minimal_border)
    if args.tangent:
        dim, reduced = tangent_embedding(ideal)
        obj = {
            "presentation": ideal.to_json_obj(),
            "tangent_dim": dim,
            "reduced": reduced.to_json_obj(),
        }
        lines = [str(g) for g in reduced.generators]
    else:
        obj = ideal.to_json_obj()
        lines = [str(g) for g in ideal.generators]
    _emit(args, obj, lines)
    return 0


def _cmd_series(args) -> int:
    diagram = _diagram_arg(args.diagram)
    if (args.curve is None) == (args.euler is None):
        raise DomainError(
            "unsupported-option", "choose exactly one of --curve and --euler", None
        )
    if args.curve is not None:
        if args.single_variable:
            raise DomainError(
                "unsupported-option", "--single-variable requires --euler", "--single-variable"
            )
        series = motivic_series(diagram, args.curve, args.max_size)
    else:
        series = euler_series(
            diagram, args.euler, args.max_size, single_variable=args.single_variable
        )
    lines = []
    for exp, poly in series.sorted_items():
        key = exp[0] if series.single_variable else list(exp)
        lines.append(f"{key}: {poly}")
    _emit(args, series.to_json_obj(), lines)
    return 0


def _cmd_count_points(args) -> int:
    n = _rpp_arg(args.rpp)
    count = count_points(n, args.p)
    coefficient = motivic_series(n.diagram, "A1", n.size).coefficient(n.values)
    motive = evaluate_motive(coefficient, args.p)
    obj = {
        "n": {"cols": list(n.diagram.cols), "rows": n.rows()},
        "p": args.p,
        "count": count,
        "motive_at_p": motive,
        "match": count == motive,
    }
    lines = [f"count {count}", f"motive_at_p {motive}", f"match {str(count == motive).lower()}"]
    _emit(args, obj, lines)
    return 0


def _cmd_verify(args) -> int:
    corpus = load_corpus(args.corpus)
    results = run_corpus(corpus)
    n_pass = sum(ok for _, ok, _ in results)
    obj = {
        "rows": [{"name": name, "passed": ok, "detail": detail} for name, ok, detail in results],
        "passed": n_pass,
        "failed": len(results) - n_pass,
    }
    lines = [
        f"{'PASS' if ok else 'FAIL'} {name}" + ("" if ok else f" - {detail}")
        for name, ok, detail in results
    ]
    lines.append(f"{n_pass}/{len(results)} rows passed")
    _emit(args, obj, lines)
    return 0 if n_pass == len(results) else 2


# -- wiring ---------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="rpphilb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)
        return p

    p = add("indicators", _cmd_indicators, "list the indicator fillings of a diagram")
    p.add_argument("diagram", help='column heights, e.g. "2,2", or @file.json')

    p = add("weight", _cmd_weight, "weight of a filling")
    p.add_argument("rpp", help='row-major filling, e.g. "0 2 / 2 4", or @file.json')

    p = add("factorizations", _cmd_factorizations, "all factorisations into indicators")
    p.add_argument("rpp")

    p = add("classify", _cmd_classify, "per-component smooth/singular report")
    p.add_argument("rpp")

    p = add("equations", _cmd_equations, "local defining equations at the origin chart")
    p.add_argument("rpp")
    p.add_argument("--type", choices=("I", "II"), required=True)
    p.add_argument("--tangent", action="store_true")
    p.add_argument("--minimal-border", action="store_true", dest="minimal_border")

    p = add("series", _cmd_series, "truncated generating series over the boxes")
    p.add_argument("diagram")
    p.add_argument("--curve", choices=("A1", "P1"))
    p.add_argument("--euler", type=int, metavar="CHI")
    p.add_argument("--max-size", type=int, default=6, dest="max_size")
    p.add_argument("--single-variable", action="store_true", dest="single_variable")

    p = add("count-points", _cmd_count_points, "brute-force point count over a prime field")
    p.add_argument("rpp")
    p.add_argument("--p", type=int, required=True)

    p = add("verify", _cmd_verify, "replay the frozen-expectation corpus")
    p.add_argument("corpus", nargs="?", default=None, help="corpus JSON path (default: bundled)")

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except DomainError as exc:
        print(json.dumps(exc.as_json(), sort_keys=True), file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
