"""Command-line front end.

Problem files are JSON::

    {
      "p": 3,
      "n": 2,
      "elements": [
        {"terms": [{"coeff": "1", "monomial": [1, 0, 0, 0]},
                   {"coeff": "2*a1", "monomial": [0, 1, 0, 0]}]}
      ],
      "k": 2,          // maximal: which member of the family (default n)
      "a": [1, 1],     // maximal: construction exponents (default all 1)
      "size": 7        // enumerate: subset size (or use --size)
    }

Each element is a sum of coeff * monomial terms; coefficients use the
scalar grammar (see parsing), monomials are exponent vectors of length 2n
with entries 0..p-1.

Exit codes: 0 = the property holds / the construction succeeded,
1 = the property fails (witness in the report), 2 = input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraSpec, monomial_str
from .constructions import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    MaximalSpaceParams,
    build_maximal_space,
    enumerate_monomial_kummer_spaces,
    sample_extension_failures,
    verify_monomial_maximality,
)
from .graphs import build_graph, check_axioms, export_dot
from .parsing import ParseError
from .spaces import MonomializationError, SpaceBasis, is_kummer_space, monomialize


class InputError(Exception):
    """A malformed problem file or inconsistent command parameters."""


def _load_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return data


def _load_spec(data: dict) -> AlgebraSpec:
    for key in ("p", "n"):
        if key not in data:
            raise InputError(f"missing field {key!r}")
        if not isinstance(data[key], int):
            raise InputError(f"field {key!r} must be an integer")
    try:
        return AlgebraSpec(data["p"], data["n"])
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_elements(spec: AlgebraSpec, data: dict) -> list:
    raw = data.get("elements")
    if not isinstance(raw, list) or not raw:
        raise InputError("field 'elements' must be a nonempty list")
    elements = []
    for i, entry in enumerate(raw, start=1):
        if not isinstance(entry, dict) or not isinstance(entry.get("terms"), list):
            raise InputError(f"element {i}: expected an object with a 'terms' list")
        if not entry["terms"]:
            raise InputError(f"element {i}: 'terms' must be nonempty")
        element = spec.zero()
        for t, term in enumerate(entry["terms"], start=1):
            where = f"element {i}, term {t}"
            if not isinstance(term, dict):
                raise InputError(f"{where}: expected an object")
            coeff_text = term.get("coeff", "1")
            if not isinstance(coeff_text, str):
                raise InputError(f"{where}: 'coeff' must be a string")
            try:
                coeff = spec.parse_scalar(coeff_text)
            except ParseError as exc:
                raise InputError(f"{where}: {exc}") from exc
            exponents = term.get("monomial")
            if not isinstance(exponents, list) or not all(
                isinstance(e, int) for e in exponents
            ):
                raise InputError(f"{where}: 'monomial' must be a list of integers")
            try:
                element = element + spec.monomial(exponents, coeff)
            except ValueError as exc:
                raise InputError(f"{where}: {exc}") from exc
        elements.append(element)
    return elements


def _emit(args, human_lines, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _write_dot(args, graph, payload, human_lines) -> None:
    if getattr(args, "dot", None):
        text = export_dot(graph)
        try:
            with open(args.dot, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.dot}: {exc}") from exc
        payload["dot"] = args.dot
        human_lines.append(f"DOT written to {args.dot}")


# -- subcommands -------------------------------------------------------------


def _cmd_verify_element(args) -> int:
    data = _load_file(args.file)
    spec = _load_spec(data)
    elements = _load_elements(spec, data)
    results = []
    all_ok = True
    lines = []
    for i, z in enumerate(elements, start=1):
        reason = None
        power = spec.one()
        for k in range(1, spec.p + 1):
            power = power * z
            scalar = power.is_scalar()
            if k < spec.p and scalar:
                reason = f"z^{k} is already scalar"
                break
            if k == spec.p and not scalar:
                reason = f"z^{spec.p} is not scalar"
        ok = reason is None
        all_ok = all_ok and ok
        results.append({"index": i, "kummer": ok, "reason": reason})
        lines.append(
            f"element {i}: Kummer: {'yes' if ok else 'no'}"
            + (f" ({reason})" if reason else "")
        )
    payload = {
        "command": "verify-element",
        "p": spec.p,
        "n": spec.n,
        "ok": all_ok,
        "results": results,
    }
    _emit(args, lines, payload)
    return 0 if all_ok else 1


def _cmd_verify_space(args) -> int:
    data = _load_file(args.file)
    spec = _load_spec(data)
    elements = _load_elements(spec, data)
    try:
        basis = SpaceBasis(spec, elements)
    except ValueError as exc:
        payload = {
            "command": "verify-space",
            "p": spec.p,
            "n": spec.n,
            "ok": False,
            "error": str(exc),
        }
        _emit(args, [f"Kummer: no ({exc})"], payload)
        return 1
    verdict = is_kummer_space(basis)
    payload = {
        "command": "verify-space",
        "p": spec.p,
        "n": spec.n,
        "ok": bool(verdict),
        "dimension": basis.dimension,
        "witness": None if verdict else list(verdict.witness),
        "star": None if verdict else str(verdict.star),
    }
    if verdict:
        lines = [f"Kummer: yes, dim {basis.dimension}"]
    else:
        lines = [
            f"Kummer: no, dim {basis.dimension}",
            f"witness d = {verdict.witness}",
            f"star = {verdict.star}",
        ]
    _emit(args, lines, payload)
    return 0 if verdict else 1


def _graph_payload(graph) -> dict:
    return {
        "vertices": list(graph.vertex_names),
        "arrows": [list(pair) for pair in graph.arrows()],
        "cycles": [list(c) for c in graph.simple_cycles()],
    }


def _cmd_graph(args) -> int:
    data = _load_file(args.file)
    spec = _load_spec(data)
    elements = _load_elements(spec, data)
    try:
        graph = build_graph(elements)
    except ValueError as exc:
        payload = {"command": "graph", "ok": False, "error": str(exc)}
        _emit(args, [f"graph: no ({exc})"], payload)
        return 1
    payload = {"command": "graph", "ok": True, "p": spec.p, "n": spec.n}
    payload.update(_graph_payload(graph))
    lines = [f"rho-commuting: yes ({graph.size} vertices)"]
    for i, name in enumerate(graph.vertex_names):
        lines.append(f"  v{i}: {name}")
    for i, j in graph.arrows():
        lines.append(f"  {graph.vertex_names[i]} -> {graph.vertex_names[j]}")
    cycles = graph.simple_cycles()
    lines.append(f"cycles: {len(cycles)}")
    for cycle in cycles:
        lines.append("  " + " -> ".join(graph.vertex_names[v] for v in cycle))
    _write_dot(args, graph, payload, lines)
    _emit(args, lines, payload)
    return 0


def _cmd_classify(args) -> int:
    data = _load_file(args.file)
    spec = _load_spec(data)
    if spec.p != 3:
        raise InputError("classify requires p = 3")
    elements = _load_elements(spec, data)
    try:
        graph = build_graph(elements)
    except ValueError as exc:
        payload = {"command": "classify", "ok": False, "error": str(exc)}
        _emit(args, [f"monomial Kummer space: no ({exc})"], payload)
        return 1
    report = check_axioms(graph, elements)
    payload = {
        "command": "classify",
        "ok": report.passed,
        "p": spec.p,
        "n": spec.n,
        "failures": report.failures(),
    }
    payload.update(_graph_payload(graph))
    lines = [f"monomial Kummer space: {'yes' if report.passed else 'no'}"]
    for failure in report.failures():
        lines.append(failure)
    if report.nonscalar_cycle is not None:
        cycle = report.nonscalar_cycle
        lines.append(
            "witness cycle: "
            + " -> ".join(graph.vertex_names[v] for v in cycle)
            + f" (product {report.nonscalar_product})"
        )
        payload["witness_cycle"] = list(cycle)
        payload["witness_product"] = str(report.nonscalar_product)
    _write_dot(args, graph, payload, lines)
    _emit(args, lines, payload)
    return 0 if report.passed else 1


def _cmd_maximal(args) -> int:
    data = _load_file(args.file)
    spec = _load_spec(data)
    k = data.get("k", spec.n)
    if not isinstance(k, int):
        raise InputError("field 'k' must be an integer")
    a = data.get("a", [1] * spec.n)
    if not isinstance(a, list) or not all(isinstance(e, int) for e in a):
        raise InputError("field 'a' must be a list of integers")
    try:
        basis = build_maximal_space(spec, MaximalSpaceParams(a), k)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    verdict = is_kummer_space(basis)
    lines = [
        f"V_{k} with a = {tuple(a[:k])}: dim {basis.dimension}, "
        f"Kummer: {'yes' if verdict else 'no'}"
    ]
    payload = {
        "command": "maximal",
        "p": spec.p,
        "n": spec.n,
        "k": k,
        "a": list(a[:k]),
        "dimension": basis.dimension,
        "kummer": bool(verdict),
        "classes": [list(w) for w in basis.classes()],
    }
    ok = bool(verdict)
    if ok:
        witness = verify_monomial_maximality(basis, jobs=args.jobs)
        payload["maximal"] = witness is None
        payload["witness_class"] = None if witness is None else list(witness)
        if witness is None:
            lines.append("monomial extensions: none (maximal)")
        else:
            lines.append(f"extendable by monomial class {witness}")
            ok = False
        if args.samples > 0 and witness is None:
            tested, z = sample_extension_failures(basis, args.samples, args.seed)
            payload["samples"] = {
                "tested": tested,
                "seed": args.seed,
                "witness": None if z is None else str(z),
            }
            if z is None:
                lines.append(f"random extensions: {tested} tested, none extend")
            else:
                lines.append(f"random extension found: {z}")
                ok = False
    _emit(args, lines, payload)
    return 0 if ok else 1


def _cmd_monomialize(args) -> int:
    data = _load_file(args.file)
    spec = _load_spec(data)
    elements = _load_elements(spec, data)
    try:
        basis = SpaceBasis(spec, elements)
        classes = monomialize(basis)
    except (ValueError, MonomializationError) as exc:
        payload = {"command": "monomialize", "ok": False, "error": str(exc)}
        _emit(args, [f"monomialization failed: {exc}"], payload)
        return 1
    payload = {
        "command": "monomialize",
        "ok": True,
        "p": spec.p,
        "n": spec.n,
        "dimension": len(classes),
        "classes": [list(w) for w in classes],
    }
    lines = [f"monomial basis ({len(classes)} classes):"]
    for w in classes:
        lines.append(f"  {monomial_str(w)}  {list(w)}")
    _emit(args, lines, payload)
    return 0


def _cmd_enumerate(args) -> int:
    data = _load_file(args.file)
    spec = _load_spec(data)
    if spec.p != 3:
        raise InputError("enumerate requires p = 3")
    size = args.size if args.size is not None else data.get("size")
    if not isinstance(size, int) or size < 1:
        raise InputError("subset size must be a positive integer ('size' or --size)")
    try:
        spaces = enumerate_monomial_kummer_spaces(spec, size, budget=args.budget)
    except BudgetExceededError as exc:
        payload = {"command": "enumerate", "ok": False, "error": str(exc)}
        _emit(args, [str(exc)], payload)
        return 1
    count = len(spaces)
    lines = [f"{count} space{'s' if count != 1 else ''} found"]
    for subset in spaces:
        lines.append("  {" + ", ".join(monomial_str(w) for w in subset) + "}")
    payload = {
        "command": "enumerate",
        "ok": True,
        "p": spec.p,
        "n": spec.n,
        "size": size,
        "count": count,
        "spaces": [[list(w) for w in subset] for subset in spaces],
    }
    _emit(args, lines, payload)
    return 0


# -- argument parsing ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer",
        description="Exact Kummer-space computations in tensor products of "
        "cyclic algebras over a generic field.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, dot=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", help="JSON problem file")
        cmd.add_argument(
            "--json", action="store_true", help="emit a machine-readable JSON report"
        )
        if dot:
            cmd.add_argument("--dot", metavar="PATH", help="write the graph as DOT")
        cmd.set_defaults(handler=handler)
        return cmd

    add(
        "verify-element",
        _cmd_verify_element,
        "check that each listed element is a Kummer element",
    )
    add(
        "verify-space",
        _cmd_verify_space,
        "check that the listed elements span a Kummer space",
    )
    add(
        "graph",
        _cmd_graph,
        "build the commutation graph of a rho-commuting set",
        dot=True,
    )
    add(
        "classify",
        _cmd_classify,
        "decide the p = 3 graph axioms for the listed elements",
        dot=True,
    )
    maximal = add(
        "maximal",
        _cmd_maximal,
        "build the recursive maximal space and verify its maximality",
    )
    maximal.add_argument(
        "--jobs", type=int, default=1, help="worker processes for the exhaustive sweep"
    )
    maximal.add_argument(
        "--samples",
        type=int,
        default=0,
        help="additionally test this many random non-span extensions",
    )
    maximal.add_argument(
        "--seed", type=int, default=0, help="seed for randomized property runs"
    )
    add(
        "monomialize",
        _cmd_monomialize,
        "rewrite a Kummer-space basis as a monomial one",
    )
    enum = add(
        "enumerate",
        _cmd_enumerate,
        "list all monomial Kummer spaces of a given size (p = 3)",
    )
    enum.add_argument("--size", type=int, default=None, help="subset size to search")
    enum.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"search node budget (default {DEFAULT_BUDGET})",
    )
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
