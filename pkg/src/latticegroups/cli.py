"""Command-line front end over the calculator modules.

Every verb is a thin adapter around one library call. JSON output is
byte-deterministic: keys sorted, arrays in the canonical entry order, one
document per command. ``eq`` exits 0 on equal, 1 on unequal, 2 on error;
all other verbs exit 0 on success and 2 on error.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys

from .cocycles import PerturbedCocycle, ScaledCocycle, canonical_cocycle, cocycle_index
from .homology import NotACycleError, algebraic_area, decompose_cycle, plaquette_sum_from_json
from .lattice import evaluate_path
from .metabelian import MetabelianElement, fox_image, word_problem
from .nilpotent import HeisenbergElement
from .words import RankMismatchError, WordSyntaxError, parse_word
from . import satellite

GROUPS = ("free", "abelian", "heisenberg", "metabelian", "satellite")
SUBGROUPS = ("N", "M", "commutant")

_ERRORS = (WordSyntaxError, RankMismatchError, NotACycleError, ValueError, OSError)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad vector {text!r}; expected comma-separated integers") from None


def _fmt_vec(vec) -> str:
    return "(" + ", ".join(str(c) for c in vec) + ")"


def _fmt_flow(flow) -> str:
    return "[" + ", ".join(
        f"{_fmt_vec(edge.base)}:{edge.axis}:{coeff:+d}" for edge, coeff in flow.entries()
    ) + "]"


def _fmt_plaquettes(ps) -> str:
    return "[" + ", ".join(
        f"{_fmt_vec(p.base)}:({p.i},{p.j}):{coeff:+d}" for p, coeff in ps.entries()
    ) + "]"


def _fmt_areas(elem) -> str:
    return "[" + ", ".join(f"({i},{j}):{value:+d}" for (i, j), value in elem.areas()) + "]"


def _cmd_reduce(args) -> tuple[str, int]:
    word = parse_word(args.word, args.d)
    return (_dumps({"word": str(word)}) if args.json else str(word)), 0


def _cmd_eval(args) -> tuple[str, int]:
    if args.group == "satellite":
        elem = satellite.from_word(args.word, args.k)
        if args.json:
            return _dumps(elem.as_json()), 0
        return f"k={elem.k} vec={_fmt_vec(elem.vec)} cycle={_fmt_flow(elem.cycle)}", 0
    word = parse_word(args.word, args.d)
    if args.group == "free":
        return (_dumps({"word": str(word)}) if args.json else str(word)), 0
    if args.group == "abelian":
        endpoint = evaluate_path(word).endpoint
        return (_dumps({"endpoint": list(endpoint)}) if args.json else _fmt_vec(endpoint)), 0
    if args.group == "heisenberg":
        elem = HeisenbergElement.from_word(word)
        if args.json:
            return _dumps(elem.as_json()), 0
        return f"endpoint={_fmt_vec(elem.endpoint)} areas={_fmt_areas(elem)}", 0
    elem = MetabelianElement.from_word(word)
    if args.json:
        return _dumps(elem.as_json()), 0
    return f"endpoint={_fmt_vec(elem.endpoint)} flow={_fmt_flow(elem.flow)}", 0


def _cmd_eq(args) -> tuple[str, int]:
    if args.group == "satellite":
        equal = satellite.from_word(args.word1, args.k) == satellite.from_word(args.word2, args.k)
    else:
        w1 = parse_word(args.word1, args.d)
        w2 = parse_word(args.word2, args.d)
        if args.group == "free":
            equal = w1 == w2
        elif args.group == "abelian":
            equal = evaluate_path(w1).endpoint == evaluate_path(w2).endpoint
        elif args.group == "heisenberg":
            equal = HeisenbergElement.from_word(w1) == HeisenbergElement.from_word(w2)
        else:
            equal = word_problem(w1, w2)
    verdict = "equal" if equal else "unequal"
    return (_dumps({"verdict": verdict}) if args.json else verdict), (0 if equal else 1)


def _cmd_nf(args) -> tuple[str, int]:
    if args.group != "metabelian":
        raise ValueError("nf supports only --group metabelian")
    elem = MetabelianElement.from_word(parse_word(args.word, args.d))
    if args.json:
        return _dumps(elem.as_json()), 0
    return f"endpoint={_fmt_vec(elem.endpoint)} flow={_fmt_flow(elem.flow)}", 0


def _cmd_decompose(args) -> tuple[str, int]:
    flow = evaluate_path(parse_word(args.word, args.d)).flow
    ps = decompose_cycle(flow)
    return (_dumps(ps.as_json()) if args.json else _fmt_plaquettes(ps)), 0


def _cmd_area(args) -> tuple[str, int]:
    flow = evaluate_path(parse_word(args.word, args.d)).flow
    value = algebraic_area(flow)
    return (_dumps({"area": value}) if args.json else str(value)), 0


def _cmd_cocycle(args) -> tuple[str, int]:
    g1 = _parse_vector(args.g1)
    g2 = _parse_vector(args.g2)
    flow = canonical_cocycle(g1, g2)
    return (_dumps(flow.as_json()) if args.json else _fmt_flow(flow)), 0


def _load_perturbation(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    shifts = {}
    for item in data:
        vertex = tuple(int(c) for c in item["vertex"])
        shifts[vertex] = plaquette_sum_from_json(item["plaquettes"], d=2).boundary_flow()
    return shifts


def _cmd_beta(args) -> tuple[str, int]:
    table = ScaledCocycle(2, args.k)
    if args.perturb:
        table = PerturbedCocycle(table, _load_perturbation(args.perturb))
    value = cocycle_index(table)
    return (_dumps({"beta": value}) if args.json else str(value)), 0


def _cmd_fox(args) -> tuple[str, int]:
    image = fox_image(parse_word(args.word, args.d))
    if args.json:
        return _dumps(image.as_json()), 0
    derivs = "; ".join(
        f"d{axis + 1}=[" + ", ".join(
            f"{_fmt_vec(point)}:{coeff:+d}" for point, coeff in sorted(component.items())
        ) + "]"
        for axis, component in enumerate(image.derivatives)
    )
    return f"monomial={_fmt_vec(image.monomial)} {derivs}", 0


def _cmd_member(args) -> tuple[str, int]:
    elem = satellite.from_word(args.word, args.k)
    member = {"N": elem.in_N, "M": elem.in_M, "commutant": elem.in_commutant}[args.sub]()
    return (_dumps({"member": member}) if args.json else ("true" if member else "false")), 0


def _run_line(tokens: list[str]) -> tuple[str | None, str | None, int]:
    """Execute one command line; returns (output, error message, exit code)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(tokens)
    except SystemExit:
        return None, "bad arguments", 2
    if args.verb == "batch":
        return None, "batch cannot be nested", 2
    try:
        output, code = args.handler(args)
        return output, None, code
    except _ERRORS as exc:
        return None, str(exc), 2


def _cmd_batch(args) -> tuple[str, int]:
    with open(args.file, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    outputs = []
    for line in lines:
        if not line.strip():
            outputs.append("")
            continue
        if args.eq:
            pair = shlex.split(line)
            if len(pair) != 2:
                outputs.append("error: expected two words per line")
                continue
            tokens = ["eq", "--group", args.group, "--d", str(args.d), "--k", str(args.k)]
            if args.json:
                tokens.append("--json")
            tokens.extend(pair)
        else:
            tokens = shlex.split(line)
        output, error, _code = _run_line(tokens)
        outputs.append(f"error: {error}" if error is not None else output)
    return "\n".join(outputs), 0


def _add_common(sub, *, d=True, k=False, group=None) -> None:
    if group is not None:
        if group == "required":
            sub.add_argument("--group", choices=GROUPS, required=True)
        else:
            sub.add_argument("--group", choices=GROUPS, default=group)
    if d:
        sub.add_argument("--d", type=int, default=2, help="generator rank (default 2)")
    if k:
        sub.add_argument("--k", type=int, default=1, help="extension level (satellite only)")
    sub.add_argument("--json", action="store_true", help="emit one JSON document")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticegroups",
        description="Exact word-problem, homology and cocycle queries for "
        "lattice-path realizations of free abelian, nilpotent, metabelian "
        "and level-k extension groups.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("reduce", help="freely reduce a word")
    _add_common(p)
    p.add_argument("word")
    p.set_defaults(handler=_cmd_reduce)

    p = verbs.add_parser("eval", help="evaluate a word in a chosen quotient")
    _add_common(p, k=True, group="required")
    p.add_argument("word", help="indexed word (x1, x2, ...) or x/y/z word for satellite")
    p.set_defaults(handler=_cmd_eval)

    p = verbs.add_parser("eq", help="decide equality of two words (exit 0 equal, 1 unequal)")
    _add_common(p, k=True, group="required")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(handler=_cmd_eq)

    p = verbs.add_parser("nf", help="metabelian normal form of a word")
    _add_common(p, group="metabelian")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_nf)

    p = verbs.add_parser("decompose", help="plaquette decomposition of a loop word")
    _add_common(p)
    p.add_argument("word")
    p.set_defaults(handler=_cmd_decompose)

    p = verbs.add_parser("area", help="algebraic area of a planar loop word")
    _add_common(p)
    p.add_argument("word")
    p.set_defaults(handler=_cmd_area)

    p = verbs.add_parser("cocycle", help="canonical cocycle value at a vector pair")
    _add_common(p, d=False)
    p.add_argument("g1", help="comma-separated integers, e.g. 1,0")
    p.add_argument("g2")
    p.set_defaults(handler=_cmd_cocycle)

    p = verbs.add_parser("beta", help="integer index classifying a level-k cocycle")
    _add_common(p, d=False, k=True)
    p.add_argument("--perturb", help="JSON file of {vertex, plaquettes} coboundary shifts")
    p.set_defaults(handler=_cmd_beta)

    p = verbs.add_parser("fox", help="matrix-embedding image of a word")
    _add_common(p)
    p.add_argument("word")
    p.set_defaults(handler=_cmd_fox)

    p = verbs.add_parser("member", help="subgroup membership in the level-k extension")
    _add_common(p, d=False, k=True)
    p.add_argument("--sub", choices=SUBGROUPS, required=True)
    p.add_argument("word", help="word over x, y, z")
    p.set_defaults(handler=_cmd_member)

    p = verbs.add_parser("batch", help="run newline-separated commands (or word pairs with --eq)")
    p.add_argument("file")
    p.add_argument("--eq", action="store_true", help="treat each line as a word pair for eq")
    p.add_argument("--group", choices=GROUPS, default="metabelian")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_batch)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        output, code = args.handler(args)
    except _ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if output is not None:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
