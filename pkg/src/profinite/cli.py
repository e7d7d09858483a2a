"""Command-line front end.

Exit codes: 0 success (or IN_LATTICE), 1 negative result (certificate
produced, a verification trial failed, no realizing object), 2 unreadable or
malformed input, 3 recogniser indices out of range.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .equations import (
    LanguageFamily, check_definable, derive_equations, lattice_closure, run_trials,
)
from .errors import FrameworkError, NotFound, ParseError, UnknownRecogniser
from .fo import fo_framework_from_json
from .fo.structures import FiniteStructure
from .framework import Framework, Language, format_label
from .space import approximation_space, realize
from .words import word_framework_from_json

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INDEX = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_json(path: str | None, what: str):
    if path is None:
        raise InputError(f"missing {what} file")
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {what} file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} file {path} is not valid JSON: {exc}") from None


def load_framework(kind: str, path: str | None) -> Framework:
    data = _read_json(path, "framework")
    try:
        if kind == "word":
            return word_framework_from_json(data)
        return fo_framework_from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"malformed {kind} framework: {exc}") from None


def parse_language(fw: Framework, data) -> Language:
    """Language JSON ``{"recogniser": i, "accepted": [labels]}``; labels match value labels."""
    if not isinstance(data, dict) or not isinstance(data.get("recogniser"), int) \
            or not isinstance(data.get("accepted"), list):
        raise InputError(f"malformed language: {data!r}")
    rec = fw.recogniser(data["recogniser"])
    by_label = {format_label(v): v for v in rec.value_set}
    unknown = [a for a in data["accepted"] if a not in by_label]
    if unknown:
        raise InputError(f"labels {unknown} are not values of recogniser {rec.index}")
    return Language(rec.index, (by_label[a] for a in data["accepted"]))


def parse_indices(text: str | None, fw: Framework) -> list[int]:
    if text is None:
        return list(range(len(fw.recognisers)))
    if not text.strip():
        return []
    try:
        indices = [int(part) for part in text.split(",")]
    except ValueError:
        raise InputError(f"--indices must be comma-separated integers, got {text!r}") from None
    for i in indices:
        fw.recogniser(i)
    return indices


def _load_generators(fw: Framework, path: str | None) -> list[Language]:
    data = _read_json(path, "generators")
    if isinstance(data, dict):
        data = data.get("generators")
    if not isinstance(data, list):
        raise InputError("generators file must hold a list of languages")
    return [parse_language(fw, item) for item in data]


def _object_json(obj):
    if isinstance(obj, FiniteStructure):
        return obj.to_json()
    return {"word": obj}


def _point_text(p) -> str:
    return "(" + ", ".join(format_label(v) for v in p) + ")"


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _space_for(args, fw: Framework, languages=()):
    indices = parse_indices(args.indices, fw)
    space = approximation_space(fw, indices, args.budget)
    for lang in languages:
        space.coordinate(lang.recogniser_index)
    return space


def cmd_approx(args) -> int:
    fw = load_framework(args.framework, args.file)
    space = _space_for(args, fw)
    payload = space.to_json()
    lines = [f"level {space.level}, recognisers {list(space.recogniser_indices)}, "
             f"{'exact' if space.exact else f'up to budget {args.budget}'}"]
    lines += ["  " + _point_text(p) for p in space.sorted_points()]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_equations(args) -> int:
    fw = load_framework(args.framework, args.file)
    gens = _load_generators(fw, args.generators)
    space = _space_for(args, fw, gens)
    es = derive_equations(lattice_closure(LanguageFamily.from_languages(space, gens)))
    lines = [f"{len(es)} equations ({'exact' if space.exact else 'approximate'} space)"]
    lines += [f"  {_point_text(e.u)} -> {_point_text(e.v)}" for e in es.sorted()]
    _emit(args, es.to_json(), lines)
    return EXIT_OK


def cmd_check(args) -> int:
    fw = load_framework(args.framework, args.file)
    gens = _load_generators(fw, args.generators)
    candidate = parse_language(fw, _read_json(args.candidate, "candidate"))
    space = _space_for(args, fw, [*gens, candidate])
    verdict = check_definable(space, gens, candidate)
    lines = [verdict.verdict + ("" if verdict.exact else " (advisory: approximate space)")]
    if verdict.certificate is not None:
        cert = verdict.certificate
        lines.append(f"  violated equation {_point_text(cert.u)} -> {_point_text(cert.v)}")
    _emit(args, verdict.to_json(), lines)
    return EXIT_OK if verdict.in_lattice else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    if args.trials < 0:
        raise InputError("--trials must be non-negative")
    summary = run_trials(args.trials, args.seed)
    lines = [f"lattice theorem: {summary.lattice_passed}/{summary.trials} passed",
             f"boolean corollary: {summary.boolean_passed}/{summary.trials} passed"]
    _emit(args, summary.to_json(), lines)
    return EXIT_OK if summary.all_passed else EXIT_NEGATIVE


def cmd_realize(args) -> int:
    fw = load_framework(args.framework, args.file)
    space = _space_for(args, fw)
    if args.point is None:
        raise InputError("realize needs --point")
    labels = [] if not args.point.strip() else args.point.split(",")
    if len(labels) != space.level:
        raise InputError(f"--point has {len(labels)} values, the space has level {space.level}")
    point = []
    for i, label in zip(space.recogniser_indices, labels):
        by_label = {format_label(v): v for v in fw.recogniser(i).value_set}
        if label not in by_label:
            raise InputError(f"{label!r} is not a value of recogniser {i}")
        point.append(by_label[label])
    point = tuple(point)
    if point not in space.points:
        message = "point is not realized" + ("" if space.exact else " within the budget")
        _emit(args, {"point": labels, "object": None, "exact": space.exact}, [message])
        return EXIT_NEGATIVE
    try:
        obj = realize(fw, space, point)
    except NotFound:
        _emit(args, {"point": labels, "object": None, "exact": space.exact}, ["not found"])
        return EXIT_NEGATIVE
    _emit(args, {"point": labels, "object": _object_json(obj), "exact": space.exact},
          [repr(obj)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--framework", choices=("word", "fo"), default="word")
    common.add_argument("--file", help="framework definition (JSON)")
    common.add_argument("--budget", type=int, default=3,
                        help="enumeration budget for non-exact frameworks (FO: max structure size)")
    common.add_argument("--indices", help="comma-separated recogniser indices (default: all)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--output", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="profinite", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("approx", parents=[common], help="print the truncated space").set_defaults(run=cmd_approx)
    p = sub.add_parser("equations", parents=[common], help="equations of the generated lattice")
    p.add_argument("--generators", required=True)
    p.set_defaults(run=cmd_equations)
    p = sub.add_parser("check", parents=[common], help="is a language in the generated lattice")
    p.add_argument("--generators", required=True)
    p.add_argument("--candidate", required=True)
    p.set_defaults(run=cmd_check)
    sub.add_parser("verify", parents=[common], help="randomized theorem trials").set_defaults(run=cmd_verify)
    p = sub.add_parser("realize", parents=[common], help="find an object realizing a point")
    p.add_argument("--point", help="comma-separated value labels")
    p.set_defaults(run=cmd_realize)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget < 0:
        print("error: --budget must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.run(args)
    except UnknownRecogniser as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INDEX
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FrameworkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
