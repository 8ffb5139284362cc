"""Command-line front-end: ``elpsplit <command> [options] FILE``."""
from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterable, Sequence

from . import __version__
from .corpus import CheckResult, corpus_run
from .errors import (
    CapExceeded,
    ElpError,
    GroundingError,
    InvalidSplittingSet,
    MalformedCorpus,
    NotObjectiveError,
    ParseError,
)
from .objective import answer_sets
from .semantics import DEFAULT_MAX_SUBJECTIVE, Semantics, WorldView, world_views
from .splitting import DEFAULT_MAX_ATOMS, enumerate_splitting_sets, esp_world_views, split
from .stratification import stratify
from .syntax import (
    Atom,
    Program,
    format_interpretation,
    format_program,
    format_world_view,
    ground,
    interpretation_key,
    parse_atoms,
    parse_program,
)
from .topdown import EquivalenceReport, check_equivalence, tdesp_candidates, tdespb_candidates

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_SPLIT = 4
EXIT_CAP = 5

_SPLIT_COMMANDS = ("esp", "tdespb", "tdesp", "compare")


def _plural(n: int, word: str) -> str:
    return f"{n} {word}" if n == 1 else f"{n} {word}s"


def _wv_json(world_view: WorldView) -> list[list[str]]:
    return sorted(list(interpretation_key(s)) for s in world_view)


def _literals_json(literals: Iterable) -> list[str]:
    return sorted(str(l) for l in literals)


def _literals_text(literals: Iterable) -> str:
    return "{" + ", ".join(_literals_json(literals)) + "}"


def report_json(report: EquivalenceReport) -> dict:
    """The stable JSON form of an equivalence report."""
    return {
        "program": report.program,
        "semantics": str(report.semantics),
        "splitting_set": sorted(str(a) for a in report.splitting_set),
        "direct": [_wv_json(w) for w in report.direct],
        "esp": [_wv_json(w) for w in report.esp],
        "tdespb": [_wv_json(w) for w in report.tdespb],
        "tdesp": [_wv_json(w) for w in report.tdesp],
        "verdicts": report.verdicts,
        "traces": [
            {
                "top_world_view": _wv_json(t.world_view),
                "es": _literals_json(t.requisites.es),
                "ec": _literals_json(t.requisites.ec),
                "rq": _literals_json(t.requisites.rq),
            }
            for t in report.traces
        ],
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elpsplit",
        description="World views of epistemic logic programs, directly and via splitting.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name: str, help: str, *, program: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if program:
            p.add_argument("file", help="program file, or - for standard input")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    def semantic_options(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--semantics",
            choices=[s.value for s in Semantics],
            default=Semantics.G91.value,
        )
        p.add_argument("--max-subjective", type=int, default=DEFAULT_MAX_SUBJECTIVE)

    command("ground", "print the ground program")
    command("solve", "answer sets of an objective program")
    semantic_options(command("worldviews", "world views computed directly"))

    p = command("split", "show the bottom and top for --u, or list all splitting sets")
    p.add_argument("--u", help="comma-separated splitting set")
    p.add_argument("--max-atoms", type=int, default=DEFAULT_MAX_ATOMS)

    helps = {
        "esp": "world views composed bottom-up",
        "tdespb": "candidates from whole bottom world views",
        "tdesp": "candidates allowing parts of bottom world views",
        "compare": "direct and composed world views side by side",
    }
    for name in _SPLIT_COMMANDS:
        p = command(name, helps[name])
        semantic_options(p)
        p.add_argument("--u", required=True, help="comma-separated splitting set")
        p.add_argument(
            "--inner",
            action="append",
            default=[],
            metavar="ATOMS",
            help="splitting set for the bottom; repeat, innermost first",
        )
        if name != "esp":
            p.add_argument("--strategy", choices=["fixed", "split"], default="fixed")
        if name in ("tdesp", "compare"):
            p.add_argument("--subsets", choices=["maximal", "all"], default="maximal")

    command("stratify", "epistemic stratification levels")

    p = command("corpus", "run the golden-example corpus", program=False)
    p.add_argument("directory", nargs="?", help="corpus directory (default: shipped corpus)")
    return parser


def _read_program(path: str) -> Program:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return ground(parse_program(text))


def _atoms_option(text: str, program: Program) -> frozenset[Atom]:
    atoms = parse_atoms(text)
    unknown = atoms - program.atoms
    if unknown:
        raise InvalidSplittingSet(
            "atoms not in the program: " + ", ".join(sorted(map(str, unknown)))
        )
    return atoms


def _emit(args: argparse.Namespace, data, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for line in lines:
            print(line)


def _emit_world_views(args: argparse.Namespace, found: list[WorldView]) -> None:
    lines = [_plural(len(found), "world view")] + [format_world_view(w) for w in found]
    _emit(args, [_wv_json(w) for w in found], lines)


def _run_corpus(args: argparse.Namespace) -> int:
    def show(result: CheckResult) -> None:
        if not args.json:
            status = "PASS" if result.passed else "FAIL"
            suffix = f"  {result.detail}" if result.detail else ""
            print(f"{status} {result.entry} {result.check}{suffix}")

    results = corpus_run(args.directory, on_result=show)
    failed = sum(not r.passed for r in results)
    if args.json:
        data = [{"entry": r.entry, "check": r.check, "passed": r.passed} for r in results]
        print(json.dumps(data, indent=2))
    else:
        print(f"{_plural(len(results), 'check')}, {failed} failed")
    return EXIT_FAILED if failed else EXIT_OK


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "corpus":
        return _run_corpus(args)

    program = _read_program(args.file)
    cmd = args.command

    if cmd == "ground":
        text = format_program(program)
        _emit(args, [str(r) for r in program], text.splitlines())
    elif cmd == "solve":
        found = answer_sets(program)
        lines = [_plural(len(found), "answer set")] + [format_interpretation(s) for s in found]
        _emit(args, [list(interpretation_key(s)) for s in found], lines)
    elif cmd == "worldviews":
        found = world_views(program, args.semantics, max_subjective=args.max_subjective)
        _emit_world_views(args, found)
    elif cmd == "split":
        if args.u is None:
            sets = enumerate_splitting_sets(program, max_atoms=args.max_atoms)
            lines = [_plural(len(sets), "splitting set")] + [format_interpretation(u) for u in sets]
            _emit(args, [list(interpretation_key(u)) for u in sets], lines)
        else:
            sp = split(_atoms_option(args.u, program), program)
            data = {
                "splitting_set": list(interpretation_key(sp.u)),
                "bottom": [str(r) for r in sp.bottom],
                "top": [str(r) for r in sp.top],
            }
            lines = ["% bottom", *format_program(sp.bottom).splitlines()]
            lines += ["% top", *format_program(sp.top).splitlines()]
            _emit(args, data, lines)
    elif cmd == "stratify":
        result = stratify(program)
        if result.stratified:
            levels = sorted(result.levels.items(), key=lambda item: (item[1], str(item[0])))
            data = {"stratified": True, "levels": {str(a): n for a, n in levels}}
            lines = ["stratified"] + [f"{a}: {n}" for a, n in levels]
        else:
            violation = [str(a) for a in result.violation]
            data = {"stratified": False, "violation": violation}
            lines = ["not stratified", "cycle: " + format_interpretation(result.violation)]
        _emit(args, data, lines)
    else:
        u = _atoms_option(args.u, program)
        opts = {
            "inner": tuple(_atoms_option(i, program) for i in args.inner),
            "max_subjective": args.max_subjective,
        }
        if cmd != "esp":
            opts["strategy"] = args.strategy
        if cmd == "esp":
            _emit_world_views(args, esp_world_views(program, u, args.semantics, **opts))
        elif cmd == "tdespb":
            _emit_world_views(args, tdespb_candidates(program, u, args.semantics, **opts))
        elif cmd == "tdesp":
            found = tdesp_candidates(program, u, args.semantics, args.subsets, **opts)
            _emit_world_views(args, found)
        else:
            name = "<stdin>" if args.file == "-" else args.file
            report = check_equivalence(
                program, u, args.semantics, name=name, mode=args.subsets, **opts
            )
            _emit(args, report_json(report), _report_lines(report))
    return EXIT_OK


def _report_lines(report: EquivalenceReport) -> list[str]:
    lines = [
        f"program: {report.program}",
        f"semantics: {report.semantics}",
        f"splitting set: {format_interpretation(report.splitting_set)}",
    ]
    for label in ("direct", "esp", "tdespb", "tdesp"):
        found = getattr(report, label)
        lines.append(f"{label}: {_plural(len(found), 'world view')}")
        lines += [f"  {format_world_view(w)}" for w in found]
    lines.append("verdicts:")
    lines += [f"  {k}: {str(v).lower()}" for k, v in report.verdicts.items()]
    lines.append("traces:")
    for t in report.traces:
        lines.append(
            f"  {format_world_view(t.world_view)} es={_literals_text(t.requisites.es)}"
            f" ec={_literals_text(t.requisites.ec)} rq={_literals_text(t.requisites.rq)}"
        )
    return lines


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(args)
    except (ParseError, GroundingError, MalformedCorpus) as exc:
        return _fail(exc, EXIT_PARSE)
    except InvalidSplittingSet as exc:
        return _fail(exc, EXIT_SPLIT)
    except CapExceeded as exc:
        return _fail(exc, EXIT_CAP)
    except (OSError, NotObjectiveError) as exc:
        return _fail(exc, EXIT_USAGE)
    except ElpError as exc:
        return _fail(exc, EXIT_FAILED)


def _fail(exc: Exception, code: int) -> int:
    print(f"elpsplit: error: {exc}", file=sys.stderr)
    return code

if __name__ == "__main__":
    sys.exit(main())
