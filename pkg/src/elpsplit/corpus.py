"""Golden-example corpus: JSON entries with expected outputs per operation."""
from __future__ import annotations

import json
from collections.abc import Callable
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ElpError, MalformedCorpus
from .objective import answer_sets
from .semantics import Semantics, is_world_view, world_views
from .splitting import esp_world_views, split
from .stratification import stratify
from .syntax import (
    Program,
    format_interpretation,
    format_world_view,
    ground,
    parse_atoms,
    parse_program,
    parse_world_view,
)
from .topdown import detach, interface_world_views, tdesp_candidates, tdespb_candidates

__all__ = ["CorpusEntry", "CheckResult", "load_entry", "load_corpus", "run_entry", "corpus_run"]

# operations whose expected value is a list of world views, keyed "<op>/<semantics>"
_COLLECTIONS = ("worldviews", "esp", "tdespb", "tdesp", "interface")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    program: str
    splitting_set: tuple[str, ...] | None = None
    inner_splitting_sets: tuple[tuple[str, ...], ...] = ()
    expected: dict = field(default_factory=dict)

    def parsed(self) -> Program:
        return ground(parse_program(self.program))

    def u(self):
        if self.splitting_set is None:
            raise MalformedCorpus(f"{self.name}: check needs a splitting_set")
        return parse_atoms(",".join(self.splitting_set))

    def inner(self):
        return tuple(parse_atoms(",".join(s)) for s in self.inner_splitting_sets)


@dataclass(frozen=True)
class CheckResult:
    entry: str
    check: str
    passed: bool
    detail: str = ""


def load_entry(path: str | Path) -> CorpusEntry:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedCorpus(f"{path}: {exc}") from exc
    if not isinstance(data, dict) or "program" not in data or "expected" not in data:
        raise MalformedCorpus(f"{path}: needs 'program' and 'expected'")
    u = data.get("splitting_set")
    return CorpusEntry(
        name=data.get("name", path.stem),
        program=data["program"],
        splitting_set=None if u is None else tuple(u),
        inner_splitting_sets=tuple(tuple(s) for s in data.get("inner_splitting_sets", ())),
        expected=dict(data["expected"]),
    )


def load_corpus(directory: str | Path | None = None) -> list[CorpusEntry]:
    """Entries of ``directory``, or of the corpus shipped with the package."""
    if directory is None:
        directory = resources.files("elpsplit") / "corpus"
    return [load_entry(p) for p in sorted(Path(str(directory)).glob("*.json"))]


def _collection(entry: CorpusEntry, op: str, semantics: Semantics) -> list[str]:
    program = entry.parsed()
    if op == "worldviews":
        result = world_views(program, semantics)
    elif op == "esp":
        result = esp_world_views(program, entry.u(), semantics, inner=entry.inner())
    elif op == "tdespb":
        result = tdespb_candidates(program, entry.u(), semantics, inner=entry.inner())
    elif op == "tdesp":
        result = tdesp_candidates(program, entry.u(), semantics, inner=entry.inner())
    else:
        result = interface_world_views(detach(split(entry.u(), program)), semantics)
    return [format_world_view(w) for w in result]


def _normalize(texts: list[str]) -> list[str]:
    # re-print expected values so spacing and atom order in the file do not matter
    return sorted(format_world_view(parse_world_view(t)) for t in texts)


def _check(entry: CorpusEntry, key: str, expected) -> CheckResult:
    op, _, sem = key.partition("/")
    actual: object
    if op == "solve":
        actual = sorted(format_interpretation(s) for s in answer_sets(entry.parsed()))
        expected = sorted(
            format_interpretation(parse_atoms(t.strip().strip("{}"))) for t in expected
        )
    elif op == "stratified":
        actual = stratify(entry.parsed()).stratified
    elif op == "fixpoint":
        semantics = Semantics.parse(sem)
        actual = {t: is_world_view(entry.parsed(), parse_world_view(t), semantics) for t in expected}
    elif op in _COLLECTIONS:
        actual = sorted(_collection(entry, op, Semantics.parse(sem)))
        expected = _normalize(expected)
    else:
        raise MalformedCorpus(f"{entry.name}: unknown check {key!r}")
    passed = actual == expected
    detail = "" if passed else f"expected {expected}, got {actual}"
    return CheckResult(entry.name, key, passed, detail)


def run_entry(entry: CorpusEntry) -> list[CheckResult]:
    results = []
    for key, expected in sorted(entry.expected.items()):
        try:
            results.append(_check(entry, key, expected))
        except MalformedCorpus:
            raise
        except (ElpError, ValueError) as exc:
            results.append(CheckResult(entry.name, key, False, f"error: {exc}"))
    return results


def corpus_run(
    directory: str | Path | None = None,
    *,
    on_result: Callable[[CheckResult], None] | None = None,
) -> list[CheckResult]:
    """Run every check of every entry; ``on_result`` sees each result as it lands."""
    results = []
    for entry in load_corpus(directory):
        for result in run_entry(entry):
            if on_result is not None:
                on_result(result)
            results.append(result)
    return results
