"""Named reference polynomials read from a small text corpus.

Each corpus line has the shape ``"<name>" "<source-ref>" := <expression>``
with ``#`` starting a comment line; expressions use the plain syntax of
:mod:`oddpower.parsing`.  The bundled corpus pins the first three family
polynomials and their derivative displays as independently stored text, so
tests can compare computed results against them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib.resources import files
from pathlib import Path
from typing import Iterable

from .bipoly import BiPoly
from .parsing import PolyParseError, parse_poly

__all__ = ["Fixture", "parse_fixture_lines", "load_fixtures"]

_ENTRY_RE = re.compile(r'^"(?P<name>[^"]+)"\s+"(?P<ref>[^"]*)"\s*:=\s*(?P<expr>.+)$')


@dataclass(frozen=True)
class Fixture:
    name: str
    source_ref: str
    poly: BiPoly


def parse_fixture_lines(lines: Iterable[str], origin: str = "<fixtures>") -> dict[str, Fixture]:
    """Parse corpus lines into fixtures keyed by name, preserving file order."""
    fixtures: dict[str, Fixture] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _ENTRY_RE.match(line)
        if match is None:
            raise ValueError(f"{origin}:{lineno}: malformed fixture line: {line!r}")
        name = match.group("name")
        if name in fixtures:
            raise ValueError(f"{origin}:{lineno}: duplicate fixture name {name!r}")
        try:
            poly = parse_poly(match.group("expr"))
        except PolyParseError as exc:
            raise ValueError(f"{origin}:{lineno}: fixture {name!r}: {exc}") from exc
        fixtures[name] = Fixture(name=name, source_ref=match.group("ref"), poly=poly)
    return fixtures


def load_fixtures(path: str | Path | None = None) -> dict[str, Fixture]:
    """Load a fixture corpus; with no path, the bundled reference corpus."""
    if path is None:
        resource = files("oddpower").joinpath("data/reference_fixtures.txt")
        text = resource.read_text(encoding="utf-8")
        origin = "reference_fixtures.txt"
    else:
        text = Path(path).read_text(encoding="utf-8")
        origin = str(path)
    return parse_fixture_lines(text.splitlines(), origin=origin)
