"""OEIS b-files: parsing, bundled offline fixtures, optional download, term comparison."""

from __future__ import annotations

import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

_ID_RE = re.compile(r"^A(\d{6})$")


class OeisError(Exception):
    pass


class FixtureMissing(OeisError):
    pass


class BFileError(OeisError):
    pass


class NetworkError(OeisError):
    pass


@dataclass(frozen=True)
class OeisFixture:
    seq_id: str
    offset: int
    terms: tuple[int, ...]

    def term(self, index: int) -> int | None:
        k = index - self.offset
        if 0 <= k < len(self.terms):
            return self.terms[k]
        return None


def normalize_id(seq_id: str) -> str:
    s = seq_id.strip().upper()
    if s.isdigit():
        s = "A" + s.zfill(6)
    if not _ID_RE.match(s):
        raise ValueError(f"not an OEIS A-number: {seq_id!r}")
    return s


def bfile_url(seq_id: str) -> str:
    s = normalize_id(seq_id)
    return f"https://oeis.org/{s}/b{s[1:]}.txt"


def parse_bfile(text: str, seq_id: str) -> OeisFixture:
    """Parse ``index value`` lines; ``#`` comments and blank lines are skipped."""
    indices: list[int] = []
    values: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            idx, val = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
        if indices and idx != indices[-1] + 1:
            raise BFileError(f"line {lineno}: index {idx} does not follow {indices[-1]}")
        indices.append(idx)
        values.append(val)
    if not indices:
        raise BFileError("b-file has no terms")
    return OeisFixture(normalize_id(seq_id), indices[0], tuple(values))


def _cache_path(cache_dir: str | os.PathLike, seq_id: str) -> Path:
    s = normalize_id(seq_id)
    return Path(cache_dir) / f"b{s[1:]}.txt"


def bundled_fixture(seq_id: str) -> OeisFixture:
    s = normalize_id(seq_id)
    name = f"b{s[1:]}.txt"
    try:
        text = resources.files("npaths.data").joinpath(name).read_text()
    except FileNotFoundError:
        raise FixtureMissing(f"no bundled fixture for {s}") from None
    return parse_bfile(text, s)


def fetch_bfile(
    seq_id: str,
    cache_dir: str | os.PathLike | None = None,
    opener: Callable = urllib.request.urlopen,
    timeout: float = 30.0,
) -> OeisFixture:
    """Download a b-file (or reuse the cached copy) and parse it."""
    s = normalize_id(seq_id)
    if cache_dir is not None:
        cached = _cache_path(cache_dir, s)
        if cached.exists():
            return parse_bfile(cached.read_text(), s)
    try:
        with opener(bfile_url(s), timeout=timeout) as resp:
            text = resp.read().decode("utf-8")
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkError(f"could not fetch {bfile_url(s)}: {exc}") from exc
    fixture = parse_bfile(text, s)
    if cache_dir is not None:
        cached.parent.mkdir(parents=True, exist_ok=True)
        cached.write_text(text)
    return fixture


def load_fixture(
    seq_id: str,
    mode: str = "offline",
    cache_dir: str | os.PathLike | None = None,
    opener: Callable = urllib.request.urlopen,
) -> OeisFixture:
    """Offline: cached copy, else the bundled fixture.  Online: cache, else download.

    Online failures are raised, never replaced by the bundled data.
    """
    if mode == "offline":
        if cache_dir is not None and _cache_path(cache_dir, seq_id).exists():
            return parse_bfile(_cache_path(cache_dir, seq_id).read_text(), seq_id)
        return bundled_fixture(seq_id)
    if mode == "online":
        return fetch_bfile(seq_id, cache_dir, opener)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class MatchReport:
    seq_id: str
    start: int
    compared: int
    first_mismatch: int | None
    expected: int | None = None
    actual: int | None = None

    @property
    def matched(self) -> bool:
        return self.first_mismatch is None

    def __str__(self) -> str:
        if self.matched:
            return f"{self.seq_id}: {self.compared} terms match from index {self.start}"
        return (
            f"{self.seq_id}: mismatch at index {self.first_mismatch}: "
            f"expected {self.expected}, got {self.actual}"
        )


def compare_terms(fixture: OeisFixture, produced: Sequence[int], start: int | None = None) -> MatchReport:
    """Align ``produced[0]`` with index ``start`` (default: the fixture offset) and compare."""
    start = fixture.offset if start is None else start
    for k, val in enumerate(produced):
        idx = start + k
        expected = fixture.term(idx)
        if expected != val:
            return MatchReport(fixture.seq_id, start, k, idx, expected, val)
    return MatchReport(fixture.seq_id, start, len(produced), None)


def oeis_check(
    seq_id: str,
    produced: Sequence[int],
    mode: str = "offline",
    start: int | None = None,
    cache_dir: str | os.PathLike | None = None,
    opener: Callable = urllib.request.urlopen,
) -> MatchReport:
    fixture = load_fixture(seq_id, mode, cache_dir, opener)
    return compare_terms(fixture, produced, start)
