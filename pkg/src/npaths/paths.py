"""Standard paths: brute-force enumeration, tableaux, and exact counts.

A standard path of length ``n`` is a saturated chain ``() < P_1 < ... < P_n``
in ``N`` with ``weight(P_i) = i``.  Brute-force enumeration is the ground
truth every generating function in this package is checked against.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .poset import Composition, sort_key


@lru_cache(maxsize=1 << 16)
def _raw_covers(p: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Covers of ``p`` in N as plain tuples, deduplicated, in ``sort_key`` order."""
    out = {(1,) + p, p + (1,)}
    for i in range(len(p)):
        out.add(p[:i] + (p[i] + 1,) + p[i + 1 :])
    return tuple(sorted(out))


def is_cover_N(p: Sequence[int], q: Sequence[int]) -> bool:
    p, q = tuple(p), tuple(q)
    if len(q) == len(p) + 1:
        return q == (1,) + p or q == p + (1,)
    if len(q) != len(p):
        return False
    diff = [i for i in range(len(p)) if p[i] != q[i]]
    return len(diff) == 1 and q[diff[0]] == p[diff[0]] + 1


@dataclass(frozen=True)
class StandardPath:
    steps: tuple[Composition, ...]

    @classmethod
    def from_steps(cls, steps: Iterable[Iterable[int]]) -> StandardPath:
        path = cls(tuple(Composition(s) for s in steps))
        path.validate()
        return path

    def validate(self) -> None:
        if not self.steps or self.steps[0] != ():
            raise ValueError("a standard path starts at the empty composition")
        for i, (p, q) in enumerate(zip(self.steps, self.steps[1:])):
            if not is_cover_N(p, q):
                raise ValueError(f"step {i}: {q} does not cover {p} in N")

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def endpoint(self) -> Composition:
        return self.steps[-1]

    def __iter__(self):
        return iter(self.steps)


class TableauError(ValueError):
    """Tableau that is not the image of any standard path."""


class IllegalPeel(TableauError):
    def __init__(self, label: int, message: str):
        super().__init__(message)
        self.label = label


class NonCanonical(TableauError):
    pass


@dataclass(frozen=True)
class Tableau:
    """Columns listed left to right, each read bottom to top."""

    columns: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, columns: Iterable[Iterable[int]]) -> Tableau:
        return cls(tuple(tuple(c) for c in columns))

    @property
    def shape(self) -> Composition:
        return Composition(len(c) for c in self.columns)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return max((len(c) for c in self.columns), default=0)

    def bottom_row(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.columns)

    def check_labels(self) -> None:
        labels = sorted(x for c in self.columns for x in c)
        if labels != list(range(1, len(labels) + 1)):
            raise TableauError(f"labels are not 1..n: {labels}")
        for c in self.columns:
            if not c:
                raise TableauError("empty column")
            if any(a >= b for a, b in zip(c, c[1:])):
                raise TableauError(f"column {c} is not increasing")


def enumerate_paths(n: int) -> list[StandardPath]:
    """Every standard path of length ``n``, depth first in ``sort_key`` order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out: list[StandardPath] = []
    stack: list[tuple[int, ...]] = [()]

    def dfs(depth: int) -> None:
        if depth == n:
            out.append(StandardPath(tuple(Composition(s) for s in stack)))
            return
        for q in _raw_covers(stack[-1]):
            stack.append(q)
            dfs(depth + 1)
            stack.pop()

    dfs(0)
    return out


def iter_path_endpoints(n: int, prefix: tuple[tuple[int, ...], ...] = ((),)) -> Iterator[tuple[int, ...]]:
    """Endpoint of every standard path of length ``n`` extending ``prefix``.

    Walks each path one by one without memoization; used as the brute-force
    counter where materializing paths would not fit in memory.
    """
    start = prefix[-1]
    remaining = n - sum(start)
    if remaining < 0:
        return
    stack = [iter(_raw_covers(start))] if remaining else []
    if not remaining:
        yield start
        return
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            continue
        if len(stack) == remaining:
            yield nxt
        else:
            stack.append(iter(_raw_covers(nxt)))


def brute_force_endpoint_counts(n: int, workers: int = 1) -> dict[Composition, int]:
    """Path counts by endpoint, found by walking every path.

    With ``workers > 1`` the walk is split by the first steps that land on
    weight 2 and merged by addition, so the result does not depend on
    scheduling.
    """
    if workers <= 1 or n < 3:
        counts = Counter(iter_path_endpoints(n))
    else:
        from concurrent.futures import ProcessPoolExecutor

        prefixes = [((), (1,), q) for q in _raw_covers((1,))]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_from_prefix, [(n, p) for p in prefixes]):
                counts.update(part)
    return {Composition(p): c for p, c in sorted(counts.items(), key=lambda kv: sort_key(kv[0]))}


def _count_from_prefix(args) -> Counter:
    n, prefix = args
    return Counter(iter_path_endpoints(n, prefix))


def path_to_tableau(path: StandardPath | Sequence[Sequence[int]]) -> Tableau:
    """Label each cell by the step that created it.

    Going from ``m - 1`` ones to ``m`` ones counts as a left insertion.
    """
    steps = [tuple(s) for s in path]
    columns: list[list[int]] = []
    for m in range(1, len(steps)):
        prev, cur = steps[m - 1], steps[m]
        if len(cur) == len(prev) + 1:
            if cur[1:] == prev and cur[0] == 1:
                columns.insert(0, [m])
            elif cur[:-1] == prev and cur[-1] == 1:
                columns.append([m])
            else:
                raise ValueError(f"step {m}: {cur} does not cover {prev} in N")
        elif len(cur) == len(prev):
            diff = [i for i in range(len(prev)) if prev[i] != cur[i]]
            if len(diff) != 1 or cur[diff[0]] != prev[diff[0]] + 1:
                raise ValueError(f"step {m}: {cur} does not cover {prev} in N")
            columns[diff[0]].append(m)
        else:
            raise ValueError(f"step {m}: {cur} does not cover {prev} in N")
    return Tableau.of(columns)


def tableau_to_path(t: Tableau | Sequence[Sequence[int]]) -> StandardPath:
    """Invert :func:`path_to_tableau` by peeling the labels ``n, n-1, ..., 1``.

    Raises :class:`IllegalPeel` when a label can not be removed under the
    cover rules of N, and :class:`NonCanonical` when the shapes reconstruct
    but the tableau breaks the left-insertion convention.
    """
    if not isinstance(t, Tableau):
        t = Tableau.of(t)
    t.check_labels()
    cols = [list(c) for c in t.columns]
    shapes = [tuple(len(c) for c in cols)]
    for m in range(t.size, 0, -1):
        idx = next(i for i, c in enumerate(cols) if c[-1] == m)
        if len(cols[idx]) >= 2:
            cols[idx].pop()
        elif idx == 0 or idx == len(cols) - 1:
            del cols[idx]
        else:
            raise IllegalPeel(m, f"label {m} is a single cell in an inner column")
        shapes.append(tuple(len(c) for c in cols))
    path = StandardPath(tuple(Composition(s) for s in reversed(shapes)))
    if path_to_tableau(path) != t:
        raise NonCanonical(f"{t.columns} reconstructs a path whose tableau differs")
    return path


def check_necessary_condition(t: Tableau | Sequence[Sequence[int]]) -> bool:
    """Whenever ``1..k`` fill a contiguous stretch of the bottom row, it reads ``k, ..., 1``."""
    if not isinstance(t, Tableau):
        t = Tableau.of(t)
    row = t.bottom_row()
    pos = {label: i for i, label in enumerate(row)}
    k = 1
    while k in pos:
        places = [pos[x] for x in range(1, k + 1)]
        if max(places) - min(places) == k - 1:
            if [row[i] for i in range(min(places), max(places) + 1)] != list(range(k, 0, -1)):
                return False
        k += 1
    return True


@lru_cache(maxsize=None)
def _endpoint_layer(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    if n == 0:
        return (((), 1),)
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for p, c in _endpoint_layer(n - 1):
        for q in _raw_covers(p):
            acc[q] += c
    return tuple(sorted(acc.items(), key=lambda kv: sort_key(kv[0])))


def count_by_endpoint(n: int) -> dict[Composition, int]:
    """Number of standard paths ending at each composition of ``n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return {Composition(p): c for p, c in _endpoint_layer(n)}


def count_by_stats(n: int, height_bound: int | None = None) -> dict[tuple[int, int], int]:
    """Counts keyed by ``(ones, parts >= 2)``, optionally only for endpoints of bounded height."""
    out: dict[tuple[int, int], int] = defaultdict(int)
    for p, c in _endpoint_layer(n):
        if height_bound is not None and max(p, default=0) > height_bound:
            continue
        ones = sum(1 for x in p if x == 1)
        out[(ones, len(p) - ones)] += c
    return dict(sorted(out.items(), key=lambda kv: (kv[0][1], kv[0][0])))


def count_grouped(n: int, group_by: str, height_bound: int | None = None) -> dict:
    """Aggregate endpoint counts by ``endpoint``, ``stats``, ``width`` or ``height``."""
    if group_by == "stats":
        return count_by_stats(n, height_bound)
    table = {
        p: c
        for p, c in count_by_endpoint(n).items()
        if height_bound is None or p.height <= height_bound
    }
    if group_by == "endpoint":
        return table
    if group_by in ("width", "height"):
        out: dict[int, int] = defaultdict(int)
        for p, c in table.items():
            out[getattr(p, group_by)] += c
        return dict(sorted(out.items()))
    raise ValueError(f"unknown grouping {group_by!r}")


def total_paths(n: int) -> int:
    return sum(c for _, c in _endpoint_layer(n))
