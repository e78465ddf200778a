"""Compositions and the two cover relations on them.

In the poset ``N`` a composition is covered by the compositions obtained by
adding 1 to one part, or by putting a new part 1 at the far left or far
right.  ``Gamma`` additionally allows a new part 1 between any two parts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

POSETS = ("N", "Gamma")


class Composition(tuple):
    """Tuple of positive integers with a few statistics attached."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    width = length

    @property
    def height(self) -> int:
        return max(self, default=0)

    @property
    def ones(self) -> int:
        return sum(1 for p in self if p == 1)

    @property
    def big_parts(self) -> int:
        """Number of parts of size at least 2."""
        return sum(1 for p in self if p >= 2)

    def is_all_ones(self) -> bool:
        return all(p == 1 for p in self)

    def diagram(self) -> list[tuple[int, int]]:
        """Cells ``(i, j)`` with ``1 <= j <= p_i``."""
        return [(i, j) for i, p in enumerate(self, 1) for j in range(1, p + 1)]

    def label(self) -> str:
        """``"112"`` style label, dash-separated once a part exceeds 9, ``"()"`` when empty."""
        if not self:
            return "()"
        if all(p <= 9 for p in self):
            return "".join(map(str, self))
        return "-".join(map(str, self))

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


def sort_key(p: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Deterministic order: by weight, then lexicographically by parts."""
    p = tuple(p)
    return (sum(p), p)


def parse_label(label: str) -> Composition:
    label = label.strip()
    if label in ("()", "", "0"):
        return Composition()
    if "-" in label:
        return Composition(int(x) for x in label.split("-"))
    return Composition(int(ch) for ch in label)


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in ``sort_key`` order."""
    if n == 0:
        yield Composition()
        return

    def rec(rest):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in rec(rest - first):
                yield (first,) + tail

    for parts in rec(n):
        yield Composition(parts)


def compositions_of_length(n: int, k: int) -> Iterator[Composition]:
    if k == 0:
        if n == 0:
            yield Composition()
        return

    def rec(rest, slots):
        if slots == 1:
            yield (rest,)
            return
        for first in range(1, rest - slots + 2):
            for tail in rec(rest - first, slots - 1):
                yield (first,) + tail

    if n >= k:
        for parts in rec(n, k):
            yield Composition(parts)


def covers_N(p: Iterable[int]) -> set[Composition]:
    p = tuple(p)
    out = {Composition((1,) + p), Composition(p + (1,))}
    for i in range(len(p)):
        out.add(Composition(p[:i] + (p[i] + 1,) + p[i + 1 :]))
    return out


def covers_Gamma(p: Iterable[int]) -> set[Composition]:
    p = tuple(p)
    out = covers_N(p)
    for i in range(1, len(p)):
        out.add(Composition(p[:i] + (1,) + p[i:]))
    return out


def covers(poset: str, p: Iterable[int]) -> set[Composition]:
    if poset == "N":
        return covers_N(p)
    if poset == "Gamma":
        return covers_Gamma(p)
    raise ValueError(f"unknown poset {poset!r}; expected one of {POSETS}")


def sorted_covers(poset: str, p: Iterable[int]) -> list[Composition]:
    return sorted(covers(poset, p), key=sort_key)


def leq(poset: str, a: Iterable[int], b: Iterable[int]) -> bool:
    """Whether ``a <= b``, by breadth-first search upward from ``a``."""
    a, b = Composition(a), Composition(b)
    target = b.weight
    if a.weight > target:
        return False
    frontier = {a}
    for _ in range(target - a.weight):
        frontier = {q for p in frontier for q in covers(poset, p)}
    return b in frontier


def to_word(p: Iterable[int]) -> tuple[str, ...]:
    """Letters ``x1 x1 x2`` for ``(1, 1, 2)``."""
    return tuple(f"x{k}" for k in p)


def from_word(word: Iterable[str]) -> Composition:
    parts = []
    for letter in word:
        if not letter.startswith("x"):
            raise ValueError(f"bad letter {letter!r}")
        parts.append(int(letter[1:]))
    return Composition(parts)


@dataclass(frozen=True)
class HasseGraph:
    poset: str
    max_weight: int
    nodes: tuple[Composition, ...]
    edges: tuple[tuple[Composition, Composition], ...] = field(repr=False)

    def edge_set(self) -> set[tuple[Composition, Composition]]:
        return set(self.edges)


def hasse_graph(poset: str, max_weight: int) -> HasseGraph:
    if max_weight < 0:
        raise ValueError("max_weight must be non-negative")
    nodes = [c for n in range(max_weight + 1) for c in compositions(n)]
    nodes.sort(key=sort_key)
    edges = [
        (p, q)
        for p in nodes
        if p.weight < max_weight
        for q in sorted_covers(poset, p)
    ]
    return HasseGraph(poset, max_weight, tuple(nodes), tuple(edges))


def export_dot(graph: HasseGraph) -> str:
    """Graphviz text with one node per composition and one edge per cover."""
    name = "N" if graph.poset == "N" else "Gamma"
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for node in graph.nodes:
        lines.append(f'  "{node.label()}";')
    for p, q in graph.edges:
        lines.append(f'  "{p.label()}" -> "{q.label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

