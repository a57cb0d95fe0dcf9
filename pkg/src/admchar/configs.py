"""Compositions, exponent configurations, admissibility, and enumeration.

A configuration is a finite sequence (a_0, a_1, ...) of nonnegative integers;
the entry at position p = l*(j-1) + r - 1 is the exponent of the color-r
generator at degree j (1 <= r <= l, j >= 1).  Admissibility for a composition
K = (k_0, ..., k_l) of the level k means:

  initial conditions:    a_0 + ... + a_j <= k_0 + ... + k_j   for j < l,
  difference conditions: every window of l+1 consecutive entries sums to <= k.

All functions here are pure and operate on immutable values, so they are safe
to call concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ResourceLimitError

DEFAULT_OUTPUT_CAP = 2_000_000

Weight = tuple[int, ...]


@dataclass(frozen=True)
class Composition:
    """Nonnegative multiplicities (k_0, ..., k_l) of the l+1 fundamental weights.

    The rank l and the level k_0 + ... + k_l are derived, never stored.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise ValueError("a composition needs at least two parts (rank >= 1)")
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in composition {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @property
    def rank(self) -> int:
        return len(self.parts) - 1

    def level(self) -> int:
        return sum(self.parts)

    def initial_bounds(self) -> tuple[int, ...]:
        """Partial sums k_0 + ... + k_j for j = 0..rank-1."""
        return tuple(itertools.accumulate(self.parts[: self.rank]))

    def first_block(self) -> tuple[int, ...]:
        """The prefix (k_0, ..., k_{l-1})."""
        return self.parts[: self.rank]


@dataclass(frozen=True)
class Configuration:
    """Exponent sequence in canonical form: trailing zeros are trimmed."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if any(a < 0 for a in entries):
            raise ValueError(f"negative exponent in {entries}")
        end = len(entries)
        while end and entries[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "entries", entries[:end])

    def __len__(self) -> int:
        return len(self.entries)

    def leading_block(self, rank: int) -> tuple[int, ...]:
        """First `rank` entries, zero-padded."""
        e = self.entries
        return tuple(e[i] if i < len(e) else 0 for i in range(rank))


EMPTY = Configuration(())


def degree(cfg: Configuration, rank: int) -> int:
    """Total degree: a particle at position p counts (p // rank) + 1."""
    return sum((p // rank + 1) * a for p, a in enumerate(cfg.entries))


def weight(cfg: Configuration, rank: int) -> Weight:
    """Color weights (n_1, ..., n_l); position p carries color (p % rank) + 1."""
    n = [0] * rank
    for p, a in enumerate(cfg.entries):
        n[p % rank] += a
    return tuple(n)


def satisfies_difference(cfg: Configuration, rank: int, level: int) -> bool:
    """Every window of rank+1 consecutive entries sums to <= level.

    Windows past the support are zero-padded and hold vacuously.
    """
    e = cfg.entries
    width = rank + 1
    return all(sum(e[i : i + width]) <= level for i in range(len(e)))


def satisfies_initial(cfg: Configuration, K: Composition) -> bool:
    """Partial sums a_0 + ... + a_j bounded by k_0 + ... + k_j for j < rank."""
    bounds = K.initial_bounds()
    s = 0
    for j in range(K.rank):
        if j < len(cfg.entries):
            s += cfg.entries[j]
        if s > bounds[j]:
            return False
    return True


def is_admissible(cfg: Configuration, K: Composition) -> bool:
    return satisfies_initial(cfg, K) and satisfies_difference(cfg, K.rank, K.level())


def _dfs_configurations(rank, max_degree, cap, level, bounds):
    # Depth-first over positions 0 .. rank*max_degree - 1 with a remaining
    # degree budget; a particle past that range would already exceed the
    # budget.  `level`/`bounds` of None disable the difference/initial
    # pruning, giving the unrestricted universe.
    positions = rank * max_degree
    out: list[Configuration] = []
    entries: list[int] = []

    def emit():
        if len(out) >= cap:
            raise ResourceLimitError(
                f"enumeration exceeded the output cap of {cap} configurations"
            )
        out.append(Configuration(tuple(entries)))

    def walk(pos, budget):
        if pos == positions or budget == 0:
            emit()
            return
        deg = pos // rank + 1
        hi = budget // deg
        if level is not None:
            hi = min(hi, level - sum(entries[max(0, pos - rank) : pos]))
        if bounds is not None and pos < rank:
            hi = min(hi, bounds[pos] - sum(entries[:pos]))
        for a in range(hi + 1):
            entries.append(a)
            walk(pos + 1, budget - a * deg)
            entries.pop()

    walk(0, max_degree)
    out.sort(key=lambda c: (degree(c, rank), c.entries))
    return out


def enumerate_admissible(
    K: Composition, max_degree: int, cap: int = DEFAULT_OUTPUT_CAP
) -> list[Configuration]:
    """All admissible configurations of degree <= max_degree for K.

    Deterministic total order: by degree, then lexicographic on entries.
    Raises ResourceLimitError past `cap` results.
    """
    return _dfs_configurations(K.rank, max_degree, cap, K.level(), K.initial_bounds())


def enumerate_all_configurations(
    rank: int, max_degree: int, cap: int = DEFAULT_OUTPUT_CAP
) -> list[Configuration]:
    """Every configuration of degree <= max_degree, admissible or not."""
    return _dfs_configurations(rank, max_degree, cap, None, None)


def enumerate_by_grade(
    K: Composition, max_degree: int, cap: int = DEFAULT_OUTPUT_CAP
) -> dict[tuple[int, Weight], list[Configuration]]:
    """Admissible configurations grouped by (degree, weight).

    Grades appear in the order the sorted enumeration first reaches them, and
    each list inherits the enumeration order.
    """
    table: dict[tuple[int, Weight], list[Configuration]] = {}
    for cfg in enumerate_admissible(K, max_degree, cap):
        table.setdefault((degree(cfg, K.rank), weight(cfg, K.rank)), []).append(cfg)
    return table


def compositions(rank: int, level: int) -> list[Composition]:
    """All compositions of `level` into rank+1 nonnegative parts, lexicographic."""
    out = []

    def walk(prefix, remaining, slots):
        if slots == 1:
            out.append(Composition(tuple(prefix) + (remaining,)))
            return
        for p in range(remaining + 1):
            prefix.append(p)
            walk(prefix, remaining - p, slots - 1)
            prefix.pop()

    walk([], level, rank + 1)
    return out


def weight_vectors(rank: int, max_total: int) -> list[Weight]:
    """All weights with rank components and total <= max_total, by (total, lex)."""
    out: list[Weight] = []
    for total in range(max_total + 1):

        def walk(prefix, remaining, slots):
            if slots == 1:
                out.append(tuple(prefix) + (remaining,))
                return
            for p in range(remaining + 1):
                prefix.append(p)
                walk(prefix, remaining - p, slots - 1)
                prefix.pop()

        walk([], total, rank)
    return out
