"""Independent brute-force oracles the library is checked against.

Nothing here shares code paths with the package: enumeration goes through
itertools.product instead of the pruned search, partitions are built by
direct recursion, and ranks come from rational Gaussian elimination.
"""

import itertools
from fractions import Fraction

from admchar import Composition, Configuration, degree, is_admissible


def naive_admissible(K: Composition, max_degree: int) -> set[tuple[int, ...]]:
    """Every admissible entry tuple of degree <= max_degree, by exhaustion.

    Enumerates the full product of per-position ranges and filters; only
    usable for tiny instances.
    """
    rank = K.rank
    positions = rank * max_degree
    ranges = [range(max_degree // (p // rank + 1) + 1) for p in range(positions)]
    found = set()
    for raw in itertools.product(*ranges):
        cfg = Configuration(raw)
        if degree(cfg, rank) <= max_degree and is_admissible(cfg, K):
            found.add(cfg.entries)
    return found


def gap_partitions(total: int, min_part: int = 1) -> list[tuple[int, ...]]:
    """Partitions of `total` into parts pairwise differing by >= 2.

    Parts are listed increasing; `min_part` bounds the smallest part.
    The empty partition counts for total 0.
    """
    out = []

    def walk(remaining, smallest, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        part = smallest
        while part <= remaining:
            acc.append(part)
            walk(remaining - part, part + 2, acc)
            acc.pop()
            part += 1

    walk(total, min_part, [])
    return out


def rational_rank(rows) -> int:
    """Rank by plain Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, nrows):
            if m[r][col]:
                f = m[r][col] / pv
                for c in range(col, ncols):
                    m[r][c] -= f * m[rank][c]
        rank += 1
    return rank
