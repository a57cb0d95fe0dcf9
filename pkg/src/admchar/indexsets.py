"""Index-set families, derived compositions, and admissibility regions.

For a composition K the family D(K) collects the subsets of {0, ..., l-1}
supported on nonzero parts of K, graded by size.  Selecting an index set I
derives a new composition by moving one unit from each selected part to its
successor; the region of I is the set of configurations admissible for that
derived composition.  The sharp region of B keeps exactly the configurations
of B's region that escape every strictly larger region.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass, field

from .configs import (
    Composition,
    Configuration,
    enumerate_all_configurations,
    compositions,
    is_admissible,
    satisfies_difference,
    DEFAULT_OUTPUT_CAP,
)
from .errors import InvalidIndexSetError

IndexSet = tuple[int, ...]


def validate_index_set(K: Composition, I: IndexSet) -> None:
    """Raise unless I is strictly increasing, in range, and supported on nonzero parts of K."""
    prev = -1
    for i in I:
        if not 0 <= i < K.rank:
            raise InvalidIndexSetError(f"index {i} outside 0..{K.rank - 1}")
        if i <= prev:
            raise InvalidIndexSetError(f"index set {I} is not strictly increasing")
        if K.parts[i] == 0:
            raise InvalidIndexSetError(f"index {i} selects a zero part of {K.parts}")
        prev = i


def active_indices(K: Composition) -> IndexSet:
    """Indices i < rank with k_i != 0: the largest valid index set."""
    return tuple(i for i in range(K.rank) if K.parts[i])


def active_count(K: Composition) -> int:
    """Number of nonzero parts among k_0, ..., k_{l-1}."""
    return len(active_indices(K))


def index_family(K: Composition) -> dict[int, list[IndexSet]]:
    """All valid index sets grouped by size, lexicographic within each size.

    Size 0 holds only the empty set; the top size holds the single maximal set.
    """
    base = active_indices(K)
    return {
        t: [tuple(c) for c in itertools.combinations(base, t)]
        for t in range(len(base) + 1)
    }


def all_index_sets(K: Composition) -> list[IndexSet]:
    """The family flattened: sizes ascending, lexicographic within a size."""
    fam = index_family(K)
    return [I for t in sorted(fam) for I in fam[t]]


def index_family_jsonable(K: Composition) -> dict[str, list[list[int]]]:
    """The family as a JSON object keyed by size."""
    return {str(t): [list(I) for I in sets] for t, sets in index_family(K).items()}


def apply_index_set(K: Composition, I: IndexSet) -> Composition:
    """Derived composition: each selected part drops by one, its successor gains one.

    Level and rank are preserved; adjacent selections compose (a part both
    selected and fed by its predecessor nets to no change).
    """
    validate_index_set(K, I)
    parts = list(K.parts)
    for i in I:
        parts[i] -= 1
        parts[i + 1] += 1
    return Composition(tuple(parts))


def cyclic_shift(K: Composition) -> Composition:
    """(k_l, k_0, ..., k_{l-1}); rank+1 iterations give back K."""
    return Composition((K.parts[-1],) + K.parts[:-1])


def in_region(cfg: Configuration, K: Composition, A: IndexSet) -> bool:
    """Membership in the admissibility region of A.

    Difference conditions at level(K), plus the initial conditions of K
    strengthened by one at every j in A.  Agrees pointwise with
    is_admissible(cfg, apply_index_set(K, A)).
    """
    validate_index_set(K, A)
    if not satisfies_difference(cfg, K.rank, K.level()):
        return False
    bounds = K.initial_bounds()
    aset = set(A)
    s = 0
    for j in range(K.rank):
        if j < len(cfg.entries):
            s += cfg.entries[j]
        if s > bounds[j] - (1 if j in aset else 0):
            return False
    return True


def in_region_via_composition(cfg: Configuration, K: Composition, A: IndexSet) -> bool:
    """Second route to the same predicate, through the derived composition."""
    validate_index_set(K, A)
    return is_admissible(cfg, apply_index_set(K, A))


def in_sharp_region(cfg: Configuration, K: Composition, B: IndexSet) -> bool:
    """Region membership with partial-sum equality forced off B.

    cfg lies in B's region and a_0 + ... + a_j = k_0 + ... + k_j holds at
    every active index j outside B.
    """
    if not in_region(cfg, K, B):
        return False
    bounds = K.initial_bounds()
    bset = set(B)
    s = 0
    for j in range(K.rank):
        if j < len(cfg.entries):
            s += cfg.entries[j]
        if j in bset or not K.parts[j]:
            continue
        if s != bounds[j]:
            return False
    return True


def in_sharp_region_by_exclusion(cfg: Configuration, K: Composition, B: IndexSet) -> bool:
    """Definitional route: in B's region but in no strictly larger region."""
    if not in_region(cfg, K, B):
        return False
    bset = set(B)
    return not any(
        in_region(cfg, K, C)
        for C in all_index_sets(K)
        if bset < set(C)
    )


def insertion_sign(I: IndexSet, i: int) -> int:
    """(-1)**p where p is the rank of i within the sorted union I + {i}."""
    if i in I:
        raise InvalidIndexSetError(f"index {i} already present in {I}")
    return -1 if bisect_left(I, i) % 2 else 1


@dataclass
class LemmaViolation:
    composition: tuple[int, ...]
    check: str
    configuration: tuple[int, ...]
    detail: str

    def to_jsonable(self):
        return {
            "K": list(self.composition),
            "check": self.check,
            "configuration": list(self.configuration),
            "detail": self.detail,
        }


@dataclass
class LemmaReport:
    """Outcome of the region lemma suite over an exhaustive configuration universe."""

    rank: int
    level: int
    max_degree: int
    compositions_checked: int = 0
    configurations_checked: int = 0
    checks: int = 0
    violations: list[LemmaViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_jsonable(self):
        return {
            "ell": self.rank,
            "k": self.level,
            "max_degree": self.max_degree,
            "compositions_checked": self.compositions_checked,
            "configurations_checked": self.configurations_checked,
            "checks": self.checks,
            "ok": self.ok,
            "violations": [v.to_jsonable() for v in self.violations],
        }


def run_lemma_suite(
    rank: int, level: int, max_degree: int, cap: int = DEFAULT_OUTPUT_CAP
) -> LemmaReport:
    """Check the structural region lemmas on every configuration of bounded degree.

    For every composition of the level and every configuration (admissible or
    not) of degree <= max_degree:

      * both region routes agree for every index set;
      * monotonicity: A subset of B implies region(B) inside region(A);
      * intersection: region(B1) and region(B2) meet exactly in region(B1 | B2);
      * the two sharp-region routes agree;
      * disjoint cover: a configuration in region(A) lies in exactly one
        sharp region over the supersets of A.
    """
    report = LemmaReport(rank, level, max_degree)
    universe = enumerate_all_configurations(rank, max_degree, cap)
    for K in compositions(rank, level):
        report.compositions_checked += 1
        family = all_index_sets(K)
        for cfg in universe:
            report.configurations_checked += 1
            member = {I: in_region(cfg, K, I) for I in family}
            sharp = {I: in_sharp_region(cfg, K, I) for I in family}

            def fail(check, detail):
                report.violations.append(
                    LemmaViolation(K.parts, check, cfg.entries, detail)
                )

            for I in family:
                report.checks += 1
                if member[I] != in_region_via_composition(cfg, K, I):
                    fail("region-route", f"routes disagree at {I}")
                report.checks += 1
                if sharp[I] != in_sharp_region_by_exclusion(cfg, K, I):
                    fail("sharp-characterization", f"routes disagree at {I}")
            for A, B in itertools.combinations(family, 2):
                aset, bset = set(A), set(B)
                if aset <= bset:
                    report.checks += 1
                    if member[B] and not member[A]:
                        fail("monotonicity", f"{B} holds but {A} fails")
                union = tuple(sorted(aset | bset))
                report.checks += 1
                if (member[A] and member[B]) != member[union]:
                    fail("intersection", f"{A} & {B} vs {union}")
            for A in family:
                if not member[A]:
                    continue
                report.checks += 1
                witnesses = [
                    B for B in family if set(B) >= set(A) and sharp[B]
                ]
                if len(witnesses) != 1:
                    fail("disjoint-cover", f"{A} covered by {witnesses}")
    return report
