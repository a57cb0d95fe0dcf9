"""Characters by enumeration, the character recurrence system, and the solver.

The enumeration route is the oracle: it counts admissible configurations
grade by grade.  The recurrence system ties the alternating sum of region
characters to a shifted cyclic character; the coefficient solver evaluates
the same characters by stripping the degree-one layer, with memoization, and
is checked against the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .configs import (
    Composition,
    Weight,
    DEFAULT_OUTPUT_CAP,
    compositions,
    enumerate_by_grade,
    weight_vectors,
)
from .indexsets import all_index_sets, apply_index_set, cyclic_shift
from .qseries import (
    Character,
    QPolynomial,
    first_mismatch,
    geometric_factor,
    shift_substitute,
)


def compute_character(
    K: Composition, trunc: int, cap: int = DEFAULT_OUTPUT_CAP
) -> Character:
    """Character of the admissible-configuration space, by full enumeration.

    The coefficient of q^d at weight n counts the admissible configurations
    for K with degree d and weight n.  This is the oracle against which the
    recurrence and the solver are verified.
    """
    rows: dict[Weight, list[int]] = {}
    for (d, n), cfgs in enumerate_by_grade(K, trunc, cap).items():
        rows.setdefault(n, [0] * (trunc + 1))[d] = len(cfgs)
    table = {n: QPolynomial(trunc, tuple(c)) for n, c in rows.items()}
    return Character(K, trunc, table)


class OracleStore:
    """Lazy per-composition store of enumerated characters at one truncation."""

    def __init__(self, trunc: int, cap: int = DEFAULT_OUTPUT_CAP):
        self.trunc = trunc
        self.cap = cap
        self._store: dict[tuple[int, ...], Character] = {}

    def get(self, K: Composition) -> Character:
        ch = self._store.get(K.parts)
        if ch is None:
            ch = compute_character(K, self.trunc, self.cap)
            self._store[K.parts] = ch
        return ch


def recurrence_lhs(
    K: Composition, trunc: int, store: OracleStore | None = None
) -> Character:
    """Alternating sum over the index family of the region characters.

    The empty set contributes the character of K itself with sign +1; an
    index set of size t contributes the character of its derived composition
    with sign (-1)^t.
    """
    store = store or OracleStore(trunc)
    total: Character | None = None
    for I in all_index_sets(K):
        term = store.get(apply_index_set(K, I))
        if total is None:
            total = term
        elif len(I) % 2:
            total = total - term
        else:
            total = total + term
    assert total is not None
    return Character(K, total.trunc, total.table)


def recurrence_rhs(
    K: Composition, trunc: int, store: OracleStore | None = None
) -> Character:
    """Shift-substituted character of the cyclic shift of K."""
    store = store or OracleStore(trunc)
    return shift_substitute(store.get(cyclic_shift(K)), K)


@dataclass
class RecurrenceCheck:
    composition: tuple[int, ...]
    index_sets: list[tuple[int, ...]]
    ok: bool
    mismatch: tuple[Weight, int, int, int] | None

    def to_jsonable(self):
        out = {
            "K": list(self.composition),
            "index_sets": [list(I) for I in self.index_sets],
            "ok": self.ok,
        }
        if self.mismatch is None:
            out["mismatch"] = None
        else:
            n, d, lhs, rhs = self.mismatch
            out["mismatch"] = {"n": list(n), "q_power": d, "lhs": lhs, "rhs": rhs}
        return out


@dataclass
class VerificationReport:
    """Per-composition outcome of the recurrence system at one truncation."""

    rank: int
    level: int
    trunc: int
    checks: list[RecurrenceCheck] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_jsonable(self):
        return {
            "ell": self.rank,
            "k": self.level,
            "M": self.trunc,
            "all_ok": self.all_ok,
            "checks": [c.to_jsonable() for c in self.checks],
        }


def verify_recurrence(
    rank: int,
    level: int,
    trunc: int,
    only: Composition | None = None,
    cap: int = DEFAULT_OUTPUT_CAP,
) -> VerificationReport:
    """Check the recurrence for every composition of the level (or one of them).

    Both sides are built from enumerated characters and compared coefficient
    by coefficient through the truncation; a failure records the first
    mismatching (weight, q-power, lhs, rhs).
    """
    store = OracleStore(trunc, cap)
    report = VerificationReport(rank, level, trunc)
    targets = [only] if only is not None else compositions(rank, level)
    for K in targets:
        lhs = recurrence_lhs(K, trunc, store)
        rhs = recurrence_rhs(K, trunc, store)
        bad = first_mismatch(lhs, rhs)
        report.checks.append(
            RecurrenceCheck(K.parts, all_index_sets(K), bad is None, bad)
        )
    return report


def enumerate_first_blocks(K: Composition) -> list[tuple[int, ...]]:
    """All rank-length blocks within the one-block initial conditions of K.

    Finite since the block total is bounded by k_0 + ... + k_{l-1}; ordered
    by (total, lexicographic).
    """
    bounds = K.initial_bounds()
    out: list[tuple[int, ...]] = []

    def walk(pos, prefix, s):
        if pos == K.rank:
            out.append(tuple(prefix))
            return
        for a in range(bounds[pos] - s + 1):
            prefix.append(a)
            walk(pos + 1, prefix, s + a)
            prefix.pop()

    walk(0, [], 0)
    out.sort(key=lambda b: (sum(b), b))
    return out


def block_satisfies_initial(block: tuple[int, ...], K: Composition) -> bool:
    """One-block initial conditions: partial sums of the block bounded by those of K."""
    bounds = K.initial_bounds()
    s = 0
    for j, a in enumerate(block):
        s += a
        if s > bounds[j]:
            return False
    return True


def block_composition(K: Composition, block: tuple[int, ...]) -> Composition:
    """Composition left after stripping a first block: (k - |a|, a_0, ..., a_{l-1})."""
    return Composition((K.level() - sum(block),) + tuple(block))


class CoefficientSolver:
    """Memoized evaluation of character coefficients through a fixed truncation.

    For weight total n > 0 the coefficient at K factors as

        (q^n + q^{2n} + ...) * (  sum over nonzero first blocks a inside the
                                  initial conditions of K of the coefficient
                                  at (k - |a|, a_0, ..., a_{l-1}), n - a
                                + q^n * the same sum over nonzero blocks with
                                  total <= k that violate K's initial
                                  conditions ),

    where terms whose shifted weight has a negative component vanish.  Every
    recursive call strictly lowers the weight total, so memoized recursion
    terminates.  The memo table is confined to this instance; share one
    instance across lookups of the same truncation, or use one per thread.
    """

    def __init__(self, trunc: int):
        self.trunc = trunc
        self._memo: dict[tuple[tuple[int, ...], Weight], QPolynomial] = {}
        self._blocks: dict[tuple[int, int], list[tuple[int, ...]]] = {}

    def _relaxed_blocks(self, rank: int, level: int) -> list[tuple[int, ...]]:
        # blocks admissible for (k, 0, ..., 0): total <= level
        key = (rank, level)
        if key not in self._blocks:
            relaxed = Composition((level,) + (0,) * rank)
            self._blocks[key] = enumerate_first_blocks(relaxed)
        return self._blocks[key]

    def coefficient(self, K: Composition, n: Weight) -> QPolynomial:
        n = tuple(n)
        if len(n) != K.rank:
            raise ValueError(f"weight {n} has wrong length for rank {K.rank}")
        if any(c < 0 for c in n):
            return QPolynomial.zero(self.trunc)
        total = sum(n)
        if total == 0:
            return QPolynomial.one(self.trunc)
        key = (K.parts, n)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        inner = QPolynomial.zero(self.trunc)
        outer = QPolynomial.zero(self.trunc)
        for block in self._relaxed_blocks(K.rank, K.level()):
            size = sum(block)
            if size == 0:
                continue
            shifted = tuple(a - b for a, b in zip(n, block))
            if any(c < 0 for c in shifted):
                continue
            term = self.coefficient(block_composition(K, block), shifted)
            if block_satisfies_initial(block, K):
                inner = inner + term
            else:
                outer = outer + term
        poly = geometric_factor(total, self.trunc) * (inner + outer.shift(total))
        self._memo[key] = poly
        return poly

    def character(self, K: Composition) -> Character:
        """Assemble coefficients over all weights with total <= the truncation.

        Heavier weights have q-valuation past the truncation and contribute
        nothing.  Zero coefficients are dropped, matching the sparse oracle
        table exactly.
        """
        table: dict[Weight, QPolynomial] = {}
        for n in weight_vectors(K.rank, self.trunc):
            poly = self.coefficient(K, n)
            if not poly.is_zero():
                table[n] = poly
        return Character(K, self.trunc, table)


def solve_coefficient(K: Composition, n: Weight, trunc: int) -> QPolynomial:
    return CoefficientSolver(trunc).coefficient(K, n)


def solve_character(K: Composition, trunc: int) -> Character:
    return CoefficientSolver(trunc).character(K)


def verify_equality_identity(
    K: Composition, n: Weight, trunc: int, store: OracleStore | None = None
) -> bool:
    """Oracle check of the layer-stripping identity at one weight.

    The enumerated coefficient at (K, n) must equal q^{|n|} times the sum of
    enumerated coefficients at (k - |a|, a_0, ..., a_{l-1}), n - a over all
    first blocks a inside the initial conditions of K, the zero block
    included (which makes this a verification identity, not a solver: for
    K = (k, 0, ..., 0) the zero-block term is the left side itself).
    """
    store = store or OracleStore(trunc)
    n = tuple(n)
    lhs = store.get(K).get(n)
    acc = QPolynomial.zero(trunc)
    for block in enumerate_first_blocks(K):
        shifted = tuple(a - b for a, b in zip(n, block))
        if any(c < 0 for c in shifted):
            continue
        acc = acc + store.get(block_composition(K, block)).get(shifted)
    return lhs == acc.shift(sum(n))


def block_cancellation_count(K: Composition, block: tuple[int, ...]) -> int:
    """Signed count of nonempty index sets whose derived composition admits the block.

    Size-t sets count with sign (-1)^(t-1); for any block inside the initial
    conditions of K other than (k_0, ..., k_{l-1}) the total is 1.
    """
    total = 0
    for I in all_index_sets(K):
        if not I:
            continue
        if block_satisfies_initial(block, apply_index_set(K, I)):
            total += 1 if len(I) % 2 else -1
    return total
