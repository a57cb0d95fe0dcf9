"""Truncated integer q-polynomials and sparse multivariate character tables.

Coefficients are Python integers (exact, arbitrary precision).  Every value
carries its own truncation order; binary operations are exact through the
minimum of the operands' orders and never pretend to more.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .configs import Composition, Weight
from .errors import RankMismatchError


def canonical_json(obj) -> str:
    """Compact, byte-stable JSON; callers construct dicts in canonical key order."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


@dataclass(frozen=True)
class QPolynomial:
    """Coefficients (c_0, ..., c_M) of a series known exactly through q^M."""

    trunc: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("truncation order must be >= 0")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError(
                f"expected {self.trunc + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, trunc: int) -> "QPolynomial":
        return cls(trunc, (0,) * (trunc + 1))

    @classmethod
    def one(cls, trunc: int) -> "QPolynomial":
        return cls(trunc, (1,) + (0,) * trunc)

    @classmethod
    def q_power(cls, d: int, trunc: int) -> "QPolynomial":
        """The monomial q^d, or zero if it falls beyond the truncation."""
        c = [0] * (trunc + 1)
        if 0 <= d <= trunc:
            c[d] = 1
        return cls(trunc, tuple(c))

    @classmethod
    def from_coeffs(cls, coeffs, trunc: int) -> "QPolynomial":
        c = list(coeffs[: trunc + 1])
        c += [0] * (trunc + 1 - len(c))
        return cls(trunc, tuple(c))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Lowest power with a nonzero coefficient, or None for the zero polynomial."""
        for d, c in enumerate(self.coeffs):
            if c:
                return d
        return None

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        m = min(self.trunc, other.trunc)
        return QPolynomial(
            m, tuple(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1]))
        )

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        m = min(self.trunc, other.trunc)
        return QPolynomial(
            m, tuple(a - b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1]))
        )

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        m = min(self.trunc, other.trunc)
        out = [0] * (m + 1)
        for i, a in enumerate(self.coeffs[: m + 1]):
            if not a:
                continue
            for j in range(m + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return QPolynomial(m, tuple(out))

    def scale(self, c: int) -> "QPolynomial":
        return QPolynomial(self.trunc, tuple(c * a for a in self.coeffs))

    def shift(self, s: int) -> "QPolynomial":
        """Multiply by q^s; powers past the truncation are clipped."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        out = [0] * (self.trunc + 1)
        for d in range(self.trunc + 1 - s):
            out[d + s] = self.coeffs[d]
        return QPolynomial(self.trunc, tuple(out))

    def coefficient(self, d: int) -> int:
        if not 0 <= d <= self.trunc:
            raise ValueError(f"power {d} beyond truncation {self.trunc}")
        return self.coeffs[d]

    def to_jsonable(self):
        return {"M": self.trunc, "coeffs": list(self.coeffs)}


def geometric_factor(n: int, trunc: int) -> QPolynomial:
    """The expansion q^n + q^{2n} + q^{3n} + ... through q^trunc.

    This is q^n / (1 - q^n) as a series; n must be positive (the weight-zero
    base case never reaches this factor).
    """
    if n < 1:
        raise ValueError("geometric_factor needs n >= 1")
    c = [0] * (trunc + 1)
    for d in range(n, trunc + 1, n):
        c[d] = 1
    return QPolynomial(trunc, tuple(c))


def weight_sort_key(n: Weight):
    return (sum(n), n)


@dataclass
class Character:
    """Sparse map weight -> q-polynomial; absent weights read as zero.

    Stored polynomials are nonzero; the table of the character of an
    admissible-configuration space satisfies c_0(0,...,0) = 1 and has
    q-valuation at least the weight total at every key.
    """

    composition: Composition
    trunc: int
    table: dict[Weight, QPolynomial]

    def get(self, n: Weight) -> QPolynomial:
        return self.table.get(tuple(n), QPolynomial.zero(self.trunc))

    def weights(self) -> list[Weight]:
        return sorted(self.table, key=weight_sort_key)

    def _combine(self, other: "Character", sign: int) -> "Character":
        if self.composition.rank != other.composition.rank:
            raise RankMismatchError("characters have different ranks")
        trunc = min(self.trunc, other.trunc)
        table: dict[Weight, QPolynomial] = {}
        for n in set(self.table) | set(other.table):
            poly = QPolynomial.from_coeffs(self.get(n).coeffs, trunc)
            term = QPolynomial.from_coeffs(other.get(n).coeffs, trunc)
            poly = poly + term if sign > 0 else poly - term
            if not poly.is_zero():
                table[n] = poly
        return Character(self.composition, trunc, table)

    def __add__(self, other: "Character") -> "Character":
        return self._combine(other, +1)

    def __sub__(self, other: "Character") -> "Character":
        return self._combine(other, -1)

    def specialize_ones(self) -> QPolynomial:
        """Set every z_i to 1: the plain degree generating function."""
        total = QPolynomial.zero(self.trunc)
        for poly in self.table.values():
            total = total + QPolynomial.from_coeffs(poly.coeffs, self.trunc)
        return total

    def to_jsonable(self):
        return {
            "K": list(self.composition.parts),
            "M": self.trunc,
            "table": [
                {"n": list(n), "poly": self.table[n].to_jsonable()}
                for n in self.weights()
            ],
        }

    def validate(self) -> None:
        """Assert the container invariants; used by tests, not hot paths."""
        rank = self.composition.rank
        for n, poly in self.table.items():
            assert len(n) == rank and all(c >= 0 for c in n), n
            assert sum(n) <= self.trunc, (n, self.trunc)
            assert not poly.is_zero(), n
            assert poly.trunc == self.trunc, (poly.trunc, self.trunc)
            val = poly.valuation()
            assert val is not None and val >= sum(n), (n, val)
        zero = (0,) * rank
        if zero in self.table:
            assert self.table[zero].coeffs[0] == 1


def shift_substitute(ch: Character, K: Composition) -> Character:
    """Multiply by (z_1 q)^{k_0} ... (z_l q)^{k_{l-1}} and substitute z_i -> z_i q.

    On coefficients: the result at weight n is q^{n_1 + ... + n_l} times the
    source value at n - (k_0, ..., k_{l-1}); a lookup with any negative
    component is zero.  The caller supplies the character of the cyclic shift
    of K.
    """
    if K.rank != ch.composition.rank:
        raise RankMismatchError(
            f"composition rank {K.rank} != character rank {ch.composition.rank}"
        )
    block = K.first_block()
    table: dict[Weight, QPolynomial] = {}
    for n_src, poly in ch.table.items():
        n = tuple(a + b for a, b in zip(n_src, block))
        shifted = poly.shift(sum(n)) if sum(n) <= ch.trunc else QPolynomial.zero(ch.trunc)
        if not shifted.is_zero():
            table[n] = shifted
    return Character(K, ch.trunc, table)


def first_mismatch(a: Character, b: Character):
    """First differing coefficient as (weight, q_power, lhs, rhs), or None.

    Weights are scanned by (total, lex), powers ascending; comparison runs
    through the smaller truncation order.
    """
    trunc = min(a.trunc, b.trunc)
    for n in sorted(set(a.table) | set(b.table), key=weight_sort_key):
        pa, pb = a.get(n), b.get(n)
        for d in range(trunc + 1):
            if pa.coeffs[d] != pb.coeffs[d]:
                return (n, d, pa.coeffs[d], pb.coeffs[d])
    return None
