"""Exact truncated power series in q, and the surplus series built from them.

Everything is dense, exact integer arithmetic with an explicit truncation
order T: a series knows coefficients of q^0 .. q^T and nothing beyond.
Binary operations insist both operands share the same T so truncation loss
is always a visible, deliberate step.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class NotInvertible(ValueError):
    """Series inversion needs a constant term of +1 or -1."""


class TruncatedSeries:
    """Integer power series truncated at order T (inclusive)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], trunc: int | None = None) -> None:
        cs = list(coeffs)
        if trunc is not None:
            if trunc < 0:
                raise ValueError(f"truncation order must be >= 0, got {trunc}")
            if len(cs) > trunc + 1:
                raise ValueError(
                    f"{len(cs)} coefficients exceed truncation order {trunc}"
                )
            cs.extend([0] * (trunc + 1 - len(cs)))
        elif not cs:
            raise ValueError("need at least one coefficient or an explicit trunc")
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls((), trunc)

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls((1,), trunc)

    @classmethod
    def monomial(cls, exponent: int, trunc: int, coeff: int = 1) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {exponent}")
        if exponent > trunc:
            return cls.zero(trunc)
        return cls([0] * exponent + [coeff], trunc)

    @property
    def trunc(self) -> int:
        return len(self._coeffs) - 1

    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> int:
        if not (0 <= n <= self.trunc):
            raise IndexError(
                f"coefficient {n} outside truncated range [0, {self.trunc}]"
            )
        return self._coeffs[n]

    def _match(self, other: "TruncatedSeries") -> None:
        if self.trunc != other.trunc:
            raise ValueError(
                f"truncation mismatch: {self.trunc} vs {other.trunc};"
                " align with .truncate() first"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-a for a in self._coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        T = self.trunc
        out = [0] * (T + 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j in range(T + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def shift(self, exponent: int) -> "TruncatedSeries":
        """Multiply by q^exponent, keeping the same truncation order."""
        if exponent < 0:
            raise ValueError(f"shift must be >= 0, got {exponent}")
        T = self.trunc
        return TruncatedSeries(
            ([0] * exponent + list(self._coeffs))[: T + 1], T
        )

    def truncate(self, trunc: int) -> "TruncatedSeries":
        """Drop down to a smaller truncation order (never extends)."""
        if trunc > self.trunc:
            raise ValueError(
                f"cannot extend truncation order {self.trunc} to {trunc}"
            )
        return TruncatedSeries(self._coeffs[: trunc + 1])

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self._coeffs[0]
        if c0 not in (1, -1):
            raise NotInvertible(
                f"constant term must be +1 or -1 to invert, got {c0}"
            )
        T = self.trunc
        support = [
            (i, c) for i, c in enumerate(self._coeffs) if c and i > 0
        ]
        out = [0] * (T + 1)
        out[0] = c0
        for n in range(1, T + 1):
            acc = 0
            for i, c in support:
                if i > n:
                    break
                acc += c * out[n - i]
            out[n] = -c0 * acc
        return TruncatedSeries(out)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.trunc >= 8 else ""
        return f"TruncatedSeries([{head}{tail}], trunc={self.trunc})"


def pochhammer_poly(s: int, n: int, trunc: int) -> TruncatedSeries:
    """The product (1 - q^s)(1 - q^(s+1)) ... (1 - q^(s+n-1)), truncated."""
    if s < 1 or n < 0:
        raise ValueError(f"need s >= 1 and n >= 0, got s={s}, n={n}")
    out = TruncatedSeries.one(trunc)
    for j in range(s, s + n):
        out = out - out.shift(j)
    return out


def surplus_series(L: int, s: int, k: int, trunc: int) -> TruncatedSeries:
    """Coefficient of q^N counts anchored members minus shifted members.

    For s+1 <= k <= L+s the coefficient at N equals
    |{partitions: smallest part s, parts <= L+s, k absent, weight N}| minus
    |{nonempty partitions with parts in [s+1, L+s], weight N}|.
    The series itself is defined for any k >= 1.
    """
    if L < 1 or s < 1 or k < 1:
        raise ValueError(f"need L, s, k >= 1, got L={L}, s={s}, k={k}")
    anchored_gf = (
        TruncatedSeries.monomial(s, trunc)
        - TruncatedSeries.monomial(s, trunc).shift(k)
    ) * pochhammer_poly(s, L + 1, trunc).inverse()
    shifted_gf = pochhammer_poly(s + 1, L, trunc).inverse() - TruncatedSeries.one(
        trunc
    )
    return anchored_gf - shifted_gf


def bounded_gap_surplus_series(L: int, trunc: int) -> TruncatedSeries:
    """surplus_series(L, 2, L) summed along steps of L.

    Coefficient n here equals the sum of the surplus coefficients at
    n, n-L, n-2L, ...; positivity of this folded series is the bounded-gap
    counting inequality for smallest part 2 versus smallest part >= 3.
    """
    if L < 3:
        raise ValueError(f"need L >= 3, got L={L}")
    geometric = (
        TruncatedSeries.one(trunc) - TruncatedSeries.monomial(L, trunc)
    ).inverse()
    return surplus_series(L, 2, L, trunc) * geometric


def exclusion_shift_series(L: int, s: int, k: int, i: int, trunc: int) -> TruncatedSeries:
    """surplus_series(L, s, k+i) - surplus_series(L, s, k).

    For s <= i <= L+s this difference has nonnegative coefficients: it equals
    q^(s+k) divided by the part-interval product with the factor at i removed.
    """
    if not (s <= i <= L + s):
        raise ValueError(f"shift must satisfy s <= i <= L+s, got i={i}")
    return surplus_series(L, s, k + i, trunc) - surplus_series(L, s, k, trunc)


def presence_surplus_series(L: int, s: int, trunc: int) -> TruncatedSeries:
    """Coefficient N: members containing s minus members containing L+s-1.

    Both families live on the part interval [s, L+s].
    """
    if L < 1 or s < 1:
        raise ValueError(f"need L, s >= 1, got L={L}, s={s}")
    numerator = TruncatedSeries.monomial(s, trunc) - TruncatedSeries.monomial(
        L + s - 1, trunc
    )
    return numerator * pochhammer_poly(s, L + 1, trunc).inverse()


def surplus_shift_identity(L: int, s: int, i: int, trunc: int) -> bool:
    """Does surplus(k=i+1) - surplus(k=i-L+2) equal the shifted presence surplus?

    This is the step that advances positivity from one exclusion to the next;
    it needs i >= L-1 so the lower exclusion index stays positive.
    """
    if i < L - 1:
        raise ValueError(f"need i >= L-1, got i={i}")
    lhs = surplus_series(L, s, i + 1, trunc) - surplus_series(L, s, i - L + 2, trunc)
    rhs = presence_surplus_series(L, s, trunc).shift(i - L + 2)
    return lhs == rhs
