"""Exact integer combinations of roots of unity.

Two flavours cover everything the verifier needs: Z[w] for w a primitive
p-th root of unity with p prime, and Z[i] for the fourth root used in even
characteristic.  A value is a count vector over the exponents 0..order-1.
Prime order is canonicalized with the relation 1 + w + ... + w^(p-1) = 0 by
shifting the minimum count to zero; order 4 applies i^2 = -1 and keeps
counts on 1 and i only.  Unbiasedness sums can therefore be certified as
the rational integers 0, N or N^2 without any floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import StructuralError
from .poly import is_prime

I_ORDER = 4  # count-vector length for the Z[i] flavour


def _check_order(order: int) -> None:
    if order == I_ORDER:
        return
    if not is_prime(order):
        raise StructuralError(f"root order must be prime or {I_ORDER}, got {order}")


def _canonical(order: int, counts) -> tuple[int, ...]:
    if order == I_ORDER:
        return (counts[0] - counts[2], counts[1] - counts[3], 0, 0)
    m = min(counts)
    return tuple(c - m for c in counts)


@dataclass(frozen=True)
class CyclotomicInt:
    """Canonical integer combination of the order-th roots of unity."""

    order: int
    counts: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.order)
        if len(self.counts) != self.order:
            raise StructuralError("count vector length must equal the root order")
        if self.counts != _canonical(self.order, self.counts):
            raise StructuralError("counts are not in canonical form; use from_counts")

    @classmethod
    def from_counts(cls, order: int, counts) -> "CyclotomicInt":
        _check_order(order)
        counts = tuple(int(c) for c in counts)
        if len(counts) != order:
            raise StructuralError("count vector length must equal the root order")
        return cls(order, _canonical(order, counts))

    @classmethod
    def from_exponents(cls, order: int, exponents) -> "CyclotomicInt":
        """Sum of roots w^e over the given exponents, reduced mod order."""
        _check_order(order)
        counts = [0] * order
        for e in exponents:
            counts[e % order] += 1
        return cls(order, _canonical(order, counts))

    @classmethod
    def zero(cls, order: int) -> "CyclotomicInt":
        return cls.from_counts(order, [0] * order)

    @classmethod
    def integer(cls, order: int, value: int) -> "CyclotomicInt":
        counts = [0] * order
        counts[0] = value
        return cls.from_counts(order, counts)

    def _coerce(self, other) -> "CyclotomicInt":
        if isinstance(other, int):
            return CyclotomicInt.integer(self.order, other)
        if not isinstance(other, CyclotomicInt):
            raise StructuralError(f"cannot combine CyclotomicInt with {type(other).__name__}")
        if other.order != self.order:
            raise StructuralError(f"mixed root orders {self.order} and {other.order}")
        return other

    def __add__(self, other) -> "CyclotomicInt":
        other = self._coerce(other)
        return CyclotomicInt.from_counts(
            self.order, [a + b for a, b in zip(self.counts, other.counts)]
        )

    __radd__ = __add__

    def __mul__(self, other) -> "CyclotomicInt":
        other = self._coerce(other)
        out = [0] * self.order
        for i, a in enumerate(self.counts):
            if a:
                for j, b in enumerate(other.counts):
                    if b:
                        out[(i + j) % self.order] += a * b
        return CyclotomicInt.from_counts(self.order, out)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugate: every exponent is negated mod the order."""
        out = [0] * self.order
        for i, a in enumerate(self.counts):
            out[(-i) % self.order] += a
        return CyclotomicInt.from_counts(self.order, out)

    def as_rational_integer(self) -> int | None:
        """The ordinary integer this value equals, or None when it is none."""
        if self.order == I_ORDER:
            return self.counts[0] if self.counts[1] == 0 else None
        rest = self.counts[1:]
        if any(c != rest[0] for c in rest):
            return None
        return self.counts[0] - rest[0]

    def to_complex(self) -> complex:
        table = roots_of_unity(self.order)
        return complex(sum(c * table[j] for j, c in enumerate(self.counts) if c))

    def __bool__(self) -> bool:
        return any(self.counts)


@lru_cache(maxsize=None)
def roots_of_unity(order: int) -> np.ndarray:
    """Read-only table of the order-th roots, indexed by exponent.

    Built once from polar form; consumers index into it instead of calling
    trigonometric functions per entry.  Order 4 is exact.
    """
    _check_order(order)
    if order == I_ORDER:
        table = np.array([1, 1j, -1, -1j], dtype=np.complex128)
    else:
        table = np.exp(2j * np.pi * np.arange(order) / order)
    table.setflags(write=False)
    return table


def norm_certificates(counts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Batched certificates |S|^2 for count vectors stacked along axis 0.

    counts has shape (order, ...); each slice along the remaining axes is a
    count vector of a root-of-unity sum S.  Returns (value, is_rational):
    the rational-integer value of S * conj(S) and whether that product is
    rational at all.  This is the vectorized form of
    (S * S.conjugate()).as_rational_integer() and is pinned against the
    scalar path by tests.
    """
    counts = np.asarray(counts, dtype=np.int64)
    order = counts.shape[0]
    _check_order(order)
    if order == I_ORDER:
        re = counts[0] - counts[2]
        im = counts[1] - counts[3]
        return re * re + im * im, np.ones(re.shape, dtype=bool)
    z = np.stack(
        [(counts * np.roll(counts, d, axis=0)).sum(axis=0) for d in range(order)]
    )
    if order == 2:
        return z[0] - z[1], np.ones(z[0].shape, dtype=bool)
    rational = np.all(z[2:] == z[1][None], axis=0)
    return z[0] - z[1], rational
