"""Exact arithmetic in GF(p^r) behind a monic irreducible modulus.

Field elements are coefficient tuples (a_0, ..., a_{r-1}) over Z_p in the
monomial basis (1, x, ..., x^(r-1)), constant term first.  A GaloisField
owns the modulus, the beta multiplication tables of that basis and, when x
generates the multiplicative group, the power table of x together with its
discrete-log inverse.  Everything is an immutable value and every operation
is a pure function, so instances can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DomainError, StructuralError
from .poly import (
    Poly,
    _mod,
    _mul,
    _trim,
    element_order,
    find_factor,
    is_irreducible,
    is_prime,
    least_primitive_root,
    multiplicative_order,
    search_primitive,
)

# power/dlog tables are only materialized up to this many elements
MAX_TABLE_ORDER = 1 << 14

FieldElement = tuple  # coefficient tuple of length r


@dataclass(frozen=True)
class Prime:
    """A checked prime with its oddness flag."""

    value: int

    def __post_init__(self):
        if not is_prime(self.value):
            raise DomainError(f"{self.value} is not prime")

    @property
    def is_odd(self) -> bool:
        return self.value != 2


class GaloisField:
    """GF(p^r) with tuple-valued exact arithmetic.

    Parameters
    ----------
    p : int or Prime
    r : extension degree, at least 1
    modulus : optional coefficient sequence or Poly, monic of degree r and
        irreducible; searched deterministically when omitted
    generator : r = 1 only; use the modulus x - generator, with generator a
        primitive root mod p
    """

    def __init__(self, p, r: int, modulus=None, *, generator: int | None = None):
        self.prime = p if isinstance(p, Prime) else Prime(p)
        self.p = self.prime.value
        if r < 1:
            raise DomainError("r must be at least 1")
        self.r = r
        self.order = self.p ** r

        if generator is not None:
            if r != 1:
                raise StructuralError("generator override applies to r = 1 only")
            if modulus is not None:
                raise StructuralError("give either a modulus or a generator, not both")
            g = generator % self.p
            if g == 0 or multiplicative_order(g, self.p) != self.p - 1:
                raise StructuralError(f"{generator} is not a primitive root mod {self.p}")
            modulus = Poly(self.p, ((self.p - g) % self.p, 1))
        if modulus is None:
            modulus = search_primitive(self.p, r)
        elif not isinstance(modulus, Poly):
            modulus = Poly.make(self.p, modulus)
        if modulus.p != self.p:
            raise StructuralError("modulus characteristic does not match p")
        if modulus.degree != r or not modulus.is_monic:
            raise StructuralError(f"modulus must be monic of degree {r}")
        if not is_irreducible(modulus):
            factor = find_factor(modulus)
            raise StructuralError(f"modulus {modulus} is reducible: {factor} divides it")
        self.modulus = modulus

        self.zero: FieldElement = (0,) * r
        self.one: FieldElement = (1,) + (0,) * (r - 1)
        # x itself, reduced: for r = 1 the modulus x - g leaves the constant g
        self.x: FieldElement = self._pad(_mod((0, 1), modulus.coeffs, self.p))

        self.beta = self._beta_tables()
        self.x_powers: tuple | None = None
        self.dlog: dict | None = None
        self.x_is_primitive = False
        if self.order <= MAX_TABLE_ORDER:
            self._build_power_table()

    # -- element plumbing ---------------------------------------------------

    def _pad(self, c) -> FieldElement:
        return tuple(c) + (0,) * (self.r - len(c))

    def _check(self, a) -> None:
        if len(a) != self.r:
            raise StructuralError(f"element has length {len(a)}, field needs {self.r}")
        if any(not (0 <= c < self.p) for c in a):
            raise StructuralError(f"coefficients must lie in [0, {self.p})")

    def element(self, coeffs) -> FieldElement:
        a = tuple(int(c) % self.p for c in coeffs)
        self._check(a)
        return a

    def elements(self):
        """All p^r elements in lexicographic order on (a_0, ..., a_{r-1})."""
        for t in product(range(self.p), repeat=self.r):
            yield t

    def index_of(self, a) -> int:
        self._check(a)
        idx = 0
        for c in a:
            idx = idx * self.p + c
        return idx

    def element_at(self, idx: int) -> FieldElement:
        if not 0 <= idx < self.order:
            raise StructuralError(f"index {idx} out of range for order {self.order}")
        digits = []
        for _ in range(self.r):
            digits.append(idx % self.p)
            idx //= self.p
        return tuple(reversed(digits))

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b) -> FieldElement:
        self._check(a)
        self._check(b)
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b) -> FieldElement:
        self._check(a)
        self._check(b)
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a) -> FieldElement:
        self._check(a)
        return tuple((-x) % self.p for x in a)

    def smul(self, c: int, a) -> FieldElement:
        self._check(a)
        return tuple((c * x) % self.p for x in a)

    def mul(self, a, b) -> FieldElement:
        """Polynomial product reduced mod (modulus, p)."""
        self._check(a)
        self._check(b)
        prod = _mul(_trim(a), _trim(b), self.p)
        return self._pad(_mod(prod, self.modulus.coeffs, self.p))

    def mul_via_tables(self, a, b) -> FieldElement:
        """Same product through the beta tables: result_i = sum a_s b_t beta[i][s][t]."""
        self._check(a)
        self._check(b)
        out = []
        for i in range(self.r):
            bi = self.beta[i]
            acc = 0
            for s in range(self.r):
                if a[s]:
                    row = bi[s]
                    for t in range(self.r):
                        acc += a[s] * b[t] * row[t]
            out.append(acc % self.p)
        return tuple(out)

    def pow(self, a, n: int) -> FieldElement:
        """a**n by repeated squaring; a**0 is 1 for every a, including 0."""
        self._check(a)
        if n < 0:
            raise DomainError("negative exponents are not supported")
        result = self.one
        base = a
        while n > 0:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def trace(self, a) -> int:
        """Galois trace down to Z_p: the Frobenius orbit sum of a.

        The sum of a**(p^i) for i in 0..r-1 must come out constant; a
        non-constant value would mean the modulus is not irreducible, so
        that case raises rather than returning garbage.
        """
        self._check(a)
        total = a
        frob = a
        for _ in range(self.r - 1):
            frob = self.pow(frob, self.p)
            total = self.add(total, frob)
        if any(total[1:]):
            raise StructuralError(
                f"Frobenius sum of {a} is not constant; modulus {self.modulus} is suspect"
            )
        return total[0]

    # -- tables -------------------------------------------------------------

    def _beta_tables(self):
        """beta[i][a][b] = coefficient of x^i in x^(a+b) mod the modulus.

        Symmetric r x r matrices over Z_p; contracting them against two
        coefficient vectors reproduces the field product.
        """
        fc = self.modulus.coeffs
        pw = []
        cur = (1,)
        for _ in range(2 * self.r - 1):
            pw.append(self._pad(cur))
            cur = _mod(_mul(cur, (0, 1), self.p), fc, self.p)
        return tuple(
            tuple(tuple(pw[a + b][i] for b in range(self.r)) for a in range(self.r))
            for i in range(self.r)
        )

    def _build_power_table(self) -> None:
        n = self.order - 1
        if element_order(self.x, self) != n:
            return  # x is not primitive; q_vector falls back to direct squaring
        powers = [self.one]
        cur = self.one
        for _ in range(n - 1):
            cur = self.mul(cur, self.x)
            powers.append(cur)
        self.x_powers = tuple(powers)
        self.dlog = {e: j for j, e in enumerate(powers)}
        self.x_is_primitive = True

    # -- misc ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GaloisField(p={self.p}, r={self.r}, modulus={self.modulus})"

    def describe(self) -> str:
        return f"GF({self.p}^{self.r}), modulus {self.modulus}"


def default_field(p: int, r: int, modulus=None, generator: int | None = None) -> GaloisField:
    """Convenience constructor used by the CLI: search a modulus when absent."""
    if generator is not None:
        return GaloisField(p, r, generator=generator)
    return GaloisField(p, r, modulus)


__all__ = [
    "FieldElement",
    "GaloisField",
    "MAX_TABLE_ORDER",
    "Prime",
    "default_field",
    "least_primitive_root",
]
