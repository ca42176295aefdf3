"""Polynomials over Z_p: arithmetic, irreducibility, primitivity, search.

A polynomial is held as a coefficient tuple (c_0, c_1, ..., c_d) with the
constant term first and a nonzero leading coefficient; the empty tuple is
the zero polynomial.  All coefficients live in [0, p).  The module also
carries the small number-theory helpers (primality, factorization,
primitive roots) that the rest of the package leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import CapacityError, DomainError, StructuralError


# ---------------------------------------------------------------------------
# small number theory

def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (desk-scale n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, as (prime, exponent) pairs."""
    if n < 1:
        raise DomainError("factorize expects a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_factors(n: int) -> list[int]:
    return [q for q, _ in factorize(n)]


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in the group of units mod a prime p."""
    a %= p
    if a == 0:
        raise DomainError("zero has no multiplicative order")
    order = p - 1
    for q in prime_factors(p - 1) if p > 2 else []:
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def least_primitive_root(p: int) -> int:
    """Smallest generator of the units mod p.  The trivial group gives 1."""
    if p == 2:
        return 1
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise DomainError(f"{p} has no primitive root; is it prime?")


# ---------------------------------------------------------------------------
# raw coefficient-tuple arithmetic (trimmed tuples, trailing zeros stripped)

def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _add(a, b, p):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return _trim(tuple((x + y) % p for x, y in zip(a, b)))


def _sub(a, b, p):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return _trim(tuple((x - y) % p for x, y in zip(a, b)))


def _mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(tuple(out))


def _divmod(a, b, p):
    """Quotient and remainder of a by nonzero b; leading coefficient inverted mod p."""
    if not b:
        raise DomainError("polynomial division by zero")
    inv = pow(b[-1], p - 2, p)
    rem = list(a)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % p
        if c == 0:
            continue
        f = (c * inv) % p
        q[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] = (rem[i - db + j] - f * b[j]) % p
    return _trim(tuple(q)), _trim(tuple(rem))


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return tuple((c * inv) % p for c in a)


def _gcd(a, b, p):
    """Monic greatest common divisor."""
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _powmod(a, n, m, p):
    """a**n reduced mod (m, p) by square and multiply."""
    result = (1,)
    a = _mod(a, m, p)
    while n > 0:
        if n & 1:
            result = _mod(_mul(result, a, p), m, p)
        a = _mod(_mul(a, a, p), m, p)
        n >>= 1
    return result


# ---------------------------------------------------------------------------
# the public polynomial value type

@dataclass(frozen=True)
class Poly:
    """Dense polynomial over Z_p.

    coeffs runs (c_0, ..., c_d) with the constant term first; the leading
    coefficient is nonzero and every coefficient lies in [0, p).  Use
    Poly.make to normalize arbitrary integer coefficients.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.coeffs and self.coeffs[-1] == 0:
            raise StructuralError("leading coefficient must be nonzero")
        if any(not (0 <= c < self.p) for c in self.coeffs):
            raise StructuralError(f"coefficients must lie in [0, {self.p})")

    @classmethod
    def make(cls, p: int, coeffs) -> "Poly":
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        return cls(p, _trim(tuple(c % p for c in coeffs)))

    @classmethod
    def x(cls, p: int) -> "Poly":
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            elif d == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{d}" if c == 1 else f"{c}x^{d}")
        return "+".join(terms)


# ---------------------------------------------------------------------------
# irreducibility and primitivity

def is_irreducible(f: Poly) -> bool:
    """Full irreducibility criterion over Z_p.

    f of degree n is irreducible iff x**(p**n) = x mod f and, for every
    prime t dividing n, gcd(x**(p**(n/t)) - x, f) is constant.  Rootlessness
    alone is not enough from degree 4 up, so both conditions are checked.
    """
    p, n = f.p, f.degree
    if n < 1:
        raise StructuralError("irreducibility is defined for degree >= 1")
    if not f.is_monic:
        raise StructuralError("modulus must be monic")
    fc = f.coeffs
    x = (0, 1)
    checkpoints = {n // t for t in prime_factors(n)}
    u = _mod(x, fc, p)
    for k in range(1, n + 1):
        u = _powmod(u, p, fc, p)
        if k in checkpoints:
            g = _gcd(_sub(u, x, p), fc, p)
            if len(g) != 1:
                return False
        if k == n and u != _mod(x, fc, p):
            return False
    return True


def find_factor(f: Poly) -> Poly | None:
    """Lex-least nontrivial monic factor of f, or None when none exists.

    Trial division over monic candidates of degree 1..deg(f)//2, ordered by
    (degree, c_0, c_1, ...).  Desk-scale degrees and p only; used to name a
    witness when a reducible modulus is rejected.
    """
    p, n = f.p, f.degree
    if n < 1:
        return None
    for d in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=d):
            cand = tail + (1,)
            if _mod(f.coeffs, cand, p) == ():
                return Poly(p, cand)
    return None


def is_primitive(f: Poly) -> bool:
    """True iff f is irreducible and x generates the multiplicative group mod f."""
    if not is_irreducible(f):
        return False
    p, n = f.p, f.degree
    if f.coeffs[0] == 0:
        return False  # x = 0 mod f; only reachable for f = x itself
    group = p ** n - 1
    for q in prime_factors(group) if group > 1 else []:
        if _powmod((0, 1), group // q, f.coeffs, p) == (1,):
            return False
    return True


def search_primitive(p: int, r: int, max_order: int | None = None) -> Poly:
    """Deterministic search for a modulus that makes x a generator of GF(p^r)*.

    r = 1 returns x - g with g the least primitive root mod p.  r >= 2 scans
    monic candidates in lexicographic coefficient order (c_0 first) and
    returns the first primitive one.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if r < 1:
        raise DomainError("r must be at least 1")
    if max_order is not None and p ** r > max_order:
        raise CapacityError(f"p^r = {p ** r} exceeds the cap of {max_order}")
    if r == 1:
        g = least_primitive_root(p)
        return Poly(p, ((p - g) % p, 1))
    for tail in product(range(p), repeat=r):
        cand = Poly(p, tail + (1,))
        if is_primitive(cand):
            return cand
    raise DomainError(f"no primitive polynomial of degree {r} over Z_{p}")  # unreachable


def element_order(a, field) -> int:
    """Multiplicative order of a nonzero field element.

    Computed by factoring p^r - 1 and stripping prime factors while the
    power stays 1; never exhaustive.
    """
    if a == field.zero:
        raise DomainError("zero has no multiplicative order")
    n = field.order - 1
    order = n
    for q in prime_factors(n) if n > 1 else []:
        while order % q == 0 and field.pow(a, order // q) == field.one:
            order //= q
    return order
