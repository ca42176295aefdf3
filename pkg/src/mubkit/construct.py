"""Assembly of the unbiased-bases exponent matrix.

For N = p^r the construction produces N mutually unbiased bases indexed by
a field element m, each holding N vectors indexed by k, with components
indexed by l; adjoining the standard basis gives the full set of N + 1.
Every non-standard component is a root of unity over sqrt(N), so a whole
set is stored as one N x N^2 matrix of integer exponents: row l, column
(m, k) in m-major lexicographic order, scale 1/sqrt(N) implied.  Odd p
phases are powers of the primitive p-th root; p = 2 uses powers of i.

Four routes build the same object: a trace form, a quadratic-form ("q")
form, a tensor product of character vectors, and the even-characteristic
variant.  The first three agree for odd p (tensor entrywise with q, trace
up to a column relabeling) and are cross-checked by tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import CapacityError, StructuralError, UnsupportedRouteError
from .cyclotomic import roots_of_unity
from .gf import GaloisField

MAX_CONSTRUCTION_ORDER = 1 << 14

ROUTES = ("trace", "q", "tensor", "char2")

BASE_OMEGA = "omega-p"  # exponents of exp(2 pi i / p), odd p
BASE_I = "i"            # exponents of i, p = 2


@dataclass(frozen=True)
class CharacterVector:
    """One character of Z_p as its exponent vector: entry j is label*j mod p."""

    p: int
    label: int
    exponents: tuple[int, ...] = dc_field(init=False)

    def __post_init__(self):
        if not 0 <= self.label < self.p:
            raise StructuralError(f"label {self.label} out of range for p={self.p}")
        object.__setattr__(
            self, "exponents", tuple((self.label * j) % self.p for j in range(self.p))
        )


def character_vector(p: int, label: int) -> CharacterVector:
    return CharacterVector(p, label)


def q_vector(fld: GaloisField, l) -> tuple[int, ...]:
    """Coefficient vector of the field square of l.

    When the power table of a primitive x is available, l = x^j turns the
    square into a table lookup at 2j; otherwise it is one multiplication.
    """
    fld._check(l)
    if fld.dlog is not None and l != fld.zero:
        j = fld.dlog[l]
        return fld.x_powers[(2 * j) % (fld.order - 1)]
    return fld.mul(l, l)


def row_labels(fld: GaloisField) -> list[tuple[int, ...]]:
    """Character labels of row l: (q_0(l), ..., q_{r-1}(l), l_0, ..., l_{r-1})."""
    return [q_vector(fld, l) + l for l in fld.elements()]


# ---------------------------------------------------------------------------
# the exponent matrix and the assembled set

@dataclass(eq=False, frozen=True)
class ExponentMatrix:
    """N x N^2 integer exponent matrix with its provenance.

    Row l in element enumeration order (zero first); column (m, k) at index
    index(m) * N + index(k).  Entries are exact integers in [0, base_order);
    the 1/sqrt(N) scale is implied and no floats are ever stored.
    """

    p: int
    r: int
    modulus: tuple[int, ...]
    route: str
    base: str
    entries: np.ndarray

    def __post_init__(self):
        n = self.p ** self.r
        if self.route not in ROUTES:
            raise StructuralError(f"unknown route {self.route!r}")
        if self.base not in (BASE_OMEGA, BASE_I):
            raise StructuralError(f"unknown base tag {self.base!r}")
        if (self.base == BASE_I) != (self.p == 2):
            raise StructuralError(f"base {self.base!r} does not match p={self.p}")
        if (self.route == "char2") != (self.p == 2):
            raise StructuralError(f"route {self.route!r} does not match p={self.p}")
        e = np.asarray(self.entries)
        if e.shape != (n, n * n):
            raise StructuralError(f"exponent matrix must be {n} x {n * n}, got {e.shape}")
        if not np.issubdtype(e.dtype, np.integer):
            raise StructuralError("exponents must be integers")
        if e.size and (e.min() < 0 or e.max() >= self.base_order):
            raise StructuralError(f"exponents must lie in [0, {self.base_order})")
        e = e.astype(np.int16, copy=True)
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def n(self) -> int:
        return self.p ** self.r

    @property
    def base_order(self) -> int:
        return 4 if self.base == BASE_I else self.p

    def strip(self, m_index: int) -> np.ndarray:
        """Exponents of basis m as an N x N block, rows l, columns k."""
        n = self.n
        if not 0 <= m_index < n:
            raise StructuralError(f"strip index {m_index} out of range")
        return self.entries[:, m_index * n:(m_index + 1) * n]

    def strips(self) -> np.ndarray:
        """All strips as one (N, N, N) tensor indexed [m, l, k]."""
        n = self.n
        return self.entries.reshape(n, n, n).transpose(1, 0, 2)

    def column(self, m_index: int, k_index: int) -> np.ndarray:
        n = self.n
        return self.entries[:, m_index * n + k_index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExponentMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
            and self.route == other.route
            and self.base == other.base
            and np.array_equal(self.entries, other.entries)
        )


@dataclass(eq=False, frozen=True)
class MubSet:
    """A full unbiased set: the exponent matrix plus the standard basis.

    The standard basis is represented exactly as 0/1 columns, never as
    exponents, and is listed last (index N).
    """

    exponents: ExponentMatrix
    includes_standard: bool = True

    @property
    def n(self) -> int:
        return self.exponents.n

    @property
    def num_bases(self) -> int:
        return self.n + 1 if self.includes_standard else self.n

    def basis_matrix(self, index: int) -> np.ndarray:
        """Basis as a complex N x N matrix, vectors in columns, unit norm."""
        n = self.n
        if not 0 <= index < self.num_bases:
            raise StructuralError(f"basis index {index} out of range")
        if index == n:
            return np.eye(n, dtype=np.complex128)
        table = roots_of_unity(self.exponents.base_order)
        return table[self.exponents.strip(index)] / np.sqrt(n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MubSet):
            return NotImplemented
        return (
            self.includes_standard == other.includes_standard
            and self.exponents == other.exponents
        )


# ---------------------------------------------------------------------------
# construction routes

def _guard_scale(fld: GaloisField) -> None:
    if fld.order > MAX_CONSTRUCTION_ORDER:
        raise CapacityError(
            f"p^r = {fld.order} exceeds the construction cap of {MAX_CONSTRUCTION_ORDER}"
        )


def _need_odd(fld: GaloisField, route: str) -> None:
    if not fld.prime.is_odd:
        raise UnsupportedRouteError(f"route {route!r} needs odd p; use char2 for p=2")


def _element_array(fld: GaloisField) -> np.ndarray:
    return np.array(list(fld.elements()), dtype=np.int64)


def _make(fld: GaloisField, route: str, entries: np.ndarray) -> ExponentMatrix:
    base = BASE_I if fld.p == 2 else BASE_OMEGA
    return ExponentMatrix(
        p=fld.p,
        r=fld.r,
        modulus=fld.modulus.coeffs,
        route=route,
        base=base,
        entries=entries,
    )


def build_route_q(fld: GaloisField) -> ExponentMatrix:
    """Exponent of column (m, k) at row l: m . q(l) + k . l mod p."""
    _need_odd(fld, "q")
    _guard_scale(fld)
    p, n = fld.p, fld.order
    lmat = _element_array(fld)
    qmat = np.array([q_vector(fld, l) for l in fld.elements()], dtype=np.int64)
    part_m = (qmat @ lmat.T) % p          # [l, m]
    part_k = (lmat @ lmat.T) % p          # [l, k]
    e = (part_m[:, :, None] + part_k[:, None, :]) % p
    return _make(fld, "q", e.reshape(n, n * n))


def build_route_trace(fld: GaloisField) -> ExponentMatrix:
    """Exponent of column (m, k) at row l: Tr(m l^2 + k l), all field products."""
    _need_odd(fld, "trace")
    _guard_scale(fld)
    p, n = fld.p, fld.order
    elems = list(fld.elements())
    squares = [fld.mul(l, l) for l in elems]
    part_m = np.empty((n, n), dtype=np.int64)  # [l, m] = Tr(m l^2)
    part_k = np.empty((n, n), dtype=np.int64)  # [l, k] = Tr(k l)
    for li, l in enumerate(elems):
        sq = squares[li]
        for mi, m in enumerate(elems):
            part_m[li, mi] = fld.trace(fld.mul(m, sq))
            part_k[li, mi] = fld.trace(fld.mul(m, l))
    e = (part_m[:, :, None] + part_k[:, None, :]) % p
    return _make(fld, "trace", e.reshape(n, n * n))


def build_route_tensor(fld: GaloisField) -> ExponentMatrix:
    """Row l as the Kronecker product of 2r character vectors.

    The labels are (q_0(l), ..., q_{r-1}(l), l_0, ..., l_{r-1}); tensoring
    exponent vectors means an outer sum mod p, with the first factor
    slowest, which lands exactly on the m-major column order.
    """
    _need_odd(fld, "tensor")
    _guard_scale(fld)
    p, n = fld.p, fld.order
    rows = []
    for labels in row_labels(fld):
        row = np.zeros(1, dtype=np.int64)
        for a in labels:
            chi = np.asarray(character_vector(p, a).exponents, dtype=np.int64)
            row = ((row[:, None] + chi[None, :]) % p).reshape(-1)
        rows.append(row)
    return _make(fld, "tensor", np.stack(rows))


def build_route_char2(fld: GaloisField) -> ExponentMatrix:
    """Even characteristic: powers of i.

    The quadratic form q~_i(l) = l^T beta_i l is evaluated over the plain
    integers, without reduction mod 2; the linear part contributes twice
    (k . l mod 2), and everything lands in exponents of i mod 4.
    """
    if fld.prime.is_odd:
        raise UnsupportedRouteError("route 'char2' applies to p = 2 only")
    _guard_scale(fld)
    n = fld.order
    lmat = _element_array(fld)
    beta = np.array(fld.beta, dtype=np.int64)                # [i, a, b]
    qt = np.einsum("la,iab,lb->li", lmat, beta, lmat)        # integer valued
    part_m = qt @ lmat.T                                     # [l, m], no reduction
    part_k = 2 * ((lmat @ lmat.T) % 2)                       # [l, k]
    e = (part_m[:, :, None] + part_k[:, None, :]) % 4
    return _make(fld, "char2", e.reshape(n, n * n))


_BUILDERS = {
    "trace": build_route_trace,
    "q": build_route_q,
    "tensor": build_route_tensor,
    "char2": build_route_char2,
}


def build_route(fld: GaloisField, route: str | None = None) -> ExponentMatrix:
    """Build by name; route None picks q for odd p and char2 for p = 2."""
    if route is None:
        route = "char2" if fld.p == 2 else "q"
    if route not in _BUILDERS:
        raise StructuralError(f"unknown route {route!r}; choose one of {ROUTES}")
    return _BUILDERS[route](fld)


def assemble_mub_set(em: ExponentMatrix) -> MubSet:
    """Adjoin the standard basis to a constructed exponent matrix."""
    return MubSet(exponents=em, includes_standard=True)
