"""Verification of assembled sets and the representation-theoretic audit.

The verifier walks every pair of vectors, grouped by basis pair, and checks
the three classes implied by unbiasedness: a vector against itself (norm),
two distinct vectors of one basis (orthogonality), vectors of two different
bases (squared overlap 1/N).  It works on unscaled root-of-unity sums, so
the targets are N^2, 0 and N and exact mode never touches a float; numeric
mode measures worst absolute deviation of squared overlaps against
tolerance.  Pairs involving the standard basis reduce to the statement that
every stored entry has modulus 1/sqrt(N), which is what gets checked there.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from .construct import MubSet, q_vector
from .cyclotomic import norm_certificates, roots_of_unity
from .errors import DomainError, StructuralError
from .gf import GaloisField


@dataclass(frozen=True)
class PairFailure:
    """One vector pair whose certificate or deviation came out wrong."""

    basis_a: int
    vector_a: int
    basis_b: int
    vector_b: int
    kind: str                      # norm | orthogonality | unbiasedness | entry-modulus
    observed: float | int | None   # None: exact certificate was not even rational
    expected: float | int

    def describe(self) -> str:
        got = "irrational" if self.observed is None else f"{self.observed}"
        return (
            f"{self.kind}: basis {self.basis_a} vector {self.vector_a} vs "
            f"basis {self.basis_b} vector {self.vector_b}: got {got}, expected {self.expected}"
        )


@dataclass(eq=False)
class VerificationReport:
    mode: str
    n: int
    num_bases: int
    route: str
    tolerance: float | None
    worst_deviation: float | None
    pair_worst: np.ndarray
    failures: list[PairFailure]
    failure_count: int
    elapsed_seconds: float
    passed: bool

    def summary_lines(self) -> list[str]:
        lines = [
            f"mode: {self.mode}",
            f"N={self.n}, bases checked: {self.num_bases} (standard basis last)",
        ]
        if self.mode == "numeric":
            lines.append(f"tolerance: {self.tolerance:g}")
            lines.append(f"worst deviation from targets 1, 0, 1/N: {self.worst_deviation:.3e}")
        else:
            lines.append("certificates compared against the exact integers N^2, 0, N")
        if self.failure_count:
            lines.append(f"failed pairs: {self.failure_count}")
            for f in self.failures[:10]:
                lines.append("  " + f.describe())
            if self.failure_count > len(self.failures):
                lines.append(f"  ... ({self.failure_count} total, list truncated)")
        lines.append(
            f"result: {'PASS' if self.passed else 'FAIL'} in {self.elapsed_seconds:.3f} s"
        )
        return lines

    def to_json_dict(self) -> dict:
        return {
            "format": "mubkit-verify-report",
            "mode": self.mode,
            "n": self.n,
            "num_bases": self.num_bases,
            "route": self.route,
            "tolerance": self.tolerance,
            "worst_deviation": self.worst_deviation,
            "failure_count": self.failure_count,
            "passed": self.passed,
            "elapsed_seconds": self.elapsed_seconds,
            "pair_worst": [[float(v) if self.mode == "numeric" else int(v) for v in row]
                           for row in np.asarray(self.pair_worst)],
            "failures": [
                {
                    "basis_a": f.basis_a,
                    "vector_a": f.vector_a,
                    "basis_b": f.basis_b,
                    "vector_b": f.vector_b,
                    "kind": f.kind,
                    "observed": f.observed,
                    "expected": f.expected,
                }
                for f in self.failures
            ],
        }


def _pair_kind(basis_a: int, vector_a: int, basis_b: int, vector_b: int) -> str:
    if basis_a != basis_b:
        return "unbiasedness"
    return "norm" if vector_a == vector_b else "orthogonality"


def verify_mub(
    mub: MubSet,
    mode: str = "exact",
    tol: float = 1e-9,
    max_failures: int = 1000,
) -> VerificationReport:
    """Exhaustively check one assembled set.

    mode "exact" certifies every unscaled inner-product magnitude square as
    the rational integer N^2, 0 or N; mode "numeric" measures deviations of
    squared overlaps from 1, 0 and 1/N against tol.  Failures are recorded
    per pair (capped at max_failures records; the count is always full).
    """
    if mode not in ("exact", "numeric"):
        raise StructuralError(f"unknown mode {mode!r}")
    t0 = time.perf_counter()
    em = mub.exponents
    n = em.n
    order = em.base_order
    bases = mub.num_bases
    strips = em.strips()
    failures: list[PairFailure] = []
    failure_count = 0

    def record(fail: PairFailure):
        nonlocal failure_count
        failure_count += 1
        if len(failures) < max_failures:
            failures.append(fail)

    if mode == "numeric":
        pair_worst = np.zeros((bases, bases), dtype=np.float64)
        table = roots_of_unity(order)
        vecs = table[strips] / np.sqrt(n)          # [m, l, k]
        eye = np.eye(n)
        for a in range(n):
            gram = np.matmul(vecs[a].conj().T[None, :, :], vecs[a:])
            mag = np.abs(gram) ** 2                # [b - a, k_a, k_b]
            for off in range(mag.shape[0]):
                b = a + off
                target = eye if b == a else 1.0 / n
                dev = np.abs(mag[off] - target)
                pair_worst[a, b] = dev.max()
                if pair_worst[a, b] > tol:
                    for ka, kb in np.argwhere(dev > tol):
                        exp = 1.0 if (b == a and ka == kb) else (0.0 if b == a else 1.0 / n)
                        record(PairFailure(a, int(ka), b, int(kb),
                                           _pair_kind(a, ka, b, kb),
                                           float(mag[off][ka, kb]), exp))
        if mub.includes_standard:
            for m in range(n):
                dev = np.abs(np.abs(vecs[m]) ** 2 - 1.0 / n)
                pair_worst[m, n] = dev.max()
                if pair_worst[m, n] > tol:
                    for li, ka in np.argwhere(dev > tol):
                        record(PairFailure(m, int(ka), n, int(li), "entry-modulus",
                                           float(np.abs(vecs[m][li, ka]) ** 2), 1.0 / n))
        worst = float(pair_worst.max())
        passed = worst <= tol and failure_count == 0
        return VerificationReport(
            mode=mode, n=n, num_bases=bases, route=em.route, tolerance=tol,
            worst_deviation=worst, pair_worst=pair_worst, failures=failures,
            failure_count=failure_count, elapsed_seconds=time.perf_counter() - t0,
            passed=passed,
        )

    # exact mode
    pair_worst = np.zeros((bases, bases), dtype=np.int64)
    ints = strips.astype(np.int64)
    diag = np.eye(n, dtype=bool)
    for a in range(n):
        for b in range(a, n):
            diff = (ints[b][:, None, :] - ints[a][:, :, None]) % order
            counts = np.stack([(diff == j).sum(axis=0) for j in range(order)])
            value, rational = norm_certificates(counts)
            target = np.where(diag, n * n, 0).astype(np.int64) if a == b \
                else np.full((n, n), n, dtype=np.int64)
            ok = rational & (value == target)
            bad = np.argwhere(~ok)
            pair_worst[a, b] = len(bad)
            for ka, kb in bad:
                obs = int(value[ka, kb]) if rational[ka, kb] else None
                record(PairFailure(a, int(ka), b, int(kb),
                                   _pair_kind(a, ka, b, kb), obs, int(target[ka, kb])))
    # standard-basis pairs: each stored entry is a bare root of unity, so the
    # cross overlap is exact by representation; range was validated on build.
    passed = failure_count == 0
    return VerificationReport(
        mode=mode, n=n, num_bases=bases, route=em.route, tolerance=None,
        worst_deviation=None, pair_worst=pair_worst, failures=failures,
        failure_count=failure_count, elapsed_seconds=time.perf_counter() - t0,
        passed=passed,
    )


# ---------------------------------------------------------------------------
# representation audit

@dataclass(frozen=True)
class MultiplicityTable:
    """Counts of irreducible character labels inside one diagonal family."""

    dimension: int
    counts: dict

    def total(self) -> int:
        return sum(self.counts.values())


def omega_exponents(fld: GaloisField, m) -> np.ndarray:
    """Diagonal exponent vector of the quadratic-phase operator for m."""
    fld._check(m)
    marr = np.asarray(m, dtype=np.int64)
    q = np.array([q_vector(fld, l) for l in fld.elements()], dtype=np.int64)
    return (q @ marr) % fld.p


def r_exponents(fld: GaloisField, k) -> np.ndarray:
    """Diagonal exponent vector of the linear-phase operator for k."""
    fld._check(k)
    karr = np.asarray(k, dtype=np.int64)
    lmat = np.array(list(fld.elements()), dtype=np.int64)
    return (lmat @ karr) % fld.p


def _need_odd_p(fld: GaloisField, what: str) -> None:
    if not fld.prime.is_odd:
        raise DomainError(f"{what} is stated for odd p only")


def rep_multiplicities_omega(fld: GaloisField) -> MultiplicityTable:
    """Label a counts #{l : q(l) = a}: the image profile of the squaring map."""
    _need_odd_p(fld, "the quadratic-phase multiplicity table")
    counts = {label: 0 for label in fld.elements()}
    for l in fld.elements():
        counts[q_vector(fld, l)] += 1
    return MultiplicityTable(dimension=fld.order, counts=counts)


def rep_multiplicities_r(fld: GaloisField) -> MultiplicityTable:
    """Label a counts #{l : l = a}; the regular pattern, every label once."""
    counts = {label: 0 for label in fld.elements()}
    for l in fld.elements():
        counts[l] += 1
    return MultiplicityTable(dimension=fld.order, counts=counts)


def rep_multiplicities_joint(fld: GaloisField) -> MultiplicityTable:
    """Joint label (a, b) counts #{l : (q(l), l) = (a, b)}; occurring labels only."""
    _need_odd_p(fld, "the joint multiplicity table")
    counts: dict = {}
    for l in fld.elements():
        key = (q_vector(fld, l), l)
        counts[key] = counts.get(key, 0) + 1
    return MultiplicityTable(dimension=fld.order, counts=counts)
