"""Acceptance suite: ten end-to-end guarantees, one verdict line each.

Every test prints `criterion NN [...]: PASS/FAIL (elapsed)` straight to the
terminal, then asserts.  Time budgets, where stated, are asserted too.
"""

import json
import time

import numpy as np

from mubkit.cli import main
from mubkit.construct import (
    ExponentMatrix,
    MubSet,
    assemble_mub_set,
    build_route,
    build_route_q,
    build_route_tensor,
    build_route_trace,
    row_labels,
)
from mubkit.gf import GaloisField
from mubkit.poly import Poly, find_factor, is_irreducible
from mubkit.verify import (
    rep_multiplicities_joint,
    rep_multiplicities_omega,
    rep_multiplicities_r,
    verify_mub,
)

# the six reference cases certified exactly
EXACT_CASES = [(3, 1), (5, 1), (7, 1), (3, 2), (3, 3), (5, 2)]


def _verdict(capsys, num, name, ok, elapsed, budget=None):
    within = budget is None or elapsed <= budget
    status = "PASS" if (ok and within) else "FAIL"
    tail = f"{elapsed:.2f}s" + (f", budget {budget:g}s" if budget is not None else "")
    with capsys.disabled():
        print(f"criterion {num:02d} [{name}]: {status} ({tail})")
    assert ok, f"criterion {num} failed its checks"
    if budget is not None:
        assert elapsed <= budget, f"criterion {num} took {elapsed:.2f}s (> {budget}s)"


def test_criterion_01_prime_field_table(capsys):
    t0 = time.perf_counter()
    code = main(["field", "--p", "5", "--r", "1", "--generator", "3"])
    lines = capsys.readouterr().out.splitlines()
    elapsed = time.perf_counter() - t0
    ok = code == 0 and all(
        w in lines
        for w in [
            "x^1 = 3", "x^2 = 4", "x^3 = 2", "x^4 = 1",
            "q(1) = 1", "q(2) = 4", "q(3) = 4", "q(4) = 1",
        ]
    )
    _verdict(capsys, 1, "power table and squares mod 5", ok, elapsed, 1.0)


def test_criterion_02_extension_field_table(capsys):
    t0 = time.perf_counter()
    code = main(["field", "--p", "3", "--r", "2", "--poly", "2,1,1"])
    lines = capsys.readouterr().out.splitlines()
    elapsed = time.perf_counter() - t0
    ok = code == 0 and all(
        w in lines
        for w in [
            "x^1 = (0,1)", "x^2 = (1,2)", "x^3 = (2,2)", "x^4 = (2,0)",
            "x^5 = (0,2)", "x^6 = (2,1)", "x^7 = (1,1)", "x^8 = (1,0)",
        ]
    )
    _verdict(capsys, 2, "power table of GF(9)", ok, elapsed, 1.0)


def test_criterion_03_row_labels(capsys):
    t0 = time.perf_counter()
    l5 = row_labels(GaloisField(5, 1, generator=3))
    l9 = row_labels(GaloisField(3, 2, (2, 1, 1)))
    elapsed = time.perf_counter() - t0
    ok = l5 == [(0, 0), (1, 1), (4, 2), (4, 3), (1, 4)] and l9 == [
        (0, 0, 0, 0), (1, 2, 0, 1), (1, 2, 0, 2),
        (1, 0, 1, 0), (2, 1, 1, 1), (2, 0, 1, 2),
        (1, 0, 2, 0), (2, 0, 2, 1), (2, 1, 2, 2),
    ]
    _verdict(capsys, 3, "character labels per row", ok, elapsed, 1.0)


def test_criterion_04_exact_certification(capsys):
    t0 = time.perf_counter()
    ok = True
    for p, r in EXACT_CASES:
        mub = assemble_mub_set(build_route(GaloisField(p, r)))
        rep = verify_mub(mub, "exact")
        ok = ok and rep.passed and rep.failure_count == 0
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 4, "exact certificates, six fields", ok, elapsed, 60.0)


def test_criterion_05_numeric_at_scale(capsys):
    t0 = time.perf_counter()
    ok = True
    for p, r in [(11, 2), (5, 3)]:
        mub = assemble_mub_set(build_route(GaloisField(p, r)))
        rep = verify_mub(mub, "numeric", tol=1e-9)
        ok = ok and rep.passed and rep.worst_deviation <= 1e-9
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 5, "numeric check at N=121 and N=125", ok, elapsed, 300.0)


def test_criterion_06_even_characteristic(capsys):
    t0 = time.perf_counter()
    ok = True
    for r in (1, 2, 3):
        mub = assemble_mub_set(build_route(GaloisField(2, r)))
        ok = ok and verify_mub(mub, "exact").passed

    # N=2 must be the standard qubit triple up to per-vector phases
    references = [
        np.array([[1, 1], [1, -1]]) / np.sqrt(2),
        np.array([[1, 1], [1j, -1j]]) / np.sqrt(2),
        np.eye(2),
    ]
    mub2 = assemble_mub_set(build_route(GaloisField(2, 1)))
    mats = [mub2.basis_matrix(i) for i in range(3)]
    matched = set()
    for mat in mats:
        for idx, ref in enumerate(references):
            if idx in matched:
                continue
            overlap = np.abs(ref.conj().T @ mat)  # permutation matrix iff same basis
            if np.allclose(overlap.max(axis=0), 1, atol=1e-12) and np.allclose(
                overlap.sum(axis=0), 1, atol=1e-12
            ):
                matched.add(idx)
                break
    ok = ok and len(matched) == 3
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 6, "qubit-family sets and the N=2 triple", ok, elapsed, 1.0)


def test_criterion_07_route_equivalences(capsys):
    t0 = time.perf_counter()
    ok = True
    for p, r in EXACT_CASES:
        fld = GaloisField(p, r)
        n = fld.order
        eq = build_route_q(fld).entries
        ok = ok and np.array_equal(build_route_tensor(fld).entries, eq)

        etr = build_route_trace(fld).entries
        ok = ok and sorted(map(tuple, etr.T.tolist())) == sorted(map(tuple, eq.T.tolist()))
        # the pairing that aligns the two: m -> (trace of x^i * m)_i
        mono = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
        elems = list(fld.elements())
        perm = [
            fld.index_of(tuple(fld.trace(fld.mul(mono[i], m)) for i in range(r)))
            for m in elems
        ]
        ok = ok and sorted(perm) == list(range(n))
        for mi in range(n):
            for ki in range(n):
                if not np.array_equal(etr[:, mi * n + ki], eq[:, perm[mi] * n + perm[ki]]):
                    ok = False
                    break
            if not ok:
                break
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 7, "three routes, one set", ok, elapsed, 60.0)


def test_criterion_08_representation_audit(capsys):
    t0 = time.perf_counter()
    ok = True
    for p, r in EXACT_CASES:
        fld = GaloisField(p, r)
        omega = rep_multiplicities_omega(fld)
        linear = rep_multiplicities_r(fld)
        joint = rep_multiplicities_joint(fld)
        n = fld.order
        ok = ok and omega.counts[fld.zero] == 1
        ok = ok and sum(1 for v in omega.counts.values() if v == 2) == (n - 1) // 2
        ok = ok and set(omega.counts.values()) <= {0, 1, 2} and omega.total() == n
        ok = ok and all(v == 1 for v in linear.counts.values()) and len(linear.counts) == n
        ok = ok and all(v == 1 for v in joint.counts.values()) and len(joint.counts) == n
        # joint labels are exactly the per-row label pairs
        ok = ok and set(joint.counts) == {
            (lab[:r], lab[r:]) for lab in row_labels(fld)
        }
    t3 = rep_multiplicities_omega(GaloisField(3, 1))
    ok = ok and t3.counts == {(0,): 1, (1,): 2, (2,): 0}
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 8, "multiplicity tables, odd p", ok, elapsed)


def test_criterion_09_defect_detection(capsys):
    t0 = time.perf_counter()
    # the rootless quartic trap
    quartic = Poly(2, (1, 0, 1, 0, 1))
    ok = not is_irreducible(quartic) and find_factor(quartic) == Poly(2, (1, 1, 1))

    # single-exponent corruption is always caught
    rng = np.random.default_rng(99)
    for p, r in [(3, 1), (5, 1), (3, 2), (2, 2)]:
        mub = assemble_mub_set(build_route(GaloisField(p, r)))
        em = mub.exponents
        n = em.n
        for _ in range(100):
            row = int(rng.integers(n))
            col = int(rng.integers(n * n))
            delta = int(rng.integers(1, em.base_order))
            entries = np.array(em.entries, copy=True)
            entries[row, col] = (int(entries[row, col]) + delta) % em.base_order
            broken = MubSet(
                exponents=ExponentMatrix(
                    p=em.p, r=em.r, modulus=em.modulus, route=em.route,
                    base=em.base, entries=entries,
                ),
                includes_standard=True,
            )
            if verify_mub(broken, "exact").passed:
                ok = False
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 9, "reducibility trap and 400 mutations", ok, elapsed)


def test_criterion_10_deterministic_output(capsys, tmp_path):
    t0 = time.perf_counter()
    ok = True
    for tag, args in [
        ("odd", ["gen", "--p", "3", "--r", "2"]),
        ("even", ["gen", "--p", "2", "--r", "2"]),
    ]:
        paths = [tmp_path / f"{tag}-{i}.json" for i in (0, 1)]
        for path in paths:
            code = main(args + ["--out", str(path)])
            capsys.readouterr()
            ok = ok and code == 0
        ok = ok and paths[0].read_bytes() == paths[1].read_bytes()
        doc = json.loads(paths[0].read_text())
        ok = ok and doc["format"] == "mubkit-mub"
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 10, "byte-identical regeneration", ok, elapsed)
