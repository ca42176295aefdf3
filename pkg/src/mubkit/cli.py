"""Command line surface.

Verbs: `poly search` hunts the canonical primitive modulus, `gen` builds a
set and writes it out, `verify` checks a stored set, `rep` prints the
multiplicity audit, `field` dumps the power table and beta matrices.  Exit
codes: 0 pass, 1 verification failure, 2 usage or input error, 3 capacity.
The env var MUBKIT_MAX_N caps p^r (default 16384 for construction verbs,
125 for full verification).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .construct import ROUTES, assemble_mub_set, build_route, q_vector
from .errors import (
    CapacityError,
    DomainError,
    MubkitError,
    ParseError,
    StructuralError,
    UnsupportedRouteError,
)
from .gf import GaloisField
from .mubfile import read_mub_file, write_csv, write_mub_file
from .poly import element_order, least_primitive_root, search_primitive
from .verify import (
    rep_multiplicities_joint,
    rep_multiplicities_omega,
    rep_multiplicities_r,
    verify_mub,
)

GEN_CAP_DEFAULT = 16384
VERIFY_CAP_DEFAULT = 125


def _cap(default: int) -> int:
    raw = os.environ.get("MUBKIT_MAX_N")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise StructuralError(f"MUBKIT_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise StructuralError("MUBKIT_MAX_N must be positive")
    return value


def _check_cap(p: int, r: int, default: int) -> None:
    cap = _cap(default)
    if p ** r > cap:
        raise CapacityError(f"p^r = {p ** r} exceeds the cap of {cap} (MUBKIT_MAX_N)")


def _poly_coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers c_0,c_1,...,c_r, got {text!r}"
        ) from None


def _fmt_elem(fld: GaloisField, a) -> str:
    if fld.r == 1:
        return str(a[0])
    return "(" + ",".join(str(c) for c in a) + ")"


def _build_field(args) -> GaloisField:
    generator = getattr(args, "generator", None)
    coeffs = getattr(args, "poly", None)
    if generator is not None:
        return GaloisField(args.p, args.r, generator=generator)
    return GaloisField(args.p, args.r, coeffs)


# ---------------------------------------------------------------------------
# commands

def cmd_poly_search(args) -> int:
    _check_cap(args.p, args.r, GEN_CAP_DEFAULT)
    f = search_primitive(args.p, args.r)
    print(str(f))
    if args.r == 1:
        g = least_primitive_root(args.p)
        print(f"x acts as {g}, the least primitive root mod {args.p}; "
              f"other primitive roots are reachable via gen --generator")
    return 0


def cmd_gen(args) -> int:
    _check_cap(args.p, args.r, GEN_CAP_DEFAULT)
    fld = _build_field(args)
    em = build_route(fld, args.route)
    mub = assemble_mub_set(em)
    if args.format == "csv":
        write_csv(mub, args.out)
        print("note: CSV export is lossy numeric output; the JSON format is canonical",
              file=sys.stderr)
    else:
        write_mub_file(mub, args.out)
    print(f"wrote {args.out}: N={em.n}, route={em.route}, modulus {fld.modulus}")
    return 0


def cmd_verify(args) -> int:
    mub = read_mub_file(args.path)
    cap = _cap(VERIFY_CAP_DEFAULT)
    if mub.n > cap:
        raise CapacityError(
            f"N={mub.n} exceeds the full-verification cap of {cap} (MUBKIT_MAX_N)"
        )
    report = verify_mub(mub, mode=args.mode, tol=args.tol)
    em = mub.exponents
    print(f"file: {args.path}")
    print(f"p={em.p} r={em.r} N={em.n} route={em.route} base={em.base} "
          f"bases={mub.num_bases}")
    for line in report.summary_lines():
        print(line)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, indent=1)
            fh.write("\n")
    if args.csv:
        _write_report_csv(report, args.csv)
    if args.figure:
        from .figures import save_pair_heatmap

        save_pair_heatmap(report, args.figure)
    return 0 if report.passed else 1


def _write_report_csv(report, path) -> None:
    import csv

    metric = "worst_deviation" if report.mode == "numeric" else "failed_certificates"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["basis_a", "basis_b", metric])
        for a in range(report.num_bases):
            for b in range(a, report.num_bases):
                value = report.pair_worst[a][b]
                cell = f"{float(value):.17g}" if report.mode == "numeric" else int(value)
                writer.writerow([a, b, cell])


def cmd_rep(args) -> int:
    _check_cap(args.p, args.r, GEN_CAP_DEFAULT)
    fld = _build_field(args)
    print(f"representation audit for GF({args.p}^{args.r}), modulus {fld.modulus}")
    omega_table = joint_table = None
    if fld.prime.is_odd:
        omega_table = rep_multiplicities_omega(fld)
        print("quadratic family multiplicities (label: count):")
        for label in sorted(omega_table.counts):
            print(f"  {_fmt_elem(fld, label)}: {omega_table.counts[label]}")
    else:
        print("quadratic family table suppressed: its multiplicity claims "
              "hold for odd p only")
    r_table = rep_multiplicities_r(fld)
    print("linear family multiplicities (label: count):")
    for label in sorted(r_table.counts):
        print(f"  {_fmt_elem(fld, label)}: {r_table.counts[label]}")
    if fld.prime.is_odd:
        joint_table = rep_multiplicities_joint(fld)
        print("joint labels occurring, each with multiplicity 1:")
        for a, b in sorted(joint_table.counts):
            print(f"  ({_fmt_elem(fld, a)}, {_fmt_elem(fld, b)})")
    else:
        print("joint table suppressed: stated for odd p only")
    if args.figure:
        from .figures import save_multiplicity_figure

        save_multiplicity_figure(
            omega_table, r_table, joint_table, args.figure,
            title=f"GF({args.p}^{args.r}) multiplicities",
        )
    return 0


def cmd_field(args) -> int:
    _check_cap(args.p, args.r, GEN_CAP_DEFAULT)
    fld = _build_field(args)
    name = f"GF({args.p})" if args.r == 1 else f"GF({args.p}^{args.r})"
    print(f"{name}, modulus {fld.modulus}")
    order_x = element_order(fld.x, fld) if fld.x != fld.zero else 0
    group = fld.order - 1
    if order_x == group:
        print(f"x is primitive: order {order_x} = p^r - 1")
    else:
        print(f"x has order {order_x}; not primitive ({group} needed)")
    print("powers of x:")
    cur = fld.one
    for j in range(1, order_x + 1):
        cur = fld.mul(cur, fld.x)
        print(f"x^{j} = {_fmt_elem(fld, cur)}")
    print("q mapping (coefficients of the field square):")
    for l in fld.elements():
        q = q_vector(fld, l)
        print(f"q({_fmt_elem(fld, l)}) = {_fmt_elem(fld, q)}")
    print("beta matrices:")
    for i in range(fld.r):
        rows = ",".join(
            "[" + ",".join(str(v) for v in row) + "]" for row in fld.beta[i]
        )
        print(f"beta[{i}] = [{rows}]")
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mubkit",
        description="Construct and certify full sets of mutually unbiased bases "
                    "in prime power dimensions.",
    )
    ap.add_argument("--version", action="version", version=f"mubkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="modulus polynomial utilities")
    poly_sub = poly.add_subparsers(dest="poly_command", required=True)
    search = poly_sub.add_parser(
        "search", help="deterministically pick the canonical primitive modulus"
    )
    search.add_argument("--p", type=int, required=True, help="prime characteristic")
    search.add_argument("--r", type=int, required=True, help="extension degree")
    search.add_argument(
        "--require-primitive", action="store_true",
        help="explicitness flag; the search always returns a primitive modulus",
    )
    search.set_defaults(func=cmd_poly_search)

    gen = sub.add_parser("gen", help="construct a set and write it to a file")
    _field_args(gen)
    gen.add_argument("--route", choices=ROUTES, default=None,
                     help="construction route (default: q for odd p, char2 for p=2)")
    gen.add_argument("--out", required=True, help="output path")
    gen.add_argument("--format", choices=("json", "csv"), default="json",
                     help="json is canonical and lossless; csv is lossy numeric")
    gen.set_defaults(func=cmd_gen)

    verify = sub.add_parser("verify", help="check a stored set")
    verify.add_argument("path", help="set file to verify")
    verify.add_argument("--mode", choices=("exact", "numeric"), default="exact")
    verify.add_argument("--tol", type=float, default=1e-9,
                        help="numeric-mode tolerance (default 1e-9)")
    verify.add_argument("--report", help="write a machine-readable JSON report here")
    verify.add_argument("--csv", help="write the per-basis-pair table here (delimited)")
    verify.add_argument("--figure", help="render the per-basis-pair heatmap here (png)")
    verify.set_defaults(func=cmd_verify)

    rep = sub.add_parser("rep", help="print the multiplicity audit tables")
    _field_args(rep)
    rep.add_argument("--figure", help="render multiplicity charts here (png)")
    rep.set_defaults(func=cmd_rep)

    fieldp = sub.add_parser("field", help="print the power table and beta matrices")
    _field_args(fieldp)
    fieldp.set_defaults(func=cmd_field)
    return ap


def _field_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="prime characteristic")
    parser.add_argument("--r", type=int, required=True, help="extension degree")
    parser.add_argument("--poly", type=_poly_coeffs, default=None, metavar="C0,C1,...",
                        help="modulus coefficients, constant term first; searched when omitted")
    parser.add_argument("--generator", type=int, default=None,
                        help="r=1 only: use the modulus x - generator "
                             "(generator must be a primitive root mod p)")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, StructuralError, DomainError, UnsupportedRouteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MubkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
