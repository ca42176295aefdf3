"""On-disk format for assembled sets, plus the lossy CSV export.

The canonical file is a UTF-8 JSON document written with a pinned field
order and one exponent row per line, so identical inputs produce identical
bytes on every platform and diffs stay row-aligned.  Only integers are
stored.  Loading re-validates everything a writer guarantees: the modulus
must still be irreducible, the base tag must match the characteristic and
the route, and every exponent must be in range.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .construct import BASE_I, BASE_OMEGA, ExponentMatrix, MubSet, ROUTES
from .cyclotomic import roots_of_unity
from .errors import ParseError, StructuralError
from .gf import GaloisField
from .poly import Poly, is_irreducible

FORMAT_NAME = "mubkit-mub"
FORMAT_VERSION = 1


def mub_to_text(mub: MubSet) -> str:
    em = mub.exponents
    head = [
        f'"format": "{FORMAT_NAME}"',
        f'"format_version": {FORMAT_VERSION}',
        f'"p": {em.p}',
        f'"r": {em.r}',
        f'"n": {em.n}',
        f'"modulus": [{",".join(str(c) for c in em.modulus)}]',
        f'"route": "{em.route}"',
        f'"base": "{em.base}"',
        '"row_order": "lex-l"',
        '"col_order": "lex-mk"',
        f'"includes_standard": {"true" if mub.includes_standard else "false"}',
    ]
    lines = ["{"]
    for item in head:
        lines.append(item + ",")
    lines.append('"exponents": [')
    n = em.n
    for i in range(n):
        row = ",".join(str(int(v)) for v in em.entries[i])
        lines.append(f"[{row}]" + ("," if i < n - 1 else ""))
    lines.append("]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_mub_file(mub: MubSet, path) -> None:
    Path(path).write_text(mub_to_text(mub), encoding="utf-8")


def parse_mub_text(text: str) -> MubSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"not a valid set file: {exc.msg} at line {exc.lineno}, column {exc.colno} "
            f"(offset {exc.pos})"
        ) from None
    if not isinstance(doc, dict):
        raise StructuralError("set file must hold a JSON object")
    if doc.get("format") != FORMAT_NAME:
        raise StructuralError(f"unknown format tag {doc.get('format')!r}")
    if doc.get("format_version") != FORMAT_VERSION:
        raise StructuralError(f"unsupported format version {doc.get('format_version')!r}")
    required = {"p", "r", "n", "modulus", "route", "base", "includes_standard", "exponents"}
    missing = required - doc.keys()
    if missing:
        raise StructuralError(f"missing fields: {sorted(missing)}")

    p, r = doc["p"], doc["r"]
    if not isinstance(p, int) or not isinstance(r, int):
        raise StructuralError("p and r must be integers")
    route = doc["route"]
    base = doc["base"]
    if route not in ROUTES:
        raise StructuralError(f"unknown route {route!r}")
    if base not in (BASE_OMEGA, BASE_I):
        raise StructuralError(f"unknown base tag {base!r}")
    if (base == BASE_I) != (p == 2) or (route == "char2") != (p == 2):
        raise StructuralError(f"base/route tags {base!r}/{route!r} do not match p={p}")

    modulus = doc["modulus"]
    if (not isinstance(modulus, list)
            or not all(isinstance(c, int) for c in modulus)):
        raise StructuralError("modulus must be a list of integers")
    f = Poly.make(p, modulus)
    if f.degree != r or not f.is_monic:
        raise StructuralError(f"modulus must be monic of degree {r}")
    if not is_irreducible(f):
        raise StructuralError(f"modulus {f} is reducible; file rejected")

    n = p ** r
    if doc["n"] != n:
        raise StructuralError(f"n field says {doc['n']}, but p^r = {n}")
    rows = doc["exponents"]
    if not isinstance(rows, list) or len(rows) != n:
        raise StructuralError(f"exponent matrix must have {n} rows")
    if not all(isinstance(row, list) and len(row) == n * n for row in rows):
        raise StructuralError(f"every exponent row must have {n * n} entries")
    if not all(isinstance(v, int) for row in rows for v in row):
        raise StructuralError("exponents must be integers (no floats are accepted)")

    import numpy as np
    em = ExponentMatrix(
        p=p, r=r, modulus=f.coeffs, route=route, base=base,
        entries=np.array(rows, dtype=np.int64),
    )
    if not isinstance(doc["includes_standard"], bool):
        raise StructuralError("includes_standard must be a boolean")
    return MubSet(exponents=em, includes_standard=doc["includes_standard"])


def read_mub_file(path) -> MubSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_mub_text(text)


def field_for(mub: MubSet) -> GaloisField:
    """Rebuild the field a stored set was constructed over."""
    em = mub.exponents
    return GaloisField(em.p, em.r, em.modulus)


def complex_cell(z: complex) -> str:
    """One CSV cell in a+bi form with 17 significant digits."""
    return f"{z.real:.17g}{z.imag:+.17g}i"


def write_csv(mub: MubSet, path) -> None:
    """Numeric export: one row per component l, bases side by side.

    Non-standard strips come first in m-major order, then the standard
    basis columns.  Lossy by construction (floating point); the canonical
    JSON format is the one that round-trips.
    """
    em = mub.exponents
    n = em.n
    table = roots_of_unity(em.base_order)
    scale = 1.0 / math.sqrt(n)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for li in range(n):
            cells = [complex_cell(table[e] * scale) for e in em.entries[li]]
            if mub.includes_standard:
                cells.extend(complex_cell(complex(1.0 if li == k else 0.0))
                             for k in range(n))
            fh.write(",".join(cells) + "\n")
