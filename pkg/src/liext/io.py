"""Line-oriented text formats for algebras, extending data, pairs and matrices.

Algebra file::

    algebra perfect5
    field Q          # or F7
    dim 5
    basis e1 e2 e3 e4 e5   # optional
    [1,2] = 1*3
    [1,3] = -2*1

Indices are 1-based and only pairs ``i < j`` are listed.  A right-hand
side is a sum of terms ``c*k`` (``k`` alone means ``1*k``); an empty
right-hand side is zero.

An extending-datum file is an algebra file followed by ``dimV m`` and any
of ``laction x,i = ...`` (terms index V), ``raction x,i = ...`` (g),
``cocycle x,y = ...`` (g, ``x < y``), ``vbracket x,y = ...`` (V, ``x < y``).

A pair file holds ``lambda c1 ... cn`` then a line ``D`` and ``n`` matrix
rows; a matrix file holds only the rows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .extending import ExtendingDatum
from .field import FieldError, FieldSpec, QQ
from .lie import LieAlgebra, LieError, make_lie_algebra


class FormatError(ValueError):
    def __init__(self, message, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?(\d+)\s*")
_BRACKET = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=(.*)")
_DATUM = re.compile(r"(laction|raction|cocycle|vbracket)\s+(\d+)\s*,\s*(\d+)\s*=(.*)")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_terms(rhs: str, field: FieldSpec, size: int, lineno=None):
    """``"1*3 - 2/3*1"`` -> length-``size`` vector (1-based indices)."""
    vec = field.zeros(size)
    rhs = rhs.strip()
    pos = 0
    first = True
    while pos < len(rhs):
        m = _TERM.match(rhs, pos)
        if m is None or m.end() == pos:
            raise FormatError(f"cannot parse term near {rhs[pos:]!r}", lineno)
        sign, coeff, idx = m.groups()
        if sign is None and not first:
            raise FormatError(f"missing '+' or '-' before {m.group(0).strip()!r}", lineno)
        k = int(idx)
        if not 1 <= k <= size:
            raise FormatError(f"index {k} out of range 1..{size}", lineno)
        try:
            c = field.parse_scalar(coeff) if coeff else field.scalar(1)
        except FieldError as exc:
            raise FormatError(str(exc), lineno) from None
        if sign == "-":
            c = -c
        vec[k - 1] = field.reduce_scalar(vec[k - 1] + c)
        pos = m.end()
        first = False
    return vec


def format_terms(vec, field: FieldSpec) -> str:
    parts = []
    for k, c in enumerate(vec, start=1):
        c = field.reduce_scalar(c)
        if c != 0:
            parts.append(f"{field.format_scalar(c)}*{k}")
    return " + ".join(parts).replace("+ -", "- ")


def _header(lines, default_field: FieldSpec):
    """Consume ``algebra``/``field``/``dim``/``basis`` lines; return header and rest."""
    name, field, dim, names = "algebra", default_field, None, ()
    rest = []
    for number, line in lines:
        word, _, arg = line.partition(" ")
        arg = arg.strip()
        if word == "algebra" and not rest:
            name = arg or name
        elif word == "field" and not rest:
            try:
                field = FieldSpec.parse(arg)
            except FieldError as exc:
                raise FormatError(str(exc), number) from None
        elif word == "dim" and not rest:
            if not arg.isdigit():
                raise FormatError(f"bad dimension {arg!r}", number)
            dim = int(arg)
        elif word == "basis" and not rest:
            names = tuple(arg.split())
        else:
            rest.append((number, line))
    return name, field, dim, names, rest


def _algebra_from(name, field, dim, names, body, first_line=1):
    if dim is None:
        raise FormatError("missing 'dim' line", first_line)
    if names and len(names) != dim:
        raise FormatError(f"basis lists {len(names)} names for dimension {dim}", first_line)
    entries, seen = [], {}
    for number, line in body:
        m = _BRACKET.fullmatch(line)
        if m is None:
            raise FormatError(f"unrecognised line {line!r}", number)
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise FormatError(f"bracket index out of range 1..{dim}", number)
        if i >= j:
            raise FormatError("only pairs [i,j] with i < j may be listed", number)
        if (i, j) in seen:
            raise FormatError(f"pair [{i},{j}] already given on line {seen[(i, j)]}", number)
        seen[(i, j)] = number
        entries.append(((i - 1, j - 1), parse_terms(m.group(3), field, dim, number)))
    try:
        return make_lie_algebra(name, field, dim, entries, names or None)
    except LieError as exc:
        raise FormatError(str(exc)) from None


def parse_algebra(text: str, default_field: FieldSpec = QQ) -> LieAlgebra:
    name, field, dim, names, body = _header(_lines(text), default_field)
    return _algebra_from(name, field, dim, names, body)


def format_algebra(L: LieAlgebra) -> str:
    F = L.field
    out = [f"algebra {L.name}", f"field {F}", f"dim {L.dim}"]
    default = tuple(f"e{i + 1}" for i in range(L.dim))
    if L.basis_names and tuple(L.basis_names) != default:
        out.append("basis " + " ".join(L.basis_names))
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            terms = format_terms(L.sc[i, j], F)
            if terms:
                out.append(f"[{i + 1},{j + 1}] = {terms}")
    return "\n".join(out) + "\n"


def parse_datum(text: str, default_field: FieldSpec = QQ) -> ExtendingDatum:
    name, field, dim, names, body = _header(_lines(text), default_field)
    alg_lines, datum_lines, m = [], [], None
    for number, line in body:
        if line.startswith("dimV"):
            arg = line[4:].strip()
            if not arg.isdigit():
                raise FormatError(f"bad dimV {arg!r}", number)
            m = int(arg)
        elif m is None:
            if _DATUM.fullmatch(line):
                raise FormatError("datum line before 'dimV'", number)
            alg_lines.append((number, line))
        else:
            datum_lines.append((number, line))
    g = _algebra_from(name, field, dim, names, alg_lines)
    if m is None:
        raise FormatError("missing 'dimV' line")
    n = g.dim
    L = field.zeros((m, n, m))
    R = field.zeros((m, n, n))
    Fc = field.zeros((m, m, n))
    B = field.zeros((m, m, m))
    seen = {}
    for number, line in datum_lines:
        mt = _DATUM.fullmatch(line)
        if mt is None:
            raise FormatError(f"unrecognised line {line!r}", number)
        kind, a, b = mt.group(1), int(mt.group(2)), int(mt.group(3))
        second = n if kind in ("laction", "raction") else m
        if not (1 <= a <= m and 1 <= b <= second):
            raise FormatError(f"{kind} index out of range", number)
        if kind in ("cocycle", "vbracket") and a >= b:
            raise FormatError(f"{kind} lists only pairs x < y", number)
        if (kind, a, b) in seen:
            raise FormatError(f"{kind} {a},{b} already given on line {seen[(kind, a, b)]}", number)
        seen[(kind, a, b)] = number
        size = m if kind in ("laction", "vbracket") else n
        vec = parse_terms(mt.group(4), field, size, number)
        x, y = a - 1, b - 1
        if kind == "laction":
            L[x, y] = vec
        elif kind == "raction":
            R[x, y] = vec
        else:
            T = Fc if kind == "cocycle" else B
            T[x, y] = vec
            T[y, x] = field.reduce(-vec)
    return ExtendingDatum(g, L, R, Fc, B)


def format_datum(omega: ExtendingDatum) -> str:
    F = omega.field
    out = [format_algebra(omega.g).rstrip("\n"), f"dimV {omega.dimV}"]
    L, R, Fc, B = omega.tensors()
    n, m = omega.g.dim, omega.dimV
    for kind, T, second, pairs_only in (
        ("laction", L, n, False),
        ("raction", R, n, False),
        ("cocycle", Fc, m, True),
        ("vbracket", B, m, True),
    ):
        for x in range(m):
            for y in range(second):
                if pairs_only and x >= y:
                    continue
                terms = format_terms(T[x, y], F)
                if terms:
                    out.append(f"{kind} {x + 1},{y + 1} = {terms}")
    return "\n".join(out) + "\n"


def _row(line: str, field: FieldSpec, number: int):
    try:
        return [field.parse_scalar(tok) for tok in line.replace(",", " ").split()]
    except FieldError as exc:
        raise FormatError(str(exc), number) from None


def parse_scalars(text: str, field: FieldSpec):
    """Comma- or space-separated scalar literals (command-line vectors)."""
    return field.array(_row(text, field, None)) if text.strip() else field.zeros(0)


def parse_matrix(text: str, field: FieldSpec, n: int | None = None, lines=None):
    rows = []
    for number, line in lines if lines is not None else _lines(text):
        row = _row(line, field, number)
        if n is not None and len(row) != n:
            raise FormatError(f"expected {n} entries, found {len(row)}", number)
        if rows and len(row) != len(rows[0][1]):
            raise FormatError("rows have different lengths", number)
        rows.append((number, row))
    if n is not None and len(rows) != n:
        raise FormatError(f"expected {n} rows, found {len(rows)}", rows[-1][0] if rows else None)
    if rows and len(rows) != len(rows[0][1]):
        raise FormatError("matrix is not square", rows[-1][0])
    return field.array([r for _, r in rows]) if rows else field.zeros((0, 0))


@dataclass(frozen=True, eq=False)
class PairText:
    lam: np.ndarray
    D: np.ndarray


def parse_pair(text: str, field: FieldSpec, n: int) -> PairText:
    lam = None
    body = list(_lines(text))
    if not body:
        raise FormatError("empty pair file")
    number, line = body[0]
    word, _, arg = line.partition(" ")
    if word != "lambda":
        raise FormatError("pair file must start with 'lambda'", number)
    lam = field.array(_row(arg, field, number))
    if lam.shape[0] != n:
        raise FormatError(f"lambda needs {n} entries, found {lam.shape[0]}", number)
    if len(body) < 2 or body[1][1] != "D":
        raise FormatError("expected a line 'D' after lambda", body[1][0] if len(body) > 1 else number)
    return PairText(lam, parse_matrix("", field, n, lines=body[2:]))


def format_matrix(M, field: FieldSpec) -> str:
    return "".join(" ".join(field.format_scalar(x) for x in row) + "\n" for row in M)


def format_pair(lam, D, field: FieldSpec) -> str:
    return "lambda " + " ".join(field.format_scalar(x) for x in lam) + "\nD\n" + format_matrix(D, field)


__all__ = [
    "FormatError",
    "PairText",
    "format_algebra",
    "format_datum",
    "format_matrix",
    "format_pair",
    "format_terms",
    "parse_algebra",
    "parse_datum",
    "parse_matrix",
    "parse_pair",
    "parse_scalars",
    "parse_terms",
]
