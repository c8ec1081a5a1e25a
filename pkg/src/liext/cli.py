"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails
(the report is printed), 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io
from .extending import (
    ExtendingError,
    bicrossed_product,
    check_extending_structure,
    crossed_product,
    extract_datum,
    twisted_product,
    unified_product,
)
from .field import FieldError, FieldSpec, GF
from .lie import (
    CATALOG_NAMES,
    LieAlgebra,
    LieError,
    catalog,
    check_lie,
    derivations,
    inner_derivations,
    unvec_endo,
)
from .oracle import OracleError, SearchSpec, orbit_census
from .twder import (
    TwDerError,
    check_twisted_derivation,
    classify_codim1,
    codim1_product,
    dspace_for_lambda,
    lambda_samples,
    lambda_space,
    twder_cohomologous,
    twder_equivalent,
)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Output:
    """Collects plain lines and ``key=value`` records; renders one of them."""

    def __init__(self, machine: bool):
        self.machine = machine
        self.plain = []
        self.records = []

    def line(self, text=""):
        self.plain.append(text)

    def record(self, key, value):
        self.records.append((key, value))

    def both(self, key, value, text=None):
        self.record(key, value)
        self.line(text if text is not None else f"{key} = {value}")

    def render(self) -> str:
        if self.machine:
            return "".join(f"{k}={v}\n" for k, v in self.records)
        return "".join(line + "\n" for line in self.plain)


def _field(text):
    try:
        return FieldSpec.parse(text)
    except FieldError as exc:
        raise UsageError(str(exc)) from None


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_algebra(ref: str, field: FieldSpec) -> LieAlgebra:
    """A file path, or else a catalog name."""
    if os.path.exists(ref):
        try:
            return io.parse_algebra(_read(ref), field)
        except io.FormatError as exc:
            raise UsageError(f"{ref}: {exc}") from None
    try:
        return catalog(ref, field)
    except LieError:
        raise UsageError(
            f"{ref!r} is neither a file nor a catalog algebra ({', '.join(CATALOG_NAMES)})"
        ) from None


def _vector(text, field, n, what):
    try:
        vec = io.parse_scalars(text, field)
    except io.FormatError as exc:
        raise UsageError(f"{what}: {exc}") from None
    if vec.shape[0] != n:
        raise UsageError(f"{what} needs {n} entries, got {vec.shape[0]}")
    return vec


def _fmt_vec(vec, field):
    return " ".join(field.format_scalar(x) for x in vec)


def _report(out: Output, report, field, prefix=""):
    for c in report.checks:
        out.record(prefix + c.label, "pass" if c.passed else "fail")
    out.plain.extend(report.lines(field))


# -- verbs ------------------------------------------------------------------


def cmd_check(args, out):
    L = load_algebra(args.algebra, args.field)
    report = check_lie(L)
    out.both("algebra", L.name)
    out.both("dim", L.dim)
    _report(out, report, L.field)
    return OK if report.ok else FAILED


def cmd_der(args, out):
    L = load_algebra(args.algebra, args.field)
    der = derivations(L)
    inn = inner_derivations(L)
    out.both("dim_der", der.dim, f"dim Der = {der.dim}")
    out.both("dim_inn", inn.dim, f"dim Inn = {inn.dim}")
    out.both("dim_out", der.dim - inn.dim, f"dim Out = {der.dim - inn.dim}")
    for k, v in enumerate(der.vectors, start=1):
        out.line(f"D{k}:")
        for row in unvec_endo(v, L.dim):
            out.line("  " + _fmt_vec(row, L.field))
        out.record(f"der_{k}", ",".join(L.field.format_scalar(x) for x in v))
    return OK


def cmd_twder(args, out):
    L = load_algebra(args.algebra, args.field)
    F = L.field
    basis = lambda_space(L)
    out.both("dim_lambda", basis.dim, f"dim lambda-space = {basis.dim}")
    for k, v in enumerate(basis.vectors, start=1):
        out.both(f"lambda_{k}", _fmt_vec(v, F), f"  lambda_{k} = [{_fmt_vec(v, F)}]")
    if args.lam is not None:
        lam = _vector(args.lam, F, L.dim, "--lambda")
        try:
            ds = dspace_for_lambda(L, lam)
        except TwDerError as exc:
            out.line(str(exc))
            out.record("admissible", "no")
            return FAILED
        out.both("dim_D", ds.dim, f"dim D = {ds.dim}")
    if args.scan is not None:
        try:
            qs = [F.parse_scalar(t) for t in args.scan.split(",") if t.strip()]
        except FieldError as exc:
            raise UsageError(f"--scan: {exc}") from None
        dims = []
        for q in qs:
            (lam,) = lambda_samples(L, [q])
            d = dspace_for_lambda(L, lam).dim
            dims.append(d)
            out.both(f"dim_D[q={F.format_scalar(q)}]", d,
                     f"q = {F.format_scalar(q)}  lambda [{_fmt_vec(lam, F)}]  dim D = {d}")
        out.both("dims", ",".join(map(str, dims)), "dims " + ",".join(map(str, dims)))
    return OK


def cmd_codim1(args, out):
    L = load_algebra(args.algebra, args.field)
    F = L.field
    lam = _vector(args.lam, F, L.dim, "--lambda")
    try:
        D = io.parse_matrix(_read(args.D), F, L.dim)
    except io.FormatError as exc:
        raise UsageError(f"{args.D}: {exc}") from None
    report = check_twisted_derivation(L, lam, D)
    if not report.ok:
        _report(out, report, F)
        return FAILED
    E = codim1_product(L, lam, D)
    out.record("dim", E.dim)
    out.record("lie", "pass" if check_lie(E).ok else "fail")
    out.plain.append(io.format_algebra(E).rstrip("\n"))
    return OK


_BUILDERS = {
    "unified": lambda om: unified_product(om),
    "twisted": lambda om: twisted_product(om.g, _vlie(om), om.cocycle),
    "crossed": lambda om: crossed_product(om.g, _vlie(om), om.raction, om.cocycle),
    "bicrossed": lambda om: bicrossed_product(om.g, _vlie(om), om.laction, om.raction),
}
_ABSENT = {
    "unified": (),
    "twisted": ("laction", "raction"),
    "crossed": ("laction",),
    "bicrossed": ("cocycle",),
}


def _vlie(omega):
    return LieAlgebra("V", omega.field, omega.vbracket)


def cmd_product(args, out):
    try:
        omega = io.parse_datum(_read(args.datum), args.field)
    except io.FormatError as exc:
        raise UsageError(f"{args.datum}: {exc}") from None
    for attr in _ABSENT[args.kind]:
        if not omega.field.is_zero(getattr(omega, attr)):
            raise UsageError(f"a {args.kind} product takes no {attr} lines")
    try:
        E = _BUILDERS[args.kind](omega)
    except ExtendingError as exc:
        out.line(str(exc))
        _report(out, exc.report, omega.field)
        return FAILED
    out.record("kind", args.kind)
    out.record("dim", E.dim)
    out.record("lie", "pass" if check_lie(E).ok else "fail")
    out.plain.append(io.format_algebra(E).rstrip("\n"))
    return OK


def cmd_extract(args, out):
    E = load_algebra(args.algebra, args.field)
    try:
        omega = extract_datum(E, args.gdim)
    except ExtendingError as exc:
        out.both("error", str(exc))
        return FAILED
    report = check_extending_structure(omega)
    out.plain.append(io.format_datum(omega).rstrip("\n"))
    out.line()
    _report(out, report, E.field)
    return OK if report.ok else FAILED


def _load_pair(path, L):
    try:
        pair = io.parse_pair(_read(path), L.field, L.dim)
    except io.FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None
    return pair.lam, pair.D


def cmd_equiv_twder(args, out):
    L = load_algebra(args.algebra, args.field)
    F = L.field
    pairs = [_load_pair(args.pair_a, L), _load_pair(args.pair_b, L)]
    bad = False
    for tag, (lam, D) in zip("AB", pairs):
        report = check_twisted_derivation(L, lam, D)
        if not report.ok:
            bad = True
            out.line(f"pair {tag} is not a twisted derivation")
            _report(out, report, F, prefix=f"{tag}.")
    if bad:
        return FAILED
    w = twder_equivalent(L, *pairs)
    if w is None:
        out.both("equivalent", "no")
    else:
        out.both("equivalent", "yes")
        out.both("q", F.format_scalar(w.q))
        out.both("g0", _fmt_vec(w.g0, F), f"g0 = [{_fmt_vec(w.g0, F)}]")
    g0 = twder_cohomologous(L, *pairs)
    out.both("cohomologous", "no" if g0 is None else "yes")
    if g0 is not None:
        out.both("cohom_g0", _fmt_vec(g0, F), f"cohom_g0 = [{_fmt_vec(g0, F)}]")
    return OK


def cmd_classify(args, out):
    L = load_algebra(args.algebra, args.field)
    F = L.field
    try:
        samples = [F.parse_scalar(t) for t in args.samples.split(",")] if args.samples else None
    except FieldError as exc:
        raise UsageError(f"--samples: {exc}") from None
    try:
        rep = classify_codim1(L, samples) if samples else classify_codim1(L)
    except TwDerError as exc:
        raise UsageError(str(exc)) from None
    out.plain.extend(rep.lines())
    out.record("dim_lambda", rep.lambda_basis.dim)
    for s in rep.slices:
        key = _fmt_vec(s.lam, F).replace(" ", ",")
        out.record(f"slice[{key}]", f"D={s.dspace.dim},inner={s.inner.dim},quotient={s.quotient_dim}")
    if rep.census is not None:
        for k, v in rep.census.items():
            out.record(k, v)
    return OK


def cmd_enumerate(args, out):
    try:
        F = GF(args.p)
    except FieldError as exc:
        raise UsageError(str(exc)) from None
    g = load_algebra(args.g, F)
    if g.field != F:
        raise UsageError(f"algebra is over {g.field}, search field is {F}")
    try:
        census = orbit_census(SearchSpec(F, g, args.dimv, args.cap), args.relation, args.workers)
    except OracleError as exc:
        raise UsageError(str(exc)) from None
    for k, v in census.items():
        out.record(k, v)
    out.plain.extend(census.lines())
    failed = census.cross_check_failures or census.symmetry_failures or census.roundtrip_failures
    return FAILED if failed else OK


def cmd_catalog(args, out):
    L = load_algebra(args.name, args.field)
    out.record("name", L.name)
    out.record("dim", L.dim)
    out.plain.append(io.format_algebra(L).rstrip("\n"))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldSpec.parse("Q"),
                        help="Q or F<p>; applies to catalog names and files without a field line")
    common.add_argument("--format", choices=("plain", "machine"), default="plain")

    parser = _Parser(prog="liext", description="Lie algebra extending structures")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check", parents=[common], help="antisymmetry and Jacobi")
    p.add_argument("algebra")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("der", parents=[common], help="derivation algebra")
    p.add_argument("algebra")
    p.set_defaults(run=cmd_der)

    p = sub.add_parser("twder", parents=[common], help="twisted derivations")
    p.add_argument("algebra")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--lambda", dest="lam", metavar="COORDS")
    group.add_argument("--scan", metavar="Q1,Q2,...")
    p.set_defaults(run=cmd_twder)

    p = sub.add_parser("codim1", parents=[common], help="codimension-one extension")
    p.add_argument("algebra")
    p.add_argument("--lambda", dest="lam", required=True, metavar="COORDS")
    p.add_argument("--D", required=True, metavar="MATRIX_FILE")
    p.set_defaults(run=cmd_codim1)

    p = sub.add_parser("product", parents=[common], help="product of an extending datum")
    p.add_argument("--kind", choices=tuple(_BUILDERS), default="unified")
    p.add_argument("datum")
    p.set_defaults(run=cmd_product)

    p = sub.add_parser("extract", parents=[common], help="datum of the leading subalgebra")
    p.add_argument("algebra")
    p.add_argument("--gdim", type=int, required=True)
    p.set_defaults(run=cmd_extract)

    p = sub.add_parser("equiv-twder", parents=[common], help="compare two twisted derivations")
    p.add_argument("algebra")
    p.add_argument("pair_a")
    p.add_argument("pair_b")
    p.set_defaults(run=cmd_equiv_twder)

    p = sub.add_parser("classify-codim1", parents=[common], help="codimension-one classification")
    p.add_argument("algebra")
    p.add_argument("--samples", metavar="Q1,Q2,...")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("enumerate", parents=[common], help="exhaustive census over F_p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--dimv", type=int, required=True)
    p.add_argument("--relation", choices=("equiv", "cohom"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=SearchSpec.__dataclass_fields__["cap"].default)
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("catalog", parents=[common], help="print a built-in algebra")
    p.add_argument("name")
    p.set_defaults(run=cmd_catalog)
    return parser


def run(argv) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        out = Output(args.format == "machine")
        code = args.run(args, out)
        return code, out.render()
    except UsageError as exc:
        return USAGE, f"error: {exc}\n"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code != USAGE else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
