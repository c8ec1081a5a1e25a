"""Extending data, unified products and their special cases.

An extending datum of ``g`` (dim ``n``) through ``V`` (dim ``m``) is held
as four tensors, indices ``x, y`` for V and ``a, b`` for g::

    laction[x, a, w]   coefficient of v_w in  x <| e_a
    raction[x, a, k]   coefficient of e_k in  x |> e_a
    cocycle[x, y, k]   coefficient of e_k in  f(x, y)
    vbracket[x, y, w]  coefficient of v_w in  {x, y}

The unified product lives on the basis ``e_1..e_n, v_1..v_m`` (g first).
Linear maps ``r: V -> g`` and ``v: V -> V`` are matrices whose column
``j`` is the image of ``v_j``.

The defect helpers accept leading batch axes on the datum tensors, which
the exhaustive oracle uses to check whole slices of raw data at once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import FieldSpec
from .lie import LieAlgebra, alternating_defect, change_basis, check_lie, is_subalgebra
from .linalg import SubspaceBasis, inverse, is_invertible, nullspace
from .report import AxiomCheck, AxiomReport, check_from_defect


class ExtendingError(ValueError):
    """Raised when a construction is fed data that fails its axioms."""

    def __init__(self, message, report: AxiomReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True, eq=False)
class ExtendingDatum:
    g: LieAlgebra
    laction: np.ndarray
    raction: np.ndarray
    cocycle: np.ndarray
    vbracket: np.ndarray

    def __post_init__(self):
        n, m = self.g.dim, self.laction.shape[0]
        shapes = {
            "laction": (self.laction, (m, n, m)),
            "raction": (self.raction, (m, n, n)),
            "cocycle": (self.cocycle, (m, m, n)),
            "vbracket": (self.vbracket, (m, m, m)),
        }
        for label, (arr, shape) in shapes.items():
            if arr.shape != shape:
                raise ValueError(f"{label} has shape {arr.shape}, expected {shape}")

    @property
    def field(self) -> FieldSpec:
        return self.g.field

    @property
    def dimV(self) -> int:
        return self.laction.shape[0]

    def tensors(self):
        return self.laction, self.raction, self.cocycle, self.vbracket

    def key(self) -> tuple:
        """Hashable exact fingerprint (used by the enumeration oracle)."""
        F = self.field
        return tuple(F.reduce_scalar(x) for t in self.tensors() for x in np.asarray(t).ravel())

    def __eq__(self, other):
        if not isinstance(other, ExtendingDatum):
            return NotImplemented
        if self.field != other.field or self.g != other.g or self.dimV != other.dimV:
            return False
        return all(
            self.field.is_zero(a - b) for a, b in zip(self.tensors(), other.tensors())
        )

    __hash__ = None


def make_datum(g: LieAlgebra, dimV: int, laction=None, raction=None, cocycle=None, vbracket=None):
    """Datum with omitted maps set to zero."""
    F = g.field
    n, m = g.dim, dimV

    def coerce(arr, shape):
        return F.zeros(shape) if arr is None else F.array(arr).reshape(shape)

    return ExtendingDatum(
        g,
        coerce(laction, (m, n, m)),
        coerce(raction, (m, n, n)),
        coerce(cocycle, (m, m, n)),
        coerce(vbracket, (m, m, m)),
    )


def trivial_datum(g: LieAlgebra, dimV: int) -> ExtendingDatum:
    return make_datum(g, dimV)


# -- the seven compatibilities ------------------------------------------------


def le_defects(L, R, Fc, B, c, field: FieldSpec) -> dict:
    """Defect tensors of LE1-LE7; every entry vanishes iff the axiom holds.

    Shapes (without batch axes): LE1 pair of ``(x, n+m)`` and ``(x, y, n+m)``,
    LE2 ``(x,a,b,w)``, LE3 ``(x,a,b,k)``, LE4 ``(x,y,a,w)``, LE5 ``(x,y,a,k)``,
    LE6 ``(x,y,z,k)``, LE7 ``(x,y,z,w)``.
    """
    e = np.einsum
    f_diag, f_sym = alternating_defect(Fc, field)
    b_diag, b_sym = alternating_defect(B, field)
    le1_diag = np.concatenate([f_diag, b_diag], axis=-1)
    le1_sym = np.concatenate([f_sym, b_sym], axis=-1)

    # x <| [a, b] = (x <| a) <| b - (x <| b) <| a
    t = e("...xau,...ubw->...xabw", L, L)
    le2 = e("abk,...xkw->...xabw", c, L) - t + e("...xbaw->...xabw", t)

    # x |> [a,b] = [x|>a, b] + [a, x|>b] + (x<|a)|>b - (x<|b)|>a
    t = e("...xau,...ubo->...xabo", L, R)
    le3 = (
        e("abk,...xko->...xabo", c, R)
        - e("...xak,kbo->...xabo", R, c)
        - e("...xbk,ako->...xabo", R, c)
        - t
        + e("...xbao->...xabo", t)
    )

    # {x,y} <| a = {x, y<|a} + {x<|a, y} + x <| (y|>a) - y <| (x|>a)
    t = e("...yak,...xkw->...xyaw", R, L)
    le4 = (
        e("...xyu,...uaw->...xyaw", B, L)
        - e("...yau,...xuw->...xyaw", L, B)
        - e("...xau,...uyw->...xyaw", L, B)
        - t
        + e("...yxaw->...xyaw", t)
    )

    # {x,y} |> a = x|>(y|>a) - y|>(x|>a) + [a, f(x,y)] + f(x, y<|a) + f(x<|a, y)
    t = e("...yak,...xko->...xyao", R, R)
    le5 = (
        e("...xyu,...uao->...xyao", B, R)
        - t
        + e("...yxao->...xyao", t)
        - e("...xyk,ako->...xyao", Fc, c)
        - e("...yau,...xuo->...xyao", L, Fc)
        - e("...xau,...uyo->...xyao", L, Fc)
    )

    # cyclic sums over (x, y, z)
    t6 = e("...yzu,...xuo->...xyzo", B, Fc) + e("...yzk,...xko->...xyzo", Fc, R)
    t7 = e("...yzu,...xuw->...xyzw", B, B) + e("...yzk,...xkw->...xyzw", Fc, L)
    le6 = t6 + e("...yzxo->...xyzo", t6) + e("...zxyo->...xyzo", t6)
    le7 = t7 + e("...yzxo->...xyzo", t7) + e("...zxyo->...xyzo", t7)

    r = field.reduce
    return {
        "LE1": (r(le1_diag), r(le1_sym)),
        "LE2": r(le2),
        "LE3": r(le3),
        "LE4": r(le4),
        "LE5": r(le5),
        "LE6": r(le6),
        "LE7": r(le7),
    }


_LE_TEXT = {
    "LE1": "f(x,x) = 0, {x,x} = 0",
    "LE2": "(V, <|) is a right g-module",
    "LE3": "x|>[g,h] = [x|>g,h] + [g,x|>h] + (x<|g)|>h - (x<|h)|>g",
    "LE4": "{x,y}<|g = {x,y<|g} + {x<|g,y} + x<|(y|>g) - y<|(x|>g)",
    "LE5": "{x,y}|>g = x|>(y|>g) - y|>(x|>g) + [g,f(x,y)] + f(x,y<|g) + f(x<|g,y)",
    "LE6": "twisted cocycle condition",
    "LE7": "twisted Jacobi condition",
}


def _alternating_check(label, diag, sym, field, description) -> AxiomCheck:
    check = check_from_defect(label, diag, field, description)
    pairs = check_from_defect(label, sym, field)
    for w, d in zip(pairs.witnesses, pairs.defects):
        if w[0] < w[1]:
            check.witnesses.append(w)
            check.defects.append(d)
    return check


def check_extending_structure(omega: ExtendingDatum) -> AxiomReport:
    """Evaluate LE1-LE7 on every basis tuple."""
    F = omega.field
    defects = le_defects(*omega.tensors(), omega.g.sc, F)
    report = AxiomReport()
    diag, sym = defects["LE1"]
    report.checks.append(_alternating_check("LE1", diag, sym, F, _LE_TEXT["LE1"]))
    for label in ("LE2", "LE3", "LE4", "LE5", "LE6", "LE7"):
        report.checks.append(check_from_defect(label, defects[label], F, _LE_TEXT[label]))
    return report


def is_extending_structure_batch(L, R, Fc, B, c, field: FieldSpec):
    """One boolean per leading batch index: do LE1-LE7 all hold?"""
    defects = le_defects(L, R, Fc, B, c, field)
    batch = L.shape[:-3]
    ok = np.ones(batch, dtype=bool)
    for value in defects.values():
        for t in value if isinstance(value, tuple) else (value,):
            ok &= ~np.any(t.reshape(batch + (-1,)) != 0, axis=-1)
    return ok


def is_extending_structure(omega: ExtendingDatum) -> bool:
    return bool(is_extending_structure_batch(*omega.tensors(), omega.g.sc, omega.field))


# -- products -------------------------------------------------------------


def unified_bracket(L, R, Fc, B, c, field: FieldSpec):
    """Structure constants of the bracket on g x V, with no validation.

    ``[(g,x),(h,y)] = ([g,h] + x|>h - y|>g + f(x,y), {x,y} + x<|h - y<|g)``
    """
    n = c.shape[0]
    m = L.shape[-3]
    batch = L.shape[:-3]
    sc = field.zeros(batch + (n + m, n + m, n + m))
    sc[..., :n, :n, :n] = c
    # [(0,x), (e_a,0)] = (x|>a, x<|a) and the mirrored [(e_a,0), (0,x)]
    sc[..., n:, :n, :n] = R
    sc[..., n:, :n, n:] = L
    sc[..., :n, n:, :n] = field.reduce(-np.swapaxes(R, -3, -2))
    sc[..., :n, n:, n:] = field.reduce(-np.swapaxes(L, -3, -2))
    sc[..., n:, n:, :n] = Fc
    sc[..., n:, n:, n:] = B
    return sc


def unified_product(omega: ExtendingDatum, name=None, validate: bool = True) -> LieAlgebra:
    if validate:
        report = check_extending_structure(omega)
        if not report.ok:
            raise ExtendingError("datum is not a Lie extending structure", report)
    g = omega.g
    sc = unified_bracket(*omega.tensors(), g.sc, omega.field)
    names = g.basis_names + tuple(f"x{i + 1}" for i in range(omega.dimV))
    if len(set(names)) != len(names):
        names = ()
    return LieAlgebra(name or f"unified:{g.name}:{omega.dimV}", omega.field, sc, names)


def _v_lie_check(V: LieAlgebra) -> AxiomCheck:
    rep = check_lie(V)
    check = AxiomCheck("V_LIE", "(V, {-,-}) is a Lie algebra")
    for c in rep.checks:
        check.witnesses.extend(c.witnesses)
        check.defects.extend(c.defects)
    return check


def _require_same_field(*algebras):
    fields = {a.field for a in algebras}
    if len(fields) != 1:
        raise ExtendingError("all algebras must share a field")


def check_twisted_cocycle(g: LieAlgebra, V: LieAlgebra, f) -> AxiomReport:
    """V is Lie and ``f`` is a classical 2-cocycle with values central in g."""
    F = g.field
    f = F.array(f)
    report = AxiomReport([_v_lie_check(V)])
    diag, sym = alternating_defect(f, F)
    report.checks.append(_alternating_check("CC1", diag, sym, F, "f(x,x) = 0"))
    cc2 = np.einsum("ajk,xyj->xyak", g.sc, f)
    report.checks.append(check_from_defect("CC2", cc2, F, "[g, f(x,y)] = 0"))
    t = np.einsum("yzu,xuk->xyzk", V.sc, f)
    cc3 = t + np.einsum("yzxk->xyzk", t) + np.einsum("zxyk->xyzk", t)
    report.checks.append(check_from_defect("CC3", cc3, F, "f(x,{y,z}) + cyclic = 0"))
    return report


def twisted_product(g: LieAlgebra, V: LieAlgebra, f, name=None) -> LieAlgebra:
    """``[(g,x),(h,y)] = ([g,h] + f(x,y), {x,y})``."""
    _require_same_field(g, V)
    report = check_twisted_cocycle(g, V, f)
    if not report.ok:
        raise ExtendingError("f is not a 2-cocycle of Lie algebras", report)
    omega = make_datum(g, V.dim, cocycle=f, vbracket=V.sc)
    return unified_product(omega, name or f"twisted:{g.name}:{V.name}", validate=False)


@dataclass(frozen=True, eq=False)
class CrossedSystem:
    g: LieAlgebra
    h: LieAlgebra
    raction: np.ndarray
    cocycle: np.ndarray

    def datum(self) -> ExtendingDatum:
        return make_datum(self.g, self.h.dim, raction=self.raction,
                          cocycle=self.cocycle, vbracket=self.h.sc)

    def __eq__(self, other):
        if not isinstance(other, CrossedSystem):
            return NotImplemented
        F = self.g.field
        return (
            self.g == other.g
            and self.h == other.h
            and F.is_zero(self.raction - other.raction)
            and F.is_zero(self.cocycle - other.cocycle)
        )

    __hash__ = None


def check_crossed_system(g: LieAlgebra, V: LieAlgebra, raction, cocycle) -> AxiomReport:
    """V Lie plus the four crossed-system compatibilities CS1-CS4."""
    F = g.field
    omega = make_datum(g, V.dim, raction=raction, cocycle=cocycle, vbracket=V.sc)
    d = le_defects(*omega.tensors(), g.sc, F)
    report = AxiomReport([_v_lie_check(V)])
    f_diag, f_sym = alternating_defect(omega.cocycle, F)
    report.checks.append(_alternating_check("CS1", f_diag, f_sym, F, "f(x,x) = 0"))
    # with trivial <| the LE3/LE5/LE6 defects reduce to the crossed-system ones
    report.checks.append(check_from_defect("CS2", d["LE3"], F, "x|>[g,h] = [x|>g,h] + [g,x|>h]"))
    report.checks.append(check_from_defect(
        "CS3", d["LE5"], F, "{x,y}|>g = x|>(y|>g) - y|>(x|>g) + [g,f(x,y)]"))
    report.checks.append(check_from_defect("CS4", d["LE6"], F, "twisted cocycle condition"))
    return report


def crossed_product(g: LieAlgebra, V: LieAlgebra, raction, cocycle, name=None) -> LieAlgebra:
    """``[(g,x),(h,y)] = ([g,h] + x|>h - y|>g + f(x,y), {x,y})``."""
    _require_same_field(g, V)
    report = check_crossed_system(g, V, raction, cocycle)
    if not report.ok:
        raise ExtendingError("not a crossed system of Lie algebras", report)
    omega = make_datum(g, V.dim, raction=raction, cocycle=cocycle, vbracket=V.sc)
    return unified_product(omega, name or f"crossed:{g.name}:{V.name}", validate=False)


def check_matched_pair(g: LieAlgebra, V: LieAlgebra, laction, raction) -> AxiomReport:
    F = g.field
    omega = make_datum(g, V.dim, laction=laction, raction=raction, vbracket=V.sc)
    d = le_defects(*omega.tensors(), g.sc, F)
    report = AxiomReport([_v_lie_check(V)])
    report.checks.append(check_from_defect(
        "RMOD", d["LE2"], F, "x<|[g,h] = (x<|g)<|h - (x<|h)<|g"))
    # with f = 0 the LE5 defect is exactly the left-module condition
    report.checks.append(check_from_defect(
        "LMOD", d["LE5"], F, "{x,y}|>g = x|>(y|>g) - y|>(x|>g)"))
    report.checks.append(check_from_defect("MP1", d["LE3"], F, _LE_TEXT["LE3"]))
    report.checks.append(check_from_defect("MP2", d["LE4"], F, _LE_TEXT["LE4"]))
    return report


def bicrossed_product(g: LieAlgebra, V: LieAlgebra, laction, raction, name=None) -> LieAlgebra:
    _require_same_field(g, V)
    report = check_matched_pair(g, V, laction, raction)
    if not report.ok:
        raise ExtendingError("not a matched pair of Lie algebras", report)
    omega = make_datum(g, V.dim, laction=laction, raction=raction, vbracket=V.sc)
    return unified_product(omega, name or f"bicrossed:{g.name}:{V.name}", validate=False)


# -- extraction from a bigger algebra --------------------------------------


def _leading_block_closed(E: LieAlgebra, n: int) -> bool:
    return E.field.is_zero(E.sc[:n, :n, n:])


def canonical_retraction(E: LieAlgebra, g_dim: int):
    F = E.field
    p = F.zeros((g_dim, E.dim))
    p[:, :g_dim] = F.eye(g_dim)
    return p


def subalgebra_on_leading(E: LieAlgebra, g_dim: int, name=None) -> LieAlgebra:
    names = E.basis_names[:g_dim]
    return LieAlgebra(name or f"{E.name}[:{g_dim}]", E.field, E.sc[:g_dim, :g_dim, :g_dim].copy(), names)


def retraction_basis(E: LieAlgebra, g_dim: int, p):
    """Basis ``e_1..e_n, e_k - p(e_k)`` adapted to ``E = g + Ker(p)``."""
    F = E.field
    Q = F.eye(E.dim)
    Q[:g_dim, g_dim:] = F.reduce(-p[:, g_dim:])
    return Q


def extract_datum(E: LieAlgebra, g_dim: int, p=None, g: LieAlgebra | None = None) -> ExtendingDatum:
    """Extending datum of the leading ``g_dim`` coordinates through ``Ker(p)``.

    ``x|>g = p([x,g])``, ``x<|g = [x,g] - p([x,g])``, ``f(x,y) = p([x,y])``,
    ``{x,y} = [x,y] - p([x,y])``, where ``Ker(p)`` is coordinatised by
    ``e_k - p(e_k)`` for the trailing basis vectors.
    """
    F = E.field
    n = g_dim
    if not 0 <= n <= E.dim:
        raise ExtendingError(f"g_dim {n} out of range for an algebra of dim {E.dim}")
    if not _leading_block_closed(E, n):
        raise ExtendingError("the leading basis vectors do not span a subalgebra")
    p = canonical_retraction(E, n) if p is None else F.array(p)
    if p.shape != (n, E.dim):
        raise ExtendingError(f"retraction must be {n} x {E.dim}")
    if not F.is_zero(p[:, :n] - F.eye(n)):
        raise ExtendingError("p is not a retraction of the inclusion of g")
    Eb = E if F.is_zero(p[:, n:]) else change_basis(E, retraction_basis(E, n, p))
    sc = Eb.sc
    g = g if g is not None else subalgebra_on_leading(E, n)
    return ExtendingDatum(
        g,
        laction=sc[n:, :n, n:].copy(),
        raction=sc[n:, :n, :n].copy(),
        cocycle=sc[n:, n:, :n].copy(),
        vbracket=sc[n:, n:, n:].copy(),
    )


def section_basis(E: LieAlgebra, g_dim: int, s):
    """Basis matrix of ``psi(g, x) = g + s(x)``."""
    F = E.field
    Q = F.eye(E.dim)
    Q[:, g_dim:] = s
    return Q


def extract_crossed_system(E: LieAlgebra, g_dim: int, s=None) -> CrossedSystem:
    """Crossed system of the ideal spanned by the leading ``g_dim`` coordinates.

    The quotient ``h = E/g`` is coordinatised by the trailing coordinates
    and ``s: h -> E`` must be a section of that projection.  Then
    ``x|>g = [s(x), g]`` and ``f(x,y) = [s(x), s(y)] - s([x,y])``.
    """
    F = E.field
    n = g_dim
    m = E.dim - n
    if not F.is_zero(E.sc[:n, :, n:]) or not F.is_zero(E.sc[:, :n, n:]):
        raise ExtendingError("the leading basis vectors do not span an ideal")
    if s is None:
        s = F.zeros((E.dim, m))
        s[n:] = F.eye(m)
    s = F.array(s)
    if s.shape != (E.dim, m) or not F.is_zero(s[n:] - F.eye(m)):
        raise ExtendingError("s is not a section of the projection onto E/g")
    Eb = change_basis(E, section_basis(E, n, s))
    sc = Eb.sc
    h = LieAlgebra(f"{E.name}/g", F, sc[n:, n:, n:].copy(), E.basis_names[n:])
    return CrossedSystem(subalgebra_on_leading(E, n), h, sc[n:, :n, :n].copy(), sc[n:, n:, :n].copy())


# -- morphisms, equivalence and cohomology --------------------------------


def check_morphism(omega: ExtendingDatum, omega2: ExtendingDatum, r, v):
    """Conditions ML1-ML4 for ``psi(g, x) = (g + r(x), v(x))``.

    Returns ``(report, is_iso)``; ``is_iso`` is true iff ``v`` is invertible.
    """
    F = omega.field
    if omega.g != omega2.g or omega.dimV != omega2.dimV:
        raise ExtendingError("both data must extend the same g through the same V")
    e = np.einsum
    c = omega.g.sc
    L, R, Fc, B = omega.tensors()
    L2, R2, F2, B2 = omega2.tensors()
    r = F.array(r).reshape(omega.g.dim, omega.dimV)
    v = F.array(v).reshape(omega.dimV, omega.dimV)

    ml1 = e("ux,uaw->xaw", v, L2) - e("xau,wu->xaw", L, v)
    ml2 = (
        e("xau,ku->xak", L, r)
        - e("jx,jak->xak", r, c)
        + R
        - e("ux,uak->xak", v, R2)
    )
    vx_lr = e("ux,jy,ujw->xyw", v, r, L2)  # v(x) <|' r(y)
    ml3 = (
        e("xyu,wu->xyw", B, v)
        - e("ux,ty,utw->xyw", v, v, B2)
        - vx_lr
        + e("yxw->xyw", vx_lr)
    )
    vx_rr = e("ux,jy,ujk->xyk", v, r, R2)  # v(x) |>' r(y)
    ml4 = (
        e("xyu,ku->xyk", B, r)
        - e("ix,jy,ijk->xyk", r, r, c)
        - vx_rr
        + e("yxk->xyk", vx_rr)
        - e("ux,ty,utk->xyk", v, v, F2)
        + Fc
    )
    report = AxiomReport([
        check_from_defect("ML1", ml1, F, "v(x)<|'g = v(x<|g)"),
        check_from_defect("ML2", ml2, F, "r(x<|g) = [r(x),g] - x|>g + v(x)|>'g"),
        check_from_defect("ML3", ml3, F, "v({x,y}) = {v(x),v(y)}' + v(x)<|'r(y) - v(y)<|'r(x)"),
        check_from_defect("ML4", ml4, F, "r({x,y}) = [r(x),r(y)] + ... + f'(v(x),v(y)) - f(x,y)"),
    ])
    return report, is_invertible(v, F)


def transform_datum(omega: ExtendingDatum, r, v) -> ExtendingDatum:
    """The datum implemented from ``omega`` by ``(r, v)``, ``v`` invertible."""
    F = omega.field
    e = np.einsum
    c = omega.g.sc
    n, m = omega.g.dim, omega.dimV
    r = F.array(r).reshape(n, m)
    v = F.array(v).reshape(m, m)
    vi = inverse(v, F)
    if vi is None:
        raise ExtendingError("v must be invertible")
    L, R, Fc, B = omega.tensors()
    # pull every map back along v^{-1}: Lt[x] = v^{-1}(x) <| -, and so on
    Lt = e("tx,tau->xau", vi, L)
    Rt = e("tx,tak->xak", vi, R)
    Ft = e("tx,sy,tsk->xyk", vi, vi, Fc)
    Bt = e("tx,sy,tsu->xyu", vi, vi, B)
    rt = r @ vi  # column x: r(v^{-1}(x))
    LR = e("jy,xju->xyu", rt, Lt)  # v^{-1}(x) <| r(v^{-1}(y))
    RR = e("jy,xjk->xyk", rt, Rt)  # v^{-1}(x) |> r(v^{-1}(y))

    L2 = e("xau,wu->xaw", Lt, v)
    R2 = e("xau,ku->xak", Lt, r) + Rt + e("jx,ajk->xak", rt, c)
    F2 = (
        Ft
        + e("xyu,ku->xyk", Bt, r)
        + e("ix,jy,ijk->xyk", rt, rt, c)
        - e("xyu,ku->xyk", LR, r)
        - RR
        + e("yxu,ku->xyk", LR, r)
        + e("yxk->xyk", RR)
    )
    B2 = e("xyu,wu->xyw", Bt - LR + e("yxu->xyu", LR), v)
    return ExtendingDatum(omega.g, F.reduce(L2), F.reduce(R2), F.reduce(F2), F.reduce(B2))


def cohomologous_transform(omega: ExtendingDatum, r) -> ExtendingDatum:
    """The datum obtained from ``omega`` by ``r`` with ``<|`` unchanged.

    ``x|>'g = x|>g + r(x<|g) - [r(x),g]``,
    ``f'(x,y) = f(x,y) + r({x,y}) + [r(x),r(y)] + y|>r(x) - x|>r(y)
    + r(y<|r(x)) - r(x<|r(y))``,
    ``{x,y}' = {x,y} - x<|r(y) + y<|r(x)``.
    """
    F = omega.field
    e = np.einsum
    c = omega.g.sc
    r = F.array(r).reshape(omega.g.dim, omega.dimV)
    L, R, Fc, B = omega.tensors()
    x_l_ry = e("jy,xju->xyu", r, L)
    x_r_ry = e("jy,xjk->xyk", r, R)
    R2 = R + e("xau,ku->xak", L, r) - e("jx,jak->xak", r, c)
    F2 = (
        Fc
        + e("xyu,ku->xyk", B, r)
        + e("ix,jy,ijk->xyk", r, r, c)
        + e("yxk->xyk", x_r_ry)
        - x_r_ry
        + e("yxu,ku->xyk", x_l_ry, r)
        - e("xyu,ku->xyk", x_l_ry, r)
    )
    B2 = B - x_l_ry + e("yxu->xyu", x_l_ry)
    return ExtendingDatum(omega.g, L.copy(), F.reduce(R2), F.reduce(F2), F.reduce(B2))


def datum_equivalent(omega: ExtendingDatum, omega2: ExtendingDatum, r, v) -> bool:
    """Whether ``omega2`` is implemented from ``omega`` by ``(r, v)``."""
    if not is_invertible(omega.field.array(v).reshape(omega.dimV, omega.dimV), omega.field):
        raise ExtendingError("v must be invertible")
    return transform_datum(omega, r, v) == omega2


def datum_cohomologous(omega: ExtendingDatum, omega2: ExtendingDatum, r) -> bool:
    F = omega.field
    if not F.is_zero(omega.laction - omega2.laction):
        return False
    return cohomologous_transform(omega, r) == omega2


# -- complex product structures ---------------------------------------------


def check_complex_product_structure(L: LieAlgebra, phi) -> AxiomReport:
    """Check ``phi != +-Id``, ``phi^2 = Id`` and integrability.

    ``phi([x,y]) = [phi x, y] + [x, phi y] - phi([phi x, phi y])``.  When all
    three hold, the +1 and -1 eigenspaces are added to ``report.notes``
    together with checks that each is a subalgebra and that they span L.
    Whether ``phi^2 = phi`` is recorded in the notes as well.
    """
    F = L.field
    if F.characteristic == 2:
        raise ValueError("complex product structures need characteristic != 2")
    n = L.dim
    phi = F.array(phi).reshape(n, n)
    I = F.eye(n)
    e = np.einsum
    report = AxiomReport()

    not_pm = AxiomCheck("NOT_PM_ID", "phi != Id and phi != -Id")
    for sign, label in ((1, "Id"), (-1, "-Id")):
        if F.is_zero(phi - sign * I):
            not_pm.witnesses.append(())
            not_pm.defects.append(F.zeros(0))
            not_pm.description += f" (phi = {label})"
    report.checks.append(not_pm)

    sq = F.reduce(phi @ phi)
    report.checks.append(check_from_defect("INVOLUTION", (sq - I).T, F, "phi^2 = Id"))
    report.notes["idempotent"] = F.is_zero(sq - phi)

    sc = L.sc
    integ = (
        e("ijc,kc->ijk", sc, phi)
        - e("ai,ajk->ijk", phi, sc)
        - e("bj,ibk->ijk", phi, sc)
        + e("ai,bj,abc,kc->ijk", phi, phi, sc, phi)
    )
    report.checks.append(check_from_defect("INTEGRABLE", integ, F, "integrability"))

    if report.ok:
        plus = nullspace(F.reduce(phi - I), F)
        minus = nullspace(F.reduce(phi + I), F)
        report.notes["plus"] = plus
        report.notes["minus"] = minus
        for label, space in (("SUB_PLUS", plus), ("SUB_MINUS", minus)):
            check = AxiomCheck(label, "eigenspace is a subalgebra")
            if not is_subalgebra(L, space.vectors):
                check.witnesses.append(())
                check.defects.append(F.zeros(0))
            report.checks.append(check)
        total = SubspaceBasis.span(list(plus.vectors) + list(minus.vectors), n, F)
        direct = AxiomCheck("DIRECT_SUM", "L = plus + minus, plus /\\ minus = 0")
        if plus.dim + minus.dim != n or total.dim != n:
            direct.witnesses.append(())
            direct.defects.append(F.zeros(0))
        report.checks.append(direct)
    return report


def swap_sign_map(g_dim: int, dimV: int, field: FieldSpec):
    """``phi(g, x) = (g, -x)`` on the g-first basis of a product."""
    phi = field.eye(g_dim + dimV)
    for i in range(g_dim, g_dim + dimV):
        phi[i, i] = field.reduce_scalar(-1)
    return phi


__all__ = [
    "CrossedSystem",
    "ExtendingDatum",
    "ExtendingError",
    "bicrossed_product",
    "check_complex_product_structure",
    "check_crossed_system",
    "check_extending_structure",
    "check_matched_pair",
    "check_morphism",
    "check_twisted_cocycle",
    "cohomologous_transform",
    "crossed_product",
    "datum_cohomologous",
    "datum_equivalent",
    "extract_crossed_system",
    "extract_datum",
    "is_extending_structure",
    "make_datum",
    "swap_sign_map",
    "transform_datum",
    "trivial_datum",
    "twisted_product",
    "unified_bracket",
    "unified_product",
]
