"""Twisted derivations and codimension-one extensions.

A twisted derivation of ``g`` is a pair ``(lam, D)``: a functional ``lam``
vanishing on ``[g, g]`` and an endomorphism ``D`` with

    D([a,b]) = [D a, b] + [a, D b] + lam(a) D b - lam(b) D a.

Such pairs are exactly the extending data of ``g`` through a line: the
datum is ``x <| a = lam(a) x``, ``x |> a = D(a)``, ``f = 0``, ``{,} = 0``.

The set of pairs is not a vector space (``lam`` multiplies ``D``), but for
a fixed ``lam`` the admissible ``D`` form one, which is what
:func:`dspace_for_lambda` returns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .extending import ExtendingDatum, make_datum, unified_product
from .lie import (
    LieAlgebra,
    derivation_defect,
    derived_subalgebra,
    twisted_leibniz_system,
    unvec_endo,
    vec_endo,
)
from .linalg import SubspaceBasis, nullspace, solve_affine
from .report import AxiomReport, check_from_defect


class TwDerError(ValueError):
    def __init__(self, message, report: AxiomReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True, eq=False)
class TwistedDerivation:
    lam: np.ndarray
    D: np.ndarray

    def key(self):
        return tuple(self.lam.tolist()) + tuple(vec_endo(self.D).tolist())


@dataclass(frozen=True)
class EquivalenceWitness:
    """``D = q D' + D_{g0, lam}``; ``q = 1`` for the cohomologous relation."""

    q: object
    g0: np.ndarray = dc_field(compare=False)


def _functional(L: LieAlgebra, lam):
    F = L.field
    if lam is None:
        return F.zeros(L.dim)
    lam = F.array(lam).reshape(-1)
    if lam.shape[0] != L.dim:
        raise TwDerError(f"functional has {lam.shape[0]} coordinates, algebra has dim {L.dim}")
    return lam


def _endo(L: LieAlgebra, D):
    D = L.field.array(D)
    if D.shape != (L.dim, L.dim):
        raise TwDerError(f"endomorphism must be {L.dim} x {L.dim}, got {D.shape}")
    return D


def lambda_space(L: LieAlgebra) -> SubspaceBasis:
    """Functionals vanishing on the derived subalgebra."""
    derived = derived_subalgebra(L)
    if derived.dim == 0:
        return SubspaceBasis(L.dim, L.field.eye(L.dim), L.field)
    return nullspace(derived.vectors, L.field)


def lambda_defect(L: LieAlgebra, lam):
    """``lam([a,b])`` on all basis pairs, shape ``(n, n, 1)``."""
    lam = _functional(L, lam)
    return L.field.reduce(np.einsum("abk,k->ab", L.sc, lam))[..., None]


def is_admissible_lambda(L: LieAlgebra, lam) -> bool:
    return L.field.is_zero(lambda_defect(L, lam))


def dspace_for_lambda(L: LieAlgebra, lam=None) -> SubspaceBasis:
    """All ``D`` (column-major, ambient ``n^2``) pairing with a fixed ``lam``."""
    lam = _functional(L, lam)
    if not is_admissible_lambda(L, lam):
        raise TwDerError("lambda does not vanish on the derived subalgebra")
    n = L.dim
    if n < 2:
        return SubspaceBasis(n * n, L.field.eye(n * n), L.field)
    return nullspace(twisted_leibniz_system(L, lam), L.field)


def _inner_matrix(L: LieAlgebra, lam):
    """Matrix sending ``g0`` to ``vec(D_{g0, lam})``."""
    F = L.field
    n = L.dim
    # D[i, j] = sum_t g0_t c[t, j, i] - lam_j g0_i
    T = np.einsum("tji->ijt", L.sc) - np.einsum("j,it->ijt", lam, F.eye(n))
    # column-major flattening of D: index j * n + i
    return F.reduce(np.swapaxes(T, 0, 1).reshape(n * n, n))


def inner_twisted_derivation(L: LieAlgebra, g0, lam=None) -> TwistedDerivation:
    """``D(h) = [g0, h] - lam(h) g0``."""
    lam = _functional(L, lam)
    if not is_admissible_lambda(L, lam):
        raise TwDerError("lambda does not vanish on the derived subalgebra")
    g0 = L.field.array(g0).reshape(-1)
    D = unvec_endo(L.field.reduce(_inner_matrix(L, lam) @ g0), L.dim)
    return TwistedDerivation(lam, D)


def inner_space(L: LieAlgebra, lam=None) -> SubspaceBasis:
    lam = _functional(L, lam)
    M = _inner_matrix(L, lam)
    return SubspaceBasis.span(list(M.T), L.dim * L.dim, L.field)


def check_twisted_derivation(L: LieAlgebra, lam, D) -> AxiomReport:
    F = L.field
    lam = _functional(L, lam)
    D = _endo(L, D)
    td0 = check_from_defect("TD0", lambda_defect(L, lam), F, "lam([a,b]) = 0")
    td1 = check_from_defect(
        "TD1", derivation_defect(L, D, lam), F,
        "D[a,b] = [Da,b] + [a,Db] + lam(a)Db - lam(b)Da",
    )
    for check in (td0, td1):
        # keep one witness per unordered pair
        kept = [(w, d) for w, d in zip(check.witnesses, check.defects) if w[0] < w[1]]
        check.witnesses = [w for w, _ in kept]
        check.defects = [d for _, d in kept]
    return AxiomReport([td0, td1])


def codim1_datum(L: LieAlgebra, lam, D) -> ExtendingDatum:
    """``x <| a = lam(a) x``, ``x |> a = D(a)``, no cocycle, no bracket on V."""
    lam = _functional(L, lam)
    D = _endo(L, D)
    n = L.dim
    return make_datum(L, 1, laction=lam.reshape(1, n, 1), raction=D.T.reshape(1, n, n))


def codim1_product(L: LieAlgebra, lam, D, name=None) -> LieAlgebra:
    """Algebra on ``e_1..e_n, x`` with ``[a, x] = -(D(a) + lam(a) x)``."""
    report = check_twisted_derivation(L, lam, D)
    if not report.ok:
        raise TwDerError("not a twisted derivation", report)
    omega = codim1_datum(L, lam, D)
    return unified_product(omega, name or f"{L.name}+x", validate=False)


def datum_to_twder(omega: ExtendingDatum) -> TwistedDerivation | None:
    """Inverse of :func:`codim1_datum` (``None`` if the datum is not of that shape)."""
    F = omega.field
    if omega.dimV != 1 or not F.is_zero(omega.cocycle) or not F.is_zero(omega.vbracket):
        return None
    return TwistedDerivation(omega.laction[0, :, 0].copy(), omega.raction[0].T.copy())


def twder_equivalent(L: LieAlgebra, pair, pair2) -> EquivalenceWitness | None:
    """Witness ``(q, g0)`` with ``q != 0`` and ``D = q D' + D_{g0, lam}``, or ``None``.

    Requires ``lam = lam'``.  One linear system in the unknowns ``(q, g0)``;
    a witness with ``q != 0`` exists unless every solution has ``q = 0``.
    """
    F = L.field
    lam, D = _functional(L, pair[0]), _endo(L, pair[1])
    lam2, D2 = _functional(L, pair2[0]), _endo(L, pair2[1])
    if not F.is_zero(lam - lam2):
        return None
    A = np.concatenate([vec_endo(D2).reshape(-1, 1), _inner_matrix(L, lam)], axis=1)
    sol = solve_affine(A, vec_endo(D), F)
    if not sol.feasible:
        return None
    x = sol.particular
    if x[0] == 0:
        shift = next((h for h in sol.homogeneous if h[0] != 0), None)
        if shift is None:
            return None
        x = F.reduce(x + shift)
    return EquivalenceWitness(F.reduce_scalar(x[0]), x[1:].copy())


def twder_cohomologous(L: LieAlgebra, pair, pair2):
    """``g0`` with ``D - D' = D_{g0, lam}`` (and ``lam = lam'``), or ``None``."""
    F = L.field
    lam, D = _functional(L, pair[0]), _endo(L, pair[1])
    lam2, D2 = _functional(L, pair2[0]), _endo(L, pair2[1])
    if not F.is_zero(lam - lam2):
        return None
    sol = solve_affine(_inner_matrix(L, lam), vec_endo(F.reduce(D - D2)), F)
    return sol.particular if sol.feasible else None


# -- classification report -------------------------------------------------

DEFAULT_SAMPLES = (0, 1, -1, 2, 3, 5)


@dataclass
class LambdaSlice:
    lam: np.ndarray
    dspace: SubspaceBasis
    inner: SubspaceBasis

    @property
    def quotient_dim(self) -> int:
        """Dimension of (admissible D) / (inner twisted derivations)."""
        return self.dspace.dim - self.inner.dim


@dataclass
class ClassificationReport:
    algebra: LieAlgebra
    lambda_basis: SubspaceBasis
    slices: list
    census: dict | None = None

    def lines(self):
        F = self.algebra.field
        out = [f"algebra {self.algebra.name} over {F}",
               f"dim lambda-space = {self.lambda_basis.dim}"]
        for s in self.slices:
            lam = " ".join(F.format_scalar(x) for x in s.lam)
            out.append(
                f"lambda [{lam}]  dim D = {s.dspace.dim}  dim inner = {s.inner.dim}"
                f"  quotient = {s.quotient_dim}"
            )
        if self.census is not None:
            for k in ("pairs", "classes_equiv", "classes_cohom"):
                out.append(f"{k} = {self.census[k]}")
        return out


def lambda_samples(L: LieAlgebra, samples=DEFAULT_SAMPLES):
    """``q * (sum of the lambda-space basis)`` for each sample ``q``."""
    F = L.field
    basis = lambda_space(L)
    if basis.dim == 0:
        return [F.zeros(L.dim)]
    direction = F.reduce(np.sum(basis.vectors, axis=0))
    out, seen = [], set()
    for q in samples:
        lam = F.reduce(direction * F.scalar(q))
        key = tuple(lam.tolist())
        if key not in seen:
            seen.add(key)
            out.append(lam)
    return out


def classify_codim1(L: LieAlgebra, samples=DEFAULT_SAMPLES, census_cap: int = 1 << 16):
    F = L.field
    slices = []
    for lam in lambda_samples(L, samples):
        slices.append(LambdaSlice(lam, dspace_for_lambda(L, lam), inner_space(L, lam)))
    census = None
    if not F.is_rational:
        census = twder_census(L, cap=census_cap)
    return ClassificationReport(L, lambda_space(L), slices, census)


def _span_elements(basis: SubspaceBasis):
    F = basis.field
    for coeffs in itertools.product(F.elements(), repeat=basis.dim):
        if basis.dim == 0:
            yield F.zeros(basis.ambient_dim)
        else:
            yield F.reduce(np.array(coeffs, dtype=F.dtype) @ basis.vectors)


def enumerate_twisted_derivations(L: LieAlgebra, cap: int = 1 << 16):
    """All valid pairs over a prime field, ordered by ``lam`` then ``D``."""
    F = L.field
    if F.is_rational:
        raise TwDerError("enumeration needs a prime field")
    lams = list(_span_elements(lambda_space(L)))
    pairs = []
    for lam in lams:
        ds = dspace_for_lambda(L, lam)
        if len(pairs) + F.modulus ** ds.dim > cap:
            raise TwDerError(f"more than {cap} twisted derivations")
        for d in _span_elements(ds):
            pairs.append(TwistedDerivation(lam, unvec_endo(d, L.dim)))
    return pairs


def twder_census(L: LieAlgebra, cap: int = 1 << 16) -> dict:
    """Class counts of both relations by orbit generation over a prime field.

    The orbit of ``(lam, D)`` under the equivalence is
    ``{(lam, q D + D_{g0, lam})}``; for the cohomologous relation ``q = 1``.
    """
    F = L.field
    pairs = enumerate_twisted_derivations(L, cap)
    index = {p.key(): i for i, p in enumerate(pairs)}
    n = L.dim
    g0s = [F.array(v) for v in itertools.product(F.elements(), repeat=n)]

    def count(qs):
        seen = [False] * len(pairs)
        classes = 0
        for i, p in enumerate(pairs):
            if seen[i]:
                continue
            classes += 1
            M = _inner_matrix(L, p.lam)
            for q in qs:
                for g0 in g0s:
                    D = unvec_endo(F.reduce(vec_endo(p.D) * q + M @ g0), n)
                    seen[index[TwistedDerivation(p.lam, D).key()]] = True
        return classes

    return {
        "pairs": len(pairs),
        "classes_equiv": count(range(1, F.modulus)),
        "classes_cohom": count([1]),
    }


def flag_extend(L: LieAlgebra, steps) -> list:
    """Chain ``L = E_0 < E_1 < ... `` with ``E_{i+1} = codim1_product(E_i, *steps[i])``."""
    chain = [L]
    for i, (lam, D) in enumerate(steps, start=1):
        E = chain[-1]
        try:
            report = check_twisted_derivation(E, lam, D)
        except TwDerError as exc:
            raise TwDerError(f"step {i}: {exc}") from None
        if not report.ok:
            bad = report.failures[0]
            w = ",".join(str(j + 1) for j in bad.witnesses[0])
            raise TwDerError(f"step {i}: {bad.label} fails at ({w})", report)
        chain.append(codim1_product(E, lam, D, name=f"{L.name}+x{i}"))
    return chain


__all__ = [
    "ClassificationReport",
    "EquivalenceWitness",
    "LambdaSlice",
    "TwDerError",
    "TwistedDerivation",
    "check_twisted_derivation",
    "classify_codim1",
    "codim1_datum",
    "codim1_product",
    "datum_to_twder",
    "dspace_for_lambda",
    "enumerate_twisted_derivations",
    "flag_extend",
    "inner_space",
    "inner_twisted_derivation",
    "is_admissible_lambda",
    "lambda_samples",
    "lambda_space",
    "twder_census",
    "twder_cohomologous",
    "twder_equivalent",
]
