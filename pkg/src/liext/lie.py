"""Lie algebras stored as dense structure-constant tensors.

``sc[i, j, k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.  A
:class:`LieAlgebra` may hold an arbitrary bilinear tensor; the Lie axioms
are only checked on demand by :func:`check_lie`, so raw brackets built
from unvalidated data can still be represented and tested.

Endomorphisms are flattened column-major: the coordinate vector of a
matrix ``D`` has ``D[i, j]`` at position ``j * n + i``, i.e. the columns
``D(e_0), D(e_1), ...`` are concatenated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import QQ, FieldSpec
from .linalg import SubspaceBasis, inverse, nullspace, rank
from .report import AxiomReport, check_from_defect


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    name: str
    field: FieldSpec
    sc: np.ndarray
    basis_names: tuple = ()

    def __post_init__(self):
        n = self.sc.shape[0]
        if self.sc.shape != (n, n, n):
            raise ValueError(f"structure constants must be n x n x n, got {self.sc.shape}")
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"e{i + 1}" for i in range(n)))
        elif len(self.basis_names) != n:
            raise ValueError("one basis name per basis vector is required")

    @property
    def dim(self) -> int:
        return self.sc.shape[0]

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.sc.shape == other.sc.shape
            and bool(np.all(self.field.reduce(self.sc - other.sc) == 0))
        )

    __hash__ = None

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, {self.field}, dim={self.dim})"

    def bracket(self, u, v):
        return bracket_eval(self, u, v)

    def basis_vector(self, i):
        v = self.field.zeros(self.dim)
        v[i] = self.field.scalar(1)
        return v

    def renamed(self, name: str) -> LieAlgebra:
        return LieAlgebra(name, self.field, self.sc, self.basis_names)


class LieError(ValueError):
    pass


def make_lie_algebra(name, field: FieldSpec, dim: int, entries, basis_names=None) -> LieAlgebra:
    """Build an algebra from brackets of basis pairs ``i < j`` (0-based).

    ``entries`` is an iterable of ``((i, j), value)`` where ``value`` is a
    mapping ``{k: coefficient}`` or a full coordinate vector.  Pairs not
    listed are zero; ``[e_j, e_i]`` is filled in by antisymmetry.
    """
    sc = field.zeros((dim, dim, dim))
    seen = set()
    for (i, j), value in entries:
        for idx in (i, j):
            if not 0 <= idx < dim:
                raise LieError(f"basis index {idx} out of range for dim {dim}")
        if i >= j:
            raise LieError(f"only pairs i < j may be given, got ({i}, {j})")
        if (i, j) in seen:
            raise LieError(f"duplicate entry for pair ({i}, {j})")
        seen.add((i, j))
        vec = field.zeros(dim)
        if isinstance(value, dict):
            for k, c in value.items():
                if not 0 <= k < dim:
                    raise LieError(f"basis index {k} out of range for dim {dim}")
                vec[k] = field.reduce_scalar(vec[k] + field.scalar(c))
        else:
            vec = field.array(value)
            if vec.shape != (dim,):
                raise LieError(f"bracket value for ({i}, {j}) must have length {dim}")
        sc[i, j] = vec
        sc[j, i] = field.reduce(-vec)
    return LieAlgebra(name, field, sc, tuple(basis_names) if basis_names else ())


def abelian(dim: int, field: FieldSpec = QQ, name=None) -> LieAlgebra:
    return LieAlgebra(name or f"abelian:{dim}", field, field.zeros((dim, dim, dim)))


def bracket_eval(L: LieAlgebra, u, v):
    u = np.asarray(u)
    v = np.asarray(v)
    return L.field.reduce(np.einsum("i,j,ijk->k", u, v, L.sc))


def jacobi_defect(sc, field: FieldSpec):
    """``[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`` for all triples.

    Leading batch axes of ``sc`` are carried through.
    """
    t = np.einsum("...jku,...iuo->...ijko", sc, sc)
    return field.reduce(
        t + np.einsum("...jkio->...ijko", t) + np.einsum("...kijo->...ijko", t)
    )


def alternating_defect(sc, field: FieldSpec):
    """Stack of ``[e_i, e_i]`` (diagonal) and ``[e_i,e_j] + [e_j,e_i]``."""
    diag = np.einsum("...iik->...ik", sc)
    sym = sc + np.swapaxes(sc, -3, -2)
    return field.reduce(diag), field.reduce(sym)


def is_lie_batch(sc, field: FieldSpec):
    """Vectorised Lie test: one boolean per leading index of ``sc``."""
    diag, sym = alternating_defect(sc, field)
    jac = jacobi_defect(sc, field)
    batch = sc.shape[:-3]
    ok = ~np.any(diag.reshape(batch + (-1,)) != 0, axis=-1)
    ok &= ~np.any(sym.reshape(batch + (-1,)) != 0, axis=-1)
    ok &= ~np.any(jac.reshape(batch + (-1,)) != 0, axis=-1)
    return ok


def check_lie(L: LieAlgebra) -> AxiomReport:
    """Alternating law and Jacobi identity on every basis pair and triple."""
    diag, sym = alternating_defect(L.sc, L.field)
    report = AxiomReport()
    alt = check_from_defect("ALT", diag, L.field, "[x, x] = 0")
    # antisymmetry witnesses only for i < j; the diagonal is covered above
    anti = check_from_defect("ALT", sym, L.field)
    for w, d in zip(anti.witnesses, anti.defects):
        if w[0] < w[1]:
            alt.witnesses.append(w)
            alt.defects.append(d)
    report.checks.append(alt)
    report.checks.append(
        check_from_defect("JACOBI", jacobi_defect(L.sc, L.field), L.field, "Jacobi identity")
    )
    return report


def is_lie(L: LieAlgebra) -> bool:
    return bool(is_lie_batch(L.sc, L.field))


# -- linear maps and subspaces ---------------------------------------------


def vec_endo(D) -> np.ndarray:
    """Column-major flattening of an ``n x n`` matrix."""
    return np.asarray(D).T.reshape(-1)


def unvec_endo(v, n: int) -> np.ndarray:
    return np.asarray(v).reshape(n, n).T.copy()


def ad(L: LieAlgebra, u) -> np.ndarray:
    """Matrix of ``ad(u) = [u, -]``; column ``j`` is ``[u, e_j]``."""
    return L.field.reduce(np.einsum("i,ijk->kj", np.asarray(u), L.sc))


def derived_subalgebra(L: LieAlgebra) -> SubspaceBasis:
    n = L.dim
    return SubspaceBasis.span(L.sc.reshape(n * n, n), n, L.field)


def center(L: LieAlgebra) -> SubspaceBasis:
    """Null space of ``u -> ([u, e_j])_j``."""
    n = L.dim
    # row (j, k), column i: coefficient of e_k in [e_i, e_j]
    M = np.transpose(L.sc, (1, 2, 0)).reshape(n * n, n)
    return nullspace(M, L.field)


def twisted_leibniz_system(L: LieAlgebra, lam=None) -> np.ndarray:
    """Coefficient matrix of ``D([a,b]) - [Da,b] - [a,Db] - lam(a)Db + lam(b)Da = 0``.

    Rows run over pairs ``a < b`` and output coordinates; columns over the
    column-major coordinates of ``D``.  ``lam=None`` gives plain derivations.
    """
    F = L.field
    n = L.dim
    c = L.sc
    eye = F.eye(n)
    # T[a, b, k, i, j]: coefficient of D[i, j] in component k of pair (a, b)
    T = np.einsum("ki,abj->abkij", eye, c)
    T = T - np.einsum("ja,ibk->abkij", eye, c)
    T = T - np.einsum("jb,aik->abkij", eye, c)
    if lam is not None:
        lam = np.asarray(lam)
        T = T - np.einsum("a,jb,ki->abkij", lam, eye, eye)
        T = T + np.einsum("b,ja,ki->abkij", lam, eye, eye)
    iu, ju = np.triu_indices(n, k=1)
    T = T[iu, ju]  # (pairs, k, i, j)
    T = np.swapaxes(T, -1, -2)  # (pairs, k, j, i) -> column-major unknowns
    return F.reduce(T.reshape(-1, n * n))


def derivations(L: LieAlgebra) -> SubspaceBasis:
    n = L.dim
    if n < 2:
        return SubspaceBasis(n * n, L.field.eye(n * n), L.field)
    return nullspace(twisted_leibniz_system(L), L.field)


def derivation_defect(L: LieAlgebra, D, lam=None):
    """``D[a,b] - [Da,b] - [a,Db] - lam(a)Db + lam(b)Da`` on all basis pairs.

    Evaluated directly from the bracket, independently of the linear system
    used by :func:`derivations`.
    """
    F = L.field
    D = np.asarray(D)
    c = L.sc
    lhs = np.einsum("abc,kc->abk", c, D)
    t1 = np.einsum("ia,ibk->abk", D, c)
    t2 = np.einsum("ib,aik->abk", D, c)
    out = lhs - t1 - t2
    if lam is not None:
        lam = np.asarray(lam)
        out = out - np.einsum("a,kb->abk", lam, D) + np.einsum("b,ka->abk", lam, D)
    return F.reduce(out)


def inner_derivations(L: LieAlgebra) -> SubspaceBasis:
    n = L.dim
    return SubspaceBasis.span(
        [vec_endo(ad(L, L.basis_vector(i))) for i in range(n)], n * n, L.field
    )


def outer_dimension(L: LieAlgebra) -> int:
    return derivations(L).dim - inner_derivations(L).dim


def is_perfect(L: LieAlgebra) -> bool:
    return L.dim > 0 and derived_subalgebra(L).dim == L.dim


def is_subalgebra(L: LieAlgebra, vectors) -> bool:
    """Whether the span of ``vectors`` is closed under the bracket."""
    S = SubspaceBasis.span(vectors, L.dim, L.field)
    return all(S.contains(bracket_eval(L, u, v)) for u in S for v in S)


def is_ideal(L: LieAlgebra, vectors) -> bool:
    S = SubspaceBasis.span(vectors, L.dim, L.field)
    return all(S.contains(bracket_eval(L, u, L.basis_vector(j))) for u in S for j in range(L.dim))


def change_basis(L: LieAlgebra, P, name=None) -> LieAlgebra:
    """Structure constants in the basis given by the columns of ``P``."""
    F = L.field
    P = np.asarray(P)
    Pinv = inverse(P, F)
    if Pinv is None:
        raise LieError("change of basis matrix is singular")
    sc = np.einsum("ai,bj,abc,kc->ijk", P, P, L.sc, Pinv)
    return LieAlgebra(name or L.name, F, F.reduce(sc))


def direct_product(A: LieAlgebra, B: LieAlgebra, name=None) -> LieAlgebra:
    if A.field != B.field:
        raise LieError("factors must share a field")
    n, m = A.dim, B.dim
    sc = A.field.zeros((n + m, n + m, n + m))
    sc[:n, :n, :n] = A.sc
    sc[n:, n:, n:] = B.sc
    return LieAlgebra(name or f"{A.name}x{B.name}", A.field, sc,
                      A.basis_names + B.basis_names if len(set(A.basis_names + B.basis_names)) == n + m else ())


def is_isomorphism(A: LieAlgebra, B: LieAlgebra, phi) -> bool:
    """Whether ``phi`` (columns = images of A's basis in B) is a Lie isomorphism."""
    F = A.field
    phi = np.asarray(phi)
    if phi.shape != (B.dim, A.dim) or rank(phi, F) != A.dim or A.dim != B.dim:
        return False
    lhs = np.einsum("ijc,kc->ijk", A.sc, phi)
    rhs = np.einsum("ai,bj,abk->ijk", phi, phi, B.sc)
    return F.is_zero(lhs - rhs)


# -- catalog ---------------------------------------------------------------


def _gl2(field):
    names = ("e11", "e12", "e21", "e22")
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    index = {u: i for i, u in enumerate(units)}
    entries = []
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if a >= b:
                continue
            val = {}
            if j == k:
                val[index[(i, l)]] = val.get(index[(i, l)], 0) + 1
            if i == l:
                val[index[(k, j)]] = val.get(index[(k, j)], 0) - 1
            val = {t: c for t, c in val.items() if c}
            if val:
                entries.append(((a, b), val))
    return make_lie_algebra("gl2", field, 4, entries, names)


def _perfect5(field):
    entries = [
        ((0, 1), {2: 1}),
        ((0, 2), {0: -2}),
        ((0, 4), {3: 1}),
        ((2, 3), {3: 1}),
        ((1, 2), {1: 2}),
        ((1, 3), {4: 1}),
        ((2, 4), {4: -1}),
    ]
    return make_lie_algebra("perfect5", field, 5, entries)


CATALOG_NAMES = ("abelian:n", "heisenberg3", "nonabelian2", "sl2", "gl2", "perfect5")


def catalog(name: str, field: FieldSpec = QQ) -> LieAlgebra:
    """Built-in algebras: ``abelian:n``, ``heisenberg3``, ``nonabelian2``,
    ``sl2``, ``gl2``, ``perfect5``."""
    if name.startswith("abelian:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise LieError(f"bad abelian dimension in {name!r}") from None
        if n < 0:
            raise LieError(f"bad abelian dimension in {name!r}")
        return abelian(n, field)
    if name == "heisenberg3":
        return make_lie_algebra(name, field, 3, [((0, 1), {2: 1})], ("x", "y", "z"))
    if name == "nonabelian2":
        return make_lie_algebra(name, field, 2, [((0, 1), {1: 1})])
    if name == "sl2":
        entries = [((0, 1), {1: 2}), ((0, 2), {2: -2}), ((1, 2), {0: 1})]
        return make_lie_algebra(name, field, 3, entries, ("h", "e", "f"))
    if name == "gl2":
        return _gl2(field)
    if name == "perfect5":
        return _perfect5(field)
    raise LieError(f"unknown catalog algebra {name!r}; known: {', '.join(CATALOG_NAMES)}")
