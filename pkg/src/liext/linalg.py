"""Dense exact linear algebra over a :class:`~liext.field.FieldSpec`.

Matrices are 2-d numpy arrays whose entries already live in the field.
Pivoting always takes the first nonzero entry in column order, so every
result is deterministic and subspace bases come out in canonical reduced
echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import FieldSpec


def as_field_array(M, field: FieldSpec) -> np.ndarray:
    """Copy of ``M`` with the field's dtype; coerces foreign entries."""
    if isinstance(M, np.ndarray) and M.dtype == np.dtype(field.dtype):
        return M.copy()
    return field.array(M)


def rref(M, field: FieldSpec):
    """Reduced row echelon form of ``M``.

    Returns ``(R, pivots, rank)`` where ``pivots`` lists the pivot columns.
    """
    R = as_field_array(M, field)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if R[i, c] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = field.reduce(R[r] * field.invert(R[r, c]))
        for i in range(rows):
            if i != r and R[i, c] != 0:
                R[i] = field.reduce(R[i] - R[i, c] * R[r])
        pivots.append(c)
        r += 1
    return R, pivots, len(pivots)


def rank(M, field: FieldSpec) -> int:
    if np.asarray(M).size == 0:
        return 0
    return rref(M, field)[2]


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Canonical basis of a subspace of ``field^ambient_dim``.

    ``vectors`` is a ``(dim, ambient_dim)`` array in reduced row echelon
    form, which makes equality of subspaces an entry-wise comparison.
    """

    ambient_dim: int
    vectors: np.ndarray
    field: FieldSpec

    @classmethod
    def span(cls, vectors, ambient_dim: int, field: FieldSpec) -> SubspaceBasis:
        rows = [np.asarray(v).reshape(-1) for v in vectors]
        if not rows:
            return cls(ambient_dim, field.zeros((0, ambient_dim)), field)
        M = field.array(np.array(rows, dtype=object))
        R, _, rk = rref(M, field)
        return cls(ambient_dim, R[:rk].copy(), field)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.vectors)

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.vectors.shape == other.vectors.shape
            and bool(np.all(self.vectors == other.vectors))
        )

    __hash__ = None

    def contains(self, v) -> bool:
        v = self.field.array(np.asarray(v, dtype=object).reshape(1, -1))
        if self.dim == 0:
            return self.field.is_zero(v)
        stacked = np.concatenate([self.vectors, v])
        return rank(stacked, self.field) == self.dim

    def contains_space(self, other: SubspaceBasis) -> bool:
        if other.dim == 0:
            return True
        stacked = np.concatenate([self.vectors, other.vectors]) if self.dim else other.vectors
        return rank(stacked, self.field) == self.dim

    def coordinates(self, v):
        """Coefficients expressing ``v`` in this basis (``None`` if outside)."""
        sol = solve_affine(self.vectors.T, np.asarray(v).reshape(-1), self.field)
        return sol.particular if sol.feasible else None


@dataclass(frozen=True, eq=False)
class AffineSolution:
    feasible: bool
    particular: np.ndarray | None
    homogeneous: SubspaceBasis


def nullspace(M, field: FieldSpec) -> SubspaceBasis:
    """Canonical basis of ``{v : M v = 0}``."""
    M = np.asarray(M)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return SubspaceBasis(cols, field.eye(cols), field)
    R, pivots, rk = rref(M, field)
    free = [c for c in range(cols) if c not in pivots]
    vecs = []
    for f in free:
        v = field.zeros(cols)
        v[f] = field.scalar(1)
        for i, p in enumerate(pivots):
            v[p] = field.reduce_scalar(-R[i, f])
        vecs.append(v)
    return SubspaceBasis.span(vecs, cols, field)


def solve_affine(A, b, field: FieldSpec) -> AffineSolution:
    """Solve ``A x = b``; feasible iff ``rank A == rank [A | b]``."""
    A = np.asarray(A)
    b = np.asarray(b).reshape(-1)
    if b.shape[0] != A.shape[0]:
        raise ValueError("right-hand side length must equal the row count")
    cols = A.shape[1]
    homogeneous = nullspace(A, field)
    if A.shape[0] == 0:
        return AffineSolution(True, field.zeros(cols), homogeneous)
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, pivots, _ = rref(aug, field)
    if cols in pivots:
        return AffineSolution(False, None, homogeneous)
    x = field.zeros(cols)
    for i, p in enumerate(pivots):
        x[p] = R[i, cols]
    return AffineSolution(True, x, homogeneous)


def matmul(A, B, field: FieldSpec):
    return field.reduce(np.asarray(A) @ np.asarray(B))


def inverse(M, field: FieldSpec):
    """Inverse of a square matrix, or ``None`` when singular."""
    n = M.shape[0]
    if n == 0:
        return M.copy()
    R, pivots, rk = rref(np.concatenate([M, field.eye(n)], axis=1), field)
    if rk < n or pivots[n - 1] != n - 1:
        return None
    return R[:, n:].copy()


def is_invertible(M, field: FieldSpec) -> bool:
    return M.shape[0] == M.shape[1] and rank(M, field) == M.shape[0]
