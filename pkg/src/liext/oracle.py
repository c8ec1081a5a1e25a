"""Exhaustive ground truth over small prime fields.

Every raw datum ``(<|, |>, f, {,})`` is visited in a fixed order: the
tensors are flattened (C order) and concatenated, and the resulting
coordinate string is read as a base-``p`` numeral with the ``<|`` prefix
most significant.  Each datum gets two verdicts computed by unrelated
code: the seven compatibilities, and antisymmetry plus Jacobi for the
bracket it induces on ``g x V``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .extending import (
    ExtendingDatum,
    extract_datum,
    is_extending_structure_batch,
    transform_datum,
    unified_bracket,
    unified_product,
)
from .field import FieldSpec
from .lie import LieAlgebra, is_lie_batch
from .linalg import inverse, is_invertible
from .twder import codim1_datum, enumerate_twisted_derivations

DEFAULT_CAP = 1 << 20
CHUNK = 1 << 14


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    field: FieldSpec
    g: LieAlgebra
    dimV: int
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.field.is_rational:
            raise OracleError("exhaustive search needs a prime field")
        if self.g.field != self.field:
            raise OracleError("g must be defined over the search field")

    @property
    def shapes(self):
        n, m = self.g.dim, self.dimV
        return ((m, n, m), (m, n, n), (m, m, n), (m, m, m))

    @property
    def coordinates(self) -> int:
        return sum(int(np.prod(s)) for s in self.shapes)

    @property
    def raw_count(self) -> int:
        return self.field.modulus ** self.coordinates

    def check_cap(self):
        if self.raw_count > self.cap:
            raise OracleError(
                f"{self.raw_count} raw data exceed the cap of {self.cap}"
            )


@dataclass
class Census:
    raw_count: int = 0
    valid_count: int = 0
    orbit_count_equiv: int | None = None
    orbit_count_cohom: int | None = None
    cross_check_failures: int = 0
    symmetry_failures: int = 0
    roundtrip_failures: int = 0

    FIELDS = (
        "raw_count",
        "valid_count",
        "orbit_count_equiv",
        "orbit_count_cohom",
        "cross_check_failures",
        "symmetry_failures",
        "roundtrip_failures",
    )

    def merge(self, other: Census) -> Census:
        return Census(
            self.raw_count + other.raw_count,
            self.valid_count + other.valid_count,
            None,
            None,
            self.cross_check_failures + other.cross_check_failures,
            self.symmetry_failures + other.symmetry_failures,
            self.roundtrip_failures + other.roundtrip_failures,
        )

    def items(self):
        for k in self.FIELDS:
            v = getattr(self, k)
            yield k, "-" if v is None else str(v)

    def lines(self, machine: bool = False):
        if machine:
            return [f"{k}={v}" for k, v in self.items()]
        width = max(len(k) for k in self.FIELDS)
        return [f"{k:<{width}}  {v}" for k, v in self.items()]


def _decode(spec: SearchSpec, start: int, stop: int):
    """Raw data with indices in ``[start, stop)`` as batched tensors."""
    p = spec.field.modulus
    K = spec.coordinates
    idx = np.arange(start, stop, dtype=object if spec.raw_count >= 1 << 62 else np.int64)
    powers = [p ** (K - 1 - j) for j in range(K)]
    digits = np.stack([(idx // w) % p for w in powers], axis=-1) if K else np.zeros((stop - start, 0))
    digits = digits.astype(spec.field.dtype)
    out, pos = [], 0
    for shape in spec.shapes:
        size = int(np.prod(shape))
        out.append(digits[:, pos:pos + size].reshape((-1,) + shape))
        pos += size
    return out


def _sweep(spec: SearchSpec, start: int, stop: int, collect: bool):
    census = Census()
    valid = []
    F = spec.field
    c = spec.g.sc
    for lo in range(start, stop, CHUNK):
        hi = min(stop, lo + CHUNK)
        L, R, Fc, B = _decode(spec, lo, hi)
        by_axioms = is_extending_structure_batch(L, R, Fc, B, c, F)
        by_bracket = is_lie_batch(unified_bracket(L, R, Fc, B, c, F), F)
        census.raw_count += hi - lo
        census.valid_count += int(by_axioms.sum())
        census.cross_check_failures += int((by_axioms != by_bracket).sum())
        if collect:
            for i in np.nonzero(by_axioms)[0]:
                valid.append(ExtendingDatum(spec.g, L[i].copy(), R[i].copy(), Fc[i].copy(), B[i].copy()))
    return census, valid


def _slices(spec: SearchSpec, parts: int):
    """Split the index range on the leading (most significant) digits."""
    total = spec.raw_count
    step = max(1, -(-total // parts))
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _sweep_star(args):
    return _sweep(*args)


def enumerate_extending_structures(spec: SearchSpec, workers: int = 1, collect: bool = True,
                                   roundtrip: bool = True):
    """Visit every raw datum; return ``(census, valid data in visiting order)``."""
    spec.check_cap()
    jobs = [(spec, lo, hi, collect) for lo, hi in _slices(spec, max(1, workers))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_star, jobs))
    else:
        results = [_sweep_star(j) for j in jobs]
    census, valid = Census(), []
    for part, data in results:
        census = census.merge(part)
        valid.extend(data)
    if collect and roundtrip:
        n = spec.g.dim
        for omega in valid:
            if extract_datum(unified_product(omega, validate=False), n, g=spec.g) != omega:
                census.roundtrip_failures += 1
    return census, valid


def invertible_matrices(m: int, field: FieldSpec):
    """All of ``GL_m`` over a prime field, in lexicographic entry order."""
    out = []
    for entries in itertools.product(field.elements(), repeat=m * m):
        M = field.array(np.array(entries, dtype=object).reshape(m, m))
        if is_invertible(M, field):
            out.append(M)
    return out


def all_matrices(rows: int, cols: int, field: FieldSpec):
    return [
        field.array(np.array(entries, dtype=object).reshape(rows, cols))
        for entries in itertools.product(field.elements(), repeat=rows * cols)
    ]


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)

    def count(self):
        return sum(1 for i, p in enumerate(self.parent) if i == p)


def count_orbits(valid, relation: str, field: FieldSpec):
    """Classes of ``valid`` under ``equiv`` (all ``(r, v)``) or ``cohom`` (``v = Id``).

    Returns ``(class_count, symmetry_failures)``.  Every edge is checked
    against the inverse witness ``(-r v^{-1}, v^{-1})`` before it is used.
    """
    if relation not in ("equiv", "cohom"):
        raise OracleError(f"unknown relation {relation!r}")
    if not valid:
        return 0, 0
    g = valid[0].g
    n, m = g.dim, valid[0].dimV
    index = {omega.key(): i for i, omega in enumerate(valid)}
    vs = invertible_matrices(m, field) if relation == "equiv" else [field.eye(m)]
    rs = all_matrices(n, m, field)
    witnesses = []
    for v in vs:
        vi = inverse(v, field)
        for r in rs:
            witnesses.append((r, v, field.reduce(-(r @ vi)), vi))
    uf = _UnionFind(len(valid))
    failures = 0
    for i, omega in enumerate(valid):
        for r, v, r_back, v_back in witnesses:
            image = transform_datum(omega, r, v)
            j = index.get(image.key())
            if j is None or transform_datum(image, r_back, v_back) != omega:
                failures += 1
                continue
            uf.union(i, j)
    return uf.count(), failures


def orbit_census(spec: SearchSpec, relation: str | None = None, workers: int = 1) -> Census:
    """Census with orbit counts for one relation (``None``: both)."""
    census, valid = enumerate_extending_structures(spec, workers=workers)
    for rel in ("equiv", "cohom") if relation is None else (relation,):
        count, failures = count_orbits(valid, rel, spec.field)
        census.symmetry_failures += failures
        if rel == "equiv":
            census.orbit_count_equiv = count
        else:
            census.orbit_count_cohom = count
    return census


@dataclass
class BijectionReport:
    data_count: int
    twder_count: int
    missing_from_data: list = dc_field(default_factory=list)
    missing_from_twder: list = dc_field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.missing_from_data and not self.missing_from_twder


def verify_unifdim1_bijection(L: LieAlgebra, cap: int = DEFAULT_CAP) -> BijectionReport:
    """Valid data through a line versus the images of all twisted derivations."""
    spec = SearchSpec(L.field, L, 1, cap)
    _, valid = enumerate_extending_structures(spec, roundtrip=False)
    data = {omega.key() for omega in valid}
    images = {codim1_datum(L, p.lam, p.D).key() for p in enumerate_twisted_derivations(L, cap)}
    return BijectionReport(
        len(data),
        len(images),
        sorted(images - data),
        sorted(data - images),
    )


__all__ = [
    "BijectionReport",
    "Census",
    "DEFAULT_CAP",
    "OracleError",
    "SearchSpec",
    "all_matrices",
    "count_orbits",
    "enumerate_extending_structures",
    "invertible_matrices",
    "orbit_census",
    "verify_unifdim1_bijection",
]
