"""Exact scalar fields: the rationals and prime fields F_p.

Scalars are plain Python values: :class:`fractions.Fraction` over Q and
reduced ``int`` residues over F_p.  Tensors are numpy arrays; over Q they
use ``dtype=object`` so entries stay exact Fractions, over F_p they use
``int64`` for small moduli and ``object`` (arbitrary-precision ints) when
the products formed inside einsum contractions could overflow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"

# einsums multiply up to four residues before reducing; below this bound
# such products and their sums stay well inside int64
_INT64_MODULUS_BOUND = 1 << 12


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def normalize(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def egcd_inverse(a: int, p: int) -> int:
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1:
        quot = r0 // r1
        r0, r1 = r1, r0 - quot * r1
        s0, s1 = s1, s0 - quot * s1
    if r0 != 1:
        raise ZeroDivisionError("not invertible")
    return s0 % p


@dataclass(frozen=True)
class FieldSpec:
    kind: str = RATIONALS
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise FieldError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if self.modulus is None or not _is_prime(self.modulus):
                raise FieldError(f"modulus must be prime, got {self.modulus}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    # -- construction -----------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``Q`` or ``F<p>`` (e.g. ``F7``)."""
        text = text.strip()
        if text in ("Q", "QQ"):
            return QQ
        m = re.fullmatch(r"F_?(\d+)", text)
        if m is None:
            raise FieldError(f"unknown field {text!r} (expected Q or F<p>)")
        return GF(int(m.group(1)))

    def __str__(self):
        return "Q" if self.is_rational else f"F{self.modulus}"

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONALS

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.modulus

    @cached_property
    def dtype(self):
        if self.is_rational or self.modulus >= _INT64_MODULUS_BOUND:
            return object
        return np.int64

    # -- scalars ----------------------------------------------------------

    def scalar(self, value) -> Fraction | int:
        """Coerce an int, Fraction, or literal string into this field."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.normalize(value.numerator, value.denominator)
        return int(value) % self.modulus

    def normalize(self, num: int, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("division by zero")
        if self.is_rational:
            return Fraction(num, den)
        return num * egcd_inverse(den, self.modulus) % self.modulus

    def invert(self, a):
        if a == 0:
            raise ZeroDivisionError("not invertible")
        if self.is_rational:
            return 1 / Fraction(a)
        return egcd_inverse(int(a), self.modulus)

    def div(self, a, b):
        return self.reduce_scalar(a * self.invert(b))

    def reduce_scalar(self, a):
        if self.is_rational:
            return Fraction(a)
        return int(a) % self.modulus

    def parse_scalar(self, text: str):
        m = re.fullmatch(r"\s*([+-]?\d+)(?:/(\d+))?\s*", text)
        if m is None:
            raise FieldError(f"bad scalar literal {text!r}")
        den = int(m.group(2)) if m.group(2) else 1
        try:
            return self.normalize(int(m.group(1)), den)
        except ZeroDivisionError as exc:
            raise FieldError(f"bad scalar literal {text!r}: {exc}") from None

    def format_scalar(self, a) -> str:
        a = self.reduce_scalar(a)
        return str(a)

    def elements(self):
        """All elements of a prime field in residue order."""
        if self.is_rational:
            raise FieldError("the rationals cannot be enumerated")
        return range(self.modulus)

    # -- arrays -----------------------------------------------------------

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx, value in np.ndenumerate(arr):
            out[idx] = self.scalar(value)
        return out if self.dtype is object else out.astype(self.dtype)

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0) if self.is_rational else 0)
            return out
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.scalar(1)
        return out

    def reduce(self, arr):
        """Bring an array computed with ring operations back into the field."""
        arr = np.asarray(arr)
        if self.is_rational:
            return arr
        return arr % self.modulus

    def is_zero(self, arr) -> bool:
        return not np.any(self.reduce(arr))


QQ = FieldSpec(RATIONALS)


def GF(p: int) -> FieldSpec:
    return FieldSpec(PRIME_FIELD, p)
