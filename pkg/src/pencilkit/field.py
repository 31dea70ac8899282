"""Ground fields: prime fields GF(p) and the rationals.

Scalars are plain Python values in canonical form: an ``int`` residue in
``[0, p)`` for GF(p), a :class:`fractions.Fraction` for Q. The field they
belong to travels with the containing matrix or pencil.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import FormatError, PencilError

Scalar = Union[int, Fraction]

_MAX_P = 2**31
_INT_RE = re.compile(r"-?[0-9]+\Z")
_FRAC_RE = re.compile(r"(-?[0-9]+)/([0-9]+)\Z")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.2e9."""
    if n < 2:
        return False
    for sp in (2, 3, 5, 7):
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) when ``p`` is set, Q when ``p`` is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, (int, np.integer)) or not (2 <= self.p < _MAX_P):
                raise PencilError(f"prime field characteristic out of range: {self.p!r}")
            if not is_prime(int(self.p)):
                raise PencilError(f"{self.p} is not prime")
            object.__setattr__(self, "p", int(self.p))

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        text = text.strip().lower()
        if text in ("rational", "q"):
            return cls.rational()
        m = re.fullmatch(r"gf([0-9]+)", text)
        if not m:
            raise FormatError(f"unknown field {text!r} (expected 'rational' or 'gf<p>')")
        try:
            return cls.gf(int(m.group(1)))
        except PencilError as exc:
            raise FormatError(str(exc)) from None

    def __str__(self) -> str:
        return "rational" if self.p is None else f"gf{self.p}"

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int | None:
        return self.p

    @property
    def dtype(self):
        return np.int64 if self.p is not None else object

    # scalars -----------------------------------------------------------

    def zero(self) -> Scalar:
        return 0 if self.p is not None else Fraction(0)

    def one(self) -> Scalar:
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, x) -> Scalar:
        """Canonical representative of an int, Fraction or scalar literal."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise PencilError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def parse_scalar(self, token: str) -> Scalar:
        if _INT_RE.match(token):
            return self.coerce(int(token))
        m = _FRAC_RE.match(token)
        if m:
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise FormatError(f"zero denominator in {token!r}")
            return self.coerce(Fraction(num, den))
        raise FormatError(f"bad scalar literal {token!r}")

    def format_scalar(self, x: Scalar) -> str:
        if self.p is not None:
            return str(int(x) % self.p)
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    # arrays ------------------------------------------------------------

    def array(self, values) -> np.ndarray:
        """Canonical ndarray (int64 residues or Fraction objects) from nested values."""
        if self.p is not None:
            arr = np.asarray(values, dtype=object if _has_fraction(values) else None)
            if arr.dtype == object:
                flat = [self.coerce(x) for x in arr.ravel()]
                return np.array(flat, dtype=np.int64).reshape(arr.shape)
            if arr.size == 0:
                return np.zeros(arr.shape, dtype=np.int64)
            return np.mod(arr.astype(np.int64), self.p)
        arr = np.asarray(values, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        flat = out.reshape(-1)
        for i, x in enumerate(arr.ravel()):
            flat[i] = Fraction(x)
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.p is not None:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def sort_key(self, x: Scalar):
        return int(x) if self.p is not None else Fraction(x)


def _has_fraction(values) -> bool:
    if isinstance(values, Fraction):
        return True
    if isinstance(values, np.ndarray):
        return values.dtype == object and any(isinstance(x, Fraction) for x in values.ravel())
    if isinstance(values, (list, tuple)):
        return any(_has_fraction(v) for v in values)
    return False


QQ = FieldSpec.rational()


def GF(p: int) -> FieldSpec:
    return FieldSpec.gf(p)
