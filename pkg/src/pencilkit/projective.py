"""Points of projective space P(k^m) and their enumeration over GF(q)."""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import EnumerationTooLargeError, EnumerationUnsupportedError, InvalidProjectivePointError
from .field import FieldSpec, Scalar

DEFAULT_ENUM_BUDGET = 10**7


def enum_budget() -> int:
    """Oracle enumeration budget; ``PENCIL_ENUM_BUDGET`` overrides the default."""
    raw = os.environ.get("PENCIL_ENUM_BUDGET")
    return int(raw) if raw else DEFAULT_ENUM_BUDGET


class ProjectivePoint:
    """A nonzero vector up to scaling, stored with leading nonzero entry 1."""

    __slots__ = ("coords", "field")

    def __init__(self, coords: Iterable, field: FieldSpec):
        vals = [field.coerce(x) for x in coords]
        lead = next((x for x in vals if x != 0), None)
        if lead is None:
            raise InvalidProjectivePointError("projective point needs a nonzero coordinate")
        if lead != 1:
            inv = field.inv(lead)
            vals = [field.coerce(x * inv) for x in vals]
        object.__setattr__(self, "coords", tuple(vals))
        object.__setattr__(self, "field", field)

    @classmethod
    def _normalized(cls, coords: tuple, field: FieldSpec) -> ProjectivePoint:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "coords", coords)
        object.__setattr__(obj, "field", field)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __lt__(self, other: ProjectivePoint) -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __repr__(self) -> str:
        return "(" + ":".join(self.field.format_scalar(x) for x in self.coords) + ")"

    def sort_key(self) -> tuple:
        return self.coords

    def vector(self) -> np.ndarray:
        return self.field.array(list(self.coords))


def point_count(q: int, m: int) -> int:
    return kernels.count_projective_points(q, m)


def _require_prime(field: FieldSpec):
    if field.p is None:
        raise EnumerationUnsupportedError("enumeration needs a prime field; P(Q^m) is infinite")


def point_array(field: FieldSpec, m: int, budget: int | None = None) -> np.ndarray:
    """All points of P(F_q^m) as an (N, m) int64 array, lexicographically sorted."""
    _require_prime(field)
    total = point_count(field.p, m)
    if budget is not None and total > budget:
        raise EnumerationTooLargeError(
            f"P(F_{field.p}^{m}) has {total} points, over the budget of {budget}"
        )
    return kernels.decode_points(field.p, m, 0, total)


def all_points(field: FieldSpec, m: int, budget: int | None = None) -> list[ProjectivePoint]:
    arr = point_array(field, m, budget)
    return [ProjectivePoint._normalized(tuple(int(x) for x in row), field) for row in arr]


def points_from_rows(rows: np.ndarray, field: FieldSpec) -> list[ProjectivePoint]:
    """Wrap rows that are already normalized (leading entry 1)."""
    return [ProjectivePoint._normalized(tuple(field.coerce(x) for x in row), field) for row in rows]


def sort_points(points: Iterable[ProjectivePoint]) -> list[ProjectivePoint]:
    return sorted(points, key=ProjectivePoint.sort_key)


def parse_point_list(text: str, field: FieldSpec) -> list[ProjectivePoint]:
    """Parse ``"1,0,0;1,1,0"`` into normalized points."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        out.append(ProjectivePoint([field.parse_scalar(t.strip()) for t in chunk.split(",")], field))
    return out


def subspace_points(basis: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Projective points of the row span of an echelon ``basis`` (int64, GF(q)).

    With a reduced echelon basis, a coefficient vector whose leading entry is
    1 maps to a vector whose leading entry is 1, so no renormalization needed.
    """
    _require_prime(field)
    d, m = basis.shape
    if d == 0:
        return np.zeros((0, m), dtype=np.int64)
    coeffs = kernels.decode_points(field.p, d, 0, point_count(field.p, d))
    return (coeffs @ basis) % field.p


def e_vector(n: int, idx: Sequence[int], field: FieldSpec) -> ProjectivePoint:
    """Point with 1 at each 0-based index in ``idx`` and 0 elsewhere."""
    coords = [0] * n
    for i in idx:
        coords[i] = 1
    return ProjectivePoint(coords, field)
