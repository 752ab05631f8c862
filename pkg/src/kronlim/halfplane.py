"""Points of the generalized upper half-plane and per-lattice-point geometry.

A point is an n x n real matrix tau = U @ D where U is upper triangular
with unit diagonal and D is diagonal with positive entries whose lowermost
entry is 1.  The diagonal is parametrized by n-1 positive numbers
y_1, ..., y_{n-1} through tau_{j,j} = y_1 * ... * y_{n-j} (so tau_{n,n}=1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ShapeError


@dataclass(frozen=True, eq=False)
class HalfPlanePoint:
    """Iwasawa coordinates of a point: unipotent part plus y-parameters.

    ``unipotent`` is the full n x n upper triangular matrix with unit
    diagonal; ``y`` has length n-1.  n = 1 (the point [1]) is allowed only
    as the recursion base produced by :func:`truncate`.
    """

    n: int
    unipotent: np.ndarray
    y: tuple[float, ...]
    _matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        u = np.array(self.unipotent, dtype=float)
        if u.shape != (self.n, self.n):
            raise ShapeError(f"unipotent part must be {self.n}x{self.n}, got {u.shape}")
        if len(self.y) != self.n - 1:
            raise ShapeError(f"need {self.n - 1} y-parameters, got {len(self.y)}")
        if any(yi <= 0 for yi in self.y):
            raise DomainError("all y-parameters must be positive")
        u[np.tril_indices(self.n)] = 0.0
        u[np.diag_indices(self.n)] = 1.0
        u.setflags(write=False)
        object.__setattr__(self, "unipotent", u)
        object.__setattr__(self, "y", tuple(float(yi) for yi in self.y))
        m = u * self.diagonal()[np.newaxis, :]
        m.setflags(write=False)
        object.__setattr__(self, "_matrix", m)

    def diagonal(self) -> np.ndarray:
        """Diagonal entries of tau: tau_{j,j} = prod_{k<=n-j} y_k, tau_{n,n}=1."""
        d = np.ones(self.n)
        d[: self.n - 1] = np.cumprod(self.y)[::-1]
        return d

    def matrix(self) -> np.ndarray:
        """The dense matrix tau (read-only view)."""
        return self._matrix


@dataclass(frozen=True, eq=False)
class TermGeometry:
    """Quantities b_j, c_j (j = 2..n), |m| and the phase d for one lattice vector."""

    b: np.ndarray
    c: np.ndarray
    m_norm: float
    d: float


def make_point(n, x, y) -> HalfPlanePoint:
    """Build a point from dimension, unipotent entries and y-parameters.

    ``x`` may be a mapping from (i, j) pairs (1-based, i < j; also accepts
    "i,j" strings) to reals, or an n x n array-like whose strict upper
    triangle is used.  Omitted entries default to 0.
    """
    if n < 2:
        raise DomainError("dimension must be at least 2")
    u = np.eye(n)
    if isinstance(x, dict):
        for key, val in x.items():
            if isinstance(key, str):
                try:
                    i, j = (int(part) for part in key.split(","))
                except ValueError as exc:
                    raise ShapeError(f"bad x key {key!r}, expected 'i,j'") from exc
            else:
                i, j = key
            if not (1 <= i < j <= n):
                raise ShapeError(f"x key ({i},{j}) outside 1 <= i < j <= {n}")
            u[i - 1, j - 1] = float(val)
    else:
        arr = np.array(x, dtype=float)
        if arr.shape != (n, n):
            raise ShapeError(f"x array must be {n}x{n}, got {arr.shape}")
        iu = np.triu_indices(n, k=1)
        u[iu] = arr[iu]
    return HalfPlanePoint(n=n, unipotent=u, y=tuple(y))


def z_to_point(x_coord: float, y_coord: float) -> HalfPlanePoint:
    """The n=2 point for z = x + iy; its matrix has rows (y, x), (0, 1)."""
    if y_coord <= 0:
        raise DomainError("y-coordinate must be positive")
    return make_point(2, {(1, 2): x_coord}, (y_coord,))


def squared_row_norm(p: HalfPlanePoint, v) -> float:
    """Squared Euclidean norm of the row vector (m_1 ... m_n) tau."""
    v = np.asarray(v, dtype=float)
    if v.shape != (p.n,):
        raise ShapeError(f"lattice vector must have length {p.n}, got {v.shape}")
    row = v @ p.matrix()
    return float(row @ row)


def term_geometry(p: HalfPlanePoint, v) -> TermGeometry:
    """b_j, c_j, |m| and d of the limit-formula expansion for one vector."""
    v = np.asarray(v, dtype=float)
    if v.shape != (p.n,):
        raise ShapeError(f"lattice vector must have length {p.n}, got {v.shape}")
    m = p.matrix()
    c = np.diag(m)[1:]
    # b_j = sum_{i<j} m_i tau_{i,j}; subtract the diagonal term from v @ tau
    b = (v @ m)[1:] - v[1:] * c
    ratios = v[1:] / c
    m_norm = float(np.sqrt(ratios @ ratios))
    d = float(b @ ratios)
    return TermGeometry(b=b, c=c, m_norm=m_norm, d=d)


def truncate(p: HalfPlanePoint) -> HalfPlanePoint:
    """Remove the topmost row and leftmost column; dimension drops by one."""
    if p.n == 1:
        raise DomainError("cannot truncate a 1x1 point")
    return HalfPlanePoint(n=p.n - 1, unipotent=p.unipotent[1:, 1:].copy(), y=p.y[:-1])


def det_tau(p: HalfPlanePoint) -> float:
    """det tau = prod_i y_i^{n-i} (product of the diagonal entries)."""
    n = p.n
    result = 1.0
    for i, yi in enumerate(p.y, start=1):
        result *= yi ** (n - i)
    return result
