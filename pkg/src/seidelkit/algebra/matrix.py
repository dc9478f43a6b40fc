"""Exact symmetric matrices: characteristic polynomials, PSD certificates, solving.

Entries are any exact ordered-field values (int, Fraction, QuadraticNumber,
AlgebraicElement).  Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .poly import IntPoly

__all__ = [
    "FieldSymMatrix",
    "PsdCertificate",
    "char_poly",
    "char_poly_batch",
    "psd_status",
    "field_rank",
    "field_solve",
    "field_nullspace",
    "solve_symmetric",
    "quadratic_form",
]


def _frac(x):
    return Fraction(x) if isinstance(x, int) else x


class FieldSymMatrix:
    """Immutable symmetric matrix over a single exact field."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(_frac(x) for x in row) for row in rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise ValueError("matrix must be symmetric")
        self._rows = rows

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, FieldSymMatrix):
            return NotImplemented
        return self.order == other.order and all(
            a == b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb)
        )

    def __repr__(self):
        return f"FieldSymMatrix(order={self.order})"

    @classmethod
    def shifted(cls, m: Sequence[Sequence[int]], t, scale=-1) -> "FieldSymMatrix":
        """t*I + scale*m for an integer matrix m."""
        n = len(m)
        return cls([[(t if i == j else 0) + scale * m[i][j] for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# characteristic polynomials


def char_poly(m: Sequence[Sequence[int]]) -> IntPoly:
    """det(xI - m) by Faddeev-LeVerrier over the integers (all divisions exact)."""
    n = len(m)
    if n == 0:
        return IntPoly((1,))
    a = [[int(x) for x in row] for row in m]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # mk <- a @ mk + c_{n-k+1} I
        c_prev = coeffs[n - k + 1]
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            ai = a[i]
            row = new[i]
            for l in range(n):
                x = ai[l]
                if x:
                    ml = mk[l]
                    for j in range(n):
                        row[j] += x * ml[j]
            row[i] += c_prev
        mk = new
        tr = sum(a[i][l] * mk[l][i] for i in range(n) for l in range(n))
        coeffs[n - k] = -tr // k
    return IntPoly(tuple(coeffs))


def char_poly_batch(mats: np.ndarray) -> np.ndarray:
    """Characteristic polynomials of a stack of small integer matrices.

    ``mats`` has shape (k, n, n); returns int64 coefficients of shape
    (k, n + 1), lowest degree first.  Restricted to n <= 10 with entries in
    {-1, 0, 1} so every intermediate value fits in int64.
    """
    mats = np.asarray(mats, dtype=np.int64)
    k, n, _ = mats.shape
    if n > 10 or (mats.size and np.abs(mats).max() > 1):
        raise ValueError("char_poly_batch supports order <= 10 with entries in {-1,0,1}")
    out = np.zeros((k, n + 1), dtype=np.int64)
    out[:, n] = 1
    eye = np.eye(n, dtype=np.int64)
    mk = np.zeros_like(mats)
    for step in range(1, n + 1):
        mk = mats @ mk + out[:, n - step + 1, None, None] * eye
        tr = np.einsum("kij,kji->k", mats, mk)
        out[:, n - step] = -tr // step
    return out


# ---------------------------------------------------------------------------
# elimination


@dataclass(frozen=True)
class PsdCertificate:
    """Outcome of :func:`psd_status`.

    ``psd`` with ``rank``, or not PSD with ``witness`` such that
    witness^T M witness < 0.  ``pivots`` lists the elimination order.
    """

    psd: bool
    rank: Optional[int] = None
    witness: Optional[tuple] = None
    pivots: tuple = ()

    def __str__(self):
        if self.psd:
            return f"PSD(rank {self.rank})"
        return f"NotPSD(witness {tuple(str(x) for x in self.witness)})"


def quadratic_form(m, w):
    rows = m.rows if isinstance(m, FieldSymMatrix) else m
    n = len(rows)
    total = 0
    for i in range(n):
        if w[i] == 0:
            continue
        acc = 0
        for j in range(n):
            if w[j] != 0 and rows[i][j] != 0:
                acc = acc + rows[i][j] * w[j]
        total = total + w[i] * acc
    return total


def psd_status(m: FieldSymMatrix) -> PsdCertificate:
    """Decide positive semidefiniteness by symmetric-pivoting LDL^T.

    Pivots on the largest remaining diagonal entry (lowest index on ties).  A
    negative diagonal gives a witness directly; once every remaining diagonal
    is zero, a nonzero off-diagonal entry gives a 2x2 indefinite block.
    """
    n = m.order
    s = [list(r) for r in m.rows]
    # combo[i] expresses the current Schur-complement coordinate i as a
    # vector in the original coordinates
    combo = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    remaining = list(range(n))
    pivots: list[int] = []

    def not_psd(w):
        return PsdCertificate(False, witness=tuple(w), pivots=tuple(pivots))

    while remaining:
        for i in remaining:
            if s[i][i] < 0:
                return not_psd(combo[i])
        p = remaining[0]
        for i in remaining[1:]:
            if s[i][i] > s[p][p]:
                p = i
        piv = s[p][p]
        if piv == 0:
            for a, i in enumerate(remaining):
                for j in remaining[a + 1 :]:
                    if s[i][j] != 0:
                        sg = 1 if s[i][j] > 0 else -1
                        return not_psd([x - sg * y for x, y in zip(combo[i], combo[j])])
            break
        remaining.remove(p)
        pivots.append(p)
        row_p = s[p]
        for i in remaining:
            f = s[i][p]
            if f == 0:
                continue
            f = f / piv
            row_i = s[i]
            for j in remaining:
                if row_p[j] != 0:
                    row_i[j] = row_i[j] - f * row_p[j]
            ci, cp = combo[i], combo[p]
            for j in range(n):
                if cp[j] != 0:
                    ci[j] = ci[j] - f * cp[j]
    return PsdCertificate(True, rank=len(pivots), pivots=tuple(pivots))


def _echelon(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over an exact field (in place)."""
    r = 0
    pivcols = []
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c] if not isinstance(rows[r][c], int) else Fraction(1, rows[r][c])
        rows[r] = [x * inv if x != 0 else x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y if y != 0 else x for x, y in zip(rows[i], rows[r])]
        pivcols.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivcols


def field_rank(m) -> int:
    rows = [list(map(_frac, r)) for r in (m.rows if isinstance(m, FieldSymMatrix) else m)]
    if not rows:
        return 0
    return len(_echelon(rows, len(rows[0]))[1])


def field_solve(m, b) -> Optional[tuple]:
    """Some x with m x = b, or None when b is outside the column space."""
    src = m.rows if isinstance(m, FieldSymMatrix) else m
    n = len(src)
    ncols = len(src[0]) if n else 0
    rows = [list(map(_frac, r)) + [_frac(b[i])] for i, r in enumerate(src)]
    rows, piv = _echelon(rows, ncols + 1)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(piv):
        x[c] = rows[r][ncols]
    return tuple(x)


def field_nullspace(m) -> list[tuple]:
    """Basis of {x : m x = 0}, one vector per free column."""
    src = m.rows if isinstance(m, FieldSymMatrix) else m
    ncols = len(src[0]) if src else 0
    rows = [list(map(_frac, r)) for r in src]
    rows, piv = _echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def solve_symmetric(m: FieldSymMatrix, b) -> Optional[tuple]:
    return field_solve(m, b)
