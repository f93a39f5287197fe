"""Exact rational linear algebra on numpy object arrays of ``Fraction``.

Every tensor in the package is a numpy array with ``dtype=object`` whose
entries are :class:`fractions.Fraction`.  Nothing here ever touches a float.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

import numpy as np

from .errors import SingularMetric

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal.

    Decimal and exponent notation are rejected on purpose: every input value
    must be an exact rational.
    """
    text = text.strip()
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an exact rational")
    return Fraction(x)


def frac_array(data) -> np.ndarray:
    """Convert nested sequences (ints, Fractions, "p/q" strings) to an object array."""
    arr = np.array(data, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = as_fraction(arr[idx])
    return out


def _scaled(a: np.ndarray) -> tuple[np.ndarray, int]:
    """Integer array ``m`` and denominator ``d`` with ``a = m / d``."""
    flat = [as_fraction(x) for x in a.flat]
    d = lcm(*(x.denominator for x in flat)) if flat else 1
    m = np.array([x.numerator * (d // x.denominator) for x in flat], dtype=object)
    return m.reshape(a.shape), d


def einsum(subscripts: str, *operands) -> np.ndarray:
    """Exact ``np.einsum`` over rational arrays.

    Operands are brought to a common denominator each, contracted as Python
    ints, and divided once at the end, which is much cheaper than summing
    Fractions term by term.
    """
    ints, den = [], 1
    for op in operands:
        m, d = _scaled(np.asarray(op, dtype=object))
        ints.append(m)
        den *= d
    raw = np.einsum(subscripts, *ints)
    if not isinstance(raw, np.ndarray) or raw.ndim == 0:
        return Fraction(int(raw), den)
    out = np.empty(raw.shape, dtype=object)
    for idx in np.ndindex(raw.shape):
        out[idx] = Fraction(int(raw[idx]), den)
    return out


def zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros((n, n))
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def is_zero(arr) -> bool:
    return all(x == 0 for x in np.asarray(arr, dtype=object).flat)


def first_nonzero(arr):
    """Index tuple and value of the first nonzero entry, or ``None``."""
    arr = np.asarray(arr, dtype=object)
    for idx in np.ndindex(arr.shape):
        if arr[idx] != 0:
            return idx, arr[idx]
    return None


def is_symmetric(m) -> bool:
    m = np.asarray(m, dtype=object)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and all(
        m[i, j] == m[j, i] for i in range(m.shape[0]) for j in range(i)
    )


def inverse(m) -> np.ndarray:
    """Gauss-Jordan inverse of a square rational matrix.

    Raises ``ValueError`` when the matrix is singular.
    """
    a = frac_array(m)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    inv = identity(n)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r, col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            inv[[col, piv]] = inv[[piv, col]]
        p = a[col, col]
        a[col] = a[col] / p
        inv[col] = inv[col] / p
        for r in range(n):
            if r != col and a[r, col] != 0:
                f = a[r, col]
                a[r] = a[r] - f * a[col]
                inv[r] = inv[r] - f * inv[col]
    return inv


def invert_symmetric(m) -> np.ndarray:
    """Exact inverse of a symmetric matrix; ``SingularMetric`` if degenerate."""
    m = frac_array(m)
    if not is_symmetric(m):
        raise ValueError("invert_symmetric needs a symmetric matrix")
    try:
        return inverse(m)
    except ValueError:
        raise SingularMetric("metric matrix has zero determinant") from None


class Signature(NamedTuple):
    plus: int
    minus: int
    zero: int


def _schur(a: np.ndarray, block: list[int]) -> np.ndarray:
    """Eliminate the rows/columns in ``block`` by a symmetric Schur complement."""
    rest = [i for i in range(a.shape[0]) if i not in block]
    b = a[np.ix_(block, block)]
    c = a[np.ix_(rest, block)]
    return a[np.ix_(rest, rest)] - c.dot(inverse(b)).dot(c.T)


def signature(m) -> Signature:
    """Inertia indices of a symmetric matrix by congruence diagonalization.

    Diagonal pivots are eliminated one at a time.  When every remaining
    diagonal entry vanishes but an off-diagonal ``a`` survives, the 2x2 block
    ``[[0, a], [a, 0]]`` is split off; it always contributes one positive and
    one negative square.
    """
    a = frac_array(m)
    if not is_symmetric(a):
        raise ValueError("signature needs a symmetric matrix")
    plus = minus = 0
    while a.shape[0]:
        k = next((i for i in range(a.shape[0]) if a[i, i] != 0), None)
        if k is not None:
            if a[k, k] > 0:
                plus += 1
            else:
                minus += 1
            a = _schur(a, [k])
            continue
        hit = first_nonzero(a)
        if hit is None:
            break
        (i, j), _ = hit
        plus += 1
        minus += 1
        a = _schur(a, [i, j])
    return Signature(plus, minus, a.shape[0])


@dataclass(frozen=True)
class AffineSolutionSpace:
    """Solution set ``particular + span(nullspace_basis)`` of ``A x = b``."""

    consistent: bool
    particular: tuple | None
    nullspace_basis: tuple = field(default=())

    @property
    def dimension(self) -> int:
        return len(self.nullspace_basis) if self.consistent else -1

    @property
    def unique(self) -> bool:
        return self.consistent and not self.nullspace_basis

    def point(self, coeffs) -> np.ndarray:
        """The solution ``particular + sum(c * basis)``."""
        if not self.consistent:
            raise ValueError("inconsistent system has no solutions")
        x = np.array(self.particular, dtype=object)
        for c, v in zip(coeffs, self.nullspace_basis, strict=True):
            x = x + as_fraction(c) * np.array(v, dtype=object)
        return x


def _integer_rows(aug: np.ndarray) -> list[list[int]]:
    rows = []
    for row in aug:
        den = lcm(*(q.denominator for q in row)) if len(row) else 1
        rows.append([int(q * den) for q in row])
    return rows


def _reduce(rows: list[list[int]], ncols: int):
    """Fraction-free reduction to a non-normalized reduced echelon form.

    Pivots are taken as the first nonzero entry in column order.  Each
    updated row is divided by the gcd of its entries to keep integers small.
    Returns the reduced rows and the list of ``(row, col)`` pivots.
    """
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                new = [p * x - f * y for x, y in zip(rows[i], rows[r])]
                d = gcd(*new)
                rows[i] = [x // d for x in new] if d > 1 else new
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_affine(A, b) -> AffineSolutionSpace:
    """Full exact solution set of ``A x = b``."""
    A = frac_array(A)
    b = frac_array(b)
    if A.ndim != 2 or b.ndim != 1 or A.shape[0] != b.shape[0]:
        raise ValueError("solve_affine needs an (m, n) matrix and an m-vector")
    m, n = A.shape
    if m == 0:
        aug_rows = []
    else:
        aug_rows = _integer_rows(np.concatenate([A, b.reshape(-1, 1)], axis=1))
    rows, pivots = _reduce(aug_rows, n)
    rank = len(pivots)
    if any(row[n] != 0 for row in rows[rank:]):
        return AffineSolutionSpace(False, None, ())
    particular = [Fraction(0)] * n
    for r, c in pivots:
        particular[c] = Fraction(rows[r][n], rows[r][c])
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(n):
        if f in pivot_cols:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in pivots:
            v[c] = Fraction(-rows[r][f], rows[r][c])
        basis.append(tuple(v))
    return AffineSolutionSpace(True, tuple(particular), tuple(basis))


def nullspace(A) -> list[np.ndarray]:
    A = frac_array(A)
    sol = solve_affine(A, zeros(A.shape[0]))
    return [np.array(v, dtype=object) for v in sol.nullspace_basis]


def rank(A) -> int:
    A = frac_array(A)
    return A.shape[1] - len(nullspace(A))


def inconsistency_certificate(A, b) -> np.ndarray | None:
    """A vector ``y`` with ``y A = 0`` and ``y b != 0``, or ``None`` if ``A x = b`` is solvable."""
    A = frac_array(A)
    b = frac_array(b)
    for y in nullspace(A.T):
        if y.dot(b) != 0:
            return y
    return None
