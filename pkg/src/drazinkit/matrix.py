"""Immutable dense matrices over the Gaussian rationals.

A matrix is stored as Gaussian-integer numerators over one positive common
denominator, kept in lowest terms.  That representation is canonical, so
structural equality is mathematical equality, and the hot loops (products
and elimination) run on plain integers through :mod:`drazinkit.kernels`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from . import kernels
from .errors import ShapeError, SingularMatrixError
from .scalar import Scalar, format_scalar, to_scalar

__all__ = ["Matrix", "zeros", "identity", "block"]


class Matrix:
    """Dense ``rows x cols`` matrix of :class:`~drazinkit.scalar.Scalar`.

    Build one with :meth:`from_rows`, :func:`zeros`, :func:`identity` or
    :func:`block`.  Instances are never mutated after construction.
    """

    __slots__ = ("rows", "cols", "_re", "_im", "_den", "_hash")

    def __init__(self, rows: int, cols: int, re: list, im: list | None = None, den: int = 1):
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative shape {rows}x{cols}")
        if len(re) != rows * cols or (im is not None and len(im) != rows * cols):
            raise ShapeError(f"{len(re)} entries do not fill a {rows}x{cols} matrix")
        if den == 0:
            raise ZeroDivisionError("zero common denominator")
        if den < 0:
            den = -den
            re = [-x for x in re]
            if im is not None:
                im = [-x for x in im]
        if im is not None and not any(im):
            im = None
        g = gcd(den, *re) if im is None else gcd(den, *re, *im)
        if g > 1:
            den //= g
            re = [x // g for x in re]
            if im is not None:
                im = [x // g for x in im]
        self.rows = rows
        self.cols = cols
        self._re = re
        self._im = im
        self._den = den
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        """Build from nested rows of ints, Fractions, Scalars or literals."""
        data = [[to_scalar(x) for x in row] for row in rows]
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(row) != ncols for row in data):
            raise ShapeError("ragged rows")
        flat = [x for row in data for x in row]
        return cls.from_scalars(nrows, ncols, flat)

    @classmethod
    def from_scalars(cls, rows: int, cols: int, flat: Iterable) -> Matrix:
        flat = [to_scalar(x) for x in flat]
        den = lcm(1, *(x.re.denominator for x in flat), *(x.im.denominator for x in flat))
        re = [x.re.numerator * (den // x.re.denominator) for x in flat]
        im = [x.im.numerator * (den // x.im.denominator) for x in flat]
        return cls(rows, cols, re, im, den)

    @classmethod
    def _scaled(cls, rows, cols, re, im, scale, factor=1):
        """``factor * (re + im i) / scale`` for a Gaussian-integer ``scale``."""
        sr, si = scale
        if si == 0:
            if factor != 1:
                re = [factor * x for x in re]
                im = None if im is None else [factor * x for x in im]
            return cls(rows, cols, re, im, sr)
        # multiply through by the conjugate so the denominator is real
        norm = sr * sr + si * si
        if im is None:
            im = [0] * len(re)
        out_re = [factor * (x * sr + y * si) for x, y in zip(re, im)]
        out_im = [factor * (y * sr - x * si) for x, y in zip(re, im)]
        return cls(rows, cols, out_re, out_im, norm)

    # -- inspection -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return self._im is None and not any(self._re)

    @property
    def is_real(self) -> bool:
        return self._im is None

    def _scalar(self, k: int) -> Scalar:
        im = 0 if self._im is None else self._im[k]
        return Scalar(Fraction(self._re[k], self._den), Fraction(im, self._den))

    @property
    def entries(self) -> tuple[Scalar, ...]:
        """Row-major entries as scalars."""
        return tuple(self._scalar(k) for k in range(self.rows * self.cols))

    def tolist(self) -> list[list[Scalar]]:
        return [[self._scalar(i * self.cols + j) for j in range(self.cols)]
                for i in range(self.rows)]

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(x) for x in row] for row in self.tolist()]

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, int) and isinstance(j, int):
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(key)
            return self._scalar(i * self.cols + j)
        rows = range(self.rows)[i] if isinstance(i, slice) else [i]
        cols = range(self.cols)[j] if isinstance(j, slice) else [j]
        idx = [r * self.cols + c for r in rows for c in cols]
        im = None if self._im is None else [self._im[k] for k in idx]
        return Matrix(len(rows), len(cols), [self._re[k] for k in idx], im, self._den)

    def columns(self, indices: Sequence[int]) -> Matrix:
        """Submatrix made of the given columns, in order."""
        idx = [r * self.cols + c for r in range(self.rows) for c in indices]
        im = None if self._im is None else [self._im[k] for k in idx]
        return Matrix(self.rows, len(indices), [self._re[k] for k in idx], im, self._den)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self._den == other._den and self._re == other._re
                and self._im == other._im)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._den, tuple(self._re),
                               None if self._im is None else tuple(self._im)))
        return self._hash

    def __repr__(self):
        return f"Matrix.from_rows({self.to_strings()!r})"

    def __str__(self):
        cells = self.to_strings()
        if not cells or not cells[0]:
            return f"[] ({self.rows}x{self.cols})"
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)

    # -- arithmetic -------------------------------------------------------

    def _combine(self, other: Matrix, sign: int) -> Matrix:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")
        if other.is_zero:
            return self
        if self.is_zero and sign == 1:
            return other
        den = lcm(self._den, other._den)
        a = den // self._den
        b = sign * (den // other._den)
        re = [a * x + b * y for x, y in zip(self._re, other._re)]
        if self._im is None and other._im is None:
            im = None
        else:
            xi = self._im or [0] * len(re)
            yi = other._im or [0] * len(re)
            im = [a * x + b * y for x, y in zip(xi, yi)]
        return Matrix(self.rows, self.cols, re, im, den)

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> Matrix:
        im = None if self._im is None else [-x for x in self._im]
        return Matrix(self.rows, self.cols, [-x for x in self._re], im, self._den)

    def __mul__(self, scalar) -> Matrix:
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix products")
        s = to_scalar(scalar)
        den = lcm(s.re.denominator, s.im.denominator)
        sr = s.re.numerator * (den // s.re.denominator)
        si = s.im.numerator * (den // s.im.denominator)
        xi = self._im or [0] * len(self._re)
        re = [sr * x - si * y for x, y in zip(self._re, xi)]
        im = [sr * y + si * x for x, y in zip(self._re, xi)]
        return Matrix(self.rows, self.cols, re, im, self._den * den)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        if self.is_zero or other.is_zero:
            return zeros(self.rows, other.cols)
        re, im = kernels.matmul(self._re, self._im, other._re, other._im,
                                self.rows, self.cols, other.cols)
        return Matrix(self.rows, other.cols, re, im, self._den * other._den)

    def __pow__(self, k: int) -> Matrix:
        if not self.is_square:
            raise ShapeError(f"power of non-square {self.shape} matrix")
        if k < 0:
            raise ValueError("negative powers are not defined here")
        result = identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    @property
    def T(self) -> Matrix:
        idx = [r * self.cols + c for c in range(self.cols) for r in range(self.rows)]
        im = None if self._im is None else [self._im[k] for k in idx]
        return Matrix(self.cols, self.rows, [self._re[k] for k in idx], im, self._den)

    # -- elimination ------------------------------------------------------

    def _reduce(self):
        return kernels.gauss_jordan(self._re, self._im, self.rows, self.cols)

    def rank(self) -> int:
        if self.is_zero:
            return 0
        return len(self._reduce()[2])

    def inverse(self) -> Matrix:
        """Exact inverse; raises :class:`SingularMatrixError` when rank < n."""
        if not self.is_square:
            raise ShapeError(f"inverse of non-square {self.shape} matrix")
        n = self.rows
        w = 2 * n
        re = []
        for i in range(n):
            re.extend(self._re[i * n:(i + 1) * n])
            re.extend(1 if j == i else 0 for j in range(n))
        im = None
        if self._im is not None:
            im = []
            for i in range(n):
                im.extend(self._im[i * n:(i + 1) * n])
                im.extend([0] * n)
        out_re, out_im, pivots, scale = kernels.gauss_jordan(re, im, n, w)
        if pivots != list(range(n)):
            raise SingularMatrixError(f"matrix of size {n} has rank {sum(p < n for p in pivots)}")
        right_re = [out_re[i * w + n + j] for i in range(n) for j in range(n)]
        right_im = None if out_im is None else [out_im[i * w + n + j] for i in range(n) for j in range(n)]
        return Matrix._scaled(n, n, right_re, right_im, scale, factor=self._den)

    def column_space_basis(self) -> Matrix:
        """Pivot columns of the matrix itself; as many columns as the rank."""
        if self.is_zero:
            return zeros(self.rows, 0)
        return self.columns(self._reduce()[2])

    def null_space_basis(self) -> Matrix:
        """Kernel basis read off the reduced row echelon form."""
        if self.is_zero:
            return identity(self.cols)
        re, im, pivots, scale = self._reduce()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        k = len(free)
        out_re = [0] * (self.cols * k)
        out_im = None if im is None else [0] * (self.cols * k)
        sr, si = scale
        for t, f in enumerate(free):
            out_re[f * k + t] = sr
            if out_im is not None:
                out_im[f * k + t] = si
            for r, p in enumerate(pivots):
                out_re[p * k + t] = -re[r * self.cols + f]
                if out_im is not None:
                    out_im[p * k + t] = -im[r * self.cols + f]
        return Matrix._scaled(self.cols, k, out_re, out_im, scale)


def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix(rows, cols, [0] * (rows * cols))


def identity(n: int) -> Matrix:
    re = [0] * (n * n)
    for i in range(n):
        re[i * n + i] = 1
    return Matrix(n, n, re)


def block(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix from a grid of conformable matrices."""
    heights = [row[0].rows for row in grid]
    widths = [m.cols for m in grid[0]]
    for row, h in zip(grid, heights):
        if len(row) != len(widths):
            raise ShapeError("ragged block grid")
        for m, w in zip(row, widths):
            if m.shape != (h, w):
                raise ShapeError(f"block of shape {m.shape} does not fit a {h}x{w} slot")
    den = lcm(1, *(m._den for row in grid for m in row))
    rows, cols = sum(heights), sum(widths)
    complex_ = any(m._im is not None for row in grid for m in row)
    re = []
    im = [] if complex_ else None
    for row, h in zip(grid, heights):
        for i in range(h):
            for m in row:
                f = den // m._den
                sl = slice(i * m.cols, (i + 1) * m.cols)
                re.extend(f * x for x in m._re[sl])
                if complex_:
                    if m._im is None:
                        im.extend([0] * m.cols)
                    else:
                        im.extend(f * x for x in m._im[sl])
    return Matrix(rows, cols, re, im, den)
