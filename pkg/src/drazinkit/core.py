"""Drazin inverse, index and eigenprojection by core-nilpotent decomposition.

This is the reference path every closed-form representation is checked
against, so it shares no code with the formulas beyond exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, ShapeError, SingularMatrixError
from .matrix import Matrix, block, identity, zeros

__all__ = [
    "DrazinResult",
    "drazin_index",
    "drazin_oracle",
    "drazin",
    "eigenprojection",
    "satisfies_drazin_axioms",
]


@dataclass(frozen=True)
class DrazinResult:
    drazin: Matrix
    index: int
    eigenprojection: Matrix


def _require_square(a: Matrix, what: str) -> None:
    if not a.is_square:
        raise ShapeError(f"{what} needs a square matrix, got {a.rows}x{a.cols}")


def _index_and_power(a: Matrix) -> tuple[int, Matrix]:
    n = a.rows
    power = identity(n)
    rank = n
    for k in range(n + 1):
        nxt = power @ a
        nxt_rank = nxt.rank()
        if nxt_rank == rank:
            return k, power
        power, rank = nxt, nxt_rank
    raise InvariantViolation("rank sequence of powers did not stabilise within n steps")


def drazin_index(a: Matrix) -> int:
    """Smallest k >= 0 with rank(A^k) == rank(A^(k+1)).

    >>> drazin_index(Matrix.from_rows([[0, 1], [0, 0]]))
    2
    """
    _require_square(a, "drazin_index")
    return _index_and_power(a)[0]


def drazin_oracle(a: Matrix) -> DrazinResult:
    """Drazin inverse of ``a`` through a core-nilpotent similarity.

    With k the index, the columns of A^k span the core part and its kernel
    the nilpotent part; ``S = [range basis | kernel basis]`` block
    diagonalises A, and inverting the core block gives A^D.
    """
    _require_square(a, "drazin_oracle")
    n = a.rows
    k, ak = _index_and_power(a)
    if k == 0:
        inv = a.inverse()
        return DrazinResult(inv, 0, zeros(n))
    core = ak.column_space_basis()
    r = core.cols
    if r == 0:
        return DrazinResult(zeros(n), k, identity(n))
    s = block([[core, ak.null_space_basis()]])
    try:
        s_inv = s.inverse()
    except SingularMatrixError as exc:
        raise InvariantViolation("core and nilpotent bases are not complementary") from exc
    similar = s_inv @ a @ s
    if not (similar[:r, r:].is_zero and similar[r:, :r].is_zero):
        raise InvariantViolation("similarity is not block diagonal")
    core_inv = similar[:r, :r].inverse()
    padded = block([[core_inv, zeros(r, n - r)], [zeros(n - r, r), zeros(n - r, n - r)]])
    ad = s @ padded @ s_inv
    return DrazinResult(ad, k, identity(n) - a @ ad)


def drazin(a: Matrix) -> Matrix:
    """Shorthand for ``drazin_oracle(a).drazin``."""
    return drazin_oracle(a).drazin


def eigenprojection(a: Matrix) -> Matrix:
    """Spectral idempotent I - A A^D for the eigenvalue 0."""
    return drazin_oracle(a).eigenprojection


def satisfies_drazin_axioms(a: Matrix, x: Matrix, index: int | None = None) -> bool:
    """Check AX = XA, XAX = X and A^(k+1) X = A^k exactly.

    Without an explicit ``index`` the last relation is checked at k = n,
    which holds for the Drazin inverse whatever its index is.
    """
    if not a.is_square or x.shape != a.shape:
        return False
    ax = a @ x
    if ax != x @ a:
        return False
    if x @ ax != x:
        return False
    k = a.rows if index is None else index
    ak = a ** k
    return ak @ ax == ak
