"""Drazin inverses of 2x2 block matrices M = [[A, B], [C, D]].

Each representation splits M = P + Q and hands the pieces to the additive
machinery exactly as the corresponding construction prescribes; nothing is
re-derived here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .additive import (
    HypothesisReport,
    _cor_pqp_series,
    _cor_q2,
    _Known,
    _p2q_qpq_series,
    _Spectral,
)
from .core import drazin_oracle
from .errors import ShapeError
from .matrix import Matrix, block, zeros

__all__ = [
    "BLOCK_FORMULAS",
    "BlockInstance",
    "applicability_report",
    "assemble",
    "block_abc",
    "block_bcb",
    "block_bdc",
    "block_cab",
    "check_block_hypotheses",
]

BLOCK_FORMULAS = ("bcb", "bdc", "abc", "cab")


@dataclass(frozen=True)
class BlockInstance:
    a: Matrix
    b: Matrix
    c: Matrix
    d: Matrix

    def __post_init__(self):
        m, n = self.a.rows, self.d.rows
        want = {"A": (m, m), "B": (m, n), "C": (n, m), "D": (n, n)}
        got = {"A": self.a.shape, "B": self.b.shape, "C": self.c.shape, "D": self.d.shape}
        for name in want:
            if want[name] != got[name]:
                raise ShapeError(f"block {name} has shape {got[name]}, expected {want[name]}")

    @property
    def m(self) -> int:
        return self.a.rows

    @property
    def n(self) -> int:
        return self.d.rows

    def transpose(self) -> BlockInstance:
        """Blocks of M^T, i.e. (A^T, C^T, B^T, D^T)."""
        return BlockInstance(self.a.T, self.c.T, self.b.T, self.d.T)


def assemble(inst: BlockInstance) -> Matrix:
    return block([[inst.a, inst.b], [inst.c, inst.d]])


# -- hypotheses ---------------------------------------------------------------

def _pi(x: Matrix) -> Matrix:
    return drazin_oracle(x).eigenprojection


def check_block_hypotheses(formula_id: str, inst: BlockInstance) -> HypothesisReport:
    a, b, c, d = inst.a, inst.b, inst.c, inst.d
    report = HypothesisReport(formula_id, [], [])
    if formula_id == "bcb":
        bc = b @ c
        bc_pi = _pi(bc)
        report.add("BCB=0", bc @ b)
        report.add("DCB=0", d @ c @ b)
        report.add("BCA(BC)^pi=0", bc @ a @ bc_pi)
        report.add("DCA(BC)^pi=0", d @ c @ a @ bc_pi)
    elif formula_id == "bdc":
        bc = b @ c
        report.add("BCB=0", bc @ b)
        report.add("BDC=0", b @ d @ c)
        report.add("BD^2=0", b @ d @ d)
        report.add("BCA(BC)^pi=0", bc @ a @ _pi(bc))
    elif formula_id == "abc":
        cb = c @ b
        cb_pi = _pi(cb)
        report.add("ABC=0", a @ b @ c)
        report.add("CBC=0", cb @ c)
        report.add("ABD(CB)^pi=0", a @ b @ d @ cb_pi)
        report.add("CBD(CB)^pi=0", cb @ d @ cb_pi)
    elif formula_id == "cab":
        cb = c @ b
        report.add("CAB=0", c @ a @ b)
        report.add("CBC=0", cb @ c)
        report.add("A^2B=0", a @ a @ b)
        report.add("CBD(CB)^pi=0", cb @ d @ _pi(cb))
    else:
        raise ValueError(f"unknown block formula id {formula_id!r}; expected one of {BLOCK_FORMULAS}")
    return report


def applicability_report(inst: BlockInstance) -> dict[str, HypothesisReport]:
    """Condition verdicts for all four block formulas plus nonvacuity flags.

    The flags are attached to every report: ``BC!=0``, ``CB!=0``,
    ``(BC)^pi!=I`` and ``(CB)^pi!=I``.
    """
    bc, cb = inst.b @ inst.c, inst.c @ inst.b
    flags = {
        "BC!=0": not bc.is_zero,
        "CB!=0": not cb.is_zero,
        "(BC)^pi!=I": not drazin_oracle(bc).drazin.is_zero,
        "(CB)^pi!=I": not drazin_oracle(cb).drazin.is_zero,
    }
    out = {}
    for fid in BLOCK_FORMULAS:
        report = check_block_hypotheses(fid, inst)
        report.flags.update(flags)
        out[fid] = report
    return out


# -- representations ----------------------------------------------------------

def _bcb_split(inst: BlockInstance) -> tuple[Matrix, Matrix]:
    m, n = inst.m, inst.n
    p = block([[inst.a, inst.b], [zeros(n, m), inst.d]])
    q = block([[zeros(m, m), zeros(m, n)], [inst.c, zeros(n, n)]])
    return p, q


def _abc_split(inst: BlockInstance) -> tuple[Matrix, Matrix]:
    m, n = inst.m, inst.n
    p = block([[inst.a, zeros(m, n)], [inst.c, inst.d]])
    q = block([[zeros(m, m), inst.b], [zeros(n, m), zeros(n, n)]])
    return p, q


def _bcb(inst: BlockInstance) -> Matrix:
    # P = [[A, B], [0, D]], Q = [[0, 0], [C, 0]]: Q^2 = 0 and E = P, F = PQ
    return _cor_q2(*_bcb_split(inst))


def _abc(inst: BlockInstance) -> Matrix:
    # P = [[A, 0], [C, D]], Q = [[0, B], [0, 0]]
    return _cor_q2(*_abc_split(inst))


def block_bcb(inst: BlockInstance) -> Matrix:
    """M^D when BCB = 0, DCB = 0, BCA(BC)^pi = 0 and DCA(BC)^pi = 0."""
    check_block_hypotheses("bcb", inst).raise_if_violated()
    return _bcb(inst)


def block_bdc(inst: BlockInstance) -> Matrix:
    """M^D when BCB = 0, BDC = 0, BD^2 = 0 and BCA(BC)^pi = 0.

    Splits M = [[A, B], [C, 0]] + [[0, 0], [0, D]]; the first summand's
    Drazin inverse comes from :func:`block_bcb` with a zero corner.
    """
    check_block_hypotheses("bdc", inst).raise_if_violated()
    m, n = inst.m, inst.n
    corner = BlockInstance(inst.a, inst.b, inst.c, zeros(n, n))
    p = assemble(corner)
    q = block([[zeros(m, m), zeros(m, n)], [zeros(n, m), inst.d]])
    return _cor_pqp_series(_Known(p, _bcb(corner)), _Spectral(q))


def block_abc(inst: BlockInstance) -> Matrix:
    """M^D when ABC = 0, CBC = 0, ABD(CB)^pi = 0 and CBD(CB)^pi = 0."""
    check_block_hypotheses("abc", inst).raise_if_violated()
    return _abc(inst)


def block_cab(inst: BlockInstance) -> Matrix:
    """M^D when CAB = 0, CBC = 0, A^2 B = 0 and CBD(CB)^pi = 0.

    Splits M = [[A, 0], [0, 0]] + [[0, B], [C, D]] (so P^2 Q = 0 and
    QPQ = 0); the second summand's Drazin inverse comes from
    :func:`block_abc` with a zero corner.
    """
    check_block_hypotheses("cab", inst).raise_if_violated()
    m, n = inst.m, inst.n
    corner = BlockInstance(zeros(m, m), inst.b, inst.c, inst.d)
    p = block([[inst.a, zeros(m, n)], [zeros(n, m), zeros(n, n)]])
    q = assemble(corner)
    return _p2q_qpq_series(_Spectral(p), _Known(q, _abc(corner)))


FORMULAS = {
    "bcb": block_bcb,
    "bdc": block_bdc,
    "abc": block_abc,
    "cab": block_cab,
}
