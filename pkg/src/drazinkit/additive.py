"""Additive representations of (P+Q)^D under zero-product hypotheses.

Every formula takes the Drazin inverses and eigenprojections of its
ingredients (P, Q, E, F, PQ) from the core-nilpotent oracle, so a formula
is only ever tested against itself.  Infinite sums are truncated at twice
the side length of the matrices being summed; every surviving term carries
a factor X^i X^pi or a nilpotent power that is already zero long before
that bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .core import drazin_oracle, satisfies_drazin_axioms
from .errors import HypothesisViolated, SeriesNotValidated, ShapeError
from .matrix import Matrix, block, identity, zeros

__all__ = [
    "ADDITIVE_FORMULAS",
    "AntiTriangularParts",
    "ClineSplit",
    "HypothesisReport",
    "SeqQuad",
    "additive_cor_pqp",
    "additive_cor_q2",
    "additive_pq_zero",
    "additive_thm_pqq",
    "anti_triangular_drazin",
    "anti_triangular_parts",
    "check_hypotheses",
    "cline",
    "cline_split",
    "seq_quad",
]


@dataclass
class HypothesisReport:
    """Verdicts for the zero-product conditions of one formula.

    ``witnesses`` maps each violated condition to its nonzero product.
    ``flags`` carries optional extra booleans (e.g. nonvacuity markers).
    """

    formula: str
    condition_labels: list[str]
    holds: list[bool]
    witnesses: dict[str, Matrix] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(self.holds)

    def failed(self) -> list[str]:
        return [label for label, ok in zip(self.condition_labels, self.holds) if not ok]

    def add(self, label: str, product: Matrix) -> None:
        ok = product.is_zero
        self.condition_labels.append(label)
        self.holds.append(ok)
        if not ok:
            self.witnesses[label] = product

    def raise_if_violated(self) -> None:
        if not self.all_hold:
            raise HypothesisViolated(self)


class _Spectral:
    """Lazily cached Drazin data and powers for one square matrix."""

    def __init__(self, a: Matrix):
        self.a = a
        self.n = a.rows
        self._powers = [identity(a.rows)]
        self._d_powers = None
        self._pi_powers = None

    @cached_property
    def _oracle(self):
        return drazin_oracle(self.a)

    @property
    def d(self) -> Matrix:
        return self._oracle.drazin

    @property
    def pi(self) -> Matrix:
        return self._oracle.eigenprojection

    def pow(self, k: int) -> Matrix:
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] @ self.a)
        return self._powers[k]

    def d_pow(self, k: int) -> Matrix:
        """(A^D)^k, with (A^D)^0 = I."""
        if self._d_powers is None:
            self._d_powers = [identity(self.n)]
        while len(self._d_powers) <= k:
            self._d_powers.append(self._d_powers[-1] @ self.d)
        return self._d_powers[k]

    def pow_pi(self, k: int) -> Matrix:
        """A^k A^pi; zero once k reaches the index."""
        if self._pi_powers is None:
            self._pi_powers = [self.pi]
        while len(self._pi_powers) <= k:
            self._pi_powers.append(self.a @ self._pi_powers[-1])
        return self._pi_powers[k]


def _truncation(n: int) -> int:
    return 2 * n


def _square_pair(p: Matrix, q: Matrix, what: str) -> int:
    if not p.is_square or p.shape != q.shape:
        raise ShapeError(f"{what} needs two square matrices of one size, got {p.shape} and {q.shape}")
    return p.rows


def _sum(terms, n: int) -> Matrix:
    total = zeros(n)
    for t in terms:
        if not t.is_zero:
            total = total + t
    return total


# -- hypotheses ---------------------------------------------------------------

ADDITIVE_FORMULAS = ("pq0", "antitri", "pqq0", "q20", "pqp0")


def check_hypotheses(formula_id: str, p: Matrix, q: Matrix) -> HypothesisReport:
    """Exact zero tests for an additive formula.

    For ``antitri`` the pair is read as (E, F) and the condition is
    F E F^pi = 0; for the others it is the summand pair (P, Q).
    """
    _square_pair(p, q, "check_hypotheses")
    report = HypothesisReport(formula_id, [], [])
    if formula_id == "pq0":
        report.add("PQ=0", p @ q)
    elif formula_id == "antitri":
        e, f = p, q
        report.add("FEF^pi=0", f @ e @ drazin_oracle(f).eigenprojection)
    elif formula_id in ("pqq0", "q20"):
        pq = p @ q
        if formula_id == "pqq0":
            report.add("PQ^2=0", pq @ q)
        else:
            report.add("Q^2=0", q @ q)
        report.add("PQP(PQ)^pi=0", pq @ p @ drazin_oracle(pq).eigenprojection)
    elif formula_id == "pqp0":
        pq = p @ q
        report.add("PQ^2=0", pq @ q)
        report.add("PQP=0", pq @ p)
    else:
        raise ValueError(f"unknown additive formula id {formula_id!r}; expected one of {ADDITIVE_FORMULAS}")
    return report


# -- PQ = 0 -------------------------------------------------------------------

def _pq_zero_series(p: _Spectral, q: _Spectral) -> Matrix:
    """sum (Q^D)^{i+1} P^i P^pi + sum Q^i Q^pi (P^D)^{i+1}."""
    n = p.n
    top = _truncation(n)
    terms = []
    for i in range(top + 1):
        tail = p.pow_pi(i)
        if tail.is_zero:
            break
        terms.append(q.d_pow(i + 1) @ tail)
    for i in range(top + 1):
        head = q.pow_pi(i)
        if head.is_zero:
            break
        terms.append(head @ p.d_pow(i + 1))
    return _sum(terms, n)


def additive_pq_zero(p: Matrix, q: Matrix) -> Matrix:
    """(P+Q)^D for PQ = 0."""
    check_hypotheses("pq0", p, q).raise_if_violated()
    return _pq_zero_series(_Spectral(p), _Spectral(q))


# -- Cline's formula ----------------------------------------------------------

def cline(a: Matrix, b: Matrix, ba_drazin: Matrix | None = None) -> Matrix:
    """(AB)^D = A ((BA)^D)^2 B for A p-by-q and B q-by-p.

    ``ba_drazin`` lets a caller supply (BA)^D from another route; by default
    it comes from the oracle.
    """
    if a.cols != b.rows or a.rows != b.cols:
        raise ShapeError(f"cline needs A p-by-q and B q-by-p, got {a.shape} and {b.shape}")
    if ba_drazin is None:
        ba_drazin = drazin_oracle(b @ a).drazin
    return a @ ba_drazin @ ba_drazin @ b


# -- anti-triangular matrices [[E, I], [F, 0]] ---------------------------------

@dataclass(frozen=True)
class SeqQuad:
    """Blocks of [[0, F^D], [FF^D, -FF^D E F^D]]^(2i+1)."""

    a: Matrix
    b: Matrix
    c: Matrix
    d: Matrix
    i: int


@dataclass(frozen=True)
class AntiTriangularParts:
    gamma: Matrix
    delta: Matrix
    lambda_: Matrix
    xi: Matrix

    def assemble(self) -> Matrix:
        return block([[self.gamma, self.delta], [self.lambda_, self.xi]])


def _seq_quads(f: _Spectral, e: Matrix, upto: int) -> list[SeqQuad]:
    fd = f.d
    ffd = f.a @ fd
    g = e @ fd
    fd_g = fd @ g
    ffd_g = ffd @ g
    lower_right = fd + ffd_g @ g
    quads = [SeqQuad(-fd_g,
                     fd @ fd + fd_g @ g,
                     lower_right,
                     -fd_g - ffd_g @ fd - ffd_g @ g @ g,
                     1)]
    for i in range(1, upto):
        s = quads[-1]
        quads.append(SeqQuad(fd @ s.a - fd_g @ s.c,
                             fd @ s.b - fd_g @ s.d,
                             lower_right @ s.c - ffd_g @ s.a,
                             lower_right @ s.d - ffd_g @ s.b,
                             i + 1))
    return quads


def seq_quad(e: Matrix, f: Matrix, i: int) -> SeqQuad:
    """(A_i, B_i, C_i, D_i) from the base case i = 1 and the two-step recurrence.

    Every E in the recurrence coefficients appears as E F^D, which is what
    squaring [[0, F^D], [FF^D, -FF^D E F^D]] produces.
    """
    _square_pair(e, f, "seq_quad")
    if i < 1:
        raise ValueError("seq_quad is indexed from i = 1")
    return _seq_quads(_Spectral(f), e, i)[-1]


def _anti_triangular_parts(e: _Spectral, f: _Spectral) -> AntiTriangularParts:
    n = e.n
    top = _truncation(n)
    E, F = e.a, f.a
    ed, epi = e.d, e.pi
    fd = f.d
    ffd = F @ fd
    quads = _seq_quads(f, E, top)

    def epi_e(k):  # E^pi E^k
        return epi @ e.pow(k)

    def u(i):  # (E^pi - sum_{j>=1} (E^D)^{2j} F^j) F^i F^pi
        return _sum([epi @ f.pow_pi(i)]
                    + [-(e.d_pow(2 * j) @ f.pow_pi(i + j)) for j in range(1, top + 1)
                       if not f.pow_pi(i + j).is_zero], n)

    u0 = u(0)
    fpi_e_ffd = f.pi @ E @ ffd

    def bracket_c(i):  # multiplies F^D C_i in gamma and F^D D_i in delta
        terms = [u(i) @ E, epi_e(2 * i) @ fpi_e_ffd]
        terms += [epi_e(2 * k + 2) @ f.pow_pi(i - k - 1) @ E for k in range(0, i - 1)]
        return _sum(terms, n)

    def bracket_a(i):  # multiplies A_i in gamma and B_i in delta
        terms = [epi_e(2 * i - 1) @ fpi_e_ffd]
        terms += [-(e.d_pow(2 * j + 1) @ f.pow_pi(i + j) @ E) for j in range(0, top + 1)
                  if not f.pow_pi(i + j).is_zero]
        terms += [epi_e(2 * k + 1) @ f.pow_pi(i - k - 1) @ E for k in range(0, i - 1)]
        return _sum(terms, n)

    gamma = [e.d_pow(2 * i + 1) @ f.pow_pi(i) for i in range(top + 1)]
    gamma.append(u0 @ E @ fd)
    delta = [fd]
    delta.append(-(ed @ f.pi @ E @ fd))
    delta += [-(e.d_pow(2 * i + 1) @ f.pow_pi(i) @ E @ fd) for i in range(1, top + 1)]
    delta += [e.d_pow(2 * i + 2) @ f.pow_pi(i) for i in range(top + 1)]
    delta.append(-(u0 @ E @ fd @ E @ fd))
    lambda_ = [ffd]
    xi = [-(ffd @ E @ fd)]
    for quad in quads:
        i = quad.i
        bc = bracket_c(i)
        ba = bracket_a(i)
        if not bc.is_zero:
            gamma.append(bc @ fd @ quad.c)
            delta.append(bc @ fd @ quad.d)
        if not ba.is_zero:
            gamma.append(ba @ quad.a)
            delta.append(ba @ quad.b)
        lead = f.pow_pi(i)
        if not lead.is_zero:
            lambda_.append(lead @ E @ quad.a)
            xi.append(lead @ E @ quad.b)
    return AntiTriangularParts(_sum(gamma, n), _sum(delta, n), _sum(lambda_, n), _sum(xi, n))


def _anti_triangular_validated(e: _Spectral, f: _Spectral) -> AntiTriangularParts:
    parts = _anti_triangular_parts(e, f)
    n = e.n
    m = block([[e.a, identity(n)], [f.a, zeros(n)]])
    if not satisfies_drazin_axioms(m, parts.assemble()):
        raise SeriesNotValidated("assembled anti-triangular blocks fail the Drazin axioms")
    return parts


def anti_triangular_parts(e: Matrix, f: Matrix) -> AntiTriangularParts:
    """Blocks of [[E, I], [F, 0]]^D when F E F^pi = 0."""
    check_hypotheses("antitri", e, f).raise_if_violated()
    return _anti_triangular_validated(_Spectral(e), _Spectral(f))


def anti_triangular_drazin(e: Matrix, f: Matrix) -> Matrix:
    return anti_triangular_parts(e, f).assemble()


# -- PQ^2 = 0 and PQP(PQ)^pi = 0 ---------------------------------------------------

@dataclass(frozen=True)
class ClineSplit:
    """P+Q lifted to K + L on the doubled space, with H the Cline partner of K."""

    k: Matrix
    l: Matrix
    h: Matrix
    k_drazin: Matrix
    l_drazin: Matrix
    left: Matrix   # (I, Q)
    right: Matrix  # (P; I)


def _cline_split(p: Matrix, q: _Spectral) -> ClineSplit:
    n = p.rows
    i_n, z = identity(n), zeros(n)
    pq = p @ q.a
    outer = block([[p, i_n], [i_n, z]])
    inner = block([[i_n, z], [z, pq]])
    h_d = _anti_triangular_validated(_Spectral(p), _Spectral(pq)).assemble()
    return ClineSplit(
        k=outer @ inner,
        l=block([[z, z], [z, q.a]]),
        h=inner @ outer,
        k_drazin=cline(outer, inner, h_d),
        l_drazin=block([[z, z], [z, q.d]]),
        left=block([[i_n, q.a]]),
        right=block([[p], [i_n]]),
    )


def cline_split(p: Matrix, q: Matrix) -> ClineSplit:
    """K, L, H and K^D, L^D for a pair satisfying PQ^2 = 0 and PQP(PQ)^pi = 0."""
    check_hypotheses("pqq0", p, q).raise_if_violated()
    return _cline_split(p, _Spectral(q))


class _Known(_Spectral):
    """Spectral data with a Drazin inverse supplied by the caller."""

    def __init__(self, a: Matrix, d: Matrix):
        super().__init__(a)
        self._d = d
        self._pi = identity(a.rows) - a @ d

    @property
    def d(self) -> Matrix:
        return self._d

    @property
    def pi(self) -> Matrix:
        return self._pi


def _thm_pqq(p: Matrix, q: _Spectral) -> Matrix:
    split = _cline_split(p, q)
    sum_d = _pq_zero_series(_Known(split.k, split.k_drazin), _Known(split.l, split.l_drazin))
    return split.left @ sum_d @ sum_d @ split.right


def additive_thm_pqq(p: Matrix, q: Matrix) -> Matrix:
    """(P+Q)^D for PQ^2 = 0 and PQP(PQ)^pi = 0, through the doubled-space split."""
    check_hypotheses("pqq0", p, q).raise_if_violated()
    return _thm_pqq(p, _Spectral(q))


def _cor_q2(p: Matrix, q: Matrix) -> Matrix:
    split = _cline_split(p, _Spectral(q))
    kd = split.k_drazin
    sum_d = kd + split.l @ kd @ kd
    return split.left @ sum_d @ sum_d @ split.right


def additive_cor_q2(p: Matrix, q: Matrix) -> Matrix:
    """(P+Q)^D for Q^2 = 0 and PQP(PQ)^pi = 0; here (K+L)^D = K^D + L (K^D)^2."""
    check_hypotheses("q20", p, q).raise_if_violated()
    return _cor_q2(p, q)


# -- PQ^2 = 0 and PQP = 0 -----------------------------------------------------

def _cor_pqp_series(p: _Spectral, q: _Spectral) -> Matrix:
    n = p.n
    top = _truncation(n)
    P, Q = p.a, q.a
    pd, qd = p.d, q.d
    terms = [_pq_zero_series(p, q)]
    for i in range(top + 1):
        head = q.pow_pi(i)
        if head.is_zero:
            break
        terms.append(head @ p.d_pow(i + 2) @ Q)
    for i in range(top + 1):
        tail = p.pow_pi(i + 1)
        if tail.is_zero:
            break
        terms.append(q.d_pow(i + 3) @ tail @ Q)
    terms.append(-(qd @ pd @ Q))
    terms.append(-(q.d_pow(2) @ P @ pd @ Q))
    return _sum(terms, n)


def additive_cor_pqp(p: Matrix, q: Matrix) -> Matrix:
    """(P+Q)^D for PQ^2 = 0 and PQP = 0 by the six-term closed form."""
    check_hypotheses("pqp0", p, q).raise_if_violated()
    return _cor_pqp_series(_Spectral(p), _Spectral(q))


def _p2q_qpq_series(p: _Spectral, q: _Spectral) -> Matrix:
    """(P+Q)^D for P^2 Q = 0 and QPQ = 0."""
    n = p.n
    top = _truncation(n)
    P, Q = p.a, q.a
    pd, qd = p.d, q.d
    terms = []
    for i in range(top + 1):
        head = q.pow_pi(i)
        if head.is_zero:
            break
        terms.append(head @ p.d_pow(i + 1))
    for i in range(top + 1):
        tail = p.pow_pi(i)
        if tail.is_zero:
            break
        terms.append(q.d_pow(i + 1) @ tail)
        terms.append(P @ q.d_pow(i + 2) @ tail)
    for i in range(top + 1):
        head = q.pow_pi(i + 1)
        if head.is_zero:
            break
        terms.append(P @ head @ p.d_pow(i + 3))
    terms.append(-(P @ qd @ pd))
    terms.append(-(P @ Q @ qd @ pd @ pd))
    return _sum(terms, n)


FORMULAS = {
    "pq0": additive_pq_zero,
    "antitri": anti_triangular_drazin,
    "pqq0": additive_thm_pqq,
    "q20": additive_cor_q2,
    "pqp0": additive_cor_pqp,
}
