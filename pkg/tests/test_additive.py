import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import matrices, square_matrices
from drazinkit.additive import (
    FORMULAS,
    _Spectral,
    additive_cor_pqp,
    additive_cor_q2,
    additive_pq_zero,
    additive_thm_pqq,
    anti_triangular_drazin,
    anti_triangular_parts,
    check_hypotheses,
    cline,
    cline_split,
    seq_quad,
)
from drazinkit.core import drazin, satisfies_drazin_axioms
from drazinkit.errors import HypothesisViolated, ShapeError
from drazinkit.generate import generate_batch
from drazinkit.matrix import Matrix, block, identity, zeros

M = Matrix.from_rows
P_IDEM = M([[1, 0], [0, 0]])
Q_NIL = M([[0, 0], [1, 0]])


def _ex_split(example_blocks):
    a, b, c, d = example_blocks.a, example_blocks.b, example_blocks.c, example_blocks.d
    p = block([[a, b], [zeros(2), d]])
    q = block([[zeros(2), zeros(2)], [c, zeros(2)]])
    return p, q


# -- PQ = 0 ---------------------------------------------------------------------

def test_pq_zero_examples():
    p = M([[0, 1, 0], [0, 0, 0], [0, 0, 2]])
    assert additive_pq_zero(zeros(3), p) == drazin(p)
    assert additive_pq_zero(p, zeros(3)) == drazin(p)
    assert additive_pq_zero(P_IDEM, Q_NIL) == M([[1, 0], [1, 0]])


def test_pq_zero_rejects():
    with pytest.raises(HypothesisViolated) as info:
        additive_pq_zero(identity(2), identity(2))
    assert info.value.report.failed() == ["PQ=0"]


# -- Cline ----------------------------------------------------------------------

@given(st.data())
def test_cline_matches_oracle(data):
    p, q = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    a = data.draw(matrices(rows=p, cols=q))
    b = data.draw(matrices(rows=q, cols=p))
    out = cline(a, b)
    assert out == drazin(a @ b)
    assert satisfies_drazin_axioms(a @ b, out)


def test_cline_examples():
    b = M([[0, 1, 2], [0, 0, 1], [0, 0, 3]])
    assert cline(identity(3), b) == drazin(b)
    assert cline(b, identity(3)) == drazin(b)
    with pytest.raises(ShapeError):
        cline(zeros(2, 3), zeros(2, 3))


# -- block power sequence -----------------------------------------------------

def _power_blocks(e, f, i):
    fd = drazin(f)
    ffd = f @ fd
    x = block([[zeros(e.rows), fd], [ffd, -(ffd @ e @ fd)]])
    n = e.rows
    p = x ** (2 * i + 1)
    return p[:n, :n], p[:n, n:], p[n:, :n], p[n:, n:]


@given(square_matrices(max_size=3), st.data())
def test_seq_quad_block_power_identity(e, data):
    f = data.draw(matrices(rows=e.rows, cols=e.rows))
    for i in range(1, 4):
        s = seq_quad(e, f, i)
        assert (s.a, s.b, s.c, s.d) == _power_blocks(e, f, i)


def test_seq_quad_examples():
    e = M([[1, 2], [0, "i"]])
    s = seq_quad(e, zeros(2), 3)
    assert s.a.is_zero and s.b.is_zero and s.c.is_zero and s.d.is_zero
    s = seq_quad(zeros(2), identity(2), 1)
    assert s.a.is_zero and s.b == identity(2) and s.c == identity(2) and s.d.is_zero


def test_seq_quad_base_case_uses_e_times_fd():
    # with F^D E != F^D E F^D the corner must be -F^D E F^D
    e, f = M([[1]]), M([[2]])
    s = seq_quad(e, f, 1)
    assert s.a == M([["-1/4"]])
    assert s.a != -(drazin(f) @ e)
    with pytest.raises(ValueError):
        seq_quad(e, f, 0)


# -- anti-triangular ----------------------------------------------------------

def test_anti_triangular_involution():
    parts = anti_triangular_parts(zeros(2), identity(2))
    assert parts.gamma.is_zero and parts.xi.is_zero
    assert parts.delta == identity(2) and parts.lambda_ == identity(2)


@given(square_matrices(max_size=3))
def test_anti_triangular_with_zero_f(e):
    n = e.rows
    parts = anti_triangular_parts(e, zeros(n))
    ed = drazin(e)
    assert parts.gamma == ed
    assert parts.delta == ed @ ed
    assert parts.lambda_.is_zero and parts.xi.is_zero
    assert parts.assemble() == drazin(block([[e, identity(n)], [zeros(n), zeros(n)]]))


def test_anti_triangular_on_example_split(example_blocks):
    p, q = _ex_split(example_blocks)
    e, f = p, p @ q
    m = block([[e, identity(4)], [f, zeros(4)]])
    out = anti_triangular_drazin(e, f)
    assert satisfies_drazin_axioms(m, out)
    assert out == drazin(m)


def test_anti_triangular_rejects():
    # F E F^pi != 0
    e, f = M([[0, 1], [0, 0]]), M([[0, 0], [1, 0]])
    with pytest.raises(HypothesisViolated):
        anti_triangular_drazin(e, f)


# -- PQ^2 = 0 family ------------------------------------------------------------

def test_thm_pqq_trivial():
    p = M([[0, 1, 0], [0, 0, 0], [0, 0, -1]])
    assert additive_thm_pqq(p, zeros(3)) == drazin(p)
    assert additive_thm_pqq(zeros(3), p) == drazin(p)
    assert additive_cor_q2(p, zeros(3)) == drazin(p)
    assert additive_cor_pqp(p, zeros(3)) == drazin(p)


def test_cor_pqp_idempotent_example():
    assert additive_cor_pqp(P_IDEM, Q_NIL) == M([[1, 0], [1, 0]])
    assert additive_thm_pqq(P_IDEM, Q_NIL) == M([[1, 0], [1, 0]])


def test_cor_q2_on_example_split(example_blocks, example_md):
    p, q = _ex_split(example_blocks)
    assert check_hypotheses("q20", p, q).all_hold
    assert additive_cor_q2(p, q) == example_md


def test_cline_split_invariants(example_blocks):
    p, q = _ex_split(example_blocks)
    s = cline_split(p, q)
    n = p.rows
    assert s.k == block([[p, p @ q], [identity(n), zeros(n)]])
    assert s.h == block([[p, identity(n)], [p @ q, zeros(n)]])
    assert (s.k @ s.l).is_zero
    assert s.l_drazin == block([[zeros(n), zeros(n)], [zeros(n), drazin(q)]])
    assert s.k_drazin == drazin(s.k)


def test_check_hypotheses_reports():
    p = M([[1, 2], [0, 1]])
    assert check_hypotheses("pq0", p, zeros(2)).all_hold
    report = check_hypotheses("pqq0", identity(2), identity(2))
    assert report.holds[0] is False
    assert report.witnesses["PQ^2=0"] == identity(2)
    with pytest.raises(ValueError):
        check_hypotheses("nope", p, p)
    with pytest.raises(ShapeError):
        check_hypotheses("pq0", p, zeros(3))


@pytest.mark.parametrize("case", sorted(FORMULAS))
def test_formula_matches_oracle_on_generated(case):
    for inst in generate_batch(case, 99, 12):
        assert FORMULAS[case](*inst.pair) == drazin(inst.summed)


# -- truncation -----------------------------------------------------------------

@given(square_matrices(max_size=5))
def test_series_factors_vanish_at_the_cutoff(x):
    # every truncated sum carries X^i X^pi or E^pi E^i, both zero once i >= n
    n = x.rows
    s = _Spectral(x)
    assert s.pow_pi(n).is_zero
    assert (s.pi @ s.pow(n)).is_zero
    for j in range(1, 2 * n + 1):
        for i in range(0, 2 * n + 1):
            if i + j >= n:
                assert (s.d_pow(2 * j) @ s.pow_pi(i + j)).is_zero
