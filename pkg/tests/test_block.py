import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import matrices
from drazinkit.block import (
    FORMULAS,
    BlockInstance,
    applicability_report,
    assemble,
    block_abc,
    block_bcb,
    block_bdc,
    block_cab,
    check_block_hypotheses,
)
from drazinkit.core import drazin
from drazinkit.errors import HypothesisViolated, ShapeError
from drazinkit.generate import generate_batch
from drazinkit.matrix import Matrix, block, identity, zeros

M = Matrix.from_rows


def test_assemble(example_blocks):
    assert assemble(example_blocks) == M([[0, 1, 0, 2], [0, 0, 0, 0], [0, 1, -1, 1], [0, -1, 0, 0]])
    z = BlockInstance(zeros(2), zeros(2, 3), zeros(3, 2), zeros(3))
    assert assemble(z).is_zero
    assert assemble(BlockInstance(identity(2), zeros(2, 1), zeros(1, 2), identity(1))) == identity(3)


def test_shape_validation():
    with pytest.raises(ShapeError):
        BlockInstance(zeros(2), zeros(2, 2), zeros(3, 2), zeros(3))


def test_worked_example(example_blocks, example_md):
    assert drazin(assemble(example_blocks)) == example_md
    assert block_bdc(example_blocks) == example_md
    assert block_bcb(example_blocks) == example_md
    assert drazin(example_blocks.a).is_zero
    assert drazin(example_blocks.d) == example_blocks.d


def test_worked_example_applicability(example_blocks):
    reports = applicability_report(example_blocks)
    assert reports["bcb"].all_hold and reports["bdc"].all_hold
    flags = reports["bdc"].flags
    assert flags["BC!=0"] and not flags["(BC)^pi!=I"]


def test_zero_instance_is_always_applicable():
    z = BlockInstance(zeros(2), zeros(2, 1), zeros(1, 2), zeros(1))
    for fid, report in applicability_report(z).items():
        assert report.all_hold, fid
        assert FORMULAS[fid](z).is_zero


def test_bcb_rejects_with_witness():
    inst = BlockInstance(identity(1), identity(1), identity(1), identity(1))
    report = check_block_hypotheses("bcb", inst)
    assert "BCB=0" in report.failed()
    assert report.witnesses["BCB=0"] == identity(1)
    with pytest.raises(HypothesisViolated):
        block_bcb(inst)
    with pytest.raises(ValueError):
        check_block_hypotheses("xyz", inst)


@st.composite
def _shapes(draw):
    return draw(st.integers(1, 3)), draw(st.integers(1, 3))


@given(_shapes(), st.data())
def test_triangular_and_diagonal_degenerations(shape, data):
    m, n = shape
    a = data.draw(matrices(rows=m, cols=m))
    b = data.draw(matrices(rows=m, cols=n))
    c = data.draw(matrices(rows=n, cols=m))
    d = data.draw(matrices(rows=n, cols=n))
    upper = BlockInstance(a, b, zeros(n, m), d)
    assert block_bcb(upper) == drazin(assemble(upper))
    lower = BlockInstance(a, zeros(m, n), c, d)
    assert block_abc(lower) == drazin(assemble(lower))
    diag = BlockInstance(a, zeros(m, n), zeros(n, m), d)
    assert block_cab(diag) == block([[drazin(a), zeros(m, n)], [zeros(n, m), drazin(d)]])


def test_bdc_with_zero_d_and_cab_with_zero_a():
    # [[A, B], [C, 0]] with BCB = 0 and BCA = 0
    a, b, c = M([[0, 1], [0, 0]]), M([[1], [0]]), M([[0, 0]])
    inst = BlockInstance(a, b, c, zeros(1))
    assert block_bdc(inst) == drazin(assemble(inst))
    inst = BlockInstance(zeros(2), M([[0], [1]]), M([[1, 0]]), M([[2]]))
    assert check_block_hypotheses("cab", inst).all_hold
    assert block_cab(inst) == drazin(assemble(inst))


def test_transpose_swaps_off_diagonal(example_blocks):
    t = example_blocks.transpose()
    assert assemble(t) == assemble(example_blocks).T


@pytest.mark.parametrize("fid", sorted(FORMULAS))
def test_formula_matches_oracle_on_generated(fid):
    for inst in generate_batch(fid, 5, 10):
        assert FORMULAS[fid](inst.blocks) == drazin(inst.summed)


def test_subsumption_on_shared_instances():
    # where two hypothesis sets both hold, both formulas agree
    for fid in ("bcb", "bdc", "abc", "cab"):
        for inst in generate_batch(fid, 17, 8):
            reports = applicability_report(inst.blocks)
            outs = {g: FORMULAS[g](inst.blocks) for g, r in reports.items() if r.all_hold}
            assert len(set(outs.values())) == 1
