import json

import pytest
from hypothesis import given

from conftest import matrices
from drazinkit.block import BlockInstance
from drazinkit.errors import ShapeError
from drazinkit.fileio import (
    FormatError,
    blocks_from_doc,
    blocks_to_doc,
    dumps,
    matrix_from_doc,
    matrix_to_doc,
    pair_from_doc,
    pair_to_doc,
    read_matrix,
)
from drazinkit.matrix import Matrix, zeros


@given(matrices(max_size=4))
def test_matrix_round_trip(x):
    assert matrix_from_doc(json.loads(dumps(matrix_to_doc(x)))) == x


def test_integers_and_literals_mix(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"rows": 1, "cols": 3, "entries": [[1, " -2/4 ", "3 + i"]]}')
    assert read_matrix(path) == Matrix.from_rows([[1, "-1/2", "3+i"]])


@pytest.mark.parametrize("doc, err", [
    ({"rows": 1, "cols": 1}, FormatError),
    ({"rows": -1, "cols": 1, "entries": []}, FormatError),
    ({"rows": 1, "cols": 2, "entries": [[1]]}, ShapeError),
    ({"rows": 2, "cols": 1, "entries": [[1]]}, ShapeError),
    ({"rows": 1, "cols": 1, "entries": [[1.5]]}, FormatError),
    ({"rows": 1, "cols": 1, "entries": [[True]]}, FormatError),
    ({"rows": 1, "cols": 1, "entries": [["1/0"]]}, ValueError),
])
def test_bad_documents(doc, err):
    with pytest.raises(err):
        matrix_from_doc(doc)


def test_pair_and_block_documents(example_blocks):
    p, q = Matrix.from_rows([[1, 0], [0, 0]]), zeros(2)
    assert pair_from_doc(pair_to_doc(p, q)) == (p, q)
    assert pair_from_doc(pair_to_doc(p, q, names=("E", "F"))) == (p, q)
    assert blocks_from_doc(blocks_to_doc(example_blocks)) == example_blocks
    with pytest.raises(FormatError):
        pair_from_doc({"P": matrix_to_doc(p)})
    with pytest.raises(FormatError):
        blocks_from_doc({"A": matrix_to_doc(p)})


def test_block_document_shape_mismatch():
    doc = blocks_to_doc(BlockInstance(zeros(2), zeros(2, 1), zeros(1, 2), zeros(1)))
    doc["B"] = matrix_to_doc(zeros(2, 2))
    with pytest.raises(ShapeError):
        blocks_from_doc(doc)
