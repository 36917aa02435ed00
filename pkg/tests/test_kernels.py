"""The compiled and pure-Python kernels must agree bit for bit."""
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from drazinkit import _kernels_py, kernels
from drazinkit.core import drazin

compiled = pytest.mark.skipif("compiled" not in kernels.BACKENDS, reason="extension not built")


@st.composite
def flat_pair(draw):
    n, k, m = (draw(st.integers(1, 6)) for _ in range(3))
    ints = st.integers(-50, 50)
    cplx = draw(st.booleans())
    ar = draw(st.lists(ints, min_size=n * k, max_size=n * k))
    ai = draw(st.lists(ints, min_size=n * k, max_size=n * k)) if cplx else None
    br = draw(st.lists(ints, min_size=k * m, max_size=k * m))
    bi = draw(st.lists(ints, min_size=k * m, max_size=k * m)) if draw(st.booleans()) else None
    return ar, ai, br, bi, n, k, m


@compiled
@given(flat_pair())
def test_matmul_parity(args):
    assert kernels.BACKENDS["compiled"].matmul(*args) == _kernels_py.matmul(*args)


@compiled
@given(flat_pair())
def test_gauss_jordan_parity(args):
    ar, ai, _, _, n, k, _ = args
    fast = kernels.BACKENDS["compiled"].gauss_jordan(list(ar), None if ai is None else list(ai), n, k)
    slow = _kernels_py.gauss_jordan(list(ar), None if ai is None else list(ai), n, k)
    assert fast == slow


@pytest.mark.parametrize("a, b", [((5, 5), (2, -1)), ((10, 0), (-5, 0)), ((0, 4), (0, 2)), ((-6, 8), (1, 1))])
def test_gdiv_exact_division(a, b):
    qr, qi = _kernels_py.gdiv(*a, *b)
    assert complex(qr, qi) * complex(*b) == complex(*a)
    for name, mod in kernels.BACKENDS.items():
        assert mod.gdiv(*a, *b) == (qr, qi), name


def test_use_backend_round_trip():
    original = kernels.BACKEND
    x = __import__("drazinkit").Matrix.from_rows([[0, 1, 2], [0, 0, 3], [0, 0, 1]])
    results = []
    for name in kernels.BACKENDS:
        kernels.use_backend(name)
        results.append(drazin(x))
    kernels.use_backend(original)
    assert all(r == results[0] for r in results)
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_fallback_when_extension_missing():
    code = ("import sys; sys.modules['drazinkit._kernels'] = None\n"
            "from drazinkit import kernels, drazin, Matrix\n"
            "assert kernels.BACKEND == 'python' and list(kernels.BACKENDS) == ['python']\n"
            "print(drazin(Matrix.from_rows([[-1, 1], [0, 0]])).to_strings())")
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "[['-1', '1'], ['0', '0']]"
