import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from simplexbounds import _kernels_py, kernels
from simplexbounds.oracle import cyclic_polytope_boundary

try:
    from simplexbounds import _kernels as compiled
except ImportError:  # pragma: no cover - depends on the build
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")

PRIMES = [0, 2, 3, 5, 7, 2_147_483_647]


def oracle_rank(matrix, p):
    domain = QQ if p == 0 else GF(p)
    return DomainMatrix([[domain(x) for x in row] for row in matrix], (len(matrix), len(matrix[0])), domain).rank()


matrices = st.integers(1, 7).flatmap(
    lambda rows: st.integers(1, 7).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), min_size=rows, max_size=rows
        )
    )
)


@settings(max_examples=200)
@given(matrices, st.sampled_from(PRIMES))
def test_python_rank_matches_sympy(matrix, p):
    assert _kernels_py.matrix_rank(matrix, p) == oracle_rank(matrix, p)


@needs_compiled
@settings(max_examples=200)
@given(matrices, st.sampled_from(PRIMES))
def test_compiled_rank_matches_python(matrix, p):
    assert compiled.matrix_rank(matrix, p) == _kernels_py.matrix_rank(matrix, p)


def test_low_rank_example():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert kernels.matrix_rank(m) == 2
    assert kernels.matrix_rank([[2, 4], [1, 2]], 2) == 1
    assert kernels.matrix_rank([[2, 0], [0, 2]], 2) == 0
    assert kernels.matrix_rank([]) == 0


@needs_compiled
def test_overflow_falls_back_to_python():
    big = 2**40
    m = [[big, 1, 3], [1, big, 5], [7, 11, big]]
    with pytest.raises(OverflowError):
        compiled.matrix_rank(m, 0)
    assert kernels.matrix_rank(m) == 3
    huge = [[2**70, 1], [1, 2**70]]
    assert kernels.matrix_rank(huge) == 2


def _layers(c):
    return c.faces_by_size


@pytest.mark.parametrize("p", [0, 2])
def test_boundary_rank_backends_agree(p):
    layers = _layers(cyclic_polytope_boundary(8, 4))
    for k in range(1, len(layers)):
        expected = oracle_rank(_kernels_py.boundary_matrix(layers[k], layers[k - 1]), p)
        assert _kernels_py.boundary_rank(layers[k], layers[k - 1], p) == expected
        assert kernels.boundary_rank(layers[k], layers[k - 1], p) == expected
        if compiled is not None:
            assert compiled.boundary_rank(layers[k], layers[k - 1], p) == expected


def test_boundary_squares_to_zero():
    layers = _layers(cyclic_polytope_boundary(7, 4))
    for k in range(2, len(layers)):
        d_hi = _kernels_py.boundary_matrix(layers[k], layers[k - 1])
        d_lo = _kernels_py.boundary_matrix(layers[k - 1], layers[k - 2])
        for r in range(len(d_lo)):
            for c in range(len(d_hi[0])):
                assert sum(d_lo[r][t] * d_hi[t][c] for t in range(len(d_hi))) == 0


def test_pure_python_switch():
    code = "import simplexbounds; print(simplexbounds.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"SIMPLEXBOUNDS_PURE_PYTHON": "1", "PATH": ""},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
    forced = os.environ.get("SIMPLEXBOUNDS_PURE_PYTHON") in ("1", "true", "yes")
    assert kernels.BACKEND == ("cython" if compiled is not None and not forced else "python")
