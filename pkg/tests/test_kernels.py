import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dgakit import _pykernels, kernels

from oracles import rank_oracle

ckernels = pytest.importorskip("dgakit._ckernels", reason="compiled extension not built")

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


@st.composite
def term_maps(draw):
    odd = tuple(draw(st.lists(st.booleans(), min_size=1, max_size=6)))
    mono = st.tuples(*[st.integers(0, 1) if o else st.integers(0, 2) for o in odd])

    def terms():
        return draw(st.dictionaries(mono, fractions, max_size=5))
    return terms(), terms(), odd


@settings(max_examples=300, deadline=None)
@given(term_maps())
def test_mul_terms_agree(data):
    a, b, odd = data
    assert ckernels.mul_terms(a, b, odd) == _pykernels.mul_terms(a, b, odd)


matrices = st.integers(1, 6).flatmap(
    lambda ncols: st.tuples(st.lists(st.lists(fractions | st.just(Fraction(0)), min_size=ncols, max_size=ncols),
                                     max_size=7), st.just(ncols)))


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_rref_rows_agree(data):
    rows, ncols = data
    c_rows, c_piv = ckernels.rref_rows(rows, ncols)
    p_rows, p_piv = _pykernels.rref_rows(rows, ncols)
    assert (c_rows, list(c_piv)) == (p_rows, list(p_piv))
    assert len(p_piv) == rank_oracle(rows)


def test_backend_selected():
    assert kernels.BACKEND == ("python" if os.environ.get("DGAKIT_PURE_PYTHON") else "cython")


def test_pure_python_switch():
    env = dict(os.environ, DGAKIT_PURE_PYTHON="1")
    code = "import dgakit; print(dgakit.BACKEND, dgakit.betti_numbers(dgakit.catalog('g6_15_m1')))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python [1, 1, 2, 4, 2, 1, 1]"
