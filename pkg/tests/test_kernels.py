import random

import pytest
from hypothesis import given, settings, strategies as st

from grafotop import _pykernels, kernels
from grafotop.graph import random_graph

ck = pytest.importorskip("grafotop._ckernels", reason="compiled kernels not built")


def _masks(n, p, seed):
    g = random_graph(n, p, random.Random(seed))
    return g.order, list(g.masks)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 14), st.sampled_from([0.2, 0.5, 0.8]), st.integers(0, 10**6), st.integers(-1, 4))
def test_clique_grades_agree(n, p, seed, k_max):
    n, masks = _masks(n, p, seed)
    assert ck.clique_grades(n, masks, k_max) == _pykernels.clique_grades(n, masks, k_max)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), max_size=8))
def test_integer_rank_agrees(rows):
    assert ck.integer_rank(rows, 5) == _pykernels.integer_rank(rows, 5)


def test_integer_rank_known():
    assert _pykernels.integer_rank([[1, 2], [2, 4]], 2) == 1
    assert _pykernels.integer_rank([[0, 0], [0, 0]], 2) == 0
    assert _pykernels.integer_rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]], 3) == 3


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10**6))
def test_subset_euler_agrees(d, seed):
    n, masks = _masks(d, 0.5, seed)
    grades = _pykernels.clique_grades(n, masks)
    cm, sg = [], []
    for k, gr in enumerate(grades):
        for c in gr:
            cm.append(sum(1 << i for i in c))
            sg.append(-1 if k % 2 else 1)
    assert ck.subset_euler(n, cm, sg) == _pykernels.subset_euler(n, cm, sg)


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_env_forces_python():
    import os
    import subprocess
    import sys

    env = dict(os.environ, GRAFOTOP_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import grafotop; print(grafotop.BACKEND)"], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "python"
