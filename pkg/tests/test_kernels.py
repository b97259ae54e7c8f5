import os
import subprocess
import sys

import numpy as np
import pytest

from rainbowmatch import kernels
from rainbowmatch._accel import ENV_FLAG, HAS_NUMBA
from rainbowmatch.generators import cyclic_latin, latin_to_bipartite, random_properly_colored
from rainbowmatch.reduction import reduce

needs_numba = pytest.mark.skipif(not HAS_NUMBA, reason="numba not installed")


def _same(a, b):
    assert len(a) == len(b)
    for x, y in zip(a, b):
        if isinstance(x, np.ndarray):
            np.testing.assert_array_equal(x, y)
        else:
            assert x == y


@needs_numba
def test_greedy_backends_agree():
    for seed in range(40):
        d = 1 + seed % 7
        g = random_properly_colored(3 * d + 3 + seed % 9, d, seed)
        for graph in (g, reduce(g).core):
            eu, ev, ec, ids, colors = graph.edge_arrays()
            args = (eu, ev, ec, len(ids), len(colors))
            _same(kernels.greedy_py(*args), kernels.greedy_jit(*args))


@needs_numba
def test_oracle_backends_agree():
    cases = [latin_to_bipartite(cyclic_latin(n)) for n in range(1, 6)]
    cases += [random_properly_colored(9, 2, s) for s in range(20)]
    for g in cases:
        eu, ev, ec, ids, colors = g.edge_arrays()
        for need in (0, 2):
            args = (eu, ev, ec, len(ids), len(colors), need)
            _same(kernels.max_rainbow_py(*args), kernels.max_rainbow_jit(*args))


def test_empty_inputs():
    empty = np.zeros(0, dtype=np.int64)
    best, edges, _ = kernels.max_rainbow_py(empty, empty, empty, 0, 0, 0)
    assert best == 0 and len(edges) == 0
    assert kernels.greedy_py(empty, empty, empty, 0, 0)[0] == 0


def test_env_flag_selects_python_fallback():
    code = ("from rainbowmatch import kernels, _accel;"
            "print(kernels.greedy is kernels.greedy_py,"
            " kernels.max_rainbow is kernels.max_rainbow_py, _accel.USE_NUMBA)")
    env = dict(os.environ, **{ENV_FLAG: "1"})
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    assert out.stdout.split() == ["True", "True", "False"]
