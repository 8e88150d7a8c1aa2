import os
import subprocess
import sys

import numpy as np
import pytest

from omlq import _kernels as K
from omlq import builtin

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba backend not active")
LATTICES = ["mo2", "boolN:3", "o6", "free2"]


@needs_numba
@pytest.mark.parametrize("name", LATTICES)
def test_table_kernels_agree(name):
    L = builtin(name)
    rel = L.leq_table
    assert np.array_equal(K._nb_transitive_closure(rel), K._np_transitive_closure(rel))
    for lower in (True, False):
        assert np.array_equal(K._nb_bound_table(rel, lower), K._np_bound_table(rel, lower))
    args = (L.meet_table, L.join_table, L.ortho_table)
    assert np.array_equal(K._nb_commutes_table(*args), K._np_commutes_table(*args))
    assert tuple(K._nb_distributive_violation(L.meet_table, L.join_table)) == tuple(
        K._np_distributive_violation(L.meet_table, L.join_table))
    assert tuple(K._nb_orthomodular_violation(rel, *args)) == tuple(
        K._np_orthomodular_violation(rel, *args))


@needs_numba
def test_step_and_path_kernels_agree():
    L = builtin("mo2")
    rng = np.random.default_rng(0)
    for _ in range(50):
        n, k = int(rng.integers(1, 5)), int(rng.integers(0, 5))
        v = rng.integers(0, L.size, n)
        d = rng.integers(0, L.size, (n, n))
        assert np.array_equal(
            K._nb_vector_step(L.meet_table, L.join_table, v, d, L.zero),
            K._np_vector_step(L.meet_table, L.join_table, v, d, L.zero),
        )
        init, term = rng.integers(0, L.size, n), rng.integers(0, L.size, n)
        wd = rng.integers(0, L.size, (k, n, n))
        assert K._nb_path_join(L.meet_table, L.join_table, init, term, wd, L.zero) == K._np_path_join(
            L.meet_table, L.join_table, init, term, wd, L.zero)
        elems = rng.choice(L.size, int(rng.integers(0, 4)), replace=False)
        assert K._nb_commutator(*[L.meet_table, L.join_table, L.ortho_table], elems, L.zero, L.one) == \
            K._np_commutator(L.meet_table, L.join_table, L.ortho_table, elems, L.zero, L.one)


def _run(backend):
    code = (
        "from omlq import _kernels as K, builtin;"
        "from omlq.harness.suites import run_suite;"
        "rs = run_suite('automata-theorems', builtin('mo2'), 3, 3, 10);"
        "print(K.BACKEND, [(r.check_id, r.lhs, r.rhs, r.passed) for r in rs])"
    )
    env = dict(os.environ, OMLQ_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return out.stdout.split(" ", 1)


def test_backends_give_identical_reports():
    nb, np_ = _run("numba"), _run("numpy")
    assert np_[0] == "numpy"
    assert nb[1] == np_[1]


def test_bad_backend_rejected():
    env = dict(os.environ, OMLQ_BACKEND="cuda")
    r = subprocess.run([sys.executable, "-c", "import omlq"], env=env, capture_output=True, text=True)
    assert r.returncode != 0 and "OMLQ_BACKEND" in r.stderr
