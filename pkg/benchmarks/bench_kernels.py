"""Time the table kernels under both backends.

Each backend runs in its own interpreter because the choice is made at
import time.  Usage: ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, time
import numpy as np
from omlq import _kernels as K
from omlq import builtin
from omlq.lattice import product_lattice

repeat = {repeat}
big = product_lattice(builtin("boolN:5"), builtin("mo2"), name="2^5xMO2")
L = builtin("free2")
rng = np.random.default_rng(0)
v = rng.integers(0, L.size, 64)
d = rng.integers(0, L.size, (64, 64))
init = rng.integers(0, L.size, 4)
wd = rng.integers(0, L.size, (8, 4, 4))
elems = np.arange(2, 14)

cases = {{
    "bound_table(192)": lambda: K.bound_table(big.leq_table, True),
    "transitive_closure(192)": lambda: K.transitive_closure(big.leq_table),
    "distributive_violation(96)": lambda: K.distributive_violation(L.meet_table, L.join_table),
    "commutator(12 elems)": lambda: K.commutator(L.meet_table, L.join_table, L.ortho_table, elems, L.zero, L.one),
    "vector_step(64 states)": lambda: K.vector_step(L.meet_table, L.join_table, v, d, L.zero),
    "path_join(4 states, len 8)": lambda: K.path_join(L.meet_table, L.join_table, init, init, wd, L.zero),
}}
out = {{"backend": K.BACKEND}}
for name, f in cases.items():
    f()  # compile / warm up
    t = time.perf_counter()
    for _ in range(repeat):
        f()
    out[name] = (time.perf_counter() - t) / repeat
print(json.dumps(out))
"""


def run(backend: str, repeat: int) -> dict:
    env = dict(os.environ, OMLQ_BACKEND=backend)
    res = subprocess.run(
        [sys.executable, "-c", WORKER.format(repeat=repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(res.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    nb, npy = run("numba", args.repeat), run("numpy", args.repeat)
    print(f"{'kernel':30} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for k in nb:
        if k == "backend":
            continue
        a, b = nb[k] * 1e3, npy[k] * 1e3
        print(f"{k:30} {a:10.3f} {b:10.3f} {b / a:8.1f}x")
    print(f"backends: {nb['backend']} / {npy['backend']}")


if __name__ == "__main__":
    main()
