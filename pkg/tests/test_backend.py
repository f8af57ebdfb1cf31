"""Numba / pure-python backend parity.

The fallback is selected by CUBIC2F_NO_NUMBA=1 at import time, so the
pure-python side runs in a subprocess and reports results as JSON.
"""

import json
import os
import subprocess
import sys

from cubic2f.backend import backend_name
from cubic2f.constructions import named
from cubic2f.generate import generate
from cubic2f.graphs import write_graph6
from cubic2f.kernels import _xorshift64, seed_state
from cubic2f.matchings import classify

_PROBE = r"""
import json, sys
from cubic2f.backend import backend_name
from cubic2f.constructions import named
from cubic2f.generate import generate
from cubic2f.graphs import write_graph6
from cubic2f.kernels import _xorshift64, seed_state
from cubic2f.matchings import classify

out = {"backend": backend_name()}
r = classify(named("Heawood"), mode="exhaustive", prune=False)
out["heawood"] = [r.two_factor_count, sorted((",".join(map(str, t)), c) for t, c in r.type_multiset.items())]
gs = []
generate(16, gs.append)
out["gen16"] = sorted(write_graph6(g) for g in gs)
s = seed_state(42)
out["rng"] = [int(s)] + [int(s := _xorshift64(s)) for _ in range(5)]
print(json.dumps(out))
"""


def _run_fallback():
    env = dict(os.environ, CUBIC2F_NO_NUMBA="1")
    p = subprocess.run(
        [sys.executable, "-c", _PROBE], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(p.stdout)


def test_backend_parity():
    assert backend_name() in ("numba", "python")
    got = _run_fallback()
    assert got["backend"] == "python"

    r = classify(named("Heawood"), mode="exhaustive", prune=False)
    want_types = sorted([",".join(map(str, t)), c] for t, c in r.type_multiset.items())
    assert got["heawood"] == [r.two_factor_count, want_types]

    gs = []
    generate(16, gs.append)
    assert got["gen16"] == sorted(write_graph6(g) for g in gs)

    s = seed_state(42)
    rng = [int(s)] + [int(s := _xorshift64(s)) for _ in range(5)]
    assert got["rng"] == rng


def test_rng_is_63_bit_and_nonzero():
    s = seed_state(0)
    for _ in range(100):
        s = _xorshift64(s)
        assert 0 < s < 1 << 63
