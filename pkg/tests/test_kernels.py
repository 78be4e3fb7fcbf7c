"""Backend parity: the compiled kernels must match the pure twins exactly."""

import random

import pytest

from noetherlab import _kernels, _kernels_py

speedups = pytest.importorskip("noetherlab._speedups")


def _random_graph(rng, n, p):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def test_find_clique_parity():
    rng = random.Random(100)
    for _ in range(400):
        n = rng.randint(0, 13)
        adj = _random_graph(rng, n, rng.uniform(0.1, 0.9))
        m = rng.randint(1, 6)
        assert _kernels_py.find_clique(adj, m) == speedups.find_clique(adj, m)


def test_chromatic_parity():
    rng = random.Random(101)
    for _ in range(300):
        n = rng.randint(0, 11)
        adj = _random_graph(rng, n, rng.uniform(0.1, 0.9))
        assert _kernels_py.chromatic_number(adj) == speedups.chromatic_number(adj)


def test_min_subfamily_parity():
    rng = random.Random(102)
    for _ in range(400):
        n = rng.randint(1, 10)
        full = (1 << n) - 1
        masks = [rng.getrandbits(n) for _ in range(rng.randint(1, 7))]
        assert _kernels_py.min_subfamily(masks, full) == speedups.min_subfamily(
            masks, full
        )


def test_dispatcher_routes_large_inputs_to_python():
    # 65 vertices exceed the compiled kernel's mask width
    n = 65
    adj = [0] * n
    adj[0] |= 1 << 64
    adj[64] |= 1
    assert _kernels.find_clique(adj, 2) == (0, 64)


def test_forced_pure_backend(monkeypatch):
    import importlib
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "import noetherlab; print(noetherlab.backend_name())"],
        env={"NOETHERLAB_PURE": "1", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
    )
    assert out.stdout.strip() == "python"


import os


@pytest.mark.skipif(
    os.environ.get("NOETHERLAB_PURE") == "1", reason="pure backend forced"
)
def test_compiled_backend_is_active_here():
    assert _kernels.backend_name() == "compiled"
