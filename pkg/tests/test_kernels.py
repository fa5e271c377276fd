import os
import subprocess
import sys
from itertools import combinations

import pytest

from starfact import _pykernels, kernels
from starfact.oracle import star_generators

BACKENDS = kernels.available_backends()


def test_python_backend_always_available():
    assert "python" in BACKENDS


def test_compiled_backend_selected_when_built():
    if "cython" not in BACKENDS:
        pytest.skip("compiled kernel not built")
    if os.environ.get("STARFACT_PURE"):
        assert kernels.BACKEND == "python"
    else:
        assert kernels.BACKEND == "cython"


def test_env_forces_fallback():
    code = "from starfact import kernels; print(kernels.BACKEND)"
    env = {**os.environ, "STARFACT_PURE": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("n", range(1, 6))
def test_backends_agree(n):
    if "cython" not in BACKENDS:
        pytest.skip("compiled kernel not built")
    fast = BACKENDS["cython"]
    for r in range(7):
        star = star_generators(n)
        assert fast.word_counts(n, star, r, True) == _pykernels.word_counts(n, star, r, True)
        if n <= 4 and r <= 4:
            allt = list(combinations(range(n), 2))
            assert fast.word_counts(n, allt, r, False) == _pykernels.word_counts(n, allt, r, False)


def test_unrestricted_total():
    for backend in BACKENDS.values():
        assert sum(backend.word_counts(4, star_generators(4), 5, False)) == 3**5
        assert sum(backend.word_counts(4, star_generators(4), 5, True)) == 150
