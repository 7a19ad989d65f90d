import os
import random
import subprocess
import sys
from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given, strategies as st

from hyperpierce import kernels
from hyperpierce.kernels import compiled_first_valid_tuple, python_first_valid_tuple


def brute_first(masks, k, n_members):
    if not masks:
        return None
    full = (1 << n_members) - 1
    for combo in combinations_with_replacement(range(len(masks)), k):
        ok = True
        for choice in product((0, 1), repeat=k):
            acc = full
            for i, s in zip(combo, choice):
                acc &= masks[i][s]
            if acc:
                ok = False
                break
        if ok:
            return combo
    return None


def random_masks(rng, pairs, n_members, density):
    def bits():
        return sum(1 << j for j in range(n_members) if rng.random() < density)
    return [(bits(), bits()) for _ in range(pairs)]


@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.sampled_from([1, 3, 8]))
def test_python_kernel_matches_brute_force(seed, k, n_members):
    rng = random.Random(seed)
    masks = random_masks(rng, rng.randint(0, 6), n_members, rng.choice([0.3, 0.6, 0.9]))
    assert python_first_valid_tuple(masks, k, n_members) == brute_first(masks, k, n_members)


def test_no_members_accepts_first_pair():
    assert python_first_valid_tuple([(0, 0)], 3, 0) == (0, 0, 0)
    assert python_first_valid_tuple([], 1, 0) is None


needs_compiled = pytest.mark.skipif(compiled_first_valid_tuple is None, reason="extension not built")


@needs_compiled
@pytest.mark.parametrize("n_members", [3, 63, 64, 65, 130])
def test_compiled_kernel_agrees_across_word_boundaries(n_members):
    rng = random.Random(n_members)
    for _ in range(40):
        k = rng.randint(1, 3)
        masks = random_masks(rng, rng.randint(1, 8), n_members, rng.choice([0.5, 0.8, 0.95]))
        assert compiled_first_valid_tuple(masks, k, n_members) == python_first_valid_tuple(masks, k, n_members)


@needs_compiled
def test_compiled_kernel_edge_cases():
    assert compiled_first_valid_tuple([(0, 0)], 3, 0) == (0, 0, 0)
    assert compiled_first_valid_tuple([], 2, 4) is None


def test_backend_selection():
    expect = "python" if compiled_first_valid_tuple is None else "cython"
    if os.environ.get("HYPERPIERCE_PURE_PYTHON") in ("1", "true", "yes"):
        expect = "python"
    assert kernels.BACKEND == expect


def test_environment_forces_pure_python():
    env = dict(os.environ, HYPERPIERCE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from hyperpierce import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
