"""End-to-end smoke tests for the python bindings.

Runs against the `uent` package on PYTHONPATH (the CMake build drops it under
build/python/, the pip editable install provides it globally). Each test
keeps budgets small; the heavy verification lives in the C++ suites.
"""

import json
import math
import os
import subprocess

import numpy as np
import pytest

import uent

RT2 = math.sqrt(2.0)


def kron_state(a, b):
    return np.kron(np.asarray(a), np.asarray(b))


def test_version_and_builtins():
    assert uent.__version__
    assert uent.RNG_ALGORITHM
    names = uent.builtin_gates()
    for expected in ("UH", "X12", "F16", "SQRT_X12", "UE1", "UE2", "UE3", "UE4"):
        assert expected in names


def test_gate_matrices_are_unitary():
    for name in uent.builtin_gates():
        mat = uent.gate_matrix(name)
        eye = mat @ mat.conj().T
        assert np.abs(eye - np.eye(mat.shape[0])).max() < 1e-10, name


def test_uh_first_column_is_uniform_product():
    mat = uent.gate_matrix("UH")
    assert mat.shape == (12, 12)
    # Column 0 is the uniform superposition: a product state, which is why
    # the column filter rejects this gate immediately.
    assert np.abs(np.abs(mat[:, 0]) - 1.0 / math.sqrt(12.0)).max() < 1e-12
    e0 = np.zeros(12, complex)
    e0[0] = 1.0
    out = uent.apply_gate("UH", e0)
    assert uent.state_residual(out, 3, 4) < 1e-12
    rep = uent.column_filter("UH")
    assert rep["pass"] is False
    assert rep["column"] == 0


def test_column_filter_passes_entangling_gate():
    rep = uent.column_filter("UE1")
    assert rep["pass"] is True
    rep12 = uent.column_filter("F12")
    assert rep12["pass"] is False and rep12["column"] == 0


def test_bell_state_entropy_and_separability():
    bell = np.array([1.0, 0.0, 0.0, 1.0], complex) / RT2
    assert abs(uent.entanglement_entropy(bell, 2, 2, log_base=2.0) - 1.0) < 1e-12
    sigma = uent.schmidt_coefficients(bell, 2, 2)
    assert np.abs(np.asarray(sigma) - 1.0 / RT2).max() < 1e-12
    assert uent.is_separable(bell, 2, 2) is False

    product = kron_state([1.0, 0.0], [0.0, 1.0])
    assert uent.state_residual(product, 2, 2) == 0.0
    assert uent.is_separable(product, 2, 2) is True


def test_counterexample_search_finds_sqrt_x12():
    res = uent.counterexample_search("SQRT_X12", seed=1, budget=200_000, restarts=2)
    assert res["verdict"] == "counterexample_found"
    assert res["residual"] < 1e-9
    assert res["entanglement"] < 1e-8
    # Re-verify through the library: the reported input maps to a separable
    # output.
    state = kron_state(res["input_a"], res["input_b"])
    out = uent.apply_gate("SQRT_X12", state)
    assert uent.state_residual(out, 3, 4) < 1e-8
    assert uent.entanglement_entropy(out, 3, 4) < 1e-7


def test_search_survives_small_budget_on_ue1():
    res = uent.counterexample_search("UE1", seed=13, budget=8_000, restarts=4)
    assert res["verdict"] == "survived_budget"
    assert res["evals_used"] == 8_000
    assert res["best_residual"] > 0.0


def test_min_entanglement_on_product_gate():
    # A tensor-product gate cannot entangle any product input: the minimum is 0.
    kron_gate = np.kron(uent.haar_unitary(3, 5), uent.haar_unitary(4, 6))
    res = uent.min_entanglement(kron_gate, m=3, n=4, seed=7, budget=100_000, restarts=2)
    assert res["best_entanglement"] < 1e-9


def test_operator_residual_split():
    kron_gate = np.kron(uent.haar_unitary(3, 21), uent.haar_unitary(4, 22))
    assert uent.operator_residual(kron_gate, m=3, n=4) < 1e-10
    assert uent.operator_residual("F12") > 1e-3


def test_distribution_statistics():
    rep = uent.entanglement_distribution("UH", samples=2_000, bins=20, log_base=2.0, seed=5)
    assert rep["samples"] == 2_000
    assert sum(rep["counts"]) == 2_000
    assert abs(rep["mean"] - 0.9925) < 0.05
    assert rep["min"] >= 0.0
    assert rep["max"] <= math.log2(3.0) + 1e-9
    lo, hi = rep["bin_lo"], rep["bin_hi"]
    assert len(lo) == len(hi) == 20
    assert all(a < b for a, b in zip(lo, hi))


def test_kappa_splits_are_balanced():
    state = uent.kappa_state()
    assert abs(np.linalg.norm(state) - 1.0) < 1e-12
    splits = uent.kappa_splits()
    assert set(splits) == {"0|12", "1|02", "2|01"}
    for row in splits.values():
        assert row["minor_count"] == 108
        assert abs(row["max_minor"] - 1.0 / 6.0) < 1e-12
        assert abs(row["entropy"] - math.log(3.0)) < 1e-10


def test_sampling_reproducibility():
    s1 = uent.haar_state(7, 3)
    s2 = uent.haar_state(7, 3)
    assert np.array_equal(s1, s2)
    assert abs(np.linalg.norm(s1) - 1.0) < 1e-12
    assert not np.array_equal(s1, uent.haar_state(7, 3, stream=1))

    a1, b1 = uent.random_product_state(3, 4, 11)
    a2, b2 = uent.random_product_state(3, 4, 11)
    assert np.array_equal(a1, a2) and np.array_equal(b1, b2)

    u = uent.haar_unitary(5, 2)
    assert np.abs(u @ u.conj().T - np.eye(5)).max() < 1e-10


def test_principal_sqrt_squares_back():
    x12 = uent.gate_matrix("X12")
    s = uent.principal_sqrt(x12)
    assert uent.is_unitary(s)
    assert np.linalg.norm(s @ s - x12) < 1e-9


def test_gate_file_round_trip(tmp_path):
    path = str(tmp_path / "ue1.json")
    uent.write_gate_file("UE1", path)
    loaded = uent.load_gate_file(path)
    assert loaded["label"] == "UE1"
    assert loaded["m"] == 3 and loaded["n"] == 4
    assert np.abs(loaded["matrix"] - uent.gate_matrix("UE1")).max() == 0.0
    # A custom matrix survives the round trip as well.
    custom = np.kron(uent.haar_unitary(2, 9), uent.haar_unitary(2, 10))
    path2 = str(tmp_path / "custom.json")
    uent.write_gate_file(custom, path2, m=2, n=2)
    loaded2 = uent.load_gate_file(path2)
    assert loaded2["m"] == 2 and loaded2["n"] == 2
    assert np.abs(loaded2["matrix"] - custom).max() == 0.0


def test_error_paths():
    with pytest.raises(ValueError):
        uent.gate("NO_SUCH_GATE")
    with pytest.raises(ValueError):
        # A sampled 5-dim unitary carries no default bipartite split.
        uent.operator_residual(uent.haar_unitary(5, 1))
    with pytest.raises(ValueError):
        uent.counterexample_search("UE1", m=5, n=5)  # 25 != 12


CLI = os.environ.get("UENT_CLI", "")


@pytest.mark.skipif(not CLI, reason="UENT_CLI not set")
def test_cli_check_rejects_uh():
    proc = subprocess.run(
        [CLI, "check", "--gate", "UH"], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 10
    record = json.loads(proc.stdout.strip().splitlines()[-1])
    assert record["verdict"] == "rejected_by_column_filter"
    assert record["rejected_column"] == 0
