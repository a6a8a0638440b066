import json
import math

import numpy as np
import pytest

import partial_search as ps


def test_fig1_script_final_state():
    cfg = ps.BlockConfig(12, 3, 5)
    state = ps.run_dense(cfg, ps.fig1_script())
    amps = state.amplitudes.real
    u = 1 / math.sqrt(12)
    expected = np.zeros(12)
    expected[4:8] = u
    expected[5] = 3 * u
    np.testing.assert_allclose(amps, expected, atol=1e-12)
    assert state.queries == 2


def test_table_matches_reference_values():
    rows = ps.build_table([2, 3, 4, 5, 8, 32])
    upper = [r.upper_coeff for r in rows]
    assert upper == pytest.approx([0.555, 0.592, 0.615, 0.633, 0.664, 0.725], abs=0.01)
    assert ps.lower_bound_coefficient(2) == pytest.approx(0.230, abs=1e-3)


def test_partial_search_backends_agree():
    cfg = ps.BlockConfig(4096, 4, 1234)
    eps, _ = ps.optimize_epsilon(4)
    dense = ps.run_partial_search(cfg, eps, backend="dense")
    reduced = ps.run_partial_search(cfg, eps)
    assert dense.queries == reduced.queries == dense.l1 + dense.l2 + 1
    np.testing.assert_allclose(dense.block_probs, reduced.block_probs, atol=1e-10)
    assert reduced.success_prob > 0.95


def test_reduced_lift_roundtrip():
    cfg = ps.BlockConfig(64, 4, 10)
    state = ps.reduced_init(cfg)
    for op in ps.partial_search_script(3, 2):
        state = ps.reduced_apply(state, op)
    dense = ps.run_dense(cfg, ps.partial_search_script(3, 2))
    np.testing.assert_allclose(ps.lift_to_dense(state).amplitudes, dense.amplitudes, atol=1e-12)


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        ps.BlockConfig(10, 3, 0)
    with pytest.raises(ps.InfeasibleError):
        ps.iteration_counts(1 << 16, 8, 1.0)
    with pytest.raises(ps.ContractViolationError):
        ps.global_diffusion(ps.uniform_state(4, with_ancilla=True))


def test_classical_and_lemmas():
    r = ps.simulate_randomized(120, 3, 5000, 1)
    assert r.errors == 0
    assert abs(r.sample_mean - r.exact_randomized) < 5 * r.sample_std_err
    margins = ps.lemma2_margins(ps.BlockConfig(16, 1, 3), ps.grover_script(3))
    assert min(margins) >= -1e-9
    max_sum, bound = ps.check_lemma3(16, 1000, 7)
    assert max_sum <= bound + 1e-9


def test_cli_json_is_deterministic():
    args = ["simulate", "--n", "65536", "--k", "4", "--seed", "9", "--format", "json"]
    code, out, err = ps.cli(args)
    assert code == 0, err
    assert ps.cli(args)[1] == out
    report = json.loads(out)
    assert report["queries"] == report["l1"] + report["l2"] + 1
    assert ps.cli(["simulate", "--n", "100", "--k", "3"])[0] == 1
