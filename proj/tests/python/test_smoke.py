import json
import math
import os
import subprocess

import pytest

import summatoria as sm


def test_oracles_and_sieve():
    assert [sm.mobius(n) for n in (1, 4, 6)] == [1, 0, 1]
    assert [sm.liouville(n) for n in (1, 8, 12)] == [1, -1, -1]
    mu, lam = sm.sieve_block(1, 10)
    assert mu == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert lam == [1, -1, -1, 1, -1, 1, -1, -1, 1, 1]
    with pytest.raises(ValueError):
        sm.mobius(0)


def test_traces():
    assert sm.mertens_trace(100, [10, 100]) == [-1, 1]
    assert sm.liouville_trace(10, [10]) == [0]
    assert sm.weighted_mobius_trace(3, [3])[0] == pytest.approx(1 / 6, rel=1e-15)
    assert sm.mertens_trace(1_000_000, [1_000_000], threads=2) == [212]
    assert sm.summatory_trace("synth:log2", 1000, [1000]) == [500]
    with pytest.raises(ValueError):
        sm.mertens_trace(10, [5, 3])


def test_statistics():
    assert sm.independence("one", 100, 1) == 0.0
    assert sm.independence("alternating", 1000, 1) == -1.0
    mean, var = sm.empirical_moments("mu", 10)
    assert mean == -0.1
    assert var == pytest.approx(0.69)
    assert sm.ks_distance([0.5], "uniform") == 0.5
    with pytest.raises(ArithmeticError):
        sm.ks_distance([1.0, 1.0])


def test_classifier_and_verdicts():
    cps = sm.geometric_checkpoints(100, 2.0, 10_000_000)
    assert sm.classify_remainders(cps, [1 / n for n in cps])["class"] == "decaying"
    assert sm.classify_remainders(cps, [math.log(n) for n in cps])["class"] == "growing"
    v = sm.full_verdict("synth:log2", 1_000_000)
    assert v["conditions_met"] is True
    assert abs(v["mu0_hat"] - 0.5) < 1e-3
    h = sm.full_verdict("harmonic", 100_000)
    assert h["conditions_met"] is False


def test_schedules():
    assert sm.schedule_mean("log", 9) == pytest.approx(2 / (10 * math.log(10)), rel=1e-14)
    assert sm.schedule_summatory("none", 50) == 0.0
    assert sm.realize("none", 4) == [1.0, -1.0, 1.0, -1.0]
    with pytest.raises(ValueError):
        sm.realize("cubic", 4)


def test_cli_in_process():
    status, out, _ = sm.run_cli(["compute", "--function", "mu", "--N", "10", "--checkpoints", "10"])
    assert status == 0
    assert out == "n,S\n10,-1\n"
    status, _, err = sm.run_cli(["compute", "--function", "zeta", "--N", "10"])
    assert status == 1
    assert "unknown function" in err


@pytest.mark.skipif("SUMMATORIA_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary():
    done = subprocess.run(
        [os.environ["SUMMATORIA_CLI"], "verdict", "--function", "synth:log", "--N", "100000", "--mode", "assertion4"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(done.stdout)["conditions_met"] is True
