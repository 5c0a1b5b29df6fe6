import json

import pytest

from iterid.experiments import (CATALOG, ExperimentError, list_experiments, resolve_params,
                                run_experiment)

CHEAP = ["ex-3.4-abelian-depth", "ex-4.2-conjugate-fails", "prop-6.1-zwrz",
         "rm-6-return-times", "ex-7.1-stype-solvable", "grig-torsion"]


def test_catalog_names():
    assert len(CATALOG) == 17
    assert [n for n, _ in list_experiments()] == sorted(CATALOG)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_every_experiment_passes(name):
    report = run_experiment(name, seed=0)
    assert report.passed, json.dumps(report.evidence, default=str)[:2000]
    doc = json.loads(report.to_json())
    assert set(doc) == {"schema_version", "name", "params", "seed", "passed", "evidence",
                        "duration_ms"}
    assert doc["duration_ms"] is None


@pytest.mark.parametrize("name", CHEAP)
def test_replay_is_bit_identical(name):
    a = run_experiment(name, seed=5)
    b = run_experiment(a.name, a.params, a.seed)
    assert a.to_json() == b.to_json()


def test_prop_6_1_seed_1():
    r = run_experiment("prop-6.1-zwrz", seed=1)
    assert r.passed and r.evidence["witness_depth"] == 2


def test_rm_2_5_alt5_only():
    r = run_experiment("rm-2.5-solvability-words", {"groups": ["alt(5)"]}, seed=1)
    assert r.passed
    for row in r.evidence["results"]:
        assert row["solvable"] is False and len(row["witness"]["tuple"]) >= 2


def test_ex_3_4_all_depth_one():
    r = run_experiment("ex-3.4-abelian-depth", seed=1)
    assert r.passed and list(r.evidence["depth_histogram"]) == ["1"]


def test_ex_4_2_indices():
    r = run_experiment("ex-4.2-conjugate-fails", {"d_max": 4})
    assert [s["entry"] for s in r.evidence["steps"]] == [[0, 2], [0, 3], [0, 4], [0, 5]]
    assert [s["value"] for s in r.evidence["steps"]] == [-1, 1, -1, 1]


def test_prop_6_2_depths():
    r = run_experiment("prop-6.2-lamplighter", {"R": [2, 8, 12], "tuples": 100})
    assert r.passed
    assert [row["witness_depth"] for row in r.evidence["results"]] == [2, 4, 3]


def test_timing_is_opt_in():
    assert run_experiment("rm-6-return-times", timing=True).duration_ms is not None


def test_unknown_name_and_params():
    with pytest.raises(ExperimentError):
        run_experiment("nope")
    with pytest.raises(ExperimentError):
        run_experiment("prop-6.1-zwrz", {"bogus": 1})
    with pytest.raises(ExperimentError):
        run_experiment("prop-6.1-zwrz", {"tuples": "many"})
    with pytest.raises(ExperimentError):
        run_experiment("prop-6.1-zwrz", {"tuples": -1})
    with pytest.raises(ExperimentError):
        run_experiment("ex-2.6-symmetric-product", {"n": 5})


def test_workers_not_in_params():
    assert "workers" not in resolve_params("rm-2.5-solvability-words")
