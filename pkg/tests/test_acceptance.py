"""Acceptance suite: one test per criterion, each printing a pass/fail line."""

import os
import random
import subprocess
import sys
import time

import pytest

from iterid import Word, named_word, parse_word
from iterid.dynamics import (FAILS, HOLDS, check_s_identity, evaluate, solvability_by_word,
                             verbal_orbit)
from iterid.experiments import run_experiment
from iterid.groups import derived_length, make_group
from iterid.words import (decompose_nilpotent, decompose_uv, engel_iterate, exponent_sum,
                          free_reduce, s_iterate, substitute)

from test_dynamics import brute_force_values


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, limit=None, detail=""):
        timing = f"{elapsed:.1f}s" + (f" (limit {limit}s)" if limit else "")
        within = limit is None or elapsed < limit
        verdict = "PASS" if ok and within else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {verdict} {title}: {timing} {detail}".rstrip())
        assert ok, f"criterion {number} failed: {detail}"
        assert within, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"
    return emit


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def test_criterion_01_zwrz_depth_two(report):
    r, t = timed(run_experiment, "prop-6.1-zwrz", seed=0)
    ev = r.evidence
    G = make_group("wreath(int,int)")
    x, xa = (G.parse_element(s) for s in ev["witness"])
    w = parse_word("[x1,[x1,x2]]")
    step1 = evaluate(w, G, [x, xa])
    step2 = evaluate(w, G, [step1, xa])
    hist = ev["sampled_depth_histogram"]
    ok = (r.passed and ev["witness_depth"] == 2 and not G.is_identity(step1)
          and G.is_identity(step2) and sum(hist.values()) == 1000
          and all(int(k) in (0, 1, 2) for k in hist))
    report(1, "[x1,[x1,x2]] on Z wr Z: witness depth 2, 1000 tuples depth <= 2", ok, t, 10,
           f"histogram {hist}")


def test_criterion_02_lamplighter_depths(report):
    r, t = timed(run_experiment, "prop-6.2-lamplighter", seed=0)
    rows = r.evidence["results"]
    expected_k = {2: 1, 3: 1, 4: 2, 8: 3, 9: 2, 12: 2}
    ok = r.passed and [row["R"] for row in rows] == [2, 3, 4, 8, 9, 12]
    for row in rows:
        k = expected_k[row["R"]]
        hist = row["sampled_depth_histogram"]
        ok &= row["k"] == k and row["witness_depth"] == k + 1
        ok &= row["iterate_k"] != "(s:0;)"
        ok &= sum(hist.values()) == 1000 and all(0 <= int(d) <= k + 1 for d in hist)
    report(2, "[x1^m,x2] on Z/R wr Z: depth k+1 for R in 2,3,4,8,9,12", ok, t, 30,
           "depths " + ", ".join(f"R={row['R']}:{row['witness_depth']}" for row in rows))


def test_criterion_03_symmetric_product(report):
    r, t = timed(run_experiment, "ex-2.6-symmetric-product", seed=0)
    ev = r.evidence
    ok = r.passed and ev["m"] == 30
    for wj in ev["words"].values():
        ok &= wj["all_reach_identity"] and wj["max_depth"] <= 4
    G = make_group("sym(6)")
    tup = [G.parse_element(s) for s in ev["witness"]["tuple"]]
    w = Word(tuple(), 4)
    for j in (2, 3, 4):
        w = w * Word(((j, 1), (1, 30), (j, -1)), 4)
    ok &= evaluate(w, G, tup) == tup[0] and not G.is_identity(tup[0])
    report(3, "S6, m=30: conjugate-power words hold, product has a fixed point", ok, t, 60,
           f"witness {ev['witness']['tuple']}")


def test_criterion_04_solvability_separation(report):
    start = time.perf_counter()
    w = named_word("w_BWW")
    depths, ok = {}, True
    for desc in ["sym(3)", "sym(4)", "alt(4)", "unitri(3,2)", "cyclic(7)", "alt(5)"]:
        res = solvability_by_word(desc, "w_BWW")  # raises on disagreement with the oracle
        v = res.verdict
        ok &= v.mode == "exhaustive"
        ok &= res.solvable == (derived_length(desc) is not None)
        if desc == "alt(5)":
            d = v.to_dict()
            ok &= v.status == FAILS and d["witness"]["orbit"]["outcome"] == "EntersCycle"
            G = make_group(desc)
            tup = [G.parse_element(s) for s in d["witness"]["tuple"]]
            ok &= verbal_orbit(w, G, tup[0], tup[1:]).outcome == "EntersCycle"
        else:
            ok &= v.status == HOLDS
            depths[desc] = v.max_depth_seen
    ok &= depths["sym(4)"] <= 3
    report(4, "w_BWW exhaustive: Holds on solvable groups, cycle on A5", ok,
           time.perf_counter() - start, 120, f"max depths {depths}")


def test_criterion_05_nilpotent_classification(report):
    r, t = timed(run_experiment, "ex-5.2-nilpotent-classify", seed=0)
    finite = [row for row in r.evidence["results"] if row["mode"] == "exhaustive"]
    ok = (r.passed and len(r.evidence["words"]) == 50
          and [row["group"] for row in finite] == ["unitri(3,2)", "unitri(3,3)"]
          and all(not row["disagreements"] for row in finite))
    report(5, "criterion vs exhaustive dynamics on UT(3,2), UT(3,3), 50 words", ok, t, None,
           "; ".join(f"{row['group']} {row['criterion_counts']}" for row in finite))


def test_criterion_06_s_type(report):
    start = time.perf_counter()
    w0 = named_word("w0")
    v3, t3 = check_s_identity(w0, "sym(3)")
    v4, t4 = check_s_identity(w0, "sym(4)")
    ok = (v3.status == HOLDS and t3.level == 2 == derived_length("sym(3)")
          and v4.status == HOLDS and t4.level == 3 == derived_length("sym(4)"))
    G = make_group("sym(3)")
    for N in (1, 2, 3):
        values = brute_force_values(s_iterate(w0, N), G)
        ok &= len(values) == t3.sizes[min(N, len(t3.sizes) - 1)]
    report(6, "S-type [x1,x2]: level 2 on S3, 3 on S4, brute force N<=3 on S3", ok,
           time.perf_counter() - start, 10, f"S3 sizes {t3.sizes}, S4 sizes {t4.sizes}")


def test_criterion_07_lamp_structure(report):
    r1, t1 = timed(run_experiment, "lem-4.3-4.4-structure", seed=0)
    r2, t2 = timed(run_experiment, "lem-4.5-extension-bound", seed=0)
    rows = r1.evidence["results"]
    ok = (r1.passed and len(rows) == 3 and all(row["trials"] >= 500 for row in rows)
          and all(row["homomorphism"] and row["equivariance"] for row in rows))
    holding = [row for row in r2.evidence["rows"] if row["iterated_identity"]]
    ok &= r2.passed and all(row["s_G"] <= row["bound"] for row in holding) and bool(holding)
    report(7, "u-part homomorphism/equivariance on 3 lamplighters; extension bound", ok,
           t1 + t2, None, f"{len(holding)} identities checked on Z/2 wr Z/3")


def test_criterion_08_fractal_and_conjugate(report):
    r1, t1 = timed(run_experiment, "ex-4.1-fractal-holds", seed=0)
    r2, t2 = timed(run_experiment, "ex-4.2-conjugate-fails", seed=0)
    hist = r1.evidence["depth_histogram"]
    steps = r2.evidence["steps"]
    ok = r1.passed and sum(hist.values()) == 200
    ok &= r2.passed and len(steps) == 20 and all(s["entry"] is not None for s in steps)
    report(8, "wbar holds on 200 infunitri tuples; conjugate orbit single-entry for d<=20",
           ok, t1 + t2, 10, f"entries {[tuple(s['entry']) for s in steps[:3]]}...")


def test_criterion_09_grigorchuk(report):
    r, t = timed(run_experiment, "grig-torsion", seed=0)
    ev = r.evidence
    ok = (r.passed and sum(ev["depth_histogram"].values()) == 200 and ev["max_depth"] >= 4
          and ev["ab16_trivial"] and not ev["ab8_trivial"])
    report(9, "Grigorchuk x1^2 orbits reach e; (ab)^16 = e, (ab)^8 != e", ok, t, 60,
           f"histogram {ev['depth_histogram']}")


def _random_word(rng, arity=3, max_syllables=8):
    return [(rng.randint(1, arity), rng.choice((-3, -2, -1, 1, 2, 3)))
            for _ in range(rng.randint(0, max_syllables))]


def test_criterion_10_word_engine(report):
    start = time.perf_counter()
    rng = random.Random(20240601)
    cases, failures = 10_000, []
    for i in range(cases):
        raw = _random_word(rng)
        w = Word(tuple(raw), 3)
        checks = [
            free_reduce(free_reduce(raw)) == free_reduce(raw),
            (w * ~w).is_identity and (~w * w).is_identity,
            decompose_uv(w).recompose() == w,
            decompose_nilpotent(w).recompose() == w,
            decompose_nilpotent(w).r == exponent_sum(w, 1),
        ]
        if not w.is_identity:
            # keep iterate lengths tractable: length * (x1-letters)^(d-1) <= 4000
            c = max(1, sum(abs(e) for v, e in w.syllables if v == 1))
            d = rng.randint(1, 6)
            while d > 1 and len(w) * c ** (d - 1) > 4000:
                d -= 1
            checks.append(not engel_iterate(w, d).is_identity)
            if i % 10 == 0 and d >= 2:
                a = rng.randint(1, d - 1)
                images = {k: Word.var(k, 3) for k in (1, 2, 3)}
                images[1] = engel_iterate(w, a)
                checks.append(engel_iterate(w, d) == substitute(engel_iterate(w, d - a),
                                                                images))
        if not all(checks):
            failures.append(str(w))
    report(10, f"word engine property suite, {cases} cases", not failures,
           time.perf_counter() - start, 10, f"failures {failures[:3]}")


def _reproduce_all(workers, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    env.pop("ITERID_SEED", None)
    return subprocess.Popen([sys.executable, "-m", "iterid", "reproduce", "all", "--json",
                             "--workers", str(workers)],
                            stdout=subprocess.PIPE, stderr=subprocess.PIPE, text=True, env=env)


def test_criterion_11_determinism(report):
    start = time.perf_counter()
    procs = [_reproduce_all(1, 1), _reproduce_all(1, 2), _reproduce_all(4, 3)]
    outs = [p.communicate() for p in procs]
    codes = [p.returncode for p in procs]
    first = outs[0][0]
    ok = (codes == [0, 0, 0] and first and all(o[0] == first for o in outs)
          and '"passed": true' in first)
    report(11, "reproduce all --json byte-identical over 2 runs and --workers 1 vs 4", ok,
           time.perf_counter() - start, None, f"{len(first)} bytes, exit codes {codes}")
