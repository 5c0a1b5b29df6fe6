"""The experiment catalog.

Each entry is a function ``(params, seed, workers) -> (passed, evidence)``
registered with its default parameters. Experiments only call into the
word, group and dynamics layers; every decisive claim is re-checked by
direct evaluation and recorded in the evidence.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from ..dynamics import (FAILS, HOLDS, INCONCLUSIVE, SolvabilityMismatch, VerbalMap,
                        check_e_identity, check_s_identity, check_u_equivariance,
                        check_u_homomorphism, classify_nilpotent, depth_e, evaluate,
                        radical, return_times, sample_tuple, solvability_by_word,
                        verbal_orbit)
from ..dynamics.orbit import _orbit
from ..groups import derived_length, grigorchuk_is_trivial, make_group
from ..wordparse import parse_word
from ..words import Word, exponent_sum, named_word
from .corpus import nontrivial_words, random_word, zero_sum_word


@dataclass(frozen=True)
class Experiment:
    name: str
    func: Callable
    defaults: dict
    summary: str


CATALOG: dict[str, Experiment] = {}


def experiment(name: str, summary: str, **defaults):
    def register(func):
        CATALOG[name] = Experiment(name, func, defaults, summary)
        return func
    return register


def _hist(counter) -> dict:
    return {str(k): v for k, v in sorted(counter.items())}


def _prime_factors(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# symmetric groups and solvability words


@experiment("ex-2.2-wreath-nilpotent",
            "[x1,x2]^p holds exhaustively on N wr Z/p with N nilpotent",
            lamp="unitri(3,2)", p=2)
def ex_2_2(params, seed, workers):
    desc = f"wreath({params['lamp']},cyclic({params['p']}))"
    w = Word(((1, -1), (2, -1), (1, 1), (2, 1)), 2) ** params["p"]
    verdict = check_e_identity(w, desc, workers=workers)
    return verdict.status == HOLDS, {"group": desc, "word": str(w), "verdict": verdict.to_dict()}


@experiment("ex-2.6-symmetric-product",
            "three conjugate-power words hold on S_n but their product has a fixed point",
            n=6, samples=500)
def ex_2_6(params, seed, workers):
    n = params["n"]
    if not 6 <= n <= 8:
        raise ValueError("n must be between 6 and 8")
    G = make_group(f"sym({n})")
    m = 1
    for p in range(2, n + 1):
        if all(p % q for q in range(2, p)):
            m *= p
    parts = [parse_word(f"x{j} x1^{m} x{j}^-1", 4) for j in (2, 3, 4)]
    word_ev = {}
    ok = True
    for j, wj in zip((2, 3, 4), parts):
        v = check_e_identity(wj, G, mode="sampled", seed=seed, count=params["samples"],
                             size_bound=8, workers=workers)
        reached = sum(v.depth_histogram.values())
        ok &= v.status != FAILS and v.unresolved == 0 and reached == params["samples"]
        word_ev[f"w{j - 1}"] = {"word": str(wj), "max_depth": v.max_depth_seen,
                                "all_reach_identity": reached == params["samples"],
                                "depth_histogram": _hist(v.depth_histogram)}

    w = parts[0] * parts[1] * parts[2]
    x1 = G.parse_element("(1 2 3 4)(5 6)")
    g = G.power(x1, m)
    conj = {}
    for y in G.elements():
        conj.setdefault(G.op(G.op(y, g), G.inv(y)), y)
    klass = sorted(conj, key=repr)
    random.Random(seed).shuffle(klass)
    found = None
    tries = 0
    for c2 in klass:
        for c3 in klass:
            tries += 1
            c4 = G.op(G.inv(G.op(c2, c3)), x1)
            if c4 in conj:
                found = (conj[c2], conj[c3], conj[c4])
                break
        if found:
            break
    evidence = {"m": m, "words": word_ev, "product_word": str(w), "x1": G.render(x1),
                "g": G.render(g), "class_size": len(klass), "pairs_tried": tries}
    if found is None:
        return False, evidence
    tup = (x1,) + found
    value = evaluate(w, G, tup)
    orbit = verbal_orbit(w, G, x1, list(found), budget=G.order())
    fixed = value == x1
    evidence["witness"] = {"tuple": [G.render(x) for x in tup], "w_value": G.render(value),
                           "fixed_point": fixed, "orbit": orbit.to_dict()}
    return ok and fixed and orbit.outcome == "EntersCycle", evidence


@experiment("rm-2.5-solvability-words",
            "named words detect solvability, cross-checked with the derived series",
            groups=["cyclic(7)", "sym(3)", "sym(4)", "alt(4)", "unitri(3,2)", "alt(5)"],
            words=["w_BW", "w_BWW", "w_BGGKPP"], sample_count=200)
def rm_2_5(params, seed, workers):
    rows, ok = [], True
    for desc in params["groups"]:
        for name in params["words"]:
            try:
                res = solvability_by_word(desc, name, seed=seed,
                                          sample_count=params["sample_count"], workers=workers)
            except SolvabilityMismatch as exc:
                rows.append({"group": desc, "word": name, "error": str(exc)})
                ok = False
                continue
            row = {"group": desc, "word": name, "solvable": res.solvable,
                   "derived_length": res.derived_length, "status": res.verdict.status,
                   "mode": res.verdict.mode, "max_depth": res.verdict.max_depth_seen}
            if not res.solvable:
                wit = res.verdict.to_dict()["witness"]
                row["witness"] = wit
                ok &= wit is not None and wit["orbit"]["outcome"] == "EntersCycle"
            rows.append(row)
    return ok, {"results": rows}


# abelian groups


@experiment("ex-3.4-abelian-depth",
            "zero exponent-sum words vanish at depth 1 on Z^d; a nonzero sum fails",
            d=2, words=200, tuples_per_word=3, size_bound=8, failing_word="x1^2 x2")
def ex_3_4(params, seed, workers):
    G = make_group(f"zd({params['d']})")
    rng = random.Random(seed)
    depths: Counter = Counter()
    bad = []
    for i in range(params["words"]):
        w = zero_sum_word(rng, rng.randint(2, 4), 10)
        for j in range(params["tuples_per_word"]):
            tup = sample_tuple(G, w.arity, seed, i * params["tuples_per_word"] + j,
                               params["size_bound"])
            rep = _orbit(VerbalMap(w, G, tup[1:]), G, tup[0], 4)
            depths[rep.depth if rep.reaches_identity else -1] += 1
            if rep.depth != 1 and len(bad) < 5:
                bad.append(str(w))
    fw = parse_word(params["failing_word"])
    verdict = check_e_identity(fw, G, mode="sampled", seed=seed, count=20,
                               size_bound=params["size_bound"], budget=64, workers=workers)
    ok = not bad and verdict.status == FAILS and verdict.certificate is not None
    return ok, {"depth_histogram": _hist(depths), "counterexamples": bad,
                "failing_word": str(fw), "failing_verdict": verdict.to_dict()}


# the shift extension and lamplighter structure


def _wbar():
    return named_word("wbar")


@experiment("ex-4.1-fractal-holds",
            "[x1,[x2,x3]] reaches the identity on bounded tuples of the shift extension",
            tuples=200, size_bound=3, budget=10_000)
def ex_4_1(params, seed, workers):
    G = make_group("infunitri")
    w = _wbar()
    depths: Counter = Counter()
    misses = []
    for i in range(params["tuples"]):
        tup = sample_tuple(G, 3, seed, i, params["size_bound"])
        rep = _orbit(VerbalMap(w, G, tup[1:]), G, tup[0], params["budget"])
        if rep.reaches_identity:
            depths[rep.depth] += 1
        elif len(misses) < 5:
            misses.append({"tuple": [G.render(x) for x in tup], "orbit": rep.to_dict()})
    ok = sum(depths.values()) == params["tuples"]
    return ok, {"word": str(w), "depth_histogram": _hist(depths), "misses": misses}


@experiment("ex-4.2-conjugate-fails",
            "x4 [x1,[x2,x3]] x4^-1 has a single-entry orbit that never vanishes",
            d_max=20)
def ex_4_2(params, seed, workers):
    G = make_group("infunitri")
    w = parse_word("x4 [x1,[x2,x3]] x4^-1")
    x1 = G.elementary(-1, 0)
    x2, x3, x4 = G.elementary(0, 1), G.phi(), G.phi()
    phi = VerbalMap(w, G, [x2, x3, x4])
    steps, ok, x = [], True, x1
    for d in range(1, params["d_max"] + 1):
        x = phi(x)
        t, entries = x
        single = t == 0 and len(entries) == 1
        ok &= single and not G.is_identity(x)
        steps.append({"d": d, "element": G.render(x),
                      "entry": list(entries[0][0]) if single else None,
                      "value": entries[0][1] if single else None})
    y = G.commutator(x2, x3)
    return ok, {"word": str(w), "tuple": [G.render(v) for v in (x1, x2, x3, x4)],
                "y": G.render(y), "steps": steps}


@experiment("lem-4.3-4.4-structure",
            "the u-part of the verbal map is a homomorphism on the lamps and commutes with conjugation",
            R=[2, 3, 4], trials=500, words=10, size_bound=4)
def lem_4_3_4_4(params, seed, workers):
    rows, ok = [], True
    corpus = nontrivial_words(seed, params["words"], arity=3, max_length=8)
    per_word = max(1, params["trials"] // len(corpus))
    for R in params["R"]:
        desc = f"wreath(cyclic({R}),int)"
        G = make_group(desc)
        rng = random.Random(f"{seed}/{R}")
        hom = equi = True
        for k, w in enumerate(corpus):
            tail = [G.random(rng, params["size_bound"]) for _ in range(w.arity - 1)]
            hom &= check_u_homomorphism(w, G, tail, per_word, seed + k, params["size_bound"])
            equi &= check_u_equivariance(w, G, tail, per_word, seed + k, params["size_bound"])
        # control: the full affine map is not multiplicative when v != e
        control = check_u_homomorphism(parse_word("x1 x2"), G, [G.lamp_at(1)], 50, seed,
                                       use_full_word=True)
        ok &= hom and equi and not control
        rows.append({"group": desc, "trials": per_word * len(corpus),
                     "homomorphism": hom, "equivariance": equi,
                     "full_word_control_multiplicative": control})
    return ok, {"words": [str(w) for w in corpus], "results": rows}


EXTENSION_CORPUS = ["x1^6", "x1^12", "[x1,x2]^2", "[x1,x2]^6", "[x1^2,x2]", "[x1^6,x2]",
                    "[x2,x1,x1]", "[[x1,x2],[x1,x3]]", "[x1,x2]^2 x1^6", "x1^6 x2^6",
                    "[x1^2,x2]^3", "[x1,x2]^2 [x1,x3]^2", "x2 x1^6 x2^-1", "[x1^3,x2]^2",
                    "[x1,x2]", "x1^3", "[x1,x2,x2]"]


@experiment("lem-4.5-extension-bound",
            "s(w,G) <= (s(w,G/N)+1)(#N+1) exactly on Z/2 wr Z/3",
            words=EXTENSION_CORPUS, random_words=20)
def lem_4_5(params, seed, workers):
    desc, quotient, n_size = "wreath(cyclic(2),cyclic(3))", "cyclic(3)", 8
    words = [parse_word(s) for s in params["words"]]
    rng = random.Random(seed)
    for _ in range(params["random_words"]):
        words.append(random_word(rng, 2, 8) ** 6)
    rows, ok, holding = [], True, 0
    for w in words:
        rep = depth_e(w, desc, workers=workers)
        if not rep.is_iterated_identity:
            rows.append({"word": str(w), "iterated_identity": False})
            continue
        holding += 1
        q = depth_e(w, quotient).s_value
        bound = (q + 1) * (n_size + 1)
        ok &= rep.s_value <= bound
        rows.append({"word": str(w), "iterated_identity": True, "s_G": rep.s_value,
                     "s_quotient": q, "bound": bound})
    return ok and holding > 0, {"group": desc, "quotient": quotient, "N_order": n_size,
                                "identities": holding, "rows": rows}


# nilpotent groups


def _nilpotent_corpus(seed: int, count: int) -> list[Word]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind = len(out) % 3
        if kind == 0:
            w = random_word(rng, 2, 8)
        elif kind == 1:
            # x1 exponent sum forced to a multiple of 6
            w = random_word(rng, 2, 6)
            r = exponent_sum(w, 1)
            w = w * Word(((1, 6 * rng.randint(-1, 1) - r),), 2)
        else:
            a, b = random_word(rng, 2, 4), random_word(rng, 2, 4)
            w = Word(a.syllables + b.syllables, 2)
            w = w * Word(((1, -exponent_sum(w, 1)),), 2) * Word(((2, rng.choice((0, 6, 3, 2))),), 2)
        if not w.is_identity:
            out.append(w.with_arity(2))
    return out


@experiment("ex-5.2-nilpotent-classify",
            "the exponent-sum criterion agrees with dynamics on unitriangular groups",
            words=50, finite=["unitri(3,2)", "unitri(3,3)"], infinite=["unitri(3)"],
            sample_count=100, budget=50)
def ex_5_2(params, seed, workers):
    corpus = _nilpotent_corpus(seed, params["words"])
    rows, ok = [], True
    for desc in params["finite"]:
        disagree, counts = [], Counter()
        for w in corpus:
            c = classify_nilpotent(w, desc, seed=seed)
            v = check_e_identity(w, desc, workers=workers)
            counts[c.status] += 1
            if c.status != v.status:
                disagree.append({"word": str(w), "criterion": c.status, "dynamics": v.status})
        ok &= not disagree
        rows.append({"group": desc, "mode": "exhaustive", "criterion_counts": dict(counts),
                     "disagreements": disagree})
    for desc in params["infinite"]:
        contradictions, counts = [], Counter()
        for w in corpus:
            c = classify_nilpotent(w, desc, seed=seed)
            v = check_e_identity(w, desc, mode="sampled", seed=seed,
                                 count=params["sample_count"], size_bound=3,
                                 budget=params["budget"], workers=workers)
            counts[f"{c.status}/{v.status}"] += 1
            if (c.status == HOLDS) == (v.status == FAILS):
                if c.status == HOLDS or v.status == FAILS:
                    contradictions.append({"word": str(w), "criterion": c.status,
                                           "dynamics": v.status})
        ok &= not contradictions
        rows.append({"group": desc, "mode": "sampled", "outcome_counts": dict(counts),
                     "contradictions": contradictions})
    return ok, {"words": [str(w) for w in corpus], "results": rows}


# lamplighter depths


@experiment("prop-6.1-zwrz",
            "[x1,[x1,x2]] on Z wr Z: witness (x, x a) has depth 2 and sampled depths are <= 2",
            tuples=1000, size_bound=8)
def prop_6_1(params, seed, workers):
    G = make_group("wreath(int,int)")
    w = parse_word("[x1,[x1,x2]]")
    x = G.x()
    xa = G.op(x, G.lamp_at(1))
    rep = verbal_orbit(w, G, x, [xa], budget=10, trace=True)
    step1 = evaluate(w, G, [x, xa])
    depths: Counter = Counter()
    for i in range(params["tuples"]):
        tup = sample_tuple(G, 2, seed, i, params["size_bound"])
        r = _orbit(VerbalMap(w, G, tup[1:]), G, tup[0], 2)
        depths[r.depth if r.reaches_identity else -1] += 1
    ok = (rep.reaches_identity and rep.depth == 2 and not G.is_identity(step1)
          and depths[-1] == 0)
    return ok, {"word": str(w), "witness": [G.render(x), G.render(xa)],
                "witness_orbit": rep.to_dict(), "witness_depth": rep.depth,
                "sampled_depth_histogram": _hist(depths)}


@experiment("prop-6.2-lamplighter",
            "[x1^m,x2] on Z/R wr Z has depth k+1 where k is the largest prime exponent of R",
            R=[2, 3, 4, 8, 9, 12], tuples=1000, size_bound=8)
def prop_6_2(params, seed, workers):
    rows, ok = [], True
    for R in params["R"]:
        k = max(_prime_factors(R).values())
        m = radical(R)
        G = make_group(f"wreath(cyclic({R}),int)")
        w = parse_word(f"[x1^{m},x2]")
        x = G.x()
        xa = G.op(x, G.lamp_at(1))
        phi = VerbalMap(w, G, [x])
        y = xa
        for _ in range(k):
            y = phi(y)
        lamp_values = sorted({v for _, v in y[1]})
        target = pow(m, k - 1, R)
        has_value = target in lamp_values or (-target) % R in lamp_values
        rep = _orbit(phi, G, xa, k + 2)
        depths: Counter = Counter()
        for i in range(params["tuples"]):
            tup = sample_tuple(G, 2, seed, i, params["size_bound"])
            r = _orbit(VerbalMap(w, G, tup[1:]), G, tup[0], k + 1)
            depths[r.depth if r.reaches_identity else -1] += 1
        row_ok = (not G.is_identity(y) and has_value and rep.reaches_identity
                  and rep.depth == k + 1 and depths[-1] == 0)
        ok &= row_ok
        rows.append({"R": R, "k": k, "m": m, "word": str(w),
                     "witness": [G.render(xa), G.render(x)],
                     "iterate_k": G.render(y), "lamp_values_k": lamp_values,
                     "expected_value": target, "witness_depth": rep.depth,
                     "sampled_depth_histogram": _hist(depths), "passed": row_ok})
    return ok, {"results": rows}


RETURN_CASES = [
    # group, word, tail literals, membership, expected period (None = never)
    ("wreath(cyclic(2),cyclic(3))", "x1 x2", ["(s:1;)"], "lamp-subgroup", 3),
    ("wreath(cyclic(2),int)", "x1^-1 x2", ["(s:3;)"], "lamp-subgroup", 2),
    ("wreath(cyclic(4),int)", "[x1,x2] x2", ["(s:0; 0:1)"], "lamp-subgroup", 1),
    ("wreath(int,int)", "x1 x2", ["(s:1;)"], "lamp-subgroup", None),
    ("sym(4)", "x1 x2", ["(1 2)"], "even-permutation", 2),
    ("infunitri", "x1^-1 x2", ["(t:5; (0,1):1)"], "shift-zero", 2),
]


@experiment("rm-6-return-times",
            "levels at which the orbit of e returns to a normal subgroup form multiples of D",
            budget=60)
def rm_6(params, seed, workers):
    rows, ok = [], True
    for desc, word, tail, member, expected in RETURN_CASES:
        G = make_group(desc)
        rt = return_times(parse_word(word), G, [G.parse_element(t) for t in tail], member,
                          params["budget"])
        row_ok = rt.is_progression and rt.period == expected
        ok &= row_ok
        rows.append({"group": desc, "word": word, "tail": tail, "membership": member,
                     "period": rt.period, "expected_period": expected,
                     "levels": rt.levels[:12], "count": len(rt.levels),
                     "is_progression": rt.is_progression, "passed": row_ok})
    return ok, {"results": rows}


# S-type identities and torsion


@experiment("ex-7.1-stype-solvable",
            "[x1,x2] is an S-type identity at level equal to the derived length",
            groups=["sym(3)", "sym(4)", "unitri(3,2)", "wreath(cyclic(2),cyclic(2))"])
def ex_7_1(params, seed, workers):
    w0 = named_word("w0")
    rows, ok = [], True
    for desc in params["groups"]:
        verdict, trace = check_s_identity(w0, desc)
        dl = derived_length(desc)
        row_ok = verdict.status == HOLDS and trace.level == dl
        ok &= row_ok
        rows.append({"group": desc, "status": verdict.status, "level": trace.level,
                     "derived_length": dl, "sizes": trace.sizes, "passed": row_ok})
    return ok, {"word": str(w0), "results": rows}


@experiment("ex-7.2-stype-z",
            "on Z a word with a nonzero exponent sum is not an S-type identity",
            words=["x1 x2", "x1^2 x2^-1", "x1 x2 x1^-2 x2^2", "x1^3"], control="[x1,x2]",
            levels=8, evaluations=200_000)
def ex_7_2(params, seed, workers):
    G = make_group("zd(1)")
    base = [G.parse_element("1"), G.identity()]
    rows, ok = [], True
    for s in params["words"]:
        w = parse_word(s)
        verdict, trace = check_s_identity(w, G, base=base, budget_levels=params["levels"],
                                          budget_evaluations=params["evaluations"])
        # the all-equal assignment gives m^N, so 0 and m^N stay apart forever
        growing = all(a <= b for a, b in zip(trace.sizes, trace.sizes[1:]))
        row_ok = verdict.status == FAILS and growing and trace.sizes[-1] >= 2
        ok &= row_ok
        rows.append({"word": s, "exponent_sums": [exponent_sum(w, i) for i in range(1, w.arity + 1)],
                     "status": verdict.status, "certificate": verdict.certificate,
                     "sizes": trace.sizes, "passed": row_ok})
    cw = parse_word(params["control"])
    cv, ct = check_s_identity(cw, G, base=base, budget_levels=params["levels"],
                              budget_evaluations=params["evaluations"])
    ok &= cv.status == HOLDS
    return ok, {"base": ["1", "0"], "results": rows,
                "control": {"word": params["control"], "status": cv.status, "level": ct.level}}


@experiment("lem-7.2-stype-extension",
            "[x1,x2] holds S-type on an extension with level at most the sum of factor levels")
def lem_7_2(params, seed, workers):
    w0 = named_word("w0")
    desc = "wreath(cyclic(2),cyclic(3))"
    kernel = "product(cyclic(2),cyclic(2),cyclic(2))"
    quotient = "cyclic(3)"
    gv, gt = check_s_identity(w0, desc)
    kv, kt = check_s_identity(w0, kernel)
    qv, qt = check_s_identity(w0, quotient)
    ok = (gv.status == HOLDS and kv.status == HOLDS and qv.status == HOLDS
          and gt.level <= kt.level + qt.level)
    return ok, {"group": {"desc": desc, "level": gt.level, "sizes": gt.sizes},
                "kernel": {"desc": kernel, "level": kt.level},
                "quotient": {"desc": quotient, "level": qt.level}}


@experiment("grig-torsion",
            "x1^2 iterates to the identity on random elements of the Grigorchuk group",
            words=200, max_length=30, budget=64)
def grig_torsion(params, seed, workers):
    G = make_group("grigorchuk")
    w = parse_word("x1^2")
    rng = random.Random(seed)
    depths: Counter = Counter()
    deepest = None
    for _ in range(params["words"]):
        g = G.random(rng, params["max_length"])
        rep = verbal_orbit(w, G, g, [], budget=params["budget"])
        d = rep.depth if rep.reaches_identity else -1
        depths[d] += 1
        if deepest is None or d > deepest[1]:
            deepest = (g, d)
    ab = verbal_orbit(w, G, "ab", [], budget=params["budget"])
    ab16 = grigorchuk_is_trivial("ab" * 16)
    ab8 = grigorchuk_is_trivial("ab" * 8)
    max_depth = max(depths)
    ok = depths[-1] == 0 and max_depth >= 4 and ab.depth == 4 and ab16 and not ab8
    return ok, {"depth_histogram": _hist(depths), "max_depth": max_depth,
                "deepest_word": deepest[0] if deepest else None,
                "ab_depth": ab.depth, "ab16_trivial": ab16, "ab8_trivial": ab8}


# metabelian evidence


METABELIAN_CORPUS = ["[x1,[x1,x2]]", "[x1^2,x2]", "[x1^3,x2]", "[x1^6,x2]", "[x1^2,x2]^2",
                     "[[x1,x2],[x3,x4]]", "[x1,x2]^2", "[x1,x2,x2]", "[x2,x1,x1]",
                     "[x1,x2]^12", "[x1^12,x2]", "[x1,x3][x2,x3]"]


@experiment("thm-8.1-metabelian-evidence",
            "evidence: words that hold on metabelian lamplighters do so within the proved depth bounds",
            R=[2, 3, 4], words=METABELIAN_CORPUS, samples=100, size_bound=6, budget=24)
def thm_8_1(params, seed, workers):
    backends = [(f"wreath(cyclic({R}),int)", max(_prime_factors(R).values()) + 1)
                for R in params["R"]]
    backends.append(("wreath(int,int)", 2))
    rows, ok = [], True
    for desc, bound in backends:
        held = []
        for s in params["words"]:
            w = parse_word(s)
            v = check_e_identity(w, desc, mode="sampled", seed=seed, count=params["samples"],
                                 size_bound=params["size_bound"], budget=params["budget"],
                                 workers=workers)
            all_reach = v.status == INCONCLUSIVE and v.unresolved == 0
            if all_reach:
                held.append({"word": s, "max_depth": v.max_depth_seen})
                ok &= v.max_depth_seen <= bound
        ok &= bool(held)
        rows.append({"group": desc, "depth_bound": bound, "holding_words": held})
    return ok, {"note": "sampled evidence, not a proof", "results": rows}
