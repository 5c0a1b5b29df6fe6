import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iterid import Word, named_word, parse_word
from iterid.dynamics import (ArityError, FAILS, HOLDS, INCONCLUSIVE, VerbalMap,
                             check_e_identity, check_s_identity, check_u_equivariance,
                             check_u_homomorphism, classify_nilpotent, depth_e, evaluate,
                             radical, return_times, sample_tuple, solvability_by_word,
                             verbal_orbit)
from iterid.groups import make_group
from iterid.words import s_iterate


def test_evaluate():
    G = make_group("sym(6)")
    g = G.parse_element("(1 2 3 4)(5 6)")
    assert G.render(evaluate(parse_word("x1^30"), G, [g])) == "(1 3)(2 4)"
    with pytest.raises(ArityError):
        evaluate(parse_word("[x1,x2]"), G, [g])
    with pytest.warns(UserWarning):
        assert evaluate(parse_word("x1"), G, [g, g]) == g


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.integers(-3, 3)), max_size=8),
       st.integers(0, 10**6))
def test_verbal_map_matches_evaluate(syl, seed):
    w = Word(tuple(syl), 3)
    G = make_group("sym(4)")
    tup = sample_tuple(G, 3, seed, 0, 8)
    assert VerbalMap(w, G, tup[1:])(tup[0]) == evaluate(w, G, tup)


def test_orbit_outcomes():
    G = make_group("wreath(int,int)")
    w = parse_word("[x1,[x1,x2]]")
    x = G.x()
    rep = verbal_orbit(w, G, x, [G.op(x, G.lamp_at(1))], trace=True)
    assert (rep.outcome, rep.depth) == ("ReachesIdentity", 2)
    assert len(rep.trace) == 3
    A5 = make_group("alt(5)")
    rep = verbal_orbit(named_word("w_BWW"), A5, A5.parse_element("(1 2 3)"),
                       [A5.parse_element("(3 4 5)")])
    assert (rep.outcome, rep.preperiod, rep.period) == ("EntersCycle", 2, 3)
    rep = verbal_orbit(parse_word("x1 x2"), make_group("int"), 1, [1], budget=5)
    assert (rep.outcome, rep.budget) == ("BudgetExhausted", 5)
    assert str(rep) == "BudgetExhausted(budget=5)"


@pytest.mark.parametrize("desc, depth", [("sym(3)", 2), ("sym(4)", 3), ("alt(4)", 2),
                                         ("unitri(3,2)", 1), ("cyclic(7)", 1)])
def test_bww_holds_on_solvable(desc, depth):
    v = check_e_identity(named_word("w_BWW"), desc)
    assert v.status == HOLDS and v.max_depth_seen == depth
    assert v.tuples_checked == make_group(desc).order() ** 2


def test_bww_fails_on_a5_with_cycle():
    v = check_e_identity(named_word("w_BWW"), "alt(5)")
    assert v.status == FAILS
    d = v.to_dict()
    assert d["witness"]["orbit"]["outcome"] == "EntersCycle"
    G = make_group("alt(5)")
    tup = [G.parse_element(t) for t in d["witness"]["tuple"]]
    rep = verbal_orbit(named_word("w_BWW"), G, tup[0], tup[1:])
    assert rep.outcome == "EntersCycle"


def test_exhaustive_workers_agree():
    w = parse_word("[x1^2,x2]")
    a = check_e_identity(w, "sym(4)", workers=1).to_dict()
    b = check_e_identity(w, "sym(4)", workers=3).to_dict()
    assert a == b


def test_depth_e_brute_force_s3():
    G = make_group("sym(3)")
    w = named_word("w_BWW")
    best = 0
    for t in itertools.product(list(G.elements()), repeat=2):
        rep = verbal_orbit(w, G, t[0], t[1:])
        best = max(best, rep.depth)
    assert depth_e(w, G).s_value == best == 2


def test_depth_e_values():
    assert depth_e(parse_word("x1^2"), "cyclic(8)").s_value == 3
    rep = depth_e(parse_word("[x1,x2]"), "sym(3)")
    assert rep.s_value is None and rep.to_dict()["s_value"] == "NotIteratedIdentity"


def test_sampled_never_holds():
    v = check_e_identity(named_word("wbar"), "infunitri", mode="sampled", count=30,
                         size_bound=3)
    assert v.status == INCONCLUSIVE and v.unresolved == 0
    v = check_e_identity(parse_word("x1^2 x2"), "zd(2)", mode="sampled", count=10)
    assert v.status == FAILS and v.certificate


def test_sample_tuple_deterministic():
    G = make_group("wreath(cyclic(3),int)")
    assert sample_tuple(G, 3, 5, 11, 8) == sample_tuple(G, 3, 5, 11, 8)


def test_exhaustive_infinite_rejected():
    with pytest.raises(ValueError):
        check_e_identity(parse_word("x1"), "int")


# S-type

@pytest.mark.parametrize("desc, level", [("sym(3)", 2), ("sym(4)", 3), ("cyclic(5)", 1)])
def test_s_type_levels(desc, level):
    v, trace = check_s_identity(named_word("w0"), desc)
    assert v.status == HOLDS and trace.level == level


def test_s_type_trace_sizes_s3():
    _, trace = check_s_identity(named_word("w0"), "sym(3)")
    assert trace.sizes == [6, 3, 1]


def brute_force_values(w, G):
    """Every value of ``w`` over all ``|G|^arity`` assignments, via table lookups."""
    elems = list(G.elements())
    index = {e: i for i, e in enumerate(elems)}
    table = np.array([[index[G.op(a, b)] for b in elems] for a in elems])
    inv = np.array([index[G.inv(a)] for a in elems])
    n = len(elems)
    grids = np.indices((n,) * w.arity).reshape(w.arity, -1)
    acc = np.full(grids.shape[1], index[G.identity()])
    for v, e in w.syllables:
        letter = grids[v - 1] if e > 0 else inv[grids[v - 1]]
        for _ in range(abs(e)):
            acc = table[acc, letter]
    return {elems[i] for i in np.unique(acc)}


def test_s_type_matches_brute_force_s3():
    G = make_group("sym(3)")
    w0 = named_word("w0")
    _, trace = check_s_identity(w0, G)
    for N in (1, 2, 3):
        values = brute_force_values(s_iterate(w0, N), G)
        # past the terminal level the value set stays {e}
        assert len(values) == trace.sizes[min(N, len(trace.sizes) - 1)]
    assert brute_force_values(s_iterate(w0, 3), G) == {G.identity()}


def test_s_type_z_fails():
    G = make_group("zd(1)")
    v, trace = check_s_identity(parse_word("x1 x2"), G, base=[(1,), (0,)], budget_levels=6)
    assert v.status == FAILS
    assert trace.sizes == [2, 3, 5, 9, 17, 33, 65]


def test_s_type_set_cycle():
    v, trace = check_s_identity(parse_word("x1"), "sym(3)")
    assert v.status == FAILS and trace.cycle_start == 0


# structure

def test_u_part_properties():
    G = make_group("wreath(cyclic(3),int)")
    rng = random.Random(0)
    w = parse_word("[x1^2,x2] x3 x1 x3^-1")
    tail = [G.random(rng, 4) for _ in range(2)]
    assert check_u_homomorphism(w, G, tail, trials=100)
    assert check_u_equivariance(w, G, tail, trials=100)
    assert not check_u_homomorphism(parse_word("x1 x2"), G, [G.lamp_at(1)], trials=50,
                                    use_full_word=True)


def test_return_times():
    G = make_group("wreath(cyclic(2),cyclic(3))")
    rt = return_times(parse_word("x1 x2"), G, [G.parse_element("(s:1;)")], "lamp-subgroup", 30)
    assert rt.period == 3 and rt.is_progression
    assert rt.levels[:3] == [3, 6, 9]
    Z = make_group("wreath(int,int)")
    rt = return_times(parse_word("x1 x2"), Z, [Z.x()], "lamp-subgroup", 30)
    assert rt.levels == [] and rt.period is None


def test_classify_nilpotent():
    assert classify_nilpotent(parse_word("x1^2"), "unitri(3)").status == FAILS
    assert classify_nilpotent(parse_word("x1^3"), "unitri(3,3)").status == HOLDS
    assert classify_nilpotent(parse_word("[x1,x2]"), "unitri(3,2)").status == HOLDS
    assert classify_nilpotent(parse_word("[x1,x2] x2^2"), "unitri(3,2)").status == FAILS
    assert classify_nilpotent(parse_word("[x1,x2] x2^4"), "unitri(3,2)").status == HOLDS
    assert classify_nilpotent(parse_word("[x1,x2] x2"), "unitri(3,2)").status == FAILS
    assert radical(12) == 6 and radical(1) == 1


@pytest.mark.parametrize("name", ["w_BW", "w_BWW", "w_BGGKPP"])
@pytest.mark.parametrize("desc, solvable", [("alt(5)", False), ("sym(4)", True),
                                            ("cyclic(7)", True)])
def test_solvability(name, desc, solvable):
    res = solvability_by_word(desc, name)
    assert res.solvable is solvable


@pytest.mark.parametrize("group, quotient", [
    ("unitri(3,2)", "product(cyclic(2),cyclic(2))"),
    ("unitri(3,3)", "product(cyclic(3),cyclic(3))"),
    ("product(sym(3),cyclic(2))", "sym(3)"),
])
def test_central_quotient_upper_bound(group, quotient):
    # zero exponent-sum identities: s(w,G) <= 2 s(w,G/H) + 1 for central H
    from iterid.experiments.corpus import zero_sum_word

    rng = random.Random(0)
    checked = 0
    for _ in range(40):
        w = zero_sum_word(rng, 2, 8)
        s_g = depth_e(w, group).s_value if not w.is_identity else None
        if s_g is None:
            continue
        s_q = depth_e(w, quotient).s_value
        assert s_g <= 2 * s_q + 1
        checked += 1
    assert checked >= 4


def test_central_quotient_lower_form_is_violated():
    # the reverse inequality fails already for [x1^4,x2] on UT(3,2) / centre
    w = parse_word("x1^4 x2^-1 x1^-4 x2")
    assert depth_e(w, "unitri(3,2)").s_value == 1
    assert depth_e(w, "product(cyclic(2),cyclic(2))").s_value == 1
