"""Command-line interface: ``iterid <command> [options]``.

Exit codes: 0 success / Holds / passed, 1 Fails / failed, 2 Inconclusive,
64 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings

from .dynamics import (FAILS, HOLDS, INCONCLUSIVE, SolvabilityMismatch,
                       check_e_identity, check_s_identity, depth_e, evaluate,
                       solvability_by_word, verbal_orbit)
from .dynamics.structure import SOLVABILITY_WORDS
from .experiments import list_experiments, run_experiment
from .groups import make_group
from .wordparse import parse_word, render_word
from .words import (NAMED_WORDS, decompose_nilpotent, decompose_uv, engel_iterate,
                    exponent_sum, named_word, s_iterate)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAILS, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64

GRAMMARS = """\
word grammar (whitespace is ignored):
  word   := factor { factor }
  factor := atom [ "^" ( int | atom ) ]      a^k power, a^b = b^-1 a b
  atom   := "x" N | "e" | "(" word ")" | "[" word { "," word } "]"
  [a,b] = a^-1 b^-1 a b, and [a,b,c] = [[a,b],c]
  examples: "[x1,[x1,x2]]", "x1^-2 x2^-1 x1", "x2 x1^30 x2^-1"

group descriptors:
  cyclic(n)  int  zd(d)  sym(n)  alt(n)  unitri(n)  unitri(n,m)
  wreath(<lamp>,cyclic(k))  wreath(<lamp>,int)  infunitri  grigorchuk
  product(<g1>,<g2>,...)

element literals ("e" is the identity everywhere):
  sym/alt        disjoint cycles         "(1 2 3)(4 5)"
  cyclic/int     integer                 "3"
  zd             integer vector          "[1,-2]"
  unitri         strictly-upper entries  "{(1,2):1, (2,3):-1}"
  wreath         base shift and lamps    "(s:1; 0:1, 2:3)"
  infunitri      shift and entries       "(t:1; (0,1):2)"
  grigorchuk     word over a, b, c, d    "abad"
  product        factors split by "|"    "<(1 2) | 1>"
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _default_seed() -> int:
    raw = os.environ.get("ITERID_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        return 0


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text):
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


# argument helpers

def _common(p, group=False, word=False, tuple_=False):
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for sampling (default: $ITERID_SEED or 0)")
    p.add_argument("--workers", type=_positive, default=1,
                   help="worker processes; never changes the output (default 1)")
    p.add_argument("--timing", action="store_true",
                   help="record duration_ms (otherwise null, keeping output byte-stable)")
    if group:
        p.add_argument("--group", required=True, help="group descriptor, e.g. 'sym(4)'")
    if word:
        w = p.add_mutually_exclusive_group(required=True)
        w.add_argument("--word", help="word in the DSL, e.g. '[x1,[x1,x2]]'")
        w.add_argument("--word-name", help=f"named word: {', '.join(sorted(NAMED_WORDS))}")
    if tuple_:
        p.add_argument("--tuple", nargs="+", metavar="ELEM",
                       help="element literals x1 x2 ... (one argument each)")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.RawDescriptionHelpFormatter
    parser = _Parser(prog="iterid", description="Iterated group identities: words, "
                     "group backends, verbal-map dynamics and named experiments.",
                     epilog=GRAMMARS, formatter_class=fmt)
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_, **kw):
        return sub.add_parser(name, help=help_, description=help_, epilog=GRAMMARS,
                              formatter_class=fmt, **kw)

    p = add("parse", "parse a word and print its reduced form")
    _common(p, word=True)
    p.add_argument("--arity", type=_positive, default=None)

    p = add("eval", "evaluate a word on a tuple of group elements")
    _common(p, group=True, word=True, tuple_=True)

    p = add("iterate", "symbolic iterate of a word: Engel-type w_{o n} or S-type w_{* n}")
    _common(p, word=True)
    p.add_argument("--n", type=_nonneg, required=True, help="number of iterations")
    p.add_argument("--scheme", choices=("e", "s"), default="e",
                   help="e: substitute into x1; s: substitute into every variable")

    p = add("orbit", "iterate x1 -> w(x1, x2, ..., xn) from a tuple")
    _common(p, group=True, word=True, tuple_=True)
    p.add_argument("--budget", type=_positive, default=10_000, help="step budget (default 10000)")
    p.add_argument("--depth-max", type=_positive, default=None,
                   help="stop after this many steps (caps --budget)")
    p.add_argument("--trace", action="store_true", help="include the orbit elements")

    p = add("check-e", "decide whether w is an Engel-type iterated identity of a group")
    _common(p, group=True, word=True)
    p.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto",
                   help="auto: exhaustive on finite groups, sampled otherwise")
    p.add_argument("--budget", type=_positive, default=10_000)
    p.add_argument("--sample-count", type=_positive, default=200)
    p.add_argument("--size-bound", type=_positive, default=8)

    p = add("check-s", "run the S-type value-set recursion")
    _common(p, group=True, word=True, tuple_=True)
    p.add_argument("--depth-max", type=_positive, default=12, help="level budget (default 12)")

    p = add("depth", "exact iterational depth s(w,G) on a finite group")
    _common(p, group=True, word=True)

    p = add("decompose", "u.v and nilpotent decompositions of a word")
    _common(p, word=True)

    p = add("solvable", "solvability test through a named word, checked against the derived series")
    _common(p, group=True)
    p.add_argument("--word-name", choices=SOLVABILITY_WORDS, default="w_BWW")
    p.add_argument("--budget", type=_positive, default=None)
    p.add_argument("--sample-count", type=_positive, default=200)
    p.add_argument("--size-bound", type=_positive, default=8)

    p = add("reproduce", "run a named experiment, or 'all'")
    _common(p)
    p.add_argument("name", help="experiment name or 'all'")
    p.add_argument("--param", action="append", default=[], metavar="KEY=JSON",
                   help="override a parameter, value parsed as JSON")

    p = add("list", "list experiments and named words")
    _common(p)
    return parser


# command implementations: each returns (inputs, result, exit_code, text)

def _word(args):
    if getattr(args, "word_name", None):
        try:
            return named_word(args.word_name)
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc).strip('"')) from None
    return parse_word(args.word, getattr(args, "arity", None))


def _tuple(group, items, need: int | None = None, word=None):
    items = items or []
    if need is not None and len(items) < need:
        raise UsageError(f"word {word} has arity {need} but {len(items)} tuple entries "
                         f"were given")
    return [group.parse_element(t) for t in items]


def _verdict_code(status):
    return {HOLDS: EXIT_OK, FAILS: EXIT_FAILS, INCONCLUSIVE: EXIT_INCONCLUSIVE}[status]


def cmd_parse(args):
    w = _word(args)
    result = {"word": render_word(w), "arity": w.arity,
              "syllables": [list(s) for s in w.syllables],
              "exponent_sums": [exponent_sum(w, i) for i in range(1, w.arity + 1)]}
    return {"word": args.word or args.word_name}, result, EXIT_OK, render_word(w)


def cmd_eval(args):
    G = make_group(args.group)
    w = _word(args)
    tup = _tuple(G, args.tuple, w.arity, w)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        value = evaluate(w, G, tup)
    text = G.render(value)
    inputs = {"group": args.group, "word": str(w), "tuple": args.tuple}
    return inputs, {"value": text, "is_identity": G.is_identity(value)}, EXIT_OK, text


def cmd_iterate(args):
    w = _word(args)
    try:
        out = engel_iterate(w, args.n) if args.scheme == "e" else s_iterate(w, args.n)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from None
    text = render_word(out)
    inputs = {"word": str(w), "n": args.n, "scheme": args.scheme}
    return inputs, {"word": text, "arity": out.arity, "length": len(out)}, EXIT_OK, text


def cmd_orbit(args):
    G = make_group(args.group)
    w = _word(args)
    tup = _tuple(G, args.tuple, w.arity, w)
    budget = min(args.budget, args.depth_max) if args.depth_max else args.budget
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = verbal_orbit(w, G, tup[0], tup[1:w.arity], budget=budget, trace=args.trace)
    code = {"ReachesIdentity": EXIT_OK, "EntersCycle": EXIT_FAILS}.get(rep.outcome,
                                                                       EXIT_INCONCLUSIVE)
    lines = [str(rep)] + [f"  {i}: {x}" for i, x in enumerate(rep.trace or ())]
    inputs = {"group": args.group, "word": str(w), "tuple": args.tuple, "budget": budget}
    return inputs, rep.to_dict(), code, "\n".join(lines)


def cmd_check_e(args):
    G = make_group(args.group)
    w = _word(args)
    mode = args.mode
    if mode == "auto":
        mode = "exhaustive" if G.is_finite else "sampled"
    v = check_e_identity(w, G, mode=mode, seed=args.seed, count=args.sample_count,
                         size_bound=args.size_bound, budget=args.budget, workers=args.workers)
    d = v.to_dict()
    text = [f"{v.status} ({v.mode}): {v.tuples_checked} tuples, max depth {v.max_depth_seen}"]
    if d.get("witness"):
        text.append(f"witness: {d['witness']}")
    if v.certificate:
        text.append(f"certificate: {v.certificate}")
    inputs = {"group": args.group, "word": str(w), "mode": mode, "budget": args.budget,
              "sample_count": args.sample_count, "size_bound": args.size_bound}
    return inputs, d, _verdict_code(v.status), "\n".join(text)


def cmd_check_s(args):
    G = make_group(args.group)
    w = _word(args)
    base = _tuple(G, args.tuple) if args.tuple else None
    if base is None and not G.is_finite:
        raise UsageError(f"{args.group} is infinite: pass the base tuple with --tuple")
    v, trace = check_s_identity(w, G, base=base, budget_levels=args.depth_max)
    result = {"verdict": v.to_dict(), "trace": trace.to_dict()}
    text = f"{v.status} ({v.mode}) value-set sizes {trace.sizes}"
    if v.certificate:
        text += f"\ncertificate: {v.certificate}"
    inputs = {"group": args.group, "word": str(w), "tuple": args.tuple,
              "depth_max": args.depth_max}
    return inputs, result, _verdict_code(v.status), text


def cmd_depth(args):
    w = _word(args)
    rep = depth_e(w, args.group, workers=args.workers)
    d = rep.to_dict()
    code = EXIT_OK if rep.is_iterated_identity else EXIT_FAILS
    text = f"s(w,G) = {d['s_value']}"
    if rep.argmax_tuple:
        text += f"\nargmax tuple: {d['argmax_tuple']}"
    return {"group": args.group, "word": str(w)}, d, code, text


def cmd_decompose(args):
    w = _word(args)
    uv = decompose_uv(w)
    nil = decompose_nilpotent(w)
    result = {
        "word": str(w),
        "uv": {"conjugate_powers": [[str(a), l] for a, l in uv.conjugate_powers],
               "tail": str(uv.tail), "u": str(uv.u())},
        "nilpotent": {"commutator_terms": [[l, str(u), s] for l, u, s in nil.commutator_terms],
                      "r": nil.r, "tail": str(nil.tail)},
    }
    text = "\n".join([
        f"u = {uv.u()}",
        f"v = {uv.tail}",
        "conjugate powers: " + ", ".join(f"({a}) x1^{l} ({a})^-1"
                                         for a, l in uv.conjugate_powers),
        f"nilpotent: r = {nil.r}, v = {nil.tail}, terms (l, u, s) = "
        + ", ".join(f"({l}, {u}, {s})" for l, u, s in nil.commutator_terms),
    ])
    return {"word": str(w)}, result, EXIT_OK, text


def cmd_solvable(args):
    try:
        res = solvability_by_word(args.group, args.word_name, budget=args.budget,
                                  seed=args.seed, sample_count=args.sample_count,
                                  size_bound=args.size_bound, workers=args.workers)
    except SolvabilityMismatch as exc:
        raise UsageError(f"internal disagreement: {exc}") from None
    d = res.to_dict()
    text = [f"{args.group}: {'solvable' if res.solvable else 'not solvable'} "
            f"({res.verdict.status}, derived length {res.derived_length})"]
    if d["verdict"].get("witness"):
        text.append(f"witness: {d['verdict']['witness']}")
    inputs = {"group": args.group, "word_name": args.word_name}
    return inputs, d, _verdict_code(res.verdict.status), "\n".join(text)


def cmd_reproduce(args):
    params = {}
    for item in args.param:
        key, sep, raw = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects KEY=JSON, got {item!r}")
        try:
            params[key] = json.loads(raw)
        except json.JSONDecodeError:
            params[key] = raw
    if args.name == "all":
        if params:
            raise UsageError("--param cannot be combined with 'all'")
        reports = [run_experiment(n, None, args.seed, args.workers, args.timing)
                   for n, _ in list_experiments()]
        passed = all(r.passed for r in reports)
        result = {"passed": passed, "reports": [r.to_dict() for r in reports]}
        width = max(len(r.name) for r in reports)
        lines = [f"{r.name:<{width}}  {'pass' if r.passed else 'FAIL'}"
                 + (f"  {r.duration_ms} ms" if r.duration_ms is not None else "")
                 for r in reports]
        lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} passed")
    else:
        r = run_experiment(args.name, params, args.seed, args.workers, args.timing)
        passed = r.passed
        result = r.to_dict()
        lines = [f"{r.name}: {'pass' if r.passed else 'FAIL'}",
                 json.dumps(r.evidence, indent=2, sort_keys=True)]
    inputs = {"name": args.name, "params": params}
    return inputs, result, EXIT_OK if passed else EXIT_FAILS, "\n".join(lines)


def cmd_list(args):
    exps = [{"name": n, "summary": s} for n, s in list_experiments()]
    words = {name: str(named_word(name)) for name, (_, ps) in sorted(NAMED_WORDS.items())
             if not ps}
    lines = ["experiments:"] + [f"  {e['name']:<32} {e['summary']}" for e in exps]
    lines += ["named words:"] + [f"  {k:<10} {v}" for k, v in words.items()]
    return {}, {"experiments": exps, "named_words": words}, EXIT_OK, "\n".join(lines)


COMMANDS = {"parse": cmd_parse, "eval": cmd_eval, "iterate": cmd_iterate, "orbit": cmd_orbit,
            "check-e": cmd_check_e, "check-s": cmd_check_s, "depth": cmd_depth,
            "decompose": cmd_decompose, "solvable": cmd_solvable,
            "reproduce": cmd_reproduce, "list": cmd_list}


def _emit(args, inputs, result, duration_ms):
    doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "inputs": inputs,
           "result": result, "seed": args.seed, "duration_ms": duration_ms}
    print(json.dumps(doc, indent=2, sort_keys=True))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.seed is None:
        args.seed = _default_seed()
    start = time.perf_counter()
    try:
        inputs, result, code, text = COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError) as exc:
        # ValueError covers word syntax, arity, group and experiment errors
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        if args.json:
            _emit(args, {}, {"error": message}, None)
        print(f"iterid {args.command}: error: {message}", file=sys.stderr)
        return EXIT_USAGE
    duration = round((time.perf_counter() - start) * 1000) if args.timing else None
    if args.json:
        _emit(args, inputs, result, duration)
    else:
        print(text)
        if duration is not None:
            print(f"({duration} ms)")
    return code


if __name__ == "__main__":
    sys.exit(main())
