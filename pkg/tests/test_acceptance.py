"""Acceptance criteria 1-7; each test prints one PASS/FAIL line with its runtime."""

import io
import json
import os
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import combinations
from pathlib import Path

import pytest

from softtop import (
    Context,
    SoftPoint,
    SoftSet,
    closure,
    crisp,
    crisp_n_slice,
    is_n_open,
    join,
    make_nspace,
    meet,
    n_subspace,
    nwise_t0,
    permissive_nwise,
    relative,
    separation_trace,
    to_product_topology,
    validate,
)
from softtop import oracle
from softtop.cli import run
from softtop.oracle import EnumerationBudget, check_proposition, enumerate_topologies, exhaustive_contexts
from softtop.workspace import from_dict, load

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"
RECORDS = ROOT / "records"


@contextmanager
def criterion(capsys, number, title, limit):
    """Print ``criterion N: PASS|FAIL (t s, limit s) title`` whatever happens inside."""
    # time from cold: drop every memoised enumeration first
    for value in vars(oracle).values():
        if hasattr(value, "cache_clear"):
            value.cache_clear()
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < limit
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\ncriterion {number}: {status} ({elapsed:.2f}s, limit {limit}s) {title}")
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def ws(name):
    return load(FIX / f"{name}.json")


def rows(F):
    return {e: set(xs) for e, xs in F.rows().items()}


# -- 1 -------------------------------------------------------------------------


def test_golden_fixtures(capsys):
    with criterion(capsys, 1, "golden fixtures reproduce the computed examples", 1.0):
        # chain topology validates, with every pairwise union and intersection inside it
        w = ws("soft_topology")
        fam = w.family("tau")
        assert validate(w.context, fam).valid
        names = ["NULL", "ABS", "F1", "F2", "F3", "F4"]
        for a, b in combinations(names, 2):
            A, B = w.soft_set(a), w.soft_set(b)
            assert w.name_of(A | B) in names and w.name_of(A & B) in names

        # meet and the plain union of two topologies
        w = ws("two_topologies")
        t1, t2 = w.topology("tau1"), w.topology("tau2")
        X = set(w.context.universe)
        assert {w.name_of(F) for F in meet([t1, t2]).opens} == {"NULL", "ABS", "F1"}
        rep = validate(w.context, w.family("union"))
        assert not rep.valid
        assert rows(rep.violation.missing) == {"e1": X, "e2": {"h1", "h3"}}

        # supremum: the eight old members plus H
        sup = join([t1, t2])
        old = {"NULL", "ABS", "F1", "F2", "F3", "F4", "G2", "G3"}
        assert {w.name_of(F) for F in sup.opens} == old | {None}
        (H,) = [F for F in sup.opens if w.name_of(F) is None]
        assert rows(H) == {"e1": X, "e2": {"h1", "h3"}}
        assert len(sup) == 9

        # relative topology on {h1, h2}
        R = relative(ws("soft_topology").topology("tau"), ["h1", "h2"])
        assert sorted(map(rows, R.opens), key=str) == sorted([
            {"e1": set(), "e2": set()},
            {"e1": {"h2"}, "e2": {"h1"}},
            {"e1": {"h1", "h2"}, "e2": {"h1"}},
            {"e1": {"h1", "h2"}, "e2": {"h1", "h2"}},
        ], key=str)

        # four-topology space: H is not N-open
        w = ws("four_space")
        S = make_nspace(w.context, [w.topology(t) for t in ("tau1", "tau2", "tau3", "tau4")])
        H = w.soft_set("F4") | w.soft_set("F7")
        assert rows(H) == {"e1": {"h4", "h5", "h7"}, "e2": {"h4", "h7"}, "e3": {"h6", "h8"}}
        assert not is_n_open(S, H)

        # the twelve crisp slices
        U = frozenset(w.context.universe)

        def fam(*sets):
            return {frozenset(), U, *(frozenset(s) for s in sets)}

        expected = {
            "e1": [fam({"h1"}, {"h1", "h2"}), fam({"h3"}), fam({"h4"}, {"h4", "h5"}),
                   fam({"h5", "h7"}, {"h5", "h7", "h8"})],
            "e2": [fam({"h2", "h4"}, {"h2", "h4", "h6"}), fam({"h4"}), fam({"h4"}, {"h4", "h6"}), fam({"h7"})],
            "e3": [fam({"h3"}, {"h2", "h3"}), fam({"h5"}), fam({"h6"}, {"h6", "h8"}, {"h5", "h6", "h8"}),
                   fam({"h6", "h8"}, {"h6", "h7", "h8"})],
        }
        assert {e: [set(s) for s in crisp_n_slice(S, e)] for e in expected} == expected

        # N-subspace on {h1, h3, h4, h5, h8}
        Y = ["h1", "h3", "h4", "h5", "h8"]
        sub = n_subspace(S, Y)

        def R(e1, e2, e3):
            return SoftSet.from_rows(sub.context, {"e1": e1, "e2": e2, "e3": e3}).bits

        full = sub.context.full
        assert [set(T.members) for T in sub.topologies] == [
            {0, full, R(["h1"], ["h4"], ["h3"])},
            {0, full, R(["h3"], ["h4"], ["h5"])},
            {0, full, R(["h4"], ["h4"], []), R(["h4", "h5"], ["h4"], ["h8"]), R(Y, ["h4"], ["h5", "h8"])},
            {0, full, R(["h5"], [], ["h8"]), R(["h5", "h8"], Y, ["h8"])},
        ]

        # not 2-wise T0, witness pair, and a 2-wise T0 subspace
        w = ws("hereditary")
        S = make_nspace(w.context, [w.topology("tau1"), w.topology("tau2")])
        res = nwise_t0(S)
        assert not res
        assert [p.label for p in res.witness] == [("h2", "e1"), ("h1", "e2")]
        assert nwise_t0(n_subspace(S, ["h1", "h3"]))

        # closure in the chain topology
        w = ws("soft_topology")
        assert closure(w.topology("tau"), w.soft_set("F1")).bits == w.context.full


# -- 2 -------------------------------------------------------------------------


def _cli(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], out, io.StringIO())
    return code, out.getvalue()


def test_documented_discrepancies(capsys):
    with criterion(capsys, 2, "raw second family fails validation; permissive verdict recorded", 1.0):
        w = ws("converse_t0")
        rep = validate(w.context, w.family("tau2"))
        assert not rep.valid
        v = rep.violation
        assert v.axiom == "intersection"
        assert {w.name_of(F) for F in v.operands} == {"F2", "F4"}
        assert rows(v.missing) == {"e1": set(), "e2": {"h3"}}

        # permissive 2-wise T0 over the raw families, with its trace on record
        fams = [w.family("tau1"), w.family("tau2")]
        verdict = permissive_nwise(w.context, fams, "t0")
        assert verdict.holds
        argv = ["separation", "-f", FIX / "converse_t0.json", "--space", "tau1,tau2", "--axiom", "t0",
                "--permissive", "--trace"]
        code, text = _cli(*argv)
        assert code == 0
        assert text == (RECORDS / "converse_t0_permissive_t0.txt").read_text(encoding="utf-8")
        code, text = _cli(*argv, "--json")
        assert text == (RECORDS / "converse_t0_permissive_t0.json").read_text(encoding="utf-8")
        assert len(json.loads(text)["result"]["trace"]) == 15

        # (h1,e2) and (h3,e2) are separated by F2
        x = SoftPoint.of(w.context, "h1", "e2")
        y = SoftPoint.of(w.context, "h3", "e2")
        F2 = w.soft_set("F2")
        assert F2.bits & y.bit and not F2.bits & x.bit
        pooled = {F.bits for f in fams for F in f}
        trace = {(a.label, b.label): found for a, b, found in separation_trace(w.context, pooled, "t0")}
        assert trace[("h1", "e2"), ("h3", "e2")] is not None


# -- 3 -------------------------------------------------------------------------


def test_exhaustive_laws(capsys):
    with criterion(capsys, 3, "soft set laws over all 16 sets at n=2, m=2", 5.0):
        ctx = Context.of_size(2, 2)
        sets = [SoftSet(ctx, b) for b in range(ctx.full + 1)]
        null, absolute = sets[0], sets[-1]
        triples = 0
        for F in sets:
            assert F | F == F and F & F == F
            assert F | null == F and F & absolute == F and F & null == null and F | absolute == absolute
            assert F | ~F == absolute and F & ~F == null and ~~F == F
            assert F - F == null and F - null == F and null - F == null and F - absolute == null
            for G in sets:
                assert F | G == G | F and F & G == G & F
                assert F | (F & G) == F and F & (F | G) == F
                assert ~(F | G) == ~F & ~G and ~(F & G) == ~F | ~G
                assert F - G == F & ~G
                assert (F <= G) == (F & G == F) == (F | G == G) == (~G <= ~F)
                for H in sets:
                    triples += 1
                    assert (F | G) | H == F | (G | H) and (F & G) & H == F & (G & H)
                    assert F | (G & H) == (F | G) & (F | H)
                    assert F & (G | H) == (F & G) | (F & H)
                    assert F - (G | H) == (F - G) & (F - H)
                    assert F - (G & H) == (F - G) | (F - H)
                    if F <= G and G <= H:
                        assert F <= H
        assert triples == 4096
        # generalized forms over every family of up to three sets
        for r in (1, 2, 3):
            for fam in combinations(sets, r):
                big_u, big_i = null, absolute
                for G in fam:
                    big_u, big_i = big_u | G, big_i & G
                not_u, not_i = absolute, null
                for G in fam:
                    not_u, not_i = not_u & ~G, not_i | ~G
                assert ~big_u == not_u and ~big_i == not_i
                for F in sets:
                    dist = null
                    for G in fam:
                        dist = dist | (F & G)
                    assert F & big_u == dist


# -- 4 -------------------------------------------------------------------------


def test_oracle_equivalence(capsys):
    with criterion(capsys, 4, "validate agrees with the product-space check on every family, m*n <= 4", 60.0):
        counts = {}
        for ctx in exhaustive_contexts(EnumerationBudget()):
            sets = [SoftSet(ctx, b) for b in range(ctx.full + 1)]
            valid = 0
            for mask in range(1 << len(sets)):
                fam = [sets[i] for i in range(len(sets)) if mask >> i & 1]
                ok = validate(ctx, fam).valid
                points, graphs = to_product_topology(fam, ctx)
                assert ok == crisp.is_topology(points, graphs), (ctx, mask)
                valid += ok
            enumerated = enumerate_topologies(ctx)
            assert len(enumerated) == valid
            counts.setdefault(ctx.cells, set()).add(valid)
        recomputed = {k: crisp.count_topologies(k) for k in (1, 2, 3, 4)}
        assert recomputed == {1: 1, 2: 4, 3: 29, 4: 355}
        assert counts == {k: {v} for k, v in recomputed.items()}


# -- 5 -------------------------------------------------------------------------

REGISTRY_CHECKS = [
    "t1-iff-points-closed",
    "closed-family",
    "meet-is-topology",
    "neighborhood-axioms",
    "open-iff-neighborhood",
    "closure-properties",
    "closure-operators",
    "separation-chain",
    "componentwise-implies-nwise",
    "nwise-implies-supremum",
    "nwise-hereditary",
    "nwise-chain",
]


def test_proposition_registry(capsys):
    with criterion(capsys, 5, "registry checks pass exhaustively and over 5000 random spaces", 120.0):
        budget = EnumerationBudget(seed=0, trials=5000, n=3, m=2, max_n=3)
        reports = [check_proposition(name, budget) for name in REGISTRY_CHECKS]
        with capsys.disabled():
            for rep in reports:
                print(f"  {rep.line()}")
                if not rep.passed:
                    print(json.dumps(rep.fixture, indent=2))
        assert all(rep.passed for rep in reports)


# -- 6 -------------------------------------------------------------------------


def test_negative_searches(capsys):
    with criterion(capsys, 6, "searches find a non-topology union and a 2-wise T0 space without T0 parts", 30.0):
        budget = EnumerationBudget(seed=0, trials=5000, n=3, m=2)
        a = check_proposition("union-not-topology", budget)
        b = check_proposition("nwise-t0-without-t0-component", budget)
        assert a.passed and b.passed

        w = from_dict(a.fixture)
        assert validate(w.context, w.family("tau1")).valid and validate(w.context, w.family("tau2")).valid
        assert not validate(w.context, w.family("tau1") + w.family("tau2")).valid

        w = from_dict(b.fixture)
        S = make_nspace(w.context, [w.topology("tau1"), w.topology("tau2")])
        assert nwise_t0(S)
        assert not any(nwise_t0(make_nspace(w.context, [T])) for T in S.topologies)


# -- 7 -------------------------------------------------------------------------

F = {name: str(FIX / f"{name}.json") for name in
     ("soft_topology", "non_topology", "two_topologies", "four_space", "converse_t0", "hereditary", "sub_soft_set")}

COMMANDS = [
    ["validate", "-f", F["soft_topology"], "-t", "tau"],
    ["validate", "-f", F["converse_t0"], "-t", "tau2"],
    ["meet", "-f", F["two_topologies"], "-t", "tau1", "-t", "tau2"],
    ["sup", "-f", F["two_topologies"], "-t", "tau1", "-t", "tau2"],
    ["generate", "-f", F["two_topologies"], "-s", "F2,G3"],
    ["subspace", "-f", F["four_space"], "--space", "tau1,tau2,tau3,tau4", "--carrier", "h1,h3,h4,h5,h8"],
    ["subspace", "-f", F["soft_topology"], "-t", "tau", "--carrier", "h1,h2"],
    ["crisp", "-f", F["four_space"], "--space", "tau1,tau2,tau3,tau4"],
    ["product", "-f", F["non_topology"], "-t", "alpha"],
    ["closure", "-f", F["soft_topology"], "-t", "tau", "-s", "F1"],
    ["points", "-f", F["sub_soft_set"], "-s", "F"],
    ["separation", "-f", F["hereditary"], "--space", "tau1,tau2", "--axiom", "t0", "--trace"],
    ["separation", "-f", F["converse_t0"], "--space", "tau1,tau2", "--axiom", "t0", "--permissive"],
    ["implications", "-f", F["four_space"], "--space", "tau1,tau2,tau3,tau4"],
    ["oracle", "--prop", "union-not-topology", "--trials", "100"],
]
ROUND_TRIP = {"meet", "sup", "generate", "subspace"}


def _invoke(argv, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    return subprocess.run([sys.executable, "-m", "softtop", *argv], capture_output=True, env=env, cwd=ROOT)


def test_cli_determinism(capsys):
    with criterion(capsys, 7, "every subcommand twice gives byte-identical output; JSON results load", 60.0):
        for argv in COMMANDS:
            for extra in ([], ["--json"]):
                first = _invoke(argv + extra, 1)
                second = _invoke(argv + extra, 2)
                assert first.returncode in (0, 1), first.stderr.decode()
                assert first.stdout == second.stdout, argv + extra
                assert first.returncode == second.returncode
                if extra and argv[0] in ROUND_TRIP:
                    doc = json.loads(first.stdout)["result"]
                    w = from_dict(doc)
                    assert from_dict(json.loads(json.dumps(w.to_dict()))).to_dict() == doc
                    for name in w.named_topologies:
                        w.topology(name)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
