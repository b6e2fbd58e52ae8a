from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from softtop import (
    Context,
    EmptyCarrier,
    InvalidTopology,
    SoftPoint,
    SoftSet,
    SoftTopology,
    TooLarge,
    closed_family,
    closure,
    crisp,
    crisp_slice,
    discrete,
    generate,
    indiscrete,
    is_neighborhood,
    is_open_via_neighborhoods,
    is_t0,
    is_t1,
    is_t2,
    join,
    meet,
    points_closed,
    relative,
    separation_trace,
    to_product_topology,
    validate,
)
from softtop.topology import generate_bits, is_topology_bits

from conftest import contexts

CTX = Context(("h1", "h2", "h3"), ("e1", "e2"))


def S(e1=(), e2=(), ctx=CTX):
    return SoftSet.from_rows(ctx, {"e1": e1, "e2": e2})


X = ("h1", "h2", "h3")


@st.composite
def topologies(draw, ctx=None):
    ctx = ctx or draw(contexts)
    seeds = draw(st.lists(st.integers(0, ctx.full), max_size=4))
    return SoftTopology(ctx, generate_bits(ctx.full, seeds))


# -- the chain topology and its non-topology sibling ---------------------------


def test_chain_topology_pairwise_table(workspace):
    ws = workspace("soft_topology")
    fam = ws.family("tau")
    assert validate(ws.context, fam).valid
    names = ["NULL", "ABS", "F1", "F2", "F3", "F4"]
    table = {}
    for a, b in combinations(names, 2):
        A, B = ws.soft_set(a), ws.soft_set(b)
        table[a, b] = (ws.name_of(A | B), ws.name_of(A & B))
    # F1 < F2 < F3 < F4, so unions take the larger and intersections the smaller
    rank = {n: i for i, n in enumerate(["NULL", "F1", "F2", "F3", "F4", "ABS"])}
    for (a, b), (u, i) in table.items():
        assert u == max(a, b, key=rank.__getitem__)
        assert i == min(a, b, key=rank.__getitem__)


def test_chain_topology_closure_and_closed_sets(workspace):
    ws = workspace("soft_topology")
    T = ws.topology("tau")
    # no proper closed set contains F1
    assert closure(T, ws.soft_set("F1")) == SoftSet(CTX, CTX.full)
    assert [F.rows() for F in closed_family(T)] == [
        {"e1": (), "e2": ()},
        {"e1": ("h3",), "e2": ()},
        {"e1": ("h3",), "e2": ("h2",)},
        {"e1": ("h3",), "e2": ("h2", "h3")},
        {"e1": ("h1", "h3"), "e2": ("h2", "h3")},
        {"e1": X, "e2": X},
    ]


def test_non_topology_reports_every_violation(workspace):
    ws = workspace("non_topology")
    rep = validate(ws.context, ws.family("alpha"))
    assert not rep.valid
    first = rep.violation
    assert first.axiom == "intersection"
    assert {ws.name_of(F) for F in first.operands} == {"F2", "F3"}
    assert first.missing == S(["h2"], ["h1", "h2"])
    found = [(v.axiom, {ws.name_of(F) for F in v.operands}, v.missing) for v in rep.violations]
    assert found == [
        ("intersection", {"F2", "F3"}, S(["h2"], ["h1", "h2"])),
        ("union", {"F2", "F4"}, S(["h2", "h3"], X)),
        ("union", {"F3", "F4"}, S(["h1", "h2"], X)),
        ("union", {"F2", "F3"}, S(X, ["h1", "h2"])),
    ]
    with pytest.raises(InvalidTopology):
        ws.topology("alpha")


def test_missing_null_or_absolute():
    rep = validate(CTX, [S(["h1"]), SoftSet(CTX, CTX.full)])
    assert rep.violation.axiom == "null"
    rep = validate(CTX, [SoftSet(CTX, 0)])
    assert rep.violation.axiom == "absolute"


# -- meet, union and supremum of two topologies ------------------------------


def test_meet_of_two_topologies(workspace):
    ws = workspace("two_topologies")
    M = meet([ws.topology("tau1"), ws.topology("tau2")])
    assert set(M.members) == {0, CTX.full, ws.soft_set("F1").bits}


def test_plain_union_is_not_a_topology(workspace):
    ws = workspace("two_topologies")
    rep = validate(ws.context, ws.family("union"))
    H = S(X, ["h1", "h3"])
    assert [v.missing for v in rep.violations] == [H]
    assert rep.violation.axiom == "union"
    assert {ws.name_of(F) for F in rep.violation.operands} == {"F2", "G3"}
    # every producer of H among the union's members
    members = {ws.name_of(F): F for F in ws.family("union")}
    producers = {frozenset((a, b)) for a, b in combinations(members, 2) if members[a] | members[b] == H}
    assert producers == {frozenset(("F2", "G3")), frozenset(("F3", "G3"))}


def test_supremum_adds_one_set(workspace):
    ws = workspace("two_topologies")
    sup = join([ws.topology("tau1"), ws.topology("tau2")])
    expected = {ws.soft_set(n).bits for n in ["NULL", "ABS", "F1", "F2", "F3", "F4", "G2", "G3"]}
    assert set(sup.members) == expected | {S(X, ["h1", "h3"]).bits}
    assert len(sup) == 9


def test_generate_from_seeds():
    T = generate(CTX, [S(["h1"]), S(["h2"])])
    assert set(T.members) == {0, CTX.full, S(["h1"]).bits, S(["h2"]).bits, S(["h1", "h2"]).bits}
    assert generate(CTX, []).members == indiscrete(CTX).members


def test_discrete_and_indiscrete():
    assert len(indiscrete(CTX)) == 2
    assert len(discrete(CTX)) == 64
    with pytest.raises(TooLarge):
        discrete(Context.of_size(7, 3))


# -- slices, product, relative --------------------------------------------------


def test_crisp_slices_of_chain(workspace):
    T = workspace("soft_topology").topology("tau")
    assert crisp_slice(T, "e1") == (frozenset(), frozenset({"h2"}), frozenset({"h1", "h2"}), frozenset(X))
    assert crisp_slice(T, "e2") == (frozenset(), frozenset({"h1"}), frozenset({"h1", "h3"}), frozenset(X))


def test_product_of_non_topology_is_not_a_topology(workspace):
    ws = workspace("non_topology")
    points, graphs = to_product_topology(ws.family("alpha"), ws.context)
    assert len(points) == 6
    assert not crisp.is_topology(points, graphs)


def test_relative_topology_on_two_points(workspace):
    T = workspace("soft_topology").topology("tau")
    R = relative(T, ["h1", "h2"])
    Y = R.context
    assert Y.universe == ("h1", "h2")
    rows = sorted(tuple(sorted(F.rows().items())) for F in R.opens)
    assert rows == sorted([
        (("e1", ()), ("e2", ())),
        (("e1", ("h2",)), ("e2", ("h1",))),
        (("e1", ("h1", "h2")), ("e2", ("h1",))),
        (("e1", ("h1", "h2")), ("e2", ("h1", "h2"))),
    ])
    with pytest.raises(EmptyCarrier):
        relative(T, [])


# -- separation ----------------------------------------------------------------


def test_separation_of_chain(workspace):
    T = workspace("soft_topology").topology("tau")
    t0 = is_t0(T)
    assert not t0
    assert [str(p) for p in t0.witness] == ["(h2,e1)", "(h1,e2)"]
    assert not is_t1(T) and not is_t2(T)
    assert not points_closed(T)


def test_discrete_separates_everything():
    T = discrete(CTX)
    assert is_t0(T) and is_t1(T) and is_t2(T) and points_closed(T)


def test_trace_matches_verdict(workspace):
    T = workspace("soft_topology").topology("tau")
    for ax in ("t0", "t1", "t2"):
        steps = separation_trace(CTX, T.members, ax)
        assert all(s[2] is not None for s in steps) == bool({"t0": is_t0, "t1": is_t1, "t2": is_t2}[ax](T))
    assert len(separation_trace(CTX, T.members, "t0")) == 15
    assert len(separation_trace(CTX, T.members, "t1")) == 30


def test_neighbourhoods():
    T = generate(CTX, [S(["h1"])])
    p = SoftPoint.of(CTX, "h1", "e1")
    assert is_neighborhood(T, S(["h1", "h2"]), p)
    assert not is_neighborhood(T, S(["h2"], ["h1"]), p)
    assert is_open_via_neighborhoods(T, S(["h1"]))
    assert not is_open_via_neighborhoods(T, S(["h1", "h2"]))


# -- properties -----------------------------------------------------------------


@given(topologies())
def test_generated_families_validate(T):
    assert validate(T.context, T.opens).valid
    assert is_topology_bits(T.context.full, T.members)


@given(topologies(), st.data())
def test_closure_is_smallest_closed_superset(T, data):
    F = SoftSet(T.context, data.draw(st.integers(0, T.context.full)))
    C = closure(T, F)
    assert F <= C
    assert closure(T, C) == C
    assert C in closed_family(T)
    assert all(C <= K for K in closed_family(T) if F <= K)


@given(topologies(), topologies())
def test_meet_and_join_bound_their_arguments(T, U):
    U = SoftTopology(T.context, generate_bits(T.context.full, [b & T.context.full for b in U.members]))
    M, J = meet([T, U]), join([T, U])
    assert M.members <= T.members <= J.members
    assert M.members <= U.members <= J.members
    assert validate(T.context, M.opens).valid and validate(T.context, J.opens).valid


@given(contexts, st.data())
def test_product_agrees_with_validation(ctx, data):
    fam = [SoftSet(ctx, b) for b in data.draw(st.lists(st.integers(0, ctx.full), max_size=6))]
    points, graphs = to_product_topology(fam, ctx)
    assert crisp.is_topology(points, graphs) == validate(ctx, fam).valid


@given(topologies(), st.data())
def test_relative_is_topology(T, data):
    V = data.draw(st.sets(st.sampled_from(T.context.universe), min_size=1))
    R = relative(T, V)
    assert validate(R.context, R.opens).valid


@given(topologies())
def test_t1_iff_points_closed(T):
    assert bool(is_t1(T)) == points_closed(T)
