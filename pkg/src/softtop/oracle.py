"""Brute-force enumeration, seeded random generation and the proposition registry.

Every registered check quantifies a law over (a) every structure on every
context with at most ``budget.exhaustive_cells`` cells and (b)
``budget.trials`` seeded random structures on an ``n x m`` context.  Checks
marked as searches instead look for an example of a phenomenon and pass when
one is found.  Failures and found examples carry a workspace document that can
be saved and replayed through the CLI.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Iterable, Iterator

from . import crisp
from .ntopology import SoftNSpace, check_implications, is_n_closed, is_n_open, n_subspace, nwise
from .softset import (
    Context,
    SoftPoint,
    SoftSet,
    SoftSetError,
    absolute_soft_set,
    all_soft_points,
    big_intersection,
    big_union,
    complement,
    constant_soft_set,
    difference,
    intersection,
    is_subset,
    null_soft_set,
    point_in,
    restrict,
    soft_points_of,
    softpoint_in,
    union,
)
from .topology import (
    SoftTopology,
    closed_family,
    closure,
    crisp_slice,
    generate_bits,
    is_neighborhood,
    is_open_via_neighborhoods,
    is_t0,
    is_t1,
    is_t2,
    is_topology_bits,
    join,
    meet,
    points_closed,
    relative,
    separation_bits,
    to_product_topology,
    validate,
)

EXHAUSTIVE_LIMIT = 4


class BudgetExceeded(SoftSetError, ValueError):
    pass


class UnknownProposition(SoftSetError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0])


@dataclass(frozen=True)
class EnumerationBudget:
    max_cells: int = 12
    max_families: int = 1 << 16
    seed: int = 0
    trials: int = 5000
    n: int = 3
    m: int = 2
    max_n: int = 3
    exhaustive_cells: int = EXHAUSTIVE_LIMIT

    def __post_init__(self) -> None:
        if self.exhaustive_cells > EXHAUSTIVE_LIMIT:
            raise BudgetExceeded(f"exhaustive topology enumeration is capped at {EXHAUSTIVE_LIMIT} cells")


DEFAULT_BUDGET = EnumerationBudget()


# -- enumeration -------------------------------------------------------------


def enumerate_soft_sets(ctx: Context, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[SoftSet]:
    if ctx.cells > budget.max_cells:
        raise BudgetExceeded(f"{ctx.cells} cells exceeds max_cells={budget.max_cells}")
    return [SoftSet(ctx, b) for b in range(ctx.full + 1)]


@lru_cache(maxsize=None)
def _topology_bits(cells: int) -> tuple[frozenset[int], ...]:
    """All topologies on a ``cells``-point set as packed families.

    Depth-first over the proper non-empty subsets.  Including a set checks its
    meets and joins with the members chosen so far: an already-decided result
    must be present, an undecided one becomes required; excluding a required
    set prunes the branch.
    """
    full = (1 << cells) - 1
    middle = list(range(1, full))
    pos = {s: i for i, s in enumerate(middle)}
    pos[0] = pos[full] = -1
    chosen: list[int] = [0, full]
    members = {0, full}
    required: dict[int, int] = {}
    out: list[frozenset[int]] = []

    def rec(i: int) -> None:
        if i == len(middle):
            out.append(frozenset(members))
            return
        s = middle[i]
        if not required.get(s):
            rec(i + 1)
        added = []
        ok = True
        for a in chosen:
            for c in (a & s, a | s):
                if c == s:
                    continue
                if pos[c] < i:
                    if c not in members:
                        ok = False
                        break
                else:
                    required[c] = required.get(c, 0) + 1
                    added.append(c)
            if not ok:
                break
        if ok:
            chosen.append(s)
            members.add(s)
            rec(i + 1)
            chosen.pop()
            members.discard(s)
        for c in added:
            required[c] -= 1

    if cells == 0:
        return (frozenset({0}),)
    rec(0)
    return tuple(sorted(out, key=lambda f: (len(f), sorted(f))))


def enumerate_topologies(ctx: Context, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[SoftTopology]:
    """Every soft topology on ``ctx`` (only for tiny contexts)."""
    if ctx.cells > min(budget.exhaustive_cells, EXHAUSTIVE_LIMIT):
        raise BudgetExceeded(f"exhaustive topology enumeration needs m*n <= {EXHAUSTIVE_LIMIT}")
    if 2 ** max(2 ** ctx.cells - 2, 0) > budget.max_families:
        raise BudgetExceeded("candidate family count exceeds max_families")
    return [SoftTopology(ctx, f) for f in _topology_bits(ctx.cells)]


def exhaustive_contexts(budget: EnumerationBudget = DEFAULT_BUDGET) -> list[Context]:
    out = []
    for cells in range(1, budget.exhaustive_cells + 1):
        for n in range(1, cells + 1):
            if cells % n == 0:
                out.append(Context.of_size(n, cells // n))
    return out


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent generator per trial so any single trial can be replayed."""
    return random.Random(f"{seed}:{trial}")


def random_soft_set(ctx: Context, rng: random.Random) -> SoftSet:
    return SoftSet(ctx, rng.getrandbits(ctx.cells))


def random_topology(ctx: Context, seed: int, k: int) -> SoftTopology:
    """Topology generated by ``k`` uniformly drawn soft sets."""
    rng = random.Random(seed)
    return SoftTopology(ctx, generate_bits(ctx.full, [rng.getrandbits(ctx.cells) for _ in range(k)]))


def _draw_topology(ctx: Context, rng: random.Random) -> SoftTopology:
    k = rng.randint(0, 4)
    return SoftTopology(ctx, generate_bits(ctx.full, [rng.getrandbits(ctx.cells) for _ in range(k)]))


@lru_cache(maxsize=8)
def _random_topologies(n: int, m: int, seed: int, trials: int) -> tuple[SoftTopology, ...]:
    ctx = Context.of_size(n, m)
    return tuple(_draw_topology(ctx, trial_rng(seed, t)) for t in range(trials))


@lru_cache(maxsize=8)
def _random_spaces(n: int, m: int, seed: int, trials: int, max_n: int) -> tuple[SoftNSpace, ...]:
    ctx = Context.of_size(n, m)
    out = []
    for t in range(trials):
        rng = trial_rng(seed, 10**9 + t)
        N = rng.randint(1, max_n)
        out.append(SoftNSpace(ctx, tuple(_draw_topology(ctx, rng) for _ in range(N))))
    return tuple(out)


def random_topologies(budget: EnumerationBudget) -> tuple[SoftTopology, ...]:
    return _random_topologies(budget.n, budget.m, budget.seed, budget.trials)


def random_spaces(budget: EnumerationBudget) -> tuple[SoftNSpace, ...]:
    return _random_spaces(budget.n, budget.m, budget.seed, budget.trials, budget.max_n)


def all_topologies(budget: EnumerationBudget) -> Iterator[SoftTopology]:
    """Exhaustive topologies on every tiny context, then the random sample."""
    for ctx in exhaustive_contexts(budget):
        yield from enumerate_topologies(ctx, budget)
    yield from random_topologies(budget)


def exhaustive_spaces(budget: EnumerationBudget, max_n: int = 2) -> Iterator[SoftNSpace]:
    """Every N-space with N <= ``max_n`` (as a multiset of topologies) on every tiny context."""
    for ctx in exhaustive_contexts(budget):
        tops = enumerate_topologies(ctx, budget)
        for N in range(1, max_n + 1):
            for combo in combinations_with_replacement(tops, N):
                yield SoftNSpace(ctx, combo)


def all_spaces(budget: EnumerationBudget) -> Iterator[SoftNSpace]:
    yield from exhaustive_spaces(budget)
    yield from random_spaces(budget)


# -- reports and fixtures ----------------------------------------------------


@dataclass
class PropositionReport:
    name: str
    description: str
    passed: bool
    cases: int = 0
    message: str = ""
    fixture: dict | None = None
    search: bool = False

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        kind = "found" if self.search and self.passed else ("searched" if self.search else "checked")
        text = f"{status} {self.name}: {kind} {self.cases} cases"
        return text + (f" - {self.message}" if self.message else "")


def fixture_document(
    ctx: Context,
    families: dict[str, Iterable[int]] | None = None,
    sets: dict[str, int] | None = None,
    note: str | None = None,
) -> dict:
    """Workspace document for a counterexample; unnamed members become ``S1, S2, ...``."""
    families = {k: sorted(set(v)) for k, v in (families or {}).items()}
    sets = dict(sets or {})
    names = {b: k for k, b in sets.items()}
    counter = 0
    for fam in families.values():
        for b in fam:
            if b in (0, ctx.full) or b in names:
                continue
            counter += 1
            names[b] = f"S{counter}"
    label = {0: "NULL", ctx.full: "ABS", **names}
    doc: dict = {}
    if note:
        doc["note"] = note
    doc["universe"] = list(ctx.universe)
    doc["parameters"] = list(ctx.parameters)
    doc["sets"] = {
        name: {e: list(xs) for e, xs in SoftSet(ctx, b).rows().items()}
        for b, name in names.items()
    }
    doc["topologies"] = {k: [label[b] for b in fam] for k, fam in families.items()}
    return doc


def _space_fixture(S: SoftNSpace, note: str) -> dict:
    return fixture_document(
        S.context, {f"tau{i + 1}": T.members for i, T in enumerate(S.topologies)}, note=note
    )


class _Failure(Exception):
    def __init__(self, message: str, fixture: dict | None = None):
        super().__init__(message)
        self.fixture = fixture


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    run: Callable[[EnumerationBudget], tuple[int, dict | None, str]]
    search: bool = False


REGISTRY: dict[str, Check] = {}


def register(name: str, description: str, search: bool = False):
    def deco(fn):
        REGISTRY[name] = Check(name, description, fn, search)
        return fn

    return deco


def check_proposition(name: str, budget: EnumerationBudget = DEFAULT_BUDGET) -> PropositionReport:
    try:
        check = REGISTRY[name]
    except KeyError:
        raise UnknownProposition(f"unknown proposition {name!r}; known: {', '.join(sorted(REGISTRY))}") from None
    try:
        cases, fixture, message = check.run(budget)
    except _Failure as fail:
        return PropositionReport(name, check.description, False, message=str(fail),
                                 fixture=fail.fixture, search=check.search)
    if check.search and fixture is None:
        return PropositionReport(name, check.description, False, cases,
                                 message="no example found within budget", search=True)
    return PropositionReport(name, check.description, True, cases, message, fixture, check.search)


# -- soft set algebra --------------------------------------------------------


def _law_sets(budget: EnumerationBudget) -> Iterator[list[SoftSet]]:
    """Blocks of soft sets: every set at 2x2, then random sets at n x m."""
    ctx = Context.of_size(2, 2)
    yield enumerate_soft_sets(ctx, budget)
    rctx = Context.of_size(budget.n, budget.m)
    rng = random.Random(budget.seed)
    yield [random_soft_set(rctx, rng) for _ in range(min(budget.trials, 200))]


def _singles(budget: EnumerationBudget, law: Callable[[SoftSet], bool], name: str) -> tuple[int, None, str]:
    count = 0
    for block in _law_sets(budget):
        for F in block:
            count += 1
            if not law(F):
                raise _Failure(f"{name} fails for {F!r}",
                               fixture_document(F.context, sets={"F": F.bits}))
    return count, None, ""


def _pairs(budget: EnumerationBudget, law: Callable[[SoftSet, SoftSet], bool], name: str) -> tuple[int, None, str]:
    count = 0
    for block in _law_sets(budget):
        for F, G in product(block, repeat=2):
            count += 1
            if not law(F, G):
                raise _Failure(f"{name} fails for {F!r}, {G!r}",
                               fixture_document(F.context, sets={"F": F.bits, "G": G.bits}))
    return count, None, ""


def _triples(budget: EnumerationBudget, law: Callable[[SoftSet, SoftSet, SoftSet], bool], name: str) -> tuple[int, None, str]:
    count = 0
    for block in _law_sets(budget):
        block = block[:16] if len(block) > 16 else block
        for F, G, H in product(block, repeat=3):
            count += 1
            if not law(F, G, H):
                raise _Failure(f"{name} fails for {F!r}, {G!r}, {H!r}",
                               fixture_document(F.context, sets={"F": F.bits, "G": G.bits, "H": H.bits}))
    return count, None, ""


@register("subset-transitive", "soft inclusion is transitive")
def _(b):
    return _triples(b, lambda F, G, H: not (F <= G and G <= H) or F <= H, "transitivity")


@register("union-intersection-identities", "idempotence and the null/absolute identities")
def _(b):
    def law(F):
        N, A = null_soft_set(F.context), absolute_soft_set(F.context)
        return (union(F, F) == F and union(F, N) == F and union(F, A) == A
                and intersection(F, F) == F and intersection(F, N) == N and intersection(F, A) == F)
    return _singles(b, law, "identity laws")


@register("commutative", "union and intersection commute")
def _(b):
    return _pairs(b, lambda F, G: union(F, G) == union(G, F) and intersection(F, G) == intersection(G, F),
                  "commutativity")


@register("associative", "union and intersection associate")
def _(b):
    return _triples(
        b,
        lambda F, G, H: intersection(F, intersection(G, H)) == intersection(intersection(F, G), H)
        and union(F, union(G, H)) == union(union(F, G), H),
        "associativity",
    )


@register("distributive", "both distributive laws")
def _(b):
    return _triples(
        b,
        lambda F, G, H: intersection(F, union(G, H)) == union(intersection(F, G), intersection(F, H))
        and union(F, intersection(G, H)) == intersection(union(F, G), union(F, H)),
        "distributivity",
    )


@register("excluded-middle", "F | ~F is absolute and F & ~F is null")
def _(b):
    return _singles(
        b,
        lambda F: union(F, complement(F)) == absolute_soft_set(F.context)
        and intersection(F, complement(F)) == null_soft_set(F.context),
        "exclusion/contradiction",
    )


@register("complement-involution", "complements of null/absolute swap and ~~F = F")
def _(b):
    return _singles(
        b,
        lambda F: complement(complement(F)) == F
        and complement(null_soft_set(F.context)) == absolute_soft_set(F.context)
        and complement(absolute_soft_set(F.context)) == null_soft_set(F.context)
        and complement(F) == difference(absolute_soft_set(F.context), F),
        "complement laws",
    )


@register("subset-via-operators", "F <= G iff F & G = F iff F | G = G")
def _(b):
    return _pairs(
        b,
        lambda F, G: is_subset(F, G) == (intersection(F, G) == F) == (union(F, G) == G),
        "subset characterisation",
    )


@register("de-morgan", "De Morgan laws for pairs")
def _(b):
    return _pairs(
        b,
        lambda F, G: complement(union(F, G)) == intersection(complement(F), complement(G))
        and complement(intersection(F, G)) == union(complement(F), complement(G)),
        "De Morgan",
    )


@register("difference-via-complement", "F - G = F & ~G")
def _(b):
    return _pairs(b, lambda F, G: difference(F, G) == intersection(F, complement(G)), "difference")


@register("difference-laws", "F-F, F-null, null-F, F-abs")
def _(b):
    def law(F):
        N, A = null_soft_set(F.context), absolute_soft_set(F.context)
        return difference(F, F) == N and difference(F, N) == F and difference(N, F) == N and difference(F, A) == N
    return _singles(b, law, "difference laws")


def _families(budget: EnumerationBudget) -> Iterator[list[SoftSet]]:
    ctx = Context.of_size(2, 2)
    sets = enumerate_soft_sets(ctx, budget)
    for r in (1, 2, 3):
        for fam in combinations(sets, r):
            yield list(fam)
    rctx = Context.of_size(budget.n, budget.m)
    for t in range(budget.trials):
        rng = trial_rng(budget.seed, t)
        yield [random_soft_set(rctx, rng) for _ in range(rng.randint(1, 6))]


def _over_families(budget, law, name):
    count = 0
    for fam in _families(budget):
        count += 1
        if not law(fam):
            ctx = fam[0].context
            raise _Failure(f"{name} fails for {fam!r}",
                           fixture_document(ctx, sets={f"F{i + 1}": F.bits for i, F in enumerate(fam)}))
    return count, None, ""


@register("generalized-bounds", "meet of a family <= each member <= join of the family")
def _(b):
    return _over_families(
        b, lambda fam: all(big_intersection(fam) <= F <= big_union(fam) for F in fam), "bounds")


@register("generalized-distributive", "F & (join G_i) = join (F & G_i) and dually")
def _(b):
    def law(fam):
        F, rest = fam[0], fam[1:] or fam[:1]
        return (intersection(F, big_union(rest)) == big_union([intersection(F, G) for G in rest])
                and union(F, big_intersection(rest)) == big_intersection([union(F, G) for G in rest]))
    return _over_families(b, law, "generalized distributivity")


@register("generalized-de-morgan", "De Morgan laws for arbitrary families")
def _(b):
    return _over_families(
        b,
        lambda fam: complement(big_union(fam)) == big_intersection([complement(F) for F in fam])
        and complement(big_intersection(fam)) == big_union([complement(F) for F in fam]),
        "generalized De Morgan",
    )


@register("soft-point-decomposition", "every soft set is the union of its soft points")
def _(b):
    def law(F):
        pts = soft_points_of(F)
        if not pts:
            return F == null_soft_set(F.context)
        return big_union([p.as_softset() for p in pts]) == F and all(softpoint_in(p, F) for p in pts)
    return _singles(b, law, "soft point decomposition")


@register("point-membership", "p in F iff every soft point (p, e) soft-belongs to F")
def _(b):
    def law(F):
        ctx = F.context
        return all(
            point_in(x, F) == all(softpoint_in(SoftPoint(ctx, x, e), F) for e in range(ctx.m))
            for x in range(ctx.n)
        )
    return _singles(b, law, "point membership")


@register("restrict-via-constant", "restricting to V equals intersecting with the constant soft set of V")
def _(b):
    def law(F):
        ctx = F.context
        return all(
            restrict(F, V) == intersection(F, constant_soft_set(ctx, V))
            for r in range(1, ctx.n + 1)
            for V in combinations(range(ctx.n), r)
        )
    return _singles(b, law, "restriction")


# -- soft topologies ---------------------------------------------------------


def _topology_fixture(T: SoftTopology, note: str) -> dict:
    return fixture_document(T.context, {"tau": T.members}, note=note)


def _for_topologies(budget, law: Callable[[SoftTopology], str | None], name: str):
    count = 0
    for T in all_topologies(budget):
        count += 1
        problem = law(T)
        if problem:
            raise _Failure(f"{name}: {problem}", _topology_fixture(T, problem))
    return count, None, ""


@register("closed-family", "closed sets contain null/absolute and are closed under unions and intersections")
def _(b):
    def law(T):
        closed = {F.bits for F in closed_family(T)}
        if 0 not in closed or T.context.full not in closed:
            return "null or absolute is not closed"
        cl = [SoftSet(T.context, c) for c in sorted(closed)]
        for F, G in combinations(cl, 2):
            if union(F, G).bits not in closed:
                return f"union of closed sets {F!r}, {G!r} is not closed"
            if intersection(F, G).bits not in closed:
                return f"intersection of closed sets {F!r}, {G!r} is not closed"
        if big_intersection(cl).bits not in closed:
            return "intersection of all closed sets is not closed"
        return None
    return _for_topologies(b, law, "closed family")


@register("crisp-slices", "every parameter slice of a soft topology is a crisp topology")
def _(b):
    def law(T):
        for e in T.context.parameters:
            if not crisp.is_topology(T.context.universe, crisp_slice(T, e)):
                return f"slice at {e} is not a topology"
        return None
    return _for_topologies(b, law, "crisp slices")


@register("product-correspondence", "a family is a soft topology iff its graphs form a topology on parameters x universe")
def _(b):
    count = 0
    for ctx in exhaustive_contexts(b):
        if ctx.cells > 3:
            continue
        sets = enumerate_soft_sets(ctx, b)
        for mask in range(1 << len(sets)):
            fam = [F for i, F in enumerate(sets) if mask >> i & 1]
            points, graphs = to_product_topology(fam, ctx)
            count += 1
            if validate(ctx, fam).valid != crisp.is_topology(points, graphs):
                raise _Failure("validate disagrees with the product topology check",
                               fixture_document(ctx, {"family": [F.bits for F in fam]}))
    rctx = Context.of_size(b.n, b.m)
    for t in range(b.trials):
        rng = trial_rng(b.seed, t)
        T = _draw_topology(rctx, rng)
        fam = T.opens
        if rng.random() < 0.5 and len(fam) > 2:
            fam.pop(rng.randrange(len(fam)))
        points, graphs = to_product_topology(fam, rctx)
        count += 1
        if validate(rctx, fam).valid != crisp.is_topology(points, graphs):
            raise _Failure("validate disagrees with the product topology check",
                           fixture_document(rctx, {"family": [F.bits for F in fam]}))
    return count, None, ""


@register("meet-is-topology", "the plain intersection of soft topologies is a soft topology")
def _(b):
    count = 0
    for ctx in exhaustive_contexts(b):
        tops = enumerate_topologies(ctx, b)
        for T, S in combinations_with_replacement(tops, 2):
            count += 1
            M = meet([T, S])
            if not is_topology_bits(ctx.full, M.members):
                raise _Failure("meet is not a topology",
                               fixture_document(ctx, {"tau1": T.members, "tau2": S.members}))
    for S in random_spaces(b):
        count += 1
        M = meet(S.topologies)
        if not validate(S.context, M.opens).valid:
            raise _Failure("meet is not a topology", _space_fixture(S, "meet fails the axioms"))
    return count, None, ""


@register("lattice-laws", "meet and join are idempotent, commutative, associative and absorptive")
def _(b):
    count = 0
    for ctx in exhaustive_contexts(b):
        if ctx.cells > 2:
            continue
        tops = enumerate_topologies(ctx, b)
        for T, S, R in product(tops, repeat=3):
            count += 1
            ok = (meet([T, T]) == T and join([T, T]) == T
                  and meet([T, S]) == meet([S, T]) and join([T, S]) == join([S, T])
                  and meet([meet([T, S]), R]) == meet([T, meet([S, R])])
                  and join([join([T, S]), R]) == join([T, join([S, R])])
                  and meet([T, join([T, S])]) == T and join([T, meet([T, S])]) == T)
            if not ok:
                raise _Failure("lattice law fails",
                               fixture_document(ctx, {"tau1": T.members, "tau2": S.members, "tau3": R.members}))
    for S in random_spaces(b):
        if S.N < 2:
            continue
        T, U = S.topologies[:2]
        count += 1
        if meet([T, join([T, U])]) != T or join([T, meet([T, U])]) != T:
            raise _Failure("absorption fails", _space_fixture(S, "absorption fails"))
    return count, None, ""


@register("union-not-topology", "search: two soft topologies whose plain union is not a soft topology", search=True)
def _(b):
    rctx = Context.of_size(b.n, b.m)
    tops = random_topologies(b)
    for t in range(1, len(tops)):
        T, S = tops[t - 1], tops[t]
        members = T.members | S.members
        if not validate(rctx, [SoftSet(rctx, x) for x in members]).valid:
            return t, fixture_document(rctx, {"tau1": T.members, "tau2": S.members},
                                       note="the plain union of tau1 and tau2 is not a soft topology"), ""
    return len(tops), None, ""


@register("slices-not-sufficient", "search: a family whose parameter slices are all topologies but which is not a soft topology", search=True)
def _(b):
    rctx = Context.of_size(b.n, b.m)
    for t in range(b.trials):
        rng = trial_rng(b.seed, t)
        fam = {0, rctx.full} | {rng.getrandbits(rctx.cells) for _ in range(rng.randint(1, 4))}
        sets = [SoftSet(rctx, x) for x in fam]
        if validate(rctx, sets).valid:
            continue
        slices_ok = all(
            crisp.is_topology(rctx.universe, {frozenset(rctx.universe[x] for x in F.row(e)) for F in sets})
            for e in range(rctx.m)
        )
        if slices_ok:
            return t + 1, fixture_document(rctx, {"family": fam},
                                           note="every slice is a crisp topology, the family is not a soft topology"), ""
    return b.trials, None, ""


def _sampled_pairs(items: list, rng: random.Random, limit: int) -> Iterable[tuple]:
    if len(items) ** 2 <= limit:
        return product(items, repeat=2)
    return [(rng.choice(items), rng.choice(items)) for _ in range(limit)]


@register("neighborhood-axioms", "soft neighbourhood systems satisfy the four neighbourhood axioms")
def _(b):
    def law(T: SoftTopology, rng: random.Random, limit: int) -> str | None:
        ctx = T.context
        sets = [SoftSet(ctx, x) for x in range(ctx.full + 1)]
        pts = all_soft_points(ctx)
        nb = {p: [N for N in sets if is_neighborhood(T, N, p)] for p in pts}
        nbits = {p: {N.bits for N in nb[p]} for p in pts}
        for p in pts:
            for N in nb[p]:
                if not softpoint_in(p, N):
                    return f"{N!r} is a neighbourhood of {p} without containing it"
            for M, N in _sampled_pairs(nb[p], rng, limit):
                if intersection(M, N).bits not in nbits[p]:
                    return f"{M!r} & {N!r} is not a neighbourhood of {p}"
            for N in nb[p] if len(nb[p]) <= limit else rng.sample(nb[p], limit):
                for F in sets if len(sets) <= limit else rng.sample(sets, limit):
                    if N <= F and F.bits not in nbits[p]:
                        return f"superset {F!r} of neighbourhood {N!r} of {p} is not a neighbourhood"
                if not any(all(N.bits in nbits[q] for q in soft_points_of(M)) for M in nb[p]):
                    return f"no inner neighbourhood witnesses axiom (iv) for {N!r} at {p}"
        return None

    count = 0
    for ctx in exhaustive_contexts(b):
        for T in enumerate_topologies(ctx, b):
            count += 1
            problem = law(T, random.Random(0), 1 << 10)
            if problem:
                raise _Failure(problem, _topology_fixture(T, problem))
    for t, T in enumerate(random_topologies(b)):
        count += 1
        problem = law(T, trial_rng(b.seed, t), 12)
        if problem:
            raise _Failure(problem, _topology_fixture(T, problem))
    return count, None, ""


@register("open-iff-neighborhood", "a soft set is open iff it is an open neighbourhood of each of its soft points")
def _(b):
    count = 0
    for ctx in exhaustive_contexts(b):
        if ctx.cells > 3:
            continue
        sets = enumerate_soft_sets(ctx, b)
        for T in enumerate_topologies(ctx, b):
            for F in sets:
                count += 1
                if is_open_via_neighborhoods(T, F) != (F in T):
                    raise _Failure(f"characterisation fails for {F!r}", _topology_fixture(T, repr(F)))
    for t, T in enumerate(random_topologies(b)):
        rng = trial_rng(b.seed, t)
        F = random_soft_set(T.context, rng) if rng.random() < 0.5 else rng.choice(T.opens)
        count += 1
        if is_open_via_neighborhoods(T, F) != (F in T):
            raise _Failure(f"characterisation fails for {F!r}", _topology_fixture(T, repr(F)))
    return count, None, ""


def _closure_cases(b: EnumerationBudget) -> Iterator[tuple[SoftTopology, SoftSet, SoftSet]]:
    for ctx in exhaustive_contexts(b):
        sets = enumerate_soft_sets(ctx, b)
        for T in enumerate_topologies(ctx, b):
            if ctx.cells <= 2:
                for F, G in product(sets, repeat=2):
                    yield T, F, G
            else:
                rng = random.Random(hash(T.members) & 0xFFFF)
                for _ in range(8):
                    yield T, rng.choice(sets), rng.choice(sets)
    for t, T in enumerate(random_topologies(b)):
        rng = trial_rng(b.seed, t)
        yield T, random_soft_set(T.context, rng), random_soft_set(T.context, rng)


@register("closure-properties", "closure fixes null/absolute, is extensive and idempotent, and fixes exactly the closed sets")
def _(b):
    count = 0
    for T, F, _G in _closure_cases(b):
        count += 1
        ctx = T.context
        cF = closure(T, F)
        closed = {c.bits for c in closed_family(T)}
        ok = (closure(T, null_soft_set(ctx)) == null_soft_set(ctx)
              and closure(T, absolute_soft_set(ctx)) == absolute_soft_set(ctx)
              and F <= cF and closure(T, cF) == cF
              and (F.bits in closed) == (cF == F))
        if not ok:
            raise _Failure(f"closure property fails for {F!r}", _topology_fixture(T, repr(F)))
    return count, None, ""


@register("closure-operators", "closure is monotone, preserves unions and sub-distributes over intersections")
def _(b):
    count = 0
    for T, F, G in _closure_cases(b):
        count += 1
        cF, cG = closure(T, F), closure(T, G)
        ok = ((not F <= G or cF <= cG)
              and closure(T, union(F, G)) == union(cF, cG)
              and closure(T, intersection(F, G)) <= intersection(cF, cG))
        if not ok:
            raise _Failure(f"closure operator law fails for {F!r}, {G!r}", _topology_fixture(T, f"{F!r} {G!r}"))
    return count, None, ""


def _carriers(ctx: Context) -> list[tuple[int, ...]]:
    return [c for r in range(1, ctx.n + 1) for c in combinations(range(ctx.n), r)]


@register("relative-topology", "the relative family on a non-empty carrier is a soft topology")
def _(b):
    def law(T):
        for V in _carriers(T.context):
            R = relative(T, V)
            if not validate(R.context, R.opens).valid:
                return f"relative family on {V} is not a topology"
        return None
    return _for_topologies(b, law, "relative topology")


@register("t1-iff-points-closed", "soft T1 holds iff every soft point is soft closed")
def _(b):
    return _for_topologies(
        b, lambda T: None if bool(is_t1(T)) == points_closed(T) else "T1 and closed soft points disagree",
        "T1 characterisation")


@register("separation-chain", "soft T2 implies T1 implies T0")
def _(b):
    def law(T):
        t0, t1, t2 = bool(is_t0(T)), bool(is_t1(T)), bool(is_t2(T))
        if t2 and not t1:
            return "T2 without T1"
        if t1 and not t0:
            return "T1 without T0"
        return None
    return _for_topologies(b, law, "separation chain")


# -- soft N-topological spaces ----------------------------------------------


def _for_spaces(budget, law: Callable[[SoftNSpace], str | None], name: str):
    count = 0
    for S in all_spaces(budget):
        count += 1
        problem = law(S)
        if problem:
            raise _Failure(f"{name}: {problem}", _space_fixture(S, problem))
    return count, None, ""


@register("n-open-inclusion", "every component open (closed) set is N-open (N-closed)")
def _(b):
    def law(S):
        for T in S.topologies:
            for F in T.opens:
                if not is_n_open(S, F) or not is_n_closed(S, complement(F)):
                    return f"{F!r} is open in a component but not N-open"
        return None
    return _for_spaces(b, law, "N-open inclusion")


@register("n-subspace", "componentwise relative topologies form a soft N-space on the carrier")
def _(b):
    def law(S):
        for V in _carriers(S.context):
            for T in S.topologies:
                R = _relative(T, V)
                if not _valid(R.context, R.members):
                    return f"relative component on {V} is not a topology"
        return None
    return _for_spaces(b, law, "N-subspace")


# The exhaustive spaces repeat the same families many times over, so the
# N-space laws go through these memoised helpers.


@lru_cache(maxsize=1 << 18)
def _sep(ctx: Context, members: frozenset[int], axiom: str) -> bool:
    return bool(separation_bits(ctx, members, axiom))


_component_sep = _sep


@lru_cache(maxsize=1 << 16)
def _valid(ctx: Context, members: frozenset[int]) -> bool:
    return validate(ctx, [SoftSet(ctx, x) for x in members]).valid


@lru_cache(maxsize=1 << 16)
def _relative(T: SoftTopology, V: tuple[int, ...]) -> SoftTopology:
    return relative(T, V)


@lru_cache(maxsize=1 << 16)
def _sup_members(ctx: Context, pooled: frozenset[int]) -> frozenset[int]:
    return generate_bits(ctx.full, pooled)


def _nwise(S: SoftNSpace, axiom: str) -> bool:
    return _sep(S.context, S.n_open_bits, axiom)


@register("componentwise-implies-nwise", "a soft Ti component makes the space N-wise Ti (i = 0, 1, 2)")
def _(b):
    def law(S):
        for ax in ("t0", "t1", "t2"):
            if any(_sep(S.context, T.members, ax) for T in S.topologies) and not _nwise(S, ax):
                return f"component is soft {ax} but the space is not N-wise {ax}"
        return None
    return _for_spaces(b, law, "componentwise")


@register("nwise-implies-supremum", "N-wise Ti makes the supremum topology soft Ti (i = 0, 1, 2)")
def _(b):
    def law(S):
        verdicts = {ax: _nwise(S, ax) for ax in ("t0", "t1", "t2")}
        if not any(verdicts.values()):
            return None
        sup = _sup_members(S.context, S.n_open_bits)
        for ax, holds in verdicts.items():
            if holds and not _sep(S.context, sup, ax):
                return f"N-wise {ax} but the supremum is not soft {ax}"
        return None
    return _for_spaces(b, law, "supremum")


@register("nwise-hereditary", "N-wise Ti passes to every soft N-subspace (i = 0, 1, 2)")
def _(b):
    def law(S):
        holding = [ax for ax in ("t0", "t1", "t2") if _nwise(S, ax)]
        if not holding:
            return None
        for V in _carriers(S.context):
            parts = [_relative(T, V) for T in S.topologies]
            pooled = frozenset().union(*(R.members for R in parts))
            for ax in holding:
                if not _sep(parts[0].context, pooled, ax):
                    return f"N-wise {ax} lost on the subspace {V}"
        return None
    return _for_spaces(b, law, "hereditary")


@register("nwise-chain", "N-wise T2 implies N-wise T1 implies N-wise T0")
def _(b):
    def law(S):
        t0, t1, t2 = (_nwise(S, ax) for ax in ("t0", "t1", "t2"))
        if t2 and not t1:
            return "N-wise T2 without T1"
        if t1 and not t0:
            return "N-wise T1 without T0"
        return None
    return _for_spaces(b, law, "N-wise chain")


@register("implication-report", "check_implications flags no violation")
def _(b):
    def law(S):
        rep = check_implications(S)
        return "; ".join(rep.violations) or None
    count = 0
    for S in random_spaces(b):
        count += 1
        problem = law(S)
        if problem:
            raise _Failure(problem, _space_fixture(S, problem))
    return count, None, ""


def _search_pairs(b: EnumerationBudget) -> Iterator[tuple[int, SoftNSpace]]:
    rctx = Context.of_size(b.n, b.m)
    tops = random_topologies(b)
    for t in range(1, len(tops)):
        yield t, SoftNSpace(rctx, (tops[t - 1], tops[t]))


@register("nwise-t0-without-t0-component", "search: a 2-wise soft T0 space with no soft T0 component", search=True)
def _(b):
    for t, S in _search_pairs(b):
        if nwise(S, "t0") and not any(_component_sep(S.context, T.members, "t0") for T in S.topologies):
            return t, _space_fixture(S, "2-wise soft T0, neither component soft T0"), ""
    return b.trials, None, ""


@register("supremum-t2-not-nwise", "search: a 2-space whose supremum is soft T2 but which is not 2-wise soft T2", search=True)
def _(b):
    for t, S in _search_pairs(b):
        if not _nwise(S, "t2") and _sep(S.context, _sup_members(S.context, S.n_open_bits), "t2"):
            return t, _space_fixture(S, "supremum soft T2, space not 2-wise soft T2"), ""
    return b.trials, None, ""


@register("hereditary-converse", "search: a space that is not N-wise T0 with an N-wise T0 subspace", search=True)
def _(b):
    for t, S in _search_pairs(b):
        if nwise(S, "t0"):
            continue
        for V in _carriers(S.context):
            if len(V) < S.context.n and nwise(n_subspace(S, V), "t0"):
                labels = [S.context.universe[x] for x in V]
                return t, _space_fixture(S, f"not 2-wise soft T0; subspace on {labels} is"), ""
    return b.trials, None, ""


def run_all(budget: EnumerationBudget = DEFAULT_BUDGET, names: Iterable[str] | None = None) -> list[PropositionReport]:
    return [check_proposition(name, budget) for name in (names or REGISTRY)]
