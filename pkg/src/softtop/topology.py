"""Soft topologies over a finite context.

Families of soft sets are handled internally as sets of packed bit matrices
(see :mod:`softtop.softset`); the public functions take and return
:class:`SoftSet` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .softset import (
    Context,
    EmptyCarrier,
    EmptyFamily,
    SoftPoint,
    SoftSet,
    SoftSetError,
    _check,
    all_soft_points,
)

MAX_DISCRETE_CELLS = 20

CrispFamily = tuple[frozenset, ...]


class TooLarge(SoftSetError, ValueError):
    pass


class InvalidTopology(SoftSetError, ValueError):
    def __init__(self, report: ValidationReport, name: str | None = None):
        self.report = report
        self.name = name
        what = f"family {name!r}" if name else "family"
        super().__init__(f"{what} is not a soft topology: {report.violation}")


@dataclass(frozen=True)
class Violation:
    """A missing member: ``axiom`` applied to ``operands`` gives ``missing``."""

    axiom: str  # "null" | "absolute" | "intersection" | "union"
    operands: tuple[SoftSet, ...]
    missing: SoftSet

    def __str__(self) -> str:
        if self.operands:
            ops = ", ".join(repr(s) for s in self.operands)
            return f"{self.axiom}({ops}) = {self.missing!r} is missing"
        return f"{self.axiom} soft set {self.missing!r} is missing"


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violation: Violation | None = None
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class Separation:
    """Outcome of a separation check; falsy when the axiom fails.

    ``witness`` is the first unseparated pair of soft points in canonical order.
    """

    axiom: str
    holds: bool
    witness: tuple[SoftPoint, SoftPoint] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _members(ctx: Context, family: Iterable[SoftSet]) -> frozenset[int]:
    out = set()
    for F in family:
        _check(ctx, F.context)
        out.add(F.bits)
    return frozenset(out)


def is_topology_bits(full: int, members: frozenset[int] | set[int]) -> bool:
    """Fast axiom check on packed members (pairwise closure suffices when finite)."""
    if 0 not in members or full not in members:
        return False
    ms = list(members)
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a & b not in members or a | b not in members:
                return False
    return True


def validate(ctx: Context, family: Iterable[SoftSet]) -> ValidationReport:
    """Check the four topology axioms; report every missing member.

    ``violation`` is the first one found in the order: null, absolute, all
    pairwise intersections, all pairwise unions, pairs taken in canonical order.
    """
    members = _members(ctx, family)
    ordered = sorted(members)
    found: list[Violation] = []
    seen: set[tuple[str, int]] = set()

    def report(axiom: str, operands: tuple[int, ...], missing: int) -> None:
        if (axiom, missing) in seen:
            return
        seen.add((axiom, missing))
        found.append(
            Violation(axiom, tuple(SoftSet(ctx, b) for b in operands), SoftSet(ctx, missing))
        )

    if 0 not in members:
        report("null", (), 0)
    if ctx.full not in members:
        report("absolute", (), ctx.full)
    for axiom, op in (("intersection", int.__and__), ("union", int.__or__)):
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                c = op(a, b)
                if c not in members:
                    report(axiom, (a, b), c)
    if found:
        return ValidationReport(False, found[0], tuple(found))
    return ValidationReport(True)


@dataclass(frozen=True)
class SoftTopology:
    """A validated soft topology.  Build with :meth:`from_family`, :func:`generate`, etc."""

    context: Context
    members: frozenset[int] = field(repr=False)

    @classmethod
    def from_family(cls, ctx: Context, family: Iterable[SoftSet], name: str | None = None) -> SoftTopology:
        family = list(family)
        report = validate(ctx, family)
        if not report.valid:
            raise InvalidTopology(report, name)
        return cls(ctx, _members(ctx, family))

    @property
    def opens(self) -> list[SoftSet]:
        return [SoftSet(self.context, b) for b in sorted(self.members)]

    def __iter__(self) -> Iterator[SoftSet]:
        return iter(self.opens)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, F: SoftSet) -> bool:
        _check(self.context, F.context)
        return F.bits in self.members

    def __repr__(self) -> str:
        return f"SoftTopology({self.opens!r})"


def indiscrete(ctx: Context) -> SoftTopology:
    return SoftTopology(ctx, frozenset({0, ctx.full}))


def discrete(ctx: Context) -> SoftTopology:
    if ctx.cells > MAX_DISCRETE_CELLS:
        raise TooLarge(f"discrete topology on {ctx.cells} cells has 2^{ctx.cells} members")
    return SoftTopology(ctx, frozenset(range(ctx.full + 1)))


def closed_family(T: SoftTopology) -> list[SoftSet]:
    full = T.context.full
    return [SoftSet(T.context, b) for b in sorted(full & ~o for o in T.members)]


def closure(T: SoftTopology, F: SoftSet) -> SoftSet:
    """Intersection of all closed supersets of ``F``."""
    _check(T.context, F.context)
    full = T.context.full
    out = full
    for o in T.members:
        c = full & ~o
        if F.bits & ~c == 0:
            out &= c
    return SoftSet(T.context, out)


def is_neighborhood(T: SoftTopology, N: SoftSet, p: SoftPoint) -> bool:
    _check(T.context, N.context)
    _check(T.context, p.context)
    return any(o & p.bit and o & ~N.bits == 0 for o in T.members)


def is_open_via_neighborhoods(T: SoftTopology, F: SoftSet) -> bool:
    """Open iff each of its soft points has an open neighbourhood inside ``F``."""
    _check(T.context, F.context)
    inside = [o for o in T.members if o & ~F.bits == 0]
    return all(
        any(o & p.bit for o in inside)
        for p in all_soft_points(F.context)
        if F.bits & p.bit
    )


def _close(members: set[int], op) -> bool:
    """Close ``members`` in place under a binary op; return whether it grew."""
    grew = False
    frontier = list(members)
    while frontier:
        new = []
        current = list(members)
        for a in frontier:
            for b in current:
                c = op(a, b)
                if c not in members:
                    members.add(c)
                    new.append(c)
        if new:
            grew = True
        frontier = new
    return grew


def generate_bits(full: int, seeds: Iterable[int]) -> frozenset[int]:
    members = set(seeds)
    members.update((0, full))
    _close(members, int.__and__)
    while _close(members, int.__or__) and _close(members, int.__and__):
        pass
    return frozenset(members)


def generate(ctx: Context, family: Iterable[SoftSet]) -> SoftTopology:
    """Smallest soft topology containing ``family``."""
    return SoftTopology(ctx, generate_bits(ctx.full, _members(ctx, family)))


def _same_context(topologies: Sequence[SoftTopology]) -> Context:
    if not topologies:
        raise EmptyFamily("need at least one topology")
    ctx = topologies[0].context
    for T in topologies[1:]:
        _check(ctx, T.context)
    return ctx


def meet(topologies: Iterable[SoftTopology]) -> SoftTopology:
    topologies = list(topologies)
    ctx = _same_context(topologies)
    members = topologies[0].members
    for T in topologies[1:]:
        members = members & T.members
    return SoftTopology(ctx, members)


def join(topologies: Iterable[SoftTopology]) -> SoftTopology:
    """Supremum: the topology generated by the plain union of the families."""
    topologies = list(topologies)
    ctx = _same_context(topologies)
    return SoftTopology(ctx, generate_bits(ctx.full, set().union(*(T.members for T in topologies))))


def _crisp_key(s: frozenset, order: dict) -> tuple:
    return (len(s), sorted(order[x] for x in s))


def crisp_slice(T: SoftTopology, parameter: int | str) -> CrispFamily:
    """The crisp topology ``{F(e) : F open}`` on the universe, as label sets."""
    ctx = T.context
    e = ctx.param_index(parameter) if isinstance(parameter, str) else parameter
    if not 0 <= e < ctx.m:
        raise IndexError(f"parameter index {e} out of range")
    rows = {SoftSet(ctx, b).row(e) for b in T.members}
    labelled = {frozenset(ctx.universe[x] for x in r) for r in rows}
    order = {x: i for i, x in enumerate(ctx.universe)}
    return tuple(sorted(labelled, key=lambda s: _crisp_key(s, order)))


def graph(F: SoftSet) -> frozenset[tuple[str, str]]:
    """The soft set as a relation ``{(e, x) : x in F(e)}`` on parameters x universe."""
    ctx = F.context
    return frozenset(
        (ctx.parameters[e], ctx.universe[x]) for e in range(ctx.m) for x in F.row(e)
    )


def to_product_topology(
    family: SoftTopology | Iterable[SoftSet], ctx: Context | None = None
) -> tuple[tuple[tuple[str, str], ...], CrispFamily]:
    """Map every soft set to its graph; returns (product points, graph family)."""
    if isinstance(family, SoftTopology):
        ctx, sets = family.context, family.opens
    else:
        sets = list(family)
        if ctx is None:
            if not sets:
                raise ValueError("empty family needs an explicit context")
            ctx = sets[0].context
    points = tuple((e, x) for e in ctx.parameters for x in ctx.universe)
    order = {p: i for i, p in enumerate(points)}
    graphs = {graph(F) for F in sets}
    return points, tuple(sorted(graphs, key=lambda s: _crisp_key(s, order)))


def subcontext(ctx: Context, carrier: Iterable[int | str]) -> tuple[Context, tuple[int, ...]]:
    idx = ctx.carrier_indices(carrier)
    if not idx:
        raise EmptyCarrier("subspace needs a non-empty carrier")
    return Context(tuple(ctx.universe[x] for x in idx), ctx.parameters), idx


def compress(ctx: Context, sub: Context, idx: Sequence[int], bits: int) -> int:
    """Re-express ``bits`` restricted to the points ``idx`` over the context ``sub``."""
    out = 0
    for e in range(ctx.m):
        for j, x in enumerate(idx):
            if bits & ctx.bit(e, x):
                out |= sub.bit(e, j)
    return out


def relative(T: SoftTopology, carrier: Iterable[int | str]) -> SoftTopology:
    """Relative topology on ``carrier``; the result's universe is the carrier."""
    sub, idx = subcontext(T.context, carrier)
    return SoftTopology(sub, frozenset(compress(T.context, sub, idx, b) for b in T.members))


def separation_bits(ctx: Context, members: Iterable[int], axiom: str) -> Separation:
    """Soft T0/T1/T2 over an arbitrary family of packed sets (opens)."""
    opens = sorted(set(members))
    points = all_soft_points(ctx)
    # cover[i]: bitmask over open indices soft-containing point i
    cover = []
    for p in points:
        c = 0
        for k, o in enumerate(opens):
            if o & p.bit:
                c |= 1 << k
        cover.append(c)
    N = len(points)
    if axiom == "t0":
        for i in range(N):
            for j in range(i + 1, N):
                if cover[i] == cover[j]:
                    return Separation("t0", False, (points[i], points[j]),
                                      "no open set contains exactly one of the two points")
    elif axiom == "t1":
        for i in range(N):
            for j in range(N):
                if i != j and cover[i] & ~cover[j] == 0:
                    return Separation("t1", False, (points[i], points[j]),
                                      "no open set contains the first point but not the second")
    elif axiom == "t2":
        around = [[o for o in opens if o & p.bit] for p in points]
        for i in range(N):
            for j in range(i + 1, N):
                if not any(a & b == 0 for a in around[i] for b in around[j]):
                    return Separation("t2", False, (points[i], points[j]),
                                      "no pair of disjoint open sets separates the two points")
    else:
        raise ValueError(f"unknown separation axiom {axiom!r}")
    return Separation(axiom, True)


def separation_trace(
    ctx: Context, members: Iterable[int], axiom: str
) -> list[tuple[SoftPoint, SoftPoint, tuple[int, ...] | None]]:
    """Per-pair evidence for ``axiom``: the separating open(s) in canonical order, or None.

    T0 and T2 list unordered pairs; T1 lists ordered pairs and the open holding
    the first point but not the second.
    """
    opens = sorted(set(members))
    points = all_soft_points(ctx)
    out = []
    for i, x in enumerate(points):
        for j, y in enumerate(points):
            if i == j or (axiom != "t1" and j < i):
                continue
            found: tuple[int, ...] | None = None
            if axiom == "t0":
                found = next(((o,) for o in opens if bool(o & x.bit) != bool(o & y.bit)), None)
            elif axiom == "t1":
                found = next(((o,) for o in opens if o & x.bit and not o & y.bit), None)
            elif axiom == "t2":
                found = next(((a, b) for a in opens if a & x.bit
                              for b in opens if b & y.bit and not a & b), None)
            else:
                raise ValueError(f"unknown separation axiom {axiom!r}")
            out.append((x, y, found))
    return out


def is_t0(T: SoftTopology) -> Separation:
    return separation_bits(T.context, T.members, "t0")


def is_t1(T: SoftTopology) -> Separation:
    return separation_bits(T.context, T.members, "t1")


def is_t2(T: SoftTopology) -> Separation:
    return separation_bits(T.context, T.members, "t2")


def points_closed(T: SoftTopology) -> bool:
    """Every soft point is a closed soft set."""
    full = T.context.full
    return all(full & ~p.bit in T.members for p in all_soft_points(T.context))
