"""Soft N-topological spaces: several soft topologies over one context."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .softset import Context, EmptyFamily, SoftSet, _check
from .topology import (
    CrispFamily,
    Separation,
    SoftTopology,
    crisp_slice,
    join,
    relative,
    separation_bits,
)

AXIOMS = ("t0", "t1", "t2")


@dataclass(frozen=True)
class SoftNSpace:
    context: Context
    topologies: tuple[SoftTopology, ...]

    @property
    def N(self) -> int:
        return len(self.topologies)

    @property
    def n_open_bits(self) -> frozenset[int]:
        """Plain set-union of the open families."""
        return frozenset().union(*(T.members for T in self.topologies))


def make_nspace(
    ctx: Context,
    topologies: Sequence[SoftTopology | Iterable[SoftSet]],
    names: Sequence[str] | None = None,
) -> SoftNSpace:
    """Bundle topologies (or raw families, which are validated) into an N-space."""
    if not topologies:
        raise EmptyFamily("a soft N-topological space needs N >= 1")
    built = []
    for i, T in enumerate(topologies):
        name = names[i] if names else None
        if isinstance(T, SoftTopology):
            _check(ctx, T.context)
        else:
            T = SoftTopology.from_family(ctx, T, name)
        built.append(T)
    if len({T.members for T in built}) < len(built):
        warnings.warn("soft N-topological space has repeated topologies", stacklevel=2)
    return SoftNSpace(ctx, tuple(built))


def is_n_open(S: SoftNSpace, F: SoftSet) -> bool:
    _check(S.context, F.context)
    return any(F.bits in T.members for T in S.topologies)


def is_n_closed(S: SoftNSpace, F: SoftSet) -> bool:
    _check(S.context, F.context)
    return any(S.context.full & ~F.bits in T.members for T in S.topologies)


def crisp_n_slice(S: SoftNSpace, parameter: int | str) -> list[CrispFamily]:
    return [crisp_slice(T, parameter) for T in S.topologies]


def n_subspace(S: SoftNSpace, carrier: Iterable[int | str]) -> SoftNSpace:
    carrier = list(carrier)
    parts = tuple(relative(T, carrier) for T in S.topologies)
    return SoftNSpace(parts[0].context, parts)


def supremum(S: SoftNSpace) -> SoftTopology:
    return join(S.topologies)


def nwise(S: SoftNSpace, axiom: str) -> Separation:
    """N-wise soft T0/T1/T2: the soft separation axiom with N-open sets."""
    return separation_bits(S.context, S.n_open_bits, axiom)


def nwise_t0(S: SoftNSpace) -> Separation:
    return nwise(S, "t0")


def nwise_t1(S: SoftNSpace) -> Separation:
    return nwise(S, "t1")


def nwise_t2(S: SoftNSpace) -> Separation:
    return nwise(S, "t2")


def permissive_nwise(ctx: Context, families: Iterable[Iterable[SoftSet]], axiom: str) -> Separation:
    """N-wise check over the raw union of families that need not be topologies."""
    pooled = set()
    for fam in families:
        for F in fam:
            _check(ctx, F.context)
            pooled.add(F.bits)
    return separation_bits(ctx, pooled, axiom)


@dataclass
class ImplicationReport:
    """Separation verdicts for an N-space and the implications between them."""

    componentwise: dict[str, list[bool]] = field(default_factory=dict)
    nwise: dict[str, Separation] = field(default_factory=dict)
    supremum: dict[str, Separation] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_implications(S: SoftNSpace) -> ImplicationReport:
    """Evaluate every separation verdict and flag any implication that breaks.

    Checked: some component Ti => N-wise Ti; N-wise Ti => supremum Ti;
    N-wise T2 => T1 => T0.
    """
    rep = ImplicationReport()
    sup = supremum(S)
    for ax in AXIOMS:
        rep.componentwise[ax] = [bool(separation_bits(S.context, T.members, ax)) for T in S.topologies]
        rep.nwise[ax] = nwise(S, ax)
        rep.supremum[ax] = separation_bits(S.context, sup.members, ax)
        if any(rep.componentwise[ax]) and not rep.nwise[ax]:
            rep.violations.append(f"a component is soft {ax} but the space is not N-wise {ax}")
        if rep.nwise[ax] and not rep.supremum[ax]:
            rep.violations.append(f"N-wise {ax} but the supremum topology is not soft {ax}")
    for strong, weak in (("t2", "t1"), ("t1", "t0")):
        if rep.nwise[strong] and not rep.nwise[weak]:
            rep.violations.append(f"N-wise {strong} but not N-wise {weak}")
    return rep

