"""Least/greatest fixed-point solvers and the exhaustive oracle.

The solvers run plain Kleene iteration, which converges within |A|+1
steps on a finite carrier; the oracle instead quantifies over all 2^|A|
predicates, intersecting the closed ones (least fixed point) or uniting
the consistent ones (greatest fixed point).  The two routes are kept
independent so that each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .errors import BoundExceededError, CarrierMismatchError, NonMonotoneOperatorError
from .operators import (
    conf,
    conf_v,
    der,
    der_v,
    is_closed,
    is_closed_v,
    is_consistent,
    is_consistent_v,
)
from .ruleset import Carrier, Predicate, RuleSet

ORACLE_BOUND = 16


@dataclass(frozen=True)
class FixpointTrace:
    """Kleene iterates plus per-element ranks.

    For a least fixed point the rank of an element is the index of the
    first stage containing it; for a greatest fixed point it is the index
    of the last stage in which the element survives.
    """

    kind: str  # "lfp" | "gfp"
    stages: tuple[Predicate, ...]
    rank: Mapping[str, int]

    @property
    def final(self) -> Predicate:
        return self.stages[-1]


def lfp(
    op: Callable[[Predicate], Predicate], carrier: Carrier
) -> tuple[Predicate, FixpointTrace]:
    """Least fixed point of a monotone operator, iterated up from empty."""
    stages = [carrier.empty()]
    rank: dict[str, int] = {}
    for _ in range(len(carrier) + 1):
        current = stages[-1]
        nxt = op(current)
        if nxt.carrier != carrier:
            raise CarrierMismatchError("operator changed the carrier")
        if nxt == current:
            return current, FixpointTrace("lfp", tuple(stages), rank)
        if not current.leq(nxt):
            raise NonMonotoneOperatorError(
                "iteration is not increasing; operator is not monotone"
            )
        for x in nxt.members - current.members:
            rank[x] = len(stages)
        stages.append(nxt)
    raise NonMonotoneOperatorError(
        "no fixed point within |A|+1 iterations; operator is not monotone"
    )


def gfp(
    op: Callable[[Predicate], Predicate], carrier: Carrier
) -> tuple[Predicate, FixpointTrace]:
    """Greatest fixed point of a monotone operator, iterated down from full."""
    stages = [carrier.full()]
    rank: dict[str, int] = {}
    for _ in range(len(carrier) + 1):
        current = stages[-1]
        nxt = op(current)
        if nxt.carrier != carrier:
            raise CarrierMismatchError("operator changed the carrier")
        if nxt == current:
            for x in current:
                rank[x] = len(stages) - 1
            return current, FixpointTrace("gfp", tuple(stages), rank)
        if not nxt.leq(current):
            raise NonMonotoneOperatorError(
                "iteration is not decreasing; operator is not monotone"
            )
        for x in current.members - nxt.members:
            rank[x] = len(stages) - 1
        stages.append(nxt)
    raise NonMonotoneOperatorError(
        "no fixed point within |A|+1 iterations; operator is not monotone"
    )


def ind_with_trace(r: RuleSet) -> tuple[Predicate, FixpointTrace]:
    return lfp(lambda p: der(r, p), r.carrier)


def coind_with_trace(r: RuleSet) -> tuple[Predicate, FixpointTrace]:
    return gfp(lambda p: conf(r, p), r.carrier)


def cover_with_trace(r: RuleSet, v: Predicate) -> tuple[Predicate, FixpointTrace]:
    return lfp(lambda p: der_v(r, v, p), r.carrier)


def positivity_with_trace(r: RuleSet, v: Predicate) -> tuple[Predicate, FixpointTrace]:
    return gfp(lambda p: conf_v(r, v, p), r.carrier)


def ind_predicate(r: RuleSet) -> Predicate:
    """Smallest closed predicate: everything derivable from the rules alone."""
    return ind_with_trace(r)[0]


def coind_predicate(r: RuleSet) -> Predicate:
    """Greatest consistent predicate: everything that survives backward search."""
    return coind_with_trace(r)[0]


def cover(r: RuleSet, v: Predicate) -> Predicate:
    """The basic cover of ``v``: smallest closed predicate containing ``v``."""
    return cover_with_trace(r, v)[0]


def positivity(r: RuleSet, v: Predicate) -> Predicate:
    """The positivity of ``v``: greatest consistent predicate inside ``v``."""
    return positivity_with_trace(r, v)[0]


def _check_oracle_bound(carrier: Carrier, bound: int) -> None:
    if len(carrier) > bound:
        raise BoundExceededError(
            f"oracle enumerates 2^|A| subsets; |A| = {len(carrier)} exceeds {bound}"
        )


def oracle_lfp(
    r: RuleSet, v: Predicate | None = None, *, bound: int = ORACLE_BOUND
) -> Predicate:
    """Intersection of all closed predicates, computed by brute enumeration."""
    _check_oracle_bound(r.carrier, bound)
    acc = r.carrier.full()
    for p in r.carrier.subsets():
        closed = is_closed(r, p) if v is None else is_closed_v(r, v, p)
        if closed:
            acc = acc.intersection(p)
    return acc


def oracle_gfp(
    r: RuleSet, v: Predicate | None = None, *, bound: int = ORACLE_BOUND
) -> Predicate:
    """Union of all consistent predicates, computed by brute enumeration."""
    _check_oracle_bound(r.carrier, bound)
    acc = r.carrier.empty()
    for p in r.carrier.subsets():
        consistent = is_consistent(r, p) if v is None else is_consistent_v(r, v, p)
        if consistent:
            acc = acc.union(p)
    return acc


def verify_closed(r: RuleSet, p: Predicate, v: Predicate | None = None) -> bool:
    """Re-derive the side condition for eliminating into ``p``."""
    return is_closed(r, p) if v is None else is_closed_v(r, v, p)


def verify_consistent(r: RuleSet, p: Predicate, v: Predicate | None = None) -> bool:
    """Re-derive the side condition for introducing from ``p``."""
    return is_consistent(r, p) if v is None else is_consistent_v(r, v, p)
