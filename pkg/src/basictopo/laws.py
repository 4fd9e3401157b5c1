"""Law checker for the generated cover / positivity pair.

Each check quantifies over pairs of subsets (exhaustively up to a small
carrier bound, otherwise by seeded sampling) and reports per-law verdicts
with a first counterexample instead of raising.  Laws whose quantifier
placement is contested in the literature are evaluated in both readings;
only the ``gating`` ones are meant to hold on every rule set, the others
are informative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BoundExceededError
from .fixpoint import coind_predicate, cover, positivity
from .ruleset import Predicate, RuleSet
from .sampling import random_subset

EXHAUSTIVE_DEFAULT = 4
EXHAUSTIVE_LIMIT = 8


@dataclass(frozen=True)
class LawCheck:
    law: str
    gating: bool
    holds: bool
    checked: int
    counterexample: str | None

    def to_payload(self) -> dict:
        return {
            "law": self.law,
            "gating": self.gating,
            "holds": self.holds,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class LawReport:
    mode: str  # "exhaustive" | "sampled"
    seed: int | None
    samples: int | None
    checks: tuple[LawCheck, ...]

    def all_gating_hold(self) -> bool:
        return all(check.holds for check in self.checks if check.gating)

    def to_payload(self) -> dict:
        return {
            "report": "laws",
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
            "checks": [check.to_payload() for check in self.checks],
        }


def _fmt(p: Predicate) -> str:
    return "{" + ", ".join(sorted(p.members)) + "}"


class _SubsetPairs:
    """Pair source shared by all laws of one report: either every (U, V)
    pair or a seeded sample, with memoized cover/positivity maps."""

    def __init__(
        self,
        r: RuleSet,
        exhaustive: bool | None,
        samples: int,
        seed: int,
    ):
        self.r = r
        size = len(r.carrier)
        if exhaustive is None:
            exhaustive = size <= EXHAUSTIVE_DEFAULT
        if exhaustive and size > EXHAUSTIVE_LIMIT:
            raise BoundExceededError(
                f"exhaustive law check over 4^|A| pairs with |A| = {size}; "
                f"limit is {EXHAUSTIVE_LIMIT}"
            )
        self.exhaustive = exhaustive
        self.mode = "exhaustive" if exhaustive else "sampled"
        self.seed = None if exhaustive else seed
        self.samples = None if exhaustive else samples
        if exhaustive:
            self.pairs = [
                (u, v) for u in r.carrier.subsets() for v in r.carrier.subsets()
            ]
        else:
            rng = random.Random(seed)
            self.pairs = [
                (random_subset(rng, r.carrier), random_subset(rng, r.carrier))
                for _ in range(samples)
            ]
        self._cover: dict[Predicate, Predicate] = {}
        self._pos: dict[Predicate, Predicate] = {}

    def cover(self, v: Predicate) -> Predicate:
        if v not in self._cover:
            self._cover[v] = cover(self.r, v)
        return self._cover[v]

    def pos(self, v: Predicate) -> Predicate:
        if v not in self._pos:
            self._pos[v] = positivity(self.r, v)
        return self._pos[v]

    def report(self, checks: list[LawCheck]) -> LawReport:
        return LawReport(self.mode, self.seed, self.samples, tuple(checks))


def _run_law(pairs: _SubsetPairs, law, name: str, gating: bool) -> LawCheck:
    checked = 0
    for u, v in pairs.pairs:
        checked += 1
        witness = law(u, v)
        if witness is not None:
            return LawCheck(name, gating, False, checked, witness)
    return LawCheck(name, gating, True, checked, None)


def check_cover_laws(
    r: RuleSet,
    *,
    exhaustive: bool | None = None,
    samples: int = 100,
    seed: int = 0,
) -> LawReport:
    """Reflexivity and transitivity of the generated cover."""
    pairs = _SubsetPairs(r, exhaustive, samples, seed)

    def reflexivity(u: Predicate, v: Predicate) -> str | None:
        if not v.leq(pairs.cover(v)):
            stray = next(x for x in v if x not in pairs.cover(v))
            return f"a={stray}, V={_fmt(v)}: member of V not covered"
        return None

    def transitivity(u: Predicate, v: Predicate) -> str | None:
        cov_u = pairs.cover(u)
        cov_v = pairs.cover(v)
        if u.leq(cov_v) and not cov_u.leq(cov_v):
            stray = next(x for x in cov_u if x not in cov_v)
            return f"a={stray}, U={_fmt(u)}, V={_fmt(v)}"
        return None

    return pairs.report(
        [
            _run_law(pairs, reflexivity, "reflexivity", True),
            _run_law(pairs, transitivity, "transitivity", True),
        ]
    )


def check_positivity_laws(
    r: RuleSet,
    *,
    exhaustive: bool | None = None,
    samples: int = 100,
    seed: int = 0,
) -> LawReport:
    """Coreflexivity and cotransitivity of the generated positivity.

    Cotransitivity is gated in the reading "a pos U and everything positive
    in U is a member of V imply a pos V"; the swapped reading (positivity of
    V inside U) is evaluated as well but only reported, since it fails on
    easy instances (take V empty).
    """
    pairs = _SubsetPairs(r, exhaustive, samples, seed)

    def coreflexivity(u: Predicate, v: Predicate) -> str | None:
        if not pairs.pos(v).leq(v):
            stray = next(x for x in pairs.pos(v) if x not in v)
            return f"a={stray}, V={_fmt(v)}: positive but not a member"
        return None

    def cotransitivity(u: Predicate, v: Predicate) -> str | None:
        pos_u = pairs.pos(u)
        if pos_u.leq(v) and not pos_u.leq(pairs.pos(v)):
            stray = next(x for x in pos_u if x not in pairs.pos(v))
            return f"a={stray}, U={_fmt(u)}, V={_fmt(v)}"
        return None

    def cotransitivity_swapped(u: Predicate, v: Predicate) -> str | None:
        if pairs.pos(v).leq(u) and not pairs.pos(u).leq(pairs.pos(v)):
            stray = next(x for x in pairs.pos(u) if x not in pairs.pos(v))
            return f"a={stray}, U={_fmt(u)}, V={_fmt(v)}"
        return None

    return pairs.report(
        [
            _run_law(pairs, coreflexivity, "coreflexivity", True),
            _run_law(pairs, cotransitivity, "cotransitivity", True),
            _run_law(pairs, cotransitivity_swapped, "cotransitivity-swapped", False),
        ]
    )


def check_compatibility(
    r: RuleSet,
    *,
    exhaustive: bool | None = None,
    samples: int = 100,
    seed: int = 0,
) -> LawReport:
    """Compatibility of cover and positivity, in both quantifier placements.

    Gating form: a pos V and a covered-by U imply some member of U is
    positive in V.  The variant asking for a member of V positive in U is
    reported only.
    """
    pairs = _SubsetPairs(r, exhaustive, samples, seed)

    def witness_in_u(u: Predicate, v: Predicate) -> str | None:
        pos_v = pairs.pos(v)
        cov_u = pairs.cover(u)
        for a in r.carrier:
            if a in pos_v and a in cov_u:
                if not any(x in pos_v for x in u):
                    return f"a={a}, U={_fmt(u)}, V={_fmt(v)}"
        return None

    def witness_in_v(u: Predicate, v: Predicate) -> str | None:
        pos_u = pairs.pos(u)
        pos_v = pairs.pos(v)
        cov_u = pairs.cover(u)
        for a in r.carrier:
            if a in pos_v and a in cov_u:
                if not any(x in pos_u for x in v):
                    return f"a={a}, U={_fmt(u)}, V={_fmt(v)}"
        return None

    return pairs.report(
        [
            _run_law(pairs, witness_in_u, "compatibility", True),
            _run_law(pairs, witness_in_v, "compatibility-witness-in-v", False),
        ]
    )


@dataclass(frozen=True)
class AxiomCheck:
    element: str
    rule: str
    cover_holds: bool
    positivity_applicable: bool
    positivity_holds: bool | None

    def to_payload(self) -> dict:
        return {
            "element": self.element,
            "rule": self.rule,
            "cover_holds": self.cover_holds,
            "positivity_applicable": self.positivity_applicable,
            "positivity_holds": self.positivity_holds,
        }


@dataclass(frozen=True)
class GeneratedAxiomsReport:
    axioms: tuple[AxiomCheck, ...]

    def cover_all_hold(self) -> bool:
        return all(axiom.cover_holds for axiom in self.axioms)

    def to_payload(self) -> dict:
        return {
            "report": "generated-axioms",
            "axioms": [axiom.to_payload() for axiom in self.axioms],
        }


def check_generated_axioms(r: RuleSet) -> GeneratedAxiomsReport:
    """Per rule (a, i): is ``a`` covered by its own premises (must hold),
    and - when ``a`` is coinductively alive and belongs to its premises -
    is it positive in them (informative)."""
    alive = coind_predicate(r)
    axioms = []
    for a in r.carrier:
        for rule in r.rules_of(a):
            premise_set = Predicate(r.carrier, rule.premises)
            cover_holds = a in cover(r, premise_set)
            applicable = a in alive and a in rule.premises
            pos_holds = a in positivity(r, premise_set) if applicable else None
            axioms.append(
                AxiomCheck(a, rule.id, cover_holds, applicable, pos_holds)
            )
    return GeneratedAxiomsReport(tuple(axioms))
