"""Seeded random generation of rule sets and subsets for checks and tests."""

from __future__ import annotations

import random

from .ruleset import Carrier, Predicate, Rule, RuleSet

_ALPHABET = ("a", "b", "c", "d", "e", "f", "g", "h")


def random_ruleset(
    rng: random.Random,
    *,
    max_elements: int = 4,
    max_rules: int = 2,
) -> RuleSet:
    """A rule set over 1..max_elements atoms with 0..max_rules rules each."""
    n = rng.randint(1, min(max_elements, len(_ALPHABET)))
    carrier = Carrier(_ALPHABET[:n])
    rules: dict[str, tuple[Rule, ...]] = {}
    for x in carrier:
        count = rng.randint(0, max_rules)
        rules[x] = tuple(
            Rule(f"r{j}", frozenset(rng.sample(carrier.elements, rng.randint(0, n))))
            for j in range(count)
        )
    return RuleSet(carrier, rules)


def random_subset(rng: random.Random, carrier: Carrier) -> Predicate:
    return Predicate(
        carrier, frozenset(x for x in carrier if rng.random() < 0.5)
    )
