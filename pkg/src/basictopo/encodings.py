"""Executable inter-encodings between the (co)inductive constructions.

Covers reduce to plain inductive predicates by enlarging the rule set
with one axiom per V-element; positivity reduces to plain coinduction by
restricting the carrier to V.  Rule sets and indexed containers translate
into each other, and confutability itself is derivability over a
container whose options are choice functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundExceededError, CarrierMismatchError, ProofError
from .fixpoint import coind_predicate, ind_predicate
from .proofs import CoverProof, DerivationTree, ReflexivityProof, derivation_failure
from .ruleset import (
    Carrier,
    IndexedContainer,
    Predicate,
    Rule,
    RuleSet,
    validate_container,
)

# Rule id of the axioms added by ``enlarge``; reserved.
V_RULE_ID = "v:rf"

CHOICE_BOUND = 4096


def _check_v(r: RuleSet, v: Predicate) -> None:
    if v.carrier != r.carrier:
        raise CarrierMismatchError("V lives over a different carrier")


def enlarge(r: RuleSet, v: Predicate) -> RuleSet:
    """Add one premise-free axiom (id ``v:rf``) to every element of ``v``.

    The inductive predicate of the result is the cover of ``v`` in the
    original rule set.  The new axiom is put first so that deterministic
    extraction prefers it, mirroring the reflexivity-first choice made for
    cover proofs.
    """
    _check_v(r, v)
    rules: dict[str, tuple[Rule, ...]] = {}
    for x in r.carrier:
        original = r.rules_of(x)
        if x in v:
            if any(rule.id == V_RULE_ID for rule in original):
                raise ValueError(f"rule id {V_RULE_ID!r} is reserved (element {x!r})")
            rules[x] = (Rule(V_RULE_ID, frozenset()),) + original
        else:
            rules[x] = original
    return RuleSet(r.carrier, rules)


def translate_cover_proof(r: RuleSet, v: Predicate, p: CoverProof) -> DerivationTree:
    """Transport a cover proof to a derivation tree over ``enlarge(r, v)``:
    reflexivity leaves become applications of the added axiom."""
    failure = derivation_failure(r, p, v)
    if failure is not None:
        raise ProofError(failure)

    def go(node: CoverProof) -> DerivationTree:
        if isinstance(node, ReflexivityProof):
            return DerivationTree(node.conclusion, V_RULE_ID, {})
        return DerivationTree(
            node.conclusion,
            node.rule,
            {z: go(child) for z, child in node.children.items()},
        )

    return go(p)


def untranslate_cover_proof(r: RuleSet, v: Predicate, t: DerivationTree) -> CoverProof:
    """Inverse of ``translate_cover_proof``: applications of the added axiom
    become reflexivity leaves."""
    failure = derivation_failure(enlarge(r, v), t)
    if failure is not None:
        raise ProofError(failure)

    def go(node: DerivationTree) -> CoverProof:
        if node.rule == V_RULE_ID:
            return ReflexivityProof(node.conclusion)
        return DerivationTree(
            node.conclusion,
            node.rule,
            {z: go(child) for z, child in node.children.items()},
        )

    return go(t)


def restrict(r: RuleSet, v: Predicate) -> RuleSet:
    """Comprehension on ``v``: the carrier shrinks to the members of ``v``
    and every premise set is intersected with ``v``.

    The coinductive predicate of the result, read back inside ``v``, is the
    positivity of ``v`` in the original rule set.
    """
    _check_v(r, v)
    carrier = Carrier(tuple(x for x in r.carrier if x in v))
    rules = {
        x: tuple(Rule(rule.id, rule.premises & v.members) for rule in r.rules_of(x))
        for x in carrier
    }
    return RuleSet(carrier, rules)


def container_of_ruleset(r: RuleSet) -> IndexedContainer:
    """One option per rule; one branch per premise element, landing on it."""
    index: dict[str, tuple[str, ...]] = {}
    branches: dict[tuple[str, str], tuple[str, ...]] = {}
    arity: dict[tuple[str, str, str], str] = {}
    for x in r.carrier:
        rules = r.rules_of(x)
        index[x] = tuple(rule.id for rule in rules)
        for rule in rules:
            premise_order = r.carrier.ordered(rule.premises)
            branches[(x, rule.id)] = premise_order
            for z in premise_order:
                arity[(x, rule.id, z)] = z
    return IndexedContainer(r.carrier, index, branches, arity)


def ruleset_of_container(k: IndexedContainer) -> RuleSet:
    """One rule per option; premises are the image of the arity map, so
    branches sharing a label collapse into one premise."""
    violations = validate_container(k)
    if violations:
        raise ValueError(f"malformed container: {violations[0]}")
    rules = {
        x: tuple(
            Rule(y, frozenset(k.branch_label(x, y, z) for z in k.branch_ids(x, y)))
            for y in k.options(x)
        )
        for x in k.carrier
    }
    return RuleSet(k.carrier, rules)


def conf_as_der(r: RuleSet, *, max_options: int = CHOICE_BOUND) -> IndexedContainer:
    """Present confutability as container derivability.

    Options at ``x`` are the choice functions picking one premise from each
    rule of ``x``; each option has one branch per rule, landing on the
    chosen premise.  An element without rules keeps the single empty choice
    function (hence is always "derivable"), while a rule with no premises
    admits no choice function at all (its element never is).  The number of
    choice functions is the product of the premise-set sizes and is capped
    by ``max_options``.
    """
    index: dict[str, tuple[str, ...]] = {}
    branches: dict[tuple[str, str], tuple[str, ...]] = {}
    arity: dict[tuple[str, str, str], str] = {}
    for x in r.carrier:
        rules = r.rules_of(x)
        per_rule = [r.carrier.ordered(rule.premises) for rule in rules]
        count = 1
        for premise_list in per_rule:
            count *= len(premise_list)
        if count > max_options:
            raise BoundExceededError(
                f"element {x!r} has {count} choice functions; cap is {max_options}"
            )
        options = []
        rule_ids = tuple(rule.id for rule in rules)
        for j, picks in enumerate(itertools.product(*per_rule)):
            option = f"f{j}"
            options.append(option)
            branches[(x, option)] = rule_ids
            for rule_id, z in zip(rule_ids, picks):
                arity[(x, option, rule_id)] = z
        index[x] = tuple(options)
    return IndexedContainer(r.carrier, index, branches, arity)


@dataclass(frozen=True)
class DualityReport:
    """Inductive and coinductive predicates side by side, with the verdict
    that they are complements of each other."""

    ind: Predicate
    coind: Predicate
    holds: bool

    def to_payload(self) -> dict:
        return {
            "report": "complement-duality",
            "ind": sorted(self.ind.members),
            "coind": sorted(self.coind.members),
            "holds": self.holds,
        }


def complement_dual(r: RuleSet) -> DualityReport:
    ind = ind_predicate(r)
    coind = coind_predicate(r)
    return DualityReport(ind, coind, ind.complement() == coind)
