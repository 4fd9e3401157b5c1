"""Proof objects with executable recursors.

Derivation trees certify membership in the inductive predicate, cover
proofs add a reflexivity leaf for elements of V, coinduction witnesses
package a consistent support with one chosen premise per (element, rule),
and W-trees / dependent W-trees are the container-shaped relatives.

Membership evidence is proof-irrelevant here: the canonical token standing
for "x is a member of V" (or "z is a premise of the rule") is the element
itself.  Extraction is deterministic: the first applicable rule in
declaration order wins, and among premises the first in carrier order.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, replace
from typing import Callable, Mapping, Union

from .errors import (
    NotPositiveError,
    ProofError,
    UnderivableError,
    UnknownElementError,
    UnknownRuleError,
)
from .fixpoint import FixpointTrace, coind_predicate, positivity
from .ruleset import IndexedContainer, Predicate, RuleSet


@dataclass(frozen=True)
class DerivationTree:
    """One rule application per node; children are keyed by premise element."""

    conclusion: str
    rule: str
    children: Mapping[str, "CoverProof"]

    def __post_init__(self):
        object.__setattr__(self, "children", dict(self.children))


@dataclass(frozen=True)
class ReflexivityProof:
    """Leaf certifying that the conclusion is a member of V."""

    conclusion: str


CoverProof = Union[DerivationTree, ReflexivityProof]


def extract_derivation(
    r: RuleSet, a: str, trace: FixpointTrace, v: Predicate | None = None
) -> CoverProof:
    """Read a proof object off an lfp trace.

    Elements of ``v`` become reflexivity leaves; everything else is proved
    by the first rule (declaration order) whose premises all have strictly
    smaller rank.  Raises ``UnderivableError`` when ``a`` is not in the
    trace's final stage.
    """
    if trace.kind != "lfp":
        raise ProofError("extraction needs a least-fixed-point trace")
    if a not in trace.final:
        raise UnderivableError(f"{a!r} is not in the computed predicate")
    rank = trace.rank

    def build(x: str) -> CoverProof:
        if v is not None and x in v:
            return ReflexivityProof(x)
        for rule in r.rules_of(x):
            if all(rank.get(z, sys.maxsize) < rank[x] for z in rule.premises):
                return DerivationTree(
                    x,
                    rule.id,
                    {z: build(z) for z in r.carrier.ordered(rule.premises)},
                )
        raise UnderivableError(f"no rank-decreasing rule at {x!r}; stale trace?")

    return build(a)


def derivation_failure(
    r: RuleSet, t: CoverProof, v: Predicate | None = None
) -> str | None:
    """Location of the first invalid node, or None when the proof checks out."""

    def walk(node: CoverProof, path: str) -> str | None:
        if isinstance(node, ReflexivityProof):
            if v is None:
                return f"{path}: reflexivity leaf outside a cover proof"
            if node.conclusion not in v:
                return f"{path}: {node.conclusion!r} is not a member of V"
            return None
        if not isinstance(node, DerivationTree):
            return f"{path}: not a proof node"
        if node.conclusion not in r.carrier:
            return f"{path}: unknown element {node.conclusion!r}"
        try:
            rule = r.rule(node.conclusion, node.rule)
        except UnknownRuleError:
            return f"{path}: element {node.conclusion!r} has no rule {node.rule!r}"
        if set(node.children) != set(rule.premises):
            return f"{path}: children do not match the premises of rule {node.rule!r}"
        for z in r.carrier.ordered(node.children):
            child = node.children[z]
            if child.conclusion != z:
                return f"{path}.{z}: child concludes {child.conclusion!r} instead"
            failure = walk(child, f"{path}.{z}")
            if failure is not None:
                return failure
        return None

    return walk(t, "root")


def check_derivation(r: RuleSet, t: CoverProof, v: Predicate | None = None) -> bool:
    """True iff every node applies a real rule to exactly its premises
    (reflexivity leaves: membership in ``v``)."""
    return derivation_failure(r, t, v) is None


def eval_ind_recursor(
    r: RuleSet,
    t: DerivationTree,
    step: Callable[[str, str, Mapping[str, object]], object],
) -> object:
    """Structural fold over a derivation tree.

    On a node built from rule i with premise proofs p this equals
    ``step(a, i, {z: fold(p(z))})``, which is the conversion rule taken
    literally.
    """
    failure = derivation_failure(r, t)
    if failure is not None:
        raise ProofError(failure)

    def fold(node: DerivationTree) -> object:
        return step(
            node.conclusion,
            node.rule,
            {z: fold(child) for z, child in node.children.items()},
        )

    return fold(t)


def eval_cover_recursor(
    r: RuleSet,
    v: Predicate,
    p: CoverProof,
    q1: Callable[[str, str], object],
    q2: Callable[[str, str, Mapping[str, object]], object],
) -> object:
    """Fold over a cover proof: reflexivity leaves go through ``q1`` (with the
    canonical membership token), rule nodes through ``q2``."""
    failure = derivation_failure(r, p, v)
    if failure is not None:
        raise ProofError(failure)

    def fold(node: CoverProof) -> object:
        if isinstance(node, ReflexivityProof):
            return q1(node.conclusion, node.conclusion)
        return fold_rule(node)

    def fold_rule(node: DerivationTree) -> object:
        return q2(
            node.conclusion,
            node.rule,
            {z: fold(child) for z, child in node.children.items()},
        )

    return fold(p)


@dataclass(frozen=True)
class CoinductionWitness:
    """A consistent support plus one chosen in-support premise per rule.

    The continuation table is exactly "support is consistent" made
    functional; ``v`` is present only for positivity witnesses and then
    contains the support.
    """

    support: Predicate
    start: str
    v: Predicate | None
    continuations: Mapping[tuple[str, str], str]

    def __post_init__(self):
        object.__setattr__(self, "continuations", dict(self.continuations))


def build_coind_witness(
    r: RuleSet, a: str, v: Predicate | None = None
) -> CoinductionWitness:
    """Witness that ``a`` is in the coinductive predicate (or the positivity
    of ``v``): support is the computed greatest fixed point, continuations
    pick the first in-support premise in carrier order."""
    support = coind_predicate(r) if v is None else positivity(r, v)
    if a not in support:
        raise NotPositiveError(f"{a!r} is not in the coinductive predicate")
    continuations: dict[tuple[str, str], str] = {}
    for x in support:
        for rule in r.rules_of(x):
            for z in r.carrier.ordered(rule.premises):
                if z in support:
                    continuations[(x, rule.id)] = z
                    break
    return CoinductionWitness(support, a, v, continuations)


def witness_failure(
    r: RuleSet, w: CoinductionWitness, v: Predicate | None = None
) -> str | None:
    """Location of the first broken witness invariant, or None."""
    if w.support.carrier != r.carrier:
        return "support: built over a different carrier"
    if v is None and w.v is not None:
        return "v: witness carries a V but a plain coinductive claim was expected"
    if v is not None:
        if w.v != v:
            return "v: witness V differs from the V being checked"
        if not w.support.leq(v):
            return "support: not contained in V"
    if w.start not in w.support:
        return f"start: {w.start!r} is not in the support"
    domain = {(x, rule.id) for x in w.support for rule in r.rules_of(x)}
    for key in w.continuations:
        if key not in domain:
            return f"continuations[{key!r}]: outside support x rules"
    for x in w.support:
        for rule in r.rules_of(x):
            key = (x, rule.id)
            if key not in w.continuations:
                return f"continuations[{key!r}]: missing"
            z = w.continuations[key]
            if z not in rule.premises:
                return f"continuations[{key!r}]: {z!r} is not a premise of the rule"
            if z not in w.support:
                return f"continuations[{key!r}]: {z!r} leaves the support"
    return None


def verify_coind_witness(
    r: RuleSet, w: CoinductionWitness, v: Predicate | None = None
) -> bool:
    return witness_failure(r, w, v) is None


def des(w: CoinductionWitness, i: str) -> tuple[str, CoinductionWitness]:
    """One unfolding step: the chosen premise of rule ``i`` at the start
    element, and the witness re-rooted there."""
    key = (w.start, i)
    if key not in w.continuations:
        raise UnknownRuleError(f"witness start {w.start!r} has no rule {i!r}")
    z = w.continuations[key]
    return z, replace(w, start=z)


def corf(w: CoinductionWitness) -> str:
    """The V-membership token of the start element (positivity witnesses only)."""
    if w.v is None:
        raise ProofError("plain coinduction witness has no V component")
    if w.start not in w.v:
        raise ProofError(f"start {w.start!r} is not a member of V")
    return w.start


def cotr(w: CoinductionWitness, i: str) -> tuple[str, str, CoinductionWitness]:
    """One unfolding step packaged with the premise-membership token."""
    z, rest = des(w, i)
    return z, z, rest


@dataclass(frozen=True)
class WContainer:
    """Plain container: node labels and a fixed branch set per label."""

    labels: tuple[str, ...]
    branches: Mapping[str, tuple[str, ...]]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")
        normalized = {a: tuple(self.branches.get(a, ())) for a in self.labels}
        for key in self.branches:
            if key not in normalized:
                raise UnknownElementError(f"branch entry for unknown label {key!r}")
        object.__setattr__(self, "branches", normalized)

    def branch_ids(self, a: str) -> tuple[str, ...]:
        try:
            return self.branches[a]
        except KeyError:
            raise UnknownElementError(f"{a!r} is not a label") from None


@dataclass(frozen=True)
class WTree:
    """Wellfounded tree over a plain container; build with ``wtree_sup``."""

    label: str
    children: Mapping[str, "WTree"]

    def __post_init__(self):
        object.__setattr__(self, "children", dict(self.children))


def wtree_sup(
    c: WContainer, label: str, children: Mapping[str, WTree] | None = None
) -> WTree:
    children = dict(children or {})
    if set(children) != set(c.branch_ids(label)):
        raise ProofError(
            f"children of {label!r} do not match its branch set {c.branch_ids(label)!r}"
        )
    return WTree(label, children)


def wtree_recursor(
    c: WContainer,
    t: WTree,
    d: Callable[[str, Mapping[str, WTree], Mapping[str, object]], object],
) -> object:
    """Structural fold: on sup(a, f) this equals ``d(a, f, {y: fold(f(y))})``."""

    def fold(node: WTree) -> object:
        if set(node.children) != set(c.branch_ids(node.label)):
            raise ProofError(f"node {node.label!r} does not match its branch set")
        return d(
            node.label,
            node.children,
            {y: fold(child) for y, child in node.children.items()},
        )

    return fold(t)


@dataclass(frozen=True)
class DWTree:
    """Dependent wellfounded tree; subtree root labels are forced by the
    container's arity map.  Build with ``dw_sup``."""

    label: str
    option: str
    children: Mapping[str, "DWTree"]

    def __post_init__(self):
        object.__setattr__(self, "children", dict(self.children))


def _check_dw_node(k: IndexedContainer, node: DWTree) -> None:
    if node.option not in k.options(node.label):
        raise ProofError(f"{node.label!r} has no option {node.option!r}")
    expected = k.branch_ids(node.label, node.option)
    if set(node.children) != set(expected):
        raise ProofError(
            f"children of {node.label!r}/{node.option!r} do not match branch set"
        )
    for z in expected:
        want = k.branch_label(node.label, node.option, z)
        got = node.children[z].label
        if got != want:
            raise ProofError(
                f"subtree at branch {z!r} is rooted at {got!r}, expected {want!r}"
            )


def dw_sup(
    k: IndexedContainer,
    a: str,
    i: str,
    children: Mapping[str, DWTree] | None = None,
) -> DWTree:
    node = DWTree(a, i, dict(children or {}))
    _check_dw_node(k, node)
    return node


def dw_recursor(
    k: IndexedContainer,
    t: DWTree,
    d: Callable[[str, str, Mapping[str, DWTree], Mapping[str, object]], object],
) -> object:
    """Structural fold: on dsup(a, i, f) this equals
    ``d(a, i, f, {z: fold(f(z))})``."""

    def fold(node: DWTree) -> object:
        _check_dw_node(k, node)
        return d(
            node.label,
            node.option,
            node.children,
            {z: fold(child) for z, child in node.children.items()},
        )

    return fold(t)
