"""Carriers, predicates, rule sets and indexed containers.

All values are immutable after construction and may be shared freely.
A carrier fixes a finite, ordered universe of atoms; a predicate is a
decidable subset of one carrier; a rule set attaches a finite rule list
(each rule being a premise subset) to every element; an indexed container
presents the same kind of data branch-by-branch through an arity map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import CarrierMismatchError, UnknownElementError, UnknownRuleError


@dataclass(frozen=True)
class Carrier:
    """Finite ordered sequence of distinct atoms.

    Iteration order is declaration order and is relied upon everywhere a
    deterministic choice among elements has to be made.
    """

    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        pos: dict[str, int] = {}
        for i, x in enumerate(self.elements):
            if not isinstance(x, str):
                raise TypeError(f"carrier atoms must be strings, got {x!r}")
            if x in pos:
                raise ValueError(f"duplicate carrier atom {x!r}")
            pos[x] = i
        object.__setattr__(self, "_pos", pos)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._pos  # type: ignore[attr-defined]

    def position(self, x: str) -> int:
        """Index of ``x`` in declaration order."""
        try:
            return self._pos[x]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownElementError(f"{x!r} is not a carrier element") from None

    def ordered(self, members: Iterable[str]) -> tuple[str, ...]:
        """The given elements arranged in declaration order."""
        return tuple(sorted(members, key=self.position))

    def subset(self, members: Iterable[str]) -> "Predicate":
        return Predicate(self, frozenset(members))

    def empty(self) -> "Predicate":
        return Predicate(self, frozenset())

    def full(self) -> "Predicate":
        return Predicate(self, frozenset(self.elements))

    def subsets(self) -> Iterator["Predicate"]:
        """All 2^n predicates over this carrier, in bitmask order."""
        n = len(self.elements)
        for mask in range(1 << n):
            yield Predicate(
                self,
                frozenset(x for i, x in enumerate(self.elements) if mask >> i & 1),
            )


@dataclass(frozen=True)
class Predicate:
    """Decidable subset of a carrier, compared extensionally."""

    carrier: Carrier
    members: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for x in self.members:
            if x not in self.carrier:
                raise UnknownElementError(f"{x!r} is not a carrier element")

    def _same_carrier(self, other: "Predicate") -> None:
        if self.carrier != other.carrier:
            raise CarrierMismatchError("predicates live over different carriers")

    def leq(self, other: "Predicate") -> bool:
        """Pointwise inclusion: every member of self is a member of other."""
        self._same_carrier(other)
        return self.members <= other.members

    def union(self, other: "Predicate") -> "Predicate":
        self._same_carrier(other)
        return Predicate(self.carrier, self.members | other.members)

    def intersection(self, other: "Predicate") -> "Predicate":
        self._same_carrier(other)
        return Predicate(self.carrier, self.members & other.members)

    def complement(self) -> "Predicate":
        return Predicate(
            self.carrier, frozenset(self.carrier.elements) - self.members
        )

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[str]:
        return iter(self.carrier.ordered(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        inner = ", ".join(self.carrier.ordered(self.members))
        return f"Predicate({{{inner}}})"


@dataclass(frozen=True)
class Rule:
    """One rule: an id unique within its conclusion's list, plus a premise subset."""

    id: str
    premises: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "premises", frozenset(self.premises))


@dataclass(frozen=True)
class RuleSet:
    """A carrier together with a finite rule list for every element.

    Elements missing from the ``rules`` mapping get an empty list; entries
    keyed by non-carrier atoms are kept so that ``validate_ruleset`` can
    report them.
    """

    carrier: Carrier
    rules: Mapping[str, tuple[Rule, ...]]

    def __post_init__(self):
        normalized: dict[str, tuple[Rule, ...]] = {}
        for x in self.carrier:
            normalized[x] = tuple(self.rules.get(x, ()))
        for key, value in self.rules.items():
            if key not in normalized:
                normalized[key] = tuple(value)
        object.__setattr__(self, "rules", normalized)

    def rules_of(self, a: str) -> tuple[Rule, ...]:
        if a not in self.carrier:
            raise UnknownElementError(f"{a!r} is not a carrier element")
        return self.rules[a]

    def rule(self, a: str, i: str) -> Rule:
        for rule in self.rules_of(a):
            if rule.id == i:
                return rule
        raise UnknownRuleError(f"element {a!r} has no rule {i!r}")


@dataclass(frozen=True)
class IndexedContainer:
    """Branch-and-arity presentation: options per element, branches per
    option, and a carrier element at the end of every branch."""

    carrier: Carrier
    index: Mapping[str, tuple[str, ...]]
    branches: Mapping[tuple[str, str], tuple[str, ...]]
    arity: Mapping[tuple[str, str, str], str]

    def __post_init__(self):
        index: dict[str, tuple[str, ...]] = {}
        for x in self.carrier:
            index[x] = tuple(self.index.get(x, ()))
        for key, value in self.index.items():
            if key not in index:
                index[key] = tuple(value)
        object.__setattr__(self, "index", index)
        object.__setattr__(
            self, "branches", {k: tuple(v) for k, v in self.branches.items()}
        )
        object.__setattr__(self, "arity", dict(self.arity))

    def options(self, x: str) -> tuple[str, ...]:
        if x not in self.carrier:
            raise UnknownElementError(f"{x!r} is not a carrier element")
        return self.index[x]

    def branch_ids(self, x: str, y: str) -> tuple[str, ...]:
        try:
            return self.branches[(x, y)]
        except KeyError:
            raise UnknownRuleError(f"no branch set for option {y!r} at {x!r}") from None

    def branch_label(self, x: str, y: str, z: str) -> str:
        try:
            return self.arity[(x, y, z)]
        except KeyError:
            raise UnknownRuleError(
                f"no arity entry for branch {z!r} of option {y!r} at {x!r}"
            ) from None


def validate_ruleset(r: RuleSet) -> list[str]:
    """Every invariant violation, with its location; the rule set is valid
    iff the returned list is empty."""
    violations = []
    for key in r.rules:
        if key not in r.carrier:
            violations.append(f"rules[{key!r}]: keyed by non-carrier atom")
    for x in r.carrier:
        seen: set[str] = set()
        for rule in r.rules[x]:
            if rule.id in seen:
                violations.append(f"rules[{x!r}]: duplicate rule id {rule.id!r}")
            seen.add(rule.id)
            for z in sorted(rule.premises):
                if z not in r.carrier:
                    violations.append(
                        f"rules[{x!r}][{rule.id!r}]: premise {z!r} not in carrier"
                    )
    return violations


def validate_container(k: IndexedContainer) -> list[str]:
    """Totality and codomain checks for an indexed container."""
    violations = []
    declared: set[tuple[str, str]] = set()
    for key in k.index:
        if key not in k.carrier:
            violations.append(f"index[{key!r}]: keyed by non-carrier atom")
    for x in k.carrier:
        seen: set[str] = set()
        for y in k.index.get(x, ()):
            if y in seen:
                violations.append(f"index[{x!r}]: duplicate option id {y!r}")
            seen.add(y)
            declared.add((x, y))
            if (x, y) not in k.branches:
                violations.append(f"branches[{x!r}, {y!r}]: missing entry")
                continue
            branch_seen: set[str] = set()
            for z in k.branches[(x, y)]:
                if z in branch_seen:
                    violations.append(
                        f"branches[{x!r}, {y!r}]: duplicate branch id {z!r}"
                    )
                branch_seen.add(z)
                if (x, y, z) not in k.arity:
                    violations.append(f"arity[{x!r}, {y!r}, {z!r}]: missing entry")
                elif k.arity[(x, y, z)] not in k.carrier:
                    violations.append(
                        f"arity[{x!r}, {y!r}, {z!r}]: lands outside the carrier"
                    )
    for key in k.branches:
        if key not in declared:
            violations.append(f"branches[{key!r}]: option never declared in index")
    for x, y, z in k.arity:
        if (x, y) not in declared:
            violations.append(f"arity[{(x, y, z)!r}]: option never declared in index")
        elif (x, y) in k.branches and z not in k.branches[(x, y)]:
            violations.append(f"arity[{(x, y, z)!r}]: branch never declared")
    return violations


def premises(r: RuleSet, a: str, i: str) -> Predicate:
    """The premise subset of rule ``i`` of element ``a``, as a predicate."""
    return Predicate(r.carrier, r.rule(a, i).premises)
