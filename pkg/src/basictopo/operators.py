"""One-step derivability and confutability operators.

Each function is a total, pure map on predicates over a fixed carrier.
Vacuous quantifiers are read the standard way: an element without rules
is never derivable and always confutable, a rule without premises fires
unconditionally for derivability and blocks confutability.
"""

from __future__ import annotations

from .errors import CarrierMismatchError
from .ruleset import IndexedContainer, Predicate, RuleSet


def _check(carrier, p: Predicate) -> None:
    if p.carrier != carrier:
        raise CarrierMismatchError("predicate lives over a different carrier")


def der(r: RuleSet, p: Predicate) -> Predicate:
    """Elements derivable in one rule application from ``p``: some rule has
    all its premises in ``p``."""
    _check(r.carrier, p)
    return Predicate(
        r.carrier,
        frozenset(
            x
            for x in r.carrier
            if any(rule.premises <= p.members for rule in r.rules_of(x))
        ),
    )


def conf(r: RuleSet, p: Predicate) -> Predicate:
    """Elements confutable in one backward-search step from ``p``: every rule
    has at least one premise in ``p``."""
    _check(r.carrier, p)
    return Predicate(
        r.carrier,
        frozenset(
            x
            for x in r.carrier
            if all(rule.premises & p.members for rule in r.rules_of(x))
        ),
    )


def der_v(r: RuleSet, v: Predicate, p: Predicate) -> Predicate:
    """Derivability extended by the reflexivity clause: in ``v`` or derivable."""
    _check(r.carrier, v)
    return Predicate(r.carrier, v.members | der(r, p).members)


def conf_v(r: RuleSet, v: Predicate, p: Predicate) -> Predicate:
    """Confutability restricted to ``v``: in ``v`` and confutable."""
    _check(r.carrier, v)
    return Predicate(r.carrier, v.members & conf(r, p).members)


def der_container(k: IndexedContainer, p: Predicate) -> Predicate:
    """Container form of derivability: some option has every branch's arity in ``p``."""
    _check(k.carrier, p)
    return Predicate(
        k.carrier,
        frozenset(
            x
            for x in k.carrier
            if any(
                all(k.branch_label(x, y, z) in p for z in k.branch_ids(x, y))
                for y in k.options(x)
            )
        ),
    )


def conf_container(k: IndexedContainer, p: Predicate) -> Predicate:
    """Container form of confutability: every option has some branch's arity in ``p``."""
    _check(k.carrier, p)
    return Predicate(
        k.carrier,
        frozenset(
            x
            for x in k.carrier
            if all(
                any(k.branch_label(x, y, z) in p for z in k.branch_ids(x, y))
                for y in k.options(x)
            )
        ),
    )


def is_closed(r: RuleSet, p: Predicate) -> bool:
    """``p`` absorbs one forward step: der(p) <= p."""
    return der(r, p).leq(p)


def is_consistent(r: RuleSet, p: Predicate) -> bool:
    """``p`` survives one backward step: p <= conf(p)."""
    return p.leq(conf(r, p))


def is_closed_v(r: RuleSet, v: Predicate, p: Predicate) -> bool:
    return der_v(r, v, p).leq(p)


def is_consistent_v(r: RuleSet, v: Predicate, p: Predicate) -> bool:
    return p.leq(conf_v(r, v, p))
