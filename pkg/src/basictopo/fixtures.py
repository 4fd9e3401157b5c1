"""Canonical rule-set fixtures shared by the test suite, demos and docs.

R0  three elements, no rules at all.
R1  a linear chain  a <- b <- c  with a rule-less end point.
R2  an axiom at a, a one-step rule at b, and a self-sustaining rule at c.
R3  a finite truncation of the binary tree of sequences: nodes are the
    bit strings of length <= 2 (the empty one is spelled "nil").  Every
    node of length < 2 has an "extend" rule whose premises are its two
    one-step extensions, and every node has one "prefix:<l>" rule per
    proper prefix l with premises {l}; the length-2 leaves get no extend
    rule, which is where the truncation cuts off.
"""

from __future__ import annotations

from .ruleset import Carrier, Rule, RuleSet

R0 = RuleSet(Carrier(("a", "b", "c")), {})

R1 = RuleSet(
    Carrier(("a", "b", "c")),
    {
        "a": (Rule("r", frozenset({"b"})),),
        "b": (Rule("r", frozenset({"c"})),),
    },
)

R2 = RuleSet(
    Carrier(("a", "b", "c")),
    {
        "a": (Rule("ax", frozenset()),),
        "b": (Rule("r", frozenset({"a"})),),
        "c": (Rule("r", frozenset({"b", "c"})),),
    },
)


def _binary_words(max_length: int) -> list[str]:
    words = [""]
    frontier = [""]
    for _ in range(max_length):
        frontier = [w + bit for w in frontier for bit in "01"]
        words.extend(frontier)
    return words


def _word_atom(word: str) -> str:
    return word if word else "nil"


def _baire_truncation(max_length: int) -> RuleSet:
    words = _binary_words(max_length)
    carrier = Carrier(tuple(_word_atom(w) for w in words))
    rules: dict[str, tuple[Rule, ...]] = {}
    for w in words:
        rule_list: list[Rule] = []
        if len(w) < max_length:
            rule_list.append(
                Rule("extend", frozenset({_word_atom(w + "0"), _word_atom(w + "1")}))
            )
        for cut in range(len(w)):
            prefix = w[:cut]
            rule_list.append(
                Rule(f"prefix:{_word_atom(prefix)}", frozenset({_word_atom(prefix)}))
            )
        rules[_word_atom(w)] = tuple(rule_list)
    return RuleSet(carrier, rules)


R3 = _baire_truncation(2)

# The "bar" at depth 2: every length-2 node.  Covering nil by this subset is
# the worked query shipped with R3.
R3_BAR = R3.carrier.subset(["00", "01", "10", "11"])

FIXTURES: dict[str, RuleSet] = {"r0": R0, "r1": R1, "r2": R2, "r3": R3}
