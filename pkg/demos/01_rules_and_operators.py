"""Rule sets and the one-step operators.

A rule set attaches rules to the elements of a finite carrier; each rule
is just a subset of premises.  Reading the rules forward gives the
derivability operator (some rule with all premises satisfied), reading
them backward gives confutability (every rule has a refuted premise).
"""

from basictopo import (
    Carrier,
    Rule,
    RuleSet,
    conf,
    der,
    is_closed,
    is_consistent,
    premises,
    validate_ruleset,
)

# A tiny deduction system: a is an axiom, b follows from a, and c needs
# both b and itself (so c can never be derived, but backward search on c
# never terminates either).
abc = Carrier(("a", "b", "c"))
system = RuleSet(
    abc,
    {
        "a": (Rule("ax", frozenset()),),
        "b": (Rule("from-a", frozenset({"a"})),),
        "c": (Rule("loop", frozenset({"b", "c"})),),
    },
)

print("violations:", validate_ruleset(system) or "none")
print("premises of b/from-a:", sorted(premises(system, "b", "from-a").members))

# One forward step from nothing: only the axiom fires.
print("der({}) =", sorted(der(system, abc.empty()).members))

# One forward step from {a}: now b fires as well.
print("der({a}) =", sorted(der(system, abc.subset(['a'])).members))

# One backward step from everything: a survives nothing (its axiom rule
# has no premise to refute), b and c point at refutable premises.
print("conf(full) =", sorted(conf(system, abc.full()).members))

# Closed means: one forward step adds nothing new.
print("is {a,b} closed?", is_closed(system, abc.subset(["a", "b"])))
print("is {} closed?", is_closed(system, abc.empty()), "(the axiom escapes)")

# Consistent means: every member survives one backward step.
print("is {c} consistent?", is_consistent(system, abc.subset(["c"])))
