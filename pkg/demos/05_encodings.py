"""Every construction encodes into its neighbours, executably.

Covers are inductive predicates over an enlarged rule set; positivity is
coinduction over a restricted one; rule sets and indexed containers
translate back and forth; and confutability itself is container
derivability once options become choice functions.
"""

from basictopo import (
    R1,
    R2,
    ReflexivityProof,
    check_derivation,
    coind_predicate,
    conf,
    conf_as_der,
    container_of_ruleset,
    cover,
    cover_with_trace,
    der_container,
    enlarge,
    extract_derivation,
    ind_predicate,
    positivity,
    restrict,
    ruleset_of_container,
    translate_cover_proof,
    untranslate_cover_proof,
)

v = R1.carrier.subset(["c"])
grown = enlarge(R1, v)
print("rules of c after enlarging by V={c}:",
      [rule.id for rule in grown.rules_of("c")])
print("ind over the enlarged system:", sorted(ind_predicate(grown).members))
print("cover in the original system:", sorted(cover(R1, v).members))

# Proofs transport along the same encoding and back.
_, trace = cover_with_trace(R1, v)
proof = extract_derivation(R1, "a", trace, v)
tree = translate_cover_proof(R1, v, proof)
print("\ntransported proof is valid over the enlarged system:",
      check_derivation(grown, tree))
print("round trip restores the original proof:",
      untranslate_cover_proof(R1, v, tree) == proof)
print("a bare reflexivity leaf becomes an axiom application:",
      translate_cover_proof(R1, v, ReflexivityProof("c")))

w = R2.carrier.subset(["b", "c"])
shrunk = restrict(R2, w)
print("\nrestricted carrier:", list(shrunk.carrier))
print("coind over the restriction:", sorted(coind_predicate(shrunk).members))
print("positivity in the original:", sorted(positivity(R2, w).members))

k = container_of_ruleset(R2)
print("\ncontainer of R2 round-trips:", ruleset_of_container(k) == R2)

choice = conf_as_der(R2)
print("choice-function options per element:",
      {x: len(choice.options(x)) for x in R2.carrier})
print("  (a's axiom rule admits no choice function, so a has none)")
agree = all(conf(R2, p) == der_container(choice, p) for p in R2.carrier.subsets())
print("conf = der over the choice container, all 8 subsets:", agree)
