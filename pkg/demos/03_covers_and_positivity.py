"""Basic covers, positivity relations, and the topology laws.

Fixing a subset V changes the operators: derivability gains a
reflexivity clause (members of V are covered outright) and confutability
is cut down to V.  The resulting least and greatest fixed points are the
basic cover and the positivity relation, and together they satisfy the
laws of a basic topology, which the law checker verifies exhaustively
over all pairs of subsets.
"""

from basictopo import (
    R1,
    R2,
    check_compatibility,
    check_cover_laws,
    check_generated_axioms,
    check_positivity_laws,
    cover,
    positivity,
)

abc = R1.carrier
v = abc.subset(["c"])
print("cover of {c} in the chain a <- b <- c:", sorted(cover(R1, v).members))
print("  (c reflexively, then b and a by the chain rules)")

w = R2.carrier.subset(["b", "c"])
print("positivity of {b, c} in R2:", sorted(positivity(R2, w).members))
print("  (b drops out: its only rule's premise a is outside the candidate)")

print("\nlaw reports for R2 (exhaustive over all 64 subset pairs):")
for report in (
    check_cover_laws(R2),
    check_positivity_laws(R2),
    check_compatibility(R2),
):
    for check in report.checks:
        verdict = "holds" if check.holds else f"fails at {check.counterexample}"
        tag = "" if check.gating else "   [informative variant]"
        print(f"  {check.law}: {verdict}{tag}")

# Contested quantifier placements are evaluated in both readings; the
# informative ones are allowed to fail and exist to document the
# difference, e.g. the swapped cotransitivity already dies at V = {}.

axioms = check_generated_axioms(R2)
print("\ngenerating axioms (every conclusion covered by its premises):")
for axiom in axioms.axioms:
    print(
        f"  {axiom.element}/{axiom.rule}: cover {'ok' if axiom.cover_holds else 'BROKEN'}"
        + (
            f", positivity {'ok' if axiom.positivity_holds else 'fails'}"
            if axiom.positivity_applicable
            else ""
        )
    )
