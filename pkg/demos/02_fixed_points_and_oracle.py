"""Least and greatest fixed points, checked against the exhaustive oracle.

The inductive predicate is the smallest closed subset (Kleene iteration
upward from nothing); the coinductive predicate is the greatest
consistent one (iteration downward from the full carrier).  On a finite
carrier the impredicative definitions - intersection of all closed
subsets, union of all consistent ones - are directly computable, which
gives an independent oracle for every answer the solver produces.
"""

from basictopo import (
    R2,
    coind_predicate,
    complement_dual,
    ind_with_trace,
    oracle_gfp,
    oracle_lfp,
)

print("carrier:", list(R2.carrier))
for x in R2.carrier:
    for rule in R2.rules_of(x):
        print(f"  rule {x}/{rule.id}: premises {sorted(rule.premises)}")

ind, trace = ind_with_trace(R2)
print("\ninductive predicate:", sorted(ind.members))
print("stages:", [sorted(stage.members) for stage in trace.stages])
print("ranks (first stage of entry):", trace.rank)

coind = coind_predicate(R2)
print("coinductive predicate:", sorted(coind.members))

# The oracle quantifies over all 2^|A| subsets.
print("\noracle lfp:", sorted(oracle_lfp(R2).members))
print("oracle gfp:", sorted(oracle_gfp(R2).members))
assert oracle_lfp(R2) == ind and oracle_gfp(R2) == coind

# With excluded middle the two predicates are complements; on a finite
# carrier that is simply a set equality.
report = complement_dual(R2)
print("\ncomplement duality holds:", report.holds)
print("ind:", sorted(report.ind.members), " coind:", sorted(report.coind.members))
