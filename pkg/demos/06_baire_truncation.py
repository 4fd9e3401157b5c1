"""The Baire-style tree of sequences, truncated to depth 2.

The bundled fixture R3 lives on the binary words of length at most two
("nil" is the empty word).  Words of length < 2 carry an "extend" rule
whose premises are their two one-step extensions, and every word has one
"prefix:<l>" rule per proper prefix l; the depth-2 leaves get no extend
rule, which is where the truncation cuts the infinite tree off.

The worked query: the depth-2 bar (all four length-2 words) covers the
root.  Covering climbs down the extend rules - exactly the finite shadow
of bar induction.
"""

from basictopo import R3, R3_BAR, cover, cover_with_trace, extract_derivation, positivity

print("carrier:", list(R3.carrier))
print("bar:", sorted(R3_BAR.members))

covered = cover(R3, R3_BAR)
print("\ncover of the bar:", sorted(covered.members))
print("root covered?", "nil" in covered)

_, trace = cover_with_trace(R3, R3_BAR)
print("ranks:", {x: trace.rank[x] for x in R3.carrier})

proof = extract_derivation(R3, "nil", trace, R3_BAR)


def render(node, indent="  "):
    if hasattr(node, "rule"):
        print(f"{indent}{node.conclusion} by {node.rule}")
        for child in node.children.values():
            render(child, indent + "  ")
    else:
        print(f"{indent}{node.conclusion} is in the bar")


print("\nextracted proof that the bar covers the root:")
render(proof)

# The bar is not positive: backward search from inside it immediately
# needs nodes outside it.
print("\npositivity of the bar:", sorted(positivity(R3, R3_BAR).members) or "{}")

print("\nthe same query on the command line:")
print("  basictopo cover --ruleset data/r3.json --v data/r3_bar.json")
