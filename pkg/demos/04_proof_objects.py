"""Proof objects: extraction, checking, folding, and coinduction witnesses.

Membership in a least fixed point is certified by a finite tree; the
extractor reads one off the iteration trace deterministically.  Recursors
fold such trees and satisfy their computation rules literally.  On the
coinductive side a witness is a consistent support with one chosen
premise per rule, and the destructor walks it one step at a time.
"""

from basictopo import (
    R1,
    R2,
    WContainer,
    build_coind_witness,
    check_derivation,
    corf,
    cover_with_trace,
    des,
    dw_sup,
    dw_recursor,
    container_of_ruleset,
    eval_cover_recursor,
    eval_ind_recursor,
    extract_derivation,
    ind_with_trace,
    verify_coind_witness,
    wtree_recursor,
    wtree_sup,
)

_, trace = ind_with_trace(R2)
tree = extract_derivation(R2, "b", trace)
print("derivation of b:", tree)
print("checker accepts it:", check_derivation(R2, tree))
print("node count by folding:", eval_ind_recursor(R2, tree, lambda a, i, res: 1 + sum(res.values())))

v = R1.carrier.subset(["c"])
_, cover_trace = cover_with_trace(R1, v)
proof = extract_derivation(R1, "a", cover_trace, v)
depth = eval_cover_recursor(R1, v, proof, lambda a, tok: 1, lambda a, i, res: 1 + max(res.values()))
print("\ncover proof of a from V={c} has depth:", depth)

print("\ncoinduction witness for c in R2:")
witness = build_coind_witness(R2, "c")
print("  support:", sorted(witness.support.members))
print("  continuations:", dict(witness.continuations))
print("  verifies:", verify_coind_witness(R2, witness))
z, rerooted = des(witness, "r")
print("  one destructor step along rule r lands on:", z)

positive = build_coind_witness(R2, "c", R2.carrier.subset(["b", "c"]))
print("  V-membership token of the positivity witness:", corf(positive))

# Plain wellfounded trees over a container, with a counting fold.
bintree = WContainer(("leaf", "node"), {"node": ("L", "R")})
leaf = wtree_sup(bintree, "leaf")
three = wtree_sup(bintree, "node", {"L": leaf, "R": leaf})
print("\nnodes in sup(node, leaf, leaf):",
      wtree_recursor(bintree, three, lambda a, f, res: 1 + sum(res.values())))

# Dependent trees force each subtree's root label through the arity map;
# a derivation tree is exactly such a tree over the rule set's container.
k = container_of_ruleset(R2)
dtree = dw_sup(k, "b", "r", {"a": dw_sup(k, "a", "ax")})
labels = dw_recursor(k, dtree, lambda a, i, f, res: {a}.union(*res.values()) if res else {a})
print("dependent tree labels, collected by folding:", sorted(labels))
