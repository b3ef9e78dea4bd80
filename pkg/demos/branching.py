"""Branching sets and trees for strictly decreasing index sequences.

Starting from a = (7,4,1) in ambient dimension 9, grow twice and draw the
resulting tree, then list its root-to-leaf chains.
"""

from pierikit import DecSeq, codim, pieri_set, tree_chains

a = DecSeq(9, (7, 4, 1))

print(f"a = {a},  codim {codim(a)}")
print()

print("one-box growth a*1:")
for g in pieri_set(a, 1):
    print(f"  {g}")
print()

print("two-box growth a*2:")
for g in pieri_set(a, 2):
    print(f"  {g}   (codim {codim(g)})")
print()

tree, chains = tree_chains(a, 2)
print("tree levels:", [len(level) for level in tree.levels])
print("edges:")
for parent, child in tree.edges:
    print(f"  {parent} -> {child}")
print()

# every leaf is reached by exactly one chain
print(f"{len(chains)} chains, one per leaf:")
for chain in chains:
    print("  " + " -> ".join(str(g) for g in chain))
