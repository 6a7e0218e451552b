"""Brute-force counting on finite discrete ground sets.

On a finite ground set the four design types collapse pairwise and the
all-k-subsets family realizes the classical binomial count.  Run from the
repo root:

    python demos/finite_designs.py
"""

from fortdesign import (
    DesignType,
    FiniteInstance,
    all_k_subsets_instance,
    all_k_subsets_lambda,
    brute_lambda,
)

print("-- all k-subsets vs the closed form --")
for n, k, t in ((7, 3, 2), (6, 3, 2), (8, 4, 1), (5, 4, 3)):
    outcome = brute_lambda(all_k_subsets_instance(n, k, t), DesignType.TYPE2)
    print(f"  n={n} k={k} t={t}: brute {outcome}, closed form {all_k_subsets_lambda(n, k, t)}")

print("\n-- a perfect matching covers each point once --")
matching = FiniteInstance(4, (frozenset({0, 1}), frozenset({2, 3})), 1, 2)
print(f"  {brute_lambda(matching, DesignType.TYPE1)}")

print("\n-- deleting one block breaks uniformity --")
full = all_k_subsets_instance(7, 3, 2)
blocks = tuple(b for b in full.blocks if b != frozenset({0, 1, 2}))
broken = FiniteInstance(7, blocks, 2, 3)
print(f"  {brute_lambda(broken, DesignType.TYPE2)}")

print("\n-- the types collapse pairwise on finite ground sets --")
inst = all_k_subsets_instance(6, 3, 2)
for t in DesignType:
    print(f"  type {int(t)}: {brute_lambda(inst, t)}")
