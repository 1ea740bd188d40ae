# %% [markdown]
# # A prime that sees only one chain
#
# For a node we want an irreducible curve through it whose initial forms
# above it are powers of one linear form.  Every node such a curve passes
# through is then on the chain to our node.

# %%
from qtree.coeffs import GF
from qtree.primelemma import analyze, comparability_guarantee, prime_lemma
from qtree.rlr import QuadPath

F = GF(5)
beta = QuadPath.parse("[1, inf, 2, 1]", F)
res = prime_lemma(beta, seed=0)
print("prime:", res.v)
for i, seq in enumerate(res.trace):
    print(f"round {i}: orders {seq.orders}, split levels {seq.failing_levels()}")
for s in res.steps:
    print(f"  lifted at level {s.level} to order {s.target_order}; kept {s.chosen}")

# %%
rep = comparability_guarantee(res.v, beta, len(beta) + 1)
print("nodes checked:", rep.nodes_checked, "off-chain nodes:", [str(g) for g in rep.counterexamples])
print("contained nodes:", [str(g) for g in rep.contained])
