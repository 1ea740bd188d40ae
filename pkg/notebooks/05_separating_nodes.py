# %% [markdown]
# # Separating incomparable nodes
#
# For pairwise incomparable nodes, each one gets its own essential prime,
# and an element `q^a / p^b` shows none of them can be dropped from the
# intersection.

# %%
from qtree.coeffs import GF
from qtree.theorems import IncomparableSet, check_irredundance, check_unique_essential, random_incomparable

F = GF(5)
X = IncomparableSet.parse(["[0]", "[1]", "[inf]"], F)
print(check_unique_essential(X).to_json())
print(check_irredundance(X).to_json())

# %%
X = random_incomparable(seed=3, size=4, max_depth=3, field=F)
print([str(m) for m in X])
print(check_irredundance(X, seed=3).to_json())
