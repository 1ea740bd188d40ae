# %% [markdown]
# # Walking down the tree
#
# A node is a list of directions.  Its chart writes `x, y` in the node's
# coordinates, so membership and orders become polynomial questions.

# %%
from qtree.coeffs import GF, BiPoly
from qtree.rlr import QuadPath, chart, follow_branch, member, ord_at, transform_elem, Frac

F = GF(5)
node = QuadPath.parse("[0, inf]", F)
ch = chart(node)
print("x =", ch.phi, " y =", ch.psi, " exceptional:", [str(e) for e in ch.exceptional])

# %% [markdown]
# `y/x` is a unit-free coordinate after the `c = 0` blow-up and a pole after
# the one at infinity.

# %%
w = Frac.parse("y/x", F)
for text in ("[0]", "[inf]"):
    n = QuadPath.parse(text, F)
    print(text, "member:", member(n, w), "ord:", ord_at(n, w))

# %% [markdown]
# Strict transforms of the cusp: orders 2, 1, 1 along `[0, inf]`.

# %%
t = transform_elem(node, BiPoly.parse("y^2 - x^3", F))
for p, r in t.levels:
    print(f"r = {r}   {p}")
print(follow_branch(BiPoly.parse("y^2 - x^3", F), 2))
