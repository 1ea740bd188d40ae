# %% [markdown]
# # Lifting a split initial form
#
# `xy + x^3 + y^3` starts with `X*Y`.  Lifting gives `g, h` with those
# initial forms whose product agrees with `f` up to a chosen order.

# %%
from qtree.approx import bezout_solve, lift_factorization
from qtree.coeffs import GF, BiPoly, HForm

F = GF(5)
X, Y = HForm.X(F), HForm.Y(F)
f = BiPoly.parse("x*y + x^3 + y^3", F)
for n in (4, 6, 9):
    res = lift_factorization(f, X, Y, n)
    print(f"n={n}: g = {res.g}, h = {res.h}, f - gh has order {res.achieved_order}")

# %% [markdown]
# Each degree is a small linear system `G*b + H*a = e`.

# %%
e = HForm.from_bipoly(BiPoly.parse("x^2*y", F))
print(bezout_solve(X, Y, e))
