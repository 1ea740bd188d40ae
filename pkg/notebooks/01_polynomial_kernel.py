# %% [markdown]
# # Exact polynomials over F_p
#
# Bivariate polynomials, binary forms, gcd and factoring over a prime field.

# %%
from qtree.coeffs import GF, BiPoly, HForm, bi_factor, bi_gcd, hform_factor

F = GF(5)
f = BiPoly.parse("x^2 - y^2", F)
print(f, "=", " * ".join(f"({q})^{m}" for q, m in bi_factor(f)))

# %% [markdown]
# The cusp is irreducible.  Its initial form `Y^2` is a power of one prime.

# %%
cusp = BiPoly.parse("y^2 - x^3", F)
print(bi_factor(cusp))
print(hform_factor(HForm.from_bipoly(cusp.homogeneous_part(cusp.ord()))))

# %%
print(bi_gcd(BiPoly.parse("x^2*y", F), BiPoly.parse("x*y^2", F)))

# %% [markdown]
# `Y^2 - 2X^2` has no root mod 5, so it stays a single quadratic factor.

# %%
print(hform_factor(HForm.from_bipoly(BiPoly.parse("y^2 - 2*x^2", F))))
