# %% [markdown]
# # How far down can a homology class be pushed?
#
# One generator y has boundary x1 + tau x2. So x1 and tau x2 are homologous,
# and the class of x1 has a representative of lower filtration level.

# %%
from eternalbar import Chain, FilteredComplex, Generator, Nov, homology, min_filtration, optimal_representative

cx = FilteredComplex(
    [Generator("x1", 0, "0", 0), Generator("x2", 0, "0", 0), Generator("y", 0, "0", 1)],
    {"y": [("x1", 0), ("x2", 1)]},
)
print(homology(cx))

# %%
z = Chain({"x1": Nov.one()})
level, rep = optimal_representative(cx, z)
print("level", level, "via", rep)

# %% [markdown]
# Coefficients come from the Novikov field, so tau^-1 is allowed. A naive
# search over Z/2 sums of boundaries stops at -1 for the cycle tau x1, but
# subtracting tau d(y) reaches -2.

# %%
print(min_filtration(cx, Chain({"x1": Nov.monomial(1)})))
