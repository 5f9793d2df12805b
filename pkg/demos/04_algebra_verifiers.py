# %% [markdown]
# # Checking a persistence algebra
#
# A persistence algebra is a family of barcodes indexed by group elements
# with a product between them. The verifiers test subadditivity, the ideal
# property, conjugation invariance and whether the unit is eternal.

# %%
from eternalbar import LinearHamiltonian, build_algebra, oscillation, pseudo_norm, verify_algebra

hams = {"0": LinearHamiltonian([0]), "p": LinearHamiltonian([1]), "-p": LinearHamiltonian([-1])}
A = build_algebra(hams, [(k,) for k in range(-3, 4)])
for r in verify_algebra(A):
    print(r.line())

# %%
print("gamma(p) =", oscillation(A, "p"), " |p| =", pseudo_norm(A, "p"))

# %% [markdown]
# A hand-written algebra with a planted product that lands too low.

# %%
import json
from importlib import resources

from eternalbar import PersistenceAlgebra

text = resources.files("eternalbar").joinpath("data/ideal_violation.json").read_text()
for r in verify_algebra(PersistenceAlgebra.from_json(json.loads(text))):
    print(r.line())
