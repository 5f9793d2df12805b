# %% [markdown]
# # Barcodes and eternal classes
#
# A persistence module over the reals is handed to us as a presentation:
# generators with a birth level and relations with the level at which they
# kick in. Three generators below live forever, one is born at -4 and dies
# at 0, and one lives on [2, 5).

# %%
import json
from importlib import resources

from eternalbar import barcode, colim_basis, eternal_subspace, render, rfh_rank
from eternalbar.persistence import Presentation

doc = json.loads(resources.files("eternalbar").joinpath("data/fig1.json").read_text())
p = Presentation.from_json(doc)
b = barcode(p)
print(render(b))

# %% [markdown]
# The colimit is spanned by the bars that never die. A class is eternal when
# it is already present at every level, which for a barcode means the bar is
# the whole line.

# %%
print("colim basis:", colim_basis(b))
print("eternal:    ", eternal_subspace(b))
print("rfh rank:   ", rfh_rank(b))

# %% [markdown]
# Adding a generator born at 1 with no relation gives a half bar [1, inf).
# It survives into the colimit but is not eternal.

# %%
doc["generators"].append({"id": "h", "birth": "1"})
b2 = barcode(Presentation.from_json(doc))
print(render(b2))
print("eternal:", eternal_subspace(b2), " rfh rank:", rfh_rank(b2))
