# %% [markdown]
# # The flat-torus model
#
# For a Hamiltonian H on the sphere of directions, the invariant of the
# class k is the maximum of k.u + H(u). For linear H this is just |k + a|.

# %%
import numpy as np

from eternalbar import LinearHamiltonian, PLHamiltonian, class_spectral, oscillation_exact, shape_spectral, spectrum
from eternalbar.torus import SampledHamiltonian, sphere_directions

h = LinearHamiltonian([3, 4])
print(shape_spectral(h), oscillation_exact(h))

# %% [markdown]
# A piecewise-linear fan on the circle. Values are exact surds.

# %%
diamond = PLHamiltonian.circle([(1, 0), (0, 1), (-1, 0), (0, -1)], [1, 2, 0, -1])
for k in [(0, 0), (1, 0), (2, -3)]:
    print(k, class_spectral(diamond, k), [str(v) for v in spectrum(diamond, k)])

# %% [markdown]
# Sampled data gives floats with an error bar that scales with the spacing.

# %%
s = SampledHamiltonian.from_hamiltonian(diamond, 400)
print(class_spectral(s, (2, -3)), "+-", s.tolerance((2, -3)))

u = sphere_directions(2, 8)
print(np.round(diamond.values_at(u), 3))
