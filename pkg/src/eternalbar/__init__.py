"""Exact persistence computations for spectral invariants of contact-at-infinity isotopies.

Submodules:

- ``novikov``: the Novikov field over Z/2 with finite support
- ``complex``: filtered Floer-type complexes, homology and minimal filtration levels
- ``persistence``: presentations, barcodes, eternal classes
- ``spectral``: spectral invariants and verifiers on persistence algebras
- ``torus``: the flat-torus model on the cotangent bundle of T^n
- ``cli``: the ``eternalbar`` command
"""
from .complex import (Chain, FilteredComplex, Generator, filtration_level, homology, min_filtration,
                      optimal_representative, verify_complex)
from .errors import *  # noqa: F401,F403
from .exponents import INF, NEG_INF, as_exponent, format_exponent
from .novikov import Nov, nov_add, nov_div_window, nov_mul, nov_val
from .persistence import (Bar, Barcode, ColimitClass, Presentation, barcode, colim_basis, eternal_subspace,
                          hits_at, rfh_rank, render)
from .spectral import (PersistenceAlgebra, check_conjugation, check_ideal, check_subadditivity, oscillation,
                       pseudo_norm, spectral_invariant, unit_eternal_criterion, verify_algebra)
from .torus import (LinearHamiltonian, PLHamiltonian, SampledHamiltonian, build_algebra, check_systolic_bound,
                    class_spectral, order_leq, oscillation_exact, shape_spectral, spectrum, systole)

__version__ = "0.1.0"
