"""Laplacian spectra of the four generated graph families.

The Jacobi solver is compared against closed forms: the star's {0, 1, ..., 1, n},
the cycle's circulant spectrum 2 - 2cos(2 pi k / n), and the generalized
Petersen graph whose Fiedler value comes from a smaller circulant.
"""
import numpy as np

from multifiedler import (
    circulant_spectrum,
    fiedler_space,
    gen_family,
    laplacian,
    similarity,
    symmetric_eig,
)
from multifiedler import oracles

n = 7
for family in ("star", "modified_star", "cycle", "petersen"):
    L = laplacian(similarity(gen_family(family, n)))
    dec = symmetric_eig(L)
    fs = fiedler_space(L)
    print(f"{family:>14}: units={L.shape[0]:2d}  sweeps={dec.sweeps}  "
          f"fiedler={fs.value:.6f}  multiplicity={fs.multiplicity}")
    print(" " * 16 + "spectrum", np.round(dec.eigenvalues, 4))

# closed forms agree to rounding error
L = laplacian(similarity(gen_family("cycle", n)))
closed = np.sort(circulant_spectrum(L[:, 0]).real)
print("\ncycle: max |Jacobi - DFT| =", np.max(np.abs(symmetric_eig(L).eigenvalues - closed)))
print("cycle Fiedler value, closed form:", oracles.cycle_fiedler_value(n))
print("GPG Fiedler value, closed form:  ", oracles.petersen_fiedler_value(n))
