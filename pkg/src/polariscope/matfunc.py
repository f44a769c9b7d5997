"""Matrix functions on scattering submatrices: permanent, determinant,
immanants, and the submatrix construction itself.

The permanent uses Ryser's inclusion-exclusion in a blocked form: column
subsets are split into a low block (all subset row-sums precomputed and
vectorized over numpy) and a high block walked in Gray-code order, which
keeps 20x20 well under a second without compiled extensions.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .permgroup import character, enumerate_sn

MAX_PERMANENT_N = 24
MAX_IMMANANT_N = 8

__all__ = ["permanent", "determinant", "immanant", "scatter_submatrix"]


def _as_square(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def permanent(a) -> complex:
    """Permanent by Ryser's formula with a blocked subset enumeration."""
    a = _as_square(a).astype(complex)
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0.0j
    if n > MAX_PERMANENT_N:
        raise ValueError(f"permanent limited to n <= {MAX_PERMANENT_N}, got {n}")

    nlow = min(n // 2, 12)
    low, high = a[:, :nlow], a[:, nlow:]
    nhigh = n - nlow

    # row sums of every subset of the low columns, built by doubling
    lowsums = np.zeros((1, n), dtype=complex)
    for j in range(nlow):
        lowsums = np.vstack([lowsums, lowsums + low[:, j]])
    lowsigns = np.ones(1)
    for _ in range(nlow):
        lowsigns = np.concatenate([lowsigns, -lowsigns])

    total = 0.0 + 0.0j
    hsum = np.zeros(n, dtype=complex)
    hsign = 1.0
    prev_gray = 0
    for k in range(1, 1 << nhigh):
        gray = k ^ (k >> 1)
        j = (gray ^ prev_gray).bit_length() - 1
        hsum = hsum + high[:, j] if gray & (1 << j) else hsum - high[:, j]
        hsign = -hsign
        prev_gray = gray
        total += hsign * (lowsigns * np.prod(lowsums + hsum, axis=1)).sum()
    if nlow:
        # subsets with no high column; the all-empty term vanishes (row
        # product of zeros) so including it in the vectorized sum is safe
        total += (lowsigns * np.prod(lowsums, axis=1)).sum()
    return complex((-1) ** n * total)


def permanent_naive(a) -> complex:
    """Direct n! sum, for cross-checks at small n."""
    a = _as_square(a).astype(complex)
    n = a.shape[0]
    if n > MAX_IMMANANT_N:
        raise ValueError(f"naive permanent limited to n <= {MAX_IMMANANT_N}")
    total = 0.0 + 0.0j
    for sigma in itertools.permutations(range(n)):
        total += math.prod(a[i, sigma[i]] for i in range(n))
    return complex(total)


def determinant(a) -> complex:
    return complex(np.linalg.det(_as_square(a).astype(complex)))


def immanant(lam, a) -> complex:
    """Immanant for the partition lam: sum over sigma of
    chi_lam(sigma) * prod_i a[i, sigma(i)]."""
    a = _as_square(a).astype(complex)
    n = a.shape[0]
    if sum(lam) != n:
        raise ValueError(f"partition {tuple(lam)} does not match matrix size {n}")
    if n > MAX_IMMANANT_N:
        raise ValueError(f"immanant limited to n <= {MAX_IMMANANT_N}, got {n}")
    chi = {}
    total = 0.0 + 0.0j
    for sigma in enumerate_sn(n):
        ct = sigma.cycle_type()
        if ct not in chi:
            chi[ct] = character(lam, sigma)
        coeff = chi[ct]
        if coeff:
            total += coeff * math.prod(a[i, sigma(i + 1) - 1] for i in range(n))
    return complex(total)


def scatter_submatrix(u, out_config, in_config) -> np.ndarray:
    """n x n submatrix with rows picked by the output modes and columns by
    the input modes (both 1-based, repeats allowed)."""
    u = np.asarray(u)
    rows = [int(r) - 1 for r in out_config]
    cols = [int(c) - 1 for c in in_config]
    if len(rows) != len(cols):
        raise ValueError("output and input configurations must have equal length")
    if min(rows) < 0 or min(cols) < 0:
        raise ValueError("mode labels are 1-based")
    if max(rows) >= u.shape[0] or max(cols) >= u.shape[1]:
        raise ValueError("mode label exceeds matrix dimension")
    return u[np.ix_(rows, cols)]
