"""Symmetric-group machinery for multiphoton rate formulas.

Permutations act on photon labels 1..n.  Output configurations (tuples of
mode labels) are collected into a canonical basis closed under the group,
and each permutation becomes a 0/1 matrix on that basis.  The basis is
ordered so that, for a reference configuration with distinct entries, the
component products built downstream reproduce the familiar column-vector
ordering (U11 U22 U33, U11 U23 U32, U12 U21 U33, ...).

The block transform V simultaneously block-diagonalizes every permutation
matrix; for n = 3 it is a fixed matrix, for larger n it is computed from
class operators and a random commutant element with a fixed seed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_N = 8

__all__ = [
    "Permutation",
    "ConfigBasis",
    "enumerate_sn",
    "act",
    "character",
    "irrep_dimension",
    "partitions_of",
    "perm_matrix",
    "block_transform",
    "compute_block_transform",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: images[i-1] = sigma(i)."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Function composition: (self * other)(i) = self(other(i))."""
        if other.n != self.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j - 1] = i + 1
        return Permutation(tuple(inv))

    def cycle_type(self) -> tuple:
        """Cycle lengths, sorted in decreasing order."""
        seen = [False] * self.n
        lengths = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            size, j = 0, start
            while not seen[j - 1]:
                seen[j - 1] = True
                j = self.images[j - 1]
                size += 1
            lengths.append(size)
        return tuple(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return (-1) ** (self.n - len(self.cycle_type()))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """Build from disjoint cycles, e.g. from_cycles(3, [(1, 2)])."""
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))


@lru_cache(maxsize=16)
def enumerate_sn(n: int):
    """All of S_n in lexicographic one-line order, e.g. n=3:
    (1,2,3), (1,3,2), (2,1,3), (2,3,1), (3,1,2), (3,2,1)."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def act(sigma: Permutation, eta) -> tuple:
    """Send the i-th element of eta to position sigma(i).

    The result r satisfies r[sigma(i)] = eta[i]; the cycle (123) acting on
    (1, 2, 3) yields (3, 1, 2).
    """
    if len(eta) != sigma.n:
        raise ValueError("configuration length does not match permutation size")
    out = [None] * sigma.n
    for i, img in enumerate(sigma.images):
        out[img - 1] = eta[i]
    return tuple(out)


def _subscript(eta, sigma: Permutation) -> tuple:
    # position composition eta o sigma; inverse of act(sigma, .)
    return tuple(eta[j - 1] for j in sigma.images)


@dataclass(frozen=True)
class ConfigBasis:
    """Canonical ordered basis of the distinct rearrangements of a config.

    Enumerates eta o sigma_k over the lexicographic S_n order and keeps
    first occurrences; size is n!/prod(multiplicities!).  For a reference
    with distinct entries this ordering makes the downstream u-vector come
    out in the Appendix-style column order.
    """

    reference: tuple
    configs: tuple

    @classmethod
    def from_config(cls, eta) -> "ConfigBasis":
        eta = tuple(eta)
        seen = {}
        for sig in enumerate_sn(len(eta)):
            c = _subscript(eta, sig)
            if c not in seen:
                seen[c] = len(seen)
        configs = tuple(sorted(seen, key=seen.get))
        return cls(eta, configs)

    def __len__(self) -> int:
        return len(self.configs)

    def index(self, config) -> int:
        try:
            return self.configs.index(tuple(config))
        except ValueError:
            raise ValueError(f"configuration {config} not in basis") from None


def perm_matrix(sigma: Permutation, basis: ConfigBasis) -> np.ndarray:
    """0/1 matrix of sigma on the configuration basis.

    Row i has its 1 in the column j with basis[j] = basis[i] o sigma, the
    convention that reproduces the printed 6x6 matrices for n = 3 and makes
    sigma -> perm_matrix(sigma) a homomorphism for the compose() product.
    """
    if sigma.n != len(basis.reference):
        raise ValueError("permutation size does not match basis")
    size = len(basis)
    lookup = {c: k for k, c in enumerate(basis.configs)}
    mat = np.zeros((size, size))
    for i, cfg in enumerate(basis.configs):
        target = _subscript(cfg, sigma)
        if target not in lookup:
            raise ValueError("basis is not closed under the group action")
        mat[i, lookup[target]] = 1.0
    return mat


# ---------------------------------------------------------------------------
# characters


def partitions_of(n: int):
    """Partitions of n, decreasing parts, reverse-lexicographic order."""

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def _check_partition(lam, n):
    lam = tuple(lam)
    if not lam or sum(lam) != n or any(p <= 0 for p in lam):
        raise ValueError(f"{lam} is not a partition of {n}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition parts must be non-increasing: {lam}")
    return lam


@lru_cache(maxsize=None)
def _mn(lam: tuple, rho: tuple) -> int:
    # Murnaghan-Nakayama on beta-sets: removing a border strip of length t
    # is moving a bead b -> b - t; the sign counts beads skipped over.
    if not rho:
        return 1
    t, rest = rho[0], rho[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    total = 0
    for b in beta:
        if b - t < 0 or (b - t) in bset:
            continue
        height = sum(1 for x in beta if b - t < x < b)
        newbeta = sorted((bset - {b}) | {b - t}, reverse=True)
        newlam = tuple(x - (k - 1 - i) for i, x in enumerate(newbeta))
        total += (-1) ** height * _mn(tuple(p for p in newlam if p > 0), rest)
    return total


def character(lam, sigma: Permutation) -> int:
    """Irreducible character chi_lam evaluated on sigma (integer valued)."""
    lam = _check_partition(lam, sigma.n)
    return _mn(lam, sigma.cycle_type())


def irrep_dimension(lam) -> int:
    """Dimension via the hook length formula."""
    lam = tuple(lam)
    n = sum(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in lam[i + 1:] if r > j)
            hooks *= arm + leg + 1
    return math.factorial(n) // hooks


# ---------------------------------------------------------------------------
# block transform

_SQ2 = math.sqrt(2.0)
_SQ32 = math.sqrt(1.5)

# fixed transform for three photons; rows: symmetric, alternating, then the
# two copies of the mixed-symmetry irrep
_V3 = np.array(
    [
        [1, 1, 1, 1, 1, 1],
        [1, -1, -1, 1, 1, -1],
        [_SQ32, _SQ32, -_SQ32, 0, -_SQ32, 0],
        [-1 / _SQ2, -1 / _SQ2, -1 / _SQ2, _SQ2, -1 / _SQ2, _SQ2],
        [_SQ32, -_SQ32, _SQ32, 0, -_SQ32, 0],
        [1 / _SQ2, -1 / _SQ2, -1 / _SQ2, -_SQ2, 1 / _SQ2, _SQ2],
    ]
) / math.sqrt(6.0)

_V2 = np.array([[1, 1], [1, -1]]) / _SQ2


def block_transform(n: int) -> np.ndarray:
    """Real orthogonal V with V Pi_sigma V^T block-diagonal for every sigma.

    n = 2 and n = 3 return fixed matrices; n = 4, 5 are computed.  Blocks
    appear in the order: trivial irrep, sign irrep, then the remaining
    partitions reverse-lexicographically, each with multiplicity equal to
    its dimension.
    """
    if n == 1:
        return np.ones((1, 1))
    if n == 2:
        return _V2.copy()
    if n == 3:
        return _V3.copy()
    if n in (4, 5):
        return _computed_v(n).copy()
    raise ValueError(f"block transform supported for n <= 5, got {n}")


def _partition_block_order(n: int):
    rest = [p for p in partitions_of(n) if p not in ((n,), (1,) * n)]
    return [(n,), (1,) * n] + rest


def compute_block_transform(n: int) -> np.ndarray:
    """Class-operator construction of a block transform (any 2 <= n <= 5).

    Isotypic projectors come from the character expansion of the regular
    representation; each isotypic component is split into irreducible
    copies by the eigenspaces of a seeded random commutant element, and
    each copy gets a deterministic orthonormal basis (Gram-Schmidt over
    projected coordinate vectors, first nonzero entry made positive).
    """
    if not 2 <= n <= 5:
        raise ValueError(f"computed block transform supported for 2 <= n <= 5, got {n}")
    perms = enumerate_sn(n)
    basis = ConfigBasis.from_config(tuple(range(1, n + 1)))
    mats = [perm_matrix(s, basis) for s in perms]
    size = len(basis)
    nfact = math.factorial(n)

    rng = np.random.default_rng(7)
    s_rand = rng.standard_normal((size, size))
    s_rand = s_rand + s_rand.T
    commutant = sum(m @ s_rand @ m.T for m in mats) / nfact

    rows = []
    for lam in _partition_block_order(n):
        dim = irrep_dimension(lam)
        proj = sum(character(lam, s) * m for s, m in zip(perms, mats))
        proj *= dim / nfact
        evals, evecs = np.linalg.eigh(proj)
        cols = evecs[:, evals > 0.5]  # projector spectrum is 0/1
        if cols.shape[1] != dim * dim:
            raise RuntimeError(f"isotypic dimension mismatch for {lam}")
        qsub = cols.T @ commutant @ cols
        qvals, qvecs = np.linalg.eigh(qsub)
        # group eigenvalues into dim clusters of size dim each
        order = np.argsort(qvals)
        for c in range(dim):
            sel = order[c * dim:(c + 1) * dim]
            spread = float(np.ptp(qvals[sel])) if dim > 1 else 0.0
            if dim > 1 and spread > 1e-8:
                raise RuntimeError("commutant eigenvalue clusters did not separate")
            span = cols @ qvecs[:, sel]
            rows.extend(_canonical_rows(span))
    v = np.array(rows)
    if not np.allclose(v @ v.T, np.eye(size), atol=1e-10):
        raise RuntimeError("computed block transform is not orthogonal")
    return v


def _canonical_rows(span: np.ndarray):
    """Deterministic orthonormal basis of a subspace given by columns."""
    proj = span @ span.T
    dim = span.shape[1]
    rows = []
    for i in range(proj.shape[0]):
        cand = proj[:, i]
        for r in rows:
            cand = cand - (r @ cand) * r
        norm = np.linalg.norm(cand)
        if norm > 1e-8:
            rows.append(cand / norm)
        if len(rows) == dim:
            break
    if len(rows) < dim:
        raise RuntimeError("failed to extract a basis for an irrep copy")
    fixed = []
    for r in rows:
        lead = r[np.abs(r) > 1e-10][0]
        fixed.append(r if lead > 0 else -r)
    return fixed


@lru_cache(maxsize=8)
def _computed_v(n: int) -> np.ndarray:
    return compute_block_transform(n)
