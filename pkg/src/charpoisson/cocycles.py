"""Twisted group cohomology of the free surface group with Ad-coefficients.

A 1-cocycle is determined by its values on the free generators (the free
group imposes no conditions), stored as a coordinate vector in k^{3n} with
the crossed-homomorphism extension rule

    u(xy) = u(x) + Ad_{rho(x)} u(y),   u(x^-1) = -Ad_{rho(x)^-1} u(x).

Coboundaries are (delta X)(x) = X - Ad_{rho(x)} X, matching the geometric
convention rho_t(x) = exp(t u(x)) rho(x) for tangent curves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import liealg
from .errors import NotGoodPoint
from .representation import Representation, certify_goodness, evaluate_word
from .surface import Word, boundary_word


def coboundary_matrix(rho: Representation):
    """3n x 3 matrix of delta: algebra coords -> cocycle coords."""
    spec = rho.spec
    n = rho.presentation.rank
    out = np.zeros((3 * n, 3), dtype=spec.coord_dtype)
    eye = np.eye(3, dtype=spec.coord_dtype)
    for i, im in enumerate(rho.images):
        out[3 * i : 3 * i + 3, :] = eye - liealg.adjoint_matrix(spec, im)
    return out


def coboundary(rho: Representation, X):
    """(delta X) as a cocycle coordinate vector; X an algebra matrix."""
    return coboundary_matrix(rho) @ liealg.coords_from_matrix(rho.spec, X)


def word_operator(rho: Representation, w: Word):
    """(T_w, rho(w)): T_w is the 3 x 3n linear map with T_w u = coords of u(w)."""
    spec = rho.spec
    n = rho.presentation.rank
    T = np.zeros((3, 3 * n), dtype=spec.coord_dtype)
    g = np.eye(2, dtype=spec.matrix_dtype)
    for gen, e in w.letters:
        if e == 1:
            T[:, 3 * gen : 3 * gen + 3] += liealg.adjoint_matrix(spec, g)
            g = g @ rho.images[gen]
        else:
            g = g @ liealg.inverse_group(rho.images[gen])
            T[:, 3 * gen : 3 * gen + 3] -= liealg.adjoint_matrix(spec, g)
    return T, g


def evaluate_cocycle(rho: Representation, u_coords, w: Word):
    """u(w) as an algebra matrix."""
    T, _ = word_operator(rho, w)
    return liealg.matrix_from_coords(rho.spec, T @ np.asarray(u_coords))


class CocycleEvaluator:
    """Caches word operators at a fixed representation."""

    def __init__(self, rho: Representation):
        self.rho = rho
        self._cache = {}

    def operator(self, w: Word):
        key = w.letters
        if key not in self._cache:
            self._cache[key] = word_operator(self.rho, w)
        return self._cache[key]

    def holonomy(self, w: Word):
        return self.operator(w)[1]

    def evaluate(self, u_coords, w: Word):
        T, _ = self.operator(w)
        return T @ np.asarray(u_coords)


@dataclass(frozen=True)
class H1Basis:
    """Orthonormal basis of the complement of B^1 inside Z^1 = k^{3n}."""

    rho: Representation
    vectors: np.ndarray          # 3n x d, orthonormal columns
    coboundaries: np.ndarray     # 3n x rank(delta), orthonormal basis of B^1

    @property
    def dim(self):
        return self.vectors.shape[1]


@dataclass(frozen=True)
class ParabolicBasis:
    """Basis of the classes whose boundary values u(C_j) lie in
    image(Ad rho(C_j) - id) for every puncture."""

    h1: H1Basis
    coords: np.ndarray           # d x k coordinates in the H1 basis

    @property
    def dim(self):
        return self.coords.shape[1]

    @property
    def cocycles(self):
        return self.h1.vectors @ self.coords


def _check_good(rho: Representation, cert=None):
    cert = cert or certify_goodness(rho)
    # rank-0 disc group: H^1 = 0 and every operation legitimately degenerates
    if not cert.is_good and rho.presentation.rank > 0:
        raise NotGoodPoint(
            f"centralizer dimension {cert.centralizer_dim} != 0; "
            "tangent-space description needs a good point"
        )
    return cert


def h1_basis(rho: Representation, tau_rank: float = liealg.TAU_RANK, cert=None) -> H1Basis:
    """Basis of H^1 = Z^1/B^1 as the orthocomplement of B^1 (dim 3(n-1) at
    good points)."""
    _check_good(rho, cert)
    n = rho.presentation.rank
    delta = coboundary_matrix(rho)
    if n == 0:
        return H1Basis(rho, np.zeros((0, 0), dtype=rho.spec.coord_dtype), delta)
    U, s, _ = np.linalg.svd(delta, full_matrices=True)
    rank = int(np.sum(s > tau_rank * s[0])) if s.size and s[0] > 0 else 0
    return H1Basis(rho, U[:, rank:], U[:, :rank])


def class_coordinates(basis: H1Basis, u_coords):
    """Coordinates of the class [u] in the basis; zero iff u is a coboundary."""
    u = np.asarray(u_coords)
    if u.shape[0] != basis.vectors.shape[0]:
        raise ValueError(
            f"cocycle length {u.shape[0]} does not match basis ambient dim "
            f"{basis.vectors.shape[0]}"
        )
    return basis.vectors.conj().T @ u


def cocycle_from_class(basis: H1Basis, coords):
    return basis.vectors @ np.asarray(coords)


def boundary_image_projector(spec, g, tau_rank: float = liealg.TAU_RANK):
    """Orthoprojector onto image(Ad_g - id), plus that image's dimension."""
    A = liealg.adjoint_matrix(spec, g) - np.eye(3, dtype=spec.coord_dtype)
    U, s, _ = np.linalg.svd(A)
    rank = int(np.sum(s > tau_rank * s[0])) if s.size and s[0] > tau_rank else 0
    Q = U[:, :rank]
    return Q @ Q.conj().T, rank


def parabolic_basis(
    rho: Representation, tau_rank: float = liealg.TAU_RANK, basis: H1Basis = None
) -> ParabolicBasis:
    """Null space of the stacked conditions (I - P_j) u(C_j) = 0 inside H^1."""
    basis = basis if basis is not None else h1_basis(rho, tau_rank)
    p = rho.presentation
    d = basis.dim
    if d == 0:
        return ParabolicBasis(basis, np.zeros((0, 0), dtype=rho.spec.coord_dtype))
    rows = []
    eye = np.eye(3, dtype=rho.spec.coord_dtype)
    for j in range(1, p.punctures + 1):
        cj = boundary_word(p, j)
        T, hol = word_operator(rho, cj)
        P, _ = boundary_image_projector(rho.spec, hol, tau_rank)
        rows.append((eye - P) @ T @ basis.vectors)
    M = np.vstack(rows)
    _, s, Vh = np.linalg.svd(M)
    if s.size == 0 or s[0] <= tau_rank:
        coords = np.eye(d, dtype=rho.spec.coord_dtype)
    else:
        rank = int(np.sum(s > tau_rank * s[0]))
        coords = Vh[rank:, :].conj().T
    return ParabolicBasis(basis, coords)


def conjugated_cocycle(rho: Representation, g, u_coords):
    """Pushforward of a cocycle along conjugation: u'(x) = Ad_g u(x) is a
    cocycle for g rho g^-1 representing the corresponding class."""
    spec = rho.spec
    A = liealg.adjoint_matrix(spec, g)
    n = rho.presentation.rank
    u = np.asarray(u_coords).reshape(n, 3)
    return (u @ A.T).reshape(3 * n)
