"""Matrix Lie groups SU(2), SL(2,R), SL(2,C): exponential, adjoint action,
and the trace form B(X,Y) = tr(XY) on the (traceless 2x2) Lie algebra.

Coordinates throughout the package refer to the fixed ordered basis returned
by :func:`algebra_basis`; coordinate scalars are real for SU2/SL2R and
complex for SL2C.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

TAU_GROUP = 1e-10   # relative Frobenius drift allowed on group/algebra invariants
TAU_RANK = 1e-8     # relative singular-value cutoff for rank decisions

FAMILIES = ("SU2", "SL2R", "SL2C")


@dataclass(frozen=True)
class GroupSpec:
    """One of the three rank-1 families; fixes dtypes and the algebra basis."""

    family: str

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")

    @property
    def algebra_dim(self):
        return 3

    @property
    def is_complex(self):
        return self.family == "SL2C"

    @property
    def coord_dtype(self):
        return np.complex128 if self.is_complex else np.float64

    @property
    def matrix_dtype(self):
        return np.float64 if self.family == "SL2R" else np.complex128


def make_spec(family: str) -> GroupSpec:
    return GroupSpec(family)


def algebra_basis(spec: GroupSpec):
    """Fixed ordered basis of the Lie algebra (3 traceless 2x2 matrices).

    SU2: i*sigma_z, real rotation generator, i*sigma_x (anti-Hermitian).
    SL2R / SL2C: H = diag(1,-1), E = upper, F = lower shift.
    """
    if spec.family == "SU2":
        return [
            np.array([[1j, 0], [0, -1j]], dtype=np.complex128),
            np.array([[0, 1], [-1, 0]], dtype=np.complex128),
            np.array([[0, 1j], [1j, 0]], dtype=np.complex128),
        ]
    dt = spec.matrix_dtype
    return [
        np.array([[1, 0], [0, -1]], dtype=dt),
        np.array([[0, 1], [0, 0]], dtype=dt),
        np.array([[0, 0], [1, 0]], dtype=dt),
    ]


def _coordinatizer(spec: GroupSpec):
    # pseudo-inverse of the basis matrix, mapping vec(2x2) -> coordinates
    basis = algebra_basis(spec)
    stacked = np.stack([b.reshape(4) for b in basis], axis=1)  # 4x3
    return np.linalg.pinv(stacked)  # 3x4


_COORDINATIZERS = {f: _coordinatizer(GroupSpec(f)) for f in FAMILIES}


def coords_from_matrix(spec: GroupSpec, X):
    """Coordinates of an algebra element in algebra_basis; real families get
    real coordinates (imaginary residue must be roundoff)."""
    c = _COORDINATIZERS[spec.family] @ np.asarray(X, dtype=np.complex128).reshape(4)
    if spec.is_complex:
        return c
    return c.real.astype(np.float64)


def matrix_from_coords(spec: GroupSpec, coords):
    basis = algebra_basis(spec)
    coords = np.asarray(coords)
    return coords[0] * basis[0] + coords[1] * basis[1] + coords[2] * basis[2]


def exp_map(X):
    """Matrix exponential (total on 2x2)."""
    return scipy.linalg.expm(np.asarray(X))


def inverse_group(g):
    """Inverse via the adjugate; exact for det = 1."""
    g = np.asarray(g)
    return np.array([[g[1, 1], -g[0, 1]], [-g[1, 0], g[0, 0]]], dtype=g.dtype)


def adjoint_action(g, X):
    """Ad_g X = g X g^{-1}."""
    return np.asarray(g) @ np.asarray(X) @ inverse_group(g)


def adjoint_matrix(spec: GroupSpec, g):
    """3x3 matrix of Ad_g in algebra_basis coordinates."""
    cols = [coords_from_matrix(spec, adjoint_action(g, b)) for b in algebra_basis(spec)]
    return np.stack(cols, axis=1)


def adjoint_matrices(spec: GroupSpec, gs):
    """Batched adjoint: gs of shape (N,2,2) -> (N,3,3) coordinate matrices."""
    gs = np.asarray(gs)
    inv = np.empty_like(gs)
    inv[:, 0, 0] = gs[:, 1, 1]
    inv[:, 0, 1] = -gs[:, 0, 1]
    inv[:, 1, 0] = -gs[:, 1, 0]
    inv[:, 1, 1] = gs[:, 0, 0]
    basis = np.stack(algebra_basis(spec))  # 3x2x2
    conj = np.einsum("nij,bjk,nkl->nbil", gs, basis.astype(gs.dtype), inv)
    coo = _COORDINATIZERS[spec.family]  # 3x4
    out = np.einsum("cv,nbv->ncb", coo, conj.reshape(gs.shape[0], 3, 4))
    if spec.is_complex:
        return out
    return out.real.astype(np.float64)


def invariant_form(spec: GroupSpec, X, Y):
    """B(X,Y) = tr(XY); symmetric, Ad-invariant, nondegenerate."""
    v = np.trace(np.asarray(X) @ np.asarray(Y))
    return v if spec.is_complex else float(v.real)


def gram_matrix(spec: GroupSpec):
    """Gram matrix of B in algebra_basis coordinates (3x3, constant)."""
    basis = algebra_basis(spec)
    G = np.array(
        [[np.trace(bi @ bj) for bj in basis] for bi in basis], dtype=np.complex128
    )
    return G if spec.is_complex else G.real.astype(np.float64)


def random_algebra_coords(spec: GroupSpec, rng):
    if spec.is_complex:
        return (rng.standard_normal(3) + 1j * rng.standard_normal(3)) / np.sqrt(2.0)
    return rng.standard_normal(3)


def random_group_element(spec: GroupSpec, rng):
    """exp of a random algebra element with standard-normal basis coefficients."""
    return exp_map(matrix_from_coords(spec, random_algebra_coords(spec, rng)))


def fixed_space_dim(spec: GroupSpec, elements, tau_rank: float = TAU_RANK) -> int:
    """dim of the common Ad-fixed subspace {X : Ad_g X = X for all g}.

    Nullity of the stacked (Ad_g - id) coordinate maps, singular values
    cut at tau_rank relative to the largest.
    """
    if not elements:
        raise ValueError("fixed_space_dim requires a nonempty element list")
    blocks = [adjoint_matrix(spec, g) - np.eye(3, dtype=spec.coord_dtype) for g in elements]
    stacked = np.vstack(blocks)
    s = np.linalg.svd(stacked, compute_uv=False)
    if s[0] <= tau_rank:
        return 3
    return 3 - int(np.sum(s > tau_rank * s[0]))


def is_group_element(spec: GroupSpec, g, tol: float = TAU_GROUP) -> bool:
    g = np.asarray(g)
    if g.shape != (2, 2):
        return False
    scale = max(1.0, float(np.linalg.norm(g)))
    if abs(np.linalg.det(g) - 1.0) > tol * scale * scale:
        return False
    if spec.family == "SL2R" and np.linalg.norm(np.imag(g)) > tol * scale:
        return False
    if spec.family == "SU2":
        if np.linalg.norm(g.conj().T @ g - np.eye(2)) > tol * scale * scale:
            return False
    return True


def is_algebra_element(spec: GroupSpec, X, tol: float = TAU_GROUP) -> bool:
    X = np.asarray(X)
    if X.shape != (2, 2):
        return False
    scale = max(1.0, float(np.linalg.norm(X)))
    if abs(np.trace(X)) > tol * scale:
        return False
    if spec.family == "SL2R" and np.linalg.norm(np.imag(X)) > tol * scale:
        return False
    if spec.family == "SU2" and np.linalg.norm(X + X.conj().T) > tol * scale:
        return False
    return True
