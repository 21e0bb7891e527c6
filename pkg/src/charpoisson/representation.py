"""Representations of the surface group: generator images, evaluation,
conjugation, goodness certificates, boundary holonomies, persistence."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import liealg
from .liealg import GroupSpec
from .surface import SurfacePresentation, Word, boundary_word, commutator_product

REP_SCHEMA = "charpoisson-rep-v1"


@dataclass(frozen=True)
class Representation:
    presentation: SurfacePresentation
    spec: GroupSpec
    images: tuple  # one 2x2 array per free generator

    def __post_init__(self):
        if len(self.images) != self.presentation.rank:
            raise ValueError(
                f"expected {self.presentation.rank} generator images, got {len(self.images)}"
            )


@dataclass(frozen=True)
class GoodnessCertificate:
    centralizer_dim: int
    is_good: bool
    boundary_centralizer_dims: tuple

    @property
    def is_boundary_regular(self):
        return all(d == 1 for d in self.boundary_centralizer_dims)


def evaluate_word(rho: Representation, w: Word):
    """rho(w): left-to-right product of generator images."""
    out = np.eye(2, dtype=rho.spec.matrix_dtype)
    for g, e in w.letters:
        mat = rho.images[g]
        out = out @ (mat if e == 1 else liealg.inverse_group(mat))
    return out


def random_representation(p: SurfacePresentation, spec: GroupSpec, rng) -> Representation:
    images = tuple(liealg.random_group_element(spec, rng) for _ in range(p.rank))
    return Representation(p, spec, images)


def conjugate(rho: Representation, g) -> Representation:
    ginv = liealg.inverse_group(g)
    images = tuple(np.asarray(g) @ im @ ginv for im in rho.images)
    return Representation(rho.presentation, rho.spec, images)


def certify_goodness(rho: Representation, tau_rank: float = liealg.TAU_RANK) -> GoodnessCertificate:
    """centralizer_dim over all generator images; per-boundary z(rho(C_j)) dims.

    is_good iff the common centralizer is trivial (the computable proxy for
    complete reducibility; all three families have trivial algebra center).
    """
    p = rho.presentation
    if p.rank == 0:
        central = 3
    else:
        central = liealg.fixed_space_dim(rho.spec, list(rho.images), tau_rank)
    bdry = tuple(
        liealg.fixed_space_dim(rho.spec, [evaluate_word(rho, boundary_word(p, j))], tau_rank)
        for j in range(1, p.punctures + 1)
    )
    return GoodnessCertificate(central, central == 0, bdry)


def boundary_traces(rho: Representation):
    """tr rho(C_j) for j = 1..m (real for the real forms)."""
    p = rho.presentation
    vals = [
        np.trace(evaluate_word(rho, boundary_word(p, j)))
        for j in range(1, p.punctures + 1)
    ]
    if rho.spec.is_complex:
        return [complex(v) for v in vals]
    return [float(np.real(v)) for v in vals]


def relator_residual(rho: Representation) -> float:
    """|| rho(prod [ai,bi] C_1...C_m) - I ||; zero by construction of C_m."""
    p = rho.presentation
    w = commutator_product(p)
    for j in range(1, p.punctures + 1):
        w = w * boundary_word(p, j)
    return float(np.linalg.norm(evaluate_word(rho, w) - np.eye(2)))


def to_json_dict(rho: Representation) -> dict:
    def pack(mat):
        m = np.asarray(mat, dtype=np.complex128)
        return [[float(m[i, j].real), float(m[i, j].imag)] for i in (0, 1) for j in (0, 1)]

    return {
        "schema": REP_SCHEMA,
        "group": rho.spec.family,
        "genus": rho.presentation.genus,
        "punctures": rho.presentation.punctures,
        "images": [pack(im) for im in rho.images],
    }


def from_json_dict(doc: dict) -> Representation:
    if doc.get("schema", REP_SCHEMA) != REP_SCHEMA:
        raise ValueError(f"unsupported representation schema {doc.get('schema')!r}")
    spec = liealg.make_spec(doc["group"])
    p = SurfacePresentation(int(doc["genus"]), int(doc["punctures"]))
    images = []
    for flat in doc["images"]:
        m = np.array(
            [complex(re, im) for re, im in flat], dtype=np.complex128
        ).reshape(2, 2)
        images.append(m.real.astype(np.float64) if spec.family == "SL2R" else m)
    return Representation(p, spec, tuple(images))


def save_representation(rho: Representation, path):
    with open(path, "w") as fh:
        json.dump(to_json_dict(rho), fh, indent=2, sort_keys=True)


def load_representation(path) -> Representation:
    with open(path) as fh:
        return from_json_dict(json.load(fh))


def good_random_representation(
    p: SurfacePresentation,
    spec: GroupSpec,
    seed: int,
    attempts: int = 20,
    require_boundary_regular: bool = False,
):
    """Seeded random representation, reseeding seed+1, ... until good.

    Returns (rho, certificate, seeds_tried). Raises NotGoodPoint after the
    attempt budget.
    """
    from .errors import NotGoodPoint

    tried = []
    for k in range(attempts):
        s = seed + k
        tried.append(s)
        rho = random_representation(p, spec, np.random.default_rng(s))
        cert = certify_goodness(rho)
        ok = cert.is_good or p.rank == 0
        if ok and require_boundary_regular and not cert.is_boundary_regular:
            ok = False
        if ok:
            return rho, cert, tried
    raise NotGoodPoint(
        f"no good point found for (g,m)=({p.genus},{p.punctures}) "
        f"{spec.family} after {attempts} seeds starting at {seed}"
    )
