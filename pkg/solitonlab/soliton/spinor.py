#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Four-component spinor profiles in three dimensions.

A profile of kind "phi" is [v·n; i·u·σ_r·n], a profile of kind "chi" is
[-i·u·σ_r·m; v·m], with σ_r = x̂·σ. Profiles are sampled on the nodes of a radial
grid along a fixed set of unit directions; samples have the shape
(directions, nodes, 4).

"""

from typing import Dict, List, Optional, Sequence, Tuple, Type, TypeVar

import numpy as np
from typing_extensions import Literal

from solitonlab.exception import BuilderError
from solitonlab.radial import RadialGrid
from solitonlab.utility import ReprMixin

SpinorKind = Literal["phi", "chi"]

PAULI = np.array(
    [[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]], dtype=np.complex128
)
IDENTITY2 = np.eye(2, dtype=np.complex128)
ZERO2 = np.zeros((2, 2), dtype=np.complex128)

BETA = np.block([[IDENTITY2, ZERO2], [ZERO2, -IDENTITY2]])
ALPHA = np.array([np.block([[ZERO2, sigma], [sigma, ZERO2]]) for sigma in PAULI])
GAMMA2 = np.block([[ZERO2, PAULI[1]], [-PAULI[1], ZERO2]])

UNIT_TOLERANCE = 1e-14
CONJUGATION_TOLERANCE = 1e-12


def default_directions() -> np.ndarray:
    """Return the twelve vertices of the icosahedron as unit vectors.

    Their averages integrate polynomials of degree ≤ 5 on the sphere exactly.

    Returns:
        The directions with shape (12, 3).

    """
    golden = (1 + np.sqrt(5)) / 2
    vertices = []
    for first in (-1.0, 1.0):
        for second in (-golden, golden):
            vertices.extend(([0.0, first, second], [first, second, 0.0], [second, 0.0, first]))
    array = np.array(vertices)
    return array / np.linalg.norm(array, axis=1, keepdims=True)  # type: ignore[no-any-return]


def sigma_r(directions: np.ndarray) -> np.ndarray:
    """Return σ_r = x̂·σ for each direction.

    Arguments:
        directions: Unit vectors with shape (d, 3).

    Returns:
        The matrices with shape (d, 2, 2).

    """
    return np.einsum("dk,kab->dab", directions, PAULI)  # type: ignore[no-any-return]


def conjugate_vector(vector: np.ndarray) -> np.ndarray:
    """Return the 2-vector m = -iσ₂·conj(n) paired with n by charge conjugation.

    Arguments:
        vector: The 2-vector n.

    Returns:
        The 2-vector m.

    """
    return -1j * PAULI[1] @ np.conj(vector)  # type: ignore[no-any-return]


def _unit(vector: Sequence[complex], name: str) -> np.ndarray:
    array = np.array(vector, dtype=np.complex128)
    if array.shape != (2,):
        raise ValueError(f'Frame vector "{name}" must have two components')
    if abs(np.linalg.norm(array) - 1) > UNIT_TOLERANCE:
        raise ValueError(f'Frame vector "{name}" must be a unit vector')
    array.setflags(write=False)
    return array


def _pairs(vector: np.ndarray) -> List[List[float]]:
    return [[value.real, value.imag] for value in vector.tolist()]


class SpinorFrame(ReprMixin):
    """This class defines the frame vectors n₀, n₁ of the φ's and m₀, m₁ of the χ's.

    Arguments:
        n0: The unit vector of φ₀.
        n1: The unit vector of φ₁.
        m0: The unit vector of χ₀.
        m1: The unit vector of χ₁.

    Raises:
        ValueError: When a vector is not a unit 2-vector.

    """

    _T = TypeVar("_T", bound="SpinorFrame")

    _repr_attrs = ("n", "m", "is_orthonormal")

    def __init__(
        self,
        n0: Sequence[complex],
        n1: Sequence[complex],
        m0: Sequence[complex],
        m1: Sequence[complex],
    ) -> None:
        self.n = (_unit(n0, "n0"), _unit(n1, "n1"))
        self.m = (_unit(m0, "m0"), _unit(m1, "m1"))

    @classmethod
    def canonical(cls: Type[_T]) -> _T:
        """Return the frame n₀ = m₀ = (1, 0), n₁ = m₁ = (0, 1).

        Returns:
            The canonical frame.

        """
        return cls((1, 0), (0, 1), (1, 0), (0, 1))

    @classmethod
    def charge_conjugate(cls: Type[_T], n0: Sequence[complex], n1: Sequence[complex]) -> _T:
        """Return the frame with m_j = -iσ₂·conj(n_j).

        Arguments:
            n0: The unit vector of φ₀.
            n1: The unit vector of φ₁.

        Returns:
            The frame whose χ's are the charge conjugates of its φ's.

        """
        return cls(n0, n1, conjugate_vector(np.asarray(n0)), conjugate_vector(np.asarray(n1)))

    @classmethod
    def default(cls: Type[_T]) -> _T:
        """Return the charge conjugate frame of n₀ = (1, 0), n₁ = (0, 1).

        Returns:
            The default frame.

        """
        return cls.charge_conjugate((1, 0), (0, 1))

    @property
    def is_orthonormal(self) -> bool:
        """Return whether n₀*n₁ = 0 and m₀*m₁ = 0.

        Returns:
            Whether both pairs are orthogonal within the unit tolerance.

        """
        return bool(
            abs(np.vdot(*self.n)) <= UNIT_TOLERANCE and abs(np.vdot(*self.m)) <= UNIT_TOLERANCE
        )

    @classmethod
    def from_pyobj(cls: Type[_T], contents: Dict[str, List[List[float]]]) -> _T:
        """Create a :class:`SpinorFrame` instance from python dict.

        Arguments:
            contents: A python dict of the form {"n0": [[re, im], [re, im]], ...}.

        Returns:
            The loaded frame.

        """
        vectors = {
            name: [complex(real, imag) for real, imag in contents[name]]
            for name in ("n0", "n1", "m0", "m1")
        }
        return cls(**vectors)

    def to_pyobj(self) -> Dict[str, List[List[float]]]:
        """Dump the frame to a python dict.

        Returns:
            A python dict of the form {"n0": [[re, im], [re, im]], ...}.

        """
        return {
            "n0": _pairs(self.n[0]),
            "n1": _pairs(self.n[1]),
            "m0": _pairs(self.m[0]),
            "m1": _pairs(self.m[1]),
        }


class Spinor4Profile(ReprMixin):
    """This class defines a spinor profile assembled from a radial pair and a 2-vector.

    Arguments:
        kind: "phi" or "chi".
        radial: The radial pair (v, u) on the grid nodes.
        vector: The unit 2-vector n (phi) or m (chi).
        grid: The radial grid.
        directions: The unit directions, defaults to :func:`default_directions`.

    """

    _repr_attrs = ("kind", "vector", "grid")

    def __init__(
        self,
        kind: SpinorKind,
        radial: Tuple[np.ndarray, np.ndarray],
        vector: np.ndarray,
        grid: RadialGrid,
        directions: Optional[np.ndarray] = None,
    ) -> None:
        if kind not in ("phi", "chi"):
            raise ValueError(f'Unknown spinor kind "{kind}"')
        self.kind = kind
        self.v, self.u = (np.asarray(values, dtype=np.float64) for values in radial)
        self.vector = np.asarray(vector, dtype=np.complex128)
        self.grid = grid
        self.directions = default_directions() if directions is None else directions
        self._samples: Optional[np.ndarray] = None

    def _blocks(
        self, v: np.ndarray, u_sigma: np.ndarray
    ) -> Tuple[np.ndarray, np.ndarray]:
        plain = v[..., None] * self.vector
        if self.kind == "phi":
            return plain, 1j * u_sigma
        return -1j * u_sigma, plain

    @property
    def samples(self) -> np.ndarray:
        """Return the spinor samples.

        Returns:
            The complex samples with shape (directions, nodes, 4).

        """
        if self._samples is None:
            rotated = sigma_r(self.directions) @ self.vector
            u_sigma = self.u[None, :, None] * rotated[:, None, :]
            v = np.broadcast_to(self.v, u_sigma.shape[:2])
            upper, lower = self._blocks(v, u_sigma)
            self._samples = np.concatenate((upper, lower), axis=-1)
            self._samples.setflags(write=False)
        return self._samples

    def gradient(self) -> np.ndarray:
        """Return the Cartesian gradient of the samples by the chain rule.

        With x̂ = x/r, ∂_k(v·w) = v'·x̂_k·w and
        ∂_k(u·σ_r·w) = (u'·x̂_k·σ_r + (u/r)·(σ_k - x̂_k·σ_r))·w.
        The radial derivatives are centered differences of v (even) and u (odd).

        Returns:
            The complex gradient with shape (3, directions, nodes, 4).

        """
        dv = self.grid.derivative(self.v, "even")
        du = self.grid.derivative(self.u, "odd")
        quotient = self.grid.quotient(self.u)
        rotated = sigma_r(self.directions) @ self.vector
        partials = PAULI @ self.vector

        components = []
        for k in range(3):
            x_k = self.directions[:, k, None, None]
            u_sigma = du[None, :, None] * x_k * rotated[:, None, :] + quotient[None, :, None] * (
                partials[k] - x_k * rotated[:, None, :]
            )
            v = dv[None, :] * self.directions[:, k, None]
            upper, lower = self._blocks(v, u_sigma)
            components.append(np.concatenate((upper, lower), axis=-1))
        return np.stack(components)


def dirac_samples(profile: Spinor4Profile, m: float) -> np.ndarray:
    """Apply D_m = -iα·∇ + βm to a profile with explicit 4×4 matrices.

    Arguments:
        profile: The spinor profile.
        m: The mass.

    Returns:
        The samples of D_m applied to the profile.

    """
    kinetic = np.einsum("kab,kdrb->dra", ALPHA, profile.gradient())
    return -1j * kinetic + m * profile.samples @ BETA.T  # type: ignore[no-any-return]


def apply_dirac(profile: Spinor4Profile, m: float) -> Spinor4Profile:
    """Apply D_m to a profile through its radial reduction.

    For kind phi, D_m maps (v, u) to (mv + u' + 2u/r, -v' - mu); for kind chi, to
    (-(mv + u' + 2u/r), mu + v').

    Arguments:
        profile: The spinor profile.
        m: The mass.

    Returns:
        The profile of the same kind and vector with the transformed radial pair.

    """
    grid = profile.grid
    divergence = grid.derivative(profile.u, "odd") + 2 * grid.quotient(profile.u)
    dv = grid.derivative(profile.v, "even")
    upper = m * profile.v + divergence
    lower = dv + m * profile.u
    if profile.kind == "phi":
        radial = (upper, -lower)
    else:
        radial = (-upper, lower)
    return Spinor4Profile(profile.kind, radial, profile.vector, grid, profile.directions)


def charge_conjugate(profile: Spinor4Profile) -> Spinor4Profile:
    """Apply the charge conjugation iγ²K and reorganize the result into the other kind.

    Kind phi with vector n maps to kind chi with m = -iσ₂·conj(n), kind chi with vector
    m maps to kind phi with n = iσ₂·conj(m); the operation squares to the identity.

    Arguments:
        profile: The spinor profile.

    Returns:
        The charge conjugate profile.

    Raises:
        BuilderError: When the closed form disagrees with iγ²K applied to the samples.

    """
    radial = (profile.v, profile.u)
    if profile.kind == "phi":
        result = Spinor4Profile(
            "chi", radial, conjugate_vector(profile.vector), profile.grid, profile.directions
        )
    else:
        vector = 1j * PAULI[1] @ np.conj(profile.vector)
        result = Spinor4Profile("phi", radial, vector, profile.grid, profile.directions)

    direct = np.conj(profile.samples) @ (1j * GAMMA2).T
    error = np.abs(result.samples - direct).max()
    if error > CONJUGATION_TOLERANCE * max(np.abs(direct).max(), 1.0):
        raise BuilderError(f"Charge conjugation disagrees with the closed form by {error:.3g}")
    return result
