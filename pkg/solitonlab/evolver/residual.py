#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The nonlinear Dirac residual R = i∂_tψ - D_mψ + f(ψ*βψ)βψ of an assembled wave.

Every mode of the wave solves its linear level equation up to the radial
eigen-residuals (r_v, r_u), which gives the identity::

    R = β(f(F) - V)ψ - Σ_j a_j e^{-iω_j t} φ_j[r_v, r_u] + Σ_j b_j e^{iω_j t} χ_j[r_v, r_u]

where φ_j[r_v, r_u] and χ_j[r_v, r_u] are the profiles of level j assembled from the
residual pair instead of (v_j, u_j).

"""

import logging
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from solitonlab.radial import radial_residuals
from solitonlab.soliton import (
    BETA,
    MultiFrequencyWave,
    NonlinearityTable,
    Spinor4Profile,
    apply_dirac,
    beta_density,
    density_F,
)
from solitonlab.utility import ReportLogging, ReprMixin

logger = logging.getLogger(__name__)

RESIDUAL_TIMES = (0.0, 0.37, 1.1)


class DiracResidual(ReprMixin):  # pylint: disable=too-many-instance-attributes
    """This class defines the residual norms of a wave at a list of times.

    Arguments:
        times: The evaluation times.
        l2: The L² norms of the direct residual.
        sup: The sup norms of the direct residual.
        identity_l2: The L² norms of the identity evaluation.
        agreement: The L² norms of the difference of both evaluations.
        potential_norm: The L² norm of Vψ at t = 0.
        extended: Whether f was evaluated above its last knot.
        delta_r: The radial grid spacing.

    """

    _repr_attrs = ("times", "l2", "agreement", "extended")

    def __init__(  # pylint: disable=too-many-arguments
        self,
        times: Sequence[float],
        l2: Sequence[float],
        sup: Sequence[float],
        identity_l2: Sequence[float],
        agreement: Sequence[float],
        potential_norm: float,
        extended: bool,
        delta_r: float,
    ) -> None:
        self.times = list(times)
        self.l2 = list(l2)
        self.sup = list(sup)
        self.identity_l2 = list(identity_l2)
        self.agreement = list(agreement)
        self.potential_norm = potential_norm
        self.extended = extended
        self.delta_r = delta_r

    @property
    def max_l2(self) -> float:
        """Return the largest L² norm over the times.

        Returns:
            max_t ‖R(·, t)‖_{L²}.

        """
        return max(self.l2)

    @property
    def max_agreement(self) -> float:
        """Return the largest difference of the direct and the identity evaluation.

        Returns:
            max_t ‖R_direct - R_identity‖_{L²}.

        """
        return max(self.agreement)

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the residual report to a python dict.

        Returns:
            A json-able dict of the per-time norms and the summary values.

        """
        return {
            "times": self.times,
            "l2": self.l2,
            "sup": self.sup,
            "identity_l2": self.identity_l2,
            "agreement": self.agreement,
            "max_l2": self.max_l2,
            "max_agreement": self.max_agreement,
            "potential_norm": self.potential_norm,
            "extended": self.extended,
            "delta_r": self.delta_r,
        }


def _l2_norm(wave: MultiFrequencyWave, values: np.ndarray) -> float:
    density = np.sum(np.abs(values) ** 2, axis=-1).mean(axis=0)
    return float(np.sqrt(4 * np.pi * wave.grid.integrate(density, 3)))


def _residual_profiles(wave: MultiFrequencyWave) -> List[Tuple[Spinor4Profile, Spinor4Profile]]:
    residuals = []
    for pair, phi, chi in zip(wave.pairs, wave.phi, wave.chi):
        radial = radial_residuals(wave.potential, wave.m, pair.omega, (pair.v, pair.u), wave.grid)
        residuals.append(
            (
                Spinor4Profile("phi", radial, phi.vector, wave.grid, wave.directions),
                Spinor4Profile("chi", radial, chi.vector, wave.grid, wave.directions),
            )
        )
    return residuals


def dirac_residual(
    wave: MultiFrequencyWave,
    table: NonlinearityTable,
    times: Sequence[float] = RESIDUAL_TIMES,
) -> DiracResidual:
    """Evaluate the nonlinear Dirac residual of a wave directly and through its identity.

    The direct evaluation uses the analytic time derivative of every mode and applies
    D_m through the radial reduction of each profile. The identity evaluation uses the
    closed form density F and the radial eigen-residuals of the levels.

    Arguments:
        wave: The wave.
        table: The nonlinearity f.
        times: The evaluation times.

    Returns:
        The :class:`DiracResidual` report.

    """
    dirac = [apply_dirac(profile, wave.m).samples for profile in wave.profiles]
    residuals = _residual_profiles(wave)
    potential = wave.potential.sample(wave.grid)[None, :, None]
    closed_form = np.broadcast_to(density_F(wave), dirac[0].shape[:2])
    coupling, extended = table.evaluate(closed_form)
    coupling = coupling[..., None] - potential

    l2, sup, identity_l2, agreement = [], [], [], []
    for t in times:
        modes = wave.modes(t)
        psi = wave.field(t)
        beta_psi = psi @ BETA.T
        values, outside = table.evaluate(beta_density(psi))
        extended |= outside

        direct = values[..., None] * beta_psi
        for (coefficient, energy, profile), applied in zip(modes, dirac):
            direct = direct + coefficient * (energy * profile.samples - applied)

        identity = coupling * beta_psi
        for (phi, chi), (a, _, _), (b, _, _) in zip(residuals, modes[:2], modes[2:]):
            identity = identity - a * phi.samples + b * chi.samples

        l2.append(_l2_norm(wave, direct))
        sup.append(float(np.sqrt(np.sum(np.abs(direct) ** 2, axis=-1)).max()))
        identity_l2.append(_l2_norm(wave, identity))
        agreement.append(_l2_norm(wave, direct - identity))

    if extended:
        logger.warning("The residual evaluated f above τ_max = %.6g", table.tau_max)

    report = DiracResidual(
        times,
        l2,
        sup,
        identity_l2,
        agreement,
        _l2_norm(wave, potential * wave.field(0.0)),
        extended,
        wave.grid.delta,
    )
    logger.info("Dirac residual max L² norm %.3g", report.max_l2)
    logger.debug("%s", ReportLogging("DIRAC RESIDUAL", report.to_pyobj()))
    return report
