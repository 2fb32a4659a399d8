#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""The numerical defaults shared by all modules."""


class Config:
    """This is a base class defining the numerical defaults of solitonlab.

    Attributes:
        noise_floor: Relative level below which sampled profiles are treated as noise.
        support_relative_threshold: Relative support threshold for spectra of sampled data.
        positivity_tolerance: Tolerance of numerical root signs in polynomial sign analysis.
        ode_rtol: Relative tolerance of the shooting integrations of accepted eigenpairs.
        ode_atol: Absolute tolerance of the shooting integrations.
        scan_rtol: Relative tolerance used while scanning a bracket for sign changes.
        scan_points: Number of ω samples when scanning a bracket.
        blow_up_limit: Sup norm at which time evolution aborts.
        cfl_number: Largest admissible ratio Δt/Δx for the Klein-Gordon integrator.
        workers: Number of worker threads for independent pipeline stages.
        legendre_nodes: Number of Gauss-Legendre nodes for nonlinearity primitives.

    """

    def __init__(self) -> None:
        self.noise_floor = 1e-12
        self.support_relative_threshold = 1e-6
        self.positivity_tolerance = 1e-9
        self.ode_rtol = 1e-11
        self.ode_atol = 1e-14
        self.scan_rtol = 1e-7
        self.scan_points = 64
        self.blow_up_limit = 1e6
        self.cfl_number = 0.5
        self.workers = 2
        self.legendre_nodes = 48


config = Config()
