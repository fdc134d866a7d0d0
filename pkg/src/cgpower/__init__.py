"""Coherence generating power of unitaries and unital channels."""

from .asymmetry import AgpResult, HamiltonianSpectrum, agp, agp_monte_carlo, gap_spectrum_invariance_check
from .cgp import (
    CgpResult,
    cgp_basis_changed,
    cgp_channel,
    cgp_unitary,
    is_mub_pair,
    max_cgp,
    mixture_scan,
)
from .channels import ChannelError, KrausChannel, dephasing_channel, mixture_channel
from .coherence import c_b, c_b_tilde, dephase, is_incoherent_channel, is_incoherent_unitary, q_project
from .ensembles import dephased_haar_diagonal, haar_state, haar_unitary, uniform_simplex
from .matrix_core import MatrixFormatError, max_entangled, rho_b, swap_operator
from .protocol import MonteCarloEstimate, ProtocolTrace, monte_carlo_cgp, simulate_protocol_channel, simulate_protocol_unitary
from .statistics import analytic_mean, analytic_pdd_d2, ks_test_d2, levy_bound, sample_cgp_distribution, variance_scaling_fit

__version__ = "0.1.0"
