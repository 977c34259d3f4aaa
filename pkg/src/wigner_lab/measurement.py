"""Information-transfer measurement model: record orthogonality in the static and
boosted frames, detector efficiency, and a deterministic click simulator.

The apparatus is a two-level recorder with a Gaussian momentum profile. Its blank
state has components a(p)/sqrt(2) on each record ket, so the record branches carry
scalar profiles a_rec = a / sqrt(2). The definitions

    gamma~ = integral(|b_up|^2 - |b_diag|^2),  delta~ = 2 integral(b_up b_diag*)

applied to the boosted blank components already absorb that sqrt(2) convention and
produce unit-trace record states

    rho~_up = 1/2 [[1 + gamma~, delta~], [delta~*, 1 - gamma~]]
    rho~_diag = 1/2 [[1 + gamma~, -delta~], [-delta~*, 1 - gamma~]]
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import BoostParams, FourMomentum, inverse_boost_components, require_on_shell
from .packets import (
    DEFAULT_ORDER,
    GaussianProfile,
    MomentumGrid,
    SpinorPacket,
    gauss_hermite_grid,
    sigma_x_packet,
)
from .spinreduce import SpinDensityMatrix, reduce
from .wigner import boost_packet, wigner_entries

ETA_BOUND_TOL = 1e-12
SQRT1_2 = 1.0 / math.sqrt(2.0)

SIGMA_X_BASIS = (
    np.array([SQRT1_2, SQRT1_2], dtype=complex),
    np.array([SQRT1_2, -SQRT1_2], dtype=complex),
)
SIGMA_Z_BASIS = (
    np.array([1.0, 0.0], dtype=complex),
    np.array([0.0, 1.0], dtype=complex),
)


@dataclass(frozen=True)
class MeasurementSetup:
    """System amplitudes, outcome-ket overlap, and the apparatus packet data.

    record_mode "ideal" gives orthogonal record kets split by the measurement;
    "none" leaves the apparatus in its blank state for both outcomes (a device
    that records nothing).
    """

    alpha: complex
    beta: complex
    overlap_c: complex
    blank: SpinorPacket
    rec_up: np.ndarray
    rec_diag: np.ndarray
    boost: BoostParams
    record_mode: str = "ideal"

    def __post_init__(self):
        if self.record_mode not in ("ideal", "none"):
            raise ValueError(f"unknown record_mode {self.record_mode!r}")
        norm = (
            abs(self.alpha) ** 2
            + abs(self.beta) ** 2
            + 2.0 * (np.conj(self.alpha) * self.beta * self.overlap_c).real
        )
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"system state norm {norm!r} != 1 for the given overlap")


@dataclass(frozen=True)
class ClickStats:
    n_up: int
    n_diag: int
    p_hat_up: float
    p_hat_diag: float
    stderr_up: float
    stderr_diag: float
    seed: int


@dataclass(frozen=True)
class EfficiencyReport:
    """Pointwise detector efficiency statistics over a packet's momentum support."""

    eta_mean_momentum: float    # eta at the packet's mean momentum (the origin)
    eta_packet_avg: float       # |a(p)|^2-weighted average
    eta_min: float
    eta_max: float
    bound_violated: bool        # any eta > 1 + ETA_BOUND_TOL (reported, never clamped)


def normalized_system(alpha: complex, beta: complex, overlap_c: complex) -> tuple[complex, complex]:
    """Scale (alpha, beta) so the non-orthogonal-ket norm condition holds."""
    norm = (
        abs(alpha) ** 2 + abs(beta) ** 2 + 2.0 * (np.conj(alpha) * beta * overlap_c).real
    )
    if norm <= 0.0:
        raise ValueError("degenerate system state")
    s = 1.0 / math.sqrt(norm)
    return alpha * s, beta * s


def make_setup(
    alpha: complex,
    beta: complex,
    overlap_c: complex,
    xi: float,
    boost: BoostParams,
    order: int = DEFAULT_ORDER,
    grid: MomentumGrid | None = None,
    record_mode: str = "ideal",
) -> MeasurementSetup:
    if grid is None:
        grid = gauss_hermite_grid(xi, order)
    blank = sigma_x_packet(xi, grid)              # components a/sqrt(2) on each record ket
    rec = GaussianProfile(xi)(grid.nodes) * SQRT1_2
    alpha, beta = normalized_system(alpha, beta, overlap_c)
    return MeasurementSetup(
        alpha=complex(alpha),
        beta=complex(beta),
        overlap_c=complex(overlap_c),
        blank=blank,
        rec_up=rec,
        rec_diag=rec.copy(),
        boost=boost,
        record_mode=record_mode,
    )


def born_probabilities(rho: SpinDensityMatrix, basis) -> tuple[float, float]:
    """Outcome probabilities p_k = <a_k| rho |a_k> for an orthonormal spin basis."""
    up, diag = (np.asarray(b, dtype=complex) for b in basis)
    gram_err = max(
        abs(np.vdot(up, up) - 1.0), abs(np.vdot(diag, diag) - 1.0), abs(np.vdot(up, diag))
    )
    if gram_err > 1e-12:
        raise ValueError(f"basis is not orthonormal (gram deviation {gram_err!r})")
    m = rho.matrix
    p_up = float(np.real(np.conj(up) @ m @ up))
    p_diag = float(np.real(np.conj(diag) @ m @ diag))
    return p_up, p_diag


def static_orthogonality_residual(setup: MeasurementSetup, record_overlap: complex) -> complex:
    """<up|diag> (1 - <A_up|A_diag>): zero for any physical measurement device."""
    return setup.overlap_c * (1.0 - complex(record_overlap))


def apparatus_states(
    setup: MeasurementSetup,
) -> tuple[SpinDensityMatrix, SpinDensityMatrix, SpinDensityMatrix]:
    """Boosted apparatus reduced states (blank, record-up, record-diag)."""
    boosted = boost_packet(setup.blank, setup.boost)
    rho_blank = reduce(boosted)
    if setup.record_mode == "none":
        return rho_blank, rho_blank, rho_blank
    g, d = rho_blank.gamma, rho_blank.delta
    return rho_blank, SpinDensityMatrix(g, d), SpinDensityMatrix(g, -d)


def cross_trace(a: SpinDensityMatrix, b: SpinDensityMatrix) -> float:
    """Tr(a b) via the explicit matrix product."""
    return float(np.trace(a.matrix @ b.matrix).real)


def boosted_orthogonality_residual(setup: MeasurementSetup) -> float:
    """|<up|diag>|^2 (Tr rho~_blank^2 - Tr rho~_up rho~_diag).

    Exactly zero when the outcome kets are orthogonal, whatever the boost; for
    non-orthogonal outcomes it vanishes only if the records are identical. Both
    traces go through the same matrix-product path so the identical-record case
    cancels exactly, not just to round-off.
    """
    rho_blank, rho_up, rho_diag = apparatus_states(setup)
    gap = cross_trace(rho_blank, rho_blank) - cross_trace(rho_up, rho_diag)
    return abs(setup.overlap_c) ** 2 * gap


def detector_efficiency(p: FourMomentum, boost: BoostParams) -> float:
    """Pointwise quantum efficiency of the moving detector,

        eta = |K sqrt(q0/p0) [(q0+m) cosh(theta/2) + qx sinh(theta/2)]|^2,

    with q = Lambda^-1 p. Equals 1 at v = 0. Not clamped: values above 1 occur
    (the carried measure factor q0/p0 exceeds 1 near the packet center) and are
    surfaced by EfficiencyReport.bound_violated.
    """
    require_on_shell(p, boost.m)
    q0, qx = inverse_boost_components(p.p0, p.px, boost)
    m = boost.m
    K = 1.0 / math.sqrt((q0 + m) * (p.p0 + m))
    bracket = (q0 + m) * boost.cosh_half + qx * boost.sinh_half
    return abs(K * math.sqrt(q0 / p.p0) * bracket) ** 2


def _efficiency_field(grid: MomentumGrid, boost: BoostParams) -> np.ndarray:
    p = grid.nodes
    p0 = np.sqrt(boost.m ** 2 + np.sum(p * p, axis=1))
    q0, qx = inverse_boost_components(p0, p[:, 0], boost)
    m = boost.m
    K = 1.0 / np.sqrt((q0 + m) * (p0 + m))
    bracket = (q0 + m) * boost.cosh_half + qx * boost.sinh_half
    return np.abs(K * np.sqrt(q0 / p0) * bracket) ** 2


def packet_efficiency(xi: float, boost: BoostParams, grid: MomentumGrid | None = None) -> EfficiencyReport:
    """Efficiency field over a width-xi packet: mean-momentum value, packet average,
    extremes, and whether the nominal eta <= 1 bound is violated anywhere."""
    if grid is None:
        grid = gauss_hermite_grid(xi, DEFAULT_ORDER)
    eta = _efficiency_field(grid, boost)
    weight = GaussianProfile(xi)(grid.nodes) ** 2
    eta_bar = float(np.sum(grid.weights * weight * eta))
    eta_origin = detector_efficiency(
        FourMomentum(boost.m, 0.0, 0.0, 0.0), boost
    )
    return EfficiencyReport(
        eta_mean_momentum=eta_origin,
        eta_packet_avg=eta_bar,
        eta_min=float(eta.min()),
        eta_max=float(eta.max()),
        bound_violated=bool(np.any(eta > 1.0 + ETA_BOUND_TOL)),
    )


def click_simulator(setup: MeasurementSetup, n: int, seed: int) -> dict[str, ClickStats]:
    """Simulate n spin-detector clicks in the static and the boosted frame.

    Momenta are sampled exactly from |a(p)|^2 (normal, width xi/sqrt(2) per axis)
    with a counter-based Philox stream keyed by the seed, and one uniform decides
    each sample's outcome in both frames. Counts are integer tallies, so results
    do not depend on evaluation order.
    """
    if n < 1:
        raise ValueError(f"sample count must be at least 1, got {n}")
    if setup.blank.source is None:
        raise ValueError("setup blank packet lacks its analytic profile")
    xi = setup.blank.source.scalar.xi
    boost = setup.boost
    rng = np.random.Generator(np.random.Philox(key=seed))
    q = rng.normal(0.0, xi / math.sqrt(2.0), size=(n, 3))
    u = rng.random(n)

    q0 = np.sqrt(boost.m ** 2 + np.sum(q * q, axis=1))
    d11, d12, d21, d22, _, _, _ = wigner_entries(q0, q[:, 0], q[:, 1], q[:, 2], boost)
    # spinor starts as (1,1)/sqrt(2); probability of the +x outcome after rotation
    c1 = (d11 + d12) * SQRT1_2
    c2 = (d21 + d22) * SQRT1_2
    amp_up = (c1 + c2) * SQRT1_2
    p_up_boost = np.abs(amp_up) ** 2

    n_up_static = int(np.count_nonzero(u < 1.0))
    n_up_boost = int(np.count_nonzero(u < p_up_boost))
    return {
        "static": _click_stats(n_up_static, n, seed),
        "boosted": _click_stats(n_up_boost, n, seed),
    }


def _click_stats(n_up: int, n: int, seed: int) -> ClickStats:
    p_up = n_up / n
    p_diag = 1.0 - p_up
    return ClickStats(
        n_up=n_up,
        n_diag=n - n_up,
        p_hat_up=p_up,
        p_hat_diag=p_diag,
        stderr_up=math.sqrt(p_up * (1.0 - p_up) / n),
        stderr_diag=math.sqrt(p_diag * (1.0 - p_diag) / n),
        seed=seed,
    )
