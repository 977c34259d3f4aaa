"""Momentum-space spinor wave packets discretized on quadrature grids.

Grids carry plain momentum-volume weights: for any integrand f,
``sum(weights * f(nodes))`` approximates the 3-momentum integral of f.
The default tensor Gauss-Hermite scheme uses the change of variable
p = xi * u, so Gaussian-times-smooth integrands are handled to round-off
at modest orders. All reductions go through numpy's pairwise summation,
which keeps results bit-stable run to run.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .kinematics import BoostParams, momentum_on_shell

DEFAULT_ORDER = 24
RECT_CUTOFF_MULT = 8.0


@dataclass(frozen=True)
class MomentumGrid:
    nodes: np.ndarray       # (n, 3) momentum points
    weights: np.ndarray     # (n,) positive momentum-volume weights
    scheme: str

    def __post_init__(self):
        if self.nodes.ndim != 2 or self.nodes.shape[1] != 3:
            raise ValueError(f"nodes must have shape (n, 3), got {self.nodes.shape}")
        if self.weights.shape != (self.nodes.shape[0],):
            raise ValueError("weights must be one per node")
        if not np.all(np.isfinite(self.weights)) or np.any(self.weights <= 0.0):
            raise ValueError("weights must be positive and finite")
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    def __len__(self) -> int:
        return self.nodes.shape[0]

    def matches(self, other: "MomentumGrid") -> bool:
        return (
            self.scheme == other.scheme
            and self.nodes.shape == other.nodes.shape
            and np.array_equal(self.nodes, other.nodes)
            and np.array_equal(self.weights, other.weights)
        )


def gauss_hermite_grid(xi: float, order: int = DEFAULT_ORDER) -> MomentumGrid:
    """Tensor Gauss-Hermite grid scaled to a packet of width xi."""
    if xi <= 0.0:
        raise ValueError(f"width xi must be positive, got {xi!r}")
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")
    u, w = np.polynomial.hermite.hermgauss(order)
    x = xi * u
    wx = xi * w * np.exp(u * u)       # fold the e^{-u^2} weight back into the measure
    gx, gy, gz = np.meshgrid(x, x, x, indexing="ij")
    wxx, wyy, wzz = np.meshgrid(wx, wx, wx, indexing="ij")
    nodes = np.stack([gx.ravel(), gy.ravel(), gz.ravel()], axis=1)
    weights = (wxx * wyy * wzz).ravel()
    return MomentumGrid(nodes, weights, scheme=f"gauss-hermite({order})@xi={xi!r}")


def rectangular_grid(xi: float, order: int = 64, cutoff_mult: float = RECT_CUTOFF_MULT) -> MomentumGrid:
    """Midpoint-rule grid on the cube [-cutoff, cutoff]^3 with cutoff = cutoff_mult * xi."""
    if xi <= 0.0:
        raise ValueError(f"width xi must be positive, got {xi!r}")
    cutoff = cutoff_mult * xi
    h = 2.0 * cutoff / order
    x = -cutoff + h * (np.arange(order) + 0.5)
    gx, gy, gz = np.meshgrid(x, x, x, indexing="ij")
    nodes = np.stack([gx.ravel(), gy.ravel(), gz.ravel()], axis=1)
    weights = np.full(nodes.shape[0], h ** 3)
    return MomentumGrid(nodes, weights, scheme=f"rectangular({cutoff!r},{order})")


@dataclass(frozen=True)
class GaussianProfile:
    """Isotropic Gaussian amplitude pi^(-3/4) xi^(-3/2) exp(-p^2 / (2 xi^2)), unit L2 norm."""

    xi: float

    def __post_init__(self):
        if self.xi <= 0.0:
            raise ValueError(
                f"width xi must be positive, got {self.xi!r}; "
                "the xi = 0 momentum eigenstate is handled by MomentumEigenstate"
            )

    def __call__(self, points: np.ndarray) -> np.ndarray:
        p2 = np.sum(np.asarray(points, dtype=float) ** 2, axis=-1)
        return math.pi ** (-0.75) * self.xi ** (-1.5) * np.exp(-p2 / (2.0 * self.xi * self.xi))


@dataclass(frozen=True)
class SpinorSource:
    """Analytic description amp_r(p) = spin[r] * scalar(p) of a separable spinor packet.

    Boosts resample the source at transformed momenta, so packets that should be
    boostable must keep their source attached.
    """

    scalar: GaussianProfile
    spin: tuple[complex, complex]

    def amplitudes(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        a = self.scalar(points)
        return self.spin[0] * a, self.spin[1] * a


@dataclass(frozen=True)
class SpinorPacket:
    grid: MomentumGrid
    amp1: np.ndarray
    amp2: np.ndarray
    source: SpinorSource | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.grid)
        if self.amp1.shape != (n,) or self.amp2.shape != (n,):
            raise ValueError("amplitudes must be one per grid node")
        self.amp1.setflags(write=False)
        self.amp2.setflags(write=False)

    def norm_squared(self) -> float:
        w = self.grid.weights
        return float(np.sum(w * (np.abs(self.amp1) ** 2 + np.abs(self.amp2) ** 2)))

    def normalized(self) -> "SpinorPacket":
        scale = 1.0 / math.sqrt(self.norm_squared())
        return SpinorPacket(self.grid, scale * self.amp1, scale * self.amp2, source=None)


def gaussian_scalar(xi: float, grid: MomentumGrid) -> np.ndarray:
    """Per-node values of the unit-norm Gaussian amplitude of width xi."""
    return GaussianProfile(xi)(grid.nodes)


def sigma_x_packet(xi: float, grid: MomentumGrid) -> SpinorPacket:
    """Packet prepared in the +1 eigenstate of sigma_x: amp1 = amp2 = a(p)/sqrt(2)."""
    a = gaussian_scalar(xi, grid)
    s = 1.0 / math.sqrt(2.0)
    source = SpinorSource(GaussianProfile(xi), (s, s))
    return SpinorPacket(grid, s * a.astype(complex), s * a.astype(complex), source=source)


def spinor_packet(xi: float, spin: tuple[complex, complex], grid: MomentumGrid) -> SpinorPacket:
    """Separable packet with a Gaussian scalar profile and the given spinor weights."""
    c1, c2 = complex(spin[0]), complex(spin[1])
    n = abs(c1) ** 2 + abs(c2) ** 2
    if not math.isfinite(n) or n == 0.0:
        raise ValueError(f"spinor weights must be normalizable, got {spin!r}")
    c1, c2 = c1 / math.sqrt(n), c2 / math.sqrt(n)
    a = gaussian_scalar(xi, grid)
    source = SpinorSource(GaussianProfile(xi), (c1, c2))
    return SpinorPacket(grid, c1 * a, c2 * a, source=source)


def inner_product(x: SpinorPacket, y: SpinorPacket) -> complex:
    """<x|y> by quadrature; conjugate-symmetric. Requires matching grids."""
    if not x.grid.matches(y.grid):
        raise ValueError("packets live on different grids")
    w = x.grid.weights
    return complex(np.sum(w * (np.conj(x.amp1) * y.amp1 + np.conj(x.amp2) * y.amp2)))


@dataclass(frozen=True)
class MomentumEigenstate:
    """Zero-width (xi = 0) limit: a sharp momentum with a factorized spinor.

    A boost Wigner-rotates the spinor by a single unitary, so no spin-momentum
    correlation appears and the reduced spin state stays pure.
    """

    pvec: tuple[float, float, float]
    spin: tuple[complex, complex]
    m: float = 1.0

    def four_momentum(self):
        return momentum_on_shell(self.pvec, self.m)

    def boosted_spin(self, boost: BoostParams) -> tuple[complex, complex]:
        from .wigner import wigner_matrix
        from .kinematics import apply_inverse_boost

        q = apply_inverse_boost(self.four_momentum(), boost)
        d = wigner_matrix(q, boost)
        c1, c2 = self.spin
        return (d.d11 * c1 + d.d12 * c2, d.d21 * c1 + d.d22 * c2)
