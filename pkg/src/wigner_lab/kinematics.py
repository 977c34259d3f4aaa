"""Four-momentum arithmetic and x-direction boosts, natural units (c = hbar = 1)."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

V_MAX = 1.0 - 1e-9
ON_SHELL_RTOL = 1e-9


@dataclass(frozen=True)
class FourMomentum:
    p0: float
    px: float
    py: float
    pz: float

    def spatial(self) -> tuple[float, float, float]:
        return (self.px, self.py, self.pz)

    def mass_squared(self) -> float:
        # factored light-cone form avoids the worst cancellation for |p| >> m
        return (self.p0 - self.px) * (self.p0 + self.px) - self.py * self.py - self.pz * self.pz

    def mass(self) -> float:
        m2 = self.mass_squared()
        return math.sqrt(m2) if m2 > 0.0 else 0.0


@dataclass(frozen=True)
class BoostParams:
    """x-direction boost fixed by velocity v, rapidity theta = -atanh(v), and mass m."""

    v: float
    theta: float
    m: float
    clamped: bool = False

    @property
    def cosh_theta(self) -> float:
        return math.cosh(self.theta)

    @property
    def sinh_theta(self) -> float:
        return math.sinh(self.theta)

    @property
    def cosh_half(self) -> float:
        return math.cosh(0.5 * self.theta)

    @property
    def sinh_half(self) -> float:
        return math.sinh(0.5 * self.theta)


def clamp_velocity(v: float) -> tuple[float, bool]:
    """Clamp |v| to V_MAX. Clamping is reported through the returned flag, never silent."""
    if not math.isfinite(v):
        raise ValueError(f"velocity must be finite, got {v!r}")
    if abs(v) > V_MAX:
        warnings.warn(
            f"velocity {v} clamped to magnitude {V_MAX}", RuntimeWarning, stacklevel=3
        )
        return math.copysign(V_MAX, v), True
    return v, False


def rapidity(v: float) -> float:
    """theta = -atanh(v); odd in v by construction, clamped (with warning) at |v| = V_MAX."""
    v, _ = clamp_velocity(v)
    if v == 0.0:
        return 0.0
    return -math.copysign(math.atanh(abs(v)), v)


def boost_params(v: float, m: float = 1.0) -> BoostParams:
    if not (math.isfinite(m) and m > 0.0):
        raise ValueError(f"mass must be positive and finite, got {m!r}")
    v_clamped, clamped = clamp_velocity(v)
    return BoostParams(v=v_clamped, theta=rapidity(v_clamped), m=m, clamped=clamped)


def on_shell_energy(pvec, m: float) -> float:
    """Energy sqrt(m^2 + |pvec|^2) of a mass-m particle."""
    px, py, pz = (float(c) for c in pvec)
    if not all(math.isfinite(c) for c in (px, py, pz)):
        raise ValueError(f"momentum components must be finite, got {pvec!r}")
    if not (math.isfinite(m) and m > 0.0):
        raise ValueError(f"mass must be positive and finite, got {m!r}")
    return math.sqrt(m * m + px * px + py * py + pz * pz)


def momentum_on_shell(pvec, m: float) -> FourMomentum:
    px, py, pz = (float(c) for c in pvec)
    return FourMomentum(on_shell_energy((px, py, pz), m), px, py, pz)


def require_on_shell(p: FourMomentum, m: float, rtol: float = ON_SHELL_RTOL) -> None:
    expected = on_shell_energy(p.spatial(), m)
    if not (p.p0 > 0.0) or abs(p.p0 - expected) > rtol * expected:
        raise ValueError(f"four-momentum {p} is off shell for mass {m}")


def apply_inverse_boost(p: FourMomentum, boost: BoostParams) -> FourMomentum:
    """Map p to q = Lambda^-1 p for the x-boost of rapidity theta.

    Componentwise: q0 = p0 cosh(theta) - px sinh(theta),
    qx = px cosh(theta) - p0 sinh(theta); transverse components unchanged.
    The returned energy is re-solved from the mass shell, which agrees with the
    componentwise form to round-off but keeps the invariant mass exact even for
    momenta whose boosted components are large enough that the quadratic form
    q0^2 - |q|^2 loses digits.
    """
    require_on_shell(p, boost.m)
    ch, sh = boost.cosh_theta, boost.sinh_theta
    qx = p.px * ch - p.p0 * sh
    return momentum_on_shell((qx, p.py, p.pz), boost.m)


def apply_forward_boost(q: FourMomentum, boost: BoostParams) -> FourMomentum:
    """Inverse of apply_inverse_boost: p = Lambda q."""
    require_on_shell(q, boost.m)
    ch, sh = boost.cosh_theta, boost.sinh_theta
    px = q.px * ch + q.p0 * sh
    return momentum_on_shell((px, q.py, q.pz), boost.m)


def forward_boost_components(q0, qx, boost: BoostParams):
    """Array version of apply_forward_boost for (energy, x-momentum) pairs."""
    ch, sh = boost.cosh_theta, boost.sinh_theta
    return q0 * ch + qx * sh, qx * ch + q0 * sh


def inverse_boost_components(p0, px, boost: BoostParams):
    """Array version of apply_inverse_boost for (energy, x-momentum) pairs."""
    ch, sh = boost.cosh_theta, boost.sinh_theta
    return p0 * ch - px * sh, px * ch - p0 * sh
