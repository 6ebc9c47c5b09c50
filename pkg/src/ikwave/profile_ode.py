"""Reduced first-order system for symmetric solitary-wave profiles.

State (eta, u, phi1) with H = 1 + eta, v = c + u, w = c*eta + H*u:

    eta'  =  (6Hw + 10H^2 v) phi1 / (delta^2 d),
    u'    = -(18w(2Hv - w) + 10H^3(1 + 4 delta^-2 H phi1^2)) phi1 / (delta^2 H d),
    phi1' =  (3/(2H^3)) w,

    d = 6Hv^2 - 3vw - H^2 (1 + 4 delta^-2 H phi1^2).

Two identities hold along every solution and act as exact first integrals:

    I1 = cu + eta + u^2/2 + 2 delta^-2 H^2 phi1^2,
    I2 = eta^2 - Hu^2 + 2uw - (6/(5H)) w^2 + (4/3) delta^-2 H^3 phi1^2,

so their residuals monitor integration accuracy for free.  The surface
potentials are recovered from the 2x2 solve

    (phi0', phi1')^T = (1/((2/3)H^3)) (-H^2(c eta + (1/3)Hu), c eta + Hu)^T.

The crest is a regular point for subcritical waves (phi1(0) = 0, d(0) > 0);
integration therefore starts exactly at x = 0.  The trajectory decays toward
the rest state until shooting drift, seeded at roughly sqrt(rel_tol) of the
initial amplitude, re-amplifies along the unstable manifold; a drift guard
stops the run at the achievable tail floor (see integrate_half).
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .crest_init import CrestState
from .errors import DenominatorVanished, DepthVanished, StepSizeUnderflow

# norm level below which the drift guard arms, and the regrowth factor that fires it
GUARD_ARM_NORM = 1e-3
GUARD_FACTOR = 10.0


@dataclass(frozen=True)
class WaveState:
    eta: float
    u: float
    phi1: float


@dataclass(frozen=True)
class IntegratorConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float = np.inf
    initial_step: float = None
    x_max: float = 30.0
    tail_eps: float = 1e-9
    d_min: float = 1e-13

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-2 and 0.0 < self.abs_tol <= 1e-2):
            raise ValueError("tolerances must lie in (0, 1e-2]")
        if self.x_max <= 0.0 or self.tail_eps <= 0.0 or self.d_min < 0.0:
            raise ValueError("x_max, tail_eps must be positive; d_min nonnegative")


def _unpack(state):
    if isinstance(state, WaveState):
        return state.eta, state.u, state.phi1
    eta, u, phi1 = state
    return float(eta), float(u), float(phi1)


def denominator(state, c, delta):
    """Denominator d of the reduced system; vanishes at the extreme crest."""
    eta, u, phi1 = _unpack(state)
    H = 1.0 + eta
    v = c + u
    w = c * eta + H * u
    return 6.0 * H * v * v - 3.0 * v * w - H * H * (
        1.0 + 4.0 * H * phi1 * phi1 / (delta * delta)
    )


def rhs(state, c, delta, d_min=1e-13):
    """Right-hand side (eta', u', phi1') at a state; H must be positive."""
    eta, u, phi1 = _unpack(state)
    H = 1.0 + eta
    v = c + u
    w = c * eta + H * u
    dd = delta * delta
    q = 4.0 * H * phi1 * phi1 / dd
    d = 6.0 * H * v * v - 3.0 * v * w - H * H * (1.0 + q)
    if abs(d) <= d_min:
        raise DenominatorVanished(
            f"denominator d = {d!r} at eta={eta!r}, u={u!r}, phi1={phi1!r}"
        )
    return (
        (6.0 * H * w + 10.0 * H * H * v) * phi1 / (dd * d),
        -(18.0 * w * (2.0 * H * v - w) + 10.0 * H ** 3 * (1.0 + q)) * phi1 / (dd * H * d),
        1.5 / H ** 3 * w,
    )


def identity_residuals(state, c, delta):
    """(I1, I2); both vanish on exact solutions."""
    eta, u, phi1 = _unpack(state)
    H = 1.0 + eta
    w = c * eta + H * u
    dd = delta * delta
    I1 = c * u + eta + 0.5 * u * u + 2.0 / dd * H * H * phi1 * phi1
    I2 = (eta * eta - H * u * u + 2.0 * u * w - 6.0 / (5.0 * H) * w * w
          + 4.0 / (3.0 * dd) * H ** 3 * phi1 * phi1)
    return I1, I2


def reconstruct_potentials(state, c):
    """Surface potential derivatives (phi0', phi1') from the 2x2 linear solve."""
    eta, u, phi1 = _unpack(state)
    H = 1.0 + eta
    w = c * eta + H * u
    inv = 1.0 / ((2.0 / 3.0) * H ** 3)
    phi0p = inv * (-H * H * (c * eta + H * u / 3.0))
    phi1p = inv * w
    return phi0p, phi1p


def crest_curvature(crest):
    """Curvature kappa(0) = eta''(0) at a subcritical crest, analytically.

    eta' is a smooth prefactor times phi1 and phi1(0) = 0, so eta''(0) is the
    prefactor at the crest times phi1'(0); no finite differencing involved.
    """
    c, delta = crest.c, crest.delta
    y0 = (crest.eta0, crest.u0, 0.0)
    d0 = denominator(y0, c, delta)
    if d0 <= 1e-13:
        raise DenominatorVanished(
            f"curvature diverges: crest denominator {d0!r} at delta={crest.delta!r}"
        )
    H = crest.H0
    v = crest.v0
    w = c * crest.eta0 + H * crest.u0
    prefactor = (6.0 * H * w + 10.0 * H * H * v) / (delta * delta * d0)
    phi1p0 = 1.5 / H ** 3 * w
    return prefactor * phi1p0


@dataclass
class HalfProfile:
    """Accepted-step samples of a half trajectory on [x0, x_end]."""

    delta: float
    c: float
    x: np.ndarray
    eta: np.ndarray
    u: np.ndarray
    phi1: np.ndarray
    d: np.ndarray
    I1: np.ndarray
    I2: np.ndarray
    stop: str          # "tail", "floor", or "x_max"
    warning: bool
    interpolant: object  # OdeSolution over the computed range


def integrate_from(x0, y0, c, delta, cfg):
    """Adaptive embedded Runge-Kutta 5(4) shot from (x0, y0) toward the tail.

    Stops at the first of: state norm <= tail_eps ("tail"); drift-guard
    regrowth past GUARD_FACTOR times the running norm minimum, truncated back
    to the minimum sample ("floor"); x reaching cfg.x_max ("x_max", flagged
    as a warning).  A denominator or depth crossing raises instead.
    """
    dd = delta * delta

    def f(x, y):
        eta, u, phi1 = y
        H = 1.0 + eta
        v = c + u
        w = c * eta + H * u
        q = 4.0 * H * phi1 * phi1 / dd
        d = 6.0 * H * v * v - 3.0 * v * w - H * H * (1.0 + q)
        return (
            (6.0 * H * w + 10.0 * H * H * v) * phi1 / (dd * d),
            -(18.0 * w * (2.0 * H * v - w) + 10.0 * H ** 3 * (1.0 + q)) * phi1 / (dd * H * d),
            1.5 / H ** 3 * w,
        )

    def ev_tail(x, y):
        return float(np.sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2])) - cfg.tail_eps
    ev_tail.terminal = True
    ev_tail.direction = -1

    def ev_denominator(x, y):
        return denominator(y, c, delta) - cfg.d_min
    ev_denominator.terminal = True
    ev_denominator.direction = -1

    def ev_depth(x, y):
        return 1.0 + y[0]
    ev_depth.terminal = True
    ev_depth.direction = -1

    running = {"min": np.inf}

    def ev_guard(x, y):
        n = float(np.sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]))
        if n < running["min"]:
            running["min"] = n
        if running["min"] > GUARD_ARM_NORM:
            return 1.0
        return GUARD_FACTOR * running["min"] - n
    ev_guard.terminal = True
    ev_guard.direction = -1

    kwargs = {}
    if cfg.initial_step is not None:
        kwargs["first_step"] = cfg.initial_step
    sol = solve_ivp(
        f, (x0, cfg.x_max), list(y0), method="RK45",
        rtol=cfg.rel_tol, atol=cfg.abs_tol, max_step=cfg.max_step,
        events=(ev_tail, ev_denominator, ev_depth, ev_guard),
        dense_output=True, **kwargs,
    )
    if sol.status == -1:
        raise StepSizeUnderflow(sol.message)
    if sol.status == 1:
        if len(sol.t_events[1]):
            raise DenominatorVanished(
                f"d reached {cfg.d_min!r} at x = {sol.t_events[1][0]!r} "
                f"(delta={delta!r})"
            )
        if len(sol.t_events[2]):
            raise DepthVanished(f"H reached 0 at x = {sol.t_events[2][0]!r}")

    x, y = sol.t, sol.y
    warning = False
    if sol.status == 1 and len(sol.t_events[0]):
        stop = "tail"
    elif sol.status == 1:
        stop = "floor"
        norms = np.sqrt((y ** 2).sum(axis=0))
        cut = int(np.argmin(norms))
        x, y = x[: cut + 1], y[:, : cut + 1]
    else:
        stop = "x_max"
        warning = True

    eta, u, phi1 = y
    H = 1.0 + eta
    w = c * eta + H * u
    v = c + u
    d = 6.0 * H * v * v - 3.0 * v * w - H * H * (1.0 + 4.0 * H * phi1 ** 2 / dd)
    I1 = c * u + eta + 0.5 * u ** 2 + 2.0 / dd * H ** 2 * phi1 ** 2
    I2 = (eta ** 2 - H * u ** 2 + 2.0 * u * w - 6.0 / (5.0 * H) * w ** 2
          + 4.0 / (3.0 * dd) * H ** 3 * phi1 ** 2)
    return HalfProfile(
        delta=delta, c=c, x=x, eta=eta, u=u, phi1=phi1, d=d, I1=I1, I2=I2,
        stop=stop, warning=warning, interpolant=sol.sol,
    )


def integrate_half(crest, cfg=None):
    """Half profile from a subcritical crest; see integrate_from for stops."""
    if cfg is None:
        cfg = IntegratorConfig()
    if not isinstance(crest, CrestState):
        raise TypeError("integrate_half expects a CrestState")
    return integrate_from(0.0, (crest.eta0, crest.u0, 0.0), crest.c, crest.delta, cfg)
