"""Full symmetric solitary-wave profiles and their diagnostics.

A half trajectory from the crest is extended to the whole line by the exact
symmetry eta(-x) = eta(x), u(-x) = u(x), phi1(-x) = -phi1(x): the left half
is a bitwise reflection of the stored right-half samples, so the symmetry
holds to the last bit by construction.  The classical long-wave soliton

    eta_kdv(x) = (4/3) delta^2 sech^2 x

serves as the small-amplitude reference; its sup-norm distance from the
computed profile scales like delta^4.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .crest_init import solve_crest
from .errors import DenominatorVanished, IkwaveError
from .profile_ode import IntegratorConfig, crest_curvature, integrate_half


@dataclass
class WaveProfile:
    """Symmetric profile samples on a strictly increasing grid about x = 0."""

    delta: float
    c: float
    x: np.ndarray
    eta: np.ndarray
    u: np.ndarray
    phi1: np.ndarray
    phi0_prime: np.ndarray
    phi1_prime: np.ndarray
    d: np.ndarray
    I1: np.ndarray
    I2: np.ndarray
    eta_max: float
    kappa0: Optional[float]  # None for the extreme wave (corner crest)
    stop: str
    warning: bool
    interpolant: object  # dense right-half solution, for resampling


def assemble_profile(delta, c, x, eta, u, phi1, *, kappa0, stop, warning,
                     interpolant):
    """Mirror right-half samples (x[0] = 0) into a full WaveProfile."""
    x = np.asarray(x, dtype=float)
    eta = np.asarray(eta, dtype=float)
    u = np.asarray(u, dtype=float)
    phi1 = np.asarray(phi1, dtype=float)
    if x[0] != 0.0:
        raise ValueError("half grid must start at x = 0")

    H = 1.0 + eta
    w = c * eta + H * u
    v = c + u
    dd = delta * delta
    inv = 1.5 / H ** 3
    phi0p = inv * (-H * H * (c * eta + H * u / 3.0))
    phi1p = inv * w
    d = 6.0 * H * v * v - 3.0 * v * w - H * H * (1.0 + 4.0 * H * phi1 ** 2 / dd)
    I1 = c * u + eta + 0.5 * u ** 2 + 2.0 / dd * H ** 2 * phi1 ** 2
    I2 = (eta ** 2 - H * u ** 2 + 2.0 * u * w - 6.0 / (5.0 * H) * w ** 2
          + 4.0 / (3.0 * dd) * H ** 3 * phi1 ** 2)

    def even(a):
        return np.concatenate([a[:0:-1], a])

    def odd(a):
        return np.concatenate([-a[:0:-1], a])

    return WaveProfile(
        delta=delta, c=c,
        x=odd(x), eta=even(eta), u=even(u), phi1=odd(phi1),
        phi0_prime=even(phi0p), phi1_prime=even(phi1p),
        d=even(d), I1=even(I1), I2=even(I2),
        eta_max=float(eta[0]), kappa0=kappa0, stop=stop, warning=warning,
        interpolant=interpolant,
    )


def solve_solitary(delta, cfg=None, dx=None, hint=None):
    """Solve the full solitary profile at shallowness delta < delta_c.

    With dx given, the accepted-step samples are replaced by a uniform grid
    of that spacing evaluated through the integrator's 4th-order dense
    interpolant (the final partial cell is dropped).
    """
    if cfg is None:
        cfg = IntegratorConfig()
    crest = solve_crest(delta, hint=hint)
    half = integrate_half(crest, cfg)
    x, eta, u, phi1 = half.x, half.eta, half.u, half.phi1
    if dx is not None:
        if dx <= 0.0:
            raise ValueError("dx must be positive")
        n = int(np.floor(x[-1] / dx + 1e-9))
        xs = np.arange(n + 1) * dx
        eta, u, phi1 = half.interpolant(xs)
        x = xs
    return assemble_profile(
        delta, crest.c, x, eta, u, phi1,
        kappa0=crest_curvature(crest), stop=half.stop, warning=half.warning,
        interpolant=half.interpolant,
    )


def kdv_profile(delta, grid):
    """Classical soliton (4/3) delta^2 sech^2 x on the given grid."""
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    grid = np.asarray(grid, dtype=float)
    return (4.0 / 3.0) * delta * delta / np.cosh(grid) ** 2


def compare_kdv(profile):
    """sup_x |eta(x) - eta_kdv(x)| for a computed profile.

    Evaluated on the union of the profile's sample grid and a dense uniform
    auxiliary grid (through the dense interpolant), with the soliton always
    evaluated analytically, so no resampling of the reference is involved.
    """
    right = profile.x >= 0.0
    xs = profile.x[right]
    err = float(np.max(np.abs(profile.eta[right] - kdv_profile(profile.delta, xs))))
    aux = np.linspace(xs[0], xs[-1], 4097)
    eta_aux = profile.interpolant(aux)[0]
    err_aux = float(np.max(np.abs(eta_aux - kdv_profile(profile.delta, aux))))
    return max(err, err_aux)


@dataclass
class TableRow:
    delta: float
    eta0: Optional[float]
    neg_kappa0: Optional[float]  # None when the crest curvature diverges
    d0: Optional[float]
    error: Optional[str] = None


def _one_row(delta):
    from .profile_ode import denominator
    try:
        crest = solve_crest(delta)
    except IkwaveError as exc:
        return TableRow(delta, None, None, None, error=str(exc))
    d0 = denominator((crest.eta0, crest.u0, 0.0), crest.c, crest.delta)
    try:
        kappa0 = crest_curvature(crest)
    except DenominatorVanished:
        return TableRow(delta, crest.eta0, None, d0)
    return TableRow(delta, crest.eta0, -kappa0, d0)


def diagnostics_table(deltas):
    """Crest diagnostics (delta, eta(0), -kappa(0), d(0)), one row per delta.

    Rows are computed concurrently and returned in input order; a failing
    delta yields a row carrying the error message instead of aborting the
    sweep.
    """
    deltas = list(deltas)
    if not deltas:
        return []
    with ThreadPoolExecutor(max_workers=min(8, len(deltas))) as pool:
        return list(pool.map(_one_row, deltas))


@dataclass
class DimensionalProfile:
    """Profile mapped back to laboratory variables for depth h, gravity g."""

    depth: float
    gravity: float
    delta: float
    c: float            # dimensional phase speed c*sqrt(gh)
    amplitude: float    # h * eta_max
    x: np.ndarray
    eta: np.ndarray
    u: np.ndarray


def dimensionalize(profile, depth, gravity):
    """Scale to x* = (h/delta) x, eta* = h eta, (c*, u*) = (c, u) sqrt(gh).

    The surface slope transforms as d(eta*)/d(x*) = delta * d(eta)/dx, which
    is why the dimensional crest slope of the extreme wave carries a factor
    delta_c.
    """
    if depth <= 0.0 or gravity <= 0.0:
        raise ValueError("depth and gravity must be positive")
    speed = float(np.sqrt(gravity * depth))
    return DimensionalProfile(
        depth=depth, gravity=gravity, delta=profile.delta,
        c=profile.c * speed, amplitude=depth * profile.eta_max,
        x=(depth / profile.delta) * profile.x,
        eta=depth * profile.eta,
        u=speed * profile.u,
    )
