"""First-order excitation and emission probabilities for four scenarios.

Scenarios
---------
``ACCEL_ATOM``
    Atom on a uniformly accelerated worldline, field in the inertial
    vacuum.  Excitation-with-emission probability carries the
    Bose-Einstein factor in the dimensionless atom gap ``omega * ell``.
``STATIC_ATOM_RINDLER_VAC``
    Atom at rest at ``z0``, field in the accelerated (boost) vacuum.  The
    emitted-mode spectrum is thermal in the field frequency
    ``nu * ell``, exactly so only in the far-atom limit
    ``omega * z0 >> 1``.
``ACCEL_ATOM_MIRROR``
    Accelerated atom above a static mirror, inertial vacuum.  Rate-squared
    normalized excitation probability, thermal in ``omega/alpha``.
``ACCEL_MIRROR_STATIC_ATOM``
    Static atom below an accelerated mirror, boost vacuum.  Per-mode
    emission probabilities are thermal in the mode frequency while the
    emitted state keeps deterministic inter-mode phases (a pure state).
``FREEFALL_BH``
    Slow radial infall outside a horizon with the field in the
    no-outgoing-radiation vacuum; exact delegation to the static-atom
    scenario under ``ell = 2 rg``, ``z0 = 2 v0 rg``.

Probabilities that grow with the (formally infinite) interaction time are
reported per squared unit of it; every record satisfies
``probability == |amplitude|**2`` when an amplitude is attached.

One sign choice is deliberate: the per-mode emission factor of the
accelerated-mirror scenario is implemented as ``1/(exp(2 pi Omega) - 1)``,
positive for ``Omega > 0``, rather than the occasionally quoted
``1/(1 - exp(2 pi Omega))`` whose sign is unphysical for a probability.
"""

from __future__ import annotations

import cmath
import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from . import numerics
from .errors import DomainError
from .numerics import DEFAULT_QUAD_CONFIG, QuadratureConfig
from .spacetime import DimensionlessParams

__all__ = [
    "Scenario",
    "Method",
    "ScenarioSpec",
    "SpectrumRecord",
    "Spectrum",
    "planck_factor",
    "accel_atom_probability",
    "static_atom_rindler_probability",
    "static_atom_asymptotic_probability",
    "absorption_emission_ratio",
    "freefall_map",
    "w_omega",
    "accel_mirror_mode_probability",
    "mirror_family_amplitudes",
    "accel_atom_mirror_probability",
    "accel_atom_mirror_amplitudes",
    "freefall_bh_probability",
    "spectrum_sweep",
]


class Scenario(enum.Enum):
    ACCEL_ATOM = "accel-atom"
    STATIC_ATOM_RINDLER_VAC = "static-atom-rindler"
    ACCEL_ATOM_MIRROR = "accel-atom-mirror"
    ACCEL_MIRROR_STATIC_ATOM = "accel-mirror-static-atom"
    FREEFALL_BH = "freefall-bh"


class Method(enum.Enum):
    CLOSED_FORM = "closed"
    QUADRATURE = "quad"
    BOTH = "both"


@dataclass(frozen=True)
class ScenarioSpec:
    """A scenario, its physical parameters and the evaluation method."""

    scenario: Scenario
    params: DimensionlessParams
    method: Method = Method.CLOSED_FORM

    def __post_init__(self) -> None:
        if self.scenario is Scenario.FREEFALL_BH and self.params.v0 <= 0.0:
            raise DomainError("freefall-bh requires v0 > 0")


@dataclass(frozen=True)
class SpectrumRecord:
    """One frequency point of a scenario spectrum.

    ``probability`` equals ``|amplitude|**2`` whenever ``amplitude`` is
    present; ``error_estimate`` is the numerical error bound of the method
    (0 for closed forms, the cross-method residual for ``Method.BOTH``).
    """

    freq: float
    probability: float
    amplitude: Optional[complex]
    method: str
    error_estimate: float

    def __post_init__(self) -> None:
        if not (self.probability >= 0.0 and math.isfinite(self.probability)):
            raise DomainError("probability must be finite and nonnegative")
        if self.amplitude is not None:
            if abs(self.probability - abs(self.amplitude) ** 2) > 1e-12 * max(
                1.0, self.probability
            ):
                raise DomainError("probability must equal |amplitude|**2")


@dataclass(frozen=True)
class Spectrum:
    """Ordered per-frequency records plus an optional thermal fit."""

    records: tuple[SpectrumRecord, ...]
    scenario: ScenarioSpec
    fitted_temperature: Optional[float] = None
    fit_residual: Optional[float] = None


def planck_factor(x: float) -> float:
    """Bose-Einstein occupation ``1/(exp(x) - 1)`` for ``x > 0``, stably."""
    if x <= 0.0 or not math.isfinite(x):
        raise DomainError("planck_factor requires x > 0")
    return math.exp(-x) / (-math.expm1(-x))


# ---------------------------------------------------------------------------
# scenario: uniformly accelerated atom, inertial vacuum
# ---------------------------------------------------------------------------


def accel_atom_probability(
    params: DimensionlessParams,
    method: Method = Method.CLOSED_FORM,
    cfg: QuadratureConfig = DEFAULT_QUAD_CONFIG,
) -> SpectrumRecord:
    """Excitation-with-emission probability of the accelerated atom.

    Closed form ``P = 2 pi g**2 ell / omega * 1/(exp(2 pi omega ell) - 1)``
    where ``omega = omega_atom / ell`` is the physical gap.  The
    quadrature route substitutes the emitted-mode phase along the
    worldline into a power-law oscillatory integral and evaluates it by
    contour rotation; the emitted-field frequency enters the amplitude
    only as a pure phase, so the probability depends on ``omega * ell``
    alone.
    """
    g, ell = params.coupling_g, params.ell
    om_ell = params.omega_atom  # dimensionless gap
    if om_ell <= 0:
        raise DomainError("omega_atom must be positive")

    def closed() -> float:
        return 2.0 * math.pi * g * g * ell * ell / om_ell * planck_factor(2.0 * math.pi * om_ell)

    def quad_amplitude() -> complex:
        return g * ell * numerics.oscillatory_power_integral(om_ell, -1.0, -1, cfg)

    if method is Method.CLOSED_FORM:
        p = closed()
        return SpectrumRecord(om_ell, p, cmath.sqrt(p), "closed", 0.0)
    if method is Method.QUADRATURE:
        amp = quad_amplitude()
        p = abs(amp) ** 2
        return SpectrumRecord(om_ell, p, amp, "quad", max(cfg.rel_tol * p, cfg.abs_tol))
    p_closed = closed()
    residual = abs(abs(quad_amplitude()) ** 2 - p_closed) / p_closed
    return SpectrumRecord(om_ell, p_closed, cmath.sqrt(p_closed), "both", residual)


# ---------------------------------------------------------------------------
# scenario: static atom in the boost vacuum
# ---------------------------------------------------------------------------


def _static_atom_amplitude_exact(nu_ell: float, x_upper: float, g: float, omega: float) -> complex:
    # amplitude = (g/omega) e^{-pi nu ell/2} gamma(1 + i nu ell, -i X)
    gam = numerics.lower_incomplete_gamma(complex(1.0, nu_ell), complex(0.0, -x_upper))
    return (g / omega) * math.exp(-math.pi * nu_ell / 2.0) * gam


def static_atom_rindler_probability(
    params: DimensionlessParams,
    method: Method = Method.CLOSED_FORM,
    cfg: QuadratureConfig = DEFAULT_QUAD_CONFIG,
) -> SpectrumRecord:
    """Excitation-with-emission probability of the static atom.

    Exact closed form
    ``P = (g**2/omega**2) exp(-pi nu ell) |gamma(1 + i nu ell, -2 i omega z0)|**2``
    with the incomplete gamma carrying the finite wedge-crossing history;
    the asymptotic (far-atom) limit is the thermal
    ``P ~ (2 pi nu ell g**2 / omega**2) * 1/(exp(2 pi nu ell) - 1)``.
    The quadrature route integrates the mode phase over the crossing
    interval directly; ``error_estimate`` reports the numerical bound, and
    for ``Method.BOTH`` the exact-vs-quadrature residual.

    The thermal factor is a function of the field frequency here, not of
    the atom gap.
    """
    nu_ell = params.nu_field
    g, omega, z0 = params.coupling_g, params.omega_atom / params.ell, params.z0
    if nu_ell <= 0:
        raise DomainError("nu_field must be positive")
    if omega <= 0 or z0 <= 0:
        raise DomainError("omega and z0 must be positive")
    x_upper = 2.0 * omega * z0

    def quadrature() -> tuple[complex, float]:
        def integrand(x: float) -> complex:
            return cmath.exp(1j * x + 1j * nu_ell * math.log(x))

        val, err = numerics.adaptive_finite_quad(integrand, 0.0, x_upper, cfg)
        return (g / omega) * val, err / omega

    if method is Method.CLOSED_FORM:
        amp = _static_atom_amplitude_exact(nu_ell, x_upper, g, omega)
        return SpectrumRecord(nu_ell, abs(amp) ** 2, amp, "closed", 0.0)
    if method is Method.QUADRATURE:
        amp, err = quadrature()
        return SpectrumRecord(nu_ell, abs(amp) ** 2, amp, "quad", err)
    amp = _static_atom_amplitude_exact(nu_ell, x_upper, g, omega)
    amp_quad, _ = quadrature()
    residual = abs(abs(amp_quad) ** 2 - abs(amp) ** 2) / max(abs(amp) ** 2, 1e-300)
    return SpectrumRecord(nu_ell, abs(amp) ** 2, amp, "both", residual)


def static_atom_asymptotic_probability(params: DimensionlessParams) -> float:
    """Far-atom thermal limit of :func:`static_atom_rindler_probability`."""
    nu_ell = params.nu_field
    g, omega = params.coupling_g, params.omega_atom / params.ell
    if nu_ell <= 0:
        raise DomainError("nu_field must be positive")
    return (
        2.0 * math.pi * nu_ell * g * g / (omega * omega) * planck_factor(2.0 * math.pi * nu_ell)
    )


def absorption_emission_ratio(
    params: DimensionlessParams,
    method: Method = Method.CLOSED_FORM,
) -> float:
    """Ratio of photon absorption to excitation-with-emission probability.

    Exact form
    ``exp(2 pi nu ell) * |gamma(1 + i nu ell, +2 i omega z0)|**2
    / |gamma(1 + i nu ell, -2 i omega z0)|**2``;
    the asymptotic method returns the thermal (detailed-balance) ratio
    ``exp(2 pi nu ell)``, which the exact ratio approaches only for
    ``omega z0 >> 1``.
    """
    nu_ell = params.nu_field
    omega, z0 = params.omega_atom / params.ell, params.z0
    if nu_ell <= 0 or omega <= 0 or z0 <= 0:
        raise DomainError("nu_field, omega and z0 must be positive")
    thermal = math.exp(2.0 * math.pi * nu_ell)
    if method is Method.QUADRATURE:
        return thermal
    x_upper = 2.0 * omega * z0
    s = complex(1.0, nu_ell)
    g_abs = numerics.lower_incomplete_gamma(s, complex(0.0, +x_upper))
    g_emit = numerics.lower_incomplete_gamma(s, complex(0.0, -x_upper))
    return thermal * abs(g_abs) ** 2 / abs(g_emit) ** 2


# ---------------------------------------------------------------------------
# scenario: accelerated mirror, static atom (boost vacuum)
# ---------------------------------------------------------------------------


def w_omega(
    omega_mode: float,
    omega_atom: float,
    ell: float,
    method: Method = Method.CLOSED_FORM,
    cfg: QuadratureConfig = DEFAULT_QUAD_CONFIG,
    rotation: int = +1,
) -> complex:
    """Overlap kernel of the static atom with one boost mode.

    Closed form
    ``W = i Omega (1/(omega ell))**(i Omega) exp(-pi Omega/2) Gamma(i Omega)``
    with ``omega`` the physical atom gap; its modulus obeys
    ``|W|**2 = 2 pi Omega / (exp(2 pi Omega) - 1)`` and its phase is the
    slowly varying argument of ``Gamma(i Omega)`` (which starts at
    ``-pi/2`` at small ``Omega``) on top of the log phase.

    The quadrature route rotates the defining half-line time integral
    onto the imaginary axis.  ``rotation = -1`` evaluates the kernel of
    the opposite half line, whose orientation is fixed here so that
    ``w_omega(..., rotation=-1) == conj(w_omega(..., rotation=+1))``.
    """
    if omega_mode <= 0:
        raise DomainError("omega_mode must be positive")
    if omega_atom <= 0 or ell <= 0:
        raise DomainError("omega_atom and ell must be positive")
    if rotation not in (+1, -1):
        raise DomainError("rotation must be +1 or -1")
    om = omega_mode
    phase = cmath.exp(-1j * rotation * om * math.log(omega_atom * ell))
    if method is Method.QUADRATURE:
        core = numerics.oscillatory_power_integral(om, -1.0, rotation, cfg)
    else:
        core = cmath.exp(-math.pi * om / 2.0) * numerics.gamma_complex(
            complex(0.0, rotation * om)
        )
    return rotation * 1j * om * phase * core


def mirror_family_amplitudes(
    omega_mode: float,
    params: DimensionlessParams,
    method: Method = Method.CLOSED_FORM,
) -> dict[int, complex]:
    """Emission amplitudes into the three mode families, keyed 1, 2, 3.

    Families 1 and 3 (free left and right movers) couple through
    ``conj(W)`` and ``W``; the mirror-reflected family 2 couples through
    ``W - conj(W)``, all with the common prefactor
    ``g / sqrt(4 pi Omega)``.
    """
    w = w_omega(omega_mode, params.omega_atom / params.ell, params.ell, method)
    pref = params.coupling_g / math.sqrt(4.0 * math.pi * omega_mode)
    return {1: pref * w.conjugate(), 2: pref * (w - w.conjugate()), 3: pref * w}


def accel_mirror_mode_probability(
    omega_mode: float,
    params: DimensionlessParams,
    method: Method = Method.CLOSED_FORM,
) -> SpectrumRecord:
    """Per-mode emission probability below the accelerated mirror.

    The free families emit with
    ``P(Omega) = (g**2/2) * 1/(exp(2 pi Omega) - 1)``, a thermal spectrum
    at temperature ``1/(2 pi)`` in the dimensionless mode frequency; the
    record carries the family-3 amplitude so its deterministic phase
    (the pure-state correlations between frequencies) is preserved.  The
    mirror-reflected family-2 amplitude, available from
    :func:`mirror_family_amplitudes`, interferes and is not thermal on its
    own.
    """
    if omega_mode <= 0:
        raise DomainError("omega_mode must be positive")
    amps = mirror_family_amplitudes(omega_mode, params, method)
    amp = amps[3]
    return SpectrumRecord(
        omega_mode,
        abs(amp) ** 2,
        amp,
        method.value,
        0.0 if method is Method.CLOSED_FORM else DEFAULT_QUAD_CONFIG.abs_tol,
    )


# ---------------------------------------------------------------------------
# scenario: accelerated atom above a static mirror (inertial vacuum)
# ---------------------------------------------------------------------------


def accel_atom_mirror_probability(omega_over_a: float) -> float:
    """Excitation probability per squared unit interaction time.

    The amplitude per unit time is the positive-frequency-mode
    normalization ``exp(-pi w/2)/sqrt(8 pi w sinh(pi w))`` (``w`` the gap
    in acceleration units) feeding two emitted modes of opposite
    direction, so
    ``P = 2 * exp(-pi w) / (8 pi w sinh(pi w))
       = (1/(2 pi w)) * 1/(exp(2 pi w) - 1)``.
    """
    w = omega_over_a
    if w <= 0 or not math.isfinite(w):
        raise DomainError("omega_over_a must be positive and finite")
    return planck_factor(2.0 * math.pi * w) / (2.0 * math.pi * w)


def accel_atom_mirror_amplitudes(omega_over_a: float) -> tuple[complex, complex]:
    """Per-unit-time amplitudes of the two emitted modes (relative phase -1)."""
    w = omega_over_a
    if w <= 0 or not math.isfinite(w):
        raise DomainError("omega_over_a must be positive and finite")
    n = math.exp(-math.pi * w / 2.0) / math.sqrt(8.0 * math.pi * w * math.sinh(math.pi * w))
    return complex(n), complex(-n)


# ---------------------------------------------------------------------------
# scenario: free fall outside a horizon (exact delegation)
# ---------------------------------------------------------------------------


def freefall_map(params: DimensionlessParams) -> DimensionlessParams:
    """Map infall parameters onto the equivalent static-atom parameters.

    ``ell = 2 rg`` (inverse effective acceleration) and ``z0 = 2 v0 rg``
    (equivalent static position); all other fields pass through, with
    ``nu_field`` already dimensionless in the mapped ``ell``.
    """
    if not (0.0 < params.v0 <= 0.3):
        raise DomainError("freefall scenario requires 0 < v0 <= 0.3")
    return replace(params, ell=2.0 * params.rg, z0=2.0 * params.v0 * params.rg)


def freefall_bh_probability(
    params: DimensionlessParams,
    method: Method = Method.CLOSED_FORM,
    cfg: QuadratureConfig = DEFAULT_QUAD_CONFIG,
) -> SpectrumRecord:
    """Emission probability for the infalling atom; bitwise equal to the
    static-atom scenario evaluated at the mapped parameters."""
    return static_atom_rindler_probability(freefall_map(params), method, cfg)


# ---------------------------------------------------------------------------
# sweeps and thermal fits
# ---------------------------------------------------------------------------


def _record_for(spec: ScenarioSpec, freq: float) -> SpectrumRecord:
    p = spec.params
    sc = spec.scenario
    if sc is Scenario.ACCEL_ATOM:
        return accel_atom_probability(replace(p, omega_atom=freq), spec.method)
    if sc is Scenario.STATIC_ATOM_RINDLER_VAC:
        return static_atom_rindler_probability(replace(p, nu_field=freq), spec.method)
    if sc is Scenario.FREEFALL_BH:
        return freefall_bh_probability(replace(p, nu_field=freq), spec.method)
    if sc is Scenario.ACCEL_MIRROR_STATIC_ATOM:
        return accel_mirror_mode_probability(freq, p, spec.method)
    if sc is Scenario.ACCEL_ATOM_MIRROR:
        prob = accel_atom_mirror_probability(freq)
        return SpectrumRecord(freq, prob, cmath.sqrt(prob), spec.method.value, 0.0)
    raise DomainError(f"unknown scenario {sc!r}")  # pragma: no cover


def _thermal_normalizer(spec: ScenarioSpec, freq: float) -> float:
    """Non-thermal prefactor dividing the probability before the Planck fit."""
    p = spec.params
    g2 = p.coupling_g * p.coupling_g
    sc = spec.scenario
    if sc is Scenario.ACCEL_ATOM:
        return 2.0 * math.pi * g2 * p.ell * p.ell / freq
    if sc is Scenario.STATIC_ATOM_RINDLER_VAC:
        omega = p.omega_atom / p.ell
        return 2.0 * math.pi * freq * g2 / (omega * omega)
    if sc is Scenario.FREEFALL_BH:
        mapped = freefall_map(p)
        omega = mapped.omega_atom / mapped.ell
        return 2.0 * math.pi * freq * g2 / (omega * omega)
    if sc is Scenario.ACCEL_MIRROR_STATIC_ATOM:
        return 0.5 * g2
    if sc is Scenario.ACCEL_ATOM_MIRROR:
        return 1.0 / (2.0 * math.pi * freq)
    raise DomainError(f"unknown scenario {sc!r}")  # pragma: no cover


def _scenario_ell(spec: ScenarioSpec) -> float:
    if spec.scenario is Scenario.FREEFALL_BH:
        return 2.0 * spec.params.rg
    return spec.params.ell


def spectrum_sweep(
    spec: ScenarioSpec,
    freq_grid: Sequence[float],
    max_workers: int | None = None,
) -> Spectrum:
    """Evaluate a scenario over a frequency grid and fit its temperature.

    The grid must be strictly increasing and inside the scenario's domain.
    Each probability is divided by its scenario's non-thermal prefactor;
    the linearized occupancy ``log(1/P_normalized + 1)`` is then fit by
    slope-only least squares against the physical frequency
    ``freq / ell``, giving ``fitted_temperature`` as the inverse slope and
    ``fit_residual`` as the RMS relative deviation of the linearized data.
    Grids with fewer than 4 points skip the fit.

    ``max_workers > 1`` evaluates frequencies concurrently; records are
    returned in grid order regardless.
    """
    freqs = [float(f) for f in freq_grid]
    if any(b <= a for a, b in zip(freqs, freqs[1:])):
        raise DomainError("freq_grid must be strictly increasing")
    if not freqs:
        return Spectrum((), spec, None, None)

    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            records = tuple(pool.map(lambda f: _record_for(spec, f), freqs))
    else:
        records = tuple(_record_for(spec, f) for f in freqs)

    fitted_t: Optional[float] = None
    residual: Optional[float] = None
    if len(records) >= 4:
        ell = _scenario_ell(spec)
        x = np.array([r.freq / ell for r in records])
        p_norm = np.array(
            [r.probability / _thermal_normalizer(spec, r.freq) for r in records]
        )
        if np.all(p_norm > 0.0):
            y = np.log1p(1.0 / p_norm)
            slope = float(np.dot(x, y) / np.dot(x, x))
            fitted_t = 1.0 / slope
            residual = float(np.sqrt(np.mean((y - slope * x) ** 2) / np.mean(y**2)))
    return Spectrum(records, spec, fitted_t, residual)
