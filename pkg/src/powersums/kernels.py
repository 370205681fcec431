"""Hot numeric kernels: power-sum evaluation and the smoothed objective.

Two interchangeable backends live here. The loop implementations are
compiled with numba when it is importable and the POWERSUMS_NUMBA
environment variable is not set to 0/false/off; otherwise the vectorized
numpy implementations are used. benchmarks/bench_kernels.py times the
two side by side.

All kernels take ready-made contiguous arrays. Per-exponent results are
computed independently, so splitting a nu-range across workers and
concatenating reproduces the single-call output bit for bit.
"""

from __future__ import annotations

import math
import os

import numpy as np

TWO_PI = 2.0 * math.pi

_ENV_FLAG = "POWERSUMS_NUMBA"
_OFF_VALUES = {"0", "false", "off", "no"}


def numba_requested() -> bool:
    return os.environ.get(_ENV_FLAG, "").strip().lower() not in _OFF_VALUES


try:
    import numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised via the env flag instead
    numba = None
    NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE and numba_requested()


# ---------------------------------------------------------------------------
# loop implementations (numba targets)


def _rational_components_loop(exponents, modulus, count):
    n = exponents.shape[0]
    cos_t = np.empty(modulus)
    sin_t = np.empty(modulus)
    step = TWO_PI / modulus
    for j in range(modulus):
        cos_t[j] = math.cos(step * j)
        sin_t[j] = math.sin(step * j)
    re = np.empty(count)
    im = np.empty(count)
    for v in range(1, count + 1):
        sr = 0.0
        si = 0.0
        for k in range(n):
            idx = (v * exponents[k]) % modulus
            sr += cos_t[idx]
            si += sin_t[idx]
        re[v - 1] = sr
        im[v - 1] = si
    return re, im


def _polar_components_loop(radii, phases, count):
    n = radii.shape[0]
    re = np.empty(count)
    im = np.empty(count)
    for v in range(1, count + 1):
        sr = 0.0
        si = 0.0
        for k in range(n):
            ang = TWO_PI * ((v * phases[k]) % 1.0)
            w = 1.0 if radii[k] == 1.0 else radii[k] ** v
            sr += w * math.cos(ang)
            si += w * math.sin(ang)
        re[v - 1] = sr
        im[v - 1] = si
    return re, im


def _polar_max_abs_loop(radii, phases, count):
    n = radii.shape[0]
    best = 0.0
    for v in range(1, count + 1):
        sr = 0.0
        si = 0.0
        for k in range(n):
            ang = TWO_PI * ((v * phases[k]) % 1.0)
            w = 1.0 if radii[k] == 1.0 else radii[k] ** v
            sr += w * math.cos(ang)
            si += w * math.sin(ang)
        mag = math.sqrt(sr * sr + si * si)
        if mag > best:
            best = mag
    return best


def _surrogate_loop(radii, phases, count, temp):
    """Soft-max over the squared moduli with analytic gradient.

    Returns (value, d/dphases, d/dradii) of
        temp * log(sum_v exp(|S_v|^2 / temp))
    evaluated stably around the maximum.
    """
    n = radii.shape[0]
    re = np.empty(count)
    im = np.empty(count)
    power = np.empty(count)
    for v in range(1, count + 1):
        sr = 0.0
        si = 0.0
        for k in range(n):
            ang = TWO_PI * ((v * phases[k]) % 1.0)
            w = 1.0 if radii[k] == 1.0 else radii[k] ** v
            sr += w * math.cos(ang)
            si += w * math.sin(ang)
        re[v - 1] = sr
        im[v - 1] = si
        power[v - 1] = sr * sr + si * si
    top = power[0]
    for v in range(1, count):
        if power[v] > top:
            top = power[v]
    wsum = 0.0
    for v in range(count):
        wsum += math.exp((power[v] - top) / temp)
    value = top + temp * math.log(wsum)
    grad_phase = np.zeros(n)
    grad_radius = np.zeros(n)
    for v in range(1, count + 1):
        weight = math.exp((power[v - 1] - top) / temp) / wsum
        a = re[v - 1]
        b = im[v - 1]
        for k in range(n):
            ang = TWO_PI * ((v * phases[k]) % 1.0)
            c = math.cos(ang)
            s = math.sin(ang)
            rv = 1.0 if radii[k] == 1.0 else radii[k] ** v
            rvm1 = 1.0 if radii[k] == 1.0 else radii[k] ** (v - 1)
            grad_phase[k] += weight * 2.0 * TWO_PI * v * rv * (b * c - a * s)
            grad_radius[k] += weight * 2.0 * v * rvm1 * (a * c + b * s)
    return value, grad_phase, grad_radius


# ---------------------------------------------------------------------------
# vectorized numpy implementations


def _rational_components_numpy(exponents, modulus, count):
    nus = np.arange(1, count + 1, dtype=np.int64)
    idx = (nus[:, None] * exponents[None, :]) % modulus
    step = TWO_PI / modulus
    table = np.arange(modulus, dtype=np.float64) * step
    cos_t = np.cos(table)
    sin_t = np.sin(table)
    return cos_t[idx].sum(axis=1), sin_t[idx].sum(axis=1)


def _polar_angles_weights(radii, phases, count):
    nus = np.arange(1, count + 1, dtype=np.float64)[:, None]
    ang = TWO_PI * np.mod(nus * phases[None, :], 1.0)
    weights = np.where(radii[None, :] == 1.0, 1.0, radii[None, :] ** nus)
    return nus, ang, weights


def _polar_components_numpy(radii, phases, count):
    _, ang, weights = _polar_angles_weights(radii, phases, count)
    re = (weights * np.cos(ang)).sum(axis=1)
    im = (weights * np.sin(ang)).sum(axis=1)
    return re, im


def _polar_max_abs_numpy(radii, phases, count):
    re, im = _polar_components_numpy(radii, phases, count)
    return float(np.sqrt(re * re + im * im).max())


def _surrogate_numpy(radii, phases, count, temp):
    nus, ang, weights = _polar_angles_weights(radii, phases, count)
    cos_a = np.cos(ang)
    sin_a = np.sin(ang)
    re = (weights * cos_a).sum(axis=1)
    im = (weights * sin_a).sum(axis=1)
    power = re * re + im * im
    top = power.max()
    soft = np.exp((power - top) / temp)
    wsum = soft.sum()
    value = float(top + temp * math.log(wsum))
    soft /= wsum
    wm1 = np.where(radii[None, :] == 1.0, 1.0, radii[None, :] ** (nus - 1.0))
    coeff = (soft * nus[:, 0])[:, None]
    grad_phase = (
        2.0 * TWO_PI * (coeff * weights * (im[:, None] * cos_a - re[:, None] * sin_a))
    ).sum(axis=0)
    grad_radius = (
        2.0 * (coeff * wm1 * (re[:, None] * cos_a + im[:, None] * sin_a))
    ).sum(axis=0)
    return value, grad_phase, grad_radius


# ---------------------------------------------------------------------------
# backend selection

_NUMPY_IMPLS = {
    "rational_components": _rational_components_numpy,
    "polar_components": _polar_components_numpy,
    "polar_max_abs": _polar_max_abs_numpy,
    "surrogate": _surrogate_numpy,
}

if NUMBA_AVAILABLE:
    _jit = numba.njit(cache=True)
    _NUMBA_IMPLS = {
        "rational_components": _jit(_rational_components_loop),
        "polar_components": _jit(_polar_components_loop),
        "polar_max_abs": _jit(_polar_max_abs_loop),
        "surrogate": _jit(_surrogate_loop),
    }
else:
    _NUMBA_IMPLS = {}

IMPLEMENTATIONS = {"numpy": _NUMPY_IMPLS}
if _NUMBA_IMPLS:
    IMPLEMENTATIONS["numba"] = _NUMBA_IMPLS

ACTIVE_BACKEND = "numba" if USE_NUMBA else "numpy"
_ACTIVE = IMPLEMENTATIONS[ACTIVE_BACKEND]


def rational_components(exponents: np.ndarray, modulus: int, count: int):
    """(Re S_v, Im S_v) for v = 1..count of sum_k e(v * a_k / modulus)."""
    exponents = np.ascontiguousarray(exponents, dtype=np.int64)
    return _ACTIVE["rational_components"](exponents, modulus, count)


def polar_components(radii: np.ndarray, phases: np.ndarray, count: int):
    """(Re S_v, Im S_v) for v = 1..count of sum_k r_k^v e(v * phi_k)."""
    radii = np.ascontiguousarray(radii, dtype=np.float64)
    phases = np.ascontiguousarray(phases, dtype=np.float64)
    return _ACTIVE["polar_components"](radii, phases, count)


def polar_max_abs(radii: np.ndarray, phases: np.ndarray, count: int) -> float:
    """max_{1<=v<=count} |S_v| for a polar tuple."""
    radii = np.ascontiguousarray(radii, dtype=np.float64)
    phases = np.ascontiguousarray(phases, dtype=np.float64)
    return float(_ACTIVE["polar_max_abs"](radii, phases, count))


def surrogate(radii: np.ndarray, phases: np.ndarray, count: int, temp: float):
    """Smoothed max of |S_v|^2 and its gradient in phases and radii."""
    radii = np.ascontiguousarray(radii, dtype=np.float64)
    phases = np.ascontiguousarray(phases, dtype=np.float64)
    value, grad_phase, grad_radius = _ACTIVE["surrogate"](radii, phases, count, temp)
    return float(value), np.asarray(grad_phase), np.asarray(grad_radius)
