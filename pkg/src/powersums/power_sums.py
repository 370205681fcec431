"""Unimodular tuples, their power-sum spectra, and the exact closed forms.

A tuple is stored either with rational phases (integer exponents over a
common modulus, the natural form for difference-set constructions) or in
polar form. For rational phases every power is reduced mod the modulus
before the angle is formed, so no rounding accumulates across exponents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO

import numpy as np

from . import kernels
from .difference_sets import DifferenceSet
from .errors import NotPrimePower, ParamViolation, RangeViolation
from .exact import ExactSqrt
from .numtheory import as_prime_power

CHECK_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class PowerSumSystem:
    """n complex numbers z_k, either e(a_k/m) or r_k * e(phi_k)."""

    form: str  # "rational" | "polar"
    exponents: np.ndarray | None = None
    modulus: int | None = None
    radii: np.ndarray | None = None
    phases: np.ndarray | None = None

    @staticmethod
    def rational(exponents, modulus: int) -> "PowerSumSystem":
        if modulus < 1:
            raise ParamViolation(f"modulus must be positive, got {modulus}")
        exps = np.asarray(exponents, dtype=np.int64) % modulus
        if exps.size == 0:
            raise ParamViolation("empty tuple")
        return PowerSumSystem(form="rational", exponents=exps, modulus=modulus)

    @staticmethod
    def polar(radii, phases) -> "PowerSumSystem":
        r = np.asarray(radii, dtype=np.float64)
        p = np.mod(np.asarray(phases, dtype=np.float64), 1.0)
        if r.size == 0 or r.shape != p.shape:
            raise ParamViolation("radii and phases must be equal-length and nonempty")
        if np.any(r < 0):
            raise ParamViolation("radii must be nonnegative")
        return PowerSumSystem(form="polar", radii=r, phases=p)

    @property
    def n(self) -> int:
        arr = self.exponents if self.form == "rational" else self.radii
        return int(arr.size)

    def as_polar(self) -> "PowerSumSystem":
        if self.form == "polar":
            return self
        return PowerSumSystem.polar(
            np.ones(self.n), self.exponents.astype(np.float64) / self.modulus
        )

    def complex_values(self) -> np.ndarray:
        if self.form == "rational":
            ang = 2.0 * np.pi * self.exponents / self.modulus
            return np.cos(ang) + 1j * np.sin(ang)
        ang = 2.0 * np.pi * self.phases
        return self.radii * (np.cos(ang) + 1j * np.sin(ang))

    def to_json_dict(self) -> dict:
        if self.form == "rational":
            return {
                "form": "rational",
                "exponents": [int(a) for a in self.exponents],
                "modulus": int(self.modulus),
            }
        return {
            "form": "polar",
            "radii": [float(r) for r in self.radii],
            "phases": [float(p) for p in self.phases],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "PowerSumSystem":
        form = data.get("form")
        if form == "rational":
            return PowerSumSystem.rational(data["exponents"], data["modulus"])
        if form == "polar":
            return PowerSumSystem.polar(data["radii"], data["phases"])
        raise ParamViolation(f"unknown tuple form {form!r}")


def from_difference_set(ds: DifferenceSet) -> PowerSumSystem:
    """Map residues a_k mod m to the tuple z_k = e(a_k / m)."""
    return PowerSumSystem.rational(ds.residues, ds.modulus)


def turan_tuple(n: int) -> PowerSumSystem:
    """The classical equally-spaced tuple z_k = e(k/(n+1)), k = 1..n."""
    if n < 1:
        raise ParamViolation(f"n must be at least 1, got {n}")
    return PowerSumSystem.rational(np.arange(1, n + 1), n + 1)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """|S_v| for v = 1..nu_range, plus max and first argmax."""

    n: int
    nu_range: int
    values: np.ndarray
    max_value: float = field(init=False)
    argmax_nu: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "max_value", float(self.values.max()))
        object.__setattr__(self, "argmax_nu", int(self.values.argmax()) + 1)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "range": self.nu_range,
            "max_value": self.max_value,
            "argmax_nu": self.argmax_nu,
            "values": [float(v) for v in self.values],
        }


def spectrum_components(sys: PowerSumSystem, nu_range: int):
    """(Re S_v, Im S_v) arrays for v = 1..nu_range."""
    if nu_range < 1:
        raise ParamViolation(f"range must be at least 1, got {nu_range}")
    if sys.form == "rational":
        return kernels.rational_components(sys.exponents, sys.modulus, nu_range)
    return kernels.polar_components(sys.radii, sys.phases, nu_range)


def spectrum(sys: PowerSumSystem, nu_range: int) -> Spectrum:
    re, im = spectrum_components(sys, nu_range)
    return Spectrum(n=sys.n, nu_range=nu_range, values=np.hypot(re, im))


def expected_spectrum(kind: str, n: int, nu: int) -> ExactSqrt:
    """Closed-form |S_nu| for the singer/bose tuples, as an exact quantity."""
    if nu < 1:
        raise ParamViolation(f"nu must be at least 1, got {nu}")
    if kind == "singer":
        if as_prime_power(n - 1) is None:
            raise NotPrimePower(n - 1, f"n-1 must be a prime power, got n-1={n - 1}")
        m = n * n - n + 1
        return ExactSqrt.integer(n) if nu % m == 0 else ExactSqrt.sqrt_of(n - 1)
    if kind == "bose":
        if as_prime_power(n) is None:
            raise NotPrimePower(n, f"n must be a prime power, got n={n}")
        if nu > n * n - 2:
            raise RangeViolation(
                f"closed form only valid for nu <= n^2-2 = {n * n - 2}, got nu={nu}"
            )
        return ExactSqrt.integer(1) if nu % (n - 1) == 0 else ExactSqrt.sqrt_of(n)
    raise ParamViolation(f"no closed form for kind {kind!r}")


@dataclass(frozen=True)
class SpectrumCheck:
    """Observed-vs-closed-form comparison over a checked window."""

    kind: str
    n: int
    requested_range: int
    checked_range: int
    worst_deviation: float
    worst_nu: int
    violations: tuple[tuple[int, float, float], ...]  # (nu, observed, expected)
    tolerance: float = CHECK_TOLERANCE

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "requested_range": self.requested_range,
            "checked_range": self.checked_range,
            "worst_deviation": self.worst_deviation,
            "worst_nu": self.worst_nu,
            "violations": [list(v) for v in self.violations],
            "passed": self.passed,
        }


def check_spectrum(sys: PowerSumSystem, kind: str, n: int, nu_range: int) -> SpectrumCheck:
    """Compare every |S_v| against the closed form, within its validity window.

    For bose tuples the window ends at n^2 - 2; larger requested exponents
    are excluded from the check rather than asserted.
    """
    checked = min(nu_range, n * n - 2) if kind == "bose" else nu_range
    sp = spectrum(sys, checked)
    worst = -1.0
    worst_nu = 0
    violations = []
    for nu in range(1, checked + 1):
        want = expected_spectrum(kind, n, nu).value
        got = float(sp.values[nu - 1])
        dev = abs(got - want)
        if dev > worst:
            worst, worst_nu = dev, nu
        if dev > CHECK_TOLERANCE:
            violations.append((nu, got, want))
    return SpectrumCheck(
        kind=kind,
        n=n,
        requested_range=nu_range,
        checked_range=checked,
        worst_deviation=worst,
        worst_nu=worst_nu,
        violations=tuple(violations),
    )


def parseval_sum(sys: PowerSumSystem) -> float:
    """sum_{v=0}^{m-1} |S_v|^2 for a rational-phase system (|S_0|^2 = n^2)."""
    if sys.form != "rational":
        raise ParamViolation("parseval_sum needs a rational-phase system")
    if sys.modulus == 1:
        return float(sys.n * sys.n)
    sp = spectrum(sys, sys.modulus - 1)
    return float(sys.n * sys.n + np.sum(sp.values**2))


def write_spectrum_csv(sys: PowerSumSystem, nu_range: int, stream: IO[str]) -> None:
    """CSV dump with columns nu, re, im, abs."""
    re, im = spectrum_components(sys, nu_range)
    stream.write("nu,re,im,abs\n")
    for i in range(nu_range):
        mag = float(np.hypot(re[i], im[i]))
        stream.write(f"{i + 1},{float(re[i])!r},{float(im[i])!r},{mag!r}\n")


def load_system(path: str) -> PowerSumSystem:
    """Read a tuple from a JSON file ({form, exponents/modulus | radii/phases})."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ParamViolation("tuple file must contain a JSON object")
    return PowerSumSystem.from_json_dict(data)
