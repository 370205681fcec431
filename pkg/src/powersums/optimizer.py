"""Multi-start minimax search over constrained tuples.

Each restart draws an independent seeded start, descends a temperature
schedule of smoothed objectives (soft-max of the squared moduli, solved
with L-BFGS-B and the analytic gradient), then polishes the true max
with a shrinking-step coordinate pattern search. The best true objective
seen at any stage boundary is kept, so a restart seeded at a known
minimum can never come back worse.

Restarts are fully independent: restart r uses the stream seeded by
(seed, r), so results do not depend on execution order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import minimize as _scipy_minimize

from . import kernels
from .bounds import BoundReport, applicable_lower_bound
from .errors import ParamViolation
from .power_sums import PowerSumSystem, spectrum

CONSTRAINTS = ("unit", "outside", "first-fixed")

BOUND_SLACK = 1e-6
MATCH_TOLERANCE = 1e-3


@dataclass(frozen=True)
class SearchSpec:
    n: int
    nu_range: int
    constraint: str = "unit"
    restarts: int = 50
    seed: int = 0
    radial_slack: float = 1.0  # C in the radial cap 1 + C/n
    temp_start: float = 1.0
    temp_min: float = 1e-4
    polish_step: float = 1e-2
    polish_shrink: float = 0.5
    polish_step_min: float = 1e-10
    stage_maxiter: int = 80

    def __post_init__(self):
        if self.n < 1:
            raise ParamViolation(f"n must be at least 1, got {self.n}")
        if self.nu_range < 1:
            raise ParamViolation(f"range must be at least 1, got {self.nu_range}")
        if self.constraint not in CONSTRAINTS:
            raise ParamViolation(f"unknown constraint {self.constraint!r}")
        if self.restarts < 1:
            raise ParamViolation(f"restarts must be at least 1, got {self.restarts}")
        if self.constraint != "unit" and self.radial_slack <= 0:
            raise ParamViolation("radial cap must exceed 1 outside the unit circle")
        if not 0 < self.temp_min <= self.temp_start:
            raise ParamViolation("need 0 < temp_min <= temp_start")

    @property
    def cap(self) -> float:
        return 1.0 + self.radial_slack / self.n

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "range": self.nu_range,
            "constraint": self.constraint,
            "restarts": self.restarts,
            "seed": self.seed,
            "radial_slack": self.radial_slack,
            "temp_start": self.temp_start,
            "temp_min": self.temp_min,
            "polish_step": self.polish_step,
            "polish_shrink": self.polish_shrink,
            "polish_step_min": self.polish_step_min,
            "stage_maxiter": self.stage_maxiter,
        }


@dataclass(frozen=True, eq=False)
class SearchResult:
    spec: SearchSpec
    best_value: float
    best_system: PowerSumSystem
    canonical: np.ndarray  # (n, 2) rows of (radius, phase)
    per_restart: tuple[tuple[int, float], ...]
    bound: BoundReport | None

    @property
    def bound_satisfied(self) -> bool | None:
        if self.bound is None:
            return None
        return self.best_value >= self.bound.value.value - BOUND_SLACK

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "best_value": self.best_value,
            "canonical": [[float(r), float(p)] for r, p in self.canonical],
            "per_restart": [[i, v] for i, v in self.per_restart],
            "bound_check": {
                "bound": None if self.bound is None else self.bound.value.value,
                "name": None if self.bound is None else self.bound.name,
                "satisfied": self.bound_satisfied,
            },
        }


def objective(sys: PowerSumSystem, nu_range: int) -> float:
    """max_{1 <= v <= nu_range} |S_v|, evaluated without smoothing."""
    return spectrum(sys, nu_range).max_value


# ---------------------------------------------------------------------------
# constraint parametrizations
#
# unit:        x = phases, radii fixed at 1
# outside:     x = (phases, s) with r = 1 + s^2, s in [0, sqrt(cap-1)]
# first-fixed: x = (phases[1:], radii[1:]), z_1 pinned to 1, radii in [0, cap]


class _Parametrization:
    def __init__(self, spec: SearchSpec):
        self.spec = spec
        n = spec.n
        if spec.constraint == "unit":
            self.dim = n
            self.lower = np.full(n, -np.inf)
            self.upper = np.full(n, np.inf)
        elif spec.constraint == "outside":
            self.dim = 2 * n
            smax = np.sqrt(spec.cap - 1.0)
            self.lower = np.concatenate([np.full(n, -np.inf), np.zeros(n)])
            self.upper = np.concatenate([np.full(n, np.inf), np.full(n, smax)])
        else:
            self.dim = 2 * (n - 1)
            self.lower = np.concatenate([np.full(n - 1, -np.inf), np.zeros(n - 1)])
            self.upper = np.concatenate([np.full(n - 1, np.inf), np.full(n - 1, spec.cap)])

    def initial(self, rng: np.random.Generator) -> np.ndarray:
        n = self.spec.n
        phases = rng.random(n)
        if self.spec.constraint == "unit":
            return phases
        if self.spec.constraint == "outside":
            return np.concatenate([phases, np.zeros(n)])  # boundary r = 1
        return np.concatenate([phases[1:], np.ones(n - 1)])

    def from_system(self, sys: PowerSumSystem) -> np.ndarray:
        pol = sys.as_polar()
        radii, phases = pol.radii, pol.phases
        if self.spec.constraint == "unit":
            if not np.allclose(radii, 1.0, atol=1e-12):
                raise ParamViolation("unit-circle start must have unit radii")
            return phases.copy()
        if self.spec.constraint == "outside":
            s = np.sqrt(np.clip(radii - 1.0, 0.0, None))
            return np.concatenate([phases, s])
        return np.concatenate([phases[1:], radii[1:]])

    def tuple_of(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        n = self.spec.n
        if self.spec.constraint == "unit":
            return np.ones(n), np.mod(x, 1.0)
        if self.spec.constraint == "outside":
            return 1.0 + x[n:] ** 2, np.mod(x[:n], 1.0)
        radii = np.concatenate([[1.0], x[n - 1 :]])
        phases = np.concatenate([[0.0], np.mod(x[: n - 1], 1.0)])
        return radii, phases

    def true_value(self, x: np.ndarray) -> float:
        radii, phases = self.tuple_of(x)
        return kernels.polar_max_abs(radii, phases, self.spec.nu_range)

    def surrogate(self, x: np.ndarray, temp: float) -> tuple[float, np.ndarray]:
        n = self.spec.n
        radii, phases = self.tuple_of(x)
        value, dphi, drad = kernels.surrogate(radii, phases, self.spec.nu_range, temp)
        if self.spec.constraint == "unit":
            return value, dphi
        if self.spec.constraint == "outside":
            return value, np.concatenate([dphi, drad * 2.0 * x[n:]])
        return value, np.concatenate([dphi[1:], drad[1:]])

    def system_of(self, x: np.ndarray) -> PowerSumSystem:
        radii, phases = self.tuple_of(x)
        return PowerSumSystem.polar(radii, phases)


def _temperature_schedule(spec: SearchSpec) -> list[float]:
    temps = []
    t = spec.temp_start
    while t > spec.temp_min:
        temps.append(t)
        t /= 2.0
    temps.append(spec.temp_min)
    return temps


def _pattern_search(param: _Parametrization, x: np.ndarray, spec: SearchSpec) -> tuple[np.ndarray, float]:
    """Compass search on the true max with a halving step, improvements only."""
    x = x.copy()
    fx = param.true_value(x)
    step = spec.polish_step
    max_sweeps = 60  # per step level; each accepted move strictly improves
    while step >= spec.polish_step_min:
        for _ in range(max_sweeps):
            improved = False
            for idx in range(param.dim):
                for delta in (step, -step):
                    trial = x[idx] + delta
                    trial = min(max(trial, param.lower[idx]), param.upper[idx])
                    if trial == x[idx]:
                        continue
                    old = x[idx]
                    x[idx] = trial
                    fc = param.true_value(x)
                    if fc < fx:
                        fx = fc
                        improved = True
                        break
                    x[idx] = old
            if not improved:
                break
        step *= spec.polish_shrink
    return x, fx


def _run_restart(spec: SearchSpec, param: _Parametrization, index: int,
                 start: np.ndarray | None) -> tuple[float, np.ndarray]:
    if start is None:
        rng = np.random.default_rng((spec.seed, index))
        x = param.initial(rng)
    else:
        x = start.copy()

    best_x = x.copy()
    best_f = param.true_value(x)
    if param.dim == 0:  # n = 1 with z_1 pinned: nothing to optimize
        return best_f, best_x

    scipy_bounds = None
    if np.isfinite(param.upper).any():
        scipy_bounds = [
            (None if not np.isfinite(lo) else lo, None if not np.isfinite(hi) else hi)
            for lo, hi in zip(param.lower, param.upper)
        ]

    for temp in _temperature_schedule(spec):
        res = _scipy_minimize(
            param.surrogate,
            x,
            args=(temp,),
            jac=True,
            method="L-BFGS-B",
            bounds=scipy_bounds,
            options={"maxiter": spec.stage_maxiter},
        )
        x = res.x
        f = param.true_value(x)
        if f < best_f:
            best_f, best_x = f, x.copy()

    x, f = _pattern_search(param, best_x, spec)
    if f < best_f:
        best_f, best_x = f, x
    return best_f, best_x


def minimize(spec: SearchSpec, initial_systems: Sequence[PowerSumSystem] = ()) -> SearchResult:
    """Run the multi-start search configured by a SearchSpec.

    initial_systems, when given, replace the random starts of the first
    restarts (restart i starts at initial_systems[i]).
    """
    param = _Parametrization(spec)
    per_restart = []
    best_index, best_value, best_x = -1, np.inf, None
    for r in range(spec.restarts):
        start = None
        if r < len(initial_systems):
            start = param.from_system(initial_systems[r])
        value, x = _run_restart(spec, param, r, start)
        per_restart.append((r, value))
        if value < best_value:
            best_index, best_value, best_x = r, value, x
    best_system = param.system_of(best_x)
    return SearchResult(
        spec=spec,
        best_value=float(best_value),
        best_system=best_system,
        canonical=canonicalize(best_system),
        per_restart=tuple(per_restart),
        bound=applicable_lower_bound(spec.n, spec.nu_range, spec.constraint),
    )


# ---------------------------------------------------------------------------
# canonical form under rotation x permutation


def _fold_phases(phases: np.ndarray) -> np.ndarray:
    folded = np.mod(phases, 1.0)
    return np.where(folded > 1.0 - 1e-12, folded - 1.0, folded)


def _lex_less(a: np.ndarray, b: np.ndarray, tol: float = 1e-12) -> bool:
    for x, y in zip(a, b):
        if abs(x - y) > tol:
            return x < y
    return False


def canonicalize(sys: PowerSumSystem) -> np.ndarray:
    """Orbit representative under rotation and permutation.

    For each of the n rotations placing some z_j at phase 0, sort the
    (radius, phase) pairs; return the lexicographically smallest sorted
    vector. Tuples in the same orbit agree componentwise to ~1e-9.
    """
    pol = sys.as_polar()
    radii, phases = pol.radii, pol.phases
    best = None
    for j in range(pol.n):
        shifted = _fold_phases(phases - phases[j])
        pairs = np.array(sorted(zip(radii, shifted)))
        if best is None or _lex_less(pairs.ravel(), best.ravel()):
            best = pairs
    return best


@dataclass(frozen=True)
class MatchReport:
    """Distance between a search result and a reference construction."""

    distance: float
    objective_gap: float
    verdict: str  # "matched" | "distinct"
    construction_label: str = ""

    def to_json_dict(self) -> dict:
        return {
            "distance": self.distance,
            "objective_gap": self.objective_gap,
            "verdict": self.verdict,
            "construction": self.construction_label,
        }


def compare_to_construction(result: SearchResult, construction: PowerSumSystem,
                            label: str = "") -> MatchReport:
    """Canonical-vector distance between the found tuple and a construction.

    Reported, never asserted: whether the minima coincide is exactly the
    open part of the problem.
    """
    if construction.n != result.spec.n:
        raise ParamViolation("construction size differs from search size")
    ref = canonicalize(construction)
    distance = float(np.max(np.abs(result.canonical - ref)))
    gap = abs(result.best_value - objective(construction, result.spec.nu_range))
    return MatchReport(
        distance=distance,
        objective_gap=float(gap),
        verdict="matched" if distance <= MATCH_TOLERANCE else "distinct",
        construction_label=label,
    )
