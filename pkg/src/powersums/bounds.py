"""Lower-bound formulas and matched equality certificates.

Two bound families are implemented: the pure-power-sum bound valid for
|z_k| >= 1 (range 2nm - m(m+1) + 1, value sqrt(m)) and the unimodular
bound valid for |z_k| = 1 (range c*n, value sqrt((cn-n+1)/c)). Equality
certificates pair a bound with the spectrum maximum of the matching
explicit construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .difference_sets import bose, singer
from .errors import NotPrimePower, ParamViolation
from .exact import ExactSqrt
from .numtheory import as_prime_power, is_prime
from .power_sums import PowerSumSystem, from_difference_set, spectrum, turan_tuple

EQUALITY_TOLERANCE = 1e-9

UNIT_CIRCLE = "|z_k| = 1"
OUTSIDE_DISK = "|z_k| >= 1"
FIRST_FIXED = "z_1 = 1, z_k in C"


@dataclass(frozen=True)
class BoundReport:
    name: str  # "cassels" | "ncs"
    range_limit: int
    value: ExactSqrt
    constraint: str
    n: int
    param: int  # m for cassels, c for ncs

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "range_limit": self.range_limit,
            "value": self.value.value,
            "value_exact": str(self.value),
            "constraint": self.constraint,
            "n": self.n,
            "param": self.param,
        }


def cassels_bound(n: int, m: int) -> BoundReport:
    """max_{v <= 2nm - m(m+1) + 1} |S_v| >= sqrt(m), under |z_k| >= 1."""
    if n < 1:
        raise ParamViolation(f"n must be at least 1, got {n}")
    if not 1 <= m <= n:
        raise ParamViolation(f"m must satisfy 1 <= m <= n, got m={m}, n={n}")
    return BoundReport(
        name="cassels",
        range_limit=2 * n * m - m * (m + 1) + 1,
        value=ExactSqrt.sqrt_of(m),
        constraint=OUTSIDE_DISK,
        n=n,
        param=m,
    )


def ncs_bound(n: int, c: int) -> BoundReport:
    """max_{v <= c*n} |S_v| >= sqrt((cn - n + 1)/c), under |z_k| = 1."""
    if n < 1:
        raise ParamViolation(f"n must be at least 1, got {n}")
    if c < 1:
        raise ParamViolation(f"c must be at least 1, got {c}")
    return BoundReport(
        name="ncs",
        range_limit=c * n,
        value=ExactSqrt(Fraction(c * n - n + 1, c)),
        constraint=UNIT_CIRCLE,
        n=n,
        param=c,
    )


@dataclass(frozen=True)
class EqualityCertificate:
    theorem: int
    n: int
    i: int | None
    nu_range: int
    lower_bound: BoundReport
    construction_max: float
    stated_value: ExactSqrt

    @property
    def verdict(self) -> str:
        exact_match = self.lower_bound.value == self.stated_value
        close = abs(self.construction_max - self.stated_value.value) <= EQUALITY_TOLERANCE
        return "equal" if exact_match and close else "gap"

    @property
    def gap(self) -> float:
        return abs(self.construction_max - self.lower_bound.value.value)

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "i": self.i,
            "range": self.nu_range,
            "lower_bound": self.lower_bound.value.value,
            "construction_max": self.construction_max,
            "verdict": self.verdict,
        }


def verify_theorem1(n: int) -> EqualityCertificate:
    """Certify inf max_{v <= n^2-n} |S_v| = sqrt(n-1) on the unit circle.

    The singer tuple supplies the upper bound, the c = n-1 unimodular
    bound the lower; both sides must equal sqrt(n-1).
    """
    if as_prime_power(n - 1) is None:
        raise NotPrimePower(n - 1, f"n-1 must be a prime power, got n-1={n - 1}")
    sys = from_difference_set(singer(n))
    nu_range = n * n - n
    sp = spectrum(sys, nu_range)
    bound = ncs_bound(n, n - 1)
    assert bound.range_limit == nu_range
    return EqualityCertificate(
        theorem=1,
        n=n,
        i=None,
        nu_range=nu_range,
        lower_bound=bound,
        construction_max=sp.max_value,
        stated_value=ExactSqrt.sqrt_of(n - 1),
    )


def verify_theorem2(n: int, i: int) -> EqualityCertificate:
    """Certify inf max_{v <= n^2-i} |S_v| = sqrt(n) for |z_k| >= 1.

    The bose tuple supplies the upper bound; the m = n bound has range
    n^2 - n + 1 <= n^2 - i, so it applies throughout the window.
    """
    if n < 3 or as_prime_power(n) is None:
        raise NotPrimePower(n, f"n must be a prime power >= 3, got n={n}")
    if not 2 <= i <= n - 1:
        raise ParamViolation(f"i must satisfy 2 <= i <= n-1, got i={i}, n={n}")
    sys = from_difference_set(bose(n))
    nu_range = n * n - i
    sp = spectrum(sys, nu_range)
    bound = cassels_bound(n, n)
    assert bound.range_limit <= nu_range
    return EqualityCertificate(
        theorem=2,
        n=n,
        i=i,
        nu_range=nu_range,
        lower_bound=bound,
        construction_max=sp.max_value,
        stated_value=ExactSqrt.sqrt_of(n),
    )


@dataclass(frozen=True)
class ReferenceRow:
    """A known inf-max value or bracket with its applicability condition."""

    name: str
    constraint: str
    range_expr: str
    condition: str
    note: str
    nu_range: int | None = None
    value: float | None = None
    bracket: tuple[float, float] | None = None
    applicable: bool | None = None

    def to_json_dict(self) -> dict:
        out = {
            "name": self.name,
            "constraint": self.constraint,
            "range": self.range_expr if self.nu_range is None else self.nu_range,
            "condition": self.condition,
            "note": self.note,
        }
        if self.value is not None:
            out["value"] = self.value
        if self.bracket is not None:
            out["bracket"] = list(self.bracket)
        if self.applicable is not None:
            out["applicable"] = self.applicable
        return out


def reference_values(n: int | None = None) -> list[ReferenceRow]:
    """Known inf-max values and brackets, instantiated at n when given."""
    rows = [
        ReferenceRow(
            name="turan",
            constraint=OUTSIDE_DISK,
            range_expr="n",
            condition="all n >= 1",
            note="equally spaced (n+1)-th roots of unity attain the value 1",
            nu_range=n if n else None,
            value=1.0 if n else None,
            applicable=True if n else None,
        ),
        ReferenceRow(
            name="cassels-first-fixed",
            constraint=FIRST_FIXED,
            range_expr="2n-1",
            condition="all n >= 1",
            note="witness z = (1, 0, ..., 0) has |S_v| = 1 for every v",
            nu_range=2 * n - 1 if n else None,
            value=1.0 if n else None,
            applicable=True if n else None,
        ),
        ReferenceRow(
            name="prime-bracket",
            constraint=OUTSIDE_DISK,
            range_expr="n^2",
            condition="n+1 prime",
            note="inf lies in [sqrt(n), sqrt(n+1)]; exact value open",
            nu_range=n * n if n else None,
            bracket=(
                (ExactSqrt.sqrt_of(n).value, ExactSqrt.sqrt_of(n + 1).value)
                if n
                else None
            ),
            applicable=is_prime(n + 1) if n else None,
        ),
    ]
    return rows


def prime_bracket(n: int) -> tuple[ExactSqrt, ExactSqrt]:
    """The [sqrt(n), sqrt(n+1)] bracket over v = 1..n^2, valid for n+1 prime."""
    if not is_prime(n + 1):
        raise ParamViolation(f"bracket requires n+1 prime, got n+1={n + 1}")
    return ExactSqrt.sqrt_of(n), ExactSqrt.sqrt_of(n + 1)


def applicable_lower_bound(n: int, nu_range: int, constraint: str) -> BoundReport | None:
    """Best proven lower bound for the given range and constraint set.

    Unit-circle tuples also satisfy |z_k| >= 1, so both families compete
    there; outside-disk tuples only get the cassels family. For the
    first-fixed problem the known value 1 applies once the range reaches
    2n - 1 (reported as a cassels-style row with value 1).
    """
    candidates: list[BoundReport] = []
    if constraint in ("unit", "outside"):
        best_m = max((m for m in range(1, n + 1) if 2 * n * m - m * (m + 1) + 1 <= nu_range), default=None)
        if best_m is not None:
            candidates.append(cassels_bound(n, best_m))
    if constraint == "unit":
        c = nu_range // n
        if c >= 1:
            candidates.append(ncs_bound(n, c))
    if constraint == "first-fixed" and nu_range >= 2 * n - 1:
        candidates.append(
            BoundReport(
                name="first-fixed-reference",
                range_limit=2 * n - 1,
                value=ExactSqrt.integer(1),
                constraint=FIRST_FIXED,
                n=n,
                param=1,
            )
        )
    if not candidates:
        return None
    return max(candidates, key=lambda b: (b.value.radicand, -b.range_limit))


def known_construction(n: int, nu_range: int, constraint: str) -> tuple[PowerSumSystem, str] | None:
    """The explicit extremal tuple for (n, range), when one is known.

    All three constructions are unimodular, so they are admissible under
    every constraint set handled here.
    """
    if nu_range == n and n >= 1:
        return turan_tuple(n), "turan"
    if nu_range == n * n - n and as_prime_power(n - 1) is not None:
        return from_difference_set(singer(n)), "singer"
    if (
        n >= 3
        and as_prime_power(n) is not None
        and n * n - n + 1 <= nu_range <= n * n - 2
    ):
        return from_difference_set(bose(n)), "bose"
    return None
