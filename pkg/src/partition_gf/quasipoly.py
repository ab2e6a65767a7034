"""Quasipolynomials with exact rational coefficients: evaluation, exact
interpolation from counted values, fits driven by the closed-form series,
and the explicit residue-class formulas for difference 3 and distances (2,2).

A quasipolynomial of period P and degree d keeps one coefficient row per
residue class mod P; evaluation picks the row for n mod P and evaluates the
polynomial at n.  Fitting interpolates the earliest d+1 samples of each class
and treats every further sample as a consistency witness: a mismatch raises
instead of being averaged away, because an inconsistency falsifies the
degree/period hypothesis rather than being noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    InconsistentSamples,
    InsufficientSamples,
    InternalError,
    InternalMismatch,
    NonConstantLeading,
    OutOfRange,
)
from .genfun import closed_form_fixed_diff, closed_form_specified, _coerce_spec


@dataclass(frozen=True)
class QuasiPolynomial:
    """period P, degree d, and P rows of d+1 exact rational coefficients,
    row r giving n -> sum_j c[r][j] n^j for n == r (mod P)."""

    period: int
    degree: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        if len(self.rows) != self.period:
            raise ValueError(f"expected {self.period} rows, got {len(self.rows)}")
        for row in self.rows:
            if len(row) != self.degree + 1:
                raise ValueError(
                    f"every row needs {self.degree + 1} coefficients, got {len(row)}"
                )

    def evaluate(self, n: int) -> Fraction:
        """Exact value at n >= 1."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        row = self.rows[n % self.period]
        acc = Fraction(0)
        for c in reversed(row):
            acc = acc * n + c
        return acc

    def leading_coefficient(self) -> Fraction:
        """The degree-d coefficient, required to be identical in every row."""
        leads = {row[self.degree] for row in self.rows}
        if len(leads) != 1:
            raise NonConstantLeading(
                f"rows disagree at degree {self.degree}: {sorted(leads)}"
            )
        return next(iter(leads))

    def to_json_dict(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "rows": [
                [f"{c.numerator}/{c.denominator}" for c in row] for row in self.rows
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> QuasiPolynomial:
        rows = tuple(
            tuple(Fraction(entry) for entry in row) for row in data["rows"]
        )
        return cls(period=int(data["period"]), degree=int(data["degree"]), rows=rows)


def qp_evaluate(qp: QuasiPolynomial, n: int) -> Fraction:
    return qp.evaluate(n)


def qp_leading_coefficient(qp: QuasiPolynomial) -> Fraction:
    return qp.leading_coefficient()


def _interpolate(points: Sequence[tuple[int, int]]) -> tuple[Fraction, ...]:
    # Exact Gaussian elimination on the Vandermonde system; the abscissas are
    # distinct so the system is nonsingular.
    d = len(points) - 1
    rows = [[Fraction(n) ** j for j in range(d + 1)] + [Fraction(v)] for n, v in points]
    for col in range(d + 1):
        pivot = next(r for r in range(col, d + 1) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(d + 1):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(rows[j][d + 1] for j in range(d + 1))


def fit(values: Mapping[int, int], degree: int, period: int) -> QuasiPolynomial:
    """Interpolate a quasipolynomial of the given degree and period from exact
    sample values (a mapping n -> integer).

    Each residue class needs at least degree+1 samples (InsufficientSamples
    otherwise); any samples beyond the earliest degree+1 must lie on the
    interpolated polynomial or InconsistentSamples is raised.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if period < 1:
        raise ValueError(f"period must be >= 1, got {period}")
    rows = []
    for r in range(period):
        samples = sorted((n, v) for n, v in values.items() if n % period == r)
        if len(samples) < degree + 1:
            raise InsufficientSamples(
                f"residue class {r} mod {period} has {len(samples)} samples, "
                f"needs {degree + 1}"
            )
        coeffs = _interpolate(samples[: degree + 1])
        poly = QuasiPolynomial(1, degree, (coeffs,))
        for n, v in samples[degree + 1 :]:
            got = poly.evaluate(n)
            if got != v:
                raise InconsistentSamples(
                    f"degree {degree}, period {period} cannot hold: at n={n} "
                    f"the residue-{r} fit gives {got}, sample says {v}"
                )
        rows.append(coeffs)
    return QuasiPolynomial(period, degree, tuple(rows))


def from_closed_form(spec, order: int) -> QuasiPolynomial:
    """Expand the closed form for `spec` through q^order and fit a
    quasipolynomial of degree t and period lcm(1..t).

    The fit consumes the earliest samples of each residue class and validates
    against every remaining coefficient up to `order`; a failure would falsify
    the degree/period hypothesis and surfaces as InconsistentSamples.
    """
    spec = _coerce_spec(spec)
    t, k = spec.total, spec.k
    if t <= max(1, k):
        raise OutOfRange(f"no closed form for t={t}, k={k}; need t > max(1, k)")
    period = math.lcm(*range(1, t + 1))
    required = spec.min_weight + period * (t + 1)
    if order < required:
        raise ValueError(
            f"order {order} cannot feed {t + 1} samples to every residue class "
            f"mod {period}; need >= {required}"
        )
    form = closed_form_fixed_diff(t) if k == 1 else closed_form_specified(spec)
    series = form.expand(order)
    values = {n: series[n] for n in range(1, order + 1)}
    return fit(values, t, period)


def expected_leading(t: int) -> Fraction:
    """Leading coefficient 1 / (t * (t!)^2) of the degree-t quasipolynomial."""
    if t < 2:
        raise OutOfRange(f"leading-coefficient law needs t >= 2, got {t}")
    return Fraction(1, t * math.factorial(t) ** 2)


# Residue-class numerators over 108 for the difference-3 counting function.
_P3_CASES = {
    0: (0, -18, 0, 1),
    1: (2, -3, 0, 1),
    2: (52, -30, 0, 1),
    3: (-54, 9, 0, 1),
    4: (56, -30, 0, 1),
    5: (-2, -3, 0, 1),
}


def _p3_polynomial_form(n: int) -> int:
    c0, c1, c2, c3 = _P3_CASES[n % 6]
    value, rem = divmod(n**3 * c3 + n**2 * c2 + n * c1 + c0, 108)
    if rem:
        raise InternalError(f"difference-3 case value at n={n} is not divisible by 108")
    return value


def _p3_factored_form(n: int) -> int:
    m, r = divmod(n, 6)
    if r == 0:
        return m * (2 * m**2 - 1)
    if r == 1:
        return m**2 * (2 * m + 1)
    if r == 2:
        return m * (2 * m**2 + 2 * m - 1)
    if r == 3:
        return m * (2 * m**2 + 3 * m + 2)
    if r == 4:  # n = 6(m+1) - 2
        return m * (2 * (m + 1) ** 2 - 1)
    # r == 5: n = 6(m+1) - 1
    return (m + 1) ** 2 * (2 * m + 1)


def p3_explicit(n: int) -> int:
    """p(n,3) from the explicit residue formulas, in both shapes.

    Evaluates the cubic-over-108 cases and the factored cases independently
    and insists they agree, guarding the coefficient tables against
    transcription drift.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    polynomial = _p3_polynomial_form(n)
    factored = _p3_factored_form(n)
    if polynomial != factored:
        raise InternalMismatch(
            f"difference-3 forms disagree at n={n}: {polynomial} vs {factored}"
        )
    return polynomial


# Residue-class numerators over 6912 for the distance-(2,2) counting function.
_P22_CASES = {
    0: (0, 288, -24, -20, 3),
    1: (-397, 492, -78, -20, 3),
    2: (304, -48, -24, -20, 3),
    3: (-2781, 1260, -78, -20, 3),
    4: (2816, -480, -24, -20, 3),
    5: (115, 492, -78, -20, 3),
    6: (-3024, 720, -24, -20, 3),
    7: (35, 492, -78, -20, 3),
    8: (3328, -480, -24, -20, 3),
    9: (-3213, 1260, -78, -20, 3),
    10: (-208, -48, -24, -20, 3),
    11: (547, 492, -78, -20, 3),
}


def p22_explicit(n: int) -> int:
    """p(n,2,2) from the explicit twelve-case quartic table over 6912."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    c0, c1, c2, c3, c4 = _P22_CASES[n % 12]
    value, rem = divmod(n**4 * c4 + n**3 * c3 + n**2 * c2 + n * c1 + c0, 6912)
    if rem:
        raise InternalError(f"distance-(2,2) case value at n={n} is not divisible by 6912")
    return value


def p3_quasipolynomial() -> QuasiPolynomial:
    """The difference-3 case table as a QuasiPolynomial (period 6, degree 3)."""
    rows = tuple(
        tuple(Fraction(c, 108) for c in _P3_CASES[r]) for r in range(6)
    )
    return QuasiPolynomial(6, 3, rows)


def p22_quasipolynomial() -> QuasiPolynomial:
    """The distance-(2,2) case table as a QuasiPolynomial (period 12, degree 4)."""
    rows = tuple(
        tuple(Fraction(c, 6912) for c in _P22_CASES[r]) for r in range(12)
    )
    return QuasiPolynomial(12, 4, rows)
