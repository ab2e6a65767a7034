"""Generating functions for partitions with a fixed largest-smallest
difference or a vector of specified milestone distances.

Every generating function is available by two routes that must agree:

* a direct sum over the smallest part, summed far enough that the omitted
  summands cannot touch the requested truncation order, and
* a closed rational form with a (1-q^m)-product denominator.

The closed forms exist for difference t > 1 (single difference) and total
distance t > k (k distances); below those thresholds the series are not
rational and only the direct route applies.

The module also verifies, at truncated-series level, the two classical
identities the closed forms rest on: Heine's transformation of basic
hypergeometric series, specialized to integer powers of q, and the finite
q-binomial theorem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .counting import divisor_count
from .errors import (
    CutoffTooSmall,
    InvalidDifference,
    InvalidDistance,
    InvalidExponent,
    OutOfRange,
)
from .qseries import (
    FactoredRational,
    IntPolynomial,
    TruncatedSeries,
    _divide_by_one_minus_q_power,
    _multiply_by_one_minus_q_power,
    gauss_binomial,
    pochhammer_infinite,
    pochhammer_q,
    series_div_unit,
    series_mul,
)


@dataclass(frozen=True)
class DistanceSpec:
    """A non-empty vector of positive distances (t1..tk).

    With smallest part s, the milestones s, s+t1, s+t1+t2, ..., s+t must all
    occur; t = sum of distances is the largest-smallest difference and the
    weighted total sum_i (k+1-i) t_i is the exponent offset contributed by
    the forced milestones.
    """

    distances: tuple[int, ...]

    def __init__(self, distances: Sequence[int]):
        distances = tuple(int(d) for d in distances)
        if not distances:
            raise InvalidDistance("distance vector must be non-empty")
        for d in distances:
            if d < 1:
                raise InvalidDistance(f"distances must be >= 1, got {d}")
        object.__setattr__(self, "distances", distances)

    @property
    def total(self) -> int:
        """t: the difference between largest and smallest parts."""
        return sum(self.distances)

    @property
    def k(self) -> int:
        return len(self.distances)

    @property
    def weighted_total(self) -> int:
        """sum_i (k+1-i) t_i: total weight of the forced milestones above k+1 copies of s."""
        k = self.k
        return sum((k + 1 - i) * d for i, d in enumerate(self.distances, start=1))

    @property
    def min_weight(self) -> int:
        """Smallest n with a counted partition (take smallest part 1)."""
        return (self.k + 1) + self.weighted_total


def _coerce_spec(spec) -> DistanceSpec:
    return spec if isinstance(spec, DistanceSpec) else DistanceSpec(spec)


def direct_series_fixed_diff(t: int, order: int) -> TruncatedSeries:
    """Sum over the smallest part m of
    q^m/(1-q^m) * prod_{i=1}^{t-1} 1/(1-q^{m+i}) * q^{m+t}/(1-q^{m+t}),
    truncated at `order`.

    The m-th summand starts at q^{2m+t}, so only m <= (order-t)/2 contribute.
    """
    if t < 1:
        raise InvalidDifference(
            f"difference must be >= 1 (difference 0 is counted by divisors), got {t}"
        )
    total = [0] * (order + 1)
    m = 1
    while 2 * m + t <= order:
        term = [0] * (order + 1)
        term[2 * m + t] = 1
        for i in range(t + 1):
            _divide_by_one_minus_q_power(term, m + i)
        for j in range(2 * m + t, order + 1):
            total[j] += term[j]
        m += 1
    return TruncatedSeries(total)


def direct_series_specified(spec, order: int) -> TruncatedSeries:
    """Sum over the smallest part m of q^{(k+1)m + W} / prod_{j=0}^{t} (1-q^{m+j}),
    W the weighted milestone total; truncated at `order`."""
    spec = _coerce_spec(spec)
    t, k, weighted = spec.total, spec.k, spec.weighted_total
    total = [0] * (order + 1)
    m = 1
    while (k + 1) * m + weighted <= order:
        base = (k + 1) * m + weighted
        term = [0] * (order + 1)
        term[base] = 1
        for j in range(t + 1):
            _divide_by_one_minus_q_power(term, m + j)
        for j in range(base, order + 1):
            total[j] += term[j]
        m += 1
    return TruncatedSeries(total)


def closed_form_fixed_diff(t: int) -> FactoredRational:
    """The rational form of the fixed-difference generating function, t >= 2:

        q^{t-1}(1-q) / ((1-q^t)(1-q^{t-1}))
      - q^{t-1}(1-q) / ((1-q^t)(1-q^{t-1}) (q)_t)
      + q^t / ((1-q^{t-1}) (q)_t)

    combined over a common denominator and reduced.  For t = 0, 1 the series
    is not rational and this raises OutOfRange.
    """
    if t <= 1:
        raise OutOfRange(
            f"closed form requires difference > 1 (got {t}); the t=0 and t=1 "
            "series have non-polar singularities and stay non-rational"
        )
    poch = [(m, 1) for m in range(1, t + 1)]
    lead = IntPolynomial.monomial(t - 1) - IntPolynomial.monomial(t)  # q^{t-1}(1-q)
    term1 = FactoredRational(lead, [(t - 1, 1), (t, 1)])
    term2 = FactoredRational(-lead, [(t - 1, 1), (t, 1)] + poch)
    term3 = FactoredRational(IntPolynomial.monomial(t), [(t - 1, 1)] + poch)
    return (term1 + term2 + term3).reduce()


def closed_form_specified(spec) -> FactoredRational:
    """The rational form for specified distances, total t > k:

        (-1)^k q^{W - C(k+1,2)} ( sum_{j=0}^{k} [t,j] (-1)^j q^{C(j+1,2)} - (q)_t )
        / ( [t-1,k] (1-q^t) (q)_t )

    The Gaussian binomial in the denominator is cleared through
    [t-1,k] = (q)_{t-1} / ((q)_k (q)_{t-1-k}): the complementary Pochhammers
    join the numerator, (q)_{t-1} joins the (1-q^m) denominator multiset, and
    common factors are cancelled by exact division.
    """
    spec = _coerce_spec(spec)
    t, k, weighted = spec.total, spec.k, spec.weighted_total
    if t <= k:
        raise OutOfRange(f"closed form requires total distance > k, got t={t}, k={k}")
    small_sum = IntPolynomial()
    for j in range(k + 1):
        part = gauss_binomial(t, j).shift(math.comb(j + 1, 2))
        small_sum = small_sum + (part if j % 2 == 0 else -part)
    core = small_sum - pochhammer_q(t)
    lead_exp = weighted - math.comb(k + 1, 2)  # >= 0 since each distance is >= 1
    numerator = core.shift(lead_exp)
    if k % 2 == 1:
        numerator = -numerator
    numerator = numerator * pochhammer_q(k) * pochhammer_q(t - 1 - k)
    denominator = (
        [(m, 1) for m in range(1, t)]      # (q)_{t-1}
        + [(t, 1)]                         # 1 - q^t
        + [(m, 1) for m in range(1, t + 1)]  # (q)_t
    )
    return FactoredRational(numerator, denominator).reduce()


def qbinomial_alternating_sum(t: int, j_min: int = 0) -> IntPolynomial:
    """sum_{j=j_min}^{t} [t,j] (-1)^j q^{C(j+1,2)} as an exact polynomial.

    With j_min = 0 the q-binomial theorem collapses this to (q)_t.
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if not 0 <= j_min <= t + 1:
        raise ValueError(f"j_min must be in 0..{t + 1}, got {j_min}")
    out = IntPolynomial()
    for j in range(j_min, t + 1):
        part = gauss_binomial(t, j).shift(math.comb(j + 1, 2))
        out = out + (part if j % 2 == 0 else -part)
    return out


def p1_identity_check(order: int) -> bool:
    """Check the three routes to the difference-1 series through q^order:
    the sum over the smallest part, q/(1-q)^2 minus the divisor-generating
    sum, and the nondivisor counts n - d(n) themselves."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    summed = direct_series_fixed_diff(1, order)

    rational = list(
        FactoredRational(IntPolynomial.monomial(1), [(1, 2)]).expand(order).coeffs
    )
    for m in range(1, order + 1):  # subtract sum_m q^m/(1-q^m), a divisor sieve
        for j in range(m, order + 1, m):
            rational[j] -= 1
    subtracted = TruncatedSeries(rational)

    counted = TruncatedSeries([0] + [n - divisor_count(n) for n in range(1, order + 1)])
    return summed == subtracted == counted


def heine_check(
    a_exp: int, b_exp: int, c_exp: int, z_exp: int, order: int, cutoff: int
) -> bool:
    """Verify Heine's transformation at a = q^a_exp, b = q^b_exp, c = q^c_exp,
    z = q^z_exp through q^order:

        sum_{m>=0} (a)_m (b)_m z^m / ((q)_m (c)_m)
          = (c/b)_oo (bz)_oo / ((c)_oo (z)_oo)
            * sum_{j>=0} (abz/c)_j (b)_j (c/b)^j / ((q)_j (bz)_j)

    The left sum is cut at `cutoff` terms past m=0; since the m-th term starts
    exactly at q^{z_exp * m}, CutoffTooSmall is raised when term cutoff+1 still
    reaches the order.  The right sum's (abz/c)_j may involve q to negative
    powers; each such factor 1 - q^{-e} is rewritten as -q^{-e}(1 - q^e) and
    the collected monomial must stay a power series, otherwise the
    specialization is rejected.
    """
    for name, e in (("a_exp", a_exp), ("b_exp", b_exp), ("c_exp", c_exp), ("z_exp", z_exp)):
        if e < 1:
            raise InvalidExponent(f"{name} must be >= 1, got {e}")
    if c_exp <= b_exp:
        raise InvalidExponent(
            f"need c_exp > b_exp for the (c/b) infinite product, got {c_exp} <= {b_exp}"
        )
    if z_exp * (cutoff + 1) <= order:
        raise CutoffTooSmall(
            f"term {cutoff + 1} starts at q^{z_exp * (cutoff + 1)} <= order {order}"
        )

    lhs = [0] * (order + 1)
    term = [1] + [0] * order  # m = 0
    for m in range(0, cutoff + 1):
        if m > 0:
            # term_m = term_{m-1} * (1-q^{a+m-1})(1-q^{b+m-1}) q^z / ((1-q^m)(1-q^{c+m-1}))
            _multiply_by_one_minus_q_power(term, a_exp + m - 1)
            _multiply_by_one_minus_q_power(term, b_exp + m - 1)
            if z_exp > order:
                term = [0] * (order + 1)
            else:
                term = [0] * z_exp + term[: order + 1 - z_exp]
            _divide_by_one_minus_q_power(term, m)
            _divide_by_one_minus_q_power(term, c_exp + m - 1)
        for j in range(order + 1):
            lhs[j] += term[j]
    lhs_series = TruncatedSeries(lhs)

    cb = c_exp - b_exp
    prefactor = series_mul(
        pochhammer_infinite(cb, order), pochhammer_infinite(b_exp + z_exp, order)
    )
    prefactor = series_div_unit(prefactor, pochhammer_infinite(c_exp, order))
    prefactor = series_div_unit(prefactor, pochhammer_infinite(z_exp, order))

    s = a_exp + b_exp + z_exp - c_exp  # exponent in (abz/c)_j
    rhs_sum = [0] * (order + 1)
    j = 0
    while True:
        if s <= 0 and j >= 1 - s:
            break  # the factor 1 - q^0 entered at j = 1-s; all later terms vanish
        if s >= 1 and cb * j > order:
            break
        shift = 0
        numer = [0] * (order + 1)
        numer[0] = 1
        sign = 1
        vanished = False
        for i in range(j):
            e = s + i
            if e == 0:
                vanished = True
                break
            if e > 0:
                _multiply_by_one_minus_q_power(numer, e)
            else:
                shift += e
                sign = -sign
                _multiply_by_one_minus_q_power(numer, -e)
        if vanished:
            j += 1
            continue
        for i in range(j):
            _multiply_by_one_minus_q_power(numer, b_exp + i)
        offset = shift + cb * j
        if offset < 0:
            raise InvalidExponent(
                "specialization leaves q^{-1} terms on the transformed side; "
                f"term j={j} has net exponent {offset}"
            )
        if offset <= order:
            numer = [0] * offset + numer[: order + 1 - offset]
            for i in range(j):
                _divide_by_one_minus_q_power(numer, i + 1)
                _divide_by_one_minus_q_power(numer, b_exp + z_exp + i)
            for idx in range(order + 1):
                rhs_sum[idx] += sign * numer[idx]
        j += 1
    rhs_series = series_mul(prefactor, TruncatedSeries(rhs_sum))

    return lhs_series == rhs_series
