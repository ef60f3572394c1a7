"""Real-valued analytics over exact points: heights, regulators, sieve scores.

Canonical heights are computed as the doubling limit h(2^n P) / 4^n with
exact rational doubling and a single float conversion at the end, so the
only approximation is the truncation of the limit; the reported error
bound is C / 4^n with C estimated from the integral-model discriminant.
Sieve scores follow the convention: natural logarithm, primes p <= 3 and
primes of bad reduction (on the integral model) skipped.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .arith import digits10, factorize, primes_up_to, rational_sqrt
from .curves import INFINITY, Curve, CurvePoint, Point
from .errors import (
    BadPrime,
    BadReduction,
    DigitCapExceeded,
    InfinityPoint,
    SingularParameter,
)
from .family import SIEVE_THRESHOLDS, family_curve, subfamily

DIGIT_CAP_ENV = "BQEC_DIGIT_CAP"
DEFAULT_DIGIT_CAP = 10 ** 6

_DEFAULT_THRESHOLDS = {523: 10.0, 1979: 14.0}


def digit_cap() -> int:
    """Decimal-digit cap on exact coordinates (env BQEC_DIGIT_CAP overrides)."""
    value = os.environ.get(DIGIT_CAP_ENV)
    return int(value) if value else DEFAULT_DIGIT_CAP


def naive_height(P: CurvePoint) -> float:
    """log max(|numerator|, denominator) of the x-coordinate."""
    if P is INFINITY:
        raise InfinityPoint("naive height needs an affine point")
    return math.log(max(abs(P.x.numerator), P.x.denominator))


@dataclass(frozen=True)
class HeightResult:
    value: float
    doublings_used: int
    error_bound: float


def _log_size(q: Fraction) -> float:
    return math.log(max(abs(q.numerator), q.denominator, 2))


def canonical_height(curve: Curve, P: CurvePoint, doublings: int = 8) -> HeightResult:
    """Canonical height h(2^n P) / 4^n with exact doubling.

    Exactly 0 (with error bound 0) when some 2^k P hits infinity, i.e. for
    2-power torsion.  Raises DigitCapExceeded if coordinates outgrow the
    digit cap, and ValueError when the requested doublings leave an error
    bound above 0.01.
    """
    if P is INFINITY:
        raise InfinityPoint("canonical height needs an affine point")
    curve.require(P)
    if not 1 <= doublings <= 10:
        raise ValueError("doublings must be between 1 and 10")
    cap = digit_cap()

    if curve.is_ab_form:
        integral, lam = curve.integral_model()
        A, B = integral.A.numerator, integral.B.numerator
        constant = math.log(abs(16 * B * B * (A * A - 4 * B)))
        x = P.x * lam * lam
        U, V = x.numerator, x.denominator
        for step in range(doublings):
            # x(2P) = (x^2 - B)^2 / (4 x (x^2 + A x + B)); a zero denominator
            # means y = 0 or x = 0, so the next double is the identity
            num = (U * U - B * V * V) ** 2
            den = 4 * V * U * (U * U + A * U * V + B * V * V)
            if den == 0:
                return HeightResult(0.0, step + 1, 0.0)
            g = gcd(num, den)
            U, V = num // g, den // g
            if V < 0:
                U, V = -U, -V
            if digits10(U) > cap or digits10(V) > cap:
                raise DigitCapExceeded(
                    f"x-coordinate exceeded {cap} digits after {step + 1} doublings"
                )
        value = math.log(max(abs(U), V)) / 4 ** doublings
    else:
        constant = _log_size(curve.discriminant)
        Q: CurvePoint = P
        for step in range(doublings):
            Q = curve.add(Q, Q, check=False)
            if Q is INFINITY:
                return HeightResult(0.0, step + 1, 0.0)
            if digits10(Q.x.numerator) > cap or digits10(Q.x.denominator) > cap:
                raise DigitCapExceeded(
                    f"x-coordinate exceeded {cap} digits after {step + 1} doublings"
                )
        value = naive_height(Q) / 4 ** doublings

    error_bound = constant / 4 ** doublings
    if error_bound >= 0.01:
        raise ValueError(
            f"error bound {error_bound:.3g} at {doublings} doublings is too "
            "coarse; increase doublings"
        )
    return HeightResult(value, doublings, error_bound)


def _height_value(curve: Curve, P: CurvePoint, doublings: int) -> float:
    if P is INFINITY:
        return 0.0
    return canonical_height(curve, P, doublings).value


def regulator(curve: Curve, points, doublings: int = 8) -> float:
    """Determinant of the Gram matrix of the canonical-height pairing
    <P, Q> = (h(P+Q) - h(P) - h(Q)) / 2."""
    points = list(points)
    heights = [_height_value(curve, P, doublings) for P in points]
    n = len(points)
    gram = [[0.0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = heights[i]
    for i in range(n):
        for j in range(i + 1, n):
            pair_sum = _height_value(curve, curve.add(points[i], points[j]), doublings)
            gram[i][j] = gram[j][i] = (pair_sum - heights[i] - heights[j]) / 2
    return _det(gram)


def _det(matrix: list[list[float]]) -> float:
    """Gaussian elimination with partial pivoting; matrices here are tiny."""
    m = [row[:] for row in matrix]
    n = len(m)
    det = 1.0
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(m[r][col]))
        if m[pivot][col] == 0.0:
            return 0.0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for row in range(col + 1, n):
            factor = m[row][col] / m[col][col]
            for k in range(col, n):
                m[row][k] -= factor * m[col][k]
    return det


def is_probably_independent(curve: Curve, points, doublings: int = 8, tol: float = 1e-4) -> bool:
    """True when the regulator of the points exceeds tol."""
    return regulator(curve, points, doublings) > tol


# ----------------------------------------------------------------------
# sieve scores

def mestre_nagao_sums(curve: Curve, bounds) -> dict[int, float]:
    """Partial sums sum_{p <= n} (1 - (p-1)/#E(F_p)) log p at each bound.

    One pass up to the largest bound; p <= 3 and bad primes skipped.
    """
    bounds = sorted(set(int(b) for b in bounds))
    if not bounds:
        return {}
    sums: dict[int, float] = {}
    total = 0.0
    idx = 0
    for p in primes_up_to(bounds[-1]):
        while idx < len(bounds) and p > bounds[idx]:
            sums[bounds[idx]] = total
            idx += 1
        if p <= 3:
            continue
        try:
            count = curve.count_points_mod_p(p)
        except (BadPrime, BadReduction):
            continue
        total += (1 - (p - 1) / count) * math.log(p)
    while idx < len(bounds):
        sums[bounds[idx]] = total
        idx += 1
    return sums


def mestre_nagao(curve: Curve, bound: int) -> float:
    """The sieve score S(bound) = sum_{p <= bound} (1 - (p-1)/#E(F_p)) log p."""
    return mestre_nagao_sums(curve, [bound])[bound]


@dataclass(frozen=True, eq=False)
class SieveRecord:
    subfamily: int
    k: Fraction
    sums: dict[int, float]
    passed: bool
    singular: bool = False


def sieve(subfamily_index: int, k_values, thresholds: dict[int, float] | None = None,
          jobs: int = 1) -> list[SieveRecord]:
    """Score the subfamily members at the given k values.

    thresholds maps prime bounds to required scores; defaults are the
    per-subfamily shipped values.  Output order matches input order;
    singular parameters produce flagged records rather than failures.
    """
    if thresholds is None:
        thresholds = SIEVE_THRESHOLDS.get(subfamily_index, _DEFAULT_THRESHOLDS)
    k_values = [Fraction(k) for k in k_values]
    args = [(subfamily_index, k, dict(thresholds)) for k in k_values]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sieve_one, args))
    return [_sieve_one(arg) for arg in args]


def _sieve_one(arg: tuple[int, Fraction, dict[int, float]]) -> SieveRecord:
    index, k, thresholds = arg
    try:
        instance = subfamily(index, k)
    except SingularParameter:
        return SieveRecord(index, k, {}, passed=False, singular=True)
    curve = family_curve(instance.a)
    sums = mestre_nagao_sums(curve, thresholds.keys())
    passed = all(sums[bound] > need for bound, need in thresholds.items())
    return SieveRecord(index, k, sums, passed=passed)


# ----------------------------------------------------------------------
# divisor-shaped point search

def point_search(curve: Curve, numerator_bound: int,
                 max_divisors: int = 10 ** 4) -> tuple[list[Point], bool]:
    """Search an integral AB-form model for points with divisor-shaped x.

    Candidates are x = +-d m^2 / e^2 with d a squarefree divisor of B and
    coprime m, e <= numerator_bound (squares fold into m^2, so squarefree
    divisors lose nothing).  Returns the points found, both y signs, plus
    a flag set when the divisor enumeration was truncated.
    """
    A, B = curve.A, curve.B
    if A.denominator != 1 or B.denominator != 1:
        raise ValueError("point_search needs an integral model")
    primes = sorted(factorize(B.numerator))
    truncated = len(primes) > 60  # 2^60 subsets is out of reach anyway
    divisors = [1]
    for size in range(1, len(primes) + 1):
        if truncated or len(divisors) >= max_divisors:
            truncated = True
            break
        for combo in combinations(primes, size):
            product = math.prod(combo)
            divisors.append(product)
            if len(divisors) >= max_divisors:
                truncated = True
                break
    found: set[Point] = {Point(0, 0)}
    for d in divisors:
        for e in range(1, numerator_bound + 1):
            for m in range(1, numerator_bound + 1):
                if gcd(m, e) != 1:
                    continue
                base = Fraction(d * m * m, e * e)
                for x in (base, -base):
                    y = rational_sqrt(x ** 3 + A * x * x + B * x)
                    if y is None:
                        continue
                    found.add(Point(x, y))
                    if y != 0:
                        found.add(Point(x, -y))
    return sorted(found, key=lambda P: (P.x, P.y)), truncated
