"""Exact PSD decision for symmetric quartics in n >= 4 variables.

A symmetric n-ary quartic is nonnegative on R^n iff it is nonnegative at every
point whose coordinates take at most two distinct values.  Up to permutation
such a point is (r,...,r, s,...,s) with k copies of r, so the check reduces to
n + 1 binary quartics q_k(r, s), each decided exactly with Sturm sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterable

from . import sturm
from .forms import make_L
from .poly import Polynomial

BINOMIAL_4 = tuple(Fraction((-1) ** i * comb(4, i)) for i in range(5))  # (r - s)^4


class PreconditionError(ValueError):
    """The input is outside the class the test-set reduction covers."""


class NotSymmetricError(PreconditionError):
    pass


class DegreeError(PreconditionError):
    pass


class ArityError(PreconditionError):
    pass


def _require_symmetric_quartic(f: Polynomial, min_n: int = 1) -> None:
    if not f.is_homogeneous(4):
        raise DegreeError(f"expected a homogeneous quartic, got degree {f.degree}")
    if f.n < min_n:
        raise ArityError(f"need at least {min_n} variables, got n={f.n}")
    if not f.is_symmetric():
        raise NotSymmetricError("form is not symmetric")


@dataclass(frozen=True)
class BinaryRestriction:
    """q(r, s) = sum coeffs[i] r^(4-i) s^i, equal to f at (r,...,r [k], s,...,s)."""

    k: int
    coeffs: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]

    def __call__(self, r, s) -> Fraction:
        r, s = Fraction(r), Fraction(s)
        return sum((c * r ** (4 - i) * s ** i for i, c in enumerate(self.coeffs)), Fraction(0))

    def dehomogenized(self) -> list[Fraction]:
        """u(t) = q(t, 1) in ascending powers of t."""
        return list(reversed(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def restrict(f: Polynomial, k: int) -> BinaryRestriction:
    _require_symmetric_quartic(f)
    if not 0 <= k <= f.n:
        raise ValueError(f"split size k={k} outside 0..{f.n}")
    coeffs = [Fraction(0)] * 5
    for mono, c in f.terms.items():
        r_deg = sum(mono[:k])
        coeffs[4 - r_deg] += c
    return BinaryRestriction(k, tuple(coeffs))


@dataclass(frozen=True)
class Counterexample:
    r: Fraction
    s: Fraction
    value: Fraction


def binary_quartic_nonneg(q: BinaryRestriction) -> sturm.NonnegWitness | Counterexample:
    c0, c4 = q.coeffs[0], q.coeffs[4]
    if c0 < 0:
        return Counterexample(Fraction(1), Fraction(0), c0)
    if c4 < 0:
        return Counterexample(Fraction(0), Fraction(1), c4)
    # for s != 0, q(r, s) = s^4 u(r/s); s = 0 leaves c0 r^4, already checked
    result = sturm.nonnegative_on_reals(q.dehomogenized())
    if isinstance(result, sturm.NonnegWitness):
        return result
    t = result
    return Counterexample(t, Fraction(1), q(t, 1))


def split_point(n: int, k: int, r, s) -> tuple[Fraction, ...]:
    return (Fraction(r),) * k + (Fraction(s),) * (n - k)


@dataclass(frozen=True)
class PsdCertificate:
    n: int
    restrictions: tuple[tuple[BinaryRestriction, sturm.NonnegWitness | Counterexample], ...]
    counterexample: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def verdict(self) -> str:
        return "psd" if self.counterexample is None else "not_psd"

    @property
    def is_psd(self) -> bool:
        return self.counterexample is None

    def to_text(self) -> str:
        lines = [f"psd-certificate n={self.n}"]
        for q, outcome in self.restrictions:
            coeffs = " ".join(_q(c) for c in q.coeffs)
            if isinstance(outcome, Counterexample):
                status = f"counterexample r={_q(outcome.r)} s={_q(outcome.s)} value={_q(outcome.value)}"
            else:
                status = f"nonneg roots={outcome.root_count} samples={len(outcome.samples)}"
            lines.append(f"k={q.k} coeffs={coeffs} {status}")
        if self.counterexample is None:
            lines.append("verdict psd")
        else:
            point = ",".join(_q(c) for c in self.counterexample)
            lines.append(f"verdict not_psd point={point} value={_q(self.value)}")
        return "\n".join(lines) + "\n"


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def check_psd(f: Polynomial) -> PsdCertificate:
    _require_symmetric_quartic(f, min_n=4)
    rows = []
    point = value = None
    for k in range(f.n + 1):
        q = restrict(f, k)
        outcome = binary_quartic_nonneg(q)
        rows.append((q, outcome))
        if point is None and isinstance(outcome, Counterexample):
            point = split_point(f.n, k, outcome.r, outcome.s)
            value = f.evaluate(point)
            assert value < 0, "restriction disagrees with the form"
    return PsdCertificate(f.n, tuple(rows), point, value)


def restricted_value_coefficient(n: int, k: int) -> int:
    """k(n-k)(m-k)(n-m-k): L_n at a k/(n-k) split equals this times (r-s)^4."""
    m = n // 2
    return k * (n - k) * (m - k) * (n - m - k)


def verify_Ln_restricted_formula(n: int) -> bool:
    f = make_L(n)
    for k in range(n + 1):
        c = restricted_value_coefficient(n, k)
        if restrict(f, k).coeffs != tuple(c * b for b in BINOMIAL_4):
            return False
    return True


def grid_minimum(f: Polynomial, values: Iterable = (-2, -1, 0, 1, 2)):
    """Smallest value of f over the full grid values^n, with its point.

    Sampling only; this is what is available for degree >= 6 forms.  For a
    symmetric f only sorted grid points are visited.
    """
    values = sorted(Fraction(v) for v in values)
    grid = combinations_with_replacement(values, f.n) if f.is_symmetric() else product(values, repeat=f.n)
    best = None
    for point in grid:
        v = f.evaluate(point)
        if best is None or v < best[0]:
            best = (v, point)
    return best
