"""Exact univariate polynomials over Q: Sturm sequences and real-root isolation.

Polynomials are lists of Fractions in ascending power order, ``[c0, c1, ...]``
meaning c0 + c1 t + ...; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

UPoly = list[Fraction]


def trim(p: Sequence) -> UPoly:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def evaluate(p: Sequence[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def derivative(p: Sequence[Fraction]) -> UPoly:
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_poly(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[UPoly, UPoly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        factor = r[-1] / lead
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        r = trim(r)
    return trim(q), r


def monic(p: Sequence[Fraction]) -> UPoly:
    p = trim(p)
    return [c / p[-1] for c in p] if p else []


def gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> UPoly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def squarefree_part(p: Sequence[Fraction]) -> UPoly:
    p = trim(p)
    if len(p) <= 1:
        return monic(p)
    g = gcd(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def sturm_sequence(p: Sequence[Fraction]) -> list[UPoly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        rem = divmod_poly(seq[-2], seq[-1])[1]
        seq.append([-c for c in rem])
    return seq[:-1]


def sign_changes(seq: list[UPoly], t: Fraction) -> int:
    signs = [v > 0 for v in (evaluate(p, t) for p in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[UPoly], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b] of the square-free head of ``seq``."""
    return sign_changes(seq, a) - sign_changes(seq, b)


def cauchy_bound(p: Sequence[Fraction]) -> Fraction:
    p = trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def _split(p: UPoly, a: Fraction, b: Fraction) -> Fraction:
    # an interior point of (a, b) that is not a root of p
    for num, den in ((1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5)):
        c = a + (b - a) * num / den
        if evaluate(p, c) != 0:
            return c
    den = 7
    while True:
        c = a + (b - a) / den
        if evaluate(p, c) != 0:
            return c
        den += 1


def isolate_real_roots(p: Sequence[Fraction]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], sorted, each holding exactly one distinct real root.

    Endpoints are never roots.  ``p`` need not be square-free.
    """
    sf = squarefree_part(p)
    if len(sf) <= 1:
        return []
    seq = sturm_sequence(sf)
    bound = cauchy_bound(sf)
    found = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        c = count_roots(seq, a, b)
        if c == 0:
            continue
        if c == 1:
            found.append((a, b))
            continue
        mid = _split(sf, a, b)
        stack.append((a, mid))
        stack.append((mid, b))
    return sorted(found)


@dataclass(frozen=True)
class NonnegWitness:
    """Sample values of u(t) at one rational point in every sign-invariant region."""

    root_count: int
    samples: tuple[tuple[Fraction, Fraction], ...]


def nonnegative_on_reals(p: Sequence[Fraction]) -> NonnegWitness | Fraction:
    """Decide u(t) >= 0 for all real t.

    Returns a NonnegWitness on success, otherwise a rational t with u(t) < 0.
    Between consecutive distinct real roots u has constant sign, so one sample
    per region decides it; the isolating interval endpoints supply those samples.
    """
    p = trim(p)
    if not p:
        return NonnegWitness(0, ())
    intervals = isolate_real_roots(p)
    if intervals:
        points = sorted({e for iv in intervals for e in iv})
    else:
        points = [Fraction(0)]
    samples = []
    for t in points:
        v = evaluate(p, t)
        if v < 0:
            return t
        samples.append((t, v))
    return NonnegWitness(len(intervals), tuple(samples))
