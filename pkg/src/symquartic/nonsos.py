"""Zero-forcing non-SOS certificates for quartics, and exact SOS identity checks.

If a quartic f = sum_t h_t^2, every quadratic h_t vanishes wherever f does.
When the only quadratic form vanishing on a set of real zeros of f is the zero
form, no decomposition can exist (f != 0).  Vanishing on a point p is one
linear condition on the n + n(n-1)/2 coefficients of h, so the argument is an
exact rank computation.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .poly import DimensionError, Polynomial, parse_polys, power_sum, variables
from .psd import DegreeError


@dataclass(frozen=True)
class ZeroSet:
    n: int
    weights: tuple[int, ...]
    points: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.points)


def enumerate_zero_points(n: int, weights: Iterable[int]) -> ZeroSet:
    """All 0/1 points in n coordinates whose number of 1's lies in ``weights``."""
    weights = tuple(sorted(set(weights)))
    for w in weights:
        if not 0 <= w <= n:
            raise ValueError(f"weight {w} outside 0..{n}")
    points = []
    for w in weights:
        for ones in combinations(range(n), w):
            p = [0] * n
            for i in ones:
                p[i] = 1
            points.append(tuple(p))
    points.sort()
    return ZeroSet(n, weights, tuple(points))


def default_weights(n: int) -> tuple[int, int]:
    m = n // 2
    return (m, m + 1)


def _support_mask(mono: Sequence[int]) -> int:
    return sum(1 << i for i, e in enumerate(mono) if e)


def _point_mask(p: Sequence[int]) -> int:
    return sum(1 << i for i, v in enumerate(p) if v)


def zero_point_values(f: Polynomial, z: ZeroSet) -> list[Fraction]:
    """f at every point of z.  At a 0/1 point a monomial is 1 iff its support is inside the ones."""
    if f.n != z.n:
        raise DimensionError(f"form has n={f.n}, zero set has n={z.n}")
    terms = [(_support_mask(m), c) for m, c in f.terms.items()]
    out = []
    for p in z.points:
        mask = _point_mask(p)
        out.append(sum((c for s, c in terms if s & ~mask == 0), Fraction(0)))
    return out


def verify_zeros(f: Polynomial, z: ZeroSet) -> bool:
    return all(v == 0 for v in zero_point_values(f, z))


def quadratic_basis(n: int) -> list[tuple[int, ...]]:
    """Columns: x_1^2..x_n^2, then x_i x_j for i < j in lexicographic order."""
    basis = []
    for i in range(n):
        mono = [0] * n
        mono[i] = 2
        basis.append(tuple(mono))
    for i, j in combinations(range(n), 2):
        mono = [0] * n
        mono[i] = mono[j] = 1
        basis.append(tuple(mono))
    return basis


def square_column(n: int, i: int) -> int:
    return i


def cross_column(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    # pairs (a, b) with a < i come first; then (i, i+1..j)
    before = i * n - i * (i + 1) // 2
    return n + before + (j - i - 1)


def constraint_row(p: Sequence[int]) -> list[int]:
    """Monomial basis evaluated at p (entries of a 0/1 point give 0/1 rows)."""
    n = len(p)
    row = [p[i] * p[i] for i in range(n)]
    row += [p[i] * p[j] for i, j in combinations(range(n), 2)]
    return row


def vanishing_constraint_matrix(z: ZeroSet) -> list[list[int]]:
    return [constraint_row(p) for p in z.points]


def rank(matrix: Sequence[Sequence], ncols: int | None = None) -> int:
    """Exact rank by rational Gaussian elimination, rows processed in order.

    Each pivot is the first nonzero column of the reduced incoming row.  Stops
    early once the rank reaches the column count.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    pivots: dict[int, list[Fraction]] = {}
    for raw in matrix:
        if len(raw) != ncols:
            raise DimensionError("ragged matrix")
        row = [Fraction(v) for v in raw]
        for col in range(ncols):
            v = row[col]
            if not v:
                continue
            basis = pivots.get(col)
            if basis is None:
                pivots[col] = [x / v for x in row]
                break
            for c in range(col, ncols):
                if basis[c]:
                    row[c] -= v * basis[c]
        if len(pivots) == ncols:
            break
    return len(pivots)


def kernel_dimension(matrix: Sequence[Sequence], ncols: int | None = None) -> int:
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    return ncols - rank(matrix, ncols)


# -- replay of the index-subtraction argument -------------------------------

def _point(n: int, ones: Iterable[int]) -> tuple[int, ...]:
    ones = set(ones)
    return tuple(1 if i in ones else 0 for i in range(n))


def subtraction_row(n: int, S: Iterable[int], i: int, k: int) -> list[int]:
    """row(S + {i, k}) - row(S + {i})."""
    S = set(S)
    hi = constraint_row(_point(n, S | {i, k}))
    lo = constraint_row(_point(n, S | {i}))
    return [a - b for a, b in zip(hi, lo)]


def subtraction_support(n: int, S: Iterable[int], i: int, k: int) -> set[int]:
    """Columns of a_k, a_kl (l in S) and a_ik."""
    return {square_column(n, k), cross_column(n, i, k)} | {cross_column(n, k, l) for l in S}


def final_scalar(m: int) -> int:
    """h = u(-m sum x_i^2 + sum x_i x_j) at a point with m ones, divided by u."""
    return -m * m + m * (m - 1) // 2


def replay_lemma_subtractions(n: int, seed: int = 0, trials: int = 25) -> bool:
    """Re-derive, on seeded random index choices, the relations that force a
    quadratic vanishing on the weight-{m, m+1} points to be zero."""
    if n < 4:
        raise ValueError(f"needs n >= 4, got {n}")
    m = n // 2
    ncols = n + n * (n - 1) // 2
    rng = random.Random(seed)
    for _ in range(trials):
        i, j, k = rng.sample(range(n), 3)
        rest = [v for v in range(n) if v not in (i, j, k)]
        S = set(rng.sample(rest, m - 1))
        # all four points carry weight m or m + 1
        if {len(S) + 1, len(S) + 2} != {m, m + 1}:
            return False
        d_i = subtraction_row(n, S, i, k)
        d_j = subtraction_row(n, S, j, k)
        for d, a in ((d_i, i), (d_j, j)):
            support = {c for c, v in enumerate(d) if v}
            if support != subtraction_support(n, S, a, k) or any(d[c] != 1 for c in support):
                return False
        # subtracting the two relations leaves a_ik - a_jk = 0
        diff = [a - b for a, b in zip(d_i, d_j)]
        expected = [0] * ncols
        expected[cross_column(n, i, k)] = 1
        expected[cross_column(n, j, k)] = -1
        if diff != expected:
            return False
    # with every a_ij = u the relation reads a_k + m u = 0; the last point then gives
    # u * final_scalar(m) = 0
    u_form = [-m] * n + [1] * (ncols - n)
    row = constraint_row(_point(n, range(m)))
    if sum(a * b for a, b in zip(row, u_form)) != final_scalar(m):
        return False
    return final_scalar(m) != 0


# -- certificates -----------------------------------------------------------

def form_hash(f: Polynomial) -> str:
    return hashlib.sha256(f.to_text().encode()).hexdigest()[:16]


@dataclass(frozen=True)
class NonSosCertificate:
    form_hash: str
    n: int
    weights: tuple[int, ...]
    points: int
    zeros_verified: bool
    rows: int
    unknowns: int
    kernel_dimension: int
    seed: int
    replay: bool | None
    first_nonzero: tuple[tuple[int, ...], Fraction] | None = None

    @property
    def verdict(self) -> str:
        if self.zeros_verified and self.kernel_dimension == 0:
            return "not_sos"
        return "inconclusive"

    @property
    def is_not_sos(self) -> bool:
        return self.verdict == "not_sos"

    def to_text(self) -> str:
        replay = {None: "skipped", True: "ok", False: "failed"}[self.replay]
        lines = [
            "notsos-certificate",
            f"form sha256:{self.form_hash}",
            f"n {self.n}",
            f"weights {','.join(map(str, self.weights))}",
            f"points {self.points}",
            f"zeros-verified {str(self.zeros_verified).lower()}",
        ]
        if self.first_nonzero is not None:
            p, v = self.first_nonzero
            lines.append(f"nonzero-at {','.join(map(str, p))} value={v.numerator}/{v.denominator}")
        lines += [
            f"rows {self.rows}",
            f"columns {self.unknowns}",
            f"kernel-dimension {self.kernel_dimension}",
            f"replay-seed {self.seed}",
            f"replay {replay}",
            f"verdict {self.verdict}",
        ]
        if self.is_not_sos:
            lines.append(
                "reason: summands of a quartic SOS are quadratics vanishing on every "
                "listed zero; the only such quadratic is 0"
            )
        return "\n".join(lines) + "\n"


def certify_not_sos(f: Polynomial, z: ZeroSet, seed: int = 0) -> NonSosCertificate:
    if f.is_zero():
        raise ValueError("the zero form is trivially a sum of squares")
    if not f.is_homogeneous(4):
        raise DegreeError(f"zero-forcing certificates need a quartic, got degree {f.degree}")
    values = zero_point_values(f, z)
    bad = next(((p, v) for p, v in zip(z.points, values) if v != 0), None)
    ncols = z.n + z.n * (z.n - 1) // 2
    matrix = vanishing_constraint_matrix(z)
    kdim = kernel_dimension(matrix, ncols)
    replay = None
    if z.n >= 4 and z.weights == default_weights(z.n):
        replay = replay_lemma_subtractions(z.n, seed)
    return NonSosCertificate(
        form_hash=form_hash(f),
        n=z.n,
        weights=z.weights,
        points=len(z),
        zeros_verified=bad is None,
        rows=len(matrix),
        unknowns=ncols,
        kernel_dimension=kdim,
        seed=seed,
        replay=replay,
        first_nonzero=bad,
    )


def expected_point_count(n: int, weights: Iterable[int]) -> int:
    return sum(comb(n, w) for w in set(weights))


# -- SOS identities ---------------------------------------------------------

@dataclass(frozen=True)
class SosIdentity:
    """target == sum (g * h)^2 over the summand pairs."""

    target: Polynomial
    summands: tuple[tuple[Polynomial, Polynomial], ...]

    def expand(self) -> Polynomial:
        total = Polynomial.zero(self.target.n)
        for g, h in self.summands:
            gh = g * h
            total = total + gh * gh
        return total


def verify_sos_identity(identity: SosIdentity) -> bool:
    return identity.expand() == identity.target


def even_L_sos_identity(two_m: int) -> SosIdentity:
    """L_2m = sum_{i<j} (x_i - x_j)^2 (m(x_i + x_j) - (x_1 + ... + x_2m))^2."""
    from .forms import make_L

    if two_m < 4 or two_m % 2:
        raise ValueError(f"needs an even size >= 4, got {two_m}")
    m = two_m // 2
    xs = variables(two_m)
    total = power_sum(two_m)
    pairs = tuple(
        (xs[i] - xs[j], (xs[i] + xs[j]) * m - total) for i, j in combinations(range(two_m), 2)
    )
    return SosIdentity(make_L(two_m), pairs)


def summands_to_text(summands: Iterable[tuple[Polynomial, Polynomial]]) -> str:
    blocks = []
    for idx, (g, h) in enumerate(summands):
        blocks.append(f"# pair {idx}\n{g.to_text()}{h.to_text()}")
    return "".join(blocks)


def summands_from_text(text: str) -> tuple[tuple[Polynomial, Polynomial], ...]:
    polys = parse_polys(text)
    if len(polys) % 2:
        raise ValueError(f"summand file holds {len(polys)} polynomials; pairs need an even count")
    return tuple(zip(polys[::2], polys[1::2]))
