"""Sparse homogeneous multivariate polynomials with exact rational coefficients.

A polynomial in ``n`` variables is a map from exponent tuples (length ``n``)
to nonzero :class:`fractions.Fraction` coefficients.  Values are immutable.

Canonical text form (one term per line, graded lexicographic, leading term
first)::

    poly n=2 d=2
    1/1 2 0
    -2/1 1 1
    1/1 0 2
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


class DimensionError(ValueError):
    """Variable counts or point lengths do not match."""


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction; floats are rejected to keep arithmetic exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def grlex_key(exponents: Monomial) -> tuple:
    return (sum(exponents), exponents)


class Polynomial:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, Scalar] | Iterable = ()):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise DimensionError(f"monomial {mono} has length {len(mono)}, expected {n}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = clean.get(mono, Fraction(0)) + as_rational(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.n = n
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        mono = [0] * n
        mono[i] = 1
        return cls(n, {tuple(mono): 1})

    @classmethod
    def _raw(cls, n: int, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # terms must already be clean (nonzero Fractions, correct lengths)
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    # -- structure ----------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=0)

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_homogeneous(self, d: int | None = None) -> bool:
        degrees = {sum(m) for m in self._terms}
        if not degrees:
            return True
        if d is None:
            return len(degrees) == 1
        return degrees == {d}

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Return f(x_{perm[0]}, ..., x_{perm[n-1]})."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"{perm} is not a permutation of range({self.n})")
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            new = [0] * self.n
            for pos, src in enumerate(perm):
                new[src] += mono[pos]
            out[tuple(new)] = c
        return Polynomial._raw(self.n, out)

    def is_symmetric(self) -> bool:
        # (0 1) and the n-cycle generate S_n
        if self.n < 2:
            return True
        swap = [1, 0] + list(range(2, self.n))
        cycle = list(range(1, self.n)) + [0]
        return self.permute(swap) == self and self.permute(cycle) == self

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise DimensionError(f"variable count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.n, as_rational(other))

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                out[mono] = out.get(mono, 0) + ca * cb
        return Polynomial._raw(self.n, {m: c for m, c in out.items() if c})

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.n:
            raise DimensionError(f"point has {len(point)} coordinates, polynomial has n={self.n}")
        xs = [as_rational(v) for v in point]
        powers: list[dict[int, Fraction]] = [{0: Fraction(1)} for _ in xs]
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for i, e in enumerate(mono):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        cache[e] = xs[i] ** e
                    term *= cache[e]
                    if not term:
                        break
            total += term
        return total

    __call__ = evaluate

    def substitute_zero(self, var_index: int) -> "Polynomial":
        """Set variable ``var_index`` to 0 and drop it, giving n-1 variables."""
        if not 0 <= var_index < self.n:
            raise IndexError(f"variable index {var_index} out of range for n={self.n}")
        out = {
            mono[:var_index] + mono[var_index + 1:]: c
            for mono, c in self._terms.items()
            if mono[var_index] == 0
        }
        return Polynomial._raw(self.n - 1, out)

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"poly n={self.n} d={self.degree}"]
        for mono, c in self.sorted_terms():
            lines.append(" ".join([f"{c.numerator}/{c.denominator}", *map(str, mono)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        polys = parse_polys(text)
        if len(polys) != 1:
            raise ValueError(f"expected one polynomial block, found {len(polys)}")
        return polys[0]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(mono) if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {self})"


def parse_polys(text: str) -> list[Polynomial]:
    """Parse a sequence of ``poly`` blocks; blank lines and ``#`` comments are skipped."""
    blocks: list[tuple[int, int, list]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "poly":
            header = dict(f.split("=", 1) for f in fields[1:])
            try:
                blocks.append((int(header["n"]), int(header["d"]), []))
            except (KeyError, ValueError):
                raise ValueError(f"line {lineno}: malformed header {line!r}") from None
            continue
        if not blocks:
            raise ValueError(f"line {lineno}: term before any 'poly' header")
        n = blocks[-1][0]
        if len(fields) != n + 1:
            raise ValueError(f"line {lineno}: expected {n} exponents, got {len(fields) - 1}")
        try:
            coeff = Fraction(fields[0])
            mono = tuple(int(e) for e in fields[1:])
        except ValueError:
            raise ValueError(f"line {lineno}: malformed term {line!r}") from None
        blocks[-1][2].append((mono, coeff))
    polys = []
    for n, d, terms in blocks:
        p = Polynomial(n, terms)
        if p.degree != d:
            raise ValueError(f"header says d={d} but terms have degree {p.degree}")
        polys.append(p)
    return polys


# Functional spellings of the core operations.

def add(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return a + b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return a * b


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    return f.evaluate(point)


def substitute_zero(f: Polynomial, var_index: int) -> Polynomial:
    return f.substitute_zero(var_index)


def is_homogeneous(f: Polynomial, d: int) -> bool:
    return f.is_homogeneous(d)


def is_symmetric(f: Polynomial) -> bool:
    return f.is_symmetric()


def variables(n: int) -> list[Polynomial]:
    return [Polynomial.variable(n, i) for i in range(n)]


def power_sum(n: int, k: int = 1) -> Polynomial:
    return Polynomial(n, {tuple(k if j == i else 0 for j in range(n)): 1 for i in range(n)})


def pair_sum(n: int) -> Polynomial:
    """sum_{i<j} x_i x_j"""
    terms = {}
    for i, j in combinations(range(n), 2):
        mono = [0] * n
        mono[i] = mono[j] = 1
        terms[tuple(mono)] = 1
    return Polynomial(n, terms)
