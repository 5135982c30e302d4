"""Named symmetric forms and the degree-lifting family.

Every constructor returns a fully expanded :class:`Polynomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .poly import Polynomial, pair_sum, power_sum, variables


def make_L(n: int) -> Polynomial:
    """m(n-m) sum_{i<j} (x_i-x_j)^4 - (sum_{i<j} (x_i-x_j)^2)^2 with m = n // 2."""
    if n < 4:
        raise ValueError(f"L_n is defined for n >= 4, got n={n}")
    m = n // 2
    xs = variables(n)
    fourth = Polynomial.zero(n)
    for i, j in combinations(range(n), 2):
        fourth = fourth + (xs[i] - xs[j]) ** 4
    # sum_{i<j} (x_i - x_j)^2 = (n-1) sum x_i^2 - 2 sum_{i<j} x_i x_j
    second = power_sum(n, 2) * (n - 1) - pair_sum(n) * 2
    return fourth * (m * (n - m)) - second * second


def make_C(two_m: int) -> Polynomial:
    """L_{2m+1} with its last variable set to zero."""
    if two_m < 4 or two_m % 2:
        raise ValueError(f"C_2m needs an even argument >= 4, got {two_m}")
    return make_L(two_m + 1).substitute_zero(two_m)


def choi_lam_sums(n: int = 4) -> tuple[Polynomial, Polynomial]:
    """The two full symmetric sums sum x^2 y^2 and sum x^2 y z."""
    squares = {}
    for i, j in combinations(range(n), 2):
        mono = [0] * n
        mono[i] = mono[j] = 2
        squares[tuple(mono)] = 1
    mixed = {}
    for i in range(n):
        others = [v for v in range(n) if v != i]
        for j, k in combinations(others, 2):
            mono = [0] * n
            mono[i], mono[j], mono[k] = 2, 1, 1
            mixed[tuple(mono)] = 1
    return Polynomial(n, squares), Polynomial(n, mixed)


def make_choi_lam_44() -> Polynomial:
    squares, mixed = choi_lam_sums(4)
    return squares + mixed + Polynomial(4, {(1, 1, 1, 1): -2})


def make_robinson() -> Polynomial:
    terms = {(6, 0, 0): 1, (0, 6, 0): 1, (0, 0, 6): 1, (2, 2, 2): 3}
    for a, b in [(4, 2), (2, 4)]:
        for i, j in combinations(range(3), 2):
            mono = [0, 0, 0]
            mono[i], mono[j] = a, b
            terms[tuple(mono)] = -1
    return Polynomial(3, terms)


def make_lax5() -> Polynomial:
    """sum_i prod_{j != i} (x_i - x_j) in five variables."""
    xs = variables(5)
    total = Polynomial.zero(5)
    for i in range(5):
        prod = Polynomial.constant(5, 1)
        for j in range(5):
            if j != i:
                prod = prod * (xs[i] - xs[j])
        total = total + prod
    return total


def lift(f: Polynomial, i: int) -> Polynomial:
    """(x_1 + ... + x_n)^(2i) * f."""
    if i < 1:
        raise ValueError(f"lift exponent must be >= 1, got {i}")
    if not f.is_homogeneous():
        raise ValueError("lift requires a homogeneous form")
    return power_sum(f.n) ** (2 * i) * f


@dataclass(frozen=True)
class FormId:
    tag: str
    param: int | None = None
    base: "FormId | None" = None

    def __str__(self) -> str:
        if self.tag in ("L", "C"):
            return f"{self.tag}:{self.param}"
        if self.tag == "lift":
            return f"lift:{self.base}:{self.param}"
        if self.tag == "neg":
            return f"neg:{self.base}"
        return self.tag

    def build(self) -> Polynomial:
        if self.tag == "L":
            return make_L(self.param)
        if self.tag == "C":
            return make_C(self.param)
        if self.tag == "cl44":
            return make_choi_lam_44()
        if self.tag == "robinson":
            return make_robinson()
        if self.tag == "lax5":
            return make_lax5()
        if self.tag == "lift":
            return lift(self.base.build(), self.param)
        if self.tag == "neg":
            return -self.base.build()
        raise ValueError(f"unknown form tag {self.tag!r}")


def parse_form_id(text: str) -> FormId:
    """Parse ``L:<n>``, ``C:<2m>``, ``cl44``, ``robinson``, ``lax5``,
    ``lift:<base>:<i>`` and ``neg:<base>``."""
    text = text.strip()
    head, _, rest = text.partition(":")
    if head in ("cl44", "robinson", "lax5") and not rest:
        return FormId(head)
    if head in ("L", "C"):
        try:
            return FormId(head, int(rest))
        except ValueError:
            raise ValueError(f"bad form id {text!r}: {head} needs an integer") from None
    if head == "lift":
        base, _, i = rest.rpartition(":")
        if not base:
            raise ValueError(f"bad form id {text!r}: expected lift:<base>:<i>")
        try:
            return FormId("lift", int(i), parse_form_id(base))
        except ValueError as exc:
            raise ValueError(f"bad form id {text!r}: {exc}") from None
    if head == "neg" and rest:
        return FormId("neg", base=parse_form_id(rest))
    raise ValueError(f"unknown form id {text!r}")


def build_form(text: str) -> Polynomial:
    return parse_form_id(text).build()
