"""Trinomial factor classification, term multiplicity, and the counting bound.

The negative-discriminant analysis reduces infinite-family detection to
finding quadratic factors of trinomials X^a - 2X^b + 1, X^a + X^b - 2 and
2X^a - X^b - 1.  Every root of these has modulus at most 2 (otherwise the
leading term dominates the other two), so a quadratic factor X^2 + p*X + q
has |q| <= 4 and |p| <= 4 and the search space is a small box, checked by
exact division.

The headline constant counts progressions via solution bounds for weighted
unit equations: with A(k, s) <= 2^(35*b^3) * d^(6*b^2), b = max(k+1, s) and
d = 2, the total A(5,2) + 3*A(3,2) + 18*A(2,2) + 39 is computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    DegenerateError,
    Kind,
    SeqParams,
    ZeroCoefficientError,
    alpha_beta,
    linear_terms,
    new_params,
    terms,
)


class TrinomialShape(Enum):
    UNIT_CONSTANT = "x^a-2x^b+1"
    MINUS_TWO_CONSTANT = "x^a+x^b-2"
    DOUBLED_LEAD = "2x^a-x^b-1"


@dataclass(frozen=True)
class TrinomialSpec:
    """One of the three normalized trinomial shapes with exponents a > b >= 1."""

    shape: TrinomialShape
    a: int
    b: int

    def __post_init__(self):
        if not self.a > self.b >= 1:
            raise ValueError("exponents must satisfy a > b >= 1")

    def coefficients(self) -> list:
        c = [0] * (self.a + 1)
        if self.shape is TrinomialShape.UNIT_CONSTANT:
            c[self.a], c[self.b], c[0] = 1, -2, 1
        elif self.shape is TrinomialShape.MINUS_TWO_CONSTANT:
            c[self.a], c[self.b], c[0] = 1, 1, -2
        else:
            c[self.a], c[self.b], c[0] = 2, -1, -1
        return c

    def describe(self) -> str:
        xa = f"X^{self.a}" if self.a > 1 else "X"
        xb = f"X^{self.b}" if self.b > 1 else "X"
        names = {
            TrinomialShape.UNIT_CONSTANT: f"{xa}-2{xb}+1",
            TrinomialShape.MINUS_TWO_CONSTANT: f"{xa}+{xb}-2",
            TrinomialShape.DOUBLED_LEAD: f"2{xa}-{xb}-1",
        }
        return names[self.shape]


def _divide_out_quadratic(coeffs: list, p: int, q: int):
    """Quotient of coeffs by X^2 + p*X + q, or None when it does not divide."""
    work = list(coeffs)
    quot = [0] * max(len(work) - 2, 0)
    for i in range(len(work) - 1, 1, -1):
        c = work[i]
        if c:
            quot[i - 2] = c
            work[i] = 0
            work[i - 1] -= p * c
            work[i - 2] -= q * c
    if work[0] or work[1]:
        return None
    return quot


def quad_factors(spec: TrinomialSpec, exponent_cap: int = 64) -> list:
    """All monic quadratic integer factors X^2 + p*X + q of the trinomial.

    Each candidate in the |p|, |q| <= 4 box is verified by exact division,
    and the quotient is multiplied back as an independent check.
    """
    if spec.a > exponent_cap:
        raise ValueError(f"exponent {spec.a} exceeds cap {exponent_cap}")
    coeffs = spec.coefficients()
    found = []
    for p in range(-4, 5):
        for q in range(-4, 5):
            if q == 0:
                continue  # a zero root is impossible: nonzero constant term
            quot = _divide_out_quadratic(coeffs, p, q)
            if quot is None:
                continue
            product = [0] * len(coeffs)
            for i, c in enumerate(quot):
                product[i] += q * c
                product[i + 1] += p * c
                product[i + 2] += c
            assert product == coeffs, "division check failed to multiply back"
            found.append((p, q))
    return sorted(found)


def companion_candidates_complex() -> list:
    """Coefficient pairs whose companion polynomial can divide a gap trinomial
    while having a negative discriminant.

    Scans the four exponent pairs left after reducing X^a + X^b - 2 by its
    cyclotomic part, maps each negative-discriminant quadratic factor
    X^2 + p*X + q to (A, B) = (-p, -q) and keeps the pairs that survive
    validation.
    """
    out = []
    for a, b in ((3, 2), (3, 1), (2, 1), (4, 2)):
        spec = TrinomialSpec(TrinomialShape.MINUS_TWO_CONSTANT, a, b)
        for p, q in quad_factors(spec):
            if p * p - 4 * q >= 0:
                continue
            try:
                params = new_params(-p, -q)
            except (ZeroCoefficientError, DegenerateError):
                continue
            if params not in out:
                out.append(params)
    return sorted(out, key=lambda s: (s.A, s.B))


@dataclass
class MultiplicityReport:
    window_end: int
    value_to_indices: dict
    max_multiplicity: int
    witnesses: tuple

    def indices_of_abs(self, value: int) -> tuple:
        idx = set(self.value_to_indices.get(value, ()))
        idx |= set(self.value_to_indices.get(-value, ()))
        return tuple(sorted(idx))


def _report_for(values: list) -> MultiplicityReport:
    where = {}
    for i, v in enumerate(values):
        where.setdefault(v, []).append(i)
    best = max(len(ix) for ix in where.values())
    witnesses = tuple(sorted(v for v, ix in where.items() if len(ix) == best))
    return MultiplicityReport(len(values) - 1, {v: tuple(ix) for v, ix in where.items()}, best, witnesses)


def multiplicity(params: SeqParams, kind: Kind, window_end: int) -> MultiplicityReport:
    """Exact value -> indices map over indices 0..window_end."""
    return _report_for(terms(params, kind, window_end + 1))


def multiplicity_with_initials(
    A: int, B: int, x0: int, x1: int, window_end: int
) -> MultiplicityReport:
    """Multiplicity over a window for arbitrary initial values (used to check
    recurrences written in other sign conventions)."""
    return _report_for(linear_terms(A, B, x0, x1, window_end + 1))


def from_subtraction_convention(a: int, b: int) -> tuple:
    """Map coefficients of x_n = a*x_{n-1} - b*x_{n-2} to this library's
    (A, B) convention x_n = A*x_{n-1} + B*x_{n-2}."""
    return (a, -b)


def mult_independence_check(params: SeqParams, bound: int = 12) -> bool:
    """True when no relation alpha^t = +-beta^s holds for 1 <= t, s <= bound.

    Valid parameters always pass: such a relation would force the root
    ratio to be a root of unity, which the constructor rejects.  Exposed as
    an oracle for exactly that guarantee.
    """
    a, b = alpha_beta(params)
    pow_a = a
    for _ in range(bound):
        pow_b = b
        for _ in range(bound):
            if (pow_a - pow_b).is_zero() or (pow_a + pow_b).is_zero():
                return False
            pow_b = pow_b * b
        pow_a = pow_a * a
    return True


@dataclass(frozen=True)
class SUnitBound:
    value: int
    digit_count: int
    leading_digits: str
    exponent10: int

    def decimal_string(self) -> str:
        return str(self.value)


def unit_equation_solution_bound(k: int, s: int, d: int = 2) -> int:
    """Upper bound 2^(35*b^3) * d^(6*b^2) with b = max(k+1, s) for the number
    of non-degenerate projective solutions of a weighted unit equation in
    k+1 unknowns over a rank-s group in a degree-d field."""
    b = max(k + 1, s)
    return 2 ** (35 * b**3) * d ** (6 * b**2)


def sunit_constant() -> SUnitBound:
    """The exact progression-count bound A(5,2) + 3*A(3,2) + 18*A(2,2) + 39.

    With d = 2 this is 2^7776 + 3*2^2336 + 18*2^999 + 39; the decimal data
    is derived from the exact integer, not hard-coded.
    """
    value = (
        unit_equation_solution_bound(5, 2)
        + 3 * unit_equation_solution_bound(3, 2)
        + 18 * unit_equation_solution_bound(2, 2)
        + 39
    )
    digits = str(value)
    return SUnitBound(value, len(digits), digits[:3], len(digits) - 1)
