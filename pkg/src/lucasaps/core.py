"""Sequence parameters, exact arithmetic in Q(sqrt(D)), and term generation.

A parameter pair (A, B) of nonzero integers defines two integer sequences by
the recurrence x_{n+2} = A*x_{n+1} + B*x_n: the first kind starts (0, 1), the
second kind starts (2, A).  The companion polynomial is X^2 - A*X - B with
roots alpha = (A + sqrt(D))/2 and beta = (A - sqrt(D))/2, D = A^2 + 4B.

Pairs whose root ratio alpha/beta is a root of unity are rejected at
construction.  Since the ratio lives in a quadratic field, the only possible
orders are 1, 2, 3, 4, 6, and the degenerate pairs are exactly those with
A^2 in {-B, -2B, -3B, -4B} (order 2 would force A = 0).  Everything built on
top of :func:`new_params` may therefore assume non-degeneracy.

Exact arithmetic uses :class:`Surd`, the ring of values (p + q*sqrt(D))/2
with p = q*D (mod 2).  This is the smallest ring containing alpha and beta
that is closed under addition, multiplication and conjugation, and it keeps
every comparison needed by the certification engine in integer arithmetic.
No floating point appears in any correctness-critical path.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt


class ZeroCoefficientError(ValueError):
    """A or B is zero."""


class DegenerateError(ValueError):
    """The root ratio alpha/beta is a root of unity."""

    def __init__(self, A: int, B: int, order: int):
        self.A = A
        self.B = B
        self.order = order
        super().__init__(
            f"pair ({A}, {B}) is degenerate: ratio alpha/beta has order {order}"
        )


# A^2 == -k*B  maps to the order of alpha/beta as a root of unity.
_UNITY_ORDER = {1: 3, 2: 4, 3: 6, 4: 1}


def degeneracy_order(A: int, B: int):
    """Order of alpha/beta as a root of unity, or None if non-degenerate."""
    for k, order in _UNITY_ORDER.items():
        if A * A == -k * B:
            return order
    return None


class Kind(Enum):
    FIRST = "first"
    SECOND = "second"

    def initial_values(self, A: int) -> tuple[int, int]:
        if self is Kind.FIRST:
            return (0, 1)
        return (2, A)


class Classification(Enum):
    REAL_DOMINANT = "real_dominant"
    COMPLEX_CONJUGATE = "complex_conjugate"


@dataclass(frozen=True)
class SeqParams:
    """Validated coefficient pair with discriminant D = A^2 + 4B."""

    A: int
    B: int
    D: int

    def __post_init__(self):
        if self.A == 0 or self.B == 0:
            raise ZeroCoefficientError(f"A and B must be nonzero, got ({self.A}, {self.B})")
        order = degeneracy_order(self.A, self.B)
        if order is not None:
            raise DegenerateError(self.A, self.B, order)
        if self.D != self.A * self.A + 4 * self.B:
            raise ValueError("D does not match A^2 + 4B")


def new_params(A: int, B: int) -> SeqParams:
    """Validate (A, B) and compute the discriminant.

    Raises ZeroCoefficientError or DegenerateError on bad input.
    """
    return SeqParams(A, B, A * A + 4 * B)


def classify(params: SeqParams) -> Classification:
    # D = 0 would mean A^2 = -4B, already rejected as degenerate, so there
    # is no third branch here.
    if params.D > 0:
        return Classification.REAL_DOMINANT
    return Classification.COMPLEX_CONJUGATE


def _sign(n) -> int:
    return (n > 0) - (n < 0)


@dataclass(frozen=True)
class Surd:
    """Exact value (p + q*sqrt(d))/2 with the parity invariant p = q*d (mod 2).

    When d is a perfect square the representation is normalized to q = 0, so
    dataclass equality and hashing agree with equality of values.
    """

    p: int
    q: int
    d: int

    def __post_init__(self):
        if self.q != 0 and self.d >= 0:
            r = isqrt(self.d)
            if r * r == self.d:
                object.__setattr__(self, "p", self.p + self.q * r)
                object.__setattr__(self, "q", 0)
        if (self.p - self.q * self.d) % 2 != 0:
            raise ValueError(f"parity invariant violated: ({self.p}, {self.q}, {self.d})")

    @classmethod
    def integer(cls, n: int, d: int) -> Surd:
        return cls(2 * n, 0, d)

    @classmethod
    def sqrt_disc(cls, d: int) -> Surd:
        return cls(0, 2, d)

    def _check(self, other: Surd):
        if self.d != other.d:
            raise ValueError("mixed discriminants")

    def __add__(self, other: Surd) -> Surd:
        self._check(other)
        return Surd(self.p + other.p, self.q + other.q, self.d)

    def __sub__(self, other: Surd) -> Surd:
        self._check(other)
        return Surd(self.p - other.p, self.q - other.q, self.d)

    def __neg__(self) -> Surd:
        return Surd(-self.p, -self.q, self.d)

    def __mul__(self, other: Surd) -> Surd:
        self._check(other)
        pp, rem1 = divmod(self.p * other.p + self.q * other.q * self.d, 2)
        qq, rem2 = divmod(self.p * other.q + self.q * other.p, 2)
        assert rem1 == 0 and rem2 == 0, "product left the half-integer ring"
        return Surd(pp, qq, self.d)

    def times_int(self, n: int) -> Surd:
        return Surd(self.p * n, self.q * n, self.d)

    def __pow__(self, n: int) -> Surd:
        if n < 0:
            raise ValueError("negative powers are not representable in this ring")
        out = Surd.integer(1, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> Surd:
        return Surd(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        """Field norm (p^2 - q^2 d)/4; equals |x|^2 when d < 0."""
        return Fraction(self.p * self.p - self.q * self.q * self.d, 4)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def is_integer(self) -> bool:
        return self.q == 0 and self.p % 2 == 0

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.p // 2

    def sign(self) -> int:
        """Exact sign; requires d >= 0 (real value)."""
        if self.d < 0:
            raise ValueError("sign of a complex surd is undefined")
        if self.q == 0:
            return _sign(self.p)
        if self.q > 0:
            if self.p >= 0:
                return 1
            return _sign(self.q * self.q * self.d - self.p * self.p)
        return -(-self).sign()

    def __abs__(self) -> Surd:
        if self.d < 0:
            raise ValueError("use norm() for complex absolute values")
        return self if self.sign() >= 0 else -self

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p // 2) if self.p % 2 == 0 else f"{self.p}/2"
        f, d0 = _square_split(self.d)
        p, qf = self.p, self.q * f
        if p % 2 == 0 and qf % 2 == 0:
            p, qf = p // 2, qf // 2
            den = ""
        else:
            den = "/2"
        head = str(p) if p else ""
        op = "+" if qf > 0 else "-"
        tail = f"{abs(qf)}*sqrt({d0})" if abs(qf) != 1 else f"sqrt({d0})"
        body = f"{head}{op}{tail}" if head else (f"-{tail}" if qf < 0 else tail)
        return f"({body}){den}" if den else body


def _square_split(d: int) -> tuple[int, int]:
    """d = f^2 * d0 with d0 squarefree (sign kept on d0)."""
    sign, n = _sign(d), abs(d)
    f = 1
    k = 2
    while k * k <= n:
        while n % (k * k) == 0:
            n //= k * k
            f *= k
        k += 1
    return f, sign * n


def surd_cmp_abs(x: Surd, y: Surd) -> int:
    """Exact comparison of |x| and |y|: -1, 0 or +1.

    For real discriminants the sign of x^2 - y^2 decides; for negative
    discriminants |x|^2 equals the field norm, an exact rational.
    """
    if x.d != y.d:
        raise ValueError("mixed discriminants")
    if x.d >= 0:
        return (x * x - y * y).sign()
    return _sign(x.norm() - y.norm())


def roots_of(A: int, B: int) -> tuple[Surd, Surd]:
    """Companion polynomial roots (A +- sqrt(A^2+4B))/2 without validation.

    Useful for degeneracy oracles that must inspect rejected pairs.
    """
    d = A * A + 4 * B
    return Surd(A, 1, d), Surd(A, -1, d)


def alpha_beta(params: SeqParams) -> tuple[Surd, Surd]:
    return roots_of(params.A, params.B)


def dominant_root(params: SeqParams) -> tuple[Surd, Surd]:
    """(gamma, delta) with |gamma| > |delta|; requires D > 0.

    Since alpha - beta = sqrt(D) > 0, the dominant root is alpha exactly
    when A > 0.
    """
    if params.D <= 0:
        raise ValueError("dominant root requires positive discriminant")
    a, b = alpha_beta(params)
    return (a, b) if params.A > 0 else (b, a)


class _TermCache:
    """Append-only memo of sequence terms for one (params, kind) context."""

    __slots__ = ("a", "b", "values", "lock")

    def __init__(self, A: int, B: int, kind: Kind):
        self.a = A
        self.b = B
        self.values = list(kind.initial_values(A))
        self.lock = threading.Lock()

    def upto(self, n: int) -> list:
        if len(self.values) <= n:
            with self.lock:
                while len(self.values) <= n:
                    self.values.append(
                        self.a * self.values[-1] + self.b * self.values[-2]
                    )
        return self.values


_caches: dict = {}
_caches_lock = threading.Lock()


def _cache_for(params: SeqParams, kind: Kind) -> _TermCache:
    key = (params.A, params.B, kind)
    cache = _caches.get(key)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(key, _TermCache(params.A, params.B, kind))
    return cache


def term(params: SeqParams, kind: Kind, n: int) -> int:
    """n-th term, exact; memoized per (params, kind)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return _cache_for(params, kind).upto(n)[n]


def terms(params: SeqParams, kind: Kind, count: int) -> list:
    """The first `count` terms as a fresh list."""
    if count <= 0:
        return []
    return _cache_for(params, kind).upto(count - 1)[:count]


def linear_terms(A: int, B: int, x0: int, x1: int, count: int) -> list:
    """Terms of x_{n+2} = A*x_{n+1} + B*x_n from arbitrary initial values."""
    out = [x0, x1]
    while len(out) < count:
        out.append(A * out[-1] + B * out[-2])
    return out[:count]


@dataclass(frozen=True)
class ClosedFormReport:
    ok: bool
    checked: int
    first_failure: int | None = None


def closed_form_check(params: SeqParams, kind: Kind, n_max: int) -> ClosedFormReport:
    """Verify the root power formulas against the recurrence up to n_max.

    First kind: alpha^n - beta^n == term(n) * (alpha - beta).
    Second kind: alpha^n + beta^n == term(n).
    """
    a, b = alpha_beta(params)
    diff = a - b
    pa = Surd.integer(1, params.D)
    pb = Surd.integer(1, params.D)
    for n in range(n_max + 1):
        t = term(params, kind, n)
        if kind is Kind.FIRST:
            ok = (pa - pb) == diff.times_int(t)
        else:
            ok = (pa + pb) == Surd.integer(t, params.D)
        if not ok:
            return ClosedFormReport(False, n, n)
        pa = pa * a
        pb = pb * b
    return ClosedFormReport(True, n_max + 1)
