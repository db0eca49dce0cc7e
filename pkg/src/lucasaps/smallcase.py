"""Symbolic case analysis for progressions with small largest index.

Writing terms as integer polynomials in (A, B) turns each index triple
k < l < m and each placement of the doubled term into one Diophantine
equation E(A, B) = 0.  The solver is complete for B-degree up to two:

  degree 0   integer roots in A; a root makes B free (a one-parameter row).
  degree 1   B = -e0(A)/e1(A); the divisibility e1(A) | e0(A) either holds
             identically (a curve B = w(A)) or pins A to divisors of an
             exact resultant bound.
  degree 2   B is integral only when Delta(A) = e1^2 - 4 e2 e0 is a perfect
             square.  Either Delta completes to an exact polynomial square,
             or it is trapped strictly between two consecutive squares for
             |A| beyond an explicit cutoff and the finite range below the
             cutoff is exhausted with integer square-root tests.

Two further elementary closures handle the equations whose discriminant
has a non-square leading coefficient (these only occur at largest indices
the growth argument already rules out for non-exceptional pairs, but the
solver does not rely on that):

  constant trick    when E(0, B) is a nonzero constant c, any solution has
                    A | c, because E(A, B) - E(0, B) is divisible by A.
  root location     under the dominant filter, substituting C = A^2 + 4B
                    gives a quadratic in C whose roots are provably < 1
                    for |A| beyond an explicit cutoff (sign analysis of
                    the value at C = 1 and of the vertex), so C >= 1 only
                    happens in a finite window.

Both closures extend to the cubic B-degrees that appear at the largest
reachable indices (the root location one needs the dominant filter), so
the solver is complete for every equation case_equations can produce
under that filter.  Without it the cubic cases with no constant trick are
genuinely out of reach and raise SqueezeUnresolvedError rather than
guessing.  Every reported solution re-substitutes to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt, lcm

from .core import Kind, degeneracy_order


class SqueezeUnresolvedError(ArithmeticError):
    """The discriminant could not be squeezed or solved for this equation."""


# ---------------------------------------------------------------------------
# Dense univariate integer polynomials: list of coefficients, index = degree.
# ---------------------------------------------------------------------------

def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def p_add(f, g):
    n = max(len(f), len(g))
    return _trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def p_sub(f, g):
    n = max(len(f), len(g))
    return _trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)])


def p_scale(f, c):
    return _trim([x * c for x in f]) if c else []


def p_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def p_eval(f, x):
    out = 0
    for c in reversed(f):
        out = out * x + c
    return out


def p_deg(f) -> int:
    return len(f) - 1  # -1 for the zero polynomial


def p_content(f) -> int:
    g = 0
    for c in f:
        g = gcd(g, c)
    return g or 1


def divisors(n: int) -> list:
    n = abs(n)
    if n == 0:
        raise ValueError("zero has no divisor list")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def integer_roots(f) -> list:
    """All integer roots; f must not be the zero polynomial."""
    if not f:
        raise ValueError("zero polynomial has every root")
    shift = 0
    while f[shift] == 0:
        shift += 1
    roots = {0} if shift else set()
    body = f[shift:]
    for d in divisors(body[0]):
        for a in (d, -d):
            if p_eval(body, a) == 0:
                roots.add(a)
    return sorted(roots)


def cauchy_positive_cut(f) -> int:
    """N >= 0 with f(x) > 0 for every integer x > N (requires lc > 0).

    Cauchy's bound: every real root has |x| <= 1 + max|c_i| / lc.
    """
    if not f or f[-1] <= 0:
        raise ValueError("leading coefficient must be positive")
    if len(f) == 1:
        return 0
    top = max(abs(c) for c in f[:-1])
    return 1 + (top + f[-1] - 1) // f[-1]


def _frac_divmod(num, den):
    """Polynomial division over Q; den must be nonzero."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    r = num[:]
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(den):
            break
        c = r[-1] / den[-1]
        k = len(r) - len(den)
        q[k] = c
        for i, d in enumerate(den):
            r[i + k] -= c * d
        r.pop()
    return q, r


def _frac_to_int(poly):
    """Clear denominators: returns (int_poly, t) with int_poly = t * poly."""
    if not poly:
        return [], 1
    t = 1
    for c in poly:
        t = lcm(t, Fraction(c).denominator)
    return [int(Fraction(c) * t) for c in poly], t


def frac_gcd(f, g):
    """Primitive integer gcd of two integer polynomials (Euclid over Q)."""
    a = [Fraction(c) for c in f]
    b = [Fraction(c) for c in g]
    while any(b):
        _, r = _frac_divmod(a, b)
        a, b = b, r
    if not any(a):
        return []
    ints, _ = _frac_to_int(a)
    cont = p_content(ints)
    ints = [c // cont for c in ints]
    return [-c for c in ints] if ints[-1] < 0 else ints


def resultant(f, g) -> int:
    """Sylvester resultant of two integer polynomials."""
    n, m = p_deg(f), p_deg(g)
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    mat = [[Fraction(0)] * size for _ in range(size)]
    for row in range(m):
        for i, c in enumerate(reversed(f)):
            mat[row][row + i] = Fraction(c)
    for row in range(n):
        for i, c in enumerate(reversed(g)):
            mat[m + row][row + i] = Fraction(c)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, size):
            factor = mat[r][col] * inv
            if factor:
                for cc in range(col, size):
                    mat[r][cc] -= factor * mat[col][cc]
    assert det.denominator == 1
    return int(det)


def p_str(f, var="A") -> str:
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += sign + body
    return out


# ---------------------------------------------------------------------------
# Sparse bivariate integer polynomials in (A, B).
# ---------------------------------------------------------------------------

class BivarPoly:
    """Integer polynomial sum(c[i,j] * A^i * B^j), zero coefficients dropped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        self._c = {k: v for k, v in dict(coeffs or {}).items() if v}

    @classmethod
    def constant(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    def items(self):
        return self._c.items()

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return BivarPoly(out)

    def __sub__(self, other):
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) - v
        return BivarPoly(out)

    def __neg__(self):
        return BivarPoly({k: -v for k, v in self._c.items()})

    def times(self, c: int) -> "BivarPoly":
        return BivarPoly({k: v * c for k, v in self._c.items()})

    def __mul__(self, other):
        out = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
        return BivarPoly(out)

    def evaluate(self, a: int, b: int) -> int:
        return sum(v * a**i * b**j for (i, j), v in self._c.items())

    @property
    def deg_a(self) -> int:
        return max((i for (i, _) in self._c), default=-1)

    @property
    def deg_b(self) -> int:
        return max((j for (_, j) in self._c), default=-1)

    def b_coefficients(self) -> list:
        """Coefficient of B^j as a dense polynomial in A, for j = 0..deg_b."""
        out = [[0] * (self.deg_a + 1) for _ in range(self.deg_b + 1)]
        for (i, j), v in self._c.items():
            out[j][i] += v
        return [_trim(row) for row in out]

    def sign_normalized(self) -> "BivarPoly":
        if not self._c:
            return self
        lead = max(self._c, key=lambda k: (k[1], k[0]))
        return self if self._c[lead] > 0 else -self

    def __str__(self):
        if not self._c:
            return "0"
        keys = sorted(self._c, key=lambda k: (k[1], k[0]), reverse=True)
        parts = []
        for i, j in keys:
            c = self._c[(i, j)]
            mono = "*".join(
                ([f"A^{i}" if i > 1 else "A"] if i else [])
                + ([f"B^{j}" if j > 1 else "B"] if j else [])
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += sign + body
        return out


_A = BivarPoly({(1, 0): 1})
_B = BivarPoly({(0, 1): 1})


def poly_term(kind: Kind, n: int) -> BivarPoly:
    """The n-th term as an exact polynomial in (A, B)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if kind is Kind.FIRST:
        seq = [BivarPoly(), BivarPoly.constant(1)]
    else:
        seq = [BivarPoly.constant(2), _A]
    while len(seq) <= n:
        seq.append(_A * seq[-1] + _B * seq[-2])
    return seq[n]


@dataclass(frozen=True)
class CaseEquation:
    """One equation E(A, B) = 0 for a sorted index triple k < l < m.

    variant 1 doubles the middle term, variant 2 the smallest, variant 3 the
    largest; aliases lists other (triple, variant) pairs whose polynomial
    matched this one up to sign.
    """

    kind: Kind
    triple: tuple
    variant: int
    poly: BivarPoly
    aliases: tuple = ()

    def ap_roles(self) -> tuple:
        """Canonical progression-index triple (outer, doubled, outer)."""
        k, l, m = self.triple
        if self.variant == 1:
            return (k, l, m)
        if self.variant == 2:
            return (l, k, m)
        return (k, m, l)


def _variant_poly(kind: Kind, k: int, l: int, m: int, variant: int) -> BivarPoly:
    uk, ul, um = poly_term(kind, k), poly_term(kind, l), poly_term(kind, m)
    if variant == 1:
        return uk - ul.times(2) + um
    if variant == 2:
        return ul - uk.times(2) + um
    return uk - um.times(2) + ul


def case_equations(kind: Kind, m_cap: int) -> list:
    """All equations for triples k < l < m <= m_cap, deduplicated up to sign."""
    if m_cap > 7:
        raise ValueError("index cap is 7")
    by_key = {}
    order = []
    for k, l, m in combinations(range(m_cap + 1), 3):
        for variant in (1, 2, 3):
            poly = _variant_poly(kind, k, l, m, variant)
            key = poly.sign_normalized()
            if key in by_key:
                idx = by_key[key]
                prior = order[idx]
                order[idx] = CaseEquation(
                    kind, prior.triple, prior.variant, prior.poly,
                    prior.aliases + (((k, l, m), variant),),
                )
            else:
                by_key[key] = len(order)
                order.append(CaseEquation(kind, (k, l, m), variant, poly))
    return order


# ---------------------------------------------------------------------------
# Domain filter and solution containers.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DomainFilter:
    """Always requires A*B != 0 and non-degeneracy; optionally D > 0."""

    dominant: bool = True

    def admits(self, A: int, B: int) -> bool:
        if A == 0 or B == 0 or degeneracy_order(A, B) is not None:
            return False
        if self.dominant and A * A + 4 * B <= 0:
            return False
        return True

    def b_condition(self, A: int):
        """(b_min, exclusions) for B free at fixed A; b_min None if unbounded."""
        if self.dominant:
            b_min = -(A * A) // 4 + 1  # least integer B with A^2 + 4B > 0
            excl = (0,) if b_min <= 0 else ()
            while b_min in excl:
                b_min += 1
            excl = tuple(e for e in excl if e > b_min)
            return b_min, excl
        excl = {0}
        for kk in (1, 2, 3, 4):
            if (A * A) % kk == 0:
                excl.add(-(A * A) // kk)
        return None, tuple(sorted(excl))


@dataclass(frozen=True)
class SporadicSolution:
    A: int
    B: int
    triple: tuple  # canonical progression roles (outer, doubled, outer)
    source: tuple  # (sorted triple, variant)


@dataclass(frozen=True)
class BFamilySolution:
    """A fixed, B free subject to b_min and exclusions."""

    A: int
    b_min: int | None
    exclusions: tuple
    triple: tuple
    source: tuple

    def admits_b(self, B: int) -> bool:
        if B in self.exclusions:
            return False
        return self.b_min is None or B >= self.b_min


@dataclass(frozen=True)
class CurveFamilySolution:
    """B = num(A)/den on residue classes of A mod den."""

    num: tuple
    den: int
    residues: tuple
    triple: tuple
    source: tuple
    a_exclusions: tuple = ()

    def admits_a(self, a: int) -> bool:
        return a % self.den in self.residues and a not in self.a_exclusions

    def b_at(self, a: int) -> int:
        val = p_eval(list(self.num), a)
        assert val % self.den == 0
        return val // self.den


@dataclass
class EquationReport:
    triple: tuple
    variant: int
    b_degree: int
    strategy: str
    candidates: tuple = ()
    delta: tuple = ()
    delta_square_root: tuple = ()  # (coeffs, denominator) when exact
    branches: list = field(default_factory=list)
    squeeze: list = field(default_factory=list)
    square_hits: tuple = ()
    notes: list = field(default_factory=list)


@dataclass
class CaseSolution:
    sporadics: list
    b_families: list
    curves: list
    report: EquationReport


@dataclass
class SolutionSet:
    kind: Kind
    m_cap: int
    dominant: bool
    sporadics: tuple
    b_families: tuple
    curves: tuple
    reports: tuple

    def grid_instances(self, a_lo, a_hi, b_lo, b_hi, max_index=None):
        """All (A, B, triple) asserted inside the grid box."""
        filt = DomainFilter(self.dominant)
        out = set()

        def keep(trip):
            return max_index is None or max(trip) <= max_index

        for s in self.sporadics:
            if a_lo <= s.A <= a_hi and b_lo <= s.B <= b_hi and keep(s.triple):
                out.add((s.A, s.B, s.triple))
        for f in self.b_families:
            if not (a_lo <= f.A <= a_hi) or not keep(f.triple):
                continue
            for B in range(b_lo, b_hi + 1):
                if f.admits_b(B) and filt.admits(f.A, B):
                    out.add((f.A, B, f.triple))
        for c in self.curves:
            if not keep(c.triple):
                continue
            for a in range(a_lo, a_hi + 1):
                if not c.admits_a(a):
                    continue
                B = c.b_at(a)
                if b_lo <= B <= b_hi and filt.admits(a, B):
                    out.add((a, B, c.triple))
        return out

    def to_json_dict(self):
        return {
            "kind": self.kind.value,
            "maxIndex": self.m_cap,
            "dominantFilter": self.dominant,
            "sporadic": [
                {"A": s.A, "B": s.B, "triple": list(s.triple)} for s in self.sporadics
            ],
            "bFamilies": [
                {
                    "A": f.A,
                    "bMin": f.b_min,
                    "bExclusions": list(f.exclusions),
                    "triple": list(f.triple),
                }
                for f in self.b_families
            ],
            "curveFamilies": [
                {
                    "bNumerator": p_str(list(c.num)),
                    "denominator": c.den,
                    "residues": list(c.residues),
                    "triple": list(c.triple),
                }
                for c in self.curves
            ],
            "equationCount": len(self.reports),
        }


# ---------------------------------------------------------------------------
# Divisibility machinery: integer a with den(a) | num(a).
# ---------------------------------------------------------------------------

@dataclass
class DivisibilityOutcome:
    exact_quotient: list | None  # Fraction coefficients when den | num over Q
    candidates: tuple = ()


def divisibility_candidates(den, num) -> DivisibilityOutcome:
    """Complete candidate analysis for den(A) | num(A) at integers.

    When den divides num over Q the quotient settles every A.  Otherwise
    split off the gcd; for the coprime parts, gcd(h1(a), h0(a)) divides
    Res(h1, h0), so h1(a) | content(h0) * Res(h1, h0) and |h1(a)| runs over
    the divisors of an explicit nonzero integer.  When den has no constant
    term but num does, a | num(0) is sharper; both candidate sets are
    complete so they are intersected when both apply.  Callers re-verify
    every candidate, so returning a superset is safe.
    """
    quotient, rem = _frac_divmod(num, den)
    if not any(rem):
        return DivisibilityOutcome(quotient)
    g = frac_gcd(den, num)
    h1f, r1 = _frac_divmod(den, g)
    h0f, r0 = _frac_divmod(num, g)
    assert not any(r1) and not any(r0)
    h1, _ = _frac_to_int(h1f)
    h0, _ = _frac_to_int(h0f)
    bound = p_content(h0) * resultant(h1, h0)
    assert bound != 0, "coprime parts cannot share a root"
    cands = set()
    for d in divisors(bound):
        for target in (d, -d):
            probe = p_sub(h1, [target])
            if probe:
                cands.update(integer_roots(probe))
    if den[0] == 0 and num and num[0] != 0:
        sharp = set()
        for d in divisors(num[0]):
            sharp.update((d, -d))
        cands &= sharp
    return DivisibilityOutcome(None, tuple(sorted(cands)))


def _curve_members(w_frac, filt: DomainFilter, triple, source, report):
    """Resolve B = w(A) (w with rational coefficients) under the filter.

    Returns (sporadics, curve_families).  Under the dominant filter the
    admissible A region is finite whenever t*A^2 + 4*num has negative
    leading coefficient, and is enumerated outright; otherwise the curve is
    kept as an infinite family object.
    """
    wn, t = _frac_to_int(w_frac)
    label = p_str(wn) + (f"/{t}" if t > 1 else "")
    if not wn:
        report.branches.append({"b": "0", "outcome": "rejected: B = 0"})
        return [], []
    residues = tuple(r for r in range(t) if p_eval(wn, r) % t == 0)
    if not residues:
        report.branches.append({"b": label, "outcome": "rejected: never an integer"})
        return [], []
    for kk in (1, 2, 3, 4):
        if not p_add(p_scale([0, 0, 1], t), p_scale(wn, kk)):
            report.branches.append({"b": label, "outcome": "rejected: degenerate for every A"})
            return [], []
    exclusions = set(integer_roots(wn)) | {0}
    for kk in (1, 2, 3, 4):
        exclusions.update(integer_roots(p_add(p_scale([0, 0, 1], t), p_scale(wn, kk))))
    if filt.dominant:
        dnum = p_add(p_scale([0, 0, 1], t), p_scale(wn, 4))  # t * (A^2 + 4B)
        # a finite admissible window needs even degree: an odd-degree
        # discriminant polynomial is positive toward one infinity
        if dnum and dnum[-1] < 0 and p_deg(dnum) % 2 == 0:
            cut = cauchy_positive_cut(p_scale(dnum, -1))
            sporadics = []
            for a in range(-cut, cut + 1):
                if a % t not in residues or p_eval(dnum, a) <= 0:
                    continue
                B = p_eval(wn, a) // t
                if filt.admits(a, B):
                    sporadics.append(SporadicSolution(a, B, triple, source))
                    report.branches.append({"b": label, "a": a, "B": B, "outcome": "admitted"})
            if not sporadics:
                report.branches.append(
                    {"b": label, "outcome": "rejected: positive discriminant fails for every A"}
                )
            return sporadics, []
        report.branches.append({"b": label, "outcome": "infinite curve family"})
    else:
        report.branches.append({"b": label, "outcome": "curve family"})
    return [], [
        CurveFamilySolution(tuple(wn), t, residues, triple, source, tuple(sorted(exclusions)))
    ]


def _linear_branch(den, num, filt, triple, source, report):
    """All admitted (A, B) with B = num(A)/den(A); den nonzero polynomial.

    Returns (sporadics, b_families, curves, candidates).
    """
    sporadics, b_families, curves = [], [], []
    for a in integer_roots(den):
        if (p_eval(num, a) if num else 0) == 0:
            if a != 0:
                b_min, excl = filt.b_condition(a)
                b_families.append(BFamilySolution(a, b_min, excl, triple, source))
                report.branches.append({"a": a, "outcome": "B free (both sides vanish)"})
        else:
            report.branches.append({"a": a, "outcome": "no solution at denominator root"})
    if not num:
        return sporadics, b_families, curves, ()
    out = divisibility_candidates(den, num)
    if out.exact_quotient is not None:
        s, c = _curve_members(out.exact_quotient, filt, triple, source, report)
        return s, b_families, c, ()
    for a in out.candidates:
        da = p_eval(den, a)
        if da == 0:
            continue
        na = p_eval(num, a)
        if na % da:
            report.branches.append({"a": a, "outcome": "rejected: B not integral"})
            continue
        B = na // da
        if filt.admits(a, B):
            sporadics.append(SporadicSolution(a, B, triple, source))
            report.branches.append({"a": a, "B": B, "outcome": "admitted"})
        else:
            report.branches.append({"a": a, "B": B, "outcome": "rejected by filter"})
    return sporadics, b_families, curves, out.candidates


def _poly_sqrt(delta):
    """Fraction polynomial q with deg(delta - q^2) < deg(q), or None.

    Needs even degree and a positive perfect-square leading coefficient;
    the top half of the coefficients is matched greedily.
    """
    d = p_deg(delta)
    if d < 0 or d % 2:
        return None
    lc = delta[-1]
    if lc <= 0 or isqrt(lc) ** 2 != lc:
        return None
    h = d // 2
    q = [Fraction(0)] * (h + 1)
    q[h] = Fraction(isqrt(lc))
    for j in range(1, h + 1):
        target = Fraction(delta[2 * h - j])
        acc = Fraction(0)
        for u in range(h - j + 1, h + 1):
            v = 2 * h - j - u
            if h - j < v <= h:
                acc += q[u] * q[v]
        q[h - j] = (target - acc) / (2 * q[h])
    return q


def _substitute_side(poly, side):
    return _trim([c * (side ** i) for i, c in enumerate(poly)])


def _squeeze_side(delta, side, widen, report):
    """Exhaustion cutoff for one sign side of A, or None.

    Beyond the cutoff, delta(side * x) is negative or strictly between the
    squares of two consecutive integers, hence never a perfect square.
    Returns None when this side has no squeeze (odd degree or non-square
    leading coefficient); the caller falls back to other closures.
    """
    ds = _substitute_side(delta, side)
    if not ds:
        raise SqueezeUnresolvedError("identically zero discriminant reached the squeeze")
    if p_deg(ds) == 0:
        if ds[0] < 0 or isqrt(ds[0]) ** 2 != ds[0]:
            report.squeeze.append({"side": side, "cut": 0, "why": "constant non-square"})
            return 0
        raise SqueezeUnresolvedError("constant square discriminant escaped the square branch")
    if ds[-1] < 0:
        cut = cauchy_positive_cut(p_scale(ds, -1))
        report.squeeze.append({"side": side, "cut": cut, "why": "negative beyond cut"})
        return cut
    if p_deg(ds) % 2:
        return None
    q = _poly_sqrt(ds)
    if q is None:
        return None
    G, t = _frac_to_int(q)
    P = p_scale(ds, t * t)
    r = p_sub(P, p_mul(G, G))
    assert r, "exact square escaped the square branch"
    # t^2 * delta is squeezed between (G+j)^2 and (G+j+1)^2 once both
    # difference polynomials and G+j are positive; scaling by t^2 preserves
    # being a perfect square in both directions.
    for j in range(-widen, widen + 1):
        low = p_sub(P, p_mul(p_add(G, [j]), p_add(G, [j])))
        high = p_sub(p_mul(p_add(G, [j + 1]), p_add(G, [j + 1])), P)
        if not low or not high or low[-1] <= 0 or high[-1] <= 0:
            continue
        cut = max(
            cauchy_positive_cut(low),
            cauchy_positive_cut(high),
            cauchy_positive_cut(p_add(G, [j])) if p_deg(p_add(G, [j])) >= 1 else 0,
        )
        report.squeeze.append(
            {"side": side, "cut": cut, "shift": j,
             "squareRoot": p_str(G) + (f"/{t}" if t > 1 else "")}
        )
        return cut
    raise SqueezeUnresolvedError("no bounding square pair within the widening limit")


def _binomial(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _root_location_side(bcs, side, report):
    """Dominant-filter cutoff from the C = A^2 + 4B substitution, or None.

    With B = (C - A^2)/4, 4^d * E becomes a C-polynomial P whose value
    region C >= 1 must be root-free for large |A|: writing
    Q(x) = P(1 + x), it suffices that every coefficient of s * Q (s the
    eventual sign of the leading C-coefficient on this side) is eventually
    non-negative with a positive constant term.  Cauchy bounds turn
    "eventually" into an explicit cutoff; below it the caller exhausts.
    """
    d = len(bcs) - 1
    a2 = [0, 0, 1]
    coef_c = [[] for _ in range(d + 1)]
    for j, ej in enumerate(bcs):
        if not ej:
            continue
        scaled = p_scale(ej, 4 ** (d - j))
        for i in range(j + 1):
            # (C - A^2)^j contributes binom(j, i) * (-A^2)^(j-i) to C^i
            piece = p_scale(scaled, _binomial(j, i) * (-1) ** (j - i))
            for _ in range(j - i):
                piece = p_mul(piece, a2)
            coef_c[i] = p_add(coef_c[i], piece)
    q_coeffs = []
    for r in range(d + 1):
        acc = []
        for i in range(r, d + 1):
            acc = p_add(acc, p_scale(coef_c[i], _binomial(i, r)))
        q_coeffs.append(acc)
    lead = _substitute_side(coef_c[d], side)
    if not lead:
        return None
    s = 1 if lead[-1] > 0 else -1
    if not q_coeffs[0]:
        return None  # C = 1 solves the equation for every A
    cut = 0
    for r, q in enumerate(q_coeffs):
        qs = _substitute_side(p_scale(q, s), side)
        if not qs:
            continue
        if qs[-1] <= 0:
            return None
        cut = max(cut, cauchy_positive_cut(qs))
    report.squeeze.append(
        {"side": side, "cut": cut, "why": "discriminant-variable roots below 1"}
    )
    return cut


def _bisect_int_roots(f, lo, hi):
    """Integer roots of f on [lo, hi] where f is monotone there (exact)."""
    roots = []
    flo, fhi = p_eval(f, lo), p_eval(f, hi)
    if flo == 0:
        roots.append(lo)
    if fhi == 0 and hi != lo:
        roots.append(hi)
    if flo * fhi >= 0:
        return roots
    sign_lo = 1 if flo > 0 else -1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        fm = p_eval(f, mid)
        if fm == 0:
            return roots + [mid]
        if (1 if fm > 0 else -1) == sign_lo:
            lo = mid
        else:
            hi = mid
    return roots


def _int_roots_small_degree(coeffs):
    """Exact integer roots for degree <= 3 without factoring the constant.

    Coefficients may be astronomically large (they come from evaluating the
    case polynomials at big A), so divisor enumeration is avoided: roots are
    isolated between the critical points and found by integer bisection.
    """
    f = _trim(list(coeffs))
    d = p_deg(f)
    if d <= 0:
        return []
    if d == 1:
        c0, c1 = f[0], f[1]
        return [-c0 // c1] if c0 % c1 == 0 else []
    if d == 2:
        c0, c1, c2 = f
        disc = c1 * c1 - 4 * c2 * c0
        if disc < 0 or isqrt(disc) ** 2 != disc:
            return []
        w = isqrt(disc)
        out = set()
        for pm in (w, -w):
            if (-c1 + pm) % (2 * c2) == 0:
                out.add((-c1 + pm) // (2 * c2))
        return sorted(out)
    assert d == 3, "only degrees up to 3 are needed for B-solves"
    bound = 1 + max(abs(c) for c in f[:-1]) // abs(f[-1]) + 1
    # critical points: roots of f' = 3*c3*x^2 + 2*c2*x + c1
    c1, c2, c3 = f[1], f[2], f[3]
    disc = 4 * c2 * c2 - 12 * c3 * c1
    breaks = [-bound, bound]
    if disc > 0:
        w = isqrt(disc)
        for pm in (w, -w):
            # floor of (-2*c2 + pm) / (6*c3), exactly
            numer, denom = -2 * c2 + pm, 6 * c3
            if denom < 0:
                numer, denom = -numer, -denom
            breaks.append(numer // denom)
            breaks.append(numer // denom + 1)
    breaks = sorted({b for b in breaks if -bound <= b <= bound})
    roots = set()
    for lo, hi in zip(breaks, breaks[1:]):
        roots.update(_bisect_int_roots(f, lo, hi))
    return sorted(roots)


def _solve_b_univariate(a, bcs, filt, triple, source, report):
    """All admitted (a, B) for one fixed A = a; returns (sporadics, families)."""
    coeffs = _trim([p_eval(bc, a) for bc in bcs])
    if not coeffs:
        if a == 0:
            return [], []
        b_min, excl = filt.b_condition(a)
        report.branches.append({"a": a, "outcome": "B free (equation vanishes)"})
        return [], [BFamilySolution(a, b_min, excl, triple, source)]
    if len(coeffs) == 1:
        return [], []
    sporadics = []
    for B in _int_roots_small_degree(coeffs):
        if filt.admits(a, B):
            sporadics.append(SporadicSolution(a, B, triple, source))
            report.branches.append({"a": a, "B": B, "outcome": "admitted"})
    return sporadics, []


def _constant_trick(bcs, filt, triple, source, report):
    """Complete solve via A | E(0, B) when that value is a nonzero constant.

    Returns (sporadics, b_families) or None when the trick does not apply.
    """
    at_zero = _trim([bc[0] if bc else 0 for bc in bcs])
    if len(at_zero) != 1:
        return None
    c = at_zero[0]
    report.notes.append(f"E(0, B) = {c}: any solution has A | {abs(c)}")
    candidates = []
    for d in divisors(c):
        candidates.extend((d, -d))
    report.candidates = tuple(sorted(set(candidates)))
    sporadics, b_families = [], []
    for a in report.candidates:
        s, f = _solve_b_univariate(a, bcs, filt, triple, source, report)
        sporadics.extend(s)
        b_families.extend(f)
    return sporadics, b_families


def solve_case(eq: CaseEquation, filt: DomainFilter | None = None, widen: int = 6) -> CaseSolution:
    """Complete integer solutions of one case equation under the filter.

    Raises SqueezeUnresolvedError when no closure applies: never for any
    equation with largest index at most 6, nor for any index reachable by
    case_equations under the dominant filter (the root-location closure
    covers the cubic B-degrees there); without the dominant filter the
    cubic cases are genuinely out of reach unless the constant trick fires.
    """
    filt = filt or DomainFilter()
    bcs = eq.poly.b_coefficients()
    deg_b = len(bcs) - 1
    triple = eq.ap_roles()
    source = (eq.triple, eq.variant)
    report = EquationReport(eq.triple, eq.variant, deg_b, "")
    sporadics, b_families, curves = [], [], []

    if deg_b < 0:
        raise ValueError("identically zero case equation")

    if deg_b == 0:
        report.strategy = "constant_in_b"
        roots = integer_roots(bcs[0])
        report.candidates = tuple(roots)
        for a in roots:
            if a == 0:
                report.branches.append({"a": 0, "outcome": "rejected: A = 0"})
                continue
            b_min, excl = filt.b_condition(a)
            b_families.append(BFamilySolution(a, b_min, excl, triple, source))
            report.branches.append({"a": a, "outcome": "B free"})
        return CaseSolution(sporadics, b_families, curves, report)

    if deg_b == 1:
        report.strategy = "linear_in_b"
        e1, e0 = bcs[1], bcs[0]
        if not e0:
            # E = e1(A) * B: B = 0 is filtered out; roots of e1 free B.
            report.notes.append("constant coefficient vanishes; only B = 0 off the roots")
            for a in integer_roots(e1):
                if a != 0:
                    b_min, excl = filt.b_condition(a)
                    b_families.append(BFamilySolution(a, b_min, excl, triple, source))
                    report.branches.append({"a": a, "outcome": "B free"})
            return CaseSolution(sporadics, b_families, curves, report)
        s, f, c, cands = _linear_branch(e1, p_scale(e0, -1), filt, triple, source, report)
        report.candidates = cands
        return CaseSolution(s, f, c, report)

    if deg_b == 2:
        report.strategy = "quadratic_in_b"
        e2, e1, e0 = bcs[2], bcs[1], bcs[0]
        for a in integer_roots(e2):
            e1a, e0a = p_eval(e1, a), p_eval(e0, a)
            if e1a == 0 and e0a == 0:
                if a != 0:
                    b_min, excl = filt.b_condition(a)
                    b_families.append(BFamilySolution(a, b_min, excl, triple, source))
                    report.branches.append({"a": a, "outcome": "B free (all coefficients vanish)"})
            elif e1a != 0 and e0a % e1a == 0:
                B = -e0a // e1a
                if filt.admits(a, B):
                    sporadics.append(SporadicSolution(a, B, triple, source))
                    report.branches.append({"a": a, "B": B, "outcome": "admitted (degenerate quadratic)"})
        delta = p_sub(p_mul(e1, e1), p_scale(p_mul(e2, e0), 4))
        report.delta = tuple(delta)
        if not delta:
            s, f, c, cands = _linear_branch(
                p_scale(e2, 2), p_scale(e1, -1), filt, triple, source, report
            )
            report.candidates = cands
            report.notes.append("discriminant vanishes identically; double root in B")
            return CaseSolution(sporadics + s, b_families + f, curves + c, report)
        q = _poly_sqrt(delta)
        if q is not None:
            G, t = _frac_to_int(q)
            if not p_sub(p_scale(delta, t * t), p_mul(G, G)):
                report.delta_square_root = (tuple(G), t)
                den = p_scale(e2, 2 * t)
                all_cands = set()
                for sign_branch in (1, -1):
                    num = p_add(p_scale(e1, -t), p_scale(G, sign_branch))
                    if not num:
                        report.branches.append({"b": "0", "outcome": "rejected: B = 0"})
                        continue
                    s, f, c, cands = _linear_branch(den, num, filt, triple, source, report)
                    all_cands.update(cands)
                    sporadics.extend(s)
                    b_families.extend(f)
                    curves.extend(c)
                report.candidates = tuple(sorted(all_cands))
                return CaseSolution(sporadics, b_families, curves, report)
        cuts = {}
        for side in (1, -1):
            cut = _squeeze_side(delta, side, widen, report)
            if cut is None and filt.dominant:
                cut = _root_location_side(bcs, side, report)
            cuts[side] = cut
        if any(c is None for c in cuts.values()):
            trick = _constant_trick(bcs, filt, triple, source, report)
            if trick is None:
                raise SqueezeUnresolvedError(
                    f"triple {eq.triple} variant {eq.variant}: discriminant "
                    f"{p_str(delta)} admits no squeeze, root location or constant trick"
                )
            report.strategy = "quadratic_in_b_constant_trick"
            s, f = trick
            return CaseSolution(sporadics + s, b_families + f, curves, report)
        hits = []
        e2_roots = set(integer_roots(e2))
        for side in (1, -1):
            for x in range(0, cuts[side] + 1):
                a = side * x
                if side < 0 and x == 0:
                    continue
                da = p_eval(delta, a)
                if da < 0 or isqrt(da) ** 2 != da:
                    continue
                hits.append(a)
                if a in e2_roots:
                    continue
                w = isqrt(da)
                e2a, e1a, e0a = p_eval(e2, a), p_eval(e1, a), p_eval(e0, a)
                for root_part in {w, -w}:
                    if (-e1a + root_part) % (2 * e2a):
                        continue
                    B = (-e1a + root_part) // (2 * e2a)
                    if filt.admits(a, B):
                        sporadics.append(SporadicSolution(a, B, triple, source))
                        report.branches.append({"a": a, "B": B, "outcome": "admitted"})
                    else:
                        report.branches.append({"a": a, "B": B, "outcome": "rejected by filter"})
        report.square_hits = tuple(sorted(set(hits)))
        return CaseSolution(sporadics, b_families, curves, report)

    report.strategy = "cubic_in_b" if deg_b == 3 else f"degree_{deg_b}_in_b"
    trick = _constant_trick(bcs, filt, triple, source, report)
    if trick is not None:
        report.strategy += "_constant_trick"
        s, f = trick
        return CaseSolution(s, f, curves, report)
    if filt.dominant:
        cuts = {side: _root_location_side(bcs, side, report) for side in (1, -1)}
        if all(c is not None for c in cuts.values()):
            report.strategy += "_root_location"
            for side in (1, -1):
                for x in range(0, cuts[side] + 1):
                    a = side * x
                    if side < 0 and x == 0:
                        continue
                    s, f = _solve_b_univariate(a, bcs, filt, triple, source, report)
                    sporadics.extend(s)
                    b_families.extend(f)
            return CaseSolution(sporadics, b_families, curves, report)
    raise SqueezeUnresolvedError(
        f"B-degree {deg_b} for triple {eq.triple} variant {eq.variant}: "
        "outside the squeeze, root-location and constant-trick toolbox"
    )


def solve_all(kind: Kind, m_cap: int, filt: DomainFilter | None = None) -> SolutionSet:
    """Merge the complete solutions of every case equation up to m_cap.

    Every sporadic solution and three witnesses per family re-substitute to
    zero in their source equation before the set is returned.
    """
    filt = filt or DomainFilter()
    sporadics = {}
    b_families = {}
    curves = []
    reports = []
    for eq in case_equations(kind, m_cap):
        sol = solve_case(eq, filt)
        reports.append(sol.report)
        for s in sol.sporadics:
            assert eq.poly.evaluate(s.A, s.B) == 0
            sporadics.setdefault((s.A, s.B, s.triple), s)
        for f in sol.b_families:
            witnesses = []
            b = f.b_min if f.b_min is not None else -3
            while len(witnesses) < 3:
                if f.admits_b(b):
                    witnesses.append(b)
                b += 1
            for b in witnesses:
                assert eq.poly.evaluate(f.A, b) == 0
            b_families.setdefault((f.A, f.triple), f)
        for c in sol.curves:
            witnesses = []
            a = 1
            while len(witnesses) < 3 and a < 1000:
                for cand in (a, -a):
                    if c.admits_a(cand):
                        witnesses.append(cand)
                a += 1
            for cand in witnesses:
                assert eq.poly.evaluate(cand, c.b_at(cand)) == 0
            curves.append(c)
    return SolutionSet(
        kind,
        m_cap,
        filt.dominant,
        tuple(sorted(sporadics.values(), key=lambda s: (s.A, s.B, s.triple))),
        tuple(sorted(b_families.values(), key=lambda f: (f.A, f.triple))),
        tuple(curves),
        tuple(reports),
    )
