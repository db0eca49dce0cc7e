"""Three-term progression predicate, windowed enumeration, and index families.

A triple of indices (k, l, m) denotes the progression (x_k, x_l, x_m) with
2*x_l = x_k + x_m and pairwise distinct values.  Both monotone directions are
admitted; (k, l, m) and (m, l, k) name the same progression and the canonical
representative has k < m.

Families are affine index patterns (a + b*t) certified by an annihilator
argument: s_t = x_{k(t)} - 2*x_{l(t)} + x_{m(t)} is a fixed linear
combination of geometric sequences in t, so vanishing on enough consecutive
t forces s_t = 0 identically.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .core import Kind, SeqParams, term, terms


class CertificateFailureError(AssertionError):
    """An identity certificate window contained a nonzero value."""


@dataclass(frozen=True)
class APTriple:
    """Canonical progression witness: indices (k, l, m) plus their values."""

    k: int
    l: int
    m: int
    values: tuple

    def __post_init__(self):
        vk, vl, vm = self.values
        if len({self.k, self.l, self.m}) != 3:
            raise ValueError(f"indices must be distinct: {self.indices}")
        if self.k >= self.m:
            raise ValueError(f"canonical form requires k < m: {self.indices}")
        if 2 * vl != vk + vm:
            raise ValueError(f"not a progression: {self.values}")
        if vk == vl or vl == vm or vk == vm:
            raise ValueError(f"trivial progression: {self.values}")

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.k, self.l, self.m)

    @property
    def max_index(self) -> int:
        return max(self.k, self.l, self.m)


def is_ap(x, y, z) -> bool:
    """True iff 2y = x + z with x, y, z pairwise distinct."""
    return 2 * y == x + z and x != y and y != z and x != z


def canonical_indices(k: int, l: int, m: int) -> tuple[int, int, int]:
    """Collapse (k, l, m) and its reversal to the representative with k < m."""
    return (k, l, m) if k < m else (m, l, k)


def make_triple(params: SeqParams, kind: Kind, k: int, l: int, m: int) -> APTriple:
    k, l, m = canonical_indices(k, l, m)
    vals = (term(params, kind, k), term(params, kind, l), term(params, kind, m))
    return APTriple(k, l, m, vals)


def find_aps(params: SeqParams, kind: Kind, n_max: int) -> list[APTriple]:
    """All canonical progressions with indices <= n_max, sorted by (m, k, l).

    Uses a value -> indices map so each middle/outer combination costs one
    dictionary probe; repeated values (multiplicity is at most 3) just fan
    out over the short index list.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    vals = terms(params, kind, n_max + 1)
    where = defaultdict(list)
    for i, v in enumerate(vals):
        where[v].append(i)

    out = []
    for l in range(n_max + 1):
        target = 2 * vals[l]
        for k in range(n_max + 1):
            if k == l:
                continue
            for m in where.get(target - vals[k], ()):
                if m <= k or m == l:
                    continue
                vk, vl, vm = vals[k], vals[l], vals[m]
                if vk == vl or vl == vm or vk == vm:
                    continue
                out.append(APTriple(k, l, m, (vk, vl, vm)))
    out.sort(key=lambda t: (t.m, t.k, t.l))
    return out


@dataclass(frozen=True)
class APFamily:
    """Affine index pattern t -> (k, l, m) valid for every t >= t_min.

    Each form is (offset, step) with non-negative entries; l is the middle
    (doubled) position.
    """

    k_form: tuple[int, int]
    l_form: tuple[int, int]
    m_form: tuple[int, int]
    t_min: int = 0

    def instantiate(self, t: int) -> tuple[int, int, int]:
        if t < self.t_min:
            raise ValueError(f"t={t} below t_min={self.t_min}")
        (ak, bk), (al, bl), (am, bm) = self.k_form, self.l_form, self.m_form
        return (ak + bk * t, al + bl * t, am + bm * t)

    def order(self) -> int:
        """Certificate window length: a structural upper bound for the number
        of distinct geometric bases appearing in s_t (two roots per distinct
        nonzero step, plus the constant base when a step is zero).  An
        over-count only lengthens the window, never weakens the argument."""
        steps = {b for _, b in (self.k_form, self.l_form, self.m_form)}
        n = 2 * len(steps - {0})
        if 0 in steps:
            n += 1
        return n

    def normalized(self) -> APFamily:
        """Rebase to t_min = 0 and order the outer forms canonically."""
        shift = self.t_min
        forms = []
        for a, b in (self.k_form, self.l_form, self.m_form):
            forms.append((a + b * shift, b))
        kf, lf, mf = forms
        if kf > mf:
            kf, mf = mf, kf
        return APFamily(kf, lf, mf, 0)

    def describe(self) -> str:
        def one(form):
            a, b = form
            if b == 0:
                return str(a)
            t = "t" if b == 1 else f"{b}t"
            return f"{t}+{a}" if a else t

        return f"({one(self.k_form)}, {one(self.l_form)}, {one(self.m_form)}), t>={self.t_min}"


def _trinomial_remainder(A: int, B: int, offsets: tuple[int, int, int]) -> list:
    """Remainder of X^a1 - 2*X^a2 + X^a3 modulo X^2 - A*X - B.

    Plain synthetic long division on the dense coefficient vector.
    """
    a1, a2, a3 = offsets
    deg = max(offsets)
    coeffs = [0] * (deg + 1)
    coeffs[a1] += 1
    coeffs[a2] -= 2
    coeffs[a3] += 1
    for i in range(deg, 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = 0
            coeffs[i - 1] += A * c
            coeffs[i - 2] += B * c
    return coeffs[:2]


def detect_families(params: SeqParams, kind: Kind, e_max: int) -> list[APFamily]:
    """All unit-step families with offsets in [0, e_max].

    A shift pattern (a1 + t, a2 + t, a3 + t) with the doubled term at a2 is
    valid for every t exactly when the companion polynomial divides
    X^a1 - 2*X^a2 + X^a3.  Divisibility is decided by polynomial remainder
    and cross-checked on the first two instances of s_t.
    """
    if e_max < 3:
        raise ValueError("e_max must be at least 3")
    ts = terms(params, kind, e_max + 3)
    out = []
    for a2 in range(e_max + 1):
        for a1 in range(e_max + 1):
            if a1 == a2:
                continue
            for a3 in range(a1 + 1, e_max + 1):
                if a3 == a2:
                    continue
                offsets = (a1, a2, a3)
                if min(offsets) != 0:
                    continue
                if _trinomial_remainder(params.A, params.B, offsets) != [0, 0]:
                    continue
                s0 = ts[a1] - 2 * ts[a2] + ts[a3]
                s1 = ts[a1 + 1] - 2 * ts[a2 + 1] + ts[a3 + 1]
                assert s0 == 0 and s1 == 0, "divisibility and identity disagree"
                out.append(APFamily((a1, 1), (a2, 1), (a3, 1), 0))
    out.sort(key=lambda f: (f.l_form, f.k_form, f.m_form))
    return out


@dataclass
class FamilyReport:
    """Result of a passed certificate check; construction implies validity."""

    family: APFamily
    order: int
    window: tuple[int, ...]
    degenerate_ts: tuple[int, ...] = field(default=())
    ap_count: int = 0


def verify_family(
    family: APFamily, params: SeqParams, kind: Kind, t_probe: int = 50
) -> FamilyReport:
    """Check the identity certificate and survey instances up to t_probe.

    The certificate checks s_t = 0 for `order` consecutive t starting at
    t_min; since s_t is a linear combination of at most `order` geometric
    sequences, that forces s_t = 0 for every t >= t_min (Vandermonde).
    Instances with repeated values are legal but counted as degenerate.

    Raises CertificateFailureError when a window value is nonzero.
    """
    order = family.order()
    window = tuple(range(family.t_min, family.t_min + order))
    for t in window:
        k, l, m = family.instantiate(t)
        if min(k, l, m) < 0:
            raise ValueError(f"negative index at t={t}")
        s = (
            term(params, kind, k)
            - 2 * term(params, kind, l)
            + term(params, kind, m)
        )
        if s != 0:
            raise CertificateFailureError(
                f"certificate window broken at t={t}: s_t={s} for {family.describe()}"
            )
    degenerate = []
    ap_count = 0
    for t in range(family.t_min, max(t_probe, family.t_min) + 1):
        k, l, m = family.instantiate(t)
        vk = term(params, kind, k)
        vl = term(params, kind, l)
        vm = term(params, kind, m)
        if is_ap(vk, vl, vm):
            ap_count += 1
        else:
            degenerate.append(t)
    return FamilyReport(family, order, window, tuple(degenerate), ap_count)


def family_instances(
    family: APFamily, params: SeqParams, kind: Kind, n_max: int
) -> list[APTriple]:
    """Non-degenerate instances with all indices <= n_max, canonicalized."""
    out = []
    t = family.t_min
    while True:
        k, l, m = family.instantiate(t)
        if min(k, l, m) > n_max:
            break
        if max(k, l, m) <= n_max:
            vk = term(params, kind, k)
            vl = term(params, kind, l)
            vm = term(params, kind, m)
            if is_ap(vk, vl, vm):
                ck, cl, cm = canonical_indices(k, l, m)
                out.append(make_triple(params, kind, ck, cl, cm))
        t += 1
        if t > family.t_min + 4 * n_max + 8:
            break
    return out
