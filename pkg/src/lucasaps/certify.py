"""Completeness certification for the positive-discriminant case.

Two routes prove that an enumeration window catches every progression.

Ratio route.  When |x_n / x_{n'}| > 3 for all n > n0 >= n' the three
equations x_k - 2*x_l + x_m = 0 (with the doubled term in each position)
are unsolvable above n0, because the largest term outweighs the other two.
For non-exceptional pairs the ratio condition holds above n0 = 7 (first
kind) resp. n0 = 6 (second kind); the finitely many exceptional pairs are
listed in :func:`growth_exception`.

Gap route.  For an exceptional pair, write a candidate solution with sorted
exponents n1 > n2 > n3 and gaps g1 = n1 - n2, g2 = n2 - n3.  Pulling out
the smallest exponent turns the progression equation into

    gamma^n3 * Q(gamma) = eps * delta^n3 * Q(delta),
    Q(X) = c1*X^(g1+g2) + c2*X^(g2) + c3,

where gamma is the dominant root, eps is +1 (first kind) or -1 (second
kind) and (c1, c2, c3) places the coefficient -2.  With both gaps fixed
there is at most one solution exponent n3, found by exact monotone search;
when Q kills both roots the whole cell is a shift family.  With a free gap,
a certified-positive lower bound W for |Q(gamma)| (an exact surd) yields an
explicit bound on n1, since the dominant side grows strictly faster than
4 * max(1, |delta|)^n1.  When the margin cannot be certified the engine
fixes the smallest free gap to successive values and recurses, which
terminates because the margin becomes positive once the gap lower bound is
large enough.  Every comparison is exact surd arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import __version__
from .apsearch import APFamily, APTriple, find_aps, is_ap, make_triple
from .core import (
    Classification,
    Kind,
    SeqParams,
    Surd,
    classify,
    dominant_root,
    surd_cmp_abs,
    terms,
)


class EngineMismatchError(RuntimeError):
    """Internal cross-validation of a certificate failed (engine bug)."""


def growth_exception(params: SeqParams, kind: Kind) -> bool:
    """True iff the pair is excluded from the ratio growth criterion.

    First kind: the ratio |x_n / x_{n'}| > 3 holds for n odd or n >= 8
    unless B < 0 and |A| <= 6, or |A| = 1 and 0 < B <= 9, or |A| = 2 and
    0 < B <= 3.  Second kind: holds for n even or n >= 7 unless B < 0 and
    |A| <= 7, or |A| = 1 and 0 < B <= 14, or |A| = 2 and 0 < B <= 3.
    """
    A, B = abs(params.A), params.B
    if kind is Kind.FIRST:
        return (B < 0 and A <= 6) or (A == 1 and 0 < B <= 9) or (A == 2 and 0 < B <= 3)
    return (B < 0 and A <= 7) or (A == 1 and 0 < B <= 14) or (A == 2 and 0 < B <= 3)


GROWTH_WINDOW = {Kind.FIRST: 7, Kind.SECOND: 6}


@dataclass(frozen=True)
class Gap:
    """Either an exact gap value or a free gap with a lower bound."""

    fixed: bool
    value: int

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("gaps are at least 1")

    def describe(self) -> str:
        return f"={self.value}" if self.fixed else f">={self.value}"


@dataclass(frozen=True)
class GapPattern:
    """One sub-case of the progression equation.

    minus_two_at places the -2 coefficient on the largest (0), middle (1)
    or smallest (2) exponent; side_sign is +1 for the first kind and -1 for
    the second.
    """

    minus_two_at: int
    side_sign: int
    g1: Gap
    g2: Gap

    def coefficients(self) -> tuple[int, int, int]:
        c = [1, 1, 1]
        c[self.minus_two_at] = -2
        return tuple(c)

    def describe(self) -> str:
        return (
            f"-2@n{self.minus_two_at + 1} g1{self.g1.describe()} g2{self.g2.describe()}"
        )


@dataclass
class PatternAnalysis:
    """Outcome of analyzing one gap pattern.

    status is one of:
      family        -- the cell is an infinite family (plus any decoupled ones)
      resolved      -- fixed gaps, at most one candidate checked exactly
      bounded       -- certified margin; every solution has n1 <= top_bound
      fix_next_gap  -- margin not certifiable, split on the first free gap
      inconclusive  -- a search guard tripped
    """

    pattern: GapPattern
    status: str
    solutions: tuple = ()
    families: tuple = ()
    margin: Surd | None = None
    top_bound: int | None = None
    note: str = ""


@dataclass(frozen=True)
class EngineConfig:
    gap_cap: int = 12
    depth_cap: int = 12
    search_cap: int = 2000


def _exponents_to_triple(n1: int, n2: int, n3: int, minus_two_at: int):
    """Canonical (k, l, m) index triple for sorted exponents n1 > n2 > n3."""
    exps = (n1, n2, n3)
    l = exps[minus_two_at]
    outer = sorted(e for i, e in enumerate(exps) if i != minus_two_at)
    return (outer[0], l, outer[1])


def _shift_family(minus_two_at: int, g1: int, g2: int) -> APFamily:
    n1, n2, n3 = g1 + g2, g2, 0
    k, l, m = _exponents_to_triple(n1, n2, n3, minus_two_at)
    return APFamily((k, 1), (l, 1), (m, 1), 0)


def _abs_pow(base_abs: Surd, n: int) -> Surd:
    return base_abs ** n


def _fixed_cell(pattern: GapPattern, params: SeqParams, cfg: EngineConfig) -> PatternAnalysis:
    gamma, delta = dominant_root(params)
    c1, c2, c3 = pattern.coefficients()
    g1, g2 = pattern.g1.value, pattern.g2.value
    one = Surd.integer(1, params.D)

    def q_at(x: Surd) -> Surd:
        return (x ** (g1 + g2)).times_int(c1) + (x ** g2).times_int(c2) + one.times_int(c3)

    qg, qd = q_at(gamma), q_at(delta)
    if qg.is_zero() and qd.is_zero():
        fam = _shift_family(pattern.minus_two_at, g1, g2)
        return PatternAnalysis(pattern, "family", families=(fam,),
                               note="companion divides the gap trinomial")
    if qg.is_zero() or qd.is_zero():
        return PatternAnalysis(pattern, "resolved",
                               note="exactly one root kills Q; no solution")

    # |gamma/delta| > 1, so |gamma^n3 Q(gamma)| / |delta^n3 Q(delta)| is
    # strictly increasing in n3: at most one candidate where the moduli agree.
    lhs, rhs = qg, qd
    sols = []
    for n3 in range(cfg.search_cap):
        cmp = surd_cmp_abs(lhs, rhs)
        if cmp == 0:
            if (lhs - rhs.times_int(pattern.side_sign)).is_zero():
                sols.append((n3 + g1 + g2, n3 + g2, n3))
            break
        if cmp > 0:
            break
        lhs = lhs * gamma
        rhs = rhs * delta
    else:
        return PatternAnalysis(pattern, "inconclusive", note="monotone search cap hit")
    return PatternAnalysis(pattern, "resolved", solutions=tuple(sols))


def _decoupled_cell(pattern: GapPattern, params: SeqParams) -> PatternAnalysis:
    """g1 fixed with c1*gamma^g1 + c2 = 0.

    Only gamma = 2 with g1 = 1 and the -2 coefficient in the middle can
    reach this branch (gamma^g1 = 2 has no other solution of degree <= 2
    with nonzero trace), and then the other root is +-1.  The equation
    collapses to 2^n3 * c3 = eps * delta^n3 * (delta^g2 * T(delta) + c3),
    so n3 is bounded outright and each residue class of g2 either fails or
    yields a whole family.
    """
    gamma, delta = dominant_root(params)
    c1, c2, c3 = pattern.coefficients()
    a, b = pattern.g1.value, pattern.g2.value
    gi, di = gamma.as_integer(), delta.as_integer()
    assert gi == 2 and abs(di) == 1 and pattern.minus_two_at == 1

    td = c1 * di ** a + c2
    limit = abs(td) + abs(c3)
    families = []
    n3 = 0
    while (gi ** n3) * abs(c3) <= limit:
        for e in ((1,) if di == 1 else (1, -1)):
            rhs = pattern.side_sign * (di ** n3) * (e * td + c3)
            if (gi ** n3) * c3 != rhs:
                continue
            step = 1 if di == 1 else 2
            g0 = b
            while di ** g0 != e:
                g0 += 1
            k, l, m = (n3, 0), (n3 + g0, step), (n3 + g0 + a, step)
            families.append(APFamily(k, l, m, 0))
        n3 += 1
    status = "family" if families else "resolved"
    return PatternAnalysis(pattern, status, families=tuple(families),
                           note="decoupled: dominant root power is constant")


def pattern_bound(
    pattern: GapPattern,
    params: SeqParams,
    kind: Kind,
    config: EngineConfig | None = None,
) -> PatternAnalysis:
    """Analyze one gap pattern exactly.

    Fixed gaps resolve outright (family / no solution / single verified
    candidate).  A free gap either certifies a positive margin W, in which
    case W * |gamma|^n1 <= 4 * |gamma|^(a+b) * max(1,|delta|)^n1 bounds the
    top exponent of any solution, or requests a split (fix_next_gap).
    """
    cfg = config or EngineConfig()
    if pattern.side_sign != (1 if kind is Kind.FIRST else -1):
        raise ValueError("pattern side sign does not match the kind")
    if pattern.g1.fixed and pattern.g2.fixed:
        return _fixed_cell(pattern, params, cfg)

    gamma, delta = dominant_root(params)
    c1, c2, c3 = pattern.coefficients()
    ag, ad = abs(gamma), abs(delta)
    one = Surd.integer(1, params.D)
    a, b = pattern.g1.value, pattern.g2.value

    if pattern.g1.fixed:
        t_gamma = (gamma ** a).times_int(c1) + one.times_int(c2)
        if t_gamma.is_zero():
            return _decoupled_cell(pattern, params)
        margin = abs(t_gamma) * _abs_pow(ag, b) - one.times_int(abs(c3))
    else:
        margin = (
            _abs_pow(ag, a + b).times_int(abs(c1))
            - _abs_pow(ag, b).times_int(abs(c2))
            - one.times_int(abs(c3))
        )

    if margin.sign() <= 0:
        return PatternAnalysis(pattern, "fix_next_gap", margin=margin)

    eta = ad if surd_cmp_abs(ad, one) > 0 else one
    lhs = margin
    rhs = _abs_pow(ag, a + b).times_int(4)
    top = -1
    for n1 in range(cfg.search_cap):
        if (rhs - lhs).sign() < 0:
            break
        top = n1
        lhs = lhs * ag
        rhs = rhs * eta
    else:
        return PatternAnalysis(pattern, "inconclusive", margin=margin,
                               note="top bound search cap hit")
    return PatternAnalysis(pattern, "bounded", margin=margin, top_bound=top)


def _cell_solutions(pattern: GapPattern, params: SeqParams, kind: Kind, top: int):
    """Exhaust a bounded cell: all exponent triples matching the gap
    constraints with n1 <= top, checked against the recurrence terms."""
    if top < 2:
        return ()
    c1, c2, c3 = pattern.coefficients()
    ts = terms(params, kind, top + 1)
    g1s = (pattern.g1.value,) if pattern.g1.fixed else range(pattern.g1.value, top + 1)
    out = []
    for g1 in g1s:
        g2s = (pattern.g2.value,) if pattern.g2.fixed else range(pattern.g2.value, top - g1 + 1)
        for g2 in g2s:
            for n3 in range(0, top - g1 - g2 + 1):
                n2 = n3 + g2
                n1 = n2 + g1
                if c1 * ts[n1] + c2 * ts[n2] + c3 * ts[n3] == 0:
                    out.append((n1, n2, n3))
    return tuple(out)


@dataclass
class PatternEvidence:
    """Serializable record of one analyzed pattern node."""

    pattern: GapPattern
    outcome: str
    margin: Surd | None = None
    top_bound: int | None = None
    solutions: tuple = ()
    families: tuple = ()
    note: str = ""

    def to_json_dict(self) -> dict:
        doc = {
            "minusTwoAt": self.pattern.minus_two_at,
            "g1": self.pattern.g1.describe(),
            "g2": self.pattern.g2.describe(),
            "outcome": self.outcome,
        }
        if self.margin is not None:
            doc["margin"] = {
                "p": str(self.margin.p),
                "q": str(self.margin.q),
                "disc": self.margin.d,
                "text": str(self.margin),
            }
        if self.top_bound is not None:
            doc["topBound"] = self.top_bound
        if self.solutions:
            doc["solutions"] = [list(s) for s in self.solutions]
        if self.families:
            doc["families"] = [f.describe() for f in self.families]
        if self.note:
            doc["note"] = self.note
        return doc


@dataclass
class CompletenessCertificate:
    """Machine-checkable evidence that every progression has index <= n0."""

    method: str
    n0: int
    patterns: tuple
    aps: tuple
    tool_version: str = __version__
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "method": self.method,
            "n0": self.n0,
            "patterns": [p.to_json_dict() for p in self.patterns],
            "aps": [
                {"k": t.k, "l": t.l, "m": t.m, "values": [str(v) for v in t.values]}
                for t in self.aps
            ],
            "toolVersion": self.tool_version,
            "note": self.note,
        }


def certificate_from_json(doc: dict) -> CompletenessCertificate:
    """Rebuild a certificate from its JSON document for re-checking.

    Pattern evidence is kept as raw dictionaries; re-validation only needs
    the method, the bound and the progression list.
    """
    aps = tuple(
        APTriple(t["k"], t["l"], t["m"], tuple(int(v) for v in t["values"]))
        for t in doc["aps"]
    )
    return CompletenessCertificate(
        doc["method"], doc["n0"], tuple(doc.get("patterns", ())), aps,
        doc.get("toolVersion", __version__), doc.get("note", ""),
    )


@dataclass
class EnumerationResult:
    """Outcome of :func:`certified_enumerate`.

    complete      -- aps is exhaustive and certificate says why
    has_families  -- families plus aps (the sporadic part) describe every
                     progression; no finite certificate is issued
    inconclusive  -- diagnostics explain which guard tripped
    """

    status: str
    aps: tuple = ()
    families: tuple = ()
    certificate: CompletenessCertificate | None = None
    diagnostics: tuple = ()
    evidence: tuple = ()


class _GapEngine:
    def __init__(self, params: SeqParams, kind: Kind, cfg: EngineConfig):
        self.params = params
        self.kind = kind
        self.cfg = cfg
        self.eps = 1 if kind is Kind.FIRST else -1
        self.solutions: set = set()
        self.families: list = []
        self.evidence: list = []
        self.problems: list = []
        self.top_bounds: list = []

    def run(self):
        for placement in (0, 1, 2):
            pat = GapPattern(placement, self.eps, Gap(False, 1), Gap(False, 1))
            self._analyze(pat, 0)

    def _analyze(self, pat: GapPattern, depth: int):
        if depth > self.cfg.depth_cap:
            self.problems.append(f"depth cap exceeded at {pat.describe()}")
            return
        res = pattern_bound(pat, self.params, self.kind, self.cfg)
        if res.status != "fix_next_gap":
            self._handle(pat, res)
            return
        which = "g1" if not pat.g1.fixed else "g2"
        lb = getattr(pat, which).value
        for v in range(lb, self.cfg.gap_cap + 1):
            self._analyze(replace(pat, **{which: Gap(True, v)}), depth + 1)
            raised = replace(pat, **{which: Gap(False, v + 1)})
            res2 = pattern_bound(raised, self.params, self.kind, self.cfg)
            if res2.status != "fix_next_gap":
                self._handle(raised, res2)
                return
        self.problems.append(f"gap cap exhausted at {pat.describe()}")

    def _handle(self, pat: GapPattern, res: PatternAnalysis):
        if res.status == "inconclusive":
            self.problems.append(f"{pat.describe()}: {res.note}")
            self.evidence.append(PatternEvidence(pat, "inconclusive", res.margin, note=res.note))
            return
        sols = res.solutions
        if res.status == "bounded":
            sols = _cell_solutions(pat, self.params, self.kind, res.top_bound)
            self.top_bounds.append(res.top_bound)
        for n1, n2, n3 in sols:
            self.solutions.add(_exponents_to_triple(n1, n2, n3, pat.minus_two_at))
        if res.families:
            self.families.extend(res.families)
        self.evidence.append(
            PatternEvidence(
                pat,
                res.status,
                res.margin,
                res.top_bound,
                tuple(_exponents_to_triple(*s, pat.minus_two_at) for s in sols),
                res.families,
                res.note,
            )
        )


def certified_enumerate(
    params: SeqParams, kind: Kind, config: EngineConfig | None = None
) -> EnumerationResult:
    """Enumerate every progression of the sequence with proof of completeness.

    Non-exceptional dominant pairs use the ratio growth criterion with
    n0 = 7 (first kind) or 6 (second kind).  Exceptional pairs run the gap
    pattern engine.  Negative discriminants are inconclusive by design: no
    effective completeness method is implemented there.
    """
    cfg = config or EngineConfig()
    if classify(params) is not Classification.REAL_DOMINANT:
        return EnumerationResult(
            "inconclusive",
            diagnostics=("no effective completeness method for negative discriminant",),
        )
    if not growth_exception(params, kind):
        n0 = GROWTH_WINDOW[kind]
        aps = tuple(find_aps(params, kind, n0))
        cert = CompletenessCertificate(
            "growth_lemma", n0, (), aps,
            note="ratio |x_n/x_n'| > 3 above n0; pair is not in the exception list",
        )
        return EnumerationResult("complete", aps, (), cert)

    engine = _GapEngine(params, kind, cfg)
    engine.run()
    evidence = tuple(engine.evidence)
    if engine.problems:
        return EnumerationResult(
            "inconclusive", diagnostics=tuple(engine.problems), evidence=evidence
        )

    sporadic = []
    seen = set()
    for k, l, m in sorted(engine.solutions, key=lambda s: (max(s), s)):
        vals = tuple(terms(params, kind, max(k, l, m) + 1)[i] for i in (k, l, m))
        if is_ap(*vals) and (k, l, m) not in seen:
            seen.add((k, l, m))
            sporadic.append(make_triple(params, kind, k, l, m))

    if engine.families:
        fams = sorted(
            {f.normalized() for f in engine.families},
            key=lambda f: (f.l_form, f.k_form, f.m_form),
        )
        return EnumerationResult(
            "has_families", tuple(sporadic), tuple(fams), None, (), evidence
        )

    n0 = max(
        [2]
        + engine.top_bounds
        + [max(s) for s in engine.solutions]
    )
    aps = tuple(find_aps(params, kind, n0))
    if {t.indices for t in aps} != {t.indices for t in sporadic}:
        raise EngineMismatchError(
            f"gap engine and brute enumeration disagree for ({params.A}, {params.B})"
        )
    cert = CompletenessCertificate("gap_pattern", n0, evidence, aps)
    return EnumerationResult("complete", aps, (), cert, (), evidence)


def check_certificate(
    cert: CompletenessCertificate,
    params: SeqParams,
    kind: Kind,
    probe: int | None = None,
) -> bool:
    """Independently re-validate a certificate by brute enumeration.

    Families must be absent (an infinite family voids any finite
    certificate) and the brute window up to `probe` must reproduce exactly
    the certified list.
    """
    from .apsearch import detect_families

    if probe is None:
        probe = max(4 * cert.n0, 100)
    if probe < cert.n0:
        raise ValueError("probe must reach at least n0")
    if detect_families(params, kind, max(12, cert.n0 + 3)):
        return False
    brute = {t.indices for t in find_aps(params, kind, probe)}
    return brute == {t.indices for t in cert.aps}
