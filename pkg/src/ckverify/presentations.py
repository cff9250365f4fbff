"""Builders for the two quadratic presentation families under study, the
2x2 linear-algebra facts connecting them, and the claim pipelines that
the command-line tool exposes.

Concrete moduli run over plain rationals; symbolic runs keep the modulus
(or the deformation parameters) as formal names so that every certificate
is an identity in the parameter, not a spot check.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import curves, ideal
from .coeff import Coefficient, ConjugationSpec, PoleError, RATIONALS, Space
from .ncpoly import NcPoly, adjoint_involution

GENERATORS = ("x1", "x2", "x3", "x4")

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"

CLAIMS = ("lemma1", "lemma2", "lemma4", "lemma5", "theorem1", "corollary1")


def _coeff(space: Space, value) -> Coefficient:
    if isinstance(value, Coefficient):
        return value
    return Coefficient.const(space, value)


# ---------------------------------------------------------------------------
# parameter containers

@dataclass(frozen=True)
class SklyaninParams:
    """The deformation triple (alpha, beta, gamma), constrained by
    alpha + beta + gamma + alpha*beta*gamma = 0."""

    alpha: Coefficient
    beta: Coefficient
    gamma: Coefficient

    def __post_init__(self):
        a, b, g = self.alpha, self.beta, self.gamma
        if not (a.names == b.names == g.names):
            raise ValueError("parameters live in different spaces")
        if not (a + b + g + a * b * g).is_zero():
            raise ValueError(
                "parameters violate alpha + beta + gamma + alpha*beta*gamma = 0")
        if a.is_rational() and a.as_fraction() in (0, 1, -1):
            warnings.warn(
                "alpha in {0, 1, -1} lies outside the smooth range of the "
                "quadric family", stacklevel=3)

    @staticmethod
    def of(alpha, beta, gamma, space: Space = RATIONALS) -> "SklyaninParams":
        return SklyaninParams(_coeff(space, alpha), _coeff(space, beta),
                              _coeff(space, gamma))


@dataclass(frozen=True)
class CKMatrix:
    """Nonnegative integer 2x2 exchange matrix; every row and every column
    must be nonzero."""

    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self):
        entries = (self.a11, self.a12, self.a21, self.a22)
        for e in entries:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ValueError("entries must be nonnegative integers")
        if (self.a11 == self.a12 == 0) or (self.a21 == self.a22 == 0):
            raise ValueError("matrix has a zero row")
        if (self.a11 == self.a21 == 0) or (self.a12 == self.a22 == 0):
            raise ValueError("matrix has a zero column")

    @staticmethod
    def for_modulus(b: int) -> "CKMatrix":
        if isinstance(b, bool) or not isinstance(b, int) or b < 2:
            raise ValueError("modulus must be an integer >= 2")
        return CKMatrix(b - 1, 1, b - 2, 1)


@dataclass(frozen=True)
class Matrix2:
    """A 2x2 matrix with Coefficient entries."""

    a: Coefficient
    b: Coefficient
    c: Coefficient
    d: Coefficient

    @staticmethod
    def of(space: Space, entries) -> "Matrix2":
        return Matrix2(*(_coeff(space, e) for e in entries))

    @staticmethod
    def identity(space: Space) -> "Matrix2":
        return Matrix2.of(space, (1, 0, 0, 1))

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(self.a * other.a + self.b * other.c,
                       self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c,
                       self.c * other.b + self.d * other.d)

    def trace(self) -> Coefficient:
        return self.a + self.d

    def det(self) -> Coefficient:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Matrix2":
        det = self.det()
        if det.is_zero():
            raise PoleError("matrix is singular")
        inv = det.inv()
        return Matrix2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def substitute(self, bindings) -> "Matrix2":
        return Matrix2(*(e.substitute(bindings) for e in self.entries()))

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


# ---------------------------------------------------------------------------
# relation builders

def _gens(space: Space):
    return tuple(NcPoly.generator(GENERATORS, space, i) for i in range(4))


def _sklyanin_relations(space: Space, alpha, beta, gamma):
    """The six quadratic relations, with unconstrained scalar parameters."""
    x1, x2, x3, x4 = _gens(space)
    return [
        x1 * x2 - x2 * x1 - (x3 * x4 + x4 * x3).scale(alpha),
        x1 * x2 + x2 * x1 - x3 * x4 + x4 * x3,
        x1 * x3 - x3 * x1 - (x4 * x2 + x2 * x4).scale(beta),
        x1 * x3 + x3 * x1 - x4 * x2 + x2 * x4,
        x1 * x4 - x4 * x1 - (x2 * x3 + x3 * x2).scale(gamma),
        x1 * x4 + x4 * x1 - x2 * x3 + x3 * x2,
    ]


def sklyanin(params: SklyaninParams,
             conjugation: ConjugationSpec = None) -> ideal.Presentation:
    """The six-relation presentation for a constrained parameter triple,
    carrying the adjoint involution x1 <-> x2, x3 <-> x4."""
    space = params.alpha.names
    rels = _sklyanin_relations(space, params.alpha, params.beta, params.gamma)
    return ideal.Presentation(GENERATORS, space, rels,
                              adjoint_involution(conjugation))


def _unit_relation(space: Space) -> NcPoly:
    x1, x2, x3, x4 = _gens(space)
    return x1 * x2 + x3 * x4 - NcPoly.one(GENERATORS, space)


def _exchange_relations(space: Space, a11, a12, a21, a22):
    x1, x2, x3, x4 = _gens(space)
    return [
        x2 * x1 - (x1 * x2).scale(a11) - (x3 * x4).scale(a12),
        x4 * x3 - (x1 * x2).scale(a21) - (x3 * x4).scale(a22),
    ]


def cuntz_krieger(matrix: CKMatrix,
                  space: Space = RATIONALS) -> ideal.Presentation:
    """The three-relation presentation attached to an exchange matrix,
    with the adjoint involution.  Its relation set is involution-stable
    as printed, unlike the six-relation family."""
    rels = _exchange_relations(space, matrix.a11, matrix.a12,
                               matrix.a21, matrix.a22)
    rels.append(_unit_relation(space))
    return ideal.Presentation(GENERATORS, space, rels, adjoint_involution())


def ideal_I0(space: Space = RATIONALS):
    """The inhomogeneous unit relation x1*x2 + x3*x4 - 1."""
    return [_unit_relation(space)]


def ideal_J0(space: Space = RATIONALS):
    """The four homogeneous cross relations; modulus-independent."""
    x1, x2, x3, x4 = _gens(space)
    return [
        x1 * x3 - x4 * x2,
        x3 * x1 + x2 * x4,
        x1 * x4 + x3 * x2,
        x4 * x1 - x2 * x3,
    ]


def ideal_Omega0(space: Space = RATIONALS):
    """The fixed quadratic pair x1^2 + x4^2, x2^2 + x3^2; the involution
    interchanges the two generators."""
    x1, x2, x3, x4 = _gens(space)
    return [x1 * x1 + x4 * x4, x2 * x2 + x3 * x3]


def omega_central(params: SklyaninParams):
    """The distinguished quadratic pair for a parameter triple:
    x1^2+x2^2+x3^2+x4^2 and x2^2 + (1+beta)/(1-gamma) x3^2
    + (1-beta)/(1+alpha) x4^2.  Poles at gamma = 1 and alpha = -1."""
    space = params.alpha.names
    one = Coefficient.const(space, 1)
    if (one - params.gamma).is_zero():
        raise PoleError("gamma = 1 is a pole of the quadratic pair")
    if (one + params.alpha).is_zero():
        raise PoleError("alpha = -1 is a pole of the quadratic pair")
    c3 = (one + params.beta) / (one - params.gamma)
    c4 = (one - params.beta) / (one + params.alpha)
    x1, x2, x3, x4 = _gens(space)
    omega1 = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4
    omega2 = x2 * x2 + (x3 * x3).scale(c3) + (x4 * x4).scale(c4)
    return [omega1, omega2]


# ---------------------------------------------------------------------------
# 2x2 linear-solve facts

def lemma2_solve(alpha) -> Matrix2:
    """Solve the defining pair for (x2*x1, x4*x3) as combinations of
    (x1*x2, x3*x4).  Requires alpha != 1; the result is checked by
    substituting the solved words back into the defining pair."""
    alpha = _coeff(RATIONALS, alpha) if not isinstance(alpha, Coefficient) \
        else alpha
    space = alpha.names
    one = Coefficient.const(space, 1)
    if (one - alpha).is_zero():
        raise PoleError("alpha = 1 leaves the linear system singular")
    lhs = Matrix2(one, alpha, one, one)
    rhs = Matrix2(one, -alpha, -one, one)
    m = lhs.inverse() * rhs
    mono = lambda w: NcPoly.monomial(GENERATORS, space, w)
    x1x2, x2x1, x3x4, x4x3 = mono((0, 1)), mono((1, 0)), mono((2, 3)), mono((3, 2))
    defining = [
        x2x1 + x4x3.scale(alpha) - x1x2 + x3x4.scale(alpha),
        x2x1 + x4x3 + x1x2 - x3x4,
    ]
    table = {
        (1, 0): x1x2.scale(m.a) + x3x4.scale(m.b),
        (3, 2): x1x2.scale(m.c) + x3x4.scale(m.d),
    }
    for rel in defining:
        if not rel.substitute_words(table).is_zero():
            raise RuntimeError("internal error: solved pair fails back-substitution")
    return m


@dataclass(frozen=True)
class SimilarityReport:
    """Entrywise outcome of S*M*T = B together with S*T = identity and the
    trace/determinant comparison of M and B."""

    conjugate_matches: bool
    inverse_pair: bool
    trace_m: Coefficient
    trace_b: Coefficient
    det_m: Coefficient
    det_b: Coefficient

    @property
    def traces_agree(self) -> bool:
        return self.trace_m == self.trace_b

    @property
    def dets_agree(self) -> bool:
        return self.det_m == self.det_b

    @property
    def ok(self) -> bool:
        return (self.conjugate_matches and self.inverse_pair
                and self.traces_agree and self.dets_agree)


def similarity_check(s: Matrix2, m: Matrix2, t: Matrix2,
                     b: Matrix2) -> SimilarityReport:
    space = m.a.names
    return SimilarityReport(
        conjugate_matches=(s * m * t == b),
        inverse_pair=(s * t == Matrix2.identity(space)),
        trace_m=m.trace(), trace_b=b.trace(),
        det_m=m.det(), det_b=b.det(),
    )


# ---------------------------------------------------------------------------
# claim reports

@dataclass
class StepReport:
    """One named verification step inside a claim."""

    name: str
    verdict: str                 # PASS | FAIL | INCONCLUSIVE
    detail: str = ""
    certificate: object = None   # engine certificates / combination data


@dataclass
class ClaimReport:
    claim: str
    mode: str                    # "concrete" | "symbolic"
    b: Optional[int]
    wrapper_len: int
    verdict: str
    steps: list
    curve: Optional[curves.LegendreCurve] = None


def _aggregate(steps: Sequence[StepReport]) -> str:
    kinds = {s.verdict for s in steps}
    if FAIL in kinds:
        return FAIL
    if INCONCLUSIVE in kinds:
        return INCONCLUSIVE
    return PASS


def _membership_verdict(kind: str) -> str:
    return {ideal.MEMBER: PASS, ideal.NON_MEMBER: FAIL}.get(kind, INCONCLUSIVE)


def _modulus_alpha(b: int) -> Coefficient:
    return Coefficient.const(RATIONALS, Fraction(b - 2, b + 2))


# -- the iff stability scan -------------------------------------------------

_SCAN_SPACE = ("alpha", "alphabar", "beta", "betabar", "gamma", "gammabar")
_SCAN_PAIRS = {"alpha": "alphabar", "alphabar": "alpha",
               "beta": "betabar", "betabar": "beta",
               "gamma": "gammabar", "gammabar": "gamma"}


def _stability_step(name: str, relations, conjugation, expected_failing,
                    wrapper_len: int) -> StepReport:
    p = ideal.Presentation(GENERATORS, _SCAN_SPACE, relations,
                           adjoint_involution(conjugation))
    rep = ideal.involution_stability(p, wrapper_len)
    failing = tuple(rep.failing_indices())
    expected_verdict = ideal.STABLE if not expected_failing else ideal.UNSTABLE
    ok = failing == expected_failing and rep.verdict == expected_verdict
    def rel_names(ix):
        return ", ".join(f"r{i + 1}" for i in ix) if ix else "none"
    detail = (f"{rep.verdict}; adjoint images escaping the ideal: "
              f"{rel_names(failing)} (expected {rel_names(expected_failing)})")
    certs = {f"r{i + 1}": r.verdict.certificate
             for i, r in zip(range(len(relations)), rep.relations)
             if r.verdict.certificate is not None}
    return StepReport(name, PASS if ok else FAIL, detail, certs or None)


def _lemma1_symbolic(wrapper_len: int):
    """Stability of the six relations with formally independent conjugate
    parameters, tightening one identification at a time; the per-stage
    failure patterns are exactly the iff conditions."""
    sp = _SCAN_SPACE
    al = Coefficient.param(sp, "alpha")
    be = Coefficient.param(sp, "beta")
    ga = Coefficient.param(sp, "gamma")
    rels = _sklyanin_relations(sp, al, be, ga)
    conj_free = ConjugationSpec(_SCAN_PAIRS)
    conj_alpha_real = ConjugationSpec(
        {k: v for k, v in _SCAN_PAIRS.items() if k not in ("alpha", "alphabar")})
    beta_fixed = [r.substitute_params({"beta": Coefficient.const(sp, 1)})
                  for r in rels]
    fully_fixed = [r.substitute_params({"beta": Coefficient.const(sp, 1),
                                        "gamma": Coefficient.const(sp, -1)})
                   for r in rels]
    return [
        _stability_step("free_conjugates", rels, conj_free,
                        (0, 2, 3, 4, 5), wrapper_len),
        _stability_step("alpha_real", rels, conj_alpha_real,
                        (2, 3, 4, 5), wrapper_len),
        _stability_step("beta_identified", beta_fixed, conj_alpha_real,
                        (4, 5), wrapper_len),
        _stability_step("fully_identified", fully_fixed, conj_alpha_real,
                        (), wrapper_len),
    ]


def _lemma1_concrete(b: int, wrapper_len: int):
    p = sklyanin(SklyaninParams.of(_modulus_alpha(b), 1, -1))
    rep = ideal.involution_stability(p, wrapper_len)
    ok = rep.verdict == ideal.STABLE
    detail = (f"{rep.verdict} at modulus {b}; "
              f"{sum(1 for r in rep.relations if r.verdict.is_member())}/6 "
              "adjoint images certified")
    certs = {f"r{r.index + 1}": r.verdict.certificate for r in rep.relations
             if r.verdict.certificate is not None}
    return [StepReport("stability_at_modulus", PASS if ok else FAIL,
                       detail, certs or None)]


# -- the linear-solve pipeline ----------------------------------------------

def _lemma2(b: Optional[int], symbolic: bool):
    if symbolic:
        sp = ("alpha", "b")
        alpha = Coefficient.param(sp, "alpha")
        bc = Coefficient.param(sp, "b")
    else:
        sp = RATIONALS
        alpha = _modulus_alpha(b)
        bc = Coefficient.const(sp, b)
    one = Coefficient.const(sp, 1)
    steps = []

    m = lemma2_solve(alpha)
    expected_solved = Matrix2((one + alpha) / (one - alpha),
                              (alpha * -2) / (one - alpha),
                              (one * -2) / (one - alpha),
                              (one + alpha) / (one - alpha))
    ok = m == expected_solved
    steps.append(StepReport("linear_solve", PASS if ok else FAIL,
                            f"solved pair matrix {m}"))

    mono = lambda w: NcPoly.monomial(GENERATORS, sp, w)
    x1x2, x2x1, x3x4, x4x3 = (mono((0, 1)), mono((1, 0)),
                              mono((2, 3)), mono((3, 2)))
    defining = [
        x2x1 + x4x3.scale(alpha) - x1x2 + x3x4.scale(alpha),
        x2x1 + x4x3 + x1x2 - x3x4,
    ]
    table = {(1, 0): x1x2.scale(m.a) + x3x4.scale(m.b),
             (3, 2): x1x2.scale(m.c) + x3x4.scale(m.d)}
    residuals = [rel.substitute_words(table) for rel in defining]
    ok = all(r.is_zero() for r in residuals)
    steps.append(StepReport(
        "back_substitution", PASS if ok else FAIL,
        "both defining relations vanish under the solved pair" if ok
        else "a defining relation survives back-substitution"))

    alpha_b = (bc - 2) / (bc + 2)
    m_b = m.substitute({"alpha": alpha_b}) if symbolic else m
    half_b = bc / 2
    expected_modulus = Matrix2(half_b, one - half_b, -one - half_b, half_b)
    ok = m_b == expected_modulus
    steps.append(StepReport("modulus_substitution", PASS if ok else FAIL,
                            f"matrix at the modulus {m_b}"))

    s = Matrix2.of(sp, (Fraction(1, 2), Fraction(-1, 2), 1, 0))
    t = Matrix2.of(sp, (0, 1, -2, 1))
    target = Matrix2(bc - 1, one, bc - 2, one)
    sim = similarity_check(s, m_b, t, target)
    ok = (sim.ok and sim.trace_b == bc and sim.det_b == one)
    detail = (f"S*M*T = B: {sim.conjugate_matches}; S*T = 1: {sim.inverse_pair}; "
              f"trace {sim.trace_m} = {sim.trace_b}; det {sim.det_m} = {sim.det_b}")
    steps.append(StepReport("similarity", PASS if ok else FAIL, detail))

    x1, x2, x3, x4 = _gens(sp)
    defining_pair = [
        x1 * x2 - x2 * x1 - (x3 * x4 + x4 * x3).scale(alpha),
        x1 * x2 + x2 * x1 - x3 * x4 + x4 * x3,
    ]
    solved_pair = [
        x2 * x1 - (x1 * x2).scale(m.a) - (x3 * x4).scale(m.b),
        x4 * x3 - (x1 * x2).scale(m.c) - (x3 * x4).scale(m.d),
    ]
    fwd = [ideal.graded_membership(p, solved_pair) for p in defining_pair]
    bwd = [ideal.graded_membership(p, defining_pair) for p in solved_pair]
    ok = all(v.is_member() for v in fwd + bwd)
    steps.append(StepReport(
        "solved_pair_span", PASS if ok else FAIL,
        "defining and solved pairs span the same quadratic slice",
        {"defining_in_solved": [v.certificate for v in fwd],
         "solved_in_defining": [v.certificate for v in bwd]}))
    return steps


# -- the fixed quadratic pair ------------------------------------------------

def _lemma4(b: Optional[int], symbolic: bool, wrapper_len: int):
    if symbolic:
        sp = ("alpha",)
        alpha = Coefficient.param(sp, "alpha")
    else:
        sp = RATIONALS
        alpha = _modulus_alpha(b)
    omega0 = ideal_Omega0(sp)
    p = ideal.Presentation(GENERATORS, sp, omega0, adjoint_involution())
    rep = ideal.involution_stability(p, wrapper_len)
    ok = rep.verdict == ideal.STABLE
    certs = {f"r{r.index + 1}": r.verdict.certificate for r in rep.relations
             if r.verdict.certificate is not None}
    steps = [StepReport(
        "omega0_stability", PASS if ok else FAIL,
        f"{rep.verdict}; the involution interchanges the two generators",
        certs or None)]

    params = SklyaninParams.of(alpha, 1, -1, sp)
    central = omega_central(params)
    one = Coefficient.const(sp, 1)
    c3 = (one + params.beta) / (one - params.gamma)
    c4 = (one - params.beta) / (one + params.alpha)
    coeffs_ok = (c3 == one) and c4.is_zero()
    fwd = [ideal.graded_membership(q, omega0) for q in central]
    bwd = [ideal.graded_membership(q, central) for q in omega0]
    ok = coeffs_ok and all(v.is_member() for v in fwd + bwd)
    steps.append(StepReport(
        "central_pair_reduction", PASS if ok else FAIL,
        f"scaling coefficients evaluate to {c3} and {c4}; "
        "the pair and the fixed generators span each other",
        {"central_in_fixed": [v.certificate for v in fwd],
         "fixed_in_central": [v.certificate for v in bwd]}))
    return steps


# -- equivalence pipelines ---------------------------------------------------

def _family(b: Optional[int], symbolic: bool, with_omega: bool):
    if symbolic:
        sp = ("b",)
        bc = Coefficient.param(sp, "b")
        alpha = (bc - 2) / (bc + 2)
        a11, a21 = bc - 1, bc - 2
    else:
        sp = RATIONALS
        alpha = _modulus_alpha(b)
        a11, a21 = b - 1, b - 2
    p = sklyanin(SklyaninParams.of(alpha, 1, -1, sp)) \
        .with_relations(ideal_I0(sp))
    q_rels = _exchange_relations(sp, a11, 1, a21, 1)
    q_rels.append(_unit_relation(sp))
    q_rels.extend(ideal_J0(sp))
    q = ideal.Presentation(GENERATORS, sp, q_rels, adjoint_involution())
    if with_omega:
        omega = ideal_Omega0(sp)
        p = p.with_relations(omega)
        q = q.with_relations(omega)
    return p, q


def _check_modulus(b):
    if isinstance(b, bool) or not isinstance(b, int):
        raise ValueError("modulus must be an integer")
    if b < 2:
        raise ValueError("modulus must be at least 2")


def modulus_family(b: Optional[int] = None, with_omega: bool = False):
    """The two presentations compared at modulus b (symbolic when b is
    None): the deformed quadratic system extended by the unit relation, and
    the exchange system extended by the unit relation and the four mixed
    quadratics.  with_omega adjoins the fixed quadratic pair to both sides.
    """
    if b is None:
        return _family(None, True, with_omega)
    _check_modulus(b)
    return _family(b, False, with_omega)


def _equivalence_steps(p, q, wrapper_len: int):
    rep = ideal.presentations_equivalent(p, q, wrapper_len)
    steps = []
    for label, sources, verdicts in (("sk", p.relations, rep.forward),
                                     ("ck", q.relations, rep.backward)):
        other = "ck" if label == "sk" else "sk"
        for i, (rel, v) in enumerate(zip(sources, verdicts)):
            detail = f"{rel} in the {other} ideal"
            if v.kind == ideal.INCONCLUSIVE:
                detail += f" (no certificate at wrapper length {wrapper_len})"
            steps.append(StepReport(f"{label}_r{i + 1}_in_{other}",
                                    _membership_verdict(v.kind), detail,
                                    v.certificate))
    return steps


def _theorem1(b: Optional[int], symbolic: bool, wrapper_len: int):
    p, q = _family(b, symbolic, with_omega=False)
    return _equivalence_steps(p, q, wrapper_len)


def _corollary1(b: Optional[int], symbolic: bool, wrapper_len: int):
    p, q = _family(b, symbolic, with_omega=True)
    steps = _equivalence_steps(p, q, wrapper_len)
    if symbolic:
        bc = Coefficient.param(("b",), "b")
        curve = curves.legendre_invariants((bc - 2) / (bc + 2))
    else:
        curve = curves.curve_for_b(b)
    return steps, curve


# -- the commutative chain ---------------------------------------------------

def _lemma5(b: Optional[int], symbolic: bool):
    chain = curves.reduction_chain(
        None if symbolic else Fraction(b - 2, b + 2))
    steps = [
        StepReport(
            "square_substitution",
            PASS if chain.eq20.ok else FAIL,
            "substituted quadrics match the target pair combinations "
            f"{chain.eq20.forward} with inverse {chain.eq20.backward}",
            {"forward": [list(v) for v in chain.eq20.forward],
             "backward": [list(v) for v in chain.eq20.backward]}),
        StepReport(
            "plane_parametrization",
            PASS if chain.eq22.ok else FAIL,
            f"pullbacks equal ({chain.eq22.first_factor}) and "
            f"({chain.eq22.second_factor}) times the plane cubic"),
        StepReport(
            "shift_normalization",
            PASS if chain.shift.ok else FAIL,
            "shift x -> x-1 reaches the normal form; homogenization "
            "round-trips at z = 1"),
    ]
    return steps, chain.curve


# ---------------------------------------------------------------------------
# entry point

def verify(claim: str, b: Optional[int] = None, symbolic: bool = False,
           wrapper_len: int = 2) -> ClaimReport:
    """Run one claim pipeline.  With neither a concrete modulus nor an
    explicit symbolic request, the symbolic mode is used."""
    claim = claim.lower()
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; expected one of {CLAIMS}")
    if symbolic and b is not None:
        raise ValueError("choose either a concrete modulus or symbolic mode")
    if b is None:
        symbolic = True
    else:
        _check_modulus(b)
    if wrapper_len < 0:
        raise ValueError("wrapper length must be nonnegative")

    curve = None
    if claim == "lemma1":
        steps = (_lemma1_symbolic(wrapper_len) if symbolic
                 else _lemma1_concrete(b, wrapper_len))
    elif claim == "lemma2":
        steps = _lemma2(b, symbolic)
    elif claim == "lemma4":
        steps = _lemma4(b, symbolic, wrapper_len)
    elif claim == "lemma5":
        steps, curve = _lemma5(b, symbolic)
    elif claim == "theorem1":
        steps = _theorem1(b, symbolic, wrapper_len)
    else:
        steps, curve = _corollary1(b, symbolic, wrapper_len)
    return ClaimReport(claim, "symbolic" if symbolic else "concrete",
                       None if symbolic else b, wrapper_len,
                       _aggregate(steps), steps, curve)
