"""Closed-form L_S and c_eq for structured numerical semigroups.

Three families admit explicit answers: arithmetic sequences (the
homogenized ideal is the rational normal curve ideal), almost arithmetic
sequences (one extra generator b), and shifted families b + t*m_i whose
m_i are built from pairwise coprime moduli.  The formulas rest on
presentation transforms that keep the homogenized ideal fixed; those
transforms and the generating families they produce are exposed here as
well, so tests can replay the derivations against the general engine.

Every formula operation accepts verified=True to recompute the answer
with the engine and raise CrossCheckError on disagreement.  The one
exception is the almost-arithmetic c_eq, where the published closed form
itself is suspect: there verified mode returns the engine value and
ceq_almost_arithmetic_report lays out both formula variants next to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .catenary import ceq
from .errors import (
    CrossCheckError,
    HypothesisViolated,
    InvalidInput,
    InvalidScalar,
    PreconditionFailed,
)
from .ideal import Binomial
from .intlinalg import dot
from .monoid import MonoidPresentation, is_minimal_generating, numerical, presentation
from .orders import GREVLEX, TermOrder
from .same_length import (
    HomogenizedPresentation,
    MonoidIdeal,
    _minimalize_degrees,
    l_set,
    monoid_ideals_equal,
)


def _positive_int(name, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{name} must be an integer")
    if value <= 0:
        raise InvalidInput(f"{name} must be positive")
    return value


def _h_set(m1: int, e: int, n: int) -> list[int]:
    # degrees of the curve-relation block: 2m1 + lambda*e, lambda in [2, 2n-4]
    return [2 * m1 + lam * e for lam in range(2, 2 * n - 3)]


@dataclass(frozen=True)
class ArithmeticFamily:
    """m1, m1+e, ..., m1+(n-1)e with gcd(m1, e) = 1."""

    m1: int
    e: int
    n: int

    def __post_init__(self):
        _positive_int("m1", self.m1)
        _positive_int("e", self.e)
        _positive_int("n", self.n)
        if self.n < 2:
            raise HypothesisViolated("an arithmetic family needs n >= 2 terms")
        if gcd(self.m1, self.e) != 1:
            raise HypothesisViolated("gcd(m1, e) must be 1")

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(self.m1 + i * self.e for i in range(self.n))

    def presentation(self) -> MonoidPresentation:
        return numerical(self.generators)


@dataclass(frozen=True)
class AlmostArithmeticFamily:
    """Arithmetic part m1..m1+(n-1)e plus one extra generator b."""

    m1: int
    e: int
    n: int
    b: int

    def __post_init__(self):
        _positive_int("m1", self.m1)
        _positive_int("e", self.e)
        _positive_int("n", self.n)
        _positive_int("b", self.b)
        if self.n < 2:
            raise HypothesisViolated("the arithmetic part needs n >= 2 terms")
        if gcd(self.m1, self.e) != 1:
            raise HypothesisViolated("gcd(m1, e) must be 1")
        if self.b in self.arithmetic_part:
            raise HypothesisViolated("b coincides with an arithmetic term")
        if not is_minimal_generating(self.presentation()):
            raise HypothesisViolated("generator set is not minimal")

    @property
    def arithmetic_part(self) -> tuple[int, ...]:
        return tuple(self.m1 + i * self.e for i in range(self.n))

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(sorted(self.arithmetic_part + (self.b,)))

    def presentation(self) -> MonoidPresentation:
        return numerical(self.generators)

    # notation of the source results: extremes of the whole sequence,
    # the gcd d, and the box count beta
    @property
    def M(self) -> int:
        return max(self.generators)

    @property
    def m(self) -> int:
        return min(self.generators)

    @property
    def d(self) -> int:
        return gcd(self.b - self.m1, self.e)

    @property
    def beta(self) -> int:
        return (self.M - self.m - self.d) // (self.d * (self.n - 1))

    @property
    def h_set(self) -> tuple[int, ...]:
        return tuple(_h_set(self.m1, self.e, self.n))


@dataclass(frozen=True)
class UniqueBettiShiftFamily:
    """S = <b, b+t*m_1, ..., b+t*m_n> with m_i = f_i * prod(c_j, j != i).

    The c_i are pairwise coprime and strictly decreasing (only the last
    may be 1, which covers the three-generated reduction), f_n = 1, and
    f_i * c_n < c_i keeps m_n largest.
    """

    b: int
    t: int
    c: tuple[int, ...]
    f: tuple[int, ...] | None = None

    def __post_init__(self):
        _positive_int("b", self.b)
        _positive_int("t", self.t)
        c = tuple(int(v) for v in self.c)
        object.__setattr__(self, "c", c)
        n = len(c)
        if n < 2:
            raise HypothesisViolated("need at least two moduli c_i")
        for v in c:
            _positive_int("c_i", v)
        if any(c[i] <= c[i + 1] for i in range(n - 1)):
            raise HypothesisViolated("moduli must decrease strictly")
        for i in range(n):
            for j in range(i + 1, n):
                if gcd(c[i], c[j]) != 1:
                    raise HypothesisViolated(
                        f"(a) c_{i + 1} and c_{j + 1} are not coprime"
                    )
        f = self.f
        f = tuple(int(v) for v in f) if f is not None else (1,) * (n - 1)
        object.__setattr__(self, "f", f)
        if len(f) != n - 1:
            raise InvalidInput("need one multiplier f_i per index 1..n-1")
        for v in f:
            _positive_int("f_i", v)
        for i in range(n - 1):
            if gcd(f[i], c[i]) != 1:
                raise HypothesisViolated(f"(b) gcd(f_{i + 1}, c_{i + 1}) != 1")
            if f[i] * c[-1] >= c[i]:
                # equivalent to m_n > m_i
                raise HypothesisViolated(f"(c) m_{i + 1} is not below m_{len(c)}")
        if gcd(self.b, self.t) != 1:
            raise HypothesisViolated("gcd(b, t) must be 1 to stay numerical")
        if not is_minimal_generating(self.presentation()):
            raise HypothesisViolated("generator set is not minimal")

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def multipliers(self) -> tuple[int, ...]:
        # f_1..f_n with the structural f_n = 1
        return tuple(self.f) + (1,)

    @property
    def m_values(self) -> tuple[int, ...]:
        fs = self.multipliers
        total = prod(self.c)
        return tuple(fs[i] * (total // self.c[i]) for i in range(self.n))

    @property
    def generators(self) -> tuple[int, ...]:
        return (self.b,) + tuple(self.b + self.t * m for m in self.m_values)

    def presentation(self) -> MonoidPresentation:
        return numerical(self.generators)


def _require_same_ideal(tag, formula, engine) -> None:
    if (formula is None) != (engine is None):
        raise CrossCheckError(f"{tag}: formula and engine disagree on emptiness")
    if formula is not None and not monoid_ideals_equal(formula, engine):
        raise CrossCheckError(
            f"{tag}: formula generators "
            f"{[g.to_data() for g in formula.generators]} and engine generators "
            f"{[g.to_data() for g in engine.generators]} span different ideals"
        )


def lset_arithmetic(
    f: ArithmeticFamily, order: TermOrder = GREVLEX, verified: bool = False
):
    """L_S = {2m1 + lambda*e : 2 <= lambda <= 2n-4} + S; empty for n <= 2."""
    p = f.presentation()
    vals = _h_set(f.m1, f.e, f.n)
    result = None
    if vals:
        result = MonoidIdeal(p, tuple(p.element((v,)) for v in vals))
    if verified:
        _require_same_ideal("lset_arithmetic", result, l_set(p, order))
    return result


def lset_almost_arithmetic(
    f: AlmostArithmeticFamily, order: TermOrder = GREVLEX, verified: bool = False
) -> MonoidIdeal:
    """The case formula: H plus extras decided by where b sits.

    The returned family is the published one; it generates L_S but is not
    always minimal (the engine's l_set trims it further when some extra
    already lies in H + S).
    """
    b, e, n, d, beta = f.b, f.e, f.n, f.d, f.beta
    if b == f.m or b == f.M:
        anchor, step = (f.m1, e) if b == f.m else (f.arithmetic_part[-1], -e)
        extras = [(beta + 1) * anchor]
        if (f.M - f.m) % (d * (n - 1)) != 0:
            extras.append((beta + 1) * anchor + step)
    else:
        extras = [(e // d) * b]
    vals = sorted(set(_h_set(f.m1, e, n) + extras))
    p = f.presentation()
    result = MonoidIdeal(p, tuple(p.element((v,)) for v in vals))
    if verified:
        _require_same_ideal("lset_almost_arithmetic", result, l_set(p, order))
    return result


def _ceq_proof_form(f: AlmostArithmeticFamily) -> int:
    if f.b in (f.m, f.M):
        return f.beta + 1
    return f.e // f.d


def _ceq_printed_form(f: AlmostArithmeticFamily) -> int:
    if f.b in (f.m, f.M):
        num = f.M - f.m - f.d - 1
        q = f.d * (f.n - 1)
        return -(-num // q)
    return f.e // f.d


@dataclass(frozen=True)
class CeqFormulaReport:
    """Both published shapes of the almost-arithmetic c_eq next to the
    engine value.  The two shapes differ exactly when d(n-1) divides
    M-m-d or M-m-d-1; the engine is authoritative."""

    proof_form: int
    printed_form: int
    engine: int
    forms_agree: bool
    engine_matches_proof: bool
    engine_matches_printed: bool

    def to_data(self):
        return {
            "proof_form": self.proof_form,
            "printed_form": self.printed_form,
            "engine": self.engine,
            "forms_agree": self.forms_agree,
            "engine_matches_proof": self.engine_matches_proof,
            "engine_matches_printed": self.engine_matches_printed,
        }


def ceq_almost_arithmetic(
    f: AlmostArithmeticFamily, order: TermOrder = GREVLEX, verified: bool = False
) -> int:
    """Equal catenary degree: beta + 1 for extreme b, e/d for interior b.

    verified=True recomputes with the engine and returns that value; use
    ceq_almost_arithmetic_report to see the formula variants side by side.
    """
    if verified:
        return ceq(f.presentation(), order)
    return _ceq_proof_form(f)


def ceq_almost_arithmetic_report(
    f: AlmostArithmeticFamily, order: TermOrder = GREVLEX
) -> CeqFormulaReport:
    proof = _ceq_proof_form(f)
    printed = _ceq_printed_form(f)
    engine = ceq(f.presentation(), order)
    return CeqFormulaReport(
        proof_form=proof,
        printed_form=printed,
        engine=engine,
        forms_agree=proof == printed,
        engine_matches_proof=engine == proof,
        engine_matches_printed=engine == printed,
    )


def lset_unique_betti_shift(
    f: UniqueBettiShiftFamily, order: TermOrder = GREVLEX, verified: bool = False
) -> MonoidIdeal:
    """L_S = union of c_i*(b + t*m_i) + S over i < n, minimalized.

    With all f_i = 1 the minimalization collapses the union to the single
    generator c_{n-1}*(b + t*m_{n-1})."""
    p = f.presentation()
    gens = f.generators
    degs = [f.c[i] * gens[i + 1] for i in range(f.n - 1)]
    kept = _minimalize_degrees(p, [(p.element((v,)), None) for v in degs])
    result = MonoidIdeal(p, tuple(d for d, _ in kept), minimalized=True)
    if verified:
        _require_same_ideal("lset_unique_betti_shift", result, l_set(p, order))
    return result


def ceq_unique_betti_shift(
    f: UniqueBettiShiftFamily, order: TermOrder = GREVLEX, verified: bool = False
) -> int:
    """max c_i over i < n."""
    value = max(f.c[: f.n - 1])
    if verified:
        got = ceq(f.presentation(), order)
        if got != value:
            raise CrossCheckError(
                f"ceq_unique_betti_shift: formula {value} vs engine {got}"
            )
    return value


def _transform_stage(vals) -> HomogenizedPresentation:
    lifted = presentation(2, (), [(v, 1) for v in vals])
    base = numerical(vals) if all(v > 0 for v in vals) else None
    return HomogenizedPresentation(base, lifted)


def normalized_presentation_transforms(values, operations):
    """Apply ideal-preserving rewrites to a numerical generator list.

    Each operation is a (name, scalar) pair with name one of subtract,
    reflect, divide, multiply.  Subtracting lam <= min(a_i) maps the
    lifted generators (a_i, 1) to (a_i - lam, 1); reflecting at
    lam >= max(a_i) to (lam - a_i, 1); divide/multiply rescale the first
    coordinate.  None of these change the lattice ideal of the lifted
    presentation, which is what makes the closed forms above tick.
    Returns the list of stages, the untouched presentation first.
    """
    vals = [int(v) for v in values]
    if not vals or any(v <= 0 for v in vals):
        raise InvalidInput("transform input must be positive integers")
    if len(set(vals)) != len(vals):
        raise InvalidInput("transform input must be distinct")
    stages = [_transform_stage(vals)]
    for op in operations:
        try:
            name, lam = op
            lam = int(lam)
        except (TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed transform step {op!r}: {exc}") from None
        if name == "subtract":
            if not 0 <= lam <= min(vals):
                raise InvalidScalar(f"subtract needs 0 <= {lam} <= min of the values")
            vals = [v - lam for v in vals]
        elif name == "reflect":
            if lam < max(vals):
                raise InvalidScalar(f"reflect needs {lam} >= max of the values")
            vals = [lam - v for v in vals]
        elif name == "divide":
            if lam <= 0 or any(v % lam for v in vals):
                raise InvalidScalar(f"{lam} is not a common divisor of the values")
            vals = [v // lam for v in vals]
        elif name == "multiply":
            if lam <= 0:
                raise InvalidScalar("multiply needs a positive scalar")
            vals = [v * lam for v in vals]
        else:
            raise InvalidInput(f"unknown transform {name!r}")
        stages.append(_transform_stage(vals))
    return stages


def adjoin_generator_split(values, b, alpha) -> Binomial:
    """The extra relation that adjoining b to <0, a_2, ..., a_n> costs.

    With B = gcd(a_2..a_n) and B*b = sum(alpha_i a_i), sum(alpha) <= B,
    the ideal of the extended monoid is the old ideal plus the single
    binomial x_{n+1}^B - x_1^(B - sum(alpha)) * prod x_i^alpha_i, where
    x_1 is the zero generator and the adjoined variable comes last.
    """
    vals = [_positive_int("a_i", v) for v in values]
    if not vals:
        raise InvalidInput("need at least one base value")
    _positive_int("b", b)
    alf = [int(v) for v in alpha]
    if len(alf) != len(vals) or any(v < 0 for v in alf):
        raise InvalidInput("alpha must give a natural number per base value")
    B = gcd(*vals) if len(vals) > 1 else vals[0]
    if sum(alf) > B:
        raise PreconditionFailed(f"sum(alpha) = {sum(alf)} exceeds B = {B}")
    if B * b != dot(alf, vals):
        raise PreconditionFailed(f"B*b = {B * b} is not the given combination")
    nvars = len(vals) + 2
    plus = [0] * nvars
    plus[-1] = B
    minus = [B - sum(alf), *alf, 0]
    return Binomial(tuple(plus), tuple(minus))


def rational_normal_curve_relations(n: int):
    """The 2x2-minor binomials x_i x_j - x_{i-1} x_{j+1}, 2 <= i <= j <= n-1.

    These cut out the ideal of <(0,1), (1,1), ..., (n-1,1)> and, degree
    for degree, of any arithmetic progression lifted the same way.
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidInput("need n >= 2 variables")
    out = []
    for i in range(2, n):
        for j in range(i, n):
            plus = [0] * n
            minus = [0] * n
            plus[i - 1] += 1
            plus[j - 1] += 1
            minus[i - 2] += 1
            minus[j] += 1
            out.append(Binomial(tuple(plus), tuple(minus)))
    return out


def arithmetic_with_zero_relations(m1: int, e: int, n: int):
    """Generators of the ideal of <(m_1,1), ..., (m_n,1), (0,1)>.

    The curve relations above, plus a second block of k relations
    x_1^alpha x_i - x_{n-k+i} x_n^(alpha-e) x_{n+1}^e, with
    alpha = floor((m_n - 1)/(n - 1)) and k = n - 1 - ((m_1 - 1) mod (n - 1)).
    The zero generator is the last variable.
    """
    fam = ArithmeticFamily(m1, e, n)
    mn = fam.generators[-1]
    k = (1 - mn) % (n - 1) if n > 2 else 0
    if k == 0:
        k = n - 1
    alpha = (mn - 1) // (n - 1)
    out = [
        Binomial(b.plus + (0,), b.minus + (0,))
        for b in rational_normal_curve_relations(n)
    ]
    for i in range(1, k + 1):
        plus = [0] * (n + 1)
        minus = [0] * (n + 1)
        plus[0] += alpha
        plus[i - 1] += 1
        minus[n - k + i - 1] += 1
        minus[n - 1] += alpha - e
        minus[n] += e
        out.append(Binomial(tuple(plus), tuple(minus)))
    return out
