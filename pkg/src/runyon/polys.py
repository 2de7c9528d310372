"""The Runyon polynomial family and every route that computes it.

The family g_0, g_1, g_2, ... lives in Q(alpha, beta)[x] and is pinned down
by g_0(x) = 1 together with the functional-difference relation

    (x - alpha) (alpha - beta)^(n-1) g_n(x)
        = alpha (x - beta)^n g_{n-1}(alpha) - x (alpha - beta)^n g_{n-1}(x).

Everything here produces members of that family, or data about them, by
genuinely independent routes so the verification layer can play them against
each other:

* ``g_recurrence``     solves the relation directly with exact division,
* ``g_lagrange``       extracts g_n from 1/(1 - y) where y = t*Phi(y),
* ``riordan_A`` and ``carlitz_A``
                       give the w-basis coefficients by two binomial formulas,
* ``G_closed`` / ``G_from_recurrence``
                       expand the closed generating function and the
                       recurrence-generated one,
* ``morrison_g``       evaluates an alternating finite sum at exact points,
* ``kernel_root``, ``T_forward``, ``t_of_T_closed``, ``narayana_gf``,
  ``y_closed``        expose the series actors behind the closed forms.

The w-basis writes g_n = sum_k A_k * w^k with w = (x - beta)/(alpha - beta);
each A_k is a polynomial in alpha, beta alone, homogeneous of degree n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactalg import (
    BasisOverflow,
    DenominatorVanishes,
    ExactAlgError,
    MultiPoly,
    PointAssignment,
    RatFunc,
    exact_div,
    from_w_basis,
    to_w_basis,
)
from .series import (
    SeriesFraction,
    TruncSeries,
    poly_ring,
    rational_ring,
    ratfunc_ring,
    series_inverse,
    series_sqrt,
    lagrange_coeff,
)

X = MultiPoly.variable("x")
ALPHA = MultiPoly.variable("alpha")
BETA = MultiPoly.variable("beta")
W = MultiPoly.variable("w")


class IndexOutOfRange(ExactAlgError):
    """An index fell outside the domain where a formula is defined."""


def choose(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def catalan_number(n: int) -> int:
    """C(2n, n)/(n + 1), computed by its own binomial formula."""
    if n < 0:
        raise IndexOutOfRange("Catalan numbers start at n = 0")
    return comb(2 * n, n) // (n + 1)


def narayana_number(n: int, k: int) -> int:
    """Coefficient of alpha^k beta^(n-k) in n * g_n(alpha), divided by n.

    Equals C(n, k) C(n, k+1) / n, an integer for 0 <= k <= n - 1; the row
    sum over k recovers the n-th Catalan number.
    """
    if n < 1 or k < 0 or k > n - 1:
        raise IndexOutOfRange(f"narayana_number needs 1 <= n and 0 <= k <= n-1, got {(n, k)}")
    value = Fraction(choose(n, k) * choose(n, k + 1), n)
    if value.denominator != 1:
        raise ExactAlgError(f"narayana_number({n}, {k}) is not integral")
    return int(value)


@dataclass(frozen=True)
class GPoly:
    """A family member in w-basis form: g_n = sum A_k w^k.

    ``w_basis`` holds A_0 .. A_{n-1} as polynomials in alpha, beta; it is
    empty exactly when n = 0 (the constant family member 1).
    """

    n: int
    w_basis: tuple[MultiPoly, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise IndexOutOfRange("family index must be non-negative")
        expected = 0 if self.n == 0 else self.n
        if len(self.w_basis) != expected:
            raise ValueError(
                f"index {self.n} needs {expected} basis coefficients, got {len(self.w_basis)}"
            )

    def coefficient(self, k: int) -> MultiPoly:
        if not 0 <= k < len(self.w_basis):
            raise IndexOutOfRange(f"w-basis of member {self.n} has no coefficient {k}")
        return self.w_basis[k]

    def as_ratfunc(self) -> RatFunc:
        """The rational-function view over x, alpha, beta."""
        return from_w_basis(list(self.w_basis))

    def degree_in_w(self) -> int:
        """Largest k with A_k nonzero, -1 for the zero list (never happens)."""
        for k in range(len(self.w_basis) - 1, -1, -1):
            if not self.w_basis[k].is_zero:
                return k
        return -1

    def evaluate(self, pt: PointAssignment) -> Fraction:
        a = Fraction(pt.alpha)
        b = Fraction(pt.beta)
        if a == b:
            raise DenominatorVanishes("evaluation needs alpha != beta")
        if self.n == 0:
            return Fraction(1)
        w0 = (Fraction(pt.x) - b) / (a - b)
        values = {"alpha": a, "beta": b}
        total = Fraction(0)
        power = Fraction(1)
        for coeff in self.w_basis:
            total += coeff.evaluate(values) * power
            power *= w0
        return total

    def to_json(self) -> dict:
        return {"n": self.n, "w_basis": [c.to_json() for c in self.w_basis]}


@lru_cache(maxsize=None)
def _g_numerator(n: int, ab: tuple[Fraction, Fraction] | None) -> MultiPoly:
    """(alpha - beta)^(n-1) * g_n as a polynomial, for n >= 1; 1 for n = 0.

    With ``ab`` set, alpha and beta are replaced by those constants and the
    result is a polynomial in x alone, which is how the fast numeric
    evaluation path runs the same recursion.
    """
    if ab is None:
        a_sym, b_sym = ALPHA, BETA
    else:
        a_sym, b_sym = MultiPoly.const(ab[0]), MultiPoly.const(ab[1])
    if n == 0:
        return MultiPoly.one()
    prev = _g_numerator(n - 1, ab)
    diff = a_sym - b_sym
    scale_prev = max(n - 2, 0)
    # prev at x = alpha carries the factor diff^scale_prev; peeling it off
    # keeps every later product at the minimal polynomial size
    prev_at_alpha = exact_div(prev.substitute("x", a_sym), diff ** scale_prev)
    rhs = (
        a_sym * (X - b_sym) ** n * prev_at_alpha
        - X * diff ** (n - scale_prev) * prev
    )
    return exact_div(rhs, X - a_sym)


@lru_cache(maxsize=None)
def g_recurrence(n: int) -> GPoly:
    """Solve the defining relation exactly and return the w-basis form."""
    if n < 0:
        raise IndexOutOfRange("family index must be non-negative")
    if n == 0:
        return GPoly(0, ())
    numerator = _g_numerator(n, None)
    g = RatFunc(numerator, (ALPHA - BETA) ** (n - 1))
    return GPoly(n, tuple(to_w_basis(g, n)))


def g_recurrence_eval(n: int, pt: PointAssignment) -> Fraction:
    """g_n at an exact rational point, by the recursion over Q[x]."""
    if n < 0:
        raise IndexOutOfRange("family index must be non-negative")
    if n == 0:
        return Fraction(1)
    a = Fraction(pt.alpha)
    b = Fraction(pt.beta)
    if a == b:
        raise DenominatorVanishes("evaluation needs alpha != beta")
    numerator = _g_numerator(n, (a, b))
    return numerator.evaluate({"x": Fraction(pt.x)}) / (a - b) ** (n - 1)


@lru_cache(maxsize=None)
def g_alpha_closed(n: int) -> MultiPoly:
    """g_n at x = alpha in closed form.

    (1/n) sum_{k=0}^{n-1} C(n,k) C(n,k+1) beta^(n-k) alpha^k for n >= 1,
    and 1 for n = 0; homogeneous of degree n with Narayana coefficients.
    """
    if n < 0:
        raise IndexOutOfRange("family index must be non-negative")
    if n == 0:
        return MultiPoly.one()
    total = MultiPoly.zero()
    for k in range(n):
        c = Fraction(choose(n, k) * choose(n, k + 1), n)
        total = total + MultiPoly.const(c) * ALPHA ** k * BETA ** (n - k)
    return total


def g_alpha_value(n: int, alpha: Fraction, beta: Fraction) -> Fraction:
    """The closed form of g_n(alpha) evaluated at exact rational alpha, beta."""
    if n < 0:
        raise IndexOutOfRange("family index must be non-negative")
    if n == 0:
        return Fraction(1)
    a = Fraction(alpha)
    b = Fraction(beta)
    total = Fraction(0)
    for k in range(n):
        total += Fraction(choose(n, k) * choose(n, k + 1), n) * a ** k * b ** (n - k)
    return total


# F = 1/(1 - y) and Phi(y) = ((alpha-beta) w y + beta)/(1 - w y): the pair
# whose fixed point y = t*Phi(y) makes 1/(1-y) the generating function of
# the family in the w variable
_F_GEOMETRIC = SeriesFraction((1,), (1, -1))
_PHI_W = SeriesFraction((BETA, (ALPHA - BETA) * W), (MultiPoly.one(), -W))


@lru_cache(maxsize=None)
def g_lagrange(n: int) -> GPoly:
    """Extract g_n from the fixed-point series by Lagrange inversion.

    Computes (1/n) [z^(n-1)] F'(z) Phi(z)^n over Q[alpha, beta, w] and reads
    the w-basis off the w-powers of the result.
    """
    if n < 0:
        raise IndexOutOfRange("family index must be non-negative")
    if n == 0:
        return GPoly(0, ())
    value = lagrange_coeff(_F_GEOMETRIC, _PHI_W, n, poly_ring, variable="z")
    by_w_power = value.coefficients_in("w")
    if any(k >= n for k in by_w_power):
        raise BasisOverflow(f"member {n} produced a w-power beyond {n - 1}")
    basis = tuple(by_w_power.get(k, MultiPoly.zero()) for k in range(n))
    return GPoly(n, basis)


def _series_context(at: PointAssignment | None):
    """Ring and (x, alpha, beta) constants for symbolic or point-bound series."""
    if at is None:
        return ratfunc_ring, RatFunc(X), RatFunc(ALPHA), RatFunc(BETA)
    return rational_ring, Fraction(at.x), Fraction(at.alpha), Fraction(at.beta)


def _pair_context(at: PointAssignment | None):
    """Ring and (alpha, beta) for series whose coefficients avoid x."""
    if at is None:
        return poly_ring, ALPHA, BETA
    return rational_ring, Fraction(at.alpha), Fraction(at.beta)


def kernel_root(order: int, at: PointAssignment | None = None) -> TruncSeries:
    """Expansion in t of alpha / (1 + t (alpha - beta)^2).

    This is the argument value that annihilates the relation's (x - alpha)
    denominator inside the generating-function form, so the numerator there
    must vanish as well; ``verify_kernel`` checks that consequence.
    """
    ring, a, b = _pair_context(at)
    d = a - b
    return SeriesFraction((a,), (1, d * d)).expand(ring, "t", order)


def T_forward(order: int, at: PointAssignment | None = None) -> TruncSeries:
    """The substitution series T(t) = (kernel_root(t) - beta) * t."""
    if at is None:
        ring = ratfunc_ring
        a, b = RatFunc(ALPHA), RatFunc(BETA)
    else:
        ring = rational_ring
        a, b = Fraction(at.alpha), Fraction(at.beta)
    d = a - b
    return SeriesFraction((0, d, -b * d * d), (1, d * d)).expand(ring, "t", order)


def t_of_T_closed(order: int, at: PointAssignment | None = None) -> TruncSeries:
    """Closed form of the inverse substitution t(T).

    Expands (1 - T(alpha-beta) - sqrt(1 - 2T(alpha+beta) + T^2(alpha-beta)^2))
    divided by 2 beta (alpha - beta); the compositional inverse of
    ``T_forward``, which ``series_revert`` confirms.
    """
    if at is None:
        ring = ratfunc_ring
        a, b = RatFunc(ALPHA), RatFunc(BETA)
    else:
        ring = rational_ring
        a, b = Fraction(at.alpha), Fraction(at.beta)
    d = a - b
    inner = TruncSeries(ring, "T", [1, -2 * (a + b), d * d], order=order)
    root = series_sqrt(inner, ring.one)
    linear = TruncSeries(ring, "T", [1, -d], order=order)
    numerator = linear - root
    scale = ring.invert(ring.coerce(2 * b * d))
    return numerator * scale


def narayana_gf(order: int, at: PointAssignment | None = None) -> TruncSeries:
    """Generating function of the g_n(alpha) values.

    Expands (1 + T(alpha-beta) - sqrt(1 - 2T(alpha+beta) + T^2(alpha-beta)^2))
    / (2 T alpha); coefficient n equals g_alpha_closed(n).  The division by
    T is a valuation shift, the division by 2 alpha is exact on every
    coefficient.
    """
    ring, a, b = _pair_context(at)
    d = a - b
    extended = order + 1
    inner = TruncSeries(ring, "T", [1, -2 * (a + b), d * d], order=extended)
    root = series_sqrt(inner, ring.one)
    linear = TruncSeries(ring, "T", [1, d], order=extended)
    shifted = (linear - root).shift_down(1)
    two_alpha = ring.coerce(2 * a)
    coeffs = [ring.divide_exact(c, two_alpha) for c in shifted.coeffs]
    return TruncSeries(ring, "T", coeffs)


def G_closed(order: int, at: PointAssignment | None = None) -> TruncSeries:
    """Closed form of the generating function with coefficients
    (alpha - beta)^(n-1) g_n(x).

    Numerator: 1 + t(x-beta)(alpha-beta) - sqrt(1 - 2t(x-beta)(alpha+beta)
    + t^2 (x-beta)^2 (alpha-beta)^2) + 2(x-alpha)/(alpha-beta); denominator:
    2(x - alpha + x t (alpha-beta)^2).  The constant coefficient is
    1/(alpha - beta).
    """
    ring, x, a, b = _series_context(at)
    d = a - b
    u = x - b
    inner = TruncSeries(
        ring, "t", [1, -2 * u * (a + b), (u * d) ** 2], order=order
    )
    root = series_sqrt(inner, ring.one)
    head = ring.coerce(1 + 2 * (x - a) / d)
    linear = TruncSeries(ring, "t", [head, u * d], order=order)
    numerator = linear - root
    denominator = TruncSeries(ring, "t", [2 * (x - a), 2 * x * d * d], order=order)
    return numerator * series_inverse(denominator)


def G_from_recurrence(order: int, at: PointAssignment | None = None) -> TruncSeries:
    """The same generating function assembled from the recurrence.

    Coefficient n is (alpha - beta)^(n-1) g_n(x); the n = 0 term is
    1/(alpha - beta).
    """
    if at is None:
        ring = ratfunc_ring
        coeffs = [RatFunc(MultiPoly.one(), ALPHA - BETA)]
        coeffs.extend(RatFunc(_g_numerator(n, None)) for n in range(1, order + 1))
    else:
        ring = rational_ring
        a, b = Fraction(at.alpha), Fraction(at.beta)
        if a == b:
            raise DenominatorVanishes("the n = 0 coefficient needs alpha != beta")
        x0 = Fraction(at.x)
        ab = (a, b)
        coeffs = [1 / (a - b)]
        coeffs.extend(
            _g_numerator(n, ab).evaluate({"x": x0}) for n in range(1, order + 1)
        )
    return TruncSeries(ring, "t", coeffs)


def phi_fraction(at: PointAssignment | None = None) -> SeriesFraction:
    """Phi(y) = (beta + (x - beta) y) / (1 - w y) with w = (x-beta)/(alpha-beta).

    The quotient whose fixed point y = t*Phi(y) has 1/(1-y) generating the
    family; here over the full rational-function field so x stays symbolic.
    """
    if at is None:
        w = RatFunc(X - BETA, ALPHA - BETA)
        return SeriesFraction(
            (RatFunc(BETA), RatFunc(X - BETA)), (RatFunc.one(), -w)
        )
    x, a, b = Fraction(at.x), Fraction(at.alpha), Fraction(at.beta)
    if a == b:
        raise DenominatorVanishes("w needs alpha != beta")
    w = (x - b) / (a - b)
    return SeriesFraction((b, x - b), (Fraction(1), -w))


def y_closed(
    order: int,
    at: PointAssignment | None = None,
    root_hint: RatFunc | Fraction | None = None,
) -> TruncSeries:
    """The fixed-point series y(t) in closed form.

    Solves w y^2 - (1 - t(alpha-beta)w) y + t beta = 0 for the branch with
    y(0) = 0: with u = x - beta and d = alpha - beta,

        y = (d - t d u - sqrt(d^2 - 2t d(alpha+beta) u + t^2 d^2 u^2)) / (2u).

    ``root_hint`` selects the square root's constant term (default d); the
    other branch makes y(0) nonzero and raises BadRootHint.
    """
    from .series import BadRootHint

    ring, x, a, b = _series_context(at)
    d = a - b
    u = x - b
    if at is not None and u == 0:
        raise DenominatorVanishes("the closed form divides by 2(x - beta)")
    hint = ring.coerce(d if root_hint is None else root_hint)
    inner = TruncSeries(
        ring, "t", [d * d, -2 * d * (a + b) * u, (d * u) ** 2], order=order
    )
    root = series_sqrt(inner, hint)
    linear = TruncSeries(ring, "t", [d, -d * u], order=order)
    y = (linear - root) * ring.invert(ring.coerce(2 * u))
    if not ring.is_zero(y.coefficient(0)):
        raise BadRootHint("this branch does not vanish at t = 0")
    return y


def morrison_g(n: int, pt: PointAssignment) -> Fraction:
    """Alternating finite-sum route to g_n, at an exact rational point.

    g_n(x) = (alpha-beta)^n x^n / (alpha-x)^n
             - alpha * sum_{k=1}^{n} x^(n-k) (alpha-x)^(k-1-n)
               (alpha-beta)^(n+1-2k) (x-beta)^k g_{k-1}(alpha),

    using the closed form for the g_{k-1}(alpha) values.  Needs x != alpha
    and alpha != beta.
    """
    if n < 0:
        raise IndexOutOfRange("family index must be non-negative")
    if n == 0:
        return Fraction(1)
    x = Fraction(pt.x)
    a = Fraction(pt.alpha)
    b = Fraction(pt.beta)
    if x == a:
        raise DenominatorVanishes("the formula divides by (alpha - x)")
    if a == b:
        raise DenominatorVanishes("the formula divides by (alpha - beta)")
    d = a - b
    total = d ** n * x ** n / (a - x) ** n
    for k in range(1, n + 1):
        total -= (
            a
            * x ** (n - k)
            * (a - x) ** (k - 1 - n)
            * d ** (n + 1 - 2 * k)
            * (x - b) ** k
            * g_alpha_value(k - 1, a, b)
        )
    return total


def morrison_g_ratfunc(n: int) -> RatFunc:
    """The same alternating sum carried out symbolically."""
    if n < 0:
        raise IndexOutOfRange("family index must be non-negative")
    if n == 0:
        return RatFunc.one()
    x, a, b = RatFunc(X), RatFunc(ALPHA), RatFunc(BETA)
    d = a - b
    total = d ** n * x ** n * (a - x) ** (-n)
    for k in range(1, n + 1):
        total = total - (
            a
            * x ** (n - k)
            * (a - x) ** (k - 1 - n)
            * d ** (n + 1 - 2 * k)
            * (x - b) ** k
            * RatFunc(g_alpha_closed(k - 1))
        )
    return total


def phi(r: int, k: int) -> MultiPoly:
    """phi_{r,k} = sum_j C(r,j) C(k,j) alpha^j beta^(k-j), zero for k < 0."""
    if r < 0:
        raise IndexOutOfRange("phi needs r >= 0")
    if k < 0:
        return MultiPoly.zero()
    total = MultiPoly.zero()
    for j in range(min(r, k) + 1):
        total = total + choose(r, j) * choose(k, j) * ALPHA ** j * BETA ** (k - j)
    return total


def carlitz_A(r: int, n: int) -> MultiPoly:
    """w-basis coefficient A_r of member n by the phi recursion.

    A_r = beta phi_{r,n-1}
          - alpha sum_{s=1}^{r-1} g_{r-s}(alpha) phi_{s-1,n-r+s-1}
          - beta phi_{r-1,n-1},  defined for 1 <= r <= n - 1.
    """
    if not 1 <= r <= n - 1:
        raise IndexOutOfRange(f"carlitz_A is defined for 1 <= r <= n-1, got {(r, n)}")
    middle = MultiPoly.zero()
    for s in range(1, r):
        middle = middle + g_alpha_closed(r - s) * phi(s - 1, n - r + s - 1)
    return BETA * phi(r, n - 1) - ALPHA * middle - BETA * phi(r - 1, n - 1)


def riordan_A(k: int, n: int) -> MultiPoly:
    """w-basis coefficient A_k of member n by the binomial double sum.

    A_0 = beta^n and, for 1 <= k <= n - 1,
    A_k = (n-k) sum_{j=1}^{k} (1/j) C(n-1,j-1) C(k-1,j-1) alpha^j beta^(n-j).
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise IndexOutOfRange(f"riordan_A is defined for 0 <= k <= n-1, n >= 1, got {(k, n)}")
    if k == 0:
        return BETA ** n
    total = MultiPoly.zero()
    for j in range(1, k + 1):
        c = Fraction(choose(n - 1, j - 1) * choose(k - 1, j - 1), j)
        total = total + MultiPoly.const(c) * ALPHA ** j * BETA ** (n - j)
    return (n - k) * total


def c_direct(r: int, n: int) -> MultiPoly:
    """The inner Carlitz sum sum_{s=1}^{r-1} g_{r-s}(alpha) phi_{s-1,n-r+s-1}.

    Empty (zero) for r = 1; the phi convention kills terms with a negative
    second index.
    """
    if r < 1 or n < 1:
        raise IndexOutOfRange("c_direct needs r >= 1 and n >= 1")
    total = MultiPoly.zero()
    for s in range(1, r):
        total = total + g_alpha_closed(r - s) * phi(s - 1, n - r + s - 1)
    return total


def c_translated(r: int, n: int) -> MultiPoly:
    """A min/max translated form of the same sum, kept verbatim.

    sum_j C(min(r,n), j) C(max(r,n)-1, j-1) alpha^(j-1) beta^(n-j).  Compared
    against ``c_direct`` rather than asserted equal; see ``c_compare``.
    """
    if r < 1 or n < 1:
        raise IndexOutOfRange("c_translated needs r >= 1 and n >= 1")
    lo, hi = min(r, n), max(r, n)
    total = MultiPoly.zero()
    for j in range(1, lo + 1):
        total = total + (
            choose(lo, j) * choose(hi - 1, j - 1) * ALPHA ** (j - 1) * BETA ** (n - j)
        )
    return total


def c_translated_lowered(r: int, n: int) -> MultiPoly:
    """The translation with its first binomial's upper index lowered by one.

    sum_j C(min(r,n)-1, j) C(max(r,n)-1, j-1) alpha^(j-1) beta^(n-j); brute
    force over small r, n finds this variant, not ``c_translated``, matching
    ``c_direct``.
    """
    if r < 1 or n < 1:
        raise IndexOutOfRange("c_translated_lowered needs r >= 1 and n >= 1")
    lo, hi = min(r, n), max(r, n)
    total = MultiPoly.zero()
    for j in range(1, lo + 1):
        total = total + (
            choose(lo - 1, j) * choose(hi - 1, j - 1) * ALPHA ** (j - 1) * BETA ** (n - j)
        )
    return total
