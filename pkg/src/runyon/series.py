"""Truncated formal power series over exact coefficient rings.

A ``TruncSeries`` holds coefficients c_0 .. c_N of a series in one formal
variable, always exactly N+1 entries.  Coefficients live in one of three
rings, all exact:

* ``rational_ring``   Q, plain ``Fraction`` scalars,
* ``poly_ring``       Q[x, alpha, beta, w] via ``MultiPoly``,
* ``ratfunc_ring``    its fraction field via ``RatFunc``.

Binary operations require the same variable name and the same ring and
truncate to the shorter order.  Square roots never pick a branch silently:
``series_sqrt`` takes the desired constant-term root explicitly and verifies
it squares to c_0.

``SeriesFraction`` is a quotient of two polynomials in the series variable
with ring coefficients.  It is the input shape for the functional-equation
solver y = t*Phi(y) and for Lagrange inversion
[t^n] F(y) = (1/n) [z^(n-1)] F'(z) Phi(z)^n.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .exactalg import MultiPoly, RatFunc, exact_div

DEFAULT_SYMBOLIC_ORDER = 16
DEFAULT_NUMERIC_ORDER = 40


class SeriesError(Exception):
    """Base class for series failures."""


class VariableMismatch(SeriesError):
    """Operands use different formal variables or coefficient rings."""


class NotInvertibleConstantTerm(SeriesError):
    """The constant term is not a unit of the coefficient ring."""


class BadRootHint(SeriesError):
    """The supplied constant-term root does not square to c_0."""


class NonzeroInnerConstant(SeriesError):
    """Composition requires the inner series to vanish at the origin."""


class ValuationMismatch(SeriesError):
    """Reversion requires valuation exactly one."""


class PoleAtOrigin(SeriesError):
    """A series quotient has a denominator that vanishes at the origin."""


class CoefficientRing:
    """Minimal exact ring interface used by TruncSeries.

    Elements carry their own operators; the ring object supplies identity
    elements, rational embedding, and unit handling, which differ per ring.
    """

    name: str = "abstract"
    zero: Any = None
    one: Any = None

    def coerce(self, value):
        raise NotImplementedError

    def scalar(self, q: Fraction | int):
        """Embed a rational number."""
        return self.coerce(Fraction(q))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def is_invertible(self, a) -> bool:
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def divide_exact(self, a, b):
        """a/b when the quotient exists in the ring; raises otherwise."""
        raise NotImplementedError


class RationalField(CoefficientRing):
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, MultiPoly) and value.is_constant:
            return value.constant_value()
        raise TypeError(f"cannot coerce {value!r} into Q")

    def is_zero(self, a) -> bool:
        return not a

    def is_invertible(self, a) -> bool:
        return bool(a)

    def invert(self, a):
        return 1 / a

    def divide_exact(self, a, b):
        return a / b


class PolynomialRing(CoefficientRing):
    name = "poly"
    zero = MultiPoly.zero()
    one = MultiPoly.one()

    def coerce(self, value):
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MultiPoly.const(value)
        raise TypeError(f"cannot coerce {value!r} into Q[x, alpha, beta, w]")

    def is_zero(self, a) -> bool:
        return a.is_zero

    def is_invertible(self, a) -> bool:
        return a.is_constant and not a.is_zero

    def invert(self, a):
        if not self.is_invertible(a):
            raise NotInvertibleConstantTerm(f"{a} is not a unit polynomial")
        return MultiPoly.const(1 / a.constant_value())

    def divide_exact(self, a, b):
        return exact_div(a, b)


class RationalFunctionField(CoefficientRing):
    name = "ratfunc"
    zero = RatFunc.zero()
    one = RatFunc.one()

    def coerce(self, value):
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (MultiPoly, int, Fraction)):
            return RatFunc(value)
        raise TypeError(f"cannot coerce {value!r} into Q(x, alpha, beta, w)")

    def is_zero(self, a) -> bool:
        return a.is_zero

    def is_invertible(self, a) -> bool:
        return not a.is_zero

    def invert(self, a):
        return a.reciprocal()

    def divide_exact(self, a, b):
        return a / b


rational_ring = RationalField()
poly_ring = PolynomialRing()
ratfunc_ring = RationalFunctionField()


class TruncSeries:
    """Series truncated at a fixed order, with exactly order+1 coefficients."""

    __slots__ = ("ring", "variable", "coeffs")

    def __init__(
        self,
        ring: CoefficientRing,
        variable: str,
        coeffs: Sequence,
        order: int | None = None,
    ):
        if not variable:
            raise ValueError("series variable name must be non-empty")
        values = [ring.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if len(values) > order + 1:
                values = values[: order + 1]
            else:
                values.extend(ring.zero for _ in range(order + 1 - len(values)))
        elif not values:
            raise ValueError("a series needs at least its constant coefficient")
        self.ring = ring
        self.variable = variable
        self.coeffs = tuple(values)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, ring: CoefficientRing, variable: str, order: int) -> "TruncSeries":
        return cls(ring, variable, (), order=order)

    @classmethod
    def constant(cls, ring: CoefficientRing, variable: str, value, order: int) -> "TruncSeries":
        return cls(ring, variable, (value,), order=order)

    @classmethod
    def one(cls, ring: CoefficientRing, variable: str, order: int) -> "TruncSeries":
        return cls.constant(ring, variable, ring.one, order)

    @classmethod
    def identity(cls, ring: CoefficientRing, variable: str, order: int) -> "TruncSeries":
        if order < 1:
            raise ValueError("the identity series needs order >= 1")
        return cls(ring, variable, (ring.zero, ring.one), order=order)

    # -- queries ---------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def constant_term(self):
        return self.coeffs[0]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if all stored are zero."""
        for k, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return k
        return None

    def _check_compat(self, other: "TruncSeries") -> None:
        if self.variable != other.variable:
            raise VariableMismatch(
                f"series in {self.variable!r} cannot combine with series in {other.variable!r}"
            )
        if type(self.ring) is not type(other.ring):
            raise VariableMismatch(
                f"coefficient rings differ: {self.ring.name} vs {other.ring.name}"
            )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_compat(other)
        n = min(self.order, other.order)
        ring = self.ring
        return TruncSeries(
            ring,
            self.variable,
            [ring.add(a, b) for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])],
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_compat(other)
        n = min(self.order, other.order)
        ring = self.ring
        return TruncSeries(
            ring,
            self.variable,
            [ring.sub(a, b) for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])],
        )

    def __neg__(self) -> "TruncSeries":
        ring = self.ring
        return TruncSeries(ring, self.variable, [ring.neg(c) for c in self.coeffs])

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check_compat(other)
            n = min(self.order, other.order)
            ring = self.ring
            a = self.coeffs
            b = other.coeffs
            out = []
            for k in range(n + 1):
                acc = ring.zero
                for j in range(k + 1):
                    if ring.is_zero(a[j]) or ring.is_zero(b[k - j]):
                        continue
                    acc = ring.add(acc, ring.mul(a[j], b[k - j]))
                out.append(acc)
            return TruncSeries(ring, self.variable, out)
        # scalar path: a ring element or something coercible into one
        ring = self.ring
        c = ring.coerce(other)
        return TruncSeries(ring, self.variable, [ring.mul(v, c) for v in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        """Coefficient-wise equality up to the common truncation order."""
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.variable != other.variable or type(self.ring) is not type(other.ring):
            return False
        n = min(self.order, other.order)
        return all(
            self.ring.eq(a, b)
            for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])
        )

    __hash__ = None  # equality ignores coefficients beyond the common order

    # -- structural helpers ------------------------------------------------------

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot truncate order {self.order} series up to {order}")
        return TruncSeries(self.ring, self.variable, self.coeffs[: order + 1])

    def renamed(self, variable: str) -> "TruncSeries":
        return TruncSeries(self.ring, variable, self.coeffs)

    def shift_up(self, k: int = 1) -> "TruncSeries":
        """Multiply by variable**k, preserving the truncation order."""
        if k < 0:
            raise ValueError("shift_up expects k >= 0")
        ring = self.ring
        coeffs = [ring.zero] * k + list(self.coeffs[: len(self.coeffs) - k])
        return TruncSeries(ring, self.variable, coeffs)

    def shift_down(self, k: int = 1) -> "TruncSeries":
        """Divide by variable**k; the k low coefficients must vanish."""
        if k < 0:
            raise ValueError("shift_down expects k >= 0")
        if k > self.order:
            raise ValuationMismatch("not enough coefficients to shift down")
        for c in self.coeffs[:k]:
            if not self.ring.is_zero(c):
                raise ValuationMismatch("series has valuation below the requested shift")
        return TruncSeries(self.ring, self.variable, self.coeffs[k:])

    def derivative(self) -> "TruncSeries":
        """Formal derivative; the order drops by one."""
        ring = self.ring
        if self.order == 0:
            return TruncSeries(ring, self.variable, (ring.zero,))
        out = [ring.mul(self.coeffs[k], ring.scalar(k)) for k in range(1, self.order + 1)]
        return TruncSeries(ring, self.variable, out)

    def to_json(self) -> dict:
        return {
            "variable": self.variable,
            "order": self.order,
            "coeffs": [_coeff_json(c) for c in self.coeffs],
        }

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:4])
        tail = ", ..." if self.order > 3 else ""
        return f"TruncSeries[{self.variable}; O({self.order})]({head}{tail})"


def _coeff_json(c):
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, MultiPoly):
        return c.to_json()
    if isinstance(c, RatFunc):
        return c.to_json()
    raise TypeError(f"unserializable coefficient {c!r}")


def series_inverse(s: TruncSeries) -> TruncSeries:
    """Multiplicative inverse, requires an invertible constant term."""
    ring = s.ring
    a = s.coeffs
    if not ring.is_invertible(a[0]):
        raise NotInvertibleConstantTerm(f"constant term {a[0]} is not a unit")
    b0 = ring.invert(a[0])
    out = [b0]
    for k in range(1, s.order + 1):
        acc = ring.zero
        for j in range(1, k + 1):
            if ring.is_zero(a[j]) or ring.is_zero(out[k - j]):
                continue
            acc = ring.add(acc, ring.mul(a[j], out[k - j]))
        out.append(ring.neg(ring.mul(b0, acc)))
    return TruncSeries(ring, s.variable, out)


def series_sqrt(s: TruncSeries, c0_root) -> TruncSeries:
    """Square root with an explicit branch choice.

    ``c0_root`` must square to the constant term (else BadRootHint).  When
    2*c0_root is a unit each new coefficient is a straight multiplication;
    otherwise the recursion falls back to exact ring division, so roots like
    alpha - beta work over the polynomial ring as long as every quotient
    stays in the ring.  The result r satisfies r*r == s up to the truncation
    order and r_0 == c0_root exactly.
    """
    ring = s.ring
    root = ring.coerce(c0_root)
    if not ring.eq(ring.mul(root, root), s.coeffs[0]):
        raise BadRootHint(f"{root} squared is not the constant term {s.coeffs[0]}")
    two_root = ring.mul(ring.scalar(2), root)
    if ring.is_zero(two_root):
        raise NotInvertibleConstantTerm("cannot branch a square root at 0")
    if ring.is_invertible(two_root):
        inv = ring.invert(two_root)
        step = lambda v: ring.mul(v, inv)
    else:
        step = lambda v: ring.divide_exact(v, two_root)
    out = [root]
    for k in range(1, s.order + 1):
        acc = ring.zero
        for j in range(1, k):
            if ring.is_zero(out[j]) or ring.is_zero(out[k - j]):
                continue
            acc = ring.add(acc, ring.mul(out[j], out[k - j]))
        out.append(step(ring.sub(s.coeffs[k], acc)))
    return TruncSeries(ring, s.variable, out)


def series_pow(s: TruncSeries, k: int) -> TruncSeries:
    """Non-negative integer power by repeated squaring, truncating throughout."""
    if k < 0:
        raise ValueError("series_pow expects k >= 0")
    result = TruncSeries.one(s.ring, s.variable, s.order)
    base = s
    while k:
        if k & 1:
            result = result * base
        if k > 1:
            base = base * base
        k >>= 1
    return result


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner), requires inner to vanish at the origin.

    The result is a series in the inner variable, truncated to the smaller of
    the two orders.
    """
    if type(outer.ring) is not type(inner.ring):
        raise VariableMismatch(
            f"coefficient rings differ: {outer.ring.name} vs {inner.ring.name}"
        )
    ring = inner.ring
    if not ring.is_zero(inner.coeffs[0]):
        raise NonzeroInnerConstant("inner series has a nonzero constant term")
    n = min(outer.order, inner.order)
    inner_t = inner.truncate(n)
    acc = TruncSeries.constant(ring, inner.variable, outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        acc = acc * inner_t + TruncSeries.constant(ring, inner.variable, outer.coeffs[k], n)
    return acc


def series_revert(s: TruncSeries) -> TruncSeries:
    """Compositional inverse of a series with valuation exactly one.

    Uses the inversion formula [t^n] s^(-1) = (1/n) [u^(n-1)] (u/s(u))^n,
    so it needs c_0 = 0 and c_1 a unit; both failures raise
    ValuationMismatch.
    """
    ring = s.ring
    if not ring.is_zero(s.coeffs[0]):
        raise ValuationMismatch("cannot revert a series with nonzero constant term")
    if s.order < 1 or not ring.is_invertible(s.coeffs[1]):
        raise ValuationMismatch("reversion needs an invertible linear coefficient")
    n_max = s.order
    low = s.shift_down(1)  # s/u, unit constant term
    inv = series_inverse(low)  # u/s(u)
    out = [ring.zero]
    power = TruncSeries.one(ring, s.variable, n_max - 1)
    for n in range(1, n_max + 1):
        power = power * inv
        out.append(ring.mul(ring.scalar(Fraction(1, n)), power.coefficient(n - 1)))
    return TruncSeries(ring, s.variable, out)


def horner_eval(coeffs: Sequence, at: TruncSeries) -> TruncSeries:
    """Polynomial-in-ring-coefficients evaluated at a series."""
    ring = at.ring
    values = [ring.coerce(c) for c in coeffs] or [ring.zero]
    acc = TruncSeries.constant(ring, at.variable, values[-1], at.order)
    for c in reversed(values[:-1]):
        acc = acc * at + TruncSeries.constant(ring, at.variable, c, at.order)
    return acc


class SeriesFraction:
    """Quotient num/den of polynomials in the series variable.

    ``num`` and ``den`` are coefficient sequences (ascending powers) over a
    coefficient ring.  This is the shape taken by the functional-equation
    solver and by Lagrange inversion.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence, den: Sequence = (1,)):
        self.num = tuple(num)
        self.den = tuple(den)
        if not self.den:
            raise ZeroDivisionError("empty denominator")

    def expand(self, ring: CoefficientRing, variable: str, order: int) -> TruncSeries:
        """Power-series expansion at the origin up to ``order``."""
        den0 = ring.coerce(self.den[0])
        if not ring.is_invertible(den0):
            raise PoleAtOrigin(f"denominator constant term {den0} is not a unit")
        num_s = TruncSeries(ring, variable, self.num or (ring.zero,), order=order)
        den_s = TruncSeries(ring, variable, self.den, order=order)
        return num_s * series_inverse(den_s)

    def at_series(self, y: TruncSeries) -> TruncSeries:
        """Evaluate the quotient at a series argument."""
        ring = y.ring
        num_s = horner_eval(self.num, y)
        den_s = horner_eval(self.den, y)
        if not ring.is_invertible(den_s.coefficient(0)):
            raise PoleAtOrigin("denominator vanishes at the argument's constant term")
        return num_s * series_inverse(den_s)


def solve_functional(
    phi: SeriesFraction, ring: CoefficientRing, variable: str, order: int
) -> TruncSeries:
    """Solve y = t * phi(y) by fixed-point iteration.

    Iterate k is correct to order k, so ``order`` rounds suffice.  Raises
    PoleAtOrigin when phi has no finite value at y = 0.
    """
    den0 = ring.coerce(phi.den[0] if phi.den else 0)
    if not ring.is_invertible(den0):
        raise PoleAtOrigin("phi has a pole at the origin")
    y = TruncSeries.zeros(ring, variable, order)
    for _ in range(order):
        y = phi.at_series(y).shift_up(1)
    return y


def lagrange_coeff(
    F: SeriesFraction, phi: SeriesFraction, n: int, ring: CoefficientRing, variable: str = "z"
):
    """[t^n] F(y) for the solution y of y = t*phi(y), by Lagrange inversion.

    Computes (1/n) [z^(n-1)] F'(z) phi(z)^n; requires n >= 1.
    """
    if n < 1:
        raise ValueError("lagrange_coeff needs n >= 1")
    f_series = F.expand(ring, variable, n)
    f_prime = f_series.derivative()
    phi_series = phi.expand(ring, variable, n - 1)
    total = f_prime * series_pow(phi_series, n)
    return ring.mul(ring.scalar(Fraction(1, n)), total.coefficient(n - 1))
