"""Exact arithmetic kernel: sparse polynomials and rational functions.

Everything here is exact.  Scalars are ``fractions.Fraction`` (aliased as
``Rational``), polynomials live in Q[x, alpha, beta, w] with a fixed variable
order, and rational functions are quotients of such polynomials compared by
cross-multiplication, never by GCD cancellation.

Representation notes:

* A monomial is a 4-tuple of non-negative exponents, one slot per entry of
  ``VARIABLES`` = (x, alpha, beta, w).  The serialized form is a map from
  variable name to exponent with zero exponents omitted.
* ``MultiPoly`` stores a dict mapping monomials to nonzero ``Fraction``
  coefficients; the zero polynomial is the empty dict.
* Monomial comparisons use graded lexicographic order: total degree first,
  ties broken lexicographically with x > alpha > beta > w.
* ``RatFunc`` normalization only divides numerator and denominator by members
  of a fixed factor list (alpha-beta, x-alpha, x-beta, alpha, beta, x) plus a
  scalar that makes the denominator primitive with positive leading
  coefficient.  No multivariate GCD is ever computed, so two equal values may
  have different representations; ``==`` cross-multiplies.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Fraction

VARIABLES = ("x", "alpha", "beta", "w")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_PRETTY = {"x": "x", "alpha": "α", "beta": "β", "w": "w"}

Exponents = tuple
_ZERO_EXP = (0, 0, 0, 0)

_F0 = Fraction(0)
_F1 = Fraction(1)

Coeffable = Union["MultiPoly", Fraction, int]


class ExactAlgError(Exception):
    """Base class for exact-arithmetic failures."""


class DivisionNotExact(ExactAlgError):
    """Polynomial division left a nonzero remainder."""


class DenominatorVanishes(ExactAlgError):
    """A denominator evaluated to zero at the requested point."""


class BasisOverflow(ExactAlgError):
    """A rational function does not fit the requested (x-beta)/(alpha-beta) basis."""


def _grlex(exp: Exponents) -> tuple:
    return (sum(exp), exp)


def _mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


class MultiPoly:
    """Sparse exact polynomial in Q[x, alpha, beta, w]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Coeffable] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for exp, coeff in items:
            exp = tuple(exp)
            c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if not c:
                continue
            s = acc.get(exp, _F0) + c
            if s:
                acc[exp] = s
            else:
                acc.pop(exp, None)
        self._terms = acc
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({_ZERO_EXP: _F1})

    @classmethod
    def const(cls, value: Fraction | int) -> "MultiPoly":
        return cls({_ZERO_EXP: Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}, expected one of {VARIABLES}")
        exp = [0, 0, 0, 0]
        exp[_VAR_INDEX[name]] = 1
        return cls({tuple(exp): _F1})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if non-constant."""
        if self.is_zero:
            return _F0
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self._terms[_ZERO_EXP]

    def leading_exponent(self) -> Exponents:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=_grlex)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(exp) for exp in self._terms)

    def degree_in(self, var: str) -> int:
        """Degree in a single variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        idx = _VAR_INDEX[var]
        return max(exp[idx] for exp in self._terms)

    def homogeneous_degree(self, variables: Sequence[str] | None = None) -> int | None:
        """Common total degree over ``variables`` if homogeneous, else None.

        The zero polynomial returns None.  ``variables`` defaults to all four.
        """
        if not self._terms:
            return None
        idxs = (
            range(4) if variables is None else [_VAR_INDEX[v] for v in variables]
        )
        degrees = {sum(exp[i] for i in idxs) for exp in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Terms in descending graded-lex order (deterministic)."""
        for exp in sorted(self._terms, key=_grlex, reverse=True):
            yield exp, self._terms[exp]

    def coefficient(self, exponents: Mapping[str, int]) -> Fraction:
        """Coefficient of the monomial given as a name -> exponent map."""
        exp = [0, 0, 0, 0]
        for name, e in exponents.items():
            exp[_VAR_INDEX[name]] = e
        return self._terms.get(tuple(exp), _F0)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other: Coeffable) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other: Coeffable) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for exp, c in o._terms.items():
            s = acc.get(exp, _F0) + c
            if s:
                acc[exp] = s
            else:
                acc.pop(exp, None)
        out = MultiPoly.__new__(MultiPoly)
        out._terms = acc
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.__new__(MultiPoly)
        out._terms = {exp: -c for exp, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: Coeffable) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Coeffable) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Coeffable) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_constant:
            c = o.constant_value()
            if not c:
                return MultiPoly.zero()
            out = MultiPoly.__new__(MultiPoly)
            out._terms = {exp: v * c for exp, v in self._terms.items()}
            out._hash = None
            return out
        if self.is_constant:
            return o * self.constant_value()
        acc: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                exp = _mono_mul(e1, e2)
                s = acc.get(exp, _F0) + c1 * c2
                if s:
                    acc[exp] = s
                else:
                    acc.pop(exp, None)
        out = MultiPoly.__new__(MultiPoly)
        out._terms = acc
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)  # type: ignore[arg-type]
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution and evaluation ---------------------------------------

    def coefficients_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Split into {k: coefficient of var**k}, each free of ``var``."""
        idx = _VAR_INDEX[var]
        groups: dict[int, dict] = {}
        for exp, c in self._terms.items():
            k = exp[idx]
            rest = exp[:idx] + (0,) + exp[idx + 1 :]
            bucket = groups.setdefault(k, {})
            s = bucket.get(rest, _F0) + c
            if s:
                bucket[rest] = s
            else:
                bucket.pop(rest, None)
        out = {}
        for k, bucket in groups.items():
            p = MultiPoly.__new__(MultiPoly)
            p._terms = bucket
            p._hash = None
            if bucket:
                out[k] = p
        return out

    def substitute(self, var: str, value: Coeffable) -> "MultiPoly":
        """Substitute a polynomial value for one variable (Horner scheme)."""
        val = self._coerce(value)
        if val is None:
            raise TypeError("substitute expects a polynomial or rational value")
        groups = self.coefficients_in(var)
        if not groups:
            return MultiPoly.zero()
        top = max(groups)
        acc = groups.get(top, MultiPoly.zero())
        for k in range(top - 1, -1, -1):
            acc = acc * val + groups.get(k, MultiPoly.zero())
        return acc

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        """Exact evaluation; every variable that occurs needs a value."""
        total = _F0
        for exp, c in self._terms.items():
            v = c
            for i, e in enumerate(exp):
                if e:
                    name = VARIABLES[i]
                    if name not in values:
                        raise ValueError(f"no value supplied for variable {name!r}")
                    v *= Fraction(values[name]) ** e
            total += v
        return total

    def content(self) -> Fraction:
        """Scalar c with self = c * (primitive integer polynomial, positive lead).

        Content of the zero polynomial is 1 so that dividing by it is safe.
        """
        if not self._terms:
            return _F1
        num_gcd = 0
        den_lcm = 1
        for c in self._terms.values():
            num_gcd = gcd(num_gcd, abs(c.numerator))
            den_lcm = lcm(den_lcm, c.denominator)
        c = Fraction(num_gcd, den_lcm)
        if self._terms[self.leading_exponent()] < 0:
            c = -c
        return c

    # -- rendering and serialization ----------------------------------------

    def to_str(self, ascii_names: bool = False) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for exp, c in self.terms():
            factors = []
            for i, e in enumerate(exp):
                if e:
                    name = VARIABLES[i] if ascii_names else _PRETTY[VARIABLES[i]]
                    factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_str(ascii_names=True)!r})"

    def to_json(self) -> list:
        """List of {"coefficient": "p/q", "exponents": {var: e}} term objects."""
        out = []
        for exp, c in self.terms():
            exps = {VARIABLES[i]: e for i, e in enumerate(exp) if e}
            out.append({"coefficient": str(c), "exponents": exps})
        return out

    @classmethod
    def from_json(cls, data: list) -> "MultiPoly":
        pairs = []
        for term in data:
            exp = [0, 0, 0, 0]
            for name, e in term["exponents"].items():
                exp[_VAR_INDEX[name]] = int(e)
            pairs.append((tuple(exp), Fraction(term["coefficient"])))
        return cls(pairs)


def exact_div(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Exact multivariate division under graded-lex order.

    Returns q with p = q*d.  Raises DivisionNotExact when no such polynomial
    exists (including any nonzero remainder).
    """
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return MultiPoly.zero()
    if d.is_constant:
        return p * (_F1 / d.constant_value())
    d_lead = d.leading_exponent()
    d_lc = d._terms[d_lead]
    d_items = list(d._terms.items())
    rem = dict(p._terms)
    quot: dict = {}
    while rem:
        e = max(rem, key=_grlex)
        q_exp = tuple(a - b for a, b in zip(e, d_lead))
        if any(v < 0 for v in q_exp):
            raise DivisionNotExact(f"{p!r} is not divisible by {d!r}")
        q_c = rem[e] / d_lc
        quot[q_exp] = quot.get(q_exp, _F0) + q_c
        for de, dc in d_items:
            exp = _mono_mul(q_exp, de)
            s = rem.get(exp, _F0) - q_c * dc
            if s:
                rem[exp] = s
            else:
                rem.pop(exp, None)
    return MultiPoly(quot)


# Fixed reduction factors.  Each entry carries a linear factor together with a
# substitution that vanishes exactly when the factor divides a polynomial,
# which makes divisibility a cheap O(terms) test.
def _build_tracked() -> list[tuple[MultiPoly, str, MultiPoly]]:
    x = MultiPoly.variable("x")
    alpha = MultiPoly.variable("alpha")
    beta = MultiPoly.variable("beta")
    zero = MultiPoly.zero()
    return [
        (alpha - beta, "beta", alpha),
        (x - alpha, "x", alpha),
        (x - beta, "x", beta),
        (alpha, "alpha", zero),
        (beta, "beta", zero),
        (x, "x", zero),
    ]


_TRACKED = _build_tracked()

TRACKED_FACTORS = tuple(f for f, _, _ in _TRACKED)


class RatFunc:
    """Quotient of two MultiPoly values with cross-multiplication equality.

    Instances are treated as immutable.  Construction reduces by the tracked
    factor list and normalizes the denominator to a primitive integer
    polynomial with positive leading coefficient, which keeps printing
    deterministic without ever computing a polynomial GCD.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Coeffable, den: Coeffable | None = None):
        n = MultiPoly._coerce(num)
        d = MultiPoly.one() if den is None else MultiPoly._coerce(den)
        if n is None or d is None:
            raise TypeError("RatFunc expects polynomial or rational arguments")
        if d.is_zero:
            raise ZeroDivisionError("zero denominator")
        if n.is_zero:
            self.num = MultiPoly.zero()
            self.den = MultiPoly.one()
            return
        if not d.is_constant:
            for factor, var, repl in _TRACKED:
                while not d.is_constant:
                    if d.substitute(var, repl).is_zero and n.substitute(var, repl).is_zero:
                        d = exact_div(d, factor)
                        n = exact_div(n, factor)
                    else:
                        break
        if d.is_constant:
            n = n * (_F1 / d.constant_value())
            d = MultiPoly.one()
        else:
            c = d.content()
            if c != 1:
                inv = _F1 / c
                n = n * inv
                d = d * inv
        self.num = n
        self.den = d

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(MultiPoly.zero())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(MultiPoly.one())

    @classmethod
    def const(cls, value: Fraction | int) -> "RatFunc":
        return cls(MultiPoly.const(value))

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RatFunc":
        return cls(p)

    @classmethod
    def variable(cls, name: str) -> "RatFunc":
        return cls(MultiPoly.variable(name))

    # -- queries --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    # -- arithmetic -------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (MultiPoly, int, Fraction)):
            return RatFunc(other)
        return None

    def __add__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.reciprocal() ** (-k)
        out = RatFunc.__new__(RatFunc)
        out.num = self.num**k
        out.den = self.den**k
        return out

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None  # cross-multiplied equality has no cheap canonical hash

    # -- substitution and evaluation -----------------------------------------

    def substitute(self, var: str, value: "RatFunc | MultiPoly | Fraction | int") -> "RatFunc":
        val = self._coerce(value)
        if val is None:
            raise TypeError("substitute expects a RatFunc-coercible value")
        return _poly_subst(self.num, var, val) / _poly_subst(self.den, var, val)

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise DenominatorVanishes(f"denominator {self.den} vanishes at {dict(values)}")
        return self.num.evaluate(values) / d

    # -- rendering and serialization -------------------------------------------

    def to_str(self, ascii_names: bool = False) -> str:
        if self.den.is_constant:
            return self.num.to_str(ascii_names)
        return f"({self.num.to_str(ascii_names)}) / ({self.den.to_str(ascii_names)})"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RatFunc({self.num.to_str(ascii_names=True)!r}, {self.den.to_str(ascii_names=True)!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        return cls(MultiPoly.from_json(data["num"]), MultiPoly.from_json(data["den"]))


def _poly_subst(p: MultiPoly, var: str, value: RatFunc) -> RatFunc:
    """Substitute a rational function for one variable of a polynomial.

    Horner in ``var`` over numerator and denominator separately; the result
    denominator is a power of ``value.den``.
    """
    groups = p.coefficients_in(var)
    if not groups:
        return RatFunc.zero()
    m = max(groups)
    if m == 0:
        return RatFunc(p)
    den_pows = [MultiPoly.one()]
    for _ in range(m):
        den_pows.append(den_pows[-1] * value.den)
    acc = groups.get(m, MultiPoly.zero())
    for k in range(m - 1, -1, -1):
        acc = acc * value.num + groups.get(k, MultiPoly.zero()) * den_pows[m - k]
    return RatFunc(acc, den_pows[m])


def poly_subst(p: MultiPoly, var: str, value: RatFunc) -> RatFunc:
    """Ring-homomorphic substitution of a rational function into a polynomial."""
    val = RatFunc._coerce(value)
    if val is None:
        raise TypeError("poly_subst expects a RatFunc-coercible value")
    return _poly_subst(p, var, val)


class PointAssignment:
    """Exact rational values for the symbols, used for point evaluation."""

    __slots__ = ("x", "alpha", "beta", "w", "t")

    def __init__(
        self,
        x: Fraction | int,
        alpha: Fraction | int,
        beta: Fraction | int,
        w: Fraction | int | None = None,
        t: Fraction | int | None = None,
    ):
        self.x = Fraction(x)
        self.alpha = Fraction(alpha)
        self.beta = Fraction(beta)
        self.w = None if w is None else Fraction(w)
        self.t = None if t is None else Fraction(t)

    def as_mapping(self) -> dict[str, Fraction]:
        values = {"x": self.x, "alpha": self.alpha, "beta": self.beta}
        if self.w is not None:
            values["w"] = self.w
        return values

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointAssignment):
            return NotImplemented
        return (self.x, self.alpha, self.beta, self.w, self.t) == (
            other.x,
            other.alpha,
            other.beta,
            other.w,
            other.t,
        )

    def __hash__(self) -> int:
        return hash((self.x, self.alpha, self.beta, self.w, self.t))

    def __repr__(self) -> str:
        parts = [f"x={self.x}", f"alpha={self.alpha}", f"beta={self.beta}"]
        if self.w is not None:
            parts.append(f"w={self.w}")
        if self.t is not None:
            parts.append(f"t={self.t}")
        return "PointAssignment(" + ", ".join(parts) + ")"


def eval_at_point(r: RatFunc, point: PointAssignment) -> Fraction:
    """Evaluate a rational function at an exact point."""
    return r.evaluate(point.as_mapping())


def to_w_basis(g: RatFunc, n: int) -> list[MultiPoly]:
    """Expand g in powers of w = (x-beta)/(alpha-beta).

    Returns [A_0, ..., A_{n-1}] in Q[alpha, beta] with
    g = sum_k A_k * ((x-beta)/(alpha-beta))**k.  For n = 0 the expansion is
    the empty list, which by convention encodes the constant 1.  Raises
    BasisOverflow when g does not have this shape (residual x dependence in
    the denominator, degree above n-1, or a non-matching denominator).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        if g == RatFunc.one():
            return []
        raise BasisOverflow("only the constant 1 has an empty basis")
    alpha = MultiPoly.variable("alpha")
    beta = MultiPoly.variable("beta")
    w = MultiPoly.variable("w")
    image = g.substitute("x", RatFunc(beta + w * (alpha - beta)))
    if image.den.degree_in("w") > 0 or image.den.degree_in("x") > 0:
        raise BasisOverflow(f"denominator {image.den} is not free of x and w")
    groups = image.num.coefficients_in("w")
    if groups and max(groups) > n - 1:
        raise BasisOverflow(f"degree {max(groups)} in w exceeds basis length {n}")
    basis: list[MultiPoly] = []
    for k in range(n):
        coeff = groups.get(k, MultiPoly.zero())
        try:
            a_k = exact_div(coeff, image.den)
        except DivisionNotExact as exc:
            raise BasisOverflow(f"coefficient of w^{k} is not divisible by the denominator") from exc
        if a_k.degree_in("x") > 0 or a_k.degree_in("w") > 0:
            raise BasisOverflow(f"basis coefficient {k} retains x or w")
        basis.append(a_k)
    return basis


def from_w_basis(basis: Sequence[MultiPoly]) -> RatFunc:
    """Rebuild g = sum_k A_k * ((x-beta)/(alpha-beta))**k as a RatFunc.

    The empty list encodes the constant 1 (the n = 0 convention used by
    ``to_w_basis``).
    """
    if not basis:
        return RatFunc.one()
    m = len(basis)
    x = MultiPoly.variable("x")
    alpha = MultiPoly.variable("alpha")
    beta = MultiPoly.variable("beta")
    xb = x - beta
    ab = alpha - beta
    num = MultiPoly.zero()
    xb_pow = MultiPoly.one()
    ab_pows = [MultiPoly.one()]
    for _ in range(m - 1):
        ab_pows.append(ab_pows[-1] * ab)
    for k, a_k in enumerate(basis):
        num = num + a_k * xb_pow * ab_pows[m - 1 - k]
        xb_pow = xb_pow * xb
    return RatFunc(num, ab_pows[m - 1])
