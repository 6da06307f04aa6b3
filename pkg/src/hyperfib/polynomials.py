"""Exact univariate and bivariate polynomial arithmetic over the rationals.

Everything downstream of this module (fiber scans, blow-ups, index
computations) is exact: coefficients are ``fractions.Fraction`` throughout
and no floating point ever enters.  Two representations are used:

* ``UniPoly`` -- dense, immutable, for restrictions of the branch curve to a
  line and for discriminants in the base variable.
* ``BiPoly`` -- sparse dict of ``(x_exp, t_exp) -> Fraction``, for the local
  equation h(x, t) of the branch curve and its strict transforms.

Canonical term order for serialization is (t_exp, x_exp) lexicographic, so
reports are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class LineContainedInDivisor(Exception):
    """Restriction of the curve to the line vanished identically."""


ZERO_DEGREE = -1  # degree sentinel for the zero polynomial


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


# ----------------------------------------------------------------------
# Univariate polynomials
# ----------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over Q; coefficient i is the x^i term."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("UniPoly is immutable")

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    @staticmethod
    def from_roots(roots: Iterable) -> "UniPoly":
        p = UniPoly.const(1)
        for r in roots:
            p = p * UniPoly((-_frac(r), 1))
        return p

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ZERO_DEGREE (= -1) for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "UniPoly":
        other = _as_unipoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-_as_unipoly(other))

    def __rsub__(self, other) -> "UniPoly":
        return _as_unipoly(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = _as_unipoly(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        c = _frac(c)
        return UniPoly(a * c for a in self.coeffs)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dn, dd = self.degree, other.degree
        if dn < dd:
            return UniPoly.zero(), self
        quot = [Fraction(0)] * (dn - dd + 1)
        inv_lc = 1 / other.lc
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd] * inv_lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dd])

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(1 / self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def eval(self, v) -> Fraction:
        v = _frac(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def shift(self, c) -> "UniPoly":
        """Return p(x + c), by synthetic (Horner) recentering."""
        c = _frac(c)
        out = UniPoly.zero()
        for coeff in reversed(self.coeffs):
            out = out * UniPoly((c, 1)) + UniPoly.const(coeff)
        return out

    def root_multiplicity(self, r) -> int:
        """Multiplicity of r as a root (0 if not a root)."""
        r = _frac(r)
        p, m = self, 0
        while not p.is_zero and p.eval(r) == 0:
            p = p.exact_div(UniPoly((-r, 1)))
            m += 1
        return m

    # -- presentation -----------------------------------------------------

    def format(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            mag = abs(c)
            body = _format_coeff_monomial(mag, ((var, i),))
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self.format()})"


def _as_unipoly(v) -> UniPoly:
    if isinstance(v, UniPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return UniPoly.const(v)
    raise TypeError(f"cannot coerce {v!r} to UniPoly")


def _format_coeff_monomial(coeff: Fraction, powers: Sequence[tuple[str, int]]) -> str:
    names = [f"{v}^{e}" if e > 1 else v for v, e in powers if e > 0]
    if not names:
        return str(coeff)
    if coeff == 1:
        return "*".join(names)
    return str(coeff) + "*" + "*".join(names)


def unipoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (Euclid)."""
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero else a


def unipoly_content_gcd(polys: Iterable[UniPoly]) -> UniPoly:
    g = UniPoly.zero()
    for p in polys:
        g = unipoly_gcd(g, p)
        if g.degree == 0:
            break
    return g


# ----------------------------------------------------------------------
# Bivariate polynomials
# ----------------------------------------------------------------------

class BiPoly:
    """Sparse bivariate polynomial over Q in the variables (x, t).

    Terms map ``(x_exp, t_exp)`` to a nonzero Fraction.  For local charts the
    two variables are reinterpreted as the chart coordinates; the first slot
    is always the "horizontal" coordinate of the chart.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in (terms.items() if isinstance(terms, dict) else terms):
                c = _frac(c)
                if c == 0:
                    continue
                key = (int(i), int(j))
                c0 = clean.get(key)
                c = c if c0 is None else c0 + c
                if c == 0:
                    clean.pop(key, None)
                else:
                    clean[key] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly({(0, 0): c})

    @staticmethod
    def x() -> "BiPoly":
        return BiPoly({(1, 0): 1})

    @staticmethod
    def t() -> "BiPoly":
        return BiPoly({(0, 1): 1})

    @staticmethod
    def monomial(c, x_exp: int, t_exp: int) -> "BiPoly":
        return BiPoly({(x_exp, t_exp): c})

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=ZERO_DEGREE)

    @property
    def deg_t(self) -> int:
        return max((j for _, j in self.terms), default=ZERO_DEGREE)

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms in the canonical (t_exp, x_exp) lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.sorted_terms()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _as_bipoly(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            c2 = out.get(k, Fraction(0)) + c
            if c2 == 0:
                out.pop(k, None)
            else:
                out[k] = c2
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-_as_bipoly(other))

    def __rsub__(self, other) -> "BiPoly":
        return _as_bipoly(other) - self

    def __mul__(self, other) -> "BiPoly":
        other = _as_bipoly(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation / substitution ----------------------------------------

    def eval(self, xv, tv) -> Fraction:
        xv, tv = _frac(xv), _frac(tv)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * xv**i * tv**j
        return total

    def restrict_t(self, t0) -> UniPoly:
        """h(x, t0) as a polynomial in x."""
        t0 = _frac(t0)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, Fraction(0)) + c * t0**j
        deg = max(out, default=-1)
        return UniPoly(out.get(i, Fraction(0)) for i in range(deg + 1))

    def restrict_x(self, x0) -> UniPoly:
        """h(x0, t) as a polynomial in t."""
        x0 = _frac(x0)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, Fraction(0)) + c * x0**i
        deg = max(out, default=-1)
        return UniPoly(out.get(j, Fraction(0)) for j in range(deg + 1))

    def dx(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i > 0})

    def dt(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j > 0})

    def shift(self, a, b) -> "BiPoly":
        """Taylor recentering h(x + a, t + b)."""
        a, b = _frac(a), _frac(b)
        xs = BiPoly({(1, 0): 1, (0, 0): a})
        ts = BiPoly({(0, 1): 1, (0, 0): b})
        # Horner in x of UniPoly-in-t coefficient polynomials
        coeffs_x = self.as_x_coefficients()
        out = BiPoly.zero()
        for c in reversed(coeffs_x):
            out = out * xs + _bipoly_from_t_unipoly(c.shift(b))
        return out

    def order_at_origin(self) -> int:
        """Order of vanishing at (0, 0): minimal total degree of a term."""
        if self.is_zero:
            raise ValueError("order of the zero polynomial is undefined")
        return min(i + j for i, j in self.terms)

    def swap_vars(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def flip_x(self, total_degree: int) -> "BiPoly":
        """Chart flip x -> 1/x: returns x^total_degree * h(1/x, t).

        ``total_degree`` must be >= deg_x; the slack pads powers of x, which
        is how the section at infinity enters the flipped chart.
        """
        if total_degree < self.deg_x:
            raise ValueError("total_degree below x-degree")
        return BiPoly({(total_degree - i, j): c for (i, j), c in self.terms.items()})

    def blowup_chart_s(self, m: int) -> "BiPoly":
        """Strict transform in the chart (a, v) with b = a*v: h(a, a*v)/a^m."""
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            k = (i + j - m, j)
            if k[0] < 0:
                raise ArithmeticError("blow-up division not exact; m exceeds order")
            out[k] = out.get(k, Fraction(0)) + c
        return BiPoly(out)

    def blowup_chart_t(self, m: int) -> "BiPoly":
        """Strict transform in the chart (w, b) with a = w*b: h(w*b, b)/b^m."""
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            k = (i, i + j - m)
            if k[1] < 0:
                raise ArithmeticError("blow-up division not exact; m exceeds order")
            out[k] = out.get(k, Fraction(0)) + c
        return BiPoly(out)

    def as_x_coefficients(self) -> list[UniPoly]:
        """Coefficients as polynomials in t, indexed by x-exponent."""
        deg = self.deg_x
        if deg == ZERO_DEGREE:
            return []
        buckets: list[dict[int, Fraction]] = [dict() for _ in range(deg + 1)]
        for (i, j), c in self.terms.items():
            buckets[i][j] = c
        out = []
        for bucket in buckets:
            d = max(bucket, default=-1)
            out.append(UniPoly(bucket.get(j, Fraction(0)) for j in range(d + 1)))
        return out

    # -- presentation -----------------------------------------------------

    def format(self, xname: str = "x", tname: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            body = _format_coeff_monomial(abs(c), ((xname, i), (tname, j)))
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self.format()})"


def _as_bipoly(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return BiPoly.const(v)
    raise TypeError(f"cannot coerce {v!r} to BiPoly")


def _bipoly_from_t_unipoly(p: UniPoly) -> BiPoly:
    return BiPoly({(0, j): c for j, c in enumerate(p.coeffs)})


# ----------------------------------------------------------------------
# Points and lines
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AffinePoint:
    """A point (x, t); x may be None to mark the point at infinity.

    The infinity marker is only meaningful during fiber scans, where the
    caller flips the chart before doing any local computation.
    """

    x: Fraction | None
    t: Fraction

    @staticmethod
    def of(x, t) -> "AffinePoint":
        return AffinePoint(None if x is None else _frac(x), _frac(t))

    @property
    def is_infinite(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return f"(inf, {self.t})" if self.is_infinite else f"({self.x}, {self.t})"


@dataclass(frozen=True)
class Line:
    """An axis-parallel line in the current chart.

    ``axis`` is the coordinate held constant: Line("t", t0) is the fiber line
    t = t0; Line("x", x0) is the vertical line x = x0.
    """

    axis: str
    value: Fraction

    @staticmethod
    def fiber(t0) -> "Line":
        return Line("t", _frac(t0))

    @staticmethod
    def vertical(x0) -> "Line":
        return Line("x", _frac(x0))


# ----------------------------------------------------------------------
# Local invariants
# ----------------------------------------------------------------------

def multiplicity_at(h: BiPoly, p: AffinePoint) -> int:
    """Order of vanishing of h at the finite point p.

    0 means h(p) != 0; 1 means the curve h = 0 is smooth at p.
    """
    if p.is_infinite:
        raise ValueError("flip the chart before querying the point at infinity")
    if h.is_zero:
        raise ValueError("zero polynomial has no multiplicity")
    return h.shift(p.x, p.t).order_at_origin()


def contact_order(h: BiPoly, p: AffinePoint, line: Line) -> int:
    """Intersection multiplicity of h = 0 with an axis-parallel line at p.

    Computed as the root multiplicity of the restriction of h to the line.
    Raises LineContainedInDivisor when the restriction vanishes identically
    (the line is a component of h = 0).
    """
    if p.is_infinite:
        raise ValueError("flip the chart before querying the point at infinity")
    if line.axis == "t":
        if line.value != p.t:
            raise ValueError("line does not pass through the point")
        restriction = h.restrict_t(line.value)
        at = p.x
    elif line.axis == "x":
        if line.value != p.x:
            raise ValueError("line does not pass through the point")
        restriction = h.restrict_x(line.value)
        at = p.t
    else:
        raise ValueError(f"unknown axis {line.axis!r}")
    if restriction.is_zero:
        raise LineContainedInDivisor(f"line {line.axis}={line.value} is contained in the divisor")
    return restriction.root_multiplicity(at)


# ----------------------------------------------------------------------
# Square-free decomposition and factorization over Q
# ----------------------------------------------------------------------

def square_free_decompose(u: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: pairwise-coprime square-free factors with multiplicity.

    The product of factor^mult equals u up to a constant; factors are monic.
    Constants decompose to the empty list.
    """
    if u.is_zero:
        raise ValueError("zero polynomial")
    u = u.monic()
    if u.degree <= 0:
        return []
    out: list[tuple[UniPoly, int]] = []
    du = u.derivative()
    a = unipoly_gcd(u, du)
    b = u.exact_div(a)
    c = du.exact_div(a)
    d = c - b.derivative()
    mult = 1
    while b.degree > 0:
        g = unipoly_gcd(b, d)
        if g.degree > 0:
            out.append((g, mult))
        b2 = b.exact_div(g)
        c2 = d.exact_div(g)
        d = c2 - b2.derivative()
        b = b2
        mult += 1
    return out


def rational_roots(u: UniPoly) -> set[Fraction]:
    """All rational roots, via the rational-root theorem on the primitive part.

    Falls back to full factorization when the bound coefficients are too large
    for divisor enumeration.
    """
    if u.is_zero:
        raise ValueError("zero polynomial")
    roots: set[Fraction] = set()
    # strip the root at 0
    coeffs = list(u.coeffs)
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    if k > 0:
        roots.add(Fraction(0))
        coeffs = coeffs[k:]
    p = UniPoly(coeffs)
    if p.degree <= 0:
        return roots
    # keep only the square-free part: smaller and has the same roots
    sf = p.exact_div(unipoly_gcd(p, p.derivative()))
    num_lcm = 1
    for c in sf.coeffs:
        num_lcm = num_lcm * c.denominator // _gcd_int(num_lcm, c.denominator)
    ints = [int(c * num_lcm) for c in sf.coeffs]
    g = 0
    for v in ints:
        g = _gcd_int(g, v)
    ints = [v // g for v in ints]
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 == 0:
        raise AssertionError("zero root was stripped")
    if max(a0, an) > 10**12:
        for f, _ in factor_over_rationals(UniPoly(ints)):
            if f.degree == 1:
                roots.add(-f[0] / f[1])
        return roots
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and sf.eval(cand) == 0:
                    roots.add(cand)
    return roots


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def factor_over_rationals(u: UniPoly) -> list[tuple[UniPoly, int]]:
    """Complete factorization into monic Q-irreducible factors with multiplicity.

    The product of factor^mult times lc(u) reproduces u exactly.  Square-free
    split plus rational-root extraction handles everything through degree 3;
    higher-degree residuals are delegated to sympy (imported lazily so the
    common paths never pay for it).
    """
    if u.is_zero:
        raise ValueError("zero polynomial")
    result: dict[UniPoly, int] = {}
    for sf, mult in square_free_decompose(u):
        rem = sf
        for r in sorted(rational_roots(sf)):
            lin = UniPoly((-r, 1))
            rem = rem.exact_div(lin)
            result[lin] = result.get(lin, 0) + mult
        if rem.degree <= 0:
            continue
        if rem.degree <= 3:
            # degree 2 or 3 with no rational root is irreducible
            result[rem] = result.get(rem, 0) + mult
            continue
        for f in _factor_with_sympy(rem):
            result[f] = result.get(f, 0) + mult
    return sorted(result.items(), key=lambda fm: _unipoly_sort_key(fm[0]))


def _unipoly_sort_key(p: UniPoly):
    return (p.degree, tuple((c.numerator, c.denominator) for c in p.coeffs))


def _factor_with_sympy(p: UniPoly) -> list[UniPoly]:
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(fac.all_coeffs())]
        q = UniPoly(coeffs).monic()
        out.extend([q] * mult)
    return out


# ----------------------------------------------------------------------
# Resultants and the discriminant in x
# ----------------------------------------------------------------------

def _poly_list_degree(a: list[UniPoly]) -> int:
    return len(a) - 1


def _poly_list_normalize(a: list[UniPoly]) -> list[UniPoly]:
    a = list(a)
    while a and a[-1].is_zero:
        a.pop()
    return a


def _poly_list_prem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, over Q[t]."""
    da, db = _poly_list_degree(a), _poly_list_degree(b)
    lb = b[-1]
    e = da - db + 1
    rem = list(a)
    while True:
        rem = _poly_list_normalize(rem)
        dr = _poly_list_degree(rem)
        if not rem or dr < db:
            break
        lead = rem[-1]
        rem = [lb * c for c in rem]
        for j in range(db + 1):
            rem[dr - db + j] = rem[dr - db + j] - lead * b[j]
        rem = rem[:dr]  # the leading term cancelled exactly
        e -= 1
    if e > 0 and rem:
        scale = lb**e
        rem = [c * scale for c in rem]
    return rem


def _poly_list_exact_div_scalar(a: list[UniPoly], d: UniPoly) -> list[UniPoly]:
    return [ai.exact_div(d) for ai in a]


def resultant_in_x(f: BiPoly, g: BiPoly) -> UniPoly:
    """Resultant of f and g with respect to x, as a polynomial in t.

    Fraction-free subresultant polynomial remainder sequence; exact over Q[t]
    and far smaller than naive Sylvester determinant expansion.
    """
    A = _poly_list_normalize(f.as_x_coefficients())
    B = _poly_list_normalize(g.as_x_coefficients())
    if not A or not B:
        return UniPoly.zero()
    da, db = _poly_list_degree(A), _poly_list_degree(B)
    if da == 0 and db == 0:
        return UniPoly.const(1)
    sign = 1
    if da < db:
        if (da * db) % 2 == 1:
            sign = -sign
        A, B = B, A
        da, db = db, da
    if db == 0:
        return (B[0] ** da).scale(sign)
    gg = UniPoly.const(1)
    hh = UniPoly.const(1)
    while True:
        da, db = _poly_list_degree(A), _poly_list_degree(B)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        R = _poly_list_prem(A, B)
        A = B
        divisor = gg * hh**delta
        B = _poly_list_exact_div_scalar(R, divisor) if R else []
        gg = A[-1]
        if delta >= 1:
            hh = (gg**delta).exact_div(hh ** (delta - 1))
        if not B:
            # pseudo-remainder vanished while the divisor still had degree > 0
            return UniPoly.zero()
        if _poly_list_degree(B) == 0:
            da = _poly_list_degree(A)
            res = (B[0] ** da).exact_div(hh ** (da - 1))
            return res.scale(sign)


def discriminant_in_x(h: BiPoly) -> UniPoly:
    """Resultant of h and dh/dx eliminating x; vanishes exactly at the t-values
    whose fiber line meets h = 0 non-transversally (including degree drops).
    """
    if h.deg_x < 1:
        raise ValueError("not a branch curve: h is constant in x")
    return resultant_in_x(h, h.dx())


def sylvester_resultant_in_x(f: BiPoly, g: BiPoly) -> UniPoly:
    """Resultant via expansion of the Sylvester determinant (test oracle only).

    Exponential-ish cofactor expansion; keep the inputs tiny.
    """
    A = _poly_list_normalize(f.as_x_coefficients())
    B = _poly_list_normalize(g.as_x_coefficients())
    if not A or not B:
        return UniPoly.zero()
    m, n = _poly_list_degree(A), _poly_list_degree(B)
    if m == 0 and n == 0:
        return UniPoly.const(1)
    if m == 0:
        return A[0] ** n
    if n == 0:
        return B[0] ** m
    size = m + n
    rows: list[list[UniPoly]] = []
    for i in range(n):
        row = [UniPoly.zero()] * size
        for k, c in enumerate(reversed(A)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [UniPoly.zero()] * size
        for k, c in enumerate(reversed(B)):
            row[i + k] = c
        rows.append(row)
    return _det_expansion(rows)


def _det_expansion(rows: list[list[UniPoly]]) -> UniPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = UniPoly.zero()
    for i in range(n):
        pivot = rows[i][0]
        if pivot.is_zero:
            continue
        minor = [r[1:] for j, r in enumerate(rows) if j != i]
        term = pivot * _det_expansion(minor)
        total = total + (term if i % 2 == 0 else -term)
    return total
