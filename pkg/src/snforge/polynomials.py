"""Sparse multivariate polynomials over an exact field.

Terms are stored as a map from exponent tuples to nonzero field
coefficients; the monomial order is graded lexicographic throughout.
GCDs use the Euclidean algorithm in one variable and primitive-part
recursion on the highest active variable otherwise.  A univariate
rational-function field is included for internal fraction-field solves.
"""

from __future__ import annotations

from .fields import FieldError


class PolynomialError(ArithmeticError):
    pass


def _grlex_key(mono):
    return (sum(mono), mono)


class PolyRing:
    """Descriptor for F[x_1, ..., x_s] with a fixed variable list."""

    family = "poly"
    is_field = False
    is_findim = False
    is_series = False
    is_product = False
    is_commutative = True

    def __init__(self, field, names=("xi",)):
        if not names:
            raise PolynomialError("polynomial ring needs at least one variable")
        self.field = field
        self.names = tuple(str(n) for n in names)
        self.nvars = len(self.names)
        self.characteristic = field.characteristic
        self.zero = Poly(self, {})
        self.one = Poly(self, {(0,) * self.nvars: field.one})

    @property
    def has_gcd(self):
        return True

    @property
    def is_pid(self):
        return self.nvars == 1

    def gen(self, i=0) -> "Poly":
        expo = [0] * self.nvars
        expo[i] = 1
        return Poly(self, {tuple(expo): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def generator_names(self):
        return list(self.names)

    def poly(self, terms: dict) -> "Poly":
        clean = {}
        for mono, coeff in terms.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.nvars or any(e < 0 for e in mono):
                raise PolynomialError("bad exponent vector %r" % (mono,))
            c = self.field.of(coeff)
            if not self.field.is_zero(c):
                clean[mono] = c
        return Poly(self, clean)

    def of(self, x) -> "Poly":
        if isinstance(x, Poly):
            if x.ring != self:
                raise PolynomialError("polynomial from a different ring")
            return x
        if isinstance(x, list):
            return self.elem_from_json(x)
        return self.from_field(self.field.of(x))

    def from_field(self, f) -> "Poly":
        if self.field.is_zero(f):
            return self.zero
        return Poly(self, {(0,) * self.nvars: f})

    def scale(self, f, p: "Poly") -> "Poly":
        if self.field.is_zero(f):
            return self.zero
        return Poly(p.ring, {m: f * c for m, c in p.terms.items()})

    def is_zero(self, p: "Poly") -> bool:
        return not p.terms

    def is_unit(self, p: "Poly") -> bool:
        c = p.constant_value()
        return c is not None and self.field.is_unit(c)

    def inv(self, p: "Poly") -> "Poly":
        c = p.constant_value()
        if c is None or not self.field.is_unit(c):
            raise PolynomialError("%s is not a unit" % p)
        return self.from_field(self.field.inv(c))

    def size(self):
        return None

    def apply_generator_map(self, p: "Poly", images: list) -> "Poly":
        return p.substitute(images)

    def elem_to_json(self, p: "Poly"):
        out = []
        for mono in sorted(p.terms, key=_grlex_key, reverse=True):
            out.append({"exponents": list(mono), "coef": self.field.elem_to_json(p.terms[mono])})
        return out

    def elem_from_json(self, obj) -> "Poly":
        if not isinstance(obj, list):
            raise PolynomialError("polynomial literal must be a list of terms")
        terms = {}
        for item in obj:
            if not isinstance(item, dict) or set(item) != {"exponents", "coef"}:
                raise PolynomialError("bad polynomial term %r" % (item,))
            mono = tuple(int(e) for e in item["exponents"])
            if len(mono) != self.nvars or any(e < 0 for e in mono):
                raise PolynomialError("bad exponent vector %r" % (mono,))
            c = self.field.elem_from_json(item["coef"])
            if mono in terms:
                raise PolynomialError("duplicate monomial %r" % (mono,))
            if not self.field.is_zero(c):
                terms[mono] = c
        return Poly(self, terms)

    def to_json(self):
        return {"family": "poly", "field": self.field.to_json(), "vars": list(self.names)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
        )

    def __hash__(self):
        return hash(("poly", self.field, self.names))

    def __repr__(self):
        return "PolyRing(%r, %s)" % (self.field, ",".join(self.names))

    def describe(self):
        return "%s[%s]" % (self.field.describe(), ",".join(self.names))


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to
    nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def _check(self, other) -> "Poly":
        if not isinstance(other, Poly):
            raise PolynomialError("expected a polynomial, got %r" % (other,))
        if other.ring != self.ring:
            raise PolynomialError("polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        field = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            if s is None:
                res[m] = c
            else:
                s = s + c
                if field.is_zero(s):
                    del res[m]
                else:
                    res[m] = s
        return Poly(self.ring, res)

    def __sub__(self, other):
        other = self._check(other)
        field = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            if s is None:
                res[m] = -c
            else:
                s = s - c
                if field.is_zero(s):
                    del res[m]
                else:
                    res[m] = s
        return Poly(self.ring, res)

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        field = self.ring.field
        if not self.terms or not other.terms:
            return self.ring.zero
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = c1 * c2
                s = res.get(m)
                if s is None:
                    res[m] = prod
                else:
                    s = s + prod
                    if field.is_zero(s):
                        del res[m]
                    else:
                        res[m] = s
        return Poly(self.ring, res)

    def __pow__(self, e: int):
        if e < 0:
            raise PolynomialError("negative power of a polynomial")
        out = self.ring.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self):
        """The field value of a constant polynomial, else None."""
        if not self.terms:
            return self.ring.field.zero
        if len(self.terms) > 1:
            return None
        ((m, c),) = self.terms.items()
        return c if not any(m) else None

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(m[var] for m in self.terms)

    def lead_monomial(self):
        if not self.terms:
            return None
        return max(self.terms, key=_grlex_key)

    def lead_coeff(self):
        m = self.lead_monomial()
        return self.ring.field.zero if m is None else self.terms[m]

    def monic(self) -> "Poly":
        """Scale so the graded-lex leading coefficient is 1."""
        if not self.terms:
            return self
        lc = self.lead_coeff()
        if lc == self.ring.field.one:
            return self
        inv = self.ring.field.inv(lc)
        return self.ring.scale(inv, self)

    def scale_coeff(self, f) -> "Poly":
        return self.ring.scale(f, self)

    def exact_div(self, g: "Poly"):
        """Quotient self/g when it exists in the ring, else None."""
        g = self._check(g)
        if not g.terms:
            raise PolynomialError("division by the zero polynomial")
        field = self.ring.field
        gm = g.lead_monomial()
        gc = g.terms[gm]
        gcinv = field.inv(gc)
        rem = dict(self.terms)
        quot = {}
        while rem:
            m = max(rem, key=_grlex_key)
            qm = tuple(a - b for a, b in zip(m, gm))
            if any(e < 0 for e in qm):
                return None
            qc = rem[m] * gcinv
            quot[qm] = qc
            for m2, c2 in g.terms.items():
                mm = tuple(a + b for a, b in zip(qm, m2))
                s = rem.get(mm, field.zero) - qc * c2
                if field.is_zero(s):
                    rem.pop(mm, None)
                else:
                    rem[mm] = s
        return Poly(self.ring, quot)

    def divides(self, other: "Poly") -> bool:
        return other.exact_div(self) is not None

    # -- univariate helpers (polynomials with a single active variable) --

    def _single_var(self):
        active = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    active.add(i)
        if len(active) > 1:
            raise PolynomialError("operation requires a univariate polynomial")
        return active.pop() if active else 0

    def univ_coeffs(self, var: int = None) -> dict:
        """Map degree -> coefficient, for a univariate polynomial."""
        if var is None:
            var = self._single_var()
        return {m[var]: c for m, c in self.terms.items()}

    @staticmethod
    def from_univ_coeffs(ring: PolyRing, coeffs: dict, var: int = 0) -> "Poly":
        terms = {}
        base = [0] * ring.nvars
        for d, c in coeffs.items():
            if not ring.field.is_zero(c):
                m = list(base)
                m[var] = d
                terms[tuple(m)] = c
        return Poly(ring, terms)

    def divmod_univ(self, g: "Poly", var: int = None):
        """Univariate division with remainder; returns (q, r)."""
        g = self._check(g)
        if not g.terms:
            raise PolynomialError("division by the zero polynomial")
        if var is None:
            var = g._single_var()
        field = self.ring.field
        a = self.univ_coeffs(var)
        b = g.univ_coeffs(var)
        db = max(b)
        lb = field.inv(b[db])
        q = {}
        while a:
            da = max(a)
            if da < db:
                break
            qc = a[da] * lb
            q[da - db] = qc
            for d, c in b.items():
                dd = d + da - db
                s = a.get(dd, field.zero) - qc * c
                if field.is_zero(s):
                    a.pop(dd, None)
                else:
                    a[dd] = s
        return (
            Poly.from_univ_coeffs(self.ring, q, var),
            Poly.from_univ_coeffs(self.ring, a, var),
        )

    def evaluate(self, point: list):
        """Full evaluation at field elements (one per variable)."""
        field = self.ring.field
        if len(point) != self.ring.nvars:
            raise PolynomialError("evaluation point has wrong length")
        powers = [{0: field.one} for _ in point]

        def power(i, e):
            cached = powers[i].get(e)
            if cached is None:
                cached = power(i, e // 2)
                cached = cached * cached
                if e % 2:
                    cached = cached * point[i]
                powers[i][e] = cached
            return cached

        total = field.zero
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v = v * power(i, e)
            total = total + v
        return total

    def derivative(self, var: int = 0) -> "Poly":
        field = self.ring.field
        res = {}
        for m, c in self.terms.items():
            e = m[var]
            if e == 0:
                continue
            mm = list(m)
            mm[var] = e - 1
            mult = field.of(e)
            v = c * mult
            if not field.is_zero(v):
                res[tuple(mm)] = v
        return Poly(self.ring, res)

    def substitute(self, images: list) -> "Poly":
        """Ring map sending generator i to images[i] (same ring)."""
        ring = self.ring
        if len(images) != ring.nvars:
            raise PolynomialError("need one image per variable")
        out = ring.zero
        for m, c in self.terms.items():
            term = ring.from_field(c)
            for i, e in enumerate(m):
                if e:
                    term = term * (images[i] ** e)
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for m in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[m]
            factors = [str(c)]
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append("%s^%d" % (names[i], e))
            parts.append("*".join(factors))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# GCD machinery
# ---------------------------------------------------------------------------


def _active_vars(p: Poly):
    out = set()
    for m in p.terms:
        for i, e in enumerate(m):
            if e:
                out.add(i)
    return out


def _split_by_var(p: Poly, var: int) -> dict:
    """Map degree-in-var -> coefficient polynomial (var removed)."""
    parts = {}
    for m, c in p.terms.items():
        e = m[var]
        mm = list(m)
        mm[var] = 0
        parts.setdefault(e, {})[tuple(mm)] = c
    return {e: Poly(p.ring, t) for e, t in parts.items()}


def _join_by_var(ring: PolyRing, parts: dict, var: int) -> Poly:
    terms = {}
    for e, coeff in parts.items():
        for m, c in coeff.terms.items():
            mm = list(m)
            mm[var] += e
            terms[tuple(mm)] = c
    return Poly(ring, terms)


def _univ_gcd(p: Poly, q: Poly, var: int) -> Poly:
    while q.terms:
        _, r = p.divmod_univ(q, var)
        p, q = q, r
    return p.monic()


def _content_and_pp(parts: dict) -> tuple:
    """GCD of the coefficient polynomials and the divided-out parts."""
    cont = None
    for coeff in parts.values():
        cont = coeff if cont is None else poly_gcd(cont, coeff)
        if cont.constant_value() is not None and cont.terms:
            break
    cont = cont.monic()
    if cont.constant_value() is not None:
        return cont, parts
    return cont, {e: c.exact_div(cont) for e, c in parts.items()}


def _pseudo_rem(a: dict, b: dict, ring: PolyRing) -> dict:
    """Pseudo-remainder of split polynomials in the split variable."""
    db = max(b)
    lb = b[db]
    a = dict(a)
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        new = {}
        for e, c in a.items():
            new[e] = c * lb
        for e, c in b.items():
            ee = e + da - db
            v = new.get(ee, ring.zero) - la * c
            if v.terms:
                new[ee] = v
            else:
                new.pop(ee, None)
        new.pop(da, None)
        a = {e: c for e, c in new.items() if c.terms}
    return a


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """GCD in F[x_1..x_s], monic in its graded-lex leading monomial.

    One active variable: Euclidean algorithm.  Several: primitive-part
    recursion on the highest active variable.
    """
    if p.ring != q.ring:
        raise PolynomialError("gcd of polynomials from different rings")
    if not p.terms:
        return q.monic()
    if not q.terms:
        return p.monic()
    active = _active_vars(p) | _active_vars(q)
    if not active:
        return p.ring.one
    if len(active) == 1:
        return _univ_gcd(p, q, active.pop())
    var = max(active)
    pa = _split_by_var(p, var)
    qa = _split_by_var(q, var)
    cont_p, pp_p = _content_and_pp(pa)
    cont_q, pp_q = _content_and_pp(qa)
    cont = poly_gcd(cont_p, cont_q)
    a, b = pp_p, pp_q
    if max(a) < max(b):
        a, b = b, a
    while True:
        r = _pseudo_rem(a, b, p.ring)
        if not r:
            _, pp_b = _content_and_pp(b)
            g = cont * _join_by_var(p.ring, pp_b, var)
            return g.monic()
        if max(r) == 0:
            return cont.monic()
        _, r = _content_and_pp(r)
        a, b = b, r


def poly_lcm(p: Poly, q: Poly) -> Poly:
    if not p.terms or not q.terms:
        return p.ring.zero
    g = poly_gcd(p, q)
    return (p * q).exact_div(g).monic()


# ---------------------------------------------------------------------------
# univariate square testing (two independent routes) and interpolation
# ---------------------------------------------------------------------------


def univ_sqrt(p: Poly):
    """Exact square root of a univariate polynomial, or None.

    Solves r^2 = p by coefficient recursion from the top; requires
    characteristic != 2 and the leading coefficient to be a square.
    """
    if not p.terms:
        return p
    field = p.ring.field
    if field.characteristic == 2:
        raise PolynomialError("square roots need characteristic != 2")
    var = p._single_var()
    coeffs = p.univ_coeffs(var)
    deg = max(coeffs)
    if deg % 2:
        return None
    lc = coeffs[deg]
    if not field.is_square(lc):
        return None
    m = deg // 2
    r = {m: field.sqrt(lc)}
    two_rm = r[m] + r[m]
    for k in range(m - 1, -1, -1):
        acc = coeffs.get(m + k, field.zero)
        for i in range(k + 1, m):
            j = m + k - i
            if j <= i:
                break
            a = r.get(i)
            b = r.get(j)
            if a is not None and b is not None:
                acc = acc - (a + a) * b
        if (m + k) % 2 == 0:
            mid = r.get((m + k) // 2)
            if mid is not None:
                acc = acc - mid * mid
        r[k] = acc / two_rm
    cand = Poly.from_univ_coeffs(p.ring, r, var)
    if cand * cand == p:
        return cand
    return None


def is_scalar_times_square(p: Poly):
    """Return f with p = lc * f^2 (lc the leading coefficient), or None."""
    if not p.terms:
        return p
    mon = p.monic()
    root = univ_sqrt(mon)
    return root


def is_scalar_times_square_by_factors(p: Poly) -> bool:
    """Independent route: repeated squarefree-radical division.

    A monic univariate polynomial is a perfect square iff dividing out
    the squared radical twice... more precisely p is a square iff
    rad(p)^2 | p and p / rad(p)^2 is a square.  Characteristic 0 or
    p > deg only.
    """
    if not p.terms:
        return True
    field = p.ring.field
    var = p._single_var()
    p = p.monic()
    if field.characteristic and field.characteristic <= p.degree_in(var):
        raise PolynomialError("factor-based square test needs a large field")
    while p.total_degree() > 0:
        g = poly_gcd(p, p.derivative(var))
        rad = p.exact_div(g)
        sq = rad * rad
        nxt = p.exact_div(sq)
        if nxt is None:
            return False
        p = nxt.monic()
    return True


def interpolate(ring: PolyRing, points: list, values: list, var: int = 0) -> Poly:
    """Lagrange interpolation through (points[i], values[i]) in one variable."""
    field = ring.field
    n = len(points)
    if len(values) != n:
        raise PolynomialError("points/values length mismatch")
    newton = []
    table = list(values)
    for level in range(n):
        newton.append(table[0])
        nxt = []
        for i in range(len(table) - 1):
            denom = points[i + level + 1] - points[i]
            nxt.append((table[i + 1] - table[i]) / denom)
        table = nxt
        if not table:
            break
    result = ring.zero
    basis = ring.one
    x = ring.gen(var)
    for i, coef in enumerate(newton):
        result = result + basis.scale_coeff(coef)
        if i + 1 < n:
            basis = basis * (x - ring.from_field(points[i]))
    return result


def distinct_field_points(field, count: int) -> list:
    """count distinct field elements 0, 1, 2, ... for evaluation."""
    sz = field.size()
    if sz is not None and count > sz:
        raise PolynomialError(
            "field F_%d too small for %d interpolation points" % (sz, count)
        )
    return [field.of(i) for i in range(count)]


# ---------------------------------------------------------------------------
# univariate rational functions (internal fraction-field solves)
# ---------------------------------------------------------------------------


class RatFunc:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num: Poly, den: Poly, reduced=False):
        if not den.terms:
            raise FieldError("zero denominator in rational function")
        if not reduced:
            if not num.terms:
                den = den.ring.one
            else:
                g = poly_gcd(num, den)
                if g.constant_value() is None:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lead_coeff()
            if lc != den.ring.field.one:
                inv = den.ring.field.inv(lc)
                num = num.scale_coeff(inv)
                den = den.scale_coeff(inv)
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldError("mixed rational-function fields")
            return other
        if isinstance(other, int):
            return self.field.of(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.field, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.field, self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.field, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num.terms:
            raise FieldError("division by zero rational function")
        return RatFunc(self.field, self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den, reduced=True)

    def __pow__(self, e: int):
        out = self.field.one
        base = self
        if e < 0:
            base = self.field.inv(self)
            e = -e
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num.terms)

    def __repr__(self):
        if self.den == self.den.ring.one:
            return repr(self.num)
        return "(%r)/(%r)" % (self.num, self.den)


class RationalFunctionField:
    """F(x): fractions of univariate polynomials over a ground field.

    Used as a base field for internal solves; never a coefficient ring on
    the problem surface, hence no JSON form.
    """

    family = "rational_functions"
    is_field = True
    has_gcd = True
    is_pid = True
    is_findim = False
    is_series = False
    is_product = False
    is_commutative = True

    def __init__(self, base_field, name="xi"):
        self.base_field = base_field
        self.polyring = PolyRing(base_field, (name,))
        self.characteristic = base_field.characteristic
        self.zero = RatFunc(self, self.polyring.zero, self.polyring.one, reduced=True)
        self.one = RatFunc(self, self.polyring.one, self.polyring.one, reduced=True)

    def of(self, x) -> RatFunc:
        if isinstance(x, RatFunc):
            if x.field != self:
                raise FieldError("rational function from a different field")
            return x
        if isinstance(x, Poly):
            if x.ring != self.polyring:
                raise FieldError("polynomial from a different ring")
            return RatFunc(self, x, self.polyring.one, reduced=True)
        return RatFunc(self, self.polyring.from_field(self.base_field.of(x)), self.polyring.one, reduced=True)

    def from_base_field(self, f) -> RatFunc:
        return RatFunc(self, self.polyring.from_field(f), self.polyring.one, reduced=True)

    def from_field(self, f) -> RatFunc:
        return self.of(f) if isinstance(f, RatFunc) else self.from_base_field(f)

    def scale(self, f, s):
        return self.of(f) * s

    def is_zero(self, a: RatFunc) -> bool:
        return not a.num.terms

    def is_unit(self, a: RatFunc) -> bool:
        return bool(a.num.terms)

    def inv(self, a: RatFunc) -> RatFunc:
        if not a.num.terms:
            raise FieldError("division by zero rational function")
        return RatFunc(self, a.den, a.num)

    def size(self):
        return None

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunctionField)
            and other.base_field == self.base_field
            and other.polyring.names == self.polyring.names
        )

    def __hash__(self):
        return hash(("ratfunc", self.base_field, self.polyring.names))

    def __repr__(self):
        return "RationalFunctionField(%r, %s)" % (self.base_field, self.polyring.names[0])

    def describe(self):
        return "%s(%s)" % (self.base_field.describe(), self.polyring.names[0])
