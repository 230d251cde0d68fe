"""Exact coefficient field for the deformation parameters.

Scalars are rational functions in r, hbar and the independent q-symbols,
with coefficients in the Gaussian rationals extended by sqrt(2).  The
exponent of r is stored internally in half-units so that the odd-N metric
entries r^(rho_a) (rho half-integer) stay exact Laurent monomials.
"""

from fractions import Fraction

from .errors import (
    DomainError,
    IndeterminateError,
    PoleError,
    UnresolvedSymbolError,
)

_F0 = Fraction(0)
_F1 = Fraction(1)


class Coeff:
    """Element a + b*i + c*s2 + d*i*s2 of Q(i, sqrt 2); i^2 = -1, s2^2 = 2."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    def __add__(self, other):
        return Coeff(self.a + other.a, self.b + other.b,
                     self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return Coeff(self.a - other.a, self.b - other.b,
                     self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Coeff(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Coeff(
            a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    def inv(self):
        if self.is_zero():
            raise DomainError("inversion of zero coefficient")
        # multiply by the sqrt(2)-conjugate to land in Q(i), then invert there
        s2conj = Coeff(self.a, self.b, -self.c, -self.d)
        g = self * s2conj                       # in Q(i): c = d = 0
        norm = g.a * g.a + g.b * g.b            # |g|^2, rational
        ginv = Coeff(g.a / norm, -g.b / norm)
        return s2conj * ginv

    def conj(self):
        """Complex conjugation: i -> -i, sqrt(2) fixed."""
        return Coeff(self.a, -self.b, self.c, -self.d)

    def is_zero(self):
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self):
        return not (self.b or self.c or self.d)

    def __eq__(self, other):
        if not isinstance(other, Coeff):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return "Coeff(%s, %s, %s, %s)" % (self.a, self.b, self.c, self.d)


C_ZERO = Coeff()
C_ONE = Coeff(1)
C_I = Coeff(0, 1)
C_S2 = Coeff(0, 0, 1)


# ---------------------------------------------------------------------------
# Laurent polynomials: dict {exponent tuple: Coeff}, zero coeffs absent.
# ---------------------------------------------------------------------------

def p_zero():
    return {}


def p_const(nsym, coeff):
    if coeff.is_zero():
        return {}
    return {(0,) * nsym: coeff}


def p_monomial(expvec, coeff):
    if coeff.is_zero():
        return {}
    return {tuple(expvec): coeff}


def p_add(p, q):
    out = dict(p)
    for e, c in q.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s.is_zero():
                del out[e]
            else:
                out[e] = s
    return out


def p_neg(p):
    return {e: -c for e, c in p.items()}


def p_mul(p, q):
    if not p or not q:
        return {}
    if len(p) > len(q):
        p, q = q, p
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            c = c1 * c2
            s = out.get(e)
            if s is None:
                if not c.is_zero():
                    out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
    return out


def p_scale(p, coeff):
    if coeff.is_zero():
        return {}
    return {e: c * coeff for e, c in p.items()}


def p_lead(p):
    """Leading monomial under (total degree, lex), exponents as given."""
    return max(p, key=lambda e: (sum(e), e))


def p_divexact(p, q):
    """Exact division p / q; raises DomainError when q does not divide p."""
    if not q:
        raise DomainError("division by zero polynomial")
    if not p:
        return {}
    out = {}
    rem = dict(p)
    qlead = p_lead(q)
    qlc_inv = q[qlead].inv()
    guard = 4 * (len(p) + len(q)) * max(len(q), 1) + 16
    while rem:
        guard -= 1
        if guard < 0:
            raise DomainError("exact polynomial division failed")
        rlead = p_lead(rem)
        e = tuple(x - y for x, y in zip(rlead, qlead))
        c = rem[rlead] * qlc_inv
        t = {e: c}
        out = p_add(out, t)
        rem = p_add(rem, p_neg(p_mul(t, q)))
        if rem and (sum(p_lead(rem)), p_lead(rem)) >= (sum(rlead), rlead):
            raise DomainError("exact polynomial division failed")
    return out


def p_try_divexact(p, q):
    try:
        return p_divexact(p, q)
    except DomainError:
        return None


# ---------------------------------------------------------------------------
# Parameter context
# ---------------------------------------------------------------------------

class ParameterContext:
    """Symbols, derived-parameter resolution and the real-form involution.

    Symbol order: r (half-unit exponents), hbar, bullet parameters
    qa1..qa<floor(N/2)>, then the independent pair parameters q<ab>.
    For N even the involution uses the index swap D = (n <-> n+1), n = N/2;
    for N odd D is the identity.  In minkowski mode (N = 4) the pair
    parameter q13 is resolved to r^2/q12.
    """

    def __init__(self, N, minkowski=False, uniparametric=False):
        if N < 3:
            raise DomainError("plane dimension N must be >= 3")
        if minkowski and N != 4:
            raise DomainError("minkowski mode requires N = 4")
        self.N = N
        self.minkowski = minkowski
        self.uniparametric = uniparametric
        self.even = (N % 2 == 0)
        self.n_half = N // 2

        self.bullet_indices = list(range(1, N // 2 + 1))
        self.pair_reps = [] if uniparametric else self._independent_pairs()
        if minkowski:
            self.pair_reps = [(1, 2)]

        self.symbols = ["r", "hbar"]
        if not uniparametric:
            self.symbols += ["qa%d" % a for a in self.bullet_indices]
            self.symbols += ["q%d%d" % ab for ab in self.pair_reps]
        self.nsym = len(self.symbols)
        self._sym_index = {s: k for k, s in enumerate(self.symbols)}

        self.zero = Scalar(self, {}, p_const(self.nsym, C_ONE), _canonical=True)
        self.one = Scalar(self, p_const(self.nsym, C_ONE),
                          p_const(self.nsym, C_ONE), _canonical=True)
        self._conj_images = self._build_involution()

    # -- index helpers ----------------------------------------------------

    def prime(self, a):
        """Conjugate index a' = N + 1 - a."""
        return self.N + 1 - a

    def dswap(self, a):
        """Index swap of the real form: n <-> n+1 for even N, else identity."""
        if self.even and a in (self.n_half, self.n_half + 1):
            return 2 * self.n_half + 1 - a
        return a

    def rho2(self, a):
        """Twice the orthogonal weight rho_a (always an integer)."""
        N = self.N
        if 2 * a == N + 1:
            return 0
        if a <= N // 2:
            return N - 2 * a
        return -(N - 2 * self.prime(a))

    # -- monomial constructors --------------------------------------------

    def _mono(self, expvec, coeff=C_ONE):
        return Scalar(self, p_monomial(expvec, coeff),
                      p_const(self.nsym, C_ONE))

    def from_coeff(self, coeff):
        return Scalar(self, p_const(self.nsym, coeff),
                      p_const(self.nsym, C_ONE))

    def from_int(self, n):
        return self.from_coeff(Coeff(n))

    def from_fraction(self, fr):
        return self.from_coeff(Coeff(fr))

    @property
    def i(self):
        return self.from_coeff(C_I)

    @property
    def s2(self):
        return self.from_coeff(C_S2)

    @property
    def hbar(self):
        e = [0] * self.nsym
        e[1] = 1
        return self._mono(e)

    def r_half_power(self, k):
        """r^(k/2) as a scalar, k an integer of half-units."""
        e = [0] * self.nsym
        e[0] = k
        return self._mono(e)

    def r_power(self, k):
        return self.r_half_power(2 * k)

    @property
    def r(self):
        return self.r_power(1)

    @property
    def lam(self):
        return self.r_power(1) - self.r_power(-1)

    @property
    def mu(self):
        return self.r_power(1) + self.r_power(-1)

    def q_dot(self, a):
        """Bullet parameter q_{a.} with derived indices resolved."""
        if not 1 <= a <= self.N:
            raise UnresolvedSymbolError("bullet index %d out of range" % a)
        if self.uniparametric:
            return self.r
        if 2 * a == self.N + 1:
            return self.r            # middle index: q = r^2/q forces q = r
        if a <= self.N // 2:
            return self._mono(self._unit_exp("qa%d" % a))
        return self.r_power(2) / self.q_dot(self.prime(a))

    def q_pair(self, a, b):
        """Diagonal R-matrix parameter q_{ab}, a != b, b != a'."""
        if a == b or b == self.prime(a):
            raise UnresolvedSymbolError("q_{%d%d} is not a twist slot" % (a, b))
        if self.uniparametric:
            return self.r
        if (a, b) in self._pair_set:
            if self.minkowski and (a, b) == (1, 3):
                return self.r_power(2) / self._pair_sym(1, 2)
            return self._pair_sym(a, b)
        ap, bp = self.prime(a), self.prime(b)
        if (b, a) in self._pair_set:
            return self.r_power(2) / self.q_pair(b, a)
        if (bp, ap) in self._pair_set:
            return self.q_pair(bp, ap)
        if (ap, bp) in self._pair_set:
            return self.r_power(2) / self.q_pair(ap, bp)
        raise UnresolvedSymbolError("no resolution for q_{%d%d}" % (a, b))

    def _pair_sym(self, a, b):
        return self._mono(self._unit_exp("q%d%d" % (a, b)))

    def _unit_exp(self, name):
        if name not in self._sym_index:
            raise UnresolvedSymbolError("unknown symbol %r" % name)
        e = [0] * self.nsym
        e[self._sym_index[name]] = 1
        return e

    def _independent_pairs(self):
        """Orbit representatives of (a,b) under q_ba = r^2/q_ab, q_a'b' = q_ba."""
        reps, seen = [], set()
        for a in range(1, self.N + 1):
            for b in range(1, self.N + 1):
                if a == b or b == self.prime(a) or (a, b) in seen:
                    continue
                orbit = {(a, b), (b, a),
                         (self.prime(a), self.prime(b)),
                         (self.prime(b), self.prime(a))}
                seen |= orbit
                reps.append((a, b))
        if self.minkowski:
            return [p for p in reps if p == (1, 2)]
        return reps

    @property
    def _pair_set(self):
        return set(self.pair_reps) if not self.minkowski else {(1, 2), (1, 3)}

    # -- involution ---------------------------------------------------------

    def _build_involution(self):
        """Image exponent vector per symbol; every image is a monomial."""
        images = []
        for name in self.symbols:
            if name == "r":
                img = [0] * self.nsym
                img[0] = -1        # one half-unit of r maps to minus one
                images.append(tuple(img))
            elif name == "hbar":
                images.append(tuple(self._unit_exp("hbar")))
            elif name.startswith("qa"):
                a = int(name[2:])
                target = self.q_dot(self.dswap(a)) if self.even else self.q_dot(a)
                images.append(self._mono_exponent(target.inverse()))
            else:
                a, b = int(name[1]), int(name[2])
                target = self.q_pair(self.dswap(a), self.dswap(b))
                images.append(self._mono_exponent(target.inverse()))
        # involution squares to the identity on every symbol
        for k in range(self.nsym):
            e = [0] * self.nsym
            e[k] = 1
            img = self._apply_exp_map(images, tuple(e))
            img2 = self._apply_exp_map(images, img)
            unit = [0] * self.nsym
            unit[k] = 1
            if img2 != tuple(unit):
                raise UnresolvedSymbolError(
                    "involution not involutive on %s" % self.symbols[k])
        return images

    def _mono_exponent(self, scalar):
        num, den = scalar.num, scalar.den
        if len(num) != 1 or len(den) != 1:
            raise UnresolvedSymbolError("involution image is not a monomial")
        (en, cn), (ed, cd) = next(iter(num.items())), next(iter(den.items()))
        if cn != C_ONE or cd != C_ONE:
            raise UnresolvedSymbolError("involution image is not monic")
        return tuple(x - y for x, y in zip(en, ed))

    @staticmethod
    def _apply_exp_map(images, expvec):
        out = [0] * len(expvec)
        for k, e in enumerate(expvec):
            if e:
                img = images[k]
                for j in range(len(out)):
                    out[j] += e * img[j]
        return tuple(out)

    def conj_poly(self, p):
        out = {}
        for e, c in p.items():
            ne = self._apply_exp_map(self._conj_images, e)
            cc = c.conj()
            s = out.get(ne)
            out[ne] = cc if s is None else s + cc
        return {e: c for e, c in out.items() if not c.is_zero()}


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

class Scalar:
    """Rational function num/den over a ParameterContext, kept canonical."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den, _canonical=False):
        self.ctx = ctx
        if _canonical:
            self.num, self.den = num, den
            return
        if not den:
            raise DomainError("zero denominator")
        self.num, self.den = _canonicalize(ctx.nsym, num, den)

    # -- construction helpers ---------------------------------------------

    @staticmethod
    def promote(ctx, x):
        s = Scalar.coerce(ctx, x)
        if s is None:
            raise DomainError("cannot promote %r to Scalar" % (x,))
        return s

    @staticmethod
    def coerce(ctx, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, Coeff):
            return ctx.from_coeff(x)
        if isinstance(x, (int, Fraction)):
            return ctx.from_coeff(Coeff(x))
        return None

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == self.den

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            other = Scalar.promote(self.ctx, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        # cross multiplication; exact and independent of canonical form
        return p_add(p_mul(self.num, other.den),
                     p_neg(p_mul(other.num, self.den))) == {}

    __hash__ = None  # equality is cross-multiplication; scalars are not keys

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = Scalar.coerce(self.ctx, other)
        if other is None:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return Scalar(self.ctx, p_add(self.num, other.num), self.den)
        num = p_add(p_mul(self.num, other.den), p_mul(other.num, self.den))
        return Scalar(self.ctx, num, p_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ctx, p_neg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = Scalar.coerce(self.ctx, other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.promote(self.ctx, other) - self

    def __mul__(self, other):
        other = Scalar.coerce(self.ctx, other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return self.ctx.zero
        return Scalar(self.ctx, p_mul(self.num, other.num),
                      p_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DomainError("inversion of zero scalar")
        return Scalar(self.ctx, self.den, self.num)

    def __truediv__(self, other):
        other = Scalar.coerce(self.ctx, other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.promote(self.ctx, other) * self.inverse()

    def __pow__(self, k):
        if isinstance(k, Fraction):
            if k.denominator == 1:
                k = int(k)
            elif k.denominator == 2:
                return self._half_power(k.numerator)
            else:
                raise DomainError("unsupported fractional power %s" % k)
        if k == 0:
            return self.ctx.one
        base = self if k > 0 else self.inverse()
        out, k = self.ctx.one, abs(k)
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def _half_power(self, knum):
        # only monomials with even half-unit exponents admit half powers
        if len(self.num) != 1 or len(self.den) != 1:
            raise DomainError("half powers only defined on monomials")
        e = self.monomial_exponent()
        if any(x * knum % 2 for x in e):
            raise DomainError("half power leaves the exponent lattice")
        return self.ctx._mono([x * knum // 2 for x in e])

    def monomial_exponent(self):
        if len(self.num) != 1 or len(self.den) != 1:
            raise DomainError("not a monomial")
        (en, cn), (ed, cd) = next(iter(self.num.items())), next(iter(self.den.items()))
        if cn != C_ONE or cd != C_ONE:
            raise DomainError("not a monic monomial")
        return tuple(x - y for x, y in zip(en, ed))

    # -- involution and evaluation ------------------------------------------

    def conj(self):
        """The real-form involution of the deformation parameters."""
        return Scalar(self.ctx, self.ctx.conj_poly(self.num),
                      self.ctx.conj_poly(self.den))

    def eval(self, assignment):
        """Exact evaluation; assignment maps symbol name -> Coeff/int/Fraction.

        r may carry half-unit exponents; supply 'sqrt_r' when they occur.
        """
        nv = _eval_poly(self.ctx, self.num, assignment)
        dv = _eval_poly(self.ctx, self.den, assignment)
        if dv.is_zero():
            if nv.is_zero():
                raise IndeterminateError("0/0 at evaluation point")
            raise PoleError("denominator vanishes at evaluation point")
        return nv * dv.inv()

    def specialize_classical(self):
        """Set r = 1 and every q symbol = 1, keeping hbar and the coefficients."""
        keep = [k for k, s in enumerate(self.ctx.symbols) if s == "hbar"]
        num = _project_poly(self.num, keep, self.ctx.nsym)
        den = _project_poly(self.den, keep, self.ctx.nsym)
        if not den:
            raise PoleError("classical limit hits a pole")
        return Scalar(self.ctx, num, den)

    # -- rendering ------------------------------------------------------------

    def text(self):
        from .render import scalar_text
        return scalar_text(self)

    def __repr__(self):
        return "Scalar(%s)" % self.text()


def _eval_poly(ctx, p, assignment):
    def coeff_of(v):
        if isinstance(v, Coeff):
            return v
        return Coeff(v)

    total = C_ZERO
    for e, c in p.items():
        term = c
        for k, expo in enumerate(e):
            if not expo:
                continue
            name = ctx.symbols[k]
            if name == "r":
                if expo % 2 == 0:
                    if "r" not in assignment:
                        raise UnresolvedSymbolError("no value for r")
                    base, power = coeff_of(assignment["r"]), expo // 2
                else:
                    if "sqrt_r" not in assignment:
                        raise UnresolvedSymbolError(
                            "half-integer r power needs sqrt_r")
                    base, power = coeff_of(assignment["sqrt_r"]), expo
            else:
                if name not in assignment:
                    raise UnresolvedSymbolError("no value for %s" % name)
                base, power = coeff_of(assignment[name]), expo
            term = term * _coeff_power(base, power)
        total = total + term
    return total


def _coeff_power(base, k):
    if k < 0:
        base, k = base.inv(), -k
    out = C_ONE
    while k:
        if k & 1:
            out = out * base
        base = base * base if k > 1 else base
        k >>= 1
    return out


def _project_poly(p, keep, nsym):
    out = {}
    for e, c in p.items():
        ne = tuple(e[k] if k in keep else 0 for k in range(nsym))
        s = out.get(ne)
        out[ne] = c if s is None else s + c
    return {e: c for e, c in out.items() if not c.is_zero()}


def _canonicalize(nsym, num, den):
    if not num:
        return {}, p_const(nsym, C_ONE)
    # joint monomial content: shift so min exponent per symbol is zero
    mins = [None] * nsym
    for p in (num, den):
        for e in p:
            for k, x in enumerate(e):
                if mins[k] is None or x < mins[k]:
                    mins[k] = x
    if any(mins):
        shift = tuple(-m for m in mins)
        num = {tuple(x + s for x, s in zip(e, shift)): c for e, c in num.items()}
        den = {tuple(x + s for x, s in zip(e, shift)): c for e, c in den.items()}
    # no polynomial gcd by design: reduction is monomial content plus
    # leading-coefficient normalization; equality is cross-multiplication.
    # normalize the leading denominator coefficient to one
    lead = p_lead(den)
    lc = den[lead]
    if lc != C_ONE:
        inv = lc.inv()
        num = p_scale(num, inv)
        den = p_scale(den, inv)
    return num, den
