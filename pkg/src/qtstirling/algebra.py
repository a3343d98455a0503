"""Exact arithmetic in Q(q, t, X).

Values are reduced ratios of sparse polynomials over the rationals in the
three indeterminates q, t, X.  X stands for the generic exponential q^x, so
every quantity in the library lives in this one field.  Canonical form:
numerator and denominator coprime, denominator an integer-primitive
polynomial with positive leading coefficient under graded lex q > t > X.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, NamedTuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

__all__ = [
    "BigRational",
    "Monomial",
    "Polynomial",
    "PoleError",
    "RationalFn",
    "ZERO",
    "ONE",
    "Q",
    "T",
    "X",
    "const",
    "monomial_rf",
    "q_pow",
    "t_pow",
    "x_pow",
    "poly_terms",
    "polynomial",
    "flip_qt",
    "evaluate",
    "limit_q_to_1",
    "substitute_t_eq_q_pow",
    "subs_rational",
    "canonical_str",
    "parse_rational",
]

BigRational = Fraction

_RING, _PQ, _PT, _PX = ring("q,t,X", QQ, "grlex")

#: Sparse multivariate polynomial over the rationals (term map monomial -> coeff).
Polynomial = PolyElement

_VARS = ("q", "t", "X")


class PoleError(ArithmeticError):
    """An evaluation, substitution or limit hit a vanishing denominator."""


class Monomial(NamedTuple):
    """Exponent triple (e_q, e_t, e_X); exponents are never negative."""

    e_q: int
    e_t: int
    e_X: int


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _to_coeff(c) -> object:
    if isinstance(c, int):
        return QQ(c)
    return QQ(int(c.numerator), int(c.denominator))


def polynomial(terms: Mapping[tuple, Union[int, Fraction]]) -> Polynomial:
    """Build a polynomial from a term map {(e_q, e_t, e_X): coefficient}."""
    out = {}
    for monom, c in terms.items():
        monom = tuple(int(e) for e in monom)
        if len(monom) != 3 or any(e < 0 for e in monom):
            raise ValueError(f"bad monomial {monom!r}")
        out[monom] = _to_coeff(c)
    return _RING(out)


def poly_terms(p: Polynomial) -> Iterator[tuple[Monomial, Fraction]]:
    """Terms of p in descending canonical (graded lex) order."""
    for monom, c in sorted(p.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True):
        yield Monomial(*monom), _to_fraction(c)


def _poly_key(p: Polynomial) -> frozenset:
    return frozenset((m, int(c.numerator), int(c.denominator)) for m, c in p.items())


def _canonical(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Reduce num/den: remove gcd and content, fix denominator sign."""
    if not den:
        raise ZeroDivisionError("division by the zero rational function")
    if not num:
        return _RING.zero, _RING.one
    g = num.gcd(den)
    if g != _RING.one:
        num = num.exquo(g)
        den = den.exquo(g)
    c_num, num = num.primitive()
    c_den, den = den.primitive()
    if den.LC < 0:
        den = -den
        num = -num
    scale = c_num / c_den
    if scale != 1:
        num = num.mul_ground(scale)
    return num, den


class RationalFn:
    """A reduced rational function in q, t, X; immutable and hashable.

    Supports +, -, *, /, ** (integer exponent, negative inverts) with
    automatic coercion of ints and Fractions.  Structural equality of the
    canonical form coincides with equality of values.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _canon=False):
        num = _coerce_poly(num)
        den = _RING.one if den is None else _coerce_poly(den)
        if not _canon:
            num, den = _canonical(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = const(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        # PolyElement caches its own hash, which can go stale after the
        # in-place arithmetic sympy uses internally; hash the term data.
        h = self._hash
        if h is None:
            h = hash((_poly_key(self.num), _poly_key(self.den)))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        g = self.den.gcd(other.den)
        da = self.den.exquo(g)
        db = other.den.exquo(g)
        return RationalFn(self.num * db + other.num * da, da * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, _canon=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = self.num.exquo(g1) * other.num.exquo(g2)
        den = self.den.exquo(g2) * other.den.exquo(g1)
        return RationalFn(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def inverse(self) -> "RationalFn":
        if not self.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.den, self.num)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        return RationalFn(self.num ** k, self.den ** k, _canon=True)

    def __repr__(self):
        return f"RationalFn({canonical_str(self)!r})"

    def __str__(self):
        return canonical_str(self)


def _coerce_poly(v) -> Polynomial:
    if isinstance(v, PolyElement):
        return v
    if isinstance(v, int):
        return _RING.ground_new(QQ(v))
    if isinstance(v, Fraction):
        return _RING.ground_new(QQ(v.numerator, v.denominator))
    raise TypeError(f"cannot build a polynomial from {type(v).__name__}")


def _coerce(v):
    if isinstance(v, RationalFn):
        return v
    if isinstance(v, (int, Fraction)):
        return const(v)
    return NotImplemented


@lru_cache(maxsize=None)
def const(c: Union[int, Fraction]) -> RationalFn:
    """The constant rational function c."""
    return RationalFn(_coerce_poly(c))


@lru_cache(maxsize=None)
def monomial_rf(e_q: int = 0, e_t: int = 0, e_X: int = 0) -> RationalFn:
    """The monomial q^e_q * t^e_t * X^e_X; negative exponents go to the denominator."""
    num = {(max(e_q, 0), max(e_t, 0), max(e_X, 0)): QQ(1)}
    den = {(max(-e_q, 0), max(-e_t, 0), max(-e_X, 0)): QQ(1)}
    return RationalFn(_RING(num), _RING(den), _canon=True)


def q_pow(k: int) -> RationalFn:
    return monomial_rf(e_q=k)


def t_pow(k: int) -> RationalFn:
    return monomial_rf(e_t=k)


def x_pow(k: int) -> RationalFn:
    return monomial_rf(e_X=k)


ZERO = RationalFn(_RING.zero, _RING.one, _canon=True)
ONE = RationalFn(_RING.one, _RING.one, _canon=True)
Q = monomial_rf(e_q=1)
T = monomial_rf(e_t=1)
X = monomial_rf(e_X=1)
_GEN_Q_RF, _GEN_T_RF, _GEN_X_RF = Q, T, X


def _flip_poly(p: Polynomial) -> tuple[Polynomial, int, int]:
    """Reverse p in q and t: p(1/q, 1/t, X) = reversed / (q^A * t^B)."""
    if not p:
        return p, 0, 0
    a_max = max(m[0] for m in p)
    b_max = max(m[1] for m in p)
    rev = {(a_max - m[0], b_max - m[1], m[2]): c for m, c in p.items()}
    return _RING(rev), a_max, b_max


def flip_qt(f: RationalFn) -> RationalFn:
    """The canonical form of f(1/q, 1/t, X).  X itself is never flipped."""
    rn, an, bn = _flip_poly(f.num)
    rd, ad, bd = _flip_poly(f.den)
    num = rn * _RING({(max(ad - an, 0), max(bd - bn, 0), 0): QQ(1)})
    den = rd * _RING({(max(an - ad, 0), max(bn - bd, 0), 0): QQ(1)})
    return RationalFn(num, den)


def _eval_poly(p: Polynomial, q0: Fraction, t0: Fraction, X0: Fraction) -> Fraction:
    total = Fraction(0)
    powers: dict[tuple[int, int], Fraction] = {}
    for (a, b, x), c in p.items():
        val = _to_fraction(c)
        for idx, (base, e) in enumerate(((q0, a), (t0, b), (X0, x))):
            if e:
                key = (idx, e)
                pw = powers.get(key)
                if pw is None:
                    pw = powers[key] = base ** e
                val *= pw
        total += val
    return total


def evaluate(f: RationalFn, q0, t0, X0=0) -> Fraction:
    """Exact value of f at a rational point; PoleError on a vanishing denominator."""
    q0, t0, X0 = Fraction(q0), Fraction(t0), Fraction(X0)
    den = _eval_poly(f.den, q0, t0, X0)
    if den == 0:
        raise PoleError(f"denominator vanishes at q={q0}, t={t0}, X={X0}")
    return _eval_poly(f.num, q0, t0, X0) / den


def _subs_poly(p: Polynomial, images: tuple[RationalFn, RationalFn, RationalFn]) -> RationalFn:
    total = ZERO
    powers: dict[tuple[int, int], RationalFn] = {}
    for (a, b, x), c in p.items():
        term = const(_to_fraction(c))
        for idx, e in enumerate((a, b, x)):
            if e:
                key = (idx, e)
                pw = powers.get(key)
                if pw is None:
                    pw = powers[key] = images[idx] ** e
                term = term * pw
        total = total + term
    return total


def subs_rational(f: RationalFn, q=None, t=None, X=None) -> RationalFn:
    """Substitute rational-function images for any of q, t, X.

    Unspecified variables stay fixed.  Raises PoleError when the
    substituted denominator collapses to zero.
    """
    images = (
        _GEN_Q_RF if q is None else _coerce(q),
        _GEN_T_RF if t is None else _coerce(t),
        _GEN_X_RF if X is None else _coerce(X),
    )
    den = _subs_poly(f.den, images)
    if den.is_zero:
        raise PoleError("substitution hits a pole")
    return _subs_poly(f.num, images) / den


def _subs_q1_poly(p: Polynomial) -> Polynomial:
    out: dict[tuple, object] = {}
    for (a, b, x), c in p.items():
        key = (0, b, x)
        acc = out.get(key)
        out[key] = c if acc is None else acc + c
    return _RING({k: v for k, v in out.items() if v})


def limit_q_to_1(f: RationalFn, prefactor_order: int = 0) -> RationalFn:
    """Value at q=1 of (1-q)^(-prefactor_order) * f, by exact cancellation.

    The result is a rational function of t and X only.  Raises PoleError
    when the reduced denominator still vanishes at q=1, i.e. the limit does
    not exist at the requested order.
    """
    if prefactor_order < 0:
        raise ValueError("prefactor_order must be nonnegative")
    if prefactor_order:
        f = f / (ONE - Q) ** prefactor_order
    den = _subs_q1_poly(f.den)
    if not den:
        raise PoleError("limit q->1 does not exist at this order")
    return RationalFn(_subs_q1_poly(f.num), den)


def substitute_t_eq_q_pow(f: RationalFn, alpha: int) -> RationalFn:
    """Substitute t = q^alpha (alpha a positive integer) and re-canonicalize."""
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")

    def sub(p: Polynomial) -> Polynomial:
        out: dict[tuple, object] = {}
        for (a, b, x), c in p.items():
            key = (a + alpha * b, 0, x)
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return _RING({k: v for k, v in out.items() if v})

    return RationalFn(sub(f.num), sub(f.den))


# ---------------------------------------------------------------------------
# canonical strings and parsing
# ---------------------------------------------------------------------------

def _poly_str(p: Polynomial) -> str:
    if not p:
        return "0"
    pieces = []
    for monom, coeff in poly_terms(p):
        mono_bits = []
        for name, e in zip(_VARS, monom):
            if e == 1:
                mono_bits.append(name)
            elif e:
                mono_bits.append(f"{name}^{e}")
        mono = "*".join(mono_bits)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def canonical_str(f: RationalFn) -> str:
    """Serialize in the canonical grammar, e.g. "(q^2*t - 1)/(q - 1)"."""
    if f.den == _RING.one:
        return _poly_str(f.num)
    return f"({_poly_str(f.num)})/({_poly_str(f.den)})"


class _Tokens:
    def __init__(self, text: str):
        self.toks: list[str] = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(text[i:j])
                i = j
            elif ch in "qtX^*+-/()":
                self.toks.append(ch)
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r} in rational-function string")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of rational-function string")
        self.pos += 1
        return tok


def _parse_poly(tk: _Tokens, stop_at_close: bool = False) -> Polynomial:
    terms: dict[tuple, object] = {}
    sign = 1
    tok = tk.peek()
    if tok in ("+", "-"):
        tk.next()
        sign = -1 if tok == "-" else 1
    while True:
        coeff, exps = _parse_term(tk)
        monom = tuple(exps)
        c = QQ(coeff.numerator, coeff.denominator) * sign
        acc = terms.get(monom)
        total = c if acc is None else acc + c
        if total:
            terms[monom] = total
        else:
            terms.pop(monom, None)
        tok = tk.peek()
        if tok in ("+", "-"):
            tk.next()
            sign = -1 if tok == "-" else 1
            continue
        if tok is None or (stop_at_close and tok == ")"):
            return _RING(terms)
        raise ValueError(f"unexpected token {tok!r} in polynomial")


def _parse_term(tk: _Tokens) -> tuple[Fraction, list[int]]:
    coeff = Fraction(1)
    exps = [0, 0, 0]
    saw_factor = False
    while True:
        tok = tk.peek()
        if tok is not None and tok.isdigit():
            tk.next()
            value = Fraction(int(tok))
            if tk.peek() == "/":
                tk.next()
                den = tk.next()
                if not den.isdigit():
                    raise ValueError("expected integer after '/' in coefficient")
                value /= int(den)
            coeff *= value
            saw_factor = True
        elif tok in _VARS:
            tk.next()
            e = 1
            if tk.peek() == "^":
                tk.next()
                etok = tk.next()
                if not etok.isdigit():
                    raise ValueError("expected integer exponent after '^'")
                e = int(etok)
            exps[_VARS.index(tok)] += e
            saw_factor = True
        else:
            raise ValueError(f"unexpected token {tok!r} in term")
        if tk.peek() == "*":
            tk.next()
            continue
        if not saw_factor:
            raise ValueError("empty term")
        return coeff, exps


def parse_rational(text: str) -> RationalFn:
    """Parse the canonical grammar back into a RationalFn.

    Accepts a bare expanded polynomial ("q^2*t - 1"), the quotient form
    "(num)/(den)", and fraction coefficients like "1/2*q".
    """
    s = text.strip()
    if s.startswith("("):
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    if i == len(s) - 1:
                        return parse_rational(s[1:-1])
                    if s[i + 1 : i + 3] == "/(" and s.endswith(")"):
                        num = _parse_only_poly(s[1:i])
                        den = _parse_only_poly(s[i + 3 : -1])
                        return RationalFn(num, den)
                    break
    return RationalFn(_parse_only_poly(s))


def _parse_only_poly(s: str) -> Polynomial:
    tk = _Tokens(s)
    p = _parse_poly(tk)
    if tk.peek() is not None:
        raise ValueError(f"trailing tokens in {s!r}")
    return p
