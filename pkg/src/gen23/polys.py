"""Polynomial arithmetic over Z and over GF(q): gcds, resultants, and
complete factorization at desk scale.

IntPoly holds exact arbitrary-precision integer coefficients, FieldPoly holds
field-element codes; both store coefficients low-degree first and keep the
leading coefficient nonzero.  Resultants are Sylvester determinants computed
by fraction-free (Bareiss) elimination, so bivariate inputs with integer
coefficients produce exact integer-coefficient results.  Factorization over
GF(q) is squarefree split + distinct-degree + Cantor-Zassenhaus equal-degree
(trace variant in characteristic 2) with sampling seeded from the input, so
runs are reproducible.  Factorization over Z is desk scale: factor modulo one
prime beyond the Mignotte bound and recombine factor subsets by exact trial
division.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from . import numth
from .fields import Field, FieldElement, make_field
from .reports import ClaimReport


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------

class IntPoly:
    """Univariate polynomial with exact integer coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(int(c) for c in coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def x(power: int = 1, c: int = 1) -> "IntPoly":
        return IntPoly([0] * power + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_intpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return IntPoly(a)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_intpoly(other))

    def __rsub__(self, other):
        return _as_intpoly(other) + (-self)

    def __mul__(self, other):
        other = _as_intpoly(other)
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        r = IntPoly([1])
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient when other divides self exactly over Z; raises otherwise."""
        other = _as_intpoly(other)
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            q, r = divmod(rem[-1], other.lead)
            if r:
                raise ArithmeticError("division not exact")
            shift = len(rem) - 1 - d
            quo[shift] = q
            for j, c in enumerate(other.coeffs):
                rem[shift + j] -= q * c
        if any(rem):
            raise ArithmeticError("division not exact")
        return IntPoly(quo)

    def divides(self, other: "IntPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ArithmeticError:
            return False

    def content(self) -> int:
        if self.is_zero():
            return 0
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        return g if self.lead > 0 else -g

    def primitive(self) -> "IntPoly":
        c = self.content()
        return self if c in (0, 1) else IntPoly([v // c for v in self.coeffs])

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, v: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def reduce_mod(self, field: Field) -> "FieldPoly":
        return FieldPoly(field, tuple(c % field.p for c in self.coeffs))

    def __repr__(self):
        return f"IntPoly({poly_text(self)})"


def _as_intpoly(v) -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly([v])
    raise TypeError(f"cannot coerce {v!r} to IntPoly")


# ---------------------------------------------------------------------------
# FieldPoly
# ---------------------------------------------------------------------------

class FieldPoly:
    """Univariate polynomial over a Field; coefficients are element codes."""

    __slots__ = ("field", "codes")

    def __init__(self, field: Field, codes):
        cs = list(int(c) for c in codes)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.codes = tuple(cs)

    @staticmethod
    def x(field: Field, power: int = 1, c: int = 1) -> "FieldPoly":
        return FieldPoly(field, [0] * power + [c % field.q if c >= field.p else c])

    @staticmethod
    def from_elements(elems) -> "FieldPoly":
        elems = list(elems)
        return FieldPoly(elems[0].field, [e.code for e in elems])

    @property
    def degree(self) -> int:
        return len(self.codes) - 1

    @property
    def lead(self) -> int:
        return self.codes[-1] if self.codes else 0

    def is_zero(self) -> bool:
        return not self.codes

    def coefficient(self, i: int) -> int:
        return self.codes[i] if 0 <= i < len(self.codes) else 0

    def __eq__(self, other):
        if isinstance(other, FieldPoly):
            return self.field == other.field and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.codes))

    def _check(self, other: "FieldPoly"):
        if self.field is not other.field and self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "FieldPoly"):
        self._check(other)
        F = self.field
        n = max(len(self.codes), len(other.codes))
        a = list(self.codes) + [0] * (n - len(self.codes))
        for i, c in enumerate(other.codes):
            a[i] = F.add(a[i], c)
        return FieldPoly(F, a)

    def __neg__(self):
        F = self.field
        return FieldPoly(F, [F.neg(c) for c in self.codes])

    def __sub__(self, other: "FieldPoly"):
        return self + (-other)

    def __mul__(self, other: "FieldPoly"):
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return FieldPoly(F, [])
        out = [0] * (len(self.codes) + len(other.codes) - 1)
        for i, a in enumerate(self.codes):
            if a:
                for j, b in enumerate(other.codes):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return FieldPoly(F, out)

    def scale(self, c: int) -> "FieldPoly":
        F = self.field
        return FieldPoly(F, [F.mul(c, v) for v in self.codes])

    def shift(self, k: int) -> "FieldPoly":
        if self.is_zero():
            return self
        return FieldPoly(self.field, (0,) * k + self.codes)

    def __divmod__(self, other: "FieldPoly"):
        self._check(other)
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.codes)
        quo = [0] * max(0, len(rem) - len(other.codes) + 1)
        d = other.degree
        inv_lead = F.inv(other.lead)
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem or len(rem) - 1 < d:
                break
            q = F.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - d
            quo[shift] = q
            for j, c in enumerate(other.codes):
                rem[shift + j] = F.sub(rem[shift + j], F.mul(q, c))
        return FieldPoly(F, quo), FieldPoly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "FieldPoly") -> "FieldPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division not exact")
        return q

    def monic(self) -> "FieldPoly":
        if self.is_zero() or self.lead == 1:
            return self
        return self.scale(self.field.inv(self.lead))

    def gcd(self, other: "FieldPoly") -> "FieldPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, mod: "FieldPoly") -> "FieldPoly":
        F = self.field
        r = FieldPoly(F, [1])
        b = self % mod
        while e:
            if e & 1:
                r = (r * b) % mod
            b = (b * b) % mod
            e >>= 1
        return r

    def derivative(self) -> "FieldPoly":
        F = self.field
        out = []
        for i in range(1, len(self.codes)):
            out.append(F.mul(self.codes[i], F.scalar(i)))
        return FieldPoly(F, out)

    def __call__(self, v: int) -> int:
        F = self.field
        out = 0
        for c in reversed(self.codes):
            out = F.add(F.mul(out, v), c)
        return out

    def eval_elem(self, v: FieldElement) -> FieldElement:
        return FieldElement(self.field, self(v.code))

    def map_field(self, embed) -> "FieldPoly":
        """Push coefficients through a field embedding."""
        return FieldPoly(embed.codomain, [embed(c) for c in self.codes])

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.codes]

    def __repr__(self):
        return f"FieldPoly({self.field}; {poly_text(self)})"


# ---------------------------------------------------------------------------
# resultants (Sylvester determinant, fraction-free)
# ---------------------------------------------------------------------------

def _bareiss_det(mat, one, is_zero, mul, sub, exact_div, neg):
    """Fraction-free determinant of a square matrix over an integral domain."""
    n = len(mat)
    if n == 0:
        return one
    m = [row[:] for row in mat]
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return None  # singular: determinant zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j]))
                m[i][j] = exact_div(num, prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else neg(det)


def _sylvester(fc: list, gc: list, zero):
    """Sylvester matrix rows for f (coeffs low first, len m+1) and g (len n+1)."""
    m = len(fc) - 1
    n = len(gc) - 1
    size = m + n
    rows = []
    fhigh = list(reversed(fc))
    ghigh = list(reversed(gc))
    for i in range(n):
        rows.append([zero] * i + fhigh + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + ghigh + [zero] * (m - 1 - i))
    return rows


def resultant_int(f: IntPoly, g: IntPoly) -> int:
    """Resultant of two integer polynomials (Sylvester determinant)."""
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    rows = _sylvester(list(f.coeffs), list(g.coeffs), 0)
    det = _bareiss_det(
        rows, 1, lambda v: v == 0, lambda a, b: a * b, lambda a, b: a - b,
        _int_exact_div, lambda v: -v,
    )
    return 0 if det is None else det


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("Bareiss division not exact")
    return q


def resultant_field(f: FieldPoly, g: FieldPoly) -> int:
    """Resultant of two polynomials over a field, as an element code."""
    if f.is_zero() or g.is_zero():
        return 0
    F = f.field
    if f.degree == 0:
        return F.pow(f.codes[0], g.degree)
    if g.degree == 0:
        return F.pow(g.codes[0], f.degree)
    rows = _sylvester(list(f.codes), list(g.codes), 0)
    det = _bareiss_det(rows, 1, lambda v: v == 0, F.mul, F.sub, F.div, F.neg)
    return 0 if det is None else det


class BivarPoly:
    """Polynomial in two named variables over Z, as {(i, j): coefficient}."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: tuple[str, str], terms: dict):
        self.vars = tuple(variables)
        self.terms = {k: int(v) for k, v in terms.items() if v}

    def degree_in(self, var: str) -> int:
        idx = self.vars.index(var)
        return max((k[idx] for k in self.terms), default=-1)

    def poly_in(self, var: str) -> list[IntPoly]:
        """Coefficients of powers of var, each an IntPoly in the other variable."""
        idx = self.vars.index(var)
        oth = 1 - idx
        d = self.degree_in(var)
        buckets: list[dict] = [dict() for _ in range(d + 1)]
        for k, v in self.terms.items():
            buckets[k[idx]][k[oth]] = buckets[k[idx]].get(k[oth], 0) + v
        out = []
        for b in buckets:
            n = max(b, default=-1)
            out.append(IntPoly([b.get(i, 0) for i in range(n + 1)]))
        return out

    def __call__(self, **kw) -> int:
        out = 0
        for (i, j), c in self.terms.items():
            out += c * kw[self.vars[0]] ** i * kw[self.vars[1]] ** j
        return out


def resultant_bivar(f: BivarPoly, g: BivarPoly, eliminate: str) -> IntPoly:
    """Sylvester resultant of two bivariate integer polynomials with respect to
    the eliminated variable; the result is an IntPoly in the surviving one."""
    fc = f.poly_in(eliminate)
    gc = g.poly_in(eliminate)
    if len(fc) <= 1 and len(gc) <= 1:
        raise ValueError("both inputs constant in the eliminated variable")
    if len(fc) <= 1:
        base = fc[0] if fc else IntPoly([])
        return base ** (len(gc) - 1)
    if len(gc) <= 1:
        base = gc[0] if gc else IntPoly([])
        return base ** (len(fc) - 1)
    zero = IntPoly([])
    rows = _sylvester(fc, gc, zero)
    det = _bareiss_det(
        rows, IntPoly([1]), IntPoly.is_zero, lambda a, b: a * b,
        lambda a, b: a - b, lambda a, b: a.exact_div(b), lambda v: -v,
    )
    return IntPoly([]) if det is None else det


# ---------------------------------------------------------------------------
# factorization over GF(q)
# ---------------------------------------------------------------------------

def _pth_root_poly(f: FieldPoly) -> FieldPoly:
    """Inverse of g -> g^p on polynomials all of whose exponents are multiples
    of p (coefficientwise p-th root, exponents divided by p)."""
    F = f.field
    p = F.p
    root_exp = F.q // p  # x -> x^(q/p) inverts x -> x^p
    out = []
    for i in range(0, len(f.codes), p):
        out.append(F.pow(f.codes[i], root_exp))
    return FieldPoly(F, out)


def squarefree_decomposition(f: FieldPoly) -> list[tuple[FieldPoly, int]]:
    """[(g, multiplicity)] with g squarefree, pairwise coprime, product f (monic)."""
    F = f.field
    p = F.p
    f = f.monic()
    out: list[tuple[FieldPoly, int]] = []
    fp = f.derivative()
    if fp.is_zero():
        for g, m in squarefree_decomposition(_pth_root_poly(f)):
            out.append((g, m * p))
        return out
    c = f.gcd(fp)
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        fac = w.exact_div(y)
        if fac.degree > 0:
            out.append((fac, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if c.degree > 0:
        for g, m in squarefree_decomposition(_pth_root_poly(c)):
            out.append((g, m * p))
    return out


def distinct_degree(f: FieldPoly) -> list[tuple[FieldPoly, int]]:
    """[(product of irreducible factors of degree d, d)] for squarefree monic f."""
    F = f.field
    q = F.q
    out = []
    x = FieldPoly.x(F)
    h = x
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            out.append((f, f.degree))
            break
        h = h.powmod(q, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f.exact_div(g)
            h = h % f
    return out


def _edf_rng(f: FieldPoly, d: int) -> random.Random:
    return random.Random(hash(("edf", f.field.p, f.field.m, f.codes, d)) & 0xFFFFFFFF)


def equal_degree(f: FieldPoly, d: int) -> list[FieldPoly]:
    """Split a squarefree monic product of degree-d irreducibles (Cantor-
    Zassenhaus; trace splitting in characteristic 2).  Deterministically
    seeded from the input."""
    F = f.field
    if f.degree == d:
        return [f.monic()]
    rng = _edf_rng(f, d)
    n = f.degree
    while True:
        r = FieldPoly(F, [rng.randrange(F.q) for _ in range(n)])
        if r.degree < 1:
            continue
        g = f.gcd(r)
        if 0 < g.degree < n:
            pass  # lucky split
        elif F.p == 2:
            k = F.m * d
            s = FieldPoly(F, [])
            t = r % f
            for _ in range(k):
                s = (s + t) % f
                t = (t * t) % f
            g = f.gcd(s)
        else:
            e = (F.q**d - 1) // 2
            s = r.powmod(e, f)
            g = f.gcd(s - FieldPoly(F, [1]))
        if 0 < g.degree < n:
            left = equal_degree(g, d)
            right = equal_degree(f.exact_div(g), d)
            return left + right


def factorize_gf(f: FieldPoly) -> tuple[int, list[tuple[FieldPoly, int]]]:
    """Complete factorization over GF(q): (leading unit code, [(monic
    irreducible, multiplicity)]), factors sorted by degree then coefficients."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = f.lead
    f = f.monic()
    out: list[tuple[FieldPoly, int]] = []
    for g, mult in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d):
                out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].codes))
    return unit, out


def roots(f: FieldPoly) -> list[int]:
    """All roots of f in its field of definition, as sorted codes."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    F = f.field
    if f.degree == 0:
        return []
    x = FieldPoly.x(F)
    lin = f.gcd(x.powmod(F.q, f) - (x % f))
    out = []
    # roots of the squarefree all-linear part
    if lin.degree >= 1:
        for g in equal_degree(lin, 1):
            out.append(F.neg(g.codes[0]))  # monic t + c -> root -c
    return sorted(out)


def root_order(g: FieldPoly) -> int:
    """Multiplicative order of x in F_q[x]/(g) for irreducible g with g(0) != 0:
    the common order of the roots of g in GF(q^deg)."""
    F = g.field
    if g.coefficient(0) == 0:
        raise ValueError("x is not invertible mod g")
    d = g.degree
    n = F.q**d - 1
    x = FieldPoly.x(F)
    order = n
    for ell in numth.factorize(n):
        while order % ell == 0 and x.powmod(order // ell, g) == FieldPoly(F, [1]):
            order //= ell
    return order


# ---------------------------------------------------------------------------
# factorization over Z (desk scale)
# ---------------------------------------------------------------------------

def _int_poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """gcd of integer polynomials (primitive, positive leading coefficient)."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        # pseudo-remainder keeps everything integral
        d = a.degree - b.degree
        if d < 0:
            a, b = b, a
            continue
        r = IntPoly([c * b.lead ** (d + 1) for c in a.coeffs])
        while r.degree >= b.degree and not r.is_zero():
            shift = r.degree - b.degree
            q = r.lead // b.lead
            r = r - (b * IntPoly.x(shift, q))
        a, b = b, r.primitive()
    return a if a.lead > 0 else -a


def _mignotte_prime(f: IntPoly) -> int:
    norm2 = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    bound = 2 * (2 ** f.degree) * norm2 * max(1, abs(f.lead)) + 1
    cand = max(bound, 101) | 1
    while True:
        if numth.is_prime(cand) and f.lead % cand != 0:
            return cand
        cand += 2


def _sym_lift(code: int, p: int) -> int:
    return code - p if code > p // 2 else code


def factorize_int(f: IntPoly) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Complete factorization over Z: (content-with-sign, [(primitive
    irreducible with positive leading coefficient, multiplicity)])."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    content = f.content()
    f = f.primitive() if content not in (0, 1) else (f if f.lead > 0 else -f)
    if f.degree <= 0:
        return content, []
    sqf = _int_poly_gcd(f, f.derivative())
    if sqf.degree > 0:
        # f is not squarefree: factor the squarefree part, then read off
        # multiplicities by repeated division
        part = f.exact_div(sqf)
        _, base = factorize_int(part)
        out = []
        for g, _ in base:
            mult = 0
            rest = f
            while g.divides(rest):
                rest = rest.exact_div(g)
                mult += 1
            out.append((g, mult))
        return content, sorted(out, key=lambda t: (t[0].degree, t[0].coeffs))

    P = _mignotte_prime(f)
    while True:
        GFP = make_field(P, 1)
        fbar = f.reduce_mod(GFP)
        if fbar.gcd(fbar.derivative()).degree == 0:
            break
        # unlucky prime: f not squarefree mod P, move to the next usable prime
        P += 2
        while not (numth.is_prime(P) and f.lead % P):
            P += 2
    _, modular = factorize_gf(fbar)
    mod_factors = [g for g, _ in modular]

    found: list[IntPoly] = []
    remaining = f
    k = 1
    while 2 * k <= len(mod_factors) + 1 and remaining.degree > 0:
        hit = True
        while hit and 2 * k <= len(mod_factors):
            hit = False
            for subset in combinations(range(len(mod_factors)), k):
                prod = FieldPoly(GFP, [remaining.lead % P])
                for i in subset:
                    prod = prod * mod_factors[i]
                cand = IntPoly([_sym_lift(c, P) for c in prod.codes]).primitive()
                if cand.degree < 1:
                    continue
                if cand.divides(remaining):
                    found.append(cand if cand.lead > 0 else -cand)
                    remaining = remaining.exact_div(cand)
                    mod_factors = [g for i, g in enumerate(mod_factors) if i not in subset]
                    hit = True
                    break
        k += 1
    if remaining.degree > 0:
        found.append(remaining if remaining.lead > 0 else -remaining)
    found.sort(key=lambda g: (g.degree, g.coeffs))
    return content, [(g, 1) for g in found]


# ---------------------------------------------------------------------------
# spec'd compound operations
# ---------------------------------------------------------------------------

def gcd_coprime(f: FieldPoly, g: FieldPoly) -> tuple[FieldPoly, bool]:
    """(monic gcd, coprime flag)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    d = f.gcd(g)
    return d, d.degree == 0


def splitting_order_check(f: IntPoly, p: int) -> ClaimReport:
    """Reduce f mod p, find the degree of its splitting field GF(p^d), and
    check that field contains an element of order 21/(p,21)."""
    if not numth.is_prime(p):
        raise ValueError("p must be prime")
    F = make_field(p, 1)
    fbar = f.reduce_mod(F)
    if fbar.is_zero():
        raise ValueError("polynomial vanishes mod p")
    _, factors = factorize_gf(fbar)
    degs = sorted({g.degree for g, _ in factors})
    d_split = 1
    for d in degs:
        d_split = d_split * d // math.gcd(d_split, d)
    k = 21 // math.gcd(p, 21)
    ok = (p**d_split - 1) % k == 0
    d_min = numth.multiplicative_order(p, k) if k > 1 else 1
    return ClaimReport(
        claim=f"splitting-order-p{p}",
        ok=ok,
        details={
            "p": p,
            "factor_degrees": [g.degree for g, _ in factors],
            "splitting_degree": d_split,
            "required_order": k,
            "min_degree_with_order": d_min,
            "splitting_field_is_minimal": d_split == d_min,
        },
    )


# ---------------------------------------------------------------------------
# text / JSON forms
# ---------------------------------------------------------------------------

def poly_text(f) -> str:
    """Human-readable "c0 + c1*t + ...".  FieldPoly coefficients with m > 1
    render as parenthesized digit lists."""
    if isinstance(f, IntPoly):
        cs = [str(c) for c in f.coeffs]
    else:
        if f.field.m == 1:
            cs = [str(c) for c in f.codes]
        else:
            cs = ["(" + ",".join(str(d) for d in f.field.decode(c)) + ")" for c in f.codes]
    if not cs:
        return "0"
    parts = []
    for i, c in enumerate(cs):
        if isinstance(f, IntPoly) and f.coeffs[i] == 0:
            continue
        if not isinstance(f, IntPoly) and f.codes[i] == 0:
            continue
        if i == 0:
            parts.append(c)
        elif i == 1:
            parts.append(f"{c}*t")
        else:
            parts.append(f"{c}*t^{i}")
    return " + ".join(parts) if parts else "0"


def parse_poly_text(text: str, field: Field | None = None):
    """Inverse of poly_text for either coefficient domain."""
    text = text.strip()
    if text == "0":
        return FieldPoly(field, []) if field else IntPoly([])
    coeffs: dict[int, str] = {}
    for term in text.split("+"):
        term = term.strip()
        if "*t^" in term:
            c, e = term.split("*t^")
            coeffs[int(e)] = c.strip()
        elif "*t" in term:
            c, _ = term.split("*t")
            coeffs[1] = c.strip()
        else:
            coeffs[0] = term
    n = max(coeffs)
    if field is None:
        return IntPoly([int(coeffs.get(i, "0")) for i in range(n + 1)])
    out = []
    for i in range(n + 1):
        c = coeffs.get(i, "0").strip()
        if c.startswith("("):
            out.append(field.encode([int(v) for v in c[1:-1].split(",")]))
        else:
            out.append(int(c) % field.p)
    return FieldPoly(field, out)


def poly_json(f):
    if isinstance(f, IntPoly):
        return list(f.coeffs)
    return {"field": str(f.field), "coeffs": [list(f.field.decode(c)) for c in f.codes]}


def parse_poly_json(data, field: Field | None = None):
    if isinstance(data, list):
        return IntPoly(data)
    from .fields import parse_field

    F = field if field is not None else parse_field(data["field"])
    return FieldPoly(F, [F.encode(c) for c in data["coeffs"]])


# the degree-15 condition polynomial of the order-7 scalar-power analysis
R_POLY = IntPoly([8, 0, 0, -37, 0, 0, -67, 0, 0, 59, 0, 0, -16, 0, 0, 1])
# its four irreducible integer factors
R_FACTORS = (
    IntPoly([2, 1, 1]),
    IntPoly([1, -1, -2, 1]),
    IntPoly([4, -2, -1, -1, 1]),
    IntPoly([1, 1, 3, 0, 5, 2, 1]),
)
# the order-5 scalar-power condition polynomial t^6 - 4t^3 - 1
Z5_POLY = IntPoly([-1, 0, 0, -4, 0, 0, 1])
