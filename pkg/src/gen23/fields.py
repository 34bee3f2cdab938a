"""Finite fields GF(p^m) with an explicit polynomial-basis representation.

An element is stored as an integer code in [0, q), q = p^m, whose base-p
digits (c0, c1, ..., c_{m-1}) are the coordinates in the polynomial basis
1, t, t^2, ...: code = c0 + c1*p + ... + c_{m-1}*p^(m-1).  The text form of
an element is the comma-separated digit list "c0,c1,...", and a field
serializes as "p^m/d0,d1,...,1" where the d_i are the modulus coefficients,
constant term first.

When no modulus is supplied, make_field picks the lexicographically smallest
monic irreducible polynomial of degree m, comparing coefficient vectors from
the constant term upward, so field construction is deterministic.

Fields with q <= 4096 lazily build exp/log tables over a fixed generator
(multiplication then costs two lookups); char-2 fields multiply by carry-less
product plus shift-reduce at any size.  Fields and elements are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import numth

_EXPLOG_LIMIT = 4096  # build exp/log tables up to this field size
_NUMPY_TABLE_LIMIT = 256  # full q x q add/mul tables for enumeration kernels


# ---------------------------------------------------------------------------
# polynomial helpers over the prime field GF(p); coefficient lists, low first
# ---------------------------------------------------------------------------

def _pf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pf_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pf_trim(out)


def _pf_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = a[:]
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        if c:
            for j, fj in enumerate(f):
                a[shift + j] = (a[shift + j] - c * fj) % p
        a.pop()
        _pf_trim(a)
    return a


def _pf_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pf_mod(a, f, p)
    while e:
        if e & 1:
            result = _pf_mod(_pf_mul(result, base, p), f, p)
        base = _pf_mod(_pf_mul(base, base, p), f, p)
        e >>= 1
    return result


def _pf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        a, b = b, _pf_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible_mod_p(coeffs: list[int], p: int) -> bool:
    """Rabin test for a polynomial over GF(p), coefficients low first."""
    f = _pf_trim([c % p for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False  # divisible by t
    x = [0, 1]
    # x^(p^m) == x mod f
    h = x
    for _ in range(m):
        h = _pf_powmod(h, p, f, p)
    diff = _pf_trim([(hi - xi) % p for hi, xi in
                     zip(h + [0] * 2, x + [0] * len(h))])
    if diff:
        return False
    for ell in set(numth.factorize(m)):
        h = x
        for _ in range(m // ell):
            h = _pf_powmod(h, p, f, p)
        diff = _pf_trim([(hi - xi) % p for hi, xi in
                         zip(h + [0] * 2, x + [0] * len(h))])
        g = _pf_gcd(f, diff if diff else f, p)
        if len(g) - 1 != 0:
            return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p),
    coefficients compared from the constant term upward."""
    if m == 1:
        return (0, 1)

    def rec(prefix: list[int]):
        if len(prefix) == m:
            cand = prefix + [1]
            if is_irreducible_mod_p(cand, p):
                return tuple(cand)
            return None
        for c in range(p):
            got = rec(prefix + [c])
            if got is not None:
                return got
        return None

    out = rec([])
    if out is None:  # cannot happen: irreducibles exist in every degree
        raise ArithmeticError(f"no irreducible of degree {m} over GF({p})")
    return out


# ---------------------------------------------------------------------------
# Field
# ---------------------------------------------------------------------------

class Field:
    """GF(p^m) with explicit monic irreducible modulus.

    Do not call directly; use make_field so equal parameters share one object.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._ppow = tuple(p**i for i in range(m + 1))
        self._modbits = sum(c << i for i, c in enumerate(modulus)) if p == 2 else None
        self._modlow = list(modulus[:m])
        self._exp = None
        self._log = None
        self._np_add = None
        self._np_mul = None
        self._q1_factors = None
        self._extensions: dict[int, tuple["Field", "Embedding"]] = {}
        self._gen_code = None

    # -- representation ----------------------------------------------------

    def __repr__(self):
        return f"Field({self})"

    def __str__(self):
        return f"{self.p}^{self.m}/" + ",".join(str(c) for c in self.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    # -- digit codecs --------------------------------------------------------

    def decode(self, code: int) -> tuple[int, ...]:
        p = self.p
        return tuple((code // self._ppow[i]) % p for i in range(self.m))

    def encode(self, digits) -> int:
        if len(digits) > self.m and any(d for d in digits[self.m:]):
            raise ValueError("too many coefficients")
        return sum((d % self.p) * self._ppow[i] for i, d in enumerate(digits[: self.m]))

    def lex_key(self, code: int) -> tuple[int, ...]:
        return self.decode(code)

    def codes_lex_ordered(self) -> list[int]:
        return sorted(range(self.q), key=self.decode)

    # -- core code arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for pw in self._ppow[: self.m]:
            out += ((a // pw + b // pw) % p) * pw
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        for pw in self._ppow[: self.m]:
            out += ((-(a // pw)) % p) * pw
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        if p == 2:
            r = 0
            x = a
            while b:
                if b & 1:
                    r ^= x
                x <<= 1
                b >>= 1
            mb = self._modbits
            for i in range(r.bit_length() - 1, m - 1, -1):
                if (r >> i) & 1:
                    r ^= mb << (i - m)
            return r
        da = self.decode(a)
        db = self.decode(b)
        out = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    out[i + j] = (out[i + j] + ai * bj) % p
        mod = self._modlow
        for i in range(2 * m - 2, m - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(m):
                    out[i - m + j] = (out[i - m + j] - c * mod[j]) % p
        return self.encode(out)

    def _ensure_explog(self):
        if self._exp is not None or self.q > _EXPLOG_LIMIT:
            return
        g = self._find_generator()
        q = self.q
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = 1
        for k in range(q - 1):
            exp[k] = cur
            log[cur] = k
            cur = self._mul_poly(cur, g)
        exp[q - 1 :] = exp[: q - 1]
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        if self._gen_code is not None:
            return self._gen_code
        target = self.q - 1
        for code in range(1, self.q):
            if self._order_via(code, self._pow_poly) == target:
                self._gen_code = code
                return code
        raise ArithmeticError("no generator found")  # unreachable

    def _pow_poly(self, a: int, e: int) -> int:
        r = 1
        base = a
        while e:
            if e & 1:
                r = self._mul_poly(r, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return r

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.q <= _EXPLOG_LIMIT:
            self._ensure_explog()
            return int(self._exp[self._log[a] + self._log[b]])
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.q <= _EXPLOG_LIMIT:
            self._ensure_explog()
            return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])
        return self._pow_poly(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        if self.q <= _EXPLOG_LIMIT:
            self._ensure_explog()
            return int(self._exp[(self._log[a] * e) % (self.q - 1)])
        return self._pow_poly(a, e % (self.q - 1) if e else 0)

    def scalar(self, k: int) -> int:
        """Image of the integer k under GF(p) -> GF(q)."""
        return k % self.p

    # -- orders, Frobenius, subfields ---------------------------------------

    def _q1_factorization(self):
        if self._q1_factors is None:
            self._q1_factors = numth.factorize(self.q - 1) if self.q > 1 else {}
        return self._q1_factors

    def _order_via(self, a: int, powfn) -> int:
        order = self.q - 1
        for ell in self._q1_factorization():
            while order % ell == 0 and powfn(a, order // ell) == 1:
                order //= ell
        return order

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of 0 undefined")
        return self._order_via(a, self.pow)

    def frobenius(self, a: int, d: int = 1) -> int:
        """a ** (p^d)."""
        return self.pow(a, self._ppow[d] if d <= self.m else self.p**d)

    def subfield_degree(self, a: int) -> int:
        """Degree of the minimal polynomial of a over GF(p)."""
        for d in sorted(numth.divisors(self.m)):
            if self.frobenius(a, d) == a:
                return d
        return self.m

    # -- kernels for the enumeration engine ----------------------------------

    def numpy_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) full q x q uint8 tables; only for q <= 256."""
        if self.q > _NUMPY_TABLE_LIMIT:
            raise ValueError(f"q={self.q} too large for dense tables")
        if self._np_add is None:
            q = self.q
            add = np.zeros((q, q), dtype=np.uint8)
            mul = np.zeros((q, q), dtype=np.uint8)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self.mul(a, b)
            self._np_add = add
            self._np_mul = mul
        return self._np_add, self._np_mul

    # -- extensions -----------------------------------------------------------

    def extension(self, d: int) -> tuple["Field", "Embedding"]:
        """The degree-d extension with the default modulus, plus the embedding
        sending this field's generator-of-basis t to its smallest root there."""
        if d == 1:
            return self, Embedding(self, self, None)
        if d in self._extensions:
            return self._extensions[d]
        ext = make_field(self.p, self.m * d)
        from . import polys  # deferred: polys imports fields

        f = polys.FieldPoly(ext, tuple(c % self.p for c in self.modulus))
        rts = polys.roots(f)
        if not rts:
            raise ArithmeticError("modulus has no root in extension")
        theta = min(rts, key=ext.decode)
        emb = Embedding(self, ext, theta)
        self._extensions[d] = (ext, emb)
        return ext, emb

    def root_of_unity(self, k: int) -> int:
        """Smallest root of the k-th cyclotomic polynomial in this field; this
        is an element of order k/(k,p) wherever that makes sense (k in 3,4,5),
        and equals 1 when p divides k.  Raises if the field lacks one."""
        cyclo = {3: (1, 1, 1), 4: (1, 0, 1), 5: (1, 1, 1, 1, 1)}
        if k not in cyclo:
            raise ValueError("only k in {3,4,5} supported")
        from . import polys

        f = polys.FieldPoly(self, tuple(c % self.p for c in cyclo[k]))
        rts = polys.roots(f)
        if not rts:
            raise ValueError(f"no {k}-th root of unity in {self}")
        return min(rts, key=self.decode)


class Embedding:
    """Field homomorphism into an extension, determined by the image of t."""

    def __init__(self, domain: Field, codomain: Field, theta: int | None):
        self.domain = domain
        self.codomain = codomain
        self.theta = theta
        self._memo: dict[int, int] = {}

    def __call__(self, code: int) -> int:
        if self.domain is self.codomain:
            return code
        got = self._memo.get(code)
        if got is not None:
            return got
        E = self.codomain
        out = 0
        for c in reversed(self.domain.decode(code)):
            out = E.add(E.mul(out, self.theta), c % E.p)
        self._memo[code] = out
        return out


@lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, m, modulus)


def make_field(p: int, m: int, modulus=None) -> Field:
    """Construct GF(p^m).  modulus, if given, is a monic irreducible of degree
    m over GF(p) as a low-first coefficient sequence; otherwise the
    deterministic default is chosen."""
    if p < 2 or not numth.is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if m < 1:
        raise ValueError("m must be >= 1")
    if modulus is None:
        modulus = default_modulus(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not is_irreducible_mod_p(list(modulus), p):
            raise ValueError("modulus is reducible over GF(p)")
    return _field_cached(p, m, modulus)


def parse_field(text: str) -> Field:
    """Parse "p^m" or "p^m/c0,c1,...,1"."""
    if "/" in text:
        head, tail = text.split("/", 1)
        modulus = tuple(int(c) for c in tail.split(","))
    else:
        head, modulus = text, None
    if "^" in head:
        ps, ms = head.split("^", 1)
        p, m = int(ps), int(ms)
    else:
        p, m = int(head), 1
    return make_field(p, m, modulus)


# ---------------------------------------------------------------------------
# FieldElement: thin immutable wrapper over (field, code)
# ---------------------------------------------------------------------------

class FieldElement:
    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.decode(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        return FieldElement(self.field, self.field.sub(c, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.code, c))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        return FieldElement(self.field, self.field.div(c, self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"FE({self.field}:{','.join(str(c) for c in self.coeffs)})"

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)


def element(field: Field, value) -> FieldElement:
    """Build a field element from a code, an int (mod p), a digit list, or text."""
    if isinstance(value, FieldElement):
        return value
    if isinstance(value, str):
        return FieldElement(field, field.encode([int(c) for c in value.split(",")]))
    if isinstance(value, (list, tuple)):
        return FieldElement(field, field.encode(value))
    if isinstance(value, int):
        if 0 <= value < field.q:
            return FieldElement(field, value)
        return FieldElement(field, value % field.p)
    raise TypeError(f"cannot build element from {value!r}")


@dataclass(frozen=True)
class SubfieldDescriptor:
    """The subfield GF(p^d) inside GF(p^m); d divides m."""

    p: int
    d: int
    size: int


def element_order(a: FieldElement) -> int:
    """Smallest k >= 1 with a^k = 1; via the factorization of q-1."""
    if a.code == 0:
        raise ZeroDivisionError("order of zero undefined")
    return a.field.element_order(a.code)


def frobenius(a: FieldElement, d: int | None = None) -> FieldElement:
    """The q-power map on GF(q^2) when d is omitted (requires even m, or m=1
    where every power map is the identity); otherwise a ** (p^d)."""
    f = a.field
    if d is None:
        if f.m == 1:
            return a
        if f.m % 2:
            raise ValueError("field is not a square extension")
        d = f.m // 2
    return FieldElement(f, f.frobenius(a.code, d))


def subfield_generated(a: FieldElement) -> SubfieldDescriptor:
    """Smallest subfield containing a: GF(p^d) with d the degree of the
    minimal polynomial of a over the prime field."""
    d = a.field.subfield_degree(a.code)
    return SubfieldDescriptor(a.field.p, d, a.field.p**d)
