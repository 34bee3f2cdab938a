"""Matrices over finite fields with group-element semantics.

A Matrix is an immutable n x n grid of field-element codes.  Orders are
computed exactly: the minimal polynomial (by Krylov annihilators) factors the
element into commuting semisimple and unipotent parts, the semisimple order
is the lcm of the multiplicative orders of the roots of the irreducible
factors in their splitting fields, and the unipotent order is the p-power
bounded by the largest multiplicity.  No brute-force iteration is needed even
for elements whose order runs into the millions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import numth, polys
from .fields import Field, FieldElement, parse_field


class Matrix:
    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(int(c) for c in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.field = field
        self.n = n
        self.rows = rows

    # -- constructors --------------------------------------------------------

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        return Matrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def scalar(field: Field, n: int, code: int) -> "Matrix":
        return Matrix(field, [[code if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_ints(field: Field, grid) -> "Matrix":
        """Entries given as integers, mapped through GF(p) -> GF(q)."""
        return Matrix(field, [[v % field.p for v in row] for row in grid])

    # -- basics ----------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.rows))

    def __repr__(self):
        return f"Matrix({self.field}; {self.rows})"

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def __mul__(self, other: "Matrix") -> "Matrix":
        F = self.field
        n = self.n
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != n or other.field != F:
            raise ValueError("dimension/field mismatch")
        B = other.rows
        out = []
        add, mul = F.add, F.mul
        for i in range(n):
            Ai = self.rows[i]
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    a = Ai[k]
                    if a:
                        b = B[k][j]
                        if b:
                            acc = add(acc, mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(F, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        F = self.field
        return Matrix(
            F,
            [
                [F.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        F = self.field
        return Matrix(
            F,
            [
                [F.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self) -> "Matrix":
        F = self.field
        return Matrix(F, [[F.neg(a) for a in r] for r in self.rows])

    def scale(self, code: int) -> "Matrix":
        F = self.field
        return Matrix(F, [[F.mul(code, a) for a in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)))

    def frobenius_map(self, d: int) -> "Matrix":
        """Entrywise a -> a^(p^d)."""
        F = self.field
        return Matrix(F, [[F.frobenius(a, d) for a in r] for r in self.rows])

    def matvec(self, vec) -> tuple[int, ...]:
        F = self.field
        out = []
        for i in range(self.n):
            acc = 0
            for k in range(self.n):
                a = self.rows[i][k]
                if a and vec[k]:
                    acc = F.add(acc, F.mul(a, vec[k]))
            out.append(acc)
        return tuple(out)

    def trace(self) -> int:
        F = self.field
        acc = 0
        for i in range(self.n):
            acc = F.add(acc, self.rows[i][i])
        return acc

    def is_identity(self) -> bool:
        return all(
            c == (1 if i == j else 0)
            for i, r in enumerate(self.rows)
            for j, c in enumerate(r)
        )

    def is_scalar(self) -> bool:
        d = self.rows[0][0]
        return all(
            c == (d if i == j else 0)
            for i, r in enumerate(self.rows)
            for j, c in enumerate(r)
        )

    # -- Gaussian elimination ---------------------------------------------------

    def det(self) -> int:
        F = self.field
        n = self.n
        a = [list(r) for r in self.rows]
        det = 1
        for col in range(n):
            piv = None
            for i in range(col, n):
                if a[i][col]:
                    piv = i
                    break
            if piv is None:
                return 0
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = F.neg(det)
            det = F.mul(det, a[col][col])
            inv = F.inv(a[col][col])
            for i in range(col + 1, n):
                if a[i][col]:
                    fac = F.mul(a[i][col], inv)
                    for j in range(col, n):
                        a[i][j] = F.sub(a[i][j], F.mul(fac, a[col][j]))
        return det

    def inverse(self) -> "Matrix":
        F = self.field
        n = self.n
        a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = None
            for i in range(col, n):
                if a[i][col]:
                    piv = i
                    break
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv = F.inv(a[col][col])
            a[col] = [F.mul(inv, v) for v in a[col]]
            for i in range(n):
                if i != col and a[i][col]:
                    fac = a[i][col]
                    a[i] = [F.sub(v, F.mul(fac, w)) for v, w in zip(a[i], a[col])]
        return Matrix(F, [r[n:] for r in a])

    def __pow__(self, e: int) -> "Matrix":
        if e < 0:
            return self.inverse() ** (-e)
        r = Matrix.identity(self.field, self.n)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        F = self.field
        return {
            "n": self.n,
            "field": str(F),
            "rows": [
                [",".join(str(d) for d in F.decode(c)) for c in r] for r in self.rows
            ],
        }


def matrix_from_json(data: dict, field: Field | None = None) -> Matrix:
    F = field if field is not None else parse_field(data["field"])
    rows = [
        [F.encode([int(v) for v in cell.split(",")]) for cell in row]
        for row in data["rows"]
    ]
    return Matrix(F, rows)


# ---------------------------------------------------------------------------
# characteristic and minimal polynomials
# ---------------------------------------------------------------------------

def charpoly(M: Matrix) -> polys.FieldPoly:
    """Monic characteristic polynomial det(tI - M), by expansion over minors
    of the degree-<=1 polynomial matrix (n is small throughout)."""
    F = M.field
    n = M.n
    entries = [
        [
            polys.FieldPoly(F, (F.neg(M.rows[i][j]), 1) if i == j else (F.neg(M.rows[i][j]),))
            for j in range(n)
        ]
        for i in range(n)
    ]
    memo: dict[tuple[int, int], polys.FieldPoly] = {}

    def minor(row: int, colmask: int) -> polys.FieldPoly:
        if row == n:
            return polys.FieldPoly(F, (1,))
        key = (row, colmask)
        got = memo.get(key)
        if got is not None:
            return got
        acc = polys.FieldPoly(F, ())
        sign = 0
        for j in range(n):
            if colmask & (1 << j):
                term = entries[row][j] * minor(row + 1, colmask & ~(1 << j))
                if sign % 2:
                    term = -term
                acc = acc + term
                sign += 1
        memo[key] = acc
        return acc

    return minor(0, (1 << n) - 1).monic()


def min_poly(M: Matrix) -> polys.FieldPoly:
    """Minimal polynomial via Krylov annihilators of the basis vectors."""
    F = M.field
    n = M.n
    result = polys.FieldPoly(F, (1,))
    for start in range(n):
        v = tuple(1 if i == start else 0 for i in range(n))
        # grow the Krylov chain until linear dependence
        chain = [v]
        rowsp: list[list[int]] = []  # row-echelon copies
        piv: list[int] = []

        def reduce_vec(w):
            w = list(w)
            for r, pc in zip(rowsp, piv):
                if w[pc]:
                    fac = w[pc]
                    for j in range(n):
                        w[j] = F.sub(w[j], F.mul(fac, r[j]))
            return w

        deps = None
        while True:
            w = reduce_vec(chain[-1])
            nz = next((j for j in range(n) if w[j]), None)
            if nz is None:
                # chain[-1] depends on the previous ones: solve for coefficients
                break
            inv = F.inv(w[nz])
            rowsp.append([F.mul(inv, c) for c in w])
            piv.append(nz)
            chain.append(M.matvec(chain[-1]))
        k = len(chain) - 1  # M^k v depends on v..M^(k-1) v
        # solve sum_{i<k} c_i M^i v = M^k v by elimination on the chain matrix
        a = [[chain[i][j] for i in range(k)] + [chain[k][j]] for j in range(n)]
        coeffs = _solve_unique(F, a, k)
        local = polys.FieldPoly(F, [F.neg(c) for c in coeffs] + [1])
        g = result.gcd(local)
        result = (result * local).exact_div(g)
    return result.monic()


def _solve_unique(F: Field, aug: list[list[int]], ncols: int) -> list[int]:
    """Solve an overdetermined consistent system (unique solution)."""
    rows = [r[:] for r in aug]
    nrows = len(rows)
    sol = [0] * ncols
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, v) for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [F.sub(v, F.mul(fac, w)) for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i, c in enumerate(pivots):
        sol[c] = rows[i][ncols]
    return sol


# ---------------------------------------------------------------------------
# element and projective orders
# ---------------------------------------------------------------------------

class OrderCapExceeded(RuntimeError):
    pass


def element_order(M: Matrix, cap: int = 2**24) -> int:
    """Exact multiplicative order of an invertible matrix.

    The order is computed from the minimal polynomial, so it is exact even
    when far beyond any feasible iteration count; cap only limits the
    brute-force cross-check path used when requested explicitly.
    """
    F = M.field
    mp = min_poly(M)
    if mp.coefficient(0) == 0:
        raise ZeroDivisionError("singular matrix has no order")
    _, factors = polys.factorize_gf(mp)
    semisimple = 1
    max_mult = 0
    for g, e in factors:
        max_mult = max(max_mult, e)
        if g.degree == 1 and g.codes[0] == 0:
            raise ZeroDivisionError("singular matrix has no order")
        ro = polys.root_order(g)
        semisimple = semisimple * ro // math.gcd(semisimple, ro)
    unip = 1
    while unip < max_mult:
        unip *= F.p
    return semisimple * unip


def brute_order(M: Matrix, cap: int = 2**24) -> int:
    """Iterative order computation, for cross-validation."""
    A = M
    k = 1
    while not A.is_identity():
        A = A * M
        k += 1
        if k > cap:
            raise OrderCapExceeded(f"order exceeds cap {cap}")
    return k


def projective_order(M: Matrix) -> int:
    """Smallest k >= 1 with M^k scalar."""
    if M.is_scalar():
        if M.rows[0][0] == 0:
            raise ZeroDivisionError("singular matrix")
        return 1
    n = element_order(M)
    for d in numth.divisors(n):
        if (M**d).is_scalar():
            return d
    return n  # unreachable: d = n gives the identity


# ---------------------------------------------------------------------------
# invariant factors (Smith form of tI - M) and conjugacy
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantFactors:
    """Nonconstant similarity invariants d_1 | d_2 | ... with product equal to
    the characteristic polynomial."""

    factors: tuple[polys.FieldPoly, ...]

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def to_json(self):
        return [polys.poly_text(f) for f in self.factors]


def invariant_factors(M: Matrix) -> InvariantFactors:
    F = M.field
    n = M.n
    P = polys.FieldPoly
    a = [
        [
            P(F, (F.neg(M.rows[i][j]), 1) if i == j else (F.neg(M.rows[i][j]),))
            for j in range(n)
        ]
        for i in range(n)
    ]

    def deg(f):
        return f.degree

    diag: list[polys.FieldPoly] = []
    size = n
    pos = 0
    while pos < size:
        # pivot: nonzero entry of lowest degree in the remaining block,
        # ties broken by position
        best = None
        for i in range(pos, size):
            for j in range(pos, size):
                if not a[i][j].is_zero():
                    if best is None or deg(a[i][j]) < deg(a[best[0]][best[1]]):
                        best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[pos], a[bi] = a[bi], a[pos]
        for row in a:
            row[pos], row[bj] = row[bj], row[pos]
        while True:
            # clear the pivot column
            changed = False
            for i in range(pos + 1, size):
                if not a[i][pos].is_zero():
                    q, r = divmod(a[i][pos], a[pos][pos])
                    for j in range(pos, size):
                        a[i][j] = a[i][j] - q * a[pos][j]
                    if not r.is_zero():
                        a[pos], a[i] = a[i], a[pos]
                        changed = True
            for j in range(pos + 1, size):
                if not a[pos][j].is_zero():
                    q, r = divmod(a[pos][j], a[pos][pos])
                    for i in range(pos, size):
                        a[i][j] = a[i][j] - a[i][pos] * q
                    if not r.is_zero():
                        for row in a:
                            row[pos], row[j] = row[j], row[pos]
                        changed = True
            if changed:
                continue
            # pivot must divide the whole remaining block
            off = None
            for i in range(pos + 1, size):
                for j in range(pos + 1, size):
                    if not (a[i][j] % a[pos][pos]).is_zero():
                        off = i
                        break
                if off is not None:
                    break
            if off is None:
                break
            for j in range(pos, size):
                a[pos][j] = a[pos][j] + a[off][j]
        diag.append(a[pos][pos].monic())
        pos += 1
    out = tuple(f for f in diag if f.degree > 0)
    return InvariantFactors(out)


def is_conjugate(M: Matrix, N: Matrix) -> bool:
    """Conjugacy in GL_n(q): equality of the invariant-factor chains."""
    if M.field != N.field or M.n != N.n:
        raise ValueError("dimension/field mismatch")
    return invariant_factors(M).factors == invariant_factors(N).factors


def commutator(x: Matrix, y: Matrix) -> Matrix:
    return x.inverse() * y.inverse() * x * y
