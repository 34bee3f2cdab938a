"""Exact group order by closure enumeration, and classical target orders.

The closure of a generator list is computed by breadth-first multiplication
from the identity, with every element packed into an integer key (entries in
base q, row-major).  Three interchangeable membership structures cover the
scales that occur here:

* a Python set of integer keys (any field, smallest groups);
* a numpy bitset over the full key space q^(n^2) when that space is at most
  2^29 (e.g. 3x3 over q <= 9, 5x5 over q = 2), giving O(1) membership for
  multi-million-element groups in tens of megabytes;
* a sorted uint64 array with binary-search membership when keys fit 64 bits.

The result is independent of traversal order, chunking and thread count: a
closure is a set.  Cap overruns are reported by flag, never silently wrong.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .fields import Field
from .matgroup import Matrix

DEFAULT_CAP = 1 << 26
_BITSET_MAX_SPACE = 1 << 29
_PYTHON_PROMOTE = 150_000
_CHUNK = 1 << 20


# ---------------------------------------------------------------------------
# target groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TargetGroup:
    family: str  # "SL" or "SU"
    n: int
    q: int  # defining prime power: SL_n(q), SU_n(q^2)
    order: int
    center_order: int

    @property
    def projective_order(self) -> int:
        return self.order // self.center_order

    def matrix_field_size(self) -> int:
        return self.q * self.q if self.family == "SU" else self.q

    def name(self) -> str:
        if self.family == "SU":
            return f"SU{self.n}({self.q**2})"
        return f"SL{self.n}({self.q})"

    def projective_name(self) -> str:
        return "P" + self.name()


def target_order(family: str, n: int, q: int) -> TargetGroup:
    """Order and center of SL_n(q) or SU_n(q^2) by the classical formulas."""
    family = family.upper()
    if family not in ("SL", "SU") or n < 2 or q < 2:
        raise ValueError("family must be SL or SU with n >= 2, q >= 2")
    order = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        if family == "SL":
            order *= q**i - 1
        else:
            order *= q**i - (-1) ** i
    center = math.gcd(n, q - 1) if family == "SL" else math.gcd(n, q + 1)
    return TargetGroup(family, n, q, order, center)


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

@dataclass
class ClosureResult:
    order: int
    scalar_subgroup_order: int
    truncated: bool
    path: str
    levels: int
    field: Field
    n: int
    elements: object | None = None  # python set of keys, or None

    @property
    def projective_order(self) -> int:
        return self.order // self.scalar_subgroup_order

    def to_json(self):
        return {
            "order": self.order,
            "scalar_subgroup_order": self.scalar_subgroup_order,
            "projective_order": self.projective_order,
            "truncated": self.truncated,
            "path": self.path,
            "levels": self.levels,
        }


def _pack_key_py(rows, q: int) -> int:
    key = 0
    for row in reversed(rows):
        for c in reversed(row):
            key = key * q + c
    return key


def _unpack_key_py(key: int, q: int, n: int):
    out = []
    for _ in range(n):
        row = []
        for _ in range(n):
            row.append(key % q)
            key //= q
        out.append(tuple(row))
    return tuple(out)


def _gen_list(gens: list[Matrix]) -> list[Matrix]:
    out = []
    seen = set()
    for g in gens:
        for h in (g, g.inverse()):
            if h.rows not in seen:
                seen.add(h.rows)
                out.append(h)
    return out


def closure(
    gens: list[Matrix],
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    force_path: str | None = None,
    progress=None,
) -> ClosureResult:
    """Exact order of <gens> with the scalar subgroup it contains.

    force_path in {"python", "bitset", "sorted"} pins the membership
    structure; by default enumeration starts on the Python path and promotes
    itself to a numpy path when the group turns out to be large.
    """
    if not gens:
        raise ValueError("need at least one generator")
    F = gens[0].field
    n = gens[0].n
    if any(g.field != F or g.n != n for g in gens):
        raise ValueError("generators over mismatched fields/dimensions")
    gl = _gen_list(gens)

    space = F.q ** (n * n)
    can_bitset = space <= _BITSET_MAX_SPACE and F.q <= 256
    can_sorted = F.q <= 256 and space <= (1 << 64)
    path = force_path
    if path is None:
        path = "python"

    if path == "python":
        res = _closure_python(
            F, n, gl, cap,
            promote=None if force_path == "python" else ("bitset" if can_bitset else "sorted" if can_sorted else None),
            progress=progress,
        )
        if res is not None:
            return res
        path = "bitset" if can_bitset else "sorted"
    if path == "bitset":
        if not can_bitset:
            raise ValueError("key space too large for the bitset path")
        return _closure_numpy(F, n, gl, cap, threads, bitset=True, progress=progress)
    if path == "sorted":
        if not can_sorted:
            raise ValueError("keys do not fit 64 bits")
        return _closure_numpy(F, n, gl, cap, threads, bitset=False, progress=progress)
    raise ValueError(f"unknown path {path!r}")


def _closure_python(F: Field, n: int, gl: list[Matrix], cap: int, promote, progress):
    q = F.q
    if q <= 256:
        add_t, mul_t = F.numpy_tables()
        add = [[int(v) for v in r] for r in add_t]
        mul = [[int(v) for v in r] for r in mul_t]

        def matmul(A, B):
            return tuple(
                tuple(
                    _dot_tbl(A[i], B, j, n, add, mul) for j in range(n)
                )
                for i in range(n)
            )
    else:
        fadd, fmul = F.add, F.mul

        def matmul(A, B):
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = 0
                    for k in range(n):
                        if A[i][k] and B[k][j]:
                            acc = fadd(acc, fmul(A[i][k], B[k][j]))
                    row.append(acc)
                out.append(tuple(row))
            return tuple(out)

    gen_rows = [g.rows for g in gl]
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    visited = {_pack_key_py(ident, q)}
    frontier = [ident]
    levels = 0
    truncated = False
    while frontier:
        levels += 1
        nxt = []
        for A in frontier:
            for B in gen_rows:
                C = matmul(A, B)
                k = _pack_key_py(C, q)
                if k not in visited:
                    visited.add(k)
                    nxt.append(C)
        frontier = nxt
        if progress:
            progress(f"python closure: level {levels}, order so far {len(visited)}")
        if promote and len(visited) > _PYTHON_PROMOTE:
            return None  # caller restarts on a numpy path
        if len(visited) > cap:
            truncated = True
            break
    scal = sum(
        1
        for lam in range(1, q)
        if _pack_key_py(tuple(tuple(lam if i == j else 0 for j in range(n)) for i in range(n)), q)
        in visited
    )
    return ClosureResult(len(visited), scal, truncated, "python", levels, F, n, visited)


def _dot_tbl(Arow, B, j, n, add, mul):
    acc = 0
    for k in range(n):
        a = Arow[k]
        if a:
            b = B[k][j]
            if b:
                acc = add[acc][mul[a][b]]
    return acc


# ---------------------------------------------------------------------------
# numpy paths
# ---------------------------------------------------------------------------

def _kernel_for(F: Field, n: int, gl: list[Matrix]):
    """Batched right-multiplication kernels, one per generator."""
    q = F.q
    if F.m == 1:
        p = F.p
        mats = [np.array(g.rows, dtype=np.int32) for g in gl]

        def make(gm):
            def k(A):
                return ((A.astype(np.int32).reshape(-1, n, n) @ gm) % p).astype(np.uint8)

            return k

        return [make(gm) for gm in mats]

    add_t, mul_t = F.numpy_tables()
    mul_cols = [np.ascontiguousarray(mul_t[:, c]) for c in range(q)]
    if F.p == 2:

        def make(g):
            luts = [[mul_cols[g.rows[k][j]] for j in range(n)] for k in range(n)]

            def kern(A):
                A = A.reshape(-1, n, n)
                out = np.empty_like(A)
                for i in range(n):
                    cols = [A[:, i, k] for k in range(n)]
                    for j in range(n):
                        acc = luts[0][j][cols[0]]
                        for k in range(1, n):
                            gkj = luts[k][j]
                            if gkj is not None:
                                acc = acc ^ gkj[cols[k]]
                        out[:, i, j] = acc
                return out

            return kern

        return [make(g) for g in gl]

    add_flat = np.ascontiguousarray(add_t.reshape(-1))

    def make(g):
        luts = [[mul_cols[g.rows[k][j]] for j in range(n)] for k in range(n)]

        def kern(A):
            A = A.reshape(-1, n, n)
            out = np.empty_like(A)
            for i in range(n):
                cols = [A[:, i, k] for k in range(n)]
                for j in range(n):
                    acc = luts[0][j][cols[0]]
                    for k in range(1, n):
                        term = luts[k][j][cols[k]]
                        acc = add_flat[acc.astype(np.int32) * q + term]
                    out[:, i, j] = acc
            return out

        return kern

    return [make(g) for g in gl]


def _pack_np(A: np.ndarray, powers: np.ndarray) -> np.ndarray:
    return (A.reshape(A.shape[0], -1).astype(np.uint64) * powers).sum(axis=1)


def _closure_numpy(F: Field, n: int, gl, cap, threads, bitset, progress):
    q = F.q
    nn = n * n
    powers = (np.uint64(q) ** np.arange(nn, dtype=np.uint64)).astype(np.uint64)
    kernels = _kernel_for(F, n, gl)
    ident = np.array(
        [[1 if i == j else 0 for j in range(n)] for i in range(n)], dtype=np.uint8
    )
    ident = ident[None, :, :]
    ikey = _pack_np(ident, powers)

    if bitset:
        space = q**nn
        bits = np.zeros((space + 7) // 8, dtype=np.uint8)

        def member_new(keys):
            byte = (keys >> np.uint64(3)).astype(np.int64)
            bit = (keys & np.uint64(7)).astype(np.uint8)
            fresh = ((bits[byte] >> bit) & 1) == 0
            return fresh

        def insert(keys):
            byte = (keys >> np.uint64(3)).astype(np.int64)
            bit = (keys & np.uint64(7)).astype(np.uint8)
            np.bitwise_or.at(bits, byte, (np.uint8(1) << bit))

        insert(ikey)
        visited_sorted = None
    else:
        visited_sorted = ikey.copy()

    order = 1
    frontier = ident
    levels = 0
    truncated = False
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier.shape[0]:
            levels += 1
            new_keys_parts = []
            new_mats_parts = []

            def process(chunk):
                outs = []
                for kern in kernels:
                    prod = kern(chunk)
                    outs.append((prod, _pack_np(prod, powers)))
                return outs

            chunks = [frontier[i : i + _CHUNK] for i in range(0, frontier.shape[0], _CHUNK)]
            produced = pool.map(process, chunks) if pool else map(process, chunks)
            for outs in produced:
                for prod, keys in outs:
                    ku, idx = np.unique(keys, return_index=True)
                    if bitset:
                        fresh = member_new(ku)
                        fresh_keys = ku[fresh]
                        if fresh_keys.size:
                            insert(fresh_keys)
                            new_keys_parts.append(fresh_keys)
                            new_mats_parts.append(prod[idx[fresh]])
                    else:
                        pos = np.searchsorted(visited_sorted, ku)
                        pos_c = np.minimum(pos, visited_sorted.size - 1)
                        fresh = visited_sorted[pos_c] != ku
                        if fresh.any():
                            new_keys_parts.append(ku[fresh])
                            new_mats_parts.append(prod[idx[fresh]])
            if not new_keys_parts:
                break
            cat = np.concatenate(new_keys_parts)
            mats = np.concatenate(new_mats_parts)
            if bitset:
                # bitset inserts already de-duplicated across chunks
                frontier = mats
                order += cat.size
            else:
                ku, idx = np.unique(cat, return_index=True)
                frontier = mats[idx]
                order += ku.size
                visited_sorted = np.sort(np.concatenate([visited_sorted, ku]))
            if progress:
                progress(f"closure level {levels}: +{frontier.shape[0]}, order {order}")
            if order > cap:
                truncated = True
                break
    finally:
        if pool:
            pool.shutdown()

    scal = 0
    lam_keys = []
    for lam in range(1, q):
        m = np.array(
            [[lam if i == j else 0 for j in range(n)] for i in range(n)], dtype=np.uint8
        )[None, :, :]
        lam_keys.append(_pack_np(m, powers)[0])
    lam_keys = np.array(lam_keys, dtype=np.uint64)
    if bitset:
        scal = int((~member_new(lam_keys)).sum())
    else:
        pos = np.searchsorted(visited_sorted, lam_keys)
        pos_c = np.minimum(pos, visited_sorted.size - 1)
        scal = int((visited_sorted[pos_c] == lam_keys).sum())
    return ClosureResult(
        order, scal, truncated, "bitset" if bitset else "sorted", levels, F, n, None
    )


def closure_order(gens: list[Matrix], cap: int = DEFAULT_CAP, threads: int = 1) -> int:
    res = closure(gens, cap=cap, threads=threads)
    if res.truncated:
        raise RuntimeError(f"closure truncated at cap {cap}")
    return res.order
