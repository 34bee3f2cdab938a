"""Generation and non-generation certificates.

verify_generation certifies a pair against a classical target group either by
full closure (exact order count) or, when the target order is beyond the cap,
by a partial certificate: condition list, absolute irreducibility, invariant
form (non)existence, projective-order lower bounds, and a stated prime
divisor of the order of xy that the smaller candidate groups cannot contain.

Non-generation has two modes.  The all-pairs mode enumerates the target group
itself once, fixes one representative involution per projective conjugacy
class (generation is conjugation-equivariant), partitions the order-3
elements into orbits under the centralizer of that involution (conjugating y
by c in C(x) conjugates the whole subgroup <x,y>), and certifies that every
orbit representative generates a proper subgroup; it is unconditional for the
enumerated group.  The canonical-scan mode walks the unitary parameter line
b = a^q of the dimension-3 construction; it covers all irreducible projective
(2,3)-pairs up to conjugacy (reducible pairs cannot generate), which is the
reduction the case analysis itself uses.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import polys
from .constructions import (
    Dim3Params,
    GeneratorPair,
    build_dim3,
    dim3_irreducibility_conditions,
    dim3_monomial_basis,
    scalar_power_classify_dim3,
)
from .engine import DEFAULT_CAP, ClosureResult, TargetGroup, closure, target_order
from .fields import Field, make_field
from .matgroup import Matrix, commutator, element_order, projective_order
from .repcheck import invariant_forms, meataxe_irreducible
from .reports import ClaimReport


# ---------------------------------------------------------------------------
# group enumeration (desk-scale unitary and linear groups)
# ---------------------------------------------------------------------------

@dataclass
class GroupData:
    target: TargetGroup
    field: Field
    n: int
    elements: np.ndarray  # (N, n, n) uint8
    keys: np.ndarray  # (N,) uint64, aligned with elements
    index: dict  # key -> position
    scalar_codes: tuple[int, ...]  # lambda with lambda*I in the group

    @property
    def order(self) -> int:
        return len(self.keys)


def _pack_rows(rows, q: int) -> int:
    key = 0
    for row in reversed(rows):
        for c in reversed(row):
            key = key * q + int(c)
    return key


def _chain_closure_elements(field: Field, n: int, gens: list[Matrix]) -> list[tuple]:
    res = closure(gens, force_path="python")
    q = field.q
    from .engine import _unpack_key_py

    return [_unpack_key_py(k, q, n) for k in sorted(res.elements)]


def _hermitian_J(field: Field, n: int) -> Matrix:
    return Matrix(field, [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])


def is_unitary(M: Matrix, J: Matrix | None = None) -> bool:
    """Membership in SU_n wrt the antidiagonal hermitian form."""
    F = M.field
    if F.m % 2:
        raise ValueError("unitary groups need a square-extension field")
    if J is None:
        J = _hermitian_J(F, M.n)
    d = F.m // 2
    return M.det() == 1 and (M.transpose() * J * M.frobenius_map(d)) == J


def unitary_group_3(q: int, field: Field | None = None) -> GroupData:
    """Enumerate SU_3(q^2) for the antidiagonal form (desk scale: q <= 3)."""
    F = field if field is not None else make_field(*_square_field_args(q))
    tg = target_order("SU", 3, q)
    J = _hermitian_J(F, 3)
    seeds: list[Matrix] = []
    Q = F.q
    for alpha in range(Q):
        for beta in range(Q):
            for gamma in range(Q):
                up = Matrix(F, [[1, alpha, beta], [0, 1, gamma], [0, 0, 1]])
                if is_unitary(up, J):
                    seeds.append(up)
                lo = Matrix(F, [[1, 0, 0], [alpha, 1, 0], [beta, gamma, 1]])
                if is_unitary(lo, J):
                    seeds.append(lo)
    for lam in range(1, Q):
        for mu in range(1, Q):
            for nu in range(1, Q):
                dg = Matrix(F, [[lam, 0, 0], [0, mu, 0], [0, 0, nu]])
                if is_unitary(dg, J):
                    seeds.append(dg)
                anti = Matrix(F, [[0, 0, lam], [0, mu, 0], [nu, 0, 0]])
                if is_unitary(anti, J):
                    seeds.append(anti)
    elems = _chain_closure_elements(F, 3, seeds)
    if len(elems) != tg.order:
        raise ArithmeticError(
            f"SU3({q**2}) enumeration got {len(elems)}, expected {tg.order}"
        )
    return _group_data(tg, F, 3, elems)


def special_linear_group_3(q: int, field: Field | None = None) -> GroupData:
    """Enumerate SL_3(q) from elementary transvections (desk scale: q <= 4)."""
    F = field if field is not None else (make_field(2, 2) if q == 4 else make_field(q, 1))
    tg = target_order("SL", 3, q)
    seeds = []
    for lam in range(1, F.q):
        for (i, j) in ((0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)):
            rows = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
            rows[i][j] = lam
            seeds.append(Matrix(F, rows))
    elems = _chain_closure_elements(F, 3, seeds)
    if len(elems) != tg.order:
        raise ArithmeticError(f"SL3({q}) enumeration got {len(elems)}, expected {tg.order}")
    return _group_data(tg, F, 3, elems)


def _square_field_args(q: int):
    from . import numth

    fac = numth.factorize(q)
    (p, e), = fac.items()
    return p, 2 * e


def _group_data(tg: TargetGroup, F: Field, n: int, elems: list[tuple]) -> GroupData:
    arr = np.array(elems, dtype=np.uint8)
    keys = np.array([_pack_rows(rows, F.q) for rows in elems], dtype=np.uint64)
    index = {int(k): i for i, k in enumerate(keys)}
    scal = tuple(
        lam
        for lam in range(1, F.q)
        if _pack_rows([[lam if i == j else 0 for j in range(n)] for i in range(n)], F.q)
        in index
    )
    return GroupData(tg, F, n, arr, keys, index, scal)


# ---------------------------------------------------------------------------
# batched helpers on enumerated groups
# ---------------------------------------------------------------------------

def _tables(F: Field):
    add_t, mul_t = F.numpy_tables()
    return add_t.astype(np.int32), mul_t.astype(np.int32)


def _batch_mul(A: np.ndarray, B: np.ndarray, F: Field) -> np.ndarray:
    """C[t] = A[t] @ B[t] (or broadcast when one operand is a single matrix)."""
    add_t, mul_t = _tables(F)
    if A.ndim == 2:
        A = A[None, :, :]
    if B.ndim == 2:
        B = B[None, :, :]
    n = A.shape[-1]
    N = max(A.shape[0], B.shape[0])
    out = np.zeros((N, n, n), dtype=np.int32)
    for i in range(n):
        for j in range(n):
            acc = None
            for k in range(n):
                term = mul_t[A[:, i, k].astype(np.int32), B[:, k, j].astype(np.int32)]
                acc = term if acc is None else add_t[acc, term]
            out[:, i, j] = acc
    return out.astype(np.uint8)


def _batch_keys(A: np.ndarray, q: int) -> np.ndarray:
    N, n, _ = A.shape
    powers = (np.uint64(q) ** np.arange(n * n, dtype=np.uint64)).astype(np.uint64)
    return (A.reshape(N, -1).astype(np.uint64) * powers).sum(axis=1)


def _coset_keys(G: GroupData) -> np.ndarray:
    """Canonical key of the scalar coset of every element: the minimum packed
    key over all scalar multiples inside the group."""
    best = _batch_keys(G.elements, G.field.q)
    for lam in G.scalar_codes:
        if lam == 1:
            continue
        _, mul_t = _tables(G.field)
        scaled = mul_t[lam, G.elements.astype(np.int32)].astype(np.uint8)
        best = np.minimum(best, _batch_keys(scaled, G.field.q))
    return best


# ---------------------------------------------------------------------------
# non-generation certificates
# ---------------------------------------------------------------------------

@dataclass
class NonGenerationCase:
    case_id: str
    label: str
    closure_order: int
    projective_closure_order: int
    orbit_size: int = 1
    detail: dict = dc_field(default_factory=dict)

    def to_json(self):
        return {
            "case": self.case_id,
            "label": self.label,
            "closure_order": self.closure_order,
            "projective_closure_order": self.projective_closure_order,
            "orbit_size": self.orbit_size,
            "detail": {k: str(v) for k, v in self.detail.items()},
        }


@dataclass
class NonGenerationCertificate:
    group: TargetGroup
    mode: str  # "all-pairs" or "canonical-scan"
    cases: list[NonGenerationCase]
    verdict: bool  # True: no pair generates
    pairs_covered: int
    detail: dict = dc_field(default_factory=dict)

    def to_json(self):
        return {
            "group": self.group.projective_name(),
            "mode": self.mode,
            "verdict": "not (2,3)-generated" if self.verdict else "GENERATING PAIR FOUND",
            "pairs_covered": self.pairs_covered,
            "cases": [c.to_json() for c in self.cases],
            "detail": {k: str(v) for k, v in self.detail.items()},
        }


class GenerationFound(RuntimeError):
    """A scan found a generating pair: the non-generation claim is falsified."""


def _raw_pair_label(x: Matrix, y: Matrix) -> tuple[str, dict]:
    verdict = meataxe_irreducible([x, y])
    if not verdict.irreducible:
        return "reducible", {}
    z = x * y
    if (z**5).is_scalar():
        return "Alt(5)-factor", {"z5": "scalar"}
    if (z**7).is_scalar():
        c4 = (commutator(x, y) ** 4).is_identity()
        return "PSL2(7)", {"z7": "scalar", "comm_order_4": c4}
    return "other-proper", {}


def nongeneration_allpairs(name: str, progress=None) -> NonGenerationCertificate:
    """Exhaustive certificate for PSU3(4), PSU3(9) or PSL3(4): no projective
    (involution, order-3) pair generates the projective group."""
    name = name.lower()
    if name == "psu3_4":
        G = unitary_group_3(2)
    elif name == "psu3_9":
        G = unitary_group_3(3)
    elif name == "psl3_4":
        G = special_linear_group_3(4)
    else:
        raise ValueError(f"unknown all-pairs target {name!r}")
    F = G.field
    q = F.q
    tg = G.target
    proj_target = tg.projective_order

    ident = np.array(
        [[1 if i == j else 0 for j in range(3)] for i in range(3)], dtype=np.uint8
    )
    sq = _batch_mul(G.elements, G.elements, F)
    cb = _batch_mul(sq, G.elements, F)
    scal_keys = {
        _pack_rows([[lam if i == j else 0 for j in range(3)] for i in range(3)], q)
        for lam in G.scalar_codes
    }
    keys = G.keys
    sq_keys = _batch_keys(sq, q)
    cb_keys = _batch_keys(cb, q)
    is_central = np.array([int(k) in scal_keys for k in keys])
    ident_key = _pack_rows(ident.tolist(), q)

    invol = (sq_keys == ident_key) & ~is_central
    proj_invol = np.array([int(k) in scal_keys for k in sq_keys]) & ~is_central
    ord3 = (cb_keys == ident_key) & ~is_central
    proj_ord3 = np.array([int(k) in scal_keys for k in cb_keys]) & ~is_central

    coset = _coset_keys(G)
    # every projective involution (resp. order-3) coset must contain an honest
    # involution (resp. order-3 element); this keeps the honest scan exhaustive
    if set(coset[proj_invol].tolist()) != set(coset[invol].tolist()):
        raise AssertionError("a projective involution coset lacks an involution")
    if set(coset[proj_ord3].tolist()) != set(coset[ord3].tolist()):
        raise AssertionError("a projective order-3 coset lacks an order-3 element")

    # projective conjugacy classes of involutions via conjugation orbits
    gens_idx = _small_generating_set(G)
    inv_positions = np.flatnonzero(invol)
    class_reps = _conjugacy_orbit_reps(G, inv_positions, gens_idx, coset)

    ord3_positions = np.flatnonzero(ord3)
    # one honest representative element per order-3 coset
    seen_cosets = {}
    for pos in ord3_positions:
        ck = int(coset[pos])
        if ck not in seen_cosets:
            seen_cosets[ck] = pos
    y_positions = sorted(seen_cosets.values())
    total_pairs = len(class_reps) and len(y_positions)

    cases: list[NonGenerationCase] = []
    covered = 0
    for xi, xpos in enumerate(class_reps):
        x = Matrix(F, G.elements[xpos].tolist())
        cx = _centralizer_positions(G, xpos)
        orbits = _orbits_under(G, cx, y_positions, coset)
        for rep_pos, orbit_size in orbits:
            y = Matrix(F, G.elements[rep_pos].tolist())
            res = closure([x, y], force_path="python")
            proj = res.order // res.scalar_subgroup_order
            if proj == proj_target:
                raise GenerationFound(
                    f"{tg.projective_name()}: pair at positions ({xpos},{rep_pos}) generates"
                )
            if proj_target % proj:
                raise AssertionError("projective closure order does not divide target")
            label, det = _raw_pair_label(x, y)
            covered += orbit_size
            cases.append(
                NonGenerationCase(
                    case_id=f"x{xi}/y@{rep_pos}",
                    label=label,
                    closure_order=res.order,
                    projective_closure_order=proj,
                    orbit_size=orbit_size,
                    detail=det,
                )
            )
        if progress:
            progress(f"{tg.projective_name()}: class {xi + 1}/{len(class_reps)} done")
    expected_cover = len(class_reps) * len(y_positions)
    if covered != expected_cover:
        raise AssertionError("orbit sizes do not cover all order-3 cosets")
    return NonGenerationCertificate(
        group=tg,
        mode="all-pairs",
        cases=cases,
        verdict=True,
        pairs_covered=covered,
        detail={
            "involution_classes": len(class_reps),
            "order3_cosets": len(y_positions),
            "group_order": G.order,
        },
    )


def _small_generating_set(G: GroupData) -> list[int]:
    """Positions of a generating subset: grow until the closure is the group."""
    import random as _random

    rng = _random.Random(0xC0DE)
    picks: list[int] = []
    mats: list[Matrix] = []
    order = 1
    n = G.order
    tries = 0
    while order < n and tries < 64:
        pos = rng.randrange(n)
        tries += 1
        if pos in picks:
            continue
        picks.append(pos)
        mats.append(Matrix(G.field, G.elements[pos].tolist()))
        order = closure(mats, force_path="python").order
    if order != n:
        raise ArithmeticError("failed to find a small generating set")
    return picks


def _conjugacy_orbit_reps(G, positions, gens_idx, coset) -> list[int]:
    """One position per conjugation orbit (projective classes via coset keys)."""
    F = G.field
    perms = []
    for gpos in gens_idx:
        g = Matrix(F, G.elements[gpos].tolist())
        ginv_arr = np.array(g.inverse().rows, dtype=np.uint8)
        g_arr = np.array(g.rows, dtype=np.uint8)
        conj = _batch_mul(_batch_mul(ginv_arr, G.elements, F), g_arr, F)
        keys = _batch_keys(conj, F.q)
        perms.append(np.array([G.index[int(k)] for k in keys]))
    reps = []
    seen = set()
    pos_set = set(int(p) for p in positions)
    for p in positions:
        ck = int(coset[p])
        if ck in seen:
            continue
        stack = [int(p)]
        orbit_cosets = {ck}
        while stack:
            cur = stack.pop()
            for perm in perms:
                nxt = int(perm[cur])
                nk = int(coset[nxt])
                if nk not in orbit_cosets:
                    orbit_cosets.add(nk)
                    stack.append(nxt)
        seen |= orbit_cosets
        reps.append(int(p))
    return reps


def _centralizer_positions(G: GroupData, xpos: int) -> list[int]:
    F = G.field
    x = np.array(G.elements[xpos], dtype=np.uint8)
    gx = _batch_mul(G.elements, x, F)
    xg = _batch_mul(x, G.elements, F)
    eq = np.all(gx == xg, axis=(1, 2))
    return np.flatnonzero(eq).tolist()


def _orbits_under(G: GroupData, cx_positions, y_positions, coset):
    """Orbits of the order-3 cosets under conjugation by the centralizer."""
    F = G.field
    cmats = []
    for pos in cx_positions:
        c = Matrix(F, G.elements[pos].tolist())
        cmats.append((np.array(c.inverse().rows, dtype=np.uint8), np.array(c.rows, dtype=np.uint8)))
    coset_to_rep = {}
    for pos in y_positions:
        coset_to_rep[int(coset[pos])] = pos
    unassigned = dict(coset_to_rep)
    out = []
    while unassigned:
        ck, rep = next(iter(unassigned.items()))
        orbit = set()
        y = G.elements[rep][None, :, :]
        for cinv, c in cmats:
            z = _batch_mul(_batch_mul(cinv, y, F), c, F)
            zk = _batch_keys(z, F.q)[0]
            orbit.add(int(coset[G.index[int(zk)]]))
        for k in orbit:
            unassigned.pop(k, None)
        out.append((rep, len(orbit)))
    return out


# ---------------------------------------------------------------------------
# canonical scan (dimension 3, unitary line b = a^q)
# ---------------------------------------------------------------------------

def dim3_case_label(params: Dim3Params) -> tuple[str, dict]:
    """Outcome label of one canonical-scan case, matching the case-analysis
    vocabulary: reducible / monomial / Alt(5)-factor / PSL2(7) / other-proper."""
    F = params.field
    if not dim3_irreducibility_conditions(params).overall:
        return "reducible", {}
    ab = F.mul(params.a, params.b)
    if ab == 1:
        mono = dim3_monomial_basis(params)
        if mono.ok:
            return "monomial", {}
    cl = scalar_power_classify_dim3(params, require_hypotheses=False)
    if ab != 1 and cl.z5_scalar:
        return "Alt(5)-factor", {"z5": "scalar"}
    if ab != 1 and cl.z7_scalar:
        pair = build_dim3(params, allow_excluded=True)
        c4 = (pair.comm**4).is_identity()
        return "PSL2(7)", {"z7": "scalar", "comm_order_4": c4}
    return "other-proper", {}


def minimal_polynomial_over_prime(F: Field, code: int) -> tuple[int, ...]:
    """Coefficients (codes < p) of the minimal polynomial of the element over
    the prime field, low degree first."""
    orbit = {code}
    c = code
    while True:
        c = F.frobenius(c, 1)
        if c in orbit:
            break
        orbit.add(c)
    f = polys.FieldPoly(F, (1,))
    for r in sorted(orbit):
        f = f * polys.FieldPoly(F, (F.neg(r), 1))
    assert all(c < F.p for c in f.codes), "minimal polynomial not over GF(p)"
    return f.codes


# expected canonical-scan outcomes for the three small unitary groups, keyed
# by the minimal polynomial of the parameter over the prime field
THM36_CASE_TABLES = {
    4: {
        (1, 1, 1): "reducible",  # omega, omega^2
        (1, 1): "reducible",  # a = 1
    },
    9: {
        (2, 2, 1): "reducible",  # alpha, alpha^3
        (1, 0, 1): "monomial",  # alpha+1, alpha^3+1  (a^4 = 1)
        (2, 1, 1): "PSL2(7)",  # -alpha, -alpha^3 (order of xy is 7)
        (2, 1): "monomial",  # a = 1
        (1, 1): "reducible",  # a = 2: b = -a-2 as well as ab = 1
    },
    25: {
        (1, 1, 1): "monomial",  # omega, -1-omega  (ab = 1)
        (4, 2, 1): "reducible",  # 2*omega, -2-2*omega
        (4, 3, 1): "Alt(5)-factor",  # 3*omega, -3-3*omega (z^5 scalar)
        (2, 0, 1): "PSL2(7)",  # +-(3+omega)
        (2, 1, 1): "PSL2(7)",  # 3+2w, 1+3w
        (2, 4, 1): "PSL2(7)",  # their negatives
        (1, 4, 1): "reducible",
        (3, 0, 1): "reducible",
        (3, 2, 1): "reducible",
        (3, 3, 1): "reducible",
        (4, 1): "monomial",  # a = 1
        (1, 1): "reducible",  # a = 4: b = -a-2 as well as ab = 1
        (3, 1): "reducible",  # a = 2
        (2, 1): "Alt(5)-factor",  # a = 3
    },
}


def nongeneration_canonical(q: int, field: Field | None = None, progress=None) -> NonGenerationCertificate:
    """Canonical-scan certificate for PSU3(q^2): every a in F_{q^2} with
    b = a^q yields a proper closure, with the outcome label of each case.

    Coverage: every irreducible projective (2,3)-pair of SU3(q^2) is
    conjugate to a canonical pair whose parameters satisfy b = tr(xy) = a^q,
    and reducible pairs never generate; the all-pairs mode (where feasible)
    is the scan's unconditional counterpart.
    """
    if field is None:
        field = make_field(*_square_field_args(q))
    F = field
    if F.q != q * q:
        raise ValueError("field must be the square extension F_{q^2}")
    tg = target_order("SU", 3, q)
    table = THM36_CASE_TABLES.get(q * q)
    cases = []
    mismatches = []
    for a in F.codes_lex_ordered():
        b = F.pow(a, q) if a else 0
        params = Dim3Params(F, a, b)
        if (a, b) == (0, 0):
            if F.p == 2:
                label, det = "other-proper", {"note": "degenerate: x is the identity"}
            else:
                label, det = "other-proper", {"note": "excluded pair: Alt(4)"}
            pair = build_dim3(params, allow_excluded=True)
        else:
            pair = build_dim3(params)
            label, det = dim3_case_label(params)
        res = closure([pair.x, pair.y], force_path="python")
        proj = res.order // res.scalar_subgroup_order
        if proj == tg.projective_order:
            raise GenerationFound(f"PSU3({q*q}): canonical a={a} generates")
        if label != "reducible" and (a, b) != (0, 0):
            # irreducible unitary-line pairs preserve a nondegenerate
            # hermitian form, so Lagrange applies
            if tg.order % res.order:
                raise AssertionError(f"closure order {res.order} does not divide {tg.order}")
        expected = None
        if table is not None and a != 0:
            mp = minimal_polynomial_over_prime(F, a)
            expected = table.get(tuple(int(v) for v in mp))
            if expected is not None and expected != label:
                mismatches.append((a, label, expected))
        cases.append(
            NonGenerationCase(
                case_id=f"a={','.join(str(d) for d in F.decode(a))}",
                label=label,
                closure_order=res.order,
                projective_closure_order=proj,
                detail={**det, **({"expected": expected} if expected else {})},
            )
        )
        if progress:
            progress(f"PSU3({q*q}) canonical a={a}: {label}, closure {res.order}")
    if mismatches:
        raise AssertionError(f"case-table mismatches: {mismatches}")
    return NonGenerationCertificate(
        group=tg,
        mode="canonical-scan",
        cases=cases,
        verdict=True,
        pairs_covered=len(cases),
        detail={"parameter_count": len(cases)},
    )


# ---------------------------------------------------------------------------
# generation certificates
# ---------------------------------------------------------------------------

# stated prime divisors of ord(xy) certifying the two subfield-exception
# witnesses: no proper candidate overgroup order is divisible by them
WITNESS_DIVISORS = {("SL", 5, 16): 41, ("SU", 5, 4): 17}


def verify_generation(
    pair: GeneratorPair,
    target: TargetGroup,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    conditions=None,
    exempt_conditions: tuple[str, ...] = (),
    progress=None,
) -> ClaimReport:
    """Certify that the pair generates the target.

    Full mode (target order within cap): the closure order equals the target
    order exactly.  Partial mode: absolute irreducibility, form membership or
    exclusion, projective-order lower bounds, the theorem's condition list if
    provided, and the stated witness divisor of ord(xy) where applicable.
    The report names the mode that ran.
    """
    details: dict = {"target": target.name(), "mode": None}
    x, y = pair.x, pair.y
    z = pair.z
    z6_nonscalar = not (z**6).is_scalar()
    details["xy^6_nonscalar"] = z6_nonscalar

    if target.order <= cap:
        res = closure([x, y], cap=cap, threads=threads, progress=progress)
        details["mode"] = "full"
        details["closure_order"] = res.order
        details["scalar_subgroup_order"] = res.scalar_subgroup_order
        details["truncated"] = res.truncated
        ok = (not res.truncated) and res.order == target.order
        return ClaimReport(claim=f"generation {target.name()}", ok=ok, details=details)

    details["mode"] = "partial"
    checks: dict[str, bool] = {}
    verdict = meataxe_irreducible([x, y])
    checks["absolutely_irreducible"] = verdict.absolutely_irreducible
    if conditions is not None:
        unmet = [i.label for i in conditions.items
                 if not i.ok and i.label not in exempt_conditions]
        checks["conditions"] = not unmet
        details["condition_report"] = conditions.to_json()
        if exempt_conditions:
            details["exempt_conditions"] = list(exempt_conditions)
    if target.family == "SU":
        sol = invariant_forms([x, y], twist="sigma")
        checks["hermitian_form"] = sol.exists_nondegenerate()
    else:
        twists = ["id"] + (["sigma"] if pair.field.m % 2 == 0 else [])
        none_found = True
        for tw in twists:
            sol = invariant_forms([x, y], twist=tw, up_to_scalars=True)
            if sol.exists_nondegenerate():
                none_found = False
        checks["no_invariant_form"] = none_found
    if pair.dimension == 3:
        checks["projective_order_xy_ge_8"] = projective_order(z) >= 8
    else:
        checks["projective_order_xy_ge_10"] = projective_order(z) >= 10
        checks["projective_order_comm_ge_5"] = projective_order(pair.comm) >= 5
    key = (target.family, target.n, target.q)
    if key in WITNESS_DIVISORS:
        d = WITNESS_DIVISORS[key]
        zo = element_order(z)
        checks[f"order_xy_divisible_by_{d}"] = zo % d == 0
        details["order_xy"] = zo
    details["checks"] = checks
    details["xy^6_nonscalar"] = z6_nonscalar
    ok = all(checks.values())
    return ClaimReport(claim=f"generation {target.name()} (partial)", ok=ok, details=details)
