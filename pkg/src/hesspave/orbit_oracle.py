"""Matrix realizations of the classical Lie algebras plus two engines:

* exact symbolic conjugation u^{-1}.M for a generic unipotent u in U_pi,
  which yields the orbit root set Phi_{U_pi . M} by zero-testing polynomial
  coefficients, and
* a probabilistic row-by-row affine solver over a large prime field that
  certifies cell dimensions independently of any closed formula.

Realizations use the antidiagonal bilinear forms (symmetric for B/D, skew
for C) so that the Borel is upper triangular.  Each root vector has a pivot
entry in rows 1..n (or the middle row for short B roots) that no other root
vector or diagonal element touches, so coefficient extraction is a single
dictionary lookup.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hessenberg import HessenbergSpace, complement_roots
from .operators import (
    RegularNilpotent,
    SemisimpleClassical,
    TypeAGeneral,
    TypeANilpotent,
    canonical_form,
    semisimple_functional,
)
from .polynomial import Poly
from .rootsys import (
    Root,
    RootSystemId,
    euclidean,
    positive_roots,
    row_partition,
    simple_roots,
)
from .weyl import WeylElement, inversion_set

__all__ = [
    "PRIME",
    "matrix_dim",
    "root_entries",
    "operator_matrix",
    "generic_conjugate",
    "orbit_roots",
    "cell_dim_oracle",
    "OracleVerdict",
    "verify_adform",
    "nonoverlap_check",
    "unitriangular_conjugate",
]

# Largest prime below 2^63; comfortably above the 2^61 sampling floor.
PRIME = 9223372036854775783
SYMBOLIC_RANK_CAP = 5
AUTO_SYMBOLIC_RANK = 3


def matrix_dim(system: RootSystemId) -> int:
    fam, n = system.family, system.rank
    if fam == "A":
        return n + 1
    if fam == "B":
        return 2 * n + 1
    return 2 * n


@lru_cache(maxsize=None)
def root_entries(system: RootSystemId, alpha: Root) -> tuple:
    """((row, col), coeff) pairs of E_alpha; the first entry is the pivot."""
    v = euclidean(system, alpha)
    if alpha.is_negative:
        return tuple(((c, r), x) for (r, c), x in root_entries(system, -alpha))
    fam, n = system.family, system.rank
    N = matrix_dim(system)
    bar = lambda k: N + 1 - k
    nz = [(k, x) for k, x in enumerate(v, start=1) if x]
    if fam == "A":
        (i, _), (j, _) = nz
        return (((i, j), 1),)
    if len(nz) == 1:
        (i, x) = nz[0]
        if x == 2:  # type C long root 2e_i
            return (((i, bar(i)), 1),)
        return (((i, n + 1), 1), ((n + 1, bar(i)), -1))  # type B short root e_i
    (i, xi), (j, xj) = nz
    if xj == -1:  # e_i - e_j
        return (((i, j), 1), ((bar(j), bar(i)), -1))
    if fam == "C":  # e_i + e_j
        return (((i, bar(j)), 1), ((j, bar(i)), 1))
    return (((i, bar(j)), 1), ((j, bar(i)), -1))  # e_i + e_j in B/D


@lru_cache(maxsize=None)
def _pivot(system: RootSystemId, alpha: Root):
    return root_entries(system, alpha)[0][0]


def coeff_at(system: RootSystemId, M: dict, alpha: Root):
    return M.get(_pivot(system, alpha), 0)


def cartan_matrix(system: RootSystemId, svec) -> dict:
    """Diagonal element with alpha(S) = <euclidean(alpha), svec>."""
    N = matrix_dim(system)
    out = {}
    for k, s in enumerate(svec, start=1):
        if s:
            out[(k, k)] = s
            if system.family != "A":
                out[(N + 1 - k, N + 1 - k)] = -s
    return out


def s_value(system: RootSystemId, svec, alpha: Root):
    return sum(v * s for v, s in zip(euclidean(system, alpha), svec))


def operator_matrix(spec, system: RootSystemId) -> dict:
    """Integer matrix of the canonical M = S + N."""
    out: dict = {}
    for beta in canonical_form(spec, system).support:
        for rc, x in root_entries(system, beta):
            out[rc] = out.get(rc, 0) + x
    if isinstance(spec, (SemisimpleClassical, TypeAGeneral)):
        for rc, x in cartan_matrix(
            system, semisimple_functional(spec, system)
        ).items():
            out[rc] = out.get(rc, 0) + x
    return {rc: x for rc, x in out.items() if x}


# --- sparse matrix arithmetic ------------------------------------------------


def _is_zero(v) -> bool:
    return v.is_zero() if isinstance(v, Poly) else not v


def _mat_mul(A: dict, B: dict, mod=None) -> dict:
    brows: dict = {}
    for (r, c), v in B.items():
        brows.setdefault(r, []).append((c, v))
    out: dict = {}
    for (r, k), a in A.items():
        for c, b in brows.get(k, ()):
            rc = (r, c)
            s = out.get(rc, 0) + a * b
            out[rc] = s % mod if mod else s
    return {rc: v for rc, v in out.items() if not _is_zero(v)}


def _exp(X: dict, N: int, mod=None) -> dict:
    """exp of a nilpotent matrix; terminates when the power vanishes."""
    out = {(k, k): 1 for k in range(1, N + 1)}
    term = dict(out)
    k = 0
    while True:
        k += 1
        term = _mat_mul(term, X, mod)
        if not term:
            return out
        if mod:
            inv = pow(k, -1, mod)
            term = {rc: (v * inv) % mod for rc, v in term.items()}
        else:
            term = {rc: v * Fraction(1, k) for rc, v in term.items()}
        for rc, v in term.items():
            s = out.get(rc, 0) + v
            if mod:
                s %= mod
            if _is_zero(s):
                out.pop(rc, None)
            else:
                out[rc] = s
        if k > N:
            raise RuntimeError("exp argument is not nilpotent")


def _conjugate(system: RootSystemId, M: dict, X: dict, mod=None) -> dict:
    """exp(X) M exp(-X), the adjoint action of u^{-1} = exp(X)."""
    N = matrix_dim(system)
    E = _exp(X, N, mod)
    Einv = _exp({rc: -v for rc, v in X.items()}, N, mod)
    return _mat_mul(_mat_mul(E, M, mod), Einv, mod)


def _row_element(system: RootSystemId, assignment: dict) -> dict:
    """Sum of x_beta E_beta over an assignment {Root: value}."""
    X: dict = {}
    for beta, x in assignment.items():
        if _is_zero(x):
            continue
        for rc, c in root_entries(system, beta):
            s = X.get(rc, 0) + x * c
            if _is_zero(s):
                X.pop(rc, None)
            else:
                X[rc] = s
    return X


# --- generic symbolic conjugation --------------------------------------------


def _var(alpha: Root) -> str:
    return f"x[{alpha}]"


def _rows_desc(system: RootSystemId, roots: frozenset[Root]):
    """Roots grouped by row, rows in decreasing order, each sorted by height."""
    rp = row_partition(system)
    for i in range(system.rank, 0, -1):
        row = [a for a in rp.rows[i - 1] if a in roots]
        if row:
            yield i, row


def generic_conjugate(spec, system: RootSystemId, pi: WeylElement) -> dict:
    """Exact coefficient polynomials of u^{-1}.M for generic u in U_pi.

    Returns {alpha: Poly for alpha in Phi+} plus key "cartan" holding the
    diagonal entries.
    """
    if system.rank > SYMBOLIC_RANK_CAP:
        raise ValueError(f"symbolic conjugation capped at rank {SYMBOLIC_RANK_CAP}")
    M = {rc: Poly.const(v) for rc, v in operator_matrix(spec, system).items()}
    for _, row in _rows_desc(system, inversion_set(pi)):
        X = _row_element(system, {a: Poly.var(_var(a)) for a in row})
        M = _conjugate(system, M, X)
    out = {alpha: coeff_at(system, M, alpha) for alpha in positive_roots(system)}
    out = {a: v if isinstance(v, Poly) else Poly.const(v) for a, v in out.items()}
    out["cartan"] = tuple(
        M.get((k, k), Poly()) for k in range(1, matrix_dim(system) + 1)
    )
    return out


def _numeric_support(spec, system, pi, seed, samples=2) -> frozenset[Root]:
    M0 = {rc: v % PRIME for rc, v in operator_matrix(spec, system).items()}
    found: set[Root] = set()
    pos = positive_roots(system)
    for t in range(samples):
        rng = random.Random(f"orbit:{seed}:{t}:{pi.window}")
        M = M0
        for _, row in _rows_desc(system, inversion_set(pi)):
            X = _row_element(
                system, {a: rng.randrange(1, PRIME) for a in row}
            )
            M = _conjugate(system, M, X, PRIME)
        found.update(a for a in pos if coeff_at(system, M, a))
    return frozenset(found)


def orbit_roots(
    spec,
    system: RootSystemId,
    pi: WeylElement,
    mode: str = "auto",
    seed: int = 0,
) -> frozenset[Root]:
    """Phi_{U_pi . M}: positive roots with a not-identically-zero coefficient
    in the generic conjugate."""
    if mode == "auto":
        mode = "symbolic" if system.rank <= AUTO_SYMBOLIC_RANK else "randomized"
    if mode == "symbolic":
        gc = generic_conjugate(spec, system, pi)
        return frozenset(
            a for a in positive_roots(system) if not gc[a].is_zero()
        )
    if mode == "randomized":
        return _numeric_support(spec, system, pi, seed)
    raise ValueError(f"unknown orbit mode {mode!r}")


def restricted_orbit_roots(
    system: RootSystemId,
    support: tuple[Root, ...],
    var_roots: frozenset[Root],
    mode: str = "auto",
    seed: int = 0,
) -> frozenset[Root]:
    """Orbit roots of N = sum of E_beta over the support, for u ranging over
    the subgroup generated by var_roots."""
    if mode == "auto":
        mode = "symbolic" if system.rank <= AUTO_SYMBOLIC_RANK else "randomized"
    M0: dict = {}
    for beta in support:
        for rc, x in root_entries(system, beta):
            M0[rc] = M0.get(rc, 0) + x
    pos = positive_roots(system)
    if mode == "symbolic":
        M = {rc: Poly.const(v) for rc, v in M0.items()}
        for _, row in _rows_desc(system, var_roots):
            X = _row_element(system, {a: Poly.var(_var(a)) for a in row})
            M = _conjugate(system, M, X)
        return frozenset(a for a in pos if not _is_zero(coeff_at(system, M, a)))
    found: set[Root] = set()
    for t in range(2):
        rng = random.Random(f"orbitR:{seed}:{t}:{sorted(a.coeffs for a in var_roots)}")
        M = {rc: v % PRIME for rc, v in M0.items()}
        for _, row in _rows_desc(system, var_roots):
            X = _row_element(system, {a: rng.randrange(1, PRIME) for a in row})
            M = _conjugate(system, M, X, PRIME)
        found.update(a for a in pos if coeff_at(system, M, a))
    return frozenset(found)


# --- probabilistic dimension solver -------------------------------------------


@dataclass(frozen=True)
class OracleVerdict:
    kind: str  # "empty" | "dim" | "inconsistent"
    dim: int | None = None

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"

    def __str__(self):
        return {"empty": "Empty", "dim": f"Dim({self.dim})",
                "inconsistent": "Inconsistent"}[self.kind]


EMPTY = OracleVerdict("empty")
INCONSISTENT = OracleVerdict("inconsistent")


def _stage_plan(spec, system: RootSystemId):
    """(row, variable roots, condition roots) triples in solving order.

    Type C rows below the last get the two-stage refinement: the long root
    gamma_i (and gamma_i - alpha_i when the nilpotent part contains alpha_i
    and (gamma_i - alpha_i)(S_M) = 0) is deferred to a second stage whose
    only condition is gamma_i itself.
    """
    rp = row_partition(system)
    n = system.rank
    support = set(canonical_form(spec, system).support)
    if isinstance(spec, (SemisimpleClassical, TypeAGeneral)):
        svec = semisimple_functional(spec, system)
    else:
        svec = (0,) * len(euclidean(system, simple_roots(system)[0]))
    plan = []
    for i in range(n, 0, -1):
        row = frozenset(rp.rows[i - 1])
        if system.family == "C" and i < n:
            gamma = rp.long_root[i - 1]
            alpha_i = simple_roots(system)[i - 1]
            defer = {gamma}
            if alpha_i in support and s_value(system, svec, gamma - alpha_i) == 0:
                defer.add(gamma - alpha_i)
            plan.append((i, row - frozenset(defer), row - {gamma}))
            plan.append((i, frozenset(defer), frozenset({gamma})))
        else:
            plan.append((i, row, row))
    return plan


def _solve_affine(cols, b, rng):
    """Solve sum_j cols[j] x_j = -b over F_PRIME.

    Returns ("ok", rank, random solution) on success or ("bad", combos)
    when infeasible, where each combo is a row-combination vector over the
    input equations whose linear part vanished but whose constant did not."""
    p = PRIME
    m = len(cols)
    k = len(b)
    rows = [[cols[j][i] for j in range(m)] + [(-b[i]) % p] for i in range(k)]
    trace = [[int(i == j) for j in range(k)] for i in range(k)]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, k) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        trace[r], trace[piv] = trace[piv], trace[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        trace[r] = [(x * inv) % p for x in trace[r]]
        for i in range(k):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * bb) % p for a, bb in zip(rows[i], rows[r])]
                trace[i] = [(a - f * bb) % p for a, bb in zip(trace[i], trace[r])]
        pivots.append(c)
        r += 1
    combos = [trace[i] for i in range(r, k) if rows[i][m]]
    if combos:
        return "bad", combos
    x = [0] * m
    for c in range(m):
        if c not in pivots:
            x[c] = rng.randrange(p)
    for i, c in enumerate(reversed(pivots)):
        ri = len(pivots) - 1 - i
        x[c] = (rows[ri][m] - sum(rows[ri][j] * x[j] for j in range(m) if j != c)) % p
    return "ok", r, x


# Conditions are handled as functionals: linear combinations of coefficient
# projections rho_alpha of the running conjugate.  Each starts as a unit
# functional {alpha: 1} attached to the stage owning alpha.  When a stage
# system is infeasible, the eliminated combinations with vanished linear part
# are new functionals free of that stage's variables; they constrain earlier
# stages and get re-attached to the first stage after which their value is
# pinned.  (In type D a height set of size two inside the condition set
# produces exactly such a difference condition on the next row up.)

MAX_DERIVED = 12


def _feval(system, M, fdict):
    return sum(c * coeff_at(system, M, a) for a, c in fdict.items()) % PRIME


def _combine(funcs, combo):
    out: dict = {}
    for c, fd in zip(combo, funcs):
        if not c:
            continue
        for a, v in fd.items():
            out[a] = (out.get(a, 0) + c * v) % PRIME
    return {a: v for a, v in out.items() if v}


def _stage_funcs(stage_conds, cond_set, extra, t):
    funcs = [
        {a: 1}
        for a in sorted(stage_conds & cond_set, key=lambda a: (a.height, a.coeffs))
    ]
    funcs.extend(fd for s, fd in extra if s == t)
    return funcs


def _stage_system(system, M, vrs, funcs):
    """Baseline values and per-variable columns of the stage's affine system."""
    b = [_feval(system, M, fd) for fd in funcs]
    cols = []
    for v_root in vrs:
        Mv = _conjugate(system, M, _row_element(system, {v_root: 1}), PRIME)
        cols.append([(_feval(system, Mv, fd) - bb) % PRIME
                     for fd, bb in zip(funcs, b)])
    return b, cols


def _run_tower(system, M0, plan, var_set, cond_set, extra, rng):
    M = {rc: v % PRIME for rc, v in M0.items()}
    total_rank = 0
    for t, (_, stage_vars, stage_conds) in enumerate(plan):
        vrs = sorted(stage_vars & var_set, key=lambda a: (a.height, a.coeffs))
        funcs = _stage_funcs(stage_conds, cond_set, extra, t)
        if not funcs:
            if vrs:
                X = _row_element(system, {a: rng.randrange(PRIME) for a in vrs})
                M = _conjugate(system, M, X, PRIME)
            continue
        b, cols = _stage_system(system, M, vrs, funcs)
        if not vrs:
            if any(b):
                return "infeasible", (t, funcs, [
                    [int(i == j) for j in range(len(funcs))]
                    for i, v in enumerate(b) if v
                ])
            continue
        # affineness probe at a random point
        xp = [rng.randrange(PRIME) for _ in vrs]
        Mp = _conjugate(system, M, _row_element(system, dict(zip(vrs, xp))), PRIME)
        for idx, fd in enumerate(funcs):
            pred = (b[idx] + sum(cols[j][idx] * xp[j] for j in range(len(vrs)))) % PRIME
            if _feval(system, Mp, fd) != pred:
                return "nonaffine", None
        sol = _solve_affine(cols, b, rng)
        if sol[0] == "bad":
            return "infeasible", (t, funcs, sol[1])
        _, rank, xstar = sol
        total_rank += rank
        M = _conjugate(system, M, _row_element(system, dict(zip(vrs, xstar))), PRIME)
    if any(coeff_at(system, M, a) for a in cond_set):
        return "nonaffine", None
    return "dim", len(var_set) - total_rank


def _stability_stage(system, M0, plan, var_set, cond_set, extra, fdict, rng):
    """Smallest s such that the functional's value is unchanged by stages
    s+1, s+2, ... along towers that satisfy the conditions enforced so far
    (so plan[s-1] is the stage pinning it).  Replaying constrained towers
    matters: a dependence on a later stage can vanish exactly on the locus
    the earlier conditions cut out."""
    best = 0
    for _ in range(2):
        M = {rc: v % PRIME for rc, v in M0.items()}
        vals = [_feval(system, M, fdict)]
        broken = False
        for t, (_, stage_vars, stage_conds) in enumerate(plan):
            vrs = sorted(stage_vars & var_set, key=lambda a: (a.height, a.coeffs))
            if not vrs:
                vals.append(vals[-1])
                continue
            assign = None
            if not broken:
                funcs = _stage_funcs(stage_conds, cond_set, extra, t)
                if funcs:
                    b, cols = _stage_system(system, M, vrs, funcs)
                    sol = _solve_affine(cols, b, rng)
                    if sol[0] == "ok":
                        assign = sol[2]
                    else:
                        broken = True
            if assign is None:
                assign = [rng.randrange(1, PRIME) for _ in vrs]
            M = _conjugate(system, M, _row_element(system, dict(zip(vrs, assign))),
                           PRIME)
            vals.append(_feval(system, M, fdict))
        s = len(plan)
        while s > 0 and vals[s - 1] == vals[-1]:
            s -= 1
        best = max(best, s)
    return best


def _solve_once(spec, system, M0, plan, var_set, cond_set, rng):
    extra: list[tuple[int, dict]] = []
    seen: set[frozenset] = set()
    for _ in range(MAX_DERIVED):
        status, payload = _run_tower(
            system, M0, plan, var_set, cond_set, extra, rng
        )
        if status == "nonaffine":
            return "inconsistent", None
        if status != "infeasible":
            return status, payload
        t, funcs, combos = payload
        progress = False
        for combo in combos:
            fd = _combine(funcs, combo)
            if not fd:
                continue
            key = frozenset(fd.items())
            if key in seen:
                continue
            s = _stability_stage(system, M0, plan, var_set, cond_set, extra,
                                 fd, rng)
            if s == 0:
                # pinned before any variable acts; nonzero means no solutions
                if _feval(system, {rc: v % PRIME for rc, v in M0.items()}, fd):
                    return "empty", None
                continue
            if s > t:
                return "inconsistent", None
            seen.add(key)
            extra.append((s - 1, fd))
            progress = True
        if not progress:
            return "inconsistent", None
    return "inconsistent", None


def cell_dim_oracle(
    spec,
    system: RootSystemId,
    H: HessenbergSpace,
    pi: WeylElement,
    trials: int = 5,
    seed: int = 0,
) -> OracleVerdict:
    """Probabilistic dimension of the cell BpiB intersected with H(M,H)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    M0 = operator_matrix(spec, system)
    cond_set = complement_roots(H, pi)
    var_set = inversion_set(pi)
    plan = _stage_plan(spec, system)
    dims = set()
    empties = 0
    for t in range(trials):
        rng = random.Random(f"cell:{seed}:{t}:{pi.window}")
        kind, d = _solve_once(spec, system, M0, plan, var_set, cond_set, rng)
        if kind == "inconsistent":
            return INCONSISTENT
        if kind == "empty":
            empties += 1
        else:
            dims.add(d)
    if empties == trials:
        return EMPTY
    if empties == 0 and len(dims) == 1:
        return OracleVerdict("dim", dims.pop())
    return INCONSISTENT


# --- structural verification --------------------------------------------------


def _bracket(A: dict, B: dict) -> dict:
    AB = _mat_mul(A, B)
    BA = _mat_mul(B, A)
    for rc, v in BA.items():
        s = AB.get(rc, 0) - v
        if s:
            AB[rc] = s
        else:
            AB.pop(rc, None)
    return AB


def _borel_basis(system: RootSystemId):
    """Cartan diagonal generators followed by positive root vectors."""
    N = matrix_dim(system)
    out = []
    if system.family == "A":
        for k in range(1, N + 1):
            out.append({(k, k): 1})
    else:
        for k in range(1, system.rank + 1):
            out.append({(k, k): 1, (N + 1 - k, N + 1 - k): -1})
    for a in positive_roots(system):
        out.append(dict(root_entries(system, a)))
    return out


def verify_adform(system: RootSystemId, i: int, samples: int = 3,
                  seed: int = 0) -> bool:
    """Check the structural facts about ad X for X in row i: (ad X)^3 = 0 on
    the Borel; rows below i are untouched; (ad X)^2 kills row i except, in
    type C, the gamma_i line."""
    if not 1 <= i <= system.rank:
        raise ValueError(f"row {i} out of range for {system}")
    rp = row_partition(system)
    row = rp.rows[i - 1]
    rng = random.Random(f"adform:{seed}:{system}:{i}")
    gamma = rp.long_root[i - 1] if system.family == "C" else None
    basis = _borel_basis(system)
    later_rows = [a for j in range(i + 1, system.rank + 1)
                  for a in rp.rows[j - 1]]
    for _ in range(samples):
        X = _row_element(
            system, {a: rng.choice([-3, -2, -1, 1, 2, 3]) for a in row}
        )
        for Y in basis:
            Z1 = _bracket(X, Y)
            Z2 = _bracket(X, Z1)
            Z3 = _bracket(X, Z2)
            if Z3:
                return False
            for Z in (Z1, Z2):
                if any(coeff_at(system, Z, a) for a in later_rows):
                    return False
            for a in row:
                if a == gamma:
                    continue
                if coeff_at(system, Z2, a):
                    return False
    return True


def nonoverlap_check(spec, system: RootSystemId, pi: WeylElement,
                     samples: int = 100, seed: int = 0) -> bool:
    """Phi_M is contained in Phi_{u^-1.M} with unchanged coefficients, for
    random u in U_pi (exact rational arithmetic)."""
    M0 = operator_matrix(spec, system)
    support = canonical_form(spec, system).support
    base = {b: coeff_at(system, M0, b) for b in support}
    rng = random.Random(f"nonoverlap:{seed}:{system}:{pi.window}")
    for _ in range(samples):
        M = {rc: Fraction(v) for rc, v in M0.items()}
        for _, row in _rows_desc(system, inversion_set(pi)):
            X = _row_element(
                system, {a: Fraction(rng.randint(-9, 9)) for a in row}
            )
            M = _conjugate(system, M, X)
        for b in support:
            if coeff_at(system, M, b) != base[b]:
                return False
    return True


def unitriangular_conjugate(m: int) -> dict:
    """u^{-1} N u in gl_m for the regular nilpotent N and the full upper
    unitriangular u with entries a_ij; returns {(i, j): Poly}."""
    N = {(k, k + 1): Poly.const(1) for k in range(1, m)}
    A = {
        (i, j): Poly.var(f"a{i}{j}")
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
    }
    u = {(k, k): Poly.const(1) for k in range(1, m + 1)}
    for rc, v in A.items():
        u[rc] = v
    # Neumann series for u^{-1} = I - A + A^2 - ...
    uinv = {(k, k): Poly.const(1) for k in range(1, m + 1)}
    term = {rc: v for rc, v in A.items()}
    sign = -1
    while term:
        for rc, v in term.items():
            s = uinv.get(rc, Poly()) + sign * v
            if isinstance(s, Poly) and s.is_zero():
                uinv.pop(rc, None)
            else:
                uinv[rc] = s
        term = _mat_mul(term, A)
        sign = -sign
    out = _mat_mul(_mat_mul(uinv, N), u)
    return {rc: v for rc, v in out.items()
            if not (isinstance(v, Poly) and v.is_zero())}
