"""Operator specifications M = S + N and their canonical forms.

Supported operators: regular nilpotent (any classical family), type-A
nilpotent of Jordan type mu, type-A general (one nilpotent block per
eigenvalue), and semisimple with zero pattern given by simple-root subsets.
The nilpotent support is read off the Young diagram: a box k directly above
box j contributes the root e_j - e_k, giving the non-overlapping support of
the canonical Jordan form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rootsys import (
    Root,
    RootSystemId,
    ambient_dim,
    euclidean,
    positive_root_set,
    positive_roots,
    root_gt,
    simple_roots,
)
from .tableaux import Diagram, MultiDiagram, vertical_pairs

__all__ = [
    "RegularNilpotent",
    "TypeANilpotent",
    "TypeAGeneral",
    "SemisimpleClassical",
    "CanonicalNilpotent",
    "canonical_form",
    "semisimple_functional",
    "levi_roots",
    "blocks_of",
    "block_ranges",
    "multidiagram_of",
]


@dataclass(frozen=True)
class RegularNilpotent:
    """N = sum of simple root vectors; valid in every classical family."""


@dataclass(frozen=True)
class TypeANilpotent:
    """Nilpotent of Jordan type mu in gl_{n+1} (family A only)."""

    mu: tuple[int, ...]


@dataclass(frozen=True)
class TypeAGeneral:
    """One Jordan block structure per eigenvalue; labels are opaque tokens."""

    blocks: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self):
        labels = [lab for lab, _ in self.blocks]
        if len(set(labels)) != len(labels):
            raise ValueError("eigenvalue labels must be distinct")


@dataclass(frozen=True)
class SemisimpleClassical:
    """Semisimple S with alpha(S) = 0 exactly on the span of the given
    pairwise disjoint, Dynkin-connected simple-root index subsets."""

    levi_blocks: tuple[tuple[int, ...], ...] = ()


OperatorSpec = (RegularNilpotent, TypeANilpotent, TypeAGeneral, SemisimpleClassical)


@dataclass(frozen=True)
class CanonicalNilpotent:
    """Ordered non-overlapping support of the canonical nilpotent."""

    system: RootSystemId
    support: tuple[Root, ...]

    def __post_init__(self):
        for a in self.support:
            for b in self.support:
                if root_gt(a, b):
                    raise ValueError(f"overlapping support: {a} > {b}")


def _string_root(rank: int, lo: int, hi: int) -> Root:
    """e_lo - e_hi in type A coefficients (lo < hi)."""
    return Root(tuple(1 if lo <= k < hi else 0 for k in range(1, rank + 1)))


def _check_family_a(spec, system: RootSystemId, total: int):
    if system.family != "A":
        raise ValueError(f"{type(spec).__name__} requires family A")
    if total != system.rank + 1:
        raise ValueError(
            f"partition sizes sum to {total}, expected {system.rank + 1} for {system}"
        )


def blocks_of(spec: TypeAGeneral) -> tuple[tuple[str, tuple[int, ...]], ...]:
    """Blocks sorted by size descending, equal sizes in input order."""
    return tuple(
        sorted(spec.blocks, key=lambda b: -sum(b[1]))
    )


def block_ranges(spec: TypeAGeneral) -> tuple[tuple[int, int], ...]:
    """Half-open global index ranges (lo, hi), largest block first at 1."""
    out, off = [], 0
    for _, mu in blocks_of(spec):
        out.append((off + 1, off + sum(mu) + 1))
        off += sum(mu)
    return tuple(out)


def multidiagram_of(spec, system: RootSystemId | None = None) -> MultiDiagram:
    if isinstance(spec, RegularNilpotent):
        if system is None or system.family != "A":
            raise ValueError("regular nilpotent diagram needs a type-A system")
        return MultiDiagram((Diagram((system.rank + 1,)),))
    if isinstance(spec, SemisimpleClassical):
        if system is None or system.family != "A" or spec.levi_blocks:
            raise ValueError("diagram exists only for regular semisimple in type A")
        return MultiDiagram((Diagram((1,)),) * (system.rank + 1))
    if isinstance(spec, TypeANilpotent):
        return MultiDiagram((Diagram(spec.mu),))
    if isinstance(spec, TypeAGeneral):
        return MultiDiagram(tuple(Diagram(mu) for _, mu in blocks_of(spec)))
    raise ValueError(f"no diagram for {type(spec).__name__}")


def _diagram_support(system: RootSystemId, mu: tuple[int, ...], offset: int):
    d = Diagram(mu)
    return [
        _string_root(system.rank, offset + j, offset + k)
        for j, k in vertical_pairs(d)
    ]


def canonical_form(spec, system: RootSystemId) -> CanonicalNilpotent:
    """Support of the canonical nilpotent part of the operator."""
    if isinstance(spec, RegularNilpotent):
        return CanonicalNilpotent(system, simple_roots(system))
    if isinstance(spec, TypeANilpotent):
        _check_family_a(spec, system, sum(spec.mu))
        return CanonicalNilpotent(
            system, tuple(_diagram_support(system, spec.mu, 0))
        )
    if isinstance(spec, TypeAGeneral):
        _check_family_a(spec, system, sum(sum(mu) for _, mu in spec.blocks))
        support = []
        for (lo, _), (_, mu) in zip(block_ranges(spec), blocks_of(spec)):
            support.extend(_diagram_support(system, mu, lo - 1))
        return CanonicalNilpotent(system, tuple(support))
    if isinstance(spec, SemisimpleClassical):
        return CanonicalNilpotent(system, ())
    raise ValueError(f"unknown operator spec {spec!r}")


def _levi_simple_indices(spec, system: RootSystemId) -> frozenset[int]:
    n = system.rank
    if isinstance(spec, SemisimpleClassical):
        seen: set[int] = set()
        for block in spec.levi_blocks:
            for i in block:
                if not 1 <= i <= n:
                    raise ValueError(f"simple root index {i} out of range")
                if i in seen:
                    raise ValueError("levi blocks must be pairwise disjoint")
                seen.add(i)
        _check_connected(spec, system)
        return frozenset(seen)
    if isinstance(spec, TypeAGeneral):
        idx = set()
        for lo, hi in block_ranges(spec):
            idx.update(range(lo, hi - 1))
        return frozenset(idx)
    raise ValueError(f"no Levi data for {type(spec).__name__}")


def _dynkin_neighbors(system: RootSystemId, i: int) -> set[int]:
    n = system.rank
    out = set()
    if system.family == "D":
        if i < n - 1:
            out.add(i + 1)
        if 1 < i <= n - 1:
            out.add(i - 1)
        if i == n - 2:
            out.add(n)
        if i == n:
            out.add(n - 2)
    else:
        if i > 1:
            out.add(i - 1)
        if i < n:
            out.add(i + 1)
    return out


def _check_connected(spec: SemisimpleClassical, system: RootSystemId):
    for block in spec.levi_blocks:
        if not block:
            raise ValueError("empty levi block")
        todo, seen = [block[0]], {block[0]}
        bset = set(block)
        while todo:
            cur = todo.pop()
            for j in _dynkin_neighbors(system, cur) & bset - seen:
                seen.add(j)
                todo.append(j)
        if seen != bset:
            raise ValueError(f"levi block {block} not connected in the Dynkin diagram")


def levi_roots(spec, system: RootSystemId) -> frozenset[Root]:
    """Phi_l: positive roots in the span of the operator's simple-root blocks."""
    idx = _levi_simple_indices(spec, system)
    return frozenset(
        a for a in positive_roots(system)
        if all(c == 0 for k, c in enumerate(a.coeffs, start=1) if k not in idx)
    )


def semisimple_functional(spec, system: RootSystemId) -> tuple[int, ...]:
    """Integer vector s with alpha(s) = sum_k v_k s_k (v = Euclidean form of
    alpha) vanishing exactly on the Levi roots.  Deterministic."""
    m = ambient_dim(system)
    if isinstance(spec, TypeAGeneral):
        s = [0] * m
        for val, (lo, hi) in enumerate(block_ranges(spec)):
            for k in range(lo, hi):
                s[k - 1] = val
        return tuple(s)
    constrained = sorted(_levi_simple_indices(spec, system))
    rows = [euclidean(system, simple_roots(system)[i - 1]) for i in constrained]
    basis = _nullspace(rows, m)
    zero = levi_roots(spec, system)
    pos = positive_root_set(system)
    for scale in range(1, 50):
        s = [0] * m
        for k, vec in enumerate(basis):
            w = (scale + k + 1) ** (k + 1)
            for j in range(m):
                s[j] += w * vec[j]
        if all(
            (sum(v * x for v, x in zip(euclidean(system, a), s)) == 0)
            == (a in zero)
            for a in pos
        ):
            return tuple(s)
    raise RuntimeError("could not find a generic semisimple functional")


def _nullspace(rows: list[tuple[int, ...]], m: int) -> list[list[int]]:
    """Integer basis of the common kernel of the given functionals."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        mat[r] = [x / mat[r][c] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for c in free:
        v = [Fraction(0)] * m
        v[c] = Fraction(1)
        for rr, pc in enumerate(pivots):
            v[pc] = -mat[rr][c]
        den = math.lcm(*(x.denominator for x in v))
        basis.append([int(x * den) for x in v])
    return basis
