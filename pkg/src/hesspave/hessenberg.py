"""Hessenberg spaces as root sets M_H, their enumeration, and the type-A
dictionary with Hessenberg functions h.

A Hessenberg space contains every positive root and is closed under adding
positive roots.  Its negative part is therefore determined by a down-closed
set of positive roots (closure under subtracting single positive roots),
which is what the enumerator walks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import (
    Root,
    RootSystemId,
    negative_roots,
    positive_root_set,
    positive_roots,
    simple_roots,
)
from .weyl import WeylElement

__all__ = [
    "HessenbergSpace",
    "HessFunction",
    "enumerate_spaces",
    "from_h",
    "to_h",
    "peterson_space",
    "borel_space",
    "full_space",
    "complement_roots",
    "all_hess_functions",
]

ENUM_RANK_CAP = 7


@dataclass(frozen=True)
class HessenbergSpace:
    """A root set M_H containing Phi+ and closed under adding positive roots."""

    system: RootSystemId
    roots: frozenset[Root]

    def __post_init__(self):
        pos = positive_root_set(self.system)
        if not pos <= self.roots:
            raise ValueError("Hessenberg space must contain all positive roots")
        allr = pos | {-a for a in pos}
        if not self.roots <= allr:
            raise ValueError("Hessenberg space contains non-roots")
        for a in self.roots:
            for g in pos:
                s = a + g
                if s in allr and s not in self.roots:
                    raise ValueError(
                        f"not closed under addition of positive roots: "
                        f"{a} + {g} = {s} missing"
                    )

    def __contains__(self, alpha: Root) -> bool:
        return alpha in self.roots

    def __le__(self, other: "HessenbergSpace") -> bool:
        return self.roots <= other.roots

    def negative_part(self) -> frozenset[Root]:
        return frozenset(a for a in self.roots if a.is_negative)

    def to_json_obj(self) -> dict:
        return {
            "system": str(self.system),
            "roots": sorted(list(a.coeffs) for a in self.roots),
        }

    def __str__(self):
        neg = sorted((-a for a in self.negative_part()), key=lambda r: (r.height, r.coeffs))
        if not neg:
            return "Phi+"
        return "Phi+ u -{" + ", ".join(str(a) for a in neg) + "}"


@dataclass(frozen=True)
class HessFunction:
    """A nondecreasing map h on {1..n} with h(i) >= i."""

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        prev = 1
        for i, v in enumerate(self.values, start=1):
            if not max(i, prev) <= v <= n:
                raise ValueError(f"h violates h(i) >= max(i, h(i-1)): {self.values}")
            prev = v

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def parse(cls, text: str) -> "HessFunction":
        return cls(tuple(int(t) for t in text.split(",")))

    def __str__(self):
        return ",".join(str(v) for v in self.values)


def all_hess_functions(n: int):
    """All Hessenberg functions on {1..n}, lexicographic."""

    def rec(i: int, lo: int, acc: list[int]):
        if i > n:
            yield HessFunction(tuple(acc))
            return
        for v in range(max(i, lo), n + 1):
            acc.append(v)
            yield from rec(i + 1, v, acc)
            acc.pop()

    yield from rec(1, 1, [])


@lru_cache(maxsize=None)
def enumerate_spaces(system: RootSystemId) -> tuple[HessenbergSpace, ...]:
    """All Hessenberg spaces, as down-closed negative parts over Phi+."""
    if system.rank > ENUM_RANK_CAP:
        raise ValueError(f"enumeration capped at rank {ENUM_RANK_CAP}")
    pos = positive_roots(system)  # height-ascending
    pos_set = positive_root_set(system)
    # preds[a] = roots that must already be chosen before a may be
    preds = {a: frozenset(a - g for g in pos_set if (a - g) in pos_set) for a in pos}
    spaces: list[frozenset[Root]] = []

    def rec(k: int, chosen: set[Root]):
        if k == len(pos):
            spaces.append(frozenset(chosen))
            return
        rec(k + 1, chosen)
        a = pos[k]
        if preds[a] <= chosen:
            chosen.add(a)
            rec(k + 1, chosen)
            chosen.remove(a)

    rec(0, set())
    base = pos_set
    out = [HessenbergSpace(system, frozenset(base | {-a for a in ideal}))
           for ideal in spaces]
    out.sort(key=lambda H: (len(H.roots), sorted(a.coeffs for a in H.roots)))
    return tuple(out)


def _type_a_root(n1: int, i: int, j: int) -> Root:
    """The root e_i - e_j in A_{n1-1} simple-root coordinates (i != j)."""
    coeffs = [0] * (n1 - 1)
    lo, hi, sign = (i, j, 1) if i < j else (j, i, -1)
    for k in range(lo, hi):
        coeffs[k - 1] = sign
    return Root(tuple(coeffs))


def from_h(h: HessFunction) -> HessenbergSpace:
    """Type A space with e_i - e_j present (i > j) exactly when i <= h(j)."""
    n = h.n
    system = RootSystemId("A", n - 1)
    roots = set(positive_roots(system))
    for j in range(1, n + 1):
        for i in range(j + 1, h(j) + 1):
            roots.add(_type_a_root(n, i, j))
    return HessenbergSpace(system, frozenset(roots))


def to_h(H: HessenbergSpace) -> HessFunction:
    if H.system.family != "A":
        raise ValueError("Hessenberg functions exist only in type A")
    n = H.system.rank + 1
    vals = []
    for j in range(1, n + 1):
        v = j
        for i in range(j + 1, n + 1):
            if _type_a_root(n, i, j) in H.roots:
                v = i
        vals.append(v)
    return HessFunction(tuple(vals))


def peterson_space(system: RootSystemId) -> HessenbergSpace:
    roots = set(positive_roots(system))
    roots.update(-a for a in simple_roots(system))
    return HessenbergSpace(system, frozenset(roots))


def borel_space(system: RootSystemId) -> HessenbergSpace:
    return HessenbergSpace(system, positive_root_set(system))


def full_space(system: RootSystemId) -> HessenbergSpace:
    return HessenbergSpace(
        system, positive_root_set(system) | frozenset(negative_roots(system))
    )


def complement_roots(H: HessenbergSpace, pi: WeylElement) -> frozenset[Root]:
    """C_{pi.H} = Phi+ minus pi(M_H)."""
    inv = pi.inverse()
    return frozenset(a for a in positive_roots(H.system) if inv.act(a) not in H.roots)
