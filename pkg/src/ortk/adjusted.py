"""Adjusted Borel subalgebras, hypercubic collections, brick windows.

An adjusted subalgebra is described by its odd root set delta_a, which
together with the positive even roots must be closed under root sums;
opposite odd pairs force an orthogonality condition on the weight.
Hypercubic collections are the orthogonal families of isotropic simple
roots along which a Borel can be reflected in one step.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass
from enum import Enum

from .characters import (
    NumeratorCharacter,
    char_add,
    character_weight_multiplicity,
    characters_equal,
    verma_character,
)
from .numerics import Weight, zero_weight
from .rootsys import Borel, NotIsotropicSimple, Root, RootSystem, odd_reflect

__all__ = [
    "AdjustedBorel",
    "HypercubicCollection",
    "SplitVerdict",
    "is_lambda_adjusted",
    "hypercubic_collections",
    "reflect_along",
    "borel_meet_join",
    "brick_decomposition_check",
    "split_criterion",
    "semibrick_character_check",
]


@dataclass(frozen=True)
class AdjustedBorel:
    """Odd part of an adjusted subalgebra, kept with its base Borel."""

    delta_a: frozenset
    base_borel: Borel

    def __post_init__(self):
        object.__setattr__(self, "delta_a", frozenset(self.delta_a))


@dataclass(frozen=True)
class HypercubicCollection:
    """Orthogonal family of isotropic simple roots, orthogonal to lam."""

    j: frozenset
    sigma: Weight
    roots: tuple
    lam: Weight

    def __post_init__(self):
        object.__setattr__(self, "j", frozenset(self.j))
        object.__setattr__(self, "roots", tuple(self.roots))


class SplitVerdict(Enum):
    INDECOMPOSABLE = "indecomposable"
    DECOMPOSABLE = "decomposable"


def is_lambda_adjusted(rs: RootSystem, delta_a, lam: Weight) -> bool:
    """Closure of Delta_0^+ with delta_a under root sums, plus (lam, beta) = 0
    whenever both signs of beta sit in delta_a."""
    delta_a = set(delta_a)
    stray = delta_a - set(rs.delta1)
    if stray:
        raise ValueError(
            f"delta_a contains non odd roots: {[rs.root_name(r) for r in stray]}")
    pool = [r.vector for r in rs.even_positive] + [r.vector for r in delta_a]
    allowed = set(pool)
    for u, v in itertools.combinations_with_replacement(pool, 2):
        s = u + v
        if rs.is_root(s) and s not in allowed:
            return False
    for r in delta_a:
        if rs.negate(r) in delta_a:
            if not rs.scalar_is_zero(rs.inner(lam, r.vector)):
                return False
    return True


def hypercubic_collections(rs: RootSystem, b: Borel, lam: Weight):
    """All subsets of isotropic simple indices that are pairwise orthogonal
    and orthogonal to lam, the empty set included."""
    candidates = []
    for i in b.isotropic_simple_indices():
        alpha = b.simple[i - 1]
        if rs.scalar_is_zero(rs.inner(lam, alpha.vector)):
            candidates.append(i)
    out = []
    for size in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, size):
            ok = True
            for i, j in itertools.combinations(combo, 2):
                prod = rs.inner(b.simple[i - 1].vector, b.simple[j - 1].vector)
                if not rs.scalar_is_zero(prod):
                    ok = False
                    break
            if not ok:
                continue
            sigma = zero_weight(len(rs.basis_names))
            for i in combo:
                sigma = sigma + b.simple[i - 1].vector
            out.append(HypercubicCollection(
                j=frozenset(combo),
                sigma=sigma,
                roots=tuple(b.simple[i - 1] for i in combo),
                lam=lam))
    out.sort(key=lambda c: (len(c.j), tuple(sorted(c.j))))
    return out


def reflect_along(rs: RootSystem, b: Borel, coll: HypercubicCollection) -> Borel:
    """r_J b: reflect at each collection root in turn.  Orthogonality keeps
    every remaining root simple along the way."""
    cur = b
    for r in coll.roots:
        idx = None
        for k, s in enumerate(cur.simple, start=1):
            if s.vector == r.vector:
                idx = k
                break
        assert idx is not None, "collection root lost simplicity"
        cur = odd_reflect(rs, cur, idx)
    return cur


def borel_meet_join(rs: RootSystem, b: Borel, coll: HypercubicCollection):
    """Odd parts of b intersect r_J b and b + r_J b."""
    pos = set(b.odd_positive)
    assert set(coll.roots) <= pos, "collection roots must be simple in b"
    meet = frozenset(pos - set(coll.roots))
    join = frozenset(pos | {rs.negate(r) for r in coll.roots})
    meet_a = AdjustedBorel(meet, b)
    join_a = AdjustedBorel(join, b)
    assert is_lambda_adjusted(rs, meet_a.delta_a, coll.lam)
    assert is_lambda_adjusted(rs, join_a.delta_a, coll.lam)
    return meet_a, join_a


def brick_decomposition_check(rs: RootSystem, b: Borel, lam: Weight,
                              coll: HypercubicCollection) -> bool:
    """ch M^{b cap r_J b}(lam) against the 4^|J| brick characters
    M^{b + r_J b}(lam - sigma_{J_1} + sigma_{J_2})."""
    meet_a, join_a = borel_meet_join(rs, b, coll)
    lhs = verma_character(rs, meet_a.delta_a, lam)
    roots = list(coll.roots)
    total = NumeratorCharacter({})
    n_bricks = 0
    for k1 in range(len(roots) + 1):
        for j1 in itertools.combinations(roots, k1):
            s1 = zero_weight(len(rs.basis_names))
            for r in j1:
                s1 = s1 + r.vector
            for k2 in range(len(roots) + 1):
                for j2 in itertools.combinations(roots, k2):
                    s2 = zero_weight(len(rs.basis_names))
                    for r in j2:
                        s2 = s2 + r.vector
                    brick = verma_character(
                        rs, join_a.delta_a, lam - s1 + s2)
                    total = char_add(total, brick)
                    n_bricks += 1
    assert n_bricks == 4 ** len(roots)
    return characters_equal(lhs, total)


def split_criterion(rs: RootSystem, b: Borel, lam: Weight, i: int) -> SplitVerdict:
    """Decomposability of M^{b cap r_alpha b}(lam) for a single isotropic
    simple root, with both exact-sequence character identities asserted."""
    if not (1 <= i <= len(b.simple)):
        raise NotIsotropicSimple(f"no simple root at index {i}")
    alpha = b.simple[i - 1]
    if not alpha.isotropic:
        raise NotIsotropicSimple(
            f"simple root {rs.root_name(alpha)} is not isotropic")
    meet = frozenset(set(b.odd_positive) - {alpha})
    c_meet = verma_character(rs, meet, lam)
    rb = odd_reflect(rs, b, i)
    av = alpha.vector
    down = char_add(verma_character(rs, set(rb.odd_positive), lam - av),
                    verma_character(rs, set(rb.odd_positive), lam))
    up = char_add(verma_character(rs, set(b.odd_positive), lam + av),
                  verma_character(rs, set(b.odd_positive), lam))
    assert characters_equal(c_meet, down)
    assert characters_equal(c_meet, up)
    if rs.scalar_is_zero(rs.inner(lam, av)):
        return SplitVerdict.INDECOMPOSABLE
    return SplitVerdict.DECOMPOSABLE


def semibrick_character_check(rs: RootSystem, bricks) -> bool:
    """No brick has weight-space overlap at another brick's highest weight."""
    for lam, c in bricks:
        if character_weight_multiplicity(rs, c, lam) != 1:
            raise ValueError("brick character must have multiplicity 1 "
                             "at its own highest weight")
    for (la, ca), (lb, cb) in itertools.permutations(bricks, 2):
        if character_weight_multiplicity(rs, ca, lb) != 0:
            return False
    return True
