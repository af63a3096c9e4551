"""Exact formal characters over the fixed even denominator.

A character is stored as its numerator: a finite integer combination of
exponentials e^w, understood over the common denominator
prod_{gamma in Delta_0^+} (1 - e^{-gamma}).  All identities the package
checks are then finite polynomial identities between numerators.

Weight multiplicities are computed independently through Kostant
partition counts, which also back the cone-membership tests.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass
from fractions import Fraction

from .numerics import (
    NotInSpan,
    Scalar,
    SingularBasis,
    Weight,
    expand_in_basis,
    render_weight,
)
from .rootsys import Borel, Root, RootSystem

__all__ = [
    "UnboundedCone",
    "NumeratorCharacter",
    "MultiplicityQuery",
    "verma_character",
    "characters_equal",
    "char_add",
    "char_scale",
    "char_shift",
    "kostant_partitions",
    "weight_multiplicity",
    "character_weight_multiplicity",
    "cone_membership",
    "kac_flag_constituents",
    "total_dimension",
    "character_to_json",
]


class UnboundedCone(ValueError):
    """The given root set admits no positive height functional."""


@dataclass
class NumeratorCharacter:
    """Numerator of a character over the fixed even denominator."""

    terms: dict

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c != 0}

    def coefficient(self, w: Weight) -> int:
        return self.terms.get(w, 0)


def verma_character(rs: RootSystem, delta_a, lam: Weight) -> NumeratorCharacter:
    """Numerator of ch M^a(lam): e^lam prod_{odd beta not in delta_a}(1+e^beta).

    delta_a = the odd part of the adjusted Borel; the ordinary Verma for
    a Borel b uses delta_a = its positive odd roots, induction from the
    even subalgebra uses delta_a = empty set.
    """
    delta_a = set(delta_a)
    odd = set(rs.delta1)
    stray = delta_a - odd
    if stray:
        raise ValueError(
            f"delta_a contains non odd roots: {[rs.root_name(r) for r in stray]}")
    factors = sorted((r.vector for r in odd - delta_a),
                     key=lambda v: v.sort_key())
    terms = {lam: 1}
    for beta in factors:
        shifted = {w + beta: c for w, c in terms.items()}
        for w, c in shifted.items():
            terms[w] = terms.get(w, 0) + c
    return NumeratorCharacter(terms)


def characters_equal(c1: NumeratorCharacter, c2: NumeratorCharacter) -> bool:
    return c1.terms == c2.terms


def char_add(c1: NumeratorCharacter, c2: NumeratorCharacter) -> NumeratorCharacter:
    terms = dict(c1.terms)
    for w, c in c2.terms.items():
        terms[w] = terms.get(w, 0) + c
    return NumeratorCharacter(terms)


def char_scale(c: NumeratorCharacter, k: int) -> NumeratorCharacter:
    return NumeratorCharacter({w: k * x for w, x in c.terms.items()})


def char_shift(c: NumeratorCharacter, v: Weight) -> NumeratorCharacter:
    return NumeratorCharacter({w + v: x for w, x in c.terms.items()})


def _scalar_value(x: Scalar, alpha_value) -> Fraction | None:
    """Numeric value of a coefficient; None when it stays symbolic."""
    if x.s == 0:
        return x.r
    if alpha_value is not None:
        return x.r + x.s * alpha_value
    return None


def _even_coords(rs: RootSystem, v: Weight):
    """Coordinates of v in the even simple basis, or None outside it."""
    basis = [r.vector for r in rs.even_simple]
    if not basis:
        return () if v.is_zero(rs.alpha_value) else None
    try:
        coeffs = expand_in_basis(v, basis)
    except (NotInSpan, SingularBasis):
        return None
    out = []
    for c in coeffs:
        val = _scalar_value(c, rs.alpha_value)
        if val is None:
            return None
        out.append(val)
    return tuple(out)


def _even_root_table(rs: RootSystem):
    """Even positive roots in even-simple coordinates, cached per system."""
    table = rs._kostant_memo.get("roots")
    if table is None:
        table = []
        for gamma in rs.even_positive:
            coords = _even_coords(rs, gamma.vector)
            assert coords is not None
            ints = tuple(int(c) for c in coords)
            assert all(Fraction(i) == c for i, c in zip(ints, coords))
            assert all(i >= 0 for i in ints) and sum(ints) >= 1
            table.append(ints)
        table.sort(reverse=True)
        rs._kostant_memo["roots"] = table
    return table


def kostant_partitions(rs: RootSystem, v: Weight) -> int:
    """Number of ways to write v as a nonnegative integer combination of
    the even positive roots."""
    coords = _even_coords(rs, v)
    if coords is None:
        return 0
    if any(c.denominator != 1 or c < 0 for c in coords):
        return 0
    key = tuple(int(c) for c in coords)
    roots = _even_root_table(rs)
    memo = rs._kostant_memo

    def count(rem, i):
        if not any(rem):
            return 1
        if i == len(roots):
            return 0
        state = (rem, i)
        hit = memo.get(state)
        if hit is not None:
            return hit
        total = count(rem, i + 1)
        cur = rem
        root = roots[i]
        while True:
            cur = tuple(a - b for a, b in zip(cur, root))
            if any(a < 0 for a in cur):
                break
            total += count(cur, i + 1)
        memo[state] = total
        return total

    return count(key, 0)


@dataclass(frozen=True)
class MultiplicityQuery:
    """Weight multiplicity query for a PBW-style character.

    free_odd: the signed odd roots whose root vectors may appear at most
    once; base: the leading exponent; target: the queried weight.
    """

    free_odd: frozenset
    base: Weight
    target: Weight

    def __post_init__(self):
        object.__setattr__(self, "free_odd", frozenset(self.free_odd))


def weight_multiplicity(rs: RootSystem, q: MultiplicityQuery) -> int:
    stray = set(q.free_odd) - set(rs.delta1)
    if stray:
        raise ValueError("free_odd must consist of odd roots")
    odd = sorted(q.free_odd, key=lambda r: r.sort_key())
    head = q.base - q.target
    total = 0
    for take in range(len(odd) + 1):
        for combo in itertools.combinations(odd, take):
            v = head
            for r in combo:
                v = v + r.vector
            total += kostant_partitions(rs, v)
    return total


def character_weight_multiplicity(rs: RootSystem, c: NumeratorCharacter,
                                  mu: Weight) -> int:
    """Coefficient of e^mu in the expanded character numerator/denominator."""
    return sum(coeff * kostant_partitions(rs, w - mu)
               for w, coeff in c.terms.items())


def cone_membership(rs: RootSystem, v: Weight, roots, pbw: bool = False) -> bool:
    """Is v a nonnegative integer combination of the given roots?

    With pbw=True the odd roots are capped at multiplicity one, matching
    PBW monomials.  The root set must admit a positive height functional
    (built from its own indecomposable elements); otherwise the search
    could run forever and UnboundedCone is raised.
    """
    roots = sorted(set(roots), key=lambda r: r.sort_key(), reverse=True)
    if not roots:
        return v.is_zero(rs.alpha_value)
    vecs = [r.vector for r in roots]
    vecset = set(vecs)
    indec = []
    for w in vecs:
        # roots are nonzero, so w - u lands in vecset only for a real split
        if not any((w - u) in vecset for u in vecs):
            indec.append(w)

    def phi(u: Weight) -> Fraction | None:
        try:
            coeffs = expand_in_basis(u, indec)
        except (NotInSpan, SingularBasis):
            return None
        total = Fraction(0)
        for c in coeffs:
            val = _scalar_value(c, rs.alpha_value)
            if val is None:
                return None
            total += val
        return total

    for r, w in zip(roots, vecs):
        h = phi(w)
        if h is None or h <= 0:
            raise UnboundedCone(
                f"no positive height functional: root {rs.root_name(r)}")

    memo = {}

    def search(rem: Weight, i: int) -> bool:
        if rem.is_zero(rs.alpha_value):
            return True
        if i == len(roots):
            return False
        state = (rem, i)
        hit = memo.get(state)
        if hit is not None:
            return hit
        h = phi(rem)
        if h is None or h < 0:
            memo[state] = False
            return False
        root = roots[i]
        cap = None
        if pbw and root.parity == "odd":
            cap = 1
        ok = search(rem, i + 1)
        cur = rem
        k = 0
        while not ok:
            cur = cur - root.vector
            k += 1
            if cap is not None and k > cap:
                break
            hc = phi(cur)
            if hc is None or hc < 0:
                break
            ok = search(cur, i + 1)
        memo[state] = ok
        return ok

    return search(v, 0)


def kac_flag_constituents(rs: RootSystem, b: Borel, lam: Weight):
    """Highest weights of the Verma flag of Ind M_0(lam), with
    multiplicity, ordered by height then coordinates."""
    odd_pos = sorted(b.odd_positive, key=lambda r: r.sort_key())
    out = []
    for take in range(len(odd_pos) + 1):
        for combo in itertools.combinations(odd_pos, take):
            w = lam
            for r in combo:
                w = w + r.vector
            out.append(w)
    out.sort(key=lambda w: (rs.sort_height(w), w.sort_key()))
    return out


def total_dimension(c: NumeratorCharacter, rs: RootSystem):
    """Sum of coefficients when the even denominator is trivial; None
    marks an infinite-dimensional character."""
    if rs.even_positive:
        return None
    return sum(c.terms.values())


def character_to_json(rs: RootSystem, c: NumeratorCharacter):
    items = sorted(c.terms.items(),
                   key=lambda kv: (rs.sort_height(kv[0]), kv[0].sort_key()))
    return [{"weight": render_weight(w), "coeff": coeff} for w, coeff in items]
