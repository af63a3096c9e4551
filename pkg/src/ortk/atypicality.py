"""Typicality tests and the S1 singleton classifier.

The classifier reports three certified sets over the isotropic roots:
members forced in by the simple-root and non-pure criteria (plus the
even-root witness route for pure roots), members forced out by the
positivity bound, and the undecided remainder.  Emptiness of S1 is
settled exactly for type I families and for D(2,1;alpha).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .characters import MultiplicityQuery, cone_membership, weight_multiplicity
from .numerics import Weight, zero_weight
from .rootsys import (
    Borel,
    PreconditionViolated,
    Root,
    RootSystem,
    enumerate_borels,
    pure_positive_roots,
    weyl_vector,
)

__all__ = [
    "Emptiness",
    "S1Classification",
    "is_typical",
    "s1_classify",
    "simple_even_witness",
]


class Emptiness(Enum):
    EMPTY = "empty"
    NONEMPTY = "nonempty"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class S1Classification:
    certified_in: frozenset
    certified_out: frozenset
    unknown: frozenset
    emptiness_verdict: Emptiness


def is_typical(rs: RootSystem, b: Borel, lam: Weight) -> bool:
    """No isotropic root pairs to zero with lam + rho^b."""
    shifted = lam + weyl_vector(rs, b)
    return all(not rs.scalar_is_zero(rs.inner(shifted, r.vector))
               for r in rs.delta_iso)


def _gamma_grid(rs: RootSystem, bound):
    """Nonnegative combinations of even positive roots with height up to
    bound, in (height, coordinates) order."""
    zero = zero_weight(len(rs.basis_names))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for gamma in rs.even_positive:
                u = v + gamma.vector
                if u not in seen and rs.sort_height(u) <= bound:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen, key=lambda v: (rs.sort_height(v), v.sort_key()))


def simple_even_witness(rs: RootSystem, beta: Root, lam: Weight,
                        gamma_bound: int = 4):
    """Search for (bbar, gamma) certifying the pure root beta.

    lam is the shift-free weight: the module in question is
    M^bbar(lam - rho^bbar).  Returns the first pair, in Borel
    enumeration order then gamma order, with
      gamma - beta outside the positive cone of bbar,
      (beta, rho^bbar + gamma) = 0,
      weight multiplicity one at lam - rho^bbar - beta - gamma;
    or None when the bounded search is exhausted.
    """
    borels, _ = enumerate_borels(rs)
    _, pure_iso = pure_positive_roots(rs, borels)
    if beta not in pure_iso:
        raise PreconditionViolated(
            f"{rs.root_name(beta)} is not a pure positive isotropic root")
    if not rs.scalar_is_zero(rs.inner(lam, beta.vector)):
        raise PreconditionViolated(
            f"lambda is not orthogonal to {rs.root_name(beta)}")
    grid = _gamma_grid(rs, gamma_bound)
    for bbar in borels:
        rho = weyl_vector(rs, bbar)
        cone_roots = list(rs.even_positive) + list(bbar.odd_positive)
        free = frozenset(rs.negate(r) for r in bbar.odd_positive)
        base = lam - rho
        for gamma in grid:
            if not rs.scalar_is_zero(rs.inner(beta.vector, rho + gamma)):
                continue
            if cone_membership(rs, gamma - beta.vector, cone_roots):
                continue
            target = base - beta.vector - gamma
            if weight_multiplicity(
                    rs, MultiplicityQuery(free, base, target)) == 1:
                return bbar, gamma
    return None


def s1_classify(rs: RootSystem, b: Borel, lam: Weight,
                gamma_bound: int = 4) -> S1Classification:
    """Certified bounds for S1 of the module with highest weight lam."""
    rho = weyl_vector(rs, b)
    shifted = lam + rho
    pos = {r for r in b.odd_positive if r.isotropic}
    borels, _ = enumerate_borels(rs)
    _, pure_iso = pure_positive_roots(rs, borels)
    simples = {b.simple[i - 1] for i in b.isotropic_simple_indices()}
    cin, cout = set(), set()
    for r in rs.delta_iso:
        if r not in pos:
            cout.add(r)
            continue
        orthogonal = rs.scalar_is_zero(rs.inner(shifted, r.vector))
        if r in simples:
            # on simples (lam, alpha) = (lam + rho, alpha)
            if rs.scalar_is_zero(rs.inner(lam, r.vector)):
                cin.add(r)
            else:
                cout.add(r)
        elif r in pure_iso:
            if orthogonal and simple_even_witness(
                    rs, r, shifted, gamma_bound) is not None:
                cin.add(r)
        elif orthogonal:
            cin.add(r)
    unknown = set(rs.delta_iso) - cin - cout
    assert not (cin & cout)
    if cin:
        verdict = Emptiness.NONEMPTY
    elif rs.type_one or rs.family == "d21alpha":
        verdict = (Emptiness.EMPTY if is_typical(rs, b, lam)
                   else Emptiness.NONEMPTY)
    else:
        verdict = Emptiness.UNDETERMINED
    return S1Classification(frozenset(cin), frozenset(cout),
                            frozenset(unknown), verdict)
