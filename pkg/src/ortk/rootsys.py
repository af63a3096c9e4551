"""Root data, Borel subalgebras and odd reflections.

Supported families: gl(m|n), gl(1|1)^n, osp(2m+1|2n), osp(2m|2n) and
D(2,1;a).  The even Borel is fixed once per family; a Borel subalgebra
is identified with its set of positive odd roots.  Odd reflections at
isotropic simple roots walk between Borels, and the ordered simple
system is inherited along each reflection (the inherited order is
asserted to be path-independent during enumeration).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .numerics import (
    BilinearForm,
    NotInSpan,
    Scalar,
    Weight,
    expand_in_basis,
    inner_product,
    scalar,
    zero_weight,
)

__all__ = [
    "UnsupportedFamily",
    "NotIsotropicSimple",
    "PreconditionViolated",
    "Root",
    "RootSystem",
    "Borel",
    "build_root_system",
    "standard_borel",
    "odd_reflect",
    "enumerate_borels",
    "pure_positive_roots",
    "weyl_vector",
    "borel_from_partition",
    "partition_of_borel",
]


class UnsupportedFamily(ValueError):
    """Family tag outside the supported list, or bad parameters."""


class NotIsotropicSimple(ValueError):
    """Reflection requested at a simple root that is not odd isotropic."""


class PreconditionViolated(ValueError):
    """Stated hypothesis of the requested operation does not hold."""


@dataclass(frozen=True)
class Root:
    vector: Weight
    parity: str  # "even" or "odd"
    isotropic: bool

    def sort_key(self):
        return self.vector.sort_key()

    def __repr__(self):
        return f"Root({self.parity}, {self.vector!r})"


class RootSystem:
    """Immutable container for one family's root data.

    delta0/delta1 hold both signs of every root; even_positive and
    even_simple are fixed once (the even Borel never moves).  alpha_value
    is the optional rational specialization of the D(2,1;a) parameter and
    routes every zero test made through this object.
    """

    def __init__(
        self,
        family: str,
        params: tuple,
        basis_names: tuple[str, ...],
        form: BilinearForm,
        even_vectors: list[Weight],
        odd_vectors: list[Weight],
        standard_odd_positive: list[Weight],
        type_one: bool,
        alpha_value: Fraction | None,
    ):
        self.family = family
        self.params = params
        self.basis_names = basis_names
        self.form = form
        self.alpha_value = alpha_value
        self.type_one = type_one
        self.rank = len(basis_names)

        def mk_root(v: Weight, parity: str) -> Root:
            iso = parity == "odd" and self.scalar_is_zero(inner_product(v, v, form))
            return Root(v, parity, iso)

        self.delta0 = tuple(
            sorted((mk_root(v, "even") for v in even_vectors), key=Root.sort_key)
        )
        self.delta1 = tuple(
            sorted((mk_root(v, "odd") for v in odd_vectors), key=Root.sort_key)
        )
        self.delta_iso = tuple(r for r in self.delta1 if r.isotropic)
        self._by_vector = {r.vector: r for r in self.delta0 + self.delta1}
        if len(self._by_vector) != len(self.delta0) + len(self.delta1):
            raise UnsupportedFamily("duplicate root vectors in family data")

        pos_set = set(standard_odd_positive)
        self.even_positive = tuple(
            r for r in self.delta0 if self._is_standard_positive_even(r)
        )
        self.standard_odd_positive = tuple(
            r for r in self.delta1 if r.vector in pos_set
        )
        if len(self.standard_odd_positive) != len(pos_set):
            raise UnsupportedFamily("standard odd positives are not all roots")
        self.even_simple = _indecomposables(
            [r.vector for r in self.even_positive], self._by_vector
        )
        self._height_matrix = self._build_height_extension()
        self._names = {self.root_name(r): r for r in self.delta0 + self.delta1}
        self._kostant_memo: dict = {}
        self._borel_cache: tuple | None = None

    # -- construction helpers -------------------------------------------------

    def _is_standard_positive_even(self, r: Root) -> bool:
        key = r.vector.sort_key()
        return key > zero_weight(self.rank).sort_key()

    def _build_height_extension(self):
        """Complete even_simple to a basis by greedily appending unit vectors."""
        ext: list[Weight] = [r.vector for r in self.even_simple]
        n_simple = len(ext)
        for i in range(self.rank):
            unit = Weight(
                tuple(scalar(1 if j == i else 0) for j in range(self.rank))
            )
            try:
                expand_in_basis(unit, ext)
            except NotInSpan:
                ext.append(unit)
        return (ext, n_simple)

    # -- basic queries ---------------------------------------------------------

    def scalar_is_zero(self, x: Scalar) -> bool:
        return x.is_zero(self.alpha_value)

    def inner(self, v: Weight, w: Weight) -> Scalar:
        return inner_product(v, w, self.form)

    def root_from_vector(self, v: Weight) -> Root | None:
        return self._by_vector.get(v)

    def is_root(self, v: Weight) -> bool:
        return v in self._by_vector

    def negate(self, r: Root) -> Root:
        out = self._by_vector.get(-r.vector)
        if out is None:
            raise ValueError(f"negative of {r!r} is not a root")
        return out

    def root_name(self, r: Root) -> str:
        return self.vector_name(r.vector)

    def vector_name(self, v: Weight) -> str:
        parts = []
        for name, c in zip(self.basis_names, v.coords):
            if c.is_zero():
                continue
            if c.s != 0:
                raise ValueError("root names are only defined for rational vectors")
            q = c.r
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            coeff = "" if mag == 1 else str(mag)
            parts.append((sign, f"{coeff}{name}"))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = (first_sign if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += sign + term
        return out

    def root_by_name(self, name: str) -> Root:
        try:
            return self._names[name]
        except KeyError:
            raise ValueError(f"unknown root {name!r} for {self.family}") from None

    def even_height(self, v: Weight) -> Fraction | None:
        """Sum of even-simple coefficients, or None outside their span."""
        basis = [r.vector for r in self.even_simple]
        if not basis:
            return Fraction(0) if v.is_zero() else None
        try:
            coeffs = expand_in_basis(v, basis)
        except NotInSpan:
            return None
        if any(c.s != 0 for c in coeffs):
            return None
        return sum((c.r for c in coeffs), Fraction(0))

    def sort_height(self, v: Weight) -> Fraction:
        """even_height extended by zero on a fixed complement basis."""
        ext, n_simple = self._height_matrix
        coeffs = expand_in_basis(v, ext)
        return sum((c.r for c in coeffs[:n_simple]), Fraction(0))


def _indecomposables(vectors: list[Weight], lookup: dict) -> tuple[Root, ...]:
    """Elements not expressible as a sum of two members (repeats allowed)."""
    vecset = set(vectors)
    result = []
    for v in vectors:
        if not any((v - w) in vecset and not (v - w).is_zero() for w in vectors):
            result.append(lookup[v])
    return tuple(sorted(result, key=Root.sort_key, reverse=True))


@dataclass(frozen=True)
class Borel:
    """A Borel over the fixed even Borel: its positive odd roots.

    odd_positive is canonically sorted and is the identity of the Borel;
    simple carries the inherited total order on the simple system and is
    excluded from equality.
    """

    odd_positive: tuple[Root, ...]
    simple: tuple[Root, ...] = field(compare=False)

    def odd_set(self) -> frozenset[Root]:
        return frozenset(self.odd_positive)

    def isotropic_simple_indices(self) -> tuple[int, ...]:
        """1-based indices of the odd isotropic simple roots."""
        return tuple(
            i
            for i, r in enumerate(self.simple, start=1)
            if r.parity == "odd" and r.isotropic
        )


def _canonical_odd(roots) -> tuple[Root, ...]:
    return tuple(sorted(roots, key=Root.sort_key))


def _positive_roots(rs: RootSystem, odd_positive) -> list[Weight]:
    return [r.vector for r in rs.even_positive] + [r.vector for r in odd_positive]


def _simples_by_indecomposability(rs: RootSystem, odd_positive) -> tuple[Root, ...]:
    return _indecomposables(_positive_roots(rs, odd_positive), rs._by_vector)


def build_root_system(
    family: str,
    m: int | None = None,
    n: int | None = None,
    alpha: Fraction | None = None,
) -> RootSystem:
    """Construct the root data for one family.

    gl and osp families need m, n >= 1; gl11n needs n >= 1; d21alpha
    takes no sizes but accepts an optional rational specialization of
    the parameter (alpha outside {0, -1}).
    """
    if family in ("gl", "ospB", "ospD"):
        if not m or not n or m < 1 or n < 1:
            raise UnsupportedFamily(f"{family} needs m >= 1 and n >= 1")
    elif family == "gl11n":
        if not n or n < 1:
            raise UnsupportedFamily("gl11n needs n >= 1")
    elif family == "d21alpha":
        if alpha is not None and alpha in (0, -1):
            raise UnsupportedFamily("d21alpha parameter must avoid 0 and -1")
    else:
        raise UnsupportedFamily(f"unsupported family {family!r}")

    if family == "gl":
        rank = m + n
        names = tuple(f"e{i+1}" for i in range(m)) + tuple(f"d{j+1}" for j in range(n))
        form = BilinearForm(tuple(scalar(1) for _ in range(m)) + tuple(scalar(-1) for _ in range(n)))
        ge = _unit_builder(rank)
        evens = [ge(i) - ge(j) for i in range(m) for j in range(m) if i != j]
        evens += [ge(m + i) - ge(m + j) for i in range(n) for j in range(n) if i != j]
        odds = []
        for i in range(m):
            for j in range(n):
                odds.append(ge(i) - ge(m + j))
                odds.append(ge(m + j) - ge(i))
        std = [ge(i) - ge(m + j) for i in range(m) for j in range(n)]
        return RootSystem(family, (m, n), names, form, evens, odds, std, True, None)

    if family == "gl11n":
        rank = 2 * n
        names = tuple(f"e{i+1}" for i in range(n)) + tuple(f"d{j+1}" for j in range(n))
        form = BilinearForm(tuple(scalar(1) for _ in range(n)) + tuple(scalar(-1) for _ in range(n)))
        ge = _unit_builder(rank)
        odds = []
        std = []
        for i in range(n):
            pos = ge(i) - ge(n + (n - 1 - i))
            odds.append(pos)
            odds.append(-pos)
            std.append(pos)
        return RootSystem(family, (n,), names, form, [], odds, std, True, None)

    if family in ("ospB", "ospD"):
        rank = m + n
        names = tuple(f"e{i+1}" for i in range(m)) + tuple(f"d{j+1}" for j in range(n))
        form = BilinearForm(tuple(scalar(1) for _ in range(m)) + tuple(scalar(-1) for _ in range(n)))
        ge = _unit_builder(rank)
        evens = []
        for i in range(m):
            for j in range(i + 1, m):
                for s1 in (1, -1):
                    for s2 in (1, -1):
                        evens.append(ge(i).scaled(s1) + ge(j).scaled(s2))
        if family == "ospB":
            for i in range(m):
                evens.append(ge(i))
                evens.append(-ge(i))
        for i in range(n):
            for j in range(i + 1, n):
                for s1 in (1, -1):
                    for s2 in (1, -1):
                        evens.append(ge(m + i).scaled(s1) + ge(m + j).scaled(s2))
        for i in range(n):
            evens.append(ge(m + i).scaled(2))
            evens.append(ge(m + i).scaled(-2))
        odds = []
        std = []
        for i in range(m):
            for j in range(n):
                for s1 in (1, -1):
                    for s2 in (1, -1):
                        v = ge(i).scaled(s1) + ge(m + j).scaled(s2)
                        odds.append(v)
                        if s1 == 1:
                            std.append(v)
        if family == "ospB":
            for j in range(n):
                odds.append(ge(m + j))
                odds.append(-ge(m + j))
                std.append(ge(m + j))
        type_one = family == "ospD" and m == 1
        return RootSystem(family, (m, n), names, form, evens, odds, std, type_one, None)

    # d21alpha, basis order (delta, eps1, eps2)
    names = ("d", "e1", "e2")
    form = BilinearForm((scalar(-1, -1), scalar(1), scalar(0, 1)))
    ge = _unit_builder(3)
    evens = []
    for i in range(3):
        evens.append(ge(i).scaled(2))
        evens.append(ge(i).scaled(-2))
    odds = []
    std = []
    for s0 in (1, -1):
        for s1 in (1, -1):
            for s2 in (1, -1):
                v = ge(0).scaled(s0) + ge(1).scaled(s1) + ge(2).scaled(s2)
                odds.append(v)
                if s0 == 1:
                    std.append(v)
    return RootSystem("d21alpha", (), names, form, evens, odds, std, False, alpha)


def _unit_builder(rank: int):
    def ge(i: int) -> Weight:
        return Weight(tuple(scalar(1 if j == i else 0) for j in range(rank)))

    return ge


def standard_borel(rs: RootSystem) -> Borel:
    odd = _canonical_odd(rs.standard_odd_positive)
    simples = _simples_by_indecomposability(rs, odd)
    return Borel(odd, simples)


def odd_reflect(rs: RootSystem, b: Borel, i: int) -> Borel:
    """Reflect b at its i-th simple root (1-based).

    The root must be odd isotropic.  The new simple system keeps the
    index order: the reflected root becomes its own negative, any beta
    with alpha+beta a root moves to alpha+beta, everything else stays.
    """
    if not 1 <= i <= len(b.simple):
        raise NotIsotropicSimple(f"no simple root at index {i}")
    alpha = b.simple[i - 1]
    if alpha.parity != "odd" or not alpha.isotropic:
        raise NotIsotropicSimple(
            f"simple root {rs.root_name(alpha)} at index {i} is not odd isotropic"
        )
    new_simple = []
    for beta in b.simple:
        if beta == alpha:
            new_simple.append(rs.negate(alpha))
            continue
        summed = alpha.vector + beta.vector
        if rs.is_root(summed):
            new_simple.append(rs.root_from_vector(summed))
        else:
            new_simple.append(beta)
    new_odd = set(b.odd_positive)
    new_odd.discard(alpha)
    new_odd.add(rs.negate(alpha))
    out = Borel(_canonical_odd(new_odd), tuple(new_simple))
    expected = set(_simples_by_indecomposability(rs, out.odd_positive))
    if set(out.simple) != expected:
        raise AssertionError(
            "inherited simple system disagrees with indecomposables at "
            f"{[rs.root_name(r) for r in out.simple]}"
        )
    return out


def enumerate_borels(rs: RootSystem) -> tuple[list[Borel], list[tuple[int, int, int]]]:
    """All Borels reachable by odd reflections, plus the reflection edges.

    Breadth-first from the standard Borel; within each layer Borels are
    ordered by their canonical odd-positive set, and ranks are assigned
    in discovery order.  Each undirected edge (u, i, v) is listed once,
    with i the 1-based simple index at the earlier endpoint.  Re-reaching
    a Borel along a second path asserts that the inherited simple order
    is path-independent.
    """
    if rs._borel_cache is not None:
        return rs._borel_cache
    start = standard_borel(rs)
    borels = [start]
    rank_of = {start: 0}
    simple_of = {start: start.simple}
    edges: list[tuple[int, int, int]] = []
    seen_pairs: set[tuple[int, int]] = set()
    frontier = [start]
    while frontier:
        discovered: dict[Borel, Borel] = {}
        pending: list[tuple[int, int, Borel]] = []
        for b in frontier:
            u = rank_of[b]
            for i in b.isotropic_simple_indices():
                nb = odd_reflect(rs, b, i)
                if nb in rank_of:
                    if simple_of[nb] != nb.simple:
                        raise AssertionError("simple order depends on the path taken")
                elif nb in discovered:
                    if discovered[nb].simple != nb.simple:
                        raise AssertionError("simple order depends on the path taken")
                else:
                    discovered[nb] = nb
                pending.append((u, i, nb))
        layer = sorted(
            discovered,
            key=lambda x: tuple(r.sort_key() for r in x.odd_positive),
        )
        for nb in layer:
            rank_of[nb] = len(borels)
            simple_of[nb] = nb.simple
            borels.append(nb)
        for u, i, nb in pending:
            v = rank_of[nb]
            pair = (min(u, v), max(u, v))
            if pair not in seen_pairs:
                seen_pairs.add(pair)
                edges.append((u, i, v))
        frontier = layer
    sizes = {len(b.simple) for b in borels}
    if len(sizes) != 1:
        raise AssertionError("simple system size varies between Borels")
    rs._borel_cache = (borels, edges)
    return rs._borel_cache


def pure_positive_roots(
    rs: RootSystem, borels: list[Borel]
) -> tuple[frozenset[Root], frozenset[Root]]:
    """Roots positive for every Borel, and the isotropic ones among them."""
    common = set(borels[0].odd_positive)
    for b in borels[1:]:
        common &= b.odd_set()
    pure = frozenset(rs.even_positive) | frozenset(common)
    pure_iso = frozenset(r for r in pure if r.parity == "odd" and r.isotropic)
    return pure, pure_iso


def weyl_vector(rs: RootSystem, b: Borel) -> Weight:
    total = zero_weight(rs.rank)
    for r in rs.even_positive:
        total = total + r.vector
    for r in b.odd_positive:
        total = total - r.vector
    return total.scaled(Fraction(1, 2))


# -- gl Borel <-> Young diagram dictionary -------------------------------------


def _require_gl(rs: RootSystem):
    if rs.family != "gl":
        raise UnsupportedFamily("partition addressing is specific to gl(m|n)")


def borel_from_partition(rs: RootSystem, parts: tuple[int, ...]) -> Borel:
    """Borel whose flipped odd roots are the boxes of the diagram.

    parts lists row lengths bottom-up; row j, column c holds the root
    e_{m+1-c} - d_j, flipped to d_j - e_{m+1-c} when the box is present.
    """
    _require_gl(rs)
    m, n = rs.params
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise ValueError(f"row lengths must be weakly decreasing, got {parts}")
    if len(parts) > n or any(p < 0 or p > m for p in parts):
        raise ValueError(f"partition {parts} does not fit the {m}x{n} box")
    ge = _unit_builder(rs.rank)
    odd = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            col = m + 1 - i
            row_len = parts[j - 1] if j - 1 < len(parts) else 0
            v = ge(i - 1) - ge(m + j - 1)
            if col <= row_len:
                v = -v
            odd.append(rs.root_from_vector(v))
    odd = _canonical_odd(odd)
    return Borel(odd, _simples_by_indecomposability(rs, odd))


def partition_of_borel(rs: RootSystem, b: Borel) -> tuple[int, ...]:
    _require_gl(rs)
    m, n = rs.params
    flipped = set()
    ge = _unit_builder(rs.rank)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if rs.root_from_vector(ge(m + j - 1) - ge(i - 1)) in b.odd_set():
                flipped.add((j, m + 1 - i))
    rows = []
    for j in range(1, n + 1):
        cols = sorted(c for (row, c) in flipped if row == j)
        if cols != list(range(1, len(cols) + 1)):
            raise AssertionError(f"flipped boxes of row {j} are not left-justified")
        rows.append(len(cols))
    if any(rows[k] < rows[k + 1] for k in range(n - 1)):
        raise AssertionError("flipped boxes do not form a partition")
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)
