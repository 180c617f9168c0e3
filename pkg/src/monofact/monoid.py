"""Finitely generated reduced abelian monoids and exact factorization search.

A monoid S is presented by generators a_1, ..., a_n living in Z^m + T,
where T = Z/t_1 + ... + Z/t_k is a finite torsion group.  S is *reduced*
when its only unit is 0; for these presentations that is equivalent to

  (a) no generator has zero free part, and
  (b) the cone spanned by the free parts pi(a_i) in Q^m is pointed.

Pointedness hands us a *pointing vector* w in Z^m with w . pi(a_i) >= 1
for every generator.  The integer w . pi(x) then bounds the length of any
factorization of x, which makes membership and the set of all
factorizations finitely searchable: a depth-first search over exponent
vectors pruned by remaining weight, with torsion congruences checked at
the leaves.

All arithmetic is exact (Python integers and Fractions); nothing here
floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from math import gcd

from .errors import DimensionMismatch, InvalidInput, NotInMonoid, NotReduced
from .intlinalg import dot
from .ratlp import in_cone, positive_functional, zero_combination


@dataclass(frozen=True)
class TorsionSpec:
    """The torsion part Z/t_1 + ... + Z/t_k; moduli all >= 2."""

    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(t) for t in self.moduli))
        if any(t < 2 for t in self.moduli):
            raise InvalidInput("torsion moduli must all be >= 2")

    def reduce(self, residues) -> tuple[int, ...]:
        if len(residues) != len(self.moduli):
            raise DimensionMismatch("torsion residue count does not match moduli")
        return tuple(r % t for r, t in zip(residues, self.moduli))

    def __len__(self):
        return len(self.moduli)


@dataclass(frozen=True)
class GroupElement:
    """An element of Z^m + T.  Torsion residues are kept reduced mod t_j."""

    free: tuple[int, ...]
    torsion: tuple[int, ...] = ()
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "free", tuple(int(a) for a in self.free))
        object.__setattr__(self, "moduli", tuple(int(t) for t in self.moduli))
        if len(self.torsion) != len(self.moduli):
            raise DimensionMismatch("torsion residue count does not match moduli")
        object.__setattr__(
            self, "torsion", tuple(int(r) % t for r, t in zip(self.torsion, self.moduli))
        )

    @property
    def rank(self) -> int:
        return len(self.free)

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.free) and all(r == 0 for r in self.torsion)

    def _check(self, other: "GroupElement"):
        if self.rank != other.rank or self.moduli != other.moduli:
            raise DimensionMismatch("elements live in different groups")

    def __add__(self, other):
        self._check(other)
        return GroupElement(
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
            self.moduli,
        )

    def __sub__(self, other):
        self._check(other)
        return GroupElement(
            tuple(a - b for a, b in zip(self.free, other.free)),
            tuple(a - b for a, b in zip(self.torsion, other.torsion)),
            self.moduli,
        )

    def __mul__(self, c: int):
        return GroupElement(
            tuple(c * a for a in self.free), tuple(c * r for r in self.torsion), self.moduli
        )

    __rmul__ = __mul__

    def sort_key(self):
        return (self.free, self.torsion)

    def to_data(self):
        """JSON shape: a bare integer for rank-1 torsion-free elements,
        otherwise the flat [free..., torsion...] list."""
        if self.rank == 1 and not self.moduli:
            return self.free[0]
        return list(self.free) + list(self.torsion)


@dataclass(frozen=True)
class Factorization:
    """A vector of generator multiplicities; its length is the coordinate sum."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if any(c < 0 for c in self.coeffs):
            raise InvalidInput("factorization coefficients must be nonnegative")

    @property
    def length(self) -> int:
        return sum(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class Cone:
    """A rational cone recorded by its extremal rays (primitive, sorted)."""

    rays: tuple[tuple[int, ...], ...]


def primitive(vector) -> tuple[int, ...]:
    g = 0
    for a in vector:
        g = gcd(g, a)
    if g == 0:
        return tuple(vector)
    return tuple(a // g for a in vector)


@dataclass(frozen=True)
class MonoidPresentation:
    """Generators of S inside Z^rank + torsion.

    ``validated`` is set by :func:`validate_reduced`; operations that need a
    reduced presentation validate on demand when the flag is unset.
    Minimality of the generating set is never silently enforced.
    """

    rank: int
    torsion: TorsionSpec
    generators: tuple[GroupElement, ...]
    validated: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.rank < 0:
            raise InvalidInput("rank must be nonnegative")
        if not self.generators:
            raise InvalidInput("at least one generator is required")
        for g in self.generators:
            if g.rank != self.rank or g.moduli != self.torsion.moduli:
                raise DimensionMismatch("generator shape does not match presentation")
            if g.is_zero:
                raise InvalidInput("the zero element cannot be a generator")

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def is_numerical(self) -> bool:
        return self.rank == 1 and not self.torsion.moduli and all(
            g.free[0] > 0 for g in self.generators
        )

    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank, (0,) * len(self.torsion), self.torsion.moduli)

    def element(self, free, torsion=()) -> GroupElement:
        if len(free) != self.rank:
            raise DimensionMismatch("free part has wrong length")
        return GroupElement(tuple(free), tuple(torsion), self.torsion.moduli)

    def evaluate(self, coeffs) -> GroupElement:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.n:
            raise DimensionMismatch("coefficient vector has wrong length")
        out = self.zero()
        for c, g in zip(coeffs, self.generators):
            if c:
                out = out + c * g
        return out

    @cached_property
    def pointing(self) -> tuple[int, ...]:
        """A pointing vector; computing it re-proves reducedness."""
        validated = self if self.validated else validate_reduced(self)
        if validated is not self:
            return validated.pointing
        w = positive_functional([g.free for g in self.generators])
        return tuple(w)

    @cached_property
    def weights(self) -> tuple[int, ...]:
        w = self.pointing
        return tuple(dot(w, g.free) for g in self.generators)

    def weight_of(self, x: GroupElement) -> int:
        return dot(self.pointing, x.free)


def presentation(rank: int, torsion=(), generators=()) -> MonoidPresentation:
    """Build an unvalidated presentation from raw integer data.

    Each generator is a flat sequence: ``rank`` free coordinates followed by
    one residue per torsion modulus.
    """
    tspec = TorsionSpec(tuple(torsion))
    k = len(tspec)
    gens = []
    for raw in generators:
        raw = tuple(int(a) for a in raw)
        if len(raw) != rank + k:
            raise DimensionMismatch(
                f"generator {raw} has length {len(raw)}, expected {rank + k}"
            )
        gens.append(GroupElement(raw[:rank], raw[rank:], tspec.moduli))
    return MonoidPresentation(rank, tspec, tuple(gens))


def numerical(values) -> MonoidPresentation:
    """Rank-1 torsion-free presentation from positive integers."""
    vals = [int(v) for v in values]
    if any(v <= 0 for v in vals):
        raise InvalidInput("numerical generators must be positive")
    return presentation(1, (), [(v,) for v in vals])


def presentation_from_data(obj) -> MonoidPresentation:
    """Parse the JSON input shapes.

    Accepts ``{"numerical": [a1, ...]}`` or
    ``{"rank": m, "torsion": [t1, ...], "generators": [[...], ...]}``.
    """
    if not isinstance(obj, dict):
        raise InvalidInput("presentation must be a JSON object")
    if "numerical" in obj:
        vals = obj["numerical"]
        if not isinstance(vals, list) or not vals:
            raise InvalidInput("numerical presentation needs a nonempty list")
        return numerical(vals)
    try:
        rank = int(obj["rank"])
        gens = obj["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed presentation object: {exc}") from None
    torsion = obj.get("torsion", [])
    if not isinstance(gens, list) or not gens:
        raise InvalidInput("generators must be a nonempty list")
    return presentation(rank, torsion, gens)


def element_from_data(p: MonoidPresentation, obj) -> GroupElement:
    """GroupElement from its serialized form.

    A bare integer (or decimal string) works for a rank-1 torsion-free
    monoid; otherwise a flat [free..., torsion...] list is expected.
    """
    if isinstance(obj, GroupElement):
        if len(obj.free) != p.rank or obj.moduli != p.torsion.moduli:
            raise DimensionMismatch("element belongs to a different ambient group")
        return obj
    k = len(p.torsion)
    if isinstance(obj, bool):
        raise InvalidInput("element data must be numeric")
    if isinstance(obj, (int, str)):
        if p.rank == 1 and k == 0:
            try:
                return p.element((int(obj),))
            except ValueError:
                raise InvalidInput(f"cannot parse element from {obj!r}") from None
        raise InvalidInput("scalar element data needs a rank-1 torsion-free monoid")
    try:
        vals = [int(v) for v in obj]
    except (TypeError, ValueError):
        raise InvalidInput(f"cannot parse element from {obj!r}") from None
    if len(vals) != p.rank + k:
        raise InvalidInput("element data has wrong length")
    return p.element(vals[: p.rank], vals[p.rank :])


def validate_reduced(p: MonoidPresentation, minimalize: bool = False) -> MonoidPresentation:
    """Check that the presentation is reduced; return a validated copy.

    Raises :class:`NotReduced` with a witness otherwise: a generator whose
    free part vanishes, or a nonzero nonnegative combination of free parts
    summing to zero.  With ``minimalize=True`` redundant generators (those
    lying in the monoid spanned by the others) are dropped.
    """
    seen = set()
    for g in p.generators:
        if (g.free, g.torsion) in seen:
            raise InvalidInput(f"duplicate generator {g.to_data()}")
        seen.add((g.free, g.torsion))
    for i, g in enumerate(p.generators):
        if all(a == 0 for a in g.free):
            raise NotReduced(
                f"generator {i} lies in the torsion subgroup", generator=g
            )
    free_parts = [g.free for g in p.generators]
    w = positive_functional(free_parts)
    if w is None:
        witness = zero_combination(free_parts)
        raise NotReduced(
            "cone of free parts is not pointed", combination=tuple(witness)
        )
    out = replace(p, validated=True)
    out.__dict__["pointing"] = tuple(w)
    if minimalize:
        kept = list(out.generators)
        order = sorted(range(len(kept)), key=lambda i: (dot(w, kept[i].free), kept[i].sort_key()), reverse=True)
        for i in order:
            rest = [g for j, g in enumerate(kept) if j != i and g is not None]
            if not rest:
                continue
            sub = replace(out, generators=tuple(rest), validated=True)
            sub.__dict__["pointing"] = tuple(w)
            if member(sub, kept[i]) is not None:
                kept[i] = None
        out = replace(out, generators=tuple(g for g in kept if g is not None), validated=True)
        out.__dict__["pointing"] = tuple(w)
    return out


def _validated(p: MonoidPresentation) -> MonoidPresentation:
    return p if p.validated else validate_reduced(p)


def pointing_vector(p: MonoidPresentation) -> tuple[int, ...]:
    return _validated(p).pointing


def extremal_rays(vectors) -> Cone:
    """Extremal rays of the cone spanned by ``vectors`` (assumed pointed).

    A direction is extremal iff its primitive vector is not a nonnegative
    combination of the input vectors pointing elsewhere.
    """
    prims = []
    for v in vectors:
        if any(a != 0 for a in v):
            pv = primitive(v)
            if pv not in prims:
                prims.append(pv)
    rays = []
    for pv in prims:
        others = [v for v in vectors if any(a != 0 for a in v) and primitive(v) != pv]
        if not in_cone(others, pv):
            rays.append(pv)
    return Cone(tuple(sorted(rays)))


def cones_equal(p: MonoidPresentation, elements) -> bool:
    """Whether cone(pi(b) for b in elements) equals the cone of S.

    Equivalent to every extremal ray of the generator cone carrying the
    free part of some b.
    """
    p = _validated(p)
    cone = extremal_rays([g.free for g in p.generators])
    directions = {primitive(b.free) for b in elements if any(a != 0 for a in b.free)}
    return all(ray in directions for ray in cone.rays)


def _search(p: MonoidPresentation, x: GroupElement, find_all: bool):
    p = _validated(p)
    if x.rank != p.rank or x.moduli != p.torsion.moduli:
        raise DimensionMismatch("element shape does not match presentation")
    total = p.weight_of(x)
    results: list[tuple[int, ...]] = []
    if total < 0:
        return results
    weights = p.weights
    n = p.n
    idxs = sorted(range(n), key=lambda i: (-weights[i], i))
    gens = [p.generators[i] for i in idxs]
    coeffs = [0] * n

    def leaf_ok(rem: GroupElement) -> bool:
        return rem.is_zero

    def rec(pos: int, rem: GroupElement, rem_weight: int) -> bool:
        if pos == n:
            if rem_weight == 0 and leaf_ok(rem):
                out = [0] * n
                for k, i in enumerate(idxs):
                    out[i] = coeffs[k]
                results.append(tuple(out))
                return not find_all
            return False
        g = gens[pos]
        u = weights[idxs[pos]]
        cmax = rem_weight // u
        cur = rem
        for c in range(cmax + 1):
            coeffs[pos] = c
            if rec(pos + 1, cur, rem_weight - c * u):
                return True
            cur = cur - g
        coeffs[pos] = 0
        return False

    rec(0, x, total)
    return results


def member(p: MonoidPresentation, x: GroupElement):
    """Some factorization of x over the generators, or None."""
    found = _search(p, x, find_all=False)
    if not found:
        return None
    return Factorization(found[0])


def all_factorizations(p: MonoidPresentation, x: GroupElement) -> list[Factorization]:
    """Every factorization of x, in lexicographic coefficient order."""
    found = _search(p, x, find_all=True)
    return [Factorization(c) for c in sorted(found)]


def require_member(p: MonoidPresentation, x: GroupElement) -> Factorization:
    f = member(p, x)
    if f is None:
        raise NotInMonoid(f"{x.to_data()} is not in the monoid")
    return f


def is_minimal_generating(p: MonoidPresentation) -> bool:
    """Whether no generator lies in the monoid spanned by the others."""
    p = _validated(p)
    if p.n == 1:
        return True
    for i in range(p.n):
        rest = tuple(g for j, g in enumerate(p.generators) if j != i)
        sub = replace(p, generators=rest, validated=True)
        sub.__dict__["pointing"] = p.pointing
        if member(sub, p.generators[i]) is not None:
            return False
    return True
