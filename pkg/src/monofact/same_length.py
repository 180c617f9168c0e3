"""The sets T_S and L_S and friends.

T_S collects the elements with two distinct factorizations, L_S those with
two distinct factorizations of the same length.  Both are monoid ideals
when nonempty: T_S is generated by the S-degrees of any binomial
generating set of I_S, and L_S by the S-degrees of minimal generators of
the ideal of the homogenized monoid S~ = <(a_i, 1)>, whose extra
coordinate tracks length.  The complement S \\ L_S is the Apery set of S
relative to the L_S generators, which makes it computable through the
staircase machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .apery import AperyResult, apery_set
from .errors import DimensionMismatch, EmptyLSet, InvalidInput, UndefinedForN2
from .ideal import lattice_ideal, minimal_generators
from .intlinalg import dot
from .monoid import (
    GroupElement,
    MonoidPresentation,
    _validated,
    element_from_data,
    extremal_rays,
    member,
    presentation,
    primitive,
)
from .orders import GREVLEX, TermOrder


@dataclass(frozen=True)
class MonoidIdeal:
    """The ideal (b_1 + S) ∪ ... ∪ (b_s + S) of a monoid S."""

    presentation: MonoidPresentation
    generators: tuple[GroupElement, ...]
    minimalized: bool = False

    def __post_init__(self):
        if not self.generators:
            raise InvalidInput("a monoid ideal needs at least one generator")
        if any(g.is_zero for g in self.generators):
            raise InvalidInput("ideal generators must be nonzero")

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    def contains(self, x) -> bool:
        x = element_from_data(self.presentation, x)
        return any(member(self.presentation, x - g) is not None for g in self.generators)

    def to_data(self):
        return {
            "generators": [g.to_data() for g in self.generators],
            "minimalized": self.minimalized,
        }


def monoid_ideals_equal(a: MonoidIdeal, b: MonoidIdeal) -> bool:
    """Mutual membership of generator sets.

    Sound for ideals given as finite unions of principal ideals: equality
    holds iff each generator of one lies in the other.
    """
    pa, pb = a.presentation, b.presentation
    if pa.rank != pb.rank or pa.torsion.moduli != pb.torsion.moduli:
        raise DimensionMismatch("ideals live over different ambient groups")
    return all(b.contains(g) for g in a.generators) and all(
        a.contains(g) for g in b.generators
    )


@dataclass(frozen=True)
class HomogenizedPresentation:
    """S~ together with the monoid it came from (None for transformed
    presentations that only exist in homogenized form)."""

    base: MonoidPresentation | None
    lifted: MonoidPresentation


def homogenize(p: MonoidPresentation) -> HomogenizedPresentation:
    """S~ = <(a_1, 1), ..., (a_n, 1)>, the length coordinate appended to
    the free part.  Always reduced: the new coordinate is a pointing."""
    p = _validated(p)
    gens = [list(g.free) + [1] + list(g.torsion) for g in p.generators]
    lifted = _validated(presentation(p.rank + 1, p.torsion.moduli, gens))
    return HomogenizedPresentation(p, lifted)


def _minimalize_degrees(p: MonoidPresentation, pairs):
    """Drop degrees lying in another degree plus S.

    ``pairs`` is a list of (element, witness factorization).  Absorption
    only happens from strictly smaller weight, so one ascending pass
    against the kept set is complete.
    """
    seen = {}
    for d, wit in pairs:
        seen.setdefault(d, wit)
    items = sorted(seen.items(), key=lambda it: (p.weight_of(it[0]), it[0].sort_key()))
    kept = []
    for d, wit in items:
        if any(member(p, d - e) is not None for e, _ in kept):
            continue
        kept.append((d, wit))
    return kept


def _degree_generators(p, lifted, order):
    """(S-degree, witness factorization) pairs for the minimal generators
    of the lattice ideal of ``lifted``, minimalized as an ideal of p;
    None when the ideal is zero."""
    gb = lattice_ideal(lifted, order=order)
    if gb.is_zero_ideal:
        return None
    mg = minimal_generators(gb, lifted, order)
    pairs = [(p.evaluate(b.plus), b.plus) for b in mg.elements]
    return _minimalize_degrees(p, pairs)


def t_set(p: MonoidPresentation, order: TermOrder = GREVLEX) -> MonoidIdeal | None:
    """Generators of T_S = {x : at least two factorizations}; None when
    every element factors uniquely (I_S = 0)."""
    p = _validated(p)
    pairs = _degree_generators(p, p, order)
    if pairs is None:
        return None
    return MonoidIdeal(p, tuple(d for d, _ in pairs), minimalized=True)


def _l_set_witnessed(p: MonoidPresentation, order: TermOrder):
    lifted = homogenize(p).lifted
    return _degree_generators(p, lifted, order)


def l_set(p: MonoidPresentation, order: TermOrder = GREVLEX) -> MonoidIdeal | None:
    """Generators of L_S = {x : two distinct factorizations of equal
    length}; None when I of the homogenized monoid is zero."""
    p = _validated(p)
    pairs = _l_set_witnessed(p, order)
    if pairs is None:
        return None
    return MonoidIdeal(p, tuple(d for d, _ in pairs), minimalized=True)


def l_set_complement(
    p: MonoidPresentation,
    limit: int | None = None,
    order: TermOrder = GREVLEX,
) -> AperyResult:
    """S \\ L_S as the Apery set relative to the L_S generators."""
    p = _validated(p)
    pairs = _l_set_witnessed(p, order)
    if pairs is None:
        raise EmptyLSet("L_S is empty; the complement is all of S")
    return apery_set(
        p,
        [d for d, _ in pairs],
        factorizations=[wit for _, wit in pairs],
        order=order,
        limit=limit,
    )


def l_set_complement_is_finite(p: MonoidPresentation) -> bool:
    """Ray criterion: finite iff every extremal ray of the cone of S
    carries two generators with equal free parts (2.a) or three
    generators (2.b).  No ideal computation involved."""
    p = _validated(p)
    frees = [g.free for g in p.generators]
    for ray in extremal_rays(frees).rays:
        on_ray = [g for g in p.generators if primitive(g.free) == ray]
        if len(on_ray) >= 3:
            continue
        if len(on_ray) == 2 and on_ray[0].free == on_ray[1].free:
            continue
        return False
    return True


def is_l_set_principal(
    p: MonoidPresentation, order: TermOrder = GREVLEX
) -> GroupElement | None:
    """The single minimal generator of L_S if there is exactly one."""
    p = _validated(p)
    pairs = _l_set_witnessed(p, order)
    if pairs is None:
        raise EmptyLSet("L_S is empty")
    if len(pairs) == 1:
        return pairs[0][0]
    return None


def gaps(values) -> tuple[int, ...]:
    """Gaps of the numerical semigroup generated by ``values`` (gcd 1),
    via least monoid elements per residue class of the smallest
    generator."""
    vals = sorted({int(v) for v in values})
    if not vals or vals[0] <= 0:
        raise InvalidInput("generators must be positive")
    g = 0
    for v in vals:
        g = gcd(g, v)
    if g != 1:
        raise InvalidInput("generators must have gcd 1")
    a = vals[0]
    if a == 1:
        return ()
    INF = None
    dist = [INF] * a
    dist[0] = 0
    changed = True
    while changed:
        changed = False
        for r in range(a):
            if dist[r] is None:
                continue
            for v in vals[1:]:
                nr = (r + v) % a
                nd = dist[r] + v
                if dist[nr] is None or nd < dist[nr]:
                    dist[nr] = nd
                    changed = True
    out = []
    for r in range(a):
        m = dist[r]
        x = m - a
        while x > 0:
            out.append(x)
            x -= a
    return tuple(sorted(out))


def f2l(p: MonoidPresentation, order: TermOrder = GREVLEX) -> int:
    """F_2l: the largest integer without two distinct equal-length
    factorizations, i.e. max(Z \\ L_S) for a numerical semigroup."""
    p = _validated(p)
    if not p.is_numerical:
        raise InvalidInput("F_2l is defined for numerical semigroups")
    vals = [g.free[0] for g in p.generators]
    g = 0
    for v in vals:
        g = gcd(g, v)
    if g != 1:
        raise InvalidInput("generators must have gcd 1")
    if p.n <= 2:
        raise UndefinedForN2("L_S empty for n <= 2")
    comp = l_set_complement(p, order=order)
    assert comp.finite, "complement of L_S is finite for numerical n >= 3"
    best = max(e.free[0] for e in comp.elements)
    for gap in gaps(vals):
        if gap > best:
            best = gap
    return best
