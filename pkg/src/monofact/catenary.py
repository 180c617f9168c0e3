"""Equal catenary degree.

Two equal-length factorizations of the same element are joined by an
N-chain when some sequence of equal-length factorizations connects them
with consecutive distances at most N.  The equal catenary degree of the
monoid is the largest degree in a minimal homogeneous generating set of
the ideal of the homogenized monoid; the per-element brute force below
serves as its independent witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import CapExceeded, InvalidInput, LengthMismatch, NotInMonoid
from .ideal import lattice_ideal, minimal_generators
from .monoid import (
    Factorization,
    GroupElement,
    MonoidPresentation,
    _validated,
    all_factorizations,
    element_from_data,
)
from .orders import GREVLEX, TermOrder


def distance(lam, nu) -> int:
    """d(lam, nu) = sum(lam_i - min(lam_i, nu_i)), defined for
    factorizations of equal length."""
    a = tuple(lam)
    b = tuple(nu)
    if len(a) != len(b):
        raise LengthMismatch("factorizations live over different generator counts")
    if sum(a) != sum(b):
        raise LengthMismatch("distance is defined for factorizations of equal length")
    return sum(x - min(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class ChainCertificate:
    """An N-chain of equal-length factorizations of one element."""

    presentation: MonoidPresentation
    element: GroupElement
    chain: tuple[Factorization, ...]
    bound: int

    def __post_init__(self):
        if not self.chain:
            raise InvalidInput("a chain needs at least one factorization")
        lengths = {f.length for f in self.chain}
        if len(lengths) != 1:
            raise LengthMismatch("chain factorizations must share one length")
        for f in self.chain:
            if self.presentation.evaluate(tuple(f)) != self.element:
                raise InvalidInput(f"{tuple(f)} does not factor the chain element")
        for prev, cur in zip(self.chain, self.chain[1:]):
            if distance(prev, cur) > self.bound:
                raise InvalidInput("consecutive distance exceeds the stated bound")


def ceq(p: MonoidPresentation, order: TermOrder = GREVLEX) -> int:
    """Equal catenary degree: the maximum total degree among minimal
    generators of the homogenized ideal; 0 when that ideal is zero."""
    from .same_length import homogenize

    p = _validated(p)
    lifted = homogenize(p).lifted
    gb = lattice_ideal(lifted, order=order)
    if gb.is_zero_ideal:
        return 0
    mg = minimal_generators(gb, lifted, order)
    return max(b.total_degree() for b in mg.elements)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[ri] = rj
            return True
        return False


def _class_threshold(facs):
    """Smallest N making the distance-at-most-N graph on ``facs``
    connected; binary search over the sorted pairwise distances."""
    k = len(facs)
    if k <= 1:
        return 0
    pairs = []
    for i in range(k):
        for j in range(i + 1, k):
            pairs.append((distance(facs[i], facs[j]), i, j))
    values = sorted({d for d, _, _ in pairs})

    def connected(bound):
        uf = _UnionFind(k)
        parts = k
        for d, i, j in pairs:
            if d <= bound and uf.union(i, j):
                parts -= 1
        return parts == 1

    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if connected(values[mid]):
            hi = mid
        else:
            lo = mid + 1
    return values[lo]


def ceq_element_bruteforce(p: MonoidPresentation, b, cap: int = 10**6) -> int:
    """c_eq(b) from first principles: group the factorizations of b by
    length and take the worst connectivity threshold over the classes.
    CapExceeded when the answer would be larger than ``cap``."""
    p = _validated(p)
    b = element_from_data(p, b)
    facs = [tuple(f) for f in all_factorizations(p, b)]
    if not facs:
        raise NotInMonoid(f"{b.to_data()} is not in the monoid")
    classes = {}
    for f in facs:
        classes.setdefault(sum(f), []).append(f)
    best = 0
    for group in classes.values():
        best = max(best, _class_threshold(group))
    if best > cap:
        raise CapExceeded(f"equal catenary degree {best} exceeds cap {cap}")
    return best


def ceq_upper_bound_numerical(p: MonoidPresentation) -> int:
    """Regularity-type bound max (a_{i+1}-a_i + a_{j+1}-a_j) / gcd of the
    differences, over pairs i < j < n of consecutive steps."""
    p = _validated(p)
    if not p.is_numerical:
        raise InvalidInput("the bound is stated for numerical semigroups")
    vals = sorted(g.free[0] for g in p.generators)
    n = len(vals)
    if n < 3:
        raise InvalidInput("the bound needs at least three generators")
    d = 0
    for v in vals[1:]:
        d = gcd(d, v - vals[0])
    best = 0
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            best = max(best, vals[i + 1] - vals[i] + vals[j + 1] - vals[j])
    return best // d
