"""Monomial term orders on exponent vectors.

Orders are exposed as key functions: ``order.key(exp)`` returns a tuple
that compares the way the monomials do, with 1 minimal.  Supported kinds:

  lex                     lexicographic
  grevlex                 degree reverse lexicographic
  wgrevlex                weighted degree, reverse lex tiebreak
  block                   elimination order: two inner orders on a split

``perm`` lists variable indices by significance (most significant first);
identity when omitted.  Weighted orders need strictly positive weights to
stay monomial orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput


@dataclass(frozen=True)
class TermOrder:
    kind: str
    weights: tuple[int, ...] | None = None
    perm: tuple[int, ...] | None = None
    split: int | None = None
    inner: tuple["TermOrder", "TermOrder"] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "wgrevlex", "block"):
            raise InvalidInput(f"unknown term order kind {self.kind!r}")
        if self.kind == "wgrevlex":
            if not self.weights or any(w <= 0 for w in self.weights):
                raise InvalidInput("wgrevlex needs strictly positive weights")
        if self.kind == "block" and (self.split is None or self.inner is None):
            raise InvalidInput("block order needs a split and two inner orders")

    def _perm(self, n: int) -> tuple[int, ...]:
        if self.perm is None:
            return tuple(range(n))
        if len(self.perm) != n or sorted(self.perm) != list(range(n)):
            raise InvalidInput("perm must permute the variable indices")
        return self.perm

    def key(self, exp):
        n = len(exp)
        sig = self._perm(n)
        if self.kind == "lex":
            return tuple(exp[i] for i in sig)
        if self.kind == "grevlex":
            return (sum(exp), tuple(-exp[i] for i in reversed(sig)))
        if self.kind == "wgrevlex":
            if len(self.weights) != n:
                raise InvalidInput("weight vector length does not match variables")
            deg = sum(w * e for w, e in zip(self.weights, exp))
            return (deg, tuple(-exp[i] for i in reversed(sig)))
        first = [exp[i] for i in sig[: self.split]]
        second = [exp[i] for i in sig[self.split :]]
        return (self.inner[0].key(tuple(first)), self.inner[1].key(tuple(second)))

    def describe(self) -> str:
        if self.kind == "wgrevlex":
            return "wgrevlex:" + ",".join(str(w) for w in self.weights)
        if self.kind == "block":
            return f"block:{self.split}:{self.inner[0].describe()}:{self.inner[1].describe()}"
        return self.kind


LEX = TermOrder("lex")
GREVLEX = TermOrder("grevlex")


def lex(perm=None) -> TermOrder:
    return TermOrder("lex", perm=None if perm is None else tuple(perm))


def grevlex(perm=None) -> TermOrder:
    return TermOrder("grevlex", perm=None if perm is None else tuple(perm))


def wgrevlex(weights, perm=None) -> TermOrder:
    return TermOrder(
        "wgrevlex", weights=tuple(weights), perm=None if perm is None else tuple(perm)
    )


def block(split: int, inner_first: TermOrder, inner_second: TermOrder, perm=None) -> TermOrder:
    return TermOrder(
        "block",
        split=split,
        inner=(inner_first, inner_second),
        perm=None if perm is None else tuple(perm),
    )


def cheapest_last(n: int, i: int) -> tuple[int, ...]:
    """Significance permutation keeping natural order but pushing x_i last."""
    return tuple([j for j in range(n) if j != i] + [i])


def parse_order(descriptor: str | None) -> TermOrder:
    """CLI order descriptors: lex | grevlex | wgrevlex:w1,w2,... | block:k"""
    if descriptor is None or descriptor == "grevlex":
        return GREVLEX
    if descriptor == "lex":
        return LEX
    if descriptor.startswith("wgrevlex:"):
        try:
            weights = tuple(int(w) for w in descriptor.split(":", 1)[1].split(","))
        except ValueError:
            raise InvalidInput(f"bad weight list in {descriptor!r}") from None
        return wgrevlex(weights)
    if descriptor.startswith("block:"):
        try:
            split = int(descriptor.split(":", 1)[1])
        except ValueError:
            raise InvalidInput(f"bad block split in {descriptor!r}") from None
        return block(split, GREVLEX, GREVLEX)
    raise InvalidInput(f"unknown term order {descriptor!r}")
