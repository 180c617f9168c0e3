"""Brute-force reference implementations.

Everything here recomputes answers by direct enumeration of coefficient
vectors, sharing nothing with the Groebner machinery it is used to
check.  A coefficient vector lambda has weight sum(lambda_i * u_i) with
u_i the pointing weight of the i-th generator, which equals the weight
of the element it factors; walking all vectors below a weight cap
therefore produces the complete fiber of every element below the cap.

The F-invariants of the closing section are computed with a certified
scan: for a numerical semigroup, having i factorizations (of equal
length, if asked) survives adding the smallest generator a_1, so a run
of a_1 consecutive successes proves every larger value succeeds and the
largest failure seen so far is the answer.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidInput, NotStabilized
from .monoid import GroupElement, MonoidPresentation, _validated


@dataclass(frozen=True)
class EnumerationBudget:
    """weight_cap bounds w.pi(x); count_cap bounds enumerated vectors."""

    weight_cap: int
    count_cap: int = 10**7

    def __post_init__(self):
        if self.weight_cap <= 0 or self.count_cap <= 0:
            raise InvalidInput("budget caps must be positive")


class _Tally:
    __slots__ = ("left",)

    def __init__(self, cap: int):
        self.left = cap

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("enumeration budget exhausted")


def _fiber_map(p: MonoidPresentation, budget: EnumerationBudget):
    """element -> all its factorizations, complete below the weight cap."""
    p = _validated(p)
    weights = p.weights
    n = p.n
    tally = _Tally(budget.count_cap)
    out: dict[GroupElement, list] = {}
    coeffs = [0] * n

    def rec(i, remaining):
        if i == n:
            tally.tick()
            out.setdefault(p.evaluate(coeffs), []).append(tuple(coeffs))
            return
        c = 0
        while c * weights[i] <= remaining:
            coeffs[i] = c
            rec(i + 1, remaining - c * weights[i])
            c += 1
        coeffs[i] = 0

    rec(0, budget.weight_cap)
    return out


def monoid_elements(p: MonoidPresentation, budget: EnumerationBudget):
    """element -> list of factorizations for every element of S below the
    weight cap, zero included.  The fibers are complete."""
    return _fiber_map(p, budget)


def lset_bruteforce(p: MonoidPresentation, budget: EnumerationBudget):
    """All x with weight <= cap having two equal-length factorizations."""
    return {
        el
        for el, facs in _fiber_map(p, budget).items()
        if any(k >= 2 for k in Counter(sum(f) for f in facs).values())
    }


def tset_bruteforce(p: MonoidPresentation, budget: EnumerationBudget):
    """All x with weight <= cap having two factorizations."""
    return {el for el, facs in _fiber_map(p, budget).items() if len(facs) >= 2}


def _has_enough(vals, b, need, same_length, tally) -> bool:
    """Whether b admits `need` factorizations (per length class if asked),
    stopping as soon as the target count is reached."""
    lengths = Counter()
    state = {"total": 0, "found": False}

    def rec(idx, remaining, length):
        if state["found"]:
            return
        v = vals[idx]
        if idx == len(vals) - 1:
            tally.tick()
            if remaining % v == 0:
                if same_length:
                    full = length + remaining // v
                    lengths[full] += 1
                    if lengths[full] >= need:
                        state["found"] = True
                else:
                    state["total"] += 1
                    if state["total"] >= need:
                        state["found"] = True
            return
        c = 0
        while c * v <= remaining and not state["found"]:
            rec(idx + 1, remaining - c * v, length + c)
            c += 1

    rec(0, b, 0)
    return state["found"]


def f_invariants(
    p: MonoidPresentation, i: int, same_length: bool, budget: EnumerationBudget
) -> int:
    """Largest b without i factorizations (of one length, if same_length).

    Certified by a_1 consecutive successes right above the returned
    value; NotStabilized when the weight cap runs out first.
    """
    p = _validated(p)
    if p.rank != 1 or p.torsion.moduli:
        raise InvalidInput("F-invariants are about numerical semigroups")
    if isinstance(i, bool) or not isinstance(i, int) or i < 2:
        raise InvalidInput("need an integer i >= 2")
    vals = [g.free[0] for g in p.generators]
    window = min(vals)
    unit = p.weight_of(p.element((1,)))
    b_max = budget.weight_cap // unit
    tally = _Tally(budget.count_cap)
    last_fail = None
    streak = 0
    for b in range(b_max + 1):
        if _has_enough(vals, b, i, same_length, tally):
            streak += 1
            if streak == window:
                # b = 0 always fails, so a full window pins the maximum
                return last_fail
        else:
            last_fail = b
            streak = 0
    raise NotStabilized(
        f"no run of {window} successes below weight {budget.weight_cap}"
    )
