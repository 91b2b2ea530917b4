"""Free-basis computation for a bounded subquandle closure.

Two methods produce a candidate basis: the tail-filter construction
(keep, per axis, exactly the closure tails no closure element can
shorten) and a greedy shrink of the input generators.  Either candidate
is only *certified* after the fact: generation witnesses for every input
generator must replay, and both independence checkers must pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .conj_quandle import QuandleElement, act
from .independence import (
    IndependenceReport,
    check_significant_factors,
    nielsen_independent_elements,
)
from .free_group import Word
from .subquandle import ClosureSet, QuandleTerm, closure, express

METHOD_PAPER = "paper"
METHOD_GREEDY = "greedy"


@dataclass(frozen=True)
class ShrinkMove:
    """One tail-shortening step: result = act(target, by, eps)."""

    target: QuandleElement
    by: QuandleElement
    eps: int
    result: QuandleElement


@dataclass(frozen=True)
class BasisReport:
    input_generators: tuple[QuandleElement, ...]
    bound: int
    candidate: tuple[QuandleElement, ...]
    method: str
    witnesses: dict[QuandleElement, Optional[QuandleTerm]]
    hall_verdict: IndependenceReport
    nielsen_verdict: IndependenceReport
    moves: tuple[ShrinkMove, ...] = ()
    stable: Optional[bool] = None  # candidate unchanged when recomputed at bound+2

    @property
    def missing_witnesses(self) -> tuple[QuandleElement, ...]:
        return tuple(g for g, t in self.witnesses.items() if t is None)

    @property
    def certified(self) -> bool:
        return (self.hall_verdict.passed and self.nielsen_verdict.passed
                and not self.missing_witnesses)


def _shrinks(tail: tuple[int, ...], q: QuandleElement, eps: int) -> bool:
    """Whether right-multiplying the group word of q^eps shortens the tail.

    Equivalent to |tail · gw(q)^eps| < |tail|: by parity the product can
    shorten only when the half u^-1 y^eps of gw(q)^eps = u^-1 y^eps u
    cancels completely, i.e. the tail ends with y^-eps u.
    """
    u = q.tail.letters
    suffix = (-eps * (q.axis + 1),) + u
    k = len(suffix)
    return len(tail) >= k and tail[-k:] == suffix


def is_shrinkable(w: Word, axis: int, c: ClosureSet) -> Optional[ShrinkMove]:
    """First closure element (and eps) that shortens w, if any.

    Scan order: closure elements in insertion order, eps -1 before +1.
    Equal-length results cannot occur (odd group words flip tail parity).
    """
    target = QuandleElement(axis, w)
    for q in c.elements:
        for eps in (-1, 1):
            if _shrinks(w.letters, q, eps):
                return ShrinkMove(target, q, eps, act(target, q, eps))
    return None


def compute_T(axis: int, c: ClosureSet) -> list[Word]:
    """Closure tails on the given axis that no closure element can shorten."""
    return [e.tail for e in c.elements
            if e.axis == axis and is_shrinkable(e.tail, axis, c) is None]


def _verdicts(candidate) -> tuple[IndependenceReport, IndependenceReport]:
    return (check_significant_factors(candidate),
            nielsen_independent_elements(candidate))


def _witnesses(candidate, targets, bound):
    """Expression terms for each target over the candidate, within bound.

    The witness closure stops as soon as every target is found; if some
    target is unreachable the enumeration runs to the full bounded fixed
    point before giving up on it.
    """
    sub = closure(candidate, bound, stop_when_contains=targets)
    out: dict[QuandleElement, Optional[QuandleTerm]] = {}
    for g in targets:
        out[g] = express(sub, g) if g in sub else None
    return out


def compute_S(c: ClosureSet, check_stability: bool = False) -> BasisReport:
    """Candidate basis from the per-axis non-shrinkable tails.

    The candidate is certified a posteriori: generation witnesses for the
    input generators are built from a re-closure of the candidate, and
    both independence checkers run on the candidate.  A missing witness is
    reported, not fatal; it indicates the bound is too small.
    """
    alphabet = c.alphabet
    candidate = tuple(
        QuandleElement(axis, w)
        for axis in range(len(alphabet))
        for w in compute_T(axis, c)
    )
    stable = None
    if check_stability:
        bigger = closure(list(c.generators), c.bound + 2)
        recomputed = tuple(
            QuandleElement(axis, w)
            for axis in range(len(alphabet))
            for w in compute_T(axis, bigger)
        )
        stable = set(recomputed) == set(candidate)
    hall, nielsen = _verdicts(candidate)
    return BasisReport(
        input_generators=c.generators,
        bound=c.bound,
        candidate=candidate,
        method=METHOD_PAPER,
        witnesses=_witnesses(candidate, c.generators, c.bound),
        hall_verdict=hall,
        nielsen_verdict=nielsen,
        stable=stable,
    )


def greedy_shrink(gens, c: ClosureSet) -> BasisReport:
    """Shrink the generators against their own bounded closure.

    The working set starts as the deduped input; each step applies the
    first available move (smallest target index, then smallest shrinking
    element index in the working set's closure, eps -1 before +1),
    replacing the target and re-deduping.  Total tail length strictly
    decreases, so the loop terminates.
    """
    working = list(dict.fromkeys(gens))
    moves: list[ShrinkMove] = []
    while True:
        wc = closure(working, c.bound)
        move = None
        for ti, target in enumerate(working):
            for q in wc.elements:
                for eps in (-1, 1):
                    if _shrinks(target.tail.letters, q, eps):
                        move = (ti, ShrinkMove(target, q, eps, act(target, q, eps)))
                        break
                if move:
                    break
            if move:
                break
        if move is None:
            break
        ti, mv = move
        moves.append(mv)
        working[ti] = mv.result
        working = list(dict.fromkeys(working))

    candidate = tuple(working)
    hall, nielsen = _verdicts(candidate)
    return BasisReport(
        input_generators=tuple(dict.fromkeys(gens)),
        bound=c.bound,
        candidate=candidate,
        method=METHOD_GREEDY,
        witnesses=_witnesses(candidate, tuple(dict.fromkeys(gens)), c.bound),
        hall_verdict=hall,
        nielsen_verdict=nielsen,
        moves=tuple(moves),
    )
