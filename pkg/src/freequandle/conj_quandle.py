"""Elements of the free quandle as canonical conjugates of generators.

An element is a pair (axis, tail): the conjugate ``tail^-1 axis tail`` of
the generator ``axis`` inside the free group.  Canonical form requires the
tail not to start with the axis letter or its inverse, which makes the
representation unique and the group word cancellation-free.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import free_group as fg
from .errors import AlphabetMismatch, NotInFreeQuandle
from .free_group import Alphabet, Word

RIGHT = 1   # the operation a ▷ q, conjugation by q
LEFT = -1   # the operation a ◁ q, conjugation by q^-1


@dataclass(frozen=True)
class QuandleElement:
    """Canonical conjugate ``axis^tail`` of a generator."""

    axis: int
    tail: Word

    def __post_init__(self):
        if not 0 <= self.axis < len(self.tail.alphabet):
            raise ValueError(f"axis {self.axis} out of alphabet bounds")
        if self.tail.letters and abs(self.tail.letters[0]) - 1 == self.axis:
            raise ValueError("tail starts with the axis letter; not canonical")

    @property
    def alphabet(self) -> Alphabet:
        return self.tail.alphabet

    def __str__(self) -> str:
        return format_element(self)


def canonicalize(axis: int, tail: Word) -> QuandleElement:
    """Strip leading axis letters from the tail: x^(x^±1 u) = x^u."""
    letters = tail.letters
    i = 0
    while i < len(letters) and abs(letters[i]) - 1 == axis:
        i += 1
    return QuandleElement(axis, Word(tail.alphabet, letters[i:]))


def to_group_word(e: QuandleElement) -> Word:
    """The reduced group word ``tail^-1 axis tail`` (length 2|tail| + 1)."""
    t = e.tail.letters
    letters = tuple(-lt for lt in reversed(t)) + (e.axis + 1,) + t
    return Word(e.alphabet, letters)


def from_group_word(w: Word) -> QuandleElement:
    """Recognize ``u^-1 x u`` for a generator x; inverse of to_group_word."""
    n = len(w.letters)
    if n % 2 == 0:
        raise NotInFreeQuandle(f"word {w} has even length {n}")
    k = n // 2
    center = w.letters[k]
    if center < 0:
        raise NotInFreeQuandle(
            f"word {w} is conjugate to an inverse generator, not a generator"
        )
    suffix = w.letters[k + 1:]
    if w.letters[:k] != tuple(-lt for lt in reversed(suffix)):
        raise NotInFreeQuandle(f"word {w} is not of the form u^-1 x u")
    return canonicalize(center - 1, Word(w.alphabet, suffix))


def act(a: QuandleElement, q: QuandleElement, eps: int = RIGHT) -> QuandleElement:
    """Conjugation action: eps=+1 is a ▷ q, eps=-1 is a ◁ q.

    The result is ``axis(a)^(tail(a) · gw(q)^eps)`` in canonical form; the
    axis never changes.
    """
    if a.alphabet != q.alphabet:
        raise AlphabetMismatch("elements come from different alphabets")
    gw = to_group_word(q)
    if eps == -1:
        gw = fg.invert(gw)
    return canonicalize(a.axis, fg.multiply(a.tail, gw))


def parse_element(alphabet: Alphabet, text: str) -> QuandleElement:
    """Parse the element grammar.

    Accepts ``x^(w)`` with w in word grammar, a bare generator name, or a
    raw group word routed through :func:`from_group_word`.
    """
    text = text.strip()
    if "^(" in text:
        name, _, rest = text.partition("^")
        rest = rest.strip()
        if not (rest.startswith("(") and rest.endswith(")")):
            raise NotInFreeQuandle(f"malformed element {text!r}")
        axis = alphabet.index(name.strip())
        tail = fg.parse_word(alphabet, rest[1:-1])
        return canonicalize(axis, tail)
    return from_group_word(fg.parse_word(alphabet, text))


def format_element(e: QuandleElement) -> str:
    """Inverse of :func:`parse_element`: bare axis or ``x^(w)``."""
    name = e.alphabet.names[e.axis]
    if e.tail.is_identity():
        return name
    return f"{name}^({fg.format_word(e.tail)})"


def random_element(alphabet: Alphabet, max_tail_len: int, rng: random.Random) -> QuandleElement:
    """A uniformly-shaped random canonical element (for axiom sampling)."""
    axis = rng.randrange(len(alphabet))
    # over one generator the only canonical elements are the generators
    length = 0 if len(alphabet) == 1 else rng.randint(0, max_tail_len)
    letters: list[int] = []
    n = len(alphabet)
    while len(letters) < length:
        lt = fg.letter(rng.randrange(n), rng.choice((1, -1)))
        if letters and letters[-1] == -lt:
            continue
        if not letters and abs(lt) - 1 == axis:
            continue
        letters.append(lt)
    return QuandleElement(axis, Word(alphabet, tuple(letters)))


@dataclass(frozen=True)
class AxiomFailure:
    law: str
    elements: tuple[QuandleElement, ...]


@dataclass(frozen=True)
class AxiomReport:
    alphabet: Alphabet
    samples: int
    seed: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: tuple[AxiomFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


_LAWS = (
    "idempotence_right",
    "idempotence_left",
    "inverse_right_then_left",
    "inverse_left_then_right",
    "self_distributivity_right",
    "self_distributivity_left",
)


def verify_axioms(alphabet: Alphabet, sample_count: int, max_tail_len: int = 4,
                  seed: int = 0) -> AxiomReport:
    """Check the quandle laws on random canonical elements.

    Laws checked per sampled triple (a, b, c): idempotence act(a,a,ε)=a,
    the two inverse laws act(act(a,b,±1),b,∓1)=a, and right
    self-distributivity act(act(a,b,ε),c,ε) = act(act(a,c,ε),act(b,c,ε),ε)
    for both ε.  Equality is structural equality of canonical forms.
    """
    if sample_count <= 0:
        raise ValueError("sample_count must be positive")
    rng = random.Random(seed)
    checked = {law: 0 for law in _LAWS}
    failures: list[AxiomFailure] = []

    def record(law: str, ok: bool, *elts: QuandleElement) -> None:
        checked[law] += 1
        if not ok:
            failures.append(AxiomFailure(law, elts))

    for _ in range(sample_count):
        a = random_element(alphabet, max_tail_len, rng)
        b = random_element(alphabet, max_tail_len, rng)
        c = random_element(alphabet, max_tail_len, rng)
        record("idempotence_right", act(a, a, RIGHT) == a, a)
        record("idempotence_left", act(a, a, LEFT) == a, a)
        record("inverse_right_then_left", act(act(a, b, RIGHT), b, LEFT) == a, a, b)
        record("inverse_left_then_right", act(act(a, b, LEFT), b, RIGHT) == a, a, b)
        for law, eps in (("self_distributivity_right", RIGHT),
                         ("self_distributivity_left", LEFT)):
            lhs = act(act(a, b, eps), c, eps)
            rhs = act(act(a, c, eps), act(b, c, eps), eps)
            record(law, lhs == rhs, a, b, c)

    return AxiomReport(alphabet, sample_count, seed, checked, tuple(failures))
