"""Reduced-word arithmetic in the free group over a finite alphabet.

Letters are encoded as nonzero signed integers: ``+(i + 1)`` is generator
``i``, ``-(i + 1)`` its inverse.  Negation is inversion, which keeps the
hot loops (reduction, multiplication) on plain integer tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AlphabetMismatch,
    InvalidLetter,
    MalformedExponent,
    UnknownGenerator,
)


def letter(generator: int, sign: int) -> int:
    """Encode (generator index, sign) as a signed-integer letter."""
    if sign not in (1, -1):
        raise InvalidLetter(f"sign must be +1 or -1, got {sign}")
    if generator < 0:
        raise InvalidLetter(f"negative generator index {generator}")
    return sign * (generator + 1)


def letter_generator(lt: int) -> int:
    return abs(lt) - 1


def letter_sign(lt: int) -> int:
    return 1 if lt > 0 else -1


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of named generators."""

    names: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.names:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        for name in self.names:
            if not name or any(c.isspace() for c in name) or "^" in name:
                raise ValueError(f"bad generator name {name!r}")
            if name == "1" or "(" in name or ")" in name:
                raise ValueError(f"reserved characters in generator name {name!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator(
                f"{name!r} is not a generator of alphabet {' '.join(self.names)}"
            ) from None

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        return cls(tuple(text.split()))


def _reduce_letters(raw) -> tuple[int, ...]:
    """Stack scan removing adjacent inverse pairs."""
    out: list[int] = []
    for lt in raw:
        if out and out[-1] == -lt:
            out.pop()
        else:
            out.append(lt)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A reduced word in the free group over ``alphabet``.

    The empty tuple is the identity.  Construction does not re-reduce;
    use :func:`reduce` for arbitrary letter sequences.
    """

    alphabet: Alphabet
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        n = len(self.alphabet)
        for lt in self.letters:
            if lt == 0 or abs(lt) > n:
                raise InvalidLetter(f"letter {lt} out of bounds for {n} generators")
        for a, b in zip(self.letters, self.letters[1:]):
            if a == -b:
                raise ValueError(f"word {self.letters} is not reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def is_identity(self) -> bool:
        return not self.letters


def _check_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch(
            f"alphabets {u.alphabet.names} and {v.alphabet.names} differ"
        )


def reduce(alphabet: Alphabet, raw) -> Word:
    """Reduce an arbitrary sequence of letters to its unique normal form."""
    return Word(alphabet, _reduce_letters(raw))


def multiply(u: Word, v: Word) -> Word:
    """Reduced product ``uv``."""
    _check_same_alphabet(u, v)
    out = list(u.letters)
    for lt in v.letters:
        if out and out[-1] == -lt:
            out.pop()
        else:
            out.append(lt)
    return Word(u.alphabet, tuple(out))


def invert(w: Word) -> Word:
    """Reversed word with flipped signs; the group inverse."""
    return Word(w.alphabet, tuple(-lt for lt in reversed(w.letters)))


def conjugate(g: Word, h: Word, eps: int = 1) -> Word:
    """Reduced form of ``(h^eps)^-1 g h^eps``."""
    _check_same_alphabet(g, h)
    he = h if eps == 1 else invert(h)
    return multiply(multiply(invert(he), g), he)


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse the word grammar: whitespace-separated ``name`` or ``name^-1``.

    ``1`` denotes the empty word.  The result is reduced.
    """
    tokens = text.split()
    if tokens == ["1"]:
        return Word(alphabet)
    raw = []
    for tok in tokens:
        if "^" in tok:
            name, _, exp = tok.partition("^")
            if exp != "-1":
                raise MalformedExponent(f"expected ^-1 in token {tok!r}")
            sign = -1
        else:
            name, sign = tok, 1
        raw.append(letter(alphabet.index(name), sign))
    return reduce(alphabet, raw)


def format_word(w: Word) -> str:
    """Inverse of :func:`parse_word`; the empty word prints as ``1``."""
    if not w.letters:
        return "1"
    parts = []
    for lt in w.letters:
        name = w.alphabet.names[letter_generator(lt)]
        parts.append(name if lt > 0 else name + "^-1")
    return " ".join(parts)
