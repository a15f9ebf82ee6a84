"""Freely reduced words over the group generators and the added transposition.

Words are written left to right; evaluation applies the rightmost letter
first, so traces walk the terminal subwords from shortest to longest.
Only formal cancellation is performed -- generator letters carry no group
relations.  The transposition letter is its own inverse, so ``t t``
cancels like any inverse pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation


@dataclass(frozen=True)
class Letter:
    """One alphabet symbol: generator ``gen`` (0-based) or the transposition.

    ``gen is None`` marks the transposition letter; its sign is forced to +1.
    """

    gen: object = None
    sign: int = 1

    def __post_init__(self):
        if self.gen is None:
            object.__setattr__(self, "sign", 1)
        elif not isinstance(self.gen, int) or self.gen < 0:
            raise ValueError(f"generator index must be a natural number, got {self.gen!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign!r}")

    def inverse(self):
        if self.gen is None:
            return self
        return Letter(self.gen, -self.sign)

    def __str__(self):
        if self.gen is None:
            return "t"
        return f"g{self.gen + 1}" + ("^-1" if self.sign < 0 else "")


TAU = Letter(None)


def _reduce(letters):
    out = []
    for letter in letters:
        if out and out[-1] == letter.inverse():
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


class Word:
    """A freely reduced word; the constructor reduces whatever it is given."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(letters)
        for letter in letters:
            if not isinstance(letter, Letter):
                raise ValueError(f"not a letter: {letter!r}")
        self.letters = _reduce(letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    def terminal_subword(self, k):
        """The last ``k`` letters, in order."""
        if not 0 <= k <= len(self.letters):
            raise ValueError(f"terminal subword length {k} outside 0..{len(self.letters)}")
        return Word(self.letters[len(self.letters) - k:])

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


def reduce_word(letters):
    """Freely reduce a letter sequence into a Word (idempotent)."""
    return Word(letters)


def terminal_subword(word, k):
    return word.terminal_subword(k)


def build_v(k, n, i):
    """The word ``(g1 ... gk)^n g1 ... gi`` of length ``n*k + i``."""
    _check_family_args(k, n, i)
    letters = [Letter(j) for _ in range(n) for j in range(k)]
    letters.extend(Letter(j) for j in range(i))
    return Word(letters)


def build_w(k, n, i):
    """The word ``(t g1 ... t gk)^n t g1 ... t gi`` of length ``2*(n*k + i)``."""
    _check_family_args(k, n, i)
    letters = []
    for _ in range(n):
        for j in range(k):
            letters.append(TAU)
            letters.append(Letter(j))
    for j in range(i):
        letters.append(TAU)
        letters.append(Letter(j))
    return Word(letters)


def _check_family_args(k, n, i):
    if k < 1:
        raise ValueError("the word family needs at least one generator slot")
    if n < 0:
        raise ValueError("the repetition count must be non-negative")
    if not 0 <= i < k:
        raise ValueError(f"partial index {i} outside 0..{k - 1}")


class _LetterImages:
    """Resolves letters to permutations under one assignment."""

    def __init__(self, gen_perms, tau):
        gen_perms = tuple(gen_perms)
        perms = gen_perms + ((tau,) if tau is not None else ())
        if perms:
            degree = perms[0].degree
            if any(p.degree != degree for p in perms):
                raise ValueError("assigned permutations must share one degree")
            self.degree = degree
        else:
            self.degree = None
        self.gen_perms = gen_perms
        self.tau = tau
        self._inverses = {}

    def perm(self, letter):
        if letter.gen is None:
            if self.tau is None:
                raise ValueError("word uses the transposition letter but none is assigned")
            return self.tau
        if letter.gen >= len(self.gen_perms):
            raise ValueError(f"letter g{letter.gen + 1} has no assigned permutation")
        p = self.gen_perms[letter.gen]
        if letter.sign < 0:
            if letter.gen not in self._inverses:
                self._inverses[letter.gen] = p.inverse()
            p = self._inverses[letter.gen]
        return p


def trace(word, point, gen_perms, tau=None):
    """The trace of ``point``: images under the terminal subwords, shortest first.

    Entry ``i`` (1-based) is ``terminal_subword(word, i)`` applied to ``point``;
    the last entry is the full word applied to ``point``.
    """
    images = _LetterImages(gen_perms, tau)
    if images.degree is not None and not 0 <= point < images.degree:
        raise ValueError(f"point {point} outside 0..{images.degree - 1}")
    out = []
    current = point
    for letter in reversed(word.letters):
        current = images.perm(letter)(current)
        out.append(current)
    return tuple(out)


def evaluate_word(word, gen_perms, tau=None):
    """Interpret the word as a permutation (rightmost letter acting first)."""
    images = _LetterImages(gen_perms, tau)
    if images.degree is None:
        raise ValueError("evaluation needs at least one assigned permutation")
    result = Permutation.identity(images.degree)
    for letter in word.letters:
        result = result * images.perm(letter)
    return result


def parse_word(text, gen_count=None):
    """Parse whitespace-separated tokens ``g<k>``, ``g<k>^-1`` and ``t``."""
    letters = []
    for token in text.split():
        if token == "t":
            letters.append(TAU)
            continue
        body, sign = token, 1
        if token.endswith("^-1"):
            body, sign = token[:-3], -1
        if not body.startswith("g") or not body[1:].isdigit() or int(body[1:]) < 1:
            raise ValueError(f"bad word token {token!r}")
        index = int(body[1:]) - 1
        if gen_count is not None and index >= gen_count:
            raise ValueError(f"token {token!r} exceeds the {gen_count} available generators")
        letters.append(Letter(index, sign))
    return Word(letters)
