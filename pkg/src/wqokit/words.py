"""Words over a finite alphabet and their embedding orders.

Two orders live here. The plain embedding order ``leq_e(u, v)`` holds when u
can be obtained from v by deleting letters; it is decided by greedy leftmost
matching. The support-sensitive order ``leq_E(u, v)`` additionally requires u
and v to use exactly the same set of letters, and compares the words after
marking each letter occurrence with a first-seen flag (``phi``).
"""

from __future__ import annotations

from dataclasses import dataclass


class AlphabetMismatch(ValueError):
    """Raised when words over different alphabets are combined."""


@dataclass(frozen=True)
class Alphabet:
    """Finite alphabet; letters are the indices 0..size-1 with display names."""

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("an alphabet needs at least one letter")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate letter names in {self.names!r}")

    @classmethod
    def from_letters(cls, letters: str) -> "Alphabet":
        """Alphabet with one single-character name per character of `letters`."""
        return cls(tuple(letters))

    @classmethod
    def indexed(cls, size: int) -> "Alphabet":
        """Alphabet of the given size with names "1", "2", ..., str(size)."""
        return cls(tuple(str(i + 1) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"letter {name!r} is not in alphabet {self}") from None

    def doubled(self) -> "Alphabet":
        """Alphabet of flagged letters; letter i with flag f sits at 2*i + f."""
        return Alphabet(tuple(f"{n}{f}" for n in self.names for f in (0, 1)))

    def __str__(self) -> str:
        if all(len(n) == 1 for n in self.names):
            return "".join(self.names)
        return ",".join(self.names)


@dataclass(frozen=True)
class Word:
    """Finite sequence of letter indices over a fixed alphabet."""

    alphabet: Alphabet
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for l in self.letters:
            if not 0 <= l < self.alphabet.size:
                raise ValueError(
                    f"letter index {l} out of range for alphabet {self.alphabet}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def tail(self) -> "Word":
        return Word(self.alphabet, self.letters[1:])

    def __str__(self) -> str:
        if not self.letters:
            return "[]"
        names = self.alphabet.names
        if all(len(n) == 1 for n in names):
            return "".join(names[l] for l in self.letters)
        return "[" + ",".join(str(l) for l in self.letters) + "]"


@dataclass(frozen=True)
class LabeledWord:
    """A word over a doubled alphabet paired with a set of base letters."""

    word: Word
    support: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))

    def __str__(self) -> str:
        sup = ",".join(str(l) for l in sorted(self.support))
        return f"({self.word}, {{{sup}}})"


def _require_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch(
            f"alphabet mismatch: {u} is over {u.alphabet}, {v} is over {v.alphabet}"
        )


def leq_e(u: Word, v: Word) -> bool:
    """True iff u embeds into v, i.e. deleting letters of v can yield u.

    Greedy leftmost matching: each letter of u is matched to the earliest
    unused occurrence in v. Greedy matching succeeds iff any matching does.
    """
    _require_same_alphabet(u, v)
    remaining = iter(v.letters)
    return all(c in remaining for c in u.letters)


def support(u: Word) -> frozenset[int]:
    """The set of letters occurring in u."""
    return frozenset(u.letters)


def phi(u: Word) -> LabeledWord:
    """Flag each occurrence: 0 for a letter's first appearance, 1 afterwards.

    The result word lives over the doubled alphabet (letter i with flag f is
    encoded as 2*i + f) and is paired with the support of u.
    """
    seen: set[int] = set()
    out = []
    for a in u.letters:
        out.append(2 * a + (1 if a in seen else 0))
        seen.add(a)
    return LabeledWord(Word(u.alphabet.doubled(), tuple(out)), frozenset(seen))


def leq_E(u: Word, v: Word) -> bool:
    """Support-sensitive embedding: equal supports and phi(u) embeds in phi(v).

    The support check comes first since it is the cheap rejection.
    """
    _require_same_alphabet(u, v)
    if support(u) != support(v):
        return False
    return leq_e(phi(u).word, phi(v).word)


def labeled_leq(p: LabeledWord, q: LabeledWord) -> bool:
    """Product order on labeled words: equal supports and embedded words."""
    return p.support == q.support and leq_e(p.word, q.word)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse juxtaposed letter names ("aabbca") or an index list ("[0,1,2]").

    The empty word is written "[]" (an empty string also parses to it).
    """
    stripped = text.strip()
    if stripped in ("", "[]"):
        return Word(alphabet)
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise ValueError(f"unterminated index list {text!r}")
        letters = []
        for part in stripped[1:-1].split(","):
            item = part.strip()
            if not item.isdigit():
                raise ValueError(f"bad letter index {item!r} in {text!r}")
            letters.append(int(item))
        return Word(alphabet, tuple(letters))
    if not all(len(n) == 1 for n in alphabet.names):
        raise ValueError(
            f"alphabet {alphabet} has multi-character names; "
            f"write the word as an index list"
        )
    return Word(alphabet, tuple(alphabet.index(ch) for ch in stripped))
