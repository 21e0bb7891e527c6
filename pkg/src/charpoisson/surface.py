"""Fundamental groups of punctured surfaces as free groups.

The group of the genus-g surface with m >= 1 punctures is free on
a1, b1, ..., ag, bg, c1, ..., c_{m-1}  (rank n = 2g + m - 1);
the m-th boundary word is determined by the defining relation
prod [ai,bi] c1 ... cm = 1.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Word:
    """Freely reduced word; letters are (generator index, +-1)."""

    letters: tuple

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduce(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    @property
    def is_identity(self):
        return not self.letters


IDENTITY_WORD = Word(())


def word(letters) -> Word:
    """Build a freely reduced Word from an iterable of (gen, exp) pairs;
    exponents may be arbitrary nonzero integers and are expanded to +-1."""
    expanded = []
    for g, e in letters:
        if e == 0:
            continue
        step = 1 if e > 0 else -1
        expanded.extend((g, step) for _ in range(abs(e)))
    return Word(_reduce(tuple(expanded)))


def _reduce(letters):
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def free_reduce(w: Word) -> Word:
    return Word(_reduce(w.letters))


@dataclass(frozen=True)
class SurfacePresentation:
    genus: int
    punctures: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be >= 0")
        if self.punctures < 1:
            raise ValueError(
                "punctures must be >= 1: the closed-surface case is out of scope"
            )

    @property
    def rank(self):
        return 2 * self.genus + self.punctures - 1

    @property
    def euler_characteristic(self):
        return 2 - 2 * self.genus - self.punctures

    @property
    def generator_names(self):
        names = []
        for i in range(1, self.genus + 1):
            names += [f"a{i}", f"b{i}"]
        names += [f"c{j}" for j in range(1, self.punctures)]
        return names

    def generator_index(self, name: str) -> int:
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def gen(self, name: str, exp: int = 1) -> Word:
        return word([(self.generator_index(name), exp)])


def build_presentation(genus: int, punctures: int) -> SurfacePresentation:
    return SurfacePresentation(genus, punctures)


def commutator_product(p: SurfacePresentation) -> Word:
    """prod_i [a_i, b_i] as a word."""
    letters = []
    for i in range(p.genus):
        a, b = 2 * i, 2 * i + 1
        letters += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return word(letters)


def boundary_word(p: SurfacePresentation, j: int) -> Word:
    """C_j: the loop around the j-th puncture (1-based).

    C_j = c_j for j < m; C_m is forced by prod [ai,bi] C_1 ... C_m = 1.
    """
    m = p.punctures
    if not 1 <= j <= m:
        raise ValueError(f"boundary index {j} out of range 1..{m}")
    if j < m:
        return word([(2 * p.genus + (j - 1), 1)])
    w = commutator_product(p)
    for k in range(1, m):
        w = w * word([(2 * p.genus + (k - 1), 1)])
    return w.inverse()


def parse_word(text: str, p: SurfacePresentation) -> Word:
    """Parse the CLI word grammar: whitespace-separated tokens, each a
    generator name optionally followed by ^-1."""
    letters = []
    for token in text.split():
        if "^" in token:
            name, _, exp = token.partition("^")
            if exp != "-1":
                raise ValueError(f"malformed exponent in token {token!r}: only ^-1 is allowed")
            e = -1
        else:
            name, e = token, 1
        letters.append((p.generator_index(name), e))
    return word(letters)


def word_to_string(w: Word, p: SurfacePresentation) -> str:
    names = p.generator_names
    return " ".join(
        names[g] if e == 1 else f"{names[g]}^-1" for g, e in w.letters
    )


def random_word(p: SurfacePresentation, rng, max_length: int = 6) -> Word:
    """Nonempty freely reduced word of length <= max_length (test helper)."""
    if p.rank == 0:
        return IDENTITY_WORD
    for _ in range(100):
        length = int(rng.integers(1, max_length + 1))
        letters = [
            (int(rng.integers(0, p.rank)), int(rng.choice((-1, 1))))
            for _ in range(length)
        ]
        w = word(letters)
        if not w.is_identity:
            return w
    return word([(0, 1)])
