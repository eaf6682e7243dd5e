"""Word-level ground truth via the Artin representation.

Braid words act on a free group F_n; equality of braid-group elements is
decided by comparing the reduced images of the basis letters.  This module
supplies the swing-generator words, the chord commutation predicate, and
mechanical checks of the presentation identities the classifier relies on.

Convention: products are composed left-to-right, so the automorphism of a
concatenated word uv is "apply u's automorphism, then v's".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Word = tuple[int, ...]

WORD_ENGINE_MAX_STRANDS = 6


class BudgetExceededError(ValueError):
    """Raised when a word-level operation exceeds the strand budget."""


# -- free words ------------------------------------------------------------


def free_reduce(letters: Iterable[int]) -> Word:
    """Cancel adjacent x x^-1 pairs until none remain."""
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


# -- free group automorphisms ---------------------------------------------


def _apply_images(images: Sequence[Word], word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        img = images[x - 1] if x > 0 else invert_word(images[-x - 1])
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


@dataclass(frozen=True)
class FreeGroupAut:
    """Automorphism of F_rank given by reduced images of the basis letters,
    together with the images under its inverse (verified on construction)."""

    rank: int
    images: tuple[Word, ...]
    inverse_images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank or len(self.inverse_images) != self.rank:
            raise ValueError("need one image per basis letter")
        for i in range(self.rank):
            if _apply_images(self.inverse_images, self.images[i]) != (i + 1,):
                raise ValueError(
                    f"inverse_images do not invert images at basis letter {i + 1}"
                )

    def apply(self, word: Iterable[int]) -> Word:
        return _apply_images(self.images, word)

    def inverse_apply(self, word: Iterable[int]) -> Word:
        return _apply_images(self.inverse_images, word)

    def inverse(self) -> "FreeGroupAut":
        return FreeGroupAut(self.rank, self.inverse_images, self.images)


def identity_aut(rank: int) -> FreeGroupAut:
    basis = tuple((i,) for i in range(1, rank + 1))
    return FreeGroupAut(rank, basis, basis)


def compose(f: FreeGroupAut, g: FreeGroupAut) -> FreeGroupAut:
    """f then g (left-to-right)."""
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    images = tuple(g.apply(w) for w in f.images)
    inverse_images = tuple(f.inverse_apply(w) for w in g.inverse_images)
    return FreeGroupAut(f.rank, images, inverse_images)


def aut_equal(f: FreeGroupAut, g: FreeGroupAut) -> bool:
    return f.rank == g.rank and f.images == g.images


@lru_cache(maxsize=None)
def artin_sigma(i: int, n: int, inverse: bool = False) -> FreeGroupAut:
    """The Artin action of sigma_i on F_n: x_i -> x_i x_{i+1} x_i^-1,
    x_{i+1} -> x_i, other letters fixed."""
    if not 1 <= i < n:
        raise ValueError(f"need 1 <= i < n, got i={i}, n={n}")
    images = [(k,) for k in range(1, n + 1)]
    inv = [(k,) for k in range(1, n + 1)]
    images[i - 1] = (i, i + 1, -i)
    images[i] = (i,)
    inv[i - 1] = (i + 1,)
    inv[i] = (-(i + 1), i, i + 1)
    if inverse:
        images, inv = inv, images
    return FreeGroupAut(n, tuple(images), tuple(inv))


# -- braid words -----------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators sigma_1..sigma_{n-1}; letter k stands
    for sigma_k and -k for its inverse."""

    n: int
    letters: Word

    def __post_init__(self) -> None:
        for x in self.letters:
            if not 1 <= abs(x) <= self.n - 1:
                raise ValueError(f"letter {x} out of range for {self.n} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError("strand count mismatch")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, invert_word(self.letters))


def braid_aut(w: BraidWord) -> FreeGroupAut:
    aut = identity_aut(w.n)
    for x in w.letters:
        aut = compose(aut, artin_sigma(abs(x), w.n, inverse=x < 0))
    return aut


def braid_perm(w: BraidWord) -> tuple[int, ...]:
    """Strand permutation of the word (image of each strand position)."""
    perm = list(range(1, w.n + 1))
    for x in w.letters:
        i = abs(x)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def is_pure(w: BraidWord) -> bool:
    return braid_perm(w) == tuple(range(1, w.n + 1))


def standard_pure_word(i: int, j: int, n: int) -> BraidWord:
    """The standard pure generator for the pair {i, j}:
    (sigma_{j-1} ... sigma_{i+1}) sigma_i^2 (sigma_{i+1}^-1 ... sigma_{j-1}^-1)."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}), n={n}")
    prefix = list(range(j - 1, i, -1))
    letters = prefix + [i, i] + [-k for k in reversed(prefix)]
    return BraidWord(n, tuple(letters))


def full_twist_word(lo: int, hi: int, n: int) -> BraidWord:
    """Full twist on the contiguous strand block lo..hi:
    (sigma_lo ... sigma_{hi-1})^(hi-lo+1)."""
    if not 1 <= lo < hi <= n:
        raise ValueError(f"bad block {lo}..{hi} for n={n}")
    period = tuple(range(lo, hi))
    return BraidWord(n, period * (hi - lo + 1))


def swing_word(a: Iterable[int], n: int) -> BraidWord:
    """Word realizing the swing generator on the index set, via the layered
    pair factorization: for a = {a_1 < ... < a_k} take the product of the
    standard pair generators A_{a_i a_j} grouped by increasing j, then i."""
    aset = tuple(sorted(a))
    word = BraidWord(n, ())
    for j in range(1, len(aset)):
        for i in range(j):
            word = word * standard_pure_word(aset[i], aset[j], n)
    return word


# -- commutation -----------------------------------------------------------


def commutes_predicate(a: Iterable[int], b: Iterable[int]) -> bool:
    """Sufficient commutation test for swing generators S_A, S_B with the
    points in convex position: nested sets commute, and so do disjoint sets
    whose convex hulls do not cross (no cyclic interleaving of labels)."""
    sa, sb = set(a), set(b)
    if sa <= sb or sb <= sa:
        return True
    if sa & sb:
        return False
    marks = [x in sa for x in sorted(sa | sb)]
    crossings = sum(1 for k in range(len(marks)) if marks[k] != marks[k - 1])
    return crossings == 2


def commute_wordlevel(u: BraidWord, v: BraidWord) -> bool:
    if u.n != v.n:
        raise ValueError("strand count mismatch")
    if u.n > WORD_ENGINE_MAX_STRANDS:
        raise BudgetExceededError(f"word engine capped at {WORD_ENGINE_MAX_STRANDS} strands")
    return aut_equal(braid_aut(u * v), braid_aut(v * u))


# -- identity suite --------------------------------------------------------


def _products_equal(words: Sequence[BraidWord]) -> bool:
    auts = [braid_aut(w) for w in words]
    return all(aut_equal(auts[0], h) for h in auts[1:])


def _cyclic_triple_words(i: int, j: int, k: int, n: int) -> list[BraidWord]:
    p, q, r = (
        standard_pure_word(i, j, n),
        standard_pure_word(i, k, n),
        standard_pure_word(j, k, n),
    )
    return [p * q * r, q * r * p, r * p * q]


def verify_p3_relation() -> bool:
    """abc = bca = cab for a=S12, b=S13, c=S23 in P_3, and the product is
    central (commutes with a and b)."""
    a = standard_pure_word(1, 2, 3)
    b = standard_pure_word(1, 3, 3)
    c = standard_pure_word(2, 3, 3)
    if not _products_equal([a * b * c, b * c * a, c * a * b]):
        return False
    delta = a * b * c
    return commute_wordlevel(delta, a) and commute_wordlevel(delta, b)


def verify_swing_factorizations() -> bool:
    """The three cyclic pair factorizations of a triple swing coincide, for
    every contiguous triple with up to 5 strands."""
    for n in (3, 4, 5):
        for i in range(1, n - 1):
            if not _products_equal(_cyclic_triple_words(i, i + 1, i + 2, n)):
                return False
    return True


PLANAR_RELATIONS: list[tuple[str, str, str]] = [
    ("abc=bca", "abc", "bca"),
    ("bca=cab", "bca", "cab"),
    ("ad=da", "ad", "da"),
    ("cde=dec", "cde", "dec"),
    ("dec=ecd", "dec", "ecd"),
    ("be=eb", "be", "eb"),
    ("bfd=fdb", "bfd", "fdb"),
    ("fdb=dbf", "fdb", "dbf"),
    ("cf=fc", "cf", "fc"),
]


def _eval_letters(words: Mapping[str, BraidWord], letters: str, n: int) -> BraidWord:
    out = BraidWord(n, ())
    for ch in letters:
        out = out * words[ch]
    return out


def verify_planar_presentation(words: Mapping[str, BraidWord]) -> dict[str, bool]:
    """Check candidate words for the planar generators a..f of P_4 against
    all nine planar relations; returns a per-relation report."""
    report = {}
    for name, lhs, rhs in PLANAR_RELATIONS:
        report[name] = aut_equal(
            braid_aut(_eval_letters(words, lhs, 4)),
            braid_aut(_eval_letters(words, rhs, 4)),
        )
    return report


RHO_IMAGE = {"a": "a", "d": "a", "b": "b", "e": "b", "c": "c", "f": "c"}


def verify_rho() -> bool:
    """Substituting the disjoint-edge identification a,d -> a; b,e -> b;
    c,f -> c into every planar relation yields an identity of P_3."""
    p3_words = {
        "a": standard_pure_word(1, 2, 3),
        "b": standard_pure_word(1, 3, 3),
        "c": standard_pure_word(2, 3, 3),
    }
    for _, lhs, rhs in PLANAR_RELATIONS:
        lhs_img = "".join(RHO_IMAGE[ch] for ch in lhs)
        rhs_img = "".join(RHO_IMAGE[ch] for ch in rhs)
        if not aut_equal(
            braid_aut(_eval_letters(p3_words, lhs_img, 3)),
            braid_aut(_eval_letters(p3_words, rhs_img, 3)),
        ):
            return False
    return True


# -- plain-text word notation ---------------------------------------------
#
# "s2 s1 s1 S2" means sigma_2 sigma_1 sigma_1 sigma_2^-1.


def parse_artin_word(text: str, n: int) -> BraidWord:
    letters = []
    for tok in text.split():
        if len(tok) < 2 or tok[0] not in "sS" or not tok[1:].isdigit():
            raise ValueError(f"bad Artin letter token {tok!r}")
        k = int(tok[1:])
        letters.append(k if tok[0] == "s" else -k)
    return BraidWord(n, tuple(letters))


def format_artin_word(w: BraidWord) -> str:
    return " ".join(f"s{x}" if x > 0 else f"S{-x}" for x in w.letters)
