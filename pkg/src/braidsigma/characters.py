"""Characters of the pure braid group as exact rational edge weightings.

A character of P_n is determined freely by its values on the standard
generators S_ij, so we store it as a total map from unordered pairs
{i, j} of strand indices to rationals.  All arithmetic is exact
(``fractions.Fraction``); every zero-test below is therefore decidable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]
SwingSet = tuple[int, ...]


class ZeroCharacterError(ValueError):
    """Raised when an operation requires a nonzero character."""


class CharacterFormatError(ValueError):
    """Raised for malformed character data (constructor input or JSON)."""


def edge(i: int, j: int) -> Edge:
    """Normalize an unordered pair to (min, max)."""
    if i == j:
        raise ValueError(f"edge endpoints must be distinct, got {{{i},{j}}}")
    return (i, j) if i < j else (j, i)


def all_edges(n: int) -> list[Edge]:
    return list(combinations(range(1, n + 1), 2))


def swing_set(members: Iterable[int], n: int) -> SwingSet:
    """Validate and normalize a swing index set: distinct, in range, size >= 2."""
    a = tuple(sorted(members))
    if len(a) < 2:
        raise ValueError(f"swing set needs at least 2 indices, got {a}")
    if len(set(a)) != len(a):
        raise ValueError(f"swing set has repeated indices: {a}")
    if a[0] < 1 or a[-1] > n:
        raise IndexError(f"swing set {a} out of range 1..{n}")
    return a


@dataclass(frozen=True)
class Character:
    """Rational weight per unordered pair {i, j}, 1 <= i < j <= n.

    The weights mapping is total: every pair appears, zeros included.
    Instances are immutable values; all operations on them are pure.
    """

    n: int
    weights: Mapping[Edge, Fraction]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise CharacterFormatError(f"need n >= 2, got n={self.n}")
        expected = set(all_edges(self.n))
        got = set(self.weights)
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            raise CharacterFormatError(
                f"weights must cover exactly the pairs of 1..{self.n}; "
                f"missing={missing} extra={extra}"
            )

    @staticmethod
    def dense(n: int, weights: Mapping[Edge, Fraction | int | str]) -> "Character":
        """Build from a total pair -> value mapping (every pair required)."""
        w = {edge(i, j): Fraction(v) for (i, j), v in weights.items()}
        return Character(n, w)

    @staticmethod
    def sparse(n: int, weights: Mapping[Edge, Fraction | int | str]) -> "Character":
        """Build from a partial mapping; unspecified pairs get weight 0."""
        w = {e: Fraction(0) for e in all_edges(n)}
        for (i, j), v in weights.items():
            e = edge(i, j)
            if e not in w:
                raise CharacterFormatError(f"pair {e} out of range for n={n}")
            w[e] = Fraction(v)
        return Character(n, w)

    @staticmethod
    def zero(n: int) -> "Character":
        return Character.sparse(n, {})

    def weight(self, i: int, j: int) -> Fraction:
        return self.weights[edge(i, j)]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.weights.values())

    def support_edges(self) -> list[Edge]:
        return [e for e in all_edges(self.n) if self.weights[e] != 0]

    def __add__(self, other: "Character") -> "Character":
        if self.n != other.n:
            raise ValueError("cannot add characters with different n")
        return Character(
            self.n, {e: self.weights[e] + other.weights[e] for e in self.weights}
        )

    def scale(self, q: Fraction | int) -> "Character":
        q = Fraction(q)
        return Character(self.n, {e: q * v for e, v in self.weights.items()})


@dataclass(frozen=True)
class ProjectivePoint:
    """Canonical representative of a positive-dilation class of characters.

    Weights are scaled to integers with collective gcd 1; the overall sign
    is preserved (positive dilations cannot flip it), so two characters give
    the same point exactly when one is a positive rational multiple of the
    other.
    """

    character: Character

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return (
            self.character.n == other.character.n
            and self.character.weights == other.character.weights
        )

    def __hash__(self) -> int:
        return hash(
            (self.character.n, tuple(sorted(self.character.weights.items())))
        )


def swing_value(chi: Character, a: Iterable[int]) -> Fraction:
    """Value of the character on S_A: the sum of weights over pairs inside A."""
    aset = swing_set(a, chi.n)
    total = Fraction(0)
    for i, j in combinations(aset, 2):
        total += chi.weights[(i, j)]
    return total


def delta_value(chi: Character) -> Fraction:
    """Value on the central full twist: sum of all edge weights."""
    total = Fraction(0)
    for v in chi.weights.values():
        total += v
    return total


def normalize(chi: Character) -> ProjectivePoint:
    """Canonical form of the positive-dilation class of a nonzero character."""
    if chi.is_zero():
        raise ZeroCharacterError("the zero character has no projective class")
    denoms = [v.denominator for v in chi.weights.values() if v != 0]
    scale = lcm(*denoms) if denoms else 1
    ints = {e: v.numerator * (scale // v.denominator) for e, v in chi.weights.items()}
    g = gcd(*(abs(x) for x in ints.values() if x != 0))
    canon = {e: Fraction(x // g) for e, x in ints.items()}
    return ProjectivePoint(Character(chi.n, canon))


def permute(chi: Character, perm: Sequence[int]) -> Character:
    """Relabel strands: the result weight on {perm(i), perm(j)} is the
    input weight on {i, j}.  ``perm[i-1]`` is the image of ``i``."""
    n = chi.n
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"perm must be a bijection on 1..{n}, got {perm}")
    out = {}
    for (i, j), v in chi.weights.items():
        out[edge(perm[i - 1], perm[j - 1])] = v
    return Character(n, out)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def compose_perms(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """(tau o sigma): first sigma, then tau."""
    return tuple(tau[s - 1] for s in sigma)


def invert_perm(perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, p in enumerate(perm, start=1):
        out[p - 1] = i
    return tuple(out)


def pullback_phi(psi: Character, a: Iterable[int], n: int) -> Character:
    """Pull back along the strand-forgetting projection onto the positions in
    ``a``: the weight on {a_r, a_s} is psi's weight on {r, s}; pairs with an
    endpoint outside ``a`` get zero."""
    aset = swing_set(a, n)
    if len(aset) != psi.n:
        raise ValueError(
            f"swing set size {len(aset)} does not match character on {psi.n} strands"
        )
    out = {e: Fraction(0) for e in all_edges(n)}
    for (r, s), v in psi.weights.items():
        out[edge(aset[r - 1], aset[s - 1])] = v
    return Character(n, out)


# Edge dictionary for the planar generating set of P_4 (labels a..f of the
# planar K_4 picture): a={1,2}, b={1,3}, c={2,3}, d={3,4}, e={2,4}, f={1,4}.
PLANAR_EDGE_OF = {
    "a": (1, 2),
    "b": (1, 3),
    "c": (2, 3),
    "d": (3, 4),
    "e": (2, 4),
    "f": (1, 4),
}


def pullback_rho(psi: Character) -> Character:
    """Pull back a character on P_3 along the map P_4 ->> P_3 that identifies
    the planar generators on disjoint K_4 edges: w12=w34=psi(S12),
    w13=w24=psi(S13), w14=w23=psi(S23)."""
    if psi.n != 3:
        raise ValueError(f"pullback_rho needs a character on P_3, got n={psi.n}")
    p12, p13, p23 = psi.weight(1, 2), psi.weight(1, 3), psi.weight(2, 3)
    return Character.dense(
        4,
        {
            (1, 2): p12,
            (3, 4): p12,
            (1, 3): p13,
            (2, 4): p13,
            (1, 4): p23,
            (2, 3): p23,
        },
    )


# -- JSON wire format ------------------------------------------------------
#
# {"n": 4, "weights": {"1-2": "3", "1-3": "2/5", ...}}  -- every pair present.


def character_to_json_dict(chi: Character) -> dict:
    return {
        "n": chi.n,
        "weights": {f"{i}-{j}": str(chi.weights[(i, j)]) for i, j in all_edges(chi.n)},
    }


def character_from_json_dict(data: dict) -> Character:
    if not isinstance(data, dict):
        raise CharacterFormatError("character JSON must be an object")
    if "n" not in data:
        raise CharacterFormatError("missing key 'n'")
    if "weights" not in data:
        raise CharacterFormatError("missing key 'weights'")
    n = data["n"]
    if not isinstance(n, int) or n < 2:
        raise CharacterFormatError(f"'n' must be an integer >= 2, got {n!r}")
    raw = data["weights"]
    if not isinstance(raw, dict):
        raise CharacterFormatError("'weights' must be an object")
    weights = {}
    for key, val in raw.items():
        try:
            i_s, j_s = key.split("-")
            e = edge(int(i_s), int(j_s))
        except (ValueError, AttributeError) as exc:
            raise CharacterFormatError(f"bad weight key {key!r}") from exc
        if not (1 <= e[0] and e[1] <= n):
            raise CharacterFormatError(f"weight key {key!r} out of range for n={n}")
        if e in weights:
            raise CharacterFormatError(f"duplicate weight key {key!r}")
        try:
            weights[e] = Fraction(val)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise CharacterFormatError(f"bad rational {val!r} for key {key!r}") from exc
    missing = [e for e in all_edges(n) if e not in weights]
    if missing:
        raise CharacterFormatError(
            f"missing weight keys: {['{}-{}'.format(i, j) for i, j in missing]}"
        )
    return Character(n, weights)


def character_from_json(text: str) -> Character:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CharacterFormatError(f"invalid JSON: {exc}") from exc
    return character_from_json_dict(data)
