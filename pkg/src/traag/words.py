"""Word problem for twisted right-angled Artin groups.

A word is a tuple of syllables ``(generator, exponent)`` with nonzero
exponents.  :func:`reduce` produces a reduced representative: no two
syllables on the same generator are separated only by syllables from that
generator's star.  A reduced word is the identity exactly when it is empty,
so equality is always decided through ``reduce(w1 * w2^-1)``.

Adjacent syllables on an edge {u, v} exchange as follows:

* plain edge:          ``u^m v^n = v^n u^m``
* oriented ``[u, v>``: ``v^m u^n = u^((-1)^m n) v^m`` and
                       ``u^m v^n = v^n u^((-1)^n m)``
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadExponent,
    ExponentOverflow,
    NotASource,
    NotInStar,
    ParseError,
    UnknownVertex,
)
from .mixed_graph import DOMINATED, DOMINATES, MixedGraph, star

Syllable = tuple[str, int]
Word = tuple[Syllable, ...]

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

_ATOM = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^([+-]?[0-9]+))?\Z")


def _checked(n: int) -> int:
    if not INT64_MIN <= n <= INT64_MAX:
        raise ExponentOverflow(f"exponent {n} does not fit in 64 bits")
    return n


# --------------------------------------------------------------------------- #
# text syntax


def parse_word(text: str) -> Word:
    """Parse ``"a b^2 c^-1"``; ``"1"`` (or blank) is the empty word."""
    atoms = text.split()
    if atoms == ["1"] or not atoms:
        return ()
    out = []
    for pos, atom in enumerate(atoms, start=1):
        m = _ATOM.match(atom)
        if m is None:
            raise ParseError(f"bad word atom {atom!r} (atom {pos})")
        exp = 1 if m.group(2) is None else int(m.group(2))
        if exp == 0:
            raise BadExponent(f"zero exponent in {atom!r}")
        out.append((m.group(1), _checked(exp)))
    return tuple(out)


def format_word(w: Sequence[Syllable]) -> str:
    if not w:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w)


# --------------------------------------------------------------------------- #
# raw word helpers


def invert(w: Sequence[Syllable]) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def generator(v: str, n: int = 1) -> Word:
    return ((v, n),) if n else ()


def check_word(g: MixedGraph, w: Iterable[Syllable]) -> Word:
    w = tuple(w)
    for v, e in w:
        if v not in g:
            raise UnknownVertex(f"generator {v!r} is not a vertex of the graph")
        if e == 0:
            raise BadExponent(f"zero exponent on {v!r}")
        _checked(e)
    return w


def free_merge(w: Iterable[Syllable]) -> Word:
    """Merge adjacent equal generators and drop zero syllables."""
    out: list[Syllable] = []
    for v, e in w:
        if out and out[-1][0] == v:
            e = _checked(out.pop()[1] + e)
        if e:
            out.append((v, e))
    return tuple(out)


# --------------------------------------------------------------------------- #
# exchange rules


def _pass_left(table, x: str, n: int, y: str, m: int) -> tuple[int, int]:
    """Rewrite ``y^m x^n`` as ``x^n' y^m'`` for adjacent x, y; returns (n', m')."""
    kind = table[x][y]
    if kind == DOMINATES and n & 1:
        return n, -m
    if kind == DOMINATED and m & 1:
        return -n, m
    return n, m


def _push(table, word: list[Syllable], x: str, n: int) -> None:
    """Append ``x^n`` to a reduced word in place, keeping it reduced.

    Walk left over the suffix lying in lk(x); if that walk ends on an x
    syllable, shuttle ``x^n`` leftward through the suffix and merge.  Deleting
    a cancelled syllable cannot unblock another pair, because every syllable
    to its right is adjacent to x.
    """
    lx = table[x]
    i = len(word) - 1
    while i >= 0 and word[i][0] in lx:
        i -= 1
    if i < 0 or word[i][0] != x:
        word.append((x, n))
        return
    for k in range(len(word) - 1, i, -1):
        y, m = word[k]
        n, m2 = _pass_left(table, x, n, y, m)
        if m2 != m:
            word[k] = (y, m2)
    total = _checked(word[i][1] + n)
    if total:
        word[i] = (x, total)
    else:
        del word[i]


def reduce(g: MixedGraph, w: Iterable[Syllable]) -> Word:
    """Reduced word equal to ``w`` in the group of ``g``.

    Syllables are absorbed left to right; each one merges with the nearest
    earlier syllable on the same generator when everything in between lies in
    its star.  Every merge removes at least one syllable.
    """
    w = check_word(g, w)
    table = g.exchange_table()
    out: list[Syllable] = []
    for x, n in w:
        _push(table, out, x, n)
    return tuple(out)


def is_reduced(g: MixedGraph, w: Sequence[Syllable]) -> bool:
    """Direct check of the reduced-word predicate (quadratic scan)."""
    for i, (v, e) in enumerate(w):
        if e == 0:
            return False
        st = star(g, v)
        for j in range(i + 1, len(w)):
            if w[j][0] == v:
                return False
            if w[j][0] not in st:
                break
    return True


def multiply(g: MixedGraph, *words: Iterable[Syllable]) -> Word:
    table = g.exchange_table()
    out: list[Syllable] = []
    for w in words:
        for x, n in check_word(g, w):
            _push(table, out, x, n)
    return tuple(out)


def power(g: MixedGraph, w: Iterable[Syllable], k: int) -> Word:
    """``w^k`` by repeated multiplication with intermediate reduction."""
    base = reduce(g, w)
    if k < 0:
        base, k = invert(base), -k
    acc: Word = ()
    for _ in range(k):
        acc = multiply(g, acc, base)
    return acc


def is_identity(g: MixedGraph, w: Iterable[Syllable]) -> bool:
    return not reduce(g, w)


def eq(g: MixedGraph, w1: Sequence[Syllable], w2: Sequence[Syllable]) -> bool:
    return is_identity(g, tuple(w1) + invert(w2))


# --------------------------------------------------------------------------- #
# abelianization


@dataclass(frozen=True)
class AbelianImage:
    """Exponent sums; coordinates named in ``mod2`` live in Z/2."""

    coords: tuple[tuple[str, int], ...]
    mod2: frozenset[str]

    def __getitem__(self, v: str) -> int:
        return dict(self.coords)[v]

    def is_zero(self) -> bool:
        return all(c == 0 for _, c in self.coords)

    def __str__(self) -> str:
        return ", ".join(
            f"{v}:{c}" + (" (mod 2)" if v in self.mod2 else "") for v, c in self.coords
        )


def abelianize(g: MixedGraph, w: Iterable[Syllable]) -> AbelianImage:
    """Exponent-sum vector; origins of oriented edges are taken mod 2 (``o t o t^-1`` sums to 2o)."""
    w = check_word(g, w)
    sums = dict.fromkeys(g.vertices, 0)
    for v, e in w:
        sums[v] += e
    mod2 = frozenset(e.u for e in g.oriented_edges)
    return AbelianImage(
        tuple((v, s % 2 if v in mod2 else s) for v, s in sums.items()), mod2
    )


# --------------------------------------------------------------------------- #
# operations built on the exchange rules


def pull_generator_front(g: MixedGraph, w: Iterable[Syllable], v: str) -> tuple[int, Word]:
    """Write ``w`` (a word over st(v)) as ``v^k * remainder`` with no v in the remainder."""
    w = check_word(g, w)
    st = star(g, v)
    table = g.exchange_table()
    k = 0
    rest: list[Syllable] = []
    for x, n in w:
        if x not in st:
            raise NotInStar(f"{x!r} is not in the star of {v!r}")
        if x != v:
            rest.append((x, n))
            continue
        for i in range(len(rest) - 1, -1, -1):
            y, m = rest[i]
            n, m2 = _pass_left(table, v, n, y, m)
            if m2 != m:
                rest[i] = (y, m2)
        k = _checked(k + n)
    return k, reduce(g, rest)


def canonical_form(g: MixedGraph, w: Iterable[Syllable]) -> Word:
    """A deterministic reduced representative of ``w``.

    Starting from ``reduce(g, w)``, repeatedly bring to the front the syllable
    whose generator comes first in declaration order among those whose first
    occurrence can be shuffled to the front.
    """
    rest = list(reduce(g, w))
    table = g.exchange_table()
    order = {v: i for i, v in enumerate(g.vertices)}
    out: list[Syllable] = []
    while rest:
        best = None
        allowed: set[str] | None = None
        seen: set[str] = set()
        for p, (y, _) in enumerate(rest):
            if y not in seen and (allowed is None or y in allowed):
                if best is None or order[y] < order[rest[best][0]]:
                    best = p
            seen.add(y)
            allowed = set(table[y]) if allowed is None else allowed & table[y].keys()
            if not allowed:
                break
        x, n = rest.pop(best)
        for i in range(best - 1, -1, -1):
            y, m = rest[i]
            n, m2 = _pass_left(table, x, n, y, m)
            if m2 != m:
                rest[i] = (y, m2)
        out.append((x, n))
    return tuple(out)


def torsion_probe(g: MixedGraph, w: Iterable[Syllable], k_max: int) -> int | None:
    """Least ``k`` in ``2..k_max`` with ``w^k = 1``; None if ``w = 1`` or nothing found."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    base = reduce(g, w)
    if not base:
        return None
    acc = base
    for k in range(2, k_max + 1):
        acc = multiply(g, acc, base)
        if not acc:
            return k
    return None


def project_kill_source(g: MixedGraph, v: str, w: Iterable[Syllable]) -> Word:
    """Image of ``w`` under the retraction onto V - {v} sending ``v`` to 1.

    The map is a homomorphism only when ``v`` is a source; the result is a raw
    (unreduced) word over the remaining vertices.
    """
    w = check_word(g, w)
    if not g.is_source(v):
        raise NotASource(f"{v!r} is the target of an oriented edge")
    return tuple((x, e) for x, e in w if x != v)


def random_word(
    rng: random.Random, gens: Sequence[str], max_len: int, max_exp: int = 3
) -> Word:
    """Random syllable word; length uniform in ``0..max_len``."""
    if not gens:
        return ()
    return tuple(
        (rng.choice(gens), rng.choice([-1, 1]) * rng.randint(1, max_exp))
        for _ in range(rng.randint(0, max_len))
    )
