"""Left-orders on the Klein-bottle subgroup spanned by an oriented edge.

For an oriented edge ``[b, a>`` the pair generates ``K = <a, b | a b a^-1 = b^-1>``
and every element is ``a^n b^m`` for a unique pair ``(n, m)``.  Products and
inverses stay in these coordinates:

    (n1, m1) * (n2, m2) = (n1 + n2, (-1)^n2 m1 + m2)
    (n, m)^-1           = (-n, (-1)^(n+1) m)

The four positive cones ``P(eps, mu)`` contain ``a^n b^m`` when ``eps*n >= 1``,
or when ``n == 0`` and ``mu*m >= 1``.

The arithmetic functions accept plain ints or numpy integer arrays in the
coordinate fields, so sweeps can be vectorised.  Overflow checking only
applies to plain ints.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import ExponentOverflow, ForeignGenerator, NotAnOrientedEdge
from .mixed_graph import Edge, MixedGraph
from .words import INT64_MAX, INT64_MIN, Syllable, check_word, pull_generator_front


class KleinCoords(NamedTuple):
    n: int  # exponent of the dominating generator a
    m: int  # exponent of the dominated generator b

    def __str__(self) -> str:
        return f"a^{self.n} b^{self.m}"


IDENTITY = KleinCoords(0, 0)


class Cone(NamedTuple):
    epsilon: int
    mu: int

    def __str__(self) -> str:
        return f"{self.epsilon:+d},{self.mu:+d}"


ALL_CONES = tuple(Cone(e, m) for e, m in itertools.product((1, -1), repeat=2))


class Order(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"


def make_cone(epsilon: int, mu: int) -> Cone:
    if epsilon not in (1, -1) or mu not in (1, -1):
        raise ValueError(f"cone signs must be +1 or -1, got ({epsilon}, {mu})")
    return Cone(epsilon, mu)


@dataclass(frozen=True)
class KleinContext:
    graph: MixedGraph
    dominated: str  # b, the origin
    dominator: str  # a, the target

    @property
    def edge(self) -> Edge:
        return Edge(self.dominated, self.dominator, oriented=True)


def klein_context(g: MixedGraph, origin: str, target: str) -> KleinContext:
    g.index(origin)
    g.index(target)
    if g.edge_between(origin, target) != Edge(origin, target, oriented=True):
        raise NotAnOrientedEdge(f"[{origin},{target}> is not an oriented edge of the graph")
    return KleinContext(g, origin, target)


def klein_coords(ctx: KleinContext, w: Iterable[Syllable]) -> KleinCoords:
    w = check_word(ctx.graph, w)
    pair = {ctx.dominator, ctx.dominated}
    for v, _ in w:
        if v not in pair:
            raise ForeignGenerator(f"{v!r} is not one of {sorted(pair)}")
    sub = ctx.graph.induced(pair)
    n, rest = pull_generator_front(sub, w, ctx.dominator)
    return KleinCoords(n, rest[0][1] if rest else 0)


def _sign(n):
    # (-1)^n; works for negative ints and for integer arrays
    return 1 - 2 * (n & 1)


def _checked(value):
    if isinstance(value, (int, np.integer)) and not INT64_MIN <= int(value) <= INT64_MAX:
        raise ExponentOverflow(f"coordinate {value} does not fit in 64 bits")
    return value


def coords_multiply(x: KleinCoords, y: KleinCoords) -> KleinCoords:
    return KleinCoords(_checked(x.n + y.n), _checked(_sign(y.n) * x.m + y.m))


def coords_inverse(x: KleinCoords) -> KleinCoords:
    return KleinCoords(-x.n, -_sign(x.n) * x.m)


def coords_power(x: KleinCoords, k: int) -> KleinCoords:
    if k < 0:
        x, k = coords_inverse(x), -k
    acc = IDENTITY
    for _ in range(k):
        acc = coords_multiply(acc, x)
    return acc


def cone_contains(c: Cone, x: KleinCoords):
    return (c.epsilon * x.n >= 1) | ((x.n == 0) & (c.mu * x.m >= 1))


def precedes(c: Cone, x: KleinCoords, y: KleinCoords):
    """``x < y`` in the left-order of cone ``c``, i.e. ``x^-1 y`` is positive."""
    return cone_contains(c, coords_multiply(coords_inverse(x), y))


def klein_compare(c: Cone, x: KleinCoords, y: KleinCoords) -> Order:
    if x == y:
        return Order.EQUAL
    return Order.LESS if precedes(c, x, y) else Order.GREATER


def positive_generator(c: Cone) -> KleinCoords:
    """Whichever of ``a``, ``a^-1`` is positive in cone ``c``."""
    return KleinCoords(c.epsilon, 0)


@dataclass(frozen=True)
class ConeReport:
    cone: Cone
    bound: int
    checked_points: int
    checked_products: int
    counterexample: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def verify_cone_axioms(c: Cone, bound: int) -> ConeReport:
    """Exhaustive trichotomy and closure check on the box ``|n|, |m| <= bound``.

    Closure is tested for every pair of members whose product stays in the
    box.  The search is vectorised over the second factor.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    nn, mm = (a.ravel() for a in np.meshgrid(r, r, indexing="ij"))
    box = KleinCoords(nn, mm)
    inside = cone_contains(c, box)
    inverse_inside = cone_contains(c, coords_inverse(box))
    nonzero = (nn != 0) | (mm != 0)

    bad = nonzero & (inside == inverse_inside)
    bad |= ~nonzero & (inside | inverse_inside)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        return ConeReport(c, bound, nn.size, 0, ("trichotomy", (int(nn[i]), int(mm[i]))))

    members = KleinCoords(nn[inside], mm[inside])
    products = 0
    for xn, xm in zip(members.n.tolist(), members.m.tolist()):
        prod = coords_multiply(KleinCoords(xn, xm), members)
        in_box = (np.abs(prod.n) <= bound) & (np.abs(prod.m) <= bound)
        products += int(in_box.sum())
        escaped = in_box & ~cone_contains(c, prod)
        if escaped.any():
            j = int(np.flatnonzero(escaped)[0])
            pair = ((xn, xm), (int(members.n[j]), int(members.m[j])))
            return ConeReport(c, bound, nn.size, products, ("closure", pair))
    return ConeReport(c, bound, nn.size, products)


def convexity_sweep(c: Cone, bound: int) -> tuple[int, int | None]:
    """Check ``b^m < max(a, a^-1)`` for every ``|m| <= bound``.

    Returns the number of values checked and the first failing ``m``, if any.
    """
    m = np.arange(-bound, bound + 1, dtype=np.int64)
    top = positive_generator(c)
    ok = precedes(c, KleinCoords(np.zeros_like(m), m), KleinCoords(np.full_like(m, top.n), np.zeros_like(m)))
    bad = np.flatnonzero(~ok)
    return m.size, (int(m[bad[0]]) if bad.size else None)
