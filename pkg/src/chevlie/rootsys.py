"""Irreducible root systems of the simple types A-G in exact arithmetic.

Roots are integer coefficient vectors over the simple roots.  The Cartan
matrix convention used throughout the package is

    cartan[i][j] = value of the simple root alpha_j on the coroot alpha_i,

so the pairing of a root ``beta = sum n_j alpha_j`` with the coroot of
``alpha_i`` is row i of ``cartan`` dotted with ``n``.  Lengths never leave
the integers: the squared length of beta is ``n . R . n`` for the root Gram
matrix R scaled so that short roots have squared length 2 and long roots
2c, with c the squared length ratio (1, 2 or 3).

Node numbering: E8 uses the chain order alpha_1 .. alpha_7 with the branch
node alpha_8 attached to alpha_5 (marks 2,3,4,5,6,4,2,3); G2 has alpha_1
long and alpha_2 short; F4 has alpha_1, alpha_2 long and alpha_3, alpha_4
short.  The remaining families follow the Bourbaki tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import InvalidLieTypeError, NotARootError, InternalConsistencyError
from .intform import det_int

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class LieType:
    """A simple type such as E8: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise InvalidLieTypeError(f"unknown family {self.family!r}; expected one of A-G")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo:
            raise InvalidLieTypeError(f"{self.family}{self.rank}: family {self.family} needs rank >= {lo}")
        if hi is not None and self.rank > hi:
            raise InvalidLieTypeError(f"{self.family}{self.rank}: family {self.family} needs rank <= {hi}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        s = text.strip().upper()
        if len(s) < 2 or not s[1:].isdigit():
            raise InvalidLieTypeError(f"cannot parse Lie type from {text!r} (expected e.g. 'E8')")
        return cls(s[0], int(s[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root, stored by its coefficients over the simple roots."""

    coords: tuple[int, ...]
    height: int
    length_class: str  # "long" or "short"; simply laced systems are all long

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords), -self.height, self.length_class)


def _cartan_and_shorts(family: str, rank: int) -> tuple[list[list[int]], frozenset[int]]:
    edges: list[tuple[int, int]]
    shorts: frozenset[int] = frozenset()
    overrides: list[tuple[int, int, int]] = []  # (i, j, entry)
    if family == "A":
        edges = [(i, i + 1) for i in range(rank - 1)]
    elif family == "B":
        edges = [(i, i + 1) for i in range(rank - 1)]
        shorts = frozenset({rank - 1})
        overrides = [(rank - 1, rank - 2, -2)]
    elif family == "C":
        edges = [(i, i + 1) for i in range(rank - 1)]
        shorts = frozenset(range(rank - 1))
        overrides = [(rank - 2, rank - 1, -2)]
    elif family == "D":
        edges = [(i, i + 1) for i in range(rank - 3)]
        edges += [(rank - 3, rank - 2), (rank - 3, rank - 1)]
    elif family == "E" and rank == 6:
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
    elif family == "E" and rank == 7:
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)]
    elif family == "E":
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]
    elif family == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
        shorts = frozenset({2, 3})
        overrides = [(2, 1, -2)]
    else:  # G
        edges = [(0, 1)]
        shorts = frozenset({1})
        overrides = [(1, 0, -3)]
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        cartan[i][j] = cartan[j][i] = -1
    for i, j, v in overrides:
        cartan[i][j] = v
    return cartan, shorts


class RootSystem:
    """The full root system of a simple type, with the invariants derived
    from it: highest root and marks, Coxeter numbers, coroot Gram, center.

    Instances are immutable after construction and safe to share across
    threads.  The canonical basis order is: positive roots ascending by
    (height, coefficient tuple), then their negatives in the same order.
    """

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        self.rank = lie_type.rank
        cartan, shorts = _cartan_and_shorts(lie_type.family, lie_type.rank)
        self.cartan = tuple(tuple(r) for r in cartan)
        self.short_simples = shorts
        self.ratio_c = 1 if not shorts else (3 if lie_type.family == "G" else 2)
        c = self.ratio_c
        # root Gram R (rows scaled): long simple roots squared length 2c, short 2
        self.root_gram = tuple(
            tuple((1 if i in shorts else c) * cartan[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )
        # coroot Gram: long roots have coroots of squared length 2, short 2c
        self.coroot_gram = tuple(
            tuple(cartan[i][j] * (c if j in shorts else 1) for j in range(self.rank))
            for i in range(self.rank)
        )
        self._build_roots()
        self.marks = self.highest_root.coords
        self.coxeter_h = 1 + sum(self.marks)
        self.dual_coxeter = self._dual_coxeter()
        self.center_order = abs(det_int([list(r) for r in self.cartan]))
        self.dim = self.rank + len(self.roots)
        self._coroot_cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    # -- construction ------------------------------------------------------

    def _build_roots(self) -> None:
        rank = self.rank
        cartan = self.cartan
        seen: set[tuple[int, ...]] = set()
        frontier = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
        seen.update(frontier)
        while frontier:
            fresh = []
            for v in frontier:
                pair = [sum(cartan[i][j] * v[j] for j in range(rank)) for i in range(rank)]
                for i in range(rank):
                    if pair[i] == 0:
                        continue
                    w = list(v)
                    w[i] -= pair[i]
                    wt = tuple(w)
                    if wt not in seen:
                        seen.add(wt)
                        fresh.append(wt)
            frontier = fresh
        for v in seen:
            pos = sum(1 for x in v if x > 0)
            neg = sum(1 for x in v if x < 0)
            if pos and neg:
                raise InternalConsistencyError(f"mixed-sign root coefficients: {v}")
        positives = sorted((v for v in seen if sum(v) > 0), key=lambda v: (sum(v), v))
        self.positive = tuple(self._make_root(v) for v in positives)
        self.roots = self.positive + tuple(-r for r in self.positive)
        self._index = {r.coords: i for i, r in enumerate(self.roots)}
        self.highest_root = max(self.positive, key=lambda r: r.height)
        for r in self.positive:
            if any(a > b for a, b in zip(r.coords, self.highest_root.coords)):
                raise InternalConsistencyError("highest root does not dominate")

    def _make_root(self, coords: tuple[int, ...]) -> Root:
        n2 = self.length_sq(coords)
        if n2 == 2 and self.ratio_c > 1:
            cls = "short"
        elif n2 == 2 * self.ratio_c:
            cls = "long"
        else:
            raise InternalConsistencyError(f"unexpected squared length {n2} for {coords}")
        return Root(coords, sum(coords), cls)

    def _dual_coxeter(self) -> int:
        c = self.ratio_c
        total = Fraction(1)
        for i, m in enumerate(self.marks):
            total += Fraction(m) if i not in self.short_simples else Fraction(m, c)
        if total.denominator != 1:
            raise InternalConsistencyError("dual Coxeter number is not an integer")
        return int(total)

    # -- basic queries ------------------------------------------------------

    @property
    def root_count(self) -> int:
        return len(self.roots)

    def coords_of(self, root: Union[Root, Sequence[int]]) -> tuple[int, ...]:
        coords = tuple(root.coords if isinstance(root, Root) else root)
        if coords not in self._index:
            raise NotARootError(f"{coords} is not a root of {self.lie_type}")
        return coords

    def is_root(self, coords: Sequence[int]) -> bool:
        return tuple(coords) in self._index

    def root(self, coords: Sequence[int]) -> Root:
        return self.roots[self._index[self.coords_of(coords)]]

    def index(self, root: Union[Root, Sequence[int]]) -> int:
        return self._index[self.coords_of(root)]

    def length_sq(self, coords: Sequence[int]) -> int:
        R = self.root_gram
        n = len(coords)
        return sum(coords[i] * R[i][j] * coords[j] for i in range(n) for j in range(n))

    def simple_pairings(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Values of the vector on each simple coroot: cartan . coords."""
        return tuple(sum(self.cartan[i][j] * coords[j] for j in range(self.rank)) for i in range(self.rank))

    def reflect(self, i: int, coords: Sequence[int]) -> tuple[int, ...]:
        """Simple reflection s_i applied to a vector in root coordinates."""
        v = sum(self.cartan[i][j] * coords[j] for j in range(self.rank))
        out = list(coords)
        out[i] -= v
        return tuple(out)

    def reflect_in_root(self, root: Union[Root, Sequence[int]], coords: Sequence[int]) -> tuple[int, ...]:
        """Reflection in an arbitrary root, acting on root coordinates."""
        delta = self.coords_of(root)
        v = self.pairing_with_coroot(coords, delta)
        return tuple(x - v * d for x, d in zip(coords, delta))

    def pairing_with_coroot(self, beta: Sequence[int], gamma: Union[Root, Sequence[int]]) -> int:
        """Value of the vector beta on the coroot of the root gamma."""
        m = self.coroot_coords(gamma)
        pair = self.simple_pairings(tuple(beta))
        return sum(mk * pk for mk, pk in zip(m, pair))

    # -- named operations ----------------------------------------------------

    def numbers(self) -> tuple[int, int, int]:
        """(Coxeter number h, squared length ratio c, dual Coxeter number)."""
        return (self.coxeter_h, self.ratio_c, self.dual_coxeter)

    def root_string_m(self, alpha: Union[Root, Sequence[int]], beta: Union[Root, Sequence[int]]) -> int:
        """Largest m >= 0 such that beta - m*alpha is still a root."""
        a = self.coords_of(alpha)
        b = self.coords_of(beta)
        m = 0
        while True:
            b = tuple(x - y for x, y in zip(b, a))
            if b not in self._index:
                return m
            m += 1

    def coroot_coords(self, beta: Union[Root, Sequence[int]]) -> tuple[int, ...]:
        """Coefficients of the coroot of beta over the simple coroots."""
        coords = self.coords_of(beta)
        cached = self._coroot_cache.get(coords)
        if cached is not None:
            return cached
        n2 = self.length_sq(coords)
        out = []
        for j, nj in enumerate(coords):
            m = Fraction(nj * self.root_gram[j][j], n2)
            if m.denominator != 1:
                raise InternalConsistencyError(f"non-integral coroot coefficient for {coords}")
            out.append(int(m))
        result = tuple(out)
        pair = self.simple_pairings(coords)
        if sum(mk * pk for mk, pk in zip(result, pair)) != 2:
            raise InternalConsistencyError(f"coroot of {coords} fails <beta, beta^> = 2")
        self._coroot_cache[coords] = result
        return result


def build(lie_type: Union[LieType, str]) -> RootSystem:
    """Construct the root system for a type given as LieType or text like 'F4'."""
    lt = LieType.parse(lie_type) if isinstance(lie_type, str) else lie_type
    return RootSystem(lt)
