"""Integral Chevalley basis realizations of the simple Lie algebras.

The basis is H_1..H_r (simple coroots) followed by one vector X_beta per
root, in the root system's canonical order.  Brackets follow the classical
relations: [H, X_beta] picks up the coroot pairing, [X_beta, X_-beta] is
the coroot H_beta, and [X_alpha, X_beta] = N(alpha,beta) X_(alpha+beta)
with |N| = m+1 for the root string value m.

Signs are fixed by the extraspecial pair scheme: positive roots are
totally ordered by height with a configurable tie break, each positive
non-simple root gets N = +(m+1) on its minimal ("extraspecial") special
pair, and every other constant is forced from those by the reflection and
four-root identities.  Any sign assignment produced this way satisfies the
Jacobi identity; ``verify_algebra`` checks that, the antisymmetry of the
bracket, and the |N| = m+1 law directly on the constructed table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence, Union

from .errors import InternalConsistencyError, NotARootError
from .intform import IntegerForm
from .rootsys import Root, RootSystem

CONVENTION = "chevlie-cartan-rows.1"  # cache files must match this tag

_TIE_BREAKS = {
    "lex": lambda coords: coords,
    "revlex": lambda coords: tuple(reversed(coords)),
}


class ChevalleyAlgebra:
    """A simple Lie algebra over Z on a fixed Chevalley basis.

    Immutable after construction; the Killing Gram is computed once on
    first use and cached.  Basis index layout: 0..rank-1 are the simple
    coroots H_i, rank..rank+|roots|-1 follow ``rs.roots`` order.
    """

    def __init__(self, rs: RootSystem, tie_break: str, nconst: dict[tuple[int, int], int]):
        self.rs = rs
        self.tie_break = tie_break
        self.rank = rs.rank
        self.dim = rs.dim
        self.npos = len(rs.positive)
        self._n = nconst  # keyed by (root index, root index) in rs.roots order
        self._coroots = [rs.coroot_coords(r.coords) for r in rs.roots]
        self._pairings = [rs.simple_pairings(r.coords) for r in rs.roots]
        self._table = self._build_pair_table()
        self._killing: Optional[list[list[int]]] = None

    # -- basis bookkeeping ---------------------------------------------------

    def basis_labels(self) -> list[str]:
        labels = [f"H{i + 1}" for i in range(self.rank)]
        labels += [f"X{r.coords}" for r in self.rs.roots]
        return labels

    def root_basis_index(self, root: Union[Root, Sequence[int]]) -> int:
        return self.rank + self.rs.index(root)

    def structure_constant(self, alpha: Union[Root, Sequence[int]], beta: Union[Root, Sequence[int]]) -> int:
        """N(alpha, beta); zero when alpha+beta is not a root."""
        ia = self.rs.index(alpha)
        ib = self.rs.index(beta)
        return self._n.get((ia, ib), 0)

    # -- bracket -------------------------------------------------------------

    def _build_pair_table(self) -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
        """Sparse [b_i, b_j] for i < j; omitted keys bracket to zero."""
        rs = self.rs
        rank = self.rank
        table: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
        nroots = len(rs.roots)
        for r in range(nroots):
            pair = self._pairings[r]
            for i in range(rank):
                if pair[i]:
                    table[(i, rank + r)] = ((rank + r, pair[i]),)
        index = rs._index
        coords = [r.coords for r in rs.roots]
        for ra in range(nroots):
            ca = coords[ra]
            for rb in range(ra + 1, nroots):
                cb = coords[rb]
                s = tuple(x + y for x, y in zip(ca, cb))
                if not any(s):
                    entries = tuple((i, m) for i, m in enumerate(self._coroots[ra]) if m)
                    table[(rank + ra, rank + rb)] = entries
                    continue
                rsum = index.get(s)
                if rsum is not None:
                    n = self._n[(ra, rb)]
                    table[(rank + ra, rank + rb)] = ((rank + rsum, n),)
        return table

    def basis_bracket(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        """[b_i, b_j] as a sparse tuple of (basis index, coefficient)."""
        if i == j:
            return ()
        if i < j:
            return self._table.get((i, j), ())
        return tuple((k, -c) for k, c in self._table.get((j, i), ()))

    def bracket(self, x: Sequence, y: Sequence) -> list:
        """Bracket of two coordinate vectors (integer or rational entries)."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        out = [0] * self.dim
        nz_x = [(i, v) for i, v in enumerate(x) if v]
        nz_y = [(j, w) for j, w in enumerate(y) if w]
        for i, v in nz_x:
            for j, w in nz_y:
                for k, c in self.basis_bracket(i, j):
                    out[k] += v * w * c
        return out

    # -- Killing form ----------------------------------------------------------

    def _ad_sparse(self) -> list[dict[int, dict[int, int]]]:
        ads: list[dict[int, dict[int, int]]] = [dict() for _ in range(self.dim)]
        for (i, j), entries in self._table.items():
            for k, c in entries:
                ads[i].setdefault(j, {})[k] = c
                ads[j].setdefault(i, {})[k] = -c
        return ads

    def killing_gram(self) -> IntegerForm:
        """Trace form (X, Y) = Tr(ad X ad Y), computed entry by entry."""
        if self._killing is None:
            dim = self.dim
            ads = self._ad_sparse()
            gram = [[0] * dim for _ in range(dim)]
            flat = [
                [(col, r, v) for col, colmap in ads[j].items() for r, v in colmap.items()]
                for j in range(dim)
            ]
            for j in range(dim):
                items = flat[j]
                for i in range(j + 1):
                    ai = ads[i]
                    s = 0
                    for col, r, v in items:
                        m = ai.get(r)
                        if m:
                            t = m.get(col)
                            if t:
                                s += t * v
                    gram[i][j] = gram[j][i] = s
            self._killing = gram
        return IntegerForm.from_rows(self._killing)

    def normalized_gram(self) -> IntegerForm:
        """Killing form divided by 2 * dual Coxeter number; exactly integral."""
        killing = self.killing_gram().gram
        d = 2 * self.rs.dual_coxeter
        rows = []
        for row in killing:
            out = []
            for x in row:
                if x % d:
                    raise InternalConsistencyError(
                        f"Killing entry {x} is not divisible by 2h_dual = {d}"
                    )
                out.append(x // d)
            rows.append(out)
        return IntegerForm.from_rows(rows)


# -- structure constants -------------------------------------------------------


def _positive_order(rs: RootSystem, tie_break: str) -> list[tuple[int, ...]]:
    key = _TIE_BREAKS[tie_break]
    return sorted((r.coords for r in rs.positive), key=lambda v: (sum(v), key(v)))


def _structure_constants(rs: RootSystem, tie_break: str) -> dict[tuple[int, int], int]:
    """The full N table over pairs of roots, keyed by rs.roots indices."""
    pos = _positive_order(rs, tie_break)
    pos_rank = {v: k for k, v in enumerate(pos)}
    is_root = rs.is_root
    lensq = {r.coords: rs.length_sq(r.coords) for r in rs.roots}

    def string_m(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        m = 0
        cur = tuple(x - y for x, y in zip(b, a))
        while is_root(cur):
            m += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        return m

    npos: dict[tuple[int, int], int] = {}  # on pos_rank pairs, alpha < beta

    def get(a: tuple[int, ...], b: tuple[int, ...]) -> Fraction:
        """N(a, b) for arbitrary roots, reduced to the positive-pair table."""
        s = tuple(x + y for x, y in zip(a, b))
        if not is_root(s):
            return Fraction(0)
        a_pos = sum(a) > 0
        b_pos = sum(b) > 0
        if a_pos and b_pos:
            ia, ib = pos_rank[a], pos_rank[b]
            if ia < ib:
                return Fraction(npos[(ia, ib)])
            return Fraction(-npos[(ib, ia)])
        if not a_pos and not b_pos:
            return -get(tuple(-x for x in a), tuple(-x for x in b))
        if not a_pos:
            return -get(b, a)
        z = tuple(-x for x in s)
        if sum(z) > 0:
            return Fraction(lensq[z], lensq[b]) * get(z, a)
        return Fraction(lensq[z], lensq[a]) * get(b, z)

    for gamma in pos:
        if sum(gamma) < 2:
            continue
        specials = []
        for a in pos:
            if 2 * sum(a) > sum(gamma):
                break
            b = tuple(x - y for x, y in zip(gamma, a))
            if b in pos_rank and pos_rank[a] < pos_rank[b]:
                specials.append((pos_rank[a], a, b))
        specials.sort()
        if not specials:
            continue
        _, eps, eta = specials[0]
        npos[(pos_rank[eps], pos_rank[eta])] = string_m(eps, eta) + 1
        for _, alpha, beta in specials[1:]:
            neg_beta = tuple(-x for x in beta)
            t = Fraction(0)
            diff = tuple(x - y for x, y in zip(eta, beta))  # alpha - eps
            if is_root(diff):
                t += get(eta, neg_beta) * get(eps, diff)
            diff = tuple(x - y for x, y in zip(eps, beta))  # -(eta - alpha)
            if is_root(diff):
                t += get(neg_beta, eps) * get(eta, diff)
            n_eps_eta = get(eps, eta)
            value = Fraction(lensq[gamma], lensq[alpha]) * t / n_eps_eta
            if value.denominator != 1:
                raise InternalConsistencyError(f"non-integral constant for {alpha}+{beta}")
            n = int(value)
            if abs(n) != string_m(alpha, beta) + 1:
                raise InternalConsistencyError(
                    f"|N{alpha},{beta}| = {abs(n)} != m+1 = {string_m(alpha, beta) + 1}"
                )
            npos[(pos_rank[alpha], pos_rank[beta])] = n

    # spread to every ordered pair of roots, keyed by rs.roots indices
    full: dict[tuple[int, int], int] = {}
    coords = [r.coords for r in rs.roots]
    nroots = len(coords)
    for ia in range(nroots):
        a = coords[ia]
        for ib in range(nroots):
            if ia == ib:
                continue
            b = coords[ib]
            s = tuple(x + y for x, y in zip(a, b))
            if any(s) and is_root(s):
                v = get(a, b)
                if v.denominator != 1:
                    raise InternalConsistencyError("non-integral structure constant")
                full[(ia, ib)] = int(v)
    return full


def construct(rs: RootSystem, tie_break: str = "lex") -> ChevalleyAlgebra:
    """Build the Chevalley basis Lie algebra for a root system.

    ``tie_break`` picks the total order on equal-height positive roots
    ("lex" or "revlex"); different choices may flip individual signs but
    never the Jacobi identity, the |N| multiset, or any Gram determinant.
    """
    if tie_break not in _TIE_BREAKS:
        raise ValueError(f"tie_break must be one of {sorted(_TIE_BREAKS)}")
    return ChevalleyAlgebra(rs, tie_break, _structure_constants(rs, tie_break))


# -- verification ---------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraVerification:
    ok: bool
    mode: str
    antisymmetry_pairs: int
    string_law_pairs: int
    jacobi_triples: int
    first_violation: Optional[str]


def _jacobi_violation(alg: ChevalleyAlgebra, triples) -> tuple[int, Optional[str]]:
    table = alg._table
    checked = 0
    for i, j, k in triples:
        acc: dict[int, int] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            if b < c:
                inner = table.get((b, c), ())
                sgn = 1
            else:
                inner = table.get((c, b), ())
                sgn = -1
            for m, w in inner:
                if a < m:
                    outer = table.get((a, m), ())
                    s2 = sgn * w
                elif a > m:
                    outer = table.get((m, a), ())
                    s2 = -sgn * w
                else:
                    continue
                for t, u in outer:
                    acc[t] = acc.get(t, 0) + s2 * u
        checked += 1
        if any(acc.values()):
            return checked, f"Jacobi fails on basis triple {(i, j, k)}"
    return checked, None


def _fast_triples(alg: ChevalleyAlgebra):
    """All triples from the generating set (torus, simple root vectors,
    highest root vectors) plus a fixed-stride sample of the rest."""
    rs = alg.rs
    dset = list(range(alg.rank))
    for r in list(rs.positive[: alg.rank]) + [rs.highest_root]:
        dset.append(alg.root_basis_index(r))
        dset.append(alg.root_basis_index(-r))
    dset = sorted(set(dset))
    yield from combinations(dset, 3)
    step = max(1, alg.dim // 13)
    for i in range(0, alg.dim, step):
        for j in range(i + 1, alg.dim, step):
            for k in range(j + 1, alg.dim, step):
                yield (i, j, k)


def verify_algebra(alg: ChevalleyAlgebra, mode: str = "fast") -> AlgebraVerification:
    """Check the defining identities on the constructed table.

    fast: antisymmetry and the |N| = m+1 law on every pair, Jacobi on all
    triples from the generating set plus a deterministic stride sample.
    full: the same, with Jacobi over every unordered basis triple.
    """
    if mode not in ("fast", "full"):
        raise ValueError("mode must be 'fast' or 'full'")
    rs = alg.rs
    pairs = 0
    strings = 0
    coords = [r.coords for r in rs.roots]
    for (ia, ib), n in alg._n.items():
        pairs += 1
        if alg._n.get((ib, ia)) != -n:
            return AlgebraVerification(False, mode, pairs, strings, 0,
                                       f"antisymmetry fails on {coords[ia]}, {coords[ib]}")
        strings += 1
        m = rs.root_string_m(coords[ia], coords[ib])
        if abs(n) != m + 1:
            return AlgebraVerification(False, mode, pairs, strings, 0,
                                       f"|N| != m+1 on {coords[ia]}, {coords[ib]}")
    triples = combinations(range(alg.dim), 3) if mode == "full" else _fast_triples(alg)
    checked, violation = _jacobi_violation(alg, triples)
    return AlgebraVerification(violation is None, mode, pairs, strings, checked, violation)


# -- structure constant cache -----------------------------------------------------

CACHE_SCHEMA = 1


def save_structure_constants(alg: ChevalleyAlgebra, path: Union[str, Path]) -> None:
    """Persist the constant table, keyed by type and convention tag."""
    rs = alg.rs
    doc = {
        "schema_version": CACHE_SCHEMA,
        "convention": CONVENTION,
        "family": rs.lie_type.family,
        "rank": rs.lie_type.rank,
        "tie_break": alg.tie_break,
        "constants": [[list(rs.roots[ia].coords), list(rs.roots[ib].coords), n]
                      for (ia, ib), n in sorted(alg._n.items())],
    }
    Path(path).write_text(json.dumps(doc, sort_keys=True))


def load_structure_constants(rs: RootSystem, path: Union[str, Path]) -> ChevalleyAlgebra:
    """Rebuild an algebra from a cache file, re-verifying fast invariants."""
    doc = json.loads(Path(path).read_text())
    if doc.get("schema_version") != CACHE_SCHEMA or doc.get("convention") != CONVENTION:
        raise ValueError("cache file written under a different schema or convention")
    if (doc.get("family"), doc.get("rank")) != (rs.lie_type.family, rs.lie_type.rank):
        raise ValueError(
            f"cache file is for {doc.get('family')}{doc.get('rank')}, not {rs.lie_type}"
        )
    nconst: dict[tuple[int, int], int] = {}
    for entry in doc["constants"]:
        a, b, n = entry
        try:
            nconst[(rs.index(tuple(a)), rs.index(tuple(b)))] = int(n)
        except NotARootError as exc:
            raise ValueError(f"cache file contains a non-root: {exc}") from exc
    alg = ChevalleyAlgebra(rs, doc.get("tie_break", "lex"), nconst)
    report = verify_algebra(alg, "fast")
    if not report.ok:
        raise ValueError(f"cached constants fail verification: {report.first_violation}")
    return alg
