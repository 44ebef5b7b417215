"""Lie lattices of the maximal parahoric subgroups at a prime p.

Nodes of the extended Dynkin diagram are numbered 0 (the affine node,
carrying minus the highest root) and 1..rank (the simple roots).  For the
node alpha with mark n, the corresponding maximal parahoric has Lie
lattice spanned by p**v(b) * b over the Chevalley basis, where

    v(X_beta) = -1  if n_alpha(beta) = -n,
    v(X_beta) =  0  if -n < n_alpha(beta) <= 0, and on the torus,
    v(X_beta) = +1  if n_alpha(beta) > 0.

The affine node gives the Chevalley lattice itself (all valuations 0).
The reduction mod p has reductive quotient with root system
Phi_alpha = {beta : n_alpha(beta) = 0 mod n} (simple system: the other
simple roots plus -beta0) and unipotent-radical layers U_i indexed by the
nonzero congruence classes i of n_alpha(beta) mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .chevalley import ChevalleyAlgebra
from .errors import InternalConsistencyError, NodeError, PrimeConditionError
from .intform import FactoredInteger, IntegerForm, _is_prime, determinant, elementary_divisors
from .rootsys import RootSystem


def _check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not _is_prime(p):
        raise PrimeConditionError(f"{p!r} is not a prime")
    return p


def _check_node(rs: RootSystem, node: int) -> int:
    if not isinstance(node, int) or not 0 <= node <= rs.rank:
        raise NodeError(f"node must be an integer in 0..{rs.rank} (0 = affine), got {node!r}")
    return node


def node_label(rs: RootSystem, node: int) -> str:
    _check_node(rs, node)
    return "affine" if node == 0 else f"alpha{node}"


def node_mark(rs: RootSystem, node: int) -> int:
    _check_node(rs, node)
    return 1 if node == 0 else rs.marks[node - 1]


def node_root_coords(rs: RootSystem, node: int) -> tuple[int, ...]:
    """The root attached to a node: -beta0 for the affine node, else alpha_k."""
    _check_node(rs, node)
    if node == 0:
        return tuple(-c for c in rs.highest_root.coords)
    return tuple(1 if j == node - 1 else 0 for j in range(rs.rank))


@dataclass(frozen=True)
class ExtendedDiagram:
    """The extended Dynkin diagram: pairings, marks, bonds.

    ``pairings[i][j]`` is the value of node j's root on node i's coroot;
    restricting to nodes 1..rank recovers the Cartan matrix.  ``edges``
    lists (i, j, bond multiplicity, arrow target or None), with the arrow
    pointing at the shorter root.
    """

    lie_type: str
    marks: tuple[int, ...]
    pairings: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int, int, Optional[int]], ...]


def extended_diagram(rs: RootSystem) -> ExtendedDiagram:
    n = rs.rank + 1
    roots = [node_root_coords(rs, i) for i in range(n)]
    pairings = tuple(
        tuple(rs.pairing_with_coroot(roots[j], roots[i]) for j in range(n))
        for i in range(n)
    )
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            a, b = pairings[i][j], pairings[j][i]
            if a == 0:
                continue
            bond = a * b
            arrow = None
            if abs(b) > abs(a):
                arrow = j  # j's row carries the larger entry, so j is shorter
            elif abs(a) > abs(b):
                arrow = i
            edges.append((i, j, bond, arrow))
    marks = (1,) + tuple(rs.marks)
    return ExtendedDiagram(str(rs.lie_type), marks, pairings, tuple(edges))


# -- lattices ---------------------------------------------------------------------


@dataclass(frozen=True)
class ParahoricLattice:
    """Valuations v(b) per basis vector: the lattice is span of p**v(b) * b."""

    lie_type: str
    prime: int
    node: int
    valuations: tuple[int, ...]


def parahoric_lattice(alg: ChevalleyAlgebra, node: int, p: int) -> ParahoricLattice:
    rs = alg.rs
    _check_node(rs, node)
    _check_prime(p)
    vals = [0] * alg.dim
    if node != 0:
        n = node_mark(rs, node)
        a = node - 1
        for r, root in enumerate(rs.roots):
            coeff = root.coords[a]
            if coeff == -n:
                vals[alg.rank + r] = -1
            elif coeff > 0:
                vals[alg.rank + r] = 1
    return ParahoricLattice(str(rs.lie_type), p, node, tuple(vals))


def iwahori_lattice(alg: ChevalleyAlgebra, p: int) -> tuple[int, ...]:
    """Valuations for the Iwahori lattice: p on every positive root vector."""
    _check_prime(p)
    vals = [0] * alg.dim
    for r, root in enumerate(alg.rs.roots):
        if root.height > 0:
            vals[alg.rank + r] = 1
    return tuple(vals)


def j_alpha_lattice(alg: ChevalleyAlgebra, node: int, p: int) -> tuple[int, ...]:
    """Valuations for the intermediate lattice: p exactly where the node
    coefficient is positive.  Componentwise max of the standard and
    parahoric valuations."""
    rs = alg.rs
    _check_node(rs, node)
    _check_prime(p)
    if node == 0:
        return tuple([0] * alg.dim)
    vals = [0] * alg.dim
    a = node - 1
    for r, root in enumerate(rs.roots):
        if root.coords[a] > 0:
            vals[alg.rank + r] = 1
    return tuple(vals)


def bracket_closure_violation(alg: ChevalleyAlgebra, p: int, valuations: Sequence[int]) -> Optional[str]:
    """First basis pair violating closure of the scaled lattice under the
    bracket, or None.  Needs val_p(c) + v_i + v_j >= v_k for every entry
    c of [b_i, b_j] at b_k."""
    _check_prime(p)
    vals = tuple(valuations)
    if len(vals) != alg.dim:
        raise ValueError(f"expected {alg.dim} valuations")
    for (i, j), entries in alg._table.items():
        vij = vals[i] + vals[j]
        for k, c in entries:
            need = vals[k] - vij
            if need > 0:
                a = abs(c)
                v = 0
                while a % p == 0:
                    a //= p
                    v += 1
                if v < need:
                    return f"[b{i}, b{j}] leaves the lattice at b{k}"
    return None


# -- reduced subsystem and layers ----------------------------------------------------


def _reduced_simples(rs: RootSystem, node: int) -> list[tuple[int, tuple[int, ...]]]:
    """(node id, root coords) for the simple system of Phi_alpha."""
    out = [(i, node_root_coords(rs, i)) for i in range(rs.rank + 1) if i != node]
    return out


def _components(rs: RootSystem, node: int) -> list[list[tuple[int, tuple[int, ...]]]]:
    """Connected components of the reduced simple system, each a list of
    (node id, coords), sorted by (rank, smallest node id)."""
    simples = _reduced_simples(rs, node)
    k = len(simples)
    adj = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and rs.pairing_with_coroot(simples[j][1], simples[i][1]) != 0:
                adj[i][j] = True
    seen = [False] * k
    comps = []
    for s in range(k):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(simples[i])
            for j in range(k):
                if adj[i][j] and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comp.sort(key=lambda t: t[0])
        comps.append(comp)
    comps.sort(key=lambda c: (len(c), c[0][0]))
    return comps


def _classify_component(rs: RootSystem, comp: list[tuple[int, tuple[int, ...]]]) -> tuple[str, int]:
    """Family letter and rank of one component of a reduced simple system."""
    r = len(comp)
    if r == 1:
        return ("A", 1)
    pair = [[rs.pairing_with_coroot(comp[j][1], comp[i][1]) for j in range(r)] for i in range(r)]
    bonds = {}
    degree = [0] * r
    for i in range(r):
        for j in range(i + 1, r):
            if pair[i][j] != 0:
                bonds[(i, j)] = pair[i][j] * pair[j][i]
                degree[i] += 1
                degree[j] += 1
    maxbond = max(bonds.values())
    if maxbond == 3:
        return ("G", 2)
    if maxbond == 1:
        if max(degree) <= 2:
            return ("A", r)
        branch = degree.index(3)
        arms = sorted(_arm_lengths(bonds, degree, r, branch))
        if arms == [1, 1, r - 3]:
            return ("D", r)
        if arms == sorted([1, 2, r - 4]) and r in (6, 7, 8):
            return ("E", r)
        raise InternalConsistencyError(f"unrecognized simply laced diagram, arms {arms}")
    # one double bond
    if r == 2:
        return ("B", 2)
    (i, j), = [e for e, b in bonds.items() if b == 2]
    if degree[i] == 2 and degree[j] == 2:
        return ("F", 4)
    # chain with the double bond at one end; the -2 sits in the short row
    end, inner = (i, j) if degree[i] == 1 else (j, i)
    return ("B", r) if pair[end][inner] == -2 else ("C", r)


def _arm_lengths(bonds, degree, r, branch) -> list[int]:
    adj = {i: [] for i in range(r)}
    for (i, j) in bonds:
        adj[i].append(j)
        adj[j].append(i)
    arms = []
    for start in adj[branch]:
        length = 1
        prev, cur = branch, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return arms


def reduced_subsystem(rs: RootSystem, node: int) -> list[tuple[str, int]]:
    """Isomorphism types of the components of Phi_alpha, sorted by
    (rank, diagram position)."""
    _check_node(rs, node)
    if node == 0:
        return [(rs.lie_type.family, rs.rank)]
    return [_classify_component(rs, comp) for comp in _components(rs, node)]


def reduced_label(rs: RootSystem, node: int) -> str:
    return "+".join(f"{f}{r}" for f, r in reduced_subsystem(rs, node))


def reduced_root_count(rs: RootSystem, node: int) -> int:
    """Number of roots beta with n_alpha(beta) = 0 mod n."""
    if node == 0:
        return rs.root_count
    n = node_mark(rs, node)
    a = node - 1
    return sum(1 for r in rs.roots if r.coords[a] % n == 0)


@dataclass(frozen=True)
class Layer:
    """One unipotent-radical layer: weights with n_alpha(beta) = i mod n."""

    index: int
    weights: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.weights)


def layers(rs: RootSystem, node: int) -> list[Layer]:
    """The layers U_1 .. U_(n-1); empty for mark-1 nodes and the affine node."""
    _check_node(rs, node)
    if node == 0:
        return []
    n = node_mark(rs, node)
    a = node - 1
    out = []
    for i in range(1, n):
        weights = tuple(sorted(r.coords for r in rs.roots if r.coords[a] % n == i))
        out.append(Layer(i, weights))
    return out


def dim_unipotent(rs: RootSystem, node: int) -> int:
    """dim R = dim g - rank - |Phi_alpha|, the total layer dimension."""
    return rs.root_count - reduced_root_count(rs, node)


# -- discriminants -----------------------------------------------------------------


def parahoric_discriminant(alg: ChevalleyAlgebra, node: int, p: int) -> FactoredInteger:
    """|det| of the normalized form on the parahoric lattice basis.

    The basis p**v(b) * b scales the Gram determinant by p to the power
    2 * sum(v); the exponent bookkeeping is exact.
    """
    lat = parahoric_lattice(alg, node, p)
    base = determinant(alg.normalized_gram())
    if base is None:
        raise InternalConsistencyError("normalized form is singular")
    return base.abs().times_prime_power(p, 2 * sum(lat.valuations))


def scaled_gram(alg: ChevalleyAlgebra, valuations: Sequence[int], p: int) -> IntegerForm:
    """Gram matrix of the normalized form on the scaled basis; integral for
    every parahoric valuation pattern."""
    g = alg.normalized_gram().gram
    vals = tuple(valuations)
    n = alg.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = vals[i] + vals[j]
            x = g[i][j]
            if e >= 0:
                row.append(x * p ** e)
            else:
                q = p ** (-e)
                if x % q:
                    raise InternalConsistencyError("scaled Gram entry is not integral")
                row.append(x // q)
        rows.append(row)
    return IntegerForm.from_rows(rows)


def parahoric_divisors(alg: ChevalleyAlgebra, node: int, p: int) -> list[int]:
    """p-primary parts of the elementary divisors of the parahoric lattice.

    Requires p coprime to det of the normalized form on the whole algebra;
    then exactly dim R divisors equal p and the rest are 1.
    """
    _check_prime(p)
    base = determinant(alg.normalized_gram())
    if base is None:
        raise InternalConsistencyError("normalized form is singular")
    if base.exponent_of(p) != 0:
        raise PrimeConditionError(
            f"prime {p} divides det of the normalized form ({base.abs()}); "
            f"the divisor profile needs a prime coprime to it"
        )
    lat = parahoric_lattice(alg, node, p)
    gram = scaled_gram(alg, lat.valuations, p)
    out = []
    for d in elementary_divisors(gram):
        if d == 0:
            raise InternalConsistencyError("parahoric lattice Gram is singular")
        q = 1
        while d % p == 0:
            d //= p
            q *= p
        out.append(q)
    return sorted(out)


def matching_parahorics(alg: ChevalleyAlgebra, p: int, candidate: FactoredInteger) -> list[int]:
    """Nodes whose parahoric discriminant equals |candidate|."""
    _check_prime(p)
    want = candidate.abs()
    return [
        node
        for node in range(alg.rank + 1)
        if parahoric_discriminant(alg, node, p) == want
    ]


# -- full report --------------------------------------------------------------------


@dataclass(frozen=True)
class LayerReport:
    index: int
    dimension: int
    orbit_sizes: tuple[int, ...]
    factors: Optional[tuple[int, ...]]  # per-component dimensions, simply laced only
    highest_weights: Optional[tuple[tuple[int, ...], ...]]


@dataclass(frozen=True)
class ParahoricReport:
    lie_type: str
    node: int
    node_name: str
    mark: int
    prime: int
    reduced_components: tuple[tuple[str, int], ...]
    reduced_label: str
    dim_reduced: int
    dim_unipotent: int
    layers: tuple[LayerReport, ...]
    discriminant: FactoredInteger


def build_report(alg: ChevalleyAlgebra, node: int, p: int) -> ParahoricReport:
    from . import replabel  # local import; replabel depends on this module

    rs = alg.rs
    _check_node(rs, node)
    _check_prime(p)
    comps = reduced_subsystem(rs, node)
    layer_reports = []
    for layer in layers(rs, node):
        orbits = replabel.weyl_orbits(rs, node, layer.index)
        factors = None
        weights = None
        if rs.ratio_c == 1:
            label = replabel.factor_labels(rs, node, layer.index)
            factors = tuple(dim for _, dim in label.factors)
            weights = tuple(coords for coords, _ in label.factors)
        layer_reports.append(
            LayerReport(layer.index, layer.dimension, orbits, factors, weights)
        )
    return ParahoricReport(
        lie_type=str(rs.lie_type),
        node=node,
        node_name=node_label(rs, node),
        mark=node_mark(rs, node),
        prime=p,
        reduced_components=tuple(comps),
        reduced_label="+".join(f"{f}{r}" for f, r in comps),
        dim_reduced=rs.rank + reduced_root_count(rs, node),
        dim_unipotent=dim_unipotent(rs, node),
        layers=tuple(layer_reports),
        discriminant=parahoric_discriminant(alg, node, p),
    )
