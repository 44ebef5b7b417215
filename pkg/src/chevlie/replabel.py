"""Weyl orbit data and tensor factor labels for unipotent-radical layers.

Each layer U_i of a maximal parahoric reduction is a set of roots (the
weights of the reductive quotient acting on that layer).  The subgroup of
the Weyl group generated by the reflections in the reduced simple system
acts on each layer; its orbits are computed by breadth-first closure.  In
the simply laced case every layer is a minuscule irreducible module for
the product of the components, so the layer is a single orbit and the
factor dimensions can be read off as orbit sizes of the projected highest
weight, one component at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalConsistencyError, UnsupportedOperationError
from .parahoric import Layer, _components, _reduced_simples, layers, node_mark
from .rootsys import RootSystem


def _orbit(rs: RootSystem, simples: list[tuple[int, ...]], start: tuple[int, ...]) -> set[tuple[int, ...]]:
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for delta in simples:
            v = rs.reflect_in_root(delta, w)
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def weyl_orbits(rs: RootSystem, node: int, index: int) -> tuple[int, ...]:
    """Sorted orbit sizes of the reduced Weyl group on layer U_index."""
    layer = _get_layer(rs, node, index)
    simples = [coords for _, coords in _reduced_simples(rs, node)]
    remaining = set(layer.weights)
    sizes = []
    while remaining:
        orb = _orbit(rs, simples, next(iter(remaining)))
        if not orb <= remaining:
            raise InternalConsistencyError("reflection left the layer")
        remaining -= orb
        sizes.append(len(orb))
    return tuple(sorted(sizes))


def _get_layer(rs: RootSystem, node: int, index: int) -> Layer:
    n = node_mark(rs, node)
    if not 1 <= index < n:
        raise ValueError(f"layer index must be in 1..{n - 1} for a mark-{n} node")
    return layers(rs, node)[index - 1]


def _phi_alpha_positive(rs: RootSystem, node: int) -> list[tuple[int, ...]]:
    """Positive roots of the reduced subsystem, in the basis given by its
    simple system (solved exactly; coefficients of members are integers)."""
    simples = [coords for _, coords in _reduced_simples(rs, node)]
    n = node_mark(rs, node)
    a = node - 1
    members = [r.coords for r in rs.roots if node == 0 or r.coords[a] % n == 0]
    out = []
    for beta in members:
        x = _solve(simples, beta)
        if all(c >= 0 for c in x):
            if not all(c.denominator == 1 for c in x):
                raise InternalConsistencyError("non-integral reduced coordinates")
            out.append(beta)
    return out


def _solve(basis: list[tuple[int, ...]], target: tuple[int, ...]) -> list[Fraction]:
    """Solve sum x_k basis[k] = target by exact Gaussian elimination."""
    k = len(basis)
    n = len(target)
    rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    piv = 0
    where = []
    for col in range(k):
        sel = next((r for r in range(piv, n) if rows[r][col] != 0), None)
        if sel is None:
            raise InternalConsistencyError("reduced simple system is degenerate")
        rows[piv], rows[sel] = rows[sel], rows[piv]
        where.append(col)
        inv = 1 / rows[piv][col]
        rows[piv] = [v * inv for v in rows[piv]]
        for r in range(n):
            if r != piv and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[piv])]
        piv += 1
    for r in range(piv, n):
        if rows[r][k] != 0:
            raise InternalConsistencyError("target outside the reduced span")
    return [rows[i][k] for i in range(k)]


@dataclass(frozen=True)
class LayerLabel:
    """Tensor-factor description of one simply laced layer."""

    index: int
    dimension: int
    orbit_sizes: tuple[int, ...]
    factors: tuple[tuple[tuple[int, ...], int], ...]
    # per component: (highest weight in the component's fundamental basis,
    #                 factor dimension)


def factor_labels(rs: RootSystem, node: int, index: int) -> LayerLabel:
    """Identify layer U_index as a tensor product of minuscule factors.

    Components are ordered by (rank, diagram position).  Only defined for
    the simply laced families; elsewhere the layers need not be single
    orbits and callers should use weyl_orbits instead.
    """
    if rs.ratio_c != 1:
        raise UnsupportedOperationError(
            f"{rs.lie_type} is not simply laced; use weyl_orbits for orbit data"
        )
    layer = _get_layer(rs, node, index)
    weight_set = set(layer.weights)
    positives = _phi_alpha_positive(rs, node)
    highs = [
        w for w in layer.weights
        if not any(tuple(a + b for a, b in zip(w, d)) in weight_set for d in positives)
    ]
    if len(highs) != 1:
        raise InternalConsistencyError(
            f"expected a unique highest weight in layer {index}, found {len(highs)}"
        )
    high = highs[0]
    factors = []
    for comp in _components(rs, node):
        simples = [coords for _, coords in comp]
        hw = tuple(rs.pairing_with_coroot(high, d) for d in simples)
        if any(v < 0 for v in hw):
            raise InternalConsistencyError("highest weight not dominant on a component")
        dim = len(_orbit(rs, simples, high))
        factors.append((hw, dim))
    orbits = weyl_orbits(rs, node, index)
    label = LayerLabel(index, layer.dimension, orbits, tuple(factors))
    product = 1
    for _, d in label.factors:
        product *= d
    if product != layer.dimension:
        raise InternalConsistencyError(
            f"factor dimensions {tuple(d for _, d in factors)} do not multiply to {layer.dimension}"
        )
    return label
