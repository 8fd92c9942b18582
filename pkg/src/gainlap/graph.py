"""Complex unit gain graphs: construction, balance, switching and cycle gains.

Vertices are the integers ``0..n-1``. Each undirected edge is stored once as
``(u, v, gain)`` with ``u < v``; the gain of the reverse orientation is the
complex conjugate, which is the inverse on the unit circle.
"""

from __future__ import annotations

import cmath
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BadIndexError,
    DifferentUnderlyingGraphError,
    DuplicateEdgeError,
    MissingVertexValueError,
    NonUnitGainError,
    NotACycleError,
    SelfLoopError,
)

UNIT_INPUT_TOL = 1e-6
BALANCE_TOL = 1e-9


def as_gain(value) -> complex:
    """Coerce ``value`` to a unit complex number.

    Values whose modulus is within 1e-6 of 1 are renormalized so that decimal
    input such as ``0.7071067811865476+0.7071067811865476j`` lands exactly on
    the circle. Anything farther away raises NonUnitGainError.
    """
    z = complex(value)
    r = abs(z)
    if not abs(r - 1.0) <= UNIT_INPUT_TOL:
        raise NonUnitGainError(f"gain {z!r} has modulus {r!r}, expected 1")
    if r == 1.0:
        return z
    return z / r


@dataclass(frozen=True)
class GainGraph:
    """Simple undirected graph on ``n`` vertices with unit complex edge gains.

    Build instances with :func:`build`; the constructor assumes its input is
    already canonical (sorted, ``u < v``, unit gains).
    """

    n: int
    edges: tuple[tuple[int, int, complex], ...]

    @cached_property
    def _gain_map(self) -> dict[tuple[int, int], complex]:
        out = {}
        for u, v, g in self.edges:
            out[(u, v)] = g
            out[(v, u)] = g.conjugate()
        return out

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._gain_map

    def gain(self, u: int, v: int) -> complex:
        """Gain of the oriented edge ``u -> v``."""
        try:
            return self._gain_map[(u, v)]
        except KeyError:
            raise BadIndexError(f"({u}, {v}) is not an edge") from None

    def degree(self, v: int) -> int:
        _check_vertex(self, v)
        return self.degrees[v]

    def __repr__(self) -> str:
        return f"GainGraph(n={self.n}, m={self.m})"


def _check_vertex(g: GainGraph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise BadIndexError(f"vertex {v!r} not in [0, {g.n})")


def build(n: int, edge_list: Iterable[tuple[int, int, object]]) -> GainGraph:
    """Validate and canonicalize an edge list into a :class:`GainGraph`.

    An edge given as ``(v, u, g)`` with ``v > u`` is stored as ``(u, v, conj(g))``.
    """
    if not isinstance(n, int) or n < 0:
        raise BadIndexError(f"vertex count must be a non-negative integer, got {n!r}")
    seen: dict[tuple[int, int], complex] = {}
    for item in edge_list:
        u, v, raw = item
        for w in (u, v):
            if not (isinstance(w, int) and 0 <= w < n):
                raise BadIndexError(f"vertex {w!r} not in [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        g = as_gain(raw)
        if u > v:
            u, v, g = v, u, g.conjugate()
        if (u, v) in seen:
            raise DuplicateEdgeError(f"edge ({u}, {v}) given twice")
        seen[(u, v)] = g
    edges = tuple((u, v, seen[(u, v)]) for u, v in sorted(seen))
    return GainGraph(n, edges)


def negate(g: GainGraph) -> GainGraph:
    """The gain graph -Phi: every gain multiplied by -1."""
    return GainGraph(g.n, tuple((u, v, -z) for u, v, z in g.edges))


def underlying(g: GainGraph) -> GainGraph:
    """(G, 1): same edges, all gains 1."""
    return GainGraph(g.n, tuple((u, v, 1 + 0j) for u, v, _ in g.edges))


def degree(g: GainGraph, v: int) -> int:
    return g.degree(v)


def components(g: GainGraph) -> list[list[int]]:
    """Connected components, each listed in BFS order from its smallest vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(comp)
    return out


def is_connected(g: GainGraph) -> bool:
    return len(components(g)) <= 1


def is_bipartite(g: GainGraph) -> tuple[bool, tuple[int, ...] | None]:
    """Two-color the underlying graph; returns ``(True, colors)`` or ``(False, None)``."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
    return True, tuple(color)


@dataclass(frozen=True)
class SwitchingFunction:
    """Unit complex value per vertex; acts on gains by zeta(u)^-1 phi(uv) zeta(v)."""

    values: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_gain(z) for z in self.values))

    @classmethod
    def from_mapping(cls, n: int, zeta: Mapping[int, object]) -> "SwitchingFunction":
        missing = [v for v in range(n) if v not in zeta]
        if missing:
            raise MissingVertexValueError(f"switching function undefined at {missing}")
        return cls(tuple(zeta[v] for v in range(n)))

    def __getitem__(self, v: int) -> complex:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)


def _as_switching(g: GainGraph, zeta) -> SwitchingFunction:
    if isinstance(zeta, SwitchingFunction):
        sf = zeta
    elif isinstance(zeta, Mapping):
        sf = SwitchingFunction.from_mapping(g.n, zeta)
    else:
        sf = SwitchingFunction(tuple(zeta))
    if len(sf) != g.n:
        raise MissingVertexValueError(
            f"switching function has {len(sf)} values for {g.n} vertices"
        )
    return sf


def apply_switching(g: GainGraph, zeta) -> GainGraph:
    """Switch ``g`` by ``zeta`` (a SwitchingFunction, sequence or vertex mapping)."""
    sf = _as_switching(g, zeta)
    edges = []
    for u, v, z in g.edges:
        w = sf[u].conjugate() * z * sf[v]
        edges.append((u, v, w / abs(w)))
    return GainGraph(g.n, tuple(edges))


@dataclass(frozen=True)
class Cycle:
    """Simple cycle of length >= 3 in canonical form.

    The smallest vertex comes first and the direction is chosen so that the
    second vertex is smaller than the last one.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", _canonical_rotation(tuple(self.vertices)))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple(
            (min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])
        )

    @property
    def mask(self) -> int:
        out = 0
        for v in self.vertices:
            out |= 1 << v
        return out


def _canonical_rotation(vs: tuple[int, ...]) -> tuple[int, ...]:
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise NotACycleError(f"{vs} is not a sequence of >= 3 distinct vertices")
    k = vs.index(min(vs))
    vs = vs[k:] + vs[:k]
    if vs[1] > vs[-1]:
        vs = (vs[0],) + tuple(reversed(vs[1:]))
    return vs


def cycle_gain(g: GainGraph, c: Cycle | Sequence[int], reverse: bool = False) -> complex:
    """Product of oriented gains around ``c`` in its stored (or reversed) order."""
    vs = tuple(c.vertices if isinstance(c, Cycle) else c)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise NotACycleError(f"{vs} is not a sequence of >= 3 distinct vertices")
    if reverse:
        vs = vs[::-1]
    prod = 1 + 0j
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
            raise NotACycleError(f"{a} and {b} are not adjacent")
        prod *= g.gain(a, b)
    return prod


def _tree_path_to_root(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[v] != v:
        v = parent[v]
        path.append(v)
    return path


def is_balanced(g: GainGraph, tol: float = BALANCE_TOL):
    """Decide balance by spanning-tree propagation.

    Returns ``(True, SwitchingFunction)`` whose application turns every gain
    into 1, or ``(False, Cycle)`` with a non-neutral cycle gain. Each
    component is handled separately with its root fixed to 1.
    """
    zeta: list[complex] = [1 + 0j] * g.n
    parent = list(range(g.n))
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    # solve zeta(u)^-1 phi(u,w) zeta(w) = 1
                    zeta[w] = zeta[u] * g.gain(u, w).conjugate()
                    queue.append(w)
    for u, v, z in g.edges:
        if parent[u] == v or parent[v] == u:
            continue
        switched = zeta[u].conjugate() * z * zeta[v]
        if abs(switched - 1) > tol:
            return False, _fundamental_cycle(parent, u, v)
    return True, SwitchingFunction(tuple(zeta))


def _fundamental_cycle(parent: list[int], u: int, v: int) -> Cycle:
    pu = _tree_path_to_root(parent, u)
    pv = _tree_path_to_root(parent, v)
    on_pu = {w: i for i, w in enumerate(pu)}
    j = 0
    while pv[j] not in on_pu:
        j += 1
    lca = pv[j]
    # u .. lca .. v, closed by the non-tree edge v-u
    seq = pu[: on_pu[lca] + 1] + pv[:j][::-1]
    return Cycle(tuple(seq))


def ratio_graph(g1: GainGraph, g2: GainGraph) -> GainGraph:
    """Same edges, gain phi1(e) * conj(phi2(e)); balanced iff g1 ~ g2."""
    if g1.n != g2.n or g1.edge_set != g2.edge_set:
        raise DifferentUnderlyingGraphError("gain graphs have different underlying graphs")
    return GainGraph(
        g1.n,
        tuple((u, v, z * g2.gain(u, v).conjugate()) for u, v, z in g1.edges),
    )


def switching_equivalent(g1: GainGraph, g2: GainGraph, tol: float = BALANCE_TOL) -> bool:
    return is_balanced(ratio_graph(g1, g2), tol)[0]


def unit(theta: float) -> complex:
    """The unit complex number of angle ``theta`` (radians)."""
    return cmath.exp(1j * theta)
