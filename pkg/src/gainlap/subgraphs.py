"""Cycles, elementary and dissection subgraphs, and characteristic polynomials.

Coefficient conventions (``coeffs[0]`` is always the leading 1):

* ``"x"``          det(xI - M)          = sum_k coeffs[k] x^(n-k)
* ``"x_minus_1"``  det(xI - NL(Phi))    = sum_k coeffs[k] (x-1)^(n-k)
* ``"adjacency"``  det(xI - A(Phi))     = sum_k coeffs[k] x^(n-k)

The combinatorial formulas enumerate subgraphs explicitly, so they refuse
graphs with more than 12 vertices.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property
from math import comb, prod

import numpy as np

from .errors import GraphTooLargeError, IsolatedVertexError, NonRealCoefficientError
from .graph import Cycle, GainGraph, cycle_gain
from .matrices import adjacency, check_hermitian, norm_laplacian

MAX_FORMULA_VERTICES = 12
COEFF_IMAG_TOL = 1e-9
BASES = ("x", "x_minus_1", "adjacency")


# -- cycles -----------------------------------------------------------------


def enumerate_cycles(g: GainGraph) -> list[Cycle]:
    """All simple cycles of length >= 3, each once, in canonical form.

    A cycle is found only from its smallest vertex ``s`` by a DFS restricted
    to vertices above ``s``; of its two directions only the one whose second
    vertex is smaller than its last is kept.
    """
    out = []
    nbrs = g.neighbors
    for s in range(g.n):
        path = [s]
        on_path = {s}
        stack = [iter([w for w in nbrs[s] if w > s])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            nxt = []
            for x in nbrs[w]:
                if x == s and len(path) >= 3 and path[1] < w:
                    out.append(Cycle(tuple(path)))
                elif x > s and x not in on_path:
                    nxt.append(x)
            stack.append(iter(nxt))
    return sorted(out, key=lambda c: (len(c), c.vertices))


# -- elementary / dissection subgraphs ---------------------------------------


def _mask(vs) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class ElementarySubgraph:
    """Vertex-disjoint union of single edges and cycles."""

    edges: tuple[tuple[int, int], ...]
    cycles: tuple[Cycle, ...]

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        vs = set()
        for e in self.edges:
            vs.update(e)
        for c in self.cycles:
            vs.update(c.vertices)
        return frozenset(vs)

    @property
    def order(self) -> int:
        """Number of vertices."""
        return len(self.vertex_set)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def components(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def rank(self) -> int:
        return self.order - self.components

    @property
    def corank(self) -> int:
        return self.size - self.order + self.components

    @property
    def n_cycles(self) -> int:
        return len(self.cycles)

    @property
    def n_odd_cycles(self) -> int:
        return sum(1 for c in self.cycles if len(c) % 2)

    def cycle_real_product(self, g: GainGraph, cache: dict | None = None) -> float:
        """Product of Re(phi(C)) over the cycles; 1 when there are none."""
        if cache is None:
            return prod((cycle_gain(g, c).real for c in self.cycles), start=1.0)
        return prod((cache[c] for c in self.cycles), start=1.0)


@dataclass(frozen=True)
class DissectionSubgraph(ElementarySubgraph):
    """Elementary subgraph plus isolated vertices."""

    isolated: tuple[int, ...] = ()

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return ElementarySubgraph.vertex_set.func(self) | frozenset(self.isolated)

    @property
    def components(self) -> int:
        return len(self.edges) + len(self.cycles) + len(self.isolated)

    def covered_degree_product(self, g: GainGraph) -> int:
        """D_H: product of d_Phi(v) over vertices not isolated in H; 1 if none."""
        covered = self.vertex_set - frozenset(self.isolated)
        return prod((g.degrees[v] for v in covered), start=1)


def _check_size(g: GainGraph) -> None:
    if g.n > MAX_FORMULA_VERTICES:
        raise GraphTooLargeError(
            f"subgraph formulas are limited to {MAX_FORMULA_VERTICES} vertices, got {g.n}"
        )


def iter_elementary(g: GainGraph, cycles: list[Cycle] | None = None) -> Iterator[ElementarySubgraph]:
    """Every elementary subgraph of ``g`` (including the empty one), each once.

    Building blocks are grouped by their smallest vertex; the backtracking
    walks vertices in order and either leaves a vertex alone or covers it
    with a block that starts there, tracking occupied vertices in a bitmask.
    """
    _check_size(g)
    if cycles is None:
        cycles = enumerate_cycles(g)
    blocks: list[list[tuple[int, object]]] = [[] for _ in range(g.n)]
    for u, v, _ in g.edges:
        blocks[u].append((_mask((u, v)), (u, v)))
    for c in cycles:
        blocks[c.vertices[0]].append((c.mask, c))

    edges: list[tuple[int, int]] = []
    cyc: list[Cycle] = []

    def rec(v: int, used: int):
        if v == g.n:
            yield ElementarySubgraph(tuple(edges), tuple(cyc))
            return
        yield from rec(v + 1, used)
        if used >> v & 1:
            return
        for mask, block in blocks[v]:
            if mask & used:
                continue
            target = cyc if isinstance(block, Cycle) else edges
            target.append(block)
            yield from rec(v + 1, used | mask)
            target.pop()

    yield from rec(0, 0)


def enumerate_elementary(g: GainGraph, k: int) -> list[ElementarySubgraph]:
    """Elementary subgraphs covering exactly ``k`` vertices."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} outside [0, {g.n}]")
    return [h for h in iter_elementary(g) if h.order == k]


def iter_dissection(g: GainGraph) -> Iterator[DissectionSubgraph]:
    for h in iter_elementary(g):
        free = [v for v in range(g.n) if v not in h.vertex_set]
        for j in range(len(free) + 1):
            for iso in itertools.combinations(free, j):
                yield DissectionSubgraph(h.edges, h.cycles, iso)


def enumerate_dissection(g: GainGraph, k: int) -> list[DissectionSubgraph]:
    """Dissection subgraphs on exactly ``k`` vertices."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} outside [0, {g.n}]")
    out = []
    for h in iter_elementary(g):
        extra = k - h.order
        if extra < 0:
            continue
        free = [v for v in range(g.n) if v not in h.vertex_set]
        for iso in itertools.combinations(free, extra):
            out.append(DissectionSubgraph(h.edges, h.cycles, iso))
    return out


# -- coefficient formulas ----------------------------------------------------


@dataclass(frozen=True, eq=False)
class CharPolyCoeffs:
    basis: str
    coeffs: np.ndarray

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        c = np.asarray(self.coeffs, dtype=float)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def evaluate(self, x: float) -> float:
        shift = 1.0 if self.basis == "x_minus_1" else 0.0
        return float(np.polyval(self.coeffs, x - shift))


def _real_gains(g: GainGraph, cycles: list[Cycle]) -> dict[Cycle, float]:
    return {c: cycle_gain(g, c).real for c in cycles}


def _elementary_term(g: GainGraph, h: ElementarySubgraph, cache: dict | None = None) -> float:
    return (-1) ** h.rank * 2 ** h.corank * h.cycle_real_product(g, cache)


def _walk(g: GainGraph):
    """Yield (subgraph, cached real cycle gains) over all elementary subgraphs."""
    cycles = enumerate_cycles(g)
    cache = _real_gains(g, cycles)
    for h in iter_elementary(g, cycles):
        yield h, cache


def det_adjacency(g: GainGraph) -> float:
    """det A(Phi) as a signed sum over spanning elementary subgraphs."""
    return float(sum(_elementary_term(g, h, re) for h, re in _walk(g) if h.order == g.n))


def adjacency_coeffs(g: GainGraph) -> CharPolyCoeffs:
    """Coefficients a_k of det(xI - A(Phi)) from elementary subgraphs on k vertices."""
    sums = np.zeros(g.n + 1)
    for h, re in _walk(g):
        sums[h.order] += _elementary_term(g, h, re)
    signs = (-1.0) ** np.arange(g.n + 1)
    return CharPolyCoeffs("adjacency", signs * sums)


def _require_no_isolated(g: GainGraph) -> None:
    if any(d == 0 for d in g.degrees):
        raise IsolatedVertexError("normalized Laplacian needs every vertex to have an edge")


def norm_lap_c_coeffs(g: GainGraph) -> CharPolyCoeffs:
    """c_k with det(xI - NL) = sum c_k (x-1)^(n-k).

    Each elementary subgraph H on k vertices contributes
    (-1)^r(H) 2^s(H) prod Re(phi(C)) / prod_{v in H} d(v).
    """
    _require_no_isolated(g)
    c = np.zeros(g.n + 1)
    for h, re in _walk(g):
        dprod = prod((g.degrees[v] for v in h.vertex_set), start=1)
        c[h.order] += _elementary_term(g, h, re) / dprod
    return CharPolyCoeffs("x_minus_1", c)


def norm_lap_b_coeffs(g: GainGraph) -> CharPolyCoeffs:
    """b_k with det(xI - NL) = sum b_k x^(n-k), summed over dissection subgraphs.

    (-1)^k b_k = sum_H (-1)^(r(H)+o(H)) 2^s(H) / D_H prod Re(phi(C)).
    """
    _require_no_isolated(g)
    re = _real_gains(g, enumerate_cycles(g))
    b = np.zeros(g.n + 1)
    for h in iter_dissection(g):
        sign = (-1) ** (h.rank + h.n_odd_cycles)
        b[h.order] += sign * 2 ** h.corank * h.cycle_real_product(g, re) / h.covered_degree_product(g)
    b *= (-1.0) ** np.arange(g.n + 1)
    return CharPolyCoeffs("x", b)


def norm_lap_b_coeffs_fast(g: GainGraph) -> CharPolyCoeffs:
    """Same values as :func:`norm_lap_b_coeffs` without listing isolated-vertex choices.

    An elementary subgraph on j vertices extends to C(n-j, k-j) dissection
    subgraphs on k vertices, all with the same term.
    """
    _require_no_isolated(g)
    n = g.n
    b = np.zeros(n + 1)
    for h, re in _walk(g):
        j = h.order
        dprod = prod((g.degrees[v] for v in h.vertex_set), start=1)
        term = (-1) ** (h.rank + h.n_odd_cycles) * 2 ** h.corank * h.cycle_real_product(g, re) / dprod
        for k in range(j, n + 1):
            b[k] += comb(n - j, k - j) * term
    b *= (-1.0) ** np.arange(n + 1)
    return CharPolyCoeffs("x", b)


# -- independent oracle ------------------------------------------------------


def charpoly_oracle(m) -> CharPolyCoeffs:
    """Coefficients of det(xI - M) by the Faddeev-LeVerrier recurrence.

    Runs in complex arithmetic; Hermitian input forces real coefficients, so
    an imaginary residue above 1e-9 (relative to max(1, |c|)) is an error.
    """
    m = check_hermitian(m)
    n = m.shape[0]
    c = np.zeros(n + 1, dtype=complex)
    c[0] = 1.0
    mk = np.zeros_like(m)
    eye = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        mk = m @ mk + c[k - 1] * eye
        c[k] = -np.trace(m @ mk) / k
    bad = np.abs(c.imag) > COEFF_IMAG_TOL * np.maximum(1.0, np.abs(c.real))
    if np.any(bad):
        raise NonRealCoefficientError(f"non-real coefficients at indices {np.flatnonzero(bad).tolist()}")
    return CharPolyCoeffs("x", c.real)


def basis_convert(c: CharPolyCoeffs) -> CharPolyCoeffs:
    """Expand sum c_k (x-1)^(n-k) into powers of x."""
    if c.basis != "x_minus_1":
        raise ValueError(f"expected basis 'x_minus_1', got {c.basis!r}")
    n = c.degree
    out = np.zeros(n + 1)
    for k, ck in enumerate(c.coeffs):
        d = n - k
        # (x-1)^d = sum_j C(d, j) (-1)^(d-j) x^j ; x^j sits at index n - j
        for j in range(d + 1):
            out[n - j] += ck * comb(d, j) * (-1) ** (d - j)
    return CharPolyCoeffs("x", out)


def roots(c: CharPolyCoeffs) -> np.ndarray:
    """Real parts of the polynomial roots, sorted; basis shift applied."""
    r = np.roots(c.coeffs).real
    if c.basis == "x_minus_1":
        r = r + 1.0
    return np.sort(r)


def coeffs_from_eigenvalues(vals) -> np.ndarray:
    """Coefficients of prod (x - lambda_i), leading 1 first."""
    return np.real(np.poly(np.asarray(vals, dtype=float))) if len(vals) else np.ones(1)


def norm_laplacian_oracle(g: GainGraph) -> CharPolyCoeffs:
    return charpoly_oracle(norm_laplacian(g))


def adjacency_oracle(g: GainGraph) -> CharPolyCoeffs:
    return CharPolyCoeffs("adjacency", charpoly_oracle(adjacency(g)).coeffs)
