"""Firing-pattern hypercube with memory sinks.

Vertices are the 2^N firing patterns; edges join patterns at Hamming
distance one, plus a self-loop on every vertex. Sink vertices (the
memorized patterns) are cut out of the adjacency Hamiltonian entirely and
are instead fed by directed jump operators that always point strictly
closer to the sink set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ConfigurationError

__all__ = [
    "STRICT",
    "LTE",
    "RULES",
    "JumpOperator",
    "HypercubeSpec",
    "make_spec",
    "vertex_index",
    "index_pattern",
    "vertex_hamming",
    "min_sink_distance",
    "edge_weight",
    "hypercube_edges",
    "build_hamiltonian",
    "build_jump_operators",
    "reachability_check",
    "jump_matrix",
]

# Jump assignment rule for edges whose endpoints are equidistant from the
# sink set: "strict" emits nothing (the default), "lte" emits operators in
# both directions and exists only for comparison runs.
STRICT = "strict"
LTE = "lte"
RULES = (STRICT, LTE)


@dataclass(frozen=True)
class JumpOperator:
    """Directed incoherent transition |dst><src| between adjacent vertices."""

    src: int
    dst: int


@dataclass(frozen=True)
class HypercubeSpec:
    """Hypercube walk ingredients: neuron count, sink vertices, edge weights.

    ``edge_weights`` holds explicit overrides as (low, high, weight)
    triples over unordered vertex pairs at Hamming distance <= 1; every
    other edge weighs 1. Build instances through :func:`make_spec`.
    """

    n: int
    sinks: tuple[int, ...]
    edge_weights: tuple[tuple[int, int, float], ...] = ()

    @property
    def dim(self) -> int:
        return 1 << self.n

    @cached_property
    def sink_set(self) -> frozenset[int]:
        return frozenset(self.sinks)

    @cached_property
    def weight_map(self) -> dict[tuple[int, int], float]:
        return {(lo, hi): w for lo, hi, w in self.edge_weights}


def vertex_index(pattern) -> int:
    """Vertex index of a pattern, first bit most significant ("101" -> 5)."""
    if isinstance(pattern, str):
        bits = pattern
        if len(bits) == 0 or any(ch not in "01" for ch in bits):
            raise ConfigurationError(f"invalid pattern {pattern!r}")
        return int(bits, 2)
    arr = np.asarray(pattern).ravel()
    if arr.size == 0 or np.any((arr != 0) & (arr != 1)):
        raise ConfigurationError(f"invalid pattern {pattern!r}")
    value = 0
    for b in arr:
        value = (value << 1) | int(b)
    return value


def index_pattern(v: int, n: int) -> str:
    """Bit-string pattern of a vertex index (inverse of vertex_index)."""
    if not 0 <= v < (1 << n):
        raise ConfigurationError(f"vertex {v} out of range for n = {n}")
    return format(v, f"0{n}b")


def vertex_hamming(i: int, j: int) -> int:
    return bin(i ^ j).count("1")


def make_spec(n: int, sink_patterns, edge_weight_overrides=None) -> HypercubeSpec:
    """Validate and build a HypercubeSpec.

    ``sink_patterns`` may mix bit strings and vertex indices; overrides
    are (pattern, pattern, weight) or (index, index, weight) triples.
    """
    if not isinstance(n, int) or n < 1:
        raise ConfigurationError(f"neuron count must be a positive integer, got {n!r}")
    dim = 1 << n

    sinks = []
    for p in sink_patterns:
        v = p if isinstance(p, int) else vertex_index(p)
        if isinstance(p, str) and len(p) != n:
            raise ConfigurationError(f"sink pattern {p!r} does not have length {n}")
        if not 0 <= v < dim:
            raise ConfigurationError(f"sink vertex {v} out of range for n = {n}")
        sinks.append(v)
    if len(sinks) == 0:
        raise ConfigurationError("at least one sink is required")
    if len(set(sinks)) != len(sinks):
        raise ConfigurationError("sink patterns must be distinct")
    if len(sinks) >= dim:
        raise ConfigurationError("at least one vertex must remain a non-sink")

    overrides = []
    for entry in edge_weight_overrides or ():
        u, v, w = entry
        iu = u if isinstance(u, int) else vertex_index(u)
        iv = v if isinstance(v, int) else vertex_index(v)
        if not (0 <= iu < dim and 0 <= iv < dim):
            raise ConfigurationError(f"edge override {entry!r} out of range")
        if vertex_hamming(iu, iv) > 1:
            raise ConfigurationError(
                f"edge override {entry!r} joins vertices farther than one bit flip"
            )
        w = float(w)
        if not w > 0:
            raise ConfigurationError(f"edge weight must be positive, got {w!r}")
        overrides.append((min(iu, iv), max(iu, iv), w))
    seen = set()
    for lo, hi, _ in overrides:
        if (lo, hi) in seen:
            raise ConfigurationError(f"duplicate edge weight override for ({lo}, {hi})")
        seen.add((lo, hi))

    return HypercubeSpec(n=n, sinks=tuple(sorted(sinks)), edge_weights=tuple(overrides))


def min_sink_distance(v: int, spec: HypercubeSpec) -> int:
    """Minimum Hamming distance from vertex ``v`` to any sink."""
    if not 0 <= v < spec.dim:
        raise ConfigurationError(f"vertex {v} out of range")
    return min(vertex_hamming(v, s) for s in spec.sinks)


def edge_weight(spec: HypercubeSpec, i: int, j: int) -> float:
    return spec.weight_map.get((min(i, j), max(i, j)), 1.0)


def hypercube_edges(n: int):
    """All unordered Hamming-distance-one pairs (i, j) with i < j."""
    for i in range(1 << n):
        for bit in range(n):
            j = i ^ (1 << bit)
            if i < j:
                yield i, j


def build_hamiltonian(spec: HypercubeSpec, rule: str = STRICT) -> np.ndarray:
    """Sink-isolated weighted adjacency matrix, self-loops included.

    ``H_ij = a_ij`` for vertices one bit flip apart when neither is a
    sink; sink rows and columns are identically zero and every non-sink
    vertex keeps its self-loop.

    Under the default strict rule an edge whose endpoints are equidistant
    from the sink set is removed from the coherent part too, mirroring
    the jump assignment: such an edge sits on the watershed between
    basins of attraction, and keeping it lets coherence tunnel across and
    feed the wrong memory (measured: the far sink captures 0.46 of the
    walker in the three-neuron two-sink scenario at kappa = gamma = 1).
    The relaxed "lte" rule keeps the full adjacency for comparison runs.
    """
    if rule not in RULES:
        raise ConfigurationError(f"unknown equidistant rule {rule!r}")
    dim = spec.dim
    sinks = spec.sink_set
    h = np.zeros((dim, dim), dtype=np.complex128)
    for v in range(dim):
        if v not in sinks:
            h[v, v] = edge_weight(spec, v, v)
    for i, j in hypercube_edges(spec.n):
        if i in sinks or j in sinks:
            continue
        if rule == STRICT and min_sink_distance(i, spec) == min_sink_distance(j, spec):
            continue
        w = edge_weight(spec, i, j)
        h[i, j] = w
        h[j, i] = w
    return h


def build_jump_operators(spec: HypercubeSpec, rule: str = STRICT) -> list[JumpOperator]:
    """Directed jump operators over the hypercube edges.

    For every distance-one edge {i, j} the operator points from the
    vertex farther from the sink set to the nearer one; under the default
    strict rule an equidistant edge gets no operator at all. Self-loops
    never carry operators, and no operator leaves a sink.
    """
    if rule not in RULES:
        raise ConfigurationError(f"unknown equidistant rule {rule!r}")
    sinks = spec.sink_set
    ops: list[JumpOperator] = []
    for i, j in hypercube_edges(spec.n):
        di = min_sink_distance(i, spec)
        dj = min_sink_distance(j, spec)
        if rule == STRICT:
            if dj < di:
                ops.append(JumpOperator(src=i, dst=j))
            elif di < dj:
                ops.append(JumpOperator(src=j, dst=i))
        else:
            # Relaxed comparison rule; sinks still never emit.
            if dj <= di and i not in sinks:
                ops.append(JumpOperator(src=i, dst=j))
            if di <= dj and j not in sinks:
                ops.append(JumpOperator(src=j, dst=i))
    return ops


def reachability_check(spec: HypercubeSpec, rule: str = STRICT) -> bool:
    """True when every non-sink vertex has a directed jump path to a sink."""
    ops = build_jump_operators(spec, rule)
    reverse: dict[int, list[int]] = {}
    for op in ops:
        reverse.setdefault(op.dst, []).append(op.src)
    frontier = list(spec.sinks)
    seen = set(spec.sinks)
    while frontier:
        v = frontier.pop()
        for u in reverse.get(v, ()):  # walk edges backwards from the sinks
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return len(seen) == spec.dim


def jump_matrix(op: JumpOperator, dim: int) -> np.ndarray:
    """Dense |dst><src| matrix of a jump operator."""
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[op.dst, op.src] = 1.0
    return m
