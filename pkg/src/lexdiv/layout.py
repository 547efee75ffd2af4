"""Force-directed layout of the lexicon-similarity graph.

Nodes are languages, edges carry similarity weights in (0, 1]. The force
model, applied synchronously each step from the previous positions:

    repulsion   F_r(u, v) = k_r * (deg(u)+1) * (deg(v)+1) / d(u, v)
                between every node pair, pushing apart;
    attraction  F_a(u, v) = w_uv**delta * d(u, v)
                along every edge, pulling together;
    gravity     F_g(u)    = k_g * (deg(u)+1)
                constant magnitude toward the origin.

Higher similarity therefore means a shorter equilibrium edge; for an
isolated two-node graph the balance point is d* = sqrt(k_r * (deg_u+1) *
(deg_v+1) / w**delta).

Repulsion is exact O(n^2): desk-scale graphs (<= ~1000 nodes) do not need
tree approximations, and exactness keeps the physics testable (Newton's
third law holds to rounding error, so the center of mass is stationary
when gravity is off).

Steps are pure functions and deterministic: identical (state, graph) give
bit-identical successors, and forces are accumulated with numpy's pairwise
summation in node-index order. The default stepping mode uses a constant
global speed (reproducibility first); the adaptive mode modulates speed
per step from the swinging |F_t - F_{t-1}| and traction |F_t + F_{t-1}|/2
accumulated over nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LayoutError

#: Below this separation two nodes count as coincident and get jittered.
COINCIDENCE_EPS = 1e-9


@dataclass(frozen=True, slots=True)
class LayoutParams:
    k_r: float = 1.0            # repulsion scale
    k_g: float = 0.0            # gravity scale (0 = off)
    delta: float = 1.0          # edge-weight exponent
    tau: float = 1.0            # speed tolerance (adaptive mode)
    max_step: float = 10.0      # per-node displacement cap
    seed: int = 0
    speed: float = 0.1          # constant global speed in fixed mode
    adaptive: bool = False


@dataclass(frozen=True, slots=True)
class SimilarityGraph:
    """Undirected weighted graph; edges as (i, j, weight) with i < j."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        n = len(self.nodes)
        for i, j, w in self.edges:
            if i == j:
                raise ValueError(f"self-edge on node {i}")
            if not 0 <= i < n or not 0 <= j < n:
                raise ValueError(f"edge ({i}, {j}) out of range")
            if not 0.0 < w <= 1.0:
                raise ValueError(f"edge weight must be in (0, 1]: {w}")

    @property
    def degree(self) -> np.ndarray:
        deg = np.zeros(len(self.nodes), dtype=np.int64)
        for i, j, _w in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


@dataclass(frozen=True)
class LayoutState:
    positions: np.ndarray       # (n, 2) float64
    prev_forces: np.ndarray     # (n, 2) float64
    global_speed: float
    params: LayoutParams

    def __post_init__(self):
        if not np.all(np.isfinite(self.positions)):
            raise LayoutError("non-finite coordinates in layout state")
        if self.global_speed <= 0:
            raise LayoutError(f"global speed must be positive: {self.global_speed}")


def build_graph(records, threshold: float) -> SimilarityGraph:
    """Graph over every language appearing in the similarity records, with
    an edge per record whose score reaches the threshold. Languages whose
    records all fall below the threshold stay as isolated nodes."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be within [0, 1]: {threshold}")
    codes = sorted({record.lang_a for record in records} | {record.lang_b for record in records})
    index = {code: i for i, code in enumerate(codes)}
    edges = []
    for record in records:
        if record.score >= threshold and record.score > 0.0:
            i, j = index[record.lang_a], index[record.lang_b]
            edges.append((min(i, j), max(i, j), record.score))
    edges.sort()
    return SimilarityGraph(nodes=tuple(codes), edges=tuple(edges))


def initial_state(graph: SimilarityGraph, params: LayoutParams) -> LayoutState:
    """Seeded start: positions uniform in a disc of radius sqrt(n)."""
    n = len(graph.nodes)
    rng = np.random.default_rng(params.seed)
    radius = math.sqrt(n) * np.sqrt(rng.random(n))
    angle = 2.0 * math.pi * rng.random(n)
    positions = np.column_stack([radius * np.cos(angle), radius * np.sin(angle)])
    return LayoutState(
        positions=positions,
        prev_forces=np.zeros((n, 2)),
        global_speed=params.speed,
        params=params,
    )


def _jitter_coincident(positions: np.ndarray, seed: int) -> np.ndarray:
    """Displace the later node of any coincident pair by a unit vector whose
    angle is a deterministic hash of (node index, seed)."""
    n = positions.shape[0]
    if n < 2:
        return positions
    diff = positions[:, None, :] - positions[None, :, :]
    dist = np.hypot(diff[..., 0], diff[..., 1])
    close = np.triu(dist < COINCIDENCE_EPS, k=1)
    if not close.any():
        return positions
    positions = positions.copy()
    for j in sorted(set(np.nonzero(close)[1].tolist())):
        mixed = (j * 0x9E3779B9 + (seed & 0xFFFFFFFF) * 0x85EBCA6B + 0x165667B1) % (2**32)
        angle = 2.0 * math.pi * (mixed / 2**32)
        positions[j, 0] += math.cos(angle)
        positions[j, 1] += math.sin(angle)
    return positions


def _forces(positions: np.ndarray, graph: SimilarityGraph,
            params: LayoutParams, mass: np.ndarray) -> np.ndarray:
    n = positions.shape[0]
    forces = np.zeros((n, 2))

    # pairwise repulsion, k_r * m_u * m_v / d, directed away from the peer
    diff = positions[:, None, :] - positions[None, :, :]
    dist = np.hypot(diff[..., 0], diff[..., 1])
    np.fill_diagonal(dist, 1.0)  # avoid 0/0 on the diagonal; weight below is zeroed
    magnitude = params.k_r * (mass[:, None] * mass[None, :]) / dist
    np.fill_diagonal(magnitude, 0.0)
    forces += np.sum((magnitude / dist)[..., None] * diff, axis=1)

    # attraction along edges, w**delta * d, equivalent to a linear spring
    for i, j, w in graph.edges:
        pull = (w ** params.delta) * (positions[j] - positions[i])
        forces[i] += pull
        forces[j] -= pull

    # constant-magnitude gravity toward the origin
    if params.k_g != 0.0:
        radial = np.hypot(positions[:, 0], positions[:, 1])
        safe = np.where(radial < COINCIDENCE_EPS, 1.0, radial)
        scale = np.where(radial < COINCIDENCE_EPS, 0.0, params.k_g * mass / safe)
        forces -= scale[:, None] * positions

    return forces


def step(state: LayoutState, graph: SimilarityGraph) -> LayoutState:
    """One synchronous update: all forces from the old positions, then all
    displacements, each capped at max_step. Raises LayoutError if the
    computation leaves the finite range."""
    n = len(graph.nodes)
    if state.positions.shape != (n, 2):
        raise LayoutError(
            f"state has {state.positions.shape[0]} positions for {n} nodes")
    params = state.params
    positions = _jitter_coincident(np.asarray(state.positions, dtype=np.float64), params.seed)
    mass = graph.degree.astype(np.float64) + 1.0

    forces = _forces(positions, graph, params, mass)
    if not np.all(np.isfinite(forces)):
        raise LayoutError("non-finite force encountered; layout aborted")

    if params.adaptive:
        swinging = np.hypot(*(forces - state.prev_forces).T)
        traction = np.hypot(*(forces + state.prev_forces).T) / 2.0
        total_swing = float(np.sum(mass * swinging))
        total_traction = float(np.sum(mass * traction))
        speed = state.global_speed
        if total_swing > 0.0:
            target = params.tau * total_traction / total_swing
            speed = speed + min(target - speed, 0.5 * speed)
        speed = max(speed, 1e-12)
        factor = speed / (1.0 + np.sqrt(speed * swinging))
        displacement = forces * factor[:, None]
        new_speed = speed
    else:
        displacement = forces * state.global_speed
        new_speed = state.global_speed

    # cap displacement magnitude per node
    norms = np.hypot(displacement[:, 0], displacement[:, 1])
    over = norms > params.max_step
    if over.any():
        scale = np.ones_like(norms)
        scale[over] = params.max_step / norms[over]
        displacement = displacement * scale[:, None]

    new_positions = positions + displacement
    if not np.all(np.isfinite(new_positions)):
        raise LayoutError("non-finite coordinate encountered; layout aborted")
    return LayoutState(
        positions=new_positions,
        prev_forces=forces,
        global_speed=new_speed,
        params=params,
    )


def run_steps(state: LayoutState, graph: SimilarityGraph, iterations: int) -> LayoutState:
    """Apply ``iterations`` steps (zero is the identity)."""
    for _ in range(iterations):
        state = step(state, graph)
    return state


def run(graph: SimilarityGraph, params: LayoutParams | None = None,
        max_iters: int = 200, eps: float = 1e-4) -> dict[str, tuple[float, float]]:
    """Iterate from the seeded initial state until the largest per-node
    displacement drops below ``eps`` or ``max_iters`` is reached. Same seed,
    same graph: bit-identical positions."""
    if max_iters < 1:
        raise ValueError(f"max_iters must be >= 1: {max_iters}")
    params = params or LayoutParams()
    state = initial_state(graph, params)
    for _ in range(max_iters):
        new_state = step(state, graph)
        moved = np.hypot(*(new_state.positions - state.positions).T)
        state = new_state
        if len(graph.nodes) and float(np.max(moved)) < eps:
            break
    return positions_dict(graph, state)


def positions_dict(graph: SimilarityGraph, state: LayoutState) -> dict[str, tuple[float, float]]:
    return {code: (float(x), float(y))
            for code, (x, y) in zip(graph.nodes, state.positions)}


def write_positions_tsv(positions: dict[str, tuple[float, float]], sink) -> int:
    """Write ``code\\tx\\ty`` rows sorted by code; returns the row count."""
    count = 0
    for code in sorted(positions):
        x, y = positions[code]
        sink.write(f"{code}\t{x!r}\t{y!r}\n")
        count += 1
    return count
