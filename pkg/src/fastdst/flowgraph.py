"""Signal flow graphs of the recursive transforms.

A flow graph is the dataflow DAG of one transform instance: input nodes
feed arithmetic nodes along weighted edges.  Nodes with indegree 2 are
adders; edges whose weight is not +-1 are multipliers.  Permutation
stages neither create nodes nor edges, they only reorder which node
feeds the next stage, so the structural counts of a graph,

    additions(g)       = number of indegree-2 nodes,
    multiplications(g) = number of edges with weight kind != "unit",

equal the operation count of the transform it was built from.  The graph
is an implementation of the transform independent of the executors:
evaluating it in topological order reproduces the scaled transform.

Edge weight kinds are assigned structurally by the stage that emitted
the edge ("unit" +-1, "scale" +-sqrt(2), "trig" +-sin/+-cos), never by
inspecting the numeric value.  Trig edges carry symbolic labels in the
S_{i,j} = sin(i*pi/2^j), C_{i,j} = cos(i*pi/2^j) convention.

By default outputs are listed in natural index order.  With
``bit_reversed=True`` the trailing permutations of the recursion (the
maximal suffix of output reorderings, everything after the last
arithmetic stage) are omitted, so the same nodes appear in the
recursion's scrambled output order; node values are unchanged.  For a
type-II or type-IV transform of order 4 that order is exactly the
bit reversal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import SizeError
from .kernels import SQRT2
from .transforms import TransformKind, _is_pow2


@dataclass(frozen=True)
class FlowNode:
    id: int
    stage: int
    index: int
    label: str


@dataclass(frozen=True)
class FlowEdge:
    src: int
    dst: int
    weight: float
    kind: str  # "unit", "scale", or "trig"
    label: str = ""


@dataclass
class FlowGraph:
    kind: TransformKind
    n: int
    bit_reversed: bool
    nodes: list[FlowNode] = field(default_factory=list)
    edges: list[FlowEdge] = field(default_factory=list)
    inputs: list[int] = field(default_factory=list)
    outputs: list[int] = field(default_factory=list)

    def indegrees(self) -> list[int]:
        deg = [0] * len(self.nodes)
        for e in self.edges:
            deg[e.dst] += 1
        return deg

    def additions(self) -> int:
        return sum(1 for d in self.indegrees() if d == 2)

    def multiplications(self) -> int:
        return sum(1 for e in self.edges if e.kind != "unit")


class _Builder:
    def __init__(self, kind: TransformKind, n: int, bit_reversed: bool):
        self.graph = FlowGraph(kind, n, bit_reversed)
        self._stage = []

    def input_node(self, k: int) -> int:
        nid = len(self.graph.nodes)
        self.graph.nodes.append(FlowNode(nid, 0, k, f"x{k}"))
        self._stage.append(0)
        self.graph.inputs.append(nid)
        return nid

    def node(self, index: int, label: str, incoming) -> int:
        """Create one arithmetic node fed by ``incoming`` (src, w, kind, lab)."""
        nid = len(self.graph.nodes)
        stage = 1 + max(self._stage[src] for src, _, _, _ in incoming)
        self.graph.nodes.append(FlowNode(nid, stage, index, label))
        self._stage.append(stage)
        for src, w, wkind, lab in incoming:
            self.graph.edges.append(FlowEdge(src, nid, w, wkind, lab))
        return nid


def _trig_label(i: int, j: int, cos: bool, negative: bool) -> str:
    sym = f"{'C' if cos else 'S'}_{{{i},{j}}}"
    return f"-{sym}" if negative else sym


def _scale_edge(src: int, negative: bool = False):
    w = -SQRT2 if negative else SQRT2
    return (src, w, "scale", "-sqrt(2)" if negative else "sqrt(2)")


def _interleave(ids: list[int]) -> list[int]:
    h = (len(ids) + 1) // 2
    out = [0] * len(ids)
    out[0::2] = ids[:h]
    out[1::2] = ids[h:]
    return out


def _emit(b: _Builder, kind_code: int, ids: list[int], off: int, keep: bool) -> list[int]:
    m = len(ids)
    if m <= 2:
        if kind_code == 4:
            rc = kernels.rotation_constants(2)
            s, c = float(rc.sines[0]), float(rc.cosines[0])
            r0 = b.node(off, "+", [
                (ids[0], s, "trig", _trig_label(1, 3, False, False)),
                (ids[1], c, "trig", _trig_label(1, 3, True, False)),
            ])
            r1 = b.node(off + 1, "+", [
                (ids[0], c, "trig", _trig_label(1, 3, True, False)),
                (ids[1], -s, "trig", _trig_label(1, 3, False, True)),
            ])
            y0 = b.node(off, "*", [_scale_edge(r0)])
            y1 = b.node(off + 1, "*", [_scale_edge(r1)])
            return [y0, y1]
        if kind_code == 1:
            return [b.node(off, "*", [_scale_edge(ids[0])])]
        top = b.node(off, "+", [(ids[0], 1.0, "unit", ""), (ids[1], 1.0, "unit", "")])
        bot = b.node(off + 1, "+", [(ids[0], 1.0, "unit", ""), (ids[1], -1.0, "unit", "")])
        return [top, bot]

    h = (m + 1) // 2
    if kind_code == 2:
        u = [
            b.node(off + k, "+", [(ids[k], 1.0, "unit", ""), (ids[m - 1 - k], 1.0, "unit", "")])
            for k in range(h)
        ] + [
            b.node(off + h + k, "+", [(ids[k], 1.0, "unit", ""), (ids[m - 1 - k], -1.0, "unit", "")])
            for k in range(h)
        ]
        v = _emit(b, 4, u[:h], off, keep) + _emit(b, 2, u[h:], off + h, keep)
        return _interleave(v) if keep else v

    if kind_code == 3:
        g = ids[0::2] + ids[1::2]
        v = _emit(b, 4, g[:h], off, True) + _emit(b, 3, g[h:], off + h, True)
        return [
            b.node(off + k, "+", [(v[k], 1.0, "unit", ""), (v[h + k], 1.0, "unit", "")])
            for k in range(h)
        ] + [
            b.node(off + h + j, "+", [(v[h - 1 - j], 1.0, "unit", ""), (v[m - 1 - j], -1.0, "unit", "")])
            for j in range(h)
        ]

    if kind_code == 4:
        t = m.bit_length() - 1
        rc = kernels.rotation_constants(m)
        u = []
        for k in range(h):
            s, c = float(rc.sines[k]), float(rc.cosines[k])
            neg = k % 2 == 1
            sk, ck = (-s, -c) if neg else (s, c)
            u.append(b.node(off + k, "+", [
                (ids[k], sk, "trig", _trig_label(2 * k + 1, t + 2, False, neg)),
                (ids[m - 1 - k], ck, "trig", _trig_label(2 * k + 1, t + 2, True, neg)),
            ]))
        for j in range(h):
            k = h - 1 - j
            s, c = float(rc.sines[k]), float(rc.cosines[k])
            u.append(b.node(off + h + j, "+", [
                (ids[k], -c, "trig", _trig_label(2 * k + 1, t + 2, True, True)),
                (ids[m - 1 - k], s, "trig", _trig_label(2 * k + 1, t + 2, False, False)),
            ]))
        v = _emit(b, 2, u[:h], off, True) + _emit(b, 2, u[h:], off + h, True)
        z = [b.node(off, "*", [_scale_edge(v[h - 1])])]
        for j in range(h - 1):
            sign = 1.0 if j % 2 == 0 else -1.0
            z.append(b.node(off + 1 + j, "+", [
                (v[h - 2 - j], 1.0, "unit", ""),
                (v[h + j], -sign, "unit", ""),
            ]))
        for j in range(h - 1):
            sign = 1.0 if j % 2 == 0 else -1.0
            z.append(b.node(off + h + j, "+", [
                (v[h - 2 - j], -1.0, "unit", ""),
                (v[h + j], -sign, "unit", ""),
            ]))
        z.append(b.node(off + m - 1, "*", [_scale_edge(v[m - 1], negative=h % 2 == 1)]))
        return _interleave(z) if keep else z

    # kind 1, m = 2^s - 1
    u = [
        b.node(off + k, "+", [(ids[k], 1.0, "unit", ""), (ids[m - 1 - k], 1.0, "unit", "")])
        for k in range(h - 1)
    ]
    u.append(b.node(off + h - 1, "*", [_scale_edge(ids[h - 1])]))
    u += [
        b.node(off + h + k, "+", [(ids[k], 1.0, "unit", ""), (ids[m - 1 - k], -1.0, "unit", "")])
        for k in range(h - 1)
    ]
    v = _emit(b, 3, u[:h], off, True) + _emit(b, 1, u[h:], off + h, keep)
    return _interleave(v) if keep else v


def build_flowgraph(kind, n: int, bit_reversed: bool = False) -> FlowGraph:
    """Build the flow graph of the scaled transform of order ``n = 2^t``."""
    kind = TransformKind.parse(kind)
    if n < 2 or not _is_pow2(n):
        raise SizeError(f"transform order must be a power of two >= 2, got {n}")
    b = _Builder(kind, n, bit_reversed)
    length = kind.signal_length(n)
    ids = [b.input_node(k) for k in range(length)]
    b.graph.outputs = _emit(b, kind.value, ids, 0, not bit_reversed)
    return b.graph


def evaluate_flowgraph(graph: FlowGraph, x) -> np.ndarray:
    """Evaluate the graph on ``x`` in topological order.

    Independent of the transform executors: only the graph's edges drive
    the arithmetic.  Outputs are read at the graph's output nodes.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.shape[0] != len(graph.inputs):
        raise SizeError(
            f"graph expects {len(graph.inputs)} inputs, got shape {x.shape}"
        )
    values = np.zeros(len(graph.nodes))
    incoming: list[list[FlowEdge]] = [[] for _ in graph.nodes]
    for e in graph.edges:
        incoming[e.dst].append(e)
    is_input = [False] * len(graph.nodes)
    for pos, nid in enumerate(graph.inputs):
        values[nid] = x[pos]
        is_input[nid] = True
    for node in graph.nodes:
        if is_input[node.id]:
            continue
        acc = 0.0
        for e in incoming[node.id]:
            if e.src >= node.id:
                raise SizeError("graph is not in topological order")
            acc += e.weight * values[e.src]
        values[node.id] = acc
    return values[graph.outputs]


def export_dot(graph: FlowGraph) -> str:
    """Deterministic DOT rendering of a flow graph.

    Nodes are ranked by stage; multiplication by -1 is drawn as a dashed
    edge; weighted edges carry their symbolic label and numeric value.
    """
    kind_name = graph.kind.name.lower()
    suffix = "_bitrev" if graph.bit_reversed else ""
    lines = [f"digraph {kind_name}_n{graph.n}{suffix} {{", "  rankdir=LR;"]
    out_pos = {nid: k for k, nid in enumerate(graph.outputs)}
    in_pos = {nid: k for k, nid in enumerate(graph.inputs)}
    for node in graph.nodes:
        if node.id in in_pos:
            lines.append(f'  n{node.id} [label="x{in_pos[node.id]}", shape=circle];')
        elif node.id in out_pos:
            lines.append(
                f'  n{node.id} [label="y{out_pos[node.id]}", shape=doublecircle];'
            )
        else:
            lines.append(f'  n{node.id} [label="{node.label}", shape=circle];')
    stages: dict[int, list[int]] = {}
    for node in graph.nodes:
        stages.setdefault(node.stage, []).append(node.id)
    for stage in sorted(stages):
        members = "; ".join(f"n{nid}" for nid in stages[stage])
        lines.append(f"  {{ rank=same; {members}; }}")
    for e in graph.edges:
        if e.kind == "unit":
            attr = " [style=dashed]" if e.weight < 0 else ""
        else:
            attr = f' [label="{e.label}={e.weight!r}"]'
        lines.append(f"  n{e.src} -> n{e.dst}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
