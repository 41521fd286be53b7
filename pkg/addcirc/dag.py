"""!
@brief The canonical additive DAG.

Every Ry⁺ becomes an internal vertex with two incoming and two outgoing edges, one per dimension; slot 0 carries the
lower dimension and slot 1 the higher one. Each dimension also gets an input and an output boundary vertex. Rz⁺ gates
disappear into phase labels on the edges, and the wire permutation left over by canonicalization is stored alongside.
"""
from typing import Dict, Hashable, List, NamedTuple, Optional, Tuple

import networkx as nx

from . import trace as logging
from .angles import format_angle, is_zero_phase, is_zero_ry
from .circuit import AdditiveCircuit, RyPlus, RzPlus, XPlus
from .permutation import Permutation
from .rewrite import normalize_ry_orientation

_logger = logging.getLogger('addcirc.dag')

INPUT = 'input'
OUTPUT = 'output'
RY = 'ry'


def input_node(dim: int) -> Tuple[str, int]:
    return ('in', dim)


def output_node(dim: int) -> Tuple[str, int]:
    return ('out', dim)


class RyVertex(NamedTuple):
    id: int
    theta: float
    # (slot 0 dimension, slot 1 dimension), ascending.
    dims: Tuple[int, int]


class PhasedEdge(NamedTuple):
    source: Tuple[Hashable, int]
    target: Tuple[Hashable, int]
    dim: int
    phase: float


def _sort_key(node) -> tuple:
    if isinstance(node, tuple):
        return (0 if node[0] == 'in' else 2, node[1])
    return (1, node)


class AdditiveDag(object):
    def __init__(self, dim: int, trailing_perm: Optional[Permutation] = None, global_phase: float = 0.0):
        if trailing_perm is None:
            trailing_perm = Permutation.identity(dim)
        elif trailing_perm.dim != dim:
            raise ValueError('Trailing permutation dimension %d does not match DAG dimension %d.' %
                             (trailing_perm.dim, dim))

        self.dim = dim
        self.trailing_perm = trailing_perm
        self.global_phase = global_phase
        self.graph = nx.MultiDiGraph()
        self._next_id = 0
        for d in range(dim):
            self.graph.add_node(input_node(d), kind=INPUT, dim=d)
            self.graph.add_node(output_node(d), kind=OUTPUT, dim=d)

    ########################################
    # Construction
    ########################################

    def _add_vertex(self, theta: float, dims: Tuple[int, int]) -> int:
        vertex_id = self._next_id
        self._next_id += 1
        self.graph.add_node(vertex_id, kind=RY, theta=theta, dims=dims)
        return vertex_id

    def _add_edge(self, source: Tuple[Hashable, int], target: Tuple[Hashable, int], dim: int, phase: float):
        self.graph.add_edge(source[0], target[0], key=dim, src_slot=source[1], dst_slot=target[1], phase=phase)

    ########################################
    # Queries
    ########################################

    def is_vertex(self, node) -> bool:
        return node in self.graph and self.graph.nodes[node]['kind'] == RY

    def vertex(self, vertex_id: int) -> RyVertex:
        if not self.is_vertex(vertex_id):
            raise ValueError('Unknown vertex id %r.' % (vertex_id,))
        data = self.graph.nodes[vertex_id]
        return RyVertex(vertex_id, data['theta'], data['dims'])

    def topological_nodes(self) -> List[Hashable]:
        if not nx.is_directed_acyclic_graph(self.graph):
            raise ValueError('Additive DAG contains a cycle.')
        return list(nx.lexicographical_topological_sort(self.graph, key=_sort_key))

    def vertices(self) -> List[RyVertex]:
        """!
        @brief All Ry⁺ vertices in a deterministic topological order.
        """
        return [self.vertex(node) for node in self.topological_nodes() if self.is_vertex(node)]

    @property
    def num_vertices(self) -> int:
        return self.graph.number_of_nodes() - 2 * self.dim

    def _edge(self, source, target, dim, data) -> PhasedEdge:
        return PhasedEdge((source, data['src_slot']), (target, data['dst_slot']), dim, data['phase'])

    def edges(self) -> List[PhasedEdge]:
        return [self._edge(u, v, k, data) for u, v, k, data in self.graph.edges(keys=True, data=True)]

    def in_edges(self, node) -> List[PhasedEdge]:
        """!
        @brief Incoming edges of a node, sorted by destination slot.
        """
        edges = [self._edge(u, v, k, data) for u, v, k, data in self.graph.in_edges(node, keys=True, data=True)]
        return sorted(edges, key=lambda e: e.target[1])

    def out_edges(self, node) -> List[PhasedEdge]:
        edges = [self._edge(u, v, k, data) for u, v, k, data in self.graph.out_edges(node, keys=True, data=True)]
        return sorted(edges, key=lambda e: e.source[1])

    def output_phases(self) -> Dict[int, float]:
        return {d: self.in_edges(output_node(d))[0].phase for d in range(self.dim)}

    def edge_phases_by_dimension(self) -> Dict[int, List[float]]:
        """!
        @brief The phase labels met walking each dimension's path from its input to its output.
        """
        result = {}
        for d in range(self.dim):
            phases = []
            node = input_node(d)
            while node != output_node(d):
                edge = [e for e in self.out_edges(node) if e.dim == d][0]
                phases.append(edge.phase)
                node = edge.target[0]
            result[d] = phases
        return result

    def causally_related(self, v1: int, v2: int) -> bool:
        """!
        @brief True iff a directed path connects the two vertices in either direction.
        """
        self.vertex(v1)
        self.vertex(v2)
        return nx.has_path(self.graph, v1, v2) or nx.has_path(self.graph, v2, v1)

    def validate(self):
        """!
        @brief Check the structural invariants of the DAG, raising `RuntimeError` on the first violation.
        """
        if not nx.is_directed_acyclic_graph(self.graph):
            raise RuntimeError('Additive DAG contains a cycle.')

        for node, data in self.graph.nodes(data=True):
            in_slots = sorted(e.target[1] for e in self.in_edges(node))
            out_slots = sorted(e.source[1] for e in self.out_edges(node))
            if data['kind'] == INPUT:
                expected_in, expected_out = [], [0]
            elif data['kind'] == OUTPUT:
                expected_in, expected_out = [0], []
            else:
                expected_in, expected_out = [0, 1], [0, 1]
                if is_zero_ry(data['theta']):
                    raise RuntimeError('Vertex %d has a zero angle.' % node)
                if data['dims'][0] >= data['dims'][1]:
                    raise RuntimeError('Vertex %d slots are not in ascending dimension order.' % node)
            if in_slots != expected_in or out_slots != expected_out:
                raise RuntimeError('Node %r has malformed edges. [in=%s, out=%s]' % (node, in_slots, out_slots))

        # Every dimension must follow its own edges from its input to its output.
        self.edge_phases_by_dimension()

    def __str__(self):
        return 'AdditiveDag(dim=%d, vertices=%d, trailing=%s)' % (self.dim, self.num_vertices, self.trailing_perm)


def to_dag(circuit: AdditiveCircuit, trailing_perm: Optional[Permutation] = None) -> AdditiveDag:
    """!
    @brief Build the additive DAG of a swap-free circuit.

    Consecutive Rz⁺ on a dimension are merged into the label of the edge they sit on. A Ry⁺ whose two incoming edges
    both come straight from a vertex on the same pair, with no phase in between, is merged into it; a vertex whose angle
    cancels is removed and the phases around it are joined.

    @param circuit The circuit, typically the output of @ref addcirc.rewrite.canonicalize().
    @param trailing_perm The wire permutation applied after the circuit.
    """
    if any(isinstance(g, XPlus) for g in circuit.gates):
        raise ValueError('to_dag() requires a swap-free circuit. Run canonicalize() first.')

    dag = AdditiveDag(circuit.dim, trailing_perm, circuit.global_phase)
    last = [(input_node(d), 0) for d in range(circuit.dim)]
    pending = [0.0] * circuit.dim

    for gate in circuit.gates:
        if isinstance(gate, RzPlus):
            pending[gate.k] += gate.theta
            continue

        gate = normalize_ry_orientation(gate)
        i, j = gate.i, gate.j
        prev = last[i][0]
        if prev == last[j][0] and dag.is_vertex(prev) and is_zero_phase(pending[i]) and is_zero_phase(pending[j]):
            theta = dag.graph.nodes[prev]['theta'] + gate.theta
            if is_zero_ry(theta):
                # Reconnect the dimensions to the removed vertex's predecessors, carrying their edge phases.
                for edge in dag.in_edges(prev):
                    last[edge.dim] = edge.source
                    pending[edge.dim] += edge.phase
                dag.graph.remove_node(prev)
                _logger.trace('Vertex %d cancelled out.' % prev)
            else:
                dag.graph.nodes[prev]['theta'] = theta
                _logger.trace('Merged Ry⁺ on (%d, %d) into vertex %d.' % (i, j, prev))
            continue

        if is_zero_ry(gate.theta):
            continue

        vertex_id = dag._add_vertex(gate.theta, (i, j))
        for slot, d in enumerate((i, j)):
            dag._add_edge(last[d], (vertex_id, slot), d, pending[d])
            last[d] = (vertex_id, slot)
            pending[d] = 0.0

    for d in range(circuit.dim):
        dag._add_edge(last[d], (output_node(d), 0), d, pending[d])

    dag.validate()
    _logger.debug('Built additive DAG with %d vertices from %d gates.' % (dag.num_vertices, len(circuit)))
    return dag


def from_dag(dag: AdditiveDag) -> AdditiveCircuit:
    """!
    @brief Emit the circuit a DAG represents.

    Vertices are emitted in topological order, each preceded by the Rz⁺ phases of its incoming edges. Output edge phases
    follow, then the trailing permutation as a sequence of X⁺ transpositions.
    """
    gates = []
    for node in dag.topological_nodes():
        if not dag.is_vertex(node):
            continue
        for edge in dag.in_edges(node):
            if edge.phase != 0.0:
                gates.append(RzPlus(edge.dim, edge.phase))
        vertex = dag.vertex(node)
        gates.append(RyPlus(vertex.dims[0], vertex.dims[1], vertex.theta))

    for d, phase in sorted(dag.output_phases().items()):
        if phase != 0.0:
            gates.append(RzPlus(d, phase))

    for a, b in dag.trailing_perm.transpositions():
        gates.append(XPlus(a, b))

    return AdditiveCircuit(dag.dim, gates, dag.global_phase)


def dag_to_dot(dag: AdditiveDag) -> str:
    """!
    @brief Render a DAG in Graphviz DOT format, one vertex or edge per line.
    """
    def _name(node) -> str:
        if isinstance(node, tuple):
            return '"%s%d"' % node
        return '"v%d"' % node

    lines = ['digraph additive_dag {']
    for node in dag.topological_nodes():
        if dag.is_vertex(node):
            vertex = dag.vertex(node)
            lines.append('  %s [label="Ry+ %s (%d,%d)"];' %
                         (_name(node), format_angle(vertex.theta), vertex.dims[0], vertex.dims[1]))
        else:
            lines.append('  %s [shape=point, xlabel="%s %d"];' % (_name(node), node[0], node[1]))
    for edge in sorted(dag.edges(), key=lambda e: (_sort_key(e.source[0]), e.dim)):
        lines.append('  %s -> %s [label="d%d %s"];' %
                     (_name(edge.source[0]), _name(edge.target[0]), edge.dim, format_angle(edge.phase)))
    if not dag.trailing_perm.is_identity():
        lines.append('  // trailing %s' % dag.trailing_perm)
    lines.append('}')
    return '\n'.join(lines) + '\n'
