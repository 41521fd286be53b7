"""!
@brief Vertex stacking: fusing causally unrelated, equal-angle Ry⁺ vertices into stacked vertices.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import trace as logging
from .angles import ry_angles_equal
from .bits import is_power_of_two
from .dag import AdditiveDag

_logger = logging.getLogger('addcirc.stacking')


@dataclass(frozen=True)
class StackedVertex:
    """!
    @brief A set of Ry⁺ rotations by the same angle on disjoint dimension pairs, applied jointly.

    Each member is the `(slot 0, slot 1)` dimension pair of one fused DAG vertex, so every member is a Ry⁺(θ) with
    ascending dimensions.
    """
    theta: float
    members: Tuple[Tuple[int, int], ...]
    vertex_ids: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'members', tuple((int(a), int(b)) for a, b in self.members))
        object.__setattr__(self, 'vertex_ids', tuple(self.vertex_ids))
        if len(self.members) == 0:
            raise ValueError('A stacked vertex needs at least one member.')
        dims = [d for pair in self.members for d in pair]
        if len(set(dims)) != len(dims):
            raise ValueError('Stacked vertex members overlap: %s.' % (self.members,))

    @property
    def length(self) -> int:
        return len(self.members)

    def dims(self) -> List[int]:
        return [d for pair in self.members for d in pair]

    def __str__(self):
        return 'Stack(θ=%.6g, %s)' % (self.theta, ', '.join('(%d,%d)' % pair for pair in self.members))


def stack_vertices(dag: AdditiveDag) -> List[StackedVertex]:
    """!
    @brief Greedily fuse the vertices of a DAG into stacked vertices.

    Vertices are visited in topological order. A vertex joins the earliest existing stack with a matching angle whose
    index is past every stack holding one of its ancestors, and whose dimensions it does not share. Otherwise it opens
    a new stack.

    @return The stacks, in an order that respects the causality of the DAG: applying them in sequence reproduces the
            DAG's vertices.
    """
    thetas: List[float] = []
    members: List[List[Tuple[int, int]]] = []
    ids: List[List[int]] = []
    used_dims: List[set] = []
    stack_of: Dict[int, int] = {}

    for vertex in dag.vertices():
        # Every ancestor sits in a stack at or before `floor`.
        floor = max((stack_of[e.source[0]] for e in dag.in_edges(vertex.id) if dag.is_vertex(e.source[0])),
                    default=-1)
        target = None
        for index in range(floor + 1, len(thetas)):
            if ry_angles_equal(thetas[index], vertex.theta) and used_dims[index].isdisjoint(vertex.dims):
                target = index
                break

        if target is None:
            target = len(thetas)
            thetas.append(vertex.theta)
            members.append([])
            ids.append([])
            used_dims.append(set())

        members[target].append(vertex.dims)
        ids[target].append(vertex.id)
        used_dims[target].update(vertex.dims)
        stack_of[vertex.id] = target
        _logger.trace('Vertex %d %s -> stack %d.' % (vertex.id, vertex.dims, target))

    stacks = [StackedVertex(theta, m, i) for theta, m, i in zip(thetas, members, ids)]
    _logger.debug('Fused %d vertices into %d stacks.' % (dag.num_vertices, len(stacks)))
    return stacks


def split_power_of_two(stack: StackedVertex) -> List[StackedVertex]:
    """!
    @brief Split a stack into stacks whose lengths are the binary decomposition of its length, largest first.

    For example, a stack of length 6 becomes stacks of length 4 and 2, taking the members in order.
    """
    if is_power_of_two(stack.length):
        return [stack]

    result = []
    start = 0
    for k in reversed(range(stack.length.bit_length())):
        size = 1 << k
        if stack.length & size:
            ids = stack.vertex_ids[start:start + size] if stack.vertex_ids else ()
            result.append(StackedVertex(stack.theta, stack.members[start:start + size], ids))
            start += size
    return result
