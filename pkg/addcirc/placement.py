"""!
@brief Placement maps, hypercube connectivity constraints and bitstring routing.

A placement map assigns every dimension of an additive circuit a bitstring in {0,1}^n. A stacked vertex can be
synthesized as a single (multi-)controlled Ry only when its placed bitstrings satisfy the connectivity constraints:

- Edge: the two dimensions of every member sit on a hypercube edge (Hamming distance 1).
- Parallel: every member's edge runs along the same bit, the rotation target.
- Dense: all placed bitstrings of a length-2^k stack vary in at most k+1 bits, i.e. they fill one subcube.
- Aligned: every member's slot 0 dimension sits on the same side of the target bit.

When the constraints fail, routing picks a subcube for the stack and moves its dimensions there with bitstring
transpositions.
"""
import itertools
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from . import trace as logging
from .bits import bit, hamming, is_power_of_two, to_bitstring
from .permutation import Permutation
from .stacking import StackedVertex

_logger = logging.getLogger('addcirc.routing')


@dataclass(frozen=True)
class PlacementMap:
    """!
    @brief Bijection from dimensions [0, 2^n) to n-bit bitstrings, stored as `bitstrings[dim]`.
    """
    n: int
    bitstrings: Tuple[int, ...]

    def __post_init__(self):
        bitstrings = tuple(int(b) for b in self.bitstrings)
        if sorted(bitstrings) != list(range(1 << self.n)):
            raise ValueError('Placement is not a bijection onto %d-bit strings.' % self.n)
        object.__setattr__(self, 'bitstrings', bitstrings)

    @classmethod
    def identity(cls, n: int) -> 'PlacementMap':
        return cls(n, tuple(range(1 << n)))

    def __getitem__(self, dim: int) -> int:
        return self.bitstrings[dim]

    def dim_at(self, bitstring: int) -> int:
        return self.bitstrings.index(bitstring)

    def as_permutation(self) -> Permutation:
        return Permutation(self.bitstrings)

    def permuted(self, perm: Permutation) -> 'PlacementMap':
        """!
        @brief The placement after moving bitstring x to perm(x), i.e. P'(d) = perm(P(d)).
        """
        return PlacementMap(self.n, tuple(perm(b) for b in self.bitstrings))

    def __str__(self):
        return 'PlacementMap(%s)' % ', '.join('%d:%s' % (d, to_bitstring(b, self.n))
                                               for d, b in enumerate(self.bitstrings))


class ConstraintReport(NamedTuple):
    edge_ok: bool
    parallel_ok: bool
    dense_ok: bool
    aligned_ok: bool
    # Member pairs violating the edge or parallel constraints.
    witness: Tuple[Tuple[int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.edge_ok and self.parallel_ok and self.dense_ok and self.aligned_ok


def check_constraints(stack: StackedVertex, placement: PlacementMap) -> ConstraintReport:
    """!
    @brief Check a power-of-two stack's placed bitstrings against the connectivity constraints.

    Each constraint is evaluated independently of the others.
    """
    if not is_power_of_two(stack.length):
        raise ValueError('Constraint checks require a power-of-two stack, got length %d.' % stack.length)

    witness = []
    edge_ok = True
    for a, b in stack.members:
        if hamming(placement[a], placement[b]) != 1:
            edge_ok = False
            witness.append((a, b))

    directions = [placement[a] ^ placement[b] for a, b in stack.members]
    parallel_ok = all(d == directions[0] for d in directions)
    if not parallel_ok:
        witness.extend(pair for pair, d in zip(stack.members, directions)
                       if d != directions[0] and pair not in witness)

    placed = [placement[d] for d in stack.dims()]
    varying = 0
    for b in placed:
        varying |= b ^ placed[0]
    k = stack.length.bit_length() - 1
    dense_ok = bin(varying).count('1') <= k + 1

    target = (directions[0] & -directions[0]).bit_length() - 1
    sides = set(bit(placement[a], target) for a, _ in stack.members)
    aligned_ok = len(sides) == 1

    return ConstraintReport(edge_ok, parallel_ok, dense_ok, aligned_ok, tuple(witness))


class RoutedSegment(NamedTuple):
    """!
    @brief One step of a routed schedule.

    `permutation` (possibly `None`) moves the bitstrings before the stack is applied; `placement` is the placement map
    in effect for the stack, after that move.
    """
    stack: StackedVertex
    permutation: Optional[Permutation]
    placement: PlacementMap


class _Candidate(NamedTuple):
    cost: int
    targets: Dict[int, int]


def _subcube_lines(free: Sequence[int], fixed_value: int) -> List[int]:
    """!
    @brief The 2^k bitstrings with the target bit clear spanning the subcube over `free`, in increasing order.
    """
    lines = []
    for m in range(1 << len(free)):
        x = fixed_value
        for i, q in enumerate(free):
            if (m >> i) & 1:
                x |= 1 << q
        lines.append(x)
    return sorted(lines)


def _assign(stack: StackedVertex, placement: PlacementMap, target: int, lines: List[int],
            flipped: bool) -> _Candidate:
    # Greedy: each member in order takes the free line that is cheapest for it, ties to the smallest line.
    available = list(lines)
    targets = {}
    cost = 0
    for a, b in stack.members:
        best_cost, best_line = None, None
        for x in available:
            xa, xb = (x | (1 << target), x) if flipped else (x, x | (1 << target))
            c = hamming(placement[a], xa) + hamming(placement[b], xb)
            if best_cost is None or c < best_cost:
                best_cost, best_line = c, x
        available.remove(best_line)
        xa, xb = (best_line | (1 << target), best_line) if flipped else (best_line, best_line | (1 << target))
        targets[a] = xa
        targets[b] = xb
        cost += best_cost
    return _Candidate(cost, targets)


def _realize(placement: PlacementMap, targets: Dict[int, int]) -> Permutation:
    """!
    @brief Move every dimension in `targets` to its target bitstring by swapping with the current occupant.

    A dimension already at its target is never displaced, since no two dimensions share a target.
    """
    current = list(placement.bitstrings)
    occupant = {b: d for d, b in enumerate(current)}
    swaps = []
    for d in sorted(targets):
        src, dst = current[d], targets[d]
        if src == dst:
            continue
        other = occupant[dst]
        current[d], current[other] = dst, src
        occupant[dst], occupant[src] = d, other
        swaps.append((src, dst))
    return Permutation.from_transpositions(1 << placement.n, swaps)


def choose_routing(stack: StackedVertex, placement: PlacementMap) -> Permutation:
    """!
    @brief Pick a bitstring permutation after which `stack` satisfies every connectivity constraint.

    Every subcube of the right size (target bit, free bits, fixed bit values) and both orientations of the target bit
    are scored by the total Hamming distance the stack's dimensions have to travel; the cheapest one wins, with ties
    going to the first candidate enumerated.

    A fixed bit costs the same for every line of a subcube, so each fixed bit takes the value most of the stack's
    bitstrings already have (0 on a tie) rather than enumerating all 2^(n-1-k) combinations.
    """
    n = placement.n
    k = stack.length.bit_length() - 1
    if not is_power_of_two(stack.length) or k > n - 1:
        raise ValueError('Cannot place a stack of length %d on %d qubits.' % (stack.length, n))

    placed = [placement[d] for d in stack.dims()]
    ones = [sum(bit(x, q) for x in placed) for q in range(n)]
    majority = [2 * ones[q] > len(placed) for q in range(n)]

    best = None
    for target in range(n):
        others = [q for q in range(n) if q != target]
        for free in itertools.combinations(others, k):
            fixed_value = sum(1 << q for q in others if q not in free and majority[q])
            lines = _subcube_lines(free, fixed_value)
            for flipped in (False, True):
                candidate = _assign(stack, placement, target, lines, flipped)
                if best is None or candidate.cost < best.cost:
                    best = candidate

    perm = _realize(placement, best.targets)
    _logger.trace('Routing %s: cost %d, %s.' % (stack, best.cost, perm))
    return perm


def route(stacks: Sequence[StackedVertex], initial: PlacementMap) -> Tuple[List[RoutedSegment], List[Permutation]]:
    """!
    @brief Walk the stacks in order, inserting a bitstring permutation before every stack whose placement violates
           the connectivity constraints.

    @param stacks Power-of-two stacks in a causally valid order.
    @param initial The placement map before the first stack.

    @return A tuple `(schedule, permutations)`. `permutations` lists the inserted routing permutations in order.
    """
    placement = initial
    schedule = []
    permutations = []
    for stack in stacks:
        report = check_constraints(stack, placement)
        perm = None
        if not report.ok:
            perm = choose_routing(stack, placement)
            placement = placement.permuted(perm)
            permutations.append(perm)
            if not check_constraints(stack, placement).ok:
                raise RuntimeError('Routing failed to satisfy the connectivity constraints of %s.' % stack)
        schedule.append(RoutedSegment(stack, perm, placement))

    _logger.debug('Routed %d stacks with %d permutations.' % (len(stacks), len(permutations)))
    return schedule, permutations
