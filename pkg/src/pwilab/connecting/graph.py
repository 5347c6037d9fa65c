"""The connecting graph of a permutation and its connecting sequences."""

from dataclasses import dataclass

from pwilab.iet.permutation import Permutation


@dataclass(frozen=True)
class ConnectingGraph:
    """Digraph on vertices 0..d with exactly one out-edge per vertex.

    ``successor[v]`` is the out-neighbour of v. The successor map is a
    permutation of {0..d}, so ``cycles`` partitions the vertices; cycles are
    listed in order of their smallest vertex and each starts there.
    """

    d: int
    successor: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def connected(self) -> bool:
        return len(self.cycles) == 1

    def cycle_of(self, v: int) -> tuple[int, ...]:
        for cycle in self.cycles:
            if v in cycle:
                return cycle
        raise ValueError(f"Vertex {v} is not in 0..{self.d}")

    def edges(self) -> list[tuple[int, int]]:
        return list(enumerate(self.successor))


def _successor(perm: Permutation, p: int) -> int:
    return perm.bracket(perm.inverse_at(perm.bracket(perm.at(p) + 1)) - 1)


def build_graph(perm: Permutation) -> ConnectingGraph:
    """G_pi: v_p -> v_q exactly when q = [pi^{-1}([pi(p) + 1]) - 1].

    Raises:
        ReducibleError: If ``perm`` is reducible.
    """
    perm.require_irreducible()
    d = perm.d
    successor = tuple(_successor(perm, p) for p in range(d + 1))

    cycles = []
    seen: set[int] = set()
    for start in range(d + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        v = successor[start]
        while v != start:
            cycle.append(v)
            seen.add(v)
            v = successor[v]
        cycles.append(tuple(cycle))
    return ConnectingGraph(d, successor, tuple(cycles))


@dataclass(frozen=True)
class ConnectingSequence:
    """One period p_0, ..., p_{s-1} of the sequence p_{k+1} = successor(p_k)."""

    p0: int
    sequence: tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.sequence)

    def at(self, k: int) -> int:
        return self.sequence[k % self.period]


def connecting_sequence(graph: ConnectingGraph, p0: int) -> ConnectingSequence:
    if not 0 <= p0 <= graph.d:
        raise ValueError(f"Vertex {p0} is not in 0..{graph.d}")
    sequence = [p0]
    v = graph.successor[p0]
    while v != p0:
        sequence.append(v)
        v = graph.successor[v]
    return ConnectingSequence(p0, tuple(sequence))
