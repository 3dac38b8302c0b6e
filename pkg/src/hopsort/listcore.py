"""Singly linked list with hop links over equal-key runs.

A *segment* is a maximal run of adjacent equal-key nodes.  Every node
carries a ``hop`` link that starts out pointing at the node itself; the
merge engines extend the hop of a run's first node so the whole run can be
stepped over in one jump.  A maximal segment may stay covered by several
hop *fragments* (merges are allowed to leave the cover fragmented);
``hop_walk`` visits one node per fragment and ``normalize_hops`` collapses
the cover back to one hop per segment.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence


class HopError(ValueError):
    """A hop link broke its contract during traversal."""


class NotSortedError(ValueError):
    """A checked operation required nondecreasing keys and found a drop."""


class Node:
    """List element: integer key, origin index, ``next`` link, ``hop`` link."""

    __slots__ = ("key", "origin", "next", "hop")

    def __init__(self, key: int, origin: int = 0):
        self.key = key
        self.origin = origin
        self.next: Node | None = None
        self.hop: Node = self

    def __repr__(self) -> str:
        return f"Node(key={self.key!r}, origin={self.origin!r})"


class SortList:
    """Handle to an acyclic, nil-terminated chain of nodes."""

    __slots__ = ("head", "length")

    def __init__(self, head: Node | None = None, length: int = 0):
        self.head = head
        self.length = length

    def __len__(self) -> int:
        return self.length

    def nodes(self) -> Iterator[Node]:
        """Yield the chain in next-order."""
        node = self.head
        while node is not None:
            yield node
            node = node.next

    def __repr__(self) -> str:
        preview = [node.key for _, node in zip(range(9), self.nodes())]
        tail = ", ..." if len(preview) > 8 else ""
        body = ", ".join(map(str, preview[:8]))
        return f"SortList([{body}{tail}], length={self.length})"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an invariant check; ``position`` locates the first violation."""

    ok: bool
    reason: str | None = None
    position: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def from_keys(keys: Sequence[int]) -> SortList:
    """Build a list whose i-th node has key ``keys[i]`` and origin ``i``.

    Runs are never pre-scanned: every node starts with ``hop`` pointing at
    itself, and equal-key runs only coalesce later, during merges.
    """
    head: Node | None = None
    prev: Node | None = None
    n = 0
    for i, key in enumerate(keys):
        node = Node(key, i)
        if prev is None:
            head = node
        else:
            prev.next = node
        prev = node
        n += 1
    return SortList(head, n)


def to_keys(lst: SortList) -> list[int]:
    """Keys in next-order."""
    return [node.key for node in lst.nodes()]


def dispose(lst: SortList) -> None:
    """Sever every link so dropped nodes free by reference counting.

    A self-hop makes each node its own reference cycle, so a dropped chain
    otherwise sits around until the cyclic collector finds it.
    """
    node = lst.head
    while node is not None:
        nxt = node.next
        node.next = None
        node.hop = None  # breaks the cycle; the node is dead past this point
        node = nxt
    lst.head = None
    lst.length = 0


def hop_walk(lst: SortList) -> list[Node]:
    """Visit the head, then ``hop.next``, ``hop.next``, ... until nil.

    On a well-formed list this touches one node per hop fragment.  Raises
    HopError if a visited node's hop target carries a different key, or if
    a hop sends the walk to an already-visited node (the footprint of a
    backward hop).
    """
    walk: list[Node] = []
    seen: set[int] = set()
    node = lst.head
    while node is not None:
        if id(node) in seen:
            raise HopError(
                f"walk revisited a node at step {len(walk)}; some hop points backward"
            )
        seen.add(id(node))
        walk.append(node)
        target = node.hop
        if target.key != node.key:
            raise HopError(
                f"hop at walk step {len(walk) - 1} jumps from key {node.key} "
                f"to key {target.key}"
            )
        node = target.next
    return walk


def distinct_key_count(lst: SortList, check: bool = False) -> int:
    """Number of distinct keys in a sorted list, read off the hop walk.

    The walk touches at least one node per maximal segment and never mixes
    keys inside a fragment, so counting key changes along it is exact --
    provided the list is sorted.  On an unsorted list the result means
    nothing; pass ``check=True`` to scan the chain first and raise
    NotSortedError instead of returning garbage.
    """
    if check:
        prev: int | None = None
        for pos, node in enumerate(lst.nodes()):
            if prev is not None and node.key < prev:
                raise NotSortedError(f"keys decrease at position {pos}")
            prev = node.key
    count = 0
    prev_key = 0
    for node in hop_walk(lst):
        if count == 0 or node.key != prev_key:
            count += 1
            prev_key = node.key
    return count


def normalize_hops(lst: SortList) -> SortList:
    """Collapse the hop cover to one fragment per maximal segment, in place.

    After this, each segment's first node hops to its last node and every
    interior node hops to itself.  Idempotent.
    """
    node = lst.head
    while node is not None:
        first = node
        last = node
        last.hop = last
        while last.next is not None and last.next.key == first.key:
            last = last.next
            last.hop = last
        first.hop = last
        node = last.next
    return lst


def check_hop_valid(lst: SortList) -> Verdict:
    """Full hop audit over every node, not just the walk.

    A hop must stay inside the chain, point at or after its own node, and
    cover only equal keys in between.  Also flags chain cycles and a stored
    length that disagrees with the reachable node count.
    """
    nodes: list[Node] = []
    index: dict[int, int] = {}
    seg_of: list[int] = []
    seg = 0
    prev_key: int | None = None
    node = lst.head
    while node is not None:
        if id(node) in index:
            return Verdict(False, "cycle", len(nodes))
        if prev_key is not None and node.key != prev_key:
            seg += 1
        index[id(node)] = len(nodes)
        nodes.append(node)
        seg_of.append(seg)
        prev_key = node.key
        node = node.next
    if len(nodes) != lst.length:
        return Verdict(False, "length", len(nodes))
    for i, node in enumerate(nodes):
        j = index.get(id(node.hop))
        if j is None:
            return Verdict(False, "hop-escape", i)
        if j < i:
            return Verdict(False, "hop-backward", i)
        if seg_of[j] != seg_of[i]:
            # same chain, forward, but the stretch [i..j] changes key somewhere
            return Verdict(False, "hop-key", i)
    return Verdict(True)


def check_sorted_stable(lst: SortList, original: Sequence[int]) -> Verdict:
    """Verify nondecreasing keys, multiset equality with ``original``, and
    strictly increasing origins inside each equal-key run."""
    keys: list[int] = []
    prev: Node | None = None
    for pos, node in enumerate(lst.nodes()):
        if prev is not None:
            if node.key < prev.key:
                return Verdict(False, "order", pos)
            if node.key == prev.key and node.origin <= prev.origin:
                return Verdict(False, "stability", pos)
        keys.append(node.key)
        prev = node
    if Counter(keys) != Counter(original):
        return Verdict(False, "multiset", None)
    return Verdict(True)
