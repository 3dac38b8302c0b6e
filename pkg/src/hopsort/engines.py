"""The two merge procedures and the shared bottom-up driver.

Both engines run under the same driver: each input node is detached as a
singleton and pushed onto a stack, and the binary pattern of the running
push count decides how many merges precede the push -- one merge per low
1-bit, so the stack never holds more than one run per bit.  The popped
(older) run is always the left merge operand and ties take the left node.

Comparison counting: one counter bump per key pair inspected while both
sides are nonempty.  A single <= verdict (baseline) and a full
less/equal/greater verdict (hop) both cost exactly one bump, so on inputs
with no duplicate contact the two engines inspect the identical pair
sequence and report identical totals.

Stability: the baseline merge is stable on its own.  The hop merge favors
the left side fragment-by-fragment, but once a maximal segment is covered
by several fragments an equal-splice can land right-side nodes ahead of a
later left-side fragment of the same key, and no splice order can repair
that without inspecting keys the fragment walk never visits.  The driver
therefore records every equality its merges prove anyway (head-selection
ties and equal-splices) and, after the final fold, regroups each
equal-key region by origin -- restoring input order for equal keys while
leaving the comparison count untouched.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from typing import Callable, Sequence

from .listcore import Node, SortList, from_keys, to_keys


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


LESS = Ordering.LESS
EQUAL = Ordering.EQUAL
GREATER = Ordering.GREATER


class MergeEngine(enum.Enum):
    BASELINE = "baseline"
    HOP = "hop"


class ComparisonCounter:
    """Tally of three-way comparator invocations.  Never reset implicitly."""

    __slots__ = ("invocations",)

    def __init__(self) -> None:
        self.invocations = 0

    def __repr__(self) -> str:
        return f"ComparisonCounter(invocations={self.invocations})"


@dataclass(frozen=True)
class SortStats:
    """Instrumentation for one sort call."""

    comparisons: int
    merges: int
    max_stack_depth: int


def compare3(a: int, b: int, counter: ComparisonCounter) -> Ordering:
    """Three-way key comparison; exactly one counter bump per call."""
    counter.invocations += 1
    if a < b:
        return LESS
    if a > b:
        return GREATER
    return EQUAL


def merge_baseline(a: Node | None, b: Node | None, counter: ComparisonCounter) -> Node | None:
    """Stable merge of two sorted chains, one node per inspection.

    Ties take from ``a``.  Hop links are left untouched.  Once either side
    runs out the rest of the other is appended without further inspections.
    """
    if a is None:
        return b
    if b is None:
        return a
    counter.invocations += 1
    if a.key <= b.key:
        head = a
        a = a.next
    else:
        head = b
        b = b.next
    p = head
    while a is not None and b is not None:
        counter.invocations += 1
        if a.key <= b.key:
            p.next = a
            p = a
            a = a.next
        else:
            p.next = b
            p = b
            b = b.next
    p.next = b if a is None else a
    return head


def merge_hop(
    a: Node | None,
    b: Node | None,
    counter: ComparisonCounter,
    *,
    on_equal: Callable[[Node, Node], None] | None = None,
) -> Node | None:
    """Merge two sorted chains advancing a whole hop fragment per inspection.

    On an equal pair the a-side fragment is emitted, the b-side fragment is
    spliced directly behind it, and the a-fragment head's hop is extended
    over both -- so the pair costs a single inspection and every later merge
    steps over the combined run in one jump.  The head-selection step emits
    the winning fragment without looking across, which can leave a maximal
    segment covered by more than one fragment; that fragmentation is legal
    and never repaired here.

    ``on_equal`` is an observation hook: it is called with the two fragment
    heads every time an inspection proves their keys equal (head-selection
    ties included).  It must not relink anything; the driver uses it to
    remember which nodes are known-equal without spending comparisons.
    """
    if a is None:
        return b
    if b is None:
        return a
    counter.invocations += 1
    if a.key > b.key:
        head = b
        b = b.hop.next
    else:
        if on_equal is not None and a.key == b.key:
            on_equal(a, b)
        head = a
        a = a.hop.next
    p = head.hop
    while a is not None and b is not None:
        counter.invocations += 1
        ak = a.key
        bk = b.key
        if ak < bk:
            p.next = a
            ah = a.hop
            p = ah
            a = ah.next
        elif ak > bk:
            p.next = b
            bh = b.hop
            p = bh
            b = bh.next
        else:
            # equal: emit a's fragment, splice b's fragment behind it, and
            # fuse the two by extending a's fragment-head hop to b's end
            if on_equal is not None:
                on_equal(a, b)
            p.next = a
            ah = a.hop
            bh = b.hop
            p = bh
            nxt = ah.next
            ah.next = b
            a.hop = bh
            a = nxt
            b = bh.next
    p.next = b if a is None else a
    return head


_origin_of = operator.attrgetter("origin")


def _find_root(parent: dict[int, int], i: int) -> int:
    """Union-find root of ``i`` with full path compression."""
    path = []
    while True:
        p = parent.get(i, i)
        if p == i:
            break
        path.append(i)
        i = p
    for j in path:
        parent[j] = i
    return i


def _regroup_equal_regions(head: Node, parent: dict[int, int]) -> Node:
    """Rebuild every known-equal region of ``head`` in origin order.

    ``parent`` is a union-find forest over node ids in which two nodes
    share a root exactly when some earlier inspection proved their keys
    equal.  Along a sorted chain such a group occupies one contiguous
    region, so the chain is regrouped run-of-equal-roots by
    run-of-equal-roots; each multi-node region is re-linked by ascending
    origin and its hops are coalesced (first node hops to the last,
    interiors to themselves).  No keys are inspected.
    """
    out_head: Node | None = None
    out_tail: Node | None = None
    node: Node | None = head
    while node is not None:
        root = _find_root(parent, id(node))
        region = [node]
        node = node.next
        while node is not None and _find_root(parent, id(node)) == root:
            region.append(node)
            node = node.next
        if len(region) == 1:
            first = last = region[0]
            first.hop = first
        else:
            region.sort(key=_origin_of)
            first = region[0]
            last = region[-1]
            prev = first
            for nd in region[1:]:
                prev.next = nd
                prev.hop = prev
                prev = nd
            first.hop = last
            last.hop = last
        if out_tail is None:
            out_head = first
        else:
            out_tail.next = first
        out_tail = last
    out_tail.next = None
    return out_head


def mergesort(
    lst: SortList,
    engine: MergeEngine,
    counter: ComparisonCounter | None = None,
    on_push: Callable[[int, int], None] | None = None,
) -> tuple[SortList, SortStats]:
    """Sort ``lst`` in place (nodes are re-linked) and return (lst, stats).

    ``counter`` may be shared across calls; the returned stats report only
    this call's share.  ``on_push`` is a debug probe called as
    ``on_push(pushed_so_far, stack_depth)`` right after each singleton push.

    Output is stable: equal keys appear in input (origin) order.  For the
    hop engine this is finished by a final regrouping pass over the
    equalities the merges proved, which also coalesces each equal-key
    region to a single fragment (head hops to the region's last node); it
    performs no key inspections, so reported comparison counts are pure
    merge work.
    """
    if counter is None:
        counter = ComparisonCounter()
    node = lst.head
    if node is None or node.next is None:
        return lst, SortStats(0, 0, 0)
    parent: dict[int, int] | None = None
    if engine is MergeEngine.HOP:
        # Nodes proven equal by a merge inspection are unioned; the final
        # regrouping pass reads the groups back so stability costs no
        # comparisons of its own.
        parent = {}
        local_parent = parent

        def record_equal(x: Node, y: Node) -> None:
            rx = _find_root(local_parent, id(x))
            ry = _find_root(local_parent, id(y))
            if rx != ry:
                local_parent[ry] = rx

        def merge(left: Node | None, right: Node | None, c: ComparisonCounter) -> Node | None:
            return merge_hop(left, right, c, on_equal=record_equal)

    else:
        merge = merge_baseline
    before = counter.invocations
    merges = 0
    deepest = 0
    stack: list[Node] = []
    count = 0
    while node is not None:
        nxt = node.next
        node.next = None
        # a detached singleton must not hop into the chain it came from
        node.hop = node
        bits = count
        while bits & 1:
            older = stack.pop()
            node = merge(older, node, counter)
            merges += 1
            bits >>= 1
        stack.append(node)
        count += 1
        depth = len(stack)
        if depth > deepest:
            deepest = depth
        if on_push is not None:
            on_push(count, depth)
        node = nxt
    node = stack.pop()
    while stack:
        older = stack.pop()
        node = merge(older, node, counter)
        merges += 1
    if parent:
        # ties favored the left (older) operand fragment-by-fragment, but a
        # fragmented segment can still interleave; restore input order per
        # equal-key region using the equalities the merges already proved
        node = _regroup_equal_regions(node, parent)
    lst.head = node
    return lst, SortStats(counter.invocations - before, merges, deepest)


def sort_with_stats(keys: Sequence[int], engine: MergeEngine) -> tuple[list[int], SortStats]:
    """Convenience wrapper: build a list from ``keys``, sort, read keys back."""
    lst, stats = mergesort(from_keys(keys), engine)
    return to_keys(lst), stats
