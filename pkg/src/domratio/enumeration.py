"""Non-isomorphic free trees via canonical level sequences.

Each free tree is emitted once, as the level sequence of its canonical
rooting (Wright, Richmond, Odlyzko and McKay successor stepping on top of
Beyer-Hedetniemi rooted-tree generation). Vertex ``i`` of the emitted graph
is position ``i`` of the sequence, so vertex 0 is the canonical root and
parents always precede children.
"""

from __future__ import annotations

from typing import Iterator

from .errors import DomainError
from .graph import Graph, tree_from_parents

MAX_ORDER = 20


def _check_order(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
        raise DomainError(f"tree order must be in 1..{MAX_ORDER}, got {n}")


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor of a rooted level sequence."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Left-most principal subtree (rebased) and the remainder of the tree."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    left = [h - 1 for h in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _next_free(seq: list[int]) -> list[int] | None:
    """Smallest canonical free-tree sequence at or after ``seq``."""
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    ok = rh > lh or (rh == lh and (len(left) < len(rest)
                                   or (len(left) == len(rest) and left <= rest)))
    if ok:
        return seq
    p = len(left)
    nxt = _next_rooted(seq, p)
    if nxt is not None and seq[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[len(nxt) - len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of all free trees of order ``n``."""
    _check_order(n)
    if n == 1:
        yield (0,)
        return
    # start from the path rooted at its centre
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is None:
            return
        yield tuple(seq)
        seq = _next_rooted(seq)


def parents_from_levels(levels: tuple[int, ...] | list[int]) -> list[int]:
    parents = [-1] * len(levels)
    stack: list[int] = []
    for i, h in enumerate(levels):
        while stack and levels[stack[-1]] >= h:
            stack.pop()
        if stack:
            parents[i] = stack[-1]
        stack.append(i)
    return parents


def tree_from_levels(levels: tuple[int, ...] | list[int]) -> Graph:
    return tree_from_parents(parents_from_levels(levels))


def enumerate_trees(n: int, shards: int = 1, shard_id: int = 0) -> Iterator[Graph]:
    """Yield one tree per isomorphism class of order ``n``, deterministic order.

    With ``shards > 1`` only the trees whose position in the stream is
    congruent to ``shard_id`` modulo ``shards`` are produced.
    """
    if shards < 1 or not 0 <= shard_id < shards:
        raise DomainError(f"invalid shard {shard_id} of {shards}")
    for idx, levels in enumerate(level_sequences(n)):
        if idx % shards == shard_id:
            yield tree_from_levels(levels)


def count_trees(n: int) -> int:
    """Number of trees produced by :func:`enumerate_trees`, by full traversal."""
    return sum(1 for _ in level_sequences(n))
