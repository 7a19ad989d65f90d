"""Pure-Python tuple scan over member-containment bitsets.

``masks[i] = (plus_bits, minus_bits)``: bit ``j`` of ``plus_bits`` is set
when member ``j`` lies inside the plus side of pair ``i``.  A k-tuple of
pairs is valid when, for every choice of sides, the AND of the chosen
bitsets is zero.
"""
from __future__ import annotations

from typing import Sequence


def first_valid_tuple(masks: Sequence[tuple[int, int]], k: int, n_members: int) -> tuple | None:
    """Lexicographically least nondecreasing index k-tuple that is valid, or None."""
    P = len(masks)
    if P == 0:
        return None
    if n_members == 0:
        return (0,) * k
    chosen: list[int] = []

    def search(start: int, acc: list[int]) -> bool:
        depth = len(chosen)
        if depth and not any(acc):
            # repeating the last pair keeps every intersection empty
            chosen.extend([chosen[-1]] * (k - depth))
            return True
        if depth == k:
            return False
        for i in range(start, P):
            plus, minus = masks[i]
            nxt = []
            for a in acc:
                nxt.append(a & plus)
                nxt.append(a & minus)
            chosen.append(i)
            if search(i, nxt):
                return True
            chosen.pop()
        return False

    if search(0, [(1 << n_members) - 1]):
        return tuple(chosen)
    return None
