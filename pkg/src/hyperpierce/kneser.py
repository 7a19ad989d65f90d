"""Set families over [n], Kneser hypergraph conditions and non-face complexes.

Ground-set elements and member positions are 0-based in Python; JSON
files use 1-based elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_CHROMATIC_MEMBERS = 20
MAX_COMPLEX_GROUND = 16


@dataclass(frozen=True)
class SetFamily:
    """Nonempty, pairwise distinct subsets of ``range(n)``, each stored sorted.

    Member order is significant: colorings refer to members by position.
    """

    n: int
    members: tuple

    def __init__(self, n: int, members: Iterable[Iterable[int]]):
        clean = []
        seen = set()
        for m in members:
            s = tuple(sorted(set(int(i) for i in m)))
            if not s:
                raise ValueError("family members must be nonempty")
            if s[0] < 0 or s[-1] >= n:
                raise ValueError(f"member {s} is not a subset of a {n}-element ground set")
            if s in seen:
                raise ValueError(f"duplicate member {s}")
            seen.add(s)
            clean.append(s)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "members", tuple(clean))

    @classmethod
    def deduplicated(cls, n: int, members: Iterable[Iterable[int]]) -> "SetFamily":
        seen = {}
        for m in members:
            s = tuple(sorted(set(m)))
            seen.setdefault(s, None)
        return cls(n, seen.keys())

    def __len__(self) -> int:
        return len(self.members)

    def subfamily(self, positions: Iterable[int]) -> "SetFamily":
        return SetFamily(self.n, [self.members[i] for i in positions])

    def masks(self) -> list[int]:
        return [sum(1 << i for i in m) for m in self.members]


def _disjoint_clique(masks: Sequence[int], order: Sequence[int], r: int) -> tuple | None:
    chosen: list[int] = []

    def extend(start: int, used: int) -> bool:
        if len(chosen) == r:
            return True
        for pos in range(start, len(order)):
            # not enough members left to finish
            if len(order) - pos < r - len(chosen):
                return False
            j = order[pos]
            if masks[j] & used:
                continue
            chosen.append(j)
            if extend(pos + 1, used | masks[j]):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if extend(0, 0) else None


def r_pairwise_disjoint_witness(F: SetFamily, r: int) -> tuple | None:
    """Positions of ``r`` pairwise disjoint members (a hyperedge of KG^r), or None.

    Backtracking visits members by ascending smallest element (stable on
    ties), so the returned hyperedge is deterministic.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    masks = F.masks()
    order = sorted(range(len(F.members)), key=lambda j: F.members[j][0])
    return _disjoint_clique(masks, order, r)


def verify_coloring(F: SetFamily, coloring: Sequence[int], r: int) -> tuple | None:
    """Return a monochromatic hyperedge of KG^r(F), or None if the coloring is proper."""
    if len(coloring) != len(F.members):
        raise ValueError("coloring must assign a color to every member")
    classes: dict[int, list[int]] = {}
    for j, c in enumerate(coloring):
        classes.setdefault(c, []).append(j)
    for c in sorted(classes):
        idx = classes[c]
        hit = r_pairwise_disjoint_witness(F.subfamily(idx), r)
        if hit is not None:
            return tuple(idx[j] for j in hit)
    return None


def chromatic_number(F: SetFamily, r: int, max_colors: int) -> int | None:
    """Least number of colors (at most ``max_colors``) properly coloring KG^r(F).

    Exhaustive DFS over color assignments; the first member is pinned to
    color 0 and a new color is only opened one at a time.  Returns None
    when more than ``max_colors`` colors are needed.
    """
    found = least_coloring(F, r, max_colors)
    return None if found is None else (max(found) + 1 if found else 0)


def least_coloring(F: SetFamily, r: int, max_colors: int) -> tuple | None:
    """A proper coloring of KG^r(F) with the fewest colors (at most ``max_colors``), or None."""
    if r < 2:
        raise ValueError("r must be at least 2")
    nm = len(F.members)
    if nm > MAX_CHROMATIC_MEMBERS:
        raise ValueError(f"chromatic search accepts at most {MAX_CHROMATIC_MEMBERS} members, got {nm}")
    if nm == 0:
        return ()
    masks = F.masks()
    for m in range(1, max_colors + 1):
        coloring = _coloring(masks, r, m)
        if coloring is not None:
            return coloring
    return None


def _coloring(masks: Sequence[int], r: int, m: int) -> tuple | None:
    nm = len(masks)
    classes: list[list[int]] = [[] for _ in range(m)]
    color = [0] * nm

    def completes_hyperedge(cls: list[int], j: int) -> bool:
        # does member j together with r-1 disjoint members of cls form a hyperedge?
        cand = [i for i in cls if not masks[i] & masks[j]]
        if len(cand) < r - 1:
            return False
        if r - 1 == 1:
            return True
        return _disjoint_clique(masks, cand, r - 1) is not None

    def assign(j: int, used: int) -> bool:
        if j == nm:
            return True
        for c in range(min(used + 1, m)):
            if completes_hyperedge(classes[c], j):
                continue
            classes[c].append(j)
            color[j] = c
            if assign(j + 1, max(used, c + 1)):
                return True
            classes[c].pop()
        return False

    return tuple(color) if assign(0, 0) else None


def majority_family(set_size: int, k: int) -> SetFamily:
    """All subsets A of ``range(set_size)`` with ``|A| > set_size / 2^k``, by size then lex."""
    if set_size < 1 or k < 1:
        raise ValueError("set_size and k must be positive")
    smallest = set_size // (2 ** k) + 1
    members = []
    for size in range(smallest, set_size + 1):
        members.extend(combinations(range(set_size), size))
    return SetFamily(set_size, members)


def minimal_members(F: SetFamily) -> SetFamily:
    """Inclusion-minimal members, in their original order."""
    masks = F.masks()
    keep = [j for j, a in enumerate(masks)
            if not any(b != a and b & ~a == 0 for b in masks)]
    return F.subfamily(keep)


def union_family(Fi: SetFamily, k: int) -> SetFamily:
    """All unions of ``2^k`` pairwise disjoint members of ``Fi``, deduplicated."""
    if not Fi.members:
        raise ValueError("family must be nonempty")
    r = 2 ** k
    masks = Fi.masks()
    unions: dict[int, None] = {}
    nm = len(masks)

    def extend(start: int, count: int, used: int) -> None:
        if count == r:
            unions.setdefault(used, None)
            return
        for j in range(start, nm):
            if not masks[j] & used:
                extend(j + 1, count + 1, used | masks[j])

    extend(0, 0, 0)
    members = [tuple(i for i in range(Fi.n) if (u >> i) & 1) for u in unions]
    members.sort(key=lambda s: (len(s), s))
    return SetFamily(Fi.n, members)


def _check_ground(F: SetFamily) -> None:
    if F.n > MAX_COMPLEX_GROUND:
        raise ValueError(f"complex routines accept ground sets of at most {MAX_COMPLEX_GROUND}, got {F.n}")


def is_face(F: SetFamily, sigma: Iterable[int]) -> bool:
    s = sum(1 << i for i in sigma)
    return all(m & ~s for m in F.masks())


def nonface_complex(F: SetFamily) -> list[tuple]:
    """Facets of the complex whose minimal non-faces are the members of F.

    The empty face is reported as ``()`` when it is the only face.
    """
    _check_ground(F)
    n = F.n
    masks = F.masks()
    full = (1 << n) - 1

    def face(s: int) -> bool:
        return all(m & ~s for m in masks)

    facets = []
    for s in range(full + 1):
        if not face(s):
            continue
        if all(not face(s | (1 << i)) for i in range(n) if not (s >> i) & 1):
            facets.append(tuple(i for i in range(n) if (s >> i) & 1))
    facets.sort(key=lambda f: (-len(f), f))
    return facets


def upward_closure(F: SetFamily) -> SetFamily:
    """All subsets of the ground set containing some member of F."""
    _check_ground(F)
    masks = F.masks()
    out = []
    for s in range(1, 1 << F.n):
        if any(m & ~s == 0 for m in masks):
            out.append(tuple(i for i in range(F.n) if (s >> i) & 1))
    out.sort(key=lambda t: (len(t), t))
    return SetFamily(F.n, out)
