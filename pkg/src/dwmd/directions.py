"""The four directional coordinate sets used by the detector and the filter.

Each direction is a line of five offsets through the center of a 5x5
window: the main diagonal, the horizontal, the anti-diagonal and the
vertical. Offsets at chessboard distance 1 from the center carry weight 2,
the outer ones weight 1, so the weights of each four-member set sum to 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class Offset(NamedTuple):
    s: int  # row offset
    t: int  # column offset


@dataclass(frozen=True)
class DirectionSet:
    """One of the four directional lines through a 5x5 window center."""

    k: int
    members: tuple[Offset, ...]       # the four off-center offsets, in line order
    full_members: tuple[Offset, ...]  # same line including (0, 0) as the 3rd element


def _make(k: int, line: list[tuple[int, int]]) -> DirectionSet:
    full = tuple(Offset(s, t) for s, t in line)
    members = tuple(o for o in full if o != (0, 0))
    return DirectionSet(k=k, members=members, full_members=full)


DIRECTIONS: tuple[DirectionSet, ...] = (
    _make(1, [(-2, -2), (-1, -1), (0, 0), (1, 1), (2, 2)]),
    _make(2, [(0, -2), (0, -1), (0, 0), (0, 1), (0, 2)]),
    _make(3, [(2, -2), (1, -1), (0, 0), (-1, 1), (-2, 2)]),
    _make(4, [(-2, 0), (-1, 0), (0, 0), (1, 0), (2, 0)]),
)


def direction_set(k: int) -> DirectionSet:
    """Return the direction set for index k in {1, 2, 3, 4}."""
    if k not in (1, 2, 3, 4):
        raise ValueError(f"direction index must be 1..4, got {k}")
    return DIRECTIONS[k - 1]


def direction_members(k: int) -> list[Offset]:
    """The four off-center offsets of direction k, ordered along the line."""
    return list(direction_set(k).members)


def weight(s: int, t: int) -> int:
    """Weight of the absolute difference at offset (s, t): 2 inside the
    3x3 ring around the center, 1 on the outer ring."""
    return 2 if max(abs(s), abs(t)) <= 1 else 1
