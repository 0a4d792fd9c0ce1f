"""Chimneys, the orientations they induce, and chimney gates of panels.

A chimney is the pair (J, y): a subset J of the spherical node set
together with an affine element y.  It is realized purely as a membership
predicate on half-spaces; after pulling a half-space back by y^-1 and
writing it canonically as (beta, k, side) with beta positive, membership
reduces to a three-clause test:

  * beta supported on J, side geq:  k <= 0
  * beta supported on J, side leq:  k >= 1
  * beta not supported on J:        side leq

For every wall exactly one of its two half-spaces belongs to the chimney,
which orients every (alcove, panel) pair: the positive side is the one
the chimney does not contain.
"""

from __future__ import annotations

from typing import Iterable

from .coxeter import AffineElement, CoxeterSystem
from .errors import InputError, InvariantError
from .geometry import (
    MINUS,
    PLUS,
    HalfSpace,
    Panel,
    act_on_halfspace,
    halfspace_of_alcove,
    wall_of_panel,
)


class Chimney:
    """The (J, y)-chimney of a system; immutable, with internal result caches."""

    def __init__(self, sys: CoxeterSystem, J: Iterable[int], y: AffineElement | None = None):
        J = frozenset(J)
        for j in J:
            if not 1 <= j <= sys.rank:
                raise InputError(f"chimney index {j} out of range 1..{sys.rank}")
        self.sys = sys
        self.J = J
        self.y = y if y is not None else sys.identity
        self.y_inv = sys.inv(self.y)
        # positive roots lying in the span of {alpha_j : j in J}
        self.span_roots = frozenset(
            k
            for k in range(sys.n_positive)
            if all(c == 0 for i, c in enumerate(sys.roots[k]) if i + 1 not in J)
        )
        self._signs: dict[tuple[AffineElement, int], int] = {}

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Chimney(J={sorted(self.J)}, y={self.y!r})"


def chimney_contains(ch: Chimney, h: HalfSpace) -> bool:
    """Whether the half-space belongs to the (J, y)-chimney."""
    pulled = act_on_halfspace(ch.sys, ch.y_inv, h)
    if pulled.root in ch.span_roots:
        if pulled.geq:
            return pulled.level <= 0
        return pulled.level >= 1
    return not pulled.geq


def orientation(ch: Chimney, c: AffineElement, i: int) -> int:
    """Sign of the alcove c*base at its type-i panel: + iff the half-apartment
    containing the alcove is not in the chimney."""
    key = (c, i)
    sign = ch._signs.get(key)
    if sign is None:
        wall = wall_of_panel(ch.sys, Panel(c, i))
        half = halfspace_of_alcove(ch.sys, c, wall)
        sign = MINUS if chimney_contains(ch, half) else PLUS
        ch._signs[key] = sign
    return sign


def gate_chimney(ch: Chimney, p: Panel) -> AffineElement:
    """The unique alcove of the panel's star on the chimney (negative) side."""
    s_here = orientation(ch, p.alcove, p.ptype)
    other = ch.sys.neighbor(p.alcove, p.ptype)
    s_there = orientation(ch, other, p.ptype)
    if s_here == s_there:
        raise InvariantError(
            "both alcoves of a panel received the same chimney orientation"
        )
    return p.alcove if s_here == MINUS else other
