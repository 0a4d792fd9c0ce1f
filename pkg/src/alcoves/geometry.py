"""Hyperplanes, half-spaces, panels, side tests and apartment gates.

A hyperplane H_(alpha,k) is stored canonically with ``alpha`` a positive
root (as an index into the system's root list) and an integer level; the
reflection fixed sets satisfy H_(-alpha,-k) = H_(alpha,k).  A half-space
additionally carries the side flag ``geq``, meaning {x : <x,alpha> >= k};
flipping the root and level toggles the side.  Side tests evaluate the
exact rational barycenter of an alcove against the wall, so they are
decidable and never land on the wall itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coxeter import AffineElement, CoxeterSystem, _dot
from .errors import InvariantError

PLUS = 1
MINUS = -1


@dataclass(frozen=True)
class Hyperplane:
    root: int  # index of a positive root
    level: int


@dataclass(frozen=True)
class HalfSpace:
    root: int  # index of a positive root
    level: int
    geq: bool

    @property
    def boundary(self) -> Hyperplane:
        return Hyperplane(self.root, self.level)


@dataclass(frozen=True)
class Panel:
    """The type-``ptype`` panel of the alcove x*base, shared with x s_ptype * base."""

    alcove: AffineElement
    ptype: int


def base_wall(sys: CoxeterSystem, i: int) -> Hyperplane:
    """Wall of the type-i panel of the base alcove: H_(alpha_i,0), or H_(highest,1)."""
    if i == 0:
        return Hyperplane(sys.highest, 1)
    return Hyperplane(sys.simple_idx[i - 1], 0)


def base_halfspace(sys: CoxeterSystem, i: int) -> HalfSpace:
    """The half-space bounded by the type-i base wall that contains the base alcove."""
    if i == 0:
        return HalfSpace(sys.highest, 1, False)
    return HalfSpace(sys.simple_idx[i - 1], 0, True)


def act_on_halfspace(sys: CoxeterSystem, x: AffineElement, h: HalfSpace) -> HalfSpace:
    """Half-space action (t^lam v).{<.,alpha> >= k} = {<., v alpha> >= k + <lam, v alpha>},
    canonicalized so the stored root stays positive."""
    img = x.lin.perm[h.root]
    level = h.level + _dot(x.trans, sys.pair_vecs[img])
    geq = h.geq
    if img >= sys.n_positive:
        img = sys.neg_of[img]
        level = -level
        geq = not geq
    return HalfSpace(img, level, geq)


def act_on_hyperplane(sys: CoxeterSystem, x: AffineElement, hp: Hyperplane) -> Hyperplane:
    return act_on_halfspace(sys, x, HalfSpace(hp.root, hp.level, True)).boundary


def point_pairing(sys: CoxeterSystem, point, root: int):
    """<point, root> for a point in simple-coroot coordinates."""
    return _dot(point, sys.pair_vecs[root])


def point_side(sys: CoxeterSystem, point, hp: Hyperplane) -> int:
    """-1, 0 or +1 according to the side of H the point lies on."""
    t = point_pairing(sys, point, hp.root)
    if t > hp.level:
        return PLUS
    if t < hp.level:
        return MINUS
    return 0


def alcove_point(sys: CoxeterSystem, x: AffineElement) -> tuple[Fraction, ...]:
    """Exact barycenter of the alcove x*base."""
    scaled = sys._scaled_barycenter_of(x)
    d = sys._bary_denom
    return tuple(Fraction(c, d) for c in scaled)


def alcove_side(sys: CoxeterSystem, x: AffineElement, hp: Hyperplane) -> int:
    """Strict side of the alcove x*base relative to a wall; never 'on'."""
    side = point_side(sys, alcove_point(sys, x), hp)
    if side == 0:
        raise InvariantError("alcove barycenter lies on a wall")
    return side


def wall_of_panel(sys: CoxeterSystem, p: Panel) -> Hyperplane:
    """Supporting hyperplane of a panel: the alcove's translate of the base wall."""
    return act_on_hyperplane(sys, p.alcove, base_wall(sys, p.ptype))


def halfspace_of_alcove(sys: CoxeterSystem, x: AffineElement, hp: Hyperplane) -> HalfSpace:
    """The half-space bounded by hp that contains the alcove x*base."""
    return HalfSpace(hp.root, hp.level, alcove_side(sys, x, hp) == PLUS)


def gate_in_apartment(sys: CoxeterSystem, p: Panel, d: AffineElement) -> AffineElement:
    """Among the two apartment alcoves containing p, the one closer to d*base."""
    c1 = p.alcove
    c2 = sys.neighbor(c1, p.ptype)
    d_inv = sys.inv(d)
    l1 = sys.length(sys.mul(d_inv, c1))
    l2 = sys.length(sys.mul(d_inv, c2))
    if l1 == l2:  # adjacent alcoves always differ by one
        raise InvariantError("panel gate is ambiguous")
    return c1 if l1 < l2 else c2


def base_vertices(sys: CoxeterSystem) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of the base alcove: the origin and coweight_i / mark_i."""
    origin = tuple(Fraction(0) for _ in range(sys.rank))
    verts = [origin]
    for i in range(sys.rank):
        verts.append(tuple(c / sys.marks[i] for c in sys.coweights[i]))
    return tuple(verts)


def alcove_vertices(sys: CoxeterSystem, x: AffineElement) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of the alcove x*base, exact rationals in coroot coordinates."""
    out = []
    for v in base_vertices(sys):
        img = sys.act_on_coroot(x.lin, v)
        out.append(tuple(a + t for a, t in zip(img, x.trans)))
    return tuple(out)
