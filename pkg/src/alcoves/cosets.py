"""Point-count polynomials for double-coset intersections in affine flag varieties.

Group elements are never materialized: by the gallery bijections, the
cardinality of an intersection such as I x I  n  (I_P)^y z I over a local
field with panel parameters q_i is the weight sum over positively folded
galleries of type x ending at z.  The Iwahori case sums one enumeration;
parahoric cases sum over a finite parabolic on the left and project the
end alcove onto a face coset on the right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chimney import Chimney
from .coxeter import AffineElement, CoxeterSystem
from .errors import InputError, InvariantError
from .galleries import enumerate_folded, gallery_type, shadow_alcove
from .polynomials import CountPolynomial


@dataclass(frozen=True)
class ParahoricFace:
    """The face of the base alcove fixed by the parabolic <s_j : j in J>.

    J = empty set encodes the full alcove (Iwahori stabilizer); J = all of
    1..n encodes the origin vertex (maximal parahoric at the base vertex).
    """

    J: frozenset[int]

    @classmethod
    def of(cls, indices) -> "ParahoricFace":
        return cls(frozenset(int(j) for j in indices))


def min_coset_rep(sys: CoxeterSystem, lam) -> AffineElement:
    """The unique minimal-length representative of t^lam W0; its alcove
    contains the vertex lam and is closest to the base alcove."""
    lam = tuple(int(c) for c in lam)
    if len(lam) != sys.rank:
        raise InputError(f"coroot vector must have {sys.rank} coordinates")
    return sys.min_length_in_coset(lam)


def is_two_sided_reduced(
    sys: CoxeterSystem, x: AffineElement, sigma: ParahoricFace, tau: ParahoricFace
) -> bool:
    """Whether x is shortest in its W_sigma x W_tau double coset; it suffices
    to test the generators on each side."""
    lx = sys.length(x)
    for j in sigma.J:
        if sys.length(sys.mul(sys.gen(j), x)) < lx:
            return False
    for j in tau.J:
        if sys.length(sys.mul(x, sys.gen(j))) < lx:
            return False
    return True


def count_histogram(ch: Chimney, x: AffineElement) -> dict[AffineElement, CountPolynomial]:
    """End-alcove histogram of the folded enumeration of type x: one weight
    polynomial per reachable end alcove (the support is the alcove shadow)."""
    sys = ch.sys
    nvars = sys.rank + 1
    hist: dict[AffineElement, CountPolynomial] = {}
    for fg, weight in enumerate_folded(ch, gallery_type(sys, x)):
        prev = hist.get(fg.end)
        hist[fg.end] = weight if prev is None else prev + weight
    return hist


def count_intersection(ch: Chimney, x: AffineElement, z: AffineElement) -> CountPolynomial:
    """Symbolic cardinality of I x I n (I_P)^y z I: the weight sum over
    positively folded galleries of type x ending at z*base."""
    sys = ch.sys
    total = CountPolynomial.zero(sys.rank + 1)
    for fg, weight in enumerate_folded(ch, gallery_type(sys, x)):
        if fg.end == z:
            total = total + weight
    return total


def count_parahoric(
    ch: Chimney,
    sigma: ParahoricFace,
    tau: ParahoricFace,
    x: AffineElement,
    z: AffineElement,
) -> CountPolynomial:
    """Symbolic cardinality of K(sigma) x K(tau) n (I_P)^y z K(tau), for x
    two-sided reduced; z is taken literally as the representative alcove."""
    sys = ch.sys
    if not is_two_sided_reduced(sys, x, sigma, tau):
        raise InputError(
            "x is not (W_sigma, W_tau)-reduced; replace it by the minimal-length "
            "representative of its double coset"
        )
    total = CountPolynomial.zero(sys.rank + 1)
    for w in sys.parabolic(sigma.J):
        wx = sys.mul(sys.from_spherical(w), x)
        total = total + count_intersection(ch, wx, z)
    return total


def count_parahoric_coset(
    ch: Chimney,
    sigma: ParahoricFace,
    tau: ParahoricFace,
    x: AffineElement,
    z: AffineElement,
) -> CountPolynomial:
    """Coset-level parahoric count: galleries ending anywhere in the tau-star
    of z, i.e. the sum of :func:`count_parahoric` over the alcoves z*v for v
    in W_tau.  This is the count whose nonvanishing matches membership of
    the simplex z.tau in the parahoric shadow."""
    sys = ch.sys
    if not is_two_sided_reduced(sys, x, sigma, tau):
        raise InputError(
            "x is not (W_sigma, W_tau)-reduced; replace it by the minimal-length "
            "representative of its double coset"
        )
    targets = {sys.mul(z, sys.from_spherical(v)) for v in sys.parabolic(tau.J)}
    total = CountPolynomial.zero(sys.rank + 1)
    for w in sys.parabolic(sigma.J):
        wx = sys.mul(sys.from_spherical(w), x)
        for fg, weight in enumerate_folded(ch, gallery_type(sys, wx)):
            if fg.end in targets:
                total = total + weight
    return total


def count_vertex(ch: Chimney, lam, mu) -> CountPolynomial:
    """Symbolic cardinality of K t^lam K n (I_P)^y t^mu K for lam dominant:
    galleries of the types w . x_lam over the finite Weyl group, ending in
    any alcove containing the vertex mu."""
    sys = ch.sys
    lam = tuple(int(c) for c in lam)
    mu = tuple(int(c) for c in mu)
    if len(lam) != sys.rank or len(mu) != sys.rank:
        raise InputError(f"coroot vectors must have {sys.rank} coordinates")
    if not sys.is_dominant(lam):
        raise InputError(f"count_vertex requires a dominant lam, got {list(lam)}")
    x_lam = sys.min_length_in_coset(lam)
    total = CountPolynomial.zero(sys.rank + 1)
    for w in sys.spherical_elements:
        x = sys.mul(sys.from_spherical(w), x_lam)
        for fg, weight in enumerate_folded(ch, gallery_type(sys, x)):
            if fg.end.trans == mu:
                total = total + weight
    return total


def face_coset_rep(sys: CoxeterSystem, z: AffineElement, tau: ParahoricFace) -> AffineElement:
    """Canonical representative of the simplex z.tau: the unique shortest
    element of z W_tau."""
    best = None
    best_len = None
    ties = 0
    for v in sys.parabolic(tau.J):
        zv = sys.mul(z, sys.from_spherical(v))
        lzv = sys.length(zv)
        if best_len is None or lzv < best_len:
            best, best_len, ties = zv, lzv, 1
        elif lzv == best_len:
            ties += 1
    if ties != 1:
        raise InvariantError("face coset representative is not unique")
    return best


def parahoric_shadow(
    ch: Chimney, x: AffineElement, sigma: ParahoricFace, tau: ParahoricFace
) -> frozenset[AffineElement]:
    """Shadow of the simplex x.tau from the face sigma, as canonical face
    representatives: end alcoves of folded galleries of the types w.x over
    W_sigma, projected onto their tau-cosets."""
    sys = ch.sys
    reps: set[AffineElement] = set()
    for w in sys.parabolic(sigma.J):
        wx = sys.mul(sys.from_spherical(w), x)
        for end in shadow_alcove(ch, wx).elements:
            reps.add(face_coset_rep(sys, end, tau))
    return frozenset(reps)
