"""Combinatorial galleries of a fixed minimal type, folded enumeration, shadows.

A gallery of type (i_1, ..., i_l) starting at an alcove walks the panels
of those types in order; at each panel it either crosses to the neighbor
or folds (stays).  The chimney orientation classifies each step, negative
folds are forbidden, and the surviving branches carry weights: q_i for a
positive crossing, 1 for a negative crossing, q_i - 1 for a positive
fold.  Galleries store the step decisions only; the alcove track is
recovered by replay.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .chimney import Chimney, orientation
from .coxeter import AffineElement, CoxeterSystem
from .errors import InputError
from .geometry import MINUS, PLUS
from .polynomials import CountPolynomial


class StepKind(Enum):
    POSITIVE_CROSSING = "positive-crossing"
    NEGATIVE_CROSSING = "negative-crossing"
    POSITIVE_FOLD = "positive-fold"
    NEGATIVE_FOLD = "negative-fold"


CROSSINGS = (StepKind.POSITIVE_CROSSING, StepKind.NEGATIVE_CROSSING)


@dataclass(frozen=True)
class GalleryType:
    """A type word over panel types 0..n together with the start alcove."""

    word: tuple[int, ...]
    start: AffineElement


@dataclass(frozen=True)
class FoldedGallery:
    gtype: GalleryType
    steps: tuple[StepKind, ...]
    end: AffineElement


@dataclass(frozen=True)
class Shadow:
    """A set of end alcoves (AffineElement) or end vertices (coroot tuples)."""

    kind: str  # "alcove" or "vertex"
    elements: frozenset


def gallery_type(sys: CoxeterSystem, x: AffineElement,
                 start: AffineElement | None = None) -> GalleryType:
    """The type of the deterministic minimal gallery to x*base (greedy reduced word)."""
    return GalleryType(sys.reduced_word(x), start if start is not None else sys.identity)


def require_reduced(sys: CoxeterSystem, word: tuple[int, ...]) -> None:
    if sys.length(sys.from_word(word)) != len(word):
        raise InputError(
            f"type word {list(word)} is not reduced; galleries must have the type "
            "of a minimal gallery"
        )


def classify_step(ch: Chimney, current: AffineElement, i: int, stay: bool) -> StepKind:
    """Step classification under the chimney orientation.

    Crossing from the negative side is positive; folding is positive
    exactly when the current alcove sits on the positive side.
    """
    sign = orientation(ch, current, i)
    if stay:
        return StepKind.POSITIVE_FOLD if sign == PLUS else StepKind.NEGATIVE_FOLD
    return StepKind.POSITIVE_CROSSING if sign == MINUS else StepKind.NEGATIVE_CROSSING


def replay(sys: CoxeterSystem, gtype: GalleryType,
           steps: tuple[StepKind, ...]) -> AffineElement:
    """End alcove obtained by replaying step decisions from the start alcove."""
    cur = gtype.start
    for i, kind in zip(gtype.word, steps):
        if kind in CROSSINGS:
            cur = sys.neighbor(cur, i)
    return cur


def enumerate_folded(
    ch: Chimney, gtype: GalleryType
) -> list[tuple[FoldedGallery, CountPolynomial]]:
    """All galleries of the given minimal type that are positively folded with
    respect to the chimney, each with its label-count weight monomial.

    Depth-first, crossing branch before fold branch, so the output order is
    deterministic.  Weights are prod q_i over positive crossings times
    prod (q_i - 1) over positive folds, expanded into the monomial basis.
    """
    sys = ch.sys
    require_reduced(sys, gtype.word)
    nvars = sys.rank + 1
    word = gtype.word
    out: list[tuple[FoldedGallery, CountPolynomial]] = []
    steps: list[StepKind] = []
    cross = [0] * nvars
    fold = [0] * nvars

    def descend(j: int, cur: AffineElement) -> None:
        if j == len(word):
            out.append(
                (
                    FoldedGallery(gtype, tuple(steps), cur),
                    CountPolynomial.from_cross_fold(tuple(cross), tuple(fold)),
                )
            )
            return
        i = word[j]
        sign = orientation(ch, cur, i)
        nxt = sys.neighbor(cur, i)
        if sign == MINUS:
            steps.append(StepKind.POSITIVE_CROSSING)
            cross[i] += 1
            descend(j + 1, nxt)
            cross[i] -= 1
            steps.pop()
        else:
            steps.append(StepKind.NEGATIVE_CROSSING)
            descend(j + 1, nxt)
            steps.pop()
            steps.append(StepKind.POSITIVE_FOLD)
            fold[i] += 1
            descend(j + 1, cur)
            fold[i] -= 1
            steps.pop()

    descend(0, gtype.start)
    return out


def shadow_alcove(ch: Chimney, x: AffineElement) -> Shadow:
    """End alcoves of all positively folded galleries of type x from the base alcove."""
    leaves = enumerate_folded(ch, gallery_type(ch.sys, x))
    return Shadow("alcove", frozenset(fg.end for fg, _ in leaves))


def shadow_vertex(ch: Chimney, lam) -> Shadow:
    """End vertices of positively folded galleries of vertex type lam (dominant).

    Computed as the union over the finite Weyl group of alcove galleries of
    type w . x_lam, collecting the translation part of each end alcove.
    """
    sys = ch.sys
    lam = tuple(int(c) for c in lam)
    if len(lam) != sys.rank:
        raise InputError(f"coroot vector must have {sys.rank} coordinates")
    if not sys.is_dominant(lam):
        raise InputError(f"vertex shadow requires a dominant coroot, got {list(lam)}")
    x_lam = sys.min_length_in_coset(lam)
    verts: set[tuple[int, ...]] = set()
    for w in sys.spherical_elements:
        x = sys.mul(sys.from_spherical(w), x_lam)
        for fg, _ in enumerate_folded(ch, gallery_type(sys, x)):
            verts.add(fg.end.trans)
    return Shadow("vertex", frozenset(verts))
