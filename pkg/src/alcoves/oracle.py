"""Independent exhaustive verification in an abstract panel-regular building.

The building is never materialized.  A minimal gallery from the base
alcove is encoded by its type word plus a choice sequence: at each panel
the gallery sits at the gate (the previously reached alcove) and picks
one of the q_i non-gate alcoves, named by an alphabet symbol.  Folding
such a gallery into the apartment needs only, per step, the chimney gate
of the current apartment panel and the symbol carried by the chimney
gate of the current building panel; both are computable star by star.
This reproduces the retraction image of every minimal gallery, so
end-alcove histograms over all choice sequences are ground truth for the
symbolic gallery counts.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Iterator

from .chimney import Chimney, orientation
from .coxeter import AffineElement, CoxeterSystem
from .errors import InputError
from .galleries import (
    FoldedGallery,
    GalleryType,
    StepKind,
    gallery_type,
    require_reduced,
)
from .geometry import MINUS, PLUS


@dataclass(frozen=True)
class LabelAlphabets:
    """Per-type alphabets {0..q_i-1} plus the gate-label rule.

    The rule assigns to every traversed building panel the symbol carried
    by its chimney gate.  With ``seed=None`` every gate is labeled 0; with
    an integer seed the label is a deterministic hash of the panel
    identity (the choice prefix reaching it plus its type), which models
    an arbitrary relabeling of the building's panels.
    """

    sizes: tuple[int, ...]
    seed: int | None = None

    def size(self, i: int) -> int:
        return self.sizes[i]

    def gate_label(self, i: int, prefix: tuple[int, ...]) -> int:
        if self.seed is None:
            return 0
        payload = repr((self.seed, i, prefix)).encode()
        digest = hashlib.blake2b(payload, digest_size=8).digest()
        return int.from_bytes(digest, "big") % self.sizes[i]


def uniform_alphabets(sys: CoxeterSystem, q: int, seed: int | None = None) -> LabelAlphabets:
    if q < 2:
        raise InputError("panel parameters must be at least 2 (thickness)")
    return LabelAlphabets((q,) * (sys.rank + 1), seed)


@dataclass(frozen=True)
class AbstractMinimalGallery:
    """A minimal gallery from the base alcove: type word plus choice sequence."""

    word: tuple[int, ...]
    choices: tuple[int, ...]


@dataclass(frozen=True)
class LabeledFoldedGallery:
    """A positively folded gallery with alphabet labels on its positive steps.

    ``labels[j]`` is the symbol at step j for positive crossings and
    positive folds, and None at negative crossings.
    """

    folded: FoldedGallery
    labels: tuple[int | None, ...]


def all_choice_sequences(word: tuple[int, ...], alph: LabelAlphabets) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(alph.size(i)) for i in word))


def fold_abstract(
    ch: Chimney, g: AbstractMinimalGallery, alph: LabelAlphabets
) -> LabeledFoldedGallery:
    """Retract one abstract minimal gallery into the apartment.

    Tracks the retracted alcove: while it coincides with the chimney gate
    of its panel the step is a positive crossing carrying the choice
    symbol; otherwise the choice either names the chimney gate (negative
    crossing) or one of the remaining alcoves (positive fold).
    """
    sys = ch.sys
    require_reduced(sys, g.word)
    if len(g.choices) != len(g.word):
        raise InputError("choice sequence length must match the type word")
    hashed = alph.seed is not None
    cur = sys.identity
    steps: list[StepKind] = []
    labels: list[int | None] = []
    prefix: tuple[int, ...] = ()
    for j, i in enumerate(g.word):
        eps = g.choices[j]
        if not 0 <= eps < alph.size(i):
            raise InputError(f"choice {eps} outside alphabet of panel type {i}")
        if orientation(ch, cur, i) == MINUS:
            steps.append(StepKind.POSITIVE_CROSSING)
            labels.append(eps)
            cur = sys.neighbor(cur, i)
        elif eps == alph.gate_label(i, prefix):
            steps.append(StepKind.NEGATIVE_CROSSING)
            labels.append(None)
            cur = sys.neighbor(cur, i)
        else:
            steps.append(StepKind.POSITIVE_FOLD)
            labels.append(eps)
        if hashed:
            prefix += (eps,)
    gtype = GalleryType(g.word, sys.identity)
    return LabeledFoldedGallery(FoldedGallery(gtype, tuple(steps), cur), tuple(labels))


def unfold(ch: Chimney, lg: LabeledFoldedGallery, alph: LabelAlphabets) -> AbstractMinimalGallery:
    """The unique abstract minimal gallery folding onto the given labeled gallery.

    Rebuilds the choice sequence step by step; the stored steps, labels and
    end alcove are validated against the chimney orientation along the way.
    """
    sys = ch.sys
    gtype = lg.folded.gtype
    require_reduced(sys, gtype.word)
    if gtype.start != sys.identity:
        raise InputError("unfolding is defined for galleries based at the base alcove")
    if len(lg.labels) != len(gtype.word) or len(lg.folded.steps) != len(gtype.word):
        raise InputError("step and label sequences must match the type word")
    cur = sys.identity
    choices: list[int] = []
    prefix: tuple[int, ...] = ()
    for j, i in enumerate(gtype.word):
        kind = lg.folded.steps[j]
        label = lg.labels[j]
        sign = orientation(ch, cur, i)
        if kind == StepKind.POSITIVE_CROSSING:
            if sign != MINUS:
                raise InputError(f"step {j}: positive crossing on the positive side")
            if label is None or not 0 <= label < alph.size(i):
                raise InputError(f"step {j}: positive crossing needs a label in the alphabet")
            eps = label
            cur = sys.neighbor(cur, i)
        elif kind == StepKind.NEGATIVE_CROSSING:
            if sign != PLUS:
                raise InputError(f"step {j}: negative crossing on the negative side")
            if label is not None:
                raise InputError(f"step {j}: negative crossings carry no label")
            eps = alph.gate_label(i, prefix)
            cur = sys.neighbor(cur, i)
        elif kind == StepKind.POSITIVE_FOLD:
            if sign != PLUS:
                raise InputError(f"step {j}: positive fold on the negative side")
            if label is None or not 0 <= label < alph.size(i):
                raise InputError(f"step {j}: positive fold needs a label in the alphabet")
            if label == alph.gate_label(i, prefix):
                raise InputError(
                    f"step {j}: fold label equals the gate label, violating the "
                    "label constraint"
                )
            eps = label
        else:
            raise InputError(f"step {j}: negative folds cannot occur in a labeled gallery")
        choices.append(eps)
        prefix += (eps,)
    if cur != lg.folded.end:
        raise InputError("stored end alcove does not match the replayed steps")
    return AbstractMinimalGallery(gtype.word, tuple(choices))


def fold_histogram(
    ch: Chimney, word: tuple[int, ...], alph: LabelAlphabets
) -> dict[AffineElement, int]:
    """End-alcove histogram of the retraction over all prod q_i minimal galleries."""
    sys = ch.sys
    require_reduced(sys, word)
    hashed = alph.seed is not None
    hist: dict[AffineElement, int] = {}

    def descend(j: int, cur: AffineElement, prefix: tuple[int, ...], mult: int) -> None:
        if j == len(word):
            hist[cur] = hist.get(cur, 0) + mult
            return
        i = word[j]
        q = alph.size(i)
        nxt = sys.neighbor(cur, i)
        if orientation(ch, cur, i) == MINUS:
            # all q choices cross; they differ only in their label
            if hashed:
                for eps in range(q):
                    descend(j + 1, nxt, prefix + (eps,), mult)
            else:
                descend(j + 1, nxt, prefix, mult * q)
            return
        gate = alph.gate_label(i, prefix)
        if hashed:
            for eps in range(q):
                if eps == gate:
                    descend(j + 1, nxt, prefix + (eps,), mult)
                else:
                    descend(j + 1, cur, prefix + (eps,), mult)
        else:
            descend(j + 1, nxt, prefix, mult)
            if q > 1:
                descend(j + 1, cur, prefix, mult * (q - 1))

    descend(0, sys.identity, (), 1)
    return hist


def enumerate_labeled_folded(
    ch: Chimney, word: tuple[int, ...], alph: LabelAlphabets
) -> list[LabeledFoldedGallery]:
    """Every valid labeled folded gallery of the given type from the base alcove.

    Built directly from the label constraints (crossing labels free, fold
    labels avoiding the gate label of the building panel being traversed),
    independently of :func:`fold_abstract`; the two constructions are
    checked against each other by the verification suite.
    """
    sys = ch.sys
    require_reduced(sys, word)
    gtype = GalleryType(word, sys.identity)
    out: list[LabeledFoldedGallery] = []

    def descend(j, cur, steps, labels, prefix):
        if j == len(word):
            out.append(
                LabeledFoldedGallery(
                    FoldedGallery(gtype, tuple(steps), cur), tuple(labels)
                )
            )
            return
        i = word[j]
        q = alph.size(i)
        nxt = sys.neighbor(cur, i)
        if orientation(ch, cur, i) == MINUS:
            for eps in range(q):
                descend(
                    j + 1, nxt,
                    steps + [StepKind.POSITIVE_CROSSING],
                    labels + [eps], prefix + (eps,),
                )
            return
        gate = alph.gate_label(i, prefix)
        descend(
            j + 1, nxt,
            steps + [StepKind.NEGATIVE_CROSSING],
            labels + [None], prefix + (gate,),
        )
        for eps in range(q):
            if eps != gate:
                descend(
                    j + 1, cur,
                    steps + [StepKind.POSITIVE_FOLD],
                    labels + [eps], prefix + (eps,),
                )

    descend(0, sys.identity, [], [], ())
    return out


def polytope_points(sys: CoxeterSystem, lam) -> frozenset[tuple[int, ...]]:
    """Coroot lattice points inside the convex hull of the Weyl orbit of lam.

    Exact membership test: mu lies in the hull iff lam - w mu is a
    nonnegative combination of simple coroots for every finite Weyl group
    element w.  Candidates come from the coordinate bounding box of the
    orbit.
    """
    lam = tuple(int(c) for c in lam)
    if len(lam) != sys.rank:
        raise InputError(f"coroot vector must have {sys.rank} coordinates")
    if not sys.is_dominant(lam):
        raise InputError(f"polytope_points requires a dominant coroot, got {list(lam)}")
    orbit = sys.sph_orbit(lam)
    lo = [min(p[k] for p in orbit) for k in range(sys.rank)]
    hi = [max(p[k] for p in orbit) for k in range(sys.rank)]

    def inside(mu: tuple[int, ...]) -> bool:
        for w in sys.spherical_elements:
            wmu = sys.act_on_coroot(w, mu)
            if any(l - m < 0 for l, m in zip(lam, wmu)):
                return False
        return True

    points = set()
    for mu in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if inside(mu):
            points.add(mu)
    return frozenset(points)
