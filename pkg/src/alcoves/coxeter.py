"""Exact arithmetic for one irreducible affine Coxeter system.

Conventions.  Roots are integer vectors in the simple-root basis and
coroots are integer vectors in the simple-coroot basis.  The Cartan
matrix is stored with rows indexed by coroots,

    A[i][j] = <alpha_i^vee, alpha_j>,

so that the pairing of a coroot vector ``lam`` with a root whose
coordinate vector is ``c`` is the single product ``lam . (A c)``.
Affine elements are stored in the normal form x = t^lam w with ``lam``
in the coroot lattice and ``w`` in the finite reflection group, which
multiplies by (t^lam u)(t^mu v) = t^(lam + u mu) (uv).

Finite group elements are represented by their permutation of the root
list, with equality and hashing on the permutation alone.  Everything
is exact: integers throughout, rationals (``fractions.Fraction``) for
alcove barycenters and vertices.  No floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, InvariantError

_FAMILY_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_TYPE_RE = re.compile(r"^([A-Ga-g])~?(\d+)$")


def _cartan_matrix(family: str, n: int) -> list[list[int]]:
    """Cartan matrix of the finite type underlying the affine system."""
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if family in ("A", "B", "C", "D"):
        for i in range(n - 1):
            link(i, i + 1)
    if family == "B":
        # alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
        link(n - 2, n - 1, -1, -2)
    elif family == "C":
        # alpha_n long: <alpha_{n-1}^vee, alpha_n> = -2
        link(n - 2, n - 1, -2, -1)
    elif family == "D":
        link(n - 2, n - 1, 0, 0)
        link(n - 3, n - 1)
    elif family == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4.
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            link(i, j)
        link(1, 3)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        # alpha_1 short, alpha_2 long; highest root 3 alpha_1 + 2 alpha_2.
        link(0, 1, -3, -1)
    return a


@dataclass(frozen=True)
class SphericalElement:
    """Element of the finite reflection group, as a permutation of the roots.

    ``perm[k]`` is the index of the image of root ``k``.  The cached
    ``word`` is the shortlex-minimal expression in the generators
    s_1..s_n (stored 0-based as root positions +1 handled by callers);
    it does not participate in equality or hashing.
    """

    perm: tuple[int, ...]
    word: tuple[int, ...] = field(compare=False)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "SphericalElement(%s)" % ("*".join(f"s{i}" for i in self.word) or "id")


@dataclass(frozen=True)
class AffineElement:
    """Affine Weyl group element x = t^trans . lin; doubles as the alcove x*base."""

    trans: tuple[int, ...]
    lin: SphericalElement

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"AffineElement(t{list(self.trans)}, {self.lin!r})"


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


class CoxeterSystem:
    """Cartan data, finite root system and finite Weyl group for one affine type.

    Immutable after construction; the internal dictionaries are caches
    only and never change observable behaviour, so instances may be
    shared freely between threads.
    """

    def __init__(self, label: str):
        family, rank = _parse_type_label(label)
        self.label = f"{family}~{rank}"
        self.family = family
        self.rank = rank
        self.cartan: tuple[tuple[int, ...], ...] = tuple(
            tuple(row) for row in _cartan_matrix(family, rank)
        )
        self.cartan_cols: tuple[tuple[int, ...], ...] = tuple(
            tuple(self.cartan[k][i] for k in range(rank)) for i in range(rank)
        )
        self._build_roots()
        self._build_group()
        self._build_geometry()
        self._neighbors: dict[tuple[AffineElement, int], AffineElement] = {}
        self._lengths: dict[AffineElement, int] = {}
        self._words: dict[AffineElement, tuple[int, ...]] = {}

    # ------------------------------------------------------------------
    # construction

    def _build_roots(self) -> None:
        n = self.rank
        simple = [
            (tuple(int(i == k) for k in range(n)), tuple(int(i == k) for k in range(n)))
            for i in range(n)
        ]
        seen = dict(simple)
        frontier = list(simple)
        while frontier:
            new = []
            for root, coroot in frontier:
                for i in range(n):
                    r = self._reflect_root(i, root)
                    if r not in seen:
                        c = self._reflect_coroot(i, coroot)
                        seen[r] = c
                        new.append((r, c))
            frontier = new
        positives = sorted(r for r in seen if all(c >= 0 for c in r))
        if 2 * len(positives) != len(seen):
            raise InvariantError("root system closure is not symmetric")
        roots = positives + [tuple(-c for c in r) for r in positives]
        self.roots: tuple[tuple[int, ...], ...] = tuple(roots)
        self.coroots: tuple[tuple[int, ...], ...] = tuple(seen[r] for r in roots)
        self.n_positive = len(positives)
        self.root_index: dict[tuple[int, ...], int] = {r: k for k, r in enumerate(roots)}
        self.neg_of: tuple[int, ...] = tuple(
            k + self.n_positive if k < self.n_positive else k - self.n_positive
            for k in range(len(roots))
        )
        # pairing vector A.c of each root: <lam, root_k> = lam . pair_vecs[k]
        self.pair_vecs: tuple[tuple[int, ...], ...] = tuple(
            tuple(_dot(self.cartan[i], r) for i in range(n)) for r in roots
        )
        self.simple_idx: tuple[int, ...] = tuple(
            self.root_index[tuple(int(i == k) for k in range(n))] for i in range(n)
        )
        # highest root: componentwise maximum of the positive roots
        best = max(range(self.n_positive), key=lambda k: (sum(roots[k]), roots[k]))
        if any(
            any(h - c < 0 for h, c in zip(roots[best], roots[k]))
            for k in range(self.n_positive)
        ):
            raise InvariantError("no dominance-maximal root found")
        self.highest = best
        self.marks: tuple[int, ...] = roots[best]

    def _reflect_root(self, i: int, coords: tuple[int, ...]) -> tuple[int, ...]:
        coef = _dot(self.cartan[i], coords)
        return tuple(c - coef * (k == i) for k, c in enumerate(coords))

    def _reflect_coroot(self, i: int, coords: Sequence) -> tuple:
        coef = _dot(coords, self.cartan_cols[i])
        return tuple(c - coef * (k == i) for k, c in enumerate(coords))

    def _build_group(self) -> None:
        nroots = len(self.roots)
        gen_perms = []
        for i in range(self.rank):
            perm = tuple(
                self.root_index[self._reflect_root(i, r)] for r in self.roots
            )
            gen_perms.append(perm)
        ident = tuple(range(nroots))
        words: dict[tuple[int, ...], tuple[int, ...]] = {ident: ()}
        frontier = [ident]
        while frontier:
            new = []
            for perm in frontier:
                w = words[perm]
                for i, g in enumerate(gen_perms):
                    q = tuple(perm[g[k]] for k in range(nroots))
                    if q not in words:
                        words[q] = w + (i + 1,)
                        new.append(q)
            frontier = new
        elems = [SphericalElement(p, w) for p, w in words.items()]
        elems.sort(key=lambda e: (len(e.word), e.word))
        self.spherical_elements: tuple[SphericalElement, ...] = tuple(elems)
        self.order = len(elems)
        self._by_perm: dict[tuple[int, ...], SphericalElement] = {
            e.perm: e for e in elems
        }
        self.identity_lin = self._by_perm[ident]
        self._gen_lin: tuple[SphericalElement, ...] = tuple(
            self._by_perm[p] for p in gen_perms
        )
        longest = max(elems, key=lambda e: len(e.word))
        if sum(1 for e in elems if len(e.word) == len(longest.word)) != 1:
            raise InvariantError("longest element is not unique")
        self.w0 = longest
        self.identity = AffineElement((0,) * self.rank, self.identity_lin)

    def _build_geometry(self) -> None:
        n = self.rank
        inv = _invert_rational(self.cartan)
        # fundamental coweights: <omega_i^vee, alpha_j> = delta_ij; row i of A^-1
        self.coweights: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(inv[i]) for i in range(n)
        )
        bary = [Fraction(0)] * n
        for i in range(n):
            for k in range(n):
                bary[k] += self.coweights[i][k] / self.marks[i]
        self.barycenter: tuple[Fraction, ...] = tuple(b / (n + 1) for b in bary)
        denom = 1
        for b in self.barycenter:
            denom = denom * b.denominator // _gcd(denom, b.denominator)
        self._bary_denom = denom
        self._bary_scaled: tuple[int, ...] = tuple(
            int(b * denom) for b in self.barycenter
        )
        self._bary_pair_scaled: tuple[int, ...] = tuple(
            _dot(self._bary_scaled, pv) for pv in self.pair_vecs
        )
        self._wb_cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    # ------------------------------------------------------------------
    # finite group operations

    def sph_mul(self, u: SphericalElement, v: SphericalElement) -> SphericalElement:
        return self._by_perm[tuple(u.perm[k] for k in v.perm)]

    def sph_inv(self, u: SphericalElement) -> SphericalElement:
        inv = [0] * len(u.perm)
        for k, img in enumerate(u.perm):
            inv[img] = k
        return self._by_perm[tuple(inv)]

    def sph_gen(self, i: int) -> SphericalElement:
        if not 1 <= i <= self.rank:
            raise InputError(f"spherical generator index {i} out of range 1..{self.rank}")
        return self._gen_lin[i - 1]

    def act_on_coroot(self, w: SphericalElement, lam: Sequence) -> tuple:
        """Apply w to a vector in simple-coroot coordinates (ints or Fractions)."""
        vec = list(lam)
        for i in reversed(w.word):
            coef = _dot(vec, self.cartan_cols[i - 1])
            vec[i - 1] -= coef
        return tuple(vec)

    def parabolic(self, J: Iterable[int]) -> tuple[SphericalElement, ...]:
        """The standard parabolic subgroup generated by {s_j : j in J}, enumerated."""
        J = sorted(set(J))
        for j in J:
            if not 1 <= j <= self.rank:
                raise InputError(f"parabolic index {j} out of range 1..{self.rank}")
        seen = {self.identity_lin}
        frontier = [self.identity_lin]
        while frontier:
            new = []
            for w in frontier:
                for j in J:
                    q = self.sph_mul(w, self.sph_gen(j))
                    if q not in seen:
                        seen.add(q)
                        new.append(q)
            frontier = new
        return tuple(sorted(seen, key=lambda e: (len(e.word), e.word)))

    # ------------------------------------------------------------------
    # affine group operations

    def mul(self, x: AffineElement, y: AffineElement) -> AffineElement:
        ulam = self.act_on_coroot(x.lin, y.trans)
        return AffineElement(
            tuple(a + b for a, b in zip(x.trans, ulam)), self.sph_mul(x.lin, y.lin)
        )

    def inv(self, x: AffineElement) -> AffineElement:
        w = self.sph_inv(x.lin)
        lam = self.act_on_coroot(w, x.trans)
        return AffineElement(tuple(-c for c in lam), w)

    def translation(self, lam: Sequence[int]) -> AffineElement:
        lam = tuple(int(c) for c in lam)
        if len(lam) != self.rank:
            raise InputError(f"coroot vector must have {self.rank} coordinates")
        return AffineElement(lam, self.identity_lin)

    def from_spherical(self, w: SphericalElement) -> AffineElement:
        return AffineElement((0,) * self.rank, w)

    def gen(self, i: int) -> AffineElement:
        """Affine generator: s_i for i in 1..n, and s_0 = t^(highest coroot) s_highest."""
        if i == 0:
            refl = self._reflection_perm(self.highest)
            return AffineElement(self.coroots[self.highest], self._by_perm[refl])
        if 1 <= i <= self.rank:
            return self.from_spherical(self.sph_gen(i))
        raise InputError(f"affine generator index {i} out of range 0..{self.rank}")

    def _reflection_perm(self, root: int) -> tuple[int, ...]:
        coroot = self.coroots[root]
        out = []
        for r in self.roots:
            coef = _dot(coroot, self.pair_vecs[self.root_index[r]])
            img = tuple(c - coef * h for c, h in zip(r, self.roots[root]))
            out.append(self.root_index[img])
        return tuple(out)

    def neighbor(self, x: AffineElement, i: int) -> AffineElement:
        """The alcove x s_i, sharing the type-i panel of x."""
        key = (x, i)
        got = self._neighbors.get(key)
        if got is None:
            got = self.mul(x, self.gen(i))
            self._neighbors[key] = got
        return got

    def from_word(self, word: Sequence[int]) -> AffineElement:
        x = self.identity
        for i in word:
            x = self.mul(x, self.gen(i))
        return x

    # ------------------------------------------------------------------
    # length and reduced words

    def _scaled_barycenter_of(self, x: AffineElement) -> tuple[int, ...]:
        wb = self._wb_cache.get(x.lin.perm)
        if wb is None:
            wb = self.act_on_coroot(x.lin, self._bary_scaled)
            self._wb_cache[x.lin.perm] = wb
        d = self._bary_denom
        return tuple(a + d * t for a, t in zip(wb, x.trans))

    def length(self, x: AffineElement) -> int:
        """Number of hyperplanes separating the base alcove from x*base."""
        got = self._lengths.get(x)
        if got is not None:
            return got
        p = self._scaled_barycenter_of(x)
        d = self._bary_denom
        total = 0
        for k in range(self.n_positive):
            t = _dot(p, self.pair_vecs[k])
            if t % d == 0:
                raise InvariantError("alcove barycenter lies on a wall")
            total += abs(t // d - self._bary_pair_scaled[k] // d)
        self._lengths[x] = total
        return total

    def reduced_word(self, x: AffineElement) -> tuple[int, ...]:
        """Greedy reduced word: repeatedly strip the smallest right descent."""
        got = self._words.get(x)
        if got is not None:
            return got
        out = []
        cur = x
        lc = self.length(cur)
        while lc > 0:
            for i in range(self.rank + 1):
                nxt = self.neighbor(cur, i)
                ln = self.length(nxt)
                if ln < lc:
                    out.append(i)
                    cur, lc = nxt, ln
                    break
            else:  # pragma: no cover - impossible for a Coxeter group
                raise InvariantError("no descent found for a nontrivial element")
        word = tuple(reversed(out))
        self._words[x] = word
        return word

    def elements_up_to_length(self, bound: int) -> list[AffineElement]:
        """All affine elements of length <= bound, sorted by (length, word)."""
        layer = [self.identity]
        seen = {self.identity}
        out = [self.identity]
        for ell in range(1, bound + 1):
            new = []
            for x in layer:
                for i in range(self.rank + 1):
                    y = self.neighbor(x, i)
                    if y not in seen and self.length(y) == ell:
                        seen.add(y)
                        new.append(y)
            layer = new
            out.extend(layer)
        out.sort(key=lambda e: (self.length(e), self.reduced_word(e)))
        return out

    # ------------------------------------------------------------------
    # dominance and coset representatives

    def pair_with_simple(self, lam: Sequence, i: int):
        """<lam, alpha_i> for a coroot-coordinate vector lam, 1-based i."""
        return _dot(lam, self.cartan_cols[i - 1])

    def is_dominant(self, lam: Sequence) -> bool:
        return all(self.pair_with_simple(lam, i) >= 0 for i in range(1, self.rank + 1))

    def dominant_rep(self, lam: Sequence[int]) -> tuple[int, ...]:
        vec = tuple(lam)
        while True:
            for i in range(1, self.rank + 1):
                c = self.pair_with_simple(vec, i)
                if c < 0:
                    vec = tuple(v - c * (k == i - 1) for k, v in enumerate(vec))
                    break
            else:
                return vec

    def sph_orbit(self, lam: Sequence[int]) -> frozenset[tuple[int, ...]]:
        return frozenset(self.act_on_coroot(w, lam) for w in self.spherical_elements)

    def min_length_in_coset(self, lam: Sequence[int]) -> AffineElement:
        """The unique shortest element of t^lam W0 (the alcove at lam closest to base)."""
        t = self.translation(lam)
        best = None
        best_len = None
        ties = 0
        for w in self.spherical_elements:
            x = self.mul(t, self.from_spherical(w))
            lx = self.length(x)
            if best_len is None or lx < best_len:
                best, best_len, ties = x, lx, 1
            elif lx == best_len:
                ties += 1
        if ties != 1:
            raise InvariantError("minimal coset representative is not unique")
        return best

    def sort_key(self, x: AffineElement) -> tuple:
        return (self.length(x), self.reduced_word(x))


# ----------------------------------------------------------------------
# system construction and element grammar

_SYSTEMS: dict[str, CoxeterSystem] = {}


def _parse_type_label(label: str) -> tuple[str, int]:
    m = _TYPE_RE.match(label.strip())
    if not m:
        raise InputError(
            f"unsupported type label {label!r}; expected one of A~n, B~n, C~n, "
            "D~n, E~6/7/8, F~4, G~2 (the tilde is optional)"
        )
    family = m.group(1).upper()
    rank = int(m.group(2))
    if not _FAMILY_RANKS[family](rank):
        raise InputError(f"type {family}~{rank} is not a supported irreducible affine type")
    return family, rank


def build_system(label: str) -> CoxeterSystem:
    """Build (or fetch from cache) the system for a type label such as ``A~2`` or ``C2``."""
    family, rank = _parse_type_label(label)
    key = f"{family}~{rank}"
    sys = _SYSTEMS.get(key)
    if sys is None:
        sys = CoxeterSystem(key)
        _SYSTEMS[key] = sys
    return sys


def affine_generator(sys: CoxeterSystem, i: int) -> AffineElement:
    return sys.gen(i)


_WORD_TOKEN = re.compile(r"^s(\d+)$")


def parse_element(sys: CoxeterSystem, text: str) -> AffineElement:
    """Parse the element grammar: a word ``"s0 s1 s2"`` over all generators,
    or ``"t[a,b,...]"`` optionally followed by ``*`` and a word over s1..sn."""
    t = text.strip()
    if not t:
        return sys.identity
    if t.startswith("t["):
        close = t.find("]")
        if close < 0:
            raise InputError(f"unterminated coroot bracket in element {text!r}")
        body = t[2:close].strip()
        try:
            coords = [int(p) for p in body.split(",")] if body else []
        except ValueError:
            raise InputError(f"bad coroot coordinates in element {text!r}") from None
        if len(coords) != sys.rank:
            raise InputError(
                f"element {text!r} has {len(coords)} coroot coordinates, expected {sys.rank}"
            )
        rest = t[close + 1 :].strip()
        x = sys.translation(coords)
        if rest:
            if not rest.startswith("*"):
                raise InputError(f"expected '*' after translation part in {text!r}")
            for tok in rest[1:].split():
                m = _WORD_TOKEN.match(tok)
                if not m or not 1 <= int(m.group(1)) <= sys.rank:
                    raise InputError(
                        f"bad token {tok!r} in {text!r}: the part after '*' is a word over s1..s{sys.rank}"
                    )
                x = sys.mul(x, sys.gen(int(m.group(1))))
        return x
    x = sys.identity
    for tok in t.split():
        m = _WORD_TOKEN.match(tok)
        if not m or not 0 <= int(m.group(1)) <= sys.rank:
            raise InputError(
                f"bad token {tok!r} in element {text!r}: expected generators s0..s{sys.rank}"
            )
        x = sys.mul(x, sys.gen(int(m.group(1))))
    return x


def element_to_str(sys: CoxeterSystem, x: AffineElement) -> str:
    """Reduced-word form of x, re-parseable by :func:`parse_element`."""
    return " ".join(f"s{i}" for i in sys.reduced_word(x))


# ----------------------------------------------------------------------
# small exact linear algebra helpers

def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _invert_rational(mat: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]
