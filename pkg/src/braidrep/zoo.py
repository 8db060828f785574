"""Constructors and combinators for braid group matrix representations.

Each Representation stores the n-1 generator images; the derived image of
s0 and the deformations A_i = image - 1 are computed on demand and cached.
All values are immutable after construction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import cached_property
from random import Random

from . import braid
from .errors import NotARepresentationError, ShapeError, SingularMatrixError
from .linalg import Matrix, block_diagonal, inverse, rank, rational


class Representation:
    """A family of invertible r x r matrices indexed by the generators.

    The constructor enforces shape and invertibility only; properties that
    hold for genuine representations (equal deformation ranks, the defining
    relations) are checked by the dedicated verification operations, so
    deliberately broken families can be built as negative test inputs.
    """

    def __init__(self, n, r, generators, label=""):
        if n < 2:
            raise ValueError("need at least 2 strands")
        generators = tuple(generators)
        if len(generators) != n - 1:
            raise ShapeError(f"expected {n - 1} generator images, got {len(generators)}")
        for g in generators:
            if g.shape != (r, r):
                raise ShapeError("generator images must all be square of the stated size")
            if rank(g) != r:
                raise SingularMatrixError("generator image is singular")
        self.n = n
        self.r = r
        self.generators = generators
        self.label = label
        self._inverses = {}

    def gen(self, i) -> Matrix:
        """Image of generator i, with i = 0 giving the derived s0 image."""
        if i == 0:
            return self.sigma0
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"generator index {i} out of range")
        return self.generators[i - 1]

    def gen_inverse(self, i) -> Matrix:
        if i not in self._inverses:
            self._inverses[i] = inverse(self.gen(i))
        return self._inverses[i]

    @cached_property
    def tau(self) -> Matrix:
        out = self.generators[0]
        for g in self.generators[1:]:
            out = out * g
        return out

    @cached_property
    def tau_inverse(self) -> Matrix:
        return inverse(self.tau)

    @cached_property
    def sigma0(self) -> Matrix:
        return self.tau * self.generators[-1] * self.tau_inverse

    @cached_property
    def _deformations(self):
        ident = Matrix.identity(self.r)
        return tuple(self.gen(i) - ident for i in range(self.n))

    def deformation(self, i) -> Matrix:
        """A_i = image of generator i minus the identity, for i in 0..n-1."""
        if not 0 <= i <= self.n - 1:
            raise IndexError(f"deformation index {i} out of range")
        return self._deformations[i]

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.n, self.r, self.generators) == (other.n, other.r, other.generators)

    def __hash__(self):
        return hash((self.n, self.r, self.generators))

    def __repr__(self):
        return f"Representation(n={self.n}, r={self.r}, label={self.label!r})"


def character_rep(n, y) -> Representation:
    """The one-dimensional family sending every generator to [y]."""
    y = rational(y)
    if y == 0:
        raise ValueError("character parameter must be nonzero")
    g = Matrix(((y,),))
    return Representation(n, 1, (g,) * (n - 1), label=f"char(n={n},y={y})")


def _embed(size, at, block):
    rows = [[Fraction(i == j) for j in range(size)] for i in range(size)]
    for i, brow in enumerate(block):
        for j, e in enumerate(brow):
            rows[at + i][at + j] = rational(e)
    return Matrix(rows)


def tym_standard(n, u) -> Representation:
    """The n-dimensional one-parameter family with the 2x2 block [[0,u],[1,0]].

    Generator i acts as the identity outside rows/columns i-1 and i, where
    it carries the block; at u = 1 the images are transposition matrices.
    """
    u = rational(u)
    if u == 0:
        raise ValueError("block parameter must be nonzero")
    if n < 2:
        raise ValueError("need at least 2 strands")
    gens = [_embed(n, i - 1, ((0, u), (1, 0))) for i in range(1, n)]
    return Representation(n, n, gens, label=f"tym(n={n},u={u})")


def reduced_burau(n, t) -> Representation:
    """Reduced Burau specialization at t, in the (n-1)-dimensional convention
    with first block [[-t,0],[1,1]], middle blocks [[1,t,0],[0,-t,0],[0,1,1]]
    and last block [[1,t],[0,-t]].  The defining relations are re-verified on
    the constructed matrices, so a transcription error cannot survive.
    """
    t = rational(t)
    if t == 0:
        raise ValueError("Burau parameter must be nonzero")
    if n < 3:
        raise ValueError("need at least 3 strands")
    r = n - 1
    gens = []
    for i in range(1, n):
        if i == 1:
            gens.append(_embed(r, 0, ((-t, 0), (1, 1))))
        elif i == n - 1:
            gens.append(_embed(r, n - 3, ((1, t), (0, -t))))
        else:
            gens.append(_embed(r, i - 2, ((1, t, 0), (0, -t, 0), (0, 1, 1))))
    rep = Representation(n, r, gens, label=f"burau(n={n},t={t})")
    report = braid.verify_braid_relations(rep)
    if not report.ok:
        raise NotARepresentationError(f"Burau matrices violate relations: {report.failures}")
    return rep


def tensor_character(rep, y) -> Representation:
    """Scale every generator image entry-wise by the nonzero scalar y."""
    y = rational(y)
    if y == 0:
        raise ValueError("character parameter must be nonzero")
    gens = [g * y for g in rep.generators]
    return Representation(rep.n, rep.r, gens, label=f"tensor({rep.label},y={y})")


def direct_sum(a, b) -> Representation:
    """Block-diagonal sum of two families on the same strand count."""
    if a.n != b.n:
        raise ShapeError("strand counts differ")
    gens = [block_diagonal((g, h)) for g, h in zip(a.generators, b.generators)]
    return Representation(a.n, a.r + b.r, gens, label=f"dsum({a.label},{b.label})")


def conjugate_rep(rep, p, label=None) -> Representation:
    """Replace every generator image m by p^-1 m p."""
    if p.shape != (rep.r, rep.r):
        raise ShapeError("change of basis has the wrong size")
    pinv = inverse(p)
    gens = [pinv * g * p for g in rep.generators]
    return Representation(rep.n, rep.r, gens, label=label or f"conj({rep.label})")


def random_invertible_matrix(size, rng: Random, lo=-3, hi=3) -> Matrix:
    """Seeded random invertible matrix with small integer entries."""
    while True:
        m = Matrix([[rng.randint(lo, hi) for _ in range(size)] for _ in range(size)])
        if rank(m) == size:
            return m


def scrambled(rep, seed) -> Representation:
    """Conjugate by a seeded random invertible matrix, recording the seed."""
    p = random_invertible_matrix(rep.r, Random(seed))
    return conjugate_rep(rep, p, label=f"{rep.label} conjugated by P#seed={seed}")


def corank(rep) -> int:
    """Rank of any deformation; all generators must agree for this to exist."""
    ranks = [rank(rep.deformation(i)) for i in range(1, rep.n)]
    if len(set(ranks)) != 1:
        raise NotARepresentationError(f"deformation ranks disagree: {ranks}")
    return ranks[0]


def deformation(rep, i) -> Matrix:
    return rep.deformation(i)


def rep_to_dict(rep) -> dict:
    return {
        "n": rep.n,
        "r": rep.r,
        "generators": [g.to_strings() for g in rep.generators],
        "label": rep.label,
    }


def rep_from_dict(data) -> Representation:
    try:
        n = int(data["n"])
        r = int(data["r"])
        gens = [Matrix.from_strings(g) for g in data["generators"]]
        label = str(data.get("label", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"malformed representation data: {exc}") from exc
    return Representation(n, r, gens, label=label)


def save_representation(rep, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rep_to_dict(rep), fh, indent=2)
        fh.write("\n")


def load_representation(path) -> Representation:
    with open(path, "r", encoding="utf-8") as fh:
        return rep_from_dict(json.load(fh))
