"""Braid group words and relation checking for matrix families.

The braid group on n strands is generated by s1..s(n-1) subject to
s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} and far commutation s_i s_j = s_j s_i
for |i-j| >= 2.  The product tau = s1 s2 ... s(n-1) conjugates the family
cyclically, which extends the index range by a derived generator s0; all
index arithmetic here is modulo n with that convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .errors import ShapeError
from .linalg import Matrix

if TYPE_CHECKING:  # pragma: no cover
    from .zoo import Representation

_LETTER = re.compile(r"^s(\d+)(\^-1)?$")


def circular_distance(i: int, j: int, n: int) -> int:
    """Distance between indices i and j around the cycle Z_n."""
    d = (i - j) % n
    return min(d, n - d)


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators, stored as (index, exponent) letters."""

    n: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for idx, exp in self.letters:
            if not 1 <= idx <= self.n - 1:
                raise ValueError(f"generator index {idx} out of range for {self.n} strands")
            if exp not in (1, -1):
                raise ValueError("exponents must be +1 or -1")

    @classmethod
    def parse(cls, text: str, n: int) -> "BraidWord":
        """Parse the whitespace syntax 's1 s2 s1^-1'."""
        letters = []
        for tok in text.split():
            m = _LETTER.match(tok)
            if m is None:
                raise ValueError(f"bad braid letter {tok!r}")
            letters.append((int(m.group(1)), -1 if m.group(2) else 1))
        return cls(n, tuple(letters))

    def __str__(self):
        return " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in self.letters)


@dataclass
class RelationReport:
    """Outcome of checking the defining relations on a matrix family."""

    braid_relations_ok: bool
    far_commutation_ok: bool
    failures: list[tuple[str, tuple[int, int]]] = field(default_factory=list)

    @property
    def ok(self):
        return self.braid_relations_ok and self.far_commutation_ok


def verify_braid_relations(rep: "Representation") -> RelationReport:
    """Check both defining relation families on the generator images, exactly."""
    g = {i: rep.gen(i) for i in range(1, rep.n)}
    failures = []
    braid_ok = True
    for i in range(1, rep.n - 1):
        a, b = g[i], g[i + 1]
        if a * b * a != b * a * b:
            braid_ok = False
            failures.append(("braid relation", (i, i + 1)))
    far_ok = True
    for i in range(1, rep.n):
        for j in range(i + 2, rep.n):
            if g[i] * g[j] != g[j] * g[i]:
                far_ok = False
                failures.append(("far commutation", (i, j)))
    return RelationReport(braid_ok, far_ok, failures)


def tau_image(rep: "Representation") -> Matrix:
    """Image of the cyclic shift element s1 s2 ... s(n-1)."""
    return rep.tau


def sigma0_image(rep: "Representation") -> Matrix:
    """Image of the derived generator s0 = tau s(n-1) tau^-1."""
    return rep.sigma0


def verify_cyclic_conjugation(rep: "Representation") -> bool:
    """True iff conjugation by tau shifts every deformation to the next one.

    This holds for every genuine representation; a False answer flags a
    matrix family that is not one.
    """
    t = rep.tau
    tinv = rep.tau_inverse
    for i in range(rep.n):
        if t * rep.deformation(i) * tinv != rep.deformation((i + 1) % rep.n):
            return False
    return True


def verify_deformed_relations(rep: "Representation") -> bool:
    """Check the relation consequences carried by the deformations A_i.

    Non-neighbors (circular distance >= 2) must commute, and each neighbor
    pair must share the common value A + A^2 + ABA = B + B^2 + BAB.
    """
    n = rep.n
    a = [rep.deformation(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if circular_distance(i, j, n) >= 2 and a[i] * a[j] != a[j] * a[i]:
                return False
    for i in range(n):
        x, y = a[i], a[(i + 1) % n]
        if x + x * x + x * y * x != y + y * y + y * x * y:
            return False
    return True


def evaluate_word(rep: "Representation", word: BraidWord) -> Matrix:
    """Ordered product of generator images and inverses."""
    if word.n != rep.n:
        raise ShapeError(f"word on {word.n} strands applied to a {rep.n}-strand family")
    out = Matrix.identity(rep.r)
    for idx, exp in word.letters:
        out = out * (rep.gen(idx) if exp == 1 else rep.gen_inverse(idx))
    return out
