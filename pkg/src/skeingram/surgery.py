"""Surgery presentations and the normalized invariant <M>'_p.

A presentation is an integer linking matrix plus one cable per component.
Only link families whose bracket reduces to the unknot or Hopf-link
kernels are evaluable:

``"empty"``
    no components; the manifold is S^3.
``"unlink"``
    split framed unknots (diagonal linking matrix).  One component of
    framing n gives the lens space L(n, 1).
``"cabled_hopf"``
    two Hopf-linked cores, each carrying some unlinked parallel copies.
    Every copy on one side links every copy on the other side once, and
    copies on the same side are mutually unlinked.  This is the link
    obtained by gluing two surgered solid tori along a meridian-longitude
    swap.

Anything else raises :class:`UnsupportedFamilyError` instead of returning
a number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .cyclotomic import CycNumber, embed_root
from .skein import (
    SkeinElement,
    TheoryParams,
    hopf_pairing,
    kirby_color,
    twist,
    unknot_eval,
)

__all__ = [
    "UnsupportedFamilyError",
    "SurgeryPresentation",
    "TorusElement",
    "signature",
    "empty_presentation",
    "unlink_presentation",
    "lens_presentation",
    "cabled_hopf_presentation",
    "torus_gluing_presentation",
    "hopf_link_presentation",
    "wrt_invariant",
    "lens_invariant",
    "disjoint_union_invariant",
]

Family = Literal["empty", "unlink", "cabled_hopf"]


class UnsupportedFamilyError(ValueError):
    """The presentation is not in a family this package can evaluate."""


def _sign(n) -> int:
    return (n > 0) - (n < 0)


def signature(m: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer (or rational) matrix.

    Exact symmetric congruence reduction over Q: pivot on a nonzero
    diagonal entry when there is one; when the whole working diagonal is
    zero, a row-and-column addition turns an off-diagonal entry ``b`` into
    the diagonal entry ``2b`` (the hyperbolic-block case).
    """
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    for row in a:
        if len(row) != n:
            raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix must be symmetric")

    sig = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i]), None)
        if piv is None:
            hit = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
            if hit is None:
                break
            i, j = hit
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        a[0], a[piv] = a[piv], a[0]
        for row in a:
            row[0], row[piv] = row[piv], row[0]
        d = a[0][0]
        sig += _sign(d)
        rest = []
        for i in range(1, n):
            f = a[i][0] / d
            rest.append([a[i][j] - f * a[0][j] for j in range(1, n)])
        a = rest
    return sig


@dataclass(frozen=True)
class SurgeryPresentation:
    """Framed link in S^3 given by its linking matrix and per-component cables.

    ``cables[i] is None`` means the Kirby color of whatever theory evaluates
    the presentation.  For ``"cabled_hopf"`` the first ``split`` components
    sit on one core and the remaining ones on the other.
    """

    linking: tuple[tuple[int, ...], ...]
    cables: tuple[Optional[SkeinElement], ...]
    family: Family
    split: int = 0

    def __post_init__(self):
        n = len(self.linking)
        object.__setattr__(self, "linking", tuple(tuple(int(v) for v in row) for row in self.linking))
        object.__setattr__(self, "cables", tuple(self.cables))
        if any(len(row) != n for row in self.linking):
            raise ValueError("linking matrix must be square")
        if any(self.linking[i][j] != self.linking[j][i] for i in range(n) for j in range(i)):
            raise ValueError("linking matrix must be symmetric")
        if len(self.cables) != n:
            raise ValueError(f"{len(self.cables)} cables for {n} components")
        if self.family == "empty" and n:
            raise ValueError("empty presentation with components")

    @property
    def size(self) -> int:
        return len(self.linking)

    @property
    def framings(self) -> tuple[int, ...]:
        return tuple(self.linking[i][i] for i in range(self.size))

    def signature(self) -> int:
        return signature(self.linking)

    def format_matrix(self) -> str:
        width = max((len(str(v)) for row in self.linking for v in row), default=1)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.linking)


@dataclass(frozen=True)
class TorusElement:
    """``W(i)``: surgery on i parallel +1-framed copies of the core of the solid torus.
    ``Z(j)``: surgery on the core with framing j.
    """

    kind: Literal["W", "Z"]
    index: int

    def __post_init__(self):
        if self.kind not in ("W", "Z"):
            raise ValueError(f"unknown torus element kind {self.kind!r}")
        if self.index < 1:
            raise ValueError("torus element index must be positive")

    @classmethod
    def w(cls, i: int) -> TorusElement:
        return cls("W", i)

    @classmethod
    def z(cls, j: int) -> TorusElement:
        return cls("Z", j)

    def framings(self) -> list[int]:
        """Framings of the copies of the core this element contributes."""
        return [1] * self.index if self.kind == "W" else [self.index]


def empty_presentation() -> SurgeryPresentation:
    return SurgeryPresentation((), (), "empty")


def unlink_presentation(framings: Sequence[int], cables=None) -> SurgeryPresentation:
    n = len(framings)
    if n == 0:
        return empty_presentation()
    linking = tuple(tuple(framings[i] if i == j else 0 for j in range(n)) for i in range(n))
    return SurgeryPresentation(linking, tuple(cables or [None] * n), "unlink")


def lens_presentation(n: int, cable: Optional[SkeinElement] = None) -> SurgeryPresentation:
    """Unknot with framing ``n``; surgery gives L(n, 1)."""
    return unlink_presentation([n], [cable])


def cabled_hopf_presentation(
    left: Sequence[int], right: Sequence[int], cables=None
) -> SurgeryPresentation:
    """Copies of two Hopf-linked cores with the given framings."""
    a, b = len(left), len(right)
    if a == 0 or b == 0:
        raise ValueError("each Hopf core needs at least one copy")
    framings = list(left) + list(right)
    n = a + b
    linking = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(framings[i])
            else:
                row.append(1 if (i < a) != (j < a) else 0)
        linking.append(tuple(row))
    return SurgeryPresentation(tuple(linking), tuple(cables or [None] * n), "cabled_hopf", split=a)


def torus_gluing_presentation(x: TorusElement, y: TorusElement) -> SurgeryPresentation:
    """Presentation of S(L_x) glued to S(L_y) by swapping meridian and longitude."""
    return cabled_hopf_presentation(x.framings(), y.framings())


def hopf_link_presentation(params: TheoryParams, k: int, l: int) -> SurgeryPresentation:
    """The framed link (L_{w_{2pk}}, L_{z_{2pl}})_Hopf, with 2pk + 1 components."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    p = params.p
    return torus_gluing_presentation(TorusElement.w(2 * p * k), TorusElement.z(2 * p * l))


def _check_family(pres: SurgeryPresentation) -> None:
    n = pres.size
    m = pres.linking
    if pres.family == "empty":
        return
    if pres.family == "unlink":
        if any(m[i][j] for i in range(n) for j in range(n) if i != j):
            raise UnsupportedFamilyError("unlink family requires a diagonal linking matrix")
        return
    if pres.family == "cabled_hopf":
        a = pres.split
        if not 0 < a < n:
            raise UnsupportedFamilyError("cabled Hopf family needs copies on both cores")
        for i in range(n):
            for j in range(n):
                if i != j and m[i][j] != (1 if (i < a) != (j < a) else 0):
                    raise UnsupportedFamilyError(
                        "linking matrix does not match a cabled Hopf link"
                    )
        return
    raise UnsupportedFamilyError(f"family {pres.family!r} not evaluable")


def _framed_cable(params, omega, cable, framing) -> SkeinElement:
    return twist(params, omega if cable is None else cable, framing)


def wrt_invariant(params: TheoryParams, pres: SurgeryPresentation) -> CycNumber:
    """eta * mu^(-sigma(L)) * <L(omega)> for an evaluable presentation."""
    _check_family(pres)
    if pres.family == "empty":
        return params.eta
    omega = kirby_color(params)
    sigma = pres.signature()
    framed = [
        _framed_cable(params, omega, c, f) for c, f in zip(pres.cables, pres.framings)
    ]
    if pres.family == "unlink":
        bracket = CycNumber.one(params.n_order)
        for x in framed:
            bracket = bracket * unknot_eval(params, x)
    else:
        # unlinked parallel copies on one core multiply in the skein algebra
        left = framed[0]
        for x in framed[1 : pres.split]:
            left = left * x
        right = framed[pres.split]
        for x in framed[pres.split + 1 :]:
            right = right * x
        bracket = hopf_pairing(params, left, right)
    return params.eta * embed_root(params.mu_root ** (-sigma)) * bracket


def lens_invariant(params: TheoryParams, n: int) -> CycNumber:
    """<L(n,1)>'_p, with L(0,1) = S^1 x S^2."""
    return wrt_invariant(params, lens_presentation(n))


def disjoint_union_invariant(
    params: TheoryParams, presentations: Sequence[SurgeryPresentation]
) -> CycNumber:
    """Invariant of a disjoint union: the product of the pieces' invariants."""
    total = CycNumber.one(params.n_order)
    for pres in presentations:
        total = total * wrt_invariant(params, pres)
    return total
