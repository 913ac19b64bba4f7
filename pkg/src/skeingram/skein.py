"""The Kauffman bracket skein module of the solid torus.

K(S^1 x D^2) is the polynomial algebra on the core ``z``.  Elements are
held either in the monomial basis ``z**n`` or in the basis ``e_i`` given by
``e_0 = 1``, ``e_1 = z``, ``e_{i+1} = z e_i - e_{i-1}``.  The ``e_i`` are
eigenvectors of the twist map, which is what makes them the working basis
for framing changes.

All scalars live in Q(zeta_N) with ``N = 24 p``; ``TheoryParams`` fixes the
roots ``A``, ``kappa`` and derives ``mu``, the Kirby color normalization and
``eta`` from identities checked at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .cyclotomic import CycNumber, RootOfUnity, embed_root, invert

__all__ = [
    "ParameterError",
    "ConventionError",
    "TheoryParams",
    "SkeinElement",
    "ScalarTable",
    "make_params",
    "construct_params",
    "kappa_root_for",
    "quantum_integer",
    "loop_value",
    "twist_eigenvalue",
    "z_to_e",
    "e_to_z",
    "skein_mul",
    "twist",
    "kirby_color",
    "unknot_eval",
    "hopf_pairing",
    "hopf_kernel",
]


class ParameterError(ValueError):
    """Invalid theory parameters (for instance ``p < 5``)."""


class ConventionError(ArithmeticError):
    """A construction identity failed; the message names the identity."""


# ---------------------------------------------------------------------------
# skein elements


@dataclass(frozen=True)
class SkeinElement:
    """Finite combination of ``z**n`` (basis ``"z"``) or ``e_i`` (basis ``"e"``).

    ``coeffs[n]`` is the coefficient of the n-th basis vector; trailing zeros
    are stripped so equal elements compare equal.
    """

    basis: Literal["z", "e"]
    n_order: int
    coeffs: tuple[CycNumber, ...] = ()

    def __post_init__(self):
        if self.basis not in ("z", "e"):
            raise ValueError(f"unknown skein basis {self.basis!r}")
        cs = list(self.coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def basis_vector(cls, basis: str, index: int, n_order: int, scale=1) -> SkeinElement:
        zero = CycNumber.zero(n_order)
        cs = [zero] * index + [CycNumber.from_int(n_order, 1) * scale]
        return cls(basis, n_order, tuple(cs))

    @classmethod
    def e(cls, i: int, n_order: int) -> SkeinElement:
        return cls.basis_vector("e", i, n_order)

    @classmethod
    def z(cls, n: int, n_order: int) -> SkeinElement:
        return cls.basis_vector("z", n, n_order)

    @classmethod
    def one(cls, n_order: int, basis: str = "z") -> SkeinElement:
        return cls.basis_vector(basis, 0, n_order)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> CycNumber:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return CycNumber.zero(self.n_order)

    def in_basis(self, basis: str) -> SkeinElement:
        if basis == self.basis:
            return self
        return z_to_e(self) if basis == "e" else e_to_z(self)

    def __add__(self, other: SkeinElement) -> SkeinElement:
        other = other.in_basis(self.basis)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkeinElement(
            self.basis, self.n_order, tuple(self.coeff(i) + other.coeff(i) for i in range(n))
        )

    def __neg__(self) -> SkeinElement:
        return SkeinElement(self.basis, self.n_order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: SkeinElement) -> SkeinElement:
        return self + (-other)

    def scale(self, c) -> SkeinElement:
        return SkeinElement(self.basis, self.n_order, tuple(c * x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, SkeinElement):
            return skein_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> SkeinElement:
        if k < 0:
            raise ValueError("negative powers are not defined in the skein algebra")
        result = SkeinElement.one(self.n_order)
        base = self.in_basis("z")
        while k:
            if k & 1:
                result = skein_mul(result, base)
            k >>= 1
            if k:
                base = skein_mul(base, base)
        return result

    def equals(self, other: SkeinElement) -> bool:
        """Equality as module elements, independent of basis."""
        return self.in_basis("e").coeffs == other.in_basis("e").coeffs

    def __str__(self) -> str:
        sym = "z^{}" if self.basis == "z" else "e_{}"
        parts = [f"({c})*{sym.format(i)}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


def z_to_e(x: SkeinElement) -> SkeinElement:
    """Rewrite a z-polynomial in the e-basis (Horner, using z e_i = e_{i+1} + e_{i-1})."""
    if x.basis == "e":
        return x
    zero = CycNumber.zero(x.n_order)
    acc: list[CycNumber] = []
    for c in reversed(x.coeffs):
        # acc <- z * acc + c
        shifted = [zero] * (len(acc) + 1)
        for i, a in enumerate(acc):
            if a:
                shifted[i + 1] = shifted[i + 1] + a
                if i > 0:
                    shifted[i - 1] = shifted[i - 1] + a
        shifted[0] = shifted[0] + c
        acc = shifted
    return SkeinElement("e", x.n_order, tuple(acc))


def _e_polys(count: int) -> list[list[int]]:
    polys = [[1], [0, 1]]
    while len(polys) < count:
        prev, cur = polys[-2], polys[-1]
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        polys.append(nxt)
    return polys[:count]


def e_to_z(x: SkeinElement) -> SkeinElement:
    """Expand an e-basis element into powers of z."""
    if x.basis == "z":
        return x
    n = len(x.coeffs)
    zero = CycNumber.zero(x.n_order)
    out = [zero] * n
    for c, poly in zip(x.coeffs, _e_polys(n)):
        if c:
            for j, k in enumerate(poly):
                if k:
                    out[j] = out[j] + c * k
    return SkeinElement("z", x.n_order, tuple(out))


def skein_mul(x: SkeinElement, y: SkeinElement) -> SkeinElement:
    """Product in K(S^1 x D^2): parallel cables on the same core.  Result in z-basis."""
    if x.n_order != y.n_order:
        raise ValueError("skein elements over different fields")
    xs = x.in_basis("z").coeffs
    ys = y.in_basis("z").coeffs
    if not xs or not ys:
        return SkeinElement("z", x.n_order)
    zero = CycNumber.zero(x.n_order)
    out = [zero] * (len(xs) + len(ys) - 1)
    for i, a in enumerate(xs):
        if a:
            for j, b in enumerate(ys):
                if b:
                    out[i + j] = out[i + j] + a * b
    return SkeinElement("z", x.n_order, tuple(out))


# ---------------------------------------------------------------------------
# parameters and scalars


def kappa_root_for(p: int, kappa_choice: int = 0) -> RootOfUnity:
    """kappa as a power of zeta_{24p}; the six choices differ by sixth roots of unity."""
    n = 24 * p
    return RootOfUnity(-12 - p * (p + 1) + 4 * p * kappa_choice, n)


class ScalarTable:
    """Memoized quantum integers, loop values and twist eigenvalues for one theory."""

    def __init__(self, p: int, a_root: RootOfUnity):
        self.p = p
        self.a_root = a_root
        self.n_order = a_root.n_order
        self._qint: dict[int, CycNumber] = {}
        self._twist: dict[tuple[int, int], CycNumber] = {}
        self._hopf: dict[tuple[int, int], CycNumber] = {}
        self.minus_a = -a_root

    def quantum_integer(self, n: int) -> CycNumber:
        if n < 0:
            return -self.quantum_integer(-n)
        # A**2 has order p, so [n + p] = [n]
        r = n % self.p
        if r not in self._qint:
            a2 = self.a_root ** 2
            total = CycNumber.zero(self.n_order)
            for j in range(r):
                total = total + embed_root(a2 ** (r - 1 - 2 * j))
            self._qint[r] = total
        return self._qint[r]

    def loop_value(self, i: int) -> CycNumber:
        q = self.quantum_integer(i + 1)
        return -q if i % 2 else q

    def twist_root(self, i: int) -> RootOfUnity:
        return self.minus_a ** (i * (i + 2))

    def twist_eigenvalue(self, i: int, power: int = 1) -> CycNumber:
        key = (i, power)
        if key not in self._twist:
            self._twist[key] = embed_root(self.twist_root(i) ** power)
        return self._twist[key]

    def hopf(self, i: int, j: int) -> CycNumber:
        key = (i, j) if i <= j else (j, i)
        if key not in self._hopf:
            q = self.quantum_integer((i + 1) * (j + 1))
            self._hopf[key] = -q if (i + j) % 2 else q
        return self._hopf[key]


@dataclass(frozen=True)
class TheoryParams:
    """The pinned conventions (p, N, A, kappa, mu, eta, c) of one theory."""

    p: int
    kappa_choice: int
    n_order: int
    a_root: RootOfUnity
    kappa_root: RootOfUnity
    mu_root: RootOfUnity
    mu: CycNumber
    eta: CycNumber
    norm_c: CycNumber
    gauss_plus: CycNumber
    gauss_minus: CycNumber
    checks: tuple[tuple[str, bool], ...] = ()
    table: ScalarTable = field(default=None, compare=False, repr=False)

    @property
    def a(self) -> CycNumber:
        return embed_root(self.a_root)

    @property
    def kappa(self) -> CycNumber:
        return embed_root(self.kappa_root)

    @property
    def mu_inv(self) -> CycNumber:
        return embed_root(self.mu_root.inverse())

    @property
    def delta(self) -> CycNumber:
        """Value of a trivial loop, ``-A**2 - A**-2``."""
        return self.table.loop_value(1)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def failed_checks(self) -> list[str]:
        return [name for name, passed in self.checks if not passed]

    def mu_subfield(self) -> tuple[int, CycNumber]:
        """``(M, mu)`` with mu written in the smaller field Q(zeta_M), M = order of mu.

        Entries of the truncated Gram matrices are powers of mu, so exact
        linear algebra on them can run in this subfield and be lifted back.
        """
        m = self.mu_root.order
        step = self.n_order // m
        return m, embed_root(RootOfUnity(self.mu_root.exponent // step, m))


def _has_exact_order(r: RootOfUnity, order: int) -> bool:
    x = embed_root(r)
    one = CycNumber.one(r.n_order)
    if x ** order != one:
        return False
    primes = {q for q in range(2, order + 1) if order % q == 0 and all(q % d for d in range(2, q))}
    return all(x ** (order // q) != one for q in primes)


def construct_params(p: int, kappa_choice: int = 0) -> TheoryParams:
    """Build the theory for ``p`` and record every construction identity.

    Does not raise on a failed identity (see ``make_params`` for that);
    raises ``ParameterError`` for out-of-range input and ``ConventionError``
    when a Gauss sum vanishes so that nothing further can be derived.
    """
    if isinstance(p, bool) or not isinstance(p, int) or p < 5:
        raise ParameterError(f"p must be an integer >= 5, got {p!r}")
    if not isinstance(kappa_choice, int) or not 0 <= kappa_choice <= 5:
        raise ParameterError(f"kappa_choice must be in 0..5, got {kappa_choice!r}")
    n = 24 * p
    a_root = RootOfUnity(12, n)
    kappa_root = kappa_root_for(p, kappa_choice)
    mu_root = kappa_root ** 3
    table = ScalarTable(p, a_root)
    checks: list[tuple[str, bool]] = []

    kappa = embed_root(kappa_root)
    mu = kappa * kappa * kappa
    anomaly = embed_root(a_root ** (-6 - p * (p + 1) // 2))
    checks.append(("order(A) == 2p", _has_exact_order(a_root, 2 * p)))
    checks.append(("kappa^6 == A^(-6-p(p+1)/2)", kappa ** 6 == anomaly))
    checks.append(("mu == kappa^3", mu == embed_root(mu_root)))
    checks.append(("mu != 1", mu != 1))

    zero = CycNumber.zero(n)
    g_plus, g_minus, sq_sum = zero, zero, zero
    for i in range(p - 1):
        d2 = table.loop_value(i) ** 2
        g_plus = g_plus + d2 * table.twist_eigenvalue(i, 1)
        g_minus = g_minus + d2 * table.twist_eigenvalue(i, -1)
        sq_sum = sq_sum + d2
    if g_plus.is_zero() or g_minus.is_zero():
        raise ConventionError(f"Gauss sum vanishes for p={p}; no Kirby color normalization")
    checks.append(("G+ / G- == kappa^6", g_plus == kappa ** 6 * g_minus))

    norm_c = mu * invert(g_plus)
    eta = invert(norm_c * sq_sum)
    params = TheoryParams(
        p=p,
        kappa_choice=kappa_choice,
        n_order=n,
        a_root=a_root,
        kappa_root=kappa_root,
        mu_root=mu_root,
        mu=mu,
        eta=eta,
        norm_c=norm_c,
        gauss_plus=g_plus,
        gauss_minus=g_minus,
        table=table,
    )
    omega = kirby_color(params)
    checks.append(("eta * U(omega) == 1", eta * unknot_eval(params, omega) == 1))
    checks.append(("U(t omega) == mu", unknot_eval(params, twist(params, omega, 1)) == mu))
    checks.append(
        ("U(t^-1 omega) == mu^-1", unknot_eval(params, twist(params, omega, -1)) == params.mu_inv)
    )
    object.__setattr__(params, "checks", tuple(checks))
    return params


def make_params(p: int, kappa_choice: int = 0) -> TheoryParams:
    """Build and verify the theory; raise ``ConventionError`` naming any failed identity."""
    params = construct_params(p, kappa_choice)
    failed = params.failed_checks()
    if failed:
        raise ConventionError(
            f"p={p}, kappa_choice={kappa_choice}: failed identities: {', '.join(failed)}"
        )
    return params


def quantum_integer(params: TheoryParams, n: int) -> CycNumber:
    """[n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2})."""
    return params.table.quantum_integer(n)


def loop_value(params: TheoryParams, i: int) -> CycNumber:
    """Delta_i = (-1)^i [i+1], the bracket of e_i closed up in the plane."""
    return params.table.loop_value(i)


def twist_eigenvalue(params: TheoryParams, i: int, power: int = 1) -> CycNumber:
    """u_i**power with u_i = (-A)^{i(i+2)}."""
    return params.table.twist_eigenvalue(i, power)


def twist(params: TheoryParams, x: SkeinElement, power: int) -> SkeinElement:
    """Apply the positive twist ``power`` times; the result is in the e-basis."""
    xe = x.in_basis("e")
    table = params.table
    return SkeinElement(
        "e",
        xe.n_order,
        tuple(c * table.twist_eigenvalue(i, power) if c else c for i, c in enumerate(xe.coeffs)),
    )


def kirby_color(params: TheoryParams) -> SkeinElement:
    """omega_p = c * sum_{i=0}^{p-2} Delta_i e_i."""
    table = params.table
    return SkeinElement(
        "e",
        params.n_order,
        tuple(params.norm_c * table.loop_value(i) for i in range(params.p - 1)),
    )


def unknot_eval(params: TheoryParams, x: SkeinElement) -> CycNumber:
    """U(x): cable the 0-framed unknot by ``x`` and take the bracket."""
    xe = x.in_basis("e")
    total = CycNumber.zero(params.n_order)
    for i, c in enumerate(xe.coeffs):
        if c:
            total = total + c * params.table.loop_value(i)
    return total


def hopf_kernel(params: TheoryParams, i: int, j: int) -> CycNumber:
    """Bracket of the 0-framed Hopf link colored e_i, e_j: (-1)^{i+j} [(i+1)(j+1)]."""
    return params.table.hopf(i, j)


def hopf_pairing(params: TheoryParams, x: SkeinElement, y: SkeinElement) -> CycNumber:
    """Bracket of the 0-framed Hopf link with components cabled by ``x`` and ``y``."""
    xe = x.in_basis("e").coeffs
    ye = y.in_basis("e").coeffs
    table = params.table
    total = CycNumber.zero(params.n_order)
    for j, d in enumerate(ye):
        if not d:
            continue
        # sum over x first so each row costs one multiplication by d
        row = CycNumber.zero(params.n_order)
        for i, c in enumerate(xe):
            if c:
                row = row + c * table.hopf(i, j)
        total = total + row * d
    return total
