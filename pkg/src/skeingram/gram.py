"""Gram matrices of the torus pairing and their determinants.

The pairing of ``w_i`` (i parallel +1-framed cores) with ``z_j`` (one core
of framing j) is the invariant of the glued closed manifold.  For the
families ``w_{2pk}``, ``z_{2pl}`` it only depends on ``sign(l - k)``, so
every truncated Gram matrix is the three-valued matrix

    [[1,      mu,     mu, ...],
     [mu^-1,  1,      mu, ...],
     [mu^-1,  mu^-1,  1,  ...], ...]

up to transpose.  Its determinant is computed three ways: fraction-free
elimination, the ``B(a, m)`` reduction ``(1-mu) + B(f(a), m-1)`` with
``f(a) = mu^-1 (1 - a)``, and the two-term recursion between consecutive
sizes.  A nonsingular n x n truncation certifies that ``w_{2p}, ...,
w_{2pn}`` are linearly independent.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .cyclotomic import CycNumber, dumps, invert, lift, to_complex
from .skein import TheoryParams
from .surgery import TorusElement, lens_invariant, torus_gluing_presentation, wrt_invariant

__all__ = [
    "TheoremViolation",
    "TruncatedGram",
    "ReductionState",
    "GramReport",
    "pairing",
    "truncated_matrix",
    "b_matrix",
    "f_step",
    "f_iterate",
    "reduce",
    "reduction_step_matrix",
    "det_exact",
    "det_recursion",
    "det_sequence",
    "det_by_reduction",
    "det_bareiss",
    "singular_sizes_closed_form",
    "singularity_scan",
]

Matrix = list[list[CycNumber]]


class TheoremViolation(ArithmeticError):
    """Two consecutive singular truncated matrices, or disagreeing determinant routes."""


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _mu_for(params: TheoryParams, n_order: int) -> CycNumber:
    if n_order == params.n_order:
        return params.mu
    m, mu = params.mu_subfield()
    if n_order == m:
        return mu
    raise ValueError(f"mu is not available in Q(zeta_{n_order})")


def _as_cyc(x, n_order: int) -> CycNumber:
    return x if isinstance(x, CycNumber) else CycNumber.from_int(n_order, x)


# ---------------------------------------------------------------------------
# the pairing


def pairing(
    params: TheoryParams,
    x: TorusElement,
    y: TorusElement,
    method: Literal["direct", "reduced"] = "reduced",
) -> CycNumber:
    """B_p(x, y) for torus elements.

    ``direct`` evaluates the glued surgery presentation as it stands
    (Gauss sums, Hopf kernel and an explicit signature).  ``reduced`` uses
    the blow-down answer: pairing ``w_i`` with ``z_j`` gives the lens space
    L(j - i, 1), which for ``i = 2pk``, ``j = 2pl`` is ``mu^-sign(l - k)``.
    """
    method = method.lower()
    if method == "direct":
        return wrt_invariant(params, torus_gluing_presentation(x, y))
    if method != "reduced":
        raise ValueError(f"unknown pairing method {method!r}")
    if {x.kind, y.kind} != {"W", "Z"}:
        raise ValueError("reduced pairing is only defined between a W and a Z element")
    w, z = (x, y) if x.kind == "W" else (y, x)
    return lens_invariant(params, z.index - w.index)


@dataclass(frozen=True)
class TruncatedGram:
    """Entries B(w_{2pk}, z_{2pl}) for k (rows) and l (columns) over ``indices``."""

    params: TheoryParams = field(repr=False)
    indices: tuple[int, ...]
    entries: tuple[tuple[CycNumber, ...], ...]

    @property
    def size(self) -> int:
        return len(self.indices)

    def transpose(self) -> tuple[tuple[CycNumber, ...], ...]:
        n = self.size
        return tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n))

    def as_rows(self) -> Matrix:
        return [list(row) for row in self.entries]


def truncated_matrix(params: TheoryParams, indices: Sequence[int]) -> TruncatedGram:
    """Truncated Gram matrix over a strictly increasing list of positive indices.

    Entry (k, l) is ``mu^-sign(l-k)``: mu^-1 above the diagonal.  The
    displayed matrix ``B(1, n)`` is its transpose.
    """
    indices = tuple(indices)
    if not indices:
        raise ValueError("need at least one index")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError(f"indices must be strictly increasing, got {indices}")
    if indices[0] < 1:
        raise ValueError("indices must be positive")
    p = params.p
    cache: dict[int, CycNumber] = {}
    rows = []
    for k in indices:
        row = []
        for l in indices:
            s = l - k
            if s not in cache:
                cache[s] = pairing(
                    params, TorusElement.w(2 * p * k), TorusElement.z(2 * p * l), "reduced"
                )
            row.append(cache[s])
        rows.append(tuple(row))
    return TruncatedGram(params, indices, tuple(rows))


# ---------------------------------------------------------------------------
# B(a, m) and its reduction


def b_matrix(params: TheoryParams, a, m: int, subfield: bool = False) -> Matrix:
    """The m x m matrix B(a, m): first row (a, a-(1-mu), ...), then the (*) pattern.

    With ``subfield=True`` the entries are built in Q(mu) rather than
    Q(zeta_{24p}); ``a`` must then be rational or live in that field.
    """
    if m < 1:
        raise ValueError("matrix size must be positive")
    n_order = params.mu_subfield()[0] if subfield else params.n_order
    mu = _mu_for(params, n_order)
    mu_inv = invert(mu) if subfield else params.mu_inv
    one = CycNumber.one(n_order)
    a = _as_cyc(a, n_order)
    top = a - (one - mu)
    rows = [[a] + [top] * (m - 1)]
    for i in range(1, m):
        rows.append([mu_inv if j < i else one if j == i else mu for j in range(m)])
    return rows


def f_step(params: TheoryParams, a) -> CycNumber:
    """f(a) = mu^-1 (1 - a)."""
    if not isinstance(a, CycNumber):
        a = CycNumber.from_int(params.n_order, a)
    mu = _mu_for(params, a.n_order)
    return (1 - a) * (params.mu_inv if a.n_order == params.n_order else invert(mu))


def f_iterate(params: TheoryParams, a, q: int) -> CycNumber:
    if q < 0:
        raise ValueError("iteration count must be non-negative")
    a = _as_cyc(a, params.n_order)
    for _ in range(q):
        a = f_step(params, a)
    return a


@dataclass(frozen=True)
class ReductionState:
    """(1 - mu) I_q  (+)  B(a, m), reached from B(a0, m + q) by determinant-preserving moves."""

    a: CycNumber
    m: int
    stripped: int = 0

    def determinant(self, params: TheoryParams) -> CycNumber:
        if self.m != 1:
            raise ValueError("reduce to a 1 x 1 block before reading off the determinant")
        return (1 - params.mu) ** self.stripped * self.a


def reduce(params: TheoryParams, state: ReductionState, steps: int = 1) -> ReductionState:
    """Peel ``steps`` factors of (1 - mu) off the B-block."""
    if steps < 0 or steps > state.m - 1:
        raise ValueError(f"cannot take {steps} reduction steps from a {state.m} x {state.m} block")
    return ReductionState(f_iterate(params, state.a, steps), state.m - steps, state.stripped + steps)


def reduction_step_matrix(params: TheoryParams, rows: Matrix) -> Matrix:
    """Apply one round of the row/column moves to an explicit B(a, m).

    Subtract column 2 from column 1, add -mu^-1 times row 1 to row 2, then
    clear row 1 right of the diagonal with column moves.  The result should
    be (1 - mu) (+) B(f(a), m - 1).
    """
    a = [list(r) for r in rows]
    m = len(a)
    if m < 2:
        raise ValueError("need at least a 2 x 2 matrix")
    n_order = a[0][0].n_order
    mu_inv = invert(_mu_for(params, n_order))
    for r in a:
        r[0] = r[0] - r[1]
    a[1] = [x - mu_inv * y for x, y in zip(a[1], a[0])]
    pivot_inv = invert(a[0][0])
    for j in range(1, m):
        factor = a[0][j] * pivot_inv
        if factor:
            for r in a:
                r[j] = r[j] - factor * r[0]
    return a


# ---------------------------------------------------------------------------
# determinants


def det_exact(rows: Sequence[Sequence[CycNumber]]) -> CycNumber:
    """Determinant by Bareiss fraction-free elimination, with exact zero tests."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        raise ValueError("empty matrix")
    n_order = a[0][0].n_order
    sign = 1
    prev_inv = CycNumber.one(n_order)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return CycNumber.zero(n_order)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        # structured matrices repeat the same (entry, lead, pivot-row entry)
        # triples many times within a step
        updates: dict[tuple[CycNumber, CycNumber, CycNumber], CycNumber] = {}
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                key = (row_i[j], lead, row_k[j])
                v = updates.get(key)
                if v is None:
                    v = pivot * row_i[j]
                    if lead and row_k[j]:
                        v = v - lead * row_k[j]
                    v = updates[key] = v * prev_inv
                row_i[j] = v
            row_i[k] = CycNumber.zero(n_order)
        prev_inv = invert(pivot)
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def det_sequence(params: TheoryParams, n_max: int) -> list[CycNumber]:
    """det B(1, n) for n = 1..n_max by the consecutive-size recursion."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    mu_inv = params.mu_inv
    one_minus_mu = 1 - params.mu
    up = 1 - mu_inv
    down = mu_inv - 1
    dets = [CycNumber.one(params.n_order)]
    power = CycNumber.one(params.n_order)  # (1 - mu)^(n-1)
    for _ in range(1, n_max):
        dets.append(dets[-1] * up + power * down)
        power = power * one_minus_mu
    return dets


def det_recursion(params: TheoryParams, n: int) -> CycNumber:
    return det_sequence(params, n)[-1]


def det_by_reduction(params: TheoryParams, n: int) -> CycNumber:
    """det B(1, n) read off after n - 1 reduction steps: (1-mu)^(n-1) f^(n-1)(1)."""
    state = ReductionState(CycNumber.one(params.n_order), n)
    return reduce(params, state, n - 1).determinant(params)


def det_bareiss(params: TheoryParams, n: int, subfield: bool = True) -> CycNumber:
    """Bareiss determinant of B(1, n), computed in Q(mu) and lifted to Q(zeta_{24p})."""
    d = det_exact(b_matrix(params, 1, n, subfield=subfield))
    return lift(d, params.n_order) if subfield else d


def singular_sizes_closed_form(params: TheoryParams, n_max: int) -> list[int]:
    """Sizes n <= n_max with det B(1, n) = 0, predicted from the order of -mu.

    f has the fixed point 1/(1 + mu), and f^q(1) vanishes exactly when
    (-mu)^(q - 1) = 1; with q = n - 1 that is n = 2 (mod order(-mu)).
    """
    order = (-params.mu_root).order
    if order == 1:
        # mu = -1: f(a) = a - 1, so only f(1) vanishes
        return [2] if n_max >= 2 else []
    return [n for n in range(2, n_max + 1) if (n - 2) % order == 0]


# ---------------------------------------------------------------------------
# scans and reports


@dataclass
class GramReport:
    p: int
    kappa_choice: int
    n_max: int
    determinants: list[CycNumber]
    singular_sizes: list[int]
    consecutive_violations: list[int]
    rank_lower_bound: int
    checked_sizes: list[int] = field(default_factory=list)

    def determinant_floats(self) -> list[complex]:
        return [to_complex(d) for d in self.determinants]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "kappa_choice": self.kappa_choice,
            "n_max": self.n_max,
            "determinants": [
                {
                    "n": n,
                    "exact": d.to_json(),
                    "approx": [f.real, f.imag],
                    "singular": d.is_zero(),
                }
                for n, (d, f) in enumerate(zip(self.determinants, self.determinant_floats()), 1)
            ],
            "singular_sizes": self.singular_sizes,
            "consecutive_violations": self.consecutive_violations,
            "rank_lower_bound": self.rank_lower_bound,
            "bareiss_checked_sizes": self.checked_sizes,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> GramReport:
        data = json.loads(text)
        return cls(
            p=data["p"],
            kappa_choice=data["kappa_choice"],
            n_max=data["n_max"],
            determinants=[CycNumber.from_json(d["exact"]) for d in data["determinants"]],
            singular_sizes=list(data["singular_sizes"]),
            consecutive_violations=list(data["consecutive_violations"]),
            rank_lower_bound=data["rank_lower_bound"],
            checked_sizes=list(data.get("bareiss_checked_sizes", [])),
        )

    def to_csv(self) -> str:
        """Float renderings only; the ``approximate`` column flags that."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "n", "det_real", "det_imag", "singular", "approximate"])
        for n, (d, f) in enumerate(zip(self.determinants, self.determinant_floats()), 1):
            writer.writerow([self.p, n, repr(f.real), repr(f.imag), int(d.is_zero()), 1])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"p = {self.p}  (kappa choice {self.kappa_choice}), sizes 1..{self.n_max}",
            f"singular sizes: {self.singular_sizes or 'none'}",
            f"consecutive singular pairs: {self.consecutive_violations or 'none'}",
            f"Bareiss spot checks at sizes: {self.checked_sizes}",
            f"certified rank lower bound for {{w_2pk}}: {self.rank_lower_bound}",
        ]
        return "\n".join(lines)


def _spot_check_sizes(n_max: int, rate: float, seed: int) -> list[int]:
    if not 0 < rate <= 1:
        raise ValueError("subsample rate must lie in (0, 1]")
    count = max(1, math.ceil(rate * n_max))
    return sorted(random.Random(seed).sample(range(1, n_max + 1), count))


def singularity_scan(
    params: TheoryParams,
    n_max: int,
    subsample: float = 0.1,
    seed: int = 0,
) -> GramReport:
    """Scan det B(1, n) for n <= n_max and certify a rank lower bound.

    Determinants come from the recursion; a seeded ``subsample`` of sizes
    is recomputed with Bareiss elimination.  Raises ``TheoremViolation``
    if a spot check disagrees or two consecutive sizes are singular.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    dets = det_sequence(params, n_max)
    checked = _spot_check_sizes(n_max, subsample, seed)
    for n in checked:
        if det_bareiss(params, n) != dets[n - 1]:
            raise TheoremViolation(f"p={params.p}: Bareiss and recursion disagree at size {n}")
    singular = [n for n, d in enumerate(dets, 1) if d.is_zero()]
    violations = [n for n in singular if n + 1 in singular]
    report = GramReport(
        p=params.p,
        kappa_choice=params.kappa_choice,
        n_max=n_max,
        determinants=dets,
        singular_sizes=singular,
        consecutive_violations=violations,
        rank_lower_bound=max((n for n, d in enumerate(dets, 1) if not d.is_zero()), default=0),
        checked_sizes=checked,
    )
    if violations:
        raise TheoremViolation(
            f"p={params.p}: consecutive singular truncated matrices at sizes "
            + ", ".join(f"{n},{n + 1}" for n in violations)
        )
    return report
