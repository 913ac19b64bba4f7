"""Verification suite: one function per acceptance check.

Each check returns a :class:`CheckResult`; a check passes only if every
exact identity holds and the run finished inside its time budget.  Float
cross-checks use a separate numpy re-computation that shares no code with
the exact path.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .cyclotomic import CycNumber, RootOfUnity, embed_root, invert, to_complex
from .gram import (
    det_bareiss,
    det_by_reduction,
    det_sequence,
    singularity_scan,
    truncated_matrix,
)
from .skein import (
    ScalarTable,
    kappa_root_for,
    kirby_color,
    make_params,
    twist,
    unknot_eval,
)
from .surgery import (
    disjoint_union_invariant,
    hopf_link_presentation,
    lens_invariant,
    lens_presentation,
    unlink_presentation,
    wrt_invariant,
)

FLOAT_RTOL = 1e-9


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    limit: Optional[float]
    detail: str = ""
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f" (limit {self.limit:g} s)" if self.limit else ""
        text = f"[{status}] {self.name}: {self.seconds:.2f} s{budget}"
        if self.detail:
            text += f" -- {self.detail}"
        return text

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "seconds": round(self.seconds, 4),
            "limit": self.limit,
            "detail": self.detail,
            "failures": self.failures,
        }


def _run(name: str, limit: Optional[float], body: Callable[[list[str]], str]) -> CheckResult:
    failures: list[str] = []
    start = time.perf_counter()
    detail = body(failures)
    seconds = time.perf_counter() - start
    if limit is not None and seconds >= limit:
        failures.append(f"runtime {seconds:.2f} s exceeds {limit} s")
    return CheckResult(name, not failures, seconds, limit, detail, failures)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _mu_power(params, k: int) -> CycNumber:
    return embed_root(params.mu_root ** k)


# ---------------------------------------------------------------------------
# independent float model


class FloatTheory:
    """The same conventions evaluated directly in complex128."""

    def __init__(self, p: int, kappa_choice: int = 0):
        n = 24 * p
        self.p = p
        self.zeta = np.exp(2j * np.pi / n)
        self.a = self.zeta ** 12
        kappa_exp = (-12 - p * (p + 1) + 4 * p * kappa_choice) % n
        self.mu = np.exp(2j * np.pi * (3 * kappa_exp % n) / n)
        a2 = self.a ** 2
        self.qint = lambda m: (a2 ** m - a2 ** (-m)) / (a2 - a2 ** -1)
        idx = np.arange(p - 1)
        self.delta = (-1.0) ** idx * np.array([self.qint(i + 1) for i in idx])
        self.u = (-self.a) ** (idx * (idx + 2))
        g_plus = np.sum(self.delta ** 2 * self.u)
        self.norm_c = self.mu / g_plus
        self.eta = 1 / (self.norm_c * np.sum(self.delta ** 2))

    def lens(self, n: int) -> complex:
        value = self.norm_c * np.sum(self.delta ** 2 * self.u ** n)
        return complex(self.eta * self.mu ** (-_sign(n)) * value)

    def hopf_link(self, k: int, l: int) -> complex:
        """Glued w_{2pk}, z_{2pl}: a meridian loop around an e_j strand acts by
        lambda_j = -A^{2j+2} - A^{-2j-2}, so a z-polynomial paired with e_j is
        Delta_j times its value at lambda_j."""
        p = self.p
        m = 2 * p * k
        idx = np.arange(p - 1)
        lam = -(self.a ** (2 * idx + 2)) - self.a ** (-(2 * idx + 2))

        def cheb(i, x):
            prev, cur = np.ones_like(x), x
            if i == 0:
                return prev
            for _ in range(i - 1):
                prev, cur = cur, x * cur - prev
            return cur

        t_omega = sum(self.norm_c * self.delta[i] * self.u[i] * cheb(i, lam) for i in idx)
        right = self.norm_c * self.delta * self.u ** (2 * p * l)
        bracket = np.sum(right * self.delta * t_omega ** m)
        sigma = m + _sign(l - k)
        return complex(self.eta * self.mu ** (-sigma) * bracket)

    def det_b(self, n: int) -> complex:
        """Closed form (1-mu)^(n-1) f^(n-1)(1) through the fixed point 1/(1+mu)."""
        mu = self.mu
        q = n - 1
        orbit = (1 + mu * (-1 / mu) ** q) / (1 + mu)
        return complex((1 - mu) ** q * orbit)


def _close(exact: CycNumber, approx: complex, scale: float = 1.0) -> bool:
    value = to_complex(exact)
    if exact.is_zero():
        return abs(approx) <= FLOAT_RTOL * scale
    return abs(value - approx) <= FLOAT_RTOL * abs(value)


# ---------------------------------------------------------------------------
# the checks


def check_twist_periodicity(ps: Iterable[int] = range(5, 21)) -> CheckResult:
    def body(fail):
        count = 0
        for p in ps:
            table = ScalarTable(p, RootOfUnity(12, 24 * p))
            for i in range(3 * p + 1):
                u = embed_root(table.twist_root(i))
                if u ** (2 * p) != 1:
                    fail.append(f"p={p}, i={i}: u_i^(2p) != 1")
                count += 1
        return f"{count} eigenvalues"

    return _run("1 twist periodicity u_i^(2p) = 1", 5.0, body)


def check_normalization(ps: Iterable[int] = range(5, 14)) -> CheckResult:
    def body(fail):
        for p in ps:
            params = make_params(p)
            omega = kirby_color(params)
            if params.eta * unknot_eval(params, omega) != 1:
                fail.append(f"p={p}: eta U(omega) != 1")
            if unknot_eval(params, twist(params, omega, 1)) != params.mu:
                fail.append(f"p={p}: U(t omega) != mu")
            if unknot_eval(params, twist(params, omega, -1)) != invert(params.mu):
                fail.append(f"p={p}: U(t^-1 omega) != mu^-1")
            if params.gauss_plus * invert(params.gauss_minus) != params.kappa ** 6:
                fail.append(f"p={p}: G+/G- != kappa^6")
        return "eta U(omega) = 1, U(t^+-1 omega) = mu^+-1, G+/G- = kappa^6"

    return _run("2 normalization identities", 10.0, body)


def check_mu_not_one(ps: Iterable[int] = range(5, 501), field_check_up_to: int = 250) -> CheckResult:
    def body(fail):
        n_field = 0
        for p in ps:
            mu_root = kappa_root_for(p) ** 3
            if mu_root.is_one():
                fail.append(f"p={p}: mu = 1")
            if p <= field_check_up_to:
                n_field += 1
                if embed_root(mu_root) == 1:
                    fail.append(f"p={p}: mu = 1 in Q(zeta_24p)")
        return f"exponent check for all p, field check for {n_field} values"

    return _run("3 mu != 1", 5.0, body)


def check_lens_values(ps: Iterable[int] = range(5, 14), s_max: int = 5) -> CheckResult:
    def body(fail):
        for p in ps:
            params = make_params(p)
            if lens_invariant(params, 0) != 1:
                fail.append(f"p={p}: <S1xS2> != 1")
            for s in range(-s_max, s_max + 1):
                if s and lens_invariant(params, 2 * p * s) != _mu_power(params, -_sign(s)):
                    fail.append(f"p={p}, s={s}: <L(2ps,1)> != mu^-sign(s)")
        return f"|s| <= {s_max}"

    return _run("4 lens values <L(2ps,1)> = mu^-sign(s)", 10.0, body)


def check_flagship(ps: Iterable[int] = (5, 7), ks: Iterable[int] = (1, 2)) -> CheckResult:
    ks = list(ks)

    def body(fail):
        cells = 0
        for p in ps:
            params = make_params(p)
            for k in ks:
                for l in ks:
                    pres = hopf_link_presentation(params, k, l)
                    direct = wrt_invariant(params, pres)
                    if direct != _mu_power(params, -_sign(l - k)):
                        fail.append(f"p={p}, k={k}, l={l}: direct != mu^-sign(l-k)")
                    cells += 1
        return f"{cells} (p, k, l) cells, direct Gauss-sum evaluation"

    return _run("5 Hopf-link pairing: direct = reduced", 60.0, body)


def check_determinants(ps: Iterable[int] = range(5, 10), n_max: int = 40) -> CheckResult:
    def body(fail):
        for p in ps:
            params = make_params(p)
            mu, mu_inv = params.mu, params.mu_inv
            seq = det_sequence(params, n_max)
            if seq[0] != 1 or seq[1] != 0 or seq[2] != mu + mu_inv - 2:
                fail.append(f"p={p}: small determinants wrong")
            for n in range(1, n_max + 1):
                bareiss = det_bareiss(params, n)
                reduced = det_by_reduction(params, n)
                if not bareiss == reduced == seq[n - 1]:
                    fail.append(f"p={p}, n={n}: Bareiss / reduction / recursion disagree")
        return f"three-way agreement for n <= {n_max}"

    return _run("6 determinants of B(1,n)", 120.0, body)


def check_singularity_scan(
    ps: Iterable[int] = range(5, 14), n_max: int = 100, subsample: float = 0.1
) -> CheckResult:
    def body(fail):
        bounds = []
        for p in ps:
            report = singularity_scan(make_params(p), n_max, subsample=subsample, seed=p)
            if report.consecutive_violations:
                fail.append(f"p={p}: consecutive singular sizes {report.consecutive_violations}")
            if report.rank_lower_bound < n_max - 1:
                fail.append(f"p={p}: rank bound {report.rank_lower_bound} < {n_max - 1}")
            bounds.append(report.rank_lower_bound)
        return f"rank lower bounds {bounds}"

    return _run("7 no consecutive singular sizes, rank >= n_max - 1", 60.0, body)


def check_index_invariance(ps: Iterable[int] = (5, 7), trials: int = 20, size: int = 6) -> CheckResult:
    def body(fail):
        rng = random.Random(2012)
        for p in ps:
            params = make_params(p)
            canonical = truncated_matrix(params, range(1, size + 1)).entries
            for _ in range(trials):
                indices = sorted(rng.sample(range(1, 200), size))
                if truncated_matrix(params, indices).entries != canonical:
                    fail.append(f"p={p}: indices {indices} differ from 1..{size}")
        return f"{trials} random index sets per p"

    return _run("8 truncated matrix depends only on index order", None, body)


def check_multiplicativity(ps: Iterable[int] = (5, 7), pairs: int = 20) -> CheckResult:
    def body(fail):
        rng = random.Random(1995)
        for p in ps:
            params = make_params(p)
            for _ in range(pairs):
                n1, n2 = rng.randint(-3 * p, 3 * p), rng.randint(-3 * p, 3 * p)
                m1, m2 = lens_presentation(n1), lens_presentation(n2)
                union = disjoint_union_invariant(params, [m1, m2])
                product = wrt_invariant(params, m1) * wrt_invariant(params, m2)
                if union != product:
                    fail.append(f"p={p}: L({n1},1) u L({n2},1) not multiplicative")
                # connected sum is a split link; <M1 # M2> <S3> = <M1> <M2>
                if wrt_invariant(params, unlink_presentation([n1, n2])) * params.eta != product:
                    fail.append(f"p={p}: connected sum of L({n1},1), L({n2},1) inconsistent")
        return f"{pairs} lens pairs per p"

    return _run("9 multiplicativity under disjoint union", None, body)


def check_float_coherence(
    lens_ps: Iterable[int] = range(5, 14),
    hopf_ps: Iterable[int] = (5, 7),
    det_ps: Iterable[int] = range(5, 10),
    n_max: int = 40,
) -> CheckResult:
    def body(fail):
        compared = 0
        for p in lens_ps:
            params, ft = make_params(p), FloatTheory(p)
            for s in range(-5, 6):
                n = 2 * p * s
                if not _close(lens_invariant(params, n), ft.lens(n)):
                    fail.append(f"p={p}: lens L({n},1) float mismatch")
                compared += 1
        for p in hopf_ps:
            params, ft = make_params(p), FloatTheory(p)
            for k in (1, 2):
                for l in (1, 2):
                    exact = wrt_invariant(params, hopf_link_presentation(params, k, l))
                    if not _close(exact, ft.hopf_link(k, l)):
                        fail.append(f"p={p}, k={k}, l={l}: Hopf pairing float mismatch")
                    compared += 1
        for p in det_ps:
            params, ft = make_params(p), FloatTheory(p)
            scale_base = abs(1 - ft.mu)
            for n, d in enumerate(det_sequence(params, n_max), 1):
                if not _close(d, ft.det_b(n), scale=scale_base ** (n - 1)):
                    fail.append(f"p={p}, n={n}: determinant float mismatch")
                compared += 1
        return f"{compared} values within relative {FLOAT_RTOL:g}"

    return _run("10 float coherence of exact results", None, body)


ALL_CHECKS: dict[str, Callable[..., CheckResult]] = {
    "twist_periodicity": check_twist_periodicity,
    "normalization": check_normalization,
    "mu_not_one": check_mu_not_one,
    "lens_values": check_lens_values,
    "flagship": check_flagship,
    "determinants": check_determinants,
    "singularity_scan": check_singularity_scan,
    "index_invariance": check_index_invariance,
    "multiplicativity": check_multiplicativity,
    "float_coherence": check_float_coherence,
}


def run_all(ps: Optional[Iterable[int]] = None, n_max: Optional[int] = None) -> list[CheckResult]:
    """Run every check; ``ps`` and ``n_max`` narrow the ranges when given.

    Results come back in the fixed order of the acceptance list.
    """
    results = []
    ps = None if ps is None else sorted(set(ps))

    def restrict(default):
        if ps is None:
            return default
        return [p for p in ps if p in set(default)] or ps

    for name, check in ALL_CHECKS.items():
        kwargs = {}
        if ps is not None:
            if name == "flagship":
                kwargs["ps"] = restrict((5, 7))
            elif name == "float_coherence":
                kwargs.update(lens_ps=ps, hopf_ps=restrict((5, 7)), det_ps=ps)
            else:
                kwargs["ps"] = ps
        if n_max is not None:
            if name == "singularity_scan":
                kwargs["n_max"] = n_max
            elif name in ("determinants", "float_coherence"):
                kwargs["n_max"] = min(n_max, 40)
        results.append(check(**kwargs))
    return results
