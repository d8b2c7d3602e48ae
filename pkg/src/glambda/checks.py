"""Verification suites grouped the way the command line exposes them.

Each suite returns a list of :class:`CheckResult`; a suite passes when
every result does.  Randomized parts take an explicit seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import algebra, modchar, orthopoly, quasifinite, traceform
from .algebra import AlgebraElement
from .exactcore import HPoly, LAMBDA, LambdaScalar, QuasiPolynomial, one_minus_exp_minus_2t

DEFAULT_SEED = 20240917


@dataclass
class CheckResult:
    suite: str
    name: str
    params: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def as_dict(self):
        return {"suite": self.suite, "check": self.name, "params": self.params,
                "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


def _timed(suite, name, params, fn):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except ArithmeticError as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(suite, name, params, bool(ok), detail, time.perf_counter() - t0)


def _count(items):
    bad = [x for x, ok in items if not ok]
    total = len(items)
    if bad:
        return False, f"{len(bad)}/{total} failed, first {bad[0]}"
    return True, f"{total} cases"


# --- orthogonal polynomials ---------------------------------------------------

def suite_hahn(k_max=8):
    def routes():
        return _count([((k, l), orthopoly.check_routes(k, l))
                       for k in range(k_max + 1) for l in range(k + 1)])

    def mirror():
        return _count([((k, l), orthopoly.check_mirror(k, l))
                       for k in range(k_max + 1) for l in range(1, k + 1)])
    return [_timed("hahn", "route agreement", f"k<={k_max}", routes),
            _timed("hahn", "mirror symmetry", f"k<={k_max}", mirror)]


def suite_ortho(k_max=8, l_max=4, k_zero=6):
    def gram():
        return _count([(l, orthopoly.check_gram(k_max, l))
                       for l in range(min(l_max, k_max) + 1)])

    def norms():
        return _count([((k, l), orthopoly.inner(orthopoly.f(k, l), orthopoly.f(k, l), l)
                        == orthopoly.c_norm(k, l))
                       for k in range(k_max + 1) for l in range(k + 1)])

    def spot():
        want = (LAMBDA * (LAMBDA ** 2 - 1) * (LAMBDA ** 2 - 4)) * Fraction(4, 5)
        got = orthopoly.inner(orthopoly.f(2, 0), orthopoly.f(2, 0), 0)
        return got == want, f"<f20,f20> = {got}"

    def zero_branch():
        k_top = min(k_zero, k_max)
        return _count([((k, l), orthopoly.norm_limit_zero(k, l)
                        == LambdaScalar.const(orthopoly.c_norm_zero(k, l)))
                       for k in range(k_top + 1) for l in range(k + 1)])
    return [_timed("ortho", "gram diagonal", f"k<={k_max}, l<={min(l_max, k_max)}", gram),
            _timed("ortho", "norm closed form", f"k<={k_max}", norms),
            _timed("ortho", "norm of f20", "", spot),
            _timed("ortho", "lambda=0 norm limit", f"k<={min(k_zero, k_max)}", zero_branch)]


def suite_diffeq(k_max=10):
    def run():
        return _count([((k, l), orthopoly.check_diffeq(k, l))
                       for k in range(k_max + 1) for l in range(k + 1)])
    return [_timed("diffeq", "difference equation", f"k<={k_max}", run)]


def suite_dual(n_max=8):
    def run():
        return _count([((n, l), orthopoly.check_dual(n, l))
                       for n in range(1, n_max + 1) for l in range(n)])
    return [_timed("dual", "dual orthogonality", f"n<={n_max}", run)]


def casimir_n2_term():
    """The k = 1 part of the Casimir sum at lambda = 2, reduced mod P_2."""
    acc = HPoly()
    for l in range(2):
        c = orthopoly.c_norm(1, l).evaluate(2)
        p = orthopoly.f(1, l).at_lambda(2)
        acc = acc + (p * p * orthopoly.weight(l).at_lambda(2)).scale((1 if l == 0 else 2) / c)
    return acc - Fraction(3, 2)


def suite_casimir(n_max=8):
    def run():
        return _count([(n, orthopoly.check_casimir(n)) for n in range(1, n_max + 1)])

    def hand():
        h = HPoly.gen()
        # H^2/2 + 2 T_1 - 3/2 = -H at lambda = 2, exactly (before reduction)
        want = (h * h).scale(Fraction(1, 2)) + orthopoly.weight(1).at_lambda(2).scale(2) \
            - Fraction(3, 2)
        got = casimir_n2_term()
        return got == want and want == -h, f"k=1 term {got}"
    return [_timed("casimir", "Casimir identity", f"n<={n_max}", run),
            _timed("casimir", "n=2 hand case", "", hand)]


# --- matrix oracle ------------------------------------------------------------

def random_scalar(rng, deg=2):
    return LambdaScalar.poly([Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                              for _ in range(rng.randint(1, deg + 1))])


def random_element(rng, max_degree=3, max_h=3):
    comps = {}
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(-max_degree, max_degree)
        comps[d] = HPoly([random_scalar(rng) for _ in range(rng.randint(1, max_h + 1))])
    return AlgebraElement(comps)


def suite_embedding(n_max=8, pairs=200, seed=DEFAULT_SEED):
    ns = range(2, n_max + 1)

    def run():
        rng = random.Random(seed)
        items = []
        for p in range(pairs):
            u, v = random_element(rng), random_element(rng)
            uv = algebra.mul(u, v)
            tr_uv = traceform.trace(uv)
            for n in ns:
                su, sv, suv = (algebra.specialize(w, n) for w in (u, v, uv))
                ok = suv == su @ sv and tr_uv.evaluate(n) == suv.trace() \
                    and traceform.trace(u).evaluate(n) == su.trace()
                items.append(((p, n), ok))
        return _count(items)

    def nilpotent():
        return _count([(n, algebra.specialize(AlgebraElement({n: 1}), n).is_zero())
                       for n in range(1, n_max + 1)])
    return [_timed("embedding", "specialize is multiplicative, trace agrees",
                   f"n=2..{n_max}, {pairs} pairs, seed {seed}", run),
            _timed("embedding", "X^n vanishes at lambda=n", f"n<={n_max}", nilpotent)]


# --- traces and quasi-finite weights -------------------------------------------

def suite_trace(order=20):
    def moments():
        return traceform.trace_series(order) == traceform.moment_series(order), f"order {order}"

    def zero():
        z = traceform.trace_zero_series(order)
        lim = traceform.trace_series(order).map_coeffs(traceform.limit_over_lambda)
        tw = quasifinite.trace_weight("zero", order).F
        return z == lim == tw, f"order {order}"
    return [_timed("weights", "trace series = interpolated moments", f"t^{order}", moments),
            _timed("weights", "lambda=0 trace series", f"t^{order}", zero)]


def suite_window(k_max=10, window=14, gauges=20, seed=DEFAULT_SEED):
    def run():
        rep = quasifinite.glinf_window(None, None, window, k_max)
        return _count([(r["k"], r["match"]) for r in rep["rows"]])

    def gauge():
        rng = random.Random(seed)
        base = [r["cocycle"] for r in quasifinite.glinf_window(None, None, window, k_max)["rows"]]
        items = []
        for g in range(gauges):
            rows = quasifinite.glinf_window(None, None, window, k_max,
                                            gauge=quasifinite.random_gauge(rng, window))["rows"]
            items.append((g, [r["cocycle"] for r in rows] == base))
        return _count(items)
    return [_timed("weights", "gl(inf) cocycle = T(s)s^k", f"k<={k_max}, N={window}", run),
            _timed("weights", "gauge invariance", f"{gauges} gauges, seed {seed}", gauge)]


def weight_family(configs=10, seed=DEFAULT_SEED):
    """(label, R) for the trace solutions and seeded highest-weight numerators."""
    rng = random.Random(seed)
    fam = [("trace", quasifinite.trace_weight("nonzero", 4).R),
           ("trace lambda=0", quasifinite.trace_weight("zero", 4).R)]
    for c in range(configs):
        theta = quasifinite.random_theta(rng)
        s = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        cc = rng.randint(-3, 3)
        for kind in ("i", "ii", "iii", "iv", "v"):
            fam.append((f"{kind}#{c}", quasifinite.hw_numerator(kind, theta, s, cc)))
    return fam


def suite_weights(configs=10, seed=DEFAULT_SEED, order=12):
    fam = weight_family(configs, seed)

    def annihilate():
        items = []
        for label, r in fam:
            lam = 0 if label == "trace lambda=0" else None
            items.append((label, quasifinite.check_annihilation(
                r, quasifinite.minimal_parabolic(r, lam), lam)))
        return _count(items)

    def series():
        return _count([(label, quasifinite.weight_from_qp(r, order).consistent())
                       for label, r in fam])
    return [_timed("weights", "T P annihilates R", f"{configs} configs, seed {seed}", annihilate),
            _timed("weights", "F (1-e^-2t) = R", f"order {order}", series)]


# --- explorer and characters ---------------------------------------------------

def suite_explorer(n_max=8):
    def run():
        items = []
        for n in range(1, n_max + 1):
            for l in range(n):
                idx = [(i, j) for i in range(l + 1, n + 1) for j in range(l + 1, n + 1)]
                tab = orthopoly.conjecture_scan(n, l, idx, (n - 1,))
                items.append(((n, l), all(r.residual == 0 for r in tab.rows)))
        return _count(items)
    return [_timed("explorer", "finite case reproduced exactly", f"n<={n_max}", run)]


def suite_character(size_max=6):
    def roots():
        items = []
        for m in range(1, size_max + 1):
            for nu in modchar.partitions(m):
                tele = modchar.telescoped(nu)
                exps = [s for s in tele.exponents() if s != LAMBDA - 1]
                cp = modchar.char_poly(nu)
                want = HPoly.const(1)
                for e in exps:
                    want = want * HPoly((-e, 1))
                items.append((str(nu), cp.derived == want
                              and len(exps) == len(nu.blocks())
                              and cp.match_up_to_sign))
        return _count(items)
    return [_timed("character", "derived roots = telescoped exponents", f"|nu|<={size_max}", roots)]


SUITES = {
    "hahn": lambda a: suite_hahn(a.kmax),
    "ortho": lambda a: suite_ortho(a.kmax),
    "diffeq": lambda a: suite_diffeq(a.kmax_diffeq),
    "casimir": lambda a: suite_casimir(a.nmax),
    "dual": lambda a: suite_dual(a.nmax),
    "embedding": lambda a: suite_embedding(a.nmax, a.pairs, a.seed),
    "weights": lambda a: (suite_trace(a.order) + suite_window(a.kmax_window, a.window, a.gauges, a.seed)
                          + suite_weights(a.configs, a.seed)),
}
ALL_ORDER = ["hahn", "ortho", "diffeq", "casimir", "dual", "embedding", "weights"]


@dataclass
class SuiteParams:
    kmax: int = 8
    kmax_diffeq: int = 10
    nmax: int = 8
    pairs: int = 200
    seed: int = DEFAULT_SEED
    order: int = 20
    kmax_window: int = 10
    window: int = 14
    gauges: int = 20
    configs: int = 10


def run_suite(name: str, params: SuiteParams | None = None):
    params = params or SuiteParams()
    if name == "all":
        out = []
        for s in ALL_ORDER:
            out += SUITES[s](params)
        out += suite_explorer(params.nmax)
        out += suite_character()
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](params)


__all__ = [
    "CheckResult", "SuiteParams", "run_suite", "random_element", "weight_family",
    "suite_hahn", "suite_ortho", "suite_diffeq", "suite_dual", "suite_casimir",
    "suite_embedding", "suite_trace", "suite_window", "suite_weights",
    "suite_explorer", "suite_character", "casimir_n2_term", "DEFAULT_SEED",
]
