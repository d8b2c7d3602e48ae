"""Characteristic polynomials and q-characters of the modules V^nu.

A partition nu gives the highest weight sum nu_i e^{(lambda-2i+1)t}.
Multiplying by 1 - e^{-2t} telescopes it, and the exponents left after
removing the leading e^{(lambda-1)t} are the roots of the characteristic
polynomial.  The q-character is a^{|nu|} q^{n(nu)} / prod (1 - q^{h(x)}).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .exactcore import HPoly, LAMBDA, LambdaScalar, QuasiPolynomial

STANDARD = "standard"
PAPER = "paper"


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("partition parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(tuple(int(x) for x in text.replace(",", " ").split()))

    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def blocks(self):
        """[(value, multiplicity)] for distinct part values, largest first."""
        return [(v, len(list(g))) for v, g in groupby(self.parts)]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int):
    """All partitions of n, in reverse lexicographic order."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail
    for parts in rec(n, n):
        yield Partition(parts)


def hooks(nu: Partition) -> Counter:
    """Multiset of hook lengths of the Young diagram."""
    conj = nu.conjugate().parts
    out = Counter()
    for i, row in enumerate(nu.parts):
        for j in range(row):
            out[(row - j - 1) + (conj[j] - i - 1) + 1] += 1
    return out


def gen_fun(nu: Partition, order: int | None = None) -> QuasiPolynomial:
    """sum_i nu_i e^{(lambda - 2i + 1) t}.  ``order`` is accepted for symmetry and unused."""
    return QuasiPolynomial([(LAMBDA - 2 * i + 1, v) for i, v in enumerate(nu.parts, 1)])


def telescoped(nu: Partition) -> QuasiPolynomial:
    """gen_fun(nu) (1 - e^{-2t}), computed on the quasi-polynomial."""
    g = gen_fun(nu)
    return g - g.scale_exp(-2)


def derived_roots(nu: Partition):
    lead = LAMBDA - 1
    return [s for s in telescoped(nu).exponents() if s != lead]


def stated_roots(nu: Partition):
    """lambda + 2(a_1 + ... + a_i) + 1 for cumulative block multiplicities."""
    out, acc = [], 0
    for _, mult in nu.blocks():
        acc += mult
        out.append(LAMBDA + 2 * acc + 1)
    return out


def _from_roots(roots) -> HPoly:
    out = HPoly.const(1)
    for r in roots:
        out = out * HPoly((-r, 1))
    return out


@dataclass(frozen=True)
class CharPoly:
    stated: HPoly
    derived: HPoly
    match: bool
    match_up_to_sign: bool


def char_poly(nu: Partition) -> CharPoly:
    """Both characteristic polynomials: the closed form as printed and the one read off the telescoped sum.

    ``match_up_to_sign`` compares the derived roots with the printed ones
    after flipping the sign of the 2(a_1+...+a_i)+1 offsets.
    """
    stated = _from_roots(stated_roots(nu))
    derived = _from_roots(derived_roots(nu))
    flipped = _from_roots([2 * LAMBDA - r for r in stated_roots(nu)])
    return CharPoly(stated, derived, stated == derived, flipped == derived)


def _n_stat(nu: Partition, convention: str) -> int:
    if convention == STANDARD:
        return sum(i * v for i, v in enumerate(nu.parts))
    if convention == PAPER:
        return sum(nu.parts)
    raise ValueError(f"unknown convention {convention!r}")


@dataclass(frozen=True)
class QCharacter:
    a_power: int
    q_shift: int
    hook_denominator: tuple
    series: tuple

    def __str__(self):
        a = "a" if self.a_power == 1 else f"a^{self.a_power}"
        q = "" if self.q_shift == 0 else ("q" if self.q_shift == 1 else f"q^{self.q_shift}")
        den = "".join(f"(1-q^{h})" if h > 1 else "(1-q)" for h in self.hook_denominator)
        num = a + (q and "*" + q)
        return f"{num}/({den})" if den else num


def q_character(nu: Partition, convention: str = STANDARD, order: int = 12) -> QCharacter:
    """q-character with its q-expansion (coefficients of q^0 .. q^order, a-power factored out)."""
    shift = _n_stat(nu, convention)
    hk = tuple(sorted(hooks(nu).elements(), reverse=True))
    series = [0] * (order + 1)
    if shift <= order:
        series[shift] = 1
    for h in hk:
        # divide by 1 - q^h
        for m in range(h, order + 1):
            series[m] += series[m - h]
    return QCharacter(nu.size(), shift, hk, tuple(series))


def character_report(nu: Partition, order: int = 12) -> dict:
    cp = char_poly(nu)
    std = q_character(nu, STANDARD, order)
    pap = q_character(nu, PAPER, order)
    return {
        "partition": list(nu.parts),
        "hooks": list(std.hook_denominator),
        "stated": str(cp.stated),
        "derived": str(cp.derived),
        "match": cp.match,
        "match_up_to_sign": cp.match_up_to_sign,
        "q_character_standard": str(std),
        "q_series_standard": list(std.series),
        "q_character_paper": str(pap),
        "q_series_paper": list(pap.series),
        "conventions_agree": std.q_shift == pap.q_shift,
    }


__all__ = [
    "STANDARD", "PAPER", "Partition", "partitions", "hooks", "gen_fun", "telescoped",
    "derived_roots", "stated_roots", "CharPoly", "char_poly", "QCharacter",
    "q_character", "character_report",
]
