"""Symmetric functions with exact rational coefficients.

Every conversion goes through the monomial basis.  Degree-n elements are
supported on partitions of n, so nothing is ever truncated.  Transition rows
(e, p, h and Schur in monomials) are memoised per partition with
``functools.lru_cache``, which is safe to share between threads.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from numbers import Rational
from typing import Iterable, Mapping

from .combinatorics import (
    SkewShape,
    conjugate,
    conjugate_partition,
    dominance_leq,
    kostka,
    multiplicity_factorial,
    partition,
    partitions,
    skew_kostka,
)

BASES = ("m", "e", "h", "p", "s")
_ALIASES = {"monomial": "m", "schur": "s", "elementary": "e", "homogeneous": "h", "power": "p"}


def basis_name(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in BASES:
        raise ValueError(f"unknown basis {name!r}")
    return name


def _clean(coeffs: Mapping) -> dict:
    out = {}
    for k, v in coeffs.items():
        if v:
            out[tuple(k)] = v if isinstance(v, int) else Fraction(v)
    return out


class SymElement:
    """A homogeneous symmetric function: partition -> coefficient in one basis."""

    __slots__ = ("degree", "basis", "_coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping | None = None):
        self.degree = degree
        self.basis = basis_name(basis)
        self._coeffs = _clean(coeffs or {})
        for lam in self._coeffs:
            if sum(lam) != degree or list(lam) != sorted(lam, reverse=True) or 0 in lam:
                raise ValueError(f"{lam} is not a partition of {degree}")

    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int]) -> "SymElement":
        lam = tuple(lam)
        return cls(sum(lam), basis, {lam: 1})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items(), reverse=True)

    def __getitem__(self, lam) -> Fraction:
        return Fraction(self._coeffs.get(tuple(lam), 0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "SymElement"):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._check(other)
        out = defaultdict(int, self._coeffs)
        for k, v in other._coeffs.items():
            out[k] += v
        return SymElement(max(self.degree, other.degree) if out else self.degree, self.basis, out)

    def __neg__(self) -> "SymElement":
        return SymElement(self.degree, self.basis, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymElement):
            return multiply(self, other)
        if isinstance(other, (int, Rational)):
            return SymElement(self.degree, self.basis, {k: v * other for k, v in self._coeffs.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymElement):
            return NotImplemented
        return (
            self.basis == other.basis
            and self._coeffs == other._coeffs
            and (self.degree == other.degree or not self._coeffs)
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"SymElement({self.degree}, {self.basis!r}, {dict(self.items())})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for lam, c in self.items():
            name = f"{self.basis}_{''.join(map(str, lam)) if max(lam) < 10 else lam}"
            if c == 1:
                terms.append(f"+ {name}")
            elif c == -1:
                terms.append(f"- {name}")
            else:
                terms.append(f"{'-' if c < 0 else '+'} {abs(c)}{name}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {
                    "index": list(lam),
                    "num": str(Fraction(c).numerator),
                    "den": str(Fraction(c).denominator),
                }
                for lam, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymElement":
        return cls(
            data["degree"],
            data["basis"],
            {tuple(t["index"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]},
        )


def one(basis: str = "m") -> SymElement:
    return SymElement(0, basis, {(): 1})


# ---------------------------------------------------------------------------
# monomial products


def _pad_count(lam: tuple, length: int) -> int:
    """Number of distinct arrangements of ``lam`` padded with zeros to ``length``."""
    zeros = length - len(lam)
    return factorial(length) // (multiplicity_factorial(lam) * factorial(zeros))


def _distinct_permutations(seq: tuple):
    # multiset permutations in lexicographic order
    items = sorted(seq)
    n = len(items)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


@lru_cache(maxsize=None)
def monomial_product(lam: tuple, mu: tuple) -> dict:
    """m_λ · m_μ as a map partition -> integer coefficient.

    Work with exponent vectors of length L = ℓ(λ)+ℓ(μ).  Fix μ padded with
    zeros, add every distinct arrangement of λ, and count how often each
    sorted sum ν appears.  The coefficient of m_ν is that count scaled by
    (#arrangements of μ) / (#arrangements of ν).
    """
    if len(lam) > len(mu):
        lam, mu = mu, lam
    if not lam:
        return {mu: 1}
    length = len(lam) + len(mu)
    base = mu + (0,) * len(lam)
    hits: Counter = Counter()
    for arr in _distinct_permutations(lam + (0,) * len(mu)):
        hits[partition(a + b for a, b in zip(arr, base))] += 1
    n_mu = _pad_count(mu, length)
    return {nu: c * n_mu // _pad_count(nu, length) for nu, c in hits.items()}


@lru_cache(maxsize=None)
def _power_times_monomial(k: int, mu: tuple) -> dict:
    # p_k · m_μ: raise one exponent (possibly a zero one) by k
    out: dict = {}
    for v in set(mu) | {0}:
        lst = list(mu)
        if v:
            lst.remove(v)
        nu = partition(lst + [v + k])
        out[nu] = nu.count(v + k)
    return out


@lru_cache(maxsize=None)
def _elementary_times_monomial(k: int, mu: tuple) -> dict:
    # e_k · m_μ: choose which k exponents (grouped by value, zeros included)
    # get raised by one; the coefficient counts the ways ν arises
    values = sorted(set(mu) | {0}, reverse=True)
    counts = {v: mu.count(v) for v in values}
    counts[0] = k
    out: dict = {}

    def rec(i, left, raised):
        if i == len(values):
            if left:
                return
            lst = []
            for v in values:
                a = raised.get(v, 0)
                lst += [v + 1] * a + [v] * (counts[v] - a)
            nu = partition(lst)
            coeff = 1
            for w in set(nu):
                coeff *= comb(nu.count(w), raised.get(w - 1, 0))
            out[nu] = coeff
            return
        v = values[i]
        for a in range(min(left, counts[v]) + 1):
            raised[v] = a
            rec(i + 1, left - a, raised)
        raised.pop(v, None)

    rec(0, k, {})
    return out


# ---------------------------------------------------------------------------
# transition rows into monomials


@lru_cache(maxsize=None)
def power_row(lam: tuple) -> dict:
    """p_λ in monomials, built one factor at a time."""
    if not lam:
        return {(): 1}
    out: dict = defaultdict(int)
    for mu, c in power_row(lam[1:]).items():
        for nu, d in _power_times_monomial(lam[0], mu).items():
            out[nu] += c * d
    return dict(out)


@lru_cache(maxsize=None)
def elementary_row(lam: tuple) -> dict:
    """e_λ in monomials."""
    if not lam:
        return {(): 1}
    out: dict = defaultdict(int)
    for mu, c in elementary_row(lam[1:]).items():
        for nu, d in _elementary_times_monomial(lam[0], mu).items():
            out[nu] += c * d
    return dict(out)


@lru_cache(maxsize=None)
def schur_row(lam: tuple) -> dict:
    """s_λ in monomials: the Kostka numbers K_{λμ} for μ ⪯ λ."""
    n = sum(lam)
    return {mu: k for mu in partitions(n) if dominance_leq(mu, lam) and (k := kostka(lam, mu))}


@lru_cache(maxsize=None)
def homogeneous_row(lam: tuple) -> dict:
    """h_λ in monomials via [m_ν]h_μ = Σ_λ K_{λμ} K_{λν}."""
    out: dict = defaultdict(int)
    for shape in partitions(sum(lam)):
        if not dominance_leq(lam, shape):
            continue
        k = kostka(shape, lam)
        if k:
            for nu, c in schur_row(shape).items():
                out[nu] += k * c
    return dict(out)


_ROWS = {"p": power_row, "e": elementary_row, "s": schur_row, "h": homogeneous_row}


def generator_in_monomials(kind: str, k: int) -> SymElement:
    """e_k, h_k or p_k in the monomial basis."""
    if k < 1:
        raise ValueError("k must be positive")
    if kind not in ("e", "h", "p"):
        raise ValueError(f"unknown generator {kind!r}")
    return SymElement(k, "m", _ROWS[kind]((k,)))


def to_monomials(f: SymElement) -> SymElement:
    if f.basis == "m":
        return f
    row = _ROWS[f.basis]
    out: dict = defaultdict(int)
    for lam, c in f._coeffs.items():
        for mu, d in row(lam).items():
            out[mu] += c * d
    return SymElement(f.degree, "m", out)


def schur_in_monomials(shape) -> SymElement:
    """s_{λ/μ} = Σ_T x^T; accepts a SkewShape or a partition."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    n = shape.size
    coeffs = {mu: skew_kostka(shape, mu) for mu in partitions(n)}
    return SymElement(n, "m", coeffs)


# ---------------------------------------------------------------------------
# triangular inversions out of monomials


def to_schur_coeffs(f: SymElement) -> SymElement:
    """Schur expansion by back-substitution along the dominance order."""
    f = to_monomials(f)
    rest = defaultdict(int, f._coeffs)
    out = {}
    for lam in partitions(f.degree):  # lex-decreasing refines dominance
        c = rest.get(lam)
        if not c:
            continue
        out[lam] = c
        for mu, k in schur_row(lam).items():
            rest[mu] -= c * k
    return SymElement(f.degree, "s", out)


def to_e_coeffs(f: SymElement) -> SymElement:
    """e-expansion: e_λ has leading monomial m_{λ'} with coefficient 1."""
    f = to_monomials(f)
    rest = defaultdict(int, f._coeffs)
    out = {}
    for mu in partitions(f.degree):
        c = rest.get(mu)
        if not c:
            continue
        lam = conjugate_partition(mu)
        out[lam] = c
        for nu, k in elementary_row(lam).items():
            rest[nu] -= c * k
    return SymElement(f.degree, "e", out)


def to_p_coeffs(f: SymElement) -> SymElement:
    """p-expansion: p_λ has lowest monomial m_λ with coefficient Π m_i(λ)!."""
    f = to_monomials(f)
    rest = defaultdict(int, f._coeffs)
    out = {}
    for lam in reversed(partitions(f.degree)):
        c = rest.get(lam)
        if not c:
            continue
        a = Fraction(c, multiplicity_factorial(lam))
        out[lam] = a
        for nu, k in power_row(lam).items():
            rest[nu] -= a * k
    return SymElement(f.degree, "p", out)


def to_h_coeffs(f: SymElement) -> SymElement:
    """h-expansion from the Schur expansion: h_μ = s_μ + dominance-higher terms."""
    s = to_schur_coeffs(f)
    rest = defaultdict(int, s._coeffs)
    out = {}
    for mu in reversed(partitions(f.degree)):
        c = rest.get(mu)
        if not c:
            continue
        out[mu] = c
        for lam in partitions(f.degree):
            if dominance_leq(mu, lam):
                k = kostka(lam, mu)
                if k:
                    rest[lam] -= c * k
    return SymElement(f.degree, "h", out)


def to_basis(f: SymElement, basis: str) -> SymElement:
    basis = basis_name(basis)
    return {
        "m": to_monomials,
        "s": to_schur_coeffs,
        "e": to_e_coeffs,
        "p": to_p_coeffs,
        "h": to_h_coeffs,
    }[basis](f)


def multiply(f: SymElement, g: SymElement) -> SymElement:
    """Product of two elements in the same basis.

    e, h and p are multiplicative, so their indices concatenate.  The
    monomial basis uses :func:`monomial_product`.  Schur products are not
    provided; convert to monomials first.
    """
    if f.basis != g.basis:
        raise ValueError(f"basis mismatch: {f.basis} vs {g.basis}")
    out: dict = defaultdict(int)
    if f.basis in ("e", "h", "p"):
        for a, c in f._coeffs.items():
            for b, d in g._coeffs.items():
                out[partition(a + b)] += c * d
    elif f.basis == "m":
        for a, c in f._coeffs.items():
            for b, d in g._coeffs.items():
                for nu, k in monomial_product(a, b).items():
                    out[nu] += c * d * k
    else:
        raise ValueError("multiply Schur functions through the monomial basis")
    return SymElement(f.degree + g.degree, f.basis, out)


# ---------------------------------------------------------------------------
# Schur-side formulas


def e_to_schur(lam) -> SymElement:
    """e_λ = Σ_μ K_{μ'λ} s_μ."""
    lam = tuple(lam)
    n = sum(lam)
    return SymElement(n, "s", {mu: kostka(conjugate_partition(mu), lam) for mu in partitions(n)})


def ribbon_schur_coefficient(comp, nu) -> int:
    """[s_ν] s_{sh(I)}: Yamanouchi words of content ν whose run type is the conjugate of I."""
    comp, nu = tuple(comp), tuple(nu)
    if sum(comp) != sum(nu):
        raise ValueError("modulus mismatch")
    tau = conjugate(comp)
    n = sum(nu)
    # position i must ascend into i+1 inside a run and weakly descend at a break
    breaks = set()
    pos = 0
    for t in tau[:-1]:
        pos += t
        breaks.add(pos)
    counts = [0] * len(nu)

    def rec(i, last):
        if i == n:
            return 1
        total = 0
        for a in range(1, len(nu) + 1):
            if counts[a - 1] >= nu[a - 1]:
                continue
            if a > 1 and counts[a - 1] >= counts[a - 2]:
                continue
            if i:
                if i in breaks and a > last:
                    continue
                if i not in breaks and a <= last:
                    continue
            counts[a - 1] += 1
            total += rec(i + 1, a)
            counts[a - 1] -= 1
        return total

    return rec(0, 0)


def ribbon_schur(comp) -> SymElement:
    """Schur expansion of the ribbon Schur function s_{sh(I)}."""
    n = sum(comp)
    return SymElement(n, "s", {nu: ribbon_schur_coefficient(comp, nu) for nu in partitions(n)})


@dataclass(frozen=True)
class PositivityReport:
    """Positivity class of a symmetric function with a witness when negative."""

    klass: str  # "e-positive", "schur-positive", "not-schur-positive"
    e_expansion: SymElement
    s_expansion: SymElement
    witness_basis: str | None = None
    witness_index: tuple | None = None
    witness_value: Fraction | None = None

    @property
    def e_positive(self) -> bool:
        return self.klass == "e-positive"

    @property
    def schur_positive(self) -> bool:
        return self.klass != "not-schur-positive"


def _first_negative(f: SymElement):
    negatives = sorted(lam for lam, c in f._coeffs.items() if c < 0)
    if negatives:
        return negatives[0], Fraction(f._coeffs[negatives[0]])
    return None


def positivity_report(f: SymElement) -> PositivityReport:
    """Classify as e-positive, Schur-positive only, or not Schur positive.

    The witness is the lexicographically smallest partition with a negative
    coefficient in the Schur basis, or in the e basis when only that fails.
    """
    e = to_e_coeffs(f)
    s = to_schur_coeffs(f)
    neg_s = _first_negative(s)
    if neg_s:
        return PositivityReport("not-schur-positive", e, s, "s", *neg_s)
    neg_e = _first_negative(e)
    if neg_e:
        return PositivityReport("schur-positive", e, s, "e", *neg_e)
    return PositivityReport("e-positive", e, s)

