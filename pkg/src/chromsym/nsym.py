"""Noncommutative symmetric functions in the Λ, S, Ψ and ribbon bases.

Transitions into the ribbon basis R come from the standard formulas:

* Λ^I is the sum of R_J over all J refining the conjugate of reversed I;
* ε^I Ψ^I is a signed sum of R_J over hook decompositions with block sizes I;
* ε^I R_I is the sum of ε^J S^J over J coarsening I (inverted by Möbius).

The ribbon product is R_I R_J = R_{I◁J} + R_{I▷J}; the other three bases are
multiplicative, so products concatenate indices.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Mapping

from . import sym
from .combinatorics import (
    coarsenings,
    concatenations,
    conjugate,
    hook_decompositions,
    lp,
    partition,
    refinements,
    reverse,
    sign,
)
from .sym import SymElement

BASES = ("Lambda", "S", "Psi", "R")
_ALIASES = {"lambda": "Lambda", "s": "S", "psi": "Psi", "r": "R", "ribbon": "R"}


def basis_name(name: str) -> str:
    if name in BASES:
        return name
    name = _ALIASES.get(name.lower())
    if name is None:
        raise ValueError(f"unknown NSym basis {name!r}")
    return name


class NSymElement:
    """Homogeneous noncommutative symmetric function: composition -> coefficient."""

    __slots__ = ("weight", "basis", "_coeffs")

    def __init__(self, weight: int, basis: str, coeffs: Mapping | None = None):
        self.weight = weight
        self.basis = basis_name(basis)
        clean = {}
        for k, v in (coeffs or {}).items():
            if v:
                k = tuple(k)
                if sum(k) != weight or 0 in k:
                    raise ValueError(f"{k} is not a composition of {weight}")
                clean[k] = v if isinstance(v, int) else Fraction(v)
        self._coeffs = clean

    @classmethod
    def basis_element(cls, basis: str, comp) -> "NSymElement":
        comp = tuple(comp)
        return cls(sum(comp), basis, {comp: 1})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items(), reverse=True)

    def __getitem__(self, comp) -> Fraction:
        return Fraction(self._coeffs.get(tuple(comp), 0))

    def support(self) -> set:
        return set(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "NSymElement") -> "NSymElement":
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.weight != other.weight and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"weight mismatch: {self.weight} vs {other.weight}")
        out = defaultdict(int, self._coeffs)
        for k, v in other._coeffs.items():
            out[k] += v
        weight = self.weight if self._coeffs else other.weight
        return NSymElement(weight, self.basis, out)

    def __neg__(self):
        return NSymElement(self.weight, self.basis, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NSymElement):
            return multiply(self, other)
        if isinstance(other, (int, Rational)):
            return NSymElement(self.weight, self.basis, {k: v * other for k, v in self._coeffs.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, NSymElement):
            return NotImplemented
        return self.basis == other.basis and self._coeffs == other._coeffs and (
            self.weight == other.weight or not self._coeffs
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self._coeffs.items())))

    def __repr__(self):
        return f"NSymElement({self.weight}, {self.basis!r}, {dict(self.items())})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for comp, c in self.items():
            name = f"{self.basis}[{','.join(map(str, comp))}]"
            coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
            parts.append(f"{coeff}{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "basis": self.basis,
            "terms": [
                {
                    "index": list(comp),
                    "num": str(Fraction(c).numerator),
                    "den": str(Fraction(c).denominator),
                }
                for comp, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "NSymElement":
        return cls(
            data["weight"],
            data["basis"],
            {tuple(t["index"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]},
        )


def one(basis: str) -> NSymElement:
    return NSymElement(0, basis, {(): 1})


def zero(weight: int, basis: str) -> NSymElement:
    return NSymElement(weight, basis)


def _linear(f: NSymElement, basis: str, image) -> NSymElement:
    out: dict = defaultdict(int)
    for comp, c in f._coeffs.items():
        for target, d in image(comp).items():
            out[target] += c * d
    return NSymElement(f.weight, basis, out)


# ---------------------------------------------------------------------------
# products


@lru_cache(maxsize=None)
def _ribbon_product(left: tuple, right: tuple) -> dict:
    if not left:
        return {right: 1}
    if not right:
        return {left: 1}
    plain, near = concatenations(left, right)
    return {plain: 1, near: 1}


def multiply(f: NSymElement, g: NSymElement) -> NSymElement:
    if f.basis != g.basis:
        raise ValueError(f"basis mismatch: {f.basis} vs {g.basis}")
    out: dict = defaultdict(int)
    for a, c in f._coeffs.items():
        for b, d in g._coeffs.items():
            if f.basis == "R":
                for comp, k in _ribbon_product(a, b).items():
                    out[comp] += c * d * k
            else:
                out[a + b] += c * d
    return NSymElement(f.weight + g.weight, f.basis, out)


# ---------------------------------------------------------------------------
# transitions


@lru_cache(maxsize=None)
def _lambda_row(comp: tuple) -> dict:
    return {j: 1 for j in refinements(conjugate(reverse(comp)))}


@lru_cache(maxsize=None)
def _psi_lambda_row(comp: tuple) -> dict:
    # Ψ^I = Σ_{J refining I} lp(rev J, rev I) ε^J Λ^J
    return {j: lp(reverse(j), reverse(comp)) * sign(j) for j in refinements(comp)}


@lru_cache(maxsize=None)
def _psi_ribbon_row(comp: tuple) -> dict:
    # ε^I Ψ^I = Σ over hook decompositions with block sizes I of Π ε^{hook} R_J
    out: dict = defaultdict(int)
    for d in hook_decompositions(relative_to=comp):
        out[d.result()] += sign(comp) * d.sign()
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _ribbon_s_row(comp: tuple) -> dict:
    # ε^I R_I = Σ_{J coarsening I} ε^J S^J
    return {j: sign(comp) * sign(j) for j in coarsenings(comp)}


@lru_cache(maxsize=None)
def _s_ribbon_row(comp: tuple) -> dict:
    # Möbius inversion of the row above: S^I = Σ_{J coarsening I} R_J
    return {j: 1 for j in coarsenings(comp)}


def lambda_to_ribbon(f: NSymElement) -> NSymElement:
    _expect(f, "Lambda")
    return _linear(f, "R", _lambda_row)


def psi_to_lambda(f: NSymElement) -> NSymElement:
    _expect(f, "Psi")
    return _linear(f, "Lambda", _psi_lambda_row)


def psi_to_ribbon(f: NSymElement) -> NSymElement:
    _expect(f, "Psi")
    return _linear(f, "R", _psi_ribbon_row)


def ribbon_to_s(f: NSymElement) -> NSymElement:
    _expect(f, "R")
    return _linear(f, "S", _ribbon_s_row)


def s_to_ribbon(f: NSymElement) -> NSymElement:
    _expect(f, "S")
    return _linear(f, "R", _s_ribbon_row)


@lru_cache(maxsize=None)
def s_from_lambda(n: int) -> NSymElement:
    """S_n in the Λ basis from Σ_{k=0}^{n} (-1)^k Λ_k S_{n-k} = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return one("Lambda")
    total = zero(n, "Lambda")
    for k in range(1, n + 1):
        term = multiply(NSymElement.basis_element("Lambda", (k,)), s_from_lambda(n - k))
        total = total + (term if k % 2 else -term)
    return total


def s_to_lambda(f: NSymElement) -> NSymElement:
    _expect(f, "S")
    out = zero(f.weight, "Lambda")
    for comp, c in f._coeffs.items():
        prod = one("Lambda")
        for part in comp:
            prod = multiply(prod, s_from_lambda(part))
        out = out + c * prod
    return out


def to_ribbon(f: NSymElement) -> NSymElement:
    return {
        "R": lambda x: x,
        "Lambda": lambda_to_ribbon,
        "Psi": psi_to_ribbon,
        "S": s_to_ribbon,
    }[f.basis](f)


def to_lambda(f: NSymElement) -> NSymElement:
    if f.basis == "Lambda":
        return f
    if f.basis == "Psi":
        return psi_to_lambda(f)
    if f.basis == "S":
        return s_to_lambda(f)
    return s_to_lambda(ribbon_to_s(f))


def _expect(f: NSymElement, basis: str):
    if f.basis != basis:
        raise ValueError(f"expected an element in basis {basis}, got {f.basis}")


# ---------------------------------------------------------------------------
# projection to Sym


@lru_cache(maxsize=None)
def _ribbon_monomials(comp: tuple) -> SymElement:
    # ρ(R_I) via S: R_I = Σ_{J coarsening I} ε^I ε^J S^J and ρ(S^J) = h_{sort J}
    coeffs: dict = defaultdict(int)
    for j, c in _ribbon_s_row(comp).items():
        coeffs[partition(j)] += c
    return sym.to_monomials(SymElement(sum(comp), "h", coeffs))


def project_rho(f: NSymElement) -> SymElement:
    """Commutative image ρ(f), returned in the monomial basis."""
    if f.basis == "R":
        out: dict = defaultdict(int)
        for comp, c in f._coeffs.items():
            for lam, d in _ribbon_monomials(comp)._coeffs.items():
                out[lam] += c * d
        return SymElement(f.weight, "m", out)
    target = {"Lambda": "e", "S": "h", "Psi": "p"}[f.basis]
    coeffs: dict = defaultdict(int)
    for comp, c in f._coeffs.items():
        coeffs[partition(comp)] += c
    return sym.to_monomials(SymElement(f.weight, target, coeffs))
