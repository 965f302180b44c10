"""Noncommutative lifts of path chromatic functions and the pieces built from them.

Notation used below: for a composition I, ε^I = (-1)^{|I|-ℓ(I)} and
m^I = 2^{#parts equal to 1}.  The family C_n is the compositions of n with
parts in {1, 2} and last part 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import sym
from .combinatorics import (
    enumerate_compositions,
    m_power,
    restricted_hook_decompositions,
    sign,
)
from .graphs import path_csf
from .nsym import (
    NSymElement,
    lambda_to_ribbon,
    multiply,
    project_rho,
    psi_to_lambda,
    psi_to_ribbon,
)
from .sym import SymElement

HALF = Fraction(1, 2)


def _falling_product(comp, first_shift: int) -> int:
    # (i_1 - first_shift)(i_2 - 1)...(i_l - 1)
    prod = comp[0] - first_shift
    for part in comp[1:]:
        prod *= part - 1
    return prod


@lru_cache(maxsize=None)
def xtilde_path(n: int, basis: str = "R") -> NSymElement:
    """The noncommutative path function in one of three closed forms.

    * ``Psi``: Σ_{I ⊨ n} ε^I Ψ^I
    * ``Lambda``: Σ_I i_1 (i_2 - 1) ... (i_l - 1) Λ^I
    * ``R``: ½ Σ_{I ∈ C_n} m^I R_I
    """
    if n < 1:
        raise ValueError("n must be positive")
    basis = {"psi": "Psi", "lambda": "Lambda", "ribbon": "R", "r": "R"}.get(basis.lower(), basis)
    if basis == "Psi":
        return NSymElement(n, "Psi", {c: sign(c) for c in enumerate_compositions(n)})
    if basis == "Lambda":
        return NSymElement(n, "Lambda", {c: _falling_product(c, 0) for c in enumerate_compositions(n)})
    if basis == "R":
        return NSymElement(n, "R", {c: HALF * m_power(c) for c in enumerate_compositions(n, "C")})
    raise ValueError(f"unknown basis {basis!r}")


@dataclass(frozen=True)
class PathAnalog:
    n: int
    forms: dict = field(hash=False)

    @classmethod
    def build(cls, n: int) -> "PathAnalog":
        return cls(n, {b: xtilde_path(n, b) for b in ("Psi", "Lambda", "R")})

    def projections(self) -> dict:
        return {b: project_rho(f) for b, f in self.forms.items()}

    def consistent_in_nsym(self) -> bool:
        """All three forms are the same element once rewritten in R."""
        r = self.forms["R"]
        return (
            lambda_to_ribbon(self.forms["Lambda"]) == r
            and psi_to_ribbon(self.forms["Psi"]) == r
            and psi_to_lambda(self.forms["Psi"]) == self.forms["Lambda"]
        )


def hook_partition_count(comp) -> int:
    """Number of hook decompositions of J in which every row tail starts a hook of length >= 2."""
    comp = tuple(comp)
    if comp not in enumerate_compositions(sum(comp), "C"):
        raise ValueError(f"{comp} has parts outside {{1, 2}} or does not end in 1")
    return len(restricted_hook_decompositions(comp))


# ---------------------------------------------------------------------------
# A/B split


@lru_cache(maxsize=None)
def a_tilde(n: int) -> NSymElement:
    """Σ_I (i_1 - 1)...(i_l - 1) Λ^I; zero for n = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return NSymElement(n, "Lambda", {c: _falling_product(c, 1) for c in enumerate_compositions(n)})


def _first_column(comp) -> int:
    """Length of the leftmost column of the ribbon of a {1,2}-composition starting with 1."""
    length = 1
    for part in comp[1:]:
        length += 1
        if part != 1:
            break
    return length


@lru_cache(maxsize=None)
def b_tilde(n: int) -> NSymElement:
    """Ribbon expansion of the B-part of the path function.

    Sum over J ∈ C_n starting with 1: coefficient ½ m^J when the leftmost
    column of the ribbon has length 2, and ⅜ m^J when it is longer.  For
    n >= 3 this is the split "J starts 12" versus "J starts 11"; n = 2 has
    only J = 11, whose leftmost column has length 2.
    """
    if n < 2:
        raise ValueError("B needs n >= 2")
    out = {}
    for c in enumerate_compositions(n, "C"):
        if c[0] != 1:
            continue
        weight = HALF if _first_column(c) == 2 else Fraction(3, 8)
        out[c] = weight * m_power(c)
    return NSymElement(n, "R", out)


def b_tilde_lambda(n: int) -> NSymElement:
    """The same element as :func:`b_tilde`, assembled as X̃_{P_n} - Λ_1 Ã_{n-1} in Λ."""
    if n < 2:
        raise ValueError("B needs n >= 2")
    lam1 = NSymElement.basis_element("Lambda", (1,))
    return xtilde_path(n, "Lambda") - multiply(lam1, a_tilde(n - 1))


def ab_tilde(n: int) -> tuple[NSymElement, NSymElement]:
    return a_tilde(n), b_tilde(n)


def ab_commutative(n: int) -> tuple[SymElement, SymElement]:
    """Split X_{P_n} = e_1 A_{n-1} + B_n with B_n free of e-indices containing 1."""
    e = sym.to_e_coeffs(path_csf(n))
    a, b = {}, {}
    for lam, c in e.coeffs.items():
        if 1 in lam:
            rest = list(lam)
            rest.remove(1)
            a[tuple(rest)] = c
        else:
            b[lam] = c
    return SymElement(n - 1, "e", a), SymElement(n, "e", b)


# ---------------------------------------------------------------------------
# D and E differences


def _check_nk(n: int, k: int):
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")


@lru_cache(maxsize=None)
def d_tilde(n: int, k: int) -> NSymElement:
    """X̃_{P_n} - X̃_{P_{n-k}} Ã_k in the Λ basis."""
    _check_nk(n, k)
    return xtilde_path(n, "Lambda") - multiply(xtilde_path(n - k, "Lambda"), a_tilde(k))


@lru_cache(maxsize=None)
def e_tilde(n: int, k: int) -> NSymElement:
    """X̃_{P_n} - X̃_{P_{n-k}} B̃_k in the ribbon basis."""
    _check_nk(n, k)
    if k < 2:
        raise ValueError("B needs k >= 2")
    return xtilde_path(n, "R") - multiply(xtilde_path(n - k, "R"), b_tilde(k))


def de_tilde(n: int, k: int) -> tuple[NSymElement, NSymElement]:
    return d_tilde(n, k), e_tilde(n, k)


def d_commutative(n: int, k: int) -> SymElement:
    """D_{n,k} = X_{P_n} - X_{P_{n-k}} A_k from the graph oracle, in the e basis."""
    _check_nk(n, k)
    x = sym.to_e_coeffs(path_csf(n))
    if k == 1:
        return x
    a, _ = ab_commutative(k + 1)
    return x - sym.multiply(sym.to_e_coeffs(path_csf(n - k)), a)


def e_commutative(n: int, k: int) -> SymElement:
    """E_{n,k} = X_{P_n} - X_{P_{n-k}} B_k from the graph oracle, in the e basis."""
    _check_nk(n, k)
    _, b = ab_commutative(k)
    return sym.to_e_coeffs(path_csf(n)) - sym.multiply(sym.to_e_coeffs(path_csf(n - k)), b)


def spider_from_de(a: int, b: int) -> SymElement:
    """X_{S(a,b,1)} = e_1 D_{n-1,b} + E_{n,b+1} with n = a + b + 2, via the lifts."""
    n = a + b + 2
    d = project_rho(d_tilde(n - 1, b))
    e = project_rho(e_tilde(n, b + 1))
    e1 = sym.generator_in_monomials("e", 1)
    return sym.multiply(e1, d) + e


def lambda_prefix_sums(comp) -> set:
    out, total = set(), 0
    for part in comp:
        total += part
        out.add(total)
    return out


# ---------------------------------------------------------------------------
# e-coefficients and closed forms


def path_e_coefficient(lam, n: int) -> int:
    """[e_λ] X_{P_n} = Σ over distinct rearrangements α of (α_1-1)...(α_{l-1}-1) α_l."""
    lam = tuple(lam)
    if sum(lam) != n:
        raise ValueError("modulus mismatch")
    total = 0
    for alpha in set(permutations(lam)):
        prod = alpha[-1]
        for part in alpha[:-1]:
            prod *= part - 1
        total += prod
    return total


def composition_product_sums(n: int) -> tuple[int, int]:
    """Brute-force sums over compositions with all parts >= 2.

    Returns (Σ Π(c_i - 1), Σ c_1 Π_{i>=2}(c_i - 1)).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    first = second = 0
    for c in enumerate_compositions(n, "C_prime"):
        first += _falling_product(c, 1)
        second += _falling_product(c, 0)
    return first, second


def composition_product_closed_forms(n: int) -> tuple[int, int]:
    return 2 ** (n - 2), 2 if n == 2 else 3 * 2 ** (n - 3)


@dataclass(frozen=True)
class PathDifferenceCheck:
    n: int
    k: int
    difference: SymElement
    e_positive: bool
    sharpness: Fraction | None


def path_difference_check(n: int, k: int) -> PathDifferenceCheck:
    """e-positivity of X_{P_n} - (k-1) e_k X_{P_{n-k}}, or of X_{P_n} - n e_n when k = n.

    When n = 2k also reports [e_{kk}](X_{P_{2k}} - k e_k X_{P_k}), which
    equals -k.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    x = sym.to_e_coeffs(path_csf(n))
    ek = SymElement.basis_element("e", (k,))
    rest = sym.to_e_coeffs(path_csf(n - k)) if n > k else sym.one("e")
    diff = x - (k - 1 if k < n else n) * sym.multiply(ek, rest)
    sharp = None
    if n == 2 * k:
        tight = x - k * sym.multiply(ek, rest)
        sharp = tight[(k, k)]
    return PathDifferenceCheck(n, k, diff, all(c >= 0 for c in diff.coeffs.values()), sharp)

