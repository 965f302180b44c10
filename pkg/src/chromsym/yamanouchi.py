"""Yamanouchi-word multisets and the Schur coefficients of E_{n,k}.

Conventions.  𝒴(κ) is the set of Yamanouchi words of content κ whose runs,
except possibly the last, have length at least 2.  A word y with r runs has
weight m(y) = 2^{n+2-2r}, and M_α(κ) is the multiset of words in 𝒴(κ) whose
run type starts with α, each with multiplicity m(y)/2.  M(κ; β) restricts to
words starting with β instead.

The Schur coefficients of E_{n,k} computed here from words are always
compared with the commutative computation in :mod:`chromsym.analogs`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from . import sym
from .analogs import d_commutative, e_commutative
from .combinatorics import (
    conjugate,
    enumerate_compositions,
    m_power,
    parse_compact_word,
    partial_sums,
    partitions,
    run_type,
    runs,
    word_content,
)
from .graphs import DEFAULT_MAX_EDGES, CapExceeded, csf_powersum, path_csf, spider
from .multisets import MultiMap, WordMultiset
from .parallel import pmap

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# enumeration and weights


def enumerate_Y(kappa, prefix_runtype=(), prefix_word=()) -> list[tuple]:
    """Words of 𝒴(κ) whose run type starts with α and whose letters start with β.

    Depth-first in lexicographic order.  A run may only be closed once it has
    length at least 2, and run lengths are capped by α while inside it.
    """
    kappa = tuple(kappa)
    alpha = tuple(prefix_runtype)
    beta = tuple(prefix_word)
    n = sum(kappa)
    letters = len(kappa)
    counts = [0] * (letters + 1)
    word: list[int] = []
    out: list[tuple] = []
    if len(beta) > n:
        return out

    def rec(last, cur, done):
        pos = len(word)
        if pos == n:
            if done >= len(alpha) or (done == len(alpha) - 1 and cur == alpha[-1]):
                out.append(tuple(word))
            return
        choices = (beta[pos],) if pos < len(beta) else range(1, letters + 1)
        for a in choices:
            if a > letters or counts[a] >= kappa[a - 1]:
                continue
            if a > 1 and counts[a] >= counts[a - 1]:
                continue
            if pos and a > last:
                new_cur, new_done = cur + 1, done
                if done < len(alpha) and new_cur > alpha[done]:
                    continue
            elif pos:
                if cur < 2:
                    continue
                if done < len(alpha) and cur != alpha[done]:
                    continue
                new_cur, new_done = 1, done + 1
            else:
                new_cur, new_done = 1, 0
            counts[a] += 1
            word.append(a)
            rec(a, new_cur, new_done)
            word.pop()
            counts[a] -= 1

    if n:
        rec(0, 0, 0)
    return out


def weight_m(word) -> int:
    """m(y) = 2^{n+2-2r} where r is the number of runs."""
    r = len(runs(word))
    return 2 ** (len(word) + 2 - 2 * r)


def weight_m_from_shape(word) -> int:
    """2^{m_1(sh(y))}: the same weight read off the ribbon of y."""
    return m_power(conjugate(run_type(word)))


def M(kappa, alpha=(), beta=()) -> WordMultiset:
    """The multiset M_α(κ; β) with multiplicity m/2."""
    return WordMultiset({y: Fraction(weight_m(y), 2) for y in enumerate_Y(kappa, alpha, beta)})


def norm_M(kappa, alpha=(), beta=()) -> Fraction:
    """‖M_α(κ; β)‖ by dynamic programming over prefix states.

    Agrees with ``M(kappa, alpha, beta).norm()`` but does not list words, so it
    stays fast for contents of size 20.
    """
    kappa = tuple(kappa)
    alpha, beta = tuple(alpha), tuple(beta)
    n = sum(kappa)
    letters = len(kappa)
    if n == 0:
        return Fraction(0)
    quarter = Fraction(1, 4)

    @lru_cache(maxsize=None)
    def tail(counts, last, cur, done):
        # Σ over completions of 4^{-(runs closed from here on)}
        if sum(counts) == n:
            if done >= len(alpha) or (done == len(alpha) - 1 and cur == alpha[-1]):
                return Fraction(1)
            return Fraction(0)
        total = Fraction(0)
        for a in range(1, letters + 1):
            step = _step(counts, last, cur, done, a)
            if step is None:
                continue
            new_counts, new_cur, new_done = step
            sub = tail(new_counts, a, new_cur, new_done)
            total += sub * quarter if a <= last else sub
        return total

    def _step(counts, last, cur, done, a):
        if counts[a - 1] >= kappa[a - 1]:
            return None
        if a > 1 and counts[a - 1] >= counts[a - 2]:
            return None
        new_counts = counts[: a - 1] + (counts[a - 1] + 1,) + counts[a:]
        if last and a > last:
            new_cur, new_done = cur + 1, done
            if done < len(alpha) and new_cur > alpha[done]:
                return None
        elif last:
            if cur < 2:
                return None
            if done < len(alpha) and cur != alpha[done]:
                return None
            new_cur, new_done = 1, done + 1
        else:
            new_cur, new_done = 1, 0
        if new_done >= len(alpha):
            new_done = len(alpha)
            new_cur = min(new_cur, 2)
        return new_counts, new_cur, new_done

    # walk the forced prefix, counting closed runs
    counts, last, cur, done, closed = (0,) * letters, 0, 0, 0, 0
    for a in beta:
        if not 1 <= a <= letters:
            return Fraction(0)
        step = _step(counts, last, cur, done, a)
        if step is None:
            return Fraction(0)
        if last and a <= last:
            closed += 1
        counts, cur, done = step
        last = a
    return Fraction(2 ** (n - 1)) * quarter ** closed * tail(counts, last, cur, done)


# ---------------------------------------------------------------------------
# Schur coefficients of E_{n,k}


def _c_prime(m: int) -> tuple:
    if m < 0:
        return ()
    return enumerate_compositions(m, "C_prime")


def _prefix_terms(n: int, k: int, reading: str) -> list[tuple[Fraction, tuple]]:
    """(coefficient, run-type prefix) pairs of the norm formula."""
    terms: list[tuple[Fraction, tuple]] = []

    def add(coeff, alpha):
        if sum(alpha) <= n:
            terms.append((Fraction(coeff), alpha))

    for a in _c_prime(k - 1):
        add(1, a)
    for i in range(3, k + 2):
        for a in _c_prime(k + 1 - i):
            add(1, a + (i,))
    for a in _c_prime(k - 2):
        add(-1, a + (2,))
    for a in _c_prime(k - 2):
        for z in range(4, n + 1):
            add(HALF, a + (z,))
    for i in range(3, k + 1):
        for a in _c_prime(k - i):
            add(-HALF, a + (i,))
    five_eighths = Fraction(5, 8)
    if reading == "proof":
        for i in range(3, k + 1):
            for z in range(i + 2, n + 1):
                for a in _c_prime(k - i):
                    add(five_eighths, a + (z,))
    elif reading == "printed":
        for i in range(3, k + 1):
            for a in _c_prime(k + 2):
                if a[-1] >= i + 2:
                    add(five_eighths, a)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return terms


def classify_ribbon(comp, n: int, k: int) -> int:
    """Which of the five classes I_1..I_5 a composition in C_n falls into.

    With the split point s = n - k: if s is a partial sum, write I = γδ; the
    class is 2 (γ ends 1, δ = 12ζ), 4 (γ ends 1, δ = 11ζ) or 5 (otherwise).
    If a part 2 straddles s, the class is 1 (next part 2) or 3 (next part 1).
    """
    comp = tuple(comp)
    s = n - k
    sums = partial_sums(comp) | {0, n}
    if s in sums:
        idx = next(i for i in range(len(comp) + 1) if sum(comp[:i]) == s)
        gamma, delta = comp[:idx], comp[idx:]
        if gamma and gamma[-1] == 1 and delta[0] == 1:
            if len(delta) >= 2 and delta[1] == 2:
                return 2
            return 4
        return 5
    idx = next(i for i in range(len(comp)) if sum(comp[: i + 1]) > s)
    rest = comp[idx + 1:]
    if rest and rest[0] == 2:
        return 1
    return 3


_CLASS_WEIGHT = {1: Fraction(-1), 2: HALF, 3: -HALF, 4: Fraction(5, 8), 5: Fraction(1)}


def schur_coeff_E(n: int, k: int, kappa, reading: str = "proof") -> Fraction:
    """[s_κ] E_{n,k} from Yamanouchi-word norms.

    ``reading`` selects the formula: ``"proof"`` sums prefix norms from the
    five-class decomposition, ``"decomposition"`` classifies every word
    directly, and ``"printed"`` uses the alternative index set for the ⅝
    term.  Only the first two are expected to agree with the ground truth.
    """
    kappa = tuple(kappa)
    if n < 2 * k:
        raise ValueError(f"need n >= 2k, got n={n}, k={k}")
    if sum(kappa) != n:
        raise ValueError("content size must equal n")
    if reading == "decomposition":
        if k < 3:
            raise ValueError("the five-class decomposition needs k >= 3")
        total = Fraction(0)
        for y in enumerate_Y(kappa):
            shape = conjugate(run_type(y))
            total += _CLASS_WEIGHT[classify_ribbon(shape, n, k)] * Fraction(weight_m(y), 2)
        return total
    return sum(
        (c * norm_M(kappa, alpha) for c, alpha in _prefix_terms(n, k, reading)), Fraction(0)
    )


@lru_cache(maxsize=None)
def e_schur_ground_truth(n: int, k: int) -> sym.SymElement:
    """Schur expansion of E_{n,k} = X_{P_n} - X_{P_{n-k}} B_k, computed commutatively."""
    return sym.to_schur_coeffs(e_commutative(n, k))


@dataclass
class WordNormCheck:
    n: int
    k: int
    mismatches: dict = field(default_factory=dict)
    printed_mismatches: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_word_norm_coefficients(n: int, k: int, workers: int = 1) -> WordNormCheck:
    """Compare both word readings with the ground truth for every κ ⊢ n."""
    truth = e_schur_ground_truth(n, k)
    kappas = partitions(n)
    rows = pmap(_word_norm_row, [(n, k, kappa) for kappa in kappas], workers)
    res = WordNormCheck(n, k)
    for kappa, proof, decomp, printed in rows:
        expected = truth[kappa]
        res.values[kappa] = expected
        if proof != expected or decomp != expected:
            res.mismatches[kappa] = (expected, proof, decomp)
        if printed != expected:
            res.printed_mismatches[kappa] = (expected, printed)
    return res


def _word_norm_row(args):
    n, k, kappa = args
    proof = schur_coeff_E(n, k, kappa, "proof")
    return (
        kappa,
        proof,
        schur_coeff_E(n, k, kappa, "decomposition") if k >= 3 else proof,
        schur_coeff_E(n, k, kappa, "printed"),
    )


# ---------------------------------------------------------------------------
# moving letters between runs


def move_letter(word, letter: int, src: int, dst: int) -> tuple:
    """Move ``letter`` from run ``src`` to run ``dst`` (runs numbered from 1).

    The runs are re-concatenated as they stand; the caller checks membership
    of the result in whatever set it should land in.
    """
    rs = [list(r) for r in runs(word)]
    if letter not in rs[src - 1]:
        raise ValueError(f"letter {letter} is not in run {src} of {word}")
    if letter in rs[dst - 1]:
        raise ValueError(f"letter {letter} is already in run {dst} of {word}")
    rs[src - 1].remove(letter)
    rs[dst - 1] = sorted(rs[dst - 1] + [letter])
    return tuple(a for r in rs for a in r)


def _interval(a: int, b: int) -> tuple:
    return tuple(range(a, b + 1))


def shift_case(y, j: int) -> int:
    rs = runs(y)
    if j not in rs[1]:
        return 1
    if len(rs) < 3:
        return 3
    if j not in rs[2]:
        return 2
    return 4


def shift_image(y, j: int) -> WordMultiset:
    """The image of one word y ∈ 𝒴_j under the map into M_{j-1}."""
    y = tuple(y)
    n = len(y)
    case = shift_case(y, j)
    if case == 1:
        return WordMultiset({move_letter(y, j, 1, 2): 1})
    if case == 2:
        return WordMultiset({move_letter(y, j, 1, 3): 1})
    head = _interval(1, j - 1)
    if case == 3:
        if y != _interval(1, j) + _interval(1, n - j):
            raise AssertionError(f"{y} has a second-and-last run containing {j} but is not [j][n-j]")
        u = head + (1, j) + _interval(2, n - j)
        v = head + _interval(1, j) + _interval(j, n - j)
        return WordMultiset({u: HALF, v: HALF})
    rs = runs(y)
    p = len(rs[1])
    if rs[1] != _interval(1, p) or rs[2][:j] != _interval(1, j):
        raise AssertionError(f"{y} does not have the form [j][p][j]ζ")
    zeta = y[j + p + j:]
    big_u = head + (1, j) + _interval(2, p) + _interval(1, j) + zeta
    big_v = head + (1, j) + _interval(1, p) + _interval(2, j) + zeta
    return WordMultiset({big_u: HALF, big_v: HALF})


def shift_map(j: int, kappa) -> MultiMap:
    """The multi-map from the support of M_j(κ) into M_{j-1}(κ)."""
    if j < 3:
        raise ValueError("j must be at least 3")
    if sum(kappa) < j + 1:
        raise ValueError("need |κ| >= j + 1")
    return MultiMap({y: shift_image(y, j) for y in enumerate_Y(kappa, (j,))})


# interface aliases
iota_lemma42 = shift_map


@dataclass
class MapCheck:
    """Outcome of checking one multi-map on one content."""

    kappa: tuple
    label: str
    source_norm: Fraction
    target_norm: Fraction
    ill_defined: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    weight_errors: list = field(default_factory=list)
    residual_ok: bool = True
    mapping: MultiMap | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return not (self.ill_defined or self.violations or self.weight_errors) and self.residual_ok


def check_shift_map(j: int, kappa) -> MapCheck:
    kappa = tuple(kappa)
    f = shift_map(j, kappa)
    source = HALF * M(kappa, (j,))
    target = M(kappa, (j - 1,))
    chk = MapCheck(kappa, f"j={j}", source.norm(), target.norm(), mapping=f)
    for y in f.assignment:
        for z in f(y).support():
            if z not in target:
                chk.ill_defined.append((y, z))
    chk.violations = f.violations(source, target)
    return chk


def _move_into(src_set, letter, src_run, dst_run):
    return {y: move_letter(y, letter, src_run, dst_run) for y in src_set}


def check_letter_move(which: str, kappa, z: int | None = None) -> MapCheck:
    """Check one of the three maps: ``bullet1``, ``bullet2`` (needs z) or ``bullet3``."""
    kappa = tuple(kappa)
    n = sum(kappa)
    if which == "bullet1":
        if n < 6:
            raise ValueError("bullet1 needs |κ| >= 6")
        source = M(kappa, (3, 2))
        target = M(kappa, (2, 3))
        images = _move_into(source.support(), 3, 1, 2)
        residual = M(kappa, (), parse_compact_word("[2][3]3"))
        scale = 1
    elif which == "bullet2":
        if z is None or z < 4 or n < z + 2:
            raise ValueError("bullet2 needs z >= 4 and |κ| >= z + 2")
        source = M(kappa, (2, z))
        target = M(kappa, (3, z - 1))
        images = _move_into(source.support(), 3, 2, 1)
        residual = M(kappa, (3, z - 1), _interval(1, 3) + _interval(1, z - 1))
        scale = 1
    elif which == "bullet3":
        if n < 7:
            raise ValueError("bullet3 needs |κ| >= 7")
        source = M(kappa, (), parse_compact_word("[2][3]3"))
        target = WordMultiset()
        for zz in range(4, n - 2):
            target = target + M(kappa, (3, zz), _interval(1, 3) + _interval(1, zz))
        images = _move_into(source.support(), 3, 3, 1)
        residual = None
        scale = 4
    else:
        raise ValueError(f"unknown map {which!r}")
    f = MultiMap({y: WordMultiset({w: 1}) for y, w in images.items()})
    label = which if z is None else f"{which}(z={z})"
    chk = MapCheck(kappa, label, source.norm(), target.norm(), mapping=f)
    for y, w in images.items():
        if w not in target:
            chk.ill_defined.append((y, w))
        elif weight_m(w) != scale * weight_m(y):
            chk.weight_errors.append((y, w))
    chk.violations = f.violations(source, target)
    if residual is not None:
        chk.residual_ok = target - f.image(source) == residual
    return chk


# interface alias
injections_lemma45 = check_letter_move


# ---------------------------------------------------------------------------
# the X / Y multisets


@dataclass
class XYSplit:
    """X_<, X_≥, Y_<, Y_≥ for one letter t."""

    t: int
    X_lt: WordMultiset
    X_ge: WordMultiset
    Y_lt: WordMultiset
    Y_ge: WordMultiset

    def norms(self) -> dict:
        return {
            "X_lt": self.X_lt.norm(),
            "X_ge": self.X_ge.norm(),
            "Y_lt": self.Y_lt.norm(),
            "Y_ge": self.Y_ge.norm(),
        }

    def inequalities_hold(self) -> bool:
        return self.X_lt.norm() <= self.Y_lt.norm() and self.X_ge.norm() <= self.Y_ge.norm()


X_READINGS = ("definition", "table")


def build_X(kappa, reading: str = "definition") -> WordMultiset:
    """X(κ) = 3/2 (M_23(κ) ∖ M(κ; [2][3]3)).

    ``reading="table"`` skips the removal and returns 3/2 M_23(κ); that is
    the multiset the transcribed size-10 table actually lists.
    """
    if reading not in X_READINGS:
        raise ValueError(f"unknown X reading {reading!r}")
    base = M(kappa, (2, 3))
    if reading == "definition":
        base = base - M(kappa, (), parse_compact_word("[2][3]3"))
    return Fraction(3, 2) * base


def build_Y(kappa) -> WordMultiset:
    """Y(κ) = 2 M_24(κ) ⊔ M(κ; [3][3]1) ⊔ M_22(κ)."""
    return (
        2 * M(kappa, (2, 4))
        + M(kappa, (), parse_compact_word("[3][3]1"))
        + M(kappa, (2, 2))
    )


def build_XY(kappa, position: int = 10, reading: str = "definition") -> dict[int, XYSplit]:
    """Split X(κ) and Y(κ) by the letters at ``position - 1`` and ``position``.

    A word goes to the ``<`` part for t when y_{p-1} < y_p = t and to the
    ``≥`` part when y_{p-1} >= y_p = t.  The default p = 10 is the one the
    inequalities are stated for; smaller positions are allowed so that the
    counterexample at size 9 can be reproduced.
    """
    kappa = tuple(kappa)
    if position < 2:
        raise ValueError("position must be at least 2")
    if sum(kappa) < position:
        raise ValueError(f"need |κ| >= {position}")
    x, y = build_X(kappa, reading), build_Y(kappa)
    p = position - 1

    def part(ms, t, less):
        return ms.filter(lambda w: w[p] == t and ((w[p - 1] < t) == less))

    return {
        t: XYSplit(t, part(x, t, True), part(x, t, False), part(y, t, True), part(y, t, False))
        for t in range(1, len(kappa) + 1)
    }


# ---------------------------------------------------------------------------
# the size-10 check against the transcribed table


def load_fixture(path: str | Path | None = None) -> dict:
    if path is None:
        text = resources.files("chromsym").joinpath("data/size10_table.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return json.loads(text)


@dataclass
class Size10Check:
    """Outcome of the size-10 check.

    ``failures`` and ``nonempty`` are keyed by X reading.  The table is
    compared against the ``"table"`` reading; ``definition_gap`` lists the
    records where the two readings differ.
    """

    failures: dict = field(default_factory=dict)
    nonempty: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    fixture_mismatches: list = field(default_factory=list)
    definition_gap: list = field(default_factory=list)
    sharpness: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values()) and not self.fixture_mismatches


def _size10_row(mu):
    return mu, {r: build_XY(mu, reading=r) for r in X_READINGS}


def _words(texts, aliases) -> set:
    return {parse_compact_word(w, aliases) for w in texts}


def _compare_record(rec, s: XYSplit, aliases) -> list:
    mu, t = tuple(rec["mu"]), rec["t"]
    out = []
    for key, ms, exact in (
        ("X_lt", s.X_lt, True),
        ("X_ge", s.X_ge, True),
        ("Y_lt_min", s.Y_lt, False),
        ("Y_ge_min", s.Y_ge, False),
    ):
        printed = Fraction(rec[key])
        if (ms.norm() != printed) if exact else (ms.norm() < printed):
            out.append((mu, t, key, printed, ms.norm()))
        listed = _words(rec[key.replace("_min", "") + "_words"], aliases)
        if exact:
            if listed != ms.support():
                out.append((mu, t, key + " words", sorted(listed), sorted(ms.support())))
        elif not listed <= ms.support():
            out.append((mu, t, key + " words", sorted(listed - ms.support())))
        elif sum((ms[w] for w in listed), Fraction(0)) != printed:
            out.append((mu, t, key + " listed sum", printed, sum((ms[w] for w in listed), Fraction(0))))
    return out


def verify_size10_table(fixture: dict | None = None, workers: int = 1) -> Size10Check:
    """Both inequalities for every μ ⊢ 10, every letter and both X readings,
    plus the comparison with the transcribed table."""
    fixture = fixture if fixture is not None else load_fixture()
    aliases = fixture["aliases"]
    res = Size10Check(failures={r: [] for r in X_READINGS}, nonempty={r: [] for r in X_READINGS})
    computed = {}
    for mu, by_reading in pmap(_size10_row, partitions(10), workers):
        computed[mu] = by_reading
        for reading, splits in by_reading.items():
            letters = []
            for t, s in splits.items():
                norms = s.norms()
                if not s.inequalities_hold():
                    res.failures[reading].append((mu, t, norms))
                if norms["X_lt"] or norms["X_ge"]:
                    letters.append(t)
                if reading == "definition" and any(norms.values()):
                    res.rows.append((mu, t, norms))
            if letters:
                res.nonempty[reading].append((mu, letters))

    expected = {tuple(c["mu"]): c["T"] for c in fixture["contents"]}
    for reading in X_READINGS:
        got = dict(res.nonempty[reading])
        if expected != got:
            res.fixture_mismatches.append(("contents", reading, expected, got))
    for rec in fixture["records"]:
        mu, t = tuple(rec["mu"]), rec["t"]
        res.fixture_mismatches.extend(_compare_record(rec, computed[mu]["table"][t], aliases))
        d, tb = computed[mu]["definition"][t], computed[mu]["table"][t]
        if d.norms() != tb.norms():
            res.definition_gap.append((mu, t, d.norms(), tb.norms()))

    sharp = fixture.get("sharpness")
    if sharp:
        s = build_XY(tuple(sharp["kappa"]), sharp["position"])[sharp["t"]]
        res.sharpness = {
            "kappa": tuple(sharp["kappa"]),
            "t": sharp["t"],
            "X_lt": s.X_lt.norm(),
            "Y_lt": s.Y_lt.norm(),
            "X_lt_words": sorted(s.X_lt.support()),
            "Y_lt_words": sorted(s.Y_lt.support()),
        }
        if (
            s.X_lt.norm() != Fraction(sharp["X_lt"])
            or s.Y_lt.norm() != Fraction(sharp["Y_lt"])
            or s.X_lt.support() != _words(sharp["X_lt_words"], aliases)
            or s.Y_lt.support() != _words(sharp["Y_lt_words"], aliases)
        ):
            res.fixture_mismatches.append(("sharpness", res.sharpness))
    return res


# ---------------------------------------------------------------------------
# spiders S(a, b, 1)


@dataclass
class SpiderResult:
    a: int
    b: int
    n: int
    klass: str
    witness: tuple | None
    bound_failures: list = field(default_factory=list)
    reconstruction_ok: bool = True

    @property
    def schur_positive(self) -> bool:
        return self.klass != "not-schur-positive"

    @property
    def ok(self) -> bool:
        return self.schur_positive and not self.bound_failures and self.reconstruction_ok


def verify_spider_schur(
    a: int, b: int, max_n: int = 20, max_edges: int = DEFAULT_MAX_EDGES, workers: int = 1
) -> SpiderResult:
    """Schur positivity of S(a, b, 1) by direct expansion.

    Also checks X = e_1 D_{n-1,b} + E_{n,b+1} against the graph oracle.  For
    b = 2 every κ must satisfy [s_κ]E_{n,3} >= ‖M_2‖ - ½‖M_3‖ >= 0, the
    chain behind the general statement.
    """
    if a < b:
        raise ValueError("need a >= b")
    n = a + b + 2
    if n > max_n:
        raise CapExceeded(f"S({a},{b},1) has {n} vertices, above the cap of {max_n}", 2 ** (n - 1))
    oracle = csf_powersum(spider((a, b, 1)), max_edges=max_edges, workers=workers)
    report = sym.positivity_report(oracle)
    witness = None
    if report.witness_index is not None:
        witness = (report.witness_basis, report.witness_index, report.witness_value)
    res = SpiderResult(a, b, n, report.klass, witness)

    e1 = sym.SymElement.basis_element("e", (1,))
    rebuilt = sym.multiply(e1, d_commutative(n - 1, b)) + e_commutative(n, b + 1)
    res.reconstruction_ok = rebuilt == report.e_expansion

    if b == 2:
        e3 = e_schur_ground_truth(n, 3)
        for kappa, lower in pmap(_spider_bound_row, partitions(n), workers):
            coeff = e3[kappa]
            if not coeff >= lower >= 0:
                res.bound_failures.append((kappa, coeff, lower))
    return res


def _spider_bound_row(kappa):
    return kappa, norm_M(kappa, (2,)) - HALF * norm_M(kappa, (3,))


def content_is_partition(word) -> bool:
    c = word_content(word)
    return all(x >= y for x, y in zip(c, c[1:]))


def e_n_k_schur(n: int, k: int) -> sym.SymElement:
    return e_schur_ground_truth(n, k)


def path_schur(n: int) -> sym.SymElement:
    return sym.to_schur_coeffs(path_csf(n))
