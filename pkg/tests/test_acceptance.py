"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its wall time and
budget; the lines are repeated in the pytest terminal summary.  Run alone with
``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

import time
from contextlib import contextmanager

import pytest

from chromsym import nsym, sym
from chromsym.analogs import (
    PathAnalog,
    a_tilde,
    b_tilde,
    composition_product_closed_forms,
    composition_product_sums,
    d_tilde,
    path_difference_check,
)
from chromsym.cli import main
from chromsym.combinatorics import partitions
from chromsym.graphs import csf_colorings, csf_powersum, path
from chromsym.sym import SymElement
from chromsym.yamanouchi import (
    build_XY,
    check_letter_move,
    check_shift_map,
    verify_size10_table,
    verify_spider_schur,
    verify_word_norm_coefficients,
)

RESULTS = []


@contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < budget
        status = "PASS" if ok and within else "FAIL"
        note = "" if within else "  (over budget)"
        line = f"{status} criterion {number:>2}: {title} [{elapsed:.2f}s / {budget:g}s]{note}"
        RESULTS.append(line)
        print(line)
    assert within, line


def test_01_claw_schur_expansion(capsys):
    with criterion(1, "claw Schur expansion", 1):
        code = main(["expand", "--graph", "spider:1,1,1", "--basis", "s"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.strip() == "s_31 - s_22 + 5s_211 + 8s_1111"


AB_TABLE = {
    2: ({(2,): 1}, {(2,): 2}),
    3: ({(3,): 2}, {(3,): 3}),
    4: ({(4,): 3, (2, 2): 1}, {(4,): 4, (2, 2): 2}),
    5: ({(5,): 4, (3, 2): 4}, {(5,): 5, (3, 2): 7}),
    6: ({(6,): 5, (4, 2): 6, (3, 3): 4, (2, 2, 2): 1}, {(6,): 6, (4, 2): 10, (3, 3): 6, (2, 2, 2): 2}),
}


def test_02_ab_tables():
    with criterion(2, "A/B tables for n = 2..6", 5):
        for n, (a_want, b_want) in AB_TABLE.items():
            assert sym.to_e_coeffs(nsym.project_rho(a_tilde(n))) == SymElement(n, "e", a_want)
            assert sym.to_e_coeffs(nsym.project_rho(b_tilde(n))) == SymElement(n, "e", b_want)


def test_03_three_path_forms():
    with criterion(3, "three path forms agree for n <= 10", 60):
        for n in range(1, 11):
            oracle = sym.to_monomials(csf_powersum(path(n)))
            analog = PathAnalog.build(n)
            assert analog.consistent_in_nsym()
            for proj in analog.projections().values():
                assert proj == oracle
            if n <= 7:
                assert csf_colorings(path(n)) == oracle


def test_04_closed_form_sums():
    with criterion(4, "closed-form composition sums for n <= 20", 1):
        for n in range(2, 21):
            assert composition_product_sums(n) == composition_product_closed_forms(n)


def test_05_d_positivity_and_sharpness():
    with criterion(5, "D Lambda-positivity, path e-positivity, sharpness", 60):
        for n in range(2, 11):
            for k in range(1, n):
                assert all(c > 0 for c in d_tilde(n, k).coeffs.values())
                assert path_difference_check(n, k).e_positive
        for k in range(1, 6):
            assert path_difference_check(2 * k, k).sharpness == -k


def test_06_word_norm_formula():
    with criterion(6, "word-norm Schur coefficients of E_{n,k}", 300):
        for n, k in [(6, 3), (8, 3), (10, 5), (11, 5)]:
            res = verify_word_norm_coefficients(n, k)
            assert res.ok, res.mismatches
            assert len(res.values) == len(partitions(n))


def test_07_letter_move_maps():
    with criterion(7, "letter-move multi-injections for sizes <= 9", 120):
        for n in range(1, 10):
            for kappa in partitions(n):
                for j in range(3, n):
                    assert check_shift_map(j, kappa).ok
                if n >= 6:
                    assert check_letter_move("bullet1", kappa).ok
                if n >= 7:
                    assert check_letter_move("bullet3", kappa).ok
                for z in range(4, n - 1):
                    assert check_letter_move("bullet2", kappa, z).ok


def test_08_size_ten_inequalities():
    with criterion(8, "size-10 inequalities and the transcribed table", 600):
        res = verify_size10_table()
        assert not any(res.failures.values())
        assert len(res.nonempty["table"]) == 27
        assert not res.fixture_mismatches, res.fixture_mismatches[:3]
        assert build_XY((5, 4, 1))[1].X_ge.norm() == 3
        s = build_XY((4, 3, 2), position=9)[2]
        assert (s.X_lt.norm(), s.Y_lt.norm()) == (6, 4)


def test_09_spider_positivity():
    with criterion(9, "S(a,2,1) and S(a,4,1) Schur positivity", 1800):
        e_pos = {2: set(), 4: set()}
        for b, rng in ((2, range(2, 15)), (4, range(4, 13))):
            for a in rng:
                res = verify_spider_schur(a, b)
                assert res.ok, (a, b, res)
                if res.klass == "e-positive":
                    e_pos[b].add(a)
        assert e_pos == {2: {3, 6}, 4: {5, 8, 10, 12}}


def test_10_thread_count_determinism(capsys):
    with criterion(10, "byte-identical JSON across thread counts", 1800):
        outputs = []
        for threads in ("1", "2"):
            code = main(["verify", "all", "--json", "--threads", threads])
            outputs.append(capsys.readouterr().out)
            assert code == 0
        assert outputs[0] == outputs[1]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
