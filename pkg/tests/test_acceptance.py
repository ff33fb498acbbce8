"""Acceptance suite: one PASS/FAIL line per criterion, printed to the terminal."""

import io
import os
import random
import subprocess
import sys
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

import pytest

from tamequiver.an import all_intervals, an_generic, an_generic_lss, an_hom_dim
from tamequiver.cli import run
from tamequiver.io import fixture, fixture_path
from tamequiver.quiver import euler_form
from tamequiver.regular import (
    CanonicalDecomp,
    canonical_decomposition,
    regular_simples,
    vsum,
)
from tamequiver.repcore import (
    ext_dim,
    hom_dim,
    interval_rep,
    is_schurian,
    sample_schurian,
)
from tamequiver.siring import SYZYGY, ring_report
from tamequiver.slice import canonical_slice, dv_map, tame_generic, tame_generic_lss

from .conftest import E6_ALPHA, E6_DELTA, E6_SIMPLES, lin


@pytest.fixture
def verdict(capsys):
    """Print a PASS/FAIL line for the criterion, then let any failure propagate."""

    def run_check(number, title, check):
        try:
            detail = check()
        except BaseException as exc:
            with capsys.disabled():
                print(f"\nFAIL criterion {number}: {title}: {type(exc).__name__}: {exc}")
            raise
        with capsys.disabled():
            suffix = f" ({detail})" if detail else ""
            print(f"\nPASS criterion {number}: {title}{suffix}")

    return run_check


def _ms(*pairs):
    c = Counter()
    for m, r in pairs:
        c[r] += m
    return c


def test_criterion_1_e6_end_to_end(verdict):
    def check():
        start = time.perf_counter()
        q = fixture("e6t")
        rs = regular_simples(q)
        canon = canonical_decomposition(q, E6_ALPHA, rs)
        generic = tame_generic(q, E6_ALPHA, rs)
        lss = tame_generic_lss(q, E6_ALPHA, rs)
        elapsed = time.perf_counter() - start

        e = E6_SIMPLES
        idx = {k: rs.simples.index(v) for k, v in e.items()}
        assert rs.delta == E6_DELTA
        assert set(rs.simples) == set(e.values()) and len(rs.simples) == 8
        for chain in ((3, 2, 1), (6, 5, 4), (8, 7)):
            for a, b in zip(chain, chain[1:] + chain[:1]):
                assert rs.next[idx[a]] == idx[b]
        assert canon.p == 2
        assert {rs.simples[i]: c for i, c in enumerate(canon.coeffs) if c} == {
            e[1]: 3,
            e[2]: 2,
            e[5]: 2,
            e[6]: 2,
            e[8]: 1,
        }
        e12 = lin((1, e[1]), (1, e[2]))
        e56 = lin((1, e[5]), (1, e[6]))
        assert generic.as_counter() == _ms((2, E6_DELTA), (2, e12), (1, e[1]), (2, e56), (1, e[8]))
        assert lss.as_counter() == _ms((2, E6_DELTA), (3, e[1]), (2, e[2]), (2, e56), (1, e[8]))
        assert elapsed < 1.0, f"took {elapsed:.3f} s"
        return f"{elapsed:.3f} s"

    verdict(1, "E6-tilde end-to-end", check)


def test_criterion_2_a2_slice_pieces(verdict):
    def check():
        assert {tuple(iv): m for iv, m in an_generic((2, 3)).terms} == {(1, 2): 2, (2, 2): 1}
        assert {tuple(iv): m for iv, m in an_generic_lss((2, 3)).terms} == {(1, 1): 2, (2, 2): 3}
        assert {tuple(iv): m for iv, m in an_generic_lss((2, 2)).terms} == {(1, 2): 2}

    verdict(2, "A_2 slice pieces", check)


def test_criterion_3_hom_formula_vs_oracle(verdict):
    def check():
        start = time.perf_counter()
        pairs = 0
        for n in range(1, 7):
            reps = {iv: interval_rep(n, iv) for iv in all_intervals(n)}
            for a, ra in reps.items():
                for b, rb in reps.items():
                    pairs += 1
                    assert an_hom_dim(n, a, b) == hom_dim(ra, rb), (n, a, b)
        elapsed = time.perf_counter() - start
        assert elapsed < 10.0, f"took {elapsed:.3f} s"
        return f"{pairs} pairs, {elapsed:.3f} s"

    verdict(3, "A_n Hom formula against linear algebra", check)


STANDARD = ("a2t", "a3t", "a4t", "d4t", "d5t", "e6t", "e7t", "e8t")


def test_criterion_4_regular_structure(verdict):
    def check():
        sizes = []
        for name in STANDARD:
            q = fixture(name)
            rs = regular_simples(q)
            for orb in rs.orbits:
                assert vsum(rs.simples[i] for i in orb) == rs.delta, name
            assert len(rs.simples) == (q.n_vertices - 1) + rs.n_o - 1, name
            assert rs.n_o <= 3, name
            sizes.append(f"{name}:{len(rs.simples)}/{rs.n_o}")
        return " ".join(sizes)

    verdict(4, "regular-structure invariants", check)


def test_criterion_5_eq_arrows(verdict):
    def check():
        for name, seed in (("e6t", 1), ("d4t", 1)):
            q = fixture(name)
            rs = regular_simples(q)
            reps = [sample_schurian(q, e, seed + i) for i, e in enumerate(rs.simples)]
            for i, u in enumerate(reps):
                for j, v in enumerate(reps):
                    assert hom_dim(u, v) == int(i == j), (name, i, j)
                    assert ext_dim(u, v) == int(rs.next[i] == j), (name, i, j)

    verdict(5, "E(Q) arrows from sampled regular simples", check)


FIVE_TYPES = ("a3t", "d4t", "e6t", "e7t", "e8t")


def test_criterion_6_ring_classification(verdict):
    def check():
        for name in FIVE_TYPES:
            q = fixture(name)
            rs = regular_simples(q)
            n = q.n_vertices - 1
            r = ring_report(q, rs.delta, rs)
            if rs.n_o == 3:
                assert r.case == "hypersurface", name
                assert len(r.generators) == r.krull_dim + 1, name
                assert r.syzygy == SYZYGY, name
            else:
                assert r.case == "polynomial", name
                assert len(r.generators) == r.krull_dim, name
            r = ring_report(q, tuple(3 * d for d in rs.delta), rs)
            assert r.case == "polynomial", name
            assert len(r.generators) == len(rs.simples) + max(4 - rs.n_o, 0), name
            assert r.krull_dim == n + 3, name
        r = ring_report(fixture("e6t"), E6_ALPHA)
        assert r.case == "polynomial" and r.krull_dim == 4 == (6 + 2) - 4
        assert len(r.generators) == r.krull_dim

    verdict(6, "ring classification", check)


def _fixture_alphas(name, rs):
    rng = random.Random(name)
    out = [rs.delta, tuple(2 * d for d in rs.delta)]
    if name == "e6t":
        out.append(E6_ALPHA)
    for _ in range(6):
        coeffs = [0] * len(rs.simples)
        for orb in rs.orbits:
            zero = rng.choice(orb)
            for i in orb:
                coeffs[i] = 0 if i == zero else rng.randint(0, 3)
        out.append(CanonicalDecomp(rng.randint(0, 2), tuple(coeffs)).total(rs))
    return out


def test_criterion_7_isometry_and_schur_roots(verdict):
    def check():
        local_quivers = 0
        sampled = 0
        for name in STANDARD:
            q = fixture(name)
            rs = regular_simples(q)
            for alpha in _fixture_alphas(name, rs):
                lq = canonical_slice(q, alpha, rs).lq
                local_quivers += 1
                m = lq.quiver.n_vertices
                for i in range(m):
                    for j in range(m):
                        ei, ej = lq.quiver.basis(i), lq.quiver.basis(j)
                        assert euler_form(q, dv_map(lq, ei), dv_map(lq, ej)) == euler_form(lq.quiver, ei, ej)
                roots = set()
                for pipeline in (tame_generic, tame_generic_lss):
                    roots |= {t.root for t in pipeline(q, alpha, rs).real_terms()}
                for k, root in enumerate(sorted(roots)):
                    assert is_schurian(sample_schurian(q, root, 1000 + k)), (name, root)
                    sampled += 1
        return f"{local_quivers} local quivers, {sampled} real roots sampled"

    verdict(7, "isometry and Schur-root property suites", check)


def _corpus():
    e6 = str(fixture_path("e6t"))
    d4 = str(fixture_path("d4t"))
    alpha = ",".join(map(str, E6_ALPHA))
    delta = ",".join(map(str, E6_DELTA))
    calls = []
    for j in ([], ["--json"]):
        calls += [
            ["info", *j, e6],
            ["delta", *j, e6],
            ["regular", *j, e6],
            ["regular", *j, d4],
            ["decomp", "--kind", "canonical", *j, e6, alpha],
            ["decomp", "--kind", "generic", *j, e6, alpha],
            ["decomp", "--kind", "lss", *j, e6, alpha],
            ["an", "--kind", "generic", *j, "2,1,2"],
            ["an", "--kind", "lss", *j, "2,1,2"],
            ["siring", *j, e6, alpha],
            ["siring", *j, e6, delta],
            ["oracle", "verify-an", "--n", "4", *j],
            ["oracle", "verify-eq", e6, "--seed", "1", *j],
        ]
    calls.append(["decomp", "--kind", "canonical", e6, "1,0,0,0,0,0,0"])
    return calls


def _in_process(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def _subprocess(argv, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    proc = subprocess.run(
        [sys.executable, "-m", "tamequiver.cli", *argv], capture_output=True, env=env, check=False
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_8_determinism(verdict):
    def check():
        calls = _corpus()
        serial = [_in_process(a) for a in calls]
        for workers in (2, 8):
            with ThreadPoolExecutor(max_workers=workers) as pool:
                assert list(pool.map(_in_process, calls)) == serial
        first = [_subprocess(a, 1) for a in calls]
        second = [_subprocess(a, 2) for a in calls]
        assert first == second
        for (code, out, _), (pcode, pout, _) in zip(serial, first):
            assert code == pcode and out.encode() == pout
        return f"{len(calls)} invocations"

    verdict(8, "byte-identical CLI output across runs and threads", check)
