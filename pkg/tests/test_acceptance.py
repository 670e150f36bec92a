"""Acceptance suite: one test per stated criterion.

Each criterion runs through the public surface (CLI where the criterion
names a command), is checked exactly (no tolerances are needed, all
values are integers), enforces its wall-clock budget, and prints one
PASS/FAIL line.

Criterion 4 asserts the externally specified targets of 9 candidate
rays and 9 lifted diagrams for the C8(2,3,7) lattice. The verified
computation (exhaustive enumeration cross-checked against a dense
weight sweep and an oracle-checked routing table, see test_fan.py)
yields 8 for both, so that criterion is expected to fail; it is kept
as stated rather than weakened.
"""

import io
import json
import random
import time
from contextlib import contextmanager, redirect_stderr, redirect_stdout

import pytest

from circmdd import (
    SINGLE_NEGATIVE_SIGNS,
    OctantSemigroup,
    boundary_ray_minima,
    build_network,
    coherent_fan,
    distance_table,
    enumerate_mdds,
    hilbert_basis,
    homogeneous_lattice,
    is_coherent,
    is_unique_mdd,
    octant_points_bounded,
    staircase_generators,
)
from circmdd.cli import main
from circmdd.errors import CircmddError

from oracles import indecomposable_filter


_CAPTURE = None


@pytest.fixture(autouse=True)
def _expose_capture(capfd):
    global _CAPTURE
    _CAPTURE = capfd
    yield
    _CAPTURE = None


def _announce(line):
    # suspend capture so one line per criterion always reaches the terminal
    if _CAPTURE is not None:
        with _CAPTURE.disabled():
            print(line, flush=True)
    else:
        print(line, flush=True)


@contextmanager
def criterion(number, budget_seconds, description):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        _announce(f"ACCEPTANCE {number}: FAIL ({description})")
        raise
    elapsed = time.perf_counter() - start
    assert elapsed < budget_seconds, (
        f"criterion {number} took {elapsed:.2f}s, budget {budget_seconds}s"
    )
    _announce(f"ACCEPTANCE {number}: PASS ({description}) [{elapsed:.2f}s]")


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    assert code == 0, f"{argv} failed: {err.getvalue()}"
    return json.loads(out.getvalue())


def test_criterion_1_c9_1_4_7_nine_coherent_diagrams():
    with criterion(1, 1.0, "C9(1,4,7): 9 diagrams, all coherent"):
        doc = run_cli(["mdd", "enumerate", "9", "1,4,7"])
        assert doc["mdd_count"] == 9
        coherent = run_cli(["mdd", "enumerate", "9", "1,4,7", "--coherent-only"])
        assert coherent["mdd_count"] == 9


def test_criterion_2_c10_1_6_two_diagrams_144_routings():
    with criterion(2, 1.0, "C10(1,6): 2 diagrams, 144 routing choices"):
        doc = run_cli(["mdd", "enumerate", "10", "1,6"])
        assert doc["mdd_count"] == 2
        assert doc["routing_choice_count"] == 144


def test_criterion_3_c8_1_3_5_7_eighteen_and_non_coherent_image(tmp_path):
    with criterion(3, 1.0, "C8(1,3,5,7): 18 diagrams; stated image non-coherent"):
        doc = run_cli(["mdd", "enumerate", "8", "1,3,5,7"])
        assert doc["mdd_count"] == 18
        image_doc = {
            "network": {"n": 8, "steps": [1, 3, 5, 7]},
            "cells": [
                {"vertex": 0, "path": [0, 0, 0, 0]},
                {"vertex": 1, "path": [1, 0, 0, 0]},
                {"vertex": 2, "path": [2, 0, 0, 0]},
                {"vertex": 3, "path": [0, 1, 0, 0]},
                {"vertex": 4, "path": [0, 0, 1, 1]},
                {"vertex": 5, "path": [0, 0, 1, 0]},
                {"vertex": 6, "path": [0, 2, 0, 0]},
                {"vertex": 7, "path": [0, 0, 0, 1]},
            ],
        }
        path = tmp_path / "image.json"
        path.write_text(json.dumps(image_doc))
        checked = run_cli(["mdd", "check", str(path)])
        assert checked["valid"] is True
        assert checked["coherent"] is False
        assert checked["refutation"], "expected a refutation chain"
        assert any(entry["vertex"] == 4 for entry in checked["refutation"])


def test_criterion_4_c8_2_3_7_and_lift():
    with criterion(4, 5.0, "C8(2,3,7): 10 Hilbert, 9 rays, 2 diagrams; lift 9"):
        hil = run_cli(["lattice", "hilbert", "8", "2,3,7"])
        assert hil["total_elements"] == 10
        fan = run_cli(["fan", "8", "2,3,7"])
        assert fan["mdd_count"] == 2
        enum = run_cli(["mdd", "enumerate", "8", "2,3,7"])
        assert enum["mdd_count"] == 2
        lifted = run_cli(["fan", "72", "19,28,64"])
        assert len(fan["candidates"]) == 9, (
            f"stated target 9 candidate rays, computed {len(fan['candidates'])} "
            "(verified against exhaustive enumeration)"
        )
        assert lifted["mdd_count"] == 9, (
            f"stated target 9 lifted diagrams, computed {lifted['mdd_count']} "
            "(verified against exhaustive enumeration)"
        )


def test_criterion_5_family_q2():
    with criterion(5, 30.0, "family q=2: closed-form Hilbert, fan 12, brute force"):
        doc = run_cli(["family", "verify", "2"])
        assert doc["lifted_network"] == {"n": 56, "steps": [9, 17, 33]}
        assert all(check["match"] for check in doc["octant_checks"])
        assert all(len(check["actual"]) == 4 for check in doc["octant_checks"])
        assert doc["fan_mdd_count"] == 12
        assert doc["brute_force_coherent_count"] == 12
        assert doc["ok"] is True


def test_criterion_6_family_q5():
    with criterion(6, 120.0, "family q=5: 7 per octant, fan 21"):
        doc = run_cli(["family", "verify", "5"])
        assert doc["lifted_network"] == {"n": 992, "steps": [33, 161, 801]}
        assert all(check["match"] for check in doc["octant_checks"])
        assert all(len(check["actual"]) == 7 for check in doc["octant_checks"])
        assert doc["fan_mdd_count"] == 21
        assert doc["ok"] is True


def sample_double_loops(count, max_n, rng):
    """Valid double loops admitting a routing tie (hence two diagrams)."""
    nets = []
    seen = set()
    while len(nets) < count:
        n = rng.randint(5, max_n)
        steps = tuple(rng.sample(range(1, n), 2))
        if (n, steps) in seen:
            continue
        seen.add((n, steps))
        try:
            net = build_network(n, steps)
        except CircmddError:
            continue
        if any(len(p) > 1 for p in distance_table(net).minimal_paths):
            nets.append(net)
    return nets


def test_criterion_7_double_loop_property_suite():
    with criterion(7, 30.0, "50 random double loops: 2 coherent L-ish diagrams"):
        rng = random.Random(20260810)
        for net in sample_double_loops(50, 60, rng):
            mdds = enumerate_mdds(net).mdds
            assert len(mdds) == 2, f"{net} has {len(mdds)} diagrams"
            for mdd in mdds:
                assert is_coherent(mdd).coherent, f"{net} non-coherent diagram"
                gens = staircase_generators(mdd).generators
                assert len(gens) <= 3, f"{net} has {len(gens)} generators"


def sample_triple_loops(count, max_n, rng):
    nets = []
    seen = set()
    while len(nets) < count:
        n = rng.randint(4, max_n)
        if n < 4:
            continue
        steps = tuple(rng.sample(range(1, n), 3))
        if (n, steps) in seen:
            continue
        seen.add((n, steps))
        try:
            nets.append(build_network(n, steps))
        except CircmddError:
            continue
    return nets


def test_criterion_8_triple_loop_oracle_suite():
    with criterion(8, 120.0, "25 random triple loops: oracle agreement"):
        rng = random.Random(992)
        for net in sample_triple_loops(25, 40, rng):
            lat = homogeneous_lattice(net)
            mdds = enumerate_mdds(net).mdds
            # (a) uniqueness criterion matches the enumeration count
            assert is_unique_mdd(net) == (len(mdds) == 1), f"{net} uniqueness"
            # (b) fan count equals the brute-force coherent count
            coherent = sum(1 for m in mdds if is_coherent(m).coherent)
            assert coherent_fan(net).mdd_count == coherent, f"{net} fan count"
            # (c) Hilbert bases match the definition-based filter
            total = 0
            for signs in SINGLE_NEGATIVE_SIGNS:
                oct = OctantSemigroup(lat, signs)
                u, v = boundary_ray_minima(oct)
                bound = sum(map(abs, u)) + sum(map(abs, v))
                expected = indecomposable_filter(octant_points_bounded(oct, bound))
                actual = list(hilbert_basis(oct).elements)
                assert actual == expected, f"{net} Hilbert {signs}"
                total += len(actual)
            # (d) the Hilbert cardinality bound on coherent diagrams
            assert coherent <= total, f"{net} bound violated"


def test_criterion_9_c7_1_2_4_unique_with_clean_rejections():
    with criterion(9, 1.0, "C7(1,2,4): unique diagram, rejections at minimality"):
        doc = run_cli(["fan", "7", "1,2,4"])
        assert doc["walls"] == []
        assert doc["mdd_count"] == 1
        assert doc["candidates"], "expected screened candidates to exist"
        assert doc["rejections"]
        assert all(r["failed_condition"] == 1 for r in doc["rejections"])
        enum = run_cli(["mdd", "enumerate", "7", "1,2,4"])
        assert enum["mdd_count"] == 1
        assert is_unique_mdd(build_network(7, [1, 2, 4]))
