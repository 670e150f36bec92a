"""Exact coherence decisions: witnesses, refutations, solver agreement."""

import pytest

from circmdd import (
    UnsupportedArityError,
    build_coherent_mdd,
    build_network,
    distance_table,
    enumerate_mdds,
    is_coherent,
    validate_mdd,
)
from circmdd.coherence import _reduced_coords, _solve_fm, _solve_sweep2
from circmdd.intlin import dot, primitive, vec_sub


def non_coherent_example():
    net = build_network(8, [1, 3, 5, 7])
    cells = [
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (2, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 1),
        (0, 0, 1, 0),
        (0, 2, 0, 0),
        (0, 0, 0, 1),
    ]
    return net, validate_mdd(net, cells)


def check_witness(mdd, witness):
    table = distance_table(mdd.net)
    for i, chosen in enumerate(mdd.cells):
        for alt in table.minimal_paths[i]:
            if alt != chosen:
                assert dot(witness, alt) > dot(witness, chosen)


def test_non_coherent_example_refuted_via_the_forced_chain():
    net, mdd = non_coherent_example()
    result = is_coherent(mdd)
    assert not result.coherent
    assert result.witness is None
    refutation = result.refutation
    assert refutation
    # the refutation must include the vertex-4 preference that the two
    # squared choices force the other way
    vertices = {c.vertex for c in refutation}
    assert 4 in vertices
    v4 = next(c for c in refutation if c.vertex == 4)
    assert v4.chosen == (0, 0, 1, 1)
    assert v4.alternative == (1, 1, 0, 0)
    # irreducible: dropping any constraint makes the rest satisfiable
    dirs = [primitive(_reduced_coords(vec_sub(c.alternative, c.chosen))) for c in refutation]
    assert _solve_fm(sorted(set(dirs)), 3) is None
    for skip in range(len(dirs)):
        rest = sorted({d for i, d in enumerate(dirs) if i != skip})
        assert _solve_fm(rest, 3) is not None


def test_every_double_loop_diagram_is_coherent():
    for n, steps in [(10, [1, 6]), (9, [1, 4]), (17, [3, 5]), (30, [7, 11]), (6, [1, 3])]:
        net = build_network(n, steps)
        for mdd in enumerate_mdds(net).mdds:
            result = is_coherent(mdd)
            assert result.coherent
            check_witness(mdd, result.witness)


def test_weighted_build_is_coherent_and_witnessed():
    for n, steps, w in [
        (9, [1, 4, 7], (5, 1, 0)),
        (9, [1, 4], (1, 2)),
        (56, [9, 17, 33], (9, 2, 0)),
        (8, [1, 3, 5, 7], (11, 5, 2, 0)),
    ]:
        net = build_network(n, steps)
        mdd = build_coherent_mdd(net, w, tie_policy="lex")
        result = is_coherent(mdd)
        assert result.coherent
        check_witness(mdd, result.witness)


def test_nine_diagrams_of_c9_1_4_7_all_coherent():
    net = build_network(9, [1, 4, 7])
    mdds = enumerate_mdds(net).mdds
    assert len(mdds) == 9
    for mdd in mdds:
        assert is_coherent(mdd).coherent


def test_c8_1_3_5_7_coherent_count():
    net = build_network(8, [1, 3, 5, 7])
    mdds = enumerate_mdds(net).mdds
    flags = [is_coherent(m).coherent for m in mdds]
    assert len(mdds) == 18
    assert not all(flags)
    assert enumerate_mdds(net, "coherent_only").mdds == tuple(
        m for m, ok in zip(mdds, flags) if ok
    )


def test_argmin_invariance_under_scaling_and_shift():
    from fractions import Fraction

    net = build_network(9, [1, 4, 7])
    w = (7, 2, 0)
    base = build_coherent_mdd(net, w)
    shifted = tuple(Fraction(3, 2) * x + 5 for x in w)
    assert build_coherent_mdd(net, shifted).cells == base.cells


def test_unique_network_trivially_coherent():
    net = build_network(7, [1, 2, 4])
    mdd = enumerate_mdds(net).mdds[0]
    result = is_coherent(mdd)
    assert result.coherent and result.refutation is None


def test_coherence_arity_limit():
    net = build_network(11, [1, 2, 4, 7, 9])
    mdd = build_coherent_mdd(net, (16, 8, 4, 2, 0), tie_policy="lex")
    with pytest.raises(UnsupportedArityError):
        is_coherent(mdd)


def test_sweep_and_elimination_agree_on_plane_systems():
    import random

    rng = random.Random(99)
    for _ in range(300):
        k = rng.randint(1, 6)
        cons = []
        while len(cons) < k:
            x, y = rng.randint(-5, 5), rng.randint(-5, 5)
            if x or y:
                cons.append(primitive((x, y)))
        cons = sorted(set(cons))
        sweep = _solve_sweep2(cons)
        fm = _solve_fm(cons, 2)
        assert (sweep is None) == (fm is None)
        if sweep is not None:
            assert all(c[0] * sweep[0] + c[1] * sweep[1] > 0 for c in cons)
            assert all(c[0] * fm[0] + c[1] * fm[1] > 0 for c in cons)


def test_staircase_generators_are_weight_leading_terms():
    # a weighted diagram's staircase generators g of minimal length are
    # beaten by the cell of their vertex: same vertex, same length,
    # strictly larger weight (the leading-term relation); longer
    # generators are beaten already by length
    from circmdd import staircase_generators, vertex_of

    for n, steps, w in [(9, [1, 4, 7], (7, 2, 0)), (10, [1, 6], (1, 2)),
                        (8, [2, 3, 7], (5, 3, 0)), (8, [1, 3, 5, 7], (11, 5, 2, 0))]:
        net = build_network(n, steps)
        mdd = build_coherent_mdd(net, w, tie_policy="lex")
        table = distance_table(net)
        for g in staircase_generators(mdd).generators:
            v = vertex_of(net, g)
            m = mdd.cells[v]
            assert sum(g) >= sum(m)
            if sum(g) == sum(m):
                assert dot(w, g) >= dot(w, m)
                if dot(w, g) == dot(w, m):
                    assert g > m  # lex refinement broke the tie


def test_triple_loop_coherence_matches_plane_solver():
    import random

    rng = random.Random(4242)
    from circmdd.errors import CircmddError

    tried = 0
    while tried < 12:
        n = rng.randint(5, 30)
        steps = rng.sample(range(1, n), min(3, n - 1))
        if len(steps) < 3:
            continue
        try:
            net = build_network(n, steps)
        except CircmddError:
            continue
        tried += 1
        for mdd in enumerate_mdds(net).mdds:
            result = is_coherent(mdd)
            dirs = set()
            table = distance_table(net)
            for i, chosen in enumerate(mdd.cells):
                for alt in table.minimal_paths[i]:
                    if alt != chosen:
                        dirs.add(primitive(_reduced_coords(vec_sub(alt, chosen))))
            fm = _solve_fm(sorted(dirs), 2) if dirs else ()
            assert result.coherent == (fm is not None)
