import random
from fractions import Fraction as Q

import pytest

from conftest import one_gen_rep, projection_matrix
from tkkwb.jordan import truncated_poly
from tkkwb.jspace import (JSpaceRep, extend_to_g0, level, matrix_defining_rep,
                          newton_rep, regular_rep, zero_rep)
from tkkwb.linalg import LabeledSpace, Matrix, random_vector, zero_vector
from tkkwb.weyl import (NoncommutingPowersError, TruncatedVerma,
                        WindowError, apply_generator, bracket_fidelity,
                        dominance_sum_at, efr_power, efr_vanishes,
                        fpoly_equal, garland_coefficient, lowering_power,
                        snlt_oracle, weyl_dimensions)


def basis(n, i):
    v = zero_vector(n)
    v[i] = Q(1)
    return v


# ---------------------------------------------------------------------------
# cells


def test_cells_level0():
    r = zero_rep(truncated_poly(0))
    g0 = extend_to_g0(r)
    v = TruncatedVerma(g0, 0, 3)
    # depth-l cells at degree 0 are spanned by the l-th lowering power of 1
    for ell in range(4):
        assert v.cell_dim((ell, 0)) == 1


def test_cells_newton1():
    r = newton_rep(1, 3)
    v = TruncatedVerma(extend_to_g0(r), 3, 2)
    # at depth 1 and degree d: pairs (t^i, x^j) with i + j = d
    for d in range(4):
        assert v.cell_dim((1, d)) == d + 1
    # depth 0 reproduces the module
    for d in range(4):
        assert v.cell_dim((0, d)) == 1


def test_top_cells_match_module():
    r = newton_rep(2, 3)
    v = TruncatedVerma(extend_to_g0(r), 3, 2)
    for d in range(4):
        assert v.cell_dim((0, d)) == r.module.dim_at_degree(d)


def test_window_rejects_depth_zero():
    r = newton_rep(1, 2)
    with pytest.raises(WindowError):
        TruncatedVerma(extend_to_g0(r), 2, 0)


# ---------------------------------------------------------------------------
# single-generator actions


def test_lowering_insertion_commutes():
    r = newton_rep(1, 2)
    v = TruncatedVerma(extend_to_g0(r), 2, 3)
    vec = {(0, 0): basis(v.cell_dim((0, 0)), 0)}
    fa = apply_generator(v, vec, ("f", 1))
    fafb = apply_generator(v, fa, ("f", 0))
    fb = apply_generator(v, vec, ("f", 0))
    fbfa = apply_generator(v, fb, ("f", 1))
    assert fafb == fbfa


def test_raise_of_single_lowering_is_rho():
    # e(1) f(a) m = rho(a) m
    r = newton_rep(2, 2)
    g0 = extend_to_g0(r)
    v = TruncatedVerma(g0, 4, 2)
    rng = random.Random(1)
    d = r.jordan.dim
    for i in range(d):
        for mi in range(r.mdim):
            mdeg = r.module.degrees[mi]
            src = (0, mdeg)
            vec = {src: basis(v.cell_dim(src), v.cell_pos[src][((), mi)])}
            one_f = apply_generator(v, vec, ("f", i))
            back = apply_generator(v, one_f, ("e", 0))
            want_col = r.rho[i].col(mi)
            got = zero_vector(r.mdim)
            for cell, cv in back.items():
                ell, dd = cell
                assert ell == 0
                for (fkey, mj), pos in v.cell_pos[cell].items():
                    if cv[pos]:
                        assert fkey == ()
                        got[mj] = got[mj] + cv[pos]
            assert got == want_col


def test_weight_zero_action_on_lowering():
    # h(a) f(b) m = f(b) rho(a) m - 2 f(ab) m
    r = newton_rep(1, 3)
    g0 = extend_to_g0(r)
    v = TruncatedVerma(g0, 3, 2)
    src = (0, 0)
    vec = {src: basis(v.cell_dim(src), 0)}  # the constant of the module
    fb = apply_generator(v, vec, ("f", 1))      # f(t) m
    hfb = apply_generator(v, fb, ("h", 1))      # h(t) f(t) m
    # expected: f(t) rho(t) m - 2 f(t^2) m, both in cell (1, 2)
    cell = (1, 2)
    expect = zero_vector(v.cell_dim(cell))
    mi_x = r.module.labels.index("m[1]")
    expect[v.cell_pos[cell][((1,), mi_x)]] += 1
    expect[v.cell_pos[cell][((2,), 0)]] -= 2
    assert hfb == {cell: expect}


def test_apply_generator_out_of_window():
    r = newton_rep(1, 1)
    v = TruncatedVerma(extend_to_g0(r), 1, 1)
    top = {(2, 0): basis(v.cell_dim((2, 0)), 0)}
    with pytest.raises(WindowError):
        apply_generator(v, top, ("f", 0))


# ---------------------------------------------------------------------------
# contraction operators: straightening vs generating function


def test_efr_level0():
    r = zero_rep(truncated_poly(1))
    rng = random.Random(0)
    a = random_vector(rng, 2)
    assert efr_power(r, a, 1).is_zero()


def test_efr_level0_single_step_is_rho():
    # e(1) f(a) m = rho(a) m even when the level-0 action is nonzero
    r = one_gen_rep(0, projection_matrix(), "nonzero level 0")
    rng = random.Random(2)
    for _ in range(3):
        a = random_vector(rng, 2)
        assert efr_power(r, a, 1) == r.rho_of(a)


def test_efr_level1_formula():
    # e(1)^2 f(a)^2 = 2 (rho(a)^2 - rho(a^2))
    r = regular_rep(truncated_poly(2))
    g0 = extend_to_g0(r)
    rng = random.Random(3)
    from tkkwb.jordan import jpower
    for _ in range(3):
        a = random_vector(rng, 3)
        got = efr_power(g0, a, 2)
        ra = r.rho_of(a)
        ra2 = r.rho_of(jpower(r.jordan, a, 2))
        assert got == (ra @ ra - ra2).scale(2)


def test_efr_intermediate_depth_hand():
    # e(1) f(a)^2 m = 2 f(a) rho(a) m - 2 f(a^2) m, for a = t
    r = regular_rep(truncated_poly(2))
    g0 = extend_to_g0(r)
    a = basis(3, 1)
    got = efr_power(g0, a, 1)
    ident = Matrix.identity(3)
    want = {(1,): r.rho[1].scale(2), (2,): ident.scale(-2)}
    assert fpoly_equal(got, want)


def test_garland_rr_is_depth_hand():
    r = regular_rep(truncated_poly(2))
    g0 = extend_to_g0(r)
    a = basis(3, 1)
    got = garland_coefficient(g0, a, 1)
    want = {(1,): r.rho[1].scale(2), (2,): Matrix.identity(3).scale(-2)}
    assert fpoly_equal(got, want)
    # rr = n+1 = 2: 2 (rho(a)^2 - rho(a^2))
    top = garland_coefficient(g0, a, 2)
    ra = r.rho[1]
    ra2 = r.rho[2]
    assert top == (ra @ ra - ra2).scale(2)


def test_lowering_power_multinomial():
    r = regular_rep(truncated_poly(1))
    g0 = extend_to_g0(r)
    a = [Q(2), Q(3)]
    fp = lowering_power(g0, a, 2)
    # (2 f0 + 3 f1)^2 = 4 f0^2 + 12 f0 f1 + 9 f1^2
    assert fp[(0, 0)] == Matrix.identity(2).scale(Q(4))
    assert fp[(0, 1)] == Matrix.identity(2).scale(Q(12))
    assert fp[(1, 1)] == Matrix.identity(2).scale(Q(9))


@pytest.mark.parametrize("make_rep,n", [
    (lambda: regular_rep(truncated_poly(2)), 1),
    (lambda: matrix_defining_rep(2), 1),
    (lambda: newton_rep(2, 2), 2),
    (lambda: newton_rep(3, 2), 3),
])
def test_garland_matches_straightening(make_rep, n):
    r = make_rep()
    g0 = extend_to_g0(r)
    rng = random.Random(17)
    for _ in range(2):
        a = random_vector(rng, r.jordan.dim, num_bound=5, den_bound=3)
        for rr in sorted({0, 1, n, n + 1}):
            direct = efr_power(g0, a, rr)
            series = garland_coefficient(g0, a, rr)
            if rr == n + 1:
                assert direct == series
            else:
                assert fpoly_equal(direct, series)


def test_efr_equals_scaled_dominance_sum(instances):
    rng = random.Random(23)
    for name, rep, _ in instances:
        if level(rep) > 3 or rep.mdim > 12:
            continue
        g0 = extend_to_g0(rep)
        a = random_vector(rng, rep.jordan.dim, num_bound=4, den_bound=2)
        got = efr_power(g0, a, level(rep) + 1)
        want = dominance_sum_at(rep, a)
        assert got == want, name


def test_windowed_chain_matches_windowfree_contraction():
    # drive f then e generator-by-generator through the cells and compare
    # with the formal-lowering-polynomial engine; the two share only the
    # precomputed bracket data
    from tkkwb.jspace import level as _level
    r = newton_rep(2, 2)
    g0 = extend_to_g0(r)
    n = _level(r)
    v = TruncatedVerma(g0, 6, 3)  # wide enough that nothing truncates
    for mi in range(r.mdim):
        mdeg = r.module.degrees[mi]
        src = (0, mdeg)
        vec = {src: zero_vector(v.cell_dim(src))}
        vec[src][v.cell_pos[src][((), mi)]] = Q(1)
        cur = vec
        for _ in range(n + 1):
            cur = apply_generator(v, cur, ("f", 1))
        for _ in range(n + 1):
            cur = apply_generator(v, cur, ("e", 0))
        got = zero_vector(r.mdim)
        for cell, cv in cur.items():
            for (fkey, mj), pos in v.cell_pos[cell].items():
                if cv[pos]:
                    assert fkey == ()
                    got[mj] += cv[pos]
        a = zero_vector(r.jordan.dim)
        a[1] = Q(1)
        assert got == efr_power(g0, a, n + 1).col(mi)


def test_noncommuting_powers_diagnostic():
    J = truncated_poly(2, graded=False)
    module = LabeledSpace(("a", "b"), (0, 0))
    A = Matrix.from_rows([[Q(0), Q(1)], [Q(0), Q(0)]])
    B = Matrix.from_rows([[Q(0), Q(0)], [Q(1), Q(0)]])
    r = JSpaceRep(J, module, [Matrix.identity(2), A, B], name="noncommuting")
    g0 = G0_no_checks(r)
    with pytest.raises(NoncommutingPowersError):
        garland_coefficient(g0, basis(3, 1), 2)


def G0_no_checks(rep):
    # the diagnostic under test fires before any brace data is used
    from tkkwb.jspace import G0Rep
    from tkkwb.tkk import build_sl2
    ext = build_sl2(rep.jordan)
    mats = [Matrix.zeros(rep.mdim, rep.mdim) for _ in range(ext.tail_dim)]
    from tkkwb.report import Report
    return G0Rep(rep, ext, mats, Report("unchecked"))


def test_level_four_instance():
    # one notch past the acceptance band: partitions of 5 drive the sums
    r = newton_rep(4, 2)
    from tkkwb.jspace import check_jspace, dominance_check
    assert check_jspace(r).ok
    assert dominance_check(r).ok
    assert efr_vanishes(r, mode="symbolic")[0]


def test_efr_vanishes_modes_agree():
    good = newton_rep(2, 2)
    assert efr_vanishes(good, mode="symbolic")[0]
    assert efr_vanishes(good, mode="random", samples=4, seed=0)[0]
    bad = one_gen_rep(1, projection_matrix(), "ctl")
    assert not efr_vanishes(bad, mode="symbolic")[0]
    ok, witness = efr_vanishes(bad, mode="random", samples=8, seed=0)
    assert not ok and witness is not None


# ---------------------------------------------------------------------------
# dimension tables


def test_snlt_oracle_values():
    t = snlt_oracle(2, 3)
    # two symbols of opposite sign with degrees summing to 1
    assert t.dim(0, 1) == 2
    # all-plus at degree zero is unique, for every n
    for n in (1, 2, 3):
        assert snlt_oracle(n, 2).dim(n, 0) == 1
    # level 1 is the natural current module: one dimension everywhere
    t1 = snlt_oracle(1, 4)
    for d in range(5):
        assert t1.dim(1, d) == 1 and t1.dim(-1, d) == 1


def test_weyl_zero_rep_is_module():
    r = zero_rep(truncated_poly(0))
    table = weyl_dimensions(r, 0)
    assert table.dims == {(0, 0): 1}
    assert table.meta["stable"] and table.meta["certificate_ok"]


def test_weyl_matches_oracle_small():
    for n, D in ((1, 3), (2, 2)):
        table = weyl_dimensions(newton_rep(n, D), D)
        oracle = snlt_oracle(n, D)
        assert table == oracle, table.diff(oracle)
        assert table.meta["stable"]
        assert table.meta["certificate_ok"]
        assert table.meta["top_weight_preserved"]


def test_weyl_top_row_is_module_dims():
    r = newton_rep(2, 3)
    table = weyl_dimensions(r, 3)
    for d in range(4):
        assert table.dim(2, d) == r.module.dim_at_degree(d)


def test_weyl_nondominant_flagged():
    bad = one_gen_rep(1, projection_matrix(), "ctl")
    table = weyl_dimensions(bad, 0)
    assert table.meta["dominant_checked"] is False
    # the quotient collapses the module where the control fails
    assert table.meta["stable"]


def test_weyl_deterministic_across_workers(monkeypatch):
    r = newton_rep(2, 2)
    monkeypatch.delenv("TKKWB_THREADS", raising=False)
    t1 = weyl_dimensions(r, 2)
    monkeypatch.setenv("TKKWB_THREADS", "4")
    t4 = weyl_dimensions(r, 2)
    monkeypatch.setenv("TKKWB_THREADS", "2")
    t2 = weyl_dimensions(r, 2)
    assert t1.dims == t4.dims == t2.dims
    assert t1.meta == t4.meta == t2.meta
    assert t1.to_csv_lines() == t4.to_csv_lines()


def test_weyl_insensitive_to_window_depth():
    r = newton_rep(2, 3)
    base = weyl_dimensions(r, 3)  # default depth
    for W in (1, 2, 6):
        other = weyl_dimensions(r, 3, W=W)
        assert other.dims == base.dims
        assert other.meta["stable"] and other.meta["certificate_ok"]


def test_weyl_table_export():
    table = weyl_dimensions(newton_rep(1, 2), 2)
    csv = table.to_csv_lines()
    assert csv[0] == "weight,degree,dim"
    assert len(csv) == 1 + len(table.dims)
    data = table.to_json_dict()
    assert data["level"] == 1 and data["max_degree"] == 2
    assert all(len(row) == 3 for row in data["dims"])


def test_bracket_fidelity_commutative():
    v = TruncatedVerma(extend_to_g0(newton_rep(1, 2)), 2, 2)
    rep = bracket_fidelity(v)
    assert rep.ok, rep.first_failure()


def test_bracket_fidelity_with_braces():
    v = TruncatedVerma(extend_to_g0(matrix_defining_rep(2)), 0, 2)
    rep = bracket_fidelity(v)
    assert rep.ok, rep.first_failure()
