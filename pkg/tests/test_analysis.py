"""Analysis pipeline tests.

Oracles: an O(n^2) dominance scan for the Pareto frontier, two-pass
mean/std recomputation for bootstrap summaries, and a manual replay of the
sweep pipeline (derived seeds -> neighbourhood -> fit -> fresh eval) that the
one-call API must reproduce exactly.
"""

import numpy as np
import pytest

import surrscope as s
from surrscope import records
from surrscope.rng import derive_seed

FAST = dict(tol=1e-6, max_iter=1000)


def brute_force_frontier(points):
    """Indices of non-dominated points by direct pairwise comparison."""
    out = []
    for i, (ci, fi) in enumerate(points):
        dominated = any(
            (cj <= ci and fj >= fi) and (cj < ci or fj > fi)
            for j, (cj, fj) in enumerate(points) if j != i
        )
        if not dominated:
            out.append(i)
    return out


class TestParetoFrontier:
    def test_simple_chain(self):
        pts = [(1, 0.6), (2, 0.8), (3, 0.7), (4, 0.9)]
        f = s.pareto_frontier(pts)
        assert f.frontier_indices == [0, 1, 3]

    def test_single_point(self):
        assert s.pareto_frontier([(5, 0.5)]).frontier_indices == [0]

    def test_exact_ties_all_kept(self):
        pts = [(1, 0.8), (1, 0.8), (2, 0.7)]
        assert s.pareto_frontier(pts).frontier_indices == [0, 1]

    def test_tie_on_one_axis_dominates(self):
        pts = [(1, 0.8), (1, 0.7), (2, 0.9)]
        assert s.pareto_frontier(pts).frontier_indices == [0, 2]

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_brute_force(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 60))
        pts = [(float(rng.integers(0, 8)), float(rng.integers(0, 10)) / 10)
               for _ in range(n)]
        f = s.pareto_frontier(pts)
        assert f.frontier_indices == brute_force_frontier(pts)

    def test_tags_preserved(self):
        f = s.pareto_frontier([(1, 0.5, "stump"), (2, 0.9, "deep")])
        assert [p.tag for p in f.points] == ["stump", "deep"]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            s.pareto_frontier([])

    def test_codec_round_trip(self):
        f = s.pareto_frontier([(1, 0.5, "a"), (2, 0.9, None)])
        assert records.deserialize(records.serialize(f)) == f


class TestSignTransitions:
    def test_single_flip(self):
        radii = [0.1, 0.2, 0.3]
        coef = np.array([[1.0], [0.5], [-0.5]])
        out = s.sign_transitions(radii, coef)
        assert out == [s.SignTransition(feature=0, radius_interval=(0.2, 0.3))]

    def test_flip_spanning_zero_entries(self):
        radii = [0.1, 0.2, 0.3, 0.4]
        coef = np.array([[1.0], [1e-12], [0.0], [-2.0]])
        out = s.sign_transitions(radii, coef)
        assert out == [s.SignTransition(feature=0, radius_interval=(0.1, 0.4))]

    def test_no_flip_through_zero_return(self):
        coef = np.array([[1.0], [0.0], [2.0]])
        assert s.sign_transitions([0.1, 0.2, 0.3], coef) == []

    def test_multiple_features_and_flips(self):
        radii = [1.0, 2.0, 3.0]
        coef = np.array([[1.0, -1.0], [-1.0, -2.0], [1.0, 3.0]])
        out = s.sign_transitions(radii, coef)
        assert s.SignTransition(feature=0, radius_interval=(1.0, 2.0)) in out
        assert s.SignTransition(feature=0, radius_interval=(2.0, 3.0)) in out
        assert s.SignTransition(feature=1, radius_interval=(2.0, 3.0)) in out
        assert len(out) == 3

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            s.sign_transitions([0.1], np.zeros((2, 1)))


class TestCoverageSweep:
    def test_matches_manual_pipeline(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        sweep = s.coverage_sweep(moons_mlp, moons_instance, [0.4, 0.9], cfg,
                                 n_samples=256, seed=5)
        for i, radius in enumerate([0.4, 0.9]):
            spec = s.NeighbourhoodSpec(
                center=moons_instance, radius=radius, n_samples=256,
                seed=derive_seed(5, "sweep.neighbourhood", i))
            hood = s.build_neighbourhood(spec, moons_mlp)
            est = s.fit_surrogate(hood, cfg)
            X_eval = s.fresh_eval_set(spec, derive_seed(5, "sweep.eval", i))
            report = s.evaluate(est, moons_mlp, X_eval, "fresh_neighbourhood")
            entry = sweep.entries[i]
            assert entry.surrogate == s.summarize(est)
            assert entry.fidelity == report
            assert entry.complexity == s.complexity(est)

    def test_radius_prefix_stability(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        short = s.coverage_sweep(moons_mlp, moons_instance, [0.4, 0.9], cfg,
                                 n_samples=128, seed=1)
        long = s.coverage_sweep(moons_mlp, moons_instance, [0.4, 0.9, 1.5], cfg,
                                n_samples=128, seed=1)
        assert long.entries[:2] == short.entries

    def test_threads_do_not_change_bytes(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        kw = dict(n_samples=128, seed=3)
        one = s.coverage_sweep(moons_mlp, moons_instance,
                               [0.3, 0.6, 0.9, 1.2], cfg, threads=1, **kw)
        four = s.coverage_sweep(moons_mlp, moons_instance,
                                [0.3, 0.6, 0.9, 1.2], cfg, threads=4, **kw)
        assert records.serialize(one) == records.serialize(four)

    def test_progress_monotone_and_complete(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        seen = []
        s.coverage_sweep(moons_mlp, moons_instance, [0.3, 0.6, 0.9], cfg,
                         n_samples=64, seed=0, threads=2,
                         on_progress=lambda done, total: seen.append((done, total)))
        assert [d for d, _ in seen] == [1, 2, 3]
        assert all(t == 3 for _, t in seen)

    def test_tree_family_sweep(self, circles_mlp):
        inst = s.Instance(values=np.array([1.0, 0.0]))
        cfg = s.FitConfig(family="tree", max_depth=4)
        sweep = s.coverage_sweep(circles_mlp, inst, [0.2, 1.0], cfg,
                                 n_samples=256, seed=0)
        for entry in sweep.entries:
            assert isinstance(entry.surrogate, s.TreeFit)
            depth, leaves = entry.complexity
            assert depth <= 4 and leaves >= 1

    def test_degenerate_radius_flagged(self, moons_mlp, moons_instance):
        # a tiny ball far inside one class sees a single label
        cfg = s.FitConfig(family="logistic", **FAST)
        sweep = s.coverage_sweep(moons_mlp, moons_instance, [1e-6], cfg,
                                 n_samples=64, seed=0)
        entry = sweep.entries[0]
        assert entry.degenerate
        assert entry.fidelity.accuracy == 1.0

    def test_rejects_bad_radii(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        for bad in ([], [0.0, 0.5], [0.5, 0.5], [0.9, 0.3]):
            with pytest.raises(ValueError):
                s.coverage_sweep(moons_mlp, moons_instance, bad, cfg)

    def test_coefficient_matrix_shape(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        sweep = s.coverage_sweep(moons_mlp, moons_instance, [0.4, 0.9], cfg,
                                 n_samples=128, seed=0)
        m = s.sweep_coefficient_matrix(sweep)
        assert m.shape == (2, 2)
        np.testing.assert_array_equal(m[0], sweep.entries[0].surrogate.coefficients)


class TestExplainInstance:
    def test_matches_first_sweep_entry(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        entry = s.explain_instance(moons_mlp, moons_instance, 0.6, cfg,
                                   n_samples=128, seed=4)
        sweep = s.coverage_sweep(moons_mlp, moons_instance, [0.6, 1.2], cfg,
                                 n_samples=128, seed=4)
        assert records.serialize(entry) == records.serialize(sweep.entries[0])

    def test_radius_zero_gives_constant_model(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        entry = s.explain_instance(moons_mlp, moons_instance, 0.0, cfg,
                                   n_samples=64, seed=0)
        assert entry.degenerate
        np.testing.assert_array_equal(entry.surrogate.coefficients, np.zeros(2))
        assert entry.fidelity.accuracy == 1.0

    def test_rejects_negative_radius(self, moons_mlp, moons_instance):
        cfg = s.FitConfig(family="logistic", **FAST)
        with pytest.raises(ValueError, match="nonnegative"):
            s.explain_instance(moons_mlp, moons_instance, -0.5, cfg)


class TestBootstrap:
    CFG = None

    @classmethod
    def setup_class(cls):
        cls.CFG = s.FitConfig(family="logistic", **FAST)

    def test_summary_matches_two_pass_oracle(self, moons_mlp, moons_instance):
        reps = s.bootstrap_replicates(moons_mlp, moons_instance, 0.8, B=12,
                                      n=96, fit_config=self.CFG, seed=2,
                                      radius_index=0, eval_n=128)
        summaries = s.bootstrap_sweep(moons_mlp, moons_instance, [0.8], B=12,
                                      n=96, fit_config=self.CFG, seed=2,
                                      eval_n=128)
        summary = summaries[0]
        # two-pass oracle: explicit mean, then explicit squared deviations
        for got_mean, got_std, column in [
            (summary.accuracy_mean, summary.accuracy_std, reps.accuracies),
            (summary.coef_mean[0], summary.coef_std[0], reps.coefficients[:, 0]),
            (summary.coef_mean[1], summary.coef_std[1], reps.coefficients[:, 1]),
        ]:
            mean = sum(column) / len(column)
            var = sum((v - mean) ** 2 for v in column) / len(column)
            assert abs(got_mean - mean) <= 1e-12 * max(1.0, abs(mean))
            assert abs(got_std - np.sqrt(var)) <= 1e-12 * max(1.0, np.sqrt(var))
        assert summary.B == 12 and summary.n == 96
        assert summary.replicate_seeds == reps.replicate_seeds

    def test_zero_radius_exact_zero_spread(self, moons_mlp, moons_instance):
        summaries = s.bootstrap_sweep(moons_mlp, moons_instance, [0.0], B=8,
                                      n=32, fit_config=self.CFG, seed=0,
                                      eval_n=32)
        su = summaries[0]
        assert su.accuracy_std == 0.0
        np.testing.assert_array_equal(su.coef_std, np.zeros(2))

    def test_doubling_B_extends_prefix_bit_exactly(self, moons_mlp, moons_instance):
        kw = dict(n=64, fit_config=self.CFG, seed=7, radius_index=3, eval_n=64)
        small = s.bootstrap_replicates(moons_mlp, moons_instance, 0.7, B=6, **kw)
        big = s.bootstrap_replicates(moons_mlp, moons_instance, 0.7, B=12, **kw)
        np.testing.assert_array_equal(big.coefficients[:6], small.coefficients)
        np.testing.assert_array_equal(big.intercepts[:6], small.intercepts)
        np.testing.assert_array_equal(big.accuracies[:6], small.accuracies)
        assert big.replicate_seeds[:6] == small.replicate_seeds

    def test_replicates_share_one_eval_set(self, moons_mlp, moons_instance):
        # the shared eval draw depends on (seed, radius_index), not on B or n
        a = s.bootstrap_replicates(moons_mlp, moons_instance, 0.7, B=2, n=16,
                                   fit_config=self.CFG, seed=1, radius_index=2,
                                   eval_n=64)
        b = s.bootstrap_replicates(moons_mlp, moons_instance, 0.7, B=3, n=48,
                                   fit_config=self.CFG, seed=1, radius_index=2,
                                   eval_n=64)
        assert a.replicate_seeds[:2] == b.replicate_seeds[:2]

    def test_threads_do_not_change_bytes(self, moons_mlp, moons_instance):
        kw = dict(B=8, n=64, fit_config=self.CFG, seed=4, eval_n=64)
        one = s.bootstrap_sweep(moons_mlp, moons_instance, [0.4, 0.8],
                                threads=1, **kw)
        four = s.bootstrap_sweep(moons_mlp, moons_instance, [0.4, 0.8],
                                 threads=4, **kw)
        assert records.serialize(one) == records.serialize(four)

    def test_progress_counts_every_replicate(self, moons_mlp, moons_instance):
        seen = []
        s.bootstrap_sweep(moons_mlp, moons_instance, [0.4, 0.8], B=3, n=32,
                          fit_config=self.CFG, eval_n=32,
                          on_progress=lambda d, t: seen.append((d, t)))
        assert seen == [(i, 6) for i in range(1, 7)]

    def test_tree_family_rejected(self, moons_mlp, moons_instance):
        with pytest.raises(ValueError, match="linear"):
            s.bootstrap_replicates(moons_mlp, moons_instance, 0.5, B=2, n=16,
                                   fit_config=s.FitConfig(family="tree",
                                                          max_depth=2))

    def test_B_below_two_rejected(self, moons_mlp, moons_instance):
        with pytest.raises(ValueError):
            s.bootstrap_replicates(moons_mlp, moons_instance, 0.5, B=1, n=16,
                                   fit_config=self.CFG)

    def test_summary_codec_round_trip(self, moons_mlp, moons_instance):
        su = s.bootstrap_sweep(moons_mlp, moons_instance, [0.5], B=3, n=32,
                               fit_config=self.CFG, eval_n=32)[0]
        assert records.deserialize(records.serialize(su)) == su


class TestLassoPath:
    def test_default_grid(self):
        grid = s.default_C_grid()
        assert grid.shape == (40,)
        assert grid[0] == pytest.approx(1e-3) and grid[-1] == pytest.approx(1e3)
        assert np.all(np.diff(grid) > 0)

    def test_entries_follow_grid(self, moons_mlp, moons_instance):
        path = s.lasso_path(moons_mlp, moons_instance, 0.8,
                            C_grid=[0.01, 0.1, 1.0, 10.0], n_samples=256,
                            seed=0, **FAST)
        assert [e.C for e in path.entries] == [0.01, 0.1, 1.0, 10.0]
        for e in path.entries:
            assert e.l0 == int(np.sum(np.abs(e.coefficients) > 1e-10))

    def test_l0_and_l1_grow_with_C(self, moons_mlp, moons_instance):
        path = s.lasso_path(moons_mlp, moons_instance, 0.8,
                            C_grid=list(np.geomspace(1e-3, 1e3, 15)),
                            n_samples=512, seed=0, **FAST)
        l1 = [np.abs(e.coefficients).sum() for e in path.entries]
        assert np.all(np.diff(l1) >= -1e-8)
        assert path.entries[0].l0 == 0
        assert path.entries[-1].l0 > 0

    def test_warm_start_matches_cold_fits(self, moons_mlp, moons_instance):
        # same neighbourhood, each C solved from scratch, must agree with the
        # warm-started path within a small multiple of the tolerance
        tol = 1e-8
        grid = [0.05, 0.5, 5.0]
        path = s.lasso_path(moons_mlp, moons_instance, 0.8, C_grid=grid,
                            n_samples=256, seed=9, tol=tol, max_iter=50000)
        spec = s.NeighbourhoodSpec(center=moons_instance, radius=0.8,
                                   n_samples=256,
                                   seed=derive_seed(9, "path.neighbourhood"))
        hood = s.build_neighbourhood(spec, moons_mlp)
        for entry in path.entries:
            cold = s.LassoLogisticSurrogate(C=entry.C, tol=tol,
                                            max_iter=50000)
            cold.fit(hood.points, hood.labels)
            np.testing.assert_allclose(entry.coefficients, cold.coef_,
                                       atol=1e-5)

    def test_deterministic(self, moons_mlp, moons_instance):
        a = s.lasso_path(moons_mlp, moons_instance, 0.6, C_grid=[0.1, 1.0],
                         n_samples=128, seed=3, **FAST)
        b = s.lasso_path(moons_mlp, moons_instance, 0.6, C_grid=[0.1, 1.0],
                         n_samples=128, seed=3, **FAST)
        assert records.serialize(a) == records.serialize(b)

    def test_bad_grid_rejected(self, moons_mlp, moons_instance):
        for bad in ([], [0.0, 1.0], [-1.0, 1.0], [1.0, 1.0], [2.0, 1.0]):
            with pytest.raises(ValueError):
                s.lasso_path(moons_mlp, moons_instance, 0.5, C_grid=bad,
                             n_samples=64)

    def test_codec_round_trip(self, moons_mlp, moons_instance):
        path = s.lasso_path(moons_mlp, moons_instance, 0.6, C_grid=[0.1, 1.0],
                            n_samples=128, seed=3, **FAST)
        assert records.deserialize(records.serialize(path)) == path


class TestComplexityLadder:
    def test_depth_zero_is_majority_class(self, moons_mlp, moons_dataset):
        entries = s.complexity_ladder(moons_mlp, moons_dataset.bounds, [0],
                                      resolution=20)
        e = entries[0]
        assert e.depth == 0 and e.n_leaves == 1
        grid = s.meshgrid_predict(moons_mlp, moons_dataset.bounds, 20)
        majority = float(np.mean(grid.labels == np.argmax(np.bincount(grid.labels))))
        assert e.accuracy == pytest.approx(majority)

    def test_accuracy_monotone_in_depth(self, moons_mlp, moons_dataset):
        entries = s.complexity_ladder(moons_mlp, moons_dataset.bounds,
                                      [0, 1, 2, 3, None], resolution=30)
        accs = [e.accuracy for e in entries]
        assert np.all(np.diff(accs) >= -1e-12)
        assert entries[-1].accuracy == 1.0  # no cap: trains on its own eval grid

    def test_depth_grid_validation(self, moons_mlp, moons_dataset):
        for bad in ([], [None, 2], [2, 2], [3, 1]):
            with pytest.raises(ValueError):
                s.complexity_ladder(moons_mlp, moons_dataset.bounds, bad,
                                    resolution=8)
