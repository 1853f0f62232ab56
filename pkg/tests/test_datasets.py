"""Dataset generators and CSV loading."""

import numpy as np
import pytest

import surrscope as s


class TestMoons:
    def test_shape_names_balance(self, moons_dataset):
        d = moons_dataset
        assert d.X.shape == (1000, 2)
        assert d.feature_names == ["f0", "f1"]
        assert set(np.unique(d.y)) == {0, 1}
        assert abs(int(d.y.sum()) - 500) <= 1

    def test_deterministic(self):
        a = s.make_moons(n=100, noise=0.1, seed=7)
        b = s.make_moons(n=100, noise=0.1, seed=7)
        np.testing.assert_array_equal(a.X, b.X)
        np.testing.assert_array_equal(a.y, b.y)
        c = s.make_moons(n=100, noise=0.1, seed=8)
        assert not np.array_equal(a.X, c.X)

    def test_bounds_contain_data(self, moons_dataset):
        for j, (lo, hi) in enumerate(moons_dataset.bounds):
            assert lo <= moons_dataset.X[:, j].min()
            assert hi >= moons_dataset.X[:, j].max()


class TestCircles:
    def test_shape_and_geometry(self, circles_dataset):
        d = circles_dataset
        assert d.X.shape == (800, 2)
        r = np.linalg.norm(d.X, axis=1)
        # inner circle is class 1 at factor 0.5; radii separate cleanly at low noise
        assert r[d.y == 1].mean() < r[d.y == 0].mean()

    def test_deterministic(self):
        a = s.make_circles(n=64, noise=0.05, factor=0.5, seed=3)
        b = s.make_circles(n=64, noise=0.05, factor=0.5, seed=3)
        np.testing.assert_array_equal(a.X, b.X)


class TestCsvLoader:
    def _write(self, tmp_path, text):
        p = tmp_path / "data.csv"
        p.write_text(text)
        return p

    def test_median_threshold(self, tmp_path):
        p = self._write(tmp_path, "a,b,t\n1,10,5\n2,20,15\n3,30,25\n4,40,35\n")
        d = s.load_csv_binary(p, target_column="t", threshold="median")
        assert d.X.shape == (4, 2)
        assert d.feature_names == ["a", "b"]
        # median of (5,15,25,35) is 20; strictly-above rule labels two rows 1
        np.testing.assert_array_equal(d.y, [0, 0, 1, 1])

    def test_numeric_threshold(self, tmp_path):
        p = self._write(tmp_path, "a,t\n1,5\n2,15\n")
        d = s.load_csv_binary(p, target_column="t", threshold=10.0)
        np.testing.assert_array_equal(d.y, [0, 1])

    def test_ties_with_threshold_label_zero(self, tmp_path):
        p = self._write(tmp_path, "a,t\n1,5\n2,20\n3,20\n4,35\n")
        d = s.load_csv_binary(p, target_column="t", threshold="median")
        np.testing.assert_array_equal(d.y, [0, 0, 0, 1])

    def test_missing_target_column(self, tmp_path):
        p = self._write(tmp_path, "a,b\n1,2\n")
        with pytest.raises(ValueError, match="t"):
            s.load_csv_binary(p, target_column="t", threshold="median")

    def test_non_numeric_cell(self, tmp_path):
        p = self._write(tmp_path, "a,t\nx,5\n1,6\n")
        with pytest.raises(ValueError):
            s.load_csv_binary(p, target_column="t", threshold="median")

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            s.load_csv_binary(tmp_path / "absent.csv", target_column="t",
                              threshold="median")


class TestDiabetes:
    def test_shape_and_split(self, diabetes_dataset):
        d = diabetes_dataset
        assert d.X.shape == (442, 10)
        assert len(d.feature_names) == 10
        # median progression score 140.5 splits the cohort exactly in half
        assert int(d.y.sum()) == 221
        assert d.y.shape == (442,)

    def test_bounds_cover(self, diabetes_dataset):
        d = diabetes_dataset
        for j, (lo, hi) in enumerate(d.bounds):
            assert lo <= d.X[:, j].min() <= d.X[:, j].max() <= hi
