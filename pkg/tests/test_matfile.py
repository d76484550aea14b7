import numpy as np
import pytest

from cartan_qsd.matfile import MatrixFormatError, dumps_matrix, load_matrix, loads_matrix, save_matrix
from oracles import haar


class TestMatrixFile:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_round_trip_is_exact(self, n):
        u = haar(n, n)
        np.testing.assert_array_equal(loads_matrix(dumps_matrix(u)), u)

    def test_save_load(self, tmp_path):
        path = tmp_path / "m.json"
        save_matrix(path, np.eye(2))
        np.testing.assert_array_equal(load_matrix(path), np.eye(2))

    def test_layout(self):
        assert loads_matrix('{"dim": 1, "entries": [[[0.5, -2]]]}')[0, 0] == 0.5 - 2j

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[]",
            '{"dim": 2}',
            '{"dim": 0, "entries": []}',
            '{"dim": true, "entries": [[[1, 0]]]}',
            '{"dim": 2, "entries": [[[1, 0], [0, 0]]]}',
            '{"dim": 2, "entries": [[[1, 0]], [[0, 0]]]}',
            '{"dim": 1, "entries": [[[1]]]}',
            '{"dim": 1, "entries": [[["1", 0]]]}',
            '{"dim": 1, "entries": [[[NaN, 0]]]}',
            '{"dim": 1, "entries": [[[Infinity, 0]]]}',
            '{"dim": 1, "entries": [[[1e999, 0]]]}',
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(MatrixFormatError):
            loads_matrix(text)

    def test_dump_rejects_non_finite(self):
        with pytest.raises(ValueError):
            dumps_matrix(np.array([[np.inf]]))
