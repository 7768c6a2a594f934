"""LIBSVM ingestion and serialization."""

import io

import numpy as np
import pytest

from acfgm.errors import IngestionError, ParseError
from acfgm.problems.generate import random_logistic_instance, random_qp_instance
from acfgm.problems.libsvm import libsvm_dump, libsvm_load, libsvm_parse, map_labels


def _parse(text, **kwargs):
    return libsvm_parse(io.StringIO(text), **kwargs)


def test_single_row():
    data = _parse("+1 1:0.5 3:2.0\n")
    assert data.b.tolist() == [1.0]
    cols, vals = data.A.row(0)
    assert cols.tolist() == [0, 2]
    assert vals.tolist() == [0.5, 2.0]
    assert data.n == 3


def test_row_without_features():
    data = _parse("-1\n+1 2:1\n")
    cols, _ = data.A.row(0)
    assert cols.tolist() == []
    assert data.b.tolist() == [-1.0, 1.0]


def test_blank_and_comment_lines_are_skipped():
    data = _parse("# header\n\n+1 1:1\n   \n-1 2:3\n")
    assert data.m == 2


@pytest.mark.parametrize(
    "text, line",
    [
        ("1 2:1 1:1\n", 1),
        ("+1 1:1\n-1 0:2\n", 2),
        ("+1 1:1\n\n-1 1:x\n", 3),
        ("+1 1=2\n", 1),
        ("abc 1:1\n", 1),
        ("+1 2:1 2:3\n", 1),
        ("+1 -1:3\n", 1),
        ("+1 \u00b2:1\n", 1),
        ("+1 1:1\n-1 \u0661:2\n", 2),
        ("+1 1:\u0663\n", 1),
    ],
)
def test_parse_errors_carry_the_line(text, line):
    with pytest.raises(ParseError) as excinfo:
        _parse(text)
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}:")


def test_regression_labels_are_kept():
    data = _parse("3.5 1:1\n-0.25 1:2\n", task="regression")
    assert data.b.tolist() == [3.5, -0.25]


def test_binary_labels_are_mapped():
    data = _parse("0 1:1\n1 1:2\n0 1:3\n")
    assert data.b.tolist() == [-1.0, 1.0, -1.0]
    np.testing.assert_array_equal(map_labels(np.array([2.0, 4.0]), "x"), [-1.0, 1.0])


def test_more_than_two_classes_rejected():
    with pytest.raises(IngestionError):
        _parse("1 1:1\n2 1:1\n3 1:1\n")


def test_n_features_widens_and_checks():
    assert _parse("+1 2:1\n", n_features=5).n == 5
    with pytest.raises(IngestionError):
        _parse("+1 4:1\n", n_features=3)


@pytest.mark.parametrize(
    "data",
    [random_qp_instance(8, 5, seed=1), random_logistic_instance(12, 6, seed=2, density=0.3)],
    ids=["regression", "classification"],
)
def test_dump_then_parse_is_idempotent(data):
    buffer = io.StringIO()
    libsvm_dump(data, buffer)
    first = _parse(buffer.getvalue(), task=data.task, n_features=data.n)
    assert first.same_content(data)

    again = io.StringIO()
    libsvm_dump(first, again)
    assert again.getvalue() == buffer.getvalue()


def test_load_from_file(tmp_path):
    path = tmp_path / "toy.svm"
    path.write_text("+1 1:0.5\n-1 2:1.5\n")
    data = libsvm_load(path)
    assert data.name == "toy"
    assert data.provenance == str(path)
    assert data.A.to_dense().tolist() == [[0.5, 0.0], [0.0, 1.5]]


def test_missing_file(tmp_path):
    with pytest.raises(IngestionError):
        libsvm_load(tmp_path / "absent.svm")
