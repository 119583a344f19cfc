import itertools
from fractions import Fraction

import numpy as np
import pytest

from clusterbench import (Assignment, ContingencyTable, DimensionError, build_contingency, f_measure,
                          precision_recall_f, score_assignment)


def exact_f_measure(counts):
    """Term-by-term evaluation in exact arithmetic."""
    n = sum(sum(row) for row in counts)
    cluster_sizes = [sum(column) for column in zip(*counts)]
    total = Fraction(0)
    for row in counts:
        class_size = sum(row)
        if not class_size:
            continue
        best = Fraction(0)
        for b_ij, b_j in zip(row, cluster_sizes):
            if not b_ij:
                continue
            precision, recall = Fraction(b_ij, b_j), Fraction(b_ij, class_size)
            best = max(best, 2 * precision * recall / (precision + recall))
        total += Fraction(class_size, n) * best
    return total


def test_perfect_clustering():
    labels = ["A", "A", "B", "B"]
    assert score_assignment(labels, Assignment([0, 0, 1, 1], 2)) == 1.0
    assert score_assignment(labels, Assignment([1, 1, 0, 0], 2)) == 1.0


def test_everything_in_one_cluster():
    f = score_assignment(["A", "A", "B", "B"], Assignment([0, 0, 0, 0], 1))
    assert f == pytest.approx(2 / 3)


def test_precision_recall_f():
    table = ContingencyTable([[2, 1], [0, 3]])
    precision, recall, f = precision_recall_f(table)
    np.testing.assert_allclose(precision, [[1.0, 0.25], [0.0, 0.75]])
    np.testing.assert_allclose(recall, [[2 / 3, 1 / 3], [0.0, 1.0]])
    assert f[1, 0] == 0.0
    assert f[0, 0] == pytest.approx(0.8)
    assert f_measure(table) == pytest.approx(float(exact_f_measure([[2, 1], [0, 3]])))


def test_empty_clusters_get_a_column():
    table = build_contingency(["x", "y", "y"], Assignment([0, 1, 1], 3))
    assert table.counts.shape == (2, 3)
    assert table.cluster_sizes.tolist() == [1, 2, 0]
    assert table.classes == ("x", "y")
    assert f_measure(table) == 1.0


def test_contingency_matches_naive_tallies():
    rng = np.random.default_rng(30)
    labels = rng.choice(["setosa", "versicolor", "virginica"], size=30)
    memberships = rng.integers(0, 4, size=30)
    table = build_contingency(labels, Assignment(memberships, 4))
    for i, cls in enumerate(table.classes):
        for j in range(4):
            assert table.counts[i, j] == sum(1 for a, b in zip(labels, memberships) if a == cls and b == j)
    assert table.class_sizes.tolist() == [int(np.sum(labels == cls)) for cls in table.classes]
    assert table.cluster_sizes.tolist() == np.bincount(memberships, minlength=4).tolist()
    assert table.n == 30


def test_cluster_ids_do_not_matter():
    rng = np.random.default_rng(31)
    labels = rng.integers(0, 3, size=40)
    memberships = rng.integers(0, 3, size=40)
    reference = score_assignment(labels, Assignment(memberships, 3))
    for permutation in itertools.permutations(range(3)):
        relabeled = np.array(permutation)[memberships]
        assert score_assignment(labels, Assignment(relabeled, 3)) == pytest.approx(reference, abs=1e-15)
    assert 0.0 <= reference <= 1.0


def test_bad_input():
    with pytest.raises(DimensionError):
        build_contingency(["a", "b"], Assignment([0, 0, 1], 2))
    with pytest.raises(ValueError):
        f_measure(ContingencyTable(np.zeros((2, 2))))
    with pytest.raises(ValueError):
        ContingencyTable([[1, -1]])


@pytest.mark.slow
def test_every_small_table_matches_exact_arithmetic():
    for rows, columns in itertools.product(range(1, 4), range(1, 4)):
        for cells in itertools.product(range(4), repeat=rows * columns):
            if not any(cells):
                continue
            counts = [list(cells[r * columns:(r + 1) * columns]) for r in range(rows)]
            assert f_measure(ContingencyTable(counts)) == pytest.approx(float(exact_f_measure(counts)), abs=1e-12)
