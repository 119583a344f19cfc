import logging

import pytest

from clusterbench import (EX_ERROR, EX_OK, EX_VALIDATION, ClusterBenchError, ConfigError, ConfigSettingWarning,
                          DatasetError, DimensionError, log_uncaught, sample_std, spread)

LOG = logging.getLogger("clusterbench.tests")


def test_dataset_error_names_its_location():
    e = DatasetError("Missing or non-numeric feature cell 'abc'.", "iris.data", row=1, column=2)
    assert str(e) == "iris.data, row 1, column 2: Missing or non-numeric feature cell 'abc'."
    assert e.row == 1
    assert e.column == 2
    assert e.exitcode == EX_VALIDATION
    assert str(DatasetError("plain")) == "plain"


def test_hierarchy():
    assert issubclass(DatasetError, ClusterBenchError)
    assert issubclass(DimensionError, ValueError)
    assert issubclass(ConfigSettingWarning, ConfigError)
    w = ConfigSettingWarning("runs", "ten", possible_values=[1, 2])
    assert w.key == "runs"
    assert w.attempted_value == "ten"
    assert "runs = 'ten' is invalid" in str(w)
    assert w.loglevel == logging.WARNING


def test_log_uncaught(caplog):
    assert log_uncaught(None, LOG) == EX_OK
    with caplog.at_level(logging.ERROR):
        assert log_uncaught(ConfigError("bad setting"), LOG) == EX_VALIDATION
    assert "bad setting" in caplog.text
    assert "Traceback" not in caplog.text
    caplog.clear()
    try:
        raise KeyError("boom")
    except KeyError as e:
        with caplog.at_level(logging.ERROR):
            assert log_uncaught(e, LOG) == EX_ERROR
    assert "Uncaught error" in caplog.text


def test_spread():
    assert spread([3.0]) == (3.0, 3.0, 3.0, 0.0)
    lowest, highest, mean, std = spread([1.0, 2.0, 3.0, 4.0])
    assert (lowest, highest, mean) == (1.0, 4.0, 2.5)
    assert std == pytest.approx(1.2909944487358056)
    # identical values never produce a mean outside [min, max]
    lowest, highest, mean, _ = spread([0.1] * 10)
    assert lowest <= mean <= highest
    with pytest.raises(ValueError):
        spread([])
    assert sample_std([5.0]) == 0.0
