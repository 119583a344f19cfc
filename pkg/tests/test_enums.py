from enum import Enum, unique

from clusterbench import Algorithm, ReportFormat, enum_by_value, enum_choices, enum_token


@unique
class Metric(Enum):
    EUCLIDEAN = ("Euclidean distance", 2)
    MANHATTAN = ("Manhattan distance", 1)

    def description(self) -> str:
        return self.value[0]


class Stopping(Enum):
    MAX_ITER = "max-iter"
    MAXITER = "maxiter"


def test_enum_token():
    assert enum_token("K-Means") == "kmeans"
    assert enum_token(" JSON_LINES ") == "jsonlines"
    assert enum_token("json lines") == "jsonlines"
    assert enum_token("--") == ""


def test_enum_by_value():
    assert enum_by_value(Algorithm, "kmeans") is Algorithm.KMEANS
    assert enum_by_value(Algorithm, "fpakm") is Algorithm.FPAKM
    assert enum_by_value(Algorithm, "K-Means") is Algorithm.KMEANS
    assert enum_by_value(Algorithm, "FPA") is Algorithm.FPA
    assert enum_by_value(ReportFormat, "json-lines") is ReportFormat.JSON_LINES
    assert enum_by_value(Algorithm, "simulated-annealing") is None
    assert enum_by_value(Algorithm, "") is None
    assert enum_by_value(Algorithm, None) is None


def test_enum_by_value_ignores_case_and_separators():
    assert enum_by_value(Algorithm, "K_MEANS") is Algorithm.KMEANS
    assert enum_by_value(Algorithm, " FpaKm ") is Algorithm.FPAKM
    assert enum_by_value(ReportFormat, "JSON_LINES") is ReportFormat.JSON_LINES
    assert enum_by_value(ReportFormat, "Json Lines") is ReportFormat.JSON_LINES
    assert enum_by_value(ReportFormat, "CSV") is ReportFormat.CSV
    assert enum_by_value(Metric, "manhattan distance") is Metric.MANHATTAN
    assert enum_by_value(Metric, "euclidean") is Metric.EUCLIDEAN
    assert enum_by_value(Metric, "  ") is None


def test_ambiguous_tokens_match_nothing():
    assert enum_by_value(Stopping, "max-iter") is Stopping.MAX_ITER
    assert enum_by_value(Stopping, "maxiter") is Stopping.MAXITER
    assert enum_by_value(Stopping, "MAX ITER") is None


def test_enum_choices():
    assert enum_choices(ReportFormat) == ["table", "csv", "json-lines"]
    assert enum_choices(Metric) == ["euclidean", "manhattan"]
