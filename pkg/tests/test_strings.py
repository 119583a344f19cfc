from clusterbench import dataset_key, normalize_name, split_names


def test_normalize_name():
    assert normalize_name("json-lines") == "json_lines"
    assert normalize_name("crude oil") == "crude_oil"
    assert normalize_name("a--b  c") == "a_b_c"
    assert normalize_name("already_ok") == "already_ok"
    assert normalize_name("a b", separator="-") == "a-b"
    assert normalize_name("") == ""


def test_dataset_key():
    assert dataset_key("Crude Oil") == "crude_oil"
    assert dataset_key("crude-oil") == "crude_oil"
    assert dataset_key("CRUDE_OIL") == "crude_oil"
    assert dataset_key("  Iris ") == "iris"
    assert dataset_key("_wine_") == "wine"


def test_split_names():
    assert split_names("iris,wine") == ["iris", "wine"]
    assert split_names(" iris , wine ,") == ["iris", "wine"]
    assert split_names(["kmeans", " fpa "]) == ["kmeans", "fpa"]
    assert split_names("") == []
    assert split_names(None) == []
