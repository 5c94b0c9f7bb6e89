from fractions import Fraction

import pytest

from maharam.config import ConfigError, RunConfig, load_config, parse_config, parse_norm


def test_shipped_configs_load(configs):
    for path in sorted(configs.glob("*.conf")):
        cfg = load_config(path)
        assert cfg.source == str(path)


def test_parse_values():
    cfg = parse_config("resolution = 3\np = 2\na = 0, 1/2\nM = 3,4\nnorm = schreier:w  # trailing\n")
    assert cfg.a == [0, Fraction(1, 2)] and cfg.M == [3, 4]
    assert cfg.to_json()["a"] == ["0", "1/2"]
    assert parse_config("", overrides={"seed": 9}).seed == 9


@pytest.mark.parametrize(
    "text, msg",
    [
        ("resolution = 7", "resolution"),
        ("resolution = 4", "bounded"),
        ("colour = red", "unknown key"),
        ("p = 1\np = 1", "duplicate"),
        ("p = x", "integer"),
        ("p = 2\na = 0", "exactly"),
        ("a = 1\nM = 3", "must lie in"),
        ("norm = schreier:0", "positive"),
        ("norm = lp", "card"),
        ("measure = additive:-1", "positive"),
        ("M_N = 1", "M_N"),
        ("just words", "key = value"),
    ],
)
def test_rejects(text, msg):
    with pytest.raises(ConfigError, match=msg):
        parse_config(text)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        load_config(tmp_path / "nope.conf")


def test_norm_specs():
    assert parse_norm("card")([1, 5, 9]) == 3
    assert parse_norm("schreier:2")([0, 3, 7]) == 2
    with pytest.raises(ConfigError):
        parse_norm("schreier:w^(")


def test_measure_fn():
    assert RunConfig(measure="additive:1/4").measure_fn()(0xFF) == 2
    assert RunConfig().measure_fn()(0) == 0
