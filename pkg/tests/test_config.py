from fractions import Fraction

import pytest

from src.shared.config import Config, PrecisionConfig, load_config
from src.shared.errors import ConfigurationError


@pytest.mark.parametrize("text, width", [
    ("1/10^30", Fraction(1, 10 ** 30)),
    ("3/2^4", Fraction(3, 16)),
    (" 1 / 10 ^ 3 ", Fraction(1, 1000)),
    ("1/1000", Fraction(1, 1000)),
    ("2", Fraction(2)),
])
def test_eig_width_forms(text, width):
    assert PrecisionConfig(eig_width=text).width == width


def test_power_form_is_stored_expanded():
    assert PrecisionConfig(eig_width="1/10^3").eig_width == "1/1000"
    assert PrecisionConfig().width == Fraction(1, 10 ** 30)


@pytest.mark.parametrize("text", ["0", "-1/10^3", "1/0", "1/0^2", "1e-30", "0.5", "1/10^", "ten"])
def test_bad_eig_width_is_refused(text):
    with pytest.raises(ValueError):
        PrecisionConfig(eig_width=text)


def test_environment_width_in_power_form(tmp_path, monkeypatch):
    monkeypatch.setenv("AKHODGE_EIG_WIDTH", "1/2^10")
    path = tmp_path / "config.yml"
    path.write_text("audit:\n  seed: 4\n", encoding="utf-8")
    config = load_config(str(path))
    assert config.precision.width == Fraction(1, 1024)
    assert config.audit.seed == 4


def test_undecodable_config_file(tmp_path):
    path = tmp_path / "config.yml"
    path.write_bytes(b"precision: \xff\xfe")
    with pytest.raises(ConfigurationError):
        load_config(str(path))


def test_defaults_need_no_file():
    config = Config()
    assert config.output.format == "markdown"
    assert config.audit.seed == 0
