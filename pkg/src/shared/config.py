"""Configuration management for the almost-Kähler Hodge engine."""
import os
import re
import yaml
from fractions import Fraction
from pathlib import Path
from typing import Literal, Optional
from pydantic import BaseModel, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import ConfigurationError, InputOutputError


DEFAULT_EIG_WIDTH = "1/" + "1" + "0" * 30

# "p", "p/q" or "p/b^c"
_WIDTH_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*(?:\^\s*(\d+))?)?\s*$")


def parse_width(text: str) -> Fraction:
    match = _WIDTH_PATTERN.match(str(text))
    if not match:
        raise ValueError(f"eig_width must look like p, p/q or p/b^c, got {text!r}")
    numerator, base, exponent = match.groups()
    denominator = int(base or 1) ** int(exponent or 1)
    if denominator == 0:
        raise ValueError(f"eig_width {text!r} has a zero denominator")
    return Fraction(int(numerator), denominator)


class PrecisionConfig(BaseModel):
    eig_width: str = DEFAULT_EIG_WIDTH

    @field_validator("eig_width")
    @classmethod
    def _positive_rational(cls, value: str) -> str:
        width = parse_width(value)
        if width <= 0:
            raise ValueError("eig_width must be positive")
        if width.denominator == 1:
            return str(width.numerator)
        return f"{width.numerator}/{width.denominator}"

    @property
    def width(self) -> Fraction:
        return Fraction(self.eig_width)


class AuditConfig(BaseModel):
    seed: int = 0
    random_vectors: int = 50
    fuzz_samples: int = 20
    fuzz_transvections: int = 2


class OutputConfig(BaseModel):
    format: Literal["markdown", "json"] = "markdown"


class LoggingConfig(BaseModel):
    level: str = "WARNING"
    log_dir: Optional[str] = None


class Config(BaseModel):
    precision: PrecisionConfig = PrecisionConfig()
    audit: AuditConfig = AuditConfig()
    output: OutputConfig = OutputConfig()
    logging: LoggingConfig = LoggingConfig()


class EnvOverrides(BaseSettings):
    """Environment variables that override the YAML values."""

    model_config = SettingsConfigDict(env_prefix="AKHODGE_")

    eig_width: Optional[str] = None
    seed: Optional[int] = None
    log_level: Optional[str] = None
    log_dir: Optional[str] = None


def load_config(config_path: str = None) -> Config:
    """Load configuration from a YAML file, then apply environment overrides."""
    explicit = config_path is not None
    if config_path is None:
        config_path = os.path.join(
            Path(__file__).parent.parent.parent,
            "config",
            "config.yml"
        )

    config_dict = {}
    if os.path.exists(config_path):
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                config_dict = yaml.safe_load(f) or {}
        except OSError as e:
            raise InputOutputError(f"Cannot read config file {config_path}: {e}")
        except UnicodeDecodeError as e:
            raise ConfigurationError(f"Config file {config_path} is not UTF-8 text: {e.reason}")
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Config file {config_path} is not valid YAML: {e}")
    elif explicit:
        raise InputOutputError(
            f"Config file not found at {config_path}. "
            f"Copy config/config.example.yml to config/config.yml or omit --config."
        )

    try:
        config = Config(**config_dict)
    except ValueError as e:
        raise ConfigurationError(f"Invalid configuration in {config_path}: {e}")

    return apply_env_overrides(config)


def apply_env_overrides(config: Config) -> Config:
    """Return a copy of ``config`` with AKHODGE_* variables applied."""
    env = EnvOverrides()
    update = config.model_dump()
    if env.eig_width is not None:
        update["precision"]["eig_width"] = env.eig_width
    if env.seed is not None:
        update["audit"]["seed"] = env.seed
    if env.log_level is not None:
        update["logging"]["level"] = env.log_level
    if env.log_dir is not None:
        update["logging"]["log_dir"] = env.log_dir
    try:
        return Config(**update)
    except ValueError as e:
        raise ConfigurationError(f"Invalid AKHODGE_* environment override: {e}")


# Singleton instance
_config_instance = None


def get_config() -> Config:
    """Get the singleton config instance."""
    global _config_instance
    if _config_instance is None:
        _config_instance = load_config()
    return _config_instance


def use_config(config: Config) -> Config:
    """Replace the singleton, e.g. with CLI overrides applied."""
    global _config_instance
    _config_instance = config
    return config
