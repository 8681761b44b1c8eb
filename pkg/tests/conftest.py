"""Shared fixtures."""
from typing import Iterator

import pytest
from click.testing import CliRunner
from loguru import logger

from src.config.settings import Settings
from src.verify.golden import GoldenTables, load_golden_tables


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch, tmp_path) -> Iterator[None]:
    """Keep CHARVAR_* variables and any local .env out of the tests."""
    for name in ("CHARVAR_MAX_GENUS", "CHARVAR_WORKERS", "CHARVAR_DEBUG_MODE", "CHARVAR_LOG_LEVEL", "CHARVAR_LOG_FILE_PATH"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    yield
    # CLI runs point the console sink at a captured stream that is closed afterwards
    logger.remove()


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture
def golden(settings: Settings) -> GoldenTables:
    return load_golden_tables(settings.golden_tables_path)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)
