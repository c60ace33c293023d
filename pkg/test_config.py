"""Settings, logging sinks, run statistics, the thread fan-out and the generators."""

import pytest
from loguru import logger
from pydantic import ValidationError

from twcut.config import get_settings, override_settings, reload_settings
from twcut.errors import PreconditionError
from twcut.logger import collect_stats, configure_logging, current_stats
from twcut.utils.generators import GraphKind, generate, gnm, hypercube
from twcut.utils.parallel import fan_out


def test_defaults():
    settings = get_settings()
    assert settings.threads == 1
    assert settings.oracle_max_vertices == 14
    assert settings.log_level == "WARNING"
    assert settings.log_file is None


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("TWCUT_THREADS", "4")
    monkeypatch.setenv("TWCUT_LOG_LEVEL", "debug")
    settings = reload_settings()
    assert settings.threads == 4
    assert settings.log_level == "DEBUG"


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv("TWCUT_LOG_LEVEL", "loud")
    with pytest.raises(ValidationError):
        reload_settings()
    monkeypatch.setenv("TWCUT_LOG_LEVEL", "INFO")
    monkeypatch.setenv("TWCUT_K_MAX", "99")
    with pytest.raises(ValidationError):
        reload_settings()


def test_override_is_scoped():
    with override_settings(oracle_max_vertices=5) as inner:
        assert get_settings() is inner
        with override_settings(threads=2):
            assert get_settings().oracle_max_vertices == 5
            assert get_settings().threads == 2
        assert get_settings().threads == 1
    assert get_settings().oracle_max_vertices == 14


def test_log_file_sink(tmp_path):
    log_file = tmp_path / "logs" / "twcut.log"
    configure_logging("ERROR", log_file)
    try:
        logger.debug("written to the file only")
    finally:
        configure_logging("WARNING")
    assert "written to the file only" in log_file.read_text()


def test_stats_are_scoped():
    with collect_stats() as stats:
        current_stats().note_states(10)
        current_stats().note_states(5)
        current_stats().note_width(3)
        current_stats().note_width(2)
        current_stats().note_reduced(7)
    assert (stats.dp_states, stats.decomposition_width, stats.reduced_vertices) == (15, 3, 7)
    assert stats.wall_ms >= 0
    assert current_stats() is not stats


def test_fan_out_keeps_order_and_context():
    def task(x):
        current_stats().note_states(x)
        return x * x

    with collect_stats() as stats:
        assert fan_out(task, range(6), threads=3) == [0, 1, 4, 9, 16, 25]
    assert stats.dp_states == 15


def test_fan_out_counts_every_update():
    def task(x):
        for _ in range(500):
            current_stats().note_states(1)
        current_stats().note_width(x)
        return x

    with collect_stats() as stats:
        fan_out(task, range(40), threads=8)
    assert stats.dp_states == 40 * 500
    assert stats.decomposition_width == 39


def test_fan_out_inline_by_default():
    assert fan_out(str, [1, 2]) == ["1", "2"]


def test_generators():
    assert hypercube(4).n == 16
    assert hypercube(4).m == 32
    assert gnm(8, 10, seed=1).m == 10
    assert generate(GraphKind.PATH, n=4).m == 3
    assert generate("gnp", n=9, p=0.5, seed=2).same_structure(generate("gnp", n=9, p=0.5, seed=2))


@pytest.mark.parametrize("kwargs", [{"kind": "cycle", "n": 2}, {"kind": "gnp", "p": 1.5}, {"kind": "path", "n": -1}])
def test_generator_preconditions(kwargs):
    with pytest.raises(PreconditionError):
        generate(**kwargs)
