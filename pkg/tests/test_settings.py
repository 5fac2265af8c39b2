import pytest

from config.settings import AppConfig
from core.error_handler import ErrorCategory, OrbitComputationError


class TestParseSizes:
    def test_sorted_and_distinct(self):
        assert AppConfig.parse_sizes("6, 4,4,8") == [4, 6, 8]

    def test_empty_parts_are_skipped(self):
        assert AppConfig.parse_sizes("3,,5,") == [3, 5]

    @pytest.mark.parametrize("text", ["3,four", "0,2", "-1"])
    def test_malformed(self, text):
        with pytest.raises(OrbitComputationError) as info:
            AppConfig.parse_sizes(text)
        assert info.value.category == ErrorCategory.CONFIGURATION


def test_default_size_lists():
    assert AppConfig.orthogonal_sizes() == AppConfig.parse_sizes(AppConfig.VERIFY_ORTHOGONAL_SIZES)
    assert all(size % 2 == 0 for size in AppConfig.symplectic_sizes())


def test_reports_directory(reports_dir):
    AppConfig.ensure_directories()
    assert AppConfig.REPORTS_DIR == reports_dir
    assert reports_dir.is_dir()


def test_golden_tables_are_shipped():
    assert AppConfig.GOLDEN_TABLES_PATH.is_file()
    assert AppConfig.get_log_config()["level"] == AppConfig.APP_LOG_LEVEL
