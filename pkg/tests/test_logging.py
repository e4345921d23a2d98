"""
Unit tests for logging configuration
"""
import logging
import tempfile
from pathlib import Path

import pytest

from harbourne.exceptions import BadParameter
from harbourne.logging_config import HarbourneLogger


class TestHarbourneLoggerSetup:
    """Test HarbourneLogger configuration"""

    def setup_method(self):
        """Reset logger state before each test"""
        HarbourneLogger._configured = False
        HarbourneLogger._loggers = {}
        # Remove all handlers from harbourne logger
        root = logging.getLogger("harbourne")
        for handler in root.handlers[:]:
            root.removeHandler(handler)

    def test_logger_setup_default_level(self):
        """Test logger configuration with the default WARNING level"""
        HarbourneLogger.setup_logging()
        logger = HarbourneLogger.get_logger("test")
        assert logger.name == "harbourne.test"
        assert logger.level == logging.NOTSET  # Logger uses parent level
        assert logging.getLogger("harbourne").level == logging.WARNING

    def test_logger_setup_debug_level(self):
        """Test logger configuration with DEBUG level"""
        HarbourneLogger.setup_logging(level="DEBUG")
        assert logging.getLogger("harbourne").level == logging.DEBUG

    def test_logger_setup_lowercase_level(self):
        """Test that level names are case-insensitive"""
        HarbourneLogger.setup_logging(level="info")
        assert logging.getLogger("harbourne").level == logging.INFO

    def test_logger_setup_unknown_level(self):
        """Test that an unknown level name is a bad parameter, not an AttributeError"""
        with pytest.raises(BadParameter, match="LOUD"):
            HarbourneLogger.setup_logging(level="LOUD")

    def test_module_name_is_not_prefixed_twice(self):
        """Test that module loggers keep their dotted package name"""
        logger = HarbourneLogger.get_logger("harbourne.h_index")
        assert logger.name == "harbourne.h_index"

    def test_logger_get_logger_caches(self):
        """Test that get_logger caches loggers"""
        HarbourneLogger.setup_logging()
        logger1 = HarbourneLogger.get_logger("module1")
        logger2 = HarbourneLogger.get_logger("module1")
        assert logger1 is logger2

    def test_logger_get_different_loggers(self):
        """Test that different modules get different loggers"""
        HarbourneLogger.setup_logging()
        logger1 = HarbourneLogger.get_logger("module1")
        logger2 = HarbourneLogger.get_logger("module2")
        assert logger1 is not logger2
        assert logger1.name == "harbourne.module1"
        assert logger2.name == "harbourne.module2"

    def test_reconfiguring_replaces_handlers(self):
        """Test that a second setup does not stack console handlers"""
        HarbourneLogger.setup_logging()
        HarbourneLogger.setup_logging(level="INFO")
        assert len(logging.getLogger("harbourne").handlers) == 1

    def test_console_handler_writes_to_stderr(self, capsys):
        """Test that log records stay off stdout"""
        HarbourneLogger.setup_logging(level="INFO")
        HarbourneLogger.get_logger("test").info("progress note")

        captured = capsys.readouterr()
        assert "progress note" not in captured.out

    def test_logger_setup_with_file(self):
        """Test logger configuration with file output"""
        with tempfile.TemporaryDirectory() as tmpdir:
            log_file = Path(tmpdir) / "test.log"
            HarbourneLogger.setup_logging(level="INFO", log_file=str(log_file))
            logger = HarbourneLogger.get_logger("test")

            logger.info("Test message")

            assert log_file.exists()
            content = log_file.read_text()
            assert "Test message" in content
            assert "harbourne.test" in content

    def test_logger_setup_custom_format(self):
        """Test logger configuration with custom format"""
        custom_format = "%(levelname)s: %(message)s"
        with tempfile.TemporaryDirectory() as tmpdir:
            log_file = Path(tmpdir) / "test.log"
            HarbourneLogger.setup_logging(
                level="INFO", log_file=str(log_file), format_string=custom_format
            )
            HarbourneLogger.get_logger("test").info("Test message")

            content = log_file.read_text()
            assert "INFO: Test message" in content

    def test_logger_auto_setup(self):
        """Test that get_logger auto-initializes if not configured"""
        logger = HarbourneLogger.get_logger("test")
        assert HarbourneLogger._configured
        assert logger is not None

    def test_logger_levels(self, caplog):
        """Test different log levels work correctly"""
        HarbourneLogger.setup_logging(level="WARNING")
        logger = HarbourneLogger.get_logger("test")

        with caplog.at_level(logging.WARNING, logger="harbourne.test"):
            logger.debug("Debug message")
            logger.info("Info message")
            logger.warning("Warning message")
            logger.error("Error message")

        assert "Debug message" not in caplog.text
        assert "Info message" not in caplog.text
        assert "Warning message" in caplog.text
        assert "Error message" in caplog.text

