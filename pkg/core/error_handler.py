"""
Symmetric Orbit Polynomials Error Handler

This module provides error handling for the orbit polynomial library and CLI,
categorizing failures and turning them into structured diagnostics with
suggested remedies and process exit codes.
"""

import logging
import traceback
from typing import Dict, List, Optional, Any, Union
from enum import Enum
from datetime import datetime

from config.settings import AppConfig

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)


class ErrorCategory(Enum):
    """Categories of errors raised by the library"""
    INPUT = "input"                        # Bad permutation, size or flag combination
    PARSE = "parse"                        # Unparseable polynomial or permutation text
    BASIS_MEMBERSHIP = "basis_membership"  # Polynomial outside L_n
    UNSUPPORTED = "unsupported"            # Combination the theory rules out
    VERIFICATION = "verification"          # A checked identity failed
    CONFIGURATION = "configuration"        # Bad environment settings
    SYSTEM = "system"                      # Anything else


class ErrorSeverity(Enum):
    """Severity levels for errors"""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class OrbitComputationError(Exception):
    """Base exception class for orbit polynomial errors"""

    def __init__(self,
                 message: str,
                 category: ErrorCategory,
                 severity: ErrorSeverity = ErrorSeverity.MEDIUM,
                 user_message: Optional[str] = None,
                 suggestions: Optional[List[str]] = None,
                 technical_details: Optional[str] = None,
                 counterexample: Optional[Dict[str, Any]] = None):
        """
        Initialize an orbit computation error

        Args:
            message: Technical error message
            category: Error category
            severity: Error severity
            user_message: Short human readable message
            suggestions: List of suggested remedies
            technical_details: Technical details for logging
            counterexample: Offending data for verification failures
        """
        super().__init__(message)
        self.category = category
        self.severity = severity
        self.user_message = user_message or self._generate_user_message()
        self.suggestions = suggestions or []
        self.technical_details = technical_details
        self.counterexample = counterexample or {}
        self.timestamp = datetime.now()
        self.error_id = self._generate_error_id()

    def _generate_user_message(self) -> str:
        category_messages = {
            ErrorCategory.INPUT: "The input arguments are not valid.",
            ErrorCategory.PARSE: "The input text could not be parsed.",
            ErrorCategory.BASIS_MEMBERSHIP: "The polynomial does not lie in the span of the requested basis.",
            ErrorCategory.UNSUPPORTED: "This combination of pair and theory is not supported.",
            ErrorCategory.VERIFICATION: "A verified identity failed; a counterexample was found.",
            ErrorCategory.CONFIGURATION: "There's a configuration problem.",
            ErrorCategory.SYSTEM: "An unexpected internal error occurred.",
        }
        return category_messages.get(self.category, "An unexpected issue occurred.")

    def _generate_error_id(self) -> str:
        timestamp_str = self.timestamp.strftime("%Y%m%d_%H%M%S")
        category_code = self.category.value[:3].upper()
        severity_code = self.severity.value[0].upper()
        return f"ERR_{category_code}_{severity_code}_{timestamp_str}"


class ErrorHandler:
    """
    Converts exceptions into structured diagnostics and exit codes
    """

    EXIT_CODES = {
        ErrorCategory.VERIFICATION: 1,
        ErrorCategory.INPUT: 2,
        ErrorCategory.PARSE: 2,
        ErrorCategory.BASIS_MEMBERSHIP: 2,
        ErrorCategory.UNSUPPORTED: 2,
    }

    def __init__(self, log_errors: bool = True, include_traceback: bool = False):
        """
        Initialize the error handler

        Args:
            log_errors: Whether to log errors automatically
            include_traceback: Whether diagnostics carry technical details
        """
        self.log_errors = log_errors
        self.include_traceback = include_traceback
        self.error_counts: Dict[str, int] = {}

    def handle_error(self,
                     error: Union[Exception, OrbitComputationError],
                     context: Optional[str] = None) -> Dict[str, Any]:
        """
        Handle an error and return a structured diagnostic

        Args:
            error: Exception to handle
            context: Where the error occurred (command name, suite name)

        Returns:
            Dictionary with error information
        """
        orbit_error = self.to_orbit_error(error)
        if self.log_errors:
            self._log_error(orbit_error, context)
        category_key = orbit_error.category.value
        self.error_counts[category_key] = self.error_counts.get(category_key, 0) + 1

        response: Dict[str, Any] = {
            "success": False,
            "error_id": orbit_error.error_id,
            "error_category": orbit_error.category.value,
            "error_severity": orbit_error.severity.value,
            "message": str(orbit_error),
            "user_message": orbit_error.user_message,
            "suggestions": orbit_error.suggestions,
            "timestamp": orbit_error.timestamp.isoformat(),
        }
        if context:
            response["context"] = context
        if orbit_error.counterexample:
            response["counterexample"] = orbit_error.counterexample
        if self.include_traceback and orbit_error.technical_details:
            response["technical_details"] = orbit_error.technical_details
        return response

    def to_orbit_error(self, error: Exception) -> OrbitComputationError:
        """Convert generic exceptions to OrbitComputationError"""
        if isinstance(error, OrbitComputationError):
            return error
        if isinstance(error, ImportError):
            missing_module = str(error).replace("No module named ", "").strip("'\"")
            return OrbitComputationError(
                message=str(error),
                category=ErrorCategory.CONFIGURATION,
                severity=ErrorSeverity.CRITICAL,
                user_message=f"A required package ({missing_module}) is not installed.",
                suggestions=[f"pip install {missing_module}", "pip install -r requirements.txt"],
            )
        if isinstance(error, (FileNotFoundError, PermissionError, IOError)):
            return OrbitComputationError(
                message=str(error),
                category=ErrorCategory.SYSTEM,
                severity=ErrorSeverity.HIGH,
                user_message="A file could not be read or written.",
                suggestions=["Check the --out path", "Check file permissions"],
            )
        if isinstance(error, MemoryError):
            return OrbitComputationError(
                message=str(error),
                category=ErrorCategory.SYSTEM,
                severity=ErrorSeverity.HIGH,
                user_message="The computation ran out of memory.",
                suggestions=[f"Stay within MAX_AMBIENT_SIZE={AppConfig.MAX_AMBIENT_SIZE}"],
            )
        if isinstance(error, (ValueError, TypeError)):
            return OrbitComputationError(
                message=str(error),
                category=ErrorCategory.INPUT,
                severity=ErrorSeverity.LOW,
                technical_details=traceback.format_exc(),
            )
        return OrbitComputationError(
            message=str(error),
            category=ErrorCategory.SYSTEM,
            severity=ErrorSeverity.MEDIUM,
            technical_details=traceback.format_exc(),
        )

    def exit_code(self, error: Exception) -> int:
        """Process exit code for an error: 1 for failed verification, 2 for bad input, 3 otherwise"""
        return self.EXIT_CODES.get(self.to_orbit_error(error).category, 3)

    def _log_error(self, error: OrbitComputationError, context: Optional[str] = None):
        log_message = f"Error {error.error_id}: {error}"
        if context:
            log_message += f" | Context: {context}"

        if error.severity == ErrorSeverity.CRITICAL:
            logger.critical(log_message)
        elif error.severity == ErrorSeverity.HIGH:
            logger.error(log_message)
        elif error.severity == ErrorSeverity.MEDIUM:
            logger.warning(log_message)
        else:
            logger.info(log_message)

        if error.technical_details:
            logger.debug(f"Technical details for {error.error_id}: {error.technical_details}")

    def get_error_statistics(self) -> Dict[str, Any]:
        """Get error statistics for monitoring"""
        return {
            "total_errors": sum(self.error_counts.values()),
            "errors_by_category": self.error_counts.copy(),
        }


def create_input_error(message: str, suggestions: Optional[List[str]] = None) -> OrbitComputationError:
    """Create an input error"""
    return OrbitComputationError(
        message=message,
        category=ErrorCategory.INPUT,
        severity=ErrorSeverity.LOW,
        suggestions=suggestions or ["Check sizes and permutation arguments"],
    )


def create_parse_error(message: str, text: str = "") -> OrbitComputationError:
    """Create a parse error"""
    return OrbitComputationError(
        message=message,
        category=ErrorCategory.PARSE,
        severity=ErrorSeverity.LOW,
        suggestions=[
            "Polynomials use variables x1, x2, ... and y1, y2, ...; e.g. 2*x1*(x1+x2)",
            "Permutations use one-line (4321) or cycle ((1,4)(2,3)) notation",
        ],
        technical_details=text or None,
    )


def create_membership_error(message: str, n: int) -> OrbitComputationError:
    """Create a basis membership error"""
    return OrbitComputationError(
        message=message,
        category=ErrorCategory.BASIS_MEMBERSHIP,
        severity=ErrorSeverity.LOW,
        suggestions=[f"Every x_i exponent must be at most {n}-i", "Increase --n"],
    )


def create_unsupported_error(message: str, suggestions: Optional[List[str]] = None) -> OrbitComputationError:
    """Create an unsupported-combination error"""
    return OrbitComputationError(
        message=message,
        category=ErrorCategory.UNSUPPORTED,
        severity=ErrorSeverity.MEDIUM,
        suggestions=suggestions or [],
    )


def create_verification_error(message: str,
                              counterexample: Optional[Dict[str, Any]] = None) -> OrbitComputationError:
    """Create a verification failure carrying its counterexample"""
    return OrbitComputationError(
        message=message,
        category=ErrorCategory.VERIFICATION,
        severity=ErrorSeverity.CRITICAL,
        counterexample=counterexample,
    )


def create_configuration_error(message: str) -> OrbitComputationError:
    """Create a configuration error"""
    return OrbitComputationError(
        message=message,
        category=ErrorCategory.CONFIGURATION,
        severity=ErrorSeverity.HIGH,
        suggestions=["Compare your .env with env.template"],
    )
