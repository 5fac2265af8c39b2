"""
Golden Fixture Manager

Loads the shipped golden data (orbit tables, double Schubert displays and
the known Demazure failures) from fixtures/golden_tables.json and converts it
into permutations and polynomials.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from config.settings import AppConfig
from core.error_handler import create_configuration_error, create_input_error
from core.permutations import Permutation, format_permutation, parse_permutation
from core.polynomial import Polynomial, parse_polynomial

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)


class GoldenTable(BaseModel):
    pair: str
    size: int
    theory: str
    rows: Dict[str, str]


class GoldenExpansion(BaseModel):
    polynomial: str
    basis: str
    n: int
    terms: Dict[str, str]
    specialize: Optional[Dict[str, str]] = None


class GoldenEdge(BaseModel):
    source: str
    target: str
    label: int


class GoldenFixtures(BaseModel):
    tables: Dict[str, GoldenTable]
    expansions: Dict[str, GoldenExpansion] = Field(default_factory=dict)
    demazure_failures: Dict[str, List[GoldenEdge]] = Field(default_factory=dict)


class FixtureManager:
    """
    Read access to the golden fixtures
    """

    def __init__(self, path: Optional[Path] = None):
        self.path = Path(path) if path is not None else AppConfig.GOLDEN_TABLES_PATH
        self._fixtures: Optional[GoldenFixtures] = None

    def load(self) -> GoldenFixtures:
        if self._fixtures is None:
            try:
                with open(self.path, "r", encoding="utf-8") as handle:
                    self._fixtures = GoldenFixtures.model_validate(json.load(handle))
            except FileNotFoundError:
                raise create_configuration_error(f"golden fixtures not found at {self.path}")
            except (json.JSONDecodeError, ValidationError) as e:
                raise create_configuration_error(f"golden fixtures at {self.path} are malformed: {e}")
            logger.info(f"Loaded {len(self._fixtures.tables)} golden tables from {self.path}")
        return self._fixtures

    def table_names(self) -> List[str]:
        return sorted(self.load().tables)

    def table(self, name: str) -> GoldenTable:
        tables = self.load().tables
        if name not in tables:
            raise create_input_error(f"unknown golden table {name!r}", suggestions=self.table_names())
        return tables[name]

    def table_polynomials(self, name: str) -> Dict[Permutation, Polynomial]:
        """Golden rows keyed by involution, polynomials expanded"""
        table = self.table(name)
        return {parse_permutation(label, table.size): parse_polynomial(text)
                for label, text in table.rows.items()}

    def compare_table(self, name: str, computed: Dict[Permutation, Polynomial]) -> List[str]:
        """
        Differences between a computed table and a golden table

        Rows are compared on expanded canonical strings.

        Returns:
            One message per missing, extra or differing row; empty when identical
        """
        expected = self.table_polynomials(name)
        problems = []
        for pi, polynomial in expected.items():
            if pi not in computed:
                problems.append(f"{name}: row {format_permutation(pi)} missing")
            elif str(computed[pi]) != str(polynomial):
                problems.append(f"{name}: row {format_permutation(pi)} is {computed[pi]}, expected {polynomial}")
        for pi in computed:
            if pi not in expected:
                problems.append(f"{name}: unexpected row {format_permutation(pi)}")
        return problems

    def expansion(self, name: str) -> GoldenExpansion:
        expansions = self.load().expansions
        if name not in expansions:
            raise create_input_error(f"unknown golden expansion {name!r}", suggestions=sorted(expansions))
        return expansions[name]

    def expected_terms(self, name: str) -> Dict[Permutation, Polynomial]:
        golden = self.expansion(name)
        return {parse_permutation(w, golden.n): parse_polynomial(c) for w, c in golden.terms.items()}

    def specialization(self, name: str) -> Dict[int, Polynomial]:
        golden = self.expansion(name)
        return {int(j): parse_polynomial(v) for j, v in (golden.specialize or {}).items()}

    def demazure_failures(self, name: str) -> List[Tuple[Permutation, Permutation, int]]:
        size = self.table(name).size
        return [(parse_permutation(edge.source, size), parse_permutation(edge.target, size), edge.label)
                for edge in self.load().demazure_failures.get(name, [])]


_default_manager: Optional[FixtureManager] = None


def get_fixture_manager() -> FixtureManager:
    """Shared manager for the default fixture path"""
    global _default_manager
    if _default_manager is None:
        _default_manager = FixtureManager()
    return _default_manager
