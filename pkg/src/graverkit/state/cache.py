"""SQLite cache for computed Graver bases and verification outcomes."""

from __future__ import annotations

import logging
import sqlite3
from datetime import datetime
from pathlib import Path

from pydantic import BaseModel, ConfigDict

from ..graver.completion import graver
from ..graver.models import GraverBasis
from ..linalg.matrix import IntMatrix, format_matrix, parse_matrix, parse_matrix_rows
from ..utils.config import CONFIG_DIR, Limits

logger = logging.getLogger(__name__)

DB_PATH = CONFIG_DIR / "cache.db"
SCHEMA_VERSION = 1


class ClaimRecord(BaseModel):
    """Last recorded outcome of one verification claim."""

    model_config = ConfigDict(frozen=True)

    claim_id: str
    section: str
    status: str
    expected: str
    computed: str
    recorded_at: int


class Cache:
    """SQLite-backed store keyed by the SHA-256 of the matrix text."""

    def __init__(self, db_path: Path | None = None) -> None:
        self.db_path = db_path or DB_PATH
        self.db_path.parent.mkdir(parents=True, exist_ok=True)
        self._conn: sqlite3.Connection | None = None
        self._init_db()

    def _get_conn(self) -> sqlite3.Connection:
        """Get or create the database connection.

        WAL mode lets parallel verification workers read while one writes.
        """
        if self._conn is None:
            self._conn = sqlite3.connect(self.db_path, check_same_thread=False, timeout=30.0)
            self._conn.row_factory = sqlite3.Row
            self._conn.execute("PRAGMA journal_mode=WAL")
            self._conn.execute("PRAGMA synchronous=NORMAL")
        return self._conn

    def _init_db(self) -> None:
        """Initialize database schema."""
        conn = self._get_conn()
        version = conn.execute("PRAGMA user_version").fetchone()[0]
        if version < SCHEMA_VERSION:
            self._create_schema(conn)
            conn.execute(f"PRAGMA user_version = {SCHEMA_VERSION}")
            conn.commit()

    def _create_schema(self, conn: sqlite3.Connection) -> None:
        conn.executescript("""
            CREATE TABLE IF NOT EXISTS graver_bases (
                digest TEXT PRIMARY KEY,
                rows INTEGER NOT NULL,
                cols INTEGER NOT NULL,
                matrix_text TEXT NOT NULL,
                elements_text TEXT NOT NULL,
                element_count INTEGER NOT NULL,
                max_norm INTEGER NOT NULL,
                computed_at INTEGER DEFAULT (strftime('%s', 'now'))
            );

            CREATE TABLE IF NOT EXISTS claims (
                claim_id TEXT PRIMARY KEY,
                section TEXT NOT NULL,
                status TEXT NOT NULL,
                expected TEXT,
                computed TEXT,
                recorded_at INTEGER DEFAULT (strftime('%s', 'now'))
            );

            CREATE INDEX IF NOT EXISTS idx_claims_section
                ON claims(section);
        """)

    def close(self) -> None:
        """Close database connection."""
        if self._conn:
            self._conn.close()
            self._conn = None

    # Graver bases

    def get_graver(self, matrix: IntMatrix) -> GraverBasis | None:
        conn = self._get_conn()
        row = conn.execute(
            "SELECT matrix_text, elements_text FROM graver_bases WHERE digest = ?",
            (matrix.digest(),),
        ).fetchone()
        if row is None:
            return None
        # stale or colliding entry
        if parse_matrix(row["matrix_text"]) != matrix:
            logger.warning("cache entry for %s holds a different matrix", matrix.digest()[:12])
            return None
        elements, _ = parse_matrix_rows(row["elements_text"])
        return GraverBasis(matrix=matrix, elements=tuple(elements))

    def save_graver(self, basis: GraverBasis) -> None:
        conn = self._get_conn()
        now = int(datetime.now().timestamp())
        conn.execute(
            """
            INSERT OR REPLACE INTO graver_bases
            (digest, rows, cols, matrix_text, elements_text, element_count, max_norm, computed_at)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            """,
            (
                basis.matrix.digest(),
                basis.matrix.rows,
                basis.matrix.cols,
                basis.matrix.to_text(),
                format_matrix(basis.elements, basis.matrix.cols),
                basis.size,
                basis.max_norm,
                now,
            ),
        )
        conn.commit()

    def graver_count(self) -> int:
        return int(self._get_conn().execute("SELECT COUNT(*) FROM graver_bases").fetchone()[0])

    # Claims

    def record_claim(self, claim_id: str, section: str, status: str, expected: str, computed: str) -> None:
        conn = self._get_conn()
        now = int(datetime.now().timestamp())
        conn.execute(
            """
            INSERT OR REPLACE INTO claims (claim_id, section, status, expected, computed, recorded_at)
            VALUES (?, ?, ?, ?, ?, ?)
            """,
            (claim_id, section, status, expected, computed, now),
        )
        conn.commit()

    def get_claims(self, section: str | None = None) -> list[ClaimRecord]:
        conn = self._get_conn()
        if section is None:
            cursor = conn.execute("SELECT * FROM claims ORDER BY claim_id")
        else:
            cursor = conn.execute("SELECT * FROM claims WHERE section = ? ORDER BY claim_id", (section,))
        return [ClaimRecord(**dict(row)) for row in cursor]

    def clear_all(self) -> None:
        """Clear all cached data."""
        conn = self._get_conn()
        conn.executescript("""
            DELETE FROM graver_bases;
            DELETE FROM claims;
        """)
        conn.commit()


def cached_graver(matrix: IntMatrix, limits: Limits | None = None, cache: Cache | None = None) -> GraverBasis:
    """graver(matrix), served from and stored into cache when one is given."""
    if cache is not None:
        hit = cache.get_graver(matrix)
        if hit is not None:
            logger.info("graver: cache hit for %dx%d matrix", matrix.rows, matrix.cols)
            return hit
    basis = graver(matrix, limits)
    if cache is not None:
        cache.save_graver(basis)
    return basis
