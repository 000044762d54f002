"""Tests for the exception hierarchy."""

from __future__ import annotations

import pytest

from graverkit.errors import (
    CertificateFailure,
    GraverkitError,
    InfiniteFiberError,
    MatrixFormatError,
    PreconditionError,
    ResourceLimitExceeded,
)


class TestErrors:
    """Messages and the common base."""

    @pytest.mark.parametrize("cls", [InfiniteFiberError, PreconditionError, CertificateFailure])
    def test_plain_subclasses(self, cls: type[GraverkitError]) -> None:
        """The message is kept as given."""
        err = cls("no positive row combination")
        assert isinstance(err, GraverkitError)
        assert err.message == "no positive row combination"
        assert str(err) == "no positive row combination"

    def test_matrix_format_position(self) -> None:
        """Line and column lead the message."""
        err = MatrixFormatError("not a base-10 integer: 'x'", line=3, column=2)
        assert str(err) == "line 3, column 2: not a base-10 integer: 'x'"
        assert (err.line, err.column) == (3, 2)
        assert str(MatrixFormatError("empty input")) == "empty input"

    def test_resource_limit_names_cap(self) -> None:
        """The cap and its value are part of the message."""
        err = ResourceLimitExceeded("max_norm", 40, "pair queue")
        assert str(err) == "cap max_norm=40 exceeded (pair queue)"
        assert err.cap == "max_norm"
        assert err.limit == 40
