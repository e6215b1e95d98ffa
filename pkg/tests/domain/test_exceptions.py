"""Tests for domain exceptions."""

import pytest

from mobius_orbits.domain.exceptions import (
    ConfigurationError,
    DegenerateOrbitError,
    IdentityTransformError,
    IndeterminateFormError,
    MobiusOrbitsError,
    NotQuaternionicError,
    PolarAxisDegenerateError,
    ReportError,
    ZeroQuaternionError,
)

ALL_ERRORS = [
    ZeroQuaternionError,
    PolarAxisDegenerateError,
    NotQuaternionicError,
    IdentityTransformError,
    DegenerateOrbitError,
    IndeterminateFormError,
    ConfigurationError,
    ReportError,
]


class TestExceptionHierarchy:
    """Tests for exception class hierarchy."""

    @pytest.mark.parametrize("error_cls", ALL_ERRORS)
    def test_is_mobius_orbits_error(self, error_cls: type[Exception]) -> None:
        """Every domain error inherits from MobiusOrbitsError."""
        err = error_cls("test")
        assert isinstance(err, MobiusOrbitsError)
        assert isinstance(err, Exception)

    def test_base_catches_subclasses(self) -> None:
        """Catching the base class catches a raised subclass."""
        with pytest.raises(MobiusOrbitsError):
            raise ZeroQuaternionError("zero")


class TestExceptionMessages:
    """Tests for exception message handling."""

    def test_zero_quaternion_message(self) -> None:
        """ZeroQuaternionError preserves message."""
        err = ZeroQuaternionError("Cannot normalize the zero quaternion")
        assert "zero quaternion" in str(err)

    def test_indeterminate_form_message(self) -> None:
        """IndeterminateFormError preserves message."""
        err = IndeterminateFormError("0 · ∞ is indeterminate")
        assert "indeterminate" in str(err)

    def test_report_error_message(self) -> None:
        """ReportError preserves message."""
        err = ReportError("Failed to write report: out.json")
        assert "out.json" in str(err)
