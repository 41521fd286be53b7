import math

import pytest

from addcirc import trace as logging
from addcirc.angles import (canonical_phase, canonical_ry, check_finite, format_angle, is_zero_phase, is_zero_ry,
                            parse_angle, phases_equal, ry_angles_equal)

logging.getLogger('addcirc').setLevel(logging.TRACE)


def test_canonical_ranges():
    assert canonical_ry(4 * math.pi + 0.1) == pytest.approx(0.1)
    assert canonical_ry(-0.1) == pytest.approx(-0.1)
    assert canonical_phase(2 * math.pi + 0.1) == pytest.approx(0.1)
    assert abs(canonical_phase(3 * math.pi)) == pytest.approx(math.pi)


def test_zero_checks():
    # Ry(2π) is -I, so it is not the identity rotation.
    assert not is_zero_ry(2 * math.pi)
    assert is_zero_ry(4 * math.pi)
    assert is_zero_ry(0.0)
    assert is_zero_phase(2 * math.pi)
    assert is_zero_phase(-2 * math.pi)
    assert not is_zero_phase(math.pi)


def test_angle_equality():
    assert ry_angles_equal(0.3, 0.3 + 4 * math.pi)
    assert not ry_angles_equal(0.3, 0.3 + 2 * math.pi)
    assert phases_equal(1.0, 1.0 + 2 * math.pi)
    assert not phases_equal(1.0, 1.5)


def test_parse_angle():
    assert parse_angle('0.5') == 0.5
    assert parse_angle('1e-3') == 0.001
    assert parse_angle('pi') == math.pi
    assert parse_angle('-pi') == -math.pi
    assert parse_angle('pi/4') == math.pi / 4
    assert parse_angle('-3pi/4') == pytest.approx(-3 * math.pi / 4)
    assert parse_angle('2*pi') == pytest.approx(2 * math.pi)
    assert parse_angle('0.5*pi') == pytest.approx(math.pi / 2)
    assert parse_angle('π/2') == pytest.approx(math.pi / 2)
    assert parse_angle(' PI/2 ') == pytest.approx(math.pi / 2)


def test_parse_angle_errors():
    with pytest.raises(ValueError, match='Malformed number'):
        parse_angle('abc')
    with pytest.raises(ValueError, match='finite'):
        parse_angle('nan')
    with pytest.raises(ValueError, match='division by zero'):
        parse_angle('pi/0')
    with pytest.raises(ValueError):
        check_finite(float('inf'))


def test_format_angle_exact():
    for value in (0.1, -math.pi / 3, 1e-17, 12345.678901234567):
        assert parse_angle(format_angle(value)) == value
