"""!
@brief Angle helpers.

Angles are stored as raw radians everywhere. Canonical reduction is only used when comparing or merging: Ry/Ry⁺
angles have period 4π (the half-angle matrix), Rz⁺ phases have period 2π.
"""
import math
import re

ANGLE_ZERO_TOL = 1e-12

RY_PERIOD = 4.0 * math.pi
PHASE_PERIOD = 2.0 * math.pi

# [-][coefficient][*]pi[/denominator] (or the π symbol), e.g. pi/4, -3pi/4, 3*pi/2, 0.5*pi, -pi
_PI_LITERAL = re.compile(r'^([+-])?\s*(\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*(?:pi|π)\s*(?:/\s*(\d+(?:\.\d*)?))?$', re.IGNORECASE)


def check_finite(theta: float) -> float:
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError('Angle must be finite, got %r.' % theta)
    return theta


def canonical(theta: float, period: float) -> float:
    """!
    @brief Reduce an angle to its representative in [-period/2, period/2).
    """
    return (theta + period / 2.0) % period - period / 2.0


def canonical_ry(theta: float) -> float:
    return canonical(theta, RY_PERIOD)


def canonical_phase(theta: float) -> float:
    return canonical(theta, PHASE_PERIOD)


def _is_zero_mod(theta: float, period: float, tol: float) -> bool:
    return abs(canonical(theta, period)) < tol


def is_zero_ry(theta: float, tol: float = ANGLE_ZERO_TOL) -> bool:
    return _is_zero_mod(theta, RY_PERIOD, tol)


def is_zero_phase(theta: float, tol: float = ANGLE_ZERO_TOL) -> bool:
    return _is_zero_mod(theta, PHASE_PERIOD, tol)


def ry_angles_equal(a: float, b: float, tol: float = ANGLE_ZERO_TOL) -> bool:
    return is_zero_ry(a - b, tol)


def phases_equal(a: float, b: float, tol: float = ANGLE_ZERO_TOL) -> bool:
    return is_zero_phase(a - b, tol)


def parse_angle(text: str) -> float:
    """!
    @brief Parse a decimal or `pi`-fraction angle literal.

    Examples:
    ```py
    parse_angle('0.5')     # 0.5
    parse_angle('pi/4')    # 0.7853981633974483
    parse_angle('-3pi/4')  # -2.356194490192345
    parse_angle('2*pi')    # 6.283185307179586
    ```

    @param text The literal.

    @return The angle in radians.
    """
    text = text.strip()
    m = _PI_LITERAL.match(text)
    if m is not None:
        sign = -1.0 if m.group(1) == '-' else 1.0
        coefficient = float(m.group(2)) if m.group(2) is not None else 1.0
        denominator = float(m.group(3)) if m.group(3) is not None else 1.0
        if denominator == 0.0:
            raise ValueError("Invalid angle '%s': division by zero." % text)
        return sign * coefficient * math.pi / denominator

    try:
        value = float(text)
    except ValueError:
        raise ValueError("Malformed number '%s'." % text)
    if not math.isfinite(value):
        raise ValueError("Angle must be finite, got '%s'." % text)
    return value


def format_angle(theta: float) -> str:
    """!
    @brief Format an angle with 17 significant digits so it parses back to the identical float.
    """
    return '%.17g' % theta
