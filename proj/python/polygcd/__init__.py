"""gcd(f(n), g(n)) for monic integer polynomials f and g."""

from ._core import (
    CapExceeded,
    InputError,
    InvariantBreach,
    analyze,
    brute_force,
    common_root,
    coprime_witness,
    factor,
    is_prime,
    minimal_period,
    parse_poly,
    resultant,
    smith_normal_form,
)

__all__ = [
    "CapExceeded",
    "InputError",
    "InvariantBreach",
    "analyze",
    "brute_force",
    "common_root",
    "coprime_witness",
    "factor",
    "is_prime",
    "minimal_period",
    "parse_poly",
    "resultant",
    "smith_normal_form",
]
