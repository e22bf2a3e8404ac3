import sys

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

# tests stringify and parse integers far beyond CPython's default cap
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
