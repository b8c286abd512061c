import pytest

from coxlow import battery_root_system, build_automaton, small_roots

# rational-form battery groups (all bond labels in {1, 2, 3, inf})
RATIONAL_NAMES = ["2-2-2", "3-2-2", "A3", "affine-3-3-3", "2-2-inf",
                  "2-inf-inf", "universal", "inf-3-3", "universal-override"]


class _BatteryCache:
    """Session-wide cache of (root system, small roots, automaton) per group."""

    def __init__(self):
        self._data = {}

    def get(self, name, backend="float"):
        key = (name, backend)
        if key not in self._data:
            rs = battery_root_system(name, backend=backend)
            sigma = small_roots(rs)
            aut = build_automaton(rs, sigma)
            self._data[key] = (rs, sigma, aut)
        return self._data[key]


@pytest.fixture(scope="session")
def battery():
    return _BatteryCache()
