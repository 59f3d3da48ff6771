"""Cartan prolongation towers."""
from superspencer.prolong.tower import (
    ProlongationTower,
    cartan_prolong,
    prolong_step,
    tower_bracket,
)

__all__ = ["ProlongationTower", "cartan_prolong", "prolong_step", "tower_bracket"]
