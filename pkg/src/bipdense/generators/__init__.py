"""Extremal constructions with exact edge counts."""
from .cylinder import THREE_PLANAR_CONSTANT, gen_2planar, gen_3planar, gen_cylinder, gen_ic, gen_nic
from .fan import VARIANTS as FAN_VARIANTS
from .fan import gen_fan
from .fixtures import gen_8sticks_fixture
from .rac import gen_rac

__all__ = [
    "FAN_VARIANTS",
    "THREE_PLANAR_CONSTANT",
    "gen_2planar",
    "gen_3planar",
    "gen_8sticks_fixture",
    "gen_cylinder",
    "gen_fan",
    "gen_ic",
    "gen_nic",
    "gen_rac",
]
