"""Fixed-outline floorplanning of soft modules by iterative merging."""

from .feasibility import FeasibilityReport, check_theorem1, check_zds_condition, dominance_gap
from .generate import GenSpec, Mode, generate
from .imp import PlacementReport, place, stage1_merge, stage2_realize
from .model import (
    AreaMismatch,
    AspectInterval,
    Circuit,
    FloorplanError,
    Instance,
    InvalidArgument,
    InvalidInstance,
    InvalidLayout,
    Layout,
    PlacedRect,
    SoftModule,
    interval_of_module,
    total_area,
)
from .verify import VerifyReport, hpwl, verify
from .zds import bipartition, zds_place

__version__ = "0.1.0"
