"""
Import all value types to make them available through the models package.
"""

from secorder.models.bitword import (
    BitWord, weight, join, meet, leq, bottom, top, unit, combinations, successors
)
from secorder.models.family import GroundSet, SetFamily, Section, make_section
from secorder.models.cover_map import CoverMap
from secorder.models.boolean_function import BooleanFunction
from secorder.models.report import CaseTag, RefutationReport, Placement, placement_key

__all__ = [
    'BitWord',
    'weight',
    'join',
    'meet',
    'leq',
    'bottom',
    'top',
    'unit',
    'combinations',
    'successors',
    'GroundSet',
    'SetFamily',
    'Section',
    'make_section',
    'CoverMap',
    'BooleanFunction',
    'CaseTag',
    'RefutationReport',
    'Placement',
    'placement_key'
]
