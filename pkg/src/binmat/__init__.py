"""Exact computations with binary matroids: minors, connectivity, 3-sums and
the classification of 3-connected binary matroids without a P9-minor."""

from __future__ import annotations

from .gf2 import GF2Matrix, rank, rref
from .matroid import BinaryMatroid, from_columns, from_reduced, from_text, to_text
from .connectivity import (Separation, connectivity, find_separation, is_internally_4_connected,
                           is_three_connected, tau)
from .canonical import CanonicalKey, are_isomorphic, canonical_key, isomorphism
from .minors import (MinorWitness, RootedPattern, find_minor, find_rooted_minor, has_minor,
                     has_rooted_minor, is_cographic, is_graphic, is_p9_free, is_regular)
from .catalog import L_MEMBERS, SpikeSpec, named, names, spike

__version__ = "0.1.0"

__all__ = [
    "GF2Matrix", "rank", "rref",
    "BinaryMatroid", "from_columns", "from_reduced", "from_text", "to_text",
    "Separation", "connectivity", "find_separation", "is_internally_4_connected",
    "is_three_connected", "tau",
    "CanonicalKey", "are_isomorphic", "canonical_key", "isomorphism",
    "MinorWitness", "RootedPattern", "find_minor", "find_rooted_minor", "has_minor",
    "has_rooted_minor", "is_cographic", "is_graphic", "is_p9_free", "is_regular",
    "L_MEMBERS", "SpikeSpec", "named", "names", "spike",
]
