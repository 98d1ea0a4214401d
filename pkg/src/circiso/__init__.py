"""Circulant graphs, Adam's and Type-2 isomorphisms, and the n*p^3 families."""

__version__ = "0.1.0"

from .errors import CircIsoError  # noqa: E402
from .zmod import (  # noqa: E402
    CirculantGraph,
    expand_full,
    gcd_profile,
    periodic_cycle_length,
    reflexive_reduce,
    spectrum_invariant,
    units,
)
from .zmod import is_symmetric  # noqa: E402
from .transforms import ThetaParams, adams_image, theta_graph, theta_residue, theta_set  # noqa: E402
from .verdicts import IsoVerdict, Step  # noqa: E402
from .oracle import brute_force_isomorphic, verify_certificate, witness_to_certificate  # noqa: E402
from .orbits import adams_orbit, ci_scan, classify_pair, composite_search, type2_group, v_orbit  # noqa: E402
from .families import (  # noqa: E402
    ExtendedParams,
    FamilyParams,
    annexure_listing,
    complement_params,
    extended_family_set,
    family_all,
    family_base_jump,
    family_set,
    verify_family,
)
from .textio import parse_graph, render_graph  # noqa: E402

__all__ = [
    "CircIsoError",
    "CirculantGraph",
    "ExtendedParams",
    "FamilyParams",
    "IsoVerdict",
    "Step",
    "ThetaParams",
    "adams_image",
    "adams_orbit",
    "annexure_listing",
    "brute_force_isomorphic",
    "ci_scan",
    "classify_pair",
    "complement_params",
    "composite_search",
    "expand_full",
    "extended_family_set",
    "family_all",
    "family_base_jump",
    "family_set",
    "gcd_profile",
    "is_symmetric",
    "parse_graph",
    "periodic_cycle_length",
    "reflexive_reduce",
    "render_graph",
    "spectrum_invariant",
    "theta_graph",
    "theta_residue",
    "theta_set",
    "type2_group",
    "units",
    "v_orbit",
    "verify_certificate",
    "verify_family",
    "witness_to_certificate",
]
