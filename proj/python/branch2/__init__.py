"""Dehn surgery, two-fold branched covers, and symmetry census toolkit."""

try:
    from ._branch2 import *  # installed package layout
    from ._branch2 import __doc__ as _core_doc
except ImportError:  # build-tree layout: extension sits next to the package
    from _branch2 import *
    from _branch2 import __doc__ as _core_doc

__all__ = [
    "slope_word",
    "twist_vector",
    "two_bridge_determinant",
    "two_bridge_diagram_text",
    "link_h1",
    "rolfsen_twist",
    "blow_down",
    "quotient_invariants",
    "quotient_h1",
    "seifert_h1",
    "euler_number",
    "extend_involution",
    "cyclic_quotient_coefficient",
    "census_report",
    "census_knots",
    "core_geodesic_length",
    "filling_residuals",
]
