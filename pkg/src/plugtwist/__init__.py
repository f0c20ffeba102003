"""Twist calculus for 2-bridge plugs and g-corks.

Continued fractions and their normal forms, twist words in B_3 with the
Burau word problem, Alexander and Seiberg-Witten polynomials, small integral
quadratic forms, and the adjunction obstruction for the Y_n family.
"""

from .rationals import Rational, cf_evaluate, cf_expand, cf_normalize
from .braids import BraidWord, TwistWord, burau, is_trivial, to_braid, twist_word
from .invariants import alexander_two_bridge, basic_classes, torus_link_alexander
from .qforms import classify_twist, enumerate_isometries, standard_form
from .obstruction import nondiffeo_certificate

__version__ = "0.1.0"

__all__ = [
    "Rational", "cf_evaluate", "cf_expand", "cf_normalize",
    "BraidWord", "TwistWord", "burau", "is_trivial", "to_braid", "twist_word",
    "alexander_two_bridge", "basic_classes", "torus_link_alexander",
    "classify_twist", "enumerate_isometries", "standard_form",
    "nondiffeo_certificate",
]
