"""Shared matings in the V2 family of quadratic rational maps.

Core pipeline: a preperiodic external angle beta determines a Misiurewicz
polynomial parameter c, a basilica-pair partner angle beta', and a V2
parameter a with a preperiodic free critical orbit; lamination and bubble
correspondences then verify at finite depth that both members of the pair
produce the same rational map.
"""

__version__ = "0.1.0"
