"""Published constants of the reference systems and the thresholds they are held to.

This module is the only place these numbers are written down.
"""

import math

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

# Three-atom system with an embedded 3-IET.
PAPER_3PWI_ALPHA = 1.3
PAPER_3PWI_BETA = 0.75
# z'_0..z'_3; z'_1 printed as "0, 0.215998 + i 0.168125", the leading "0," dropped.
PAPER_3PWI_POINTS = (
    0j,
    0.215998 + 0.168125j,
    0.491520 + 0.051612j,
    0.586452 + 0j,
)
# theta'_1 printed as 4.460361; 4.960361 = -2 arg z'_1 mod 2pi is the value for which
# T'_1(z'_0) = T'_2(z'_2) and the orbit of z'_0 follows the exchange.
PAPER_3PWI_THETA = (4.960361, 0.800153, 0.995933)
PAPER_3PWI_LENGTHS = (0.3910666426, 0.4553369973, 0.1535963601)
PAPER_3PWI_PERM = (3, 2, 1)
PAPER_3PWI_XI = (-0.453 + 0.651j, 0.326 + 0.669j, 0.417 + 0.679j)
PAPER_3PWI_RESIDUAL = 1.19e-5
PAPER_3PWI_MATCH = 60_000

# Four-cone family evaluated at the return-strip parameters.
RETURN_STRIP_ALPHA = 0.5
RETURN_STRIP_BETA = 1.0
RETURN_STRIP_RATIO = GOLDEN
RETURN_STRIP_LENGTHS = (0.1217970148, 0.1329352086, 0.2008884081, 0.3550989199)
RETURN_STRIP_PERM = (4, 2, 1, 3)
RETURN_STRIP_ANCHOR = 0.47665 * complex(math.cos(0.68165 * math.pi), math.sin(0.68165 * math.pi))
RETURN_STRIP_FREQUENCY_SEED = 0.416j
RETURN_STRIP_BOUNDARY_RADII = (0.470, 0.503)
RETURN_STRIP_SEED_ANGLE = math.pi - 1.0
# Radii reached by the boundary seeds under S; the printed annulus is too narrow.
RETURN_STRIP_BAND = (0.39, 0.55)
RETURN_STRIP_XI = (0.718 + 0.125j, 0.538 - 0.512j, 0.460 - 0.438j, 0.300 - 0.562j)
RETURN_STRIP_RESIDUAL = 6.30e-6
RETURN_STRIP_MATCH = 100_000

# Reproduction thresholds.
XI_LEVEL = 8
XI_TOL = 5e-3
RESIDUAL_THRESHOLD = 1e-4
PARAMETRIC_TOL = 1e-10
FREQUENCY_STEPS = 1_000_000
FREQUENCY_TOL = 5e-3
ANCHOR_RELATION_TOL = 5e-5
ANNULUS_STEPS = 100_000
