"""Castelnuovo's lemma as an algorithm.

r+3 points in linearly general position lie on a unique rational normal
curve.  The fit goes through the Gale transform: the transform of the
points lives on the projective line and hands us curve parameters; one
linear solve recovers the curve matrix, and membership is decided exactly
by catalecticant minors.
"""

import random

from galekit import QQ
from galekit.curves import fit_rational_normal_curve, sample_parameters
from galekit.generators import random_lgp_configuration

rng = random.Random(2024)
cfg = random_lgp_configuration(rng, QQ, 3, 6)
print("six random points of P^3 in linearly general position:")
print(cfg.coords, end="\n\n")

curve = fit_rational_normal_curve(cfg)
print("twisted cubic through them, as a matrix acting on (a^3, a^2 b, a b^2, b^3):")
print(curve.matrix, end="\n\n")

print("membership of the input points:",
      all(curve.contains(cfg.point(i)) for i in range(6)))

# uniqueness: a fit based on a different frame gives the same curve, seen
# through shared sample points
other = fit_rational_normal_curve(cfg, fit_points=range(1, 6))
samples = sample_parameters(QQ, 9)
cross = all(other.contains(curve.point_at(samples.point(i))) for i in range(9))
print("nine sampled points of the first fit fall on the second fit:", cross)

print("a random off-curve point is rejected:", not curve.contains((1, 2, 3, 5)))
