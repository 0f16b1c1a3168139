"""Code duality is the Gale transform.

A generalized Reed-Solomon code evaluates low-degree polynomials at
distinct points of the projective line.  Its dual is again GRS on the
same points (Goppa duality); the dual multipliers fall out of one linear
system.  On the geometry side, the columns of the dual generator are the
Gale transform of the moment-curve embedding of the evaluation points.
"""

from galekit.codes import (
    GrsSpec,
    code_points,
    dual_code,
    grs_code,
    grs_dual_multipliers,
    min_distance,
)
from galekit.curves import parameter_list, rnc_embed
from galekit.exactla import GF
from galekit.gale import gale_transform
from galekit.pointconfig import is_equivalent_labeled

field = GF(13)
points = parameter_list(field, [0, 1, 2, 3, 5, 8, 11])
spec = GrsSpec.new(points, [1] * 7, 3)
code = grs_code(spec)
print("[7, 3] GRS code over GF(13), generator:")
print(code.generator, end="\n\n")

print("minimum distance:", min_distance(code), "= n - k + 1 (MDS)", end="\n\n")

duals = grs_dual_multipliers(spec)
print("dual multipliers:", " ".join(str(d) for d in duals))
dual = dual_code(code)
print("dual dimension:", dual.k, end="\n\n")

# the geometric identity behind Goppa duality
left = code_points(dual)
right = gale_transform(rnc_embed(points, 2)).transform
print(
    "dual generator columns vs. Gale transform of the conic embedding:",
    is_equivalent_labeled(left, right).value,
)

# degree-h and degree-(n-h-2) embeddings of the same points are Gale dual
from galekit.curves import goppa_dual_check

report = goppa_dual_check(points, 2)
print(
    f"Gale of the degree-{report.h} embedding is the degree-{report.dual_degree} "
    f"embedding: {report.equivalence.value}"
)
