"""The Gale transform, hands on.

Four labeled points on the projective line already show everything:
the transform is computed from the kernel of the transposed coordinate
matrix, applying it twice returns the original points up to a projective
change of coordinates, and the rank duality ties subsets of the source
to complementary subsets of the transform.
"""

from galekit import QQ, PointConfiguration
from galekit.gale import duality_defects, gale_transform
from galekit.pointconfig import is_equivalent_labeled

points = PointConfiguration.new(QQ, 1, [[1, 0], [0, 1], [1, 1], [1, 2]])
print("four points on the line:")
print(points.coords, end="\n\n")

result = gale_transform(points)
print("their Gale transform (rows of the kernel of G^T):")
print(result.transform.coords, end="\n\n")

product = points.coords.transpose() @ result.transform.coords
print("G^T . G' =", "0 (exact)" if product.is_zero() else "NONZERO?!", end="\n\n")

back = gale_transform(result.transform).transform
print("transforming twice returns the original labeled configuration:")
print("  equivalence:", is_equivalent_labeled(back, points).value, end="\n\n")

# rank duality: a subset failing to span matches the complementary labels
# failing to impose independent conditions on the transform
six = PointConfiguration.new(
    QQ, 2, [[1, 0, 0], [1, 1, 0], [1, 2, 0], [1, 3, 0], [0, 0, 1], [1, 1, 1]]
)
span_failure, condition_failure = duality_defects(six, (0, 1, 2, 3))
print("six plane points with four on a line, subset = the collinear four:")
print(f"  failure to span P^2:                 {span_failure}")
print(f"  complementary condition failure:     {condition_failure}")
