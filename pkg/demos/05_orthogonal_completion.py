"""Completing point sets to self-associated ones.

A set of r+1+d general points extends to an arithmetically Gorenstein
set of 2r+2 exactly when C(d, 2) <= r.  The completion finds a diagonal
bilinear form making the extra points mutually orthogonal and fills the
second orthogonal basis by Gram-Schmidt.  For 11 points in P^6 the bound
is tight, and the plane spanned by the three added points is independent
of every random choice made along the way.
"""

import random

from galekit import QQ
from galekit.generators import random_lgp_configuration
from galekit.scenarios import added_span_canonical
from galekit.selfassoc import CompletionStatus, complete_to_self_associated

rng = random.Random(11)

five = random_lgp_configuration(rng, QQ, 2, 5)
result = complete_to_self_associated(five)
print("five general points of P^2:", result.status.value)
print("sixth point (on the conic through the five):")
print(" ".join(str(x) for x in result.configuration.point(5)), end="\n\n")

seven = random_lgp_configuration(rng, QQ, 2, 7)
print("seven general points of P^2:", complete_to_self_associated(seven).status.value)
print("  (the 6 orthogonality conditions on 3 diagonal unknowns only have")
print("   the zero solution, so no completion exists)", end="\n\n")

eleven = random_lgp_configuration(rng, QQ, 6, 11)
planes = []
for seed in range(3):
    completion = complete_to_self_associated(eleven, seed=seed)
    assert completion.status is CompletionStatus.COMPLETED
    planes.append(added_span_canonical(completion))
print("eleven general points of P^6 complete to fourteen; the three added")
print("points span the same distinguished plane for every random pool:")
print("  planes (canonical 3 x 7 row spaces) equal across seeds:",
      all(p == planes[0] for p in planes))
largest = max(
    max(abs(x.numerator), x.denominator) for row in planes[0].entries for x in row
)
print(f"  the exact plane coordinates carry up to {len(str(largest))}-digit integers,")
print("  which is why this demo compares them instead of printing them")
