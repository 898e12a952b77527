"""Moving between identifying and discriminating codes.

A discriminating code sits inside the even-weight half of F^n and must
cover and separate all odd-weight vertices.  Appending a parity bit to an
identifying code produces one; deleting any coordinate goes back.  Both
directions preserve the code size.
"""

from idcodes import min_identifying
from idcodes.convert import (
    discriminating_report,
    to_discriminating,
    to_identifying,
)

base = min_identifying(1, 4).code
print("1-identifying code in F^4:", base.words)

disc = to_discriminating(base)
print("\nparity-extended to F^5:", disc.words)
print("all weights even:", all(bin(w).count("1") % 2 == 0 for w in disc.words))

rep = discriminating_report(disc, 1)
print("1-discriminating:", rep.discriminating, f" (NC={rep.nc}, NS={rep.ns})")

back = to_identifying(disc)
print("\ndeleting the last coordinate returns the original:", back.words == base.words)

# Any coordinate works, not just the last one.
for pos in (1, 3, 5):
    other = to_identifying(disc, pos)
    print(f"deleting coordinate {pos}: size {len(other)}, words {other.words}")
