"""Search a prime range for vanishing sums and components.

Run with:  python demos/03_vanishing_search.py [bound]
"""

import sys
import time
from collections import defaultdict

from harmsum.search import overlap_report, scan

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
targets = [f"sum:{k}/9" for k in range(4)] + [f"sum:{k}/18" for k in range(9)] + ["X", "Z"]

t0 = time.perf_counter()
hits = scan(targets, 2, bound)
elapsed = time.perf_counter() - t0

found = defaultdict(list)
for h in hits:
    found[h.target].append(h.p)

print(f"primes below {bound}, {elapsed:.1f} s")
for t in targets:
    print(f"  {t:>9}: {found[t] or '-'}")

## no prime kills two different targets
print("overlap:", overlap_report(hits) or "none")
