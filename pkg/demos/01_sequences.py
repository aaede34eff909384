"""Walk through the recurrence sequences behind X(p) and Z(p).

Run with:  python demos/01_sequences.py
"""

from harmsum.recurrence import (
    F_SPEC,
    G_SPEC,
    J_SPEC,
    KAPPA_SPEC,
    eval_exact,
    eval_mod,
    g_from_f,
    j_decompose_g,
    multisection_block,
    terms_exact,
)

## f(n): ninth order, f(p) = 0 (mod p) for every prime p
f = terms_exact(F_SPEC, 36)
print("f(1..12) =", f[:12])
print("f(36)    =", f[-1])

## g(n) = (f(n) + shift) / 3, same order but splits into two-class multisections
g = [g_from_f(n, f[n - 1]) for n in range(1, 13)]
print("g(1..12) =", g)
assert g == terms_exact(G_SPEC, 12)

## the third-order j(n) rebuilds every g(n) through a case split on n mod 9
print("j(1..11) =", terms_exact(J_SPEC, 11))
print("g(n) from j, n = 2..12:", [j_decompose_g(n) for n in range(2, 13)])

## multisection of g over n = +-1 (mod 9), interleaved
print("block +-1:", multisection_block(1, 7))

## kappa(n): seventh order, the table lists kappa(n)/3
print("kappa(n)/3, n = 1..12:", [k // 3 for k in terms_exact(KAPPA_SPEC, 12)])

## modular evaluation at huge indices costs O(log n)
p = 1_000_003
print(f"f({p}) mod {p}     =", eval_mod(F_SPEC, p, p))
print(f"kappa({p}) mod p   =", eval_mod(KAPPA_SPEC, p, p))
print(f"f({p}) mod p^2 / p =", eval_mod(F_SPEC, p, p * p) // p)
print("exact f(200) has", len(str(eval_exact(F_SPEC, 200))), "digits")
