"""Existence by reduction, and the prime-degree picture.

Block reductions rewrite a curve whose multiplicity sequence starts
(kn, n repeated 2k, ...) into a curve of degree n, so existence cascades
down to a small registry of classically known low-degree curves.  The
script traces every three-pair curve of degree <= 30 down its chain, then
scans prime degrees for nontrivial curves -- the supply of such primes is
tied to well-known open problems on Fibonacci primes and primes of the
form s*n^2 + 1.
"""

from cuspidal import (
    multiplicity_sequence,
    prime_degree_scan,
    resolve_existence,
)
from cuspidal.tables import THREE_PAIR_ROWS

print("reduction chains for the three-pair curves:")
for degree, pairs, mult_text in THREE_PAIR_ROWS:
    status, chain = resolve_existence(degree, multiplicity_sequence(pairs))
    trail = " -> ".join(
        f"d={s.to_degree}" for s in chain if s.to_degree is not None
    )
    origin = f"d={degree} [{mult_text}]"
    if trail:
        print(f"  {origin:<26} -> {trail:<18} {status}")
    else:
        print(f"  {origin:<26}    {'':<18} {status}")

print("\nprimes below 120 carrying a curve beyond the generic (p-1, p) one:")
for prime, witnesses in prime_degree_scan(120):
    tags = ", ".join(w[0] + str(w[1:]) for w in witnesses)
    print(f"  {prime:>4}  {tags}")
