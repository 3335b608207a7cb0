"""Oscillating chains and their index maps.

A chain of horizontal strips records a highest weight element twice over:
column indices land in column crystals, row indices (through the
pair-cancelling bijection) in row crystals, where the boundedness
statistic of the chain becomes the affine statistic of the tensor.  The
widening map pushes a chain into a longer first strip, preserving energy;
the insertion correspondence turns one-cell chains into tableau pairs.
"""

from krlab.kr_row import eps0
from krlab.oscillating import (
    SSOT,
    aug,
    chain_c2,
    cind,
    enumerate_chains,
    energy_of_chain,
    gamma,
    phi_c,
    phi_r,
    rind_ohs,
    std,
)
from krlab.rsk import bound_from_q, phi_bc, phi_bc_stage1, q_entries

strip = ((2, 1), (3, 2), (3,))
print("A single strip %s -> %s -> %s:" % strip)
print("  column indices:", cind(strip))
print("  row indices:   ", rind_ohs(strip))
print("  standardization path:", std(strip))
print("  after pair cancelling:", gamma(strip))

print()
print("Chains of weight (3,3) and shape (2):")
for chain in enumerate_chains(SSOT, (2,), (3, 3)):
    t_col = phi_c(chain, SSOT, (3, 3))
    t_row = phi_r(chain, SSOT, (3, 3))
    print("  chain", chain)
    print(
        "    columns %s    rows %s    c-statistic %s    eps0 %d"
        % (
            " (x) ".join(str(f.word) for f in t_col),
            " (x) ".join(str(f.word) for f in t_row),
            chain_c2(chain, SSOT, (3, 3)) / 2,
            eps0(t_row),
        )
    )

print()
print("Widening the first strip preserves the energy:")
for chain in enumerate_chains(SSOT, (5,), (4, 7), two_g=14)[:3]:
    bigger = aug(chain, 3, (4, 7))
    print(
        "  %s  ->  %s   (energy %d in both)"
        % (
            " (x) ".join(str(f.word) for f in phi_c(chain, SSOT, (4, 7))),
            " (x) ".join(str(f.word) for f in phi_c(bigger, SSOT, (7, 7))),
            energy_of_chain(chain, SSOT, (4, 7)),
        )
    )
    assert energy_of_chain(chain, SSOT, (4, 7)) == energy_of_chain(
        bigger, SSOT, (7, 7)
    )

print()
print("The insertion correspondence on a one-cell chain:")
G = ((), (1,), (2,), (2, 1), (1, 1), (1, 1), (2, 1), (2,), (3,), (3, 1))
T, I = phi_bc_stage1(G)
print("  leftover tableau:", T)
print("  two-line array:  ", I)
P, Q = phi_bc(G)
print("  insertion tableau:", P)
print("  labelled cells:   ", q_entries(Q))
print("  bounded at g = 3:", bound_from_q(Q, (3, 1), 6))
print("  bounded at g = 5/2:", bound_from_q(Q, (3, 1), 5))
