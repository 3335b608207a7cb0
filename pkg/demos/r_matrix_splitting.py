"""Moving a column past a box, and flattening everything to boxes.

The combinatorial R-matrix swaps a column factor with a one-box factor by
a short list of case rules; the splitting map repeats those moves until
only boxes remain, changing the energy by a constant that depends only on
the capacities.
"""

from krlab.kr_column import (
    BOX,
    VDOM,
    ColumnKR,
    energy_chain,
    energy_col,
    r_matrix_col,
    split_col,
    split_image_hw,
    tol_midd,
)
from krlab.letters import word_str

print("Case rules on B^{7,1} of the vertical-domino kind:")
for word, box in (((2, 4, -2), 1), ((2, 3, 4, 5, 6), 1), ((1, 3, 5), -3)):
    u = ColumnKR(VDOM, 7, word)
    left, right, tag = r_matrix_col(u, box)
    print(
        "  %s (x) %s  ->  %s (x) %s   (case %s)"
        % (word_str(word), box, word_str((left,)), word_str(right.word), tag)
    )

print()
print("Splitting a highest weight pair, procedure versus closed form:")
u = ColumnKR(VDOM, 4, (4, -4))
up = ColumnKR(VDOM, 3, (1, 2, 3))
print("  pair 4 -4 (x) 123, tol and midd:", tol_midd(u, up))
chain = split_col((u, up))
print("  procedure: ", word_str(chain))
print("  closed form:", word_str(split_image_hw(u, up)))
print("  chain energy %d, tensor energy %d" % (energy_chain(chain, VDOM), energy_col((u, up))))

print()
print("A three factor splitting:")
t = (
    ColumnKR(VDOM, 4, (1, 2, -4, -3)),
    ColumnKR(VDOM, 4, (1, 2)),
    ColumnKR(VDOM, 4, (1, 2, 3, 4)),
)
print("  12-4-3 (x) 12 (x) 1234  ->", word_str(split_col(t)))

print()
print("Single-box columns admit the empty factor; the R-matrix threads it:")
u = ColumnKR(BOX, 7, (2, 3, 4))
left, right, tag = r_matrix_col(u, 1)
print("  234 (x) 1 ->", word_str((left,)), "(x)", word_str(right.word), "(case %s)" % tag)
