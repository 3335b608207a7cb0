"""The barred-unbarred letter alphabet, column words, and the red map.

A letter is an int: m > 0 is unbarred m, m < 0 is barred |m|, 0 is the
zero-letter (row crystals only).  The total order is
1 < 2 < ... < 0 < ... < bar2 < bar1, with the zero-letter in the middle.
The empty one-box factor is represented by None in split chains.
"""

from itertools import combinations

EMPTY = None  # the empty one-box factor


def key(x):
    """Sort key for the letter order; EMPTY sorts below everything."""
    if x is EMPTY:
        return (-1, 0)
    if x > 0:
        return (0, x)
    if x == 0:
        return (1, 0)
    return (2, x)


def prec(x, y):
    """x strictly precedes y."""
    return key(x) < key(y)


def letter_str(x):
    if x is EMPTY:
        return "[]"
    return str(x)


def word_str(w):
    if not w:
        return "[]"
    return ",".join(letter_str(x) for x in w)


def parse_word(text):
    """Parse '2,4,-2' into a letter tuple; '[]' or '' is the empty word."""
    text = text.strip()
    if text in ("[]", ""):
        return ()
    return tuple(int(p) for p in text.split(","))


def sort_word(letters):
    return tuple(sorted(letters, key=key))


def is_column_word(w):
    """Strictly increasing, no zero-letter."""
    if any(x == 0 for x in w):
        return False
    return all(prec(a, b) for a, b in zip(w, w[1:]))


def is_admissible(w):
    """Column admissibility: for every i with i and bar-i both present,
    #(letters below i) + #(letters above bar-i) < i - 1."""
    s = set(w)
    for x in w:
        if x > 0 and -x in s:
            below = sum(1 for c in w if prec(c, x))
            above = sum(1 for c in w if prec(-x, c))
            if below + above >= x - 1:
                return False
    return True


def red(w):
    """Reduce to an admissible word by deleting offending (i, bar-i) pairs.

    At each step the pair with the largest score (count excess over i) is
    deleted, smallest i winning ties.
    """
    w = sort_word(w)
    while True:
        s = set(w)
        best = None
        for x in sorted(c for c in w if c > 0 and -c in s):
            below = sum(1 for c in w if prec(c, x))
            above = sum(1 for c in w if prec(-x, c))
            score = below + above - x
            if score >= -1 and (best is None or score > best[0]):
                best = (score, x)
        if best is None:
            return w
        x = best[1]
        w = tuple(c for c in w if c not in (x, -x))


def unred(w, r):
    """The unique strict word of length len(w) + 2r reducing to w.

    Search over insertions of r disjoint (m, bar-m) pairs; magnitudes are
    bounded because a deleted pair needs enough letters around it.
    """
    w = sort_word(w)
    if not is_admissible(w):
        raise ValueError("unred needs an admissible word")
    if r == 0:
        return w
    k = len(w) + 2 * r
    used = {abs(x) for x in w}
    candidates = [m for m in range(1, k + 1) if m not in used]
    found = None
    for ms in combinations(candidates, r):
        cand = sort_word(w + tuple(ms) + tuple(-m for m in ms))
        if red(cand) == w:
            if found is not None:
                raise ValueError("unred is not unique for %r" % (w,))
            found = cand
    if found is None:
        raise ValueError("no unred preimage for %r, r=%d" % (w, r))
    return found
