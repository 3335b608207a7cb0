"""Insertion algorithms on distinct-entry tableaux, two-line arrays, Burge's
algorithm, the alpha/beta truncation operators, and the oscillating-tableau
correspondence with its boundedness criterion, plus the word rewriting used
for the vertical-domino filtration.

Tableaux are tuples of row tuples with strictly increasing rows and columns
and pairwise distinct entries.
"""

from .partitions import norm


def tab_shape(t):
    return tuple(len(r) for r in t)


def is_distinct_tableau(t):
    seen = set()
    for r, row in enumerate(t):
        for c, v in enumerate(row):
            if v in seen:
                return False
            seen.add(v)
            if c + 1 < len(row) and row[c + 1] <= v:
                return False
            if r + 1 < len(t) and c < len(t[r + 1]) and t[r + 1][c] <= v:
                return False
    return all(len(a) >= len(b) for a, b in zip(t, t[1:]))


def row_insert(t, x):
    """(T <- x): bump the leftmost larger entry down the rows."""
    rows = [list(r) for r in t]
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            break
        row = rows[r]
        pos = None
        for c, v in enumerate(row):
            if v > x:
                pos = c
                break
        if pos is None:
            row.append(x)
            break
        row[pos], x = x, row[pos]
        r += 1
    return tuple(tuple(r) for r in rows)


def column_insert(x, t):
    """(x -> T): bump the topmost larger entry across the columns."""
    cols = _columns(t)
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            break
        col = cols[c]
        pos = None
        for r, v in enumerate(col):
            if v > x:
                pos = r
                break
        if pos is None:
            col.append(x)
            break
        col[pos], x = x, col[pos]
        c += 1
    return _from_columns(cols)


def _columns(t):
    if not t:
        return []
    return [[t[r][c] for r in range(len(t)) if c < len(t[r])] for c in range(len(t[0]))]


def _from_columns(cols):
    rows = []
    r = 0
    while True:
        row = [col[r] for col in cols if r < len(col)]
        if not row:
            break
        rows.append(tuple(row))
        r += 1
    return tuple(rows)


def row_delete(t, cell):
    """Inverse of row insertion ending at the given corner (r, c); returns
    (tableau, bumped-out entry)."""
    r, c = cell
    rows = [list(x) for x in t]
    if c != len(rows[r]) - 1 or (r + 1 < len(rows) and len(rows[r + 1]) > c):
        raise ValueError("not a corner cell")
    y = rows[r].pop(c)
    if not rows[r]:
        rows.pop(r)
    for rr in range(r - 1, -1, -1):
        row = rows[rr]
        pos = None
        for i in range(len(row) - 1, -1, -1):
            if row[i] < y:
                pos = i
                break
        if pos is None:
            raise ValueError("deletion path broke")
        row[pos], y = y, row[pos]
    return tuple(tuple(x) for x in rows), y


def column_delete(t, cell):
    """Inverse of column insertion ending at the given corner."""
    r, c = cell
    cols = _columns(t)
    if r != len(cols[c]) - 1 or (c + 1 < len(cols) and len(cols[c + 1]) > r):
        raise ValueError("not a corner cell")
    y = cols[c].pop(r)
    if not cols[c]:
        cols.pop(c)
    for cc in range(c - 1, -1, -1):
        col = cols[cc]
        pos = None
        for i in range(len(col) - 1, -1, -1):
            if col[i] < y:
                pos = i
                break
        if pos is None:
            raise ValueError("deletion path broke")
        col[pos], y = y, col[pos]
    return _from_columns(cols), y


def row_insert_word(t, word):
    for x in word:
        t = row_insert(t, x)
    return t


def column_insert_word(word, t):
    for x in reversed(word):
        t = column_insert(x, t)
    return t


def column_reading_word(t):
    """Columns left to right, each bottom to top."""
    out = []
    for col in _columns(t):
        out.extend(reversed(col))
    return tuple(out)


def row_reading_word(t):
    """Rows bottom to top, each right to left."""
    out = []
    for row in reversed(t):
        out.extend(reversed(row))
    return tuple(out)


# ---------------------------------------------------------------------------
# two-line arrays


def check_tl(cols):
    """Validity of a two-line array given as ((j, i), ...)."""
    js = [j for j, i in cols]
    if any(j < i for j, i in cols):
        return False
    if any(a >= b for a, b in zip(js, js[1:])):
        return False
    flat = [x for j, i in cols for x in ((j,) if j == i else (j, i))]
    return len(flat) == len(set(flat))


def bar(cols):
    """Add the flipped column (i, j) for every strict column (j, i)."""
    out = list(cols)
    for j, i in cols:
        if j > i:
            out.append((i, j))
    out.sort()
    return tuple(out)


def hat(cols):
    return tuple((j, i) for j, i in cols if j != i)


def tab(cols):
    """Column-insert the bottom line right to left into the empty tableau."""
    word = [i for j, i in cols]
    t = ()
    for x in word:
        t = column_insert(x, t)
    return t


def burge(cols):
    """Burge's construction of tab(bar I) directly from I."""
    t = ()
    for j, i in cols:
        if j == i:
            t = column_insert(i, t)
        else:
            t2 = column_insert(i, t)
            cell = _new_cell(t, t2)
            t = _add_cell_below(t2, cell[1] + 1, j)
    return t


def _new_cell(old, new):
    for r in range(len(new)):
        for c in range(len(new[r])):
            if r >= len(old) or c >= len(old[r]):
                return (r, c)
    raise ValueError("no new cell")


def _add_cell_below(t, col, val):
    rows = [list(r) for r in t]
    r = 0
    while r < len(rows) and len(rows[r]) > col:
        r += 1
    if r == len(rows):
        rows.append([])
    if len(rows[r]) != col:
        raise ValueError("column not addable")
    rows[r].append(val)
    return tuple(tuple(x) for x in rows)


def inverse_burge(t):
    """The unique I in TL(r) with tab(bar I) = t, by reversing Burge."""
    cols = []
    t = tuple(tuple(r) for r in t)
    while t:
        m = max(v for row in t for v in row)
        pos = next(
            (r, c) for r in range(len(t)) for c in range(len(t[r])) if t[r][c] == m
        )
        r, c = pos
        if c == 0:
            rows = [list(x) for x in t]
            rows[r].pop(0)
            if not rows[r]:
                rows.pop(r)
            t = tuple(tuple(x) for x in rows)
            cols.append((m, m))
        else:
            rows = [list(x) for x in t]
            rows[r].pop(c)
            if not rows[r]:
                rows.pop(r)
            t = tuple(tuple(x) for x in rows)
            target = max(
                rr for rr in range(len(t)) if len(t[rr]) >= c
            )
            t, d = column_delete(t, (target, c - 1))
            cols.append((m, d))
    cols.reverse()
    return tuple(cols)


def alpha(t):
    return tab(inverse_burge(t))


def beta(t):
    return tab(hat(inverse_burge(t)))


def truncate(t, k):
    """First k columns of every row."""
    return tuple(tuple(row[:k]) for row in t if row[:k])


def second(word):
    """Letters bumped out of the first row while row-inserting the word."""
    out = []
    t = ()
    for x in word:
        if t and any(v > x for v in t[0]):
            out.append(min(v for v in t[0] if v > x))
        t = row_insert(t, x)
    return tuple(out)


def _first_row_columns(word):
    """For each letter, the first-row column (1-based) it lands in."""
    t = ()
    out = []
    for x in word:
        row = t[0] if t else ()
        pos = len(row)
        for i, v in enumerate(row):
            if v > x:
                pos = i
                break
        out.append(pos + 1)
        t = row_insert(t, x)
    return out


def lseq(word):
    """The recursive left subsequence through the first-row columns."""
    cols = _first_row_columns(word)
    ell = cols[-1]
    idx = [None] * (ell + 1)
    idx[ell] = len(word) - 1
    for k in range(ell, 1, -1):
        best = None
        for i in range(idx[k]):
            if word[i] < word[idx[k]] and cols[i] == k - 1:
                best = i
                break
        if best is None:
            raise ValueError("lseq construction failed")
        idx[k - 1] = best
    return tuple(word[idx[k]] for k in range(1, ell + 1))


# ---------------------------------------------------------------------------
# the oscillating correspondence Phi^{BC}


def phi_bc_stage1(chain):
    """Walk a one-cell chain (G_0, ..., G_n): grow cells with their step
    number, record stalls as equal columns, and row-delete shrink steps."""
    t = ()
    cols = []
    prev = norm(chain[0])
    for j, cur in enumerate(chain[1:], start=1):
        cur = norm(cur)
        if sum(cur) == sum(prev) + 1:
            cell = _diff_cell(cur, prev)
            t = _place(t, cell, j)
        elif cur == prev:
            cols.append((j, j))
        elif sum(cur) == sum(prev) - 1:
            cell = _diff_cell(prev, cur)
            t, x = row_delete(t, cell)
            cols.append((j, x))
        else:
            raise ValueError("steps must move at most one cell")
        prev = cur
    return t, tuple(cols)


def _diff_cell(big, small):
    for r in range(len(big)):
        if r >= len(small) or big[r] != small[r]:
            return (r, big[r] - 1)
    raise ValueError("equal shapes")


def _place(t, cell, val):
    r, c = cell
    rows = [list(x) for x in t]
    while len(rows) <= r:
        rows.append([])
    if len(rows[r]) != c:
        raise ValueError("cell not addable")
    rows[r].append(val)
    return tuple(tuple(x) for x in rows)


def phi_bc(chain):
    """The full correspondence: (P, Q) with P a distinct tableau and Q a
    transposed LR filling of shape(P) / shape(G_n) labelled by the column
    number of the inserted letters."""
    t, cols = phi_bc_stage1(chain)
    y = tab(bar(cols))
    word = column_reading_word(y)
    col_of = {}
    for c, col in enumerate(_columns(y), start=1):
        for v in col:
            col_of[v] = c
    p = t
    q = {}
    for x in word:
        p2 = row_insert(p, x)
        cell = _new_cell(p, p2)
        q[cell] = col_of[x]
        p = p2
    return p, q


def q_entries(q):
    """The label placements as a sorted tuple of (row, col, entry)."""
    return tuple(sorted((r, c, v) for (r, c), v in q.items()))


def bound_from_q(q, lam, two_g):
    """The column criterion equivalent to c(G) <= g.

    two_g holds 2g = 2m - k with k in {0, 1}; odd labels 2i+1 must sit in
    column m+i or left, even labels 2i in column m+i-k or left, and the
    first row of lam must fit in m-k.
    """
    k = two_g % 2
    m = (two_g + k) // 2
    if norm(lam) and norm(lam)[0] > m - k:
        return False
    for (r, c), v in q.items():
        col = c + 1
        if v % 2 == 1:
            if col > m + (v - 1) // 2:
                return False
        else:
            if col > m + v // 2 - k:
                return False
    return True


# ---------------------------------------------------------------------------
# word rewriting for the vertical-domino filtration


def _pm(x, n):
    """Letter as (sign, magnitude) with validity for rank n."""
    if x == 0 or abs(x) > n:
        raise ValueError("letter out of range")
    return x


def plactic_rules(n):
    """The four families of length-three rewriting rules at rank n, as
    (name, lhs, rhs) triples over the letter alphabet of D_n."""
    rules = []
    letters = list(range(1, n + 1)) + [-i for i in range(n, 0, -1)]

    def order(x):
        from .letters import key

        return key(x)

    for x in letters:
        for y in letters:
            for z in letters:
                if x != -z and order(x) <= order(y) < order(z):
                    rules.append(("R1", (x, z, y), (z, x, y)))
                if x != -z and order(x) < order(y) <= order(z):
                    rules.append(("R1", (y, z, x), (y, x, z)))
    for x in range(2, n + 1):
        for y in letters:
            if order(x) <= order(y) <= order(-x):
                rules.append(("R2", (x - 1, -(x - 1), y), (x, -x, y)))
                rules.append(("R2", (y, -x, x), (y, x - 1, -(x - 1))))
    for x in range(1, n):
        rules.append(("R3", (n, -x, -n), (n, -n, -x)))
        rules.append(("R3", (-n, -x, n), (-n, n, -x)))
        rules.append(("R3", (x, n, -n), (n, x, -n)))
        rules.append(("R3", (x, -n, n), (-n, x, n)))
    rules.append(("R4", (-n, -n, n), (-n, n - 1, -(n - 1))))
    rules.append(("R4", (n, n, -n), (n, n - 1, -(n - 1))))
    rules.append(("R4", (n - 1, -(n - 1), -n), (n, -n, -n)))
    rules.append(("R4", (n - 1, -(n - 1), n), (-n, n, n)))
    return rules


def same_position(v, w, n):
    """Whether two words sit at the same place of isomorphic classical
    components of the rank-n type D letter crystal."""
    from krlab.crystal import apply_e, ctx_D, eps, word_weight

    ctx = ctx_D(n)
    v, w = tuple(v), tuple(w)
    while True:
        moved = False
        for i in range(1, n + 1):
            ev = eps(v, i, ctx)
            ew = eps(w, i, ctx)
            if (ev > 0) != (ew > 0):
                return False
            if ev > 0:
                v = apply_e(v, i, ctx)
                w = apply_e(w, i, ctx)
                moved = True
                break
        if not moved:
            return word_weight(v, n) == word_weight(w, n)


def plactic_rewrite(word, rule, pos, n):
    """Apply one named rewrite at a position, in either direction.

    The printed side conditions over-apply at the boundary, so a pattern
    match must also preserve the crystal position to count as the relation.
    """
    word = tuple(word)
    for name, lhs, rhs in plactic_rules(n):
        if name != rule:
            continue
        out = None
        if word[pos : pos + 3] == lhs:
            out = word[:pos] + rhs + word[pos + 3 :]
        elif word[pos : pos + 3] == rhs:
            out = word[:pos] + lhs + word[pos + 3 :]
        if out is not None and same_position(word, out, n):
            return out
    raise ValueError("no %s match at position %d" % (rule, pos))


def plactic_neighbors(word, n):
    """All single-rewrite neighbours of a word."""
    word = tuple(word)
    out = set()
    rules = plactic_rules(n)
    for pos in range(len(word) - 2):
        for name, lhs, rhs in rules:
            cand = None
            if word[pos : pos + 3] == lhs:
                cand = word[:pos] + rhs + word[pos + 3 :]
            elif word[pos : pos + 3] == rhs:
                cand = word[:pos] + lhs + word[pos + 3 :]
            if cand is not None and cand != word and same_position(word, cand, n):
                out.add(cand)
    return out


def theta_1n(word, n):
    """The letterwise relabelling c -> bar(n+1-c), bar c -> n+1-c."""
    out = []
    for x in word:
        if x > 0:
            out.append(-(n + 1 - x))
        else:
            out.append(n + 1 + x)
    return tuple(out)
