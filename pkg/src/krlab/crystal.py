"""Classical crystal operators on letters, words, and tensor products.

Tensors are tuples with the leftmost factor first; the tensor rule follows
the convention where f_i prefers the left factor on ties.  Column words
embed as v_k (x) ... (x) v_1 and row words as v_1 (x) ... (x) v_k.

A context fixes the letter crystal: ("inf", 0) is the unbounded large-rank
alphabet used by column crystals, ("B", N) and ("C", N) are the rank-N
vector crystals (type B has the middle chain N -> 0 -> bar N).
"""

from .letters import EMPTY, sort_word

CTX_INF = ("inf", 0)


def ctx_B(n):
    return ("B", n)


def ctx_C(n):
    return ("C", n)


def ctx_D(n):
    return ("D", n)


def letter_eps(x, i, ctx):
    fam, n = ctx
    if x is EMPTY:
        return 0
    if fam != "inf" and i == n:
        if fam == "C":
            return 1 if x == -n else 0
        if fam == "D":
            return 1 if x in (-n, -(n - 1)) else 0
        return (0, 1, 2)[(x == 0) + 2 * (x == -n)]
    return 1 if (x == i + 1 or x == -i) else 0


def letter_phi(x, i, ctx):
    fam, n = ctx
    if x is EMPTY:
        return 0
    if fam != "inf" and i == n:
        if fam == "C":
            return 1 if x == n else 0
        if fam == "D":
            return 1 if x in (n, n - 1) else 0
        return (0, 1, 2)[(x == 0) + 2 * (x == n)]
    return 1 if (x == i or x == -(i + 1)) else 0


def letter_e(x, i, ctx):
    fam, n = ctx
    if x is EMPTY:
        return None
    if fam != "inf" and i == n:
        if fam == "C":
            return n if x == -n else None
        if fam == "D":
            if x == -n:
                return n - 1
            if x == -(n - 1):
                return n
            return None
        if x == 0:
            return n
        if x == -n:
            return 0
        return None
    if x == i + 1:
        return i
    if x == -i:
        return -(i + 1)
    return None


def letter_f(x, i, ctx):
    fam, n = ctx
    if x is EMPTY:
        return None
    if fam != "inf" and i == n:
        if fam == "C":
            return -n if x == n else None
        if fam == "D":
            if x == n - 1:
                return -n
            if x == n:
                return -(n - 1)
            return None
        if x == 0:
            return -n
        if x == n:
            return 0
        return None
    if x == i:
        return i + 1
    if x == -(i + 1):
        return -i
    return None


def letter_wtpair(x, i, ctx):
    return letter_phi(x, i, ctx) - letter_eps(x, i, ctx)


# ---------------------------------------------------------------------------
# generic dispatch: a factor is a letter, EMPTY, a tuple (sub-tensor), or an
# object with crystal_* methods (ColumnKR / RowKR).


def eps(b, i, ctx=CTX_INF):
    if isinstance(b, tuple):
        return _tensor_stat(b, i, ctx)[0]
    if b is EMPTY or isinstance(b, int):
        return letter_eps(b, i, ctx)
    return b.crystal_eps(i, ctx)


def phi(b, i, ctx=CTX_INF):
    if isinstance(b, tuple):
        return _tensor_stat(b, i, ctx)[1]
    if b is EMPTY or isinstance(b, int):
        return letter_phi(b, i, ctx)
    return b.crystal_phi(i, ctx)


def wtpair(b, i, ctx=CTX_INF):
    if isinstance(b, tuple):
        return sum(wtpair(x, i, ctx) for x in b)
    if b is EMPTY or isinstance(b, int):
        return letter_wtpair(b, i, ctx)
    return b.crystal_wtpair(i, ctx)


def _tensor_stat(t, i, ctx):
    """(eps, phi, wtpair) of a tensor tuple, accumulated right to left."""
    e = p = w = 0
    for b in reversed(t):
        be, bp, bw = _stat(b, i, ctx)
        e = max(e, be - w)
        p = max(bp, p + bw)
        w += bw
    return e, p, w


def _stat(b, i, ctx):
    if isinstance(b, tuple):
        return _tensor_stat(b, i, ctx)
    if b is EMPTY or isinstance(b, int):
        return letter_eps(b, i, ctx), letter_phi(b, i, ctx), letter_wtpair(b, i, ctx)
    return b.crystal_eps(i, ctx), b.crystal_phi(i, ctx), b.crystal_wtpair(i, ctx)


def apply_e(b, i, ctx=CTX_INF):
    """e_i, or None on annihilation."""
    if isinstance(b, tuple):
        if not b:
            return None
        x, rest = b[0], b[1:]
        ey, py, wy = _tensor_stat(rest, i, ctx) if rest else (0, 0, 0)
        ex = eps(x, i, ctx)
        if py < ex:
            nx = apply_e(x, i, ctx)
            return None if nx is None else (nx,) + rest
        nr = apply_e(rest, i, ctx)
        return None if nr is None else (x,) + nr
    if b is EMPTY or isinstance(b, int):
        return letter_e(b, i, ctx)
    return b.crystal_e(i, ctx)


def apply_f(b, i, ctx=CTX_INF):
    if isinstance(b, tuple):
        if not b:
            return None
        x, rest = b[0], b[1:]
        ey, py, wy = _tensor_stat(rest, i, ctx) if rest else (0, 0, 0)
        ex = eps(x, i, ctx)
        if py <= ex:
            nx = apply_f(x, i, ctx)
            return None if nx is None else (nx,) + rest
        nr = apply_f(rest, i, ctx)
        return None if nr is None else (x,) + nr
    if b is EMPTY or isinstance(b, int):
        return letter_f(b, i, ctx)
    return b.crystal_f(i, ctx)


def _max_index(b, ctx):
    fam, n = ctx
    if fam != "inf":
        return n
    mags = [abs(x) for x in flatten_letters(b) if x is not EMPTY and x != 0]
    return (max(mags) + 1) if mags else 1


def flatten_letters(b):
    if isinstance(b, tuple):
        out = []
        for x in b:
            out.extend(flatten_letters(x))
        return out
    if b is EMPTY or isinstance(b, int):
        return [b]
    return list(b.letters())


def hw(b, ctx=CTX_INF, record=None, max_steps=100000):
    """Classical highest weight element of the component containing b.

    With record a list, the applied raising indices are appended to it.
    In the unbounded context barred letters can climb forever on inputs
    outside the anchored families, so runaway raising fails loudly.
    """
    steps = 0
    while True:
        top = _max_index(b, ctx)
        moved = False
        for i in range(1, top + 1):
            if eps(b, i, ctx) > 0:
                b = apply_e(b, i, ctx)
                if record is not None:
                    record.append(i)
                moved = True
                steps += 1
                break
        if not moved:
            return b
        if steps > max_steps:
            raise RuntimeError(
                "raising did not terminate; use a finite-rank context"
            )


def is_hw(b, ctx=CTX_INF):
    return all(eps(b, i, ctx) == 0 for i in range(1, _max_index(b, ctx) + 1))


def word_weight(letters, n):
    """Weight vector (undoubled ints) of a letter multiset, length n."""
    w = [0] * n
    for x in letters:
        if x is EMPTY or x == 0:
            continue
        if x > 0:
            w[x - 1] += 1
        else:
            w[-x - 1] -= 1
    return tuple(w)


def column_tensor(word):
    """Embedding of a strict column word, largest letter leftmost."""
    return tuple(reversed(word))


def row_tensor(word):
    """Embedding of a weak row word, smallest letter leftmost."""
    return tuple(word)


def tensor_word_e(word, i, ctx, column):
    """Apply e_i through the word embedding; None on annihilation."""
    t = column_tensor(word) if column else row_tensor(word)
    r = apply_e(t, i, ctx)
    return None if r is None else sort_word(r)


def tensor_word_f(word, i, ctx, column):
    t = column_tensor(word) if column else row_tensor(word)
    r = apply_f(t, i, ctx)
    return None if r is None else sort_word(r)
