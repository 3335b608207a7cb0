"""Weyl characters as sparse Laurent polynomials, Schur expansions, twisted
branching coefficients, and the symmetric-function helpers used by the
level-restricted identities.

All weight keys are doubled integers (see roots.py).
"""

from functools import lru_cache

from .partitions import (
    get,
    horizontal_strips_above,
    is_partition,
    norm,
    partitions_upto,
    size,
)
from .polynomials import WeightPoly
from .qweight import weight_multiplicity
from .roots import apply_w, is_dominant, is_spin, weyl_group


@lru_cache(maxsize=None)
def orbit(lie_type, n, w):
    return frozenset(apply_w(g, w) for g in weyl_group(lie_type, n))


@lru_cache(maxsize=None)
def _dominant_candidates(lie_type, n, lam):
    """Dominant weights that can support the character of lam.

    Weights of the irreducible lie in the convex hull of the orbit of lam,
    so sum |nu_i| <= sum |lam_i| and max |nu_i| <= lam_1.
    """
    spin = is_spin(lam)
    half = (1,) * n if spin else (0,) * n
    total = sum(abs(x) for x in lam)
    budget = (total - sum(half)) // 2  # integer cells above the spin floor
    top = (abs(lam[0]) - half[0]) // 2
    out = []
    for kappa in partitions_upto(budget, max_len=n, max_part=max(top, 0)):
        base = tuple(2 * get(kappa, i) + half[i] for i in range(n))
        cands = [base]
        if lie_type == "D" and base[-1] > 0:
            cands.append(base[:-1] + (-base[-1],))
        for nu in cands:
            if is_dominant(lie_type, n, nu):
                out.append(nu)
    return tuple(out)


@lru_cache(maxsize=None)
def character(lie_type, n, lam):
    """Weyl character as a WeightPoly, assembled from orbit sums of the
    weight multiplicities given by the q-analog at q = 1."""
    lam = tuple(lam)
    if not is_dominant(lie_type, n, lam):
        raise ValueError("weight is not dominant")
    out = {}
    for nu in _dominant_candidates(lie_type, n, lam):
        m = weight_multiplicity(lie_type, n, lam, nu)
        if m == 0:
            continue
        for w in orbit(lie_type, n, nu):
            out[w] = out.get(w, 0) + m
    return WeightPoly(n, out)


@lru_cache(maxsize=None)
def schur(n, lam):
    """Type A Schur polynomial in n variables, by the branching rule."""
    from .partitions import contains

    lam = norm(lam)
    if len(lam) > n:
        return WeightPoly(n, {})
    out = {}

    def rec(i, mu, acc):
        if i == n:
            if mu == lam:
                key = tuple(2 * a for a in acc)
                out[key] = out.get(key, 0) + 1
            return
        for nu in horizontal_strips_above(mu, cap=get(lam, 0)):
            if len(nu) > i + 1 or not contains(lam, nu):
                continue
            rec(i + 1, nu, acc + [size(nu) - size(mu)])

    rec(0, (), [])
    return WeightPoly(n, out)


def schur_expand(wp):
    """Expand a symmetric polynomial with nonnegative exponents in the Schur
    basis by leading-term subtraction; raises if a remainder survives."""
    n = wp.n
    rem = WeightPoly(n, dict(wp.c))
    out = {}
    guard = 0
    while rem.c:
        guard += 1
        if guard > 100000:
            raise ValueError("schur expansion did not terminate")
        key = max(rem.c)
        if any(a % 2 for a in key) or any(a < 0 for a in key):
            raise ValueError("not a polynomial in the Schur span")
        lam = tuple(a // 2 for a in key)
        if not is_partition(lam):
            raise ValueError("leading term %r is not dominant" % (lam,))
        c = rem.c[key]
        out[norm(lam)] = out.get(norm(lam), 0) + c
        rem = rem - c * schur(n, norm(lam))
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def lr_coef(nu, gamma, lam):
    """Littlewood-Richardson coefficient c^{nu}_{gamma,lam}."""
    nu, gamma, lam = norm(nu), norm(gamma), norm(lam)
    if size(gamma) + size(lam) != size(nu):
        return 0
    n = max(len(nu), 1)
    prod = schur(n, gamma) * schur(n, lam)
    return schur_expand(prod).get(nu, 0)


@lru_cache(maxsize=None)
def twisted_branching(lie_type, n, lam, two_g):
    """Coefficients of (x_1...x_n)^g s^{g_n}_lam(x^{-1}) in the Schur basis.

    Keys are the partitions kappa with the character equal to
    sum_kappa d[kappa] s_kappa(x); kappa corresponds to oc(nu, g) in the
    twisted-branching-coefficient convention.  two_g holds 2g.
    """
    ch = character(lie_type, n, lam).invert_vars().shift((two_g,) * n)
    return schur_expand(ch)


def twisted_branching_d(lie_type, n, lam, nu, two_g=None):
    """Single twisted branching coefficient d^{g_n}_{lam,nu}."""
    if two_g is None:
        two_g = max(lam[0], 2)
        if two_g % 2 != lam[0] % 2:
            two_g += 1
    if two_g < lam[0]:
        raise ValueError("need g >= lam_1")
    table = twisted_branching(lie_type, n, lam, two_g)
    kappa = tuple((two_g - nu[n - 1 - i]) // 2 for i in range(n))
    if any((two_g - x) % 2 for x in nu):
        return 0
    return table.get(norm(kappa), 0)


@lru_cache(maxsize=None)
def e_poly(n, r):
    """The two-sided elementary polynomial sum_{|S|+|S'|<=r, |S|+|S'|=r...}

    e^{(n)}_r = sum over i of e_i(x) e_{r-i}(x^{-1}) with S, S' independent
    subsets of [n].
    """
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    from itertools import combinations

    out = {}
    for i in range(r + 1):
        for s in combinations(range(n), i):
            for sp in combinations(range(n), r - i):
                key = [0] * n
                for j in s:
                    key[j] += 2
                for j in sp:
                    key[j] -= 2
                key = tuple(key)
                out[key] = out.get(key, 0) + 1
    return WeightPoly(n, out)


@lru_cache(maxsize=None)
def m_hyperoct(n, lam):
    """Orbit sum of x^lam under the hyperoctahedral group (types B/C)."""
    return WeightPoly(n, {w: 1 for w in orbit("B", n, tuple(lam))})


def ps_D(n, lam):
    """s^{D_n}_{lam+} + s^{D_n}_{lam-}."""
    lam = tuple(lam)
    neg = lam[:-1] + (-lam[-1],)
    p = character("D", n, lam)
    if neg != lam:
        p = p + character("D", n, neg)
    else:
        p = p + character("D", n, lam)
    return p


def ns_D(n, lam):
    lam = tuple(lam)
    neg = lam[:-1] + (-lam[-1],)
    p = character("D", n, lam)
    if neg != lam:
        return p - character("D", n, neg)
    return WeightPoly(n, {})


def pss_bar_D(n, lam):
    """pss^{D_n}_lam divided by prod (x_i^{1/2} + x_i^{-1/2}).

    lam is an integer partition; the spin shift is applied internally.
    """
    lam = tuple(lam)
    sharp = tuple(2 * get(lam, i) + 1 for i in range(n))
    p = ps_D(n, sharp)
    factor = WeightPoly(n, {(0,) * n: 1})
    for i in range(n):
        key_p = [0] * n
        key_p[i] = 1
        key_m = [0] * n
        key_m[i] = -1
        factor = factor * WeightPoly(n, {tuple(key_p): 1, tuple(key_m): 1})
    return _exact_divide(p, factor)


def _exact_divide(num, den):
    """Exact division of WeightPolys; raises if not divisible."""
    n = num.n
    rem = WeightPoly(n, dict(num.c))
    out = {}
    lead_d = max(den.c)
    cd = den.c[lead_d]
    while rem.c:
        lead_r = max(rem.c)
        q = tuple(a - b for a, b in zip(lead_r, lead_d))
        c, r = divmod(rem.c[lead_r], cd)
        if r:
            raise ValueError("not divisible")
        out[q] = out.get(q, 0) + c
        rem = rem - WeightPoly(n, {q: c}) * den
    return WeightPoly(n, out)


def char_coeff(lie_type, n, lam, mu):
    """[x^mu] s^{g_n}_lam as an integer."""
    return character(lie_type, n, lam).coeff(mu)
