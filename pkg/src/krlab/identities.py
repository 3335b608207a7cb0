"""Both sides of every theorem and recurrence, evaluated exactly.

Weights entering the Weyl-group oracle are doubled integers; partition
data on the combinatorial side is plain.  Bounds called two_g hold twice
the (possibly half-integral) bound g.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import (
    char_coeff,
    lr_coef,
    twisted_branching,
)
from .charge import kostka_foulkes
from .kr_column import BOX, HDOM, VDOM, vac_qt_energy
from .kr_row import energy_row, hw_row_elements
from .oscillating import (
    GSSOT,
    SSOT,
    SSROT,
    aug,
    enumerate_chains,
    energy_of_chain,
    phi_c,
    strip_len,
)
from .partitions import (
    conjugate,
    get,
    is_partition,
    nn,
    norm,
    oc,
    oc_bar,
    partitions,
    size,
)
from .polynomials import Poly, poly_str
from .qweight import kl_level_restricted, kl_poly, kl_qt_B


@dataclass
class IdentityReport:
    identity: str
    params: dict
    lhs: str
    rhs: str
    equal: bool
    witnesses: list = field(default_factory=list)

    def as_dict(self, with_witnesses=False):
        out = {
            "identity": self.identity,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
        }
        if with_witnesses and self.witnesses:
            out["witnesses"] = self.witnesses
        return out


# ---------------------------------------------------------------------------
# Lusztig side: combinatorial right-hand sides


def thm_c_rhs(lam, mu, n, g, witnesses=None):
    """Energy generating function over bounded chains for type C."""
    lam = tuple(get(lam, i) for i in range(n))
    mu = tuple(get(mu, i) for i in range(n))
    shape = norm(oc(lam, g, n))
    wt = oc_bar(mu, g, n)
    out = Poly.zero(1)
    for chain in enumerate_chains(SSOT, shape, wt, two_g=2 * g):
        d = energy_of_chain(chain, SSOT, wt)
        out = out + Poly.mono((d,))
        if witnesses is not None:
            witnesses.append({"chain": chain, "energy": d})
    return out


def thm_b_rhs(lam, mu, n, g, witnesses=None):
    """q,t-energy generating function over generalized chains for type B
    spin weights."""
    lam = tuple(get(lam, i) for i in range(n))
    mu = tuple(get(mu, i) for i in range(n))
    shape = norm(oc(lam, g, n))
    wt = oc_bar(mu, g, n)
    out = Poly.zero(2)
    for chain in enumerate_chains(GSSOT, shape, wt, two_g=2 * g + 1):
        mono = vac_qt_energy(phi_c(chain, GSSOT, wt))
        out = out + mono
        if witnesses is not None:
            witnesses.append({"chain": chain, "qt": poly_str(mono, ("q", "t"))})
    return out


def rohs_bounded_len(lam, r, max_len):
    """The rohs strips of length r out of lam with bounded final length."""
    from .oscillating import _strips_from

    out = []
    for strip in _strips_from(norm(lam), r, SSROT, None):
        if len(norm(strip[2])) <= max_len:
            out.append(strip)
    return out


def _lambda_i(lam, n, i):
    """The shifted shapes of the recurrence, 1-indexed."""
    return tuple(lam[j] + 1 for j in range(i - 1)) + tuple(
        lam[j] for j in range(i, n)
    )


def morris_c(lam, mu, n):
    """Type C recurrence, one level deep, closing with the oracle."""
    if n < 2:
        raise ValueError("the recurrence needs n >= 2")
    lam = tuple(get(lam, i) for i in range(n))
    mu = tuple(get(mu, i) for i in range(n))
    mu_rest = tuple(2 * m for m in mu[1:])
    out = Poly.zero(1)
    for i in range(1, n + 1):
        total = lam[i - 1] - mu[0] + 1 - i
        if total < 0:
            continue
        li = _lambda_i(lam, n, i)
        for r in range(total % 2, total + 1, 2):
            m = (total - r) // 2
            for strip in rohs_bounded_len(li, r, n - 1):
                nu = strip[2]
                nud = tuple(2 * get(nu, j) for j in range(n - 1))
                term = kl_poly("C", n - 1, nud, mu_rest).shift((r + m,))
                out = out + (term if i % 2 == 1 else -term)
    return out


def morris_b_qt(lam, mu, n):
    """Type B spin q,t recurrence, one level deep."""
    if n < 2:
        raise ValueError("the recurrence needs n >= 2")
    lam = tuple(get(lam, i) for i in range(n))
    mu = tuple(get(mu, i) for i in range(n))
    mu_rest = tuple(2 * m + 1 for m in mu[1:])
    out = Poly.zero(2)
    for i in range(1, n + 1):
        total = lam[i - 1] - mu[0] + 1 - i
        if total < 0:
            continue
        li = _lambda_i(lam, n, i)
        for r in range(0, total + 1):
            m = total - r
            for strip in rohs_bounded_len(li, r, n - 1):
                nu = strip[2]
                nud = tuple(2 * get(nu, j) + 1 for j in range(n - 1))
                term = kl_qt_B(n - 1, nud, mu_rest).shift((r, m))
                out = out + (term if i % 2 == 1 else -term)
    return out


def add_rohs_phi(i, strip, chain, lam, mu, n, g, chain_weight=None):
    """Append the complemented strip to a chain, realizing the recurrence
    bijection; returns (new chain, new weight vector)."""
    lam = tuple(get(lam, j) for j in range(n))
    mu = tuple(get(mu, j) for j in range(n))
    li, zeta, nu = strip
    total = lam[i - 1] - mu[0] + 1 - i
    r = strip_len(strip)
    m = (total - r) // 2
    zeta_oc = tuple(g - get(zeta, n - 2 - j) for j in range(n - 1))
    mid = tuple(sorted(zeta_oc + (m,), reverse=True))
    new_strip = (
        norm(oc(nu, g, n - 1)),
        norm(mid),
        norm(oc(li, g, n - 1)),
    )
    if chain_weight is None:
        chain_weight = tuple(strip_len(s) for s in chain)
    return tuple(chain) + (new_strip,), tuple(chain_weight) + (total,)


def involution_partition(lam, mu, n, g):
    """The sets G_i of the sign-reversing involution, their two-block
    refinement, and the telescoping check data."""
    lam = tuple(get(lam, i) for i in range(n))
    mu = tuple(get(mu, i) for i in range(n))
    gs = []
    for i in range(1, n + 1):
        first = lam[i - 1] - mu[0] + 1 - i
        beta = (first,) + tuple(g - mu[j] for j in range(1, n))
        li = _lambda_i(lam, n, i)
        shape = norm(oc(li, g, n - 1))
        if first < 0:
            gs.append({"i": i, "chains": [], "g1": set(), "g2": set()})
            continue
        chains = enumerate_chains(SSOT, shape, beta, two_g=2 * g)
        g1, g2 = set(), set()
        for ch in chains:
            a = aug(ch, g - lam[i - 1] + i - 1, beta)
            tau = a[-1][2]
            if get(tau, n - i) >= g - lam[i - 1]:
                g1.add(a)
            else:
                g2.add(a)
        gs.append({"i": i, "chains": chains, "g1": g1, "g2": g2})
    return gs


# ---------------------------------------------------------------------------
# level-restricted identities

DIAMOND = {"B": BOX, "C": HDOM, "D": VDOM}
OSC_KIND = {"B": GSSOT, "C": SSOT, "D": SSROT}
ZETA = {"B": 2, "C": 1, "D": 2}
DSIZE = {BOX: 1, HDOM: 2, VDOM: 2}


def _hat(wd, two_g, n):
    """oc as an integer partition from a doubled weight and doubled bound."""
    out = []
    for i in range(n):
        v = two_g - wd[n - 1 - i]
        if v % 2:
            raise ValueError("bound parity does not match the weight")
        out.append(v // 2)
    if not is_partition(tuple(out)):
        raise ValueError("complement is not a partition")
    return tuple(out)


def level_formula(lie_type, n, lam_d, mu_d, two_g):
    """The three expressions of the level-restriction theorem.

    lam_d, mu_d are doubled dominant weights, two_g twice the bound.
    Returns (lhs, mid, rhs) as one-variable polynomials.
    """
    lhs = kl_level_restricted(lie_type, n, lam_d, mu_d)

    lam_hat = _hat(lam_d, two_g, n)
    mu_hat = _hat(mu_d, two_g, n)

    table = twisted_branching(lie_type, n, lam_d, two_g)
    mid = Poly.zero(1)
    for kappa, d in table.items():
        if d:
            mid = mid + d * kostka_foulkes(kappa, mu_hat)

    kind = DIAMOND[lie_type]
    dd = DSIZE[kind]
    rhs = Poly.zero(1)
    shape = norm(lam_hat)
    for chain, tensor, e0 in hw_row_elements(kind, mu_hat, shape):
        if 2 * e0 > ZETA[lie_type] * two_g:
            continue
        d = energy_row(tensor)
        num = 2 * nn(mu_hat) + (size(mu_hat) - size(lam_hat)) - dd * d
        if num % 2:
            raise ValueError("odd exponent in the filtered sum")
        rhs = rhs + Poly.mono((num // 2,))
    return lhs, mid, rhs


def p_diamond_member(kind, gamma):
    if kind == BOX:
        return True
    if kind == HDOM:
        return all(x % 2 == 0 for x in gamma)
    return all(x % 2 == 0 for x in conjugate(gamma))


def xk_lhs(kind, mu, lam, max_eps0=None):
    """The (filtered) normalized energy sum over highest weight elements."""
    dd = DSIZE[kind]
    out = Poly.zero(1)
    for chain, tensor, e0 in hw_row_elements(kind, tuple(mu), norm(lam)):
        if max_eps0 is not None and e0 > max_eps0:
            continue
        d = energy_row(tensor)
        num = 2 * nn(mu) + (size(mu) - size(lam)) - dd * d
        if num % 2:
            raise ValueError("odd exponent")
        out = out + Poly.mono((num // 2,))
    return out


def xk_rhs_unfiltered(kind, mu, lam):
    """The Kostka-Foulkes expansion side of the unfiltered identity."""
    out = Poly.zero(1)
    for nu in partitions(size(mu), max_len=len(mu)):
        c = sum(
            lr_coef(nu, gamma, norm(lam))
            for gamma in partitions(size(mu) - size(lam))
            if p_diamond_member(kind, gamma)
        )
        if c:
            out = out + c * kostka_foulkes(nu, tuple(mu))
    return out


def xk_filter_table(kind, lam, mu, max_eps0):
    """Expand the filtered sum in the Kostka-Foulkes basis; the
    coefficients must come out as nonnegative integers."""
    mu = tuple(mu)
    lam = norm(lam)
    target = xk_lhs(kind, mu, lam, max_eps0)
    nus = [nu for nu in partitions(size(mu), max_len=len(mu))]
    basis = [kostka_foulkes(nu, mu) for nu in nus]
    keep = [i for i, b in enumerate(basis) if b.c]
    nus = [nus[i] for i in keep]
    basis = [basis[i] for i in keep]
    degrees = sorted({k for b in basis for k in b.c} | set(target.c))
    rows = len(degrees)
    mat = [[Fraction(b.c.get(d, 0)) for b in basis] for d in degrees]
    vec = [Fraction(target.c.get(d, 0)) for d in degrees]
    sol = _solve_exact(mat, vec)
    out = {}
    for nu, v in zip(nus, sol):
        if v:
            if v.denominator != 1 or v < 0:
                raise ValueError("expansion coefficient %s at %s" % (v, nu))
            out[nu] = int(v)
    return out


def _solve_exact(mat, vec):
    """Exact Gaussian elimination; requires a unique solution."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    m = [list(r) + [v] for r, v in zip(mat, vec)]
    piv = []
    rr = 0
    for c in range(cols):
        sel = None
        for r in range(rr, rows):
            if m[r][c]:
                sel = r
                break
        if sel is None:
            raise ValueError("singular expansion system")
        m[rr], m[sel] = m[sel], m[rr]
        pv = m[rr][c]
        m[rr] = [x / pv for x in m[rr]]
        for r in range(rows):
            if r != rr and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rr])]
        piv.append(c)
        rr += 1
        if rr == rows:
            break
    for r in range(rr, rows):
        if m[r][cols]:
            raise ValueError("inconsistent expansion system")
    sol = [Fraction(0)] * cols
    for r, c in enumerate(piv):
        sol[c] = m[r][cols]
    return sol


# ---------------------------------------------------------------------------
# q = 1 counting identities and the kappa-level lemmas


def count_chains(kind, shape, weight, two_g):
    return len(enumerate_chains(kind, norm(shape), tuple(weight), two_g=two_g))


def q1_count(lie_type, n, lam_d, mu_d, two_g):
    """(combinatorial count, weight multiplicity) for the q = 1 identity.

    two_g holds twice the bound, odd for spin weights, in which case the
    generalized chains see the half-integral bound directly.
    """
    kind = OSC_KIND[lie_type]
    lam_hat = _hat(lam_d, two_g, n)
    mu_hat = _hat(mu_d, two_g, n)
    cnt = count_chains(kind, lam_hat, mu_hat, two_g)
    mult = char_coeff(lie_type, n, lam_d, mu_d)
    return cnt, mult


def kappa_B(lam, mu, r, two_g):
    from .oscillating import kappa_count

    return kappa_count(GSSOT, lam, mu, r, two_g)


def kappa_C(lam, mu, r, two_g):
    from .oscillating import kappa_count

    return kappa_count(SSOT, lam, mu, r, two_g)


def kappa_D(lam, mu, r, two_g):
    from .oscillating import kappa_count

    return kappa_count(SSROT, lam, mu, r, two_g)


def okada_K_B(lam, mu, r, n):
    """Multiplicity of the type B dual Pieri rule."""
    lam, mu = norm(lam), norm(mu)
    count = 0
    for xi in _vertical_strip_covers(lam, mu, n):
        s = (size(xi) - size(mu)) + (size(xi) - size(lam))
        if s not in (r, r - 1):
            continue
        if len(mu) < n:
            if s == r and len(xi) == max(len(mu), len(lam)):
                count += 1
            elif s == r - 1 and len(xi) == n:
                count += 1
        else:
            count += 1
    return count


def okada_K_D(lam, mu, r, n):
    lam, mu = norm(lam), norm(mu)
    count = 0
    for xi in _vertical_strip_covers(lam, mu, n):
        s = (size(xi) - size(mu)) + (size(xi) - size(lam))
        if s != r:
            continue
        if len(xi) in (n, len(mu), len(lam)):
            count += 1
    return count


def okada_M(lam, mu, n):
    """Doubling multiplicity of the type D dual Pieri rule: the output
    weight fills all n rows while the input does not."""
    return 2 if len(norm(lam)) == n and len(norm(mu)) < n else 1


def _vertical_strip_covers(lam, mu, n):
    """Partitions xi with xi/lam and xi/mu vertical strips, length <= n."""
    rows = min(n, max(len(lam), len(mu)) + 1)
    out = []

    def rec(i, acc):
        if i == rows:
            xi = norm(tuple(acc))
            if len(xi) <= n:
                out.append(xi)
            return
        lo = max(get(lam, i), get(mu, i))
        hi = min(get(lam, i), get(mu, i)) + 1
        if i > 0:
            hi = min(hi, acc[i - 1])
        for v in range(lo, hi + 1):
            acc.append(v)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    return out
