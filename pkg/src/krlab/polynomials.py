"""Sparse exact-integer polynomials in one or two variables, and Laurent
characters indexed by weight vectors.

Poly keys are exponent tuples (length = nvars), values are ints; zero
coefficients are never stored.  WeightPoly keys are doubled-integer weight
vectors so half-integer weights stay exact.
"""


class Poly:
    __slots__ = ("nvars", "c")

    def __init__(self, nvars, coeffs=None):
        self.nvars = nvars
        self.c = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    self.c[tuple(k)] = self.c.get(tuple(k), 0) + v
            self.c = {k: v for k, v in self.c.items() if v}

    @classmethod
    def zero(cls, nvars=1):
        return cls(nvars)

    @classmethod
    def one(cls, nvars=1):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def mono(cls, exps, coeff=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({} if other == 0 else {(0,) * self.nvars: other})
        return self.nvars == other.nvars and self.c == other.c

    def __hash__(self):
        return hash((self.nvars, frozenset(self.c.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        p = Poly(self.nvars)
        p.c = out
        return p

    def __neg__(self):
        p = Poly(self.nvars)
        p.c = {k: -v for k, v in self.c.items()}
        return p

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            p = Poly(self.nvars)
            if other:
                p.c = {k: v * other for k, v in self.c.items()}
            return p
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                w = out.get(k, 0) + v1 * v2
                if w:
                    out[k] = w
                elif k in out:
                    del out[k]
        p = Poly(self.nvars)
        p.c = out
        return p

    __rmul__ = __mul__
    __radd__ = __add__

    def _coerce(self, other):
        if isinstance(other, int):
            return Poly(self.nvars, {(0,) * self.nvars: other})
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        return other

    def shift(self, exps):
        """Multiply by the monomial with the given exponents."""
        exps = tuple(exps)
        p = Poly(self.nvars)
        p.c = {tuple(a + b for a, b in zip(k, exps)): v for k, v in self.c.items()}
        return p

    def coeff(self, exps):
        return self.c.get(tuple(exps), 0)

    def subs_all_one(self):
        """Evaluate every variable at 1."""
        return sum(self.c.values())

    def subs_t_q(self):
        """For a two-variable poly in (q,t), set t = q."""
        assert self.nvars == 2
        out = {}
        for (a, b), v in self.c.items():
            k = (a + b,)
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        p = Poly(1)
        p.c = out
        return p

    def __str__(self):
        return poly_str(self, ("q", "t")[: self.nvars])

    __repr__ = __str__


def q_one():
    return Poly.one(1)


def q_pow(k, coeff=1):
    return Poly.mono((k,), coeff)


def qt_pow(a, b, coeff=1):
    return Poly.mono((a, b), coeff)


def poly_str(p, names):
    """Render sparse, descending total degree then reverse-lex; stable."""
    if not p.c:
        return "0"
    keys = sorted(p.c, key=lambda k: (sum(k),) + k, reverse=True)
    parts = []
    for k in keys:
        v = p.c[k]
        factors = []
        for name, e in zip(names, k):
            if e == 0:
                continue
            factors.append(name if e == 1 else "%s^%d" % (name, e))
        body = "*".join(factors)
        if not body:
            term = str(abs(v))
        elif abs(v) == 1:
            term = body
        else:
            term = "%d*%s" % (abs(v), body)
        sign = "-" if v < 0 else "+"
        parts.append((sign, term))
    out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
    for sign, term in parts[1:]:
        out += sign + term
    return out


class WeightPoly:
    """Sparse Laurent character: doubled weight vector -> integer coefficient."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.c = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    k = tuple(k)
                    w = self.c.get(k, 0) + v
                    if w:
                        self.c[k] = w
                    elif k in self.c:
                        del self.c[k]

    @classmethod
    def mono(cls, key, coeff=1):
        key = tuple(key)
        return cls(len(key), {key: coeff})

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    def __eq__(self, other):
        return self.n == other.n and self.c == other.c

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        p = WeightPoly(self.n)
        p.c = out
        return p

    def __neg__(self):
        p = WeightPoly(self.n)
        p.c = {k: -v for k, v in self.c.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            p = WeightPoly(self.n)
            if other:
                p.c = {k: v * other for k, v in self.c.items()}
            return p
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                w = out.get(k, 0) + v1 * v2
                if w:
                    out[k] = w
                elif k in out:
                    del out[k]
        p = WeightPoly(self.n)
        p.c = out
        return p

    __rmul__ = __mul__

    def invert_vars(self):
        """Substitute x_i -> 1/x_i."""
        p = WeightPoly(self.n)
        p.c = {tuple(-a for a in k): v for k, v in self.c.items()}
        return p

    def shift(self, key):
        key = tuple(key)
        p = WeightPoly(self.n)
        p.c = {tuple(a + b for a, b in zip(k, key)): v for k, v in self.c.items()}
        return p

    def coeff(self, key):
        return self.c.get(tuple(key), 0)

    def eval_all_one(self):
        return sum(self.c.values())

    def __repr__(self):
        return "WeightPoly(%d, %d terms)" % (self.n, len(self.c))
