"""The graded ring of symmetric functions over Q(q,t), truncated by degree.

Elements are sparse basis-tagged expansions (partition -> coefficient).
Supported bases: monomial 'm', power sum 'p', Schur 's', Hall-Littlewood
'P' and 'Q', Macdonald 'M'.  The single trusted conversion primitive is
the power-sum expansion in d variables for degree d; every other basis
change is composed from it and from the family constructors.
"""

from __future__ import annotations

import json
import math
import os
from itertools import permutations

from .partitions import (
    Partition,
    enumerate_partitions,
    grevlex_key,
    multiplicities,
    stats,
)
from .ratfun import SYMBOLIC, parse_ratfun

BASES = ("m", "p", "s", "P", "Q", "M")


class BasisMismatch(ValueError):
    pass


class SingularTransition(ArithmeticError):
    pass


class NotSymmetric(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAlternating(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotDivisible(ArithmeticError):
    pass


_CACHE = {}


def _memo(key, builder):
    try:
        return _CACHE[key]
    except KeyError:
        pass
    # idempotent first fill: concurrent builders compute identical values
    return _CACHE.setdefault(key, builder())


def clear_caches():
    _CACHE.clear()


class SymFun:
    """Basis-tagged sparse expansion of a symmetric function."""

    __slots__ = ("basis", "coeffs", "degree_bound", "field")

    def __init__(self, basis, coeffs, degree_bound, field=SYMBOLIC):
        if basis not in BASES:
            raise BasisMismatch("unknown basis tag %r" % (basis,))
        clean = {}
        for k, c in coeffs.items():
            if c:
                k = k if isinstance(k, Partition) else Partition(k)
                if sum(k) > degree_bound:
                    raise ValueError("key %r exceeds degree bound %d" % (tuple(k), degree_bound))
                clean[k] = c
        self.basis = basis
        self.coeffs = clean
        self.degree_bound = degree_bound
        self.field = field

    @classmethod
    def zero(cls, basis, degree_bound, field=SYMBOLIC):
        return cls(basis, {}, degree_bound, field)

    @classmethod
    def generator(cls, basis, parts, degree_bound=None, field=SYMBOLIC):
        lam = Partition(parts)
        bound = sum(lam) if degree_bound is None else degree_bound
        return cls(basis, {lam: field.one}, bound, field)

    def is_zero(self):
        return not self.coeffs

    def max_degree(self):
        return max((sum(k) for k in self.coeffs), default=0)

    def terms(self):
        for k in sorted(self.coeffs, key=grevlex_key):
            yield k, self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, self.field.zero) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SymFun(self.basis, out, max(self.degree_bound, other.degree_bound), self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SymFun(self.basis, {k: -c for k, c in self.coeffs.items()}, self.degree_bound, self.field)

    def scale(self, c):
        if not c:
            return SymFun.zero(self.basis, self.degree_bound, self.field)
        return SymFun(self.basis, {k: v * c for k, v in self.coeffs.items()}, self.degree_bound, self.field)

    def truncate(self, degree_bound):
        out = {k: c for k, c in self.coeffs.items() if sum(k) <= degree_bound}
        return SymFun(self.basis, out, degree_bound, self.field)

    def _check_compatible(self, other):
        if self.basis != other.basis:
            raise BasisMismatch("cannot mix bases %r and %r" % (self.basis, other.basis))
        if self.field is not other.field and self.field != other.field:
            raise ValueError("mixed scalar fields")

    def __repr__(self):
        items = ", ".join("%s: %s" % (tuple(k), c) for k, c in self.terms())
        return "SymFun(%s; {%s})" % (self.basis, items)


def p_multiply(f, g, degree_bound=None):
    """Product in the free commutative algebra on p1, p2, ..., truncated."""
    if f.basis != "p" or g.basis != "p":
        raise BasisMismatch("p_multiply needs both factors in the p basis")
    bound = degree_bound if degree_bound is not None else f.degree_bound + g.degree_bound
    field = f.field
    out = {}
    for ka, ca in f.coeffs.items():
        wa = sum(ka)
        for kb, cb in g.coeffs.items():
            if wa + sum(kb) > bound:
                continue
            k = Partition(sorted(ka + kb, reverse=True))
            s = out.get(k, field.zero) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return SymFun("p", out, bound, field)


def multiply(f, g, degree_bound=None):
    """Product of two symmetric functions; computed in the p basis."""
    bound = degree_bound if degree_bound is not None else f.degree_bound + g.degree_bound
    prod = p_multiply(convert(f, "p"), convert(g, "p"), bound)
    return convert(prod, f.basis)


# ---------------------------------------------------------------------------
# transition matrices

def _p_to_m_degree(degree, field):
    def build():
        out = {}
        for lam in enumerate_partitions(degree):
            if degree == 0:
                out[lam] = {lam: field.one}
                continue
            xp = xpoly_one(degree, field)
            for part in lam:
                xp = xp * power_sum_xpoly(part, degree, field)
            out[lam] = collect_symmetric(xp).coeffs
        return out

    return _memo(("p_to_m", degree, field), build)


def _express_in_basis(vec, expansions, order, field):
    """Solve vec = sum_i out[i] * expansions[i] by triangular elimination."""
    work = dict(vec)
    out = {}
    for lam in order:
        c = work.get(lam)
        if c is None or not c:
            continue
        exp = expansions[lam]
        coeff = c / exp[lam]
        out[lam] = coeff
        for mu, cc in exp.items():
            s = work.get(mu, field.zero) - coeff * cc
            if s:
                work[mu] = s
            else:
                work.pop(mu, None)
    if any(c for c in work.values()):
        raise SingularTransition("triangular solve left a nonzero residue")
    return out


def _basis_in_m(tag, lam, field):
    if tag == "m":
        return {lam: field.one}
    if tag == "p":
        return _p_to_m_degree(sum(lam), field)[lam]
    from . import families

    if tag == "s":
        return families.schur_in_m(lam, field)
    if tag == "P":
        return families.hl_in_m(lam, field)
    if tag == "Q":
        return families.hl_q_in_m(lam, field)
    if tag == "M":
        return families.macdonald_in_m(lam, field)
    raise BasisMismatch("unknown basis tag %r" % (tag,))


def _m_to_basis_degree(tag, degree, field):
    """Express each m_lambda of the degree in the given basis."""

    def build():
        lams = enumerate_partitions(degree)
        expansions = {lam: _basis_in_m(tag, lam, field) for lam in lams}
        # p_lam has monomial support above lam in dominance, so its solve
        # starts at the minimal partition; the family bases have support
        # below and start at the maximal one
        order = sorted(lams, key=grevlex_key)
        if tag == "p":
            order = list(reversed(order))
        out = {}
        for lam in lams:
            out[lam] = _express_in_basis({lam: field.one}, expansions, order, field)
        return out

    return _memo(("m_to", tag, degree, field), build)


def transition_matrix(frm, to, degree, field=SYMBOLIC):
    """Columns express the `frm` basis elements in the `to` basis."""
    if frm not in BASES or to not in BASES:
        raise BasisMismatch("unknown basis tag")

    def build():
        cached = _load_cached_matrix(frm, to, degree, field)
        if cached is not None:
            return cached
        out = {}
        for lam in enumerate_partitions(degree):
            if frm == to:
                out[lam] = {lam: field.one}
            elif to == "m":
                out[lam] = dict(_basis_in_m(frm, lam, field))
            else:
                m_to = _m_to_basis_degree(to, degree, field)
                col = {}
                for mu, c in _basis_in_m(frm, lam, field).items():
                    for nu, d in m_to[mu].items():
                        s = col.get(nu, field.zero) + c * d
                        if s:
                            col[nu] = s
                        else:
                            del col[nu]
                out[lam] = col
        _store_cached_matrix(frm, to, degree, field, out)
        return out

    return _memo(("transition", frm, to, degree, field), build)


def _cache_path(frm, to, degree):
    root = os.environ.get("SYMFUN_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, "transition_%s_%s_%d.json" % (frm, to, degree))


def _load_cached_matrix(frm, to, degree, field):
    path = _cache_path(frm, to, degree)
    if path is None or not field.is_symbolic or not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    out = {}
    for col in data["columns"]:
        lam = Partition(col["partition"])
        out[lam] = {
            Partition(term["partition"]): parse_ratfun(term["coeff"])
            for term in col["terms"]
        }
    return out


def _store_cached_matrix(frm, to, degree, field, matrix):
    path = _cache_path(frm, to, degree)
    if path is None or not field.is_symbolic:
        return
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    columns = []
    for lam in enumerate_partitions(degree):
        col = matrix[lam]
        sym = SymFun(to, col, degree, SYMBOLIC)
        entry = to_json_dict(sym)
        entry["partition"] = list(lam)
        columns.append(entry)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({"from": frm, "to": to, "degree": degree, "columns": columns}, fh, sort_keys=True)
    os.replace(tmp, path)


def convert(f, to):
    """Re-express a symmetric function in another basis."""
    if to == f.basis:
        return f
    field = f.field
    out = {}
    by_degree = {}
    for lam, c in f.coeffs.items():
        by_degree.setdefault(sum(lam), {})[lam] = c
    for degree, coeffs in by_degree.items():
        matrix = transition_matrix(f.basis, to, degree, field)
        for lam, c in coeffs.items():
            for mu, d in matrix[lam].items():
                s = out.get(mu, field.zero) + c * d
                if s:
                    out[mu] = s
                else:
                    del out[mu]
    return SymFun(to, out, f.degree_bound, field)


# ---------------------------------------------------------------------------
# the (q,t) inner product and adjoints

def _ip_factor(lam, field):
    def build():
        value = field.from_int(stats(lam).z)
        for part in lam:
            value = value * (field.one - field.q ** part) / (field.one - field.t ** part)
        return value

    return _memo(("ip", lam, field), build)


def inner_product(f, g):
    """<p_lam, p_mu> = delta z_lam prod (1-q^li)/(1-t^li), extended bilinearly."""
    fp = convert(f, "p")
    gp = convert(g, "p")
    field = f.field
    total = field.zero
    small, large = (fp.coeffs, gp.coeffs) if len(fp.coeffs) <= len(gp.coeffs) else (gp.coeffs, fp.coeffs)
    for lam, c in small.items():
        d = large.get(lam)
        if d:
            total = total + c * d * _ip_factor(lam, field)
    return total


def _dpn(coeffs, n, field):
    # derivative with respect to p_n on a p-basis coefficient dict
    out = {}
    for mu, c in coeffs.items():
        k = 0
        for part in mu:
            if part == n:
                k += 1
        if not k:
            continue
        removed = list(mu)
        removed.remove(n)
        nu = Partition(removed)
        s = out.get(nu, field.zero) + c * field.from_int(k)
        if s:
            out[nu] = s
        else:
            del out[nu]
    return out


def adjoint_apply(f, g):
    """Apply f*, the adjoint of multiplication by f, to g."""
    field = g.field
    fp = convert(f, "p")
    gp = convert(g, "p")
    result = {}
    for lam, a in fp.coeffs.items():
        work = gp.coeffs
        factor = a
        for n in lam:
            work = _dpn(work, n, field)
            if not work:
                break
            factor = factor * field.from_int(n) * (field.one - field.q ** n) / (field.one - field.t ** n)
        for mu, c in work.items():
            s = result.get(mu, field.zero) + factor * c
            if s:
                result[mu] = s
            else:
                del result[mu]
    return SymFun("p", result, g.degree_bound, field)


def dp1(g):
    """Plain partial derivative with respect to p1."""
    gp = convert(g, "p")
    return SymFun("p", _dpn(gp.coeffs, 1, g.field), g.degree_bound, g.field)


# ---------------------------------------------------------------------------
# finite alphabets

class NSymPoly:
    """Symmetric polynomial in N variables, in the monomial basis."""

    __slots__ = ("N", "coeffs", "field")

    def __init__(self, N, coeffs, field=SYMBOLIC):
        clean = {}
        for k, c in coeffs.items():
            if c:
                k = k if isinstance(k, Partition) else Partition(k)
                if len(k) > N:
                    raise ValueError("key %r longer than N=%d" % (tuple(k), N))
                clean[k] = c
        self.N = N
        self.coeffs = clean
        self.field = field

    @classmethod
    def zero(cls, N, field=SYMBOLIC):
        return cls(N, {}, field)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, NSymPoly):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, self.field.zero) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return NSymPoly(self.N, out, self.field)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def scale(self, c):
        if not c:
            return NSymPoly.zero(self.N, self.field)
        return NSymPoly(self.N, {k: v * c for k, v in self.coeffs.items()}, self.field)

    def set_last_zero(self):
        out = {k: c for k, c in self.coeffs.items() if len(k) < self.N}
        return NSymPoly(self.N - 1, out, self.field)

    def as_symfun(self, degree_bound=None):
        bound = degree_bound
        if bound is None:
            bound = max((sum(k) for k in self.coeffs), default=0)
        return SymFun("m", dict(self.coeffs), bound, self.field)

    def __repr__(self):
        items = ", ".join(
            "%s: %s" % (tuple(k), self.coeffs[k]) for k in sorted(self.coeffs, key=grevlex_key)
        )
        return "NSymPoly(N=%d; {%s})" % (self.N, items)


def restrict(f, N):
    """Image under x_{N+1} = x_{N+2} = ... = 0."""
    fm = convert(f, "m")
    out = {k: c for k, c in fm.coeffs.items() if len(k) <= N}
    return NSymPoly(N, out, f.field)


class XPoly:
    """Plain multivariate polynomial in x_1..x_N, not necessarily symmetric."""

    __slots__ = ("N", "terms", "field")

    def __init__(self, N, terms, field=SYMBOLIC):
        self.N = N
        self.terms = {e: c for e, c in terms.items() if c}
        self.field = field

    @classmethod
    def zero(cls, N, field=SYMBOLIC):
        return cls(N, {}, field)

    @classmethod
    def monomial(cls, N, exponents, coeff, field=SYMBOLIC):
        return cls(N, {tuple(exponents): coeff}, field)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, self.field.zero) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return XPoly(self.N, out, self.field)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def __mul__(self, other):
        out = {}
        zero = self.field.zero
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, zero) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return XPoly(self.N, out, self.field)

    def scale(self, c):
        if not c:
            return XPoly.zero(self.N, self.field)
        return XPoly(self.N, {e: v * c for e, v in self.terms.items()}, self.field)

    def permute(self, perm):
        """Relabel variables: new exponent of slot perm[i] is the old one of slot i."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.N
            for i, x in enumerate(e):
                ne[perm[i]] = x
            out[tuple(ne)] = c
        return XPoly(self.N, out, self.field)

    def q_shift(self, subset):
        """Scale x_i -> q x_i for the 0-based variable indices in `subset`."""
        q = self.field.q
        out = {}
        for e, c in self.terms.items():
            d = sum(e[i] for i in subset)
            out[e] = c * q ** d if d else c
        return XPoly(self.N, out, self.field)

    def total_degree_cap(self, cap):
        return XPoly(self.N, {e: c for e, c in self.terms.items() if sum(e) <= cap}, self.field)

    def __repr__(self):
        return "XPoly(N=%d, %d terms)" % (self.N, len(self.terms))


def xpoly_one(N, field=SYMBOLIC):
    return XPoly(N, {(0,) * N: field.one}, field)


def power_sum_xpoly(n, N, field=SYMBOLIC):
    terms = {}
    for i in range(N):
        e = [0] * N
        e[i] = n
        terms[tuple(e)] = field.one
    return XPoly(N, terms, field)


def _distinct_permutations(items):
    items = sorted(items)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


def expand_x(p):
    """Fully expanded polynomial: sum over distinct permutations of each pattern."""
    out = {}
    for lam, c in p.coeffs.items():
        padded = list(lam) + [0] * (p.N - len(lam))
        for e in _distinct_permutations(padded):
            out[e] = c
    return XPoly(p.N, out, p.field)


def collect_symmetric(xp):
    """Collect a symmetric expansion back into the monomial basis."""
    groups = {}
    for e, c in xp.terms.items():
        pattern = tuple(sorted(e, reverse=True))
        groups.setdefault(pattern, []).append((e, c))
    out = {}
    for pattern, entries in groups.items():
        e0, c0 = entries[0]
        expected = math.factorial(xp.N)
        for k in multiplicities(pattern).values():
            expected //= math.factorial(k)
        if len(entries) != expected or any(c != c0 for _, c in entries[1:]):
            for e in _distinct_permutations(list(pattern)):
                c = xp.terms.get(e, xp.field.zero)
                if c != c0:
                    raise NotSymmetric(
                        "coefficients differ on one exponent orbit",
                        witness=(e0, e),
                    )
        key = Partition(x for x in pattern if x)
        out[key] = c0
    return NSymPoly(xp.N, out, xp.field)


def _descending_sign(e):
    # sign of the permutation sorting e into descending order
    inv = 0
    for i in range(len(e)):
        for j in range(i + 1, len(e)):
            if e[i] < e[j]:
                inv += 1
    return -1 if inv & 1 else 1


def antisymmetrize_to_schur(xp):
    """Schur coefficients of (signed symmetrisation of xp) / Vandermonde.

    Terms with a repeated exponent die under alternation; each surviving
    term lands on the strictly decreasing pattern it sorts to.
    """
    N = xp.N
    delta = tuple(range(N - 1, -1, -1))
    field = xp.field
    acc = {}
    for e, c in xp.terms.items():
        if len(set(e)) < N:
            continue
        pattern = tuple(sorted(e, reverse=True))
        if _descending_sign(e) < 0:
            c = -c
        nu = Partition(x for x in (pattern[i] - delta[i] for i in range(N)) if x)
        s = acc.get(nu, field.zero) + c
        if s:
            acc[nu] = s
        else:
            del acc[nu]
    return acc


def divide_by_vandermonde(xp):
    """Exact quotient of an alternating polynomial by the Vandermonde."""
    N = xp.N
    field = xp.field
    groups = {}
    for e, c in xp.terms.items():
        if len(set(e)) < N:
            raise NotAlternating("term with a repeated exponent", witness=e)
        pattern = tuple(sorted(e, reverse=True))
        groups.setdefault(pattern, []).append((e, c))
    delta = tuple(range(N - 1, -1, -1))
    out = {}
    full = math.factorial(N)
    for pattern, entries in groups.items():
        canonical = dict(entries).get(pattern)
        if canonical is None or len(entries) != full:
            raise NotAlternating("incomplete alternation orbit", witness=pattern)
        for e, c in entries:
            expected = canonical if _descending_sign(e) > 0 else -canonical
            if c != expected:
                raise NotAlternating("inconsistent signs on an orbit", witness=(pattern, e))
        nu = Partition(x for x in (pattern[i] - delta[i] for i in range(N)) if x)
        out[nu] = canonical
    result = {}
    for nu, c in out.items():
        for mu, d in schur_in_m_limited(nu, N, field).items():
            s = result.get(mu, field.zero) + c * d
            if s:
                result[mu] = s
            else:
                del result[mu]
    return NSymPoly(N, result, field)


# ---------------------------------------------------------------------------
# Schur expansions (used by the Vandermonde quotient and the 's' basis)

def _h_in_p(n, field):
    def build():
        out = {}
        for lam in enumerate_partitions(n):
            out[lam] = field.from_fraction(1) / field.from_int(stats(lam).z)
        return out

    return _memo(("h_p", n, field), build)


def schur_in_p(nu, field=SYMBOLIC):
    """Power-sum expansion of a Schur function, via the h-determinant."""

    def build():
        ell = len(nu)
        if ell == 0:
            return {Partition(): field.one}
        rows = [[nu[i] - i + j for j in range(ell)] for i in range(ell)]
        acc = {}
        for sigma in permutations(range(ell)):
            degrees = [rows[i][sigma[i]] for i in range(ell)]
            if any(d < 0 for d in degrees):
                continue
            sign = _perm_sign(sigma)
            prod = {Partition(): field.one}
            for d in degrees:
                if d == 0:
                    continue
                nxt = {}
                for ka, ca in prod.items():
                    for kb, cb in _h_in_p(d, field).items():
                        k = Partition(sorted(ka + kb, reverse=True))
                        s = nxt.get(k, field.zero) + ca * cb
                        if s:
                            nxt[k] = s
                        else:
                            del nxt[k]
                prod = nxt
            for k, c in prod.items():
                s = acc.get(k, field.zero) + (c if sign > 0 else -c)
                if s:
                    acc[k] = s
                else:
                    del acc[k]
        return acc

    return _memo(("s_p", Partition(nu), field), build)


def _perm_sign(sigma):
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_in_m(nu, field=SYMBOLIC):
    def build():
        nu_p = Partition(nu)
        degree = sum(nu_p)
        p_to_m = _p_to_m_degree(degree, field)
        out = {}
        for lam, c in schur_in_p(nu_p, field).items():
            for mu, d in p_to_m[lam].items():
                s = out.get(mu, field.zero) + c * d
                if s:
                    out[mu] = s
                else:
                    del out[mu]
        return out

    return _memo(("s_m", Partition(nu), field), build)


def schur_in_m_limited(nu, N, field=SYMBOLIC):
    """Monomial expansion of a Schur polynomial in N variables."""
    return {mu: c for mu, c in schur_in_m(nu, field).items() if len(mu) <= N}


# ---------------------------------------------------------------------------
# two-alphabet expansions in the p (x) p basis

class BiSymFun:
    """Sparse expansion over pairs of power-sum keys: sum c * p_lam(x) p_mu(y)."""

    __slots__ = ("coeffs", "degree_bound", "field")

    def __init__(self, coeffs, degree_bound, field=SYMBOLIC):
        clean = {}
        for (a, b), c in coeffs.items():
            if c:
                key = (Partition(a), Partition(b))
                if sum(key[0]) > degree_bound or sum(key[1]) > degree_bound:
                    continue
                clean[key] = c
        self.coeffs = clean
        self.degree_bound = degree_bound
        self.field = field

    @classmethod
    def one(cls, degree_bound, field=SYMBOLIC):
        return cls({(Partition(), Partition()): field.one}, degree_bound, field)

    def __eq__(self, other):
        if not isinstance(other, BiSymFun):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, self.field.zero) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return BiSymFun(out, max(self.degree_bound, other.degree_bound), self.field)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def scale(self, c):
        if not c:
            return BiSymFun({}, self.degree_bound, self.field)
        return BiSymFun({k: v * c for k, v in self.coeffs.items()}, self.degree_bound, self.field)

    def __mul__(self, other):
        bound = min(self.degree_bound, other.degree_bound)
        out = {}
        zero = self.field.zero
        for (xa, ya), ca in self.coeffs.items():
            for (xb, yb), cb in other.coeffs.items():
                if sum(xa) + sum(xb) > bound or sum(ya) + sum(yb) > bound:
                    continue
                key = (Partition(sorted(xa + xb, reverse=True)), Partition(sorted(ya + yb, reverse=True)))
                s = out.get(key, zero) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return BiSymFun(out, bound, self.field)

    def component(self, xdeg, ydeg):
        out = {k: c for k, c in self.coeffs.items() if sum(k[0]) == xdeg and sum(k[1]) == ydeg}
        return BiSymFun(out, self.degree_bound, self.field)

    def adjoint_x(self, f):
        """Apply f* (adjoint of multiplication by f) on the x slot."""
        field = self.field
        fp = convert(f, "p")
        result = {}
        for lam, a in fp.coeffs.items():
            factor = a
            for n in lam:
                factor = factor * field.from_int(n) * (field.one - field.q ** n) / (field.one - field.t ** n)
            for (xk, yk), c in self.coeffs.items():
                work = {xk: c}
                for n in lam:
                    work = _dpn(work, n, field)
                    if not work:
                        break
                for nk, cc in work.items():
                    key = (nk, yk)
                    s = result.get(key, field.zero) + factor * cc
                    if s:
                        result[key] = s
                    else:
                        del result[key]
        return BiSymFun(result, self.degree_bound, self.field)

    def mul_y(self, f):
        """Multiply by f placed in the y slot."""
        field = self.field
        fp = convert(f, "p")
        out = {}
        for (xk, yk), c in self.coeffs.items():
            for lam, a in fp.coeffs.items():
                if sum(yk) + sum(lam) > self.degree_bound:
                    continue
                key = (xk, Partition(sorted(yk + lam, reverse=True)))
                s = out.get(key, field.zero) + c * a
                if s:
                    out[key] = s
                else:
                    del out[key]
        return BiSymFun(out, self.degree_bound, self.field)

    def series_inverse(self):
        """Inverse of a series with constant term 1, degree by degree.

        Degrees are graded by the x-weight of the keys; valid for the
        kernels used here, whose components are x/y-bihomogeneous.
        """
        field = self.field
        empty = (Partition(), Partition())
        if self.coeffs.get(empty) != field.one:
            raise NotDivisible("series inverse needs constant term 1")
        by_deg = {}
        for key, c in self.coeffs.items():
            by_deg.setdefault(sum(key[0]), {})[key] = c
        inv = {0: {empty: field.one}}
        for d in range(1, self.degree_bound + 1):
            comp = {}
            for e in range(1, d + 1):
                pe = by_deg.get(e)
                if not pe:
                    continue
                ie = inv.get(d - e)
                if not ie:
                    continue
                for (xa, ya), ca in pe.items():
                    for (xb, yb), cb in ie.items():
                        if sum(ya) + sum(yb) > self.degree_bound:
                            continue
                        key = (
                            Partition(sorted(xa + xb, reverse=True)),
                            Partition(sorted(ya + yb, reverse=True)),
                        )
                        s = comp.get(key, field.zero) + ca * cb
                        if s:
                            comp[key] = s
                        else:
                            del comp[key]
            inv[d] = {k: -c for k, c in comp.items()}
        out = {}
        for comp in inv.values():
            out.update(comp)
        return BiSymFun(out, self.degree_bound, self.field)

    def __repr__(self):
        return "BiSymFun(%d terms, bound=%d)" % (len(self.coeffs), self.degree_bound)


# ---------------------------------------------------------------------------
# JSON codec

def to_json_dict(f):
    terms = []
    for lam, c in f.terms():
        terms.append({"partition": list(lam), "coeff": str(c)})
    return {"basis": f.basis, "degree_bound": f.degree_bound, "terms": terms}


def from_json_dict(data, field=SYMBOLIC):
    coeffs = {}
    for term in data["terms"]:
        coeffs[Partition(term["partition"])] = parse_ratfun(term["coeff"])
    return SymFun(data["basis"], coeffs, data["degree_bound"], field)
