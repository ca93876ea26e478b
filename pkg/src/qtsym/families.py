"""Constructors for the classical families: Hall-Littlewood P and Q,
Schur, Macdonald, the Green transition table, and the one-row generating
series with its multiplication coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    LengthExceedsN,
    Partition,
    box_added_index,
    conjugate,
    dominates,
    enumerate_partitions,
    grevlex_key,
    horizontal_strip,
    multiplicities,
    t_factors,
)
from .ratfun import SYMBOLIC
from . import symfun
from .symfun import (
    NSymPoly,
    SymFun,
    XPoly,
    _express_in_basis,
    _memo,
    antisymmetrize_to_schur,
    schur_in_m_limited,
)


def t_deformed_vandermonde(N, field=SYMBOLIC):
    """The expanded product of (x_i - t x_j) over all pairs i < j <= N."""

    def build():
        xp = symfun.xpoly_one(N, field)
        neg_t = -field.t
        for i in range(N):
            for j in range(i + 1, N):
                ei = [0] * N
                ei[i] = 1
                ej = [0] * N
                ej[j] = 1
                factor = XPoly(N, {tuple(ei): field.one, tuple(ej): neg_t}, field)
                xp = xp * factor
        return xp

    return _memo(("tvand", N, field), build)


def hl_alternant(lam, N, field=SYMBOLIC):
    """Hall-Littlewood polynomial P_lam(x_1..x_N) in the monomial basis."""
    lam = Partition(lam)
    if N < len(lam):
        raise LengthExceedsN("N=%d below the length of %r" % (N, tuple(lam)))

    def build():
        pad = tuple(lam) + (0,) * (N - len(lam))
        shifted = {}
        for e, c in t_deformed_vandermonde(N, field).terms.items():
            shifted[tuple(e[i] + pad[i] for i in range(N))] = c
        acc = antisymmetrize_to_schur(XPoly(N, shifted, field))
        v = t_factors(lam, N=N, field=field).v
        out = {}
        for nu, c in acc.items():
            c = c / v
            for mu, d in schur_in_m_limited(nu, N, field).items():
                s = out.get(mu, field.zero) + c * d
                if s:
                    out[mu] = s
                else:
                    del out[mu]
        if field.is_symbolic:
            for mu, c in out.items():
                assert c.den == 1 and c.num.max_deg_q() == 0, (
                    "coefficient of %r leaves Z[t]: %s" % (tuple(mu), c)
                )
        return NSymPoly(N, out, field)

    return _memo(("hl_alt", lam, N, field), build)


def hl_in_m(lam, field=SYMBOLIC):
    """Monomial expansion of the stable Hall-Littlewood function P_lam."""
    lam = Partition(lam)

    def build():
        if not lam:
            return {Partition(): field.one}
        return dict(hl_alternant(lam, sum(lam), field).coeffs)

    return _memo(("hl_m", lam, field), build)


def hl_q_in_m(lam, field=SYMBOLIC):
    lam = Partition(lam)

    def build():
        b = t_factors(lam, field=field).b
        return {mu: c * b for mu, c in hl_in_m(lam, field).items()}

    return _memo(("hlq_m", lam, field), build)


def hall_littlewood(lam, kind, degree_bound=None, field=SYMBOLIC):
    """The stable symmetric function P_lam or Q_lam = b_lam(t) P_lam."""
    if kind not in ("P", "Q"):
        raise ValueError("kind must be P or Q")
    lam = Partition(lam)
    bound = sum(lam) if degree_bound is None else degree_bound
    coeffs = hl_in_m(lam, field) if kind == "P" else hl_q_in_m(lam, field)
    return SymFun("m", dict(coeffs), bound, field)


def hl_in_p(lam, kind, field=SYMBOLIC):
    """Power-sum expansion of P_lam or Q_lam (memoized; heavily reused by
    the operator sums)."""
    lam = Partition(lam)

    def build():
        sym = hall_littlewood(lam, kind, field=field)
        return dict(symfun.convert(sym, "p").coeffs)

    return _memo(("hl_p", kind, lam, field), build)


def schur_in_m(lam, field=SYMBOLIC):
    """Monomial expansion of the Schur function (h-determinant route)."""
    return symfun.schur_in_m(lam, field)


def schur(lam, degree_bound=None, field=SYMBOLIC):
    lam = Partition(lam)
    bound = sum(lam) if degree_bound is None else degree_bound
    return SymFun("m", dict(symfun.schur_in_m(lam, field)), bound, field)


def q_row_series(degree_bound, field=SYMBOLIC):
    """One-row functions Q_1..Q_d: u-coefficients of exp(sum (1-t^n)/n p_n u^n)."""
    if degree_bound < 1:
        raise ValueError("degree_bound must be at least 1")
    rows = [{Partition(): field.one}]
    for m in range(1, degree_bound + 1):
        acc = {}
        for n in range(1, m + 1):
            factor = field.one - field.t ** n
            for mu, c in rows[m - n].items():
                key = Partition(sorted(tuple(mu) + (n,), reverse=True))
                s = acc.get(key, field.zero) + c * factor
                if s:
                    acc[key] = s
                else:
                    del acc[key]
        inv_m = field.from_fraction(Fraction(1, m))
        rows.append({k: c * inv_m for k, c in acc.items()})
    return [SymFun("p", rows[m], degree_bound, field) for m in range(1, degree_bound + 1)]


# ---------------------------------------------------------------------------
# Macdonald functions via Gram-Schmidt

def _macdonald_degree(degree, field):
    def build():
        lams = enumerate_partitions(degree)
        m_to_p = symfun._m_to_basis_degree("p", degree, field)
        out_m = {}
        out_p = {}
        norms = {}
        done = []
        for lam in sorted(lams, key=grevlex_key, reverse=True):
            # ascending dominance: reverse of the canonical enumeration order
            vec_m = {lam: field.one}
            vec_p = dict(m_to_p[lam])
            for mu in done:
                c = _p_dot(vec_p, out_p[mu], field)
                if not c:
                    continue
                c = c / norms[mu]
                _sub_scaled(vec_m, out_m[mu], c, field)
                _sub_scaled(vec_p, out_p[mu], c, field)
            for mu in vec_m:
                assert dominates(lam, mu), (
                    "Macdonald expansion of %r touches %r, outside the lower order ideal"
                    % (tuple(lam), tuple(mu))
                )
            out_m[lam] = vec_m
            out_p[lam] = vec_p
            norms[lam] = _p_dot(vec_p, vec_p, field)
            done.append(lam)
        return out_m, out_p

    return _memo(("macdonald", degree, field), build)


def _p_dot(a, b, field):
    total = field.zero
    if len(a) > len(b):
        a, b = b, a
    for lam, c in a.items():
        d = b.get(lam)
        if d:
            total = total + c * d * symfun._ip_factor(lam, field)
    return total


def _sub_scaled(target, source, c, field):
    for k, v in source.items():
        s = target.get(k, field.zero) - c * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def macdonald_in_m(lam, field=SYMBOLIC):
    lam = Partition(lam)
    return _macdonald_degree(sum(lam), field)[0][lam]


def macdonald_in_p(lam, field=SYMBOLIC):
    lam = Partition(lam)
    return _macdonald_degree(sum(lam), field)[1][lam]


def macdonald_M(lam, degree_bound=None, field=SYMBOLIC):
    """The Macdonald symmetric function, unitriangular over monomials."""
    lam = Partition(lam)
    bound = sum(lam) if degree_bound is None else degree_bound
    return SymFun("m", dict(macdonald_in_m(lam, field)), bound, field)


# ---------------------------------------------------------------------------
# Green transition coefficients

@dataclass
class GreenTable:
    degree: int
    entries: dict

    def x(self, lam, mu):
        return self.entries[(Partition(lam), Partition(mu))]


def green_table(degree, field=SYMBOLIC):
    """Coefficients X_{lam,mu}(t) with p_lam = sum_mu X_{lam,mu} P_mu."""
    if degree < 1:
        raise ValueError("degree must be at least 1")

    def build():
        lams = enumerate_partitions(degree)
        expansions = {mu: hl_in_m(mu, field) for mu in lams}
        order = sorted(lams, key=grevlex_key)
        p_to_m = symfun._p_to_m_degree(degree, field)
        entries = {}
        for lam in lams:
            row = _express_in_basis(dict(p_to_m[lam]), expansions, order, field)
            for mu in lams:
                c = row.get(mu, field.zero)
                if field.is_symbolic:
                    assert c.den == 1 and c.num.max_deg_q() == 0, (
                        "Green coefficient X[%r,%r] is not in Z[t]: %s"
                        % (tuple(lam), tuple(mu), c)
                    )
                entries[(lam, mu)] = c
        return GreenTable(degree=degree, entries=entries)

    return _memo(("green", degree, field), build)


# ---------------------------------------------------------------------------
# one-row multiplication and first-derivative coefficients

def morris_phi(lam, mu, field=SYMBOLIC):
    """Coefficient of P_lam in Q_n P_mu, n = |lam| - |mu| (0 off horizontal strips)."""
    lam, mu = Partition(lam), Partition(mu)
    if not horizontal_strip(lam, mu):
        return field.zero
    lam_c, mu_c = conjugate(lam), conjugate(mu)
    mult = multiplicities(lam)
    out = field.one
    for i in range(1, (lam[0] if lam else 0) + 1):
        d_i = lam_c[i - 1] - (mu_c[i - 1] if i - 1 < len(mu_c) else 0)
        d_next = 0
        if i < len(lam_c):
            d_next = lam_c[i] - (mu_c[i] if i < len(mu_c) else 0)
        if d_i > d_next:
            out = out * (field.one - field.t ** mult[i])
    return out


def psi_coeff(lam, mu, field=SYMBOLIC):
    """Coefficient of P_mu in dP_lam/dp1 (0 unless mu is lam minus one box)."""
    lam, mu = Partition(lam), Partition(mu)
    i = box_added_index(lam, mu)
    if i is None:
        return field.zero
    if lam[i - 1] == 1:
        return field.one
    part = lam[i - 1] - 1
    m = sum(1 for x in mu if x == part)
    return field.one - field.t ** m
