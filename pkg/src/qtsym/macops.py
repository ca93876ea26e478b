"""Macdonald difference operators: the finite-N determinantal operator,
its renormalised form, the stable limits indexed by k, eigenvalue data in
the 1/(u;1/t)_k basis, Pieri coefficients, and the raising/lowering step
families with their one-box evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .partitions import (
    Partition,
    box_added_index,
    conjugate,
    enumerate_partitions,
)
from .ratfun import SYMBOLIC
from . import families, symfun
from .symfun import NSymPoly, SymFun, XPoly, adjoint_apply, convert, divide_by_vandermonde, expand_x, p_multiply


class NotOneBoxUp(ValueError):
    pass


class NotOneBoxDown(ValueError):
    pass


class InvalidStep(ValueError):
    pass


class SingularSampleSystem(ArithmeticError):
    pass


class PoleAtSample(ZeroDivisionError):
    pass


class UFamily:
    """Finite expansion over the basis 1/(u;1/t)_k, k = 0, 1, 2, ..."""

    def __init__(self, entries):
        self.entries = list(entries)

    def entry(self, k):
        return self.entries[k] if k < len(self.entries) else None

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "UFamily(%r)" % (self.entries,)


# ---------------------------------------------------------------------------
# u-polynomials as plain coefficient lists

def up_mul(a, b, field):
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


def up_eval(a, u0, field):
    total = field.zero
    p = field.one
    for c in a:
        total = total + c * p
        p = p * u0
    return total


def pochhammer_u(u0, k, field):
    """(u0; 1/t)_k = prod_{j<k} (1 - u0 t^-j)."""
    out = field.one
    for j in range(k):
        out = out * (field.one - u0 * field.t ** (-j))
    return out


class URat:
    """Ratio of two u-polynomials with coefficients in the scalar field."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den, field):
        self.num = list(num)
        self.den = list(den)
        self.field = field

    def __mul__(self, other):
        if isinstance(other, URat):
            return URat(up_mul(self.num, other.num, self.field), up_mul(self.den, other.den, self.field), self.field)
        return URat([c * other for c in self.num], self.den, self.field)

    __rmul__ = __mul__

    def at(self, u0):
        d = up_eval(self.den, u0, self.field)
        if not d:
            raise PoleAtSample("u-denominator vanishes at the sample")
        return up_eval(self.num, u0, self.field) / d


# ---------------------------------------------------------------------------
# the finite-N operators

def apply_DN(f, N=None):
    """Coefficients of the u-polynomial D_N(u) f, as N-variable polynomials."""
    N = f.N if N is None else N
    if N != f.N:
        raise ValueError("operand lives in %d variables, expected %d" % (f.N, N))
    field = f.field
    xp = expand_x(f)
    sums = [XPoly.zero(N, field) for _ in range(N + 1)]
    perms = [(sigma, symfun._perm_sign(sigma)) for sigma in permutations(range(N))]
    for size in range(N + 1):
        for subset in combinations(range(N), size):
            sset = set(subset)
            h_terms = {}
            for sigma, sign in perms:
                e = tuple(N - 1 - sigma[i] for i in range(N))
                tdeg = -sum(sigma[i] for i in subset)
                coeff = field.from_int(sign) * field.t ** tdeg if tdeg else field.from_int(sign)
                s = h_terms.get(e, field.zero) + coeff
                if s:
                    h_terms[e] = s
                else:
                    del h_terms[e]
            h = XPoly(N, h_terms, field)
            sums[size] = sums[size] + h * xp.q_shift(subset)
    out = []
    for size in range(N + 1):
        g = sums[size] if size % 2 == 0 else sums[size].scale(-field.one)
        out.append(divide_by_vandermonde(g))
    return out


def _pochhammer_tail_upoly(k, N, field):
    # prod_{j=k}^{N-1} (1 - u t^-j) as a u-polynomial
    out = [field.one]
    for j in range(k, N):
        out = up_mul(out, [field.one, -(field.t ** (-j))], field)
    return out


def apply_AN(f, N=None):
    """Renormalised operator: q^(-deg), divide by (u;1/t)_N, re-expand."""
    N = f.N if N is None else N
    field = f.field
    coeffs = apply_DN(f, N)
    scaled = []
    for c in coeffs:
        out = {}
        for mu, v in c.coeffs.items():
            d = sum(mu)
            out[mu] = v * field.q ** (-d) if d else v
        scaled.append(NSymPoly(N, out, field))
    # exact partial fractions: solve sum_k g_k * prod_{j>=k}(1 - u t^-j) = D
    residual = list(scaled)
    entries = []
    for k in range(N + 1):
        tail = _pochhammer_tail_upoly(k, N, field)
        lead = tail[-1]
        g = residual[N - k].scale(field.one / lead)
        entries.append(g)
        for j, c in enumerate(tail):
            if c:
                residual[j] = residual[j] - g.scale(c)
    for r in residual:
        assert r.is_zero(), "partial fraction residue did not vanish"
    return UFamily(entries)


# ---------------------------------------------------------------------------
# the operators at infinity

def A_k_apply(k, f, degree_bound=None):
    """Apply the k-th stable operator: sum over length-k partitions lam of
    q^(-|lam|) Q_lam P_lam^* acting on f."""
    field = f.field
    bound = f.degree_bound if degree_bound is None else degree_bound
    fp = convert(f, "p")
    result = SymFun.zero("p", bound, field)
    for w in range(k, fp.max_degree() + 1):
        for lam in enumerate_partitions(w, exact_length=k):
            adj = adjoint_apply(_hl_sym(lam, "P", bound, field), fp)
            if adj.is_zero():
                continue
            term = p_multiply(_hl_sym(lam, "Q", bound, field), adj, bound)
            result = result + term.scale(field.q ** (-w))
    return result


def _hl_sym(lam, kind, bound, field):
    coeffs = families.hl_in_p(lam, kind, field)
    return SymFun("p", dict(coeffs), max(bound, sum(lam)), field)


def A_eigen(lam, field=SYMBOLIC):
    """Eigenvalue of the full family on M_lam, as a ratio of u-polynomials."""
    num = [field.one]
    den = [field.one]
    for i, part in enumerate(Partition(lam), start=1):
        num = up_mul(num, [field.q ** (-part), -(field.t ** (1 - i))], field)
        den = up_mul(den, [field.one, -(field.t ** (1 - i))], field)
    return URat(num, den, field)


def _solve_linear(rows, rhs, field):
    n = len(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            raise SingularSampleSystem("no pivot in column %d" % col)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field.one / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def A_k_eigen(lam, field=SYMBOLIC, first_sample=2):
    """Coefficients e_k(lam) with the eigenvalue equal to sum e_k/(u;1/t)_k.

    Found by sampling u at distinct integers and solving the linear system
    exactly; a singular sample set is retried at the next window.
    """
    lam = Partition(lam)
    ell = len(lam)
    eigen = A_eigen(lam, field)
    start = first_sample
    for _ in range(8):
        samples = [field.from_int(u0) for u0 in range(start, start + ell + 1)]
        try:
            rows = []
            rhs = []
            for u0 in samples:
                rows.append([field.one / pochhammer_u(u0, k, field) for k in range(ell + 1)])
                rhs.append(eigen.at(u0))
            values = _solve_linear(rows, rhs, field)
        except SingularSampleSystem:
            start += 1
            continue
        assert values[0] == field.one, "leading coefficient of the eigenvalue is not 1"
        return UFamily(values)
    raise SingularSampleSystem("no usable sample window found")


# ---------------------------------------------------------------------------
# Pieri coefficients

def pieri_up_coeff(lam, mu, field=SYMBOLIC):
    """Coefficient of M_lam in p1 M_mu; lam is mu with term i increased by 1."""
    lam, mu = Partition(lam), Partition(mu)
    i = box_added_index(lam, mu)
    if i is None:
        raise NotOneBoxUp("%r is not %r plus one box" % (tuple(lam), tuple(mu)))
    out = field.one
    li = lam[i - 1]
    for j in range(1, i):
        lj = lam[j - 1]
        out = out * (field.one - field.q ** (lj - li) * field.t ** (i - j + 1))
        out = out / (field.one - field.q ** (lj - li + 1) * field.t ** (i - j))
        out = out * (field.one - field.q ** (lj - li + 1) * field.t ** (i - j - 1))
        out = out / (field.one - field.q ** (lj - li) * field.t ** (i - j))
    return out


def pieri_down_coeff(mu, lam, field=SYMBOLIC):
    """Coefficient of M_mu in dM_lam/dp1; mu is lam with term i decreased by 1."""
    lam, mu = Partition(lam), Partition(mu)
    i = box_added_index(lam, mu)
    if i is None:
        raise NotOneBoxDown("%r is not %r minus one box" % (tuple(mu), tuple(lam)))
    lam_c = conjugate(lam)
    li = lam[i - 1]
    out = field.one
    for j in range(1, li):
        cj = lam_c[j - 1]
        out = out * (field.one - field.q ** (li - j - 1) * field.t ** (cj - i + 1))
        out = out / (field.one - field.q ** (li - j) * field.t ** (cj - i))
        out = out * (field.one - field.q ** (li - j + 1) * field.t ** (cj - i))
        out = out / (field.one - field.q ** (li - j) * field.t ** (cj - i + 1))
    return out


# ---------------------------------------------------------------------------
# step operator families

def step_series_apply(kind, k, f, degree_bound=None):
    """Apply the (k+1)-st raising (B) or lowering (C) operator to f."""
    if kind not in ("B", "C"):
        raise ValueError("kind must be B or C")
    field = f.field
    fp = convert(f, "p")
    bound = (fp.max_degree() + 1) if degree_bound is None else degree_bound
    result = SymFun.zero("p", bound, field)
    tpow = field.t ** (-k)
    top = fp.max_degree() if kind == "B" else fp.max_degree() - 1
    for w in range(k, top + 1):
        for mu in enumerate_partitions(w, exact_length=k):
            mu1 = Partition(sorted(tuple(mu) + (1,), reverse=True))
            if kind == "B":
                adj = adjoint_apply(_hl_sym(mu, "P", bound, field), fp)
                if adj.is_zero():
                    continue
                term = p_multiply(_hl_sym(mu1, "Q", bound, field), adj, bound)
            else:
                adj = adjoint_apply(_hl_sym(mu1, "Q", bound, field), fp)
                if adj.is_zero():
                    continue
                term = p_multiply(_hl_sym(mu, "P", bound, field), adj, bound)
            result = result + term.scale(tpow * field.q ** (-w))
    return result


def step_family_at(kind, f, u0, max_k=None):
    """Evaluate the full raising/lowering series at a sample point u0."""
    field = f.field
    fp = convert(f, "p")
    top = fp.max_degree() if max_k is None else max_k
    bound = fp.max_degree() + 1
    total = SymFun.zero("p", bound, field)
    for k in range(top + 1):
        piece = step_series_apply(kind, k, f, bound)
        if piece.is_zero():
            continue
        total = total + piece.scale(field.one / pochhammer_u(u0, k + 1, field))
    return total


def open_slot_factor(lam, i, field=SYMBOLIC):
    """The eigenvalue product with the factor at slot i opened up."""
    lam = Partition(lam)
    num = [field.t ** (1 - i)]
    den = [field.one, -(field.t ** (1 - i))]
    for j in range(1, len(lam) + 1):
        if j == i:
            continue
        num = up_mul(num, [field.q ** (-lam[j - 1]), -(field.t ** (1 - j))], field)
        den = up_mul(den, [field.one, -(field.t ** (1 - j))], field)
    return URat(num, den, field)


def bc_matrix_coeff(kind, lam, mu, field=SYMBOLIC):
    """Matrix element of B(u) (mu -> lam) or C(u) (lam -> mu), rational in u."""
    lam, mu = Partition(lam), Partition(mu)
    i = box_added_index(lam, mu)
    if i is None:
        if kind == "B":
            raise NotOneBoxUp("%r is not %r plus one box" % (tuple(lam), tuple(mu)))
        raise NotOneBoxDown("%r is not %r minus one box" % (tuple(mu), tuple(lam)))
    if kind == "B":
        scalar = pieri_up_coeff(lam, mu, field) * (field.one - field.t)
    elif kind == "C":
        scalar = pieri_down_coeff(mu, lam, field) * (field.one - field.q)
    else:
        raise ValueError("kind must be B or C")
    return open_slot_factor(lam, i, field) * scalar


@dataclass
class StepEval:
    point: tuple  # (exponent of q, exponent of t) of the evaluation point
    partner: Partition
    coeff: object
    alt_coeff: object  # from the closed product form; coeff/alt_coeff reports the normalisation gap


def step_evaluate(kind, lam, i, field=SYMBOLIC):
    """Evaluate the step family at u = q^(-lam_i) t^(i-1).

    The raising family sends M_partner to coeff * M_lam; the lowering family
    sends M_lam to coeff * M_partner.  alt_coeff carries the closed product
    evaluation of the same matrix element for comparison.
    """
    lam = Partition(lam)
    if not (1 <= i <= len(lam)):
        raise InvalidStep("index %d out of range for %r" % (i, tuple(lam)))
    parts = list(lam)
    parts[i - 1] -= 1
    nxt = parts[i] if i < len(parts) else 0
    if parts[i - 1] < nxt:
        raise InvalidStep("lowering term %d of %r leaves the partition cone" % (i, tuple(lam)))
    mu = Partition(x for x in parts if x)
    li = lam[i - 1]
    u0 = field.q ** (-li) * field.t ** (i - 1)
    coeff = bc_matrix_coeff(kind, lam, mu, field).at(u0)
    if kind == "B":
        scalar = pieri_up_coeff(lam, mu, field) * (field.one - field.t)
    else:
        scalar = pieri_down_coeff(mu, lam, field) * (field.one - field.q)
    closed = field.t ** (1 - i)
    for j in range(1, len(lam) + 1):
        closed = closed / (field.q ** li - field.t ** (i - j))
        if j != i:
            closed = closed * (field.q ** (li - lam[j - 1]) - field.t ** (i - j))
    return StepEval(point=(-li, i - 1), partner=mu, coeff=coeff, alt_coeff=scalar * closed)
