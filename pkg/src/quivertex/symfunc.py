"""Exact arithmetic in the ring of symmetric functions over Q.

Everything is stored in the power-sum basis: a SymFunc is a sparse map
from partitions la to the rational coefficient of p_la.  The Hall pairing
is diagonal in this basis, and all Virasoro / Hecke / vertex operators
used elsewhere are simple there, which is why p is the canonical basis
and e, h, m, s and Jack polynomials are conversions.
"""

from fractions import Fraction
from functools import lru_cache

from . import partitions as pt


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be rational, got {type(c).__name__}")


class SymFunc:
    """Sparse rational linear combination of power-sum monomials p_la."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for la, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[pt.check_partition(la)] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return SymFunc()

    @staticmethod
    def one():
        return SymFunc({(): Fraction(1)})

    @staticmethod
    def p(n):
        """The power sum p_n, n >= 1."""
        if n < 1:
            raise ValueError("power sums are indexed by positive integers")
        return SymFunc({(n,): Fraction(1)})

    @staticmethod
    def p_monomial(la):
        """p_la = prod_i p_{la_i}."""
        return SymFunc({pt.check_partition(la): Fraction(1)})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for la, c in other.terms.items():
            s = out.get(la, 0) + c
            if s:
                out[la] = s
            else:
                out.pop(la, None)
        f = SymFunc()
        f.terms = out
        return f

    def __neg__(self):
        f = SymFunc()
        f.terms = {la: -c for la, c in self.terms.items()}
        return f

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for la, a in self.terms.items():
            for mu, b in other.terms.items():
                key = pt.merge(la, mu)
                s = out.get(key, 0) + a * b
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        f = SymFunc()
        f.terms = out
        return f

    __rmul__ = __mul__

    def scale(self, c):
        c = _coerce(c)
        f = SymFunc()
        if c:
            f.terms = {la: c * x for la, x in self.terms.items()}
        return f

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == SymFunc.one().scale(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure queries -------------------------------------------------

    def coefficient(self, la):
        return self.terms.get(pt.check_partition(la), Fraction(0))

    def degree(self):
        """Max degree among stored terms; -1 for the zero function."""
        return max((pt.size(la) for la in self.terms), default=-1)

    def is_homogeneous(self):
        return len({pt.size(la) for la in self.terms}) <= 1

    def homogeneous_part(self, d):
        f = SymFunc()
        f.terms = {la: c for la, c in self.terms.items() if pt.size(la) == d}
        return f

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def sorted_terms(self):
        """Terms in canonical order: degree, then lexicographic on the tuple."""
        return sorted(self.terms.items(), key=lambda kv: (pt.size(kv[0]), kv[0]))

    def __repr__(self):
        from .serialize import symfunc_to_text

        return f"SymFunc({symfunc_to_text(self)})"


# -- generators of the classical bases --------------------------------------


@lru_cache(maxsize=None)
def elementary(j):
    """e_j in the p-basis, via Newton's identity j*e_j = sum (-1)^{i-1} e_{j-i} p_i."""
    if j < 0:
        return SymFunc.zero()
    if j == 0:
        return SymFunc.one()
    acc = SymFunc.zero()
    for i in range(1, j + 1):
        term = elementary(j - i) * SymFunc.p(i)
        acc = acc + term.scale(Fraction((-1) ** (i - 1), j))
    return acc


@lru_cache(maxsize=None)
def complete(j):
    """h_j in the p-basis, via Newton's identity j*h_j = sum h_{j-i} p_i."""
    if j < 0:
        return SymFunc.zero()
    if j == 0:
        return SymFunc.one()
    acc = SymFunc.zero()
    for i in range(1, j + 1):
        acc = acc + (complete(j - i) * SymFunc.p(i)).scale(Fraction(1, j))
    return acc


@lru_cache(maxsize=None)
def schur(la):
    """s_la by the Jacobi-Trudi determinant det(h_{la_i - i + j})."""
    la = pt.check_partition(la)
    n = len(la)
    if n == 0:
        return SymFunc.one()
    rows = [[la[i] - i + j for j in range(n)] for i in range(n)]
    return _det_of_completes(tuple(map(tuple, rows)))


def _det_of_completes(rows):
    """Determinant of (h_{rows[i][j]})_{ij} by cofactor expansion.

    Minors are memoized on (row offset, surviving columns); entries with a
    negative index are h_{<0} = 0.
    """
    n = len(rows)

    @lru_cache(maxsize=None)
    def minor(i, cols):
        if i == n:
            return SymFunc.one()
        acc = SymFunc.zero()
        for pos, j in enumerate(cols):
            idx = rows[i][j]
            if idx < 0:
                continue
            sub = minor(i + 1, cols[:pos] + cols[pos + 1 :])
            if not sub:
                continue
            term = complete(idx) * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        return acc

    return minor(0, tuple(range(n)))


def monomial(la):
    """m_la in the p-basis, by inverting the h-to-p transition in degree |la|."""
    la = pt.check_partition(la)
    return _monomial_basis(pt.size(la))[la]


@lru_cache(maxsize=None)
def _monomial_basis(d):
    """All m_la for |la| = d, solved from <m_la, h_mu> = delta via h in p-basis."""
    parts = list(pt.partitions_of(d))
    k = len(parts)
    index = {la: i for i, la in enumerate(parts)}
    # A[mu][nu] = (coefficient of p_nu in h_mu) * z_nu
    mat = [[Fraction(0)] * k for _ in range(k)]
    for i, mu in enumerate(parts):
        h_mu = SymFunc.one()
        for part in mu:
            h_mu = h_mu * complete(part)
        for nu, c in h_mu.terms.items():
            mat[i][index[nu]] = c * pt.z_factor(nu)
    inv = _invert_matrix(mat)
    out = {}
    for la in parts:
        col = index[la]
        f = SymFunc()
        f.terms = {
            parts[r]: inv[r][col] for r in range(k) if inv[r][col]
        }
        out[la] = f
    return out


def _invert_matrix(mat):
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("singular transition matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# -- Hall pairing and friends ------------------------------------------------


def hall(f, g):
    """Hall inner product, <p_la, p_mu> = delta * z_la, extended bilinearly."""
    total = Fraction(0)
    small, big = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for la, a in small.items():
        b = big.get(la)
        if b:
            total += a * b * pt.z_factor(la)
    return total


def annihilate(n, f):
    """p_{-n} = n * d/dp_n, the Hall adjoint of multiplication by p_n."""
    if n < 1:
        raise ValueError("annihilation index must be >= 1")
    out = {}
    for la, c in f.terms.items():
        m = pt.multiplicity(la, n)
        if m:
            key = pt.remove_one(la, n)
            s = out.get(key, 0) + c * m * n
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    g = SymFunc()
    g.terms = out
    return g


def derivative(n, f):
    """d/dp_n, the plain formal partial derivative."""
    return annihilate(n, f).scale(Fraction(1, n))


def involution(f):
    """The algebra involution sending p_j to (-1)^(j-1) p_j (s_la to s_la^t)."""
    g = SymFunc()
    g.terms = {la: c * pt.sign_of_conjugation(la) for la, c in f.terms.items()}
    return g


def skew_by(g, f):
    """g^perp(f): the Hall adjoint of multiplication by g, applied to f."""
    out = SymFunc.zero()
    for la, c in g.terms.items():
        piece = f
        for part in la:
            piece = annihilate(part, piece)
            if not piece:
                break
        if piece:
            out = out + piece.scale(c)
    return out


def schur_expand(f):
    """Coefficients {la: <f, s_la>} of the Schur expansion of f."""
    out = {}
    degrees = {pt.size(la) for la in f.terms}
    for d in sorted(degrees):
        fd = f.homogeneous_part(d)
        for la in pt.partitions_of(d):
            c = hall(fd, schur(la))
            if c:
                out[la] = c
    return out


def monomial_expand(f):
    """Coefficients {la: c_la} with f = sum c_la m_la."""
    out = {}
    for d in sorted({pt.size(la) for la in f.terms}):
        fd = f.homogeneous_part(d)
        parts = list(pt.partitions_of(d))
        basis = _monomial_basis(d)
        # Solve sum_la x_la * m_la = fd in the p-coordinates.
        mat = [[basis[mu].terms.get(nu, Fraction(0)) for mu in parts] for nu in parts]
        rhs = [fd.terms.get(nu, Fraction(0)) for nu in parts]
        sol = _solve_linear(mat, rhs)
        for la, x in zip(parts, sol):
            if x:
                out[la] = x
    return out


def _solve_linear(mat, rhs):
    n = len(mat)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("singular linear system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


# -- Jack polynomials ---------------------------------------------------------


def hall_deformed(f, g, alpha):
    """The alpha-deformed pairing, <p_la, p_mu> = delta * z_la * alpha^ell(la)."""
    total = Fraction(0)
    for la, a in f.terms.items():
        b = g.terms.get(la)
        if b:
            total += a * b * pt.z_factor(la) * alpha ** pt.length(la)
    return total


def jack(la, alpha):
    """Monic Jack polynomial P_la^(alpha) = m_la + lower monomial terms.

    Computed by Gram-Schmidt against the alpha-deformed Hall pairing, running
    through the partitions of |la| in increasing lexicographic order (which
    refines dominance).  Raises for alpha = 0 or when the Gram matrix degenerates
    at a non-generic alpha.
    """
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ValueError("Jack parameter must be nonzero")
    la = pt.check_partition(la)
    return _jack_basis(pt.size(la), alpha)[la]


@lru_cache(maxsize=None)
def _jack_basis(d, alpha):
    parts = sorted(pt.partitions_of(d))  # ascending lexicographic
    done = []  # (partition, P, <P, P>_alpha)
    out = {}
    for la in parts:
        f = monomial(la)
        for mu, g, norm in done:
            c = hall_deformed(f, g, alpha)
            if c:
                f = f - g.scale(c / norm)
        norm = hall_deformed(f, f, alpha)
        if norm == 0:
            raise ValueError(
                f"Gram matrix singular at alpha={alpha} (norm of P_{la} vanishes)"
            )
        done.append((la, f, norm))
        out[la] = f
    return out
