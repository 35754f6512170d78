"""Lattice vertex algebra V = Q[lattice] (x) Sym(lattice (x) t^{-1}Q[t^{-1}]).

The symmetric bilinear form B may be degenerate; only the half of the
Virasoro operators L_n with n >= -1 is available then.  The sign in the
exponential fields is epsilon(alpha, beta) = (-1)^{b(alpha, beta)} for a
chosen integral b with b + b^T = B.

Elements are sparse sums of basis states e^alpha (x) prod_j (v_{i_j})_{-k_j}
with alpha an integer vector, i_j a lattice basis index and k_j >= 1.
Operator products follow the ordered Leibniz rule: a bracket produced while
commuting past the j-th creation factor acts only on the factors after j.
"""

from fractions import Fraction

from . import partitions as pt


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be rational, got {type(c).__name__}")


class Lattice:
    """Free abelian group of finite rank with symmetric form B and sign datum b."""

    __slots__ = ("rank", "B", "b")

    def __init__(self, B, b):
        self.B = tuple(tuple(int(x) for x in row) for row in B)
        self.b = tuple(tuple(int(x) for x in row) for row in b)
        self.rank = len(self.B)
        if any(len(row) != self.rank for row in self.B) or len(self.b) != self.rank:
            raise ValueError("B and b must be square matrices of equal rank")
        if any(len(row) != self.rank for row in self.b):
            raise ValueError("B and b must be square matrices of equal rank")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.B[i][j] != self.B[j][i]:
                    raise ValueError("B must be symmetric")
                if self.b[i][j] + self.b[j][i] != self.B[i][j]:
                    raise ValueError("sign datum must satisfy b + b^T = B")

    def pairing(self, u, v):
        """B(u, v) for integer vectors."""
        return sum(u[i] * self.B[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def sign_exponent(self, u, v):
        """b(u, v) for integer vectors."""
        return sum(u[i] * self.b[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def basis_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def zero(self):
        return (0,) * self.rank

    def __repr__(self):
        return f"Lattice(rank={self.rank}, B={self.B})"

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.B == other.B and self.b == other.b

    def __hash__(self):
        return hash((self.B, self.b))


def grassmannian_lattice():
    """Rank-2 lattice in coordinates (N, k) carrying the symmetrized framed
    pairing 2 k1 k2 - N1 k2 - N2 k1, with sign datum b = k1 (k2 - N2)."""
    return Lattice(B=[[0, -1], [-1, 2]], b=[[0, 0], [-1, 1]])


def single_box_lattice():
    """Rank-1 lattice (Z, 2): the symmetrized form of the one-vertex quiver."""
    return Lattice(B=[[2]], b=[[1]])


class VAElem:
    """Sparse element of the lattice vertex algebra.

    Keys are (alpha, fock) with alpha a tuple of ints of length rank and
    fock a sorted tuple of (basis index, mode >= 1) pairs.
    """

    __slots__ = ("lattice", "terms")

    def __init__(self, lattice, terms=None):
        self.lattice = lattice
        self.terms = {}
        if terms:
            for (alpha, fock), c in terms.items():
                c = _coerce(c)
                if not c:
                    continue
                key = (self._check_alpha(alpha), self._check_fock(fock))
                self.terms[key] = self.terms.get(key, Fraction(0)) + c
                if not self.terms[key]:
                    del self.terms[key]

    def _check_alpha(self, alpha):
        a = tuple(int(x) for x in alpha)
        if len(a) != self.lattice.rank:
            raise ValueError("lattice vector has wrong length")
        return a

    def _check_fock(self, fock):
        f = tuple(sorted((int(i), int(k)) for i, k in fock))
        for i, k in f:
            if not (0 <= i < self.lattice.rank):
                raise ValueError("basis index out of range")
            if k < 1:
                raise ValueError("creation modes must be >= 1")
        return f

    @staticmethod
    def vacuum(lattice):
        return VAElem(lattice, {(lattice.zero(), ()): 1})

    @staticmethod
    def group_element(lattice, alpha):
        return VAElem(lattice, {(tuple(alpha), ()): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        res = VAElem(self.lattice)
        res.terms = out
        return res

    def __neg__(self):
        res = VAElem(self.lattice)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coerce(c)
        res = VAElem(self.lattice)
        if c:
            res.terms = {k: c * x for k, x in self.terms.items()}
        return res

    def __eq__(self, other):
        return (
            isinstance(other, VAElem)
            and self.lattice == other.lattice
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.lattice, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def fock_degree(self):
        """Largest total mode sum among terms; -1 for zero."""
        return max((sum(k for _, k in fock) for _, fock in self.terms), default=-1)

    def components(self):
        """Lattice points alpha carrying nonzero terms."""
        return sorted({alpha for alpha, _ in self.terms})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        entries = ", ".join(
            f"{c} * e^{list(alpha)}x{list(fock)}" for (alpha, fock), c in self.sorted_terms()
        )
        return f"VAElem({entries or '0'})"


def create(lattice, v, k, x):
    """Left multiplication by v_{-k}, extended over the lattice basis."""
    if k < 1:
        raise ValueError("creation mode must be >= 1")
    v = tuple(int(c) for c in v)
    out = VAElem(lattice)
    for (alpha, fock), c in x.terms.items():
        for i, vi in enumerate(v):
            if vi:
                key = (alpha, tuple(sorted(fock + ((i, k),))))
                out = out + VAElem(lattice, {key: c * vi})
    return out


def annihilate_mode(lattice, v, k, x):
    """The mode v_{(k)} for k >= 0: zero mode is diagonal, positive modes
    contract against matching creation factors via [v_(k), w_(-l)] = k d_{kl} B(v,w)."""
    if k < 0:
        raise ValueError("annihilation mode must be >= 0")
    v = tuple(int(c) for c in v)
    out = VAElem(lattice)
    for (alpha, fock), c in x.terms.items():
        if k == 0:
            coeff = lattice.pairing(v, alpha)
            if coeff:
                out = out + VAElem(lattice, {(alpha, fock): c * coeff})
            continue
        for j, (i, mode) in enumerate(fock):
            if mode != k:
                continue
            coeff = k * lattice.pairing(v, lattice.basis_vector(i))
            if coeff:
                rest = fock[:j] + fock[j + 1 :]
                out = out + VAElem(lattice, {(alpha, rest): c * coeff})
    return out


def apply_mode(lattice, v, m, x):
    """v_{(m)} for any integer m: creation for m < 0, zero mode, or annihilation."""
    if m < 0:
        return create(lattice, v, -m, x)
    return annihilate_mode(lattice, v, m, x)


def translate(lattice, x):
    """Translation operator: [T, v_{(-k)}] = k v_{(-k-1)}, T e^alpha = e^alpha (x) alpha_{-1}."""
    out = VAElem(lattice)
    for (alpha, fock), c in x.terms.items():
        for j, (i, mode) in enumerate(fock):
            bumped = tuple(sorted(fock[:j] + fock[j + 1 :] + ((i, mode + 1),)))
            out = out + VAElem(lattice, {(alpha, bumped): c * mode})
        base = VAElem(lattice, {(alpha, fock): c})
        out = out + create(lattice, alpha, 1, base)
    return out


def virasoro(lattice, n, x):
    """L_n for n >= -1: L_{-1} = T, L_0 e^a = B(a,a)/2 e^a, L_{n>0} e^a = 0,
    commuted past creations by [L_n, v_{(-k)}] = k v_{(-k+n)}."""
    if n < -1:
        raise ValueError("only L_n with n >= -1 is defined")
    if n == -1:
        return translate(lattice, x)
    out = VAElem(lattice)
    for (alpha, fock), c in x.terms.items():
        out = out + _virasoro_term(lattice, n, alpha, fock).scale(c)
    return out


def _virasoro_term(lattice, n, alpha, fock):
    if not fock:
        if n == 0:
            w = Fraction(lattice.pairing(alpha, alpha), 2)
            return VAElem(lattice, {(alpha, ()): w}) if w else VAElem(lattice)
        return VAElem(lattice)
    (i, mode), rest = fock[0], fock[1:]
    suffix = VAElem(lattice, {(alpha, rest): 1})
    bracket = apply_mode(lattice, lattice.basis_vector(i), n - mode, suffix).scale(mode)
    tail = create(lattice, lattice.basis_vector(i), mode, _virasoro_term(lattice, n, alpha, rest))
    return bracket + tail


def field_mode(lattice, alpha, n, x):
    """Coefficient of z^{-1-n} in Y(e^alpha, z) x.

    Per beta-component: sign (-1)^{b(alpha,beta)}, monomial shift by
    B(alpha,beta), annihilation exponential (finite on any state), creation
    exponential truncated at the single contributing z-power.
    """
    alpha = tuple(int(c) for c in alpha)
    out = VAElem(lattice)
    for (beta, fock), c in x.terms.items():
        sign = -1 if lattice.sign_exponent(alpha, beta) % 2 else 1
        shift = lattice.pairing(alpha, beta)
        gamma = tuple(a + b for a, b in zip(alpha, beta))
        base = VAElem(lattice, {(beta, fock): c * sign})
        max_m = sum(k for _, k in fock)
        for m in range(0, max_m + 1):
            annihilated = _exp_annihilation(lattice, alpha, m, base)
            if not annihilated:
                continue
            p = m - 1 - n - shift
            if p < 0:
                continue
            created = _exp_creation(lattice, alpha, p, annihilated)
            for (_, w), cc in created.terms.items():
                out = out + VAElem(lattice, {(gamma, w): cc})
    return out


def _exp_annihilation(lattice, alpha, m, x):
    """z^{-m} coefficient of exp(-sum_{k>0} alpha_(k)/k z^{-k}) applied to x."""
    out = VAElem(lattice)
    for mu in pt.partitions_of(m):
        piece = x
        for part in mu:
            piece = annihilate_mode(lattice, alpha, part, piece)
            if not piece:
                break
        if piece:
            sign = -1 if pt.length(mu) % 2 else 1
            out = out + piece.scale(Fraction(sign, 1) / pt.z_factor(mu))
    return out


def _exp_creation(lattice, alpha, p, x):
    """z^{p} coefficient of exp(sum_{j>0} alpha_(-j)/j z^{j}) applied to x."""
    out = VAElem(lattice)
    for nu in pt.partitions_of(p):
        piece = x
        for part in nu:
            piece = create(lattice, alpha, part, piece)
            if not piece:
                break
        if piece:
            out = out + piece.scale(Fraction(1) / pt.z_factor(nu))
    return out


def borcherds_bracket(lattice, alpha, x):
    """The zero-mode product e^alpha_(0) x inducing the Lie bracket on V/TV."""
    return field_mode(lattice, alpha, 0, x)


def is_primary(lattice, x):
    """Check the primary-state conditions on a Fock-homogeneous element.

    Returns a report with the L_0 eigenvalue check, the list of failing
    L_n operators (1 <= n <= Fock degree suffices: L_n lowers Fock degree
    by n and kills every e^alpha for n > 0), and the value of the finite
    weight-one criterion sum_{n >= -1} (-1)^n/(n+1)! T^{n+1} L_n(x).
    """
    if not x:
        raise ValueError("primary test undefined for the zero element")
    by_component = {}
    for (alpha, fock), _ in x.terms.items():
        by_component.setdefault(alpha, set()).add(sum(k for _, k in fock))
    for alpha, degrees in by_component.items():
        if len(degrees) > 1:
            raise ValueError(f"component {alpha} is not Fock-homogeneous")

    failures = []
    eigenvalues = {
        Fraction(lattice.pairing(alpha, alpha), 2) + next(iter(degs))
        for alpha, degs in by_component.items()
    }
    eigenvalue = None
    if len(eigenvalues) == 1:
        eigenvalue = next(iter(eigenvalues))
        if virasoro(lattice, 0, x) != x.scale(eigenvalue):
            failures.append("L0_not_eigenvector")
            eigenvalue = None
    else:
        failures.append("L0_not_eigenvector")
    l0_ok = eigenvalue is not None

    max_deg = x.fock_degree()
    for n in range(1, max_deg + 1):
        if virasoro(lattice, n, x):
            failures.append(f"L{n}_nonzero")

    # finite weight-one criterion: nonzero value means x mod T(V) is not a
    # weight-one primary state
    wt_sum = VAElem(lattice)
    for n in range(-1, max_deg + 1):
        term = virasoro(lattice, n, x)
        for _ in range(n + 1):
            term = translate(lattice, term)
        sign = -1 if n % 2 else 1
        wt_sum = wt_sum + term.scale(Fraction(sign, _factorial(n + 1)))

    return {
        "primary": not failures,
        "l0_eigenvalue_ok": l0_ok,
        "l0_eigenvalue": eigenvalue,
        "failures": failures,
        "wt0_sum_zero": not wt_sum,
    }


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
