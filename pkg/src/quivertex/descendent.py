"""Descendent algebra of a quasi-smooth dg quiver and its Virasoro operators.

Polynomials in the formal symbols ch_k(v), k >= 0, v a vertex.  A monomial
is a sorted tuple of (k, vertex) pairs.  The quotient setting ch_0(v) = d_v
is realized by substitution at evaluation time, never as a separate type.
"""

from fractions import Fraction
from math import factorial

from . import quiver as qv
from .symfunc import SymFunc


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be rational, got {type(c).__name__}")


class DescendentPoly:
    """Sparse polynomial over monomials in the ch_k(vertex) symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[_check_monomial(mono)] = c

    @staticmethod
    def zero():
        return DescendentPoly()

    @staticmethod
    def one():
        return DescendentPoly({(): 1})

    @staticmethod
    def ch(k, v):
        """The generator ch_k(v)."""
        if k < 0:
            return DescendentPoly.zero()
        return DescendentPoly({((k, str(v)),): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        f = DescendentPoly()
        f.terms = out
        return f

    def __neg__(self):
        f = DescendentPoly()
        f.terms = {m: -c for m, c in self.terms.items()}
        return f

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for m1, a in self.terms.items():
            for m2, b in other.terms.items():
                key = tuple(sorted(m1 + m2))
                s = out.get(key, 0) + a * b
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        f = DescendentPoly()
        f.terms = out
        return f

    __rmul__ = __mul__

    def scale(self, c):
        c = _coerce(c)
        f = DescendentPoly()
        if c:
            f.terms = {m: c * x for m, x in self.terms.items()}
        return f

    def __eq__(self, other):
        if isinstance(other, DescendentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == DescendentPoly.one().scale(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def ch_weight(self):
        """Largest total ch-index of any monomial; -1 for zero."""
        return max((sum(k for k, _ in m) for m in self.terms), default=-1)

    def cohomological_degree(self):
        """Largest cohomological degree 2 * sum(k) of any monomial; -1 for zero."""
        w = self.ch_weight()
        return 2 * w if w >= 0 else -1

    def substitute_ch0(self, dims):
        """Evaluate in the quotient ch_0(v) = dims[v]; other symbols survive."""
        out = DescendentPoly.zero()
        for m, c in self.terms.items():
            coeff = Fraction(c)
            rest = []
            for k, v in m:
                if k == 0:
                    coeff *= dims[v]
                    if not coeff:
                        break
                else:
                    rest.append((k, v))
            if coeff:
                out = out + DescendentPoly({tuple(rest): coeff})
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self):
        from .serialize import descendent_to_text

        return f"DescendentPoly({descendent_to_text(self)})"


def _check_monomial(mono):
    m = tuple(sorted((int(k), str(v)) for k, v in mono))
    for k, _ in m:
        if k < 0:
            raise ValueError("ch symbols are indexed by nonnegative integers")
    return m


def _require_quasi_smooth(quiver):
    if not quiver.is_quasi_smooth():
        raise qv.QuiverError(
            "not_quasi_smooth", "descendent operators need arrow degrees in {0,-1}"
        )


def r_op(quiver, n, f):
    """Derivation with R_n(ch_k) = k(k+1)...(k+n) ch_{k+n}; R_{-1} shifts down.

    The coefficient is the empty product 1 at n = -1, and ch_{-1} = 0.
    """
    if n < -1:
        raise ValueError("R_n is defined for n >= -1")
    out = DescendentPoly.zero()
    for mono, c in f.terms.items():
        for i, (k, v) in enumerate(mono):
            if k + n < 0:
                continue
            coeff = Fraction(1)
            for step in range(n + 1):
                coeff *= k + step
            if not coeff:
                continue
            new = tuple(sorted(mono[:i] + mono[i + 1 :] + ((k + n, v),)))
            out = out + DescendentPoly({new: c * coeff})
    return out


def t_element(quiver, n):
    """T_n = sum_{a+b=n} a! b! sum_{v,w} chi(v,w) ch_a(v) ch_b(w); zero for n = -1."""
    _require_quasi_smooth(quiver)
    if n < 0:
        return DescendentPoly.zero()
    units = {v: quiver.unit_vector(v) for v in quiver.vertices}
    out = DescendentPoly.zero()
    for a in range(n + 1):
        b = n - a
        fac = Fraction(factorial(a) * factorial(b))
        for v in quiver.vertices:
            for w in quiver.vertices:
                chi = qv.euler_form(quiver, units[v], units[w])
                if chi:
                    term = DescendentPoly.ch(a, v) * DescendentPoly.ch(b, w)
                    out = out + term.scale(fac * chi)
    return out


def framed_t_element(quiver, framing, n):
    """T_n^{f->*} = T_n - n! sum_v f_v ch_n(v)."""
    if n < 0:
        return DescendentPoly.zero()
    out = t_element(quiver, n)
    fac = Fraction(factorial(n))
    for v in quiver.vertices:
        if framing[v]:
            out = out - DescendentPoly.ch(n, v).scale(fac * framing[v])
    return out


def l_op(quiver, n, f):
    """Virasoro operator L_n = R_n + multiplication by T_n."""
    return r_op(quiver, n, f) + t_element(quiver, n) * f


def l_op_framed(quiver, framing, n, f):
    """Framed Virasoro operator L_n^{f->*} = R_n + multiplication by T_n^{f->*}."""
    return r_op(quiver, n, f) + framed_t_element(quiver, framing, n) * f


def l_wt0(quiver, f):
    """Weight-zero operator sum_{n>=-1} (-1)^n/(n+1)! L_n (R_{-1})^{n+1}.

    The sum is finite: (R_{-1})^{n+1} kills f once n+1 exceeds its total
    ch-index.  The image lies in ker(R_{-1}).
    """
    out = DescendentPoly.zero()
    power = f  # (R_{-1})^{n+1} applied to f, starting at n = -1
    n = -1
    while power:
        sign = -1 if n % 2 else 1
        out = out + l_op(quiver, n, power).scale(Fraction(sign, factorial(n + 1)))
        power = r_op(quiver, -1, power)
        n += 1
    return out


def to_symfunc(f, ch0_value):
    """Translate a one-vertex descendent polynomial to symmetric functions.

    ch_n maps to p_n / n! for n >= 1 and ch_0 to the scalar ch0_value.
    """
    vertices = {v for mono in f.terms for _, v in mono}
    if len(vertices) > 1:
        raise ValueError("to_symfunc needs a single-vertex polynomial")
    out = SymFunc.zero()
    for mono, c in f.terms.items():
        coeff = Fraction(c)
        parts = []
        for k, _ in mono:
            if k == 0:
                coeff *= ch0_value
            else:
                coeff /= factorial(k)
                parts.append(k)
        if coeff:
            out = out + SymFunc.p_monomial(tuple(sorted(parts, reverse=True))).scale(coeff)
    return out
