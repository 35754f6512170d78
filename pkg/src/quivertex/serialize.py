"""Text and JSON round-trips for every public value type.

Serialization is canonical: terms ordered by (degree, partition) so that
identical inputs always produce byte-identical output.  Rationals are
`num` or `num/den`; JSON carries them as [num, den] pairs.
"""

import re
from fractions import Fraction

from . import quiver as qv
from .descendent import DescendentPoly
from .grasscalc import GrElem
from .latticeva import Lattice, VAElem
from .symfunc import SymFunc


def rational_to_text(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def rational_from_text(s):
    s = s.strip()
    if not re.fullmatch(r"-?\d+(/\d+)?", s):
        raise ValueError(f"bad rational {s!r}")
    return Fraction(s)


def rational_to_json(c):
    return [c.numerator, c.denominator]


def rational_from_json(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def partition_to_text(la):
    return ",".join(str(p) for p in la) if la else "-"


def partition_from_text(s):
    s = s.strip()
    if s in ("", "-", "()"):
        return ()
    try:
        parts = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ValueError(f"bad partition {s!r}") from None
    from .partitions import check_partition

    return check_partition(parts)


# -- SymFunc ------------------------------------------------------------------


def _p_monomial_text(la):
    """Parts ascending, repeated parts grouped as powers: p1^2*p3."""
    factors = []
    for part in sorted(set(la)):
        m = la.count(part)
        factors.append(f"p{part}" if m == 1 else f"p{part}^{m}")
    return "*".join(factors)


def symfunc_to_text(f):
    if not f.terms:
        return "0"
    chunks = []
    for la, c in f.sorted_terms():
        mono = _p_monomial_text(la)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{rational_to_text(mag)}*{mono}"
        else:
            body = rational_to_text(mag)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


_TERM_SPLIT = re.compile(r"(?<![\^*/])\s*([+-])\s*")
_P_FACTOR = re.compile(r"p(\d+)(?:\^(\d+))?$")


def symfunc_from_text(s):
    s = s.strip()
    if not s:
        raise ValueError("empty symmetric-function expression")
    if s == "0":
        return SymFunc.zero()
    pieces = _TERM_SPLIT.split(s)
    # pieces = [first, sign, term, sign, term, ...]; an empty first means a leading sign
    out = SymFunc.zero()
    if pieces[0].strip():
        out = out + _parse_sym_term(pieces[0], 1)
    for i in range(1, len(pieces), 2):
        sign = 1 if pieces[i] == "+" else -1
        out = out + _parse_sym_term(pieces[i + 1], sign)
    return out


def _parse_sym_term(term, sign):
    term = term.strip()
    if not term:
        raise ValueError("empty term in symmetric-function expression")
    coeff = Fraction(sign)
    parts = []
    for factor in term.split("*"):
        factor = factor.strip()
        if not factor:
            raise ValueError(f"empty factor in term {term!r}")
        m = _P_FACTOR.fullmatch(factor)
        if m:
            idx = int(m.group(1))
            if idx < 1:
                raise ValueError(f"bad power-sum index in {factor!r}")
            parts.extend([idx] * int(m.group(2) or 1))
        else:
            coeff *= rational_from_text(factor)
    la = tuple(sorted(parts, reverse=True))
    return SymFunc({la: coeff})


def symfunc_to_json(f):
    return [[rational_to_json(c), list(la)] for la, c in f.sorted_terms()]


def symfunc_from_json(data):
    out = {}
    for pair, la in data:
        out[tuple(la)] = rational_from_json(pair)
    return SymFunc(out)


# -- DescendentPoly -----------------------------------------------------------


def descendent_to_text(f):
    if not f.terms:
        return "0"
    chunks = []
    for mono, c in f.sorted_terms():
        factors = "*".join(f"ch{k}({v})" for k, v in mono)
        mag = abs(c)
        if factors and mag == 1:
            body = factors
        elif factors:
            body = f"{rational_to_text(mag)}*{factors}"
        else:
            body = rational_to_text(mag)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def descendent_to_json(f):
    return [[rational_to_json(c), [[k, v] for k, v in mono]] for mono, c in f.sorted_terms()]


def descendent_from_json(data):
    out = {}
    for pair, mono in data:
        out[tuple((int(k), str(v)) for k, v in mono)] = rational_from_json(pair)
    return DescendentPoly(out)


# -- quiver values ------------------------------------------------------------


def quiver_to_json(q):
    return {
        "vertices": list(q.vertices),
        "arrows": [{"src": s, "tgt": t, "deg": d} for s, t, d in q.arrows],
    }


def quiver_from_json(data):
    try:
        vertices = data["vertices"]
        arrows = [(a["src"], a["tgt"], a.get("deg", 0)) for a in data["arrows"]]
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed quiver JSON: {e}") from None
    return qv.DgQuiver(vertices, arrows)


def dimvector_to_json(d):
    return {v: x for v, x in zip(d.quiver.vertices, d.values)}


def dimvector_from_json(quiver, data):
    return qv.DimVector(quiver, {v: int(x) for v, x in data.items()})


def stability_to_json(theta):
    return {v: rational_to_text(x) for v, x in zip(theta.quiver.vertices, theta.values)}


def stability_from_json(quiver, data):
    return qv.Stability(
        quiver, {v: rational_from_text(str(x)) for v, x in data.items()}
    )


# -- lattice vertex algebra ----------------------------------------------------


def lattice_to_json(lat):
    return {"rank": lat.rank, "B": [list(r) for r in lat.B], "b": [list(r) for r in lat.b]}


def lattice_from_json(data):
    try:
        return Lattice(data["B"], data["b"])
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed lattice JSON: {e}") from None


def vaelem_to_json(x):
    return [
        [rational_to_json(c), list(alpha), [[i, k] for i, k in fock]]
        for (alpha, fock), c in x.sorted_terms()
    ]


def vaelem_from_json(lattice, data):
    out = {}
    for pair, alpha, fock in data:
        key = (tuple(int(a) for a in alpha), tuple((int(i), int(k)) for i, k in fock))
        out[key] = rational_from_json(pair)
    return VAElem(lattice, out)


# -- Grassmannian elements ------------------------------------------------------


def grelem_to_text(x):
    prefix = []
    if x.N:
        prefix.append(f"Q^{x.N}")
    if x.k:
        prefix.append(f"q^{x.k}")
    head = " ".join(prefix) if prefix else "1"
    return f"{head} (x) {symfunc_to_text(x.f)}"


def grelem_to_json(x):
    return {"N": x.N, "k": x.k, "f": symfunc_to_json(x.f)}


def grelem_from_json(data):
    try:
        return GrElem(int(data["N"]), int(data["k"]), symfunc_from_json(data["f"]))
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed GrElem JSON: {e}") from None
