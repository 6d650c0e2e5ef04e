"""The Poisson limit algebra and the semiclassical machinery.

The limit algebra is the commutative polynomial ring over Q[mu] in the same
generators y_1, x_1, ..., y_n, x_n.  Its bracket is the biderivation fixed
on generators by (i < j):

    {y_j, y_i} =  (L_ji . mu) y_i y_j
    {y_j, x_i} =  (L_ij . mu) x_i y_j
    {x_j, y_i} =  ((s_i + L_ij) . mu) y_i x_j
    {x_j, x_i} = -((s_i + L_ij) . mu) x_i x_j
    {x_i, y_i} =  (s_i . mu) (1 + sum_{k<=i} y_k x_k)

The map ``gamma1`` evaluates every quantized coefficient at the classical
point, and ``semiclassical_bracket`` realizes {gamma1(a), gamma1(b)} as the
exact (t-1)-limit of the commutator, giving two independent routes to the
same bracket.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .scalars import MuPoly, vec_add
from .weyl import (
    ParamsMismatchError,
    PbwMonomial,
    WeylElement,
    WeylParams,
    element_to_str,
    mono_key,
    pos_x,
    pos_y,
)


class PoissonElement:
    """Commutative polynomial with Q[mu] coefficients."""

    __slots__ = ("params", "terms")

    def __init__(self, params: WeylParams, terms=()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[PbwMonomial, MuPoly] = {}
        for m, c in terms:
            m = tuple(m)
            if len(m) != 2 * params.n or any(e < 0 for e in m):
                raise ValueError(f"bad monomial exponent tuple {m}")
            if not isinstance(c, MuPoly):
                c = MuPoly.constant(params.r, c)
            prev = acc.get(m)
            c = c if prev is None else prev + c
            if c:
                acc[m] = c
            else:
                acc.pop(m, None)
        object.__setattr__(self, "params", params)
        object.__setattr__(
            self, "terms", tuple(sorted(acc.items(), key=lambda t: mono_key(t[0])))
        )

    def __setattr__(self, name, value):
        raise AttributeError("PoissonElement is immutable")

    @classmethod
    def zero(cls, params: WeylParams) -> "PoissonElement":
        return cls(params)

    @classmethod
    def one(cls, params: WeylParams) -> "PoissonElement":
        return cls(params, [((0,) * (2 * params.n), MuPoly.one(params.r))])

    @classmethod
    def scalar(cls, params: WeylParams, c) -> "PoissonElement":
        if not isinstance(c, MuPoly):
            c = MuPoly.constant(params.r, c)
        return cls(params, [((0,) * (2 * params.n), c)])

    @classmethod
    def monomial(cls, params: WeylParams, m: PbwMonomial, coeff=1) -> "PoissonElement":
        if not isinstance(coeff, MuPoly):
            coeff = MuPoly.constant(params.r, coeff)
        return cls(params, [(tuple(m), coeff)])

    @classmethod
    def generator(cls, params: WeylParams, kind: str, i: int) -> "PoissonElement":
        if kind not in ("y", "x"):
            raise ValueError(f"unknown generator kind {kind!r}")
        if not 1 <= i <= params.n:
            raise ValueError(f"generator index {i} out of range 1..{params.n}")
        m = [0] * (2 * params.n)
        m[pos_y(i) if kind == "y" else pos_x(i)] = 1
        return cls.monomial(params, tuple(m))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def coefficient(self, m: PbwMonomial) -> MuPoly:
        m = tuple(m)
        for mm, c in self.terms:
            if mm == m:
                return c
        return MuPoly.zero(self.params.r)

    def _check(self, other: "PoissonElement") -> None:
        if self.params != other.params:
            raise ParamsMismatchError("elements belong to different instances")

    def _coerce(self, other):
        if isinstance(other, PoissonElement):
            return other
        if isinstance(other, (int, Fraction, MuPoly)):
            return PoissonElement.scalar(self.params, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check(o)
        return PoissonElement(self.params, list(self.terms) + list(o.terms))

    __radd__ = __add__

    def __neg__(self):
        return PoissonElement(self.params, [(m, -c) for m, c in self.terms])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "PoissonElement":
        if not isinstance(c, MuPoly):
            c = MuPoly.constant(self.params.r, c)
        return PoissonElement(self.params, [(m, cc * c) for m, cc in self.terms])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MuPoly)):
            return self.scale(other)
        if isinstance(other, PoissonElement):
            self._check(other)
            out: dict[PbwMonomial, MuPoly] = {}
            for ma, ca in self.terms:
                for mb, cb in other.terms:
                    m = vec_add(ma, mb)
                    c = ca * cb
                    prev = out.get(m)
                    c = c if prev is None else prev + c
                    if c:
                        out[m] = c
                    else:
                        out.pop(m, None)
            return PoissonElement(self.params, out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, MuPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("element powers must be nonnegative integers")
        out = PoissonElement.one(self.params)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, PoissonElement):
            return self.params == other.params and self.terms == other.terms
        if isinstance(other, (int, Fraction, MuPoly)):
            return self == PoissonElement.scalar(self.params, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.params, self.terms))

    def __str__(self) -> str:
        return element_to_str(self)

    def __repr__(self) -> str:
        return f"PoissonElement({self})"


def p_z(params: WeylParams, i: int) -> PoissonElement:
    """Commutative image of z_i: 1 + sum_{k<=i} y_k x_k."""
    if not 0 <= i <= params.n:
        raise ValueError(f"z index {i} out of range 0..{params.n}")
    terms = [((0,) * (2 * params.n), MuPoly.one(params.r))]
    for k in range(1, i + 1):
        m = [0] * (2 * params.n)
        m[pos_y(k)] = 1
        m[pos_x(k)] = 1
        terms.append((tuple(m), MuPoly.one(params.r)))
    return PoissonElement(params, terms)


@lru_cache(maxsize=None)
def _gen_bracket(params: WeylParams, p: int, q: int) -> PoissonElement:
    """Bracket of the generators sitting at exponent slots p and q."""
    if p == q:
        return PoissonElement.zero(params)
    a, b = p // 2 + 1, q // 2 + 1
    akind = "y" if p % 2 == 0 else "x"
    bkind = "y" if q % 2 == 0 else "x"
    if a == b:
        # {x_i, y_i} = (s_i . mu) z_i
        base = p_z(params, a).scale(MuPoly.linear(params.s(a)))
        return base if akind == "x" else -base
    # products below are commutative monomials g_a * g_b
    prod = PoissonElement.generator(params, akind, a) * PoissonElement.generator(
        params, bkind, b
    )
    i, j = min(a, b), max(a, b)
    if akind == "y" and bkind == "y":
        form = MuPoly.linear(params.L(a, b))
    elif akind == "x" and bkind == "x":
        form = MuPoly.linear(vec_add(params.s(i), params.L(i, j)))
        if a > b:
            form = -form
    elif akind == "y" and bkind == "x":
        # {y_a, x_b}: for a > b this is the (L_ij . mu) x_i y_j line;
        # for a < b it is minus the {x_j, y_i} line.
        form = (
            MuPoly.linear(params.L(b, a))
            if a > b
            else -MuPoly.linear(vec_add(params.s(a), params.L(a, b)))
        )
    else:  # akind == "x", bkind == "y"
        form = (
            MuPoly.linear(vec_add(params.s(b), params.L(b, a)))
            if a > b
            else -MuPoly.linear(params.L(a, b))
        )
    return prod.scale(form)


def pb_bracket(a: PoissonElement, b: PoissonElement) -> PoissonElement:
    """The biderivation extending the generator table.

    For monomials the Leibniz rule collapses to the bivector formula
    {m, m'} = sum_{p,q} m_p m'_q (m/g_p)(m'/g_q) {g_p, g_q}; the mu symbols
    are Poisson constants, so coefficients just multiply through.
    """
    a._check(b)
    params = a.params
    out = PoissonElement.zero(params)
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            coeff = ca * cb
            for p in range(2 * params.n):
                if not ma[p]:
                    continue
                for q in range(2 * params.n):
                    if not mb[q]:
                        continue
                    table = _gen_bracket(params, p, q)
                    if not table:
                        continue
                    la = list(ma)
                    la[p] -= 1
                    lb = list(mb)
                    lb[q] -= 1
                    rest = vec_add(tuple(la), tuple(lb))
                    piece = PoissonElement.monomial(
                        params, rest, coeff * ma[p] * mb[q]
                    )
                    out = out + piece * table
    return out


def gamma1(a: WeylElement) -> PoissonElement:
    """Classical limit map: same monomials, coefficients evaluated at t=1."""
    params = a.params
    return PoissonElement(
        params,
        [(m, MuPoly.constant(params.r, c.eval_one())) for m, c in a.terms],
    )


def semiclassical_bracket(a: WeylElement, b: WeylElement) -> PoissonElement:
    """{gamma1(a), gamma1(b)} computed as the exact (t-1)-limit of ab - ba."""
    a._check(b)
    comm = a * b - b * a
    for m, c in comm.terms:
        if c.eval_one() != 0:
            raise RuntimeError(
                "commutator coefficient does not vanish at t=1; "
                "core arithmetic bug"
            )
    return PoissonElement(a.params, [(m, c.limit_div()) for m, c in comm.terms])


def jacobiator(a: PoissonElement, b: PoissonElement, c: PoissonElement) -> PoissonElement:
    """{a,{b,c}} + {b,{c,a}} + {c,{a,b}}; identically zero for a Poisson bracket."""
    return (
        pb_bracket(a, pb_bracket(b, c))
        + pb_bracket(b, pb_bracket(c, a))
        + pb_bracket(c, pb_bracket(a, b))
    )


def pe_div_exact(a: PoissonElement, d: PoissonElement) -> PoissonElement:
    """Exact quotient a/d in the commutative algebra.

    Single-divisor multivariate division ordered by (degree, lex); the
    divisor must have an invertible (constant rational) leading coefficient,
    which holds for all divisors used here (they are monic in their top
    monomial).  Raises ArithmeticError when the remainder is nonzero.
    """
    a._check(d)
    params = a.params
    if not d:
        raise ZeroDivisionError("division by the zero element")
    if not a:
        return PoissonElement.zero(params)
    dterms = dict(d.terms)
    dlead = max(dterms, key=mono_key)
    dlc = dterms[dlead]
    if not dlc.is_constant():
        raise ArithmeticError("divisor leading coefficient is not a rational")
    inv = 1 / dlc.constant_part()
    rem = dict(a.terms)
    quot: dict[PbwMonomial, MuPoly] = {}
    while rem:
        mlead = max(rem, key=mono_key)
        step = tuple(x - y for x, y in zip(mlead, dlead))
        if any(e < 0 for e in step):
            raise ArithmeticError(f"{a} is not divisible by {d}")
        qc = rem[mlead] * inv
        prev = quot.get(step)
        quot[step] = qc if prev is None else prev + qc
        for dm, dc in dterms.items():
            m = vec_add(step, dm)
            c = rem.get(m)
            c = -(qc * dc) if c is None else c - qc * dc
            if c:
                rem[m] = c
            else:
                rem.pop(m, None)
    return PoissonElement(params, quot)
