"""Sparse multivariate polynomials over Gaussian rationals and quaternions.

The variables are always central: monomials commute with every coefficient.
Scalar polynomials (``MPoly``) carry Gaussian-rational coefficients;
quaternionic polynomials (``QPoly``) carry quaternion coefficients written on
the LEFT of their monomial.  Matrix polynomials and free-module vectors are
built entrywise from ``MPoly``.

Monomials are exponent tuples whose length matches the ambient ring's
variable count.  Term maps never store zero coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvertible, ShapeError
from .scalars import (GQ_ONE, GQ_ZERO, GaussQ, QQ_ONE, QuatQ, _gauss, _quat,
                      quat_from_gauss)

Mono = tuple


@dataclass(frozen=True)
class Ring:
    """Descriptor of a polynomial ring: an ordered tuple of variable names."""

    names: tuple

    @property
    def nvars(self) -> int:
        return len(self.names)

    def mono_one(self) -> Mono:
        return (0,) * self.nvars

    def extend(self, extra_names) -> "Ring":
        return Ring(self.names + tuple(extra_names))

    # MPoly constructors -------------------------------------------------

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return self.const(1)

    def const(self, c) -> "MPoly":
        c = _gauss(c) if not isinstance(c, GaussQ) else c
        if c.is_zero():
            return MPoly(self, {})
        return MPoly(self, {self.mono_one(): c})

    def var(self, index: int, power: int = 1) -> "MPoly":
        mono = tuple(power if t == index else 0 for t in range(self.nvars))
        return MPoly(self, {mono: GQ_ONE})

    # QPoly constructors -------------------------------------------------

    def qzero(self) -> "QPoly":
        return QPoly(self, {})

    def qconst(self, c) -> "QPoly":
        c = _quat(c)
        if c.is_zero():
            return QPoly(self, {})
        return QPoly(self, {self.mono_one(): c})

    def qvar(self, index: int, power: int = 1) -> "QPoly":
        mono = tuple(power if t == index else 0 for t in range(self.nvars))
        return QPoly(self, {mono: QQ_ONE})


def _mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


class MonomialOrder:
    """Monomial order: grevlex or lex, with an optional variable permutation
    and an optional elimination block compared first by total degree.

    The module extension is position-over-term with position priority
    (lower position index wins), except that elimination-block degree is
    compared before the position so that tag variables can be eliminated.
    """

    __slots__ = ("kind", "perm", "elim")

    def __init__(self, kind="grevlex", perm=None, elim=()):
        if kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None
        self.elim = tuple(elim)

    def _base_key(self, mono: Mono):
        if self.perm is not None:
            mono = tuple(mono[i] for i in self.perm)
        if self.kind == "grevlex":
            return (sum(mono), tuple(-e for e in reversed(mono)))
        return mono

    def key(self, mono: Mono):
        """Sort key: larger key means larger monomial."""
        if self.elim:
            return (sum(mono[i] for i in self.elim), self._base_key(mono))
        return self._base_key(mono)

    def module_key(self, pos: int, mono: Mono):
        """Sort key for a module term (position, monomial)."""
        if self.elim:
            return (sum(mono[i] for i in self.elim), -pos, self._base_key(mono))
        return (-pos, self._base_key(mono))

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and (self.kind, self.perm, self.elim)
                == (other.kind, other.perm, other.elim))

    def __hash__(self):
        return hash((self.kind, self.perm, self.elim))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, perm={self.perm}, elim={self.elim})"

    def to_json(self):
        return {"kind": self.kind,
                "perm": list(self.perm) if self.perm is not None else None,
                "elim": list(self.elim)}

    @staticmethod
    def from_json(data) -> "MonomialOrder":
        return MonomialOrder(data["kind"], data.get("perm"),
                             tuple(data.get("elim") or ()))


GREVLEX = MonomialOrder("grevlex")


class MPoly:
    """Sparse polynomial with Gaussian-rational coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    @staticmethod
    def from_terms(ring: Ring, items) -> "MPoly":
        terms = {}
        for mono, coeff in items:
            if mono in terms:
                coeff = terms[mono] + coeff
            if coeff.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = coeff
        return MPoly(ring, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussQ)):
            return self == self.ring.const(other)
        return NotImplemented

    __hash__ = None

    def _check(self, other: "MPoly"):
        if self.ring != other.ring:
            raise ShapeError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = self.ring.const(other)
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            prev = terms.get(mono)
            s = c if prev is None else prev + c
            if s.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return MPoly(self.ring, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussQ)):
            other = _gauss(other)
            if other.is_zero():
                return self.ring.zero()
            return MPoly(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                c = c1 * c2
                prev = terms.get(mono)
                s = c if prev is None else prev + c
                if s.is_zero():
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        return MPoly(self.ring, terms)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=0)

    def coeff_of_var_power(self, index: int, power: int) -> "MPoly":
        """Coefficient of (variable index)^power, with that slot zeroed."""
        terms = {}
        for m, c in self.terms.items():
            if m[index] == power:
                terms[m[:index] + (0,) + m[index + 1:]] = c
        return MPoly(self.ring, terms)

    def conj(self) -> "MPoly":
        """Complex-conjugate every coefficient."""
        return MPoly(self.ring, {m: c.conj() for m, c in self.terms.items()})

    def re_im(self) -> tuple["MPoly", "MPoly"]:
        re = {m: GaussQ(c.re) for m, c in self.terms.items() if c.re}
        im = {m: GaussQ(c.im) for m, c in self.terms.items() if c.im}
        return MPoly(self.ring, re), MPoly(self.ring, im)

    def is_real(self) -> bool:
        return all(not c.im for c in self.terms.values())

    def is_const(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def const_coeff(self) -> GaussQ:
        return self.terms.get(self.ring.mono_one(), GQ_ZERO)

    def eval_full(self, values) -> GaussQ:
        """Evaluate at a full tuple of Gaussian-rational values."""
        if len(values) != self.ring.nvars:
            raise ShapeError("point dimension does not match ring")
        out = GQ_ZERO
        for m, c in self.terms.items():
            v = c
            for idx, e in enumerate(m):
                if e:
                    v = v * values[idx] ** e
            out = out + v
        return out

    def substitute(self, assignment: dict) -> "MPoly":
        """Set some variables (by index) to Gaussian-rational constants."""
        out = {}
        for m, c in self.terms.items():
            v = c
            mono = list(m)
            for idx, val in assignment.items():
                e = m[idx]
                if e:
                    v = v * val ** e
                mono[idx] = 0
            if v.is_zero():
                continue
            key = tuple(mono)
            prev = out.get(key)
            s = v if prev is None else prev + v
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return MPoly(self.ring, out)

    def lift(self, ring: Ring) -> "MPoly":
        """Reinterpret in an extension ring whose leading names match."""
        n, k = self.ring.nvars, ring.nvars
        if ring.names[:n] != self.ring.names:
            raise ShapeError("target ring is not an extension")
        pad = (0,) * (k - n)
        return MPoly(ring, {m + pad: c for m, c in self.terms.items()})

    def drop_vars(self, keep, ring: Ring) -> "MPoly":
        """Project onto the variables listed in ``keep`` (others must be absent)."""
        keep = tuple(keep)
        if tuple(self.ring.names[i] for i in keep) != ring.names:
            raise ShapeError("kept names do not match target ring")
        dropped = [i for i in range(self.ring.nvars) if i not in keep]
        terms = {}
        for m, c in self.terms.items():
            if any(m[i] for i in dropped):
                raise ShapeError("polynomial involves a dropped variable")
            terms[tuple(m[i] for i in keep)] = c
        return MPoly(ring, terms)

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]),
                      reverse=True)

    def __repr__(self):
        from .serialize import poly_to_text
        return f"MPoly({poly_to_text(self)})"


class QPoly:
    """Quaternionic polynomial in central variables, coefficients on the left."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    @staticmethod
    def from_terms(ring: Ring, items) -> "QPoly":
        terms = {}
        for mono, coeff in items:
            if mono in terms:
                coeff = terms[mono] + coeff
            if coeff.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = coeff
        return QPoly(ring, terms)

    @staticmethod
    def from_real(p: MPoly) -> "QPoly":
        """Promote a real-coefficient scalar polynomial."""
        terms = {}
        for m, c in p.terms.items():
            if c.im:
                raise ShapeError("polynomial has non-real coefficients")
            terms[m] = QuatQ(c.re)
        return QPoly(p.ring, terms)

    @staticmethod
    def from_components(p0: MPoly, p1: MPoly, p2: MPoly, p3: MPoly) -> "QPoly":
        ring = p0.ring
        terms = {}
        for idx, p in enumerate((p0, p1, p2, p3)):
            if p.ring != ring:
                raise ShapeError("component rings differ")
            for m, c in p.terms.items():
                if c.im:
                    raise ShapeError("component polynomial is not real")
                comp = [Fraction(0)] * 4
                if m in terms:
                    comp = list(terms[m].components())
                comp[idx] += c.re
                q = QuatQ(*comp)
                if q.is_zero():
                    terms.pop(m, None)
                else:
                    terms[m] = q
        return QPoly(ring, terms)

    def components(self) -> tuple[MPoly, MPoly, MPoly, MPoly]:
        """The four real-coefficient component polynomials."""
        comps = [{}, {}, {}, {}]
        for m, c in self.terms.items():
            for idx, value in enumerate(c.components()):
                if value:
                    comps[idx][m] = GaussQ(value)
        return tuple(MPoly(self.ring, d) for d in comps)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, QuatQ)):
            return self == self.ring.qconst(other)
        return NotImplemented

    __hash__ = None

    def _check(self, other: "QPoly"):
        if self.ring != other.ring:
            raise ShapeError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, QPoly):
            other = self.ring.qconst(other)
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            prev = terms.get(mono)
            s = c if prev is None else prev + c
            if s.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return QPoly(self.ring, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QPoly):
            other = self.ring.qconst(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        """Product; right-multiplication by a quaternion multiplies each
        coefficient on the right."""
        if isinstance(other, (int, Fraction, QuatQ)):
            other = _quat(other)
            terms = {}
            for m, c in self.terms.items():
                p = c * other
                if not p.is_zero():
                    terms[m] = p
            return QPoly(self.ring, terms)
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                c = c1 * c2
                prev = terms.get(mono)
                s = c if prev is None else prev + c
                if s.is_zero():
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        return QPoly(self.ring, terms)

    def __rmul__(self, other):
        # left scalar: other * self
        other = _quat(other)
        terms = {}
        for m, c in self.terms.items():
            p = other * c
            if not p.is_zero():
                terms[m] = p
        return QPoly(self.ring, terms)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.qconst(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "QPoly":
        """Quaternion-conjugate every coefficient (an involution that
        reverses products)."""
        return QPoly(self.ring, {m: c.conj() for m, c in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def eval_at(self, point) -> QuatQ:
        """Evaluate at a point with pairwise commuting coordinates.

        Each term contributes coefficient * a1^e1 * ... * ad^ed with the
        coefficient kept on the left.
        """
        coords = point.coordinates if isinstance(point, GoodPoint) else tuple(point)
        if len(coords) != self.ring.nvars:
            raise ShapeError("point dimension does not match ring")
        out = QuatQ(0)
        for m, c in self.terms.items():
            v = c
            for idx, e in enumerate(m):
                if e:
                    v = v * coords[idx] ** e
            out = out + v
        return out

    def lift(self, ring: Ring) -> "QPoly":
        n, k = self.ring.nvars, ring.nvars
        if ring.names[:n] != self.ring.names:
            raise ShapeError("target ring is not an extension")
        pad = (0,) * (k - n)
        return QPoly(ring, {m + pad: c for m, c in self.terms.items()})

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]),
                      reverse=True)

    def __repr__(self):
        from .serialize import poly_to_text
        return f"QPoly({poly_to_text(self)})"


class GoodPoint:
    """Quaternion point with pairwise commuting coordinates."""

    __slots__ = ("coordinates",)

    def __init__(self, coordinates):
        coords = tuple(_quat(c) for c in coordinates)
        for s in range(len(coords)):
            for t in range(s + 1, len(coords)):
                if not coords[s].commutes_with(coords[t]):
                    raise ValueError("coordinates must pairwise commute")
        self.coordinates = coords

    def __len__(self):
        return len(self.coordinates)

    def __getitem__(self, idx):
        return self.coordinates[idx]

    def __eq__(self, other):
        return (isinstance(other, GoodPoint)
                and self.coordinates == other.coordinates)

    def __repr__(self):
        return f"GoodPoint({list(self.coordinates)!r})"

    def to_json(self):
        return [c.to_json() for c in self.coordinates]

    @staticmethod
    def from_json(data) -> "GoodPoint":
        return GoodPoint([QuatQ.from_json(c) for c in data])


class DirectionalPoint:
    """A complex point together with a nonzero direction vector."""

    __slots__ = ("a", "v")

    def __init__(self, a, v):
        self.a = tuple(_gauss(x) for x in a)
        self.v = tuple(_gauss(x) for x in v)
        if all(x.is_zero() for x in self.v):
            raise ValueError("direction vector must be nonzero")

    def __eq__(self, other):
        return (isinstance(other, DirectionalPoint)
                and self.a == other.a and self.v == other.v)

    def __repr__(self):
        return f"DirectionalPoint(a={list(self.a)!r}, v={list(self.v)!r})"

    def to_json(self):
        return {"a": [x.to_json() for x in self.a],
                "v": [x.to_json() for x in self.v]}

    @staticmethod
    def from_json(data) -> "DirectionalPoint":
        return DirectionalPoint([GaussQ.from_json(x) for x in data["a"]],
                                [GaussQ.from_json(x) for x in data["v"]])


def conjugate_point(g: QPoly, a: GoodPoint) -> GoodPoint:
    """Conjugate every coordinate of ``a`` by the value g(a).

    This is the point b with b_l = g(a) a_l g(a)^-1 entering the twisted
    product rule (fg)(a) = f(b) g(a).
    """
    value = g.eval_at(a)
    if value.is_zero():
        raise NotInvertible("cannot conjugate by a vanishing value")
    inv = value.inv()
    return GoodPoint([value * c * inv for c in a.coordinates])


class VecPoly:
    """Vector in a free module over the scalar polynomial ring."""

    __slots__ = ("ring", "comps")

    def __init__(self, comps):
        comps = tuple(comps)
        if not comps:
            raise ShapeError("vector needs at least one component")
        ring = comps[0].ring
        for c in comps:
            if c.ring != ring:
                raise ShapeError("vector components live in different rings")
        self.ring = ring
        self.comps = comps

    @property
    def rank(self) -> int:
        return len(self.comps)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __eq__(self, other):
        return (isinstance(other, VecPoly) and self.comps == other.comps)

    def __add__(self, other):
        if self.rank != other.rank:
            raise ShapeError("vector ranks differ")
        return VecPoly([a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other):
        if self.rank != other.rank:
            raise ShapeError("vector ranks differ")
        return VecPoly([a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return VecPoly([-c for c in self.comps])

    def scale(self, p) -> "VecPoly":
        return VecPoly([p * c for c in self.comps])

    def __repr__(self):
        return f"VecPoly({list(self.comps)!r})"


class MatPoly:
    """Square matrix with scalar polynomial entries."""

    __slots__ = ("ring", "n", "entries")

    def __init__(self, ring: Ring, entries):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ShapeError("matrix must be square")
            for e in row:
                if e.ring != ring:
                    raise ShapeError("entries live in different rings")
        self.ring = ring
        self.n = n
        self.entries = rows

    @staticmethod
    def from_rows(ring: Ring, rows) -> "MatPoly":
        out = []
        for row in rows:
            out.append([e if isinstance(e, MPoly) else ring.const(e) for e in row])
        return MatPoly(ring, out)

    @staticmethod
    def identity(ring: Ring, n: int) -> "MatPoly":
        return MatPoly(ring, [[ring.one() if r == c else ring.zero()
                               for c in range(n)] for r in range(n)])

    @staticmethod
    def zeros(ring: Ring, n: int) -> "MatPoly":
        return MatPoly(ring, [[ring.zero()] * n for _ in range(n)])

    @staticmethod
    def const_matrix(ring: Ring, values) -> "MatPoly":
        """Matrix of Gaussian-rational constants."""
        return MatPoly(ring, [[ring.const(v) for v in row] for row in values])

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_const(self) -> bool:
        return all(e.is_const() for row in self.entries for e in row)

    def __eq__(self, other):
        return (isinstance(other, MatPoly) and self.n == other.n
                and self.ring == other.ring and self.entries == other.entries)

    __hash__ = None

    def _check(self, other: "MatPoly"):
        if self.ring != other.ring or self.n != other.n:
            raise ShapeError("matrix shapes or rings differ")

    def __add__(self, other):
        self._check(other)
        return MatPoly(self.ring, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return MatPoly(self.ring, [[a - b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return MatPoly(self.ring, [[-e for e in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, MatPoly):
            self._check(other)
            n = self.n
            out = []
            for r in range(n):
                row = []
                for c in range(n):
                    acc = self.ring.zero()
                    for t in range(n):
                        acc = acc + self.entries[r][t] * other.entries[t][c]
                    row.append(acc)
                out.append(row)
            return MatPoly(self.ring, out)
        # scalar (polynomial or constant) multiplication
        if not isinstance(other, MPoly):
            other = self.ring.const(other)
        return MatPoly(self.ring, [[other * e for e in row] for row in self.entries])

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative matrix power")
        result = MatPoly.identity(self.ring, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def row(self, r: int) -> VecPoly:
        return VecPoly(self.entries[r])

    def rows(self):
        return [self.row(r) for r in range(self.n)]

    def transpose(self) -> "MatPoly":
        return MatPoly(self.ring, [[self.entries[c][r] for c in range(self.n)]
                                   for r in range(self.n)])

    def conj_transpose(self) -> "MatPoly":
        return MatPoly(self.ring, [[self.entries[c][r].conj() for c in range(self.n)]
                                   for r in range(self.n)])

    def map_entries(self, fn, ring=None) -> "MatPoly":
        return MatPoly(ring or self.ring,
                       [[fn(e) for e in row] for row in self.entries])

    def lift(self, ring: Ring) -> "MatPoly":
        return self.map_entries(lambda e: e.lift(ring), ring)

    def substitute(self, assignment: dict) -> "MatPoly":
        return self.map_entries(lambda e: e.substitute(assignment))

    def drop_vars(self, keep, ring: Ring) -> "MatPoly":
        return self.map_entries(lambda e: e.drop_vars(keep, ring), ring)

    def eval_point(self, values):
        """Evaluate every entry, returning a list of lists of GaussQ."""
        return [[e.eval_full(values) for e in row] for row in self.entries]

    def eval_dir(self, p: DirectionalPoint):
        """Value at a directional point: the vector F(a) v."""
        if len(p.v) != self.n:
            raise ShapeError("direction length does not match matrix size")
        m = self.eval_point(p.a)
        out = []
        for r in range(self.n):
            acc = GQ_ZERO
            for c in range(self.n):
                acc = acc + m[r][c] * p.v[c]
            out.append(acc)
        return tuple(out)

    def max_degree(self) -> int:
        return max((e.total_degree() for row in self.entries for e in row),
                   default=0)

    def __repr__(self):
        from .serialize import mat_to_text
        return f"MatPoly({mat_to_text(self)})"


# Quaternion <-> 2x2 complex matrix polynomial correspondence --------------


def phi_embed(f: QPoly) -> MatPoly:
    """Embed a quaternionic polynomial as a 2x2 matrix polynomial.

    Writing f = p + j q with p, q over the Gaussian rationals (a quaternion
    coefficient c splits as (c0 + c1 i) + j (c2 - c3 i)), the image is
    [[p, -conj(q)], [q, conj(p)]].  The map is a ring homomorphism.
    """
    ring = f.ring
    p_terms, q_terms = {}, {}
    for m, c in f.terms.items():
        p = GaussQ(c.c0, c.c1)
        q = GaussQ(c.c2, -c.c3)
        if not p.is_zero():
            p_terms[m] = p
        if not q.is_zero():
            q_terms[m] = q
    p = MPoly(ring, p_terms)
    q = MPoly(ring, q_terms)
    return MatPoly(ring, [[p, -q.conj()], [q, p.conj()]])


def phi_decompose(a_mat: MatPoly) -> tuple[QPoly, QPoly]:
    """Split a 2x2 matrix polynomial as phi(z) + i*phi(w), uniquely.

    Inverse of the embedding on its image extended by the scalar i: every
    2x2 matrix polynomial decomposes this way with z, w quaternionic.
    """
    if a_mat.n != 2:
        raise ShapeError("decomposition requires a 2x2 matrix")
    (a, b), (c, d) = a_mat.entries
    i = GQ_I
    p0 = a + d
    p1 = (d - a) * i
    p2 = c - b
    p3 = (b + c) * i
    half = Fraction(1, 2)
    z_comps, w_comps = [], []
    for p in (p0, p1, p2, p3):
        re, im = p.re_im()
        z_comps.append(re * half)
        w_comps.append(im * half)
    z = QPoly.from_components(*z_comps)
    w = QPoly.from_components(*w_comps)
    return z, w


def phi_apply_scalar_i(m: MatPoly) -> MatPoly:
    """Multiply a matrix polynomial by the complex scalar i."""
    return m * GQ_I
