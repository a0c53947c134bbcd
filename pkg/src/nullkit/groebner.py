"""Buchberger engine for submodules of free modules over the scalar ring.

Vectors are represented internally as dicts mapping module terms
(position, monomial) to Gaussian-rational coefficients.  Every basis element
carries an exact representation in terms of the original generators, so
membership answers come with certificates that expand back to the query.

S-vectors are formed only for pairs whose leading terms sit in the same
position.  The coprime-leading-monomial shortcut is applied only when both
elements are supported entirely in that position: for general module
elements the shortcut is unsound (a lower-position tail can contribute a new
leading term), so it is restricted to the embedded-ideal case.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import ResourceExceeded, ShapeError
from .polyring import GREVLEX, MPoly, MonomialOrder, Ring, VecPoly
from .scalars import GQ_ONE, GaussQ

# ---------------------------------------------------------------------------
# raw polynomial / vector helpers (dict based, used only inside the engine)


def _p_add_scaled(dst: dict, src: dict, scale: GaussQ, shift=None):
    """dst += scale * x^shift * src, in place."""
    for mono, c in src.items():
        if shift is not None:
            mono = tuple(a + b for a, b in zip(mono, shift))
        prev = dst.get(mono)
        s = scale * c if prev is None else prev + scale * c
        if s.is_zero():
            dst.pop(mono, None)
        else:
            dst[mono] = s


def _p_mul(a: dict, b: dict) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = tuple(x + y for x, y in zip(m1, m2))
            prev = out.get(mono)
            s = c1 * c2 if prev is None else prev + c1 * c2
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
    return out


def _p_scale(a: dict, scale: GaussQ) -> dict:
    return {m: c * scale for m, c in a.items()}


def _v_add_scaled(dst: dict, src: dict, scale: GaussQ, shift=None):
    """dst += scale * x^shift * src for module-term dicts, in place."""
    for (pos, mono), c in src.items():
        if shift is not None:
            mono = tuple(a + b for a, b in zip(mono, shift))
        key = (pos, mono)
        prev = dst.get(key)
        s = scale * c if prev is None else prev + scale * c
        if s.is_zero():
            dst.pop(key, None)
        else:
            dst[key] = s


def _vec_to_dict(v: VecPoly) -> dict:
    out = {}
    for pos, comp in enumerate(v.comps):
        for mono, c in comp.terms.items():
            out[(pos, mono)] = c
    return out


def _dict_to_vec(ring: Ring, rank: int, vec: dict) -> VecPoly:
    comps = [dict() for _ in range(rank)]
    for (pos, mono), c in vec.items():
        comps[pos][mono] = c
    return VecPoly([MPoly(ring, d) for d in comps])


def _leading(vec: dict, order: MonomialOrder):
    return max(vec, key=lambda t: order.module_key(t[0], t[1]))


def _divides(small, big) -> bool:
    return all(a <= b for a, b in zip(small, big))


# ---------------------------------------------------------------------------
# public result types


@dataclass
class MembershipCertificate:
    """Quotients q_j with sum(q_j * generator_j) equal to the queried vector."""

    quotients: list

    def expand(self, generators) -> VecPoly:
        if len(self.quotients) != len(generators):
            raise ShapeError("certificate length does not match generators")
        if not generators:
            raise ShapeError("cannot expand over an empty generator list")
        acc = None
        for q, g in zip(self.quotients, generators):
            term = g.scale(q)
            acc = term if acc is None else acc + term
        return acc


class ModuleBasis:
    """A (reduced) module Groebner basis with provenance information.

    ``generators`` are the basis vectors; ``originals`` the input generators;
    ``reps[i][t]`` is the polynomial coefficient of originals[t] in
    generators[i].
    """

    def __init__(self, ring, rank, order, generators, originals, reps,
                 reduced=False):
        self.ring = ring
        self.rank = rank
        self.order = order
        self.generators = generators
        self.originals = originals
        self.reps = reps
        self.reduced = reduced

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return (f"ModuleBasis(rank={self.rank}, size={len(self.generators)}, "
                f"reduced={self.reduced})")


# ---------------------------------------------------------------------------
# division


def _divide_raw(vec: dict, divisors, order: MonomialOrder):
    """Divide a raw vector by prepared divisors.

    ``divisors`` is a list of (vecdict, (pos, mono), lead_coeff).  Returns
    (quotients, remainder) with quotients as raw polynomial dicts.  The first
    divisor (in list order) whose leading term divides the current leading
    term is used, which makes the result deterministic.
    """
    quotients = [dict() for _ in divisors]
    remainder = {}
    work = dict(vec)
    while work:
        lt = _leading(work, order)
        c = work[lt]
        pos, mono = lt
        for idx, (dvec, (dpos, dmono), dlc) in enumerate(divisors):
            if dpos == pos and _divides(dmono, mono):
                shift = tuple(a - b for a, b in zip(mono, dmono))
                q = c / dlc
                _v_add_scaled(work, dvec, -q, shift)
                prev = quotients[idx].get(shift)
                s = q if prev is None else prev + q
                if s.is_zero():
                    quotients[idx].pop(shift, None)
                else:
                    quotients[idx][shift] = s
                break
        else:
            remainder[lt] = c
            del work[lt]
    return quotients, remainder


def _prepare(vecs, order):
    out = []
    for v in vecs:
        lead = _leading(v, order)
        out.append((v, lead, v[lead]))
    return out


def divide_with_quotients(v: VecPoly, basis: ModuleBasis):
    """Divide ``v`` by the basis generators; returns (certificate, remainder).

    The certificate quotients are relative to the basis generators as listed.
    No term of the remainder is divisible by any leading basis term.
    """
    if v.rank != basis.rank:
        raise ShapeError("vector rank does not match basis rank")
    divisors = _prepare([_vec_to_dict(g) for g in basis.generators], basis.order)
    quotients, rem = _divide_raw(_vec_to_dict(v), divisors, basis.order)
    ring = basis.ring
    return (MembershipCertificate([MPoly(ring, q) for q in quotients]),
            _dict_to_vec(ring, basis.rank, rem))


# ---------------------------------------------------------------------------
# Buchberger


class _Elt:
    __slots__ = ("vec", "lead", "lc", "rep", "single_pos")

    def __init__(self, vec, order, rep):
        self.vec = vec
        self.rep = rep
        self.lead = _leading(vec, order)
        self.lc = vec[self.lead]
        positions = {pos for pos, _ in vec}
        self.single_pos = len(positions) == 1

    def monic(self):
        if self.lc == GQ_ONE:
            return
        inv = self.lc.inv()
        self.vec = {t: c * inv for t, c in self.vec.items()}
        self.rep = [_p_scale(p, inv) for p in self.rep]
        self.lc = GQ_ONE


def buchberger_module(gens, order: MonomialOrder = GREVLEX,
                      degree_cap: int | None = None) -> ModuleBasis:
    """Compute the unique reduced Groebner basis of the module span of
    ``gens``, tracking representations in terms of the input generators.

    Raises ResourceExceeded when an S-pair's lcm exceeds ``degree_cap``.
    """
    gens = list(gens)
    if gens:
        rank = gens[0].rank
        ring = gens[0].ring
        for g in gens:
            if g.rank != rank or g.ring != ring:
                raise ShapeError("generators live in different modules")
    else:
        raise ShapeError("buchberger_module needs the ambient module; "
                         "use empty_basis for no generators")
    m = len(gens)

    elts: list[_Elt] = []
    for t, g in enumerate(gens):
        vec = _vec_to_dict(g)
        if not vec:
            continue
        rep = [dict() for _ in range(m)]
        rep[t] = {ring.mono_one(): GQ_ONE}
        e = _Elt(vec, order, rep)
        e.monic()
        elts.append(e)

    pairs = []

    def push_pairs(new_idx):
        e_new = elts[new_idx]
        pos_new, mono_new = e_new.lead
        for idx in range(new_idx):
            e_old = elts[idx]
            pos_old, mono_old = e_old.lead
            if pos_old != pos_new:
                continue
            lcm = tuple(max(a, b) for a, b in zip(mono_old, mono_new))
            # embedded-ideal coprimality shortcut (sound only when both
            # elements live in a single position)
            if (e_old.single_pos and e_new.single_pos
                    and all(min(a, b) == 0 for a, b in zip(mono_old, mono_new))):
                continue
            key = order.module_key(pos_new, lcm)
            heapq.heappush(pairs, (key, idx, new_idx, lcm))

    for idx in range(len(elts)):
        push_pairs(idx)

    while pairs:
        key, i, j, lcm = heapq.heappop(pairs)
        if degree_cap is not None and sum(lcm) > degree_cap:
            raise ResourceExceeded(
                f"S-pair degree {sum(lcm)} exceeds cap {degree_cap}")
        ei, ej = elts[i], elts[j]
        pos = ei.lead[0]
        if ei.lead[0] != pos or ej.lead[0] != pos:  # leads are stable; guard
            continue
        shift_i = tuple(a - b for a, b in zip(lcm, ei.lead[1]))
        shift_j = tuple(a - b for a, b in zip(lcm, ej.lead[1]))
        svec: dict = {}
        _v_add_scaled(svec, ei.vec, GQ_ONE, shift_i)
        _v_add_scaled(svec, ej.vec, -GQ_ONE, shift_j)
        if not svec:
            continue
        srep = [dict() for _ in range(m)]
        for t in range(m):
            _p_add_scaled(srep[t], ei.rep[t], GQ_ONE, shift_i)
            _p_add_scaled(srep[t], ej.rep[t], -GQ_ONE, shift_j)
        divisors = _prepare([e.vec for e in elts], order)
        quot, rem = _divide_raw(svec, divisors, order)
        if not rem:
            continue
        rep = srep
        for qidx, q in enumerate(quot):
            if q:
                for t in range(m):
                    if elts[qidx].rep[t]:
                        _p_add_scaled(rep[t], _p_mul(q, elts[qidx].rep[t]),
                                      -GQ_ONE)
        e = _Elt(rem, order, rep)
        e.monic()
        elts.append(e)
        push_pairs(len(elts) - 1)

    return _reduce_basis(elts, ring, rank, m, gens, order)


def empty_basis(ring: Ring, rank: int,
                order: MonomialOrder = GREVLEX) -> ModuleBasis:
    """Reduced basis of the zero module."""
    return ModuleBasis(ring, rank, order, [], [], [], reduced=True)


def _reduce_basis(elts, ring, rank, m, originals, order) -> ModuleBasis:
    # minimalize: drop elements whose leading term another leading term divides
    kept = []
    for idx, e in enumerate(elts):
        redundant = False
        for jdx, f in enumerate(elts):
            if idx == jdx:
                continue
            if f.lead[0] == e.lead[0] and _divides(f.lead[1], e.lead[1]):
                if _divides(e.lead[1], f.lead[1]):
                    # equal leading terms: keep the earlier one
                    if jdx < idx:
                        redundant = True
                        break
                else:
                    redundant = True
                    break
        if not redundant:
            kept.append(e)

    # tail-reduce each kept element against the others
    reduced = []
    for idx, e in enumerate(kept):
        others = [f for jdx, f in enumerate(kept) if jdx != idx]
        if not others:
            reduced.append(e)
            continue
        divisors = _prepare([f.vec for f in others], order)
        quot, rem = _divide_raw(e.vec, divisors, order)
        if not rem:
            continue
        rep = [dict(p) for p in e.rep]
        for qidx, q in enumerate(quot):
            if q:
                for t in range(m):
                    if others[qidx].rep[t]:
                        _p_add_scaled(rep[t], _p_mul(q, others[qidx].rep[t]),
                                      -GQ_ONE)
        ne = _Elt(rem, order, rep)
        ne.monic()
        reduced.append(ne)

    reduced.sort(key=lambda e: order.module_key(e.lead[0], e.lead[1]),
                 reverse=True)
    generators = [_dict_to_vec(ring, rank, e.vec) for e in reduced]
    reps = [[MPoly(ring, p) for p in e.rep] for e in reduced]
    return ModuleBasis(ring, rank, order, generators, list(originals), reps,
                       reduced=True)


# ---------------------------------------------------------------------------
# membership and intersection


def module_membership(v: VecPoly, basis: ModuleBasis):
    """Decide membership of ``v`` in the module spanned by the basis.

    Returns a MembershipCertificate whose quotients are relative to the
    ORIGINAL generators the basis was computed from, or None for a
    non-member.
    """
    if not basis.reduced:
        raise ShapeError("membership requires a reduced basis")
    if not basis.generators:
        return MembershipCertificate([]) if v.is_zero() else None
    if v.rank != basis.rank:
        raise ShapeError("vector rank does not match basis rank")
    divisors = _prepare([_vec_to_dict(g) for g in basis.generators],
                        basis.order)
    quot, rem = _divide_raw(_vec_to_dict(v), divisors, basis.order)
    if rem:
        return None
    m = len(basis.originals)
    out = [dict() for _ in range(m)]
    for qidx, q in enumerate(quot):
        if q:
            rep = basis.reps[qidx]
            for t in range(m):
                if rep[t].terms:
                    _p_add_scaled(out[t], _p_mul(q, rep[t].terms), GQ_ONE)
    return MembershipCertificate([MPoly(basis.ring, p) for p in out])


def module_intersect(m1, m2, order: MonomialOrder = GREVLEX,
                     degree_cap: int | None = None):
    """Generators of the intersection of two submodules of the same free
    module, via a tag variable t: the t-free part of a Groebner basis of
    t*M1 + (1-t)*M2 under an order eliminating t.
    """
    m1, m2 = list(m1), list(m2)
    if not m1 or not m2:
        return []
    rank = m1[0].rank
    ring = m1[0].ring
    for g in m1 + m2:
        if g.rank != rank or g.ring != ring:
            raise ShapeError("modules live in different ambient spaces")

    ext = ring.extend(("_t",))
    t_idx = ext.nvars - 1
    t = ext.var(t_idx)
    one_minus_t = ext.one() - t
    elim_order = MonomialOrder(order.kind, order.perm, elim=(t_idx,))

    gens = []
    for g in m1:
        gens.append(VecPoly([t * c.lift(ext) for c in g.comps]))
    for g in m2:
        gens.append(VecPoly([one_minus_t * c.lift(ext) for c in g.comps]))

    basis = buchberger_module(gens, elim_order, degree_cap)
    keep = tuple(range(ring.nvars))
    out = []
    for g in basis.generators:
        if all(all(m[t_idx] == 0 for m in c.terms) for c in g.comps):
            out.append(VecPoly([c.drop_vars(keep, ring) for c in g.comps]))
    return out
