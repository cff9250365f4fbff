"""Two-sided ideal membership with certificates.

The engine reduces targets against the linear span of wrapped relations
l * g * r.  Two regimes:

* graded: relations homogeneous, target homogeneous of degree d; the span of
  wrappers with |l| + len(g-degree) + |r| = d is the complete degree-d slice
  of the ideal, so non-membership is definitive.
* bounded: arbitrary relations, wrappers with |l| + |r| <= wrapper_len; a
  failed search proves nothing, so the verdict is INCONCLUSIVE, never
  NON_MEMBER.

Every MEMBER verdict carries a certificate (left word, relation index, right
word, coefficient) which is re-expanded and compared against the target
before it is returned.  Reduction is sparse row echelon over the exact
scalar field, with plain Fractions when no symbolic parameter is present;
rows are kept monic and inserted smallest-wrapper-first, which makes
certificates deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .coeff import Coefficient, Space
from .ncpoly import NcPoly, InvolutionSpec, Word, word_key

MEMBER = "MEMBER"
NON_MEMBER = "NON_MEMBER"
INCONCLUSIVE = "INCONCLUSIVE"

STABLE = "STABLE"
UNSTABLE = "UNSTABLE"

EQUIVALENT = "EQUIVALENT"
NOT_EQUIVALENT = "NOT_EQUIVALENT"


class Presentation:
    """A generator alphabet with relations (each meaning '= 0') and an
    involution."""

    __slots__ = ("alphabet", "space", "relations", "involution", "homogeneous")

    def __init__(self, alphabet, space: Space, relations: Sequence[NcPoly],
                 involution: InvolutionSpec):
        self.alphabet = tuple(alphabet)
        self.space = space
        self.relations = list(relations)
        self.involution = involution
        if len(involution.perm) != len(self.alphabet):
            raise ValueError("involution permutation size != alphabet size")
        for i, rel in enumerate(self.relations):
            if rel.is_zero():
                raise ValueError(f"relation {i} is identically zero")
            if rel.alphabet != self.alphabet or rel.space != space:
                raise ValueError(f"relation {i} built over a different context")
        self.homogeneous = all(r.is_homogeneous() for r in self.relations)

    def with_relations(self, extra: Sequence[NcPoly]) -> "Presentation":
        return Presentation(self.alphabet, self.space,
                            self.relations + list(extra), self.involution)

    def __repr__(self):
        return (f"<Presentation {len(self.relations)} relations over "
                f"{'*'.join(self.alphabet)}>")


@dataclass
class CertEntry:
    left: Word
    rel_index: int
    right: Word
    coeff: Coefficient


class MembershipCertificate:
    """target = sum of coeff * (left * relation * right)."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[CertEntry]):
        self.entries = list(entries)

    def expand(self, relations: Sequence[NcPoly]) -> NcPoly:
        if not self.entries:
            raise ValueError("cannot expand an empty certificate without context")
        proto = relations[0]
        out = NcPoly.zero(proto.alphabet, proto.space)
        for e in self.entries:
            rel = relations[e.rel_index]
            l = NcPoly.monomial(rel.alphabet, rel.space, e.left)
            r = NcPoly.monomial(rel.alphabet, rel.space, e.right)
            out = out + (l * rel * r).scale(e.coeff)
        return out

    def verify(self, target: NcPoly, relations: Sequence[NcPoly]) -> bool:
        if not self.entries:
            return target.is_zero()
        return self.expand(relations) == target

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"<MembershipCertificate {len(self.entries)} entries>"


@dataclass
class MembershipVerdict:
    kind: str  # MEMBER | NON_MEMBER | INCONCLUSIVE
    certificate: Optional[MembershipCertificate] = None
    bound: Optional[int] = None

    def is_member(self) -> bool:
        return self.kind == MEMBER

    def __repr__(self):
        extra = f" bound={self.bound}" if self.bound is not None else ""
        return f"<{self.kind}{extra}>"


# ---------------------------------------------------------------------------
# span engine

class _Span:
    """Echelon basis of a list of wrapped-relation rows with combination
    tracking for certificate extraction."""

    def __init__(self, relations: Sequence[NcPoly], space: Space):
        self.relations = list(relations)
        self.space = space
        self.rational = not space
        self.one = Fraction(1) if self.rational else Coefficient.const(space, 1)
        self.tags: list = []       # (left, rel_index, right) in insertion order
        self.basis: dict = {}      # pivot word -> (vec, combo)
        self._vec_cache = [self._to_vec(r) for r in self.relations]

    def _to_vec(self, p: NcPoly) -> dict:
        if self.rational:
            return {w: c.as_fraction() for w, c in p.terms.items()}
        return dict(p.terms)

    def _reduce(self, vec: dict, combo: dict):
        basis = self.basis
        while True:
            piv = None
            for w in vec:
                if w in basis and (piv is None or word_key(w) > word_key(piv)):
                    piv = w
            if piv is None:
                return vec, combo
            c = vec[piv]
            bvec, bcombo = basis[piv]
            for w, bc in bvec.items():
                nv = vec.get(w, 0) - c * bc
                if nv:
                    vec[w] = nv
                else:
                    vec.pop(w, None)
            for t, bc in bcombo.items():
                nv = combo.get(t, 0) + c * bc
                if nv:
                    combo[t] = nv
                else:
                    combo.pop(t, None)

    def add_wrapped(self, left: Word, rel_index: int, right: Word):
        base = self._vec_cache[rel_index]
        vec = {left + w + right: c for w, c in base.items()}
        tag = len(self.tags)
        self.tags.append((left, rel_index, right))
        # after reduction: vec = row_tag - sum(combo[t] * row_t)
        vec, combo = self._reduce(vec, {})
        if not vec:
            return
        piv = max(vec, key=word_key)
        inv = 1 / vec[piv] if self.rational else vec[piv].inv()
        vec = {w: c * inv for w, c in vec.items()}
        bcombo = {t: -c * inv for t, c in combo.items()}
        bcombo[tag] = inv
        self.basis[piv] = (vec, bcombo)

    def membership(self, target: NcPoly) -> Optional[MembershipCertificate]:
        """Certificate if target is in the span, else None."""
        vec = self._to_vec(target)
        vec, combo = self._reduce(vec, {})
        if vec:
            return None
        self._check_combo(combo, target)
        entries = []
        for t in sorted(combo):
            left, rel_index, right = self.tags[t]
            c = combo[t]
            if self.rational:
                c = Coefficient.const(self.space, c)
            entries.append(CertEntry(left, rel_index, right, c))
        return MembershipCertificate(entries)

    def _check_combo(self, combo: dict, target: NcPoly):
        """Re-expand the combination from scratch and compare with the target:
        no certificate leaves the engine unchecked."""
        acc: dict = {}
        for t, c in combo.items():
            left, rel_index, right = self.tags[t]
            for w, bc in self._vec_cache[rel_index].items():
                key = left + w + right
                nv = acc.get(key, 0) + c * bc
                if nv:
                    acc[key] = nv
                else:
                    acc.pop(key, None)
        tvec = self._to_vec(target)
        for w, c in tvec.items():
            nv = acc.get(w, 0) - c
            if nv:
                acc[w] = nv
            else:
                acc.pop(w, None)
        if acc:
            raise RuntimeError("internal error: certificate failed re-expansion")


def _all_words(alphabet_size: int, length: int):
    return product(range(alphabet_size), repeat=length)


def _wrappers_upto(alphabet_size: int, budget: int):
    """(left, right) pairs with |left| + |right| <= budget, ordered by total
    length, then left, then right (deglex)."""
    out = []
    for total in range(budget + 1):
        for llen in range(total + 1):
            rlen = total - llen
            for l in _all_words(alphabet_size, llen):
                for r in _all_words(alphabet_size, rlen):
                    out.append((l, r))
    out.sort(key=lambda lr: (len(lr[0]) + len(lr[1]),
                             word_key(lr[0]), word_key(lr[1])))
    return out


def _graded_span(relations: Sequence[NcPoly], degree: int, space: Space) -> _Span:
    span = _Span(relations, space)
    n = len(relations[0].alphabet)
    jobs = []
    for idx, rel in enumerate(relations):
        budget = degree - rel.degree()
        if budget < 0:
            continue
        for llen in range(budget + 1):
            rlen = budget - llen
            for l in _all_words(n, llen):
                for r in _all_words(n, rlen):
                    jobs.append((budget, l, r, idx))
    jobs.sort(key=lambda j: (j[0], word_key(j[1]), word_key(j[2]), j[3]))
    for _, l, r, idx in jobs:
        span.add_wrapped(l, idx, r)
    return span


def _bounded_span(relations: Sequence[NcPoly], wrapper_len: int, space: Space) -> _Span:
    span = _Span(relations, space)
    n = len(relations[0].alphabet)
    for l, r in _wrappers_upto(n, wrapper_len):
        for idx in range(len(relations)):
            span.add_wrapped(l, idx, r)
    return span


# ---------------------------------------------------------------------------
# public operations

def graded_membership(target: NcPoly, relations: Sequence[NcPoly]) -> MembershipVerdict:
    """Definitive membership of a homogeneous target in the two-sided ideal
    generated by homogeneous relations, decided degree slice by degree slice."""
    if not relations:
        raise ValueError("empty relation list")
    for rel in relations:
        if not rel.is_homogeneous():
            raise ValueError("graded membership needs homogeneous relations")
    if not target.is_homogeneous():
        raise ValueError("graded membership needs a homogeneous target")
    if target.is_zero():
        return MembershipVerdict(MEMBER, MembershipCertificate([]))
    d = target.degree()
    span = _graded_span(relations, d, target.space)
    cert = span.membership(target)
    if cert is None:
        return MembershipVerdict(NON_MEMBER)
    return MembershipVerdict(MEMBER, cert)


def bounded_membership(target: NcPoly, relations: Sequence[NcPoly],
                       wrapper_len: int = 2) -> MembershipVerdict:
    """Membership search over wrappers with |l|+|r| <= wrapper_len; returns
    MEMBER with certificate or INCONCLUSIVE (never NON_MEMBER)."""
    if wrapper_len < 0:
        raise ValueError("wrapper_len must be nonnegative")
    if not relations:
        raise ValueError("empty relation list")
    if target.is_zero():
        return MembershipVerdict(MEMBER, MembershipCertificate([]))
    span = _bounded_span(relations, wrapper_len, target.space)
    cert = span.membership(target)
    if cert is None:
        return MembershipVerdict(INCONCLUSIVE, bound=wrapper_len)
    return MembershipVerdict(MEMBER, cert)


@dataclass
class RelationStability:
    index: int
    verdict: MembershipVerdict


@dataclass
class StabilityReport:
    verdict: str  # STABLE | UNSTABLE | INCONCLUSIVE
    relations: list

    def failing_indices(self):
        return [r.index for r in self.relations if r.verdict.kind == NON_MEMBER]


def involution_stability(p: Presentation, wrapper_len: int = 2) -> StabilityReport:
    """Decide, relation by relation, whether the involution image lies in the
    relation ideal.  Homogeneous presentations get the definitive graded
    test; otherwise a bounded search is used and a failed search leaves the
    overall verdict INCONCLUSIVE."""
    results = []
    if p.homogeneous:
        spans = {}
        for i, rel in enumerate(p.relations):
            image = rel.involute(p.involution)
            if image.is_zero():
                results.append(RelationStability(
                    i, MembershipVerdict(MEMBER, MembershipCertificate([]))))
                continue
            d = image.degree()
            if d not in spans:
                spans[d] = _graded_span(p.relations, d, p.space)
            cert = spans[d].membership(image)
            if cert is None:
                results.append(RelationStability(i, MembershipVerdict(NON_MEMBER)))
            else:
                results.append(RelationStability(i, MembershipVerdict(MEMBER, cert)))
    else:
        span = _bounded_span(p.relations, wrapper_len, p.space)
        for i, rel in enumerate(p.relations):
            image = rel.involute(p.involution)
            cert = span.membership(image)
            if cert is None:
                results.append(RelationStability(
                    i, MembershipVerdict(INCONCLUSIVE, bound=wrapper_len)))
            else:
                results.append(RelationStability(i, MembershipVerdict(MEMBER, cert)))
    kinds = {r.verdict.kind for r in results}
    if kinds <= {MEMBER}:
        verdict = STABLE
    elif NON_MEMBER in kinds:
        verdict = UNSTABLE
    else:
        verdict = INCONCLUSIVE
    return StabilityReport(verdict, results)


@dataclass
class EquivalenceReport:
    verdict: str  # EQUIVALENT | NOT_EQUIVALENT | INCONCLUSIVE
    forward: list   # MembershipVerdict per P-relation against Q's ideal
    backward: list  # MembershipVerdict per Q-relation against P's ideal
    wrapper_len: int


def _one_direction(sources: Sequence[NcPoly], targets: Presentation,
                   wrapper_len: int):
    """Verdicts for each source relation against the target ideal."""
    verdicts = []
    if targets.homogeneous and all(s.is_homogeneous() for s in sources):
        spans = {}
        for s in sources:
            if s.is_zero():
                verdicts.append(MembershipVerdict(MEMBER, MembershipCertificate([])))
                continue
            d = s.degree()
            if d not in spans:
                spans[d] = _graded_span(targets.relations, d, targets.space)
            cert = spans[d].membership(s)
            verdicts.append(MembershipVerdict(NON_MEMBER) if cert is None
                            else MembershipVerdict(MEMBER, cert))
        return verdicts
    span = _bounded_span(targets.relations, wrapper_len, targets.space)
    for s in sources:
        cert = span.membership(s)
        verdicts.append(MembershipVerdict(INCONCLUSIVE, bound=wrapper_len)
                        if cert is None else MembershipVerdict(MEMBER, cert))
    return verdicts


def presentations_equivalent(P: Presentation, Q: Presentation,
                             wrapper_len: int = 2) -> EquivalenceReport:
    """Do P and Q generate the same two-sided ideal under the identity map
    on generators?  EQUIVALENT iff every relation of each lies in the other's
    ideal; certificates are retained for both directions."""
    if P.alphabet != Q.alphabet:
        raise ValueError("presentations use different alphabets")
    if P.space != Q.space:
        raise ValueError("presentations use different parameter spaces")
    if P.involution != Q.involution:
        raise ValueError("presentations use different involutions")
    forward = _one_direction(P.relations, Q, wrapper_len)
    backward = _one_direction(Q.relations, P, wrapper_len)
    kinds = {v.kind for v in forward} | {v.kind for v in backward}
    if kinds <= {MEMBER}:
        verdict = EQUIVALENT
    elif NON_MEMBER in kinds:
        verdict = NOT_EQUIVALENT
    else:
        verdict = INCONCLUSIVE
    return EquivalenceReport(verdict, forward, backward, wrapper_len)
