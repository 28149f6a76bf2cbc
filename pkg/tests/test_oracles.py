"""Independent brute-force oracles for the tensor-power machinery.

Everything here recomputes results with plain loops and set arithmetic,
sharing no code path with the solver / einsum implementations.
"""

import itertools
import random

from corpus_util import build_corpus

from hsep.sepkit import is_h_idempotent, separability_locus, tensor_power

HOMS, STD = build_corpus()


def balance_relation_vectors(hom, arity):
    """Balance relations as tuples, written with ring-element arithmetic."""
    s, r = hom.target, hom.source
    k = s.k
    gens = k**arity
    vectors = []
    slots = list(range(arity - 1))
    for ri in range(r.k):
        img = s.element(hom.matrix[ri])
        for fixed in itertools.product(range(k), repeat=arity - 2):
            for a in range(k):
                for b in range(k):
                    for slot in slots:
                        vec = [0] * gens
                        left = (s.basis_element(a) * img).coords
                        right = (img * s.basis_element(b)).coords
                        for c in range(k):
                            pos = list(fixed[:slot]) + [c, b] + list(fixed[slot:])
                            idx = 0
                            for p in pos:
                                idx = idx * k + p
                            vec[idx] += left[c]
                            pos = list(fixed[:slot]) + [a, c] + list(fixed[slot:])
                            idx = 0
                            for p in pos:
                                idx = idx * k + p
                            vec[idx] -= right[c]
                        if any(vec):
                            vectors.append(tuple(vec))
    return vectors


def subgroup_closure(vectors, moduli):
    """Orbit closure of the subgroup generated by the vectors."""
    zero = tuple([0] * len(moduli))
    gens = [tuple(v % m for v, m in zip(vec, moduli)) for vec in vectors]
    gens = [v for v in gens if any(v)]
    group = {zero}
    queue = [zero]
    while queue:
        x = queue.pop()
        for g in gens:
            y = tuple((a + b) % m for a, b, m in zip(x, g, moduli))
            if y not in group:
                group.add(y)
                queue.append(y)
    return group


class TestPresentationOracle:
    def test_t2_into_m2_quotient_matches_closure(self):
        # ambient (Z/2)^16; the balance subgroup computed by raw closure
        hom = HOMS["t2_into_m2"]
        t2 = tensor_power(hom, 2)
        moduli = t2.gen_moduli
        relations = balance_relation_vectors(hom, 2)
        subgroup = subgroup_closure(relations, moduli)
        ambient = 1
        for m in moduli:
            ambient *= m
        assert t2.group.order == ambient // len(subgroup)
        # membership in the closure agrees with equality of projections
        rng = random.Random(4242)
        for _ in range(300):
            x = tuple(rng.randrange(m) for m in moduli)
            y = tuple(rng.randrange(m) for m in moduli)
            diff = tuple((a - b) % m for a, b, m in zip(x, y, moduli))
            same_class = diff in subgroup
            assert (t2.project(x) == t2.project(y)) == same_class

    def test_z4_to_z2_closure(self):
        hom = HOMS["z4_to_z2"]
        t2 = tensor_power(hom, 2)
        relations = balance_relation_vectors(hom, 2)
        subgroup = subgroup_closure(relations, t2.gen_moduli)
        assert len(subgroup) == 1
        assert t2.group.order == 2


class TestLocusOracle:
    def test_f2_square_locus_by_elementwise_enumeration(self):
        hom = HOMS["f2_diag_f2sq"]
        s = hom.target
        t2 = tensor_power(hom, 2)
        k = s.k
        # here the tensor square is free over the generators, so the
        # canonical coordinates are a permutation of the raw ones
        assert t2.group.order == 16
        solutions = set()
        for raw in itertools.product(range(2), repeat=k * k):
            total = s.zero()
            for a in range(k):
                for b in range(k):
                    if raw[a * k + b]:
                        total = total + s.basis_element(a) * s.basis_element(b)
            if total.coords != s.unit:
                continue
            central = True
            for si in range(k):
                e_s = s.basis_element(si)
                left = [0] * (k * k)
                right = [0] * (k * k)
                for a in range(k):
                    for b in range(k):
                        c = raw[a * k + b]
                        if not c:
                            continue
                        sa = (e_s * s.basis_element(a)).coords
                        for cc in range(k):
                            left[cc * k + b] = (left[cc * k + b] + c * sa[cc]) % 2
                        bs = (s.basis_element(b) * e_s).coords
                        for cc in range(k):
                            right[a * k + cc] = (right[a * k + cc] + c * bs[cc]) % 2
                if left != right:
                    central = False
                    break
            if central:
                solutions.add(t2.project(raw))
        locus = separability_locus(hom)
        assert solutions == set(locus.members())


class TestHeavyOracle:
    def formal_heavy_check(self, hom, member):
        """Both sides of the heavy equation expanded with plain loops."""
        s = hom.target
        t2 = tensor_power(hom, 2)
        t3 = tensor_power(hom, 3)
        k = s.k
        raw = [int(x) for x in t2.lift(member)]
        lhs = [0] * (k**3)
        # sum over pairs of pure terms: a⊗b and c⊗d give a⊗(bc)⊗d
        for a in range(k):
            for b in range(k):
                cab = raw[a * k + b]
                if not cab:
                    continue
                for c in range(k):
                    for d in range(k):
                        ccd = raw[c * k + d]
                        if not ccd:
                            continue
                        prod = (s.basis_element(b) * s.basis_element(c)).coords
                        for e in range(k):
                            if prod[e]:
                                lhs[(a * k + e) * k + d] += cab * ccd * prod[e]
        rhs = [0] * (k**3)
        for a in range(k):
            for b in range(k):
                cab = raw[a * k + b]
                if not cab:
                    continue
                for e in range(k):
                    if s.unit[e]:
                        rhs[(a * k + e) * k + b] += cab * s.unit[e]
        return t3.group.project(lhs) == t3.group.project(rhs)

    def test_formal_expansion_agrees_with_filter(self):
        for name in ("f2_diag_f2sq", "t2_into_m2", "f3_into_f9", "f2_into_m2"):
            hom = HOMS[name]
            t2 = tensor_power(hom, 2)
            for member in separability_locus(hom).members(cap=512):
                assert self.formal_heavy_check(hom, member) == is_h_idempotent(
                    t2, member
                ), (name, member)
