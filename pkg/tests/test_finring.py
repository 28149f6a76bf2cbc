"""Finite ring construction, validation, homs, named families."""

import warnings

import pytest

from hsep.finring import (
    BilinearityIncompatible,
    InvalidCayleyTable,
    NonCentralImage,
    NotAssociative,
    NotMultiplicative,
    NotUnital,
    ReduciblePolynomialAllowed,
    check_ring_hom,
    commutativity_report,
    compose_homs,
    construct_ring,
    construct_standard_ring,
    hom_from_doc,
    hom_to_doc,
    identity_hom,
    ring_from_doc,
    ring_to_doc,
)


def zmod(n):
    return construct_standard_ring("modular", {"n": n}).ring


def direct_law_check(ring):
    """Oracle: re-verify ring laws element by element, not via the table."""
    elems = list(ring.elements(cap=300))
    one = ring.one()
    for x in elems:
        assert (one * x).coords == x.coords
        assert (x * one).coords == x.coords
    for x in elems[:8]:
        for y in elems[:8]:
            for z in elems[:8]:
                assert ((x * y) * z).coords == (x * (y * z)).coords


class TestConstructRing:
    def test_modular_six(self):
        ring = construct_ring((6,), (((1,),),), (1,), "Z/6")
        assert ring.order == 6
        direct_law_check(ring)

    def test_unit_law_fails(self):
        from hsep.finring import UnitLawFails

        with pytest.raises(UnitLawFails):
            construct_ring((4,), (((2,),),), (1,))

    def test_f2_squared_pointwise(self):
        ring = construct_ring(
            (2, 2),
            (((1, 0), (0, 0)), ((0, 0), (0, 1))),
            (1, 1),
            "F2xF2",
        )
        assert ring.order == 4
        direct_law_check(ring)

    def test_not_associative_names_triple(self):
        # (e1 e1) e1 = e2 e1 = 0 but e1 (e1 e1) = e1 e2 = e0
        table = (
            ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
            ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
            ((0, 0, 1), (0, 0, 0), (0, 0, 0)),
        )
        with pytest.raises(NotAssociative) as err:
            construct_ring((2, 2, 2), table, (1, 0, 0))
        assert err.value.triple == (1, 1, 1)

    def test_bilinearity_incompatible(self):
        # e1 has order 2 but e1*e1 has a coordinate of order 4 not killed by 2
        table = (
            ((1, 0), (0, 1)),
            ((0, 1), (1, 0)),
        )
        with pytest.raises(BilinearityIncompatible):
            construct_ring((4, 2), table, (1, 0))

    def test_zero_ring(self):
        ring = construct_ring((), (), (), "0")
        assert ring.order == 1
        assert ring.one().coords == ()


class TestStandardRings:
    def test_matrix_ring(self):
        std = construct_standard_ring("matrix", {"base": zmod(2), "n": 2})
        assert std.ring.order == 16
        assert "scalar" in std.homs
        direct_law_check(std.ring)

    def test_triangular_inclusion(self):
        std = construct_standard_ring("triangular", {"base": zmod(2), "n": 2})
        incl = std.homs["into_matrix"]
        assert incl.source.order == 8
        assert incl.target.order == 16

    def test_group_ring_c2(self):
        std = construct_standard_ring(
            "group_ring", {"base": zmod(2), "cayley": [[0, 1], [1, 0]], "identity": 0}
        )
        ring = std.ring
        assert ring.order == 4
        g = ring.basis_element(1)
        assert (g * g).coords == ring.one().coords
        direct_law_check(ring)

    def test_invalid_cayley(self):
        with pytest.raises(InvalidCayleyTable):
            construct_standard_ring(
                "group_ring", {"base": zmod(2), "cayley": [[0, 0], [1, 0]], "identity": 0}
            )

    def test_product(self):
        std = construct_standard_ring("product", {"factors": [zmod(2), zmod(3)]})
        assert std.ring.order == 6
        assert std.homs["proj_0"].target.order == 2
        e0, e1 = std.elements["e_0"], std.elements["e_1"]
        assert (e0 * e1).is_zero()
        assert (e0 + e1).coords == std.ring.one().coords

    def test_polynomial_quotient_f9(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            std = construct_standard_ring("polynomial_quotient", {"p": 3, "poly": [1, 0, 1]})
        ring = std.ring
        assert ring.order == 9
        x = std.elements["x"]
        assert (x * x).coords == (-ring.one()).coords
        direct_law_check(ring)

    def test_reducible_polynomial_warns(self):
        with pytest.warns(ReduciblePolynomialAllowed):
            construct_standard_ring("polynomial_quotient", {"p": 2, "poly": [0, 0, 1]})

    def test_tensor_product_of_group_rings(self):
        grp = construct_standard_ring(
            "group_ring", {"base": zmod(2), "cayley": [[0, 1], [1, 0]], "identity": 0}
        )
        unit_hom = grp.homs["scalar"]
        std = construct_standard_ring("tensor_product", {"homs": [unit_hom, unit_hom]})
        # F2[C2] (x)_F2 F2[C2] has F2-dimension 4
        assert std.ring.order == 16
        direct_law_check(std.ring)

    def test_tensor_requires_central_images(self):
        mat = construct_standard_ring("matrix", {"base": zmod(2), "n": 2})
        # embed F2[C2]-style non-central: use T2 inclusion into M2, whose image
        # is not central in M2
        tri = construct_standard_ring("triangular", {"base": zmod(2), "n": 2})
        incl = tri.homs["into_matrix"]
        with pytest.raises((NonCentralImage, ValueError)):
            construct_standard_ring("tensor_product", {"homs": [incl, incl]})

    def test_quotient(self):
        std = construct_standard_ring("quotient", {"base": zmod(6), "ideal": [(2,)]})
        assert std.ring.order == 2
        proj = std.homs["projection"]
        assert proj(proj.source.one()).coords == std.ring.one().coords

    def test_matrix_count_formula(self):
        for n in (2, 3):
            std = construct_standard_ring("matrix", {"base": zmod(2), "n": n})
            assert std.ring.order == 2 ** (n * n)

    def test_group_ring_count_formula(self):
        c3 = [[(i + j) % 3 for j in range(3)] for i in range(3)]
        std = construct_standard_ring("group_ring", {"base": zmod(3), "cayley": c3})
        assert std.ring.order == 3**3


class TestRingHom:
    def test_identity_valid(self):
        ring = zmod(6)
        hom = identity_hom(ring)
        assert hom(ring.element((5,))).coords == (5,)

    def test_surjection_z4_to_z2(self):
        hom = check_ring_hom(((1,),), zmod(4), zmod(2))
        assert hom.is_surjective()

    def test_unit_must_map_to_unit(self):
        with pytest.raises(NotUnital):
            check_ring_hom(((0,),), zmod(2), zmod(2))

    def test_not_multiplicative(self):
        # F2 x F2 -> F2 x F2 swapping a unit coordinate into a non-hom
        ring = construct_ring(
            (2, 2), (((1, 0), (0, 0)), ((0, 0), (0, 1))), (1, 1), "F2xF2"
        )
        with pytest.raises(NotMultiplicative):
            check_ring_hom(((1, 1), (0, 1)), ring, ring)

    def test_additive_well_definedness(self):
        from hsep.finring import NotAdditiveWellDefined

        with pytest.raises(NotAdditiveWellDefined):
            check_ring_hom(((1,),), zmod(2), zmod(4))

    def test_composition_is_valid(self):
        h1 = check_ring_hom(((1,),), zmod(4), zmod(2))
        std = construct_standard_ring("matrix", {"base": zmod(2), "n": 2})
        h2 = std.homs["scalar"]
        comp = compose_homs(h2, h1)
        assert comp.source.order == 4
        assert comp.target.order == 16


class TestCommutativity:
    def test_matrix_ring_center(self):
        std = construct_standard_ring("matrix", {"base": zmod(2), "n": 2})
        report = commutativity_report(std.ring)
        assert not report.is_commutative
        # oracle: enumerate all 16 elements and intersect centralizers
        ring = std.ring
        center = [
            x
            for x in ring.elements()
            if all((x * y).coords == (y * x).coords for y in ring.elements())
        ]
        assert report.center_order == len(center) == 2
        members = set(report.center.members())
        assert members == {x.coords for x in center}

    def test_commutative_rings(self):
        ring = construct_ring(
            (2, 2), (((1, 0), (0, 0)), ((0, 0), (0, 1))), (1, 1), "F2xF2"
        )
        rep = commutativity_report(ring)
        assert rep.is_commutative
        assert rep.center_order == ring.order
        assert commutativity_report(zmod(6)).is_commutative


class TestDocs:
    def test_ring_roundtrip(self):
        std = construct_standard_ring("matrix", {"base": zmod(2), "n": 2})
        doc = ring_to_doc(std.ring)
        again = ring_from_doc(doc)
        assert again == std.ring

    def test_standard_doc(self):
        ring = ring_from_doc({"kind": "modular", "params": {"n": 5}})
        assert ring.order == 5

    def test_hom_roundtrip(self):
        hom = check_ring_hom(((1,),), zmod(4), zmod(2))
        doc = hom_to_doc(hom)
        again = hom_from_doc(doc)
        assert again.matrix == hom.matrix

    def test_canonical_hom_doc(self):
        doc = {
            "standard": {
                "kind": "triangular",
                "params": {"n": 2, "base": {"kind": "modular", "params": {"n": 2}}},
            },
            "hom": "into_matrix",
        }
        hom = hom_from_doc(doc)
        assert hom.source.order == 8
        assert hom.target.order == 16
