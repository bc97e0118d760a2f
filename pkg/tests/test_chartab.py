from fractions import Fraction

import pytest

from mrfw.chartab import (
    CharacterTable,
    class_inverse_permutation,
    fusion_from_table,
    gagola_condition,
    theorem57_check,
    validate_table,
)
from mrfw.corpus import (
    TABLE_BUILDERS,
    a4_table,
    cyclic_ring,
    cyclic_table,
    d8_table,
    klein_table,
    q8_table,
    rep_s3_ring,
    s3_table,
    s4_table,
)
from mrfw.obstruction import codegrees
from mrfw.ring import detect_mr, fpdims, subrings, validate
from mrfw.scalars import CycNumber


class TestValidateTable:
    @pytest.mark.parametrize("name", sorted(TABLE_BUILDERS))
    def test_corpus_valid(self, name):
        assert validate_table(TABLE_BUILDERS[name]()) == []

    def test_perturbed_entry_detected(self):
        t = s3_table()
        rows = [list(r) for r in t.characters]
        rows[2] = [rows[2][0], rows[2][1] + 1, rows[2][2]]
        bad = CharacterTable(t.order, t.class_sizes, rows)
        report = validate_table(bad)
        assert any("orthogonality" in msg for msg in report)

    def test_wrong_class_sizes(self):
        t = s3_table()
        bad = CharacterTable(6, [1, 3, 2], t.characters)
        assert validate_table(bad) != []

    def test_degree_sum_checked(self):
        bad = CharacterTable(5, [1, 4], [[1, 1], [1, Fraction(-1, 4)]])
        report = validate_table(bad)
        assert any("squared degrees" in msg for msg in report)

    def test_centralizer_orders(self):
        assert s3_table().centralizer_orders == (6, 3, 2)
        assert s4_table().centralizer_orders == (24, 4, 8, 3, 4)


class TestInversePermutation:
    def test_cyclic(self):
        assert class_inverse_permutation(cyclic_table(4)) == (0, 3, 2, 1)
        assert class_inverse_permutation(cyclic_table(5)) == (0, 4, 3, 2, 1)

    def test_real_tables_fixed(self):
        for t in (s3_table(), d8_table(), q8_table(), s4_table()):
            perm = class_inverse_permutation(t)
            assert perm == tuple(range(t.k))

    def test_a4_swaps_threecycles(self):
        assert class_inverse_permutation(a4_table()) == (0, 1, 3, 2)

    def test_explicit_perm_wins(self):
        t = klein_table()
        t2 = CharacterTable(
            t.order, t.class_sizes, t.characters, inverse_perm=(0, 1, 2, 3)
        )
        assert class_inverse_permutation(t2) == (0, 1, 2, 3)


class TestFusionFromTable:
    def test_s3_matches_known_rules(self):
        ring = fusion_from_table(s3_table())
        # basis order (trivial, sign, 2-dim); the 2-dim object squares to
        # the sum of everything
        assert ring.N[2][2] == (1, 1, 1)
        assert ring.N[1][1] == (1, 0, 0)
        assert ring.N[1][2] == (0, 0, 1)
        # same ring as the reference rules up to reordering (1, V, sgn)
        rep = rep_s3_ring()
        perm = (0, 2, 1)
        relabeled = tuple(
            tuple(
                tuple(ring.N[perm[i]][perm[j]][perm[k]] for k in range(3))
                for j in range(3)
            )
            for i in range(3)
        )
        assert relabeled == rep.N

    def test_z4_pointed(self):
        ring = fusion_from_table(cyclic_table(4))
        assert ring.N == cyclic_ring(4).N

    def test_q8_two_dim_object(self):
        ring = fusion_from_table(q8_table())
        assert ring.N[4][4] == (1, 1, 1, 1, 0)

    @pytest.mark.parametrize("name", sorted(TABLE_BUILDERS))
    def test_output_is_valid_ring(self, name):
        ring = fusion_from_table(TABLE_BUILDERS[name]())
        assert validate(ring) == []

    @pytest.mark.parametrize("name", sorted(TABLE_BUILDERS))
    def test_dims_equal_degrees(self, name):
        t = TABLE_BUILDERS[name]()
        dims = fpdims(fusion_from_table(t))
        assert tuple(int(d.as_fraction()) for d in dims.dims) == t.degrees

    @pytest.mark.parametrize("name", sorted(TABLE_BUILDERS))
    def test_duality_matches_conjugation(self, name):
        t = TABLE_BUILDERS[name]()
        ring = fusion_from_table(t)
        for i in range(t.k):
            conj_row = tuple(v.conjugate() for v in t.characters[i])
            assert conj_row == t.characters[ring.dual[i]]

    def test_inconsistent_table_rejected(self):
        # orthogonal rows but non-group values: multiplicities fractional
        rows = [[1, 1], [1, -1]]
        t = CharacterTable(3, [1, 2], rows)
        with pytest.raises(ValueError):
            fusion_from_table(t)


class TestGagolaCondition:
    def test_s3_witness(self):
        w = gagola_condition(s3_table())
        assert w is not None
        assert w.char_index == 2
        assert w.nonvanishing_classes == (0, 1)

    def test_q8_witness(self):
        w = gagola_condition(q8_table())
        assert (w.char_index, w.nonvanishing_classes) == (4, (0, 1))

    def test_z4_none(self):
        assert gagola_condition(cyclic_table(4)) is None

    def test_s4_none(self):
        assert gagola_condition(s4_table()) is None


class TestTheorem57:
    POSITIVE = ("s3", "d8", "q8", "a4")
    NEGATIVE = ("z3", "z4", "z2xz2", "s4")

    @pytest.mark.parametrize("name", POSITIVE)
    def test_positive(self, name):
        rep = theorem57_check(TABLE_BUILDERS[name]())
        assert rep.holds
        assert rep.witness is not None
        assert rep.kernel_classes == frozenset(rep.witness.nonvanishing_classes)
        assert rep.witness.char_index not in rep.mr_basis

    @pytest.mark.parametrize("name", NEGATIVE)
    def test_negative(self, name):
        rep = theorem57_check(TABLE_BUILDERS[name]())
        assert not rep.holds
        assert rep.witness is None and rep.mr_basis is None

    def test_s3_kernel_is_index_two(self):
        rep = theorem57_check(s3_table())
        t = s3_table()
        n_order = sum(t.class_sizes[c] for c in rep.kernel_classes)
        assert n_order == 3  # the 3-element normal subgroup

    def test_s4_subring_ranks(self):
        ring = fusion_from_table(s4_table())
        ranks = sorted(len(s) for s in subrings(ring))
        assert ranks == [1, 2, 3, 5]
        assert detect_mr(ring) is None

    def test_order_two_rejected(self):
        with pytest.raises(ValueError):
            theorem57_check(cyclic_table(2))


class TestCodegreeCentralizerProperty:
    @pytest.mark.parametrize("name", sorted(TABLE_BUILDERS))
    def test_codegrees_are_centralizer_orders(self, name):
        t = TABLE_BUILDERS[name]()
        ring = fusion_from_table(t)
        got = sorted((int(c.as_fraction()) for c in codegrees(ring)), reverse=True)
        assert got == sorted(t.centralizer_orders, reverse=True)
