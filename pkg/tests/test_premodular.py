from fractions import Fraction

import pytest

from mrfw.corpus import (
    cyclic_ring,
    fibonacci_ring,
    ising_ring,
    rep_s3_ring,
    z3_base_ring,
)
from mrfw.premodular import (
    NON_DEGENERATE,
    PROPERLY_DEGENERATE,
    SYMMETRIC,
    centralizer_of,
    degeneracy_class,
    premodular_data,
    smatrix,
    tannakian_row_obstruction,
)
from mrfw.ring import detect_mr, fpdims
from mrfw.scalars import CycNumber, QuadExt, UnsupportedFieldError

Z5 = CycNumber.root_of_unity(5)
PHI = 1 + Z5 + Z5 ** 4
I4 = CycNumber.root_of_unity(4)


def fib_data():
    return premodular_data(fibonacci_ring(), [1, PHI], [1, Z5 ** 2])


def z2_modular_data():
    return premodular_data(cyclic_ring(2), [1, 1], [1, I4])


class TestSMatrix:
    def test_fibonacci(self):
        S = smatrix(fibonacci_ring(), [1, PHI], [1, Z5 ** 2])
        assert S[0] == [CycNumber.from_rational(1), PHI]
        assert S[1][0] == PHI
        assert S[1][1] == -1

    def test_fibonacci_quadratic_dims_embedded(self):
        phi_q = (1 + QuadExt.sqrt(5)) * Fraction(1, 2)
        assert smatrix(fibonacci_ring(), [1, phi_q], [1, Z5 ** 2]) == smatrix(
            fibonacci_ring(), [1, PHI], [1, Z5 ** 2]
        )

    def test_pointed_z2_fourth_root(self):
        for theta in (I4, I4 ** 3):
            S = smatrix(cyclic_ring(2), [1, 1], [1, theta])
            assert S == [[1, 1], [1, -1]]

    def test_trivial_twists_give_dim_products(self):
        ring = rep_s3_ring()
        d = [1, 2, 1]
        S = smatrix(ring, d, [1, 1, 1])
        for i in range(3):
            for j in range(3):
                assert S[i][j] == d[i] * d[j]

    def test_symmetric_and_first_row(self):
        for data in (fib_data(), z2_modular_data()):
            n = data.ring.rank
            for i in range(n):
                assert data.S[0][i] == data.dims[i]
                for j in range(n):
                    assert data.S[i][j] == data.S[j][i]

    def test_verlinde_scalar(self):
        # S squared is the global dimension times the identity for the two
        # modular entries
        for data, total in (
            (fib_data(), 2 + PHI),
            (z2_modular_data(), CycNumber.from_rational(2)),
        ):
            n = data.ring.rank
            for i in range(n):
                for j in range(n):
                    acc = CycNumber.from_rational(0)
                    for k in range(n):
                        acc = acc + data.S[i][k] * data.S[k][j]
                    assert acc == (total if i == j else 0)

    def test_rejects_bad_dims(self):
        with pytest.raises(ValueError, match="multiplicative"):
            smatrix(fibonacci_ring(), [1, 2], [1, 1])

    def test_rejects_nonunit_twist(self):
        with pytest.raises(ValueError, match="root of unity"):
            smatrix(cyclic_ring(2), [1, 1], [1, 2])
        with pytest.raises(ValueError, match="unit"):
            smatrix(cyclic_ring(2), [1, 1], [-1, 1])

    def test_unsupported_field(self):
        dims = fpdims(ising_ring()).dims  # contains sqrt(2)
        with pytest.raises(UnsupportedFieldError):
            smatrix(ising_ring(), list(dims), [1, 1, 1])


class TestCentralizer:
    def test_fibonacci_nondegenerate(self):
        data = fib_data()
        assert centralizer_of(data, range(2)) == frozenset({0})

    def test_z2_modular(self):
        assert centralizer_of(z2_modular_data(), range(2)) == frozenset({0})

    def test_symmetric_case_full(self):
        ring = rep_s3_ring()
        data = premodular_data(ring, [1, 2, 1], [1, 1, 1])
        assert centralizer_of(data, range(3)) == frozenset({0, 1, 2})

    def test_subset_of_unit_is_everything(self):
        data = fib_data()
        assert centralizer_of(data, [0]) == frozenset({0, 1})

    def test_closure_holds_on_z3_base(self):
        ring = z3_base_ring(2)
        d = [int(v.as_fraction()) for v in fpdims(ring).dims]
        data = premodular_data(ring, d, [1, 1, 1, 1])
        for subset in ([0], [0, 1], range(4)):
            out = centralizer_of(data, subset)
            assert 0 in out


class TestDegeneracy:
    def test_fibonacci(self):
        assert degeneracy_class(fib_data()).label == NON_DEGENERATE

    def test_z2_modular(self):
        report = degeneracy_class(z2_modular_data())
        assert report.label == NON_DEGENERATE
        assert report.center == frozenset({0})

    def test_z2_trivial_twist_symmetric(self):
        data = premodular_data(cyclic_ring(2), [1, 1], [1, 1])
        report = degeneracy_class(data)
        assert report.label == SYMMETRIC
        assert not report.svec_center

    def test_z2_minus_one_twist_symmetric_svec(self):
        data = premodular_data(cyclic_ring(2), [1, 1], [1, -1])
        report = degeneracy_class(data)
        assert report.label == SYMMETRIC
        assert report.svec_center

    def test_properly_degenerate(self):
        # trivial twists on a rank-3 ring: center is everything only when
        # the ring is symmetric; z3 pointed with partial twists lands in a
        # proper intermediate center
        ring = cyclic_ring(4)
        data = premodular_data(ring, [1, 1, 1, 1], [1, I4, 1, I4])
        report = degeneracy_class(data)
        assert report.label == PROPERLY_DEGENERATE
        assert report.center == frozenset({0, 2})


class TestTannakianRowObstruction:
    def test_trivial_twist_degenerate(self):
        ring = rep_s3_ring()
        mr = detect_mr(ring)
        data = premodular_data(ring, [1, 2, 1], [1, 1, 1])
        report = tannakian_row_obstruction(data, mr)
        assert report.degenerate
        assert report.message == "S degenerate: C_pt cannot be Tannakian"
        nontrivial = [c for c in report.comparisons if not c.trivial]
        assert nontrivial and all(c.rows_equal for c in nontrivial)

    def test_minus_one_twist_rows_differ_at_extra(self):
        ring = rep_s3_ring()
        mr = detect_mr(ring)
        data = premodular_data(ring, [1, 2, 1], [1, 1, -1])
        report = tannakian_row_obstruction(data, mr)
        assert not report.degenerate
        (cmp,) = [c for c in report.comparisons if not c.trivial]
        assert cmp.first_difference == mr.extra
        assert data.S[cmp.g][mr.extra] == -data.dims[mr.extra]

    def test_unit_is_trivial_witness(self):
        ring = rep_s3_ring()
        mr = detect_mr(ring)
        data = premodular_data(ring, [1, 2, 1], [1, 1, -1])
        report = tannakian_row_obstruction(data, mr)
        unit = [c for c in report.comparisons if c.trivial]
        assert len(unit) == 1 and unit[0].g == 0 and unit[0].rows_equal
        assert not report.degenerate

    def test_z3_base_all_invertibles_fix_extra(self):
        ring = z3_base_ring(2)
        mr = detect_mr(ring)
        d = [int(v.as_fraction()) for v in fpdims(ring).dims]
        data = premodular_data(ring, d, [1, 1, 1, 1])
        report = tannakian_row_obstruction(data, mr)
        assert report.degenerate
        assert {c.g for c in report.comparisons} == {0, 1, 2}

    def test_requires_mr(self):
        data = fib_data()
        with pytest.raises(ValueError):
            tannakian_row_obstruction(data, None)
