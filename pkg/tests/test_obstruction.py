import itertools
import math
import random
from fractions import Fraction

import pytest

from mrfw.corpus import (
    cyclic_ring,
    fibonacci_ring,
    group_ring,
    ising_ring,
    rep_s3_ring,
    s3_base_ring,
    trivial_ring,
    z3_base_ring,
)
from mrfw.obstruction import (
    FEASIBLE,
    INCONCLUSIVE,
    INFEASIBLE,
    classify_rank4_mr,
    codegree_matrix,
    codegrees,
    gram_search,
    hom_matrix,
    i1_dimension_system,
    induction_data,
    induction_images,
    obstruct,
)
from mrfw.ring import fpdims, global_fpdim
from mrfw.scalars import IntPoly, QuadExt, charpoly


def s3_group_ring():
    # noncommutative pointed ring: permutations of three letters
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(3))] for q in perms]
        for p in perms
    ]
    return group_ring(table, [f"g{i}" for i in range(6)])


class TestCodegrees:
    def test_pointed_z2(self):
        assert codegrees(cyclic_ring(2)) == (QuadExt(2), QuadExt(2))

    def test_rep_s3(self):
        assert codegrees(rep_s3_ring()) == (QuadExt(6), QuadExt(3), QuadExt(2))

    def test_z3_base_kappa2(self):
        assert codegrees(z3_base_ring(2)) == (
            QuadExt(12),
            QuadExt(4),
            QuadExt(3),
            QuadExt(3),
        )

    def test_z3_base_quadratic_pair(self):
        for kappa in (1, 3, 6):
            cod = codegrees(z3_base_ring(kappa))
            root = QuadExt.sqrt(12 + kappa * kappa)
            big = (QuadExt(12 + kappa * kappa) + kappa * root) * Fraction(1, 2)
            small = (QuadExt(12 + kappa * kappa) - kappa * root) * Fraction(1, 2)
            assert cod[0] == big
            assert small in cod
            assert cod.count(QuadExt(3)) == 2

    def test_s3_base_kappa5(self):
        assert codegrees(s3_base_ring(5)) == (
            QuadExt(42),
            QuadExt(7),
            QuadExt(3),
            QuadExt(2),
        )

    @pytest.mark.parametrize(
        "ring",
        [fibonacci_ring(), ising_ring(), z3_base_ring(4), s3_base_ring(3)],
    )
    def test_largest_codegree_is_global_dim(self, ring):
        assert codegrees(ring)[0] == global_fpdim(ring)

    def test_transpose_form_vs_squares_on_selfdual_basis(self):
        # with every basis element self-dual the two candidate codegree
        # matrices coincide
        ring = s3_base_ring(5)
        n = ring.rank
        naive = [[int(i == j) for j in range(n)] for i in range(n)]
        for T in range(1, n):
            MT = ring.left_matrix(T)
            for i in range(n):
                for j in range(n):
                    naive[i][j] += sum(
                        MT[i][k] * MT[k][j] for k in range(n)
                    )
        assert naive == codegree_matrix(ring)

    def test_squares_form_degenerates_without_transpose(self):
        # when the base has non-self-dual elements, summing plain squares
        # produces a singular matrix whose spectrum cannot be a codegree
        # multiset; the transpose form keeps the expected values
        ring = z3_base_ring(2)
        n = ring.rank
        naive = [[int(i == j) for j in range(n)] for i in range(n)]
        for T in range(1, n):
            MT = ring.left_matrix(T)
            for i in range(n):
                for j in range(n):
                    naive[i][j] += sum(
                        MT[i][k] * MT[k][j] for k in range(n)
                    )
        p = charpoly(naive)
        assert p(0) == 0  # zero eigenvalue
        assert all(f._sign() > 0 for f in codegrees(ring))


class TestInductionImages:
    def test_trivial(self):
        assert induction_images(trivial_ring()) == [[1]]

    def test_s3_base_unit_row(self):
        for kappa in (0, 2, 5, 9):
            FI = induction_images(s3_base_ring(kappa))
            assert FI[0] == [4, 3, 2, kappa]

    def test_s3_base_kappa5_full(self):
        FI = induction_images(s3_base_ring(5))
        assert FI == [
            [4, 3, 2, 5],
            [3, 9, 3, 10],
            [2, 3, 4, 5],
            [5, 10, 5, 37],
        ]

    def test_z3_base_unit_row(self):
        FI = induction_images(z3_base_ring(3))
        assert FI[0] == [4, 1, 1, 3]

    @pytest.mark.parametrize(
        "ring",
        [
            fibonacci_ring(),
            ising_ring(),
            rep_s3_ring(),
            z3_base_ring(5),
            s3_base_ring(7),
            cyclic_ring(4),
        ],
    )
    def test_hom_matrix_symmetric(self, ring):
        H = hom_matrix(ring)
        assert H == [list(col) for col in zip(*H)]

    def test_fi_column_eigen_identity(self):
        # summing the forgetful images against FP dimensions recovers
        # dim * global dim in every column
        ring = s3_base_ring(4)
        FI = induction_images(ring)
        d = fpdims(ring).dims
        total = global_fpdim(ring)
        for U in range(ring.rank):
            acc = QuadExt(0)
            for W in range(ring.rank):
                acc = acc + FI[U][W] * d[W]
            assert acc == d[U] * total


class TestI1System:
    def test_s3_base_kappa1_infeasible(self):
        res = i1_dimension_system(s3_base_ring(1))
        assert res.status == INFEASIBLE
        assert any("not an algebraic integer" in s for s in res.lines)

    def test_s3_base_kappa5_unique_solution(self):
        res = i1_dimension_system(s3_base_ring(5))
        assert res.status == FEASIBLE
        assert res.solutions == (
            (
                (1, 0, 0, 0),
                (1, 2, 1, 0),
                (1, 0, 1, 2),
                (1, 1, 0, 3),
            ),
        )

    def test_s3_base_kappa5_dimension_checks(self):
        # unique solution satisfies every defining equation independently
        ring = s3_base_ring(5)
        res = i1_dimension_system(ring)
        d = fpdims(ring).dims
        data = induction_data(ring)
        (sol,) = res.solutions
        for vec, target in zip(sol, data.i1_dims):
            acc = QuadExt(0)
            for c, dim in zip(vec, d):
                acc = acc + c * dim
            assert acc == target
        cols = [sum(v[j] for v in sol) for j in range(4)]
        assert cols == [4, 3, 2, 5]

    def test_z3_base_forced_relation(self):
        res = i1_dimension_system(z3_base_ring(7))
        assert res.status == INFEASIBLE
        assert any("kappa - 3*a3 = 0" in s for s in res.lines)

    def test_z3_base_divisible_by_three(self):
        res = i1_dimension_system(z3_base_ring(3))
        assert res.status == FEASIBLE
        for sol in res.solutions:
            cols = [sum(v[j] for v in sol) for j in range(4)]
            assert cols == [4, 1, 1, 3]

    def test_noncommutative_inconclusive(self):
        res = i1_dimension_system(s3_group_ring())
        assert res.status == INCONCLUSIVE

    def test_fibonacci(self):
        res = i1_dimension_system(fibonacci_ring())
        assert res.solutions == (((1, 0), (1, 1)),)


class OracleBudgetExceeded(Exception):
    pass


def gram_bruteforce(H, budget=200_000):
    """Naive oracle: every multiset of nonnegative rows, no ordering
    heuristics, no admissibility filters beyond residual nonnegativity.
    Raises OracleBudgetExceeded instead of running unboundedly."""
    n = len(H)
    R = [[int(x) for x in row] for row in H]
    rows = [
        w
        for w in itertools.product(
            *[range(math.isqrt(max(R[i][i], 0)) + 1) for i in range(n)]
        )
        if any(w)
    ]
    nodes = [0]

    def rec(R, allowed):
        nodes[0] += 1
        if nodes[0] > budget:
            raise OracleBudgetExceeded
        if all(R[i][j] == 0 for i in range(n) for j in range(n)):
            return True
        for k, w in enumerate(allowed):
            R2 = [[R[i][j] - w[i] * w[j] for j in range(n)] for i in range(n)]
            if any(R2[i][j] < 0 for i in range(n) for j in range(n)):
                continue
            if rec(R2, allowed[k:]):
                return True
        return False

    return rec(R, rows)


class TestGramSearch:
    def test_identity_feasible(self):
        res = gram_search([[1, 0], [0, 1]])
        assert res.status == FEASIBLE
        assert sorted(res.witness.all_rows()) == [(0, 1), (1, 0)]

    def test_fixed_row_overshoot(self):
        res = gram_search([[1, 0], [0, 1]], fixed_rows=((2, 0),))
        assert res.status == INFEASIBLE

    def test_infeasible_offdiagonal(self):
        # cross term present but one diagonal budget is zero
        res = gram_search([[1, 1], [1, 0]])
        assert res.status == INFEASIBLE

    def test_node_cap(self):
        H = [[30, 10, 10], [10, 30, 10], [10, 10, 31]]
        res = gram_search(H, node_cap=3)
        assert res.status == INCONCLUSIVE
        assert any("node cap" in s for s in res.log)

    def test_witness_reverifies(self):
        ring = z3_base_ring(3)
        verdict = obstruct(ring)
        rows = verdict.witness.all_rows()
        n = ring.rank
        H = induction_images(ring)
        G = [
            [sum(w[i] * w[j] for w in rows) for j in range(n)]
            for i in range(n)
        ]
        assert G == H

    def test_matches_bruteforce_on_products(self):
        rng = random.Random(5771)
        for _ in range(40):
            n = rng.randrange(2, 5)
            rows = [
                tuple(rng.randrange(0, 3) for _ in range(n))
                for _ in range(rng.randrange(1, 5))
            ]
            H = [
                [sum(w[i] * w[j] for w in rows) for j in range(n)]
                for i in range(n)
            ]
            # the generating rows are themselves a witness, so feasibility
            # is known without any oracle
            res = gram_search(H)
            assert res.status == FEASIBLE

    def test_matches_bruteforce_on_perturbations(self):
        rng = random.Random(1213)
        checked = 0
        for _ in range(60):
            n = rng.randrange(2, 4)
            rows = [
                tuple(rng.randrange(0, 3) for _ in range(n))
                for _ in range(rng.randrange(1, 4))
            ]
            H = [
                [sum(w[i] * w[j] for w in rows) for j in range(n)]
                for i in range(n)
            ]
            i, j = rng.randrange(n), rng.randrange(n)
            H[i][j] += 1
            H[j][i] = H[i][j]
            try:
                expected = gram_bruteforce(H)
            except OracleBudgetExceeded:
                continue
            res = gram_search(H)
            assert res.status in (FEASIBLE, INFEASIBLE)
            assert (res.status == FEASIBLE) == expected
            checked += 1
        assert checked > 30


class TestObstruct:
    def test_fibonacci_feasible(self):
        assert obstruct(fibonacci_ring()).status == FEASIBLE

    def test_ising_feasible(self):
        assert obstruct(ising_ring()).status == FEASIBLE

    def test_pointed_z4_feasible(self):
        assert obstruct(cyclic_ring(4)).status == FEASIBLE

    def test_z3_base_kappa1_infeasible(self):
        verdict = obstruct(z3_base_ring(1))
        assert verdict.status == INFEASIBLE
        assert verdict.stage == "i1"

    def test_noncommutative_inconclusive(self):
        assert obstruct(s3_group_ring()).status == INCONCLUSIVE

    def test_node_cap_inconclusive(self):
        verdict = obstruct(z3_base_ring(3), node_cap=1)
        assert verdict.status == INCONCLUSIVE

    def test_s3_base_small_sweep(self):
        # eliminated for every kappa outside {0, 5} and the multiples of 6
        got = {
            k: obstruct(s3_base_ring(k)).status for k in range(13)
        }
        survivors = {k for k, s in got.items() if s == FEASIBLE}
        assert survivors == {0, 5, 6, 12}
        assert all(s != INCONCLUSIVE for s in got.values())

    def test_z3_base_small_sweep(self):
        got = {k: obstruct(z3_base_ring(k)).status for k in range(13)}
        survivors = {k for k, s in got.items() if s == FEASIBLE}
        assert survivors == {0, 2, 3, 6, 9, 12}


class TestClassifier:
    def test_columns_and_merge(self):
        table = classify_rank4_mr(8)
        assert table.columns == ("z3-pointed", "rep-s3")
        assert len(table.verdicts) == 9
        # table agrees with one-off pipeline runs
        for k, row in table.verdicts:
            assert row[0] == obstruct(z3_base_ring(k)).status
            assert row[1] == obstruct(s3_base_ring(k)).status

    def test_z3_survivors_subset(self):
        table = classify_rank4_mr(10)
        surv = table.survivors("z3-pointed")
        assert all(k == 2 or k % 3 == 0 for k in surv)

    def test_kappa_zero_only(self):
        table = classify_rank4_mr(0)
        assert len(table.verdicts) == 1

    def test_parallel_merge_deterministic(self):
        seq = classify_rank4_mr(6)
        par = classify_rank4_mr(6, jobs=2)
        assert seq == par
