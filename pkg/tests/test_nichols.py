"""Quantum symmetrizers, graded dimensions, finiteness criteria,
square-zero loci, and presentations."""

import itertools
import random

import pytest

from knyd.cyclotomic import CycNum, cyc, root_order
from knyd.hopf import KnAlgebra
from knyd.linalg import CycMatrix
from knyd.ydmod import (U, V, W, braided_space, build_simple, direct_sum,
                        list_simples)
from knyd.nichols import (BraidWord, MemoryBudgetError, a2_criterion,
                          braid_representation, check_braid_equation,
                          diagonal_data, graded_dims, infinite_precheck,
                          is_square_zero, matsumoto_lift,
                          naive_quantum_symmetrizer, presentation_check,
                          quantum_symmetrizer, square_zero_monomial_space,
                          sum_criterion, tensor_vector)


@pytest.fixture(scope="module")
def A3():
    return KnAlgebra(3)


def _space(A, text_label):
    from knyd.ydmod import parse_label
    return braided_space(build_simple(A, parse_label(text_label, A.n)))


# -- braid words and the Matsumoto section -------------------------------------------


def test_matsumoto_lift_basics():
    assert matsumoto_lift((0, 1, 2)).letters == ()
    assert matsumoto_lift((1, 0, 2)).letters == (1,)
    # longest element of S_3 has length 3
    assert len(matsumoto_lift((2, 1, 0)).letters) == 3
    with pytest.raises(ValueError):
        matsumoto_lift((0, 0, 1))


def test_lift_length_equals_inversions_s4():
    for sigma in itertools.permutations(range(4)):
        word = matsumoto_lift(sigma)
        inv = sum(1 for a in range(4) for b in range(a + 1, 4)
                  if sigma[a] > sigma[b])
        assert len(word.letters) == inv, sigma


def test_lift_is_word_independent_s4(A3):
    # a second reduced-word generator: insertion sort from the right.
    # Matsumoto's theorem says any two reduced words of the same
    # permutation give the same braid-group element, hence equal matrices
    # in every representation.
    def insertion_word(sigma):
        a = list(sigma)
        k = len(a)
        swaps = []
        for top in range(k - 1, 0, -1):
            pos = a.index(max(a[:top + 1]))
            while pos < top:
                a[pos], a[pos + 1] = a[pos + 1], a[pos]
                swaps.append(pos + 1)
                pos += 1
        return BraidWord(k, tuple(reversed(swaps)))

    B = _space(A3, "W(-1,1,1)")  # a genuinely non-symmetric braiding
    for sigma in itertools.permutations(range(4)):
        w1 = matsumoto_lift(sigma)
        w2 = insertion_word(sigma)
        assert len(w1.letters) == len(w2.letters), sigma
        if w1.letters != w2.letters:
            assert braid_representation(B, w1) == \
                braid_representation(B, w2), sigma


def test_braid_relation_as_matrices(A3):
    B = _space(A3, "W(-1,0,0)")
    s1 = BraidWord(3, (1,))
    s2 = BraidWord(3, (2,))
    lhs = (braid_representation(B, s1) @ braid_representation(B, s2)
           @ braid_representation(B, s1))
    rhs = (braid_representation(B, s2) @ braid_representation(B, s1)
           @ braid_representation(B, s2))
    assert lhs == rhs


def test_braid_equation_for_all_simple_braidings(A3):
    for L in list_simples(A3):
        B = braided_space(build_simple(A3, L))
        assert check_braid_equation(B), str(L)


def test_braid_equation_negative_control(A3):
    from knyd.nichols import BraidedSpace
    c = CycMatrix.identity(3, 4)
    c.set(0, 3, A3.scalar(1))  # not even invertible as a braiding candidate
    c.set(1, 1, A3.scalar(2))
    B = BraidedSpace(2, c, name="corrupt")
    assert not check_braid_equation(B)


# -- quantum symmetrizers ------------------------------------------------------------


@pytest.mark.parametrize("label", ["V(+1,1,1)", "U(1,0,1,0)", "W(-1,0,0)",
                                   "W(-1,1,1)"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_recursive_qs_equals_naive(A3, label, k):
    B = _space(A3, label)
    assert quantum_symmetrizer(B, k) == naive_quantum_symmetrizer(B, k)


def test_qs1_is_identity(A3):
    B = _space(A3, "W(-1,0,0)")
    assert quantum_symmetrizer(B, 1) == CycMatrix.identity(3, 3)


def test_rank_nullity_per_degree(A3):
    B = _space(A3, "W(-1,0,0)")
    report = graded_dims(B, 4, want_relations=True)
    for deg in range(2, 5):
        rels = report.relations.get(deg, [])
        assert report.dims[deg] + len(rels) == 3 ** deg


def test_memory_budget(A3, monkeypatch):
    monkeypatch.setenv("KN_MEMORY_MB", "1")
    B = _space(A3, "W(-1,0,0)")
    with pytest.raises(MemoryBudgetError):
        quantum_symmetrizer(B, 5)


# -- graded dimensions: one-dimensional modules --------------------------------------


@pytest.mark.parametrize("n", [3, 5])
def test_one_dimensional_totals(n):
    A = KnAlgebra(n)
    for eps in (1, -1):
        for i in range(n):
            for m in range(n):
                if (2 * i * (m - i)) % n == 0:
                    continue
                B = braided_space(build_simple(A, V(n, eps, i, m)))
                rep = graded_dims(B, n + 1, want_relations=False)
                expected = root_order(cyc(n, i * (m - i)))
                assert rep.status == "finite"
                assert rep.total == expected, (eps, i, m)
                assert rep.hilbert() == [1] * expected


def test_one_dimensional_symmetric_line_is_infinite(A3):
    # q = 1: the fixed-vector witness fires and the status is infinite
    B = _space(A3, "V(+1,0,0)")
    rep = graded_dims(B, 4, want_relations=False)
    assert rep.status == "infinite"
    assert rep.witness is not None


# -- graded dimensions: the three-dimensional diagonal family ------------------------


@pytest.mark.parametrize("m", [0, 1, 2])
def test_w_minus_0m_hilbert_vector(A3, m):
    B = _space(A3, "W(-1,0,%d)" % m)
    rep = graded_dims(B, 6, want_relations=False)
    assert rep.status == "finite"
    assert rep.dims == [1, 3, 4, 3, 1, 0]
    assert rep.total == 12
    assert rep.top_degree == 4


@pytest.mark.parametrize("label", ["W(-1,1,1)", "W(-1,2,2)"])
def test_w_minus_diagonal_same_hilbert_vector(A3, label):
    # equal graded dimensions across the twist-equivalence class
    B = _space(A3, label)
    rep = graded_dims(B, 6, want_relations=False)
    assert rep.status == "finite"
    assert rep.dims == [1, 3, 4, 3, 1, 0]
    assert rep.total == 12


# -- A2 and quantum-linear-space criteria --------------------------------------------


def test_a2_example_finite(A3):
    crit = a2_criterion(U(3, 1, 0, 1, 0))
    assert crit == {"label": "U(0,1,2,1)", "finite": True, "N": 3,
                    "kind": "cartan-A2", "predicted_total": 27}
    B = _space(A3, "U(1,0,1,0)")
    rep = graded_dims(B, 9, want_relations=False)
    assert rep.status == "finite"
    assert rep.total == 27
    # PBW Hilbert vector: (1+t+t^2)^2 (1+t^2+t^4)
    assert rep.hilbert() == [1, 2, 4, 4, 5, 4, 4, 2, 1]
    dd = diagonal_data(B)
    assert dd is not None and dd.cartan_a2


def test_a2_example_infinite(A3):
    crit = a2_criterion(U(3, 1, 0, 0, 0))
    assert not crit["finite"] and crit["N"] is None


def test_a2_criterion_invariant_under_relabeling():
    n = 3
    for i in range(n):
        for j in range(n):
            for m in range(n):
                for t in range(n):
                    if i == j and t == (m - 2 * i) % n:
                        continue
                    a = a2_criterion(U(n, i, j, m, t))
                    b = a2_criterion(U(n, j, i, t + 2 * i, m - 2 * j))
                    assert a == b, (i, j, m, t)


# frozen from the exhaustive QS-rank sweep over all 36 canonical U labels
_FINITE_U_N3 = {
    "U(0,1,0,2)": 27, "U(0,1,1,1)": 9, "U(0,1,1,2)": 9, "U(0,1,2,1)": 27,
    "U(0,2,0,1)": 27, "U(0,2,1,2)": 27, "U(0,2,2,1)": 9, "U(0,2,2,2)": 9,
    "U(1,1,0,2)": 27, "U(1,1,1,0)": 27, "U(2,2,0,1)": 27, "U(2,2,1,1)": 27,
}


def test_criterion_matches_oracle_table(A3):
    for L in list_simples(A3):
        if L.kind != "U":
            continue
        crit = a2_criterion(L)
        expected = _FINITE_U_N3.get(str(L))
        assert crit["finite"] == (expected is not None), str(L)
        assert crit["predicted_total"] == expected, str(L)


def test_quantum_linear_space_label(A3):
    crit = a2_criterion(U(3, 0, 1, 1, 1))
    assert crit["finite"] and crit["kind"] == "quantum-linear-space"
    assert crit["predicted_total"] == 9
    B = _space(A3, "U(0,1,1,1)")
    rep = graded_dims(B, 6, want_relations=False)
    assert rep.status == "finite" and rep.total == 9
    assert rep.hilbert() == [1, 2, 3, 2, 1]
    dd = diagonal_data(B)
    assert dd.quantum_linear_space and not dd.cartan_a2


def test_sum_criterion_pair(A3):
    L1, L2 = U(3, 0, 1, 0, 2), U(3, 0, 1, 2, 1)
    result = sum_criterion([L1, L2])
    assert result["finite"]
    assert result["predicted_total"] == 729
    # the direct sum factors as the product of the two A2 Hilbert series,
    # checked degree-by-degree to the desk-scale cutoff
    M = direct_sum(build_simple(A3, L1), build_simple(A3, L2))
    rep = graded_dims(braided_space(M), 6, want_relations=False)
    a2_series = [1, 2, 4, 4, 5, 4, 4, 2, 1]
    product = [sum(a2_series[a] * a2_series[d - a]
                   for a in range(max(0, d - 8), min(d, 8) + 1))
               for d in range(7)]
    assert rep.dims == product


def test_sum_criterion_failing_pair(A3):
    # two copies of the same A2 label never disconnect (the cross edge
    # exponent doubles the nonzero vertex exponent)
    result = sum_criterion([U(3, 1, 0, 1, 0), U(3, 1, 0, 1, 0)])
    assert not result["finite"]
    assert all(r["finite"] for r in result["per_label"])
    assert not result["per_pair"][0]["disconnected"]


# -- infiniteness pre-check -----------------------------------------------------------


def test_infinite_precheck_witnesses(A3):
    n = 3
    for m in range(n):
        B = _space(A3, "W(+1,0,%d)" % m)
        assert infinite_precheck(B) is not None, m
    for i in range(1, n):
        B = _space(A3, "W(+1,%d,%d)" % (i, i))
        assert infinite_precheck(B) is not None, i
    # V(+1,i,m) with xi^{2i(m-i)} = 1 has c(v (x) v) = v (x) v
    B = _space(A3, "V(+1,1,1)")
    assert infinite_precheck(B) is not None
    # negative: the finite cases carry no fixed vector
    assert infinite_precheck(_space(A3, "W(-1,0,0)")) is None
    assert infinite_precheck(_space(A3, "U(1,0,1,0)")) is None


def test_infinite_status_with_witness(A3):
    B = _space(A3, "W(+1,0,0)")
    rep = graded_dims(B, 3, want_relations=False)
    assert rep.status == "infinite"
    assert rep.witness is not None
    # the witness really is a fixed vector of c
    d = B.dim
    vv = [rep.witness[a] * rep.witness[b] for a in range(d) for b in range(d)]
    assert B.c.apply(vv) == vv


def test_undetermined_without_witness():
    # an infinite Nichols algebra with no basis-diagonal fixed vector stays
    # "undetermined" at the cutoff: rank proofs cannot certify infiniteness
    A = KnAlgebra(3)
    B = _space(A, "U(1,0,0,1)")
    if infinite_precheck(B) is None:
        rep = graded_dims(B, 3, want_relations=False)
        assert rep.status == "undetermined"
        assert rep.total is None


# -- square-zero locus ----------------------------------------------------------------


def _vec(n, coeffs):
    return [c if isinstance(c, CycNum) else CycNum.rational(n, c)
            for c in coeffs]


def test_square_zero_witnesses_in_b1(A3):
    n = 3
    B = _space(A3, "W(-1,0,0)")
    xi = cyc(n, 1)
    xi2 = cyc(n, 2)
    one = CycNum.one(n)
    a = _vec(n, [1, 0, 0])
    b = [one, xi, xi2]
    c_ = [one, xi2, xi]
    for v in (a, b, c_):
        assert is_square_zero(B, v)
    assert is_square_zero(B, _vec(n, [0, 0, 0]))
    # the witnesses are linearly independent
    assert CycMatrix.from_rows(n, [a, b, c_]).rank() == 3
    space = square_zero_monomial_space(B)
    for v in (a, b, c_):
        assert space.contains_profile(v)
    assert space.forces_axis() is None


@pytest.mark.parametrize("label", ["W(-1,1,1)", "W(-1,2,2)"])
def test_square_zero_forces_axis_in_b_xi(A3, label):
    n = 3
    B = _space(A3, label)
    assert is_square_zero(B, _vec(n, [1, 0, 0]))      # w0
    assert not is_square_zero(B, _vec(n, [0, 1, 0]))  # w1
    space = square_zero_monomial_space(B)
    assert (1, 1) in space.forced_zero and (2, 2) in space.forced_zero
    assert space.forces_axis() == 0
    # no rank-1 profile off the axis is admitted
    assert not space.contains_profile(_vec(n, [0, 1, 0]))
    assert not space.contains_profile(_vec(n, [1, 1, 1]))


def test_square_zero_dimension_bound(A3):
    B = _space(A3, "W(-1,0,0)")
    with pytest.raises(ValueError):
        square_zero_monomial_space(B, bound=2)


# -- presentations --------------------------------------------------------------------


def _w_relations(n, k):
    """The five degree-2 relations of the diagonal family, parameterized by
    the scalar xi^k (k = 0 is the symmetric presentation)."""
    one = CycNum.one(n)
    xik = cyc(n, k)
    xi2k = cyc(n, 2 * k)
    return [
        [(one, (0, 0))],
        [(one, (1, 2))],
        [(one, (2, 1))],
        [(xi2k, (0, 1)), (xik, (1, 0)), (one, (2, 2))],
        [(xi2k, (0, 2)), (one, (2, 0)), (xik, (1, 1))],
    ]


def _check_presentation(B, terms_list):
    rels = [(2, tensor_vector(B, 2, terms)) for terms in terms_list]
    return presentation_check(B, rels)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_symmetric_presentation_spans(A3, m):
    B = _space(A3, "W(-1,0,%d)" % m)
    result = _check_presentation(B, _w_relations(3, 0))
    assert result["all_in_kernel"]
    assert result["kernel2_dim"] == 5
    assert result["degree2_spans"]


def test_scalar_presentations_attach_to_swapped_spaces(A3):
    # the xi^k-scaled presentation spans ker QS_2 of W(-1,2k mod 3,2k mod 3):
    # the k=1 set belongs to W(-1,2,2) and the k=2 set to W(-1,1,1)
    B11 = _space(A3, "W(-1,1,1)")
    B22 = _space(A3, "W(-1,2,2)")
    r11 = _check_presentation(B11, _w_relations(3, 2))
    r22 = _check_presentation(B22, _w_relations(3, 1))
    assert r11["all_in_kernel"] and r11["degree2_spans"]
    assert r11["kernel2_dim"] == 5
    assert r22["all_in_kernel"] and r22["degree2_spans"]
    # the opposite attachment fails
    assert not _check_presentation(B11, _w_relations(3, 1))["all_in_kernel"]
    assert not _check_presentation(B22, _w_relations(3, 2))["all_in_kernel"]


def test_fomin_kirillov_relations_map_in(A3):
    # x_k = w0 + xi^k w1 + xi^{2k} w2; the quadratic relations
    # x_i^2, x0x1 + x1x2 + x2x0, x0x2 + x2x1 + x1x0 land in ker QS_2
    n = 3
    B = _space(A3, "W(-1,0,0)")
    x = [[CycNum.one(n), cyc(n, k), cyc(n, 2 * k)] for k in range(3)]

    def prod_terms(u, v):
        return [(u[a] * v[b], (a, b)) for a in range(3) for b in range(3)]

    rels = []
    for k in range(3):
        rels.append((2, tensor_vector(B, 2, prod_terms(x[k], x[k]))))
    for (a, b, c_) in [(0, 1, 2), (0, 2, 1)]:
        terms = (prod_terms(x[a], x[b]) + prod_terms(x[b], x[c_])
                 + prod_terms(x[c_], x[a]))
        rels.append((2, tensor_vector(B, 2, terms)))
    result = presentation_check(B, rels)
    assert result["all_in_kernel"]


def test_x_negation_intertwines_the_two_diagonal_braidings(A3):
    # in the x-basis, x_k -> x_{-k} intertwines the braidings of the two
    # scaled diagonal spaces
    n = 3
    X = CycMatrix.from_rows(n, [[cyc(n, k * a) for k in range(3)]
                                for a in range(3)])
    P = CycMatrix.zero(n, 3, 3)
    for k in range(3):
        P.set((-k) % n, k, CycNum.one(n))
    # T (w-basis matrix of x_k -> x_{-k}) = X P X^{-1}
    Xinv_cols = []
    for k in range(3):
        e = [CycNum.one(n) if a == k else CycNum.zero(n) for a in range(3)]
        sol, _ = X.solve(e)
        Xinv_cols.append(sol)
    Xinv = CycMatrix.from_rows(n, Xinv_cols).transpose()
    T = X @ P @ Xinv
    c1 = _space(A3, "W(-1,1,1)").c
    c2 = _space(A3, "W(-1,2,2)").c
    TT = T.kron(T)
    assert c2 @ TT == TT @ c1
    assert not (c1 @ TT == TT @ c1)  # the map is not an automorphism of one


def test_diagonal_rescaling_trivializes_the_cocycle():
    # y_k = xi^{-ik} x_k turns the xi^{-2i(l-r)}-scaled dihedral braiding
    # into the constant -1 braiding
    from knyd.racks import cq_braiding, d_cocycle, dihedral_rack
    n = 3
    R = dihedral_rack(n)
    base = cq_braiding(R, d_cocycle(n, -1, 0, 0)).c
    for i in range(1, n):
        ci = cq_braiding(R, d_cocycle(n, -1, i, i)).c
        D = CycMatrix.zero(n, 3, 3)
        for k in range(3):
            D.set(k, k, cyc(n, -i * k))
        DD = D.kron(D)
        Dinv = CycMatrix.zero(n, 3, 3)
        for k in range(3):
            Dinv.set(k, k, cyc(n, i * k))
        DDinv = Dinv.kron(Dinv)
        assert DDinv @ ci @ DD == base, i


# -- report plumbing ------------------------------------------------------------------


def test_graded_report_json_is_stable(A3):
    import json
    B = _space(A3, "W(-1,0,0)")
    r1 = graded_dims(B, 5, want_relations=True).to_json()
    r2 = graded_dims(B, 5, want_relations=True).to_json()
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)
    assert r1["dims"] == [1, 3, 4, 3, 1, 0]
