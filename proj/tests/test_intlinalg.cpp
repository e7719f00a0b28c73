#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kanforge/intlinalg.hpp"

using namespace kanforge;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    Mat m(static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int i = 0;
    for (auto& r : rows) {
        int j = 0;
        for (auto v : r) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool is_unimodular(const Mat& m) {
    SnfInvariants s = snf_invariants(m);
    if (s.rank != m.rows || m.rows != m.cols) return false;
    for (auto f : s.factors)
        if (f != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("smith normal form basics") {
    // diag(2,3) has invariant factors (1,6)
    Mat m = from_rows({{2, 0}, {0, 3}});
    SnfResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));

    Mat z(3, 2);
    SnfResult sz = smith_normal_form(z);
    for (int i = 0; i < 2; ++i) CHECK(sz.d.at(i, i) == 0);

    Mat id = Mat::identity(4);
    SnfResult si = smith_normal_form(id);
    CHECK(si.d == id);
}

TEST_CASE("snf invariants under unimodular scrambling") {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> dim(1, 6), entry(-10, 10), pick(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int r = dim(rng), c = dim(rng);
        Mat m(r, c);
        for (auto& v : m.a) v = entry(rng);
        SnfInvariants base = snf_invariants(m);

        Mat w = m;
        for (int step = 0; step < 8; ++step) {
            int q = entry(rng);
            if (w.rows > 1) {
                int i = pick(rng) % w.rows, j = pick(rng) % w.rows;
                if (i != j)
                    for (int t = 0; t < w.cols; ++t) w.at(i, t) += q * w.at(j, t);
            }
            if (w.cols > 1) {
                int i = pick(rng) % w.cols, j = pick(rng) % w.cols;
                if (i != j)
                    for (int t = 0; t < w.rows; ++t) w.at(t, i) += q * w.at(t, j);
            }
        }
        SnfInvariants scr = snf_invariants(w);
        CHECK(base.factors == scr.factors);
        CHECK(base.rank == scr.rank);
    }
}

TEST_CASE("sparse invariants agree with dense") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> dim(1, 12), entry(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        Mat m(r, c);
        for (auto& v : m.a) v = entry(rng) == 1 ? entry(rng) : 0;  // sparse-ish
        SnfInvariants dense = snf_invariants(m);
        SnfInvariants sparse = sparse_snf_invariants(SparseMat::from_dense(m));
        CHECK(dense.factors == sparse.factors);
        CHECK(dense.rank == sparse.rank);
    }
}

TEST_CASE("kernels") {
    Mat m = from_rows({{1, 2, 3}, {2, 4, 6}});
    Mat k = kernel_basis(m);
    CHECK(k.cols == 2);
    // every kernel column maps to zero
    Mat mk = mat_mul(m, k);
    for (auto v : mk.a) CHECK(v == 0);
    // and the kernel is saturated: invariants of the basis are all 1
    SnfInvariants s = snf_invariants(k);
    CHECK(s.rank == 2);
    for (auto f : s.factors) CHECK(f == 1);

    Mat ks = sparse_kernel_basis(SparseMat::from_dense(m));
    CHECK(ks.cols == 2);
    Mat mks = mat_mul(m, ks);
    for (auto v : mks.a) CHECK(v == 0);
}

TEST_CASE("sparse kernel random cross-check") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 10), entry(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        int r = dim(rng), c = dim(rng);
        Mat m(r, c);
        for (auto& v : m.a) v = entry(rng);
        Mat kd = kernel_basis(m);
        Mat ks = sparse_kernel_basis(SparseMat::from_dense(m));
        CHECK(kd.cols == ks.cols);
        Mat mk = mat_mul(m, ks);
        for (auto v : mk.a) CHECK(v == 0);
        // same lattice: mutual containment
        Lattice ld(c, kd), ls(c, ks);
        CHECK(lattice_subset(ld, ls));
        CHECK(lattice_subset(ls, ld));
    }
}

TEST_CASE("solve") {
    Mat m = from_rows({{2, 0}, {0, 3}});
    auto x = solve(m, {4, 9});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK_FALSE(solve(m, {1, 0}).has_value());
}

TEST_CASE("lattice operations") {
    // Z^2: sum of 2e1 and 3e1 is gcd lattice e1
    Mat a = from_rows({{2}, {0}});
    Mat b = from_rows({{3}, {0}});
    Lattice la(2, a), lb(2, b);
    Lattice s = lattice_sum(la, lb);
    CHECK(lattice_contains(s, {1, 0}));
    CHECK_FALSE(lattice_contains(s, {0, 1}));

    Lattice i = lattice_intersect(la, lb);
    CHECK(lattice_contains(i, {6, 0}));
    CHECK_FALSE(lattice_contains(i, {2, 0}));
    CHECK_FALSE(lattice_contains(i, {3, 0}));

    // quotient Z^2 / <2e1, e2> = Z/2
    Lattice z = Lattice::full(2);
    Lattice bb(2, from_rows({{2, 0}, {0, 1}}));
    auto inv = quotient_invariants(z, bb);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == 2);

    // quotient Z^2 / <2e1> = Z/2 + Z
    auto inv2 = quotient_invariants(z, la);
    REQUIRE(inv2.size() == 2);
    CHECK(inv2[0] == 2);
    CHECK(inv2[1] == 0);

    // preimage of <2e1> under multiplication-by-2 on Z^2... {x : 2x in <2e1,2e2>*...}
    Mat twice = from_rows({{2, 0}, {0, 2}});
    Lattice pre = lattice_preimage(twice, la);
    CHECK(lattice_contains(pre, {1, 0}));
    CHECK_FALSE(lattice_contains(pre, {0, 1}));
}
