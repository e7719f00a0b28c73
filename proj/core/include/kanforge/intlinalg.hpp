#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kanforge/common.hpp"

// Exact integer matrix and lattice arithmetic: Smith and Hermite normal
// forms, kernels, solves, and subgroup-lattice operations.  Everything is
// int64; pivoting keeps entries small at the sizes this engine runs at.

namespace kanforge {

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n);
    bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_neg(const Mat& x);
Mat mat_hstack(const Mat& x, const Mat& y);
Mat mat_vstack(const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& x);
std::vector<std::int64_t> mat_apply(const Mat& m, const std::vector<std::int64_t>& v);
Mat mat_cols(const Mat& m, const std::vector<int>& idx);

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal with
// a divisibility chain d0 | d1 | ...  Diagonal entries are nonnegative.
struct SnfResult {
    Mat u, d, v;
};
SnfResult smith_normal_form(const Mat& m);

// Invariant factors of m (diagonal of the SNF, zeros dropped), plus rank.
// Cheaper than the full factorization: no transforms are tracked.
struct SnfInvariants {
    std::vector<std::int64_t> factors;  // nonunit factors would still include 1s here
    int rank = 0;
};
SnfInvariants snf_invariants(Mat m);

// Sparse matrix in column-major order; each column holds sorted (row, value)
// pairs.  Used for the large bar-resolution differentials.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> columns;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), columns(c) {}
    void add_entry(int i, int j, std::int64_t v);
    static SparseMat from_dense(const Mat& m);
    Mat to_dense() const;
};

// SNF invariants of a sparse matrix: unit-pivot two-sided elimination with
// Markowitz pivot selection, dense SNF on whatever small core remains.
SnfInvariants sparse_snf_invariants(SparseMat m);

// Basis of the integer kernel {x : m x = 0}; columns of the result.
Mat kernel_basis(const Mat& m);
Mat sparse_kernel_basis(const SparseMat& m);

// Column-style Hermite normal form of the lattice spanned by the columns of
// m: echelon, canonical, zero columns dropped.
Mat hnf_cols(const Mat& m);

// Particular integer solution of m x = b, if one exists.
std::optional<std::vector<std::int64_t>> solve(const Mat& m, const std::vector<std::int64_t>& b);

// Sublattices of Z^ambient, generated by the columns of gens.
struct Lattice {
    int ambient = 0;
    Mat gens;  // ambient x k, canonicalized via hnf_cols on construction

    Lattice() = default;
    Lattice(int amb, Mat g);
    static Lattice zero(int amb);
    static Lattice full(int amb);
    int rank() const { return gens.cols; }
};

Lattice lattice_sum(const Lattice& x, const Lattice& y);
Lattice lattice_intersect(const Lattice& x, const Lattice& y);
bool lattice_contains(const Lattice& l, const std::vector<std::int64_t>& v);
bool lattice_subset(const Lattice& x, const Lattice& y);  // x <= y
// {x : m x in l}, as a sublattice of Z^{m.cols}.
Lattice lattice_preimage(const Mat& m, const Lattice& l);
// Image of the lattice under m.
Lattice lattice_image(const Mat& m, const Lattice& l);

// Invariant factors of z / b for lattices b <= z (checked): the quotient
// group is  (+)_i Z/f_i (+) Z^(number of zero factors).  Factors are returned
// with units dropped, torsion ascending, zeros last.
std::vector<std::int64_t> quotient_invariants(const Lattice& z, const Lattice& b);

// Coordinates of v in the column basis of m (exact), if v lies in the span.
std::optional<std::vector<std::int64_t>> in_span(const Mat& m, const std::vector<std::int64_t>& v);

}  // namespace kanforge
