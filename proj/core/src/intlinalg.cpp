#include "kanforge/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace kanforge {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw CheckError("integer overflow in matrix arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw CheckError("integer overflow in matrix arithmetic");
    return r;
}

}  // namespace

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw InputError("mat_mul: dimension mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::int64_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0) r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, y.at(k, j)));
        }
    return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw InputError("mat_add: dimension mismatch");
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = checked_add(x.a[i], y.a[i]);
    return r;
}

Mat mat_neg(const Mat& x) {
    Mat r = x;
    for (auto& v : r.a) v = -v;
    return r;
}

Mat mat_hstack(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw InputError("mat_hstack: row mismatch");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Mat mat_vstack(const Mat& x, const Mat& y) {
    if (x.cols != y.cols) throw InputError("mat_vstack: col mismatch");
    Mat r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

Mat mat_transpose(const Mat& x) {
    Mat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

std::vector<std::int64_t> mat_apply(const Mat& m, const std::vector<std::int64_t>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw InputError("mat_apply: dimension mismatch");
    std::vector<std::int64_t> r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] = checked_add(r[i], checked_mul(m.at(i, j), v[j]));
    return r;
}

Mat mat_cols(const Mat& m, const std::vector<int>& idx) {
    Mat r(m.rows, static_cast<int>(idx.size()));
    for (int j = 0; j < r.cols; ++j)
        for (int i = 0; i < m.rows; ++i) r.at(i, j) = m.at(i, idx[j]);
    return r;
}

namespace {

using i128 = __int128;

// Intermediate values can outgrow int64 even when the inputs and the final
// normal form are small; the elimination runs in 128-bit.
struct WideMat {
    int rows = 0, cols = 0;
    std::vector<i128> a;
    WideMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    explicit WideMat(const Mat& m) : rows(m.rows), cols(m.cols), a(m.a.begin(), m.a.end()) {}
    i128& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    static WideMat identity(int n) {
        WideMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    Mat narrow() const {
        Mat m(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > INT64_MAX || a[i] < INT64_MIN) throw CheckError("matrix entry exceeds 64 bits");
            m.a[i] = static_cast<std::int64_t>(a[i]);
        }
        return m;
    }
};

i128 abs128(i128 x) { return x < 0 ? -x : x; }

// magnitude guard against runaway intermediate growth
constexpr i128 kGrowthCap = i128(1) << 100;

// Shared elimination core for SNF; transforms are tracked only when the
// pointers are non-null.
void snf_eliminate(WideMat& d, WideMat* u, WideMat* v) {
    auto row_op = [&](int dst, int src, i128 q) {  // row dst -= q * row src
        for (int j = 0; j < d.cols; ++j) {
            d.at(dst, j) -= q * d.at(src, j);
            if (abs128(d.at(dst, j)) > kGrowthCap) throw CheckError("snf: entry growth cap exceeded");
        }
        if (u)
            for (int j = 0; j < u->cols; ++j) u->at(dst, j) -= q * u->at(src, j);
    };
    auto col_op = [&](int dst, int src, i128 q) {  // col dst -= q * col src
        for (int i = 0; i < d.rows; ++i) {
            d.at(i, dst) -= q * d.at(i, src);
            if (abs128(d.at(i, dst)) > kGrowthCap) throw CheckError("snf: entry growth cap exceeded");
        }
        if (v)
            for (int i = 0; i < v->rows; ++i) v->at(i, dst) -= q * v->at(i, src);
    };
    auto row_swap = [&](int x, int y) {
        if (x == y) return;
        for (int j = 0; j < d.cols; ++j) std::swap(d.at(x, j), d.at(y, j));
        if (u)
            for (int j = 0; j < u->cols; ++j) std::swap(u->at(x, j), u->at(y, j));
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, x), d.at(i, y));
        if (v)
            for (int i = 0; i < v->rows; ++i) std::swap(v->at(i, x), v->at(i, y));
    };
    auto row_negate = [&](int x) {
        for (int j = 0; j < d.cols; ++j) d.at(x, j) = -d.at(x, j);
        if (u)
            for (int j = 0; j < u->cols; ++j) u->at(x, j) = -u->at(x, j);
    };

    // quotient rounded to nearest keeps remainders at most half the pivot
    auto near_div = [](i128 a, i128 b) {
        i128 q = a / b, r = a % b;
        if (2 * abs128(r) > abs128(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
        return q;
    };

    int t = 0;
    const int tmax = std::min(d.rows, d.cols);
    while (t < tmax) {
        bool settled = false;
        while (!settled) {
            // re-select the globally smallest pivot every round; this is what
            // keeps intermediate entries from exploding
            int pi = -1, pj = -1;
            i128 best = 0;
            for (int i = t; i < d.rows; ++i)
                for (int j = t; j < d.cols; ++j) {
                    i128 x = abs128(d.at(i, j));
                    if (x != 0 && (pi < 0 || x < best)) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return;  // trailing submatrix is zero
            row_swap(t, pi);
            col_swap(t, pj);

            settled = true;
            for (int i = t + 1; i < d.rows; ++i)
                if (d.at(i, t) != 0) {
                    row_op(i, t, near_div(d.at(i, t), d.at(t, t)));
                    if (d.at(i, t) != 0) settled = false;
                }
            for (int j = t + 1; j < d.cols; ++j)
                if (d.at(t, j) != 0) {
                    col_op(j, t, near_div(d.at(t, j), d.at(t, t)));
                    if (d.at(t, j) != 0) settled = false;
                }
        }
        // enforce divisibility: pivot must divide the rest of the submatrix
        bool redo = false;
        for (int i = t + 1; i < d.rows && !redo; ++i)
            for (int j = t + 1; j < d.cols; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    row_op(t, i, -1);  // add row i to row t, then re-clean
                    redo = true;
                    break;
                }
        if (redo) continue;
        if (d.at(t, t) < 0) row_negate(t);
        ++t;
    }
}

}  // namespace

SnfResult smith_normal_form(const Mat& m) {
    WideMat d(m);
    WideMat u = WideMat::identity(m.rows);
    WideMat v = WideMat::identity(m.cols);
    snf_eliminate(d, &u, &v);
    SnfResult r;
    r.d = d.narrow();
    r.u = u.narrow();
    r.v = v.narrow();
    return r;
}

SnfInvariants snf_invariants(Mat m) {
    WideMat d(m);
    snf_eliminate(d, nullptr, nullptr);
    SnfInvariants r;
    for (int t = 0; t < std::min(d.rows, d.cols); ++t)
        if (d.at(t, t) != 0) {
            if (d.at(t, t) > INT64_MAX) throw CheckError("snf: invariant factor exceeds 64 bits");
            r.factors.push_back(static_cast<std::int64_t>(d.at(t, t)));
            ++r.rank;
        }
    return r;
}

void SparseMat::add_entry(int i, int j, std::int64_t v) {
    if (i < 0 || i >= rows || j < 0 || j >= cols) throw InputError("SparseMat: index out of range");
    if (v == 0) return;
    auto& col = columns[j];
    for (auto& e : col)
        if (e.first == i) {
            e.second = checked_add(e.second, v);
            return;
        }
    col.emplace_back(i, v);
}

SparseMat SparseMat::from_dense(const Mat& m) {
    SparseMat s(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i)
            if (m.at(i, j) != 0) s.columns[j].emplace_back(i, m.at(i, j));
    return s;
}

Mat SparseMat::to_dense() const {
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (auto& [i, v] : columns[j]) m.at(i, j) = v;
    return m;
}

SnfInvariants sparse_snf_invariants(SparseMat m) {
    // column j -> map row -> value; row i -> set of columns with a nonzero
    std::vector<std::map<int, std::int64_t>> cols(m.cols);
    std::vector<std::unordered_set<int>> rows(m.rows);
    for (int j = 0; j < m.cols; ++j)
        for (auto& [i, v] : m.columns[j]) {
            if (v == 0) continue;
            cols[j][i] = v;
            rows[i].insert(j);
        }
    std::vector<bool> col_done(m.cols, false), row_done(m.rows, false);
    int unit_pivots = 0;

    auto col_axpy = [&](int dst, int src, std::int64_t q) {  // col dst -= q * col src
        for (auto& [i, v] : cols[src]) {
            auto it = cols[dst].find(i);
            std::int64_t nv = checked_add(it == cols[dst].end() ? 0 : it->second, -checked_mul(q, v));
            if (nv == 0) {
                if (it != cols[dst].end()) {
                    cols[dst].erase(it);
                    rows[i].erase(dst);
                }
            } else {
                if (it == cols[dst].end()) rows[i].insert(dst);
                cols[dst][i] = nv;
            }
        }
    };

    while (true) {
        // find a unit pivot with a small Markowitz cost; scanning a bounded
        // sample of the sparsest columns is enough at our scale
        int pi = -1, pj = -1;
        long best = -1;
        for (int j = 0; j < m.cols; ++j) {
            if (col_done[j] || cols[j].empty()) continue;
            for (auto& [i, v] : cols[j]) {
                if (v != 1 && v != -1) continue;
                long cost = static_cast<long>(cols[j].size() - 1) * static_cast<long>(rows[i].size() - 1);
                if (best < 0 || cost < best) {
                    best = cost;
                    pi = i;
                    pj = j;
                }
                if (best == 0) break;
            }
            if (best == 0) break;
        }
        if (pi < 0) break;

        std::int64_t piv = cols[pj][pi];
        // clear the pivot row with column operations
        std::vector<int> row_cols(rows[pi].begin(), rows[pi].end());
        for (int k : row_cols) {
            if (k == pj || col_done[k]) continue;
            std::int64_t q = cols[k][pi] / piv;  // exact since |piv| == 1
            col_axpy(k, pj, q);
        }
        // retire the pivot row and column (row ops would only touch col pj)
        for (auto& [i, v] : cols[pj]) rows[i].erase(pj);
        cols[pj].clear();
        col_done[pj] = true;
        row_done[pi] = true;
        rows[pi].clear();
        ++unit_pivots;
    }

    // whatever is left has no unit entries; compress to a dense core
    std::vector<int> live_rows, live_cols;
    std::unordered_map<int, int> rmap;
    for (int i = 0; i < m.rows; ++i)
        if (!row_done[i] && !rows[i].empty()) {
            rmap[i] = static_cast<int>(live_rows.size());
            live_rows.push_back(i);
        }
    for (int j = 0; j < m.cols; ++j)
        if (!col_done[j] && !cols[j].empty()) live_cols.push_back(j);
    Mat core(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    if (static_cast<std::size_t>(core.rows) * core.cols > 16'000'000)
        throw BudgetError("sparse_snf_invariants: dense core too large");
    for (int j = 0; j < core.cols; ++j)
        for (auto& [i, v] : cols[live_cols[j]]) core.at(rmap[i], j) = v;
    SnfInvariants rest = snf_invariants(core);

    SnfInvariants out;
    out.rank = unit_pivots + rest.rank;
    out.factors.assign(unit_pivots, 1);
    out.factors.insert(out.factors.end(), rest.factors.begin(), rest.factors.end());
    return out;
}

namespace {

// Column elimination with transform tracking: brings m to column echelon
// form by unimodular column operations, recording them in v (cols x cols).
// Returns the set of columns that ended up zero.
std::vector<int> column_echelon(WideMat& m, WideMat& v) {
    std::vector<bool> retired(m.cols, false);
    auto col_axpy = [&](int dst, int src, i128 q) {
        for (int i = 0; i < m.rows; ++i) {
            m.at(i, dst) -= q * m.at(i, src);
            if (abs128(m.at(i, dst)) > kGrowthCap) throw CheckError("column_echelon: entry growth cap exceeded");
        }
        for (int i = 0; i < v.rows; ++i) v.at(i, dst) -= q * v.at(i, src);
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, x), m.at(i, y));
        for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, x), v.at(i, y));
    };

    for (int r = 0; r < m.rows; ++r) {
        std::vector<int> active;
        for (int j = 0; j < m.cols; ++j)
            if (!retired[j] && m.at(r, j) != 0) active.push_back(j);
        if (active.empty()) continue;
        // gcd-combine into the first active column
        int p = active[0];
        for (std::size_t k = 1; k < active.size(); ++k) {
            int j = active[k];
            while (m.at(r, j) != 0) {
                if (abs128(m.at(r, p)) > abs128(m.at(r, j))) col_swap(p, j);
                i128 q = m.at(r, j) / m.at(r, p);
                col_axpy(j, p, q);
            }
        }
        retired[p] = true;
    }
    std::vector<int> zero_cols;
    for (int j = 0; j < m.cols; ++j) {
        bool z = true;
        for (int i = 0; i < m.rows && z; ++i) z = m.at(i, j) == 0;
        if (z) zero_cols.push_back(j);
    }
    return zero_cols;
}

}  // namespace

Mat kernel_basis(const Mat& m) {
    WideMat w(m);
    WideMat v = WideMat::identity(m.cols);
    std::vector<int> z = column_echelon(w, v);
    return mat_cols(v.narrow(), z);
}

Mat sparse_kernel_basis(const SparseMat& m) {
    std::vector<std::map<int, std::int64_t>> cols(m.cols), vcols(m.cols);
    std::vector<std::unordered_set<int>> rows(m.rows);
    for (int j = 0; j < m.cols; ++j) {
        vcols[j][j] = 1;
        for (auto& [i, v] : m.columns[j])
            if (v != 0) {
                cols[j][i] = v;
                rows[i].insert(j);
            }
    }
    std::vector<bool> retired(m.cols, false);

    auto col_axpy = [&](int dst, int src, std::int64_t q) {
        if (q == 0) return;
        for (auto& [i, v] : cols[src]) {
            auto it = cols[dst].find(i);
            std::int64_t nv = checked_add(it == cols[dst].end() ? 0 : it->second, -checked_mul(q, v));
            if (nv == 0) {
                if (it != cols[dst].end()) {
                    cols[dst].erase(it);
                    rows[i].erase(dst);
                }
            } else {
                if (it == cols[dst].end()) rows[i].insert(dst);
                cols[dst][i] = nv;
            }
        }
        for (auto& [i, v] : vcols[src]) {
            auto it = vcols[dst].find(i);
            std::int64_t nv = checked_add(it == vcols[dst].end() ? 0 : it->second, -checked_mul(q, v));
            if (nv == 0) {
                if (it != vcols[dst].end()) vcols[dst].erase(it);
            } else {
                vcols[dst][i] = nv;
            }
        }
    };

    while (true) {
        // pick the row with the fewest active columns
        int br = -1;
        std::size_t best = 0;
        for (int i = 0; i < m.rows; ++i) {
            std::size_t n = 0;
            for (int j : rows[i])
                if (!retired[j]) ++n;
            if (n > 0 && (br < 0 || n < best)) {
                br = i;
                best = n;
            }
            if (best == 1 && br >= 0 && n == 1) break;
        }
        if (br < 0) break;
        std::vector<int> active;
        for (int j : rows[br])
            if (!retired[j]) active.push_back(j);
        std::sort(active.begin(), active.end(), [&](int a, int b) {
            std::int64_t va = std::llabs(cols[a].at(br)), vb = std::llabs(cols[b].at(br));
            if (va != vb) return va < vb;
            if (cols[a].size() != cols[b].size()) return cols[a].size() < cols[b].size();
            return a < b;
        });
        int p = active[0];
        for (std::size_t k = 1; k < active.size(); ++k) {
            int j = active[k];
            while (cols[j].count(br)) {
                std::int64_t a = cols[p].at(br), b = cols[j].at(br);
                if (std::llabs(a) > std::llabs(b)) std::swap(p, j);
                if (!cols[j].count(br)) break;
                std::int64_t q = cols[j].at(br) / cols[p].at(br);
                if (q == 0) q = (cols[j].at(br) > 0) == (cols[p].at(br) > 0) ? 1 : -1;
                col_axpy(j, p, q);
            }
        }
        retired[p] = true;
    }

    std::vector<int> zero_cols;
    for (int j = 0; j < m.cols; ++j)
        if (cols[j].empty()) zero_cols.push_back(j);
    Mat k(m.cols, static_cast<int>(zero_cols.size()));
    for (int jj = 0; jj < k.cols; ++jj)
        for (auto& [i, v] : vcols[zero_cols[jj]]) k.at(i, jj) = v;
    return k;
}

Mat hnf_cols(const Mat& m) {
    WideMat w(m);
    std::vector<bool> retired(w.cols, false);
    std::vector<std::pair<int, int>> pivots;  // (row, col)

    auto col_axpy = [&](int dst, int src, i128 q) {
        for (int i = 0; i < w.rows; ++i) {
            w.at(i, dst) -= q * w.at(i, src);
            if (abs128(w.at(i, dst)) > kGrowthCap) throw CheckError("hnf_cols: entry growth cap exceeded");
        }
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, x), w.at(i, y));
    };
    auto col_negate = [&](int x) {
        for (int i = 0; i < w.rows; ++i) w.at(i, x) = -w.at(i, x);
    };
    auto floor_div128 = [](i128 a, i128 b) {
        i128 q = a / b, r = a % b;
        if (r != 0 && ((r < 0) != (b < 0))) --q;
        return q;
    };

    for (int r = 0; r < w.rows; ++r) {
        std::vector<int> active;
        for (int j = 0; j < w.cols; ++j)
            if (!retired[j] && w.at(r, j) != 0) active.push_back(j);
        if (active.empty()) continue;
        int p = active[0];
        for (std::size_t k = 1; k < active.size(); ++k) {
            int j = active[k];
            while (w.at(r, j) != 0) {
                if (abs128(w.at(r, p)) > abs128(w.at(r, j))) col_swap(p, j);
                i128 q = w.at(r, j) / w.at(r, p);
                col_axpy(j, p, q);
            }
        }
        if (w.at(r, p) < 0) col_negate(p);
        // reduce previously retired pivots' entries at this row for canonicity
        for (auto& [pr, pc] : pivots) {
            (void)pr;
            i128 q = floor_div128(w.at(r, pc), w.at(r, p));
            if (q != 0) col_axpy(pc, p, q);
        }
        retired[p] = true;
        pivots.emplace_back(r, p);
    }
    Mat narrowed = w.narrow();
    Mat out(narrowed.rows, static_cast<int>(pivots.size()));
    int jj = 0;
    for (auto& [pr, pc] : pivots) {
        (void)pr;
        for (int i = 0; i < narrowed.rows; ++i) out.at(i, jj) = narrowed.at(i, pc);
        ++jj;
    }
    return out;
}

std::optional<std::vector<std::int64_t>> solve(const Mat& m, const std::vector<std::int64_t>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw InputError("solve: dimension mismatch");
    SnfResult s = smith_normal_form(m);
    std::vector<std::int64_t> ub = mat_apply(s.u, b);
    std::vector<std::int64_t> y(m.cols, 0);
    int k = std::min(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        std::int64_t d = i < k ? s.d.at(i, i) : 0;
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            if (i < m.cols) y[i] = ub[i] / d;
        }
    }
    return mat_apply(s.v, y);
}

std::optional<std::vector<std::int64_t>> in_span(const Mat& m, const std::vector<std::int64_t>& v) {
    return solve(m, v);
}

Lattice::Lattice(int amb, Mat g) : ambient(amb) {
    if (g.rows != amb) throw InputError("Lattice: generator rows must match ambient rank");
    gens = hnf_cols(g);
}

Lattice Lattice::zero(int amb) { return Lattice(amb, Mat(amb, 0)); }

Lattice Lattice::full(int amb) { return Lattice(amb, Mat::identity(amb)); }

Lattice lattice_sum(const Lattice& x, const Lattice& y) {
    if (x.ambient != y.ambient) throw InputError("lattice_sum: ambient mismatch");
    return Lattice(x.ambient, mat_hstack(x.gens, y.gens));
}

Lattice lattice_intersect(const Lattice& x, const Lattice& y) {
    if (x.ambient != y.ambient) throw InputError("lattice_intersect: ambient mismatch");
    if (x.rank() == 0 || y.rank() == 0) return Lattice::zero(x.ambient);
    Mat k = kernel_basis(mat_hstack(x.gens, y.gens));
    // first block of each kernel column gives coefficients for x.gens
    Mat coeff(x.gens.cols, k.cols);
    for (int j = 0; j < k.cols; ++j)
        for (int i = 0; i < x.gens.cols; ++i) coeff.at(i, j) = k.at(i, j);
    return Lattice(x.ambient, mat_mul(x.gens, coeff));
}

bool lattice_contains(const Lattice& l, const std::vector<std::int64_t>& v) {
    if (static_cast<int>(v.size()) != l.ambient) throw InputError("lattice_contains: dimension mismatch");
    bool zero = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
    if (zero) return true;
    if (l.rank() == 0) return false;
    return solve(l.gens, v).has_value();
}

bool lattice_subset(const Lattice& x, const Lattice& y) {
    for (int j = 0; j < x.gens.cols; ++j) {
        std::vector<std::int64_t> col(x.ambient);
        for (int i = 0; i < x.ambient; ++i) col[i] = x.gens.at(i, j);
        if (!lattice_contains(y, col)) return false;
    }
    return true;
}

Lattice lattice_preimage(const Mat& m, const Lattice& l) {
    if (m.rows != l.ambient) throw InputError("lattice_preimage: dimension mismatch");
    Mat k = kernel_basis(mat_hstack(m, l.gens));
    Mat pre(m.cols, k.cols);
    for (int j = 0; j < k.cols; ++j)
        for (int i = 0; i < m.cols; ++i) pre.at(i, j) = k.at(i, j);
    return Lattice(m.cols, pre);
}

Lattice lattice_image(const Mat& m, const Lattice& l) {
    if (m.cols != l.ambient) throw InputError("lattice_image: dimension mismatch");
    return Lattice(m.rows, mat_mul(m, l.gens));
}

std::vector<std::int64_t> quotient_invariants(const Lattice& z, const Lattice& b) {
    if (z.ambient != b.ambient) throw InputError("quotient_invariants: ambient mismatch");
    Mat w(z.rank(), b.rank());
    for (int j = 0; j < b.gens.cols; ++j) {
        std::vector<std::int64_t> col(b.ambient);
        for (int i = 0; i < b.ambient; ++i) col[i] = b.gens.at(i, j);
        auto x = z.rank() > 0 ? solve(z.gens, col) : std::nullopt;
        if (!x) {
            bool zerocol = std::all_of(col.begin(), col.end(), [](std::int64_t t) { return t == 0; });
            if (zerocol) continue;
            throw CheckError("quotient_invariants: denominator is not contained in numerator");
        }
        for (int i = 0; i < z.rank(); ++i) w.at(i, j) = (*x)[i];
    }
    SnfInvariants s = snf_invariants(w);
    std::vector<std::int64_t> out;
    for (auto f : s.factors)
        if (f > 1) out.push_back(f);
    for (int i = s.rank; i < z.rank(); ++i) out.push_back(0);
    return out;
}

}  // namespace kanforge
