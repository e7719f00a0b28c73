#include "kanforge/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

namespace kanforge {

int FgAbGroup::free_rank() const {
    return static_cast<int>(std::count(invariant_factors.begin(), invariant_factors.end(), 0));
}

std::int64_t FgAbGroup::order() const {
    std::int64_t n = 1;
    for (auto f : invariant_factors) {
        if (f == 0) return 0;
        n *= f;
    }
    return n;
}

bool FgAbGroup::is_free() const {
    return std::all_of(invariant_factors.begin(), invariant_factors.end(), [](std::int64_t f) { return f == 0; });
}

Lattice FgAbGroup::relation_lattice() const {
    int k = rank();
    int nz = k - free_rank();
    Mat gens(k, nz);
    int col = 0;
    for (int i = 0; i < k; ++i)
        if (invariant_factors[i] != 0) gens.at(i, col++) = invariant_factors[i];
    return Lattice(k, gens);
}

FgAbGroup FgAbGroup::make(std::vector<std::int64_t> factors) {
    bool seen_zero = false;
    std::int64_t prev = 0;
    for (auto f : factors) {
        if (f == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) throw InputError("FgAbGroup: zero factors must come last");
        if (f < 2) throw InputError("FgAbGroup: torsion factors must be at least 2");
        if (prev != 0 && f % prev != 0) throw InputError("FgAbGroup: factors must form a divisibility chain");
        prev = f;
    }
    return FgAbGroup{std::move(factors)};
}

FgAbGroup FgAbGroup::free(int n) { return FgAbGroup{std::vector<std::int64_t>(n, 0)}; }

FgAbGroup FgAbGroup::cyclic(std::int64_t m) {
    if (m == 0) return free(1);
    if (m == 1) return zero();
    return make({m});
}

Presented Presented::make(int ambient, Lattice numerator, Lattice denominator) {
    if (numerator.ambient != ambient || denominator.ambient != ambient)
        throw InputError("Presented: ambient mismatch");
    if (!lattice_subset(denominator, numerator))
        throw CheckError("Presented: denominator not contained in numerator");
    Presented p;
    p.ambient = ambient;
    p.numerator = numerator;
    p.denominator = denominator;
    p.zbasis_ = numerator.gens;
    int z = p.zbasis_.cols;

    Mat w(z, denominator.gens.cols);
    for (int j = 0; j < denominator.gens.cols; ++j) {
        std::vector<std::int64_t> col(ambient);
        for (int i = 0; i < ambient; ++i) col[i] = denominator.gens.at(i, j);
        auto x = solve(p.zbasis_, col);
        if (!x) throw CheckError("Presented: denominator generator escapes numerator");
        for (int i = 0; i < z; ++i) w.at(i, j) = (*x)[i];
    }
    SnfResult s = smith_normal_form(w);
    p.u_ = s.u;
    // invert the unimodular row transform
    p.uinv_ = Mat(z, z);
    for (int j = 0; j < z; ++j) {
        std::vector<std::int64_t> e(z, 0);
        e[j] = 1;
        auto x = solve(s.u, e);
        if (!x) throw CheckError("Presented: row transform not invertible");
        for (int i = 0; i < z; ++i) p.uinv_.at(i, j) = (*x)[i];
    }
    p.diag_.assign(z, 0);
    for (int i = 0; i < std::min(z, w.cols); ++i) p.diag_[i] = s.d.at(i, i);

    std::vector<std::int64_t> factors;
    for (int i = 0; i < z; ++i)
        if (p.diag_[i] != 1) {
            p.keep_.push_back(i);
            factors.push_back(p.diag_[i]);
        }
    p.group = FgAbGroup::make(std::move(factors));
    p.gen_reps = Mat(ambient, static_cast<int>(p.keep_.size()));
    for (std::size_t jj = 0; jj < p.keep_.size(); ++jj)
        for (int i = 0; i < ambient; ++i) {
            std::int64_t acc = 0;
            for (int t = 0; t < z; ++t) acc += p.zbasis_.at(i, t) * p.uinv_.at(t, p.keep_[jj]);
            p.gen_reps.at(i, static_cast<int>(jj)) = acc;
        }
    return p;
}

std::vector<std::int64_t> Presented::to_coords(const std::vector<std::int64_t>& v) const {
    std::optional<std::vector<std::int64_t>> y;
    if (zbasis_.cols > 0) {
        y = solve(zbasis_, v);
    } else if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) {
        y = std::vector<std::int64_t>{};
    }
    if (!y) throw CheckError("Presented::to_coords: vector is not in the numerator");
    std::vector<std::int64_t> yy = mat_apply(u_, *y);
    std::vector<std::int64_t> out(keep_.size(), 0);
    for (std::size_t jj = 0; jj < keep_.size(); ++jj) {
        std::int64_t c = yy[keep_[jj]];
        std::int64_t d = diag_[keep_[jj]];
        if (d != 0) {
            c %= d;
            if (c < 0) c += d;
        }
        out[jj] = c;
    }
    return out;
}

std::vector<std::int64_t> Presented::rep_of(const std::vector<std::int64_t>& coords) const {
    return mat_apply(gen_reps, coords);
}

bool Presented::contains(const std::vector<std::int64_t>& v) const { return lattice_contains(numerator, v); }

bool relation_compatible(const FgAbGroup& src, const FgAbGroup& dst, const Mat& m) {
    if (m.rows != dst.rank() || m.cols != src.rank()) return false;
    for (int j = 0; j < src.rank(); ++j) {
        std::int64_t d = src.invariant_factors[j];
        if (d == 0) continue;
        for (int i = 0; i < dst.rank(); ++i) {
            std::int64_t t = dst.invariant_factors[i];
            std::int64_t v = d * m.at(i, j);
            if (t == 0 ? v != 0 : v % t != 0) return false;
        }
    }
    return true;
}

namespace {

// normalize matrix entries modulo target torsion
Mat reduce_mod_target(const FgAbGroup& dst, Mat m) {
    for (int i = 0; i < m.rows; ++i) {
        std::int64_t t = dst.invariant_factors[i];
        if (t == 0) continue;
        for (int j = 0; j < m.cols; ++j) {
            m.at(i, j) %= t;
            if (m.at(i, j) < 0) m.at(i, j) += t;
        }
    }
    return m;
}

}  // namespace

AbMorphism AbMorphism::make(FgAbGroup src, FgAbGroup dst, Mat m) {
    if (!relation_compatible(src, dst, m)) throw InputError("AbMorphism: matrix is not relation-compatible");
    Mat reduced = reduce_mod_target(dst, std::move(m));
    return AbMorphism{std::move(src), std::move(dst), std::move(reduced)};
}

AbMorphism AbMorphism::zero(const FgAbGroup& src, const FgAbGroup& dst) {
    return AbMorphism{src, dst, Mat(dst.rank(), src.rank())};
}

AbMorphism AbMorphism::identity(const FgAbGroup& g) { return AbMorphism{g, g, Mat::identity(g.rank())}; }

AbMorphism ab_compose(const AbMorphism& g, const AbMorphism& f) {
    if (!(g.source == f.target)) throw InputError("ab_compose: objects do not match");
    return AbMorphism::make(f.source, g.target, mat_mul(g.matrix, f.matrix));
}

bool ab_equal(const AbMorphism& f, const AbMorphism& g) {
    if (!(f.source == g.source) || !(f.target == g.target)) return false;
    Lattice rel = f.target.relation_lattice();
    for (int j = 0; j < f.matrix.cols; ++j) {
        std::vector<std::int64_t> diff(f.matrix.rows);
        for (int i = 0; i < f.matrix.rows; ++i) diff[i] = f.matrix.at(i, j) - g.matrix.at(i, j);
        if (!lattice_contains(rel, diff)) return false;
    }
    return true;
}

ChainComplex ChainComplex::make(std::vector<FgAbGroup> groups, std::vector<Mat> boundaries) {
    ChainComplex c{std::move(groups), std::move(boundaries)};
    if (c.groups.empty()) throw InputError("ChainComplex: needs at least degree 0");
    if (c.boundaries.size() != c.groups.size()) throw InputError("ChainComplex: boundaries size mismatch");
    for (int n = 1; n <= c.length(); ++n) {
        if (!relation_compatible(c.groups[n], c.groups[n - 1], c.boundaries[n]))
            throw InputError("ChainComplex: boundary is not a morphism at degree " + std::to_string(n));
        c.boundaries[n] = reduce_mod_target(c.groups[n - 1], std::move(c.boundaries[n]));
    }
    for (int n = 2; n <= c.length(); ++n) {
        Mat dd = mat_mul(c.boundaries[n - 1], c.boundaries[n]);
        Lattice rel = c.groups[n - 2].relation_lattice();
        for (int j = 0; j < dd.cols; ++j) {
            std::vector<std::int64_t> col(dd.rows);
            for (int i = 0; i < dd.rows; ++i) col[i] = dd.at(i, j);
            if (!lattice_contains(rel, col)) throw InputError("ChainComplex: d o d != 0 at degree " + std::to_string(n));
        }
    }
    return c;
}

ChainComplex ChainComplex::zero_complex(int length) {
    ChainComplex c;
    c.groups.assign(length + 1, FgAbGroup::zero());
    c.boundaries.assign(length + 1, Mat());
    return c;
}

ChainMap ChainMap::make(ChainComplex src, ChainComplex dst, std::vector<Mat> maps) {
    if (src.length() != dst.length()) throw InputError("ChainMap: length mismatch");
    if (static_cast<int>(maps.size()) != src.length() + 1) throw InputError("ChainMap: wrong number of levels");
    ChainMap f{std::move(src), std::move(dst), std::move(maps)};
    for (int n = 0; n <= f.source.length(); ++n) {
        if (!relation_compatible(f.source.groups[n], f.target.groups[n], f.maps[n]))
            throw InputError("ChainMap: level " + std::to_string(n) + " not a morphism");
        f.maps[n] = reduce_mod_target(f.target.groups[n], std::move(f.maps[n]));
    }
    for (int n = 1; n <= f.source.length(); ++n) {
        Mat lhs = mat_mul(f.maps[n - 1], f.source.boundaries[n]);
        Mat rhs = mat_mul(f.target.boundaries[n], f.maps[n]);
        Lattice rel = f.target.groups[n - 1].relation_lattice();
        for (int j = 0; j < lhs.cols; ++j) {
            std::vector<std::int64_t> diff(lhs.rows);
            for (int i = 0; i < lhs.rows; ++i) diff[i] = lhs.at(i, j) - rhs.at(i, j);
            if (!lattice_contains(rel, diff))
                throw InputError("ChainMap: does not commute with boundaries at degree " + std::to_string(n));
        }
    }
    return f;
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::vector<Mat> maps;
    for (auto& g : c.groups) maps.push_back(Mat::identity(g.rank()));
    return ChainMap{c, c, std::move(maps)};
}

FgAbGroup homology(const ChainComplex& c, int n) {
    if (n < 0 || n > c.length()) throw InputError("homology: degree out of range");
    int k = c.groups[n].rank();
    Lattice z = n >= 1 ? lattice_preimage(c.boundaries[n], c.groups[n - 1].relation_lattice()) : Lattice::full(k);
    Lattice b = c.groups[n].relation_lattice();
    if (n < c.length()) b = lattice_sum(b, Lattice(k, c.boundaries[n + 1]));
    return FgAbGroup::make(quotient_invariants(z, b));
}

FgAbGroup homology_of_free(int middle_rank, const SparseMat& d_out, const SparseMat& d_in) {
    if (d_out.cols != middle_rank || d_in.rows != middle_rank) throw InputError("homology_of_free: dimension mismatch");
    SnfInvariants in = sparse_snf_invariants(d_in);
    SnfInvariants out = sparse_snf_invariants(d_out);
    int free = middle_rank - out.rank - in.rank;
    if (free < 0) throw CheckError("homology_of_free: negative free rank");
    std::vector<std::int64_t> factors;
    for (auto f : in.factors)
        if (f > 1) factors.push_back(f);
    factors.insert(factors.end(), free, 0);
    return FgAbGroup::make(std::move(factors));
}

DirectSum direct_sum(const std::vector<const FgAbGroup*>& parts) {
    int ambient = 0;
    for (auto* p : parts) ambient += p->rank();
    int nrel = 0;
    for (auto* p : parts) nrel += p->rank() - p->free_rank();
    Mat rels(ambient, nrel);
    int off = 0, col = 0;
    for (auto* p : parts) {
        for (int i = 0; i < p->rank(); ++i)
            if (p->invariant_factors[i] != 0) rels.at(off + i, col++) = p->invariant_factors[i];
        off += p->rank();
    }
    Presented pr = Presented::make(ambient, Lattice::full(ambient), Lattice(ambient, rels));
    DirectSum ds;
    ds.group = pr.group;
    off = 0;
    for (auto* p : parts) {
        Mat inj(ds.group.rank(), p->rank());
        for (int j = 0; j < p->rank(); ++j) {
            std::vector<std::int64_t> e(ambient, 0);
            e[off + j] = 1;
            auto coords = pr.to_coords(e);
            for (int i = 0; i < ds.group.rank(); ++i) inj.at(i, j) = coords[i];
        }
        Mat proj(p->rank(), ds.group.rank());
        for (int i = 0; i < p->rank(); ++i)
            for (int j = 0; j < ds.group.rank(); ++j) proj.at(i, j) = pr.gen_reps.at(off + i, j);
        ds.inject.push_back(std::move(inj));
        ds.project.push_back(std::move(proj));
        off += p->rank();
    }
    return ds;
}

ChainComplex mapping_cone(const ChainMap& f) {
    const ChainComplex& a = f.source;
    const ChainComplex& b = f.target;
    int len = std::max(a.length() + 1, b.length());
    auto a_group = [&](int n) { return n >= 0 && n <= a.length() ? a.groups[n] : FgAbGroup::zero(); };
    auto b_group = [&](int n) { return n >= 0 && n <= b.length() ? b.groups[n] : FgAbGroup::zero(); };

    std::vector<FgAbGroup> groups;
    std::vector<DirectSum> sums;
    for (int n = 0; n <= len; ++n) {
        FgAbGroup an1 = a_group(n - 1), bn = b_group(n);
        DirectSum ds = direct_sum({&an1, &bn});
        groups.push_back(ds.group);
        sums.push_back(std::move(ds));
    }
    std::vector<Mat> boundaries(len + 1);
    for (int n = 1; n <= len; ++n) {
        FgAbGroup an1 = a_group(n - 1), an2 = a_group(n - 2), bn = b_group(n), bn1 = b_group(n - 1);
        // (a, b) maps to (-d_a a, f a + d_b b)
        Mat da = (n - 1 >= 1 && n - 1 <= a.length()) ? a.boundaries[n - 1] : Mat(an2.rank(), an1.rank());
        Mat fm = (n - 1 <= a.length()) ? f.maps[n - 1] : Mat(bn1.rank(), an1.rank());
        Mat db = (n <= b.length()) ? b.boundaries[n] : Mat(bn1.rank(), bn.rank());
        Mat t1 = mat_mul(sums[n - 1].inject[0], mat_mul(mat_neg(da), sums[n].project[0]));
        Mat t2 = mat_mul(sums[n - 1].inject[1], mat_mul(fm, sums[n].project[0]));
        Mat t3 = mat_mul(sums[n - 1].inject[1], mat_mul(db, sums[n].project[1]));
        boundaries[n] = mat_add(mat_add(t1, t2), t3);
    }
    return ChainComplex::make(std::move(groups), std::move(boundaries));
}

Presented kernel_presentation(const ChainComplex& c, int n) {
    int k = c.groups[n].rank();
    Lattice num = n >= 1 ? lattice_preimage(c.boundaries[n], c.groups[n - 1].relation_lattice()) : Lattice::full(k);
    return Presented::make(k, num, c.groups[n].relation_lattice());
}

namespace {

Mat relation_diag(const FgAbGroup& g) {
    int nz = g.rank() - g.free_rank();
    Mat m(g.rank(), nz);
    int col = 0;
    for (int i = 0; i < g.rank(); ++i)
        if (g.invariant_factors[i] != 0) m.at(i, col++) = g.invariant_factors[i];
    return m;
}

}  // namespace

bool has_section(const FgAbGroup& src, const FgAbGroup& dst, const Mat& g) {
    if (g.rows != dst.rank() || g.cols != src.rank()) throw InputError("has_section: shape mismatch");
    Mat rdst = relation_diag(dst);
    Mat rsrc = relation_diag(src);
    for (int j = 0; j < dst.rank(); ++j) {
        std::int64_t dj = dst.invariant_factors[j];
        int rows = dst.rank() + (dj != 0 ? src.rank() : 0);
        int cols = src.rank() + rdst.cols + (dj != 0 ? rsrc.cols : 0);
        Mat sys(rows, cols);
        std::vector<std::int64_t> rhs(rows, 0);
        for (int i = 0; i < dst.rank(); ++i) {
            for (int c = 0; c < src.rank(); ++c) sys.at(i, c) = g.at(i, c);
            for (int c = 0; c < rdst.cols; ++c) sys.at(i, src.rank() + c) = rdst.at(i, c);
        }
        rhs[j] = 1;
        if (dj != 0)
            for (int i = 0; i < src.rank(); ++i) {
                sys.at(dst.rank() + i, i) = dj;
                for (int c = 0; c < rsrc.cols; ++c) sys.at(dst.rank() + i, src.rank() + rdst.cols + c) = rsrc.at(i, c);
            }
        if (!solve(sys, rhs)) return false;
    }
    return true;
}

bool has_retraction(const FgAbGroup& src, const FgAbGroup& dst, const Mat& g) {
    if (g.rows != dst.rank() || g.cols != src.rank()) throw InputError("has_retraction: shape mismatch");
    int sr = src.rank(), dr = dst.rank();
    Mat rsrc = relation_diag(src);
    int nvar = sr * dr;
    std::vector<int> tor_cols;
    for (int j = 0; j < dr; ++j)
        if (dst.invariant_factors[j] != 0) tor_cols.push_back(j);
    int blocks = sr + static_cast<int>(tor_cols.size());
    int eq_rows = sr * sr + sr * static_cast<int>(tor_cols.size());
    int nslack = blocks * rsrc.cols;
    Mat sys(eq_rows, nvar + nslack);
    std::vector<std::int64_t> rhs(eq_rows, 0);
    auto var = [&](int i, int j) { return i * dr + j; };
    int row = 0, slack_off = nvar;
    for (int c = 0; c < sr; ++c) {
        for (int i = 0; i < sr; ++i, ++row) {
            for (int j = 0; j < dr; ++j) sys.at(row, var(i, j)) = g.at(j, c);
            for (int t = 0; t < rsrc.cols; ++t) sys.at(row, slack_off + t) = rsrc.at(i, t);
            rhs[row] = i == c ? 1 : 0;
        }
        slack_off += rsrc.cols;
    }
    for (int jc : tor_cols) {
        std::int64_t tj = dst.invariant_factors[jc];
        for (int i = 0; i < sr; ++i, ++row) {
            sys.at(row, var(i, jc)) = tj;
            for (int t = 0; t < rsrc.cols; ++t) sys.at(row, slack_off + t) = rsrc.at(i, t);
        }
        slack_off += rsrc.cols;
    }
    return solve(sys, rhs).has_value();
}

bool is_exact(const ChainComplex& c, ExactStructure structure) {
    for (int n = 0; n <= c.length(); ++n) {
        Presented k = kernel_presentation(c, n);
        if (structure == ExactStructure::regular) {
            Lattice img = c.groups[n].relation_lattice();
            if (n < c.length()) img = lattice_sum(img, Lattice(c.groups[n].rank(), c.boundaries[n + 1]));
            if (!lattice_subset(k.numerator, img)) return false;
        } else {
            FgAbGroup src = n < c.length() ? c.groups[n + 1] : FgAbGroup::zero();
            Mat induced(k.group.rank(), src.rank());
            if (n < c.length())
                for (int j = 0; j < src.rank(); ++j) {
                    std::vector<std::int64_t> img(c.groups[n].rank());
                    for (int i = 0; i < c.groups[n].rank(); ++i) img[i] = c.boundaries[n + 1].at(i, j);
                    if (!k.contains(img)) throw CheckError("is_exact: boundary image escapes the kernel");
                    auto coords = k.to_coords(img);
                    for (int i = 0; i < k.group.rank(); ++i) induced.at(i, j) = coords[i];
                }
            if (!has_section(src, k.group, induced)) return false;
        }
    }
    return true;
}

SimplicialAbGroup SimplicialAbGroup::make(int dim, std::vector<FgAbGroup> levels, std::vector<std::vector<Mat>> faces,
                                          std::vector<std::vector<Mat>> degens) {
    SimplicialAbGroup a{dim, std::move(levels), std::move(faces), std::move(degens)};
    auto report = validate_simplicial_ab(a);
    if (!report.empty()) throw InputError("SimplicialAbGroup: " + report.front());
    return a;
}

namespace {

bool mats_equal_mod(const FgAbGroup& target, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    Lattice rel = target.relation_lattice();
    for (int j = 0; j < x.cols; ++j) {
        std::vector<std::int64_t> diff(x.rows);
        for (int i = 0; i < x.rows; ++i) diff[i] = x.at(i, j) - y.at(i, j);
        if (!lattice_contains(rel, diff)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::string> validate_simplicial_ab(const SimplicialAbGroup& a) {
    std::vector<std::string> out;
    int d = a.dim;
    if (static_cast<int>(a.levels.size()) != d + 1 || static_cast<int>(a.faces.size()) != d + 1 ||
        static_cast<int>(a.degens.size()) != d + 1) {
        out.push_back("level or structure array size mismatch");
        return out;
    }
    for (int n = 1; n <= d; ++n) {
        if (static_cast<int>(a.faces[n].size()) != n + 1) {
            out.push_back("face count wrong at level " + std::to_string(n));
            return out;
        }
        for (int i = 0; i <= n; ++i)
            if (!relation_compatible(a.levels[n], a.levels[n - 1], a.faces[n][i]))
                out.push_back("face " + std::to_string(n) + "," + std::to_string(i) + " not a morphism");
    }
    for (int n = 0; n + 1 <= d; ++n) {
        if (static_cast<int>(a.degens[n].size()) != n + 1) {
            out.push_back("degeneracy count wrong at level " + std::to_string(n));
            return out;
        }
        for (int i = 0; i <= n; ++i)
            if (!relation_compatible(a.levels[n], a.levels[n + 1], a.degens[n][i]))
                out.push_back("degeneracy " + std::to_string(n) + "," + std::to_string(i) + " not a morphism");
    }
    if (!out.empty()) return out;

    auto face = [&](int n, int i) -> const Mat& { return a.faces[n][i]; };
    auto degen = [&](int n, int i) -> const Mat& { return a.degens[n][i]; };
    for (int n = 2; n <= d; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!mats_equal_mod(a.levels[n - 2], mat_mul(face(n - 1, i), face(n, j)),
                                    mat_mul(face(n - 1, j - 1), face(n, i))))
                    out.push_back("d_i d_j fails at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j));
    for (int n = 0; n + 2 <= d; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if (!mats_equal_mod(a.levels[n + 2], mat_mul(degen(n + 1, i), degen(n, j)),
                                    mat_mul(degen(n + 1, j + 1), degen(n, i))))
                    out.push_back("s_i s_j fails at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j));
    for (int n = 0; n + 1 <= d; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Mat lhs = mat_mul(face(n + 1, i), degen(n, j));
                Mat rhs;
                if (i == j || i == j + 1)
                    rhs = Mat::identity(a.levels[n].rank());
                else if (i < j)
                    rhs = mat_mul(degen(n - 1, j - 1), face(n, i));
                else
                    rhs = mat_mul(degen(n - 1, j), face(n, i - 1));
                if (!mats_equal_mod(a.levels[n], lhs, rhs))
                    out.push_back("d_i s_j fails at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j));
            }
    return out;
}

ChainComplex dold_kan_N(const SimplicialAbGroup& a) {
    std::vector<Presented> pres;
    for (int n = 0; n <= a.dim; ++n) {
        int k = a.levels[n].rank();
        Lattice num = Lattice::full(k);
        for (int i = 1; i <= n; ++i)
            num = lattice_intersect(num, lattice_preimage(a.faces[n][i], a.levels[n - 1].relation_lattice()));
        pres.push_back(Presented::make(k, num, a.levels[n].relation_lattice()));
    }
    std::vector<FgAbGroup> groups;
    for (auto& p : pres) groups.push_back(p.group);
    std::vector<Mat> boundaries(a.dim + 1);
    for (int n = 1; n <= a.dim; ++n) {
        Mat b(pres[n - 1].group.rank(), pres[n].group.rank());
        for (int j = 0; j < pres[n].group.rank(); ++j) {
            std::vector<std::int64_t> rep(pres[n].ambient);
            for (int i = 0; i < pres[n].ambient; ++i) rep[i] = pres[n].gen_reps.at(i, j);
            auto img = mat_apply(a.faces[n][0], rep);
            if (!pres[n - 1].contains(img)) throw CheckError("dold_kan_N: d_0 image escapes the Moore subgroup");
            auto coords = pres[n - 1].to_coords(img);
            for (int i = 0; i < pres[n - 1].group.rank(); ++i) b.at(i, j) = coords[i];
        }
        boundaries[n] = std::move(b);
    }
    return ChainComplex::make(std::move(groups), std::move(boundaries));
}

std::vector<std::vector<int>> monotone_surjections(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k < 0) return out;
    if (k == 0) {
        out.push_back(std::vector<int>(n + 1, 0));
        return out;
    }
    std::vector<int> pos(k);  // which of the n steps increment
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<int> seq(n + 1);
    while (true) {
        seq[0] = 0;
        std::size_t pi = 0;
        for (int i = 0; i < n; ++i) {
            int inc = (pi < pos.size() && pos[pi] == i) ? 1 : 0;
            if (inc) ++pi;
            seq[i + 1] = seq[i] + inc;
        }
        out.push_back(seq);
        int i = k - 1;
        while (i >= 0 && pos[i] == n - k + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
    return out;
}

SimplicialAbGroup dold_kan_Gamma(const ChainComplex& b, int dim) {
    struct GammaLevel {
        std::vector<std::pair<std::vector<int>, int>> summands;
        DirectSum sum;
    };
    std::vector<GammaLevel> levels(dim + 1);
    for (int n = 0; n <= dim; ++n) {
        std::vector<const FgAbGroup*> parts;
        for (int k = 0; k <= std::min(n, b.length()); ++k)
            for (auto& eta : monotone_surjections(n, k)) {
                levels[n].summands.emplace_back(eta, k);
                parts.push_back(&b.groups[k]);
            }
        levels[n].sum = direct_sum(parts);
    }
    auto summand_index = [&](int m, const std::vector<int>& eta) {
        for (std::size_t s = 0; s < levels[m].summands.size(); ++s)
            if (levels[m].summands[s].first == eta) return static_cast<int>(s);
        return -1;
    };
    auto operator_matrix = [&](int n, int m, const std::vector<int>& alpha) {
        Mat total(levels[m].sum.group.rank(), levels[n].sum.group.rank());
        for (std::size_t s = 0; s < levels[n].summands.size(); ++s) {
            auto& [eta, k] = levels[n].summands[s];
            std::vector<int> theta(m + 1);
            for (int t = 0; t <= m; ++t) theta[t] = eta[alpha[t]];
            std::vector<int> vals;
            for (int v : theta)
                if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
            std::sort(vals.begin(), vals.end());
            int kp = static_cast<int>(vals.size()) - 1;
            std::vector<int> etap(m + 1);
            for (int t = 0; t <= m; ++t)
                etap[t] = static_cast<int>(std::find(vals.begin(), vals.end(), theta[t]) - vals.begin());
            Mat block;
            int target_k = -1;
            if (kp == k) {
                block = Mat::identity(b.groups[k].rank());
                target_k = k;
            } else if (kp == k - 1) {
                bool misses_zero_only = true;
                for (int t = 0; t <= kp; ++t)
                    if (vals[t] != t + 1) misses_zero_only = false;
                if (misses_zero_only) {
                    block = b.boundaries[k];
                    target_k = k - 1;
                }
            }
            if (target_k < 0) continue;
            int sp = summand_index(m, etap);
            if (sp < 0 || levels[m].summands[sp].second != target_k)
                throw CheckError("dold_kan_Gamma: summand bookkeeping failed");
            total = mat_add(total, mat_mul(levels[m].sum.inject[sp], mat_mul(block, levels[n].sum.project[s])));
        }
        return total;
    };

    std::vector<FgAbGroup> out_levels;
    for (auto& l : levels) out_levels.push_back(l.sum.group);
    std::vector<std::vector<Mat>> faces(dim + 1), degens(dim + 1);
    for (int n = 1; n <= dim; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<int> delta(n);  // injection [n-1] -> [n] missing i
            for (int t = 0; t < n; ++t) delta[t] = t < i ? t : t + 1;
            faces[n].push_back(operator_matrix(n, n - 1, delta));
        }
    for (int n = 0; n + 1 <= dim; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<int> sigma(n + 2);  // surjection [n+1] -> [n] repeating i
            for (int t = 0; t <= n + 1; ++t) sigma[t] = t <= i ? t : t - 1;
            degens[n].push_back(operator_matrix(n, n + 1, sigma));
        }
    return SimplicialAbGroup::make(dim, std::move(out_levels), std::move(faces), std::move(degens));
}

ChainClass chain_class(const ChainMap& f) {
    ChainClass out;
    out.fibration = true;
    out.cofibration = true;
    for (int n = 0; n <= f.source.length(); ++n) {
        const FgAbGroup& a = f.source.groups[n];
        const FgAbGroup& b = f.target.groups[n];
        if (n >= 1 && !has_section(a, b, f.maps[n])) out.fibration = false;
        if (out.cofibration && !has_retraction(a, b, f.maps[n])) out.cofibration = false;
        if (out.cofibration) {
            Lattice img = lattice_sum(Lattice(b.rank(), f.maps[n]), b.relation_lattice());
            for (auto v : quotient_invariants(Lattice::full(b.rank()), img))
                if (v != 0) out.cofibration = false;
        }
    }
    out.weak_equiv = is_exact(mapping_cone(f), ExactStructure::split);
    return out;
}

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g) {
    os << "[";
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) os << (i ? "," : "") << g.invariant_factors[i];
    return os << "]";
}

}  // namespace kanforge
