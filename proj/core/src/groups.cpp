#include "kanforge/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kanforge/intlinalg.hpp"

namespace kanforge {

int FinGroup::inv(int a) const {
    for (int b = 0; b < order; ++b)
        if (mul(a, b) == identity) return b;
    throw CheckError("FinGroup::inv: no inverse");
}

int FinGroup::pow(int a, int n) const {
    int r = identity;
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

void validate_group(const FinGroup& g) {
    if (g.order <= 0) throw InputError("group: order must be positive");
    if (static_cast<int>(g.table.size()) != g.order * g.order) throw InputError("group: bad table size");
    if (g.identity < 0 || g.identity >= g.order) throw InputError("group: identity out of range");
    for (int v : g.table)
        if (v < 0 || v >= g.order) throw InputError("group: table entry out of range");
    for (int a = 0; a < g.order; ++a) {
        if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) throw InputError("group: identity law fails");
        bool has_inv = false;
        for (int b = 0; b < g.order; ++b)
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) has_inv = true;
        if (!has_inv) throw InputError("group: missing inverse");
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw InputError("group: associativity fails");
}

FinGroup FinGroup::make(int order, std::vector<int> table, int identity) {
    FinGroup g{order, std::move(table), identity};
    validate_group(g);
    return g;
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::cyclic(int m) {
    if (m <= 0) throw InputError("cyclic: order must be positive");
    FinGroup g;
    g.order = m;
    g.identity = 0;
    g.table.resize(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) g.table[a * m + b] = (a + b) % m;
    return g;
}

FinGroup FinGroup::symmetric3() {
    // permutations of {0,1,2} in lexicographic one-line order
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    FinGroup g;
    g.order = 6;
    g.identity = 0;
    g.table.resize(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            g.table[a * 6 + b] = index_of(comp);
        }
    return g;
}

FinGroup FinGroup::quaternion8() {
    // elements 2*axis + sign with axis 0:1, 1:i, 2:j, 3:k and sign 1 for negated
    auto sign = [](int x) { return x & 1; };
    auto axis = [](int x) { return x >> 1; };
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // extra sign of axis(a)*axis(b): i*i = j*j = k*k = -1, i*j = k, j*i = -k,
    // j*k = i, k*j = -i, k*i = j, i*k = -j
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    FinGroup g;
    g.order = 8;
    g.identity = 0;
    g.table.resize(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int axr = ax[axis(a)][axis(b)];
            int sgr = (sign(a) + sign(b) + sg[axis(a)][axis(b)]) & 1;
            g.table[a * 8 + b] = axr * 2 + sgr;
        }
    validate_group(g);
    return g;
}

FinGroup FinGroup::direct_product(const FinGroup& g, const FinGroup& h) {
    FinGroup p;
    p.order = g.order * h.order;
    p.identity = g.identity * h.order + h.identity;
    p.table.resize(static_cast<std::size_t>(p.order) * p.order);
    for (int a = 0; a < p.order; ++a)
        for (int b = 0; b < p.order; ++b) {
            int ga = a / h.order, ha = a % h.order;
            int gb = b / h.order, hb = b % h.order;
            p.table[a * p.order + b] = g.mul(ga, gb) * h.order + h.mul(ha, hb);
        }
    return p;
}

bool is_homomorphism(const FinGroup& src, const FinGroup& dst, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != src.order) return false;
    for (int v : f)
        if (v < 0 || v >= dst.order) return false;
    for (int a = 0; a < src.order; ++a)
        for (int b = 0; b < src.order; ++b)
            if (f[src.mul(a, b)] != dst.mul(f[a], f[b])) return false;
    return true;
}

bool is_abelian(const FinGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < a; ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

std::vector<int> generated_subgroup(const FinGroup& g, const std::vector<int>& gens) {
    std::set<int> s{g.identity};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int x : gens) {
                if (s.insert(g.mul(a, x)).second) grew = true;
                if (s.insert(g.mul(a, g.inv(x))).second) grew = true;
            }
    }
    return {s.begin(), s.end()};
}

bool is_normal(const FinGroup& g, const std::vector<int>& subgroup) {
    std::set<int> s(subgroup.begin(), subgroup.end());
    for (int x : subgroup)
        for (int a = 0; a < g.order; ++a)
            if (!s.count(g.mul(g.mul(a, x), g.inv(a)))) return false;
    return true;
}

QuotientGroup quotient_group(const FinGroup& g, const std::vector<int>& normal_subgroup) {
    if (!is_normal(g, normal_subgroup)) throw InputError("quotient_group: subgroup is not normal");
    std::vector<int> proj(g.order, -1);
    int classes = 0;
    for (int a = 0; a < g.order; ++a) {
        if (proj[a] >= 0) continue;
        int c = classes++;
        for (int x : normal_subgroup) proj[g.mul(a, x)] = c;
    }
    std::vector<int> rep(classes, -1);
    for (int a = g.order - 1; a >= 0; --a) rep[proj[a]] = a;
    FinGroup q;
    q.order = classes;
    q.identity = proj[g.identity];
    q.table.resize(static_cast<std::size_t>(classes) * classes);
    for (int a = 0; a < classes; ++a)
        for (int b = 0; b < classes; ++b) q.table[a * classes + b] = proj[g.mul(rep[a], rep[b])];
    QuotientGroup out{std::move(q), std::move(proj)};
    validate_group(out.group);
    return out;
}

FinGroup subquotient_group(const FinGroup& b, const std::vector<int>& kernel_elems,
                           const std::vector<int>& image_elems) {
    // restrict b to the kernel subgroup, then quotient by the image
    std::vector<int> idx(b.order, -1);
    for (std::size_t i = 0; i < kernel_elems.size(); ++i) idx[kernel_elems[i]] = static_cast<int>(i);
    FinGroup k;
    k.order = static_cast<int>(kernel_elems.size());
    k.identity = idx[b.identity];
    if (k.identity < 0) throw InputError("subquotient_group: kernel misses the identity");
    k.table.resize(static_cast<std::size_t>(k.order) * k.order);
    for (int a = 0; a < k.order; ++a)
        for (int c = 0; c < k.order; ++c) {
            int prod = b.mul(kernel_elems[a], kernel_elems[c]);
            if (idx[prod] < 0) throw InputError("subquotient_group: kernel is not closed");
            k.table[a * k.order + c] = idx[prod];
        }
    std::vector<int> img;
    for (int e : image_elems) {
        if (idx[e] < 0) throw InputError("subquotient_group: image not contained in kernel");
        img.push_back(idx[e]);
    }
    return quotient_group(k, img).group;
}

std::vector<std::int64_t> abelianization_invariants(const FinGroup& g) {
    // Z^order modulo the relations e_a + e_b - e_{ab}
    Mat rel(g.order, g.order * g.order);
    int col = 0;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b, ++col) {
            rel.at(a, col) += 1;
            rel.at(b, col) += 1;
            rel.at(g.mul(a, b), col) -= 1;
        }
    return quotient_invariants(Lattice::full(g.order), Lattice(g.order, rel));
}

bool is_cyclic_of_order(const FinGroup& g, int m) {
    if (g.order != m) return false;
    for (int a = 0; a < g.order; ++a) {
        int x = a, n = 1;
        while (x != g.identity) {
            x = g.mul(x, a);
            ++n;
        }
        if (n == m) return true;
    }
    return m == 1;
}

namespace {

bool iso_search(const FinGroup& g, const FinGroup& h, std::vector<int>& f, int next) {
    if (next == g.order) return is_homomorphism(g, h, f);
    std::vector<bool> used(h.order, false);
    for (int a = 0; a < next; ++a) used[f[a]] = true;
    for (int cand = 0; cand < h.order; ++cand) {
        if (used[cand]) continue;
        f[next] = cand;
        bool ok = true;
        for (int a = 0; a <= next && ok; ++a)
            for (int b = 0; b <= next && ok; ++b) {
                int p = g.mul(a, b);
                if (p <= next && f[p] != h.mul(f[a], f[b])) ok = false;
            }
        if (ok && iso_search(g, h, f, next + 1)) return true;
    }
    f[next] = -1;
    return false;
}

}  // namespace

bool groups_isomorphic(const FinGroup& g, const FinGroup& h) {
    if (g.order != h.order) return false;
    std::vector<int> f(g.order, -1);
    return iso_search(g, h, f, 0);
}

}  // namespace kanforge
