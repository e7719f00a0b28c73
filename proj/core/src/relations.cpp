#include "kanforge/relations.hpp"

#include <bit>
#include <numeric>

namespace kanforge {

namespace {

constexpr int kMaxCarrier = 64;

void check_sizes(int src, int dst) {
    if (src < 0 || dst < 0) throw InputError("Relation: negative carrier size");
    if (src > kMaxCarrier || dst > kMaxCarrier) throw InputError("Relation: carrier larger than 64");
}

std::uint64_t row_mask(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }

}  // namespace

Relation::Relation(int src, int dst) : src_size(src), dst_size(dst), rows(src, 0) { check_sizes(src, dst); }

void Relation::set(int x, int y, bool v) {
    if (x < 0 || x >= src_size || y < 0 || y >= dst_size) throw InputError("Relation::set: index out of range");
    if (v)
        rows[x] |= 1ull << y;
    else
        rows[x] &= ~(1ull << y);
}

Relation Relation::identity(int n) {
    Relation r(n, n);
    for (int i = 0; i < n; ++i) r.rows[i] = 1ull << i;
    return r;
}

Relation Relation::full(int src, int dst) {
    Relation r(src, dst);
    for (int i = 0; i < src; ++i) r.rows[i] = row_mask(dst);
    return r;
}

Relation Relation::graph(const std::vector<int>& f, int dst) {
    Relation r(static_cast<int>(f.size()), dst);
    for (std::size_t i = 0; i < f.size(); ++i) r.set(static_cast<int>(i), f[i]);
    return r;
}

Relation compose(const Relation& s, const Relation& r) {
    if (r.dst_size != s.src_size) throw InputError("compose: dimension mismatch");
    Relation out(r.src_size, s.dst_size);
    for (int x = 0; x < r.src_size; ++x) {
        std::uint64_t mid = r.rows[x];
        std::uint64_t acc = 0;
        while (mid) {
            int y = std::countr_zero(mid);
            mid &= mid - 1;
            acc |= s.rows[y];
        }
        out.rows[x] = acc;
    }
    return out;
}

Relation converse(const Relation& r) {
    Relation out(r.dst_size, r.src_size);
    for (int x = 0; x < r.src_size; ++x)
        for (int y = 0; y < r.dst_size; ++y)
            if (r.get(x, y)) out.set(y, x);
    return out;
}

bool leq(const Relation& r, const Relation& s) {
    if (r.src_size != s.src_size || r.dst_size != s.dst_size) throw InputError("leq: shape mismatch");
    for (int x = 0; x < r.src_size; ++x)
        if (r.rows[x] & ~s.rows[x]) return false;
    return true;
}

Relation rel_union(const Relation& r, const Relation& s) {
    if (r.src_size != s.src_size || r.dst_size != s.dst_size) throw InputError("rel_union: shape mismatch");
    Relation out = r;
    for (int x = 0; x < r.src_size; ++x) out.rows[x] |= s.rows[x];
    return out;
}

bool is_graph(const Relation& r) {
    Relation conv = converse(r);
    return leq(Relation::identity(r.src_size), compose(conv, r)) &&
           leq(compose(r, conv), Relation::identity(r.dst_size));
}

std::vector<int> graph_function(const Relation& r) {
    if (!is_graph(r)) throw InputError("graph_function: relation is not a graph");
    std::vector<int> f(r.src_size);
    for (int x = 0; x < r.src_size; ++x) f[x] = std::countr_zero(r.rows[x]);
    return f;
}

bool is_equivalence(const Relation& r) {
    if (r.src_size != r.dst_size) throw InputError("is_equivalence: relation is not square");
    return leq(Relation::identity(r.src_size), r) && leq(compose(r, converse(r)), r);
}

Relation generated_equivalence(const Relation& r) {
    if (r.src_size != r.dst_size) throw InputError("generated_equivalence: relation is not square");
    int n = r.src_size;
    // union-find over the symmetrized relation
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r.get(x, y)) {
                int a = find(x), b = find(y);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    Relation out(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (find(x) == find(y)) out.set(x, y);
    return out;
}

Decomposition canonical_decomposition(const Relation& r) {
    Decomposition d;
    for (int x = 0; x < r.src_size; ++x)
        for (int y = 0; y < r.dst_size; ++y)
            if (r.get(x, y)) {
                d.p.push_back(x);
                d.q.push_back(y);
                ++d.z_size;
            }
    return d;
}

ExObject ExObject::make(int carrier, Relation rel) {
    if (rel.src_size != carrier || rel.dst_size != carrier)
        throw InputError("ExObject: relation shape does not match carrier");
    if (!is_equivalence(rel)) throw InputError("ExObject: relation is not an equivalence relation");
    return ExObject{carrier, std::move(rel)};
}

ExObject ExObject::discrete(int carrier) { return ExObject{carrier, Relation::identity(carrier)}; }

ExMorphism ExMorphism::make(ExObject src, ExObject dst, Relation rel) {
    if (rel.src_size != src.carrier_size || rel.dst_size != dst.carrier_size)
        throw InputError("ExMorphism: relation shape mismatch");
    const Relation& r = src.rel;
    const Relation& s = dst.rel;
    if (compose(s, rel) != rel || compose(rel, r) != rel)
        throw InputError("ExMorphism: Sf = f = fR fails");
    Relation conv = converse(rel);
    if (!leq(r, compose(conv, rel))) throw InputError("ExMorphism: R <= f°f fails");
    if (!leq(compose(rel, conv), s)) throw InputError("ExMorphism: ff° <= S fails");
    return ExMorphism{std::move(src), std::move(dst), std::move(rel)};
}

ExMorphism ExMorphism::identity(const ExObject& x) { return make(x, x, x.rel); }

ExMorphism ExMorphism::from_function(const ExObject& src, const ExObject& dst, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != src.carrier_size) throw InputError("ExMorphism::from_function: size mismatch");
    // the morphism is S composed with the graph of f
    Relation g = Relation::graph(f, dst.carrier_size);
    return make(src, dst, compose(dst.rel, g));
}

ExMorphism ex_compose(const ExMorphism& g, const ExMorphism& f) {
    if (g.source.carrier_size != f.target.carrier_size || g.source.rel != f.target.rel)
        throw InputError("ex_compose: objects do not match");
    return ExMorphism::make(f.source, g.target, compose(g.rel, f.rel));
}

MonoEpi ex_mono_epi(const ExMorphism& f) {
    Relation conv = converse(f.rel);
    MonoEpi r;
    r.is_mono = compose(conv, f.rel) == f.source.rel;
    r.is_regular_epi = compose(f.rel, conv) == f.target.rel;
    return r;
}

Quotient delta(const ExObject& x) {
    Quotient q;
    q.proj.assign(x.carrier_size, -1);
    for (int i = 0; i < x.carrier_size; ++i) {
        if (q.proj[i] >= 0) continue;
        int c = q.classes++;
        for (int j = i; j < x.carrier_size; ++j)
            if (x.rel.get(i, j)) q.proj[j] = c;
    }
    return q;
}

std::vector<int> delta_map(const ExMorphism& f) {
    // canonical decomposition of the morphism: E with projections p, q, and
    // the equivalence T = p°Rp n q°Sq on E
    Decomposition dec = canonical_decomposition(f.rel);
    Relation t(dec.z_size, dec.z_size);
    for (int a = 0; a < dec.z_size; ++a)
        for (int b = 0; b < dec.z_size; ++b)
            if (f.source.rel.get(dec.p[a], dec.p[b]) && f.target.rel.get(dec.q[a], dec.q[b])) t.set(a, b);
    if (!is_equivalence(t)) throw CheckError("delta_map: T is not an equivalence relation");

    Quotient qx = delta(f.source);
    Quotient qy = delta(f.target);
    Quotient qe = delta(ExObject{dec.z_size, t});

    // induced maps p', q' on the quotients
    std::vector<int> pprime(qe.classes, -1), qprime(qe.classes, -1);
    for (int a = 0; a < dec.z_size; ++a) {
        int ce = qe.proj[a];
        int px = qx.proj[dec.p[a]];
        int qy_ = qy.proj[dec.q[a]];
        if (pprime[ce] >= 0 && pprime[ce] != px) throw CheckError("delta_map: p' ill-defined");
        if (qprime[ce] >= 0 && qprime[ce] != qy_) throw CheckError("delta_map: q' ill-defined");
        pprime[ce] = px;
        qprime[ce] = qy_;
    }
    // p' must be a bijection
    if (qe.classes != qx.classes) throw CheckError("delta_map: p' is not a bijection");
    std::vector<int> inv(qx.classes, -1);
    for (int ce = 0; ce < qe.classes; ++ce) {
        if (pprime[ce] < 0 || inv[pprime[ce]] >= 0) throw CheckError("delta_map: p' is not a bijection");
        inv[pprime[ce]] = ce;
    }
    std::vector<int> out(qx.classes);
    for (int cx = 0; cx < qx.classes; ++cx) out[cx] = qprime[inv[cx]];
    return out;
}

std::vector<ExMorphism> enumerate_ex_morphisms(const ExObject& src, const ExObject& dst) {
    int bits = src.carrier_size * dst.carrier_size;
    if (bits > 30) throw BudgetError("enumerate_ex_morphisms: carrier too large for exhaustive enumeration");
    std::vector<ExMorphism> out;
    for (std::uint64_t code = 0; code < (1ull << bits); ++code) {
        Relation rel(src.carrier_size, dst.carrier_size);
        std::uint64_t c = code;
        for (int x = 0; x < src.carrier_size; ++x)
            for (int y = 0; y < dst.carrier_size; ++y) {
                if (c & 1) rel.set(x, y);
                c >>= 1;
            }
        try {
            out.push_back(ExMorphism::make(src, dst, std::move(rel)));
        } catch (const InputError&) {
        }
    }
    return out;
}

}  // namespace kanforge
