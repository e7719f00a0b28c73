#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <vector>

#include "kanforge/relations.hpp"

using namespace kanforge;

namespace {

// all relations on src x dst, by bit code
std::vector<Relation> all_relations(int src, int dst) {
    std::vector<Relation> out;
    int bits = src * dst;
    for (std::uint64_t code = 0; code < (1ull << bits); ++code) {
        Relation r(src, dst);
        std::uint64_t c = code;
        for (int x = 0; x < src; ++x)
            for (int y = 0; y < dst; ++y) {
                if (c & 1) r.set(x, y);
                c >>= 1;
            }
        out.push_back(std::move(r));
    }
    return out;
}

// all functions [0,src) -> [0,dst)
std::vector<std::vector<int>> all_functions(int src, int dst) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(src, 0);
    while (true) {
        out.push_back(f);
        int i = 0;
        while (i < src && ++f[i] == dst) f[i++] = 0;
        if (i == src) break;
    }
    if (src == 0) out.assign(1, {});
    return out;
}

bool reflexive(const Relation& r) {
    for (int x = 0; x < r.src_size; ++x)
        if (!r.get(x, x)) return false;
    return true;
}
bool symmetric(const Relation& r) {
    for (int x = 0; x < r.src_size; ++x)
        for (int y = 0; y < r.src_size; ++y)
            if (r.get(x, y) != r.get(y, x)) return false;
    return true;
}
bool transitive(const Relation& r) {
    for (int x = 0; x < r.src_size; ++x)
        for (int y = 0; y < r.src_size; ++y)
            for (int z = 0; z < r.src_size; ++z)
                if (r.get(x, y) && r.get(y, z) && !r.get(x, z)) return false;
    return true;
}

}  // namespace

TEST_CASE("composition basics") {
    for (auto& r : all_relations(2, 3)) {
        CHECK(compose(Relation::identity(3), r) == r);
        CHECK(compose(r, Relation::identity(2)) == r);
    }
    CHECK(compose(Relation(2, 2), Relation::full(2, 2)) == Relation(2, 2));

    // compose(graph g, graph f) = graph(g o f) over all functions on <= 3 elements
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (auto& f : all_functions(a, b))
                    for (auto& g : all_functions(b, c)) {
                        std::vector<int> gf(a);
                        for (int i = 0; i < a; ++i) gf[i] = g[f[i]];
                        CHECK(compose(Relation::graph(g, c), Relation::graph(f, b)) == Relation::graph(gf, c));
                    }
}

TEST_CASE("composition associativity on 2-element carriers") {
    auto rels = all_relations(2, 2);
    for (auto& r : rels)
        for (auto& s : rels)
            for (auto& t : rels) CHECK(compose(t, compose(s, r)) == compose(compose(t, s), r));
}

TEST_CASE("converse") {
    for (auto& r : all_relations(3, 3)) CHECK(converse(converse(r)) == r);
    CHECK(converse(Relation::identity(3)) == Relation::identity(3));
    // converse of a graph is a graph iff the function is bijective
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (auto& f : all_functions(a, b)) {
                std::vector<bool> hit(b, false);
                bool inj = true;
                for (int v : f) {
                    if (hit[v]) inj = false;
                    hit[v] = true;
                }
                bool bij = inj && a == b;
                CHECK(is_graph(converse(Relation::graph(f, b))) == bij);
            }
}

TEST_CASE("converse anti-homomorphism on 2-element carriers") {
    auto rels = all_relations(2, 2);
    for (auto& r : rels)
        for (auto& s : rels) CHECK(converse(compose(s, r)) == compose(converse(r), converse(s)));
}

TEST_CASE("leq") {
    for (auto& r : all_relations(2, 2)) {
        CHECK(leq(Relation(2, 2), r));
        CHECK(leq(r, Relation::full(2, 2)));
    }
    // antisymmetry
    for (auto& r : all_relations(2, 2))
        for (auto& s : all_relations(2, 2))
            if (leq(r, s) && leq(s, r)) CHECK(r == s);
}

TEST_CASE("graph criterion matches one-true-per-row on 3x3") {
    for (auto& r : all_relations(3, 3)) {
        bool functional = true;
        for (int x = 0; x < 3; ++x)
            if (std::popcount(r.rows[x]) != 1) functional = false;
        CHECK(is_graph(r) == functional);
    }
    CHECK_FALSE(is_graph(Relation(2, 2)));
}

TEST_CASE("two-axiom equivalence criterion, exhaustive to 4 elements") {
    CHECK(is_equivalence(Relation::identity(3)));
    CHECK(is_equivalence(Relation::full(4, 4)));
    for (int n = 1; n <= 4; ++n)
        for (auto& r : all_relations(n, n))
            CHECK(is_equivalence(r) == (reflexive(r) && symmetric(r) && transitive(r)));
}

TEST_CASE("generated equivalence") {
    CHECK(generated_equivalence(Relation::identity(3)) == Relation::identity(3));
    Relation single(3, 3);
    single.set(0, 1);
    Relation cl = generated_equivalence(single);
    int trues = 0;
    for (int x = 0; x < 3; ++x) trues += std::popcount(cl.rows[x]);
    CHECK(trues == 5);  // {0,1} merged + diagonal
    for (auto& r : all_relations(3, 3)) {
        Relation c = generated_equivalence(r);
        CHECK(is_equivalence(c));
        CHECK(generated_equivalence(c) == c);
        CHECK(leq(r, c));
    }
}

TEST_CASE("canonical decomposition") {
    // graph of a function: Z = X, p bijective
    std::vector<int> f = {1, 0, 1};
    Decomposition d = canonical_decomposition(Relation::graph(f, 2));
    CHECK(d.z_size == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(d.p[i] == i);
        CHECK(d.q[i] == f[i]);
    }
    // |Z| = number of true entries, all 2x2 relations; R = (graph q)(graph p)°
    for (auto& r : all_relations(2, 2)) {
        Decomposition dd = canonical_decomposition(r);
        int trues = 0;
        for (int x = 0; x < 2; ++x) trues += std::popcount(r.rows[x]);
        CHECK(dd.z_size == trues);
        Relation back = compose(Relation::graph(dd.q, 2), converse(Relation::graph(dd.p, 2)));
        CHECK(back == r);
    }
}

TEST_CASE("canonical decomposition universal property on small carriers") {
    // for each decomposition R = s r° there is a unique mediating t
    for (auto& r : all_relations(2, 2)) {
        Decomposition d = canonical_decomposition(r);
        for (int w = 0; w <= 3; ++w)
            for (auto& rf : all_functions(w, 2))
                for (auto& sf : all_functions(w, 2)) {
                    Relation cand = compose(Relation::graph(sf, 2), converse(Relation::graph(rf, 2)));
                    if (!(cand == r)) continue;
                    int count = 0;
                    for (auto& t : all_functions(w, d.z_size)) {
                        bool ok = true;
                        for (int i = 0; i < w && ok; ++i) ok = d.p[t[i]] == rf[i] && d.q[t[i]] == sf[i];
                        if (ok) ++count;
                    }
                    CHECK(count == 1);
                }
    }
}

TEST_CASE("ex_mono_epi") {
    ExObject x = ExObject::discrete(3);
    ExMorphism idm = ExMorphism::identity(x);
    MonoEpi me = ex_mono_epi(idm);
    CHECK(me.is_mono);
    CHECK(me.is_regular_epi);

    // quotient map (X,1) -> (X,R) given by the relation R
    Relation r = generated_equivalence([] {
        Relation s(3, 3);
        s.set(0, 1);
        return s;
    }());
    ExObject xr = ExObject::make(3, r);
    ExMorphism quot = ExMorphism::make(x, xr, r);
    MonoEpi me2 = ex_mono_epi(quot);
    CHECK(me2.is_regular_epi);
    CHECK_FALSE(me2.is_mono);
}

TEST_CASE("mono iff injective on classes, carriers <= 3") {
    for (int nx = 1; nx <= 3; ++nx)
        for (int ny = 1; ny <= 3; ++ny)
            for (auto& rr : all_relations(nx, nx)) {
                if (!is_equivalence(rr)) continue;
                for (auto& ss : all_relations(ny, ny)) {
                    if (!is_equivalence(ss)) continue;
                    ExObject src = ExObject::make(nx, rr), dst = ExObject::make(ny, ss);
                    Quotient qs = delta(src), qd = delta(dst);
                    for (auto& f : all_functions(nx, ny)) {
                        // compatible functions only
                        bool compat = true;
                        for (int a = 0; a < nx && compat; ++a)
                            for (int b = 0; b < nx && compat; ++b)
                                if (rr.get(a, b) && !ss.get(f[a], f[b])) compat = false;
                        if (!compat) continue;
                        ExMorphism m = ExMorphism::from_function(src, dst, f);
                        // oracle: injectivity of the induced map on quotient classes
                        std::vector<int> img(qs.classes, -1);
                        bool inj = true;
                        for (int a = 0; a < nx; ++a) {
                            int c = qs.proj[a], v = qd.proj[f[a]];
                            if (img[c] >= 0 && img[c] != v) FAIL("induced map ill-defined");
                            img[c] = v;
                        }
                        for (int c1 = 0; c1 < qs.classes && inj; ++c1)
                            for (int c2 = c1 + 1; c2 < qs.classes && inj; ++c2)
                                if (img[c1] == img[c2]) inj = false;
                        CHECK(ex_mono_epi(m).is_mono == inj);
                    }
                }
            }
}

TEST_CASE("delta") {
    ExObject disc = ExObject::discrete(3);
    CHECK(delta(disc).classes == 3);
    ExObject full = ExObject::make(3, Relation::full(3, 3));
    CHECK(delta(full).classes == 1);
}

TEST_CASE("delta adjunction |Hom_Set(delta(X,R),Y)| = |Hom_ex((X,R), eps Y)|") {
    for (int nx = 1; nx <= 3; ++nx)
        for (auto& rr : all_relations(nx, nx)) {
            if (!is_equivalence(rr)) continue;
            ExObject src = ExObject::make(nx, rr);
            int classes = delta(src).classes;
            for (int ny = 1; ny <= 3; ++ny) {
                ExObject dst = ExObject::discrete(ny);
                std::size_t lhs = 1;
                for (int i = 0; i < classes; ++i) lhs *= ny;
                CHECK(enumerate_ex_morphisms(src, dst).size() == lhs);
            }
        }
}

TEST_CASE("delta on morphisms matches function composition") {
    Relation r(4, 4);
    r.set(0, 1);
    ExObject src = ExObject::make(4, generated_equivalence(r));
    ExObject dst = ExObject::discrete(2);
    std::vector<int> f = {1, 1, 0, 1};
    ExMorphism m = ExMorphism::from_function(src, dst, f);
    std::vector<int> dm = delta_map(m);
    Quotient q = delta(src);
    for (int a = 0; a < 4; ++a) CHECK(dm[q.proj[a]] == f[a]);

    // composing two compatible functions matches composition after delta
    Relation s(2, 2);
    ExObject mid = dst;
    ExObject end = ExObject::make(2, generated_equivalence([] {
                                      Relation t(2, 2);
                                      t.set(0, 1);
                                      return t;
                                  }()));
    std::vector<int> g = {0, 1};
    ExMorphism mg = ExMorphism::from_function(mid, end, g);
    ExMorphism comp = ex_compose(mg, m);
    std::vector<int> dcomp = delta_map(comp);
    std::vector<int> dg = delta_map(mg);
    for (int c = 0; c < q.classes; ++c) CHECK(dcomp[c] == dg[dm[c]]);
}

TEST_CASE("exact sequence from canonical decomposition, per excompletion(iv)") {
    for (auto& r : all_relations(3, 3)) {
        Relation eq = generated_equivalence(r);
        ExObject x1 = ExObject::discrete(3);
        ExObject xr = ExObject::make(3, eq);
        ExMorphism quot = ExMorphism::make(x1, xr, eq);
        CHECK(ex_mono_epi(quot).is_regular_epi);
    }
}
