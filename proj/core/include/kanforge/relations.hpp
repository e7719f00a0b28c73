#pragma once

#include <cstdint>
#include <vector>

#include "kanforge/common.hpp"

// The calculus of relations in the regular category of finite sets, and the
// exact completion built from it.  Relations are dense boolean matrices with
// one 64-bit mask per source element (carriers stay small here; exhaustive
// oracles dominate the cost anyway).

namespace kanforge {

struct Relation {
    int src_size = 0;
    int dst_size = 0;
    std::vector<std::uint64_t> rows;  // rows[x] bit y set  <=>  x R y

    Relation() = default;
    Relation(int src, int dst);

    bool get(int x, int y) const { return (rows[x] >> y) & 1u; }
    void set(int x, int y, bool v = true);

    static Relation identity(int n);
    static Relation full(int src, int dst);
    static Relation graph(const std::vector<int>& f, int dst);  // graph of a function

    bool operator==(const Relation&) const = default;
};

// Composite SR: first r, then s (matrix product in the (or, and) semiring).
Relation compose(const Relation& s, const Relation& r);
Relation converse(const Relation& r);
bool leq(const Relation& r, const Relation& s);
Relation rel_union(const Relation& r, const Relation& s);

// 1_X <= f°f and ff° <= 1_Y: exactly the graphs of functions.
bool is_graph(const Relation& r);
// Extract the function when is_graph holds.
std::vector<int> graph_function(const Relation& r);

// Two-axiom form of an equivalence relation: 1_X <= R and RR° <= R.
bool is_equivalence(const Relation& r);

// Least equivalence relation containing r (reflexive-symmetric-transitive
// closure).
Relation generated_equivalence(const Relation& r);

// Canonical decomposition (Z, p, q) of a relation: Z = set of related pairs
// with the two coordinate projections, so that R = (graph q)(graph p)°.
struct Decomposition {
    int z_size = 0;
    std::vector<int> p;  // Z -> X
    std::vector<int> q;  // Z -> Y
};
Decomposition canonical_decomposition(const Relation& r);

// Objects (X, R) of the exact completion: R an equivalence relation on X.
struct ExObject {
    int carrier_size = 0;
    Relation rel;

    static ExObject make(int carrier, Relation rel);  // validates
    static ExObject discrete(int carrier);            // (X, 1_X)
};

// Morphisms of the exact completion: relations f with Sf = f = fR,
// R <= f°f and ff° <= S.  All three conditions are checked on construction.
struct ExMorphism {
    ExObject source, target;
    Relation rel;

    static ExMorphism make(ExObject src, ExObject dst, Relation rel);
    static ExMorphism identity(const ExObject& x);
    // Morphism induced by a function compatible with the relations.
    static ExMorphism from_function(const ExObject& src, const ExObject& dst, const std::vector<int>& f);
};

ExMorphism ex_compose(const ExMorphism& g, const ExMorphism& f);

struct MonoEpi {
    bool is_mono = false;
    bool is_regular_epi = false;
};
MonoEpi ex_mono_epi(const ExMorphism& f);

// The left adjoint delta of the embedding: the quotient set X/R with its
// projection, classes numbered by first appearance.
struct Quotient {
    int classes = 0;
    std::vector<int> proj;  // X -> classes
};
Quotient delta(const ExObject& x);

// delta on morphisms, via the canonical decomposition; the induced map p' is
// asserted to be a bijection at runtime.
std::vector<int> delta_map(const ExMorphism& f);

// Exhaustive enumeration of all ExMorphisms (X,R) -> (Y,S), in lexicographic
// order of the relation bits.  Carriers must stay small.
std::vector<ExMorphism> enumerate_ex_morphisms(const ExObject& src, const ExObject& dst);

}  // namespace kanforge
