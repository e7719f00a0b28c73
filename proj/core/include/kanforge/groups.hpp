#pragma once

#include <cstdint>
#include <vector>

#include "kanforge/common.hpp"

// Finite groups as explicit multiplication tables.

namespace kanforge {

struct FinGroup {
    int order = 0;
    std::vector<int> table;  // row-major: table[a * order + b] = a * b
    int identity = 0;

    int mul(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const;
    int pow(int a, int n) const;

    static FinGroup make(int order, std::vector<int> table, int identity);  // validates
    static FinGroup trivial();
    static FinGroup cyclic(int m);
    static FinGroup symmetric3();
    static FinGroup quaternion8();
    static FinGroup direct_product(const FinGroup& g, const FinGroup& h);

    bool operator==(const FinGroup&) const = default;
};

// Throws InputError when the table fails associativity, identity or inverses.
void validate_group(const FinGroup& g);

bool is_homomorphism(const FinGroup& src, const FinGroup& dst, const std::vector<int>& f);
bool is_abelian(const FinGroup& g);

// Subgroup generated by a set of elements, as a sorted element list.
std::vector<int> generated_subgroup(const FinGroup& g, const std::vector<int>& gens);
bool is_normal(const FinGroup& g, const std::vector<int>& subgroup);

// Quotient of g by a normal subgroup: the group of cosets, together with the
// projection map.
struct QuotientGroup {
    FinGroup group;
    std::vector<int> proj;  // g -> coset index
};
QuotientGroup quotient_group(const FinGroup& g, const std::vector<int>& normal_subgroup);

// Subquotient ker(outer) / im(inner) for a chain a --inner--> b --outer--> c
// of pointed maps: inner and outer are homomorphism tables; the image of
// inner must be normal in the kernel of outer (checked).
FinGroup subquotient_group(const FinGroup& b, const std::vector<int>& kernel_elems,
                           const std::vector<int>& image_elems);

// Invariant factors of the abelianization (nonunit, ascending).
std::vector<std::int64_t> abelianization_invariants(const FinGroup& g);

// True iff g is cyclic of order m.
bool is_cyclic_of_order(const FinGroup& g, int m);

// Brute-force isomorphism test, for small orders.
bool groups_isomorphic(const FinGroup& g, const FinGroup& h);

}  // namespace kanforge
