#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kanforge/intlinalg.hpp"

// Finitely generated abelian groups in canonical invariant-factor form,
// morphisms as integer matrices on the chosen generators, chain complexes,
// homology, Dold-Kan, and the chain-level model class checkers.

namespace kanforge {

struct FgAbGroup {
    // canonical form: torsion factors (each >= 2, dividing the next) first,
    // then one 0 per infinite cyclic factor
    std::vector<std::int64_t> invariant_factors;

    int rank() const { return static_cast<int>(invariant_factors.size()); }
    int free_rank() const;
    // group order; 0 means infinite
    std::int64_t order() const;
    bool is_free() const;
    bool is_trivial() const { return invariant_factors.empty(); }
    // lattice of relations diag(d_i), zero factors contributing nothing
    Lattice relation_lattice() const;

    static FgAbGroup make(std::vector<std::int64_t> factors);  // validates canonical form
    static FgAbGroup zero() { return {}; }
    static FgAbGroup free(int n);
    static FgAbGroup cyclic(std::int64_t m);  // m = 0 gives Z

    bool operator==(const FgAbGroup&) const = default;
};

// Subquotient N/D of Z^ambient presented on canonical generators, with the
// transition data needed to move elements in and out.
struct Presented {
    int ambient = 0;
    Lattice numerator, denominator;
    FgAbGroup group;
    Mat gen_reps;  // ambient x group.rank(): representative of each generator

    // coordinates of an ambient vector (must lie in the numerator) on the
    // canonical generators, reduced modulo the invariant factors
    std::vector<std::int64_t> to_coords(const std::vector<std::int64_t>& v) const;
    std::vector<std::int64_t> rep_of(const std::vector<std::int64_t>& coords) const;
    bool contains(const std::vector<std::int64_t>& v) const;

    static Presented make(int ambient, Lattice numerator, Lattice denominator);

  private:
    Mat uinv_;            // numerator-coordinate change, columns = kept data
    Mat zbasis_;          // numerator basis
    Mat u_;               // SNF row transform
    std::vector<int> keep_;  // indices of generators kept (factor != 1)
    std::vector<std::int64_t> diag_;
    friend Presented make_presented_impl(int, Lattice, Lattice);
};

// Canonicalized direct sum with the block injections and projections needed
// to assemble morphisms out of blocks.
struct DirectSum {
    FgAbGroup group;
    std::vector<Mat> inject;   // group.rank() x rank_i
    std::vector<Mat> project;  // rank_i x group.rank()
};
DirectSum direct_sum(const std::vector<const FgAbGroup*>& parts);

// Monotone surjections [n] ->> [k] in one-line notation, lexicographic.
std::vector<std::vector<int>> monotone_surjections(int n, int k);

struct AbMorphism {
    FgAbGroup source, target;
    Mat matrix;  // target.rank() x source.rank()

    static AbMorphism make(FgAbGroup src, FgAbGroup dst, Mat m);  // checks relation compatibility
    static AbMorphism zero(const FgAbGroup& src, const FgAbGroup& dst);
    static AbMorphism identity(const FgAbGroup& g);
};

AbMorphism ab_compose(const AbMorphism& g, const AbMorphism& f);
bool ab_equal(const AbMorphism& f, const AbMorphism& g);  // equality modulo target relations

// Does matrix m define a morphism src -> dst (relations mapped into relations)?
bool relation_compatible(const FgAbGroup& src, const FgAbGroup& dst, const Mat& m);

// Nonnegatively graded chain complex; boundaries[n] : C_n -> C_{n-1} for
// n = 1..length.  d o d = 0 modulo relations is checked on construction.
struct ChainComplex {
    std::vector<FgAbGroup> groups;       // degrees 0..length
    std::vector<Mat> boundaries;         // index n in 1..length; boundaries[0] unused

    int length() const { return static_cast<int>(groups.size()) - 1; }
    static ChainComplex make(std::vector<FgAbGroup> groups, std::vector<Mat> boundaries);
    static ChainComplex zero_complex(int length);
};

struct ChainMap {
    ChainComplex source, target;
    std::vector<Mat> maps;  // degrees 0..min length

    static ChainMap make(ChainComplex src, ChainComplex dst, std::vector<Mat> maps);
    static ChainMap identity(const ChainComplex& c);
};

FgAbGroup homology(const ChainComplex& c, int n);

// Homology of a free complex given by sparse differentials
// (B --d_in--> Middle --d_out--> C): middle_rank - rank(d_out) - rank(d_in)
// free generators plus the torsion of d_in.
FgAbGroup homology_of_free(int middle_rank, const SparseMat& d_out, const SparseMat& d_in);

ChainComplex mapping_cone(const ChainMap& f);

enum class ExactStructure { regular, split };
bool is_exact(const ChainComplex& c, ExactStructure structure);

// Kernel of d_{n} : C_n -> C_{n-1} as a presented subquotient of Z^{rank C_n}
// (the whole of C_n when n = 0).
Presented kernel_presentation(const ChainComplex& c, int n);

// Split-surjectivity of a morphism g : A ->> K given on canonical generators:
// does a section s with g s = id exist?
bool has_section(const FgAbGroup& src, const FgAbGroup& dst, const Mat& g);
// Split-injectivity: does a retraction r with r g = id exist?
bool has_retraction(const FgAbGroup& src, const FgAbGroup& dst, const Mat& g);

// Simplicial abelian groups, levelwise f.g., structure maps as matrices.
struct SimplicialAbGroup {
    int dim = 0;
    std::vector<FgAbGroup> levels;
    std::vector<std::vector<Mat>> faces;   // faces[n][i], n in 1..dim
    std::vector<std::vector<Mat>> degens;  // degens[n][i], n in 0..dim-1

    static SimplicialAbGroup make(int dim, std::vector<FgAbGroup> levels, std::vector<std::vector<Mat>> faces,
                                  std::vector<std::vector<Mat>> degens);
};

// Report of violated simplicial or homomorphism conditions (empty = valid).
std::vector<std::string> validate_simplicial_ab(const SimplicialAbGroup& a);

// Normalized chains: N(A)_n = intersection of ker d_i for i > 0, boundary d_0.
ChainComplex dold_kan_N(const SimplicialAbGroup& a);

// Inverse construction: Gamma(B)_n = sum over surjections [n] ->> [k] of B_k.
SimplicialAbGroup dold_kan_Gamma(const ChainComplex& b, int dim);

struct ChainClass {
    bool fibration = false;
    bool cofibration = false;
    bool weak_equiv = false;
};
ChainClass chain_class(const ChainMap& f);

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g);

}  // namespace kanforge
