#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/graded.hpp"

namespace ainfty {

// Reduced row-echelon accumulator over a fixed column universe.
// Pivot columns are chosen leftmost-first; rows are kept fully reduced.
struct Echelon {
    std::vector<SparseVec> rows;   // row r has leading entry 1 at pivot[r]
    std::vector<int> pivot;        // strictly increasing is not required; kept in insertion order

    // Reduces v against the stored rows and returns the remainder.
    SparseVec reduce(SparseVec v) const;
    // Inserts v if independent; returns true when the rank grew.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows.size()); }
};

struct SolveResult {
    // Exactly one of the two is set: a solution x with A x = b, or an
    // inconsistency witness y with y^T A = 0 and y^T b != 0.
    std::optional<SparseVec> solution;
    std::optional<SparseVec> witness;
    bool solved() const { return solution.has_value(); }
};

// Exact Gaussian elimination; pivot choice is deterministic (sparsest row,
// then lowest index), which affects speed only, never results.
SolveResult solve_linear_system(const LinearMap& A, const SparseVec& b);

// Deterministic kernel basis: one vector per free column, in column order.
std::vector<SparseVec> kernel_basis(const LinearMap& A);
int rank(const LinearMap& A);

// A finite slice of a cochain complex: spaces indexed by degree, with
// differentials of bidegree (+1, 0) whose consecutive composites vanish.
struct ComplexSlice {
    std::map<int, BigradedSpace> spaces;
    std::map<int, LinearMap> differentials;  // d[k] : spaces[k] -> spaces[k+1]

    // d∘d = 0 and bidegree checks; fails loudly on violation.
    void validate() const;
    const LinearMap* diff(int k) const;
};

struct HomologyReport {
    // (degree, weight) -> dimension of ker/im over Q.
    std::map<std::pair<int, int>, int> dims;
    // Chosen cycle representatives, in coordinates of the degree-d space.
    std::map<std::pair<int, int>, std::vector<SparseVec>> representatives;

    int dim(int degree, int weight) const;
    int total_dim() const;
};

// Exact homology of a finite slice; validates d∘d = 0 first.
// Representatives are cycles, linearly independent modulo boundaries, chosen
// by row-echelon pivots in basis order (deterministic given basis order).
HomologyReport homology_of_slice(const ComplexSlice& S);

// Rechecks a report against its slice: every representative is a cycle and
// the set is independent modulo boundaries.
bool recheck_homology(const ComplexSlice& S, const HomologyReport& rep, std::string* why = nullptr);

}  // namespace ainfty
