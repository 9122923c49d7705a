#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/ainfty.hpp"
#include "ainfty/hom_complex.hpp"
#include "ainfty/resolutions.hpp"

namespace ainfty {

// A Gm-equivariant strictly unital morphism prefix g_1..g_arity from
// k[x]/x^6 into the truncated End^oo_{k[y]/y^3}(k), satisfying every
// morphism relation whose components all exist, exhaustively on reduced
// tuples within the per-arity certified weight caps
// w <= min(weight_bound, length_bound + arity - 2).
struct MorphismPrefix {
    AlgebraPtr source;
    EndComplexAlgebra target;
    AInftyMorphism g;
    int arity = 0;
    int weight_bound = 0;
    int length_bound = 0;

    std::map<int, int> certified_caps() const;  // arity -> weight cap
};

// g_1(x^k) = e^{o k}, the k-fold composition of the weight-1 degree-0
// cocycle dual to (z; y); a chain map with H^0(g_1)(x) the dual-numbers
// generator.
MorphismPrefix prescribe_g1(int weight_bound, int length_bound);

// The exact linear system for one extension step (from arity n to n+1):
// unknowns are a closed replacement h_n of g_n (weight-0, strictly unital)
// and the new component g_{n+1}; equations are the arity-(n+1) relations.
struct ObstructionSystem {
    int n = 0;
    // constant residual of the arity-(n+1) relation per tuple, g_{n+1} = 0
    std::map<Tuple, SparseVec> residual;  // cochain item coordinates
    // number of gauge unknowns (kernel coordinates for h_n) per weight
    std::map<int, int> gauge_dims;
    long equations = 0;
    long unknowns = 0;
};

ObstructionSystem assemble_obstruction(const MorphismPrefix& prefix, int n);

struct StepOutcome {
    bool success = true;
    std::string failure;
    std::optional<SparseVec> witness;  // inconsistency certificate
    std::string tier;                  // "direct" or "gauged"
    long unknowns = 0;
    long equations = 0;
};

// Extends the prefix by one arity in place. `corruption` (for mutation
// tests) is added to the assembled residuals before solving.
StepOutcome extend_one_arity(MorphismPrefix& prefix,
                             const std::map<Tuple, SparseVec>* corruption = nullptr);

struct SolveOutcome {
    bool success = true;
    MorphismPrefix prefix;
    std::vector<std::string> log;
    std::string failure;
    std::optional<SparseVec> witness;
};

SolveOutcome solve_to_arity(int N, int weight_bound = 12, int length_bound = 8);

// Exhaustive morphism-relation check of a prefix on its certified interior.
CheckReport check_prefix(const MorphismPrefix& prefix);

// Per-weight cohomology of End^oo_{k[y]/y^3}(k) computed with ample bounds
// (length = weight), for the dictionary comparison with H(C).
BigradedCohomologyReport end_of_k_cohomology(int weight_max);

// The module k over k[y]/y^3 (y acts by zero).
AInftyModule trivial_module_over_y_cube(AlgebraPtr y3);

// Module + morphism => bimodule: mu_{n,l}(a_1..a_n, m, b_1..b_l) =
// g_n(a_1..a_n)(m, b_1..b_l), with mu_{0,l} the module structure. Components
// with n + l <= max_total are materialized; entries beyond the stored
// morphism range are emitted only when the (degree, weight, length)
// bookkeeping forces them to vanish, otherwise the missing (n, l) is
// reported. The right algebra carries negated weights so that the tables are
// weight-homogeneous.
AInftyBimodule bimodule_from_prefix(const MorphismPrefix& g, int max_total,
                                    const std::string& name);

}  // namespace ainfty
