#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ainfty/graded.hpp"
#include "ainfty/linalg.hpp"
#include "ainfty/signs.hpp"

namespace ainfty {

using Tuple = std::vector<int>;

struct TupleCmp {
    using is_transparent = void;
    bool operator()(std::span<const int> a, std::span<const int> b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse operation table for one arity: absent keys mean zero.
using MultiOpTable = std::map<Tuple, SparseVec, TupleCmp>;

const SparseVec* table_find(const MultiOpTable& t, std::span<const int> key);

// Strictly unital A-infinity algebra with exact sparse operation tables.
// Table entries are validated to be homogeneous of degree 2-n and weight 0.
struct AInftyAlgebra {
    std::string name;
    BigradedSpace space;
    int unit = -1;  // basis index; -1 = non-unital
    bool minimal = false;
    // Tables are stored for arities 1..arity_bound. Absent entries are zero;
    // they are *known* zero only for arities <= tables_complete_to.
    int arity_bound = 0;
    int tables_complete_to = std::numeric_limits<int>::max();
    // When set, the algebra is a weight-truncation: products of total weight
    // beyond the bound are not represented, and relation checks restrict to
    // tuples whose total weight stays within it.
    std::optional<int> weight_truncation;
    std::vector<MultiOpTable> mu;  // mu[n], index 0 unused

    int dim() const { return space.dim(); }
    int deg(int i) const { return space.degree(i); }
    int wt(int i) const { return space.weight(i); }
    bool has_unit() const { return unit >= 0; }

    void set_mu(int arity, Tuple key, SparseVec value);
    const SparseVec* mu_entry(int arity, std::span<const int> key) const;
    // Multilinear extension of mu over sparse arguments.
    SparseVec mu_apply(int arity, std::span<const SparseVec> args) const;
    std::vector<int> reduced_basis() const;
    int tuple_weight(std::span<const int> key) const;
    int tuple_sdeg_parity(std::span<const int> key, int count) const;  // l_1^count
};

using AlgebraPtr = std::shared_ptr<const AInftyAlgebra>;

struct AInftyMorphism {
    AlgebraPtr source;
    AlgebraPtr target;
    // f[n]: arity-n component; values live in the target space, degree 1-n,
    // weight 0. f[0] unused.
    std::vector<MultiOpTable> f;
    // Optional per-arity weight caps bounding the certified enumeration
    // domain (used when the target is a truncated complex).
    std::map<int, int> certified_weight_caps;

    void set_f(int arity, Tuple key, SparseVec value);
    const SparseVec* f_entry(int arity, std::span<const int> key) const;
    int max_arity() const { return static_cast<int>(f.size()) - 1; }
};

struct AInftyModule {
    AlgebraPtr algebra;
    std::string name;
    BigradedSpace space;
    // muM[n]: M (x) A^{n-1} -> M, degree 2-n; keys are (m, a_1..a_{n-1})
    // with m indexing the module basis.
    std::vector<MultiOpTable> muM;
    int tables_complete_to = std::numeric_limits<int>::max();

    void set_mu(int arity, Tuple key, SparseVec value);
    const SparseVec* mu_entry(int arity, std::span<const int> key) const;
};

struct AInftyBimodule {
    AlgebraPtr left;
    AlgebraPtr right;
    std::string name;
    BigradedSpace space;
    // mu[(i,j)]: A^i (x) M (x) B^j -> M, degree 1-i-j; keys (a_1..a_i, m, b_1..b_j).
    std::map<std::pair<int, int>, MultiOpTable> mu;
    // Entries with i + j <= complete_to are either stored or genuinely zero.
    int complete_to = std::numeric_limits<int>::max();

    void set_mu(int i, int j, Tuple key, SparseVec value);
    const SparseVec* mu_entry(int i, int j, std::span<const int> key) const;
};

// Two-input A-infinity map (A, B) -> C: components f_{r,s} of degree 1-r-s,
// r + s > 0; keys are (a_1..a_r, b_1..b_s).
struct Bimorphism {
    AlgebraPtr A;
    AlgebraPtr B;
    AlgebraPtr C;
    std::map<std::pair<int, int>, MultiOpTable> f;
    int complete_to = std::numeric_limits<int>::max();

    void set_f(int r, int s, Tuple key, SparseVec value);
    const SparseVec* f_entry(int r, int s, std::span<const int> key) const;
};

// ---------------------------------------------------------------------------
// Relation residuals. Each returns the exact defect of the defining relation
// on the given basis tuple; the zero vector means the relation holds there.

SparseVec algebra_relation_residual(const AInftyAlgebra& A, std::span<const int> tuple);
SparseVec morphism_relation_residual(const AInftyMorphism& F, std::span<const int> tuple);
SparseVec module_relation_residual(const AInftyModule& M, int m, std::span<const int> tuple);
SparseVec bimodule_relation_residual(const AInftyBimodule& M, std::span<const int> as, int m,
                                     std::span<const int> bs);
SparseVec bimorphism_relation_residual(const Bimorphism& F, std::span<const int> as,
                                       std::span<const int> bs);

// ---------------------------------------------------------------------------
// Exhaustive relation checking. Failures are data, not exceptions.

struct CheckReport {
    bool pass = true;
    long relations_checked = 0;
    std::string scope;          // enumeration domain actually covered
    std::string first_failure;  // empty when pass
    std::vector<std::string> notes;

    void fail(const std::string& what);
    void merge(const CheckReport& other);
};

// Relations of every arity 1..N on all reduced basis tuples (restricted to
// the weight truncation when one is set), plus strict-unitality table audit
// and unit-containing tuples up to arity min(N, unit_tuple_arity).
CheckReport check_structure(const AInftyAlgebra& A, int N, int unit_tuple_arity = 4);
CheckReport check_structure(const AInftyMorphism& F, int N, int unit_tuple_arity = 3);
CheckReport check_structure(const AInftyModule& M, int N, int unit_tuple_arity = 3);
CheckReport check_structure(const AInftyBimodule& M, int max_left, int max_right,
                            int unit_tuple_arity = 2);
CheckReport check_structure(const Bimorphism& F, int max_left, int max_right,
                            int unit_tuple_arity = 2);

// ---------------------------------------------------------------------------
// Constructions.

struct DgAlgebraSpec {
    std::string name;
    BigradedSpace space;
    int unit = -1;
    std::optional<int> weight_truncation;
    std::map<int, SparseVec> d;                          // plain differential on basis
    std::map<std::pair<int, int>, SparseVec> products;   // plain ring products
};

// DG algebra as an A-infinity algebra: mu_1(a) = -d(a),
// mu_2(a,b) = (-1)^{|a|} a b, mu_{>=3} = 0. Verifies d^2 = 0, the Leibniz
// rule, associativity and unit laws on the stored range; aborts with the
// offending pair on failure.
AInftyAlgebra from_dg(const DgAlgebraSpec& spec);

// Right DG module over a DG algebra as an A-infinity module:
// mu_1(m) = d(m), mu_2(m, b) = (-1)^{|m|+1} m b.
AInftyModule module_from_dg(AlgebraPtr algebra, std::string name, BigradedSpace space,
                            const std::map<int, SparseVec>& d,
                            const std::map<std::pair<int, int>, SparseVec>& action);

// Opposite algebra. The bare argument-reversal sign
// mu^op_n(a_1..a_n) = (-1)^sigma mu_n(a_n..a_1) with
// sigma = sum_{i<j} (|a_i|+1)(|a_j|+1) breaks strict unitality at
// mu_2(1, a); the adopted normalization multiplies it by (-1)^{n+1}
// (conjugation by the sign automorphism a -> -a), which restores it and
// reproduces the opposite ring on DG algebras. Pass
// literal_reversal_sign = true to get the unnormalized tables.
AInftyAlgebra opposite(const AInftyAlgebra& A, bool literal_reversal_sign = false);

// Diagonal A-A-bimodule: mu_{i,j}(a_1..a_i, m, c_1..c_j) =
// (-1)^{l_1^i(a)+1} mu_{i+j+1}(a_1..a_i, m, c_1..c_j).
AInftyBimodule diagonal_bimodule(AlgebraPtr A);

// Gluing (B 0; M A) of an A-B-bimodule M: the algebra on A + B + M whose
// only nonzero components are mu^A, mu^B and
// (-1)^{l_1^i(a)+1} mu^M_{i,j}(a_1..a_i, m, b_1..b_j). The basis is changed
// so that 1_A + 1_B is itself a basis element (the strict unit).
AInftyAlgebra glue(const AInftyBimodule& M, const std::string& name);

// Rewrites an algebra on a basis in which `unit_vec` (degree 0, weight 0)
// replaces basis element `replaced`; used by glue and endomorphism_algebra.
AInftyAlgebra with_unit_element(const AInftyAlgebra& A, const SparseVec& unit_vec, int replaced,
                                const std::string& unit_name);

// End_k(V) of a finite complex as a DG algebra (basis: elementary maps,
// with the identity merged in as the unit basis element).
struct EndAlgebra {
    AlgebraPtr alg;
    BigradedSpace V;
    std::vector<LinearMap> op_of_basis;  // operator realized by each basis element

    LinearMap op_of(const SparseVec& v) const;      // basis combination -> operator
    SparseVec coords_of(const LinearMap& op) const; // inverse
};
EndAlgebra endomorphism_algebra(const BigradedSpace& V, const LinearMap& dV,
                                const std::string& name);

// The correspondence between A-B-bimodule structures on (M, d) and
// bimorphisms (A, B^op) -> End_k(M):
//   mu_{r,s}(a_1..a_r, m, b_1..b_s) = (-1)^l f_{r,s}(a_1..a_r, b_s,..,b_1)(m)
// with l = l_1^s(b)|m| + sum_{1<=p<q<=s}(|b_p|+1)(|b_q|+1). The round trip is
// the identity on operation tables.
Bimorphism bimorphism_from_bimodule(const AInftyBimodule& M, const EndAlgebra& E,
                                    AlgebraPtr right_op);
// The mu_{0,0} part (the differential of M) is not a bimorphism component;
// pass it through `mu00` to reinstate it.
AInftyBimodule bimodule_from_bimorphism(const Bimorphism& f, const EndAlgebra& E, AlgebraPtr left,
                                        AlgebraPtr right, const std::string& name,
                                        const MultiOpTable* mu00 = nullptr);

// Negated auxiliary weights (used when gluing a bimodule whose two algebras
// pair weights against each other).
AInftyAlgebra with_negated_weights(const AInftyAlgebra& A);

}  // namespace ainfty
