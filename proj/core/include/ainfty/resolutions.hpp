#pragma once

#include <map>
#include <string>
#include <vector>

#include "ainfty/ainfty.hpp"
#include "ainfty/linalg.hpp"

namespace ainfty {

struct BigradedCohomologyReport {
    std::map<std::pair<int, int>, int> dims;  // (degree, weight) -> dimension
    std::vector<std::string> notes;
    bool pass = true;
    void fail(const std::string& why) {
        pass = false;
        notes.push_back("FAIL: " + why);
    }
    int dim(int d, int w) const {
        auto it = dims.find({d, w});
        return it == dims.end() ? 0 : it->second;
    }
};

// ---------------------------------------------------------------------------
// Semifree resolution P -> k over k[y]/y^3: P = + e_n k[y]/y^3 with
// |e_n| = floor(n/2), w(e_{2k}) = 3k, w(e_{2k+1}) = 3k+1, and
// d(e_0) = 0, d(e_{2k+1}) = e_{2k} y, d(e_{2k+2}) = e_{2k+1} y^2.
struct ResolutionP {
    int N = 0;  // generators e_0..e_N
    BigradedSpace space;  // basis e_n y^j, j = 0..2
    LinearMap d;          // degree (+1, 0)

    int index(int n, int j) const { return 3 * n + j; }
    // The explicit lifts of the dual classes v_n (right-module maps).
    LinearMap lift(int n) const;
    // Ext-class of an endomorphism: functional e_m -> coefficient of e_0 y^0
    // in phi(e_m), i.e. the expansion of aug∘phi in the dual basis {v_m}.
    SparseVec ext_class(const LinearMap& phi) const;  // coords over v_0..v_N
};

ResolutionP build_resolution_P(int N);

// d^2 = 0, resolution property on the truncation, the lift identities
// (supercommutation with d, v1 v2 + v2 v1 = 0, v1 v2^k = (-1)^k v_{2k+1}),
// Ext^0 = dual numbers. Any failure is a hard error recorded in the report.
// Dims are reported in the dictionary (degree, weight) = (-floor(n/2), w(e_n)).
BigradedCohomologyReport ext_algebra(const ResolutionP& P, int identity_k_max = 4);

// ---------------------------------------------------------------------------
// Cohomology of C = k<t1, t2> (d t2 = t1^2) per weight <= W, with
// cocycle-level verification that t1^2 is exact, that u1 u2 + u2 u1 is exact,
// and that the representatives u2^a u1^delta are nonzero in homology.
struct CohomologyOfC {
    BigradedCohomologyReport report;
    AlgebraPtr C;
    // chosen representative of the class at (degree, weight), in C basis coords
    std::map<std::pair<int, int>, SparseVec> reps;
};

CohomologyOfC cohomology_of_C(AlgebraPtr C);

// ---------------------------------------------------------------------------
// The 2-periodic equivariant resolution of the diagonal bimodule of
// k[x]/x^n: steps R_p = A (x) A e_p with d_{2k+1} = x(x)1 - 1(x)x and
// d_{2k} = sum_{i+j=n-1} x^i (x) x^j; generator weights 0, 1, n, n+1, 2n, ...
struct PeriodicResolution {
    int modulus = 0;
    int depth = 0;
    std::vector<int> gen_weight;          // w(e_p)
    std::vector<BigradedSpace> spaces;    // basis x^i (x) x^j at step p
    std::vector<LinearMap> d;             // d[p] : R_p -> R_{p-1}, p >= 1
    std::vector<std::string> checks;
    bool pass = true;
};

PeriodicResolution build_periodic_resolution(int n, int depth);

// A weight-graded bimodule over k[x]/x^n presented by the two commuting
// actions of x.
struct TruncPolyBimodule {
    std::string name;
    BigradedSpace space;
    LinearMap left_x;   // bidegree (0, +1)
    LinearMap right_x;  // bidegree (0, +1)
};

// HH^p(k[x]/x^n, M) per (p, weight) from the periodic resolution; the
// reported weight of a class phi: e_p -> m is w(m) - w(e_p).
BigradedCohomologyReport hochschild_cohomology_bigraded(const PeriodicResolution& R,
                                                        const TruncPolyBimodule& M);

// ---------------------------------------------------------------------------
// Independent per-weight Hochschild homology dims of the small algebras via
// resolution-induced small complexes (the second route, against bar slices):
//   dual_numbers / truncated_poly(n): alternating 0 and n x^{n-1} maps;
//   lambda1: the graded commutator (identically zero) at every step.
// Reported as (degree, weight) -> dim in the cohomological convention
// (the homological HH_n sits in degree -n).
BigradedCohomologyReport hochschild_dims_small_complex(const std::string& catalog_key,
                                                       int weight_max);

}  // namespace ainfty
