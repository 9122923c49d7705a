#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ainfty/ainfty.hpp"
#include "ainfty/hochschild.hpp"
#include "ainfty/obstruction.hpp"
#include "ainfty/resolutions.hpp"

namespace ainfty {

// Machine-readable record of every check performed. Certificates contain no
// clocks or machine identifiers: byte-identical reruns are part of the
// contract.
struct CertCheck {
    std::string name;
    std::string statement;
    std::string bound;
    bool pass = true;
    std::string value;    // witness or computed value, human-readable exact data
};

struct Certificate {
    std::string pipeline;
    std::vector<std::pair<std::string, std::string>> parameters;  // echoed configuration
    std::vector<std::string> conventions;
    std::vector<CertCheck> checks;

    bool pass() const;
    std::string verdict() const { return pass() ? "PASS" : "FAIL"; }
    CertCheck& add(const std::string& name, const std::string& statement,
                   const std::string& bound = "");
    void note_convention(std::string c) { conventions.push_back(std::move(c)); }
};

// --------------------------------------------------------------------------
// pipelines

// check-ainfty: catalog algebra relation suite (strict unitality + exhaustive
// A-infinity relations to the arity bound, with a sign-flip mutation probe).
Certificate certify_check_ainfty(const std::string& key, int arity);

// hochschild: slice homology dims and the mixed-complex identities
// b^2 = B^2 = bB + Bb = 0 for all slices up to the weight bound, with the
// per-weight dims cross-checked against the resolution route where one is
// catalogued.
Certificate certify_hochschild(const std::string& key, int weight_max);

// ext: resolution P, the lift identities, cohomology of C, the periodic
// resolution of k[x]/x^6, the bigraded Hochschild cohomology patterns, and
// the End(k) dictionary.
Certificate certify_ext(int P_truncation, int periodic_depth, int C_weight_bound);

// solve-morphism: the inductive extension to the target arity.
struct SolverArtifacts {
    Certificate cert;
    std::optional<MorphismPrefix> prefix;
};
SolverArtifacts certify_solver(int target_arity, int weight_bound, int length_bound);

// certify-10dim: build the glued 10-dimensional minimal algebra from the
// solver output and certify the nonzero mu_3 supertrace pairing.
struct TenDimArtifacts {
    Certificate cert;
    std::optional<AInftyAlgebra> algebra;
};
TenDimArtifacts certify_ten_dim(int arity, int weight_bound = 12, int length_bound = 8);

// verify-section4: the Kunneth/EZ pipeline over Lambda_1 (x) k[eps] and the
// nonvanishing of (id (x) B) on the claimed cycle.
Certificate certify_section4(int weight_max);

// run-all: every pipeline at its acceptance bounds.
std::vector<Certificate> run_all_certificates();

}  // namespace ainfty
