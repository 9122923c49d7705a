#pragma once

#include <stdexcept>
#include <string>

#include "ainfty/ainfty.hpp"
#include "ainfty/certify.hpp"
#include "ainfty/hochschild.hpp"
#include "ainfty/obstruction.hpp"

namespace ainfty {

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical JSON interchange. All coefficients are exact "p/q" strings;
// serialization order is canonical (basis order, then lexicographic keys), so
// parse(serialize(x)) = x and reruns are byte-identical.
std::string algebra_to_json(const AInftyAlgebra& A);
AInftyAlgebra algebra_from_json(const std::string& text);

std::string chain_to_json(const HochschildChain& c);
HochschildChain chain_from_json(AlgebraPtr A, const std::string& text);

std::string certificate_to_json(const Certificate& cert);
std::string certificates_to_json(const std::vector<Certificate>& certs);

std::string prefix_to_json(const MorphismPrefix& P);

// write-then-rename; never leaves partial output behind
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ainfty
