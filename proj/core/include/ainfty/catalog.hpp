#pragma once

#include <memory>
#include <string>

#include "ainfty/ainfty.hpp"

namespace ainfty {

// Fixed catalog of the concrete algebras used throughout, with the
// project-wide weight assignments:
//   lambda1            k<xi>/xi^2, |xi| = 1, w(xi) = 1
//   dual_numbers       k[eps]/eps^2, |eps| = 0, w(eps) = 1
//   truncated_poly(n)  k[x]/x^n, |x| = 0, w(x^k) = k        (n >= 2)
//   y_cube             k[y]/y^3, |y| = 1, w(y^k) = k
//   free_C(W)          k<t1,t2>, |t1| = 0, |t2| = -1, w = (1, 2),
//                      d t2 = t1^2, materialized to total weight <= W
//   tensor(R1, R2)     tensor product of two DG catalog algebras
//
// Catalog keys are exactly these strings; they form the CLI's --algebra
// vocabulary.
AInftyAlgebra make_algebra(const std::string& key);
AlgebraPtr make_algebra_ptr(const std::string& key);

bool is_valid_catalog_key(const std::string& key);

// Tensor product of two DG algebras (mu_{>=3} must be zero): basis pairs,
// degrees and weights additive, differential by the Leibniz rule, product
// with the Koszul sign. Basis names are "a|b".
AInftyAlgebra tensor_dg(const AInftyAlgebra& A, const AInftyAlgebra& B, const std::string& name);

// The canonical DG bimorphism (A, B) -> A (x) B with f_{1,0}(a) = a (x) 1 and
// f_{0,1}(b) = 1 (x) b; its pushforward on Hochschild chains is the
// Eilenberg-Zilber map.
Bimorphism tensor_bimorphism(AlgebraPtr A, AlgebraPtr B, AlgebraPtr T);

}  // namespace ainfty
