#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "ainfty/ainfty.hpp"
#include "ainfty/linalg.hpp"

namespace ainfty {

// Truncation of the reduced Hom-complex Hom^oo_A(M, N): components
// phi_l : M (x) (Abar[1])^l -> N with word length <= length_bound and cochain
// weight <= weight_bound. The basis is dual: an item (m, word, n) is the
// cochain sending m (x) word to n and every other tensor to zero.
//
// Gradings per item: degree = deg(n) - deg(m) - sum(deg(letter) - 1),
// weight = w(m) + w(word) - w(n)  (so the cochain dual to (z; y) over
// k[y]/y^3 has degree 0 and weight 1).
struct HomComplex {
    struct BasisItem {
        int m = 0;
        Tuple word;
        int n = 0;
        int degree = 0;
        int weight = 0;
    };

    AlgebraPtr A;
    AInftyModule M;
    AInftyModule N;
    int weight_bound = 0;
    int length_bound = 0;

    std::vector<BasisItem> items;
    BigradedSpace space;           // one basis element per item
    std::vector<SparseVec> d_cols; // the differential, in item coordinates
    // d is complete at an item when no generated term escaped the bounds
    std::vector<bool> d_complete;

    int find_item(int m, std::span<const int> word, int n) const;
    SparseVec d_apply(const SparseVec& cochain) const;
    bool d_complete_on(const SparseVec& cochain) const;

    // Composition (phi psi)(m, a...) = sum phi(psi(m, a..), a..): on dual
    // items it is concatenation of words. Returns false if the result
    // escaped the length bound.
    bool compose(const SparseVec& phi, const SparseVec& psi, SparseVec& out) const;

    // Cohomology of the weight-w slice (all lengths); requires the
    // differential to be complete on that slice.
    HomologyReport weight_slice_cohomology(int w) const;

    // Whether the untruncated Hom-complex contains any cochain of the given
    // degree and weight with a component of the given word length.
    bool shape_exists(int degree, int weight, int length) const;

private:
    std::map<std::tuple<int, Tuple, int>, int> index_;
    friend HomComplex hom_complex(AlgebraPtr A, AInftyModule M, AInftyModule N, int weight_bound,
                                  int length_bound);
};

HomComplex hom_complex(AlgebraPtr A, AInftyModule M, AInftyModule N, int weight_bound,
                       int length_bound);

// The DG algebra End^oo_A(M) on the truncated basis (M = N in the complex),
// with mu_1 = -d and composition as the product; the identity cochain is
// merged in as the unit basis element. `item_of_alg`/`alg_of_item` convert
// between item coordinates and algebra coordinates.
struct EndComplexAlgebra {
    HomComplex hom;
    AlgebraPtr alg;
    SparseVec identity_items;  // the identity cochain in item coordinates

    SparseVec alg_of_item(const SparseVec& v) const;
    SparseVec item_of_alg(const SparseVec& v) const;
};

EndComplexAlgebra end_complex_algebra(AlgebraPtr A, const AInftyModule& M, int weight_bound,
                                      int length_bound, const std::string& name);

}  // namespace ainfty
