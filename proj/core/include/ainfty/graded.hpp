#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ainfty/rational.hpp"

namespace ainfty {

struct BasisElement {
    std::string name;
    int degree = 0;
    int weight = 0;
};

// Finite basis with a cohomological degree and an auxiliary weight per
// element. Names are unique; the zero space (empty basis) is permitted.
struct BigradedSpace {
    std::vector<BasisElement> basis;

    BigradedSpace() = default;
    explicit BigradedSpace(std::vector<BasisElement> b);

    int dim() const { return static_cast<int>(basis.size()); }
    int degree(int i) const { return basis[i].degree; }
    int weight(int i) const { return basis[i].weight; }
    const std::string& name(int i) const { return basis[i].name; }
    int index_of(const std::string& name) const;  // -1 if absent

private:
    std::map<std::string, int> index_;
};

// Sparse vector in basis coordinates: sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, Scalar>>;

void vec_add_term(SparseVec& v, int idx, const Scalar& c);
SparseVec vec_add(const SparseVec& a, const SparseVec& b);
SparseVec vec_scale(const SparseVec& a, const Scalar& c);
void vec_axpy(SparseVec& acc, const SparseVec& x, const Scalar& c);
Scalar vec_coeff(const SparseVec& v, int idx);
SparseVec vec_unit(int idx, Scalar c = Scalar(1));
bool vec_is_zero(const SparseVec& v);
std::string vec_str(const SparseVec& v, const BigradedSpace& space);

// Homogeneous linear map between bigraded spaces, stored as sparse columns.
// Every nonzero entry must connect basis elements whose (degree, weight)
// differ exactly by (delta_degree, delta_weight).
struct LinearMap {
    BigradedSpace source;
    BigradedSpace target;
    int delta_degree = 0;
    int delta_weight = 0;
    std::vector<SparseVec> cols;  // cols[j] = image of source basis j

    LinearMap() = default;
    LinearMap(BigradedSpace src, BigradedSpace tgt, int ddeg, int dwt);

    void set_entry(int row, int col, const Scalar& c);
    void add_entry(int row, int col, const Scalar& c);
    Scalar entry(int row, int col) const;
    SparseVec apply(const SparseVec& v) const;
    bool is_zero() const;

    // Checks the bidegree invariant on all stored entries.
    bool validate(std::string* why = nullptr) const;

    static LinearMap identity(const BigradedSpace& s);
    // this ∘ g (apply g first). Requires g.target dim == source dim.
    LinearMap compose(const LinearMap& g) const;
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator*(const Scalar& c, const LinearMap& a);
};

// Signed trace sum_i (-1)^{degree(i)} * diagonal entry of a degree-(0,0)
// endomorphism. Rejects maps that are not endomorphisms.
Scalar supertrace(const LinearMap& f);

}  // namespace ainfty
