#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainfty/ainfty.hpp"
#include "ainfty/linalg.hpp"

namespace ainfty {

// Exact formal combination of Hochschild tuples (a_0; a_1, ..., a_n) over a
// fixed algebra. Slot 0 ranges over the full basis; tail slots live in the
// reduced space A/k.1 and any unit landing there is dropped at insertion.
// Each tuple is bigraded: degree = |a_0| + sum(|a_i| - 1), weight = sum of
// weights.
struct HochschildChain {
    AlgebraPtr A;
    std::map<Tuple, Scalar> terms;

    explicit HochschildChain(AlgebraPtr alg) : A(std::move(alg)) {}

    void add(Tuple t, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    int tuple_degree(const Tuple& t) const;
    int tuple_weight(const Tuple& t) const;
    // Degree/weight of a homogeneous chain; throws on mixed chains.
    int degree() const;
    int weight() const;
    std::string str() const;

    friend HochschildChain operator+(const HochschildChain& x, const HochschildChain& y);
    friend HochschildChain operator*(const Scalar& c, const HochschildChain& x);
};

struct ArityExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Hochschild differential b: both summation families (interior
// contractions and wrap-around contractions) with the stated signs. Output
// length <= input length; degree +1, weight 0. Throws ArityExhausted when a
// needed operation lies beyond the algebra's certified tables.
HochschildChain hochschild_b(const HochschildChain& c);

// The Connes-Tsygan differential B: the cyclic unit-insertion sum with sign
// (-1)^{l_0^{i-1}(a) l_i^n(a) + 1}. Output length = input length + 1 with
// the unit in slot a_0; requires a strictly unital algebra.
HochschildChain connes_B(const HochschildChain& c);

// Finite weight-w subcomplex of (C_*(A), b). Requires strictly positive
// weights on the reduced basis (slice-finiteness: tensor length <= weight).
struct HochschildSlice {
    AlgebraPtr A;
    int weight = 0;
    // per degree: the tuples in deterministic order (by length, then lex)
    std::map<int, std::vector<Tuple>> tuples;
    ComplexSlice complex;

    int degree_index(int degree, const Tuple& t) const;  // -1 if absent
    SparseVec chain_coords(const HochschildChain& c, int degree) const;
    HochschildChain coords_chain(const SparseVec& v, int degree) const;
};

HochschildSlice hochschild_slice(AlgebraPtr A, int weight, int degree_min = -64,
                                 int degree_max = 64);

// Pushforward of a pair of chains along a bimorphism f: (A, B) -> C; the
// double-cyclic sum. For a DG map (only f_{1,0}, f_{0,1}) this is the
// Eilenberg-Zilber map followed by the induced map on chains.
HochschildChain pushforward_bimorphism(const Bimorphism& f, const HochschildChain& c1,
                                       const HochschildChain& c2);

// Trace functional on chains over End(V): str(a_0) for length 0 in degree 0,
// zero otherwise.
Scalar trace_functional(const EndAlgebra& E, const HochschildChain& c);

// The explicit pairing psi(c1 (x) c2) = <c1, B(c2)> through a finite
// dimensional bimodule M over (A1, A2): the double cyclic supertrace sum.
// c2 is a chain of A2^{op}, given by its tuples in the A2 basis.
Scalar pairing_psi(const AInftyBimodule& M, const HochschildChain& c1, const HochschildChain& c2);

// <a, B(b)> for closed homogeneous basis elements with |a| + |b| = 1,
// as a supertrace of v -> mu_3(a, v, b). Normalized to agree with
// pairing_psi over the diagonal bimodule for both parities of |a|; for |a|
// even this is literally (-1)^{|a|+1} str(v -> (-1)^{(|b|+1)|v|} mu_3(a,v,b)).
Scalar pairing_mu3(AlgebraPtr A, int a, int b);

}  // namespace ainfty
