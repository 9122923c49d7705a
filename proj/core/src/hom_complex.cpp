#include "ainfty/hom_complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ainfty {

namespace {

// reverse index: output basis element -> entries of mu_j whose value hits it
struct ReverseAlgebraIndex {
    // per output basis element: list of (arity, key, coefficient)
    std::map<int, std::vector<std::tuple<int, Tuple, Scalar>>> hits;
    explicit ReverseAlgebraIndex(const AInftyAlgebra& A) {
        for (int n = 1; n < static_cast<int>(A.mu.size()); ++n)
            for (const auto& [k, v] : A.mu[n]) {
                bool reduced = true;
                for (int x : k) reduced &= (x != A.unit);
                if (!reduced) continue;
                for (const auto& [o, c] : v)
                    if (o != A.unit) hits[o].emplace_back(n, k, c);
            }
    }
};

}  // namespace

int HomComplex::find_item(int m, std::span<const int> word, int n) const {
    Tuple w(word.begin(), word.end());
    auto it = index_.find(std::make_tuple(m, std::move(w), n));
    return it == index_.end() ? -1 : it->second;
}

SparseVec HomComplex::d_apply(const SparseVec& cochain) const {
    SparseVec out;
    for (const auto& [i, c] : cochain) vec_axpy(out, d_cols.at(i), c);
    return out;
}

bool HomComplex::d_complete_on(const SparseVec& cochain) const {
    for (const auto& [i, c] : cochain) {
        (void)c;
        if (!d_complete.at(i)) return false;
    }
    return true;
}

bool HomComplex::compose(const SparseVec& phi, const SparseVec& psi, SparseVec& out) const {
    out.clear();
    bool ok = true;
    for (const auto& [ip, cp] : phi) {
        const BasisItem& P = items[ip];
        for (const auto& [iq, cq] : psi) {
            const BasisItem& Q = items[iq];
            if (Q.n != P.m) continue;
            Tuple w = Q.word;
            w.insert(w.end(), P.word.begin(), P.word.end());
            int idx = find_item(Q.m, w, P.n);
            if (idx < 0) {
                ok = false;  // escaped the (word-weight, length) truncation
                continue;
            }
            vec_add_term(out, idx, cp * cq);
        }
    }
    return ok;
}

bool HomComplex::shape_exists(int degree, int weight, int length) const {
    // search for a reduced word of the given length whose degree/weight
    // close the constraints: deg(n) - deg(m) - (deg(word) - length) = degree
    // and w(m) + w(word) - w(n) = weight, over all (m, n).
    const std::vector<int> reduced = A->reduced_basis();
    for (int m = 0; m < M.space.dim(); ++m)
        for (int n = 0; n < N.space.dim(); ++n) {
            int want_wdeg = N.space.degree(n) - M.space.degree(m) + length - degree;
            int want_wwt = weight - M.space.weight(m) + N.space.weight(n);
            // DP over word positions on (deg, wt) reachability
            std::set<std::pair<int, int>> reach = {{0, 0}};
            for (int pos = 0; pos < length; ++pos) {
                std::set<std::pair<int, int>> next;
                for (auto [dd, ww] : reach)
                    for (int l : reduced) next.insert({dd + A->deg(l), ww + A->wt(l)});
                reach = std::move(next);
            }
            if (reach.count({want_wdeg, want_wwt})) return true;
        }
    return false;
}

HomologyReport HomComplex::weight_slice_cohomology(int w) const {
    ComplexSlice S;
    std::map<int, std::vector<int>> by_degree;
    for (size_t i = 0; i < items.size(); ++i)
        if (items[i].weight == w) by_degree[items[i].degree].push_back(static_cast<int>(i));
    for (const auto& [d, idxs] : by_degree) {
        std::vector<BasisElement> basis;
        for (int i : idxs) basis.push_back(space.basis[i]);
        S.spaces[d] = BigradedSpace(basis);
    }
    for (const auto& [d, idxs] : by_degree) {
        if (!by_degree.count(d + 1)) {
            for (int i : idxs) {
                if (!d_complete[i])
                    throw std::logic_error("weight_slice_cohomology: incomplete differential");
                if (!d_cols[i].empty())
                    throw std::logic_error("weight_slice_cohomology: differential escapes slice");
            }
            continue;
        }
        const auto& tgt = by_degree.at(d + 1);
        LinearMap dmat(S.spaces.at(d), S.spaces.at(d + 1), 1, 0);
        for (size_t col = 0; col < idxs.size(); ++col) {
            if (!d_complete[idxs[col]])
                throw std::logic_error("weight_slice_cohomology: incomplete differential");
            for (const auto& [o, c] : d_cols[idxs[col]]) {
                auto pos = std::find(tgt.begin(), tgt.end(), o);
                if (pos == tgt.end())
                    throw std::logic_error("weight_slice_cohomology: stray differential image");
                dmat.add_entry(static_cast<int>(pos - tgt.begin()), static_cast<int>(col), c);
            }
        }
        S.differentials[d] = std::move(dmat);
    }
    return homology_of_slice(S);
}

HomComplex hom_complex(AlgebraPtr Aptr, AInftyModule M, AInftyModule N, int weight_bound,
                       int length_bound) {
    const AInftyAlgebra& A = *Aptr;
    for (int i : A.reduced_basis())
        if (A.wt(i) <= 0)
            throw std::invalid_argument("hom_complex: reduced basis weights must be positive");

    HomComplex H;
    H.A = Aptr;
    H.M = M;
    H.N = N;
    H.weight_bound = weight_bound;
    H.length_bound = length_bound;

    // enumerate reduced words of word-weight <= weight_bound and length <=
    // length_bound; word weight is additive under composition, which keeps
    // the truncation coherent (cochain weight is not when the modules carry
    // mixed weights)
    std::vector<Tuple> words;
    const std::vector<int> reduced = A.reduced_basis();
    Tuple w;
    std::function<void(int)> rec = [&](int wt) {
        words.push_back(w);
        if (static_cast<int>(w.size()) >= length_bound) return;
        for (int l : reduced) {
            if (wt + A.wt(l) > weight_bound) continue;
            w.push_back(l);
            rec(wt + A.wt(l));
            w.pop_back();
        }
    };
    rec(0);
    std::stable_sort(words.begin(), words.end(), [](const Tuple& x, const Tuple& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });

    std::vector<BasisElement> basis;
    for (const Tuple& word : words) {
        int wdeg = 0, wwt = 0;
        for (int l : word) {
            wdeg += A.deg(l);
            wwt += A.wt(l);
        }
        for (int m = 0; m < M.space.dim(); ++m)
            for (int n = 0; n < N.space.dim(); ++n) {
                int degree = N.space.degree(n) - M.space.degree(m) -
                             (wdeg - static_cast<int>(word.size()));
                int weight = M.space.weight(m) + wwt - N.space.weight(n);
                HomComplex::BasisItem it{m, word, n, degree, weight};
                H.index_[std::make_tuple(m, word, n)] = static_cast<int>(H.items.size());
                std::string nm = "[" + M.space.name(m) + "|";
                for (size_t p = 0; p < word.size(); ++p) {
                    if (p) nm += ",";
                    nm += A.space.name(word[p]);
                }
                nm += "|" + N.space.name(n) + "]";
                basis.push_back({nm, degree, weight});
                H.items.push_back(std::move(it));
            }
    }
    H.space = BigradedSpace(basis);

    // differential
    ReverseAlgebraIndex rev(A);
    H.d_cols.assign(H.items.size(), {});
    H.d_complete.assign(H.items.size(), true);
    for (size_t ei = 0; ei < H.items.size(); ++ei) {
        const auto& E = H.items[ei];
        const int phi_par = E.degree & 1;
        SparseVec col;
        bool complete = true;
        auto add_term = [&](int m, Tuple word, int n, const Scalar& c) {
            if (c.is_zero()) return;
            int idx = H.find_item(m, word, n);
            if (idx < 0) {
                complete = false;
                return;
            }
            vec_add_term(col, idx, c);
        };

        // mu^N(phi(...), suffix): module table entries with first slot E.n
        for (int r = 1; r < static_cast<int>(N.muM.size()); ++r) {
            for (const auto& [k, v] : N.muM[r]) {
                if (k[0] != E.n) continue;
                bool red = true;
                for (int t = 1; t < r; ++t) red &= (k[t] != A.unit);
                if (!red) continue;
                Tuple word = E.word;
                word.insert(word.end(), k.begin() + 1, k.end());
                for (const auto& [o, c] : v) add_term(E.m, word, o, c);
            }
        }
        // -(-1)^{|phi|} phi(mu^M(m', prefix), rest): reverse lookup on M
        for (int r = 1; r < static_cast<int>(M.muM.size()); ++r) {
            for (const auto& [k, v] : M.muM[r]) {
                bool red = true;
                for (int t = 1; t < r; ++t) red &= (k[t] != A.unit);
                if (!red) continue;
                Scalar hit = vec_coeff(v, E.m);
                if (hit.is_zero()) continue;
                Tuple word(k.begin() + 1, k.end());
                word.insert(word.end(), E.word.begin(), E.word.end());
                add_term(k[0], word, E.n, hit * parity_sign((phi_par + 1) & 1));
            }
        }
        // -(-1)^{|phi|+|m|+l_1^{prefix}} phi(m, ..., mu^A(seg), ...)
        {
            int prefix_par = 0;
            for (size_t t = 0; t < E.word.size(); ++t) {
                auto hit = rev.hits.find(E.word[t]);
                if (hit != rev.hits.end()) {
                    for (const auto& [arity, seg, c] : hit->second) {
                        Tuple word;
                        word.reserve(E.word.size() + arity - 1);
                        word.insert(word.end(), E.word.begin(), E.word.begin() + t);
                        word.insert(word.end(), seg.begin(), seg.end());
                        word.insert(word.end(), E.word.begin() + t + 1, E.word.end());
                        int par = (phi_par + M.space.degree(E.m) + prefix_par + 1) & 1;
                        add_term(E.m, std::move(word), E.n, c * parity_sign(par));
                    }
                }
                prefix_par = (prefix_par + sdeg(A.deg(E.word[t]))) & 1;
            }
        }
        H.d_cols[ei] = std::move(col);
        H.d_complete[ei] = complete;
    }
    return H;
}

SparseVec EndComplexAlgebra::alg_of_item(const SparseVec& v) const {
    // item coordinates and algebra coordinates agree except at the unit slot:
    // alg unit u = identity cochain; item (m0,,m0) = u - sum_{m != m0}(m,,m)
    const int slot = alg->unit;
    SparseVec out;
    for (const auto& [i, c] : v) {
        if (i == slot) {
            // item e_slot = u - (identity_items - e_slot)
            vec_add_term(out, slot, c);
            for (const auto& [j, cj] : identity_items)
                if (j != slot) vec_add_term(out, j, -(cj * c));
        } else {
            vec_add_term(out, i, c);
        }
    }
    return out;
}

SparseVec EndComplexAlgebra::item_of_alg(const SparseVec& v) const {
    const int slot = alg->unit;
    SparseVec out;
    for (const auto& [i, c] : v) {
        if (i == slot) {
            vec_axpy(out, identity_items, c);
        } else {
            vec_add_term(out, i, c);
        }
    }
    return out;
}

EndComplexAlgebra end_complex_algebra(AlgebraPtr A, const AInftyModule& M, int weight_bound,
                                      int length_bound, const std::string& name) {
    EndComplexAlgebra E;
    E.hom = hom_complex(A, M, M, weight_bound, length_bound);
    const HomComplex& H = E.hom;

    DgAlgebraSpec spec;
    spec.name = name;
    spec.space = H.space;
    spec.weight_truncation = weight_bound;
    for (size_t i = 0; i < H.items.size(); ++i) {
        // plain differential d (mu_1 = -d is applied by from_dg)
        if (!H.d_cols[i].empty()) spec.d[static_cast<int>(i)] = H.d_cols[i];
    }
    for (size_t ip = 0; ip < H.items.size(); ++ip)
        for (size_t iq = 0; iq < H.items.size(); ++iq) {
            const auto& P = H.items[ip];
            const auto& Q = H.items[iq];
            if (Q.n != P.m) continue;
            Tuple w = Q.word;
            w.insert(w.end(), P.word.begin(), P.word.end());
            int idx = H.find_item(Q.m, w, P.n);
            if (idx < 0) continue;
            spec.products[{static_cast<int>(ip), static_cast<int>(iq)}] = vec_unit(idx);
        }
    AInftyAlgebra raw = from_dg(spec);

    SparseVec unit_vec;
    for (int m = 0; m < H.M.space.dim(); ++m) {
        int idx = H.find_item(m, {}, m);
        if (idx < 0) throw std::logic_error("end_complex_algebra: missing identity item");
        vec_add_term(unit_vec, idx, Scalar(1));
    }
    int slot = unit_vec.front().first;
    AInftyAlgebra alg = with_unit_element(raw, unit_vec, slot, "id");
    alg.name = name;
    E.identity_items = unit_vec;
    E.alg = std::make_shared<AInftyAlgebra>(std::move(alg));
    return E;
}

}  // namespace ainfty
