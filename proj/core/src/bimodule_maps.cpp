#include <algorithm>
#include <stdexcept>

#include "ainfty/ainfty.hpp"
#include "ainfty/catalog.hpp"
#include "ainfty/hochschild.hpp"
#include "ainfty/obstruction.hpp"

namespace ainfty {

LinearMap EndAlgebra::op_of(const SparseVec& v) const {
    if (v.empty()) throw std::invalid_argument("op_of: zero has no homogeneous bidegree");
    LinearMap out(V, V, alg->deg(v.front().first), alg->wt(v.front().first));
    for (const auto& [i, c] : v) {
        const LinearMap& e = op_of_basis.at(i);
        for (int j = 0; j < V.dim(); ++j) vec_axpy(out.cols[j], e.cols[j], c);
    }
    return out;
}

SparseVec EndAlgebra::coords_of(const LinearMap& op) const {
    const int n = V.dim();
    // new basis: slot (0,0) holds the identity; elementary elsewhere
    SparseVec out;
    Scalar alpha = op.entry(0, 0);
    if (!alpha.is_zero()) vec_add_term(out, alg->unit, alpha);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == 0 && j == 0) continue;
            Scalar c = op.entry(j, i);  // v_i -> v_j sits at basis index i*n + j
            if (i == j) c -= alpha;
            if (!c.is_zero()) vec_add_term(out, i * n + j, c);
        }
    return out;
}

namespace {

int correspondence_sign(const AInftyAlgebra& B, std::span<const int> bs, int m_degree) {
    // l = l_1^s(b) |m| + sum_{p<q} (|b_p|+1)(|b_q|+1), plus s: the extra
    // (-1)^s precomposes with the sign automorphism on the opposite side,
    // matching the strictly unital opposite-algebra normalization (it makes
    // f_{0,1}(1_B) = +1_C; the checker and the round trip pin it down).
    int l1s = 0;
    for (int b : bs) l1s += sdeg(B.deg(b));
    int par = (l1s & 1) * (m_degree & 1) + static_cast<int>(bs.size());
    for (size_t p = 0; p < bs.size(); ++p)
        for (size_t q = p + 1; q < bs.size(); ++q)
            par += sdeg(B.deg(bs[p])) * sdeg(B.deg(bs[q]));
    return par & 1;
}

}  // namespace

Bimorphism bimorphism_from_bimodule(const AInftyBimodule& M, const EndAlgebra& E,
                                    AlgebraPtr right_op) {
    Bimorphism f;
    f.A = M.left;
    f.B = right_op;
    f.C = E.alg;
    f.complete_to = M.complete_to;
    const AInftyAlgebra& B = *M.right;

    for (const auto& [ij, tab] : M.mu) {
        auto [r, s] = ij;
        if (r + s == 0) continue;  // the mu_1 part is the differential, not a component
        // group table entries by (a-tuple, b-tuple): each gives one operator
        std::map<Tuple, LinearMap> ops;
        for (const auto& [key, val] : tab) {
            Tuple absk;
            for (int t = 0; t < r; ++t) absk.push_back(key[t]);
            for (int t = 0; t < s; ++t) absk.push_back(key[r + 1 + t]);
            auto it = ops.find(absk);
            if (it == ops.end()) {
                int dd = 0, dw = 0;
                for (int t = 0; t < r; ++t) {
                    dd += M.left->deg(key[t]);
                    dw += M.left->wt(key[t]);
                }
                for (int t = 0; t < s; ++t) {
                    dd += B.deg(key[r + 1 + t]);
                    dw += B.wt(key[r + 1 + t]);
                }
                it = ops.emplace(absk, LinearMap(M.space, M.space, dd + 1 - r - s, dw)).first;
            }
            int m = key[r];
            for (const auto& [o, c] : val) {
                std::span<const int> bs(key.data() + r + 1, static_cast<size_t>(s));
                Scalar sg = parity_sign(correspondence_sign(B, bs, M.space.degree(m)));
                it->second.add_entry(o, m, sg * c);
            }
        }
        for (const auto& [absk, op] : ops) {
            // bimorphism key: (a_1..a_r, c_1..c_s) with c = reversed b
            Tuple key;
            for (int t = 0; t < r; ++t) key.push_back(absk[t]);
            for (int t = s - 1; t >= 0; --t) key.push_back(absk[r + t]);
            SparseVec val = E.coords_of(op);
            if (!val.empty()) f.set_f(r, s, std::move(key), std::move(val));
        }
    }
    return f;
}

AInftyBimodule bimodule_from_bimorphism(const Bimorphism& f, const EndAlgebra& E, AlgebraPtr left,
                                        AlgebraPtr right, const std::string& name,
                                        const MultiOpTable* mu00) {
    AInftyBimodule M;
    M.left = left;
    M.right = right;
    M.name = name;
    M.space = E.V;
    M.complete_to = f.complete_to;
    const AInftyAlgebra& B = *right;

    if (mu00)
        for (const auto& [key, val] : *mu00) M.set_mu(0, 0, key, val);
    for (const auto& [rs, tab] : f.f) {
        auto [r, s] = rs;
        for (const auto& [key, val] : tab) {
            LinearMap op = E.op_of(val);
            std::span<const int> cs(key.data() + r, static_cast<size_t>(s));
            // b-tuple = reversed c-tuple
            Tuple bs(cs.rbegin(), cs.rend());
            int sg = correspondence_sign(B, bs, 0);
            // the |m|-dependent part of the sign varies per column
            int l1s = 0;
            for (int b : bs) l1s += sdeg(B.deg(b));
            for (int m = 0; m < E.V.dim(); ++m) {
                SparseVec col = op.cols[m];
                if (col.empty()) continue;
                int par = (sg + (l1s & 1) * (E.V.degree(m) & 1)) & 1;
                Tuple mk;
                for (int t = 0; t < r; ++t) mk.push_back(key[t]);
                mk.push_back(m);
                for (int t = 0; t < s; ++t) mk.push_back(bs[t]);
                M.set_mu(r, s, std::move(mk), vec_scale(col, parity_sign(par)));
            }
        }
    }
    return M;
}

AInftyAlgebra with_negated_weights(const AInftyAlgebra& A) {
    if (A.weight_truncation)
        throw std::invalid_argument("with_negated_weights: truncated algebras not supported");
    AInftyAlgebra out = A;
    for (auto& b : out.space.basis) b.weight = -b.weight;
    out.space = BigradedSpace(out.space.basis);
    return out;
}

AInftyBimodule bimodule_from_prefix(const MorphismPrefix& g, int max_total,
                                    const std::string& name) {
    const HomComplex& H = g.target.hom;
    AlgebraPtr left = g.source;
    AlgebraPtr right = std::make_shared<AInftyAlgebra>(with_negated_weights(*H.A));

    AInftyBimodule M;
    M.left = left;
    M.right = right;
    M.name = name;
    M.space = H.M.space;
    M.complete_to = max_total;

    // mu_{0,l}: the module structure of H.M
    for (int arity = 1; arity < static_cast<int>(H.M.muM.size()); ++arity) {
        if (arity - 1 > max_total) continue;
        for (const auto& [key, val] : H.M.muM[arity]) M.set_mu(0, arity - 1, key, val);
    }

    const int cap = std::min(g.weight_bound, g.length_bound);
    // mu_{n,l} from the stored morphism components
    for (int n = 1; n <= g.arity && n <= max_total && n < static_cast<int>(g.g.f.size()); ++n) {
        for (const auto& [key, val] : g.g.f[n]) {
            SparseVec items = g.target.item_of_alg(val);
            for (const auto& [it, c] : items) {
                const auto& item = H.items[it];
                int l = static_cast<int>(item.word.size());
                if (n + l > max_total) continue;
                Tuple mk;
                for (int t : key) mk.push_back(t);
                mk.push_back(item.m);
                for (int t : item.word) mk.push_back(t);
                SparseVec cur = M.mu_entry(n, l, mk) ? *M.mu_entry(n, l, mk) : SparseVec{};
                vec_add_term(cur, item.n, c);
                M.set_mu(n, l, std::move(mk), std::move(cur));
            }
        }
    }
    // completeness audit: an entry (n, l) can only be nonzero at source
    // weight w = the unique weight carrying cochains of degree 1-n with a
    // length-l component; if that weight escapes the solved range the
    // component is genuinely missing.
    for (int n = 1; n <= max_total; ++n) {
        for (int l = 0; n + l <= max_total; ++l) {
            for (int w = n; w <= 5 * n; ++w) {
                if (!H.shape_exists(1 - n, w, l)) continue;
                if (n <= g.arity && w <= cap) continue;  // covered by the solved tables
                throw ArityExhausted("bimodule_from_prefix: component (" + std::to_string(n) +
                                     ", " + std::to_string(l) + ") requires source weight " +
                                     std::to_string(w) + " beyond the certified range");
            }
        }
    }
    return M;
}

}  // namespace ainfty
