#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ainfty/ainfty.hpp"

namespace ainfty {

namespace {

SparseVec products_apply(const std::map<std::pair<int, int>, SparseVec>& prod, const SparseVec& a,
                         const SparseVec& b) {
    SparseVec out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            auto it = prod.find({i, j});
            if (it != prod.end()) vec_axpy(out, it->second, ci * cj);
        }
    return out;
}

SparseVec d_apply(const std::map<int, SparseVec>& d, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) {
        auto it = d.find(i);
        if (it != d.end()) vec_axpy(out, it->second, c);
    }
    return out;
}

}  // namespace

AInftyAlgebra from_dg(const DgAlgebraSpec& spec) {
    const BigradedSpace& sp = spec.space;
    auto bad = [&](const std::string& what) {
        throw std::invalid_argument("from_dg(" + spec.name + "): " + what);
    };

    for (const auto& [i, v] : spec.d)
        for (const auto& [o, c] : v) {
            (void)c;
            if (sp.degree(o) != sp.degree(i) + 1 || sp.weight(o) != sp.weight(i))
                bad("differential is not of bidegree (+1, 0) at " + sp.name(i));
        }
    for (const auto& [ij, v] : spec.products) {
        auto [i, j] = ij;
        for (const auto& [o, c] : v) {
            (void)c;
            if (sp.degree(o) != sp.degree(i) + sp.degree(j) || sp.weight(o) != sp.weight(i) + sp.weight(j))
                bad("product " + sp.name(i) + "*" + sp.name(j) + " is not bigraded");
        }
    }

    auto within = [&](int wsum) { return !spec.weight_truncation || wsum <= *spec.weight_truncation; };

    // d^2 = 0
    for (const auto& [i, v] : spec.d)
        if (!d_apply(spec.d, v).empty()) bad("d^2 != 0 at " + sp.name(i));

    // Leibniz on pairs: d(ab) = (da)b + (-1)^{|a|} a (db)
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = 0; j < sp.dim(); ++j) {
            if (!within(sp.weight(i) + sp.weight(j))) continue;
            SparseVec ab = products_apply(spec.products, vec_unit(i), vec_unit(j));
            SparseVec lhs = d_apply(spec.d, ab);
            SparseVec rhs = products_apply(spec.products, d_apply(spec.d, vec_unit(i)), vec_unit(j));
            vec_axpy(rhs, products_apply(spec.products, vec_unit(i), d_apply(spec.d, vec_unit(j))),
                     parity_sign(sp.degree(i) & 1));
            if (lhs != rhs) bad("Leibniz fails at pair (" + sp.name(i) + ", " + sp.name(j) + ")");
        }

    // associativity on triples
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = 0; j < sp.dim(); ++j)
            for (int k = 0; k < sp.dim(); ++k) {
                if (!within(sp.weight(i) + sp.weight(j) + sp.weight(k))) continue;
                SparseVec l = products_apply(spec.products,
                                             products_apply(spec.products, vec_unit(i), vec_unit(j)),
                                             vec_unit(k));
                SparseVec r = products_apply(spec.products, vec_unit(i),
                                             products_apply(spec.products, vec_unit(j), vec_unit(k)));
                if (l != r)
                    bad("associativity fails at (" + sp.name(i) + ", " + sp.name(j) + ", " +
                        sp.name(k) + ")");
            }

    if (spec.unit >= 0) {
        if (sp.degree(spec.unit) != 0 || sp.weight(spec.unit) != 0) bad("unit must sit in bidegree (0,0)");
        if (spec.d.count(spec.unit)) bad("d(1) != 0");
        for (int a = 0; a < sp.dim(); ++a) {
            SparseVec l = products_apply(spec.products, vec_unit(spec.unit), vec_unit(a));
            SparseVec r = products_apply(spec.products, vec_unit(a), vec_unit(spec.unit));
            if (l != vec_unit(a) || r != vec_unit(a)) bad("unit law fails at " + sp.name(a));
        }
    }

    AInftyAlgebra A;
    A.name = spec.name;
    A.space = sp;
    A.unit = spec.unit;
    A.weight_truncation = spec.weight_truncation;
    A.mu.resize(3);
    for (const auto& [i, v] : spec.d) A.set_mu(1, {i}, vec_scale(v, Scalar(-1)));
    for (const auto& [ij, v] : spec.products)
        A.set_mu(2, {ij.first, ij.second}, vec_scale(v, parity_sign(sp.degree(ij.first) & 1)));
    A.minimal = spec.d.empty();
    A.arity_bound = 2;
    return A;
}

AInftyModule module_from_dg(AlgebraPtr algebra, std::string name, BigradedSpace space,
                            const std::map<int, SparseVec>& d,
                            const std::map<std::pair<int, int>, SparseVec>& action) {
    auto bad = [&](const std::string& what) {
        throw std::invalid_argument("module_from_dg(" + name + "): " + what);
    };
    for (const auto& [i, v] : d)
        if (!d_apply(d, v).empty()) bad("d^2 != 0 at " + space.name(i));
    // module Leibniz: d(m b) = (dm) b + (-1)^{|m|} m (db), with the algebra
    // differential recovered from mu_1 = -d
    const AInftyAlgebra& B = *algebra;
    auto act = [&](const SparseVec& m, const SparseVec& b) {
        return products_apply(action, m, b);
    };
    for (int m = 0; m < space.dim(); ++m)
        for (int b = 0; b < B.dim(); ++b) {
            SparseVec db;  // plain differential of b
            if (const SparseVec* mb = B.mu_entry(1, std::array{b})) db = vec_scale(*mb, Scalar(-1));
            SparseVec lhs = d_apply(d, act(vec_unit(m), vec_unit(b)));
            SparseVec rhs = act(d_apply(d, vec_unit(m)), vec_unit(b));
            vec_axpy(rhs, act(vec_unit(m), db), parity_sign(space.degree(m) & 1));
            if (lhs != rhs) bad("module Leibniz fails at (" + space.name(m) + ", " + B.space.name(b) + ")");
        }
    for (int m = 0; m < space.dim(); ++m)
        for (int a = 0; a < B.dim(); ++a)
            for (int b = 0; b < B.dim(); ++b) {
                SparseVec prod_ab;  // plain product in B, from mu_2
                if (const SparseVec* p = B.mu_entry(2, std::array{a, b}))
                    prod_ab = vec_scale(*p, parity_sign(B.deg(a) & 1));
                SparseVec l = act(act(vec_unit(m), vec_unit(a)), vec_unit(b));
                SparseVec r = act(vec_unit(m), prod_ab);
                if (l != r) bad("module associativity fails");
            }
    if (B.has_unit())
        for (int m = 0; m < space.dim(); ++m)
            if (act(vec_unit(m), vec_unit(B.unit)) != vec_unit(m)) bad("m * 1 != m");

    AInftyModule M;
    M.algebra = std::move(algebra);
    M.name = std::move(name);
    M.space = std::move(space);
    M.muM.resize(3);
    for (const auto& [i, v] : d) M.set_mu(1, {i}, v);
    for (const auto& [mb, v] : action)
        M.set_mu(2, {mb.first, mb.second}, vec_scale(v, parity_sign((M.space.degree(mb.first) + 1) & 1)));
    return M;
}

AInftyAlgebra opposite(const AInftyAlgebra& A, bool literal_reversal_sign) {
    AInftyAlgebra op;
    op.name = A.name + "^op";
    op.space = A.space;
    op.unit = A.unit;
    op.minimal = A.minimal;
    op.weight_truncation = A.weight_truncation;
    op.tables_complete_to = A.tables_complete_to;
    op.mu.resize(A.mu.size());
    for (int n = 1; n < static_cast<int>(A.mu.size()); ++n) {
        for (const auto& [k, v] : A.mu[n]) {
            Tuple rk(k.rbegin(), k.rend());
            int sigma = 0;
            for (size_t i = 0; i < rk.size(); ++i)
                for (size_t j = i + 1; j < rk.size(); ++j)
                    sigma += sdeg(A.deg(rk[i])) * sdeg(A.deg(rk[j]));
            if (!literal_reversal_sign) sigma += n + 1;
            op.set_mu(n, std::move(rk), vec_scale(v, parity_sign(sigma & 1)));
        }
    }
    return op;
}

AInftyBimodule diagonal_bimodule(AlgebraPtr Aptr) {
    const AInftyAlgebra& A = *Aptr;
    AInftyBimodule M;
    M.left = Aptr;
    M.right = Aptr;
    M.name = "diagonal(" + A.name + ")";
    M.space = A.space;
    M.complete_to = (A.tables_complete_to == std::numeric_limits<int>::max())
                        ? std::numeric_limits<int>::max()
                        : A.tables_complete_to - 1;
    for (int n = 1; n < static_cast<int>(A.mu.size()); ++n) {
        for (const auto& [k, v] : A.mu[n]) {
            for (int i = 0; i + 1 <= n; ++i) {
                int j = n - 1 - i;
                // sign (-1)^{l_1^i(a)+1} over the i entries left of the module slot
                int par = (A.tuple_sdeg_parity(k, i) + 1) & 1;
                M.set_mu(i, j, k, vec_scale(v, parity_sign(par)));
            }
        }
    }
    return M;
}

AInftyAlgebra with_unit_element(const AInftyAlgebra& A, const SparseVec& unit_vec, int replaced,
                                const std::string& unit_name) {
    Scalar cr = vec_coeff(unit_vec, replaced);
    if (cr.is_zero())
        throw std::invalid_argument("with_unit_element: unit_vec has no component at the replaced slot");
    for (const auto& [i, c] : unit_vec) {
        (void)c;
        if (A.deg(i) != 0 || A.wt(i) != 0)
            throw std::invalid_argument("with_unit_element: unit_vec is not of bidegree (0,0)");
    }

    std::vector<BasisElement> nb = A.space.basis;
    nb[replaced].name = unit_name;
    BigradedSpace nsp(nb);

    // old basis vector expressed in the new basis
    auto old_in_new = [&](int i) -> SparseVec {
        if (i != replaced) {
            SparseVec v = vec_unit(i);
            // e_replaced^old = (u - sum_{k != replaced} c_k e_k)/c_r contributes only via i == replaced
            return v;
        }
        SparseVec v = vec_unit(replaced, Scalar(1) / cr);
        for (const auto& [k, c] : unit_vec)
            if (k != replaced) vec_add_term(v, k, -(c / cr));
        return v;
    };
    // for an old input letter: list of (new letter, coefficient) whose
    // expansion in the old basis contains it
    auto preimages = [&](int old_letter) {
        std::vector<std::pair<int, Scalar>> out;
        if (old_letter != replaced) out.emplace_back(old_letter, Scalar(1));
        Scalar c = vec_coeff(unit_vec, old_letter);
        if (!c.is_zero()) out.emplace_back(replaced, c);
        return out;
    };

    AInftyAlgebra out;
    out.name = A.name;
    out.space = nsp;
    out.unit = replaced;
    out.minimal = A.minimal;
    out.weight_truncation = A.weight_truncation;
    out.tables_complete_to = A.tables_complete_to;
    out.mu.resize(A.mu.size());

    std::map<int, std::map<Tuple, SparseVec, TupleCmp>> accum;  // arity -> table
    for (int n = 1; n < static_cast<int>(A.mu.size()); ++n) {
        for (const auto& [k, v] : A.mu[n]) {
            SparseVec vnew;
            for (const auto& [o, c] : v) vec_axpy(vnew, old_in_new(o), c);
            // fan the key out over preimages slotwise
            Tuple nk(n);
            std::function<void(int, const Scalar&)> fan = [&](int slot, const Scalar& coef) {
                if (slot == n) {
                    vec_axpy(accum[n][nk], vnew, coef);
                    return;
                }
                for (const auto& [nl, c] : preimages(k[slot])) {
                    nk[slot] = nl;
                    fan(slot + 1, coef * c);
                }
            };
            fan(0, Scalar(1));
        }
    }
    for (auto& [n, tab] : accum)
        for (auto& [k, v] : tab) {
            SparseVec vv = v;
            // prune exact zeros introduced by cancellation
            SparseVec clean;
            for (auto& [i, c] : vv)
                if (!c.is_zero()) clean.emplace_back(i, c);
            if (!clean.empty()) out.set_mu(n, k, clean);
        }
    return out;
}

AInftyAlgebra glue(const AInftyBimodule& M, const std::string& name) {
    const AInftyAlgebra& A = *M.left;   // the algebra acting on the left of M
    const AInftyAlgebra& B = *M.right;  // acting on the right
    if (!A.has_unit() || !B.has_unit())
        throw std::invalid_argument("glue: both algebras must be strictly unital");
    if (A.weight_truncation || B.weight_truncation)
        throw std::invalid_argument("glue: truncated algebras are not supported");

    // old basis: A-basis, then B-basis, then M-basis
    std::vector<BasisElement> basis;
    for (const auto& e : A.space.basis) basis.push_back({"A:" + e.name, e.degree, e.weight});
    for (const auto& e : B.space.basis) basis.push_back({"B:" + e.name, e.degree, e.weight});
    for (const auto& e : M.space.basis) basis.push_back({"M:" + e.name, e.degree, e.weight});
    BigradedSpace sp(basis);
    const int offB = A.dim();
    const int offM = A.dim() + B.dim();

    int glue_arity = std::min({A.tables_complete_to, B.tables_complete_to,
                               M.complete_to == std::numeric_limits<int>::max()
                                   ? std::numeric_limits<int>::max()
                                   : M.complete_to + 1});
    int table_arity = std::max(
        {static_cast<int>(A.mu.size()) - 1, static_cast<int>(B.mu.size()) - 1, [&] {
             int m = 0;
             for (const auto& [ij, tab] : M.mu) {
                 (void)tab;
                 m = std::max(m, ij.first + ij.second + 1);
             }
             return m;
         }()});

    AInftyAlgebra C;
    C.name = name;
    C.space = sp;
    C.unit = -1;  // fixed after the basis change
    C.mu.resize(table_arity + 1);
    C.tables_complete_to = glue_arity;

    for (int n = 1; n < static_cast<int>(A.mu.size()); ++n)
        for (const auto& [k, v] : A.mu[n]) C.set_mu(n, k, v);
    for (int n = 1; n < static_cast<int>(B.mu.size()); ++n)
        for (const auto& [k, v] : B.mu[n]) {
            Tuple nk;
            for (int i : k) nk.push_back(offB + i);
            SparseVec nv;
            for (const auto& [o, c] : v) nv.emplace_back(offB + o, c);
            C.set_mu(n, std::move(nk), std::move(nv));
        }
    for (const auto& [ij, tab] : M.mu) {
        auto [i, j] = ij;
        for (const auto& [k, v] : tab) {
            Tuple nk;
            for (int t = 0; t < i; ++t) nk.push_back(k[t]);
            nk.push_back(offM + k[i]);
            for (int t = 0; t < j; ++t) nk.push_back(offB + k[i + 1 + t]);
            int par = 1;  // the +1 in (-1)^{l_1^i(a)+1}
            for (int t = 0; t < i; ++t) par += sdeg(A.deg(k[t]));
            SparseVec nv;
            for (const auto& [o, c] : v) nv.emplace_back(offM + o, c);
            C.set_mu(i + 1 + j, std::move(nk), vec_scale(nv, parity_sign(par & 1)));
        }
    }

    SparseVec unit_vec = vec_add(vec_unit(A.unit), vec_unit(offB + B.unit));
    AInftyAlgebra merged = with_unit_element(C, unit_vec, A.unit, "1");
    merged.name = name;
    merged.minimal = merged.mu.size() <= 1 || merged.mu[1].empty();
    merged.tables_complete_to = glue_arity;
    return merged;
}

EndAlgebra endomorphism_algebra(const BigradedSpace& V, const LinearMap& dV,
                                const std::string& name) {
    const int n = V.dim();
    if (n == 0) throw std::invalid_argument("endomorphism_algebra: zero space");
    std::vector<BasisElement> basis;
    auto ename = [&](int i, int j) { return "E(" + V.name(i) + "->" + V.name(j) + ")"; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            basis.push_back({ename(i, j), V.degree(j) - V.degree(i), V.weight(j) - V.weight(i)});
    BigradedSpace sp(basis);
    auto idx = [&](int i, int j) { return i * n + j; };

    DgAlgebraSpec spec;
    spec.name = name;
    spec.space = sp;
    // d(e_{i->j}) = dV o e_{i->j} - (-1)^{deg} e_{i->j} o dV
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseVec de;
            for (const auto& [k, c] : dV.cols[j]) vec_add_term(de, idx(i, k), c);
            Scalar s = parity_sign((sp.degree(idx(i, j)) + 1) & 1);  // -(-1)^{deg}
            for (int l = 0; l < n; ++l) {
                Scalar c = dV.entry(i, l);
                if (!c.is_zero()) vec_add_term(de, idx(l, j), s * c);
            }
            if (!de.empty()) spec.d[idx(i, j)] = de;
        }
    // e_{i->j} o e_{k->l} = delta_{l,i} e_{k->j}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                spec.products[{idx(i, j), idx(k, i)}] = vec_unit(idx(k, j));
    AInftyAlgebra raw = from_dg(spec);

    SparseVec unit_vec;
    for (int i = 0; i < n; ++i) vec_add_term(unit_vec, idx(i, i), Scalar(1));
    AInftyAlgebra alg = with_unit_element(raw, unit_vec, idx(0, 0), "id");
    alg.name = name;

    EndAlgebra out;
    out.V = V;
    out.op_of_basis.resize(n * n, LinearMap(V, V, 0, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LinearMap op(V, V, V.degree(j) - V.degree(i), V.weight(j) - V.weight(i));
            op.set_entry(j, i, Scalar(1));
            out.op_of_basis[idx(i, j)] = op;
        }
    out.op_of_basis[idx(0, 0)] = LinearMap::identity(V);
    out.alg = std::make_shared<AInftyAlgebra>(std::move(alg));
    return out;
}

}  // namespace ainfty
