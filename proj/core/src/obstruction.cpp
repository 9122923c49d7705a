#include "ainfty/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ainfty/catalog.hpp"

namespace ainfty {

namespace {

// tuples (x^{k_1}, ..., x^{k_r}) over the reduced basis of k[x]/x^6 with
// total weight <= cap, in lexicographic order
std::vector<Tuple> source_tuples(const AInftyAlgebra& X, int arity, int cap) {
    std::vector<Tuple> out;
    std::vector<int> reduced = X.reduced_basis();
    Tuple t;
    std::function<void(int)> rec = [&](int w) {
        if (static_cast<int>(t.size()) == arity) {
            out.push_back(t);
            return;
        }
        for (int l : reduced) {
            if (w + X.wt(l) > cap) continue;
            t.push_back(l);
            rec(w + X.wt(l));
            t.pop_back();
        }
    };
    rec(0);
    return out;
}

struct CochainCell {
    std::vector<int> items;  // item indices of the (degree, weight) cell
    LinearMap d;             // restriction of d into the (degree+1, weight) cell
    std::vector<int> d_target_items;
};

// restriction of the Hom differential to one (degree, weight) cell
CochainCell cell_of(const HomComplex& H, int degree, int weight) {
    CochainCell c;
    for (size_t i = 0; i < H.items.size(); ++i)
        if (H.items[i].degree == degree && H.items[i].weight == weight)
            c.items.push_back(static_cast<int>(i));
    for (size_t i = 0; i < H.items.size(); ++i)
        if (H.items[i].degree == degree + 1 && H.items[i].weight == weight)
            c.d_target_items.push_back(static_cast<int>(i));
    std::vector<BasisElement> sb, tb;
    for (int i : c.items) sb.push_back(H.space.basis[i]);
    for (int i : c.d_target_items) tb.push_back(H.space.basis[i]);
    c.d = LinearMap(BigradedSpace(sb), BigradedSpace(tb), 1, 0);
    for (size_t col = 0; col < c.items.size(); ++col) {
        for (const auto& [o, v] : H.d_cols[c.items[col]]) {
            auto pos = std::find(c.d_target_items.begin(), c.d_target_items.end(), o);
            if (pos == c.d_target_items.end())
                throw std::logic_error("cell_of: differential leaves the cell");
            c.d.add_entry(static_cast<int>(pos - c.d_target_items.begin()),
                          static_cast<int>(col), v);
        }
    }
    return c;
}

SparseVec to_cell_coords(const CochainCell& c, const SparseVec& items_vec) {
    SparseVec out;
    for (const auto& [i, v] : items_vec) {
        auto pos = std::find(c.items.begin(), c.items.end(), i);
        if (pos == c.items.end()) throw std::logic_error("to_cell_coords: stray item");
        vec_add_term(out, static_cast<int>(pos - c.items.begin()), v);
    }
    return out;
}

SparseVec from_cell_coords(const CochainCell& c, const SparseVec& cell_vec) {
    SparseVec out;
    for (const auto& [i, v] : cell_vec) vec_add_term(out, c.items[i], v);
    return out;
}

}  // namespace

AInftyModule trivial_module_over_y_cube(AlgebraPtr y3) {
    BigradedSpace sp({{"z", 0, 0}});
    std::map<int, SparseVec> d;  // zero differential
    std::map<std::pair<int, int>, SparseVec> action;
    action[{0, y3->unit}] = vec_unit(0);  // z . 1 = z; y and y^2 act by zero
    return module_from_dg(y3, "k", sp, d, action);
}

std::map<int, int> MorphismPrefix::certified_caps() const {
    // Relations at arity r and weight w stay inside the (W, L) truncation for
    // w <= L + r - 2, but their obstruction theory rests on the lower-arity
    // relations at the same weight, so the certified interior is the nested
    // uniform cap min(W, L). (The rim equations at w = L + r - 1 are
    // genuinely inconsistent in the truncation; the solver refuses them
    // rather than truncating silently.)
    std::map<int, int> caps;
    for (int r = 1; r <= arity; ++r) caps[r] = std::min(weight_bound, length_bound);
    return caps;
}

MorphismPrefix prescribe_g1(int weight_bound, int length_bound) {
    MorphismPrefix P;
    P.source = make_algebra_ptr("truncated_poly(6)");
    AlgebraPtr y3 = make_algebra_ptr("y_cube");
    P.target = end_complex_algebra(y3, trivial_module_over_y_cube(y3), weight_bound, length_bound,
                                   "End_k[y]/y3(k)");
    P.weight_bound = weight_bound;
    P.length_bound = length_bound;

    const AInftyAlgebra& X = *P.source;
    const AInftyAlgebra& E = *P.target.alg;
    P.g.source = P.source;
    P.g.target = P.target.alg;

    // e = cochain dual to (z; y)
    int y = y3->space.index_of("y");
    int e_item = P.target.hom.find_item(0, std::array{y}, 0);
    if (e_item < 0) throw std::logic_error("prescribe_g1: missing dual cochain (z; y)");
    SparseVec e = P.target.alg_of_item(vec_unit(e_item));

    // g_1(x^k) = e^{o k}; plain composition = mu_2 (degree-0 inputs)
    SparseVec power = vec_unit(E.unit);
    P.g.set_f(1, {X.unit}, vec_unit(E.unit));
    for (int k = 1; k <= 5; ++k) {
        std::array<SparseVec, 2> args = {power, e};
        power = E.mu_apply(2, args);
        if (power.empty()) throw std::logic_error("prescribe_g1: e^k vanished");
        int xk = X.space.index_of(k == 1 ? "x" : "x" + std::to_string(k));
        P.g.set_f(1, {xk}, power);
    }
    P.arity = 1;
    P.g.certified_weight_caps = P.certified_caps();
    return P;
}

ObstructionSystem assemble_obstruction(const MorphismPrefix& prefix, int n) {
    ObstructionSystem sys;
    sys.n = n;
    const AInftyAlgebra& X = *prefix.source;
    const int cap = std::min(prefix.weight_bound, prefix.length_bound);
    for (const Tuple& t : source_tuples(X, n + 1, cap)) {
        // residual of the arity-(n+1) relation with g_{n+1} = 0 (and g as is)
        SparseVec r_alg = morphism_relation_residual(prefix.g, t);
        sys.residual[t] = prefix.target.item_of_alg(r_alg);
        ++sys.equations;
    }
    // gauge dimensions: closed replacements of g_n per weight
    if (n >= 2) {
        const int gauge_cap = std::min(prefix.weight_bound, prefix.length_bound);
        for (int w = n; w <= gauge_cap; ++w) {
            CochainCell cell = cell_of(prefix.target.hom, 1 - n, w);
            if (cell.items.empty()) continue;
            sys.gauge_dims[w] = static_cast<int>(kernel_basis(cell.d).size());
        }
    }
    for (const auto& [w, gd] : sys.gauge_dims) {
        (void)w;
        sys.unknowns += gd;
    }
    return sys;
}

StepOutcome extend_one_arity(MorphismPrefix& prefix,
                             const std::map<Tuple, SparseVec>* corruption) {
    const int n = prefix.arity;
    StepOutcome out;
    const AInftyAlgebra& X = *prefix.source;
    const AInftyAlgebra& E = *prefix.target.alg;
    const HomComplex& H = prefix.target.hom;
    const int cap = std::min(prefix.weight_bound, prefix.length_bound);
    const int gauge_cap = cap;

    std::vector<Tuple> eq_tuples = source_tuples(X, n + 1, cap);
    out.equations = static_cast<long>(eq_tuples.size());
    auto tuple_weight = [&](const Tuple& t) {
        int w = 0;
        for (int l : t) w += X.wt(l);
        return w;
    };
    auto residual_items = [&](const Tuple& u) {
        SparseVec r = prefix.target.item_of_alg(morphism_relation_residual(prefix.g, u));
        if (corruption) {
            auto it = corruption->find(u);
            if (it != corruption->end()) vec_axpy(r, it->second, Scalar(1));
        }
        return r;
    };
    // cells are shared per weight
    std::map<int, CochainCell> sol_cell, rhs_cell;
    for (const Tuple& u : eq_tuples) {
        int w = tuple_weight(u);
        if (!sol_cell.count(w)) {
            sol_cell.emplace(w, cell_of(H, -n, w));
            rhs_cell.emplace(w, cell_of(H, 1 - n, w));
        }
    }
    // residual components outside the (1-n, w) cell can never be matched by
    // any unknown; they certify inconsistency immediately
    auto split_residual = [&](const Tuple& u, const SparseVec& items, SparseVec& in_cell,
                              SparseVec& stray) {
        int w = tuple_weight(u);
        const CochainCell& rc = rhs_cell.at(w);
        in_cell.clear();
        stray.clear();
        for (const auto& [i, c] : items) {
            auto pos = std::find(rc.items.begin(), rc.items.end(), i);
            if (pos == rc.items.end())
                vec_add_term(stray, i, c);
            else
                vec_add_term(in_cell, static_cast<int>(pos - rc.items.begin()), c);
        }
    };

    // tier 1: solve d(g_{n+1}(u)) = residual(u) per tuple with no gauge
    bool tier1_ok = true;
    std::map<Tuple, SparseVec> g_next;  // item coords
    for (const Tuple& u : eq_tuples) {
        int w = tuple_weight(u);
        SparseVec in_cell, stray;
        split_residual(u, residual_items(u), in_cell, stray);
        if (!stray.empty()) {
            out.success = false;
            out.failure = "residual leaves its bidegree cell (no unknown can match it)";
            out.witness = vec_unit(stray.front().first);
            return out;
        }
        auto res = solve_linear_system(sol_cell.at(w).d, in_cell);
        if (!res.solved()) {
            tier1_ok = false;
            if (n < 2) {
                out.success = false;
                out.failure = "arity-2 system inconsistent";
                out.witness = res.witness;
                return out;
            }
            break;
        }
        g_next[u] = from_cell_coords(sol_cell.at(w), *res.solution);
    }

    if (!tier1_ok) {
        // tier 2: one coupled system over all closed replacements h_n of g_n
        // (the gauge) together with the g_{n+1}; unknowns are kernel
        // coordinates of h per arity-n tuple.
        g_next.clear();
        struct Gauge {
            Tuple t;
            int weight;
            int first_lambda;
            const std::vector<SparseVec>* kernel;  // cell coords at (1-n, w(t))
        };
        std::map<int, std::vector<SparseVec>> kernels;   // per weight
        std::map<int, CochainCell> hcells;
        std::vector<Gauge> gauges;
        std::map<Tuple, int> gauge_index;
        int lambda_count = 0;
        for (const Tuple& t : source_tuples(X, n, gauge_cap)) {
            int w = tuple_weight(t);
            if (!hcells.count(w)) {
                hcells.emplace(w, cell_of(H, 1 - n, w));
                kernels.emplace(w, kernel_basis(hcells.at(w).d));
            }
            if (kernels.at(w).empty()) continue;
            gauge_index[t] = static_cast<int>(gauges.size());
            gauges.push_back({t, w, lambda_count, &kernels.at(w)});
            lambda_count += static_cast<int>(kernels.at(w).size());
        }
        out.unknowns = lambda_count;

        // kernel vectors in algebra coordinates, per weight
        std::map<int, std::vector<SparseVec>> kernel_alg;
        for (const auto& [w, ks] : kernels) {
            auto& v = kernel_alg[w];
            for (const auto& k : ks)
                v.push_back(prefix.target.alg_of_item(from_cell_coords(hcells.at(w), k)));
        }

        // left-kernel functionals of each solution cell, for consistency rows
        std::map<int, std::vector<SparseVec>> Y;
        for (const auto& [w, cell] : sol_cell) {
            LinearMap dT(cell.d.target, cell.d.source, -1, 0);
            for (int j = 0; j < cell.d.source.dim(); ++j)
                for (const auto& [i, v] : cell.d.cols[j]) dT.add_entry(j, i, v);
            Y[w] = kernel_basis(dT);
        }

        std::vector<SparseVec> rows;
        std::vector<Scalar> rhs;
        for (const Tuple& u : eq_tuples) {
            const int w = tuple_weight(u);
            const int r = static_cast<int>(u.size());
            SparseVec in_cell, stray;
            split_residual(u, residual_items(u), in_cell, stray);
            if (!stray.empty()) {
                out.success = false;
                out.failure = "residual leaves its bidegree cell (no unknown can match it)";
                out.witness = vec_unit(stray.front().first);
                return out;
            }
            // Lin(h)(u) = mu_2(f_1(u_1), h(rest)) + mu_2(h(first n), f_1(last))
            //           - sum_t (-1)^{l_1^{t-1}} h(u with slots t, t+1 contracted)
            std::map<int, SparseVec> lin;  // lambda id -> rhs-cell coords
            auto add_h_terms = [&](const Tuple& ht, const Scalar& sg, const SparseVec* left_f1,
                                   const SparseVec* right_f1) {
                auto git = gauge_index.find(ht);
                if (git == gauge_index.end()) return;
                const Gauge& g = gauges[git->second];
                for (size_t k = 0; k < g.kernel->size(); ++k) {
                    const SparseVec& ha = kernel_alg.at(g.weight)[k];
                    SparseVec items;
                    if (left_f1) {
                        std::array<SparseVec, 2> args = {*left_f1, ha};
                        items = prefix.target.item_of_alg(E.mu_apply(2, args));
                    } else if (right_f1) {
                        std::array<SparseVec, 2> args = {ha, *right_f1};
                        items = prefix.target.item_of_alg(E.mu_apply(2, args));
                    } else {
                        items = prefix.target.item_of_alg(ha);
                    }
                    if (items.empty()) continue;
                    const CochainCell& rc = rhs_cell.at(w);
                    SparseVec cc = to_cell_coords(rc, items);
                    if (cc.empty()) continue;
                    vec_axpy(lin[g.first_lambda + static_cast<int>(k)], cc, sg);
                }
            };
            {
                Tuple rest(u.begin() + 1, u.end());
                const SparseVec* f1 = prefix.g.f_entry(1, std::span<const int>(u).first(1));
                if (f1) add_h_terms(rest, Scalar(1), f1, nullptr);
            }
            {
                Tuple firstn(u.begin(), u.end() - 1);
                const SparseVec* f1 = prefix.g.f_entry(1, std::span<const int>(u).last(1));
                if (f1) add_h_terms(firstn, Scalar(1), nullptr, f1);
            }
            {
                int par = 0;
                for (int t = 0; t + 1 < r; ++t) {
                    const SparseVec* m2 = X.mu_entry(2, std::span<const int>(u).subspan(t, 2));
                    if (m2)
                        for (const auto& [ci, cc] : *m2) {
                            Tuple ct;
                            for (int s = 0; s < t; ++s) ct.push_back(u[s]);
                            ct.push_back(ci);
                            for (int s = t + 2; s < r; ++s) ct.push_back(u[s]);
                            add_h_terms(ct, parity_sign(par & 1) * cc * Scalar(-1), nullptr,
                                        nullptr);
                        }
                    par = (par + sdeg(X.deg(u[t]))) & 1;
                }
            }
            for (const auto& y : Y.at(w)) {
                SparseVec row;
                Scalar b(0);
                for (const auto& [i, c] : y) b -= c * vec_coeff(in_cell, i);
                for (const auto& [lid, cc] : lin) {
                    Scalar dot(0);
                    for (const auto& [i, c] : y) dot += c * vec_coeff(cc, i);
                    if (!dot.is_zero()) vec_add_term(row, lid, dot);
                }
                if (row.empty() && b.is_zero()) continue;
                rows.push_back(std::move(row));
                rhs.push_back(b);
            }
        }

        std::vector<BasisElement> lb, eb;
        for (int i = 0; i < lambda_count; ++i) lb.push_back({"l" + std::to_string(i), 0, 0});
        for (size_t i = 0; i < rows.size(); ++i) eb.push_back({"q" + std::to_string(i), 0, 0});
        LinearMap lamA(BigradedSpace(lb), BigradedSpace(eb), 0, 0);
        SparseVec lamB;
        for (size_t i = 0; i < rows.size(); ++i) {
            for (const auto& [j, c] : rows[i]) lamA.add_entry(static_cast<int>(i), j, c);
            if (!rhs[i].is_zero()) vec_add_term(lamB, static_cast<int>(i), rhs[i]);
        }
        auto lam_res = solve_linear_system(lamA, lamB);
        if (!lam_res.solved()) {
            out.success = false;
            out.failure = "obstruction system inconsistent at arity " + std::to_string(n + 1);
            out.witness = lam_res.witness;
            return out;
        }
        out.tier = "gauged";

        // install the gauge into g_n
        for (const Gauge& g : gauges) {
            SparseVec acc;
            for (size_t k = 0; k < g.kernel->size(); ++k) {
                Scalar lv = vec_coeff(*lam_res.solution, g.first_lambda + static_cast<int>(k));
                if (!lv.is_zero()) vec_axpy(acc, kernel_alg.at(g.weight)[k], lv);
            }
            if (acc.empty()) continue;
            const SparseVec* cur = prefix.g.f_entry(n, g.t);
            SparseVec now = cur ? *cur : SparseVec{};
            vec_axpy(now, acc, Scalar(1));
            prefix.g.set_f(n, Tuple(g.t), now);
        }
        // resolve each tuple with the gauged g_n
        for (const Tuple& u : eq_tuples) {
            int w = tuple_weight(u);
            SparseVec in_cell, stray;
            split_residual(u, residual_items(u), in_cell, stray);
            if (!stray.empty()) {
                out.success = false;
                out.failure = "gauged residual leaves its cell";
                out.witness = vec_unit(stray.front().first);
                return out;
            }
            auto res = solve_linear_system(sol_cell.at(w).d, in_cell);
            if (!res.solved()) {
                out.success = false;
                out.failure = "gauged system left an unsolvable tuple";
                out.witness = res.witness;
                return out;
            }
            g_next[u] = from_cell_coords(sol_cell.at(w), *res.solution);
        }
    }

    for (const auto& [t, items] : g_next) {
        SparseVec alg = prefix.target.alg_of_item(items);
        if (!alg.empty()) prefix.g.set_f(n + 1, Tuple(t), alg);
    }
    if (static_cast<int>(prefix.g.f.size()) <= n + 1) prefix.g.f.resize(n + 2);
    prefix.arity = n + 1;
    prefix.g.certified_weight_caps = prefix.certified_caps();
    if (out.tier.empty()) out.tier = "direct";
    return out;
}

SolveOutcome solve_to_arity(int N, int weight_bound, int length_bound) {
    SolveOutcome out;
    out.prefix = prescribe_g1(weight_bound, length_bound);
    for (int n = 1; n < N; ++n) {
        StepOutcome st = extend_one_arity(out.prefix);
        std::ostringstream os;
        os << "arity " << n + 1 << ": " << (st.success ? "solved" : "FAILED") << " (" << st.tier
           << ", " << st.equations << " equations)";
        out.log.push_back(os.str());
        if (!st.success) {
            out.success = false;
            out.failure = st.failure;
            out.witness = st.witness;
            return out;
        }
    }
    return out;
}

CheckReport check_prefix(const MorphismPrefix& prefix) {
    return check_structure(prefix.g, prefix.arity);
}

BigradedCohomologyReport end_of_k_cohomology(int weight_max) {
    AlgebraPtr y3 = make_algebra_ptr("y_cube");
    HomComplex H = hom_complex(y3, trivial_module_over_y_cube(y3), trivial_module_over_y_cube(y3),
                               weight_max, weight_max);
    BigradedCohomologyReport rep;
    for (int w = 0; w <= weight_max; ++w) {
        HomologyReport h = H.weight_slice_cohomology(w);
        for (const auto& [key, d] : h.dims)
            if (d > 0) rep.dims[{key.first, w}] += d;
    }
    return rep;
}

}  // namespace ainfty
