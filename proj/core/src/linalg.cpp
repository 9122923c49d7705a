#include "ainfty/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainfty {

SparseVec Echelon::reduce(SparseVec v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
        Scalar c = vec_coeff(v, pivot[r]);
        if (!c.is_zero()) vec_axpy(v, rows[r], -c);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int p = v.front().first;  // leftmost nonzero
    Scalar lead = v.front().second;
    SparseVec norm = vec_scale(v, Scalar(1) / lead);
    // keep earlier rows reduced against the new one
    for (size_t r = 0; r < rows.size(); ++r) {
        Scalar c = vec_coeff(rows[r], p);
        if (!c.is_zero()) vec_axpy(rows[r], norm, -c);
    }
    rows.push_back(std::move(norm));
    pivot.push_back(p);
    return true;
}

namespace {

struct WorkRow {
    SparseVec a;     // coefficients over source columns
    Scalar b;        // right-hand side
    SparseVec comb;  // combination of original equations (for witnesses)
};

}  // namespace

SolveResult solve_linear_system(const LinearMap& A, const SparseVec& b) {
    const int m = A.target.dim();
    const int n = A.source.dim();
    for (const auto& [i, c] : b) {
        (void)c;
        if (i < 0 || i >= m) throw std::invalid_argument("solve_linear_system: rhs dimension mismatch");
    }

    // Row-major copy of A with witness tracking.
    std::vector<WorkRow> rows(m);
    for (int i = 0; i < m; ++i) {
        rows[i].b = vec_coeff(b, i);
        rows[i].comb = vec_unit(i);
    }
    for (int j = 0; j < n; ++j)
        for (const auto& [i, c] : A.cols[j]) rows[i].a.emplace_back(j, c);
    for (auto& r : rows) std::sort(r.a.begin(), r.a.end());

    std::vector<int> pivot_row_of_col(n, -1);
    std::vector<bool> used(m, false);
    for (int col = 0; col < n; ++col) {
        int best = -1;
        for (int i = 0; i < m; ++i) {
            if (used[i] || rows[i].a.empty() || rows[i].a.front().first != col) continue;
            if (best < 0 || rows[i].a.size() < rows[best].a.size()) best = i;
        }
        if (best < 0) continue;
        used[best] = true;
        pivot_row_of_col[col] = best;
        Scalar inv = Scalar(1) / rows[best].a.front().second;
        rows[best].a = vec_scale(rows[best].a, inv);
        rows[best].b *= inv;
        rows[best].comb = vec_scale(rows[best].comb, inv);
        for (int i = 0; i < m; ++i) {
            if (i == best) continue;
            Scalar c = vec_coeff(rows[i].a, col);
            if (c.is_zero()) continue;
            vec_axpy(rows[i].a, rows[best].a, -c);
            rows[i].b -= c * rows[best].b;
            vec_axpy(rows[i].comb, rows[best].comb, -c);
        }
    }

    for (int i = 0; i < m; ++i) {
        if (!used[i] && rows[i].a.empty() && !rows[i].b.is_zero()) {
            SolveResult res;
            res.witness = rows[i].comb;
            return res;
        }
    }

    SparseVec x;
    for (int col = 0; col < n; ++col) {
        int r = pivot_row_of_col[col];
        if (r >= 0 && !rows[r].b.is_zero()) vec_add_term(x, col, rows[r].b);
    }
    SolveResult res;
    res.solution = std::move(x);
    return res;
}

std::vector<SparseVec> kernel_basis(const LinearMap& A) {
    const int n = A.source.dim();
    // Echelon of the equations (rows of A) over the n columns.
    Echelon eq;
    for (int i = 0; i < A.target.dim(); ++i) {
        SparseVec row;
        for (int j = 0; j < n; ++j) {
            Scalar c = vec_coeff(A.cols[j], i);
            if (!c.is_zero()) row.emplace_back(j, c);
        }
        eq.insert(std::move(row));
    }
    std::vector<bool> is_pivot(n, false);
    for (int p : eq.pivot) is_pivot[p] = true;
    std::vector<SparseVec> out;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        SparseVec v = vec_unit(j);
        // x_pivot = -row entries at the free column
        for (size_t r = 0; r < eq.rows.size(); ++r) {
            Scalar c = vec_coeff(eq.rows[r], j);
            if (!c.is_zero()) vec_add_term(v, eq.pivot[r], -c);
        }
        out.push_back(std::move(v));
    }
    return out;
}

int rank(const LinearMap& A) {
    Echelon e;
    for (const auto& col : A.cols) e.insert(col);
    return e.rank();
}

const LinearMap* ComplexSlice::diff(int k) const {
    auto it = differentials.find(k);
    return it == differentials.end() ? nullptr : &it->second;
}

void ComplexSlice::validate() const {
    for (const auto& [k, d] : differentials) {
        if (d.delta_degree != 1 || d.delta_weight != 0)
            throw std::invalid_argument("ComplexSlice: differential bidegree must be (+1, 0)");
        std::string why;
        if (!d.validate(&why)) throw std::invalid_argument("ComplexSlice: " + why);
        const LinearMap* next = diff(k + 1);
        if (next) {
            LinearMap dd = next->compose(d);
            if (!dd.is_zero())
                throw std::invalid_argument("ComplexSlice: d∘d != 0 at degree " + std::to_string(k));
        }
    }
}

int HomologyReport::dim(int degree, int weight) const {
    auto it = dims.find({degree, weight});
    return it == dims.end() ? 0 : it->second;
}

int HomologyReport::total_dim() const {
    int t = 0;
    for (const auto& [k, v] : dims) {
        (void)k;
        t += v;
    }
    return t;
}

HomologyReport homology_of_slice(const ComplexSlice& S) {
    S.validate();
    HomologyReport rep;
    for (const auto& [d, V] : S.spaces) {
        if (V.dim() == 0) continue;
        const LinearMap* out = S.diff(d);
        const LinearMap* in = S.diff(d - 1);

        std::vector<SparseVec> cycles;
        if (out) {
            cycles = kernel_basis(*out);
        } else {
            for (int i = 0; i < V.dim(); ++i) cycles.push_back(vec_unit(i));
        }
        std::map<int, Echelon> sel;  // per weight: image + chosen reps
        if (in) {
            for (const auto& col : in->cols) {
                if (col.empty()) continue;
                sel[V.weight(col.front().first)].insert(col);
            }
        }
        for (const auto& z : cycles) {
            if (z.empty()) continue;
            int w = V.weight(z.front().first);
            Echelon& e = sel[w];
            SparseVec r = e.reduce(z);
            if (r.empty()) continue;
            SparseVec norm = vec_scale(r, Scalar(1) / r.front().second);
            rep.dims[{d, w}] += 1;
            rep.representatives[{d, w}].push_back(norm);
            e.insert(std::move(r));
        }
    }
    return rep;
}

bool recheck_homology(const ComplexSlice& S, const HomologyReport& rep, std::string* why) {
    for (const auto& [key, reps] : rep.representatives) {
        auto [d, w] = key;
        auto vit = S.spaces.find(d);
        if (vit == S.spaces.end()) return false;
        const LinearMap* out = S.diff(d);
        Echelon boundaries;
        const LinearMap* in = S.diff(d - 1);
        if (in)
            for (const auto& col : in->cols) boundaries.insert(col);
        Echelon indep = boundaries;
        for (const auto& r : reps) {
            for (const auto& [i, c] : r) {
                (void)c;
                if (vit->second.weight(i) != w) {
                    if (why) *why = "representative not weight-homogeneous";
                    return false;
                }
            }
            if (out && !out->apply(r).empty()) {
                if (why) *why = "representative is not a cycle";
                return false;
            }
            if (!indep.insert(r)) {
                if (why) *why = "representatives dependent modulo boundaries";
                return false;
            }
        }
        auto dit = rep.dims.find(key);
        if (dit == rep.dims.end() || dit->second != static_cast<int>(reps.size())) {
            if (why) *why = "dims inconsistent with representative count";
            return false;
        }
    }
    return true;
}

}  // namespace ainfty
