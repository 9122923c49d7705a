#include "ainfty/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ainfty {

BigradedSpace::BigradedSpace(std::vector<BasisElement> b) : basis(std::move(b)) {
    for (int i = 0; i < dim(); ++i) {
        auto [it, fresh] = index_.emplace(basis[i].name, i);
        (void)it;
        if (!fresh) throw std::invalid_argument("BigradedSpace: duplicate basis name " + basis[i].name);
    }
}

int BigradedSpace::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

void vec_add_term(SparseVec& v, int idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != v.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    } else {
        v.insert(it, {idx, c});
    }
}

SparseVec vec_add(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    for (const auto& [i, c] : b) vec_add_term(out, i, c);
    return out;
}

SparseVec vec_scale(const SparseVec& a, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseVec out;
    out.reserve(a.size());
    for (const auto& [i, x] : a) out.emplace_back(i, x * c);
    return out;
}

void vec_axpy(SparseVec& acc, const SparseVec& x, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [i, v] : x) vec_add_term(acc, i, v * c);
}

Scalar vec_coeff(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != v.end() && it->first == idx) return it->second;
    return Scalar(0);
}

SparseVec vec_unit(int idx, Scalar c) {
    SparseVec v;
    if (!c.is_zero()) v.emplace_back(idx, std::move(c));
    return v;
}

bool vec_is_zero(const SparseVec& v) { return v.empty(); }

std::string vec_str(const SparseVec& v, const BigradedSpace& space) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) os << " + ";
        os << c.str() << "*" << space.name(i);
        first = false;
    }
    return os.str();
}

LinearMap::LinearMap(BigradedSpace src, BigradedSpace tgt, int ddeg, int dwt)
    : source(std::move(src)), target(std::move(tgt)), delta_degree(ddeg), delta_weight(dwt) {
    cols.resize(source.dim());
}

void LinearMap::set_entry(int row, int col, const Scalar& c) {
    SparseVec& v = cols.at(col);
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != v.end() && it->first == row) {
        if (c.is_zero()) v.erase(it);
        else it->second = c;
    } else if (!c.is_zero()) {
        v.insert(it, {row, c});
    }
}

void LinearMap::add_entry(int row, int col, const Scalar& c) { vec_add_term(cols.at(col), row, c); }

Scalar LinearMap::entry(int row, int col) const { return vec_coeff(cols.at(col), row); }

SparseVec LinearMap::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, c] : v) vec_axpy(out, cols.at(j), c);
    return out;
}

bool LinearMap::is_zero() const {
    for (const auto& c : cols)
        if (!c.empty()) return false;
    return true;
}

bool LinearMap::validate(std::string* why) const {
    for (int j = 0; j < source.dim(); ++j) {
        for (const auto& [i, c] : cols[j]) {
            (void)c;
            if (target.degree(i) != source.degree(j) + delta_degree ||
                target.weight(i) != source.weight(j) + delta_weight) {
                if (why)
                    *why = "entry (" + target.name(i) + ", " + source.name(j) +
                           ") violates bidegree";
                return false;
            }
        }
    }
    return true;
}

LinearMap LinearMap::identity(const BigradedSpace& s) {
    LinearMap f(s, s, 0, 0);
    for (int i = 0; i < s.dim(); ++i) f.set_entry(i, i, Scalar(1));
    return f;
}

LinearMap LinearMap::compose(const LinearMap& g) const {
    if (g.target.dim() != source.dim())
        throw std::invalid_argument("LinearMap::compose: dimension mismatch");
    LinearMap out(g.source, target, delta_degree + g.delta_degree, delta_weight + g.delta_weight);
    for (int j = 0; j < g.source.dim(); ++j) out.cols[j] = apply(g.cols[j]);
    return out;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    if (a.source.dim() != b.source.dim() || a.target.dim() != b.target.dim() ||
        a.delta_degree != b.delta_degree || a.delta_weight != b.delta_weight)
        throw std::invalid_argument("LinearMap: incompatible sum");
    LinearMap out = a;
    for (int j = 0; j < b.source.dim(); ++j) vec_axpy(out.cols[j], b.cols[j], Scalar(1));
    return out;
}

LinearMap operator*(const Scalar& c, const LinearMap& a) {
    LinearMap out = a;
    for (auto& col : out.cols) col = vec_scale(col, c);
    return out;
}

Scalar supertrace(const LinearMap& f) {
    if (f.source.dim() != f.target.dim() || f.delta_degree != 0 || f.delta_weight != 0)
        throw std::invalid_argument("supertrace: input is not a degree-(0,0) endomorphism");
    Scalar tr(0);
    for (int i = 0; i < f.source.dim(); ++i) {
        Scalar d = f.entry(i, i);
        if (f.source.degree(i) % 2 != 0) d = -d;
        tr += d;
    }
    return tr;
}

}  // namespace ainfty
