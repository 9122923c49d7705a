#include "ainfty/ainfty.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ainfty {

// --------------------------------------------------------------------------
// signs

int l_linear(std::span<const int> degrees, int p, int q) {
    if (p > q) return 0;
    int s = 0;
    for (int i = p; i <= q; ++i) s += sdeg(degrees[i]);
    return s & 1;
}

int l_cyclic(std::span<const int> degrees, int p, int q) {
    if (p <= q) return l_linear(degrees, p, q);
    int n = static_cast<int>(degrees.size()) - 1;
    return (l_linear(degrees, p, n) + l_linear(degrees, 0, q)) & 1;
}

long l_value(std::span<const int> degrees, int p, int q) {
    long n = static_cast<long>(degrees.size()) - 1;
    if (p < 0 || q < 0 || p > n || q > n) throw std::out_of_range("l_value: index out of range");
    long s = 0;
    if (p <= q) {
        for (int i = p; i <= q; ++i) s += degrees[i];
        return s + q - p + 1;
    }
    for (int i = p; i <= n; ++i) s += degrees[i];
    for (int i = 0; i <= q; ++i) s += degrees[i];
    return s + n - p + q;
}

// --------------------------------------------------------------------------
// tables

const SparseVec* table_find(const MultiOpTable& t, std::span<const int> key) {
    auto it = t.find(key);
    return it == t.end() ? nullptr : &it->second;
}

static std::string tuple_str(const BigradedSpace& sp, std::span<const int> key) {
    std::string s = "(";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i) s += ",";
        s += sp.name(key[i]);
    }
    return s + ")";
}

void AInftyAlgebra::set_mu(int arity, Tuple key, SparseVec value) {
    if (arity < 1 || static_cast<int>(key.size()) != arity)
        throw std::invalid_argument("set_mu: bad arity");
    int din = 0, win = 0;
    for (int i : key) {
        din += deg(i);
        win += wt(i);
    }
    for (const auto& [o, c] : value) {
        (void)c;
        if (deg(o) != din + 2 - arity || wt(o) != win)
            throw std::invalid_argument(name + ": mu_" + std::to_string(arity) + tuple_str(space, key) +
                                        " entry not homogeneous of degree 2-n and weight 0");
    }
    if (static_cast<int>(mu.size()) <= arity) mu.resize(arity + 1);
    if (value.empty())
        mu[arity].erase(key);
    else
        mu[arity][std::move(key)] = std::move(value);
    arity_bound = std::max(arity_bound, arity);
}

const SparseVec* AInftyAlgebra::mu_entry(int arity, std::span<const int> key) const {
    if (arity < 1 || arity >= static_cast<int>(mu.size())) return nullptr;
    return table_find(mu[arity], key);
}

std::vector<int> AInftyAlgebra::reduced_basis() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (i != unit) out.push_back(i);
    return out;
}

int AInftyAlgebra::tuple_weight(std::span<const int> key) const {
    int w = 0;
    for (int i : key) w += wt(i);
    return w;
}

int AInftyAlgebra::tuple_sdeg_parity(std::span<const int> key, int count) const {
    int s = 0;
    for (int i = 0; i < count; ++i) s += sdeg(deg(key[i]));
    return s & 1;
}

SparseVec AInftyAlgebra::mu_apply(int arity, std::span<const SparseVec> args) const {
    SparseVec out;
    if (arity != static_cast<int>(args.size())) throw std::invalid_argument("mu_apply: arity mismatch");
    Tuple key(arity);
    std::function<void(int, const Scalar&)> rec = [&](int slot, const Scalar& coef) {
        if (slot == arity) {
            const SparseVec* v = mu_entry(arity, key);
            if (v) vec_axpy(out, *v, coef);
            return;
        }
        for (const auto& [i, c] : args[slot]) {
            key[slot] = i;
            rec(slot + 1, coef * c);
        }
    };
    rec(0, Scalar(1));
    return out;
}

void AInftyMorphism::set_f(int arity, Tuple key, SparseVec value) {
    if (arity < 1 || static_cast<int>(key.size()) != arity)
        throw std::invalid_argument("set_f: bad arity");
    int din = 0, win = 0;
    for (int i : key) {
        din += source->deg(i);
        win += source->wt(i);
    }
    for (const auto& [o, c] : value) {
        (void)c;
        if (target->deg(o) != din + 1 - arity || target->wt(o) != win)
            throw std::invalid_argument("morphism component f_" + std::to_string(arity) +
                                        tuple_str(source->space, key) +
                                        " not homogeneous of degree 1-n and weight 0");
    }
    if (static_cast<int>(f.size()) <= arity) f.resize(arity + 1);
    if (value.empty())
        f[arity].erase(key);
    else
        f[arity][std::move(key)] = std::move(value);
}

const SparseVec* AInftyMorphism::f_entry(int arity, std::span<const int> key) const {
    if (arity < 1 || arity >= static_cast<int>(f.size())) return nullptr;
    return table_find(f[arity], key);
}

void AInftyModule::set_mu(int arity, Tuple key, SparseVec value) {
    if (arity < 1 || static_cast<int>(key.size()) != arity)
        throw std::invalid_argument("module set_mu: bad arity");
    int din = space.degree(key[0]), win = space.weight(key[0]);
    for (int t = 1; t < arity; ++t) {
        din += algebra->deg(key[t]);
        win += algebra->wt(key[t]);
    }
    for (const auto& [o, c] : value) {
        (void)c;
        if (space.degree(o) != din + 2 - arity || space.weight(o) != win)
            throw std::invalid_argument(name + ": module operation entry not homogeneous");
    }
    if (static_cast<int>(muM.size()) <= arity) muM.resize(arity + 1);
    if (value.empty())
        muM[arity].erase(key);
    else
        muM[arity][std::move(key)] = std::move(value);
}

const SparseVec* AInftyModule::mu_entry(int arity, std::span<const int> key) const {
    if (arity < 1 || arity >= static_cast<int>(muM.size())) return nullptr;
    return table_find(muM[arity], key);
}

void AInftyBimodule::set_mu(int i, int j, Tuple key, SparseVec value) {
    if (i < 0 || j < 0 || static_cast<int>(key.size()) != i + 1 + j)
        throw std::invalid_argument("bimodule set_mu: bad key");
    int din = 0, win = 0;
    for (int t = 0; t < i; ++t) {
        din += left->deg(key[t]);
        win += left->wt(key[t]);
    }
    din += space.degree(key[i]);
    win += space.weight(key[i]);
    for (int t = 0; t < j; ++t) {
        din += right->deg(key[i + 1 + t]);
        win += right->wt(key[i + 1 + t]);
    }
    for (const auto& [o, c] : value) {
        (void)c;
        if (space.degree(o) != din + 1 - i - j || space.weight(o) != win)
            throw std::invalid_argument(name + ": bimodule operation entry not homogeneous");
    }
    auto& tab = mu[{i, j}];
    if (value.empty())
        tab.erase(key);
    else
        tab[std::move(key)] = std::move(value);
}

const SparseVec* AInftyBimodule::mu_entry(int i, int j, std::span<const int> key) const {
    auto it = mu.find({i, j});
    if (it == mu.end()) return nullptr;
    return table_find(it->second, key);
}

void Bimorphism::set_f(int r, int s, Tuple key, SparseVec value) {
    if (r < 0 || s < 0 || r + s < 1 || static_cast<int>(key.size()) != r + s)
        throw std::invalid_argument("bimorphism set_f: bad key");
    int din = 0, win = 0;
    for (int t = 0; t < r; ++t) {
        din += A->deg(key[t]);
        win += A->wt(key[t]);
    }
    for (int t = 0; t < s; ++t) {
        din += B->deg(key[r + t]);
        win += B->wt(key[r + t]);
    }
    for (const auto& [o, c] : value) {
        (void)c;
        if (C->deg(o) != din + 1 - r - s || C->wt(o) != win)
            throw std::invalid_argument("bimorphism component f_{" + std::to_string(r) + "," +
                                        std::to_string(s) + "} not homogeneous");
    }
    auto& tab = f[{r, s}];
    if (value.empty())
        tab.erase(key);
    else
        tab[std::move(key)] = std::move(value);
}

const SparseVec* Bimorphism::f_entry(int r, int s, std::span<const int> key) const {
    auto it = f.find({r, s});
    if (it == f.end()) return nullptr;
    return table_find(it->second, key);
}

// --------------------------------------------------------------------------
// relation residuals

namespace {

// The algebra relation evaluator is templated on the table lookup so the
// exhaustive checker can swap in a packed hash for small spaces.
template <class Lookup>
SparseVec algebra_residual_impl(const BigradedSpace& sp, const Lookup& look,
                                std::span<const int> t) {
    const int n = static_cast<int>(t.size());
    SparseVec R;
    Tuple scratch;
    scratch.reserve(n);
    // prefix shifted-degree parities
    int par[32];
    par[0] = 0;
    for (int i = 0; i < n; ++i) par[i + 1] = (par[i] + sdeg(sp.degree(t[i]))) & 1;
    for (int j = 1; j <= n; ++j) {
        for (int i = 0; i + j <= n; ++i) {
            const SparseVec* inner = look(j, t.subspan(i, j));
            if (!inner) continue;
            Scalar sgn = parity_sign(par[i]);
            const int outer = n - j + 1;
            for (const auto& [ci, cc] : *inner) {
                scratch.clear();
                for (int s = 0; s < i; ++s) scratch.push_back(t[s]);
                scratch.push_back(ci);
                for (int s = i + j; s < n; ++s) scratch.push_back(t[s]);
                const SparseVec* out = look(outer, scratch);
                if (!out) continue;
                vec_axpy(R, *out, sgn * cc);
            }
        }
    }
    return R;
}

struct MapLookup {
    const AInftyAlgebra* A;
    const SparseVec* operator()(int arity, std::span<const int> key) const {
        return A->mu_entry(arity, key);
    }
};

uint64_t pack_key(std::span<const int> key) {
    uint64_t x = 1;
    for (int i : key) x = (x << 4) | static_cast<uint64_t>(i);
    return x;
}

struct PackedLookup {
    std::unordered_map<uint64_t, const SparseVec*> m;
    explicit PackedLookup(const AInftyAlgebra& A) {
        for (int n = 1; n < static_cast<int>(A.mu.size()); ++n)
            for (const auto& [k, v] : A.mu[n]) m.emplace(pack_key(k), &v);
    }
    const SparseVec* operator()(int, std::span<const int> key) const {
        auto it = m.find(pack_key(key));
        return it == m.end() ? nullptr : it->second;
    }
};

}  // namespace

SparseVec algebra_relation_residual(const AInftyAlgebra& A, std::span<const int> tuple) {
    if (tuple.size() > 31) throw std::invalid_argument("relation arity too large");
    return algebra_residual_impl(A.space, MapLookup{&A}, tuple);
}

SparseVec morphism_relation_residual(const AInftyMorphism& F, std::span<const int> t) {
    const AInftyAlgebra& A = *F.source;
    const AInftyAlgebra& B = *F.target;
    const int n = static_cast<int>(t.size());
    SparseVec R;

    // mu^B applied to blocks of f (no sign in these conventions)
    std::vector<const SparseVec*> blocks;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            const int k = static_cast<int>(blocks.size());
            std::vector<SparseVec> args(k);
            for (int i = 0; i < k; ++i) args[i] = *blocks[i];
            vec_axpy(R, B.mu_apply(k, args), Scalar(1));
            return;
        }
        for (int len = 1; pos + len <= n; ++len) {
            const SparseVec* blk = F.f_entry(len, t.subspan(pos, len));
            if (!blk) continue;
            blocks.push_back(blk);
            rec(pos + len);
            blocks.pop_back();
        }
    };
    rec(0);

    // minus f applied to mu^A contractions
    Tuple scratch;
    int par = 0;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) par = (par + sdeg(A.deg(t[i - 1]))) & 1;
        for (int j = 1; i + j <= n; ++j) {
            const SparseVec* inner = A.mu_entry(j, t.subspan(i, j));
            if (!inner) continue;
            Scalar sgn = parity_sign(par);
            for (const auto& [ci, cc] : *inner) {
                scratch.clear();
                for (int s = 0; s < i; ++s) scratch.push_back(t[s]);
                scratch.push_back(ci);
                for (int s = i + j; s < n; ++s) scratch.push_back(t[s]);
                const SparseVec* out = F.f_entry(n - j + 1, scratch);
                if (!out) continue;
                vec_axpy(R, *out, -(sgn * cc));
            }
        }
    }
    return R;
}

SparseVec module_relation_residual(const AInftyModule& M, int m, std::span<const int> t) {
    const AInftyAlgebra& A = *M.algebra;
    const int n = static_cast<int>(t.size());
    SparseVec R;
    Tuple scratch;

    // composition family: outer(inner(m, a_1..a_i), a_{i+1}..a_n), signless
    for (int i = 0; i <= n; ++i) {
        scratch.clear();
        scratch.push_back(m);
        for (int s = 0; s < i; ++s) scratch.push_back(t[s]);
        const SparseVec* inner = M.mu_entry(i + 1, scratch);
        if (!inner) continue;
        for (const auto& [mi, mc] : *inner) {
            scratch.clear();
            scratch.push_back(mi);
            for (int s = i; s < n; ++s) scratch.push_back(t[s]);
            const SparseVec* out = M.mu_entry(n - i + 1, scratch);
            if (!out) continue;
            vec_axpy(R, *out, mc);
        }
    }

    // mu^A contractions with sign (-1)^{|m| + l_1^i(a)}
    int par = M.space.degree(m) & 1;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) par = (par + sdeg(A.deg(t[i - 1]))) & 1;
        for (int j = 1; i + j <= n; ++j) {
            const SparseVec* inner = A.mu_entry(j, t.subspan(i, j));
            if (!inner) continue;
            Scalar sgn = parity_sign(par);
            for (const auto& [ci, cc] : *inner) {
                scratch.clear();
                scratch.push_back(m);
                for (int s = 0; s < i; ++s) scratch.push_back(t[s]);
                scratch.push_back(ci);
                for (int s = i + j; s < n; ++s) scratch.push_back(t[s]);
                const SparseVec* out = M.mu_entry(n - j + 2, scratch);
                if (!out) continue;
                vec_axpy(R, *out, sgn * cc);
            }
        }
    }
    return R;
}

SparseVec bimodule_relation_residual(const AInftyBimodule& M, std::span<const int> as, int m,
                                     std::span<const int> bs) {
    const AInftyAlgebra& A = *M.left;
    const AInftyAlgebra& B = *M.right;
    const int n = static_cast<int>(as.size());
    const int mm = static_cast<int>(bs.size());
    SparseVec R;
    Tuple scratch;

    // family 1: mu^A contraction inside the a's, sign (-1)^{l_1^i(a)}
    {
        int par = 0;
        for (int i = 0; i <= n; ++i) {
            if (i > 0) par = (par + sdeg(A.deg(as[i - 1]))) & 1;
            for (int j = 1; i + j <= n; ++j) {
                const SparseVec* inner = A.mu_entry(j, as.subspan(i, j));
                if (!inner) continue;
                Scalar sgn = parity_sign(par);
                for (const auto& [ci, cc] : *inner) {
                    scratch.clear();
                    for (int s = 0; s < i; ++s) scratch.push_back(as[s]);
                    scratch.push_back(ci);
                    for (int s = i + j; s < n; ++s) scratch.push_back(as[s]);
                    scratch.push_back(m);
                    for (int x : bs) scratch.push_back(x);
                    const SparseVec* out = M.mu_entry(n - j + 1, mm, scratch);
                    if (!out) continue;
                    vec_axpy(R, *out, sgn * cc);
                }
            }
        }
    }

    // family 2: composition of two bimodule operations; the outer's leading
    // a's contribute (-1)^{l_1^{i-1}(a)} (required for the diagonal bimodule
    // and DG bimodules to satisfy the relation; the paper prints this
    // family without a sign).
    {
        int par = 0;
        for (int i = 1; i <= n + 1; ++i) {
            if (i > 1) par = (par + sdeg(A.deg(as[i - 2]))) & 1;
            for (int j = 0; j <= mm; ++j) {
                scratch.clear();
                for (int s = i - 1; s < n; ++s) scratch.push_back(as[s]);
                scratch.push_back(m);
                for (int s = 0; s < j; ++s) scratch.push_back(bs[s]);
                const SparseVec* inner = M.mu_entry(n + 1 - i, j, scratch);
                if (!inner) continue;
                Scalar sgn = parity_sign(par);
                for (const auto& [mi, mc] : *inner) {
                    scratch.clear();
                    for (int s = 0; s < i - 1; ++s) scratch.push_back(as[s]);
                    scratch.push_back(mi);
                    for (int s = j; s < mm; ++s) scratch.push_back(bs[s]);
                    const SparseVec* out = M.mu_entry(i - 1, mm - j, scratch);
                    if (!out) continue;
                    vec_axpy(R, *out, sgn * mc);
                }
            }
        }
    }

    // family 3: mu^B contraction inside the b's, sign (-1)^{l_1^n(a)+l_1^i(b)+|m|}
    {
        int base = M.space.degree(m) & 1;
        for (int s = 0; s < n; ++s) base = (base + sdeg(A.deg(as[s]))) & 1;
        int par = base;
        for (int i = 0; i <= mm; ++i) {
            if (i > 0) par = (par + sdeg(B.deg(bs[i - 1]))) & 1;
            for (int j = 1; i + j <= mm; ++j) {
                const SparseVec* inner = B.mu_entry(j, bs.subspan(i, j));
                if (!inner) continue;
                Scalar sgn = parity_sign(par);
                for (const auto& [ci, cc] : *inner) {
                    scratch.clear();
                    for (int x : as) scratch.push_back(x);
                    scratch.push_back(m);
                    for (int s = 0; s < i; ++s) scratch.push_back(bs[s]);
                    scratch.push_back(ci);
                    for (int s = i + j; s < mm; ++s) scratch.push_back(bs[s]);
                    const SparseVec* out = M.mu_entry(n, mm - j + 1, scratch);
                    if (!out) continue;
                    vec_axpy(R, *out, sgn * cc);
                }
            }
        }
    }
    return R;
}

SparseVec bimorphism_relation_residual(const Bimorphism& F, std::span<const int> as,
                                       std::span<const int> bs) {
    const AInftyAlgebra& A = *F.A;
    const AInftyAlgebra& B = *F.B;
    const AInftyAlgebra& C = *F.C;
    const int r = static_cast<int>(as.size());
    const int s = static_cast<int>(bs.size());
    SparseVec R;
    Tuple scratch;

    // left side: mu^C_k over blocks f_{r_t - r_{t-1}, s_t - s_{t-1}} with
    // sigma = sum_{p<q} ||a-seg q|| * ||b-seg p||
    {
        std::vector<SparseVec> blocks;
        std::function<void(int, int, int, int)> rec = [&](int ra, int sb, int sigma, int sb_prefix) {
            if (ra == r && sb == s) {
                if (!blocks.empty()) {
                    SparseVec term = C.mu_apply(static_cast<int>(blocks.size()), blocks);
                    vec_axpy(R, term, parity_sign(sigma));
                }
                return;
            }
            for (int da = 0; ra + da <= r; ++da) {
                for (int db = 0; sb + db <= s; ++db) {
                    if (da + db == 0) continue;
                    scratch.clear();
                    for (int t = 0; t < da; ++t) scratch.push_back(as[ra + t]);
                    for (int t = 0; t < db; ++t) scratch.push_back(bs[sb + t]);
                    const SparseVec* blk = F.f_entry(da, db, scratch);
                    if (!blk) continue;
                    int sa_par = 0;
                    for (int t = 0; t < da; ++t) sa_par = (sa_par + sdeg(A.deg(as[ra + t]))) & 1;
                    int sb_par = 0;
                    for (int t = 0; t < db; ++t) sb_par = (sb_par + sdeg(B.deg(bs[sb + t]))) & 1;
                    blocks.push_back(*blk);
                    rec(ra + da, sb + db, (sigma + sa_par * sb_prefix) & 1, (sb_prefix + sb_par) & 1);
                    blocks.pop_back();
                }
            }
        };
        rec(0, 0, 0, 0);
    }

    // right side, family 1: mu^A contraction, sign (-1)^{l_1^i(a)}
    {
        int par = 0;
        for (int i = 0; i <= r; ++i) {
            if (i > 0) par = (par + sdeg(A.deg(as[i - 1]))) & 1;
            for (int j = 1; i + j <= r; ++j) {
                const SparseVec* inner = A.mu_entry(j, as.subspan(i, j));
                if (!inner) continue;
                Scalar sgn = parity_sign(par);
                for (const auto& [ci, cc] : *inner) {
                    scratch.clear();
                    for (int t = 0; t < i; ++t) scratch.push_back(as[t]);
                    scratch.push_back(ci);
                    for (int t = i + j; t < r; ++t) scratch.push_back(as[t]);
                    for (int x : bs) scratch.push_back(x);
                    const SparseVec* out = F.f_entry(r - j + 1, s, scratch);
                    if (!out) continue;
                    vec_axpy(R, *out, -(sgn * cc));
                }
            }
        }
    }

    // right side, family 2: mu^B contraction, sign (-1)^{l_1^r(a)+l_1^i(b)}
    {
        int base = 0;
        for (int t = 0; t < r; ++t) base = (base + sdeg(A.deg(as[t]))) & 1;
        int par = base;
        for (int i = 0; i <= s; ++i) {
            if (i > 0) par = (par + sdeg(B.deg(bs[i - 1]))) & 1;
            for (int j = 1; i + j <= s; ++j) {
                const SparseVec* inner = B.mu_entry(j, bs.subspan(i, j));
                if (!inner) continue;
                Scalar sgn = parity_sign(par);
                for (const auto& [ci, cc] : *inner) {
                    scratch.clear();
                    for (int x : as) scratch.push_back(x);
                    for (int t = 0; t < i; ++t) scratch.push_back(bs[t]);
                    scratch.push_back(ci);
                    for (int t = i + j; t < s; ++t) scratch.push_back(bs[t]);
                    const SparseVec* out = F.f_entry(r, s - j + 1, scratch);
                    if (!out) continue;
                    vec_axpy(R, *out, -(sgn * cc));
                }
            }
        }
    }
    return R;
}

// --------------------------------------------------------------------------
// checkers

void CheckReport::fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
}

void CheckReport::merge(const CheckReport& other) {
    relations_checked += other.relations_checked;
    if (!other.pass && pass) first_failure = other.first_failure;
    pass = pass && other.pass;
    for (const auto& n : other.notes) notes.push_back(n);
}

namespace {

// Enumerates tuples letters^arity, optionally bounded by total weight.
// fn returns false to stop; the enumerator then returns false.
template <class F>
bool for_each_tuple(const std::vector<int>& letters, int arity, const BigradedSpace& sp,
                    std::optional<int> weight_cap, F&& fn) {
    bool prune_safe = weight_cap.has_value();
    for (int l : letters)
        if (prune_safe && sp.weight(l) < 0) prune_safe = false;
    Tuple t(arity);
    std::function<bool(int, int)> rec = [&](int slot, int wsum) -> bool {
        if (slot == arity) {
            if (weight_cap && wsum > *weight_cap) return true;
            return fn(std::span<const int>(t));
        }
        for (int l : letters) {
            int w = wsum + sp.weight(l);
            if (prune_safe && w > *weight_cap) continue;
            t[slot] = l;
            if (!rec(slot + 1, w)) return false;
        }
        return true;
    };
    if (arity == 0) return weight_cap && 0 > *weight_cap ? true : fn(std::span<const int>());
    return rec(0, 0);
}

bool audit_algebra_tables(const AInftyAlgebra& A, CheckReport& rep) {
    // sparse-table sanity: nothing stored beyond declared bound
    if (A.has_unit()) {
        const int u = A.unit;
        if (A.deg(u) != 0 || A.wt(u) != 0) {
            rep.fail("unit must have degree 0 and weight 0");
            return false;
        }
        if (A.mu_entry(1, std::array{u})) {
            rep.fail("strict unitality: mu_1(1) != 0");
            return false;
        }
        for (int a = 0; a < A.dim(); ++a) {
            const SparseVec* lu = A.mu_entry(2, std::array{u, a});
            if (!lu || *lu != vec_unit(a)) {
                rep.fail("strict unitality: mu_2(1," + A.space.name(a) + ") != " + A.space.name(a));
                return false;
            }
            const SparseVec* ru = A.mu_entry(2, std::array{a, u});
            SparseVec want = vec_unit(a, parity_sign(A.deg(a) & 1));
            if (!ru || *ru != want) {
                rep.fail("strict unitality: mu_2(" + A.space.name(a) + ",1) != (-1)^|a| " +
                         A.space.name(a));
                return false;
            }
        }
        for (int n = 3; n < static_cast<int>(A.mu.size()); ++n) {
            for (const auto& [k, v] : A.mu[n]) {
                (void)v;
                if (std::find(k.begin(), k.end(), u) != k.end()) {
                    rep.fail("strict unitality: nonzero mu_" + std::to_string(n) +
                             " with a unit argument at " + tuple_str(A.space, k));
                    return false;
                }
            }
        }
    }
    if (A.minimal && static_cast<int>(A.mu.size()) > 1 && !A.mu[1].empty()) {
        rep.fail("minimal flag set but mu_1 is nonzero");
        return false;
    }
    return true;
}

}  // namespace

CheckReport check_structure(const AInftyAlgebra& A, int N, int unit_tuple_arity) {
    CheckReport rep;
    if (!audit_algebra_tables(A, rep)) return rep;
    const int Ncheck = std::min(N, A.tables_complete_to);
    if (Ncheck < N)
        rep.notes.push_back("tables complete only to arity " + std::to_string(Ncheck) +
                            "; higher arities not certified");

    const std::vector<int> reduced = A.reduced_basis();
    const bool packable = A.dim() <= 16 && Ncheck <= 15 && !A.weight_truncation;
    std::optional<PackedLookup> packed;
    if (packable) packed.emplace(A);

    auto run = [&](std::span<const int> t) -> bool {
        SparseVec R = packable ? algebra_residual_impl(A.space, *packed, t)
                               : algebra_residual_impl(A.space, MapLookup{&A}, t);
        ++rep.relations_checked;
        if (!R.empty()) {
            rep.fail("A-infinity relation fails at " + tuple_str(A.space, t) + " with residual " +
                     vec_str(R, A.space));
            return false;
        }
        return true;
    };

    for (int n = 1; n <= Ncheck && rep.pass; ++n)
        for_each_tuple(reduced, n, A.space, A.weight_truncation, run);

    if (A.has_unit()) {
        std::vector<int> all(A.dim());
        for (int i = 0; i < A.dim(); ++i) all[i] = i;
        const int u = A.unit;
        for (int n = 1; n <= std::min(Ncheck, unit_tuple_arity) && rep.pass; ++n) {
            for_each_tuple(all, n, A.space, A.weight_truncation, [&](std::span<const int> t) {
                if (std::find(t.begin(), t.end(), u) == t.end()) return true;
                return run(t);
            });
        }
        rep.notes.push_back("unit-containing tuples checked exhaustively to arity " +
                            std::to_string(std::min(Ncheck, unit_tuple_arity)) +
                            "; beyond that they are formal consequences of the table-level "
                            "strict unitality audit");
    }

    std::ostringstream sc;
    sc << "reduced tuples, arities 1.." << Ncheck;
    if (A.weight_truncation) sc << ", total weight <= " << *A.weight_truncation;
    rep.scope = sc.str();
    return rep;
}

CheckReport check_structure(const AInftyMorphism& F, int N, int unit_tuple_arity) {
    CheckReport rep;
    const AInftyAlgebra& A = *F.source;
    const AInftyAlgebra& B = *F.target;

    if (A.has_unit() && B.has_unit()) {
        const SparseVec* f1 = F.f_entry(1, std::array{A.unit});
        if (!f1 || *f1 != vec_unit(B.unit)) {
            rep.fail("strict unitality: f_1(1) != 1");
            return rep;
        }
        for (int n = 2; n < static_cast<int>(F.f.size()); ++n)
            for (const auto& [k, v] : F.f[n]) {
                (void)v;
                if (std::find(k.begin(), k.end(), A.unit) != k.end()) {
                    rep.fail("strict unitality: nonzero f_" + std::to_string(n) +
                             " with a unit argument");
                    return rep;
                }
            }
    }

    std::optional<int> base_cap = A.weight_truncation;
    if (B.weight_truncation && (!base_cap || *B.weight_truncation < *base_cap))
        base_cap = B.weight_truncation;
    auto cap_for = [&](int arity) {
        std::optional<int> c = base_cap;
        auto it = F.certified_weight_caps.find(arity);
        if (it != F.certified_weight_caps.end() && (!c || it->second < *c)) c = it->second;
        return c;
    };

    auto run = [&](std::span<const int> t) -> bool {
        SparseVec R = morphism_relation_residual(F, t);
        ++rep.relations_checked;
        if (!R.empty()) {
            rep.fail("morphism relation fails at " + tuple_str(A.space, t));
            return false;
        }
        return true;
    };
    const std::vector<int> reduced = A.reduced_basis();
    for (int n = 1; n <= N && rep.pass; ++n)
        for_each_tuple(reduced, n, A.space, cap_for(n), run);
    if (A.has_unit()) {
        std::vector<int> all(A.dim());
        for (int i = 0; i < A.dim(); ++i) all[i] = i;
        for (int n = 1; n <= std::min(N, unit_tuple_arity) && rep.pass; ++n)
            for_each_tuple(all, n, A.space, cap_for(n), [&](std::span<const int> t) {
                if (std::find(t.begin(), t.end(), A.unit) == t.end()) return true;
                return run(t);
            });
    }
    std::ostringstream sc;
    sc << "source tuples, arities 1.." << N;
    if (base_cap) sc << ", total weight <= " << *base_cap;
    if (!F.certified_weight_caps.empty()) sc << ", with per-arity certified caps";
    rep.scope = sc.str();
    return rep;
}

CheckReport check_structure(const AInftyModule& M, int N, int unit_tuple_arity) {
    CheckReport rep;
    const AInftyAlgebra& A = *M.algebra;
    if (A.has_unit()) {
        for (int m = 0; m < M.space.dim(); ++m) {
            const SparseVec* v = M.mu_entry(2, std::array{m, A.unit});
            SparseVec want = vec_unit(m, parity_sign((M.space.degree(m) + 1) & 1));
            if (!v || *v != want) {
                rep.fail("module strict unitality: mu_2(m, 1) != (-1)^{|m|+1} m for m = " +
                         M.space.name(m));
                return rep;
            }
        }
        for (int n = 3; n < static_cast<int>(M.muM.size()); ++n)
            for (const auto& [k, v] : M.muM[n]) {
                (void)v;
                if (std::find(k.begin() + 1, k.end(), A.unit) != k.end()) {
                    rep.fail("module strict unitality: nonzero higher operation with unit argument");
                    return rep;
                }
            }
    }
    auto run = [&](int m, std::span<const int> t) -> bool {
        SparseVec R = module_relation_residual(M, m, t);
        ++rep.relations_checked;
        if (!R.empty()) {
            rep.fail("module relation fails at (" + M.space.name(m) + "; " +
                     tuple_str(A.space, t) + ")");
            return false;
        }
        return true;
    };
    const std::vector<int> reduced = A.reduced_basis();
    for (int n = 0; n <= N - 1 && rep.pass; ++n)
        for (int m = 0; m < M.space.dim() && rep.pass; ++m)
            for_each_tuple(reduced, n, A.space, A.weight_truncation,
                           [&](std::span<const int> t) { return run(m, t); });
    if (A.has_unit()) {
        std::vector<int> all(A.dim());
        for (int i = 0; i < A.dim(); ++i) all[i] = i;
        for (int n = 1; n <= std::min(N - 1, unit_tuple_arity) && rep.pass; ++n)
            for (int m = 0; m < M.space.dim() && rep.pass; ++m)
                for_each_tuple(all, n, A.space, A.weight_truncation, [&](std::span<const int> t) {
                    if (std::find(t.begin(), t.end(), A.unit) == t.end()) return true;
                    return run(m, t);
                });
    }
    rep.scope = "module relations with 0.." + std::to_string(N - 1) + " algebra inputs";
    return rep;
}

CheckReport check_structure(const AInftyBimodule& M, int max_left, int max_right,
                            int unit_tuple_arity) {
    CheckReport rep;
    const AInftyAlgebra& A = *M.left;
    const AInftyAlgebra& B = *M.right;
    if (A.has_unit() && B.has_unit()) {
        for (int m = 0; m < M.space.dim(); ++m) {
            const SparseVec* lu = M.mu_entry(1, 0, std::array{A.unit, m});
            if (!lu || *lu != vec_unit(m)) {
                rep.fail("bimodule strict unitality: mu_{1,0}(1, m) != m");
                return rep;
            }
            const SparseVec* ru = M.mu_entry(0, 1, std::array{m, B.unit});
            SparseVec want = vec_unit(m, parity_sign((M.space.degree(m) + 1) & 1));
            if (!ru || *ru != want) {
                rep.fail("bimodule strict unitality: mu_{0,1}(m, 1) != (-1)^{|m|+1} m");
                return rep;
            }
        }
        for (const auto& [ij, tab] : M.mu) {
            auto [i, j] = ij;
            if (i + j < 2) continue;
            for (const auto& [k, v] : tab) {
                (void)v;
                bool has_unit = false;
                for (int t = 0; t < i; ++t) has_unit |= (k[t] == A.unit);
                for (int t = 0; t < j; ++t) has_unit |= (k[i + 1 + t] == B.unit);
                if (has_unit) {
                    rep.fail("bimodule strict unitality: nonzero higher operation with unit argument");
                    return rep;
                }
            }
        }
    }
    auto run = [&](std::span<const int> as, int m, std::span<const int> bs) -> bool {
        SparseVec R = bimodule_relation_residual(M, as, m, bs);
        ++rep.relations_checked;
        if (!R.empty()) {
            rep.fail("bimodule relation fails at " + tuple_str(A.space, as) + " (x) " +
                     M.space.name(m) + " (x) " + tuple_str(B.space, bs) + ", residual " +
                     vec_str(R, M.space));
            return false;
        }
        return true;
    };
    const std::vector<int> ra = A.reduced_basis();
    const std::vector<int> rb = B.reduced_basis();
    for (int n = 0; n <= max_left && rep.pass; ++n)
        for (int mm = 0; mm <= max_right && rep.pass; ++mm)
            for_each_tuple(ra, n, A.space, A.weight_truncation, [&](std::span<const int> as) {
                Tuple acopy(as.begin(), as.end());
                bool keep = true;
                for (int m = 0; m < M.space.dim() && keep; ++m)
                    keep = for_each_tuple(rb, mm, B.space, B.weight_truncation,
                                          [&](std::span<const int> bs) { return run(acopy, m, bs); });
                return keep;
            });
    if (A.has_unit() && B.has_unit()) {
        // spot-check unit-containing tuples at low total arity
        std::vector<int> alla(A.dim()), allb(B.dim());
        for (int i = 0; i < A.dim(); ++i) alla[i] = i;
        for (int i = 0; i < B.dim(); ++i) allb[i] = i;
        for (int n = 0; n <= std::min(max_left, unit_tuple_arity) && rep.pass; ++n)
            for (int mm = 0; mm <= std::min(max_right, unit_tuple_arity) && rep.pass; ++mm)
                for_each_tuple(alla, n, A.space, A.weight_truncation, [&](std::span<const int> as) {
                    Tuple acopy(as.begin(), as.end());
                    bool keep = true;
                    for (int m = 0; m < M.space.dim() && keep; ++m)
                        keep = for_each_tuple(allb, mm, B.space, B.weight_truncation,
                                              [&](std::span<const int> bs) {
                                                  bool hu = std::find(acopy.begin(), acopy.end(),
                                                                      A.unit) != acopy.end() ||
                                                            std::find(bs.begin(), bs.end(), B.unit) !=
                                                                bs.end();
                                                  if (!hu) return true;
                                                  return run(acopy, m, bs);
                                              });
                    return keep;
                });
    }
    rep.scope = "bimodule relations with (i, j) <= (" + std::to_string(max_left) + ", " +
                std::to_string(max_right) + ")";
    return rep;
}

CheckReport check_structure(const Bimorphism& F, int max_left, int max_right,
                            int unit_tuple_arity) {
    CheckReport rep;
    const AInftyAlgebra& A = *F.A;
    const AInftyAlgebra& B = *F.B;
    const AInftyAlgebra& C = *F.C;
    if (A.has_unit() && B.has_unit() && C.has_unit()) {
        const SparseVec* fa = F.f_entry(1, 0, std::array{A.unit});
        const SparseVec* fb = F.f_entry(0, 1, std::array{B.unit});
        if (!fa || *fa != vec_unit(C.unit) || !fb || *fb != vec_unit(C.unit)) {
            rep.fail("bimorphism strict unitality: f_{1,0}(1_A) and f_{0,1}(1_B) must equal 1_C");
            return rep;
        }
        for (const auto& [rs, tab] : F.f) {
            auto [r, s] = rs;
            if (r + s < 2) continue;
            for (const auto& [k, v] : tab) {
                (void)v;
                bool hu = false;
                for (int t = 0; t < r; ++t) hu |= (k[t] == A.unit);
                for (int t = 0; t < s; ++t) hu |= (k[r + t] == B.unit);
                if (hu) {
                    rep.fail("bimorphism strict unitality: nonzero component with unit argument");
                    return rep;
                }
            }
        }
    }
    auto run = [&](std::span<const int> as, std::span<const int> bs) -> bool {
        SparseVec R = bimorphism_relation_residual(F, as, bs);
        ++rep.relations_checked;
        if (!R.empty()) {
            rep.fail("bimorphism relation fails at " + tuple_str(A.space, as) + " ; " +
                     tuple_str(B.space, bs) + ", residual " + vec_str(R, C.space));
            return false;
        }
        return true;
    };
    const std::vector<int> ra = A.reduced_basis();
    const std::vector<int> rb = B.reduced_basis();
    for (int r = 0; r <= max_left && rep.pass; ++r)
        for (int s = 0; s <= max_right && rep.pass; ++s) {
            if (r + s == 0) continue;
            for_each_tuple(ra, r, A.space, A.weight_truncation, [&](std::span<const int> as) {
                Tuple acopy(as.begin(), as.end());
                return for_each_tuple(rb, s, B.space, B.weight_truncation,
                                      [&](std::span<const int> bs) { return run(acopy, bs); });
            });
        }
    if (A.has_unit() && B.has_unit()) {
        std::vector<int> alla(A.dim()), allb(B.dim());
        for (int i = 0; i < A.dim(); ++i) alla[i] = i;
        for (int i = 0; i < B.dim(); ++i) allb[i] = i;
        for (int r = 0; r <= std::min(max_left, unit_tuple_arity) && rep.pass; ++r)
            for (int s = 0; s <= std::min(max_right, unit_tuple_arity) && rep.pass; ++s) {
                if (r + s == 0) continue;
                for_each_tuple(alla, r, A.space, A.weight_truncation, [&](std::span<const int> as) {
                    Tuple acopy(as.begin(), as.end());
                    return for_each_tuple(
                        rb, s, B.space, B.weight_truncation, [&](std::span<const int> bs) {
                            bool hu = std::find(acopy.begin(), acopy.end(), A.unit) != acopy.end() ||
                                      std::find(bs.begin(), bs.end(), B.unit) != bs.end();
                            if (!hu) return true;
                            return run(acopy, bs);
                        });
                });
            }
    }
    rep.scope = "bimorphism relations with (r, s) <= (" + std::to_string(max_left) + ", " +
                std::to_string(max_right) + ")";
    return rep;
}

}  // namespace ainfty
