#include "ainfty/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ainfty {

void HochschildChain::add(Tuple t, const Scalar& c) {
    if (c.is_zero()) return;
    if (t.empty()) throw std::invalid_argument("HochschildChain: empty tuple");
    for (size_t i = 1; i < t.size(); ++i)
        if (static_cast<int>(t[i]) == A->unit) return;  // reduced tails: unit dies
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(std::move(t), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

int HochschildChain::tuple_degree(const Tuple& t) const {
    int d = A->deg(t[0]);
    for (size_t i = 1; i < t.size(); ++i) d += A->deg(t[i]) - 1;
    return d;
}

int HochschildChain::tuple_weight(const Tuple& t) const {
    int w = 0;
    for (int i : t) w += A->wt(i);
    return w;
}

int HochschildChain::degree() const {
    if (terms.empty()) throw std::logic_error("degree of the zero chain");
    int d = tuple_degree(terms.begin()->first);
    for (const auto& [t, c] : terms) {
        (void)c;
        if (tuple_degree(t) != d) throw std::logic_error("chain is not degree-homogeneous");
    }
    return d;
}

int HochschildChain::weight() const {
    if (terms.empty()) throw std::logic_error("weight of the zero chain");
    int w = tuple_weight(terms.begin()->first);
    for (const auto& [t, c] : terms) {
        (void)c;
        if (tuple_weight(t) != w) throw std::logic_error("chain is not weight-homogeneous");
    }
    return w;
}

std::string HochschildChain::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*(" << A->space.name(t[0]);
        if (t.size() > 1) os << ";";
        for (size_t i = 1; i < t.size(); ++i) {
            if (i > 1) os << ",";
            os << A->space.name(t[i]);
        }
        os << ")";
    }
    return os.str();
}

HochschildChain operator+(const HochschildChain& x, const HochschildChain& y) {
    HochschildChain out = x;
    for (const auto& [t, c] : y.terms) out.add(t, c);
    return out;
}

HochschildChain operator*(const Scalar& c, const HochschildChain& x) {
    HochschildChain out(x.A);
    if (c.is_zero()) return out;
    for (const auto& [t, s] : x.terms) out.terms.emplace(t, s * c);
    return out;
}

namespace {

void require_arity(const AInftyAlgebra& A, int arity) {
    if (arity > A.tables_complete_to)
        throw ArityExhausted(A.name + ": operation table exhausted at arity " +
                             std::to_string(arity));
}

std::vector<int> tuple_degrees(const AInftyAlgebra& A, const Tuple& t) {
    std::vector<int> d(t.size());
    for (size_t i = 0; i < t.size(); ++i) d[i] = A.deg(t[i]);
    return d;
}

}  // namespace

HochschildChain hochschild_b(const HochschildChain& c) {
    const AInftyAlgebra& A = *c.A;
    HochschildChain out(c.A);
    for (const auto& [t, coef] : c.terms) {
        const int n = static_cast<int>(t.size()) - 1;
        require_arity(A, n + 1);
        std::vector<int> degs = tuple_degrees(A, t);

        // interior contractions: replace a_i..a_j by mu(a_i,...,a_j)
        for (int i = 0; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                const SparseVec* inner =
                    A.mu_entry(j - i + 1, std::span<const int>(t).subspan(i, j - i + 1));
                if (!inner) continue;
                int par = (l_linear(degs, 0, i - 1) + 1) & 1;
                Scalar sgn = parity_sign(par) * coef;
                for (const auto& [ci, cc] : *inner) {
                    Tuple nt;
                    nt.reserve(t.size() - (j - i));
                    for (int s = 0; s < i; ++s) nt.push_back(t[s]);
                    nt.push_back(ci);
                    for (int s = j + 1; s <= n; ++s) nt.push_back(t[s]);
                    out.add(std::move(nt), sgn * cc);
                }
            }
        }
        // wrap-around contractions: mu(a_q,...,a_n,a_0,...,a_p)
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q <= n; ++q) {
                const int arity = n + p + 2 - q;
                Tuple key;
                key.reserve(arity);
                for (int s = q; s <= n; ++s) key.push_back(t[s]);
                for (int s = 0; s <= p; ++s) key.push_back(t[s]);
                const SparseVec* inner = A.mu_entry(arity, key);
                if (!inner) continue;
                int par = (l_linear(degs, 0, q - 1) * l_linear(degs, q, n) + 1) & 1;
                Scalar sgn = parity_sign(par) * coef;
                for (const auto& [ci, cc] : *inner) {
                    Tuple nt;
                    nt.reserve(q - p);
                    nt.push_back(ci);
                    for (int s = p + 1; s <= q - 1; ++s) nt.push_back(t[s]);
                    out.add(std::move(nt), sgn * cc);
                }
            }
        }
    }
    return out;
}

HochschildChain connes_B(const HochschildChain& c) {
    const AInftyAlgebra& A = *c.A;
    if (!A.has_unit()) throw std::invalid_argument("connes_B: the algebra must be strictly unital");
    HochschildChain out(c.A);
    for (const auto& [t, coef] : c.terms) {
        const int n = static_cast<int>(t.size()) - 1;
        std::vector<int> degs = tuple_degrees(A, t);
        for (int i = 0; i <= n; ++i) {
            int par = (l_linear(degs, 0, i - 1) * l_linear(degs, i, n) + 1) & 1;
            Tuple nt;
            nt.reserve(t.size() + 1);
            nt.push_back(A.unit);
            for (int s = i; s <= n; ++s) nt.push_back(t[s]);
            for (int s = 0; s < i; ++s) nt.push_back(t[s]);
            out.add(std::move(nt), parity_sign(par) * coef);
        }
    }
    return out;
}

HochschildSlice hochschild_slice(AlgebraPtr Aptr, int weight, int degree_min, int degree_max) {
    const AInftyAlgebra& A = *Aptr;
    for (int i : A.reduced_basis())
        if (A.wt(i) <= 0)
            throw std::invalid_argument(
                "hochschild_slice: reduced basis weights must be strictly positive (slice would "
                "be infinite)");
    if (A.weight_truncation && weight > *A.weight_truncation)
        throw std::invalid_argument("hochschild_slice: weight beyond the algebra truncation");

    HochschildSlice S;
    S.A = Aptr;
    S.weight = weight;
    HochschildChain probe(Aptr);

    // enumerate (a_0; a_1..a_k) with total weight = `weight`, tails reduced
    std::vector<Tuple> all;
    std::vector<int> reduced = A.reduced_basis();
    for (int a0 = 0; a0 < A.dim(); ++a0) {
        int rest = weight - A.wt(a0);
        if (rest < 0) continue;
        Tuple t{a0};
        std::function<void(int)> rec = [&](int remaining) {
            if (remaining == 0) all.push_back(t);
            for (int l : reduced) {
                if (A.wt(l) > remaining) continue;
                t.push_back(l);
                rec(remaining - A.wt(l));
                t.pop_back();
            }
        };
        rec(rest);
    }
    std::stable_sort(all.begin(), all.end(), [](const Tuple& x, const Tuple& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });

    for (const Tuple& t : all) {
        int d = probe.tuple_degree(t);
        if (d < degree_min || d > degree_max) continue;
        S.tuples[d].push_back(t);
    }
    // spaces
    for (const auto& [d, ts] : S.tuples) {
        std::vector<BasisElement> basis;
        for (const Tuple& t : ts) {
            std::string nm = "(" + A.space.name(t[0]);
            if (t.size() > 1) nm += ";";
            for (size_t i = 1; i < t.size(); ++i) {
                if (i > 1) nm += ",";
                nm += A.space.name(t[i]);
            }
            nm += ")";
            basis.push_back({nm, d, weight});
        }
        S.complex.spaces[d] = BigradedSpace(basis);
    }
    // differentials
    for (const auto& [d, ts] : S.tuples) {
        if (!S.complex.spaces.count(d + 1)) {
            for (const Tuple& t : ts) {
                HochschildChain x(Aptr);
                x.add(t, Scalar(1));
                if (!hochschild_b(x).is_zero())
                    throw std::logic_error("hochschild_slice: differential escapes the degree window");
            }
            continue;
        }
        LinearMap dmat(S.complex.spaces.at(d), S.complex.spaces.at(d + 1), 1, 0);
        for (size_t col = 0; col < ts.size(); ++col) {
            HochschildChain x(Aptr);
            x.add(ts[col], Scalar(1));
            HochschildChain bx = hochschild_b(x);
            for (const auto& [u, cu] : bx.terms) {
                int row = S.degree_index(d + 1, u);
                if (row < 0) throw std::logic_error("hochschild_slice: image tuple missing from slice");
                dmat.add_entry(row, static_cast<int>(col), cu);
            }
        }
        S.complex.differentials[d] = std::move(dmat);
    }
    return S;
}

int HochschildSlice::degree_index(int degree, const Tuple& t) const {
    auto it = tuples.find(degree);
    if (it == tuples.end()) return -1;
    auto& ts = it->second;
    auto pos = std::find(ts.begin(), ts.end(), t);
    return pos == ts.end() ? -1 : static_cast<int>(pos - ts.begin());
}

SparseVec HochschildSlice::chain_coords(const HochschildChain& c, int degree) const {
    SparseVec v;
    for (const auto& [t, s] : c.terms) {
        int idx = degree_index(degree, t);
        if (idx < 0) throw std::invalid_argument("chain_coords: term outside the slice");
        vec_add_term(v, idx, s);
    }
    return v;
}

HochschildChain HochschildSlice::coords_chain(const SparseVec& v, int degree) const {
    HochschildChain c(A);
    const auto& ts = tuples.at(degree);
    for (const auto& [i, s] : v) c.add(ts.at(i), s);
    return c;
}

// ---------------------------------------------------------------------------
// pushforward along a bimorphism

HochschildChain pushforward_bimorphism(const Bimorphism& f, const HochschildChain& c1,
                                       const HochschildChain& c2) {
    const AInftyAlgebra& A = *f.A;
    const AInftyAlgebra& B = *f.B;
    const AInftyAlgebra& C = *f.C;
    HochschildChain out(f.C);

    for (const auto& [ta, ca] : c1.terms) {
        for (const auto& [tb, cb] : c2.terms) {
            const int n = static_cast<int>(ta.size()) - 1;
            const int m = static_cast<int>(tb.size()) - 1;
            std::vector<int> dega = tuple_degrees(A, ta);
            std::vector<int> degb = tuple_degrees(B, tb);
            const Scalar coef = ca * cb;

            for (int k = 1; k <= n + m + 1; ++k) {
                std::vector<int> iv(k + 1), jv(k + 1);
                std::function<void(int)> recj;
                std::function<void(int)> reci = [&](int slot) {
                    if (slot == k + 1) {
                        recj(0);
                        return;
                    }
                    int lo = (slot == 0) ? 0 : iv[slot - 1];
                    for (int v = lo; v <= n; ++v) {
                        iv[slot] = v;
                        reci(slot + 1);
                    }
                };
                recj = [&](int slot) {
                    if (slot < k + 1) {
                        int lo = (slot == 0) ? 0 : jv[slot - 1];
                        for (int v = lo; v <= m; ++v) {
                            jv[slot] = v;
                            recj(slot + 1);
                        }
                        return;
                    }
                    // lifted group ranges: a-range of group g is (iv[g], iv[g+1]],
                    // wrapping for g = k; b-range of group g is (jv[g-1], jv[g]],
                    // wrapping for g = 0
                    std::vector<std::pair<int, int>> arange(k + 1), brange(k + 1);
                    for (int g = 0; g < k; ++g) arange[g] = {iv[g], iv[g + 1]};
                    arange[k] = {iv[k], iv[0] + n + 1};
                    for (int g = 1; g <= k; ++g) brange[g] = {jv[g - 1], jv[g]};
                    brange[0] = {jv[k] - (m + 1), jv[0]};

                    auto alen = [&](int g) { return arange[g].second - arange[g].first; };
                    auto blen = [&](int g) { return brange[g].second - brange[g].first; };
                    for (int g = 1; g < k; ++g)
                        if (alen(g) + blen(g) == 0) return;  // no f_{0,0}

                    std::vector<SparseVec> G(k + 1);
                    std::vector<int> apar(k + 1), bpar(k + 1);
                    Tuple key;
                    for (int g = 0; g <= k; ++g) {
                        key.clear();
                        int sa = 0, sb = 0;
                        for (int x = arange[g].first + 1; x <= arange[g].second; ++x) {
                            int idx = ((x % (n + 1)) + (n + 1)) % (n + 1);
                            key.push_back(ta[idx]);
                            sa = (sa + sdeg(dega[idx])) & 1;
                        }
                        for (int x = brange[g].first + 1; x <= brange[g].second; ++x) {
                            int idx = ((x % (m + 1)) + (m + 1)) % (m + 1);
                            key.push_back(tb[idx]);
                            sb = (sb + sdeg(degb[idx])) & 1;
                        }
                        apar[g] = sa;
                        bpar[g] = sb;
                        const SparseVec* blk = f.f_entry(alen(g), blen(g), key);
                        if (!blk) {
                            if (alen(g) + blen(g) > f.complete_to)
                                throw ArityExhausted("pushforward: bimorphism table exhausted at (" +
                                                     std::to_string(alen(g)) + "," +
                                                     std::to_string(blen(g)) + ")");
                            G[g].clear();
                        } else {
                            G[g] = *blk;
                        }
                    }
                    for (int g = 0; g <= k; ++g)
                        if (G[g].empty()) return;

                    for (int q = 1; q <= k; ++q) {
                        for (int p = 0; p < q; ++p) {
                            int eps = l_linear(dega, 0, n);
                            eps += l_linear(dega, iv[q] + 1, n) * l_linear(dega, 0, iv[q]);
                            eps += l_linear(degb, jv[q - 1] + 1, m) * l_linear(degb, 0, jv[q - 1]);
                            eps += 1;
                            int bpre = 0;
                            for (int s2 = 1; s2 <= k; ++s2) {
                                bpre = (bpre + bpar[(q + s2 - 1) % (k + 1)]) & 1;
                                eps += apar[(q + s2) % (k + 1)] * bpre;
                            }
                            const int arity = k + p + 2 - q;
                            require_arity(C, arity);
                            std::vector<SparseVec> args;
                            args.reserve(arity);
                            for (int g = q; g <= k; ++g) args.push_back(G[g]);
                            for (int g = 0; g <= p; ++g) args.push_back(G[g]);
                            SparseVec head = C.mu_apply(arity, args);
                            if (head.empty()) continue;
                            Scalar sgn = parity_sign(eps & 1) * coef;
                            Tuple nt;
                            std::function<void(int, const Scalar&)> emit = [&](int g,
                                                                               const Scalar& cc) {
                                if (g == q) {
                                    out.add(nt, cc);
                                    return;
                                }
                                for (const auto& [ti, tc] : G[g]) {
                                    nt.push_back(ti);
                                    emit(g + 1, cc * tc);
                                    nt.pop_back();
                                }
                            };
                            for (const auto& [hi, hc] : head) {
                                nt.clear();
                                nt.push_back(hi);
                                emit(p + 1, sgn * hc);
                            }
                        }
                    }
                };
                reci(0);
            }
        }
    }
    return out;
}

Scalar trace_functional(const EndAlgebra& E, const HochschildChain& c) {
    Scalar out(0);
    for (const auto& [t, coef] : c.terms) {
        if (t.size() != 1) continue;
        if (E.alg->deg(t[0]) != 0) continue;
        out += coef * supertrace(E.op_of_basis.at(t[0]));
    }
    return out;
}

Scalar pairing_psi(const AInftyBimodule& M, const HochschildChain& c1, const HochschildChain& c2) {
    const AInftyAlgebra& A1 = *M.left;
    const AInftyAlgebra& A2 = *M.right;
    Scalar out(0);
    for (const auto& [ta, ca] : c1.terms) {
        for (const auto& [tb, cb] : c2.terms) {
            const int n = static_cast<int>(ta.size()) - 1;
            const int m = static_cast<int>(tb.size()) - 1;
            if (n + 1 + m + 1 > M.complete_to)
                throw ArityExhausted("pairing_psi: bimodule tables exhausted at (" +
                                     std::to_string(n + 1) + "," + std::to_string(m + 1) + ")");
            std::vector<int> dega = tuple_degrees(A1, ta);
            std::vector<int> degb = tuple_degrees(A2, tb);
            const int l0mb = l_linear(degb, 0, m);

            Tuple key(static_cast<size_t>(n + m + 3));
            for (int v = 0; v < M.space.dim(); ++v) {
                SparseVec Tv;
                for (int i = 0; i <= n; ++i) {
                    for (int j = 0; j <= m; ++j) {
                        int sig = l_linear(dega, 0, n);
                        sig += l_linear(dega, 0, i - 1) * l_linear(dega, i, n);
                        for (int p = 0; p <= j; ++p)
                            for (int q = p + 1; q <= j; ++q) sig += sdeg(degb[p]) * sdeg(degb[q]);
                        for (int p = j + 1; p <= m; ++p)
                            for (int q = p + 1; q <= m; ++q) sig += sdeg(degb[p]) * sdeg(degb[q]);
                        sig += l0mb * M.space.degree(v);

                        int pos = 0;
                        for (int s = i; s <= n; ++s) key[pos++] = ta[s];
                        for (int s = 0; s < i; ++s) key[pos++] = ta[s];
                        key[pos++] = v;
                        for (int s = j; s >= 0; --s) key[pos++] = tb[s];
                        for (int s = m; s >= j + 1; --s) key[pos++] = tb[s];
                        const SparseVec* val = M.mu_entry(n + 1, m + 1, key);
                        if (!val) continue;
                        vec_axpy(Tv, *val, parity_sign(sig & 1));
                    }
                }
                Scalar diag = vec_coeff(Tv, v);
                if (!diag.is_zero()) out += ca * cb * diag * parity_sign(M.space.degree(v) & 1);
            }
        }
    }
    return out;
}

Scalar pairing_mu3(AlgebraPtr Aptr, int a, int b) {
    const AInftyAlgebra& A = *Aptr;
    if (A.deg(a) + A.deg(b) != 1)
        throw std::invalid_argument("pairing_mu3: need |a| + |b| = 1");
    if (A.mu_entry(1, std::array{a}) || A.mu_entry(1, std::array{b}))
        throw std::invalid_argument("pairing_mu3: arguments must be closed");
    require_arity(A, 3);
    Scalar out(0);
    Tuple key(3);
    for (int v = 0; v < A.dim(); ++v) {
        key[0] = a;
        key[1] = v;
        key[2] = b;
        const SparseVec* val = A.mu_entry(3, key);
        if (!val) continue;
        Scalar diag = vec_coeff(*val, v);
        if (diag.is_zero()) continue;
        int par = (A.deg(b) + 1) * A.deg(v) + A.deg(v);
        out += diag * parity_sign(par & 1);
    }
    return -out;
}

}  // namespace ainfty
