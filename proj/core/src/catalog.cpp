#include "ainfty/catalog.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ainfty {

namespace {

AInftyAlgebra make_lambda1() {
    DgAlgebraSpec s;
    s.name = "lambda1";
    s.space = BigradedSpace({{"1", 0, 0}, {"xi", 1, 1}});
    s.unit = 0;
    s.products[{0, 0}] = vec_unit(0);
    s.products[{0, 1}] = vec_unit(1);
    s.products[{1, 0}] = vec_unit(1);
    // xi^2 = 0
    return from_dg(s);
}

AInftyAlgebra make_dual_numbers() {
    DgAlgebraSpec s;
    s.name = "dual_numbers";
    s.space = BigradedSpace({{"1", 0, 0}, {"eps", 0, 1}});
    s.unit = 0;
    s.products[{0, 0}] = vec_unit(0);
    s.products[{0, 1}] = vec_unit(1);
    s.products[{1, 0}] = vec_unit(1);
    return from_dg(s);
}

AInftyAlgebra make_truncated_poly(int n, int gen_degree, const std::string& gen,
                                  const std::string& name) {
    // k[g]/g^n with |g| = gen_degree and w(g^k) = k
    std::vector<BasisElement> basis;
    basis.push_back({"1", 0, 0});
    for (int k = 1; k < n; ++k)
        basis.push_back({k == 1 ? gen : gen + std::to_string(k), gen_degree * k, k});
    DgAlgebraSpec s;
    s.name = name;
    s.space = BigradedSpace(basis);
    s.unit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a + b >= n) continue;  // truncation
            s.products[{a, b}] = vec_unit(a + b);
        }
    return from_dg(s);
}

// Words in t1, t2 of total weight <= W; |t1| = 0, w 1; |t2| = -1, w 2.
struct FreeCWords {
    std::vector<std::string> names;
    std::vector<std::vector<int>> words;  // letters: 1 or 2
};

FreeCWords enumerate_words(int W) {
    FreeCWords out;
    out.names.push_back("1");
    out.words.push_back({});
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& w, int wt) {
        if (!w.empty()) {
            std::string nm;
            for (int l : w) nm += (l == 1 ? "t1" : "t2");
            out.names.push_back(nm);
            out.words.push_back(w);
        }
        for (int l : {1, 2}) {
            if (wt + l > W) continue;
            w.push_back(l);
            rec(w, wt + l);
            w.pop_back();
        }
    };
    std::vector<int> w;
    rec(w, 0);
    return out;
}

AInftyAlgebra make_free_C(int W) {
    if (W < 1) throw std::invalid_argument("free_C: weight bound must be >= 1");
    FreeCWords ws = enumerate_words(W);
    std::vector<BasisElement> basis;
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < ws.words.size(); ++i) {
        int deg = 0, wt = 0;
        for (int l : ws.words[i]) {
            deg += (l == 2) ? -1 : 0;
            wt += l;
        }
        basis.push_back({ws.names[i], deg, wt});
        index[ws.words[i]] = static_cast<int>(i);
    }
    DgAlgebraSpec s;
    s.name = "free_C(" + std::to_string(W) + ")";
    s.space = BigradedSpace(basis);
    s.unit = 0;
    s.weight_truncation = W;

    auto wt_of = [&](const std::vector<int>& w) {
        int t = 0;
        for (int l : w) t += l;
        return t;
    };
    // concatenation product (within the weight bound)
    for (size_t i = 0; i < ws.words.size(); ++i)
        for (size_t j = 0; j < ws.words.size(); ++j) {
            if (wt_of(ws.words[i]) + wt_of(ws.words[j]) > W) continue;
            std::vector<int> cat = ws.words[i];
            cat.insert(cat.end(), ws.words[j].begin(), ws.words[j].end());
            s.products[{static_cast<int>(i), static_cast<int>(j)}] = vec_unit(index.at(cat));
        }
    // d t2 = t1^2, extended as a derivation: d(w) = sum over t2-positions,
    // sign (-1)^{deg of the prefix}
    for (size_t i = 0; i < ws.words.size(); ++i) {
        const auto& w = ws.words[i];
        SparseVec dv;
        int prefix_deg = 0;
        for (size_t p = 0; p < w.size(); ++p) {
            if (w[p] == 2) {
                std::vector<int> dw(w.begin(), w.begin() + p);
                dw.push_back(1);
                dw.push_back(1);
                dw.insert(dw.end(), w.begin() + p + 1, w.end());
                vec_add_term(dv, index.at(dw), parity_sign(prefix_deg & 1));
            }
            prefix_deg += (w[p] == 2) ? 1 : 0;  // parity of |prefix|
        }
        if (!dv.empty()) s.d[static_cast<int>(i)] = dv;
    }
    return from_dg(s);
}

}  // namespace

AInftyAlgebra tensor_dg(const AInftyAlgebra& A, const AInftyAlgebra& B, const std::string& name) {
    if (A.arity_bound > 2 || B.arity_bound > 2)
        throw std::invalid_argument("tensor_dg: inputs must be DG algebras (mu_{>=3} = 0)");
    if (!A.has_unit() || !B.has_unit())
        throw std::invalid_argument("tensor_dg: inputs must be unital");

    std::vector<BasisElement> basis;
    for (const auto& ea : A.space.basis)
        for (const auto& eb : B.space.basis)
            basis.push_back({ea.name + "|" + eb.name, ea.degree + eb.degree, ea.weight + eb.weight});
    BigradedSpace sp(basis);
    const int nb = B.dim();
    auto idx = [&](int a, int b) { return a * nb + b; };

    // recover the plain differential and product from the from_dg tables
    auto plain_d = [](const AInftyAlgebra& X, int i) -> SparseVec {
        const SparseVec* v = X.mu_entry(1, std::array{i});
        return v ? vec_scale(*v, Scalar(-1)) : SparseVec{};
    };
    auto plain_prod = [](const AInftyAlgebra& X, int i, int j) -> SparseVec {
        const SparseVec* v = X.mu_entry(2, std::array{i, j});
        return v ? vec_scale(*v, parity_sign(X.deg(i) & 1)) : SparseVec{};
    };

    DgAlgebraSpec s;
    s.name = name;
    s.space = sp;
    s.unit = idx(A.unit, B.unit);
    for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < B.dim(); ++b) {
            SparseVec dv;
            for (const auto& [o, c] : plain_d(A, a)) vec_add_term(dv, idx(o, b), c);
            for (const auto& [o, c] : plain_d(B, b))
                vec_add_term(dv, idx(a, o), c * parity_sign(A.deg(a) & 1));
            if (!dv.empty()) s.d[idx(a, b)] = dv;
        }
    for (int a1 = 0; a1 < A.dim(); ++a1)
        for (int b1 = 0; b1 < B.dim(); ++b1)
            for (int a2 = 0; a2 < A.dim(); ++a2)
                for (int b2 = 0; b2 < B.dim(); ++b2) {
                    // (a1|b1)(a2|b2) = (-1)^{|b1||a2|} a1a2 | b1b2
                    SparseVec pa = plain_prod(A, a1, a2);
                    SparseVec pb = plain_prod(B, b1, b2);
                    if (pa.empty() || pb.empty()) continue;
                    SparseVec out;
                    for (const auto& [oa, ca] : pa)
                        for (const auto& [ob, cb] : pb) vec_add_term(out, idx(oa, ob), ca * cb);
                    Scalar sgn = parity_sign((B.deg(b1) * A.deg(a2)) & 1);
                    s.products[{idx(a1, b1), idx(a2, b2)}] = vec_scale(out, sgn);
                }
    return from_dg(s);
}

Bimorphism tensor_bimorphism(AlgebraPtr A, AlgebraPtr B, AlgebraPtr T) {
    Bimorphism f;
    f.A = A;
    f.B = B;
    f.C = T;
    const int nb = B->dim();
    for (int a = 0; a < A->dim(); ++a) f.set_f(1, 0, {a}, vec_unit(a * nb + B->unit));
    for (int b = 0; b < B->dim(); ++b) f.set_f(0, 1, {b}, vec_unit(A->unit * nb + b));
    f.complete_to = std::numeric_limits<int>::max();
    return f;
}

namespace {

bool parse_key(const std::string& key, std::string& head, std::vector<std::string>& args) {
    auto lp = key.find('(');
    if (lp == std::string::npos) {
        head = key;
        return true;
    }
    if (key.back() != ')') return false;
    head = key.substr(0, lp);
    std::string inner = key.substr(lp + 1, key.size() - lp - 2);
    int depth = 0;
    std::string cur;
    for (char c : inner) {
        if (c == '(') depth++;
        if (c == ')') depth--;
        if (c == ',' && depth == 0) {
            args.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) args.push_back(cur);
    return depth == 0;
}

}  // namespace

AInftyAlgebra make_algebra(const std::string& key) {
    std::string head;
    std::vector<std::string> args;
    if (!parse_key(key, head, args)) throw std::invalid_argument("bad catalog key: " + key);
    if (head == "lambda1" && args.empty()) return make_lambda1();
    if (head == "dual_numbers" && args.empty()) return make_dual_numbers();
    if (head == "y_cube" && args.empty()) return make_truncated_poly(3, 1, "y", "y_cube");
    if (head == "truncated_poly" && args.size() == 1) {
        int n = std::stoi(args[0]);
        if (n < 2) throw std::invalid_argument("truncated_poly: n must be >= 2");
        return make_truncated_poly(n, 0, "x", "truncated_poly(" + std::to_string(n) + ")");
    }
    if (head == "free_C" && args.size() == 1) return make_free_C(std::stoi(args[0]));
    if (head == "tensor" && args.size() == 2) {
        AInftyAlgebra A = make_algebra(args[0]);
        AInftyAlgebra B = make_algebra(args[1]);
        return tensor_dg(A, B, "tensor(" + args[0] + "," + args[1] + ")");
    }
    throw std::invalid_argument("unknown catalog key: " + key);
}

AlgebraPtr make_algebra_ptr(const std::string& key) {
    return std::make_shared<AInftyAlgebra>(make_algebra(key));
}

bool is_valid_catalog_key(const std::string& key) {
    try {
        make_algebra(key);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace ainfty
