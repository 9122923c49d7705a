#include "ainfty/certify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ainfty/catalog.hpp"
#include "ainfty/hom_complex.hpp"

namespace ainfty {

bool Certificate::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

CertCheck& Certificate::add(const std::string& name, const std::string& statement,
                            const std::string& bound) {
    checks.push_back({name, statement, bound, true, ""});
    return checks.back();
}

namespace {

std::string fmt_dims(const std::map<std::pair<int, int>, int>& dims) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : dims) {
        if (v == 0) continue;
        if (!first) os << ", ";
        os << "(" << k.first << "," << k.second << "):" << v;
        first = false;
    }
    return os.str();
}

void merge_report(Certificate& cert, const std::string& name, const std::string& statement,
                  const CheckReport& rep, const std::string& bound = "") {
    CertCheck& c = cert.add(name, statement, bound.empty() ? rep.scope : bound);
    c.pass = rep.pass;
    c.value = rep.pass ? ("ok; " + std::to_string(rep.relations_checked) + " relations")
                       : rep.first_failure;
}

// the largest weight through which the truncated resolution P sees every class
int p_max_weight(int N) { return (N / 2) * 3 + (N % 2 ? 1 : 0); }

}  // namespace

// ---------------------------------------------------------------------------

Certificate certify_check_ainfty(const std::string& key, int arity) {
    Certificate cert;
    cert.pipeline = "check-ainfty";
    cert.parameters = {{"algebra", key}, {"arity", std::to_string(arity)}};
    AInftyAlgebra A = make_algebra(key);
    merge_report(cert, "relations", "strict unitality and A-infinity relations hold exhaustively",
                 check_structure(A, arity));

    // mutation probe: flipping a single table sign must be caught. Not every
    // flip is catchable (some produce a different but valid algebra, e.g.
    // negating the lone reduced product of k[y]/y^3), so the probe walks the
    // stored entries in order and requires that some flip is detected.
    {
        CertCheck& c = cert.add("mutation",
                                "a single sign flip in the operation tables is detected");
        c.pass = false;
        c.value = "no detectable flip found";
        for (int n = 1; n < static_cast<int>(A.mu.size()) && !c.pass; ++n) {
            for (const auto& [k, v] : A.mu[n]) {
                AInftyAlgebra mutant = A;
                mutant.set_mu(n, k, vec_scale(v, Scalar(-1)));
                CheckReport rep = check_structure(mutant, std::min(arity, 4));
                if (!rep.pass) {
                    c.pass = true;
                    c.value = "flip of mu_" + std::to_string(n) + " caught: " + rep.first_failure;
                    break;
                }
            }
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------

Certificate certify_hochschild(const std::string& key, int weight_max) {
    Certificate cert;
    cert.pipeline = "hochschild";
    cert.parameters = {{"algebra", key}, {"weight_max", std::to_string(weight_max)}};
    cert.note_convention(
        "degrees are cohomological: the paper's HH_n appears in artifact degree -n");
    AlgebraPtr A = make_algebra_ptr(key);

    long checked = 0;
    bool identities = true;
    std::string why;
    std::map<std::pair<int, int>, int> bar_dims;
    for (int w = 0; w <= weight_max; ++w) {
        HochschildSlice S = hochschild_slice(A, w);
        for (const auto& [d, ts] : S.tuples) {
            (void)d;
            for (const Tuple& t : ts) {
                HochschildChain c(A);
                c.add(t, Scalar(1));
                HochschildChain bb = hochschild_b(hochschild_b(c));
                HochschildChain BB = connes_B(connes_B(c));
                HochschildChain m = hochschild_b(connes_B(c)) + connes_B(hochschild_b(c));
                ++checked;
                if (!bb.is_zero() || !BB.is_zero() || !m.is_zero()) {
                    identities = false;
                    if (why.empty()) why = "identity fails on " + c.str();
                }
            }
        }
        HomologyReport H = homology_of_slice(S.complex);
        if (!recheck_homology(S.complex, H, &why)) identities = false;
        for (const auto& [k, v] : H.dims)
            if (v > 0) bar_dims[{k.first, w}] += v;
    }
    {
        CertCheck& c = cert.add("mixed-identities",
                                "b^2 = 0, B^2 = 0 and bB + Bb = 0 exactly on every slice tuple",
                                "weights 0.." + std::to_string(weight_max));
        c.pass = identities;
        c.value = identities ? "ok; " + std::to_string(checked) + " tuples" : why;
    }
    {
        CertCheck& c = cert.add("dims", "per-weight slice homology dims");
        c.value = fmt_dims(bar_dims);
    }
    if (key == "lambda1" || key == "dual_numbers" || key.rfind("truncated_poly(", 0) == 0) {
        BigradedCohomologyReport small = hochschild_dims_small_complex(key, weight_max);
        std::map<std::pair<int, int>, int> sm;
        for (const auto& [k, v] : small.dims)
            if (v > 0) sm[k] = v;
        CertCheck& c = cert.add("two-routes",
                                "bar-slice dims equal the periodic-resolution route dims");
        c.pass = (sm == bar_dims);
        if (!c.pass) c.value = "bar: " + fmt_dims(bar_dims) + " | resolution: " + fmt_dims(sm);
    }
    if (key == "lambda1") {
        CertCheck& c = cert.add("paper-profile",
                                "one class per weight in degrees 0 and +1 (dx/x^w and x^{-w}), "
                                "none elsewhere, for weights 1..bound");
        for (int w = 1; w <= weight_max; ++w) {
            int d0 = bar_dims.count({0, w}) ? bar_dims[{0, w}] : 0;
            int d1 = bar_dims.count({1, w}) ? bar_dims[{1, w}] : 0;
            int total = 0;
            for (const auto& [k, v] : bar_dims)
                if (k.second == w) total += v;
            if (d0 != 1 || d1 != 1 || total != 2) c.pass = false;
        }
    }
    if (key == "dual_numbers") {
        CertCheck& c = cert.add("paper-profile",
                                "HH_1 is one-dimensional and concentrated in weight 1");
        int total = 0;
        for (const auto& [k, v] : bar_dims)
            if (k.first == -1) total += v;
        c.pass = (total == 1) && bar_dims.count({-1, 1}) && bar_dims[{-1, 1}] == 1;
    }
    return cert;
}

// ---------------------------------------------------------------------------

Certificate certify_ext(int P_truncation, int periodic_depth, int C_weight_bound) {
    Certificate cert;
    cert.pipeline = "ext";
    cert.parameters = {{"P_truncation", std::to_string(P_truncation)},
                       {"periodic_depth", std::to_string(periodic_depth)},
                       {"C_weight_bound", std::to_string(C_weight_bound)}};
    cert.note_convention(
        "ext dictionary: v_n sits at (degree, weight) = (-floor(n/2), w(e_n)); the resolution "
        "generator weights are 0,1,6,7,12,... and reported class weights are w(m) - w(e_p), so "
        "the printed twists k[eps](6) and k(4) appear as rows {-6,-5} and {-4}");

    ResolutionP P = build_resolution_P(P_truncation);
    BigradedCohomologyReport ext = ext_algebra(P, 4);
    {
        CertCheck& c = cert.add(
            "ext-identities",
            "v_n supercommute with d; v1 v2 + v2 v1 = 0; v1 v2^k = (-1)^k v_{2k+1} for k <= 4; "
            "Ext^0 is the dual numbers; P resolves k on the truncation",
            "N = " + std::to_string(P_truncation));
        c.pass = ext.pass;
        for (const auto& n : ext.notes) c.value += n + "; ";
        if (!ext.pass)
            for (const auto& n : ext.notes)
                if (n.rfind("FAIL", 0) == 0) c.value += n + "; ";
    }

    AlgebraPtr C = make_algebra_ptr("free_C(" + std::to_string(C_weight_bound) + ")");
    CohomologyOfC coh = cohomology_of_C(C);
    {
        CertCheck& c = cert.add("cohomology-of-C",
                                "per-weight dims equal the u2^a u1^d monomial count (1 for weight "
                                "= 0,1 mod 3, else 0) with cocycle-level verification of u1^2 = 0 "
                                "and u1 u2 + u2 u1 = 0",
                                "weights 0.." + std::to_string(C_weight_bound));
        c.pass = coh.report.pass;
        for (int w = 0; w <= C_weight_bound && c.pass; ++w) {
            int expected = (w % 3 == 2) ? 0 : 1;
            int got = 0;
            for (const auto& [k, v] : coh.report.dims)
                if (k.second == w) got += v;
            if (got != expected || (expected && coh.report.dim(-(w / 3), w) != 1)) c.pass = false;
        }
        c.value = c.pass ? fmt_dims(coh.report.dims)
                         : "cohomology of C disagrees with the monomial count";
        for (const auto& n : coh.report.notes)
            if (n.rfind("FAIL", 0) == 0) c.value += "; " + n;
    }
    {
        int wcap = std::min(C_weight_bound, p_max_weight(P_truncation));
        std::map<std::pair<int, int>, int> a, b;
        for (const auto& [k, v] : ext.dims)
            if (k.second <= wcap && v > 0) a[k] = v;
        for (const auto& [k, v] : coh.report.dims)
            if (k.second <= wcap && v > 0) b[k] = v;
        CertCheck& c = cert.add("ext-vs-C", "Ext dims coincide with H(C) dims under the dictionary",
                                "weights <= " + std::to_string(wcap));
        c.pass = (a == b);
        c.value = c.pass ? fmt_dims(a) : ("ext " + fmt_dims(a) + " vs C " + fmt_dims(b));
    }
    {
        int wcap = std::min(8, C_weight_bound);
        BigradedCohomologyReport end = end_of_k_cohomology(wcap);
        std::map<std::pair<int, int>, int> a, b;
        for (const auto& [k, v] : end.dims)
            if (v > 0) a[k] = v;
        for (const auto& [k, v] : coh.report.dims)
            if (k.second <= wcap && v > 0) b[k] = v;
        CertCheck& c = cert.add("end-vs-C",
                                "cohomology of End(k) over k[y]/y^3 matches H(C) per weight",
                                "weights <= " + std::to_string(wcap));
        c.pass = (a == b);
        c.value = c.pass ? fmt_dims(a) : ("end " + fmt_dims(a) + " vs C " + fmt_dims(b));
    }

    PeriodicResolution R = build_periodic_resolution(6, periodic_depth);
    {
        CertCheck& c = cert.add("periodic-resolution",
                                "d o d = 0 and exactness by rank counting at every checked step",
                                "depth " + std::to_string(periodic_depth));
        c.pass = R.pass;
        for (const auto& s : R.checks)
            if (s.rfind("FAIL", 0) == 0) c.value += s + "; ";
        if (c.pass) c.value = "ok; twists 0,-1,-6,-7,... (generator weights 0,1,6,7,...)";
    }

    auto twisted = [&](int a) {
        TruncPolyBimodule M;
        M.name = "H^-" + std::to_string(a) + "(C)";
        M.space = BigradedSpace({{"u", -a, 3 * a}, {"ue", -a, 3 * a + 1}});
        M.left_x = LinearMap(M.space, M.space, 0, 1);
        M.right_x = LinearMap(M.space, M.space, 0, 1);
        M.left_x.set_entry(1, 0, parity_sign(a & 1));
        M.right_x.set_entry(1, 0, Scalar(1));
        return M;
    };
    {
        CertCheck& c = cert.add("coefficient-bimodules",
                                "H^{-a}(C) carries the twisted (anti-)diagonal bimodule "
                                "structure: left u1-action = (-1)^a, right = +1 on the chosen "
                                "representatives (a = 0, 1, 2)");
        const AInftyAlgebra& CC = *C;
        int t1 = CC.space.index_of("t1");
        auto plain_prod = [&](const SparseVec& x, const SparseVec& y) {
            SparseVec r;
            for (const auto& [i, ci] : x)
                for (const auto& [j, cj] : y) {
                    const SparseVec* p = CC.mu_entry(2, std::array{i, j});
                    if (p) vec_axpy(r, *p, ci * cj * parity_sign(CC.deg(i) & 1));
                }
            return r;
        };
        for (int a = 0; a <= 2 && c.pass; ++a) {
            if (3 * a + 1 > C_weight_bound) break;
            auto u = coh.reps.find({-a, 3 * a});
            auto ue = coh.reps.find({-a, 3 * a + 1});
            if (u == coh.reps.end() || ue == coh.reps.end()) {
                c.pass = false;
                c.value = "missing representative";
                break;
            }
            SparseVec lhs = plain_prod(vec_unit(t1), u->second);
            SparseVec rhs = plain_prod(u->second, vec_unit(t1));
            Echelon bnd;
            for (int i = 0; i < CC.dim(); ++i) {
                if (CC.wt(i) != 3 * a + 1 || CC.deg(i) != -a - 1) continue;
                const SparseVec* m1 = CC.mu_entry(1, std::array{i});
                if (m1) bnd.insert(*m1);
            }
            SparseVec dl =
                bnd.reduce(vec_add(lhs, vec_scale(ue->second, parity_sign((a + 1) & 1))));
            SparseVec dr = bnd.reduce(vec_add(rhs, vec_scale(ue->second, Scalar(-1))));
            if (!dl.empty() || !dr.empty()) {
                c.pass = false;
                c.value = "action mismatch at a = " + std::to_string(a);
            }
        }
        if (c.pass) c.value = "ok";
    }
    {
        CertCheck& c = cert.add(
            "bigraded-HH",
            "HH^{2k+2}(k[x]/x^6, H^{-2k}(C)) has the k[eps](6) pattern and "
            "HH^{2k+3}(k[x]/x^6, H^{-2k-1}(C)) the k(4) pattern for k = 0, 1, 2; the weight-0 "
            "column vanishes in all solver-relevant rows",
            "rows <= " + std::to_string(periodic_depth - 1));
        for (int k = 0; k <= 2 && c.pass; ++k) {
            int p = 2 * k + 2, q = 2 * k + 3;
            if (p + 1 <= periodic_depth) {
                BigradedCohomologyReport even = hochschild_cohomology_bigraded(R, twisted(2 * k));
                if (even.dim(p, -6) != 1 || even.dim(p, -5) != 1) c.pass = false;
                for (const auto& [key, v] : even.dims)
                    if (key.first == p && v > 0 && key.second != -6 && key.second != -5)
                        c.pass = false;
                if (even.dim(p, 0) != 0) c.pass = false;
            }
            if (q + 1 <= periodic_depth) {
                BigradedCohomologyReport odd =
                    hochschild_cohomology_bigraded(R, twisted(2 * k + 1));
                if (odd.dim(q, -4) != 1) c.pass = false;
                for (const auto& [key, v] : odd.dims)
                    if (key.first == q && v > 0 && key.second != -4) c.pass = false;
                if (odd.dim(q, 0) != 0) c.pass = false;
            }
        }
        if (!c.pass) c.value = "pattern mismatch";
        else c.value = "rows 2k+2: {(-6):1, (-5):1}; rows 2k+3: {(-4):1}; weight-0 column zero";
    }
    return cert;
}

// ---------------------------------------------------------------------------

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string prefix_digest(const MorphismPrefix& P) {
    std::ostringstream os;
    for (int n = 1; n < static_cast<int>(P.g.f.size()); ++n)
        for (const auto& [k, v] : P.g.f[n]) {
            for (int i : k) os << i << ",";
            os << ":";
            for (const auto& [i, c] : v) os << i << "=" << c.str() << ";";
            os << "|";
        }
    std::ostringstream hex;
    hex << std::hex << fnv1a(os.str());
    return hex.str();
}

}  // namespace

SolverArtifacts certify_solver(int target_arity, int weight_bound, int length_bound) {
    SolverArtifacts out;
    Certificate& cert = out.cert;
    cert.pipeline = "solve-morphism";
    cert.parameters = {{"target_arity", std::to_string(target_arity)},
                       {"weight_bound", std::to_string(weight_bound)},
                       {"length_bound", std::to_string(length_bound)}};
    cert.note_convention(
        "certified interior: morphism relations are verified exhaustively on reduced source "
        "tuples of weight <= min(weight_bound, length_bound) at every arity (the nested cap "
        "forced by obstruction closedness)");
    cert.note_convention(
        "gauge: g_1(x) is the +1 multiple of the cochain dual to (z; y); the scalar is a free "
        "choice and affects component values only, never verdicts");

    SolveOutcome sol = solve_to_arity(target_arity, weight_bound, length_bound);
    {
        CertCheck& c = cert.add("solve", "inductive extension succeeds at every arity",
                                "arity <= " + std::to_string(target_arity));
        c.pass = sol.success;
        for (const auto& l : sol.log) c.value += l + "; ";
        if (!sol.success) c.value += sol.failure;
    }
    if (!sol.success) return out;

    {
        CheckReport rep = check_structure(sol.prefix.g, target_arity);
        merge_report(cert, "relations",
                     "every morphism relation whose components exist holds exhaustively on the "
                     "certified interior",
                     rep);
    }
    {
        MorphismPrefix P = prescribe_g1(weight_bound, length_bound);
        const HomComplex& H = P.target.hom;
        AlgebraPtr y3 = make_algebra_ptr("y_cube");
        int y = y3->space.index_of("y");
        int y2 = y3->space.index_of("y2");
        SparseVec u2 = vec_add(vec_unit(H.find_item(0, std::array{y, y2}, 0)),
                               vec_unit(H.find_item(0, std::array{y2, y}, 0), Scalar(-1)));
        int x = P.source->space.index_of("x");
        std::map<Tuple, SparseVec> corrupt;
        corrupt[Tuple{x, x}] = u2;
        StepOutcome st = extend_one_arity(P, &corrupt);
        CertCheck& c = cert.add("corruption-witness",
                                "a residual corrupted by a non-exact cocycle is rejected with an "
                                "inconsistency witness");
        c.pass = !st.success && st.witness.has_value();
        c.value = c.pass ? "witness produced" : "corruption was not refused";
    }
    {
        ObstructionSystem sys = assemble_obstruction(sol.prefix, target_arity);
        CertCheck& c = cert.add("system-size", "assembled system statistics at the top arity");
        c.value = std::to_string(sys.equations) + " equations, " + std::to_string(sys.unknowns) +
                  " gauge unknowns";
    }
    {
        CertCheck& c = cert.add("determinism", "component tables digest (FNV-1a)");
        c.value = prefix_digest(sol.prefix);
    }
    out.prefix = std::move(sol.prefix);
    return out;
}

// ---------------------------------------------------------------------------

TenDimArtifacts certify_ten_dim(int arity, int weight_bound, int length_bound) {
    TenDimArtifacts out;
    Certificate& cert = out.cert;
    cert.pipeline = "certify-10dim";
    cert.parameters = {{"arity", std::to_string(arity)},
                       {"weight_bound", std::to_string(weight_bound)},
                       {"length_bound", std::to_string(length_bound)}};
    cert.note_convention(
        "basis weights of the glued algebra: w(x^k) = k, w(y^j) = -j, w(z) = 0 (the right-hand "
        "weights are negated so every operation table is weight-homogeneous)");

    SolveOutcome sol = solve_to_arity(6, weight_bound, length_bound);
    {
        CertCheck& c = cert.add("solver", "the morphism g exists to arity 6");
        c.pass = sol.success;
        if (!sol.success) c.value = sol.failure;
    }
    if (!sol.success) return out;

    AInftyBimodule V = bimodule_from_prefix(sol.prefix, arity - 1, "V");
    {
        CertCheck& c = cert.add("bimodule-V",
                                "V = k.z with mu_{1,1}(x, z, y) = z, and V passes the bimodule "
                                "relation checker",
                                "(i, j) <= (4, 3)");
        const SparseVec* v11 = V.mu_entry(
            1, 1, std::array{V.left->space.index_of("x"), 0, V.right->space.index_of("y")});
        c.pass = v11 && (*v11 == vec_unit(0) || *v11 == vec_unit(0, Scalar(-1)));
        if (c.pass) c.value = "mu_{1,1}(x,z,y) = " + vec_coeff(*v11, 0).str() + " * z";
        CheckReport rep = check_structure(V, 4, 3);
        if (!rep.pass) {
            c.pass = false;
            c.value += " | " + rep.first_failure;
        }
    }

    AInftyAlgebra B = glue(V, "B10");
    AlgebraPtr Bptr = std::make_shared<AInftyAlgebra>(B);
    {
        CertCheck& c = cert.add("dimension", "dim B = 3 + 6 + 1 = 10, minimal, strictly unital");
        c.pass = (B.dim() == 10) && B.minimal && B.has_unit();
        c.value = "dim " + std::to_string(B.dim());
    }
    {
        CertCheck& c = cert.add("glue-restriction",
                                "mu restricted to x-only inputs is the truncated polynomial "
                                "product");
        int u = B.unit;
        int oneB = B.space.index_of("B:1");
        SparseVec oneA = vec_add(vec_unit(u), vec_unit(oneB, Scalar(-1)));
        auto emb_x = [&](int k) {
            return k == 0 ? oneA
                          : vec_unit(B.space.index_of(
                                "A:x" + std::string(k == 1 ? "" : std::to_string(k))));
        };
        for (int a = 0; a <= 5 && c.pass; ++a)
            for (int b = 0; b <= 5 && c.pass; ++b) {
                std::array<SparseVec, 2> args = {emb_x(a), emb_x(b)};
                SparseVec got = B.mu_apply(2, args);
                SparseVec want = (a + b <= 5) ? emb_x(a + b) : SparseVec{};
                if (got != want) {
                    c.pass = false;
                    c.value = "x-sector product mismatch";
                }
            }
        if (c.pass) c.value = "ok";
    }
    {
        CheckReport rep = check_structure(B, arity);
        merge_report(cert, "relations",
                     "strict unitality and all A-infinity relations hold exhaustively", rep);
    }

    const int x = B.space.index_of("A:x");
    const int y = B.space.index_of("B:y");
    Scalar str_value(0);
    {
        LinearMap T(B.space, B.space, 0, 0);
        Tuple key(3);
        for (int v = 0; v < B.dim(); ++v) {
            key[0] = x;
            key[1] = v;
            key[2] = y;
            const SparseVec* val = B.mu_entry(3, key);
            if (val)
                for (const auto& [o, c] : *val) T.add_entry(o, v, c);
        }
        str_value = supertrace(T);
        CertCheck& c = cert.add("supertrace", "str(v -> mu_3(x, v, y)) = 1 up to the recorded "
                                              "global sign convention");
        c.pass = (str_value == Scalar(1) || str_value == Scalar(-1));
        c.value = "str = " + str_value.str();
    }
    Scalar pairing(0);
    {
        pairing = pairing_mu3(Bptr, x, y);
        CertCheck& c = cert.add("pairing",
                                "<x, B(y)> = (-1)^{|x|+1} str(v -> (-1)^{(|y|+1)|v|} mu_3(x,v,y)) "
                                "is nonzero");
        c.pass = (pairing == -str_value) && !pairing.is_zero();
        c.value = "pairing = " + pairing.str();
    }
    {
        AInftyBimodule D = diagonal_bimodule(Bptr);
        HochschildChain cx(Bptr), cy(Bptr);
        cx.add({x}, Scalar(1));
        cy.add({y}, Scalar(1));
        Scalar psi = pairing_psi(D, cx, cy);
        CertCheck& c = cert.add("psi-agreement",
                                "the mu_3 pairing agrees with the explicit psi formula over the "
                                "diagonal bimodule");
        c.pass = (psi == pairing);
        c.value = "psi = " + psi.str();
    }
    out.algebra = std::move(B);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct KunnethData {
    AlgebraPtr L, K, T;
    Bimorphism ez;
    std::map<int, HochschildSlice> slicesL, slicesK, slicesT;
    std::map<int, HomologyReport> HL, HK, HT;
};

KunnethData build_kunneth(int weight_max) {
    KunnethData D;
    D.L = make_algebra_ptr("lambda1");
    D.K = make_algebra_ptr("dual_numbers");
    D.T = make_algebra_ptr("tensor(lambda1,dual_numbers)");
    D.ez = tensor_bimorphism(D.L, D.K, D.T);
    for (int w = 0; w <= weight_max; ++w) {
        D.slicesL.emplace(w, hochschild_slice(D.L, w));
        D.slicesK.emplace(w, hochschild_slice(D.K, w));
        D.slicesT.emplace(w, hochschild_slice(D.T, w));
        D.HL.emplace(w, homology_of_slice(D.slicesL.at(w).complex));
        D.HK.emplace(w, homology_of_slice(D.slicesK.at(w).complex));
        D.HT.emplace(w, homology_of_slice(D.slicesT.at(w).complex));
    }
    return D;
}

std::optional<SparseVec> class_coordinates(const HochschildSlice& S, int degree,
                                           const SparseVec& cycle,
                                           const std::vector<SparseVec>& gens) {
    auto sp_it = S.complex.spaces.find(degree);
    if (sp_it == S.complex.spaces.end()) return std::nullopt;
    const LinearMap* in = S.complex.diff(degree - 1);
    int nb = in ? in->source.dim() : 0;
    int ng = static_cast<int>(gens.size());
    std::vector<BasisElement> cols;
    for (int i = 0; i < nb + ng; ++i)
        cols.push_back({"c" + std::to_string(i), sp_it->second.basis.empty()
                                                     ? 0
                                                     : sp_it->second.basis.front().degree,
                        S.weight});
    // synthetic source; degrees set so the map validates trivially
    BigradedSpace src(cols);
    LinearMap Amat(src, sp_it->second, 0, 0);
    for (int j = 0; j < nb; ++j) Amat.cols[j] = in->cols[j];
    for (int j = 0; j < ng; ++j) Amat.cols[nb + j] = gens[j];
    auto res = solve_linear_system(Amat, cycle);
    if (!res.solved()) return std::nullopt;
    SparseVec out;
    for (const auto& [i, c] : *res.solution)
        if (i >= nb) vec_add_term(out, i - nb, c);
    return out;
}

}  // namespace

Certificate certify_section4(int weight_max) {
    Certificate cert;
    cert.pipeline = "verify-section4";
    cert.parameters = {{"weight_max", std::to_string(weight_max)}};
    cert.note_convention(
        "(id (x) B)(r (x) s) = (-1)^{deg r} r (x) B(s); the nonvanishing verdict is independent "
        "of this Koszul convention and of representative scaling");
    cert.note_convention(
        "the input class is fixed as the combination with coefficients 1, -1, 1 on the three "
        "components (the Chern character of the structure sheaf of the divisor x + eps = 0); "
        "deriving it from K-theory is out of scope here");

    KunnethData D = build_kunneth(weight_max);

    {
        CertCheck& c = cert.add("kunneth",
                                "per-(degree, weight) dims of the tensor algebra equal the "
                                "Kunneth sums, with EZ images a basis of the slice homology",
                                "weights 0.." + std::to_string(weight_max));
        for (int w = 0; w <= weight_max && c.pass; ++w) {
            std::map<int, int> expected;
            for (int w1 = 0; w1 <= w; ++w1)
                for (const auto& [k1, v1] : D.HL.at(w1).dims)
                    for (const auto& [k2, v2] : D.HK.at(w - w1).dims)
                        expected[k1.first + k2.first] += v1 * v2;
            std::map<int, int> got;
            for (const auto& [k, v] : D.HT.at(w).dims)
                if (v > 0) got[k.first] += v;
            for (auto it = expected.begin(); it != expected.end();) {
                if (it->second == 0)
                    it = expected.erase(it);
                else
                    ++it;
            }
            if (got != expected) {
                c.pass = false;
                c.value = "dims mismatch at weight " + std::to_string(w);
                break;
            }
            for (const auto& [dk, dim] : D.HT.at(w).dims) {
                int d = dk.first;
                std::vector<SparseVec> images;
                for (int w1 = 0; w1 <= w; ++w1)
                    for (const auto& [k1, reps1] : D.HL.at(w1).representatives)
                        for (const auto& [k2, reps2] : D.HK.at(w - w1).representatives) {
                            if (k1.first + k2.first != d) continue;
                            for (const auto& r1 : reps1)
                                for (const auto& r2 : reps2) {
                                    HochschildChain ez = pushforward_bimorphism(
                                        D.ez, D.slicesL.at(w1).coords_chain(r1, k1.first),
                                        D.slicesK.at(w - w1).coords_chain(r2, k2.first));
                                    SparseVec img = D.slicesT.at(w).chain_coords(ez, d);
                                    const LinearMap* dd = D.slicesT.at(w).complex.diff(d);
                                    if (dd && !dd->apply(img).empty()) {
                                        c.pass = false;
                                        c.value = "EZ image is not a cycle";
                                    }
                                    images.push_back(img);
                                }
                        }
                if (static_cast<int>(images.size()) != dim) {
                    c.pass = false;
                    c.value = "EZ image count mismatch at (" + std::to_string(d) + ", " +
                              std::to_string(w) + ")";
                    break;
                }
                Echelon e;
                const LinearMap* in = D.slicesT.at(w).complex.diff(d - 1);
                if (in)
                    for (const auto& col : in->cols) e.insert(col);
                for (const auto& img : images)
                    if (!e.insert(img)) {
                        c.pass = false;
                        c.value = "EZ images dependent modulo boundaries at (" +
                                  std::to_string(d) + ", " + std::to_string(w) + ")";
                    }
            }
        }
        if (c.pass) c.value = "ok";
    }

    struct Component {
        Scalar coeff;
        int wL, dL;
        HochschildChain kchain;
    };
    HochschildChain one_K(D.K), eps_K(D.K), one_eps_K(D.K);
    one_K.add({D.K->unit}, Scalar(1));
    eps_K.add({D.K->space.index_of("eps")}, Scalar(1));
    one_eps_K.add({D.K->unit, D.K->space.index_of("eps")}, Scalar(1));
    std::vector<Component> comps = {{Scalar(1), 1, 0, one_K},
                                    {Scalar(-1), 2, 0, eps_K},
                                    {Scalar(1), 1, 1, one_eps_K}};

    std::vector<HochschildChain> comp_chains;
    {
        CertCheck& c = cert.add("cycle",
                                "the three components of the claimed class are b-closed, of "
                                "degree 0 and weights 1, 3, 2, and each is a nonzero class");
        for (const auto& comp : comps) {
            const auto& reps = D.HL.at(comp.wL).representatives.at({comp.dL, comp.wL});
            HochschildChain rL = D.slicesL.at(comp.wL).coords_chain(reps.at(0), comp.dL);
            HochschildChain ez = pushforward_bimorphism(D.ez, rL, comp.kchain);
            HochschildChain part = comp.coeff * ez;
            comp_chains.push_back(part);
            if (part.is_zero() || part.degree() != 0) {
                c.pass = false;
                c.value = "component has the wrong degree";
                continue;
            }
            if (!hochschild_b(part).is_zero()) {
                c.pass = false;
                c.value = "component is not closed";
            }
            int w = part.weight();
            SparseVec coords = D.slicesT.at(w).chain_coords(part, 0);
            Echelon e;
            const LinearMap* in = D.slicesT.at(w).complex.diff(-1);
            if (in)
                for (const auto& col : in->cols) e.insert(col);
            if (e.reduce(coords).empty()) {
                c.pass = false;
                c.value = "component is a boundary";
            }
        }
        if (c.pass) {
            if (comp_chains[0].weight() != 1 || comp_chains[1].weight() != 3 ||
                comp_chains[2].weight() != 2) {
                c.pass = false;
                c.value = "unexpected component weights";
            } else {
                c.value = "weights 1, 3, 2; degrees 0";
            }
        }
    }
    if (!cert.pass()) return cert;

    {
        CertCheck& c = cert.add("skyscraper-reduction",
                                "setting eps to 0 reduces the class to the class of (1; xi)");
        const int nb = D.K->dim();
        auto reduce_eps = [&](const HochschildChain& ch) {
            HochschildChain out(D.L);
            for (const auto& [t, coef] : ch.terms) {
                Tuple lt;
                bool keep = true;
                for (int i : t) {
                    int a = i / nb, b = i % nb;
                    if (b != D.K->unit) {
                        keep = false;
                        break;
                    }
                    lt.push_back(a);
                }
                if (keep) out.add(lt, coef);
            }
            return out;
        };
        HochschildChain red = reduce_eps(comp_chains[0]) + reduce_eps(comp_chains[1]) +
                              reduce_eps(comp_chains[2]);
        const auto& r1 = D.HL.at(1).representatives.at({0, 1});
        SparseVec diff = D.slicesL.at(1).chain_coords(red, 0);
        vec_axpy(diff, r1.at(0), Scalar(-1));
        Echelon e;
        const LinearMap* in = D.slicesL.at(1).complex.diff(-1);
        if (in)
            for (const auto& col : in->cols) e.insert(col);
        c.pass = e.reduce(diff).empty();
        if (!c.pass) c.value = "reduction is not the class of (1; xi)";
    }

    {
        CertCheck& c = cert.add("id-tensor-B",
                                "(id (x) B) of the class is nonzero; in particular its component "
                                "on HH_0(Lambda_1) (x) HH_1(k[eps]) at weight 3 is nonzero",
                                "decompose in the EZ basis, apply B to the right factors, map "
                                "back");
        std::map<std::string, Scalar> image;
        bool ok = true;
        for (const auto& part : comp_chains) {
            int w = part.weight();
            struct Gen {
                int w1, d1, i1, w2, d2, i2;
            };
            std::vector<Gen> gens;
            std::vector<SparseVec> gen_vecs;
            for (int w1 = 0; w1 <= w; ++w1)
                for (const auto& [k1, reps1] : D.HL.at(w1).representatives)
                    for (const auto& [k2, reps2] : D.HK.at(w - w1).representatives) {
                        if (k1.first + k2.first != 0) continue;
                        for (size_t i1 = 0; i1 < reps1.size(); ++i1)
                            for (size_t i2 = 0; i2 < reps2.size(); ++i2) {
                                HochschildChain ez = pushforward_bimorphism(
                                    D.ez, D.slicesL.at(w1).coords_chain(reps1[i1], k1.first),
                                    D.slicesK.at(w - w1).coords_chain(reps2[i2], k2.first));
                                gens.push_back({w1, k1.first, static_cast<int>(i1), w - w1,
                                                k2.first, static_cast<int>(i2)});
                                gen_vecs.push_back(D.slicesT.at(w).chain_coords(ez, 0));
                            }
                    }
            auto coords = class_coordinates(D.slicesT.at(w), 0,
                                            D.slicesT.at(w).chain_coords(part, 0), gen_vecs);
            if (!coords) {
                ok = false;
                break;
            }
            for (const auto& [gi, alpha] : *coords) {
                const Gen& g = gens[gi];
                HochschildChain s = D.slicesK.at(g.w2).coords_chain(
                    D.HK.at(g.w2).representatives.at({g.d2, g.w2})[g.i2], g.d2);
                HochschildChain Bs = connes_B(s);
                if (Bs.is_zero()) continue;
                SparseVec bcoords = D.slicesK.at(g.w2).chain_coords(Bs, g.d2 - 1);
                auto reps_it = D.HK.at(g.w2).representatives.find({g.d2 - 1, g.w2});
                std::vector<SparseVec> kreps;
                if (reps_it != D.HK.at(g.w2).representatives.end()) kreps = reps_it->second;
                auto bclass = class_coordinates(D.slicesK.at(g.w2), g.d2 - 1, bcoords, kreps);
                if (!bclass) {
                    ok = false;
                    break;
                }
                Scalar sgn = parity_sign(g.d1 & 1);
                for (const auto& [kj, beta] : *bclass) {
                    std::ostringstream keyname;
                    keyname << "L(" << g.d1 << "," << g.w1 << ")#" << g.i1 << " (x) K("
                            << g.d2 - 1 << "," << g.w2 << ")#" << kj;
                    image[keyname.str()] += sgn * alpha * beta;
                }
            }
            if (!ok) break;
        }
        if (!ok) {
            c.pass = false;
            c.value = "class decomposition failed";
        } else {
            for (auto it = image.begin(); it != image.end();) {
                if (it->second.is_zero())
                    it = image.erase(it);
                else
                    ++it;
            }
            Scalar special(0);
            auto it = image.find("L(0,2)#0 (x) K(-1,1)#0");
            if (it != image.end()) special = it->second;
            c.pass = !image.empty() && !special.is_zero();
            std::ostringstream os;
            for (const auto& [k, v] : image) os << k << ": " << v.str() << "; ";
            c.value = os.str();
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------

std::vector<Certificate> run_all_certificates() {
    std::vector<Certificate> out;
    for (const char* key : {"lambda1", "dual_numbers", "y_cube", "truncated_poly(6)",
                            "free_C(12)", "tensor(lambda1,dual_numbers)"})
        out.push_back(certify_check_ainfty(key, 8));
    for (const char* key :
         {"lambda1", "dual_numbers", "tensor(lambda1,dual_numbers)", "truncated_poly(6)"})
        out.push_back(certify_hochschild(key, 6));
    out.push_back(certify_section4(4));
    out.push_back(certify_ext(12, 8, 12));
    out.push_back(certify_solver(6, 12, 8).cert);
    out.push_back(certify_ten_dim(8).cert);
    return out;
}

}  // namespace ainfty
