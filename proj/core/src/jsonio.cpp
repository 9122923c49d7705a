#include "ainfty/jsonio.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace ainfty {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kAlgebraSchema = "ainfty.algebra/1";
constexpr const char* kChainSchema = "ainfty.chain/1";
constexpr const char* kCertSchema = "ainfty.certificate/1";
constexpr const char* kPrefixSchema = "ainfty.morphism-prefix/1";

json coeff_vec(const SparseVec& v, const BigradedSpace& sp) {
    json out = json::array();
    for (const auto& [i, c] : v) out.push_back({{"basis", sp.name(i)}, {"coeff", c.str()}});
    return out;
}

SparseVec parse_vec(const json& j, const BigradedSpace& sp) {
    SparseVec out;
    for (const auto& term : j) {
        int idx = sp.index_of(term.at("basis").get<std::string>());
        if (idx < 0) throw JsonError("unknown basis name " + term.at("basis").get<std::string>());
        auto c = Scalar::parse(term.at("coeff").get<std::string>());
        if (!c) throw JsonError("malformed coefficient " + term.at("coeff").get<std::string>());
        vec_add_term(out, idx, *c);
    }
    return out;
}

}  // namespace

std::string algebra_to_json(const AInftyAlgebra& A) {
    json j;
    j["schema"] = kAlgebraSchema;
    j["name"] = A.name;
    j["basis"] = json::array();
    for (const auto& b : A.space.basis)
        j["basis"].push_back({{"name", b.name}, {"degree", b.degree}, {"weight", b.weight}});
    if (A.has_unit())
        j["unit"] = A.space.name(A.unit);
    else
        j["unit"] = nullptr;
    j["minimal"] = A.minimal;
    if (A.weight_truncation) j["weight_truncation"] = *A.weight_truncation;
    if (A.tables_complete_to != std::numeric_limits<int>::max())
        j["tables_complete_to"] = A.tables_complete_to;
    j["operations"] = json::array();
    for (int n = 1; n < static_cast<int>(A.mu.size()); ++n) {
        if (A.mu[n].empty()) continue;
        json ops;
        ops["arity"] = n;
        ops["entries"] = json::array();
        for (const auto& [k, v] : A.mu[n]) {
            json inputs = json::array();
            for (int i : k) inputs.push_back(A.space.name(i));
            ops["entries"].push_back({{"inputs", inputs}, {"output", coeff_vec(v, A.space)}});
        }
        j["operations"].push_back(ops);
    }
    return j.dump(2) + "\n";
}

AInftyAlgebra algebra_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw JsonError(std::string("invalid JSON: ") + e.what());
    }
    if (j.value("schema", "") != kAlgebraSchema) throw JsonError("unexpected schema");
    AInftyAlgebra A;
    A.name = j.value("name", "");
    std::vector<BasisElement> basis;
    for (const auto& b : j.at("basis"))
        basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>(),
                         b.at("weight").get<int>()});
    A.space = BigradedSpace(basis);
    if (!j.at("unit").is_null()) {
        A.unit = A.space.index_of(j.at("unit").get<std::string>());
        if (A.unit < 0) throw JsonError("unit name not in basis");
    }
    A.minimal = j.value("minimal", false);
    if (j.contains("weight_truncation")) A.weight_truncation = j.at("weight_truncation").get<int>();
    if (j.contains("tables_complete_to"))
        A.tables_complete_to = j.at("tables_complete_to").get<int>();
    for (const auto& ops : j.at("operations")) {
        int n = ops.at("arity").get<int>();
        if (n < 1) throw JsonError("bad arity");
        for (const auto& e : ops.at("entries")) {
            Tuple key;
            for (const auto& nm : e.at("inputs")) {
                int idx = A.space.index_of(nm.get<std::string>());
                if (idx < 0) throw JsonError("unknown input name " + nm.get<std::string>());
                key.push_back(idx);
            }
            try {
                A.set_mu(n, std::move(key), parse_vec(e.at("output"), A.space));
            } catch (const std::invalid_argument& err) {
                throw JsonError(err.what());
            }
        }
    }
    return A;
}

std::string chain_to_json(const HochschildChain& c) {
    json j;
    j["schema"] = kChainSchema;
    j["algebra"] = c.A->name;
    j["terms"] = json::array();
    for (const auto& [t, coef] : c.terms) {
        json tuple = json::array();
        for (int i : t) tuple.push_back(c.A->space.name(i));
        j["terms"].push_back({{"coeff", coef.str()}, {"tuple", tuple}});
    }
    return j.dump(2) + "\n";
}

HochschildChain chain_from_json(AlgebraPtr A, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw JsonError(std::string("invalid JSON: ") + e.what());
    }
    if (j.value("schema", "") != kChainSchema) throw JsonError("unexpected schema");
    HochschildChain c(A);
    for (const auto& term : j.at("terms")) {
        auto coef = Scalar::parse(term.at("coeff").get<std::string>());
        if (!coef) throw JsonError("malformed coefficient " + term.at("coeff").get<std::string>());
        Tuple t;
        for (const auto& nm : term.at("tuple")) {
            int idx = A->space.index_of(nm.get<std::string>());
            if (idx < 0) throw JsonError("unknown basis name " + nm.get<std::string>());
            t.push_back(idx);
        }
        c.add(std::move(t), *coef);
    }
    return c;
}

namespace {

json certificate_json(const Certificate& cert) {
    json j;
    j["schema"] = kCertSchema;
    j["pipeline"] = cert.pipeline;
    j["parameters"] = json::array();
    for (const auto& [k, v] : cert.parameters) j["parameters"].push_back({{k, v}});
    j["conventions"] = cert.conventions;
    j["checks"] = json::array();
    for (const auto& c : cert.checks)
        j["checks"].push_back({{"name", c.name},
                               {"statement", c.statement},
                               {"bound", c.bound},
                               {"verdict", c.pass ? "PASS" : "FAIL"},
                               {"value", c.value}});
    j["verdict"] = cert.verdict();
    return j;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    return certificate_json(cert).dump(2) + "\n";
}

std::string certificates_to_json(const std::vector<Certificate>& certs) {
    json j = json::array();
    for (const auto& c : certs) j.push_back(certificate_json(c));
    json top;
    top["schema"] = "ainfty.certificates/1";
    bool all = true;
    for (const auto& c : certs) all = all && c.pass();
    top["verdict"] = all ? "PASS" : "FAIL";
    top["certificates"] = j;
    return top.dump(2) + "\n";
}

std::string prefix_to_json(const MorphismPrefix& P) {
    json j;
    j["schema"] = kPrefixSchema;
    j["source"] = P.source->name;
    j["target"] = P.target.alg->name;
    j["arity"] = P.arity;
    j["weight_bound"] = P.weight_bound;
    j["length_bound"] = P.length_bound;
    j["certified_weight_caps"] = json::array();
    for (const auto& [r, cap] : P.g.certified_weight_caps)
        j["certified_weight_caps"].push_back({{"arity", r}, {"weight_cap", cap}});
    j["components"] = json::array();
    for (int n = 1; n < static_cast<int>(P.g.f.size()); ++n) {
        if (P.g.f[n].empty()) continue;
        json comp;
        comp["arity"] = n;
        comp["entries"] = json::array();
        for (const auto& [k, v] : P.g.f[n]) {
            json inputs = json::array();
            for (int i : k) inputs.push_back(P.source->space.name(i));
            comp["entries"].push_back(
                {{"inputs", inputs}, {"value", coeff_vec(v, P.target.alg->space)}});
        }
        j["components"].push_back(comp);
    }
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os << content;
        os.flush();
        if (!os) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

}  // namespace ainfty
