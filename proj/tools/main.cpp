// Command-line front end: exact certification pipelines with JSON output.
// Exit status is 0 exactly when every requested check passes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ainfty/catalog.hpp"
#include "ainfty/certify.hpp"
#include "ainfty/jsonio.hpp"

using namespace ainfty;

namespace {

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    if (const char* wd = std::getenv("AINFTY_WORK_DIR"))
        return std::string(wd) + "/" + path;
    return path;
}

void print_cert(const Certificate& cert) {
    for (const auto& c : cert.checks)
        std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] " << cert.pipeline << "/" << c.name
                  << ": " << (c.pass ? c.statement : c.value) << "\n";
    std::cout << cert.pipeline << ": " << cert.verdict() << "\n";
}

int finish(const Certificate& cert, const std::string& out) {
    print_cert(cert);
    if (!out.empty()) write_file_atomic(resolve_out(out), certificate_to_json(cert));
    return cert.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact A-infinity / Hochschild certification kernel"};
    app.require_subcommand(1);

    std::string algebra = "lambda1";
    std::string out;
    int arity = 6;
    int max_weight = 6;
    int weight_bound = 12;
    int length_bound = 8;
    int target_arity = 6;
    int resolution_N = 12;
    int depth = 8;
    std::string out_dir = ".";

    std::string input;
    auto* check = app.add_subcommand("check-ainfty", "strict unitality and A-infinity relations");
    check->add_option("--algebra", algebra, "catalog key");
    check->add_option("--input", input, "algebra JSON document instead of a catalog key");
    check->add_option("--arity", arity, "relation arity bound");
    check->add_option("--out", out, "certificate path");

    auto* hoch = app.add_subcommand("hochschild", "mixed-complex identities and slice homology");
    hoch->add_option("--algebra", algebra, "catalog key")->required();
    hoch->add_option("--max-weight", max_weight, "weight bound");
    hoch->add_option("--out", out, "certificate path");

    auto* ext = app.add_subcommand("ext", "resolutions, Ext identities and bigraded HH");
    ext->add_option("--resolution", resolution_N, "truncation of the resolution P");
    ext->add_option("--depth", depth, "periodic resolution depth");
    ext->add_option("--weight-bound", weight_bound, "weight bound for C");
    ext->add_option("--out", out, "certificate path");

    std::string prefix_out;
    auto* solve = app.add_subcommand("solve-morphism",
                                     "construct the equivariant morphism by obstruction theory");
    solve->add_option("--target-arity", target_arity, "components to construct");
    solve->add_option("--weight-bound", weight_bound, "cochain weight bound");
    solve->add_option("--length-bound", length_bound, "cochain length bound");
    solve->add_option("--out", prefix_out, "morphism prefix JSON path");
    solve->add_option("--cert", out, "certificate path");

    auto* ten = app.add_subcommand("certify-10dim",
                                   "build and certify the 10-dimensional minimal algebra");
    ten->add_option("--arity", arity, "relation arity bound");
    ten->add_option("--out", out, "certificate path");

    auto* sec4 = app.add_subcommand("verify-section4",
                                    "the Kunneth / Connes-differential nonvanishing pipeline");
    sec4->add_option("--max-weight", max_weight, "weight bound");
    sec4->add_option("--out", out, "certificate path");

    auto* runall = app.add_subcommand("run-all", "every pipeline at its acceptance bounds");
    runall->add_option("--out-dir", out_dir, "directory for certificates.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            if (!input.empty()) {
                std::ifstream is(input, std::ios::binary);
                if (!is) throw std::runtime_error("cannot open " + input);
                std::string text((std::istreambuf_iterator<char>(is)),
                                 std::istreambuf_iterator<char>());
                AInftyAlgebra A = algebra_from_json(text);
                Certificate cert;
                cert.pipeline = "check-ainfty";
                cert.parameters = {{"input", input}, {"arity", std::to_string(arity)}};
                CheckReport rep = check_structure(A, arity);
                CertCheck& c = cert.add("relations",
                                        "strict unitality and A-infinity relations hold "
                                        "exhaustively",
                                        rep.scope);
                c.pass = rep.pass;
                c.value = rep.pass ? "ok; " + std::to_string(rep.relations_checked) + " relations"
                                   : rep.first_failure;
                return finish(cert, out);
            }
            return finish(certify_check_ainfty(algebra, arity), out);
        }
        if (hoch->parsed()) return finish(certify_hochschild(algebra, max_weight), out);
        if (ext->parsed()) return finish(certify_ext(resolution_N, depth, weight_bound), out);
        if (solve->parsed()) {
            SolverArtifacts art = certify_solver(target_arity, weight_bound, length_bound);
            if (art.prefix && !prefix_out.empty())
                write_file_atomic(resolve_out(prefix_out), prefix_to_json(*art.prefix));
            return finish(art.cert, out);
        }
        if (ten->parsed()) {
            arity = ten->count("--arity") ? arity : 8;
            return finish(certify_ten_dim(arity).cert, out);
        }
        if (sec4->parsed()) {
            max_weight = sec4->count("--max-weight") ? max_weight : 4;
            return finish(certify_section4(max_weight), out);
        }
        if (runall->parsed()) {
            std::vector<Certificate> certs = run_all_certificates();
            bool all = true;
            for (const auto& c : certs) {
                print_cert(c);
                all = all && c.pass();
            }
            write_file_atomic(resolve_out(out_dir + "/certificates.json"),
                              certificates_to_json(certs));
            std::cout << "run-all: " << (all ? "PASS" : "FAIL") << "\n";
            return all ? 0 : 1;
        }
    } catch (const JsonError& e) {
        std::cerr << "{\"error\": \"parse\", \"detail\": \"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"runtime\", \"detail\": \"" << e.what() << "\"}\n";
        return 3;
    }
    return 1;
}
