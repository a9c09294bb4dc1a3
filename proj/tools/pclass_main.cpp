/** Command-line entry point: build the bundled complexes, run structural
 *  checks, compute homology, and run the Pontryagin-class pipeline, all with
 *  reproducible seeds and exact arithmetic.
 */

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pclass/builders.hpp"
#include "pclass/errors.hpp"
#include "pclass/homology.hpp"
#include "pclass/io.hpp"
#include "pclass/pipeline.hpp"

using nlohmann::json;
using namespace pclass;

namespace {

/** Builtin name (including boundary_simplex:n) or facet-file path. */
SimplicialComplex load_input(const std::string& arg) {
    for (const std::string& name : builtin_names())
        if (arg == name) return build_builtin(arg);
    if (arg.rfind("boundary_simplex:", 0) == 0) return build_builtin(arg);
    return read_facet_file(arg);
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
    }
}

int cmd_build(const std::string& name, const std::string& out_path) {
    emit(write_facet_text(build_builtin(name)), out_path);
    return 0;
}

int cmd_check(const std::string& input) {
    SimplicialComplex cx = load_input(input);
    std::cout << "dimension: " << cx.dim() << "\n";
    std::cout << "f-vector:";
    for (std::int64_t f : cx.f_vector()) std::cout << " " << f;
    std::cout << "\n";
    std::cout << "euler characteristic: " << cx.euler_characteristic() << "\n";
    bool pm = cx.is_closed_pseudomanifold();
    std::cout << "closed pseudomanifold: " << (pm ? "yes" : "NO") << "\n";
    if (pm)
        std::cout << "orientable: " << (orient(cx) ? "yes" : "NO") << "\n";
    int max_nb = 0;
    while (max_nb + 1 <= cx.dim() + 1 && verify_neighbourliness(cx, max_nb + 1)) ++max_nb;
    std::cout << "neighbourly: " << max_nb << "\n";
    std::cout << "complementarity: " << (verify_complementarity(cx) ? "yes" : "no")
              << "\n";
    return 0;
}

int cmd_homology(const std::string& input, int dim) {
    SimplicialComplex cx = load_input(input);
    int lo = dim >= 0 ? dim : 0;
    int hi = dim >= 0 ? dim : cx.dim();
    for (int k = lo; k <= hi; ++k) {
        HomologyGroup h = homology(cx, k);
        std::cout << "H_" << k << ": rank " << h.betti;
        if (!h.torsion.empty()) {
            std::cout << ", torsion";
            for (const mpz_class& t : h.torsion) std::cout << " Z/" << t;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_p1(const std::string& input, unsigned jobs, std::uint64_t seed,
           const std::string& dump_dir, bool dump_decomposition,
           const std::string& out_path, bool quiet) {
    SimplicialComplex cx = load_input(input);
    std::optional<OrientedComplex> oriented = orient(cx);
    if (!oriented) throw ParseError("input complex is not orientable");

    PipelineOptions opt;
    opt.jobs = jobs;
    opt.seed = seed;
    opt.dump_dir = dump_dir;
    opt.dump_decomposition = dump_decomposition;
    std::mutex progress_mutex;
    if (!quiet) {
        opt.progress = [&](std::size_t done, std::size_t total) {
            std::lock_guard<std::mutex> lock(progress_mutex);
            if (done % 64 == 0 || done == total)
                std::cerr << "\r" << done << "/" << total << " links" << std::flush;
            if (done == total) std::cerr << "\n";
        };
    }

    auto started = std::chrono::steady_clock::now();
    RationalChain chain = pontryagin_cycle(*oriented, opt);
    const int k = cx.dim() - 4;
    bool is_cycle = verify_is_cycle(chain, cx, k);
    mpq_class coeff = class_coefficient(chain, cx);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                   started)
                         .count();

    json doc;
    doc["input_hash"] = hex64(oriented->fingerprint());
    doc["dimension"] = cx.dim();
    json jchain = json::array();
    for (const auto& [s, c] : chain.coefficients) {
        json simplex = json::array();
        for (Vertex v : s.vertices()) simplex.push_back(v);
        jchain.push_back(
            json::array({simplex, c.get_num().get_str(), c.get_den().get_str()}));
    }
    doc["chain"] = jchain;
    doc["is_cycle"] = is_cycle;
    doc["class_coefficient"] = coeff.get_str();
    doc["elapsed"] = elapsed;
    emit(doc.dump(2) + "\n", out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first rational Pontryagin class of combinatorial manifolds"};
    app.require_subcommand(1);

    std::string build_name, build_out;
    CLI::App* build = app.add_subcommand("build", "emit a bundled complex as facet text");
    build->add_option("name", build_name, "builtin name")->required();
    build->add_option("-o,--output", build_out, "output file (default stdout)");

    std::string check_input;
    CLI::App* check = app.add_subcommand("check", "structural report for a complex");
    check->add_option("input", check_input, "builtin name or facet file")->required();

    std::string hom_input;
    int hom_dim = -1;
    CLI::App* hom = app.add_subcommand("homology", "integral homology via Smith form");
    hom->add_option("input", hom_input, "builtin name or facet file")->required();
    hom->add_option("--dim", hom_dim, "single dimension (default: all)");

    std::string p1_input, p1_dump, p1_out;
    unsigned p1_jobs = 1;
    std::uint64_t p1_seed = 0;
    bool p1_dump_decomp = false, p1_quiet = false;
    CLI::App* p1 = app.add_subcommand("p1", "first rational Pontryagin class cycle");
    p1->add_option("input", p1_input, "builtin name or facet file")->required();
    p1->add_option("--jobs", p1_jobs, "worker threads (0 = all cores)");
    p1->add_option("--seed", p1_seed, "seed for the link reductions");
    p1->add_option("--dump-chains", p1_dump, "directory for per-simplex dumps");
    p1->add_flag("--dump-decomposition", p1_dump_decomp,
                 "include catalogue rows in dumps");
    p1->add_option("-o,--output", p1_out, "output file (default stdout)");
    p1->add_flag("--quiet", p1_quiet, "suppress progress output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(build_name, build_out);
        if (check->parsed()) return cmd_check(check_input);
        if (hom->parsed()) return cmd_homology(hom_input, hom_dim);
        if (p1->parsed())
            return cmd_p1(p1_input, p1_jobs, p1_seed, p1_dump, p1_dump_decomp, p1_out,
                          p1_quiet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
