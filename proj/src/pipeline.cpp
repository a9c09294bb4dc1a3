#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "pclass/errors.hpp"
#include "pclass/pipeline.hpp"

namespace pclass {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t fp) {
    std::uint64_t h = seed + 0x9e3779b97f4a7c15ULL + (fp << 6) + (fp >> 2);
    h ^= fp * 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
    return h;
}

std::string simplex_slug(const Simplex& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += '_';
        out += std::to_string(s[i]);
    }
    return out;
}

}  // namespace

mpq_class local_formula_value(const OrientedComplex& L, std::uint64_t seed,
                              const CycleConventions& conv, LinkDump* dump) {
    PCLASS_CHECK(L.complex.dim() == 3, "link evaluation needs a 3-sphere");
    ReduceOptions opt;
    opt.seed = mix_seed(seed, L.fingerprint());
    MoveChain xi = reduce_3sphere(L, opt);
    if (dump) dump->reduction_trace = xi.trace();

    std::set<Vertex> participants;
    for (const BistellarMove& m : xi.moves)
        for (Vertex v : m.participants()) participants.insert(v);

    mpq_class total = 0;
    for (Vertex v : participants) {
        MoveChain induced = induce_chain(xi, v);
        MoveChain eta = close_cycle(induced);
        if (dump) {
            Decomposition d = decompose(eta, conv);
            dump->loops.emplace_back(v, eta.trace());
            for (const auto& [part, mult] : d.parts)
                dump->parts.emplace_back(kind_name(part.kind), mult);
            total += d.value;
        } else {
            total += evaluate_cycle(eta, conv);
        }
    }
    return total;
}

PipelineError::PipelineError(std::vector<LinkFailure> failures)
    : std::runtime_error([&failures] {
          std::ostringstream os;
          os << failures.size() << " link evaluation(s) failed";
          if (!failures.empty())
              os << "; first: sigma " << failures.front().sigma.str() << ": "
                 << failures.front().message;
          return os.str();
      }()),
      failures_(std::move(failures)) {}

RationalChain pontryagin_cycle(const OrientedComplex& K, const PipelineOptions& options) {
    const int n = K.complex.dim();
    PCLASS_CHECK(n >= 4, "the manifold must have dimension at least 4");
    std::vector<Simplex> sigmas = K.complex.faces(n - 4);
    std::vector<mpq_class> values(sigmas.size());
    std::vector<std::optional<LinkFailure>> failures(sigmas.size());
    std::vector<LinkDump> dumps(options.dump_dir.empty() ? 0 : sigmas.size());

    std::atomic<std::size_t> next{0}, done{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= sigmas.size()) return;
            try {
                OrientedComplex link = induced_link_orientation(K, sigmas[i]);
                LinkDump* dp = dumps.empty() ? nullptr : &dumps[i];
                values[i] = local_formula_value(link, options.seed, options.conventions, dp);
            } catch (const std::exception& e) {
                failures[i] = LinkFailure{sigmas[i], e.what()};
            }
            std::size_t d = ++done;
            if (options.progress) options.progress(d, sigmas.size());
        }
    };

    unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = static_cast<unsigned>(
        std::min<std::size_t>(jobs, std::max<std::size_t>(sigmas.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<LinkFailure> bad;
    for (auto& f : failures)
        if (f) bad.push_back(std::move(*f));
    if (!bad.empty()) throw PipelineError(std::move(bad));

    if (!options.dump_dir.empty()) {
        std::filesystem::create_directories(options.dump_dir);
        for (std::size_t i = 0; i < sigmas.size(); ++i) {
            std::ofstream out(std::filesystem::path(options.dump_dir) /
                              ("sigma_" + simplex_slug(sigmas[i]) + ".txt"));
            out << "sigma " << sigmas[i].str() << "\nvalue " << values[i]
                << "\n\nreduction:\n"
                << dumps[i].reduction_trace << "\n";
            for (const auto& [v, trace] : dumps[i].loops)
                out << "\nloop of vertex " << v << ":\n" << trace << "\n";
            if (options.dump_decomposition && !dumps[i].parts.empty()) {
                out << "\ndecomposition rows:\n";
                for (const auto& [row, mult] : dumps[i].parts)
                    out << "  " << mult << " x " << row << "\n";
            }
        }
    }

    RationalChain out;
    for (std::size_t i = 0; i < sigmas.size(); ++i) out.add(sigmas[i], values[i]);
    return out;
}

bool verify_is_cycle(const RationalChain& ch, const SimplicialComplex& K, int k) {
    for (const auto& [s, c] : ch.coefficients) {
        PCLASS_CHECK(s.dim() == k, "chain simplex of the wrong dimension");
        PCLASS_CHECK(K.has_face(s), "chain simplex is not a face of the complex");
    }
    if (k == 0) return true;
    return chain_boundary(ch, k).is_zero();
}

mpq_class class_coefficient(const RationalChain& ch, const SimplicialComplex& K) {
    const int k = K.dim() - 4;
    PCLASS_CHECK(k >= 0, "the complex must have dimension at least 4");
    if (ch.is_zero()) return 0;  // trivial class regardless of the group's rank
    std::vector<mpq_class> coords = express_in_basis(ch, K, k);
    if (coords.size() != 1) {
        std::ostringstream os;
        os << "middle homology has free rank " << coords.size() << ", expected 1";
        throw RankMismatch(os.str());
    }
    return coords[0];
}

}  // namespace pclass
