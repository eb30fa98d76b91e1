#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclecert/decorated.hpp"
#include "cyclecert/errors.hpp"
#include "cyclecert/generators.hpp"
#include "cyclecert/graph.hpp"
#include "cyclecert/invariants.hpp"
#include "cyclecert/json_io.hpp"
#include "cyclecert/pipeline.hpp"
#include "cyclecert/spectrum.hpp"
#include "cyclecert/surgery.hpp"

namespace cc = cyclecert;
using cc::Json;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitRejected = 2;
constexpr int kExitInputError = 3;

struct CommonOpts {
    std::string input = "-";
    std::string format = "text";
    std::string output;
    bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", o.input,
                        "edge-list file, or - for standard input");
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", o.output,
                    "write to this file instead of standard output");
}

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw cc::ParseError("cannot open input file: " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

cc::Graph load(const CommonOpts& o) { return cc::parse_edge_list(slurp(o.input)); }

void emit(const CommonOpts& o, const std::string& payload) {
    auto write = [&payload](std::ostream& out) {
        out << payload;
        if (payload.empty() || payload.back() != '\n') out << '\n';
    };
    if (o.output.empty()) {
        write(std::cout);
    } else {
        std::ofstream f(o.output);
        if (!f) throw cc::ParseError("cannot open output file: " + o.output);
        write(f);
    }
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
                ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw cc::ParseError("bad vertex id '" + tok + "' in list");
        }
    }
    if (out.empty()) throw cc::ParseError("empty vertex list");
    return out;
}

cc::PathWitness parse_path_arg(const cc::Graph& g, const std::string& s) {
    cc::PathWitness p(g, parse_id_list(s));
    if (auto rep = cc::verify_path(p); !rep.ok)
        throw cc::ParseError("--path is not a path in the graph: " +
                             rep.first_violation);
    return p;
}

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string spectrum_text(const cc::SpectrumCertificate& cert) {
    std::ostringstream ss;
    ss << "graph " << cert.graph_id << " n=" << cert.n << ": covered "
       << cert.covered.size() << ", missing " << cert.missing.size() << '\n';
    for (const auto& [len, entry] : cert.covered)
        ss << "  " << len << " via " << entry.mechanism << ": ["
           << join(entry.witness.vertices()) << "]\n";
    if (!cert.missing.empty()) ss << "  missing: " << join(cert.missing) << '\n';
    return ss.str();
}

std::string profile_text(const cc::GraphProfile& p, const std::string& digest) {
    std::ostringstream ss;
    ss << "n=" << p.n << " delta=" << p.delta << " kappa=" << p.kappa
       << " alpha=";
    if (p.alpha.exact)
        ss << p.alpha.lo;
    else
        ss << '[' << p.alpha.lo << ',' << p.alpha.hi << "] (budget exceeded)";
    ss << " digest=" << digest;
    return ss.str();
}

// Maps library failures onto the documented exit codes; with --format json
// the error itself becomes the single output document.
int report_error(const CommonOpts& o, const char* status, const std::string& msg,
                 int code) {
    if (o.json())
        std::cout << Json{{"status", status}, {"error", msg}}.dump(2) << '\n';
    else
        std::cerr << status << ": " << msg << '\n';
    return code;
}

int guarded(const CommonOpts& o, const std::function<int()>& body) {
    try {
        return body();
    } catch (const cc::ParseError& e) {
        return report_error(o, "input-error", e.what(), kExitInputError);
    } catch (const cc::SizeCapError& e) {
        return report_error(o, "input-error", e.what(), kExitInputError);
    } catch (const cc::PreconditionError& e) {
        return report_error(o, "rejected", e.what(), kExitRejected);
    } catch (const cc::Error& e) {
        return report_error(o, "failed", e.what(), kExitNegative);
    }
}

cc::GraphProfile exact_profile(const cc::Graph& g) {
    cc::GraphProfile p = cc::profile_graph(g);
    if (!p.alpha.exact)
        throw cc::PreconditionError(
            "independence number not computed exactly within budget");
    return p;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificate-producing cycle spectrum toolkit"};
    app.require_subcommand(1);
    int rc = kExitSuccess;

    // profile
    auto po = std::make_shared<CommonOpts>();
    auto* profile = app.add_subcommand(
        "profile", "minimum degree, connectivity and independence number");
    add_common(profile, *po);
    profile->callback([po, &rc] {
        rc = guarded(*po, [&] {
            cc::Graph g = load(*po);
            cc::GraphProfile p = cc::profile_graph(g);
            std::string digest = cc::graph_digest(g);
            if (po->json()) {
                Json j = cc::to_json(p);
                j["digest"] = digest;
                emit(*po, j.dump(2));
            } else {
                emit(*po, profile_text(p, digest));
            }
            return kExitSuccess;
        });
    });

    // spectrum
    auto so = std::make_shared<CommonOpts>();
    auto* spectrum = app.add_subcommand(
        "spectrum", "exact cycle spectrum by enumeration (n <= 16)");
    add_common(spectrum, *so);
    spectrum->callback([so, &rc] {
        rc = guarded(*so, [&] {
            cc::Graph g = load(*so);
            cc::SpectrumCertificate cert = cc::cycle_spectrum_bruteforce(g);
            emit(*so, so->json() ? cc::to_json(cert).dump(2) : spectrum_text(cert));
            return cert.missing.empty() ? kExitSuccess : kExitNegative;
        });
    });

    // certify
    auto co = std::make_shared<CommonOpts>();
    auto ceps = std::make_shared<double>(0.0);
    auto cseed = std::make_shared<std::uint64_t>(0);
    auto* certify = app.add_subcommand(
        "certify", "certify pancyclicity under kappa >= (1+epsilon) alpha");
    add_common(certify, *co);
    certify->add_option("--epsilon", *ceps, "slack parameter, > 0")->required();
    certify->add_option("--seed", *cseed, "random seed")->required();
    certify->callback([co, ceps, cseed, &rc] {
        rc = guarded(*co, [&] {
            cc::Graph g = load(*co);
            cc::PancyclicityResult res = cc::certify_pancyclic(g, *ceps, *cseed);
            if (co->json()) {
                emit(*co, cc::to_json(res).dump(2));
            } else {
                std::ostringstream ss;
                ss << spectrum_text(res.certificate);
                for (const auto& [len, note] : res.failure_notes)
                    ss << "  length " << len << ": " << note << '\n';
                emit(*co, ss.str());
            }
            return res.certificate.missing.empty() ? kExitSuccess : kExitNegative;
        });
    });

    // hamilton-triangles
    auto ho = std::make_shared<CommonOpts>();
    auto* hamilton = app.add_subcommand(
        "hamilton-triangles",
        "Hamilton cycle with a stacked-triangle prefix (kappa >= alpha)");
    add_common(hamilton, *ho);
    hamilton->callback([ho, &rc] {
        rc = guarded(*ho, [&] {
            cc::Graph g = load(*ho);
            cc::GraphProfile p = exact_profile(g);
            cc::TriangulatedCycle c = cc::hamilton_with_triangles(g, p.alpha.lo);
            if (ho->json()) {
                emit(*ho, cc::to_json(c).dump(2));
            } else {
                std::ostringstream ss;
                ss << "length=" << c.length() << " r=" << c.r() << " order=["
                   << join(c.order()) << ']';
                emit(*ho, ss.str());
            }
            return kExitSuccess;
        });
    });

    // shorten
    auto sho = std::make_shared<CommonOpts>();
    auto spath = std::make_shared<std::string>();
    auto smode = std::make_shared<std::string>("degree");
    auto* shorten = app.add_subcommand(
        "shorten", "shorten a path into the proven window");
    add_common(shorten, *sho);
    shorten->add_option("--path", *spath, "comma-separated vertex ids")->required();
    shorten->add_option("--mode", *smode, "degree or independence")
        ->check(CLI::IsMember({"degree", "independence"}))
        ->capture_default_str();
    shorten->callback([sho, spath, smode, &rc] {
        rc = guarded(*sho, [&] {
            cc::Graph g = load(*sho);
            cc::PathWitness p = parse_path_arg(g, *spath);
            cc::SurgeryResult res =
                *smode == "degree"
                    ? cc::shorten_by_degree(g, p)
                    : cc::shorten_by_independence(g, p, exact_profile(g).alpha.lo);
            if (sho->json()) {
                emit(*sho, cc::to_json(res).dump(2));
            } else {
                std::ostringstream ss;
                ss << cc::to_string(res.mechanism) << ": " << res.old_len << " -> "
                   << res.new_len << " edges (window " << res.window.first << ".."
                   << res.window.second << ") path=["
                   << join(res.new_path.vertices()) << ']';
                emit(*sho, ss.str());
            }
            return kExitSuccess;
        });
    });

    // augment
    auto ao = std::make_shared<CommonOpts>();
    auto apath = std::make_shared<std::string>();
    auto ar = std::make_shared<int>(1);
    auto* augment = app.add_subcommand(
        "augment", "lengthen a path by 1..r edges via a fan splice");
    add_common(augment, *ao);
    augment->add_option("--path", *apath, "comma-separated vertex ids")->required();
    augment->add_option("--r", *ar, "maximum growth")->required();
    augment->callback([ao, apath, ar, &rc] {
        rc = guarded(*ao, [&] {
            cc::Graph g = load(*ao);
            cc::PathWitness p = parse_path_arg(g, *apath);
            cc::GraphProfile prof = exact_profile(g);
            cc::SurgeryResult res =
                cc::augment_path(g, p, *ar, prof.kappa, prof.alpha.lo);
            if (ao->json()) {
                emit(*ao, cc::to_json(res).dump(2));
            } else {
                std::ostringstream ss;
                ss << cc::to_string(res.mechanism) << ": " << res.old_len << " -> "
                   << res.new_len << " edges path=["
                   << join(res.new_path.vertices()) << ']';
                emit(*ao, ss.str());
            }
            return kExitSuccess;
        });
    });

    // partition
    auto pto = std::make_shared<CommonOpts>();
    auto ptseed = std::make_shared<std::uint64_t>(0);
    auto pttrials = std::make_shared<int>(cc::kPartitionTrials);
    auto* partition = app.add_subcommand(
        "partition", "random half-split with apex-covered matching edges");
    add_common(partition, *pto);
    partition->add_option("--seed", *ptseed, "random seed")->required();
    partition->add_option("--trials", *pttrials, "resample count")
        ->capture_default_str();
    partition->callback([pto, ptseed, pttrials, &rc] {
        rc = guarded(*pto, [&] {
            cc::Graph g = load(*pto);
            cc::TrianglePartition part =
                cc::triangle_partition(g, *ptseed, *pttrials);
            if (auto rep = cc::verify_triangle_partition(g, part); !rep.ok)
                throw cc::InternalError("partition failed verification: " +
                                        rep.first_violation);
            if (pto->json()) {
                emit(*pto, cc::to_json(part).dump(2));
            } else {
                std::ostringstream ss;
                ss << "|X|=" << part.x_side.size() << " edges="
                   << part.edges.size() << " trial=" << part.winning_trial
                   << " X=[" << join(part.x_side) << ']';
                emit(*pto, ss.str());
            }
            return kExitSuccess;
        });
    });

    // even-cycle
    auto eo = std::make_shared<CommonOpts>();
    auto ehalf = std::make_shared<int>(0);
    auto* even = app.add_subcommand(
        "even-cycle", "find a cycle of length exactly 2l");
    add_common(even, *eo);
    even->add_option("--half-length", *ehalf, "l, the half length (>= 2)")
        ->required();
    even->callback([eo, ehalf, &rc] {
        rc = guarded(*eo, [&] {
            cc::Graph g = load(*eo);
            auto w = cc::find_even_cycle(g, *ehalf);
            if (!w) {
                if (eo->json())
                    emit(*eo, Json{{"found", false},
                                   {"length", 2 * *ehalf}}.dump(2));
                else
                    emit(*eo, "no cycle of length " +
                                  std::to_string(2 * *ehalf) + " found");
                return kExitNegative;
            }
            if (eo->json()) {
                Json j = cc::to_json(*w);
                j["found"] = true;
                emit(*eo, j.dump(2));
            } else {
                emit(*eo, "cycle of length " + std::to_string(w->length()) +
                              ": [" + join(w->vertices()) + ']');
            }
            return kExitSuccess;
        });
    });

    // gen
    auto go = std::make_shared<CommonOpts>();
    auto gspec = std::make_shared<std::string>();
    auto gseed = std::make_shared<std::uint64_t>(0);
    auto* gen = app.add_subcommand("gen", "generate a graph as an edge list");
    gen->add_option("spec", *gspec,
                    "one of complete:N, bipartite:A,B, cycle:N, path:N, "
                    "petersen, gnp:N,P")
        ->required();
    auto* gseed_opt = gen->add_option("--seed", *gseed, "random seed");
    add_common(gen, *go, false);
    gen->callback([go, gspec, gseed, gseed_opt, &rc] {
        rc = guarded(*go, [&] {
            if (gspec->rfind("gnp", 0) == 0 && gseed_opt->count() == 0)
                throw cc::ParseError("--seed is required for randomized specs");
            cc::Graph g = cc::make_from_spec(*gspec, *gseed);
            emit(*go, go->json() ? cc::to_json(g).dump(2) : cc::serialize(g));
            return kExitSuccess;
        });
    });

    // bench
    auto bo = std::make_shared<CommonOpts>();
    auto bfiles = std::make_shared<std::vector<std::string>>();
    auto beps = std::make_shared<double>(0.0);
    auto bseed = std::make_shared<std::uint64_t>(0);
    auto* bench = app.add_subcommand(
        "bench", "profile (and optionally certify) a corpus of edge lists");
    bench->add_option("inputs", *bfiles, "edge-list files")->required();
    auto* beps_opt = bench->add_option("--epsilon", *beps, "also run certify");
    auto* bseed_opt = bench->add_option("--seed", *bseed, "random seed");
    add_common(bench, *bo, false);
    bench->callback([bo, bfiles, beps, bseed, beps_opt, bseed_opt, &rc] {
        rc = guarded(*bo, [&] {
            if (beps_opt->count() > 0 && bseed_opt->count() == 0)
                throw cc::ParseError("--seed is required when certifying");
            Json rows = Json::array();
            std::ostringstream text;
            for (const auto& file : *bfiles) {
                auto t0 = std::chrono::steady_clock::now();
                cc::Graph g = cc::parse_edge_list(slurp(file));
                cc::GraphProfile p = cc::profile_graph(g);
                auto t1 = std::chrono::steady_clock::now();
                Json row{{"file", file},
                         {"digest", cc::graph_digest(g)},
                         {"n", p.n},
                         {"delta", p.delta},
                         {"kappa", p.kappa},
                         {"alpha_lo", p.alpha.lo},
                         {"alpha_hi", p.alpha.hi}};
                std::string timing;
                if (beps_opt->count() > 0 && p.alpha.exact &&
                    p.kappa >= (1.0 + *beps) * p.alpha.lo) {
                    cc::PancyclicityResult res =
                        cc::certify_pancyclic(g, *beps, *bseed);
                    auto t2 = std::chrono::steady_clock::now();
                    row["pancyclic"] = res.certificate.pancyclic();
                    row["missing"] = res.certificate.missing;
                    timing = " certify=" +
                             std::to_string(std::chrono::duration_cast<
                                                std::chrono::milliseconds>(t2 - t1)
                                                .count()) +
                             "ms";
                }
                rows.push_back(std::move(row));
                // Timings go to stderr so standard output stays reproducible.
                std::cerr << file << ": profile="
                          << std::chrono::duration_cast<std::chrono::milliseconds>(
                                 t1 - t0)
                                 .count()
                          << "ms" << timing << '\n';
                text << file << ": n=" << p.n << " kappa=" << p.kappa
                     << " alpha>=" << p.alpha.lo << '\n';
            }
            emit(*bo, bo->json() ? rows.dump(2) : text.str());
            return kExitSuccess;
        });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return rc;
}
