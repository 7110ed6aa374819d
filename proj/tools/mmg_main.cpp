// mmg - build and verify the biaffine mixed-graph families and the
// associated Moore-bound arithmetic from the command line.
//
// Subcommands: gen, verify, bounds, table, certify, orbits, export.
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 I/O.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmg/mmg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) mmg::fail("IO", "cannot open " + path + " for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) mmg::fail("IO", "read failure on " + path);
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) mmg::fail("IO", "cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) mmg::fail("IO", "write failure on " + path);
}

// Graph content goes to --out when given, else to stdout (summaries move to
// stderr so pipes stay clean).
void emit(const std::string& out_path, const std::string& content, std::ostream*& summary) {
    if (out_path.empty()) {
        std::cout << content;
        summary = &std::cerr;
    } else {
        write_file(out_path, content);
    }
}

struct FamilyOptions {
    std::string family;
    std::uint64_t q = 0;
    std::uint32_t t = 0;
    std::uint32_t d = 0;
    bool random_shifts = false;
    std::uint64_t seed = 0;
};

void add_family_options(CLI::App* cmd, FamilyOptions& opt, bool required) {
    cmd->add_option("--family", opt.family, "graph family: gqt | biaffine | kautz")
        ->check(CLI::IsMember({"gqt", "biaffine", "kautz"}))
        ->required(required);
    cmd->add_option("--q", opt.q, "field order (gqt, biaffine)");
    cmd->add_option("--t", opt.t, "shift-set size parameter (gqt)");
    cmd->add_option("--d", opt.d, "degree parameter (kautz)");
    cmd->add_flag("--random-shifts", opt.random_shifts,
                  "use random valid shift sets instead of the canonical ones (gqt)");
    cmd->add_option("--seed", opt.seed, "seed for --random-shifts");
}

struct BuiltGraph {
    mmg::MixedGraph graph;
    std::optional<mmg::gf::ShiftSets> shifts;
    std::string description;
};

BuiltGraph build_family(const FamilyOptions& opt) {
    BuiltGraph built;
    if (opt.family == "gqt") {
        if (opt.q == 0) mmg::fail("MissingParameter", "gqt needs --q");
        const auto F = mmg::gf::Field::make(opt.q);
        if (opt.random_shifts) {
            std::mt19937_64 rng(opt.seed);
            built.shifts = mmg::gf::random_shift_sets(F, opt.t, rng);
        } else {
            built.shifts = mmg::gf::shift_sets(F, opt.t);
        }
        built.graph = mmg::g_qt(F, *built.shifts);
        built.description = "gqt q=" + std::to_string(opt.q) + " t=" + std::to_string(opt.t);
    } else if (opt.family == "biaffine") {
        if (opt.q == 0) mmg::fail("MissingParameter", "biaffine needs --q");
        built.graph = mmg::biaffine(mmg::gf::Field::make(opt.q));
        built.description = "biaffine q=" + std::to_string(opt.q);
    } else if (opt.family == "kautz") {
        if (opt.d == 0) mmg::fail("MissingParameter", "kautz needs --d");
        built.graph = mmg::kautz_mixed(opt.d);
        built.description = "kautz d=" + std::to_string(opt.d);
    } else {
        mmg::fail("MissingParameter", "unknown family '" + opt.family + "'");
    }
    return built;
}

mmg::MixedGraph load_graph(const std::string& path) { return mmg::parse_mg1(read_file(path)); }

int run_gen(const FamilyOptions& opt, const std::string& format, const std::string& out_path) {
    const BuiltGraph built = build_family(opt);
    const mmg::MixedGraph& G = built.graph;

    std::ostream* summary = &std::cout;
    emit(out_path, format == "dot" ? mmg::to_dot(G) : mmg::to_mg1(G), summary);

    *summary << "family " << built.description << "\n";
    *summary << "order=" << G.order() << " edges=" << G.edge_count()
             << " arcs=" << G.arc_count() << "\n";
    if (const auto reg = G.mixed_regular())
        *summary << "r=" << reg->second << " z=" << reg->first << "\n";
    if (built.shifts) {
        const auto& s = *built.shifts;
        *summary << "M=" << mmg::gf::set_to_string(s.M) << " T1=" << mmg::gf::set_to_string(s.T1)
                 << " T2=" << mmg::gf::set_to_string(s.T2) << " S=" << mmg::gf::set_to_string(s.S)
                 << " -S=" << mmg::gf::set_to_string(s.negS) << "\n";
    }
    if (!out_path.empty()) *summary << "wrote " << out_path << " (" << format << ")\n";
    return kExitOk;
}

int run_verify(const std::string& in_path, std::optional<int> expect_diameter,
               std::optional<std::uint32_t> expect_z, std::optional<std::uint32_t> expect_r,
               std::optional<std::uint64_t> expect_order, std::optional<bool> expect_moore,
               unsigned threads) {
    const mmg::MixedGraph G = load_graph(in_path);
    const auto regular = G.mixed_regular();
    const auto diameter = G.diameter(threads);
    const auto moore = G.moore_check();

    std::cout << "order=" << G.order() << " edges=" << G.edge_count()
              << " arcs=" << G.arc_count() << "\n";
    if (regular)
        std::cout << "regular=yes z=" << regular->first << " r=" << regular->second << "\n";
    else
        std::cout << "regular=no\n";
    if (diameter)
        std::cout << "diameter=" << *diameter << "\n";
    else
        std::cout << "diameter=inf\n";
    std::cout << "edges-arcs-disjoint=" << (G.edges_arcs_disjoint() ? "yes" : "no") << "\n";
    std::cout << "adjacency-consistent=" << (G.adjacency_consistent() ? "yes" : "no") << "\n";
    std::cout << "mixed-moore=" << (moore.is_moore ? "yes" : "no");
    if (moore.regular) std::cout << " (bound=" << moore.bound << ")";
    std::cout << "\n";

    std::vector<std::string> failures;
    if (expect_order && *expect_order != G.order())
        failures.push_back("order: expected " + std::to_string(*expect_order) + ", got " +
                           std::to_string(G.order()));
    if (expect_diameter) {
        if (!diameter)
            failures.push_back("diameter: expected " + std::to_string(*expect_diameter) +
                               ", got inf");
        else if (*diameter != *expect_diameter)
            failures.push_back("diameter: expected " + std::to_string(*expect_diameter) +
                               ", got " + std::to_string(*diameter));
    }
    if (expect_z || expect_r) {
        if (!regular) {
            failures.push_back("degrees: graph is not mixed-regular");
        } else {
            if (expect_z && regular->first != *expect_z)
                failures.push_back("z: expected " + std::to_string(*expect_z) + ", got " +
                                   std::to_string(regular->first));
            if (expect_r && regular->second != *expect_r)
                failures.push_back("r: expected " + std::to_string(*expect_r) + ", got " +
                                   std::to_string(regular->second));
        }
    }
    if (expect_moore && *expect_moore != moore.is_moore)
        failures.push_back(std::string("mixed-moore: expected ") +
                           (*expect_moore ? "yes" : "no") + ", got " +
                           (moore.is_moore ? "yes" : "no"));
    if (!G.edges_arcs_disjoint()) failures.push_back("edges and arcs are not disjoint");
    if (!G.adjacency_consistent()) failures.push_back("adjacency indices are inconsistent");

    if (failures.empty()) {
        std::cout << "PASS\n";
        return kExitOk;
    }
    for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
    return kExitMismatch;
}

int run_bounds(long long z, long long r, bool csv) {
    const auto report = mmg::moore::best_upper_bound(z, r);
    if (csv) {
        std::cout << "z,r,moore,after_bosak,after_parity\n";
        std::cout << report.z << ',' << report.r << ',' << report.moore << ','
                  << report.after_bosak << ',' << report.after_parity << "\n";
        return kExitOk;
    }
    std::cout << report.summary() << "\n";
    for (const auto& step : report.steps) std::cout << "  " << step << "\n";
    return kExitOk;
}

int run_table(long long n_max, bool csv, const std::string& out_path) {
    const auto rows = mmg::moore::feasibility_table(n_max);
    std::ostringstream os;
    if (csv) {
        os << "n,d,z,r,status\n";
        for (const auto& row : rows)
            os << row.n << ',' << row.d << ',' << row.z << ',' << row.r << ',' << row.status
               << "\n";
    } else {
        os << "   n   d   z   r  status\n";
        for (const auto& row : rows) {
            char line[64];
            std::snprintf(line, sizeof line, "%4lld %3lld %3lld %3lld  ", row.n, row.d, row.z,
                          row.r);
            os << line << row.status << "\n";
        }
        os << rows.size() << " rows\n";
    }
    std::ostream* summary = &std::cout;
    emit(out_path, os.str(), summary);
    return kExitOk;
}

int run_certify(std::uint64_t q, const std::string& out_path) {
    const auto F = mmg::gf::Field::make(q);
    const auto certificate = mmg::transitivity_certificate(F);
    std::ostringstream os;
    for (const auto& entry : certificate) os << entry.target << ' ' << entry.map.tag << "\n";
    os << certificate.size() << "/" << 2 * q * q << " targets certified\n";
    std::ostream* summary = &std::cout;
    emit(out_path, os.str(), summary);
    return kExitOk;
}

int run_orbits(const std::string& in_path, const FamilyOptions& opt) {
    const mmg::MixedGraph G =
        in_path.empty() ? build_family(opt).graph : load_graph(in_path);
    const auto coloring = mmg::refine(G);
    const std::size_t cells = mmg::cell_count(coloring);
    std::cout << "order=" << G.order() << " cells=" << cells << "\n";
    std::vector<std::vector<std::uint32_t>> members(cells);
    for (std::uint32_t v = 0; v < G.order(); ++v) members[coloring[v]].push_back(v);
    for (std::size_t c = 0; c < cells; ++c) {
        std::cout << "cell " << c << " size=" << members[c].size() << ":";
        for (const std::uint32_t v : members[c]) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return kExitOk;
}

int run_export(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
    const mmg::MixedGraph G = load_graph(in_path);
    std::ostream* summary = &std::cout;
    emit(out_path, format == "dot" ? mmg::to_dot(G) : mmg::to_mg1(G), summary);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed Moore graph construction and verification toolkit"};
    app.require_subcommand(1);

    FamilyOptions gen_opt;
    std::string gen_format = "mg1", gen_out;
    auto* gen = app.add_subcommand("gen", "construct a graph and write it out");
    add_family_options(gen, gen_opt, true);
    gen->add_option("--format", gen_format, "output format: mg1 | dot")
        ->check(CLI::IsMember({"mg1", "dot"}));
    gen->add_option("--out,-o", gen_out, "output path (default: stdout)");

    std::string verify_in;
    std::optional<int> expect_diameter;
    std::optional<std::uint32_t> expect_z, expect_r;
    std::optional<std::uint64_t> expect_order;
    std::optional<bool> expect_moore;
    unsigned verify_threads = 1;
    auto* verify = app.add_subcommand("verify", "recompute metrics of an mg1 file");
    verify->add_option("--in,-i", verify_in, "mg1 input path")->required();
    verify->add_option("--expect-diameter", expect_diameter, "expected diameter");
    verify->add_option("--expect-z", expect_z, "expected directed degree");
    verify->add_option("--expect-r", expect_r, "expected undirected degree");
    verify->add_option("--expect-order", expect_order, "expected number of vertices");
    verify->add_option("--expect-moore", expect_moore, "expected mixed-Moore status (0/1)");
    verify->add_option("--threads", verify_threads, "BFS worker threads for the diameter");

    long long bounds_z = 0, bounds_r = 0;
    bool bounds_csv = false;
    auto* bounds = app.add_subcommand("bounds", "Moore bound with Bosak and parity steps");
    bounds->add_option("--z", bounds_z, "directed degree")->required();
    bounds->add_option("--r", bounds_r, "undirected degree")->required();
    bounds->add_flag("--csv", bounds_csv, "machine-readable output");

    long long table_max_n = 200;
    bool table_csv = false;
    std::string table_out;
    auto* table = app.add_subcommand("table", "feasible mixed Moore parameter sets");
    table->add_option("--max-n", table_max_n, "largest order to include");
    table->add_flag("--csv", table_csv, "emit n,d,z,r,status CSV");
    table->add_option("--out,-o", table_out, "output path (default: stdout)");

    std::uint64_t certify_q = 0;
    std::string certify_out;
    auto* certify = app.add_subcommand("certify", "vertex-transitivity certificate for G_q");
    certify->add_option("--q", certify_q, "odd prime power")->required();
    certify->add_option("--out,-o", certify_out, "output path (default: stdout)");

    std::string orbits_in;
    FamilyOptions orbits_opt;
    auto* orbits = app.add_subcommand("orbits", "color-refinement partition of a graph");
    orbits->add_option("--in,-i", orbits_in, "mg1 input path");
    add_family_options(orbits, orbits_opt, false);

    std::string export_in, export_format = "dot", export_out;
    auto* exp = app.add_subcommand("export", "convert an mg1 file");
    exp->add_option("--in,-i", export_in, "mg1 input path")->required();
    exp->add_option("--format", export_format, "output format: mg1 | dot")
        ->check(CLI::IsMember({"mg1", "dot"}));
    exp->add_option("--out,-o", export_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (gen->parsed()) return run_gen(gen_opt, gen_format, gen_out);
        if (verify->parsed())
            return run_verify(verify_in, expect_diameter, expect_z, expect_r, expect_order,
                              expect_moore, verify_threads);
        if (bounds->parsed()) return run_bounds(bounds_z, bounds_r, bounds_csv);
        if (table->parsed()) return run_table(table_max_n, table_csv, table_out);
        if (certify->parsed()) return run_certify(certify_q, certify_out);
        if (orbits->parsed()) {
            if (orbits_in.empty() && orbits_opt.family.empty())
                mmg::fail("MissingParameter", "orbits needs --in or --family");
            return run_orbits(orbits_in, orbits_opt);
        }
        if (exp->parsed()) return run_export(export_in, export_format, export_out);
    } catch (const mmg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "IO" ? kExitIo : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
