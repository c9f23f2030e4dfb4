#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lcf/analysis.hpp"
#include "lcf/coloring.hpp"
#include "lcf/constructions.hpp"
#include "lcf/h3.hpp"
#include "lcf/verification.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_witness = 2;
constexpr int exit_usage = 64;
constexpr int exit_file = 66;

int usage() {
    std::cerr << "usage: lcf <command> [args]\n"
              << "  check FILE                 linear-cycle / K_5^3 / thickness report\n"
              << "  color FILE                 2-coloring or refutation witness (exit 2)\n"
              << "  alpha FILE                 independence number and a witness set\n"
              << "  degrees FILE               degrees, strong degrees, degree-bound verdict\n"
              << "  gen complete N | extremal N | nine | star N | k53union K | random N SEED M\n"
              << "  sweep N [--random COUNT] [--seed S]\n"
              << "FILE may be '-' for standard input.\n";
    return exit_usage;
}

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream f(path);
    if (!f) return false;
    std::ostringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return true;
}

int load(const std::string& path, lcf::Hypergraph& h) {
    std::string text;
    if (!read_input(path, text)) {
        std::cerr << "lcf: cannot read '" << path << "'\n";
        return exit_file;
    }
    try {
        lcf::H3Document doc = lcf::parse_h3(text);
        for (const std::string& w : doc.warnings) std::cerr << "lcf: warning: " << w << "\n";
        h = doc.to_hypergraph();
    } catch (const std::exception& e) {
        std::cerr << "lcf: " << path << ": " << e.what() << "\n";
        return exit_file;
    }
    return exit_ok;
}

void print_cycle_witness(const lcf::LinearCycleWitness& w) {
    std::cout << "w cycle\n";
    for (size_t i = 0; i < w.edges.size(); ++i) {
        std::cout << "v " << w.vertices[i] << "\n";
        std::cout << "e " << w.edges[i][0] << " " << w.edges[i][1] << " " << w.edges[i][2] << "\n";
    }
}

void print_k53_witness(const lcf::K53Witness& w) {
    std::cout << "w k53\n";
    for (int v : w.vertices) std::cout << "v " << v << "\n";
}

int cmd_check(const std::string& path) {
    lcf::Hypergraph h;
    if (int rc = load(path, h)) return rc;
    std::cout << "n " << h.vertex_count() << " m " << h.edge_count() << "\n";
    auto cyc = lcf::find_linear_cycle(h);
    std::cout << "linear-cycle-free " << (cyc ? "no" : "yes") << "\n";
    if (cyc) print_cycle_witness(*cyc);
    auto k5 = lcf::find_k53(h);
    std::cout << "k53-free " << (k5 ? "no" : "yes") << "\n";
    if (k5) print_k53_witness(*k5);
    int thick = 0;
    for (const lcf::Edge& e : h.edges()) thick += h.is_thick_edge(e) ? 1 : 0;
    std::cout << "thick-edges " << thick << "\n";
    return exit_ok;
}

int cmd_color(const std::string& path) {
    lcf::Hypergraph h;
    if (int rc = load(path, h)) return rc;
    lcf::ColorResult res = lcf::color_hypergraph(h);
    if (const auto* g = std::get_if<lcf::Coloring>(&res)) {
        for (int v = 0; v < h.vertex_count(); ++v)
            std::cout << "c " << v << " " << g->color[v] << "\n";
        return exit_ok;
    }
    if (const auto* cyc = std::get_if<lcf::LinearCycleWitness>(&res)) print_cycle_witness(*cyc);
    if (const auto* k5 = std::get_if<lcf::K53Witness>(&res)) print_k53_witness(*k5);
    return exit_witness;
}

int cmd_alpha(const std::string& path) {
    lcf::Hypergraph h;
    if (int rc = load(path, h)) return rc;
    lcf::IndependenceResult r = lcf::independence_number(h);
    std::cout << "alpha " << r.alpha << "\n";
    std::cout << "set";
    for (int v : r.witness) std::cout << " " << v;
    std::cout << "\n";
    return exit_ok;
}

int cmd_degrees(const std::string& path) {
    lcf::Hypergraph h;
    if (int rc = load(path, h)) return rc;
    for (int v = 0; v < h.vertex_count(); ++v)
        std::cout << "d " << v << " " << h.degree(v) << " " << lcf::strong_degree(h, v) << "\n";
    if (h.vertex_count() == 0) {
        std::cout << "theorem4 not applicable (n=0)\n";
        return exit_ok;
    }
    auto [v, d] = lcf::min_degree_vertex(h);
    std::cout << "min-degree " << v << " " << d << "\n";
    if (h.vertex_count() < 10) {
        std::cout << "theorem4 not applicable (n=" << h.vertex_count() << ")\n";
    } else if (lcf::find_linear_cycle(h)) {
        std::cout << "theorem4 not applicable (linear cycle present)\n";
    } else {
        lcf::DegreeTheoremReport rep = lcf::check_degree_theorem(h);
        if (rep.holds)
            std::cout << "theorem4 holds vertex=" << rep.witness_vertex
                      << " degree=" << rep.witness_degree << "\n";
        else
            std::cout << "theorem4 VIOLATED min-degree=" << d << "\n";
    }
    return exit_ok;
}

int cmd_gen(const std::vector<std::string>& args) {
    auto arg_int = [&](size_t i, int& out) {
        if (i >= args.size()) return false;
        try {
            out = std::stoi(args[i]);
        } catch (...) {
            return false;
        }
        return true;
    };
    try {
        if (args.empty()) return usage();
        const std::string& kind = args[0];
        lcf::Hypergraph h;
        if (kind == "complete") {
            int n;
            if (!arg_int(1, n) || args.size() != 2) return usage();
            h = lcf::complete_k3(n);
        } else if (kind == "extremal") {
            int n;
            if (!arg_int(1, n) || args.size() != 2) return usage();
            h = lcf::extremal_Hn(n);
        } else if (kind == "nine") {
            if (args.size() != 1) return usage();
            h = lcf::nine_vertex_example();
        } else if (kind == "star") {
            int n;
            if (!arg_int(1, n) || args.size() != 2) return usage();
            h = lcf::star_construction(n);
        } else if (kind == "k53union") {
            int k;
            if (!arg_int(1, k) || args.size() != 2) return usage();
            h = lcf::disjoint_k53_union(k);
        } else if (kind == "random") {
            int n, target;
            long seed;
            if (args.size() != 4 || !arg_int(1, n) || !arg_int(3, target)) return usage();
            try {
                seed = std::stol(args[2]);
            } catch (...) {
                return usage();
            }
            h = lcf::random_lcf(n, static_cast<std::uint64_t>(seed), target);
        } else {
            return usage();
        }
        std::cout << lcf::serialize_h3(h);
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lcf: " << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_sweep(const std::vector<std::string>& args) {
    if (args.empty()) return usage();
    lcf::SweepOptions opt;
    try {
        opt.n = std::stoi(args[0]);
    } catch (...) {
        return usage();
    }
    for (size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--random" && i + 1 < args.size()) {
            opt.random_mode = true;
            try {
                opt.count = std::stol(args[++i]);
            } catch (...) {
                return usage();
            }
        } else if (args[i] == "--seed" && i + 1 < args.size()) {
            try {
                opt.seed = static_cast<std::uint64_t>(std::stoll(args[++i]));
            } catch (...) {
                return usage();
            }
        } else {
            return usage();
        }
    }
    try {
        lcf::SweepReport rep = lcf::run_sweep(opt);
        std::cout << rep.to_text();
        return rep.clean() ? exit_ok : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lcf: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) return usage();
    const std::string& cmd = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (cmd == "check" && rest.size() == 1) return cmd_check(rest[0]);
        if (cmd == "color" && rest.size() == 1) return cmd_color(rest[0]);
        if (cmd == "alpha" && rest.size() == 1) return cmd_alpha(rest[0]);
        if (cmd == "degrees" && rest.size() == 1) return cmd_degrees(rest[0]);
        if (cmd == "gen") return cmd_gen(rest);
        if (cmd == "sweep") return cmd_sweep(rest);
    } catch (const std::exception& e) {
        std::cerr << "lcf: " << e.what() << "\n";
        return 70;
    }
    return usage();
}
