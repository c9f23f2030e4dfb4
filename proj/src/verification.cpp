#include "lcf/verification.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lcf/constructions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcf {

// --- oracles -----------------------------------------------------------------

namespace {

// Cyclic arrangement search over a fixed edge subset: position 0 stays
// fixed, the rest are permuted with incremental pruning.
struct CycleArranger {
    const std::vector<Edge>& sel;
    std::vector<int> order;
    std::vector<char> used;

    bool placeable(int pos, int cand) const {
        const Edge& e = sel[cand];
        int k = static_cast<int>(sel.size());
        if (edge_intersection_size(e, sel[order[pos - 1]]) != 1) return false;
        for (int q = pos == k - 1 ? 1 : 0; q <= pos - 2; ++q)
            if (edge_intersection_size(e, sel[order[q]]) != 0) return false;
        if (pos == k - 1 && edge_intersection_size(e, sel[order[0]]) != 1) return false;
        return true;
    }

    std::optional<std::vector<int>> arrange(int pos) {
        int k = static_cast<int>(sel.size());
        if (pos == k) {
            // the arrangement is consistent; require distinct link vertices
            std::vector<int> verts(k);
            for (int i = 0; i < k; ++i)
                verts[i] = edge_shared_vertex(sel[order[(i + k - 1) % k]], sel[order[i]]);
            std::sort(verts.begin(), verts.end());
            if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
                return std::nullopt;
            return order;
        }
        for (int cand = 1; cand < k; ++cand) {
            if (used[cand] || !placeable(pos, cand)) continue;
            used[cand] = 1;
            order[pos] = cand;
            auto got = arrange(pos + 1);
            if (got) return got;
            used[cand] = 0;
        }
        return std::nullopt;
    }
};

template <typename Fn>
bool for_each_subset(int m, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::optional<LinearCycleWitness> brute_linear_cycle(const Hypergraph& h) {
    if (h.edge_count() > 25)
        throw std::invalid_argument("brute_linear_cycle: size guard (|E| <= 25)");
    int m = h.edge_count();
    int maxk = std::min(m, h.vertex_count() / 2);
    std::vector<Edge> sel;
    CycleArranger ar{sel, {}, {}};
    for (int k = 3; k <= maxk; ++k) {
        sel.resize(k);
        ar.order.assign(k, 0);
        std::optional<LinearCycleWitness> found;
        for_each_subset(m, k, [&](const std::vector<int>& idx) {
            for (int i = 0; i < k; ++i) sel[i] = h.edges()[idx[i]];
            ar.order[0] = 0;
            ar.used.assign(k, 0);
            auto order = ar.arrange(1);
            if (!order) return false;
            LinearCycleWitness w;
            for (int i : *order) w.edges.push_back(sel[i]);
            w.vertices.resize(k);
            for (int i = 0; i < k; ++i)
                w.vertices[i] = edge_shared_vertex(w.edges[(i + k - 1) % k], w.edges[i]);
            found = std::move(w);
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<Coloring> brute_k_colorable(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("brute_k_colorable: k >= 1 required");
    long total = 1;
    for (int i = 0; i < h.vertex_count(); ++i) {
        total *= k;
        if (total > (1L << 24))
            throw std::invalid_argument("brute_k_colorable: size guard (k^n <= 2^24)");
    }
    std::vector<int> color(h.vertex_count(), 1);
    for (long m = 0; m < total; ++m) {
        long rest = m;
        for (int v = 0; v < h.vertex_count(); ++v) {
            color[v] = 1 + static_cast<int>(rest % k);
            rest /= k;
        }
        bool proper = true;
        for (const Edge& e : h.edges())
            if (color[e[0]] == color[e[1]] && color[e[1]] == color[e[2]]) {
                proper = false;
                break;
            }
        if (proper) {
            Coloring g(h.vertex_count());
            g.color = color;
            return g;
        }
    }
    return std::nullopt;
}

IndependenceResult brute_alpha(const Hypergraph& h) {
    int n = h.vertex_count();
    if (n > 20) throw std::invalid_argument("brute_alpha: size guard (n <= 20)");
    std::vector<unsigned> edge_masks;
    for (const Edge& e : h.edges())
        edge_masks.push_back((1u << e[0]) | (1u << e[1]) | (1u << e[2]));
    IndependenceResult best;
    best.alpha = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size <= best.alpha) continue;
        bool independent = true;
        for (unsigned em : edge_masks)
            if ((em & mask) == em) {
                independent = false;
                break;
            }
        if (!independent) continue;
        best.alpha = size;
        best.witness.clear();
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) best.witness.push_back(v);
    }
    return best;
}

std::optional<K53Witness> brute_k53(const Hypergraph& h) {
    int n = h.vertex_count();
    std::array<int, 5> s{};
    for (s[0] = 0; s[0] + 4 < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] + 3 < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] + 2 < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] + 1 < n; ++s[3])
                    for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
                        bool complete = true;
                        for (int i = 0; i < 5 && complete; ++i)
                            for (int j = i + 1; j < 5 && complete; ++j)
                                for (int l = j + 1; l < 5 && complete; ++l)
                                    complete = h.contains(make_edge(s[i], s[j], s[l]));
                        if (complete) return K53Witness{s};
                    }
    return std::nullopt;
}

// --- sweep -----------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::vector<Edge> all_triples(int n) {
    std::vector<Edge> ts;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) ts.push_back({a, b, c});
    return ts;
}

std::string encode_instance(const Hypergraph& h) {
    std::ostringstream os;
    os << "n=" << h.vertex_count() << " edges=";
    bool first = true;
    for (const Edge& e : h.edges()) {
        if (!first) os << ",";
        first = false;
        os << e[0] << "." << e[1] << "." << e[2];
    }
    return os.str();
}

SweepReport report_header(const SweepOptions& opt) {
    SweepReport r;
    r.n = opt.n;
    r.random_mode = opt.random_mode;
    r.seed = opt.seed;
    r.count = opt.count;
    r.checks = opt.checks;
    return r;
}

void tally_fail(CheckTally& t, SweepReport& r, const std::string& reason, const Hypergraph& h) {
    ++t.failures;
    r.counterexamples.push_back(reason + " " + encode_instance(h));
}

long binom2(int n) { return static_cast<long>(n) * (n - 1) / 2; }

}  // namespace

long sweep_domain_size(const SweepOptions& opt) {
    if (opt.n < 3) throw std::invalid_argument("sweep: n >= 3 required");
    if (opt.random_mode) return opt.count;
    if (opt.n > 6)
        throw std::invalid_argument("sweep: exhaustive mode requires n <= 6");
    long bits = static_cast<long>(opt.n) * (opt.n - 1) * (opt.n - 2) / 6;
    return 1L << bits;
}

Hypergraph sweep_instance(const SweepOptions& opt, long index) {
    if (!opt.random_mode) {
        thread_local int cached_n = -1;
        thread_local std::vector<Edge> ts;
        if (cached_n != opt.n) {
            ts = all_triples(opt.n);
            cached_n = opt.n;
        }
        std::vector<Edge> chosen;
        for (size_t j = 0; j < ts.size(); ++j)
            if (index >> j & 1) chosen.push_back(ts[j]);
        return Hypergraph(opt.n, chosen);
    }
    std::uint64_t mix = splitmix64(opt.seed ^ splitmix64(static_cast<std::uint64_t>(index)));
    long maxe = binom2(opt.n - 1);
    int target = static_cast<int>(mix % static_cast<std::uint64_t>(maxe + 1));
    return random_lcf(opt.n, mix, target);
}

void sweep_check_instance(const Hypergraph& h, const SweepOptions& opt, long index,
                          SweepReport& r) {
    ++r.total;
    int n = h.vertex_count();
    auto cyc = find_linear_cycle(h);

    bool audit = (opt.checks & check_oracle_audit) &&
                 (cyc.has_value() || opt.audit_stride <= 1 || index % opt.audit_stride == 0) &&
                 h.edge_count() <= 25;
    if (audit) {
        ++r.oracle_audit.checked;
        bool mismatch = false;
        auto oracle_cycle = brute_linear_cycle(h);
        if (cyc.has_value() != oracle_cycle.has_value()) {
            mismatch = true;
            r.counterexamples.push_back("cycle-detector-oracle-mismatch " + encode_instance(h));
        }
        if (!cyc) {
            if (find_k53(h).has_value() != brute_k53(h).has_value()) {
                mismatch = true;
                r.counterexamples.push_back("k53-detector-oracle-mismatch " + encode_instance(h));
            }
            if ((opt.checks & check_two_coloring) && n <= 24) {
                bool pipeline_colors = std::holds_alternative<Coloring>(color_hypergraph(h));
                bool oracle_colors = brute_k_colorable(h, 2).has_value();
                if (pipeline_colors != oracle_colors) {
                    mismatch = true;
                    r.counterexamples.push_back("2coloring-oracle-mismatch " + encode_instance(h));
                }
            }
        }
        if (mismatch) ++r.oracle_audit.failures;
    }

    if (cyc) return;
    ++r.lcf;
    bool k53free = !find_k53(h).has_value();
    if (k53free) ++r.k53_free;

    if (opt.checks & check_colorability3) {
        long pow3 = 1;
        bool within = true;
        for (int i = 0; i < n && within; ++i) {
            pow3 *= 3;
            within = pow3 <= (1L << 24);
        }
        if (within) {
            ++r.colorable3.checked;
            if (!brute_k_colorable(h, 3)) tally_fail(r.colorable3, r, "not-3-colorable", h);
        }
        ++r.alpha_two_fifths.checked;
        if (5 * independence_number(h).alpha < 2 * n)
            tally_fail(r.alpha_two_fifths, r, "alpha-below-two-fifths", h);
    }

    if (opt.checks & check_strong_degree) {
        ++r.strong_deg.checked;
        bool ok = n == 0;
        for (int v = 0; v < n && !ok; ++v) ok = strong_degree(h, v) <= 2;
        if (!ok) tally_fail(r.strong_deg, r, "no-low-strong-degree-vertex", h);
    }

    if (opt.checks & check_two_coloring) {
        for (const Edge& e : h.edges()) {
            if (!h.is_thick_edge(e)) continue;
            ++r.profile_dichotomy.checked;
            if (association_profile(h, e).shape == ProfileCase::unclassified)
                tally_fail(r.profile_dichotomy, r, "association-profile-unclassified", h);
        }
        if (k53free) {
            ++r.two_colored.checked;
            try {
                ColorResult res = color_hypergraph(h);
                if (std::holds_alternative<Coloring>(res)) {
                    const Coloring& g = std::get<Coloring>(res);
                    ++r.alpha_half.checked;
                    if (2 * static_cast<int>(independent_set_from_coloring(h, g).size()) < n)
                        tally_fail(r.alpha_half, r, "color-class-below-half", h);
                } else {
                    tally_fail(r.two_colored, r, "pipeline-returned-witness", h);
                }
            } catch (const internal_error&) {
                ++r.structural_failures;
                r.counterexamples.push_back("structural-assertion-failure " + encode_instance(h));
            }
        }
    }

    if ((opt.checks & check_degree_bound) && n >= 10) {
        ++r.degree_bound.checked;
        if (min_degree_vertex(h).second > n - 2)
            tally_fail(r.degree_bound, r, "min-degree-above-bound", h);
    }
}

SweepReport run_sweep_serial(const SweepOptions& opt) {
    SweepReport r = report_header(opt);
    long total = sweep_domain_size(opt);
    for (long i = 0; i < total; ++i) sweep_check_instance(sweep_instance(opt, i), opt, i, r);
    return r;
}

SweepReport run_sweep(const SweepOptions& opt) {
#ifdef _OPENMP
    if (opt.parallel) {
        long total = sweep_domain_size(opt);
        long chunk = 4096;
        long nchunks = (total + chunk - 1) / chunk;
        std::vector<SweepReport> parts(static_cast<size_t>(nchunks));
#pragma omp parallel for schedule(dynamic)
        for (long c = 0; c < nchunks; ++c) {
            SweepReport local = report_header(opt);
            long hi = std::min(total, (c + 1) * chunk);
            for (long i = c * chunk; i < hi; ++i)
                sweep_check_instance(sweep_instance(opt, i), opt, i, local);
            parts[static_cast<size_t>(c)] = std::move(local);
        }
        SweepReport r = report_header(opt);
        for (const SweepReport& p : parts) r.merge(p);
        return r;
    }
#endif
    return run_sweep_serial(opt);
}

bool SweepReport::clean() const {
    return colorable3.failures == 0 && alpha_two_fifths.failures == 0 &&
           two_colored.failures == 0 && alpha_half.failures == 0 && strong_deg.failures == 0 &&
           degree_bound.failures == 0 && oracle_audit.failures == 0 &&
           profile_dichotomy.failures == 0 && structural_failures == 0 &&
           counterexamples.empty();
}

void SweepReport::merge(const SweepReport& o) {
    total += o.total;
    lcf += o.lcf;
    k53_free += o.k53_free;
    auto add = [](CheckTally& a, const CheckTally& b) {
        a.checked += b.checked;
        a.failures += b.failures;
    };
    add(colorable3, o.colorable3);
    add(alpha_two_fifths, o.alpha_two_fifths);
    add(two_colored, o.two_colored);
    add(alpha_half, o.alpha_half);
    add(strong_deg, o.strong_deg);
    add(degree_bound, o.degree_bound);
    add(oracle_audit, o.oracle_audit);
    add(profile_dichotomy, o.profile_dichotomy);
    structural_failures += o.structural_failures;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(),
                           o.counterexamples.end());
}

std::string SweepReport::to_text() const {
    std::ostringstream os;
    os << "sweep n=" << n << " mode=" << (random_mode ? "random" : "exhaustive");
    if (random_mode) os << " seed=" << seed << " count=" << count;
    os << "\n";
    os << "instances total=" << total << " lcf=" << lcf << " k53free=" << k53_free << "\n";
    auto line = [&](const char* name, const CheckTally& t) {
        os << "check " << name << " checked=" << t.checked << " failures=" << t.failures << "\n";
    };
    if (checks & check_colorability3) {
        line("3colorable", colorable3);
        line("alpha-ge-two-fifths", alpha_two_fifths);
    }
    if (checks & check_two_coloring) {
        line("2coloring", two_colored);
        line("alpha-ge-half", alpha_half);
        line("profile-dichotomy", profile_dichotomy);
    }
    if (checks & check_strong_degree) line("strong-degree", strong_deg);
    if (checks & check_degree_bound) line("degree-bound", degree_bound);
    if (checks & check_oracle_audit) line("oracle-audit", oracle_audit);
    os << "assertion-failures " << structural_failures << "\n";
    os << "counterexamples " << counterexamples.size() << "\n";
    for (const std::string& c : counterexamples) os << "counterexample " << c << "\n";
    return os.str();
}

}  // namespace lcf
