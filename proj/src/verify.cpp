#include "treepat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>

#include "json.hpp"
#include "treepat/branching.hpp"
#include "treepat/numerics.hpp"
#include "treepat/scan.hpp"
#include "treepat/transforms.hpp"

namespace treepat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr double kClusterEps = 1e-9;
constexpr size_t kMaxStoredFailures = 32;

// Deterministic minimum tracker: keeps every pattern within kClusterEps of
// the running minimum plus the least value above the cluster.
struct MinAcc {
    uint64_t population = 0;
    double best = std::numeric_limits<double>::infinity();
    double runner = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, Pattern>> low;

    void add(double h, const Pattern& p) {
        ++population;
        if (h < best) best = h;
        if (h <= best + kClusterEps) {
            low.emplace_back(h, p);
        } else if (h < runner) {
            runner = h;
        }
        if (low.size() > 4096) compact();
    }

    void compact() {
        std::vector<std::pair<double, Pattern>> keep;
        for (auto& e : low) {
            if (e.first <= best + kClusterEps)
                keep.push_back(std::move(e));
            else if (e.first < runner)
                runner = e.first;
        }
        low = std::move(keep);
    }

    void merge(MinAcc&& o) {
        population += o.population;
        best = std::min(best, o.best);
        runner = std::min(runner, o.runner);
        for (auto& e : o.low) low.push_back(std::move(e));
        compact();
    }

    std::vector<Pattern> argmin() {
        compact();
        std::vector<Pattern> out;
        for (auto& e : low) out.push_back(e.second);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Least value strictly above the minimum cluster.
    std::optional<double> second_value() {
        compact();
        if (std::isfinite(runner)) return runner;
        return std::nullopt;
    }
};

struct FailureLog {
    std::vector<std::string> notes;
    std::vector<Pattern> patterns;
    uint64_t total = 0;

    void add(const std::string& note, const Pattern& p) {
        ++total;
        if (notes.size() < kMaxStoredFailures) {
            notes.push_back(note + ": " + p.serialize());
            patterns.push_back(p);
        }
    }
    void add(const std::string& note) {
        ++total;
        if (notes.size() < kMaxStoredFailures) notes.push_back(note);
    }
    void merge(FailureLog&& o) {
        total += o.total;
        for (size_t i = 0; i < o.notes.size() && notes.size() < kMaxStoredFailures; ++i)
            notes.push_back(std::move(o.notes[i]));
        for (size_t i = 0; i < o.patterns.size() && patterns.size() < kMaxStoredFailures; ++i)
            patterns.push_back(std::move(o.patterns[i]));
    }
};

int opening_count_formula(const Pattern& p) {
    int total = 0;
    for (int x : p.inner_points()) total += p.valence(x) * (p.valence(x) - 1) / 2;
    return total;
}

// Minimal two-petal branching sequences (deltas alternating 1,2,1,...) with
// period product in [4, max_period]: exactly the zero-entropy two-component
// patterns of those periods.
std::vector<BranchingSequence> two_petal_sequences(int max_period) {
    std::vector<BranchingSequence> out;
    std::vector<int> ps;
    std::function<void(long long)> rec = [&](long long product) {
        if (ps.size() >= 2) {
            BranchingSequence s;
            for (size_t i = 0; i < ps.size(); ++i)
                s.entries.emplace_back(ps[i], static_cast<int>(i % 2) + 1);
            out.push_back(std::move(s));
        }
        for (int p = 2; product * p <= max_period; ++p) {
            ps.push_back(p);
            rec(product * p);
            ps.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace

std::string Report::to_json(bool include_elapsed) const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["n"] = n;
    j["count"] = count;
    j["min_entropy"] = min_entropy ? nlohmann::ordered_json(*min_entropy) : nullptr;
    j["argmin"] = nlohmann::ordered_json::array();
    for (const auto& p : argmin) j["argmin"].push_back(nlohmann::ordered_json::parse(p.serialize()));
    j["reference"] = reference ? nlohmann::ordered_json(*reference) : nullptr;
    j["gap"] = gap ? nlohmann::ordered_json(*gap) : nullptr;
    j["margin"] = margin ? nlohmann::ordered_json(*margin) : nullptr;
    j["unique"] = unique ? nlohmann::ordered_json(*unique) : nullptr;
    j["tol"] = tol;
    if (include_elapsed) j["elapsed_ms"] = elapsed_ms;
    j["passed"] = passed;
    j["precision_warning"] = precision_warning;
    j["notes"] = notes;
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& p : counterexamples)
        j["counterexamples"].push_back(nlohmann::ordered_json::parse(p.serialize()));
    return j.dump();
}

Report verify_min_entropy(int n, double value_tol, double tol, bool parallel) {
    if (n < 3) throw DomainError("verify_min_entropy requires n >= 3");
    auto t0 = Clock::now();
    Report rep;
    rep.family = "positive";
    rep.n = n;
    rep.tol = value_tol;
    rep.reference = std::log(lambda_n(n));

    MinAcc pos, irr;
    std::mutex mu;
    auto visit = [&](const Pattern& p, const Classification& c) {
        if (c.zero) return;
        std::lock_guard<std::mutex> lock(mu);
        pos.add(c.entropy, p);
        if (c.irreducible) irr.add(c.entropy, p);
    };
    if (parallel)
        scan_family_unordered(n, tol, visit);
    else
        for_each_pattern(n, [&](const Pattern& p) { visit(p, classify(p, tol)); });

    const Pattern qn = q_pattern(n).canonical();
    rep.count = pos.population;
    rep.min_entropy = pos.best;
    rep.argmin = pos.argmin();
    rep.gap = pos.best - *rep.reference;
    rep.unique = rep.argmin.size() == 1;
    if (auto second = pos.second_value()) rep.margin = *second - pos.best;

    if (std::abs(*rep.gap) > value_tol) {
        rep.passed = false;
        rep.notes.push_back("minimum entropy differs from log(lambda_n) by " +
                            std::to_string(*rep.gap));
        rep.counterexamples.insert(rep.counterexamples.end(), rep.argmin.begin(), rep.argmin.end());
    }
    if (!(rep.argmin.size() == 1 && rep.argmin[0] == qn)) {
        rep.passed = false;
        rep.notes.push_back("argmin is not exactly the canonical Q_n");
        for (const auto& p : rep.argmin)
            if (!(p == qn)) rep.counterexamples.push_back(p);
    }
    if (rep.margin && *rep.margin < 10 * value_tol) rep.precision_warning = true;

    // The irreducible family must have the same minimum and argmin.
    if (irr.population == 0) {
        rep.passed = false;
        rep.notes.push_back("irreducible family is empty");
    } else {
        auto irr_argmin = irr.argmin();
        if (std::abs(irr.best - *rep.reference) > value_tol ||
            !(irr_argmin.size() == 1 && irr_argmin[0] == qn)) {
            rep.passed = false;
            rep.notes.push_back("irreducible family minimum does not match Q_n");
        } else {
            rep.notes.push_back("irreducible family: count=" + std::to_string(irr.population) +
                                ", minimum and argmin match Q_n");
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report verify_reducible_min(int n, double value_tol, double tol, bool parallel) {
    auto t0 = Clock::now();
    Report rep;
    rep.family = "reducible-positive";
    rep.n = n;
    rep.tol = value_tol;
    rep.reference = reducible_floor(n);  // throws for prime or small n
    const int p = least_prime_factor(n);

    MinAcc acc;
    std::mutex mu;
    auto visit = [&](const Pattern& pat, const Classification& c) {
        if (c.zero || !c.reducible) return;
        std::lock_guard<std::mutex> lock(mu);
        acc.add(c.entropy, pat);
    };
    if (parallel)
        scan_family_unordered(n, tol, visit);
    else
        for_each_pattern(n, [&](const Pattern& pat) { visit(pat, classify(pat, tol)); });

    rep.count = acc.population;
    if (acc.population == 0) {
        rep.passed = false;
        rep.notes.push_back("no reducible positive pattern found");
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }
    rep.min_entropy = acc.best;
    rep.argmin = acc.argmin();
    rep.gap = acc.best - *rep.reference;
    rep.unique = rep.argmin.size() == 1;
    if (auto second = acc.second_value()) rep.margin = *second - acc.best;

    if (std::abs(*rep.gap) > value_tol) {
        rep.passed = false;
        rep.notes.push_back("reducible minimum differs from log(lambda_{n/p})/p by " +
                            std::to_string(*rep.gap));
        rep.counterexamples.insert(rep.counterexamples.end(), rep.argmin.begin(), rep.argmin.end());
    }
    const Pattern ext = p_extension(q_pattern(n / p), p).canonical();
    if (std::find(rep.argmin.begin(), rep.argmin.end(), ext) == rep.argmin.end()) {
        rep.passed = false;
        rep.notes.push_back("no p-extension of Q_{n/p} among the argmin patterns");
    }
    if (*rep.unique)
        rep.notes.push_back("finding: the reducible minimum is attained uniquely at n=" +
                            std::to_string(n));
    if (rep.margin && *rep.margin < 10 * value_tol) rep.precision_warning = true;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report verify_pi_reducibility(int n, double tol, bool parallel) {
    auto t0 = Clock::now();
    Report rep;
    rep.family = "pi-reducibility";
    rep.n = n;
    rep.tol = tol;

    uint64_t population = 0;
    FailureLog failures;
    std::mutex mu;
    auto visit = [&](const Pattern& p, const Classification& c) {
        if (c.zero) return;
        if (static_cast<int>(p.inner_points().size()) < 2) return;
        auto ops = openings(p);
        if (ops.size() < 3) return;
        for (const auto& o : ops)
            if (!is_zero_entropy(o.pattern)) return;
        std::lock_guard<std::mutex> lock(mu);
        ++population;
        if (!c.pi_red) failures.add("hypotheses hold but the pattern is not pi-reducible", p);
    };
    if (parallel)
        scan_family_unordered(n, tol, visit);
    else
        for_each_pattern(n, [&](const Pattern& p) { visit(p, classify(p, tol)); });

    rep.count = population;
    rep.notes.push_back("hypothesis population: " + std::to_string(population));
    if (failures.total) {
        rep.passed = false;
        rep.notes.insert(rep.notes.end(), failures.notes.begin(), failures.notes.end());
        rep.counterexamples = failures.patterns;
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report run_splitting_suite(int max_period, int chain_max_n, double tol) {
    auto t0 = Clock::now();
    Report rep;
    rep.family = "splitting";
    rep.n = max_period;
    rep.tol = tol;
    FailureLog failures;
    uint64_t paths_checked = 0, fixtures = 0, chains = 0;

    for (const auto& s : two_petal_sequences(max_period)) {
        Pattern o = build_flower(s);
        ++fixtures;
        const int n = o.period();
        auto mts = maximal_trivial_structure(o);
        if (!mts) {
            failures.add("two-petal fixture lacks a maximal trivial structure", o);
            continue;
        }
        const int nb = mts->p;   // number of blocks
        const int q = n / nb;    // block cardinality
        if (q != s.entries.back().first)
            failures.add("fixture block cardinality disagrees with its branching sequence", o);

        Pattern c = combinatorial_collapse(o);
        int c_blocks = 0;  // 0 means the collapse is trivial
        if (!c.trivial()) {
            auto mc = maximal_trivial_structure(c);
            if (!mc) {
                failures.add("collapse of a two-petal fixture lacks a maximal structure", c);
                continue;
            }
            c_blocks = mc->p;
        }

        CoveringGraph g(o);
        for (int i = 0; i < g.size(); ++i) {
            const BasicPath& pi = g.paths()[static_cast<size_t>(i)];
            ++paths_checked;
            const bool in_block = pi.a % nb == pi.b % nb;
            SplitResult st = split_time(o, pi);
            if (in_block) {
                if (!st.never()) failures.add("in-block path splits", o);
                continue;
            }
            if (st.never() || *st.splits_at > 2 * nb) {
                failures.add("inter-block path does not split within 2n/q iterates", o);
                continue;
            }
            const bool bar_in_block =
                c_blocks == 0 || ((pi.a % nb) % c_blocks == (pi.b % nb) % c_blocks);
            if (bar_in_block && (pi.a == 0 || pi.b == 0)) {
                int z = pi.a == 0 ? pi.b : pi.a;
                if (0 < z && z < nb) {
                    if (*st.splits_at != nb - z)
                        failures.add("type (a) split time is not n/q - a", o);
                } else if (z > (q - 1) * nb) {
                    if (*st.splits_at != nb)
                        failures.add("type (b) split time is not n/q", o);
                }
            }
            if (q >= 3 && walk_count(g, i, n) < 4)
                failures.add("inter-block path covers fewer than 4 paths in n iterates", o);
        }
    }
    rep.notes.push_back("two-petal fixtures: " + std::to_string(fixtures) + ", paths checked: " +
                        std::to_string(paths_checked));

    for (int n = 3; n <= chain_max_n; ++n) {
        for (const Pattern& p : enumerate_patterns(n)) {
            Classification c = classify(p, tol);
            if (!c.triple_chain || c.pi_red) continue;
            auto ops = openings(p);
            if (ops.size() != 2) {
                failures.add("triple chain without exactly two openings", p);
                continue;
            }
            if (!is_zero_entropy(ops[0].pattern) || !is_zero_entropy(ops[1].pattern)) continue;
            ++chains;
            CoveringGraph g(p);
            for (int i = 0; i < g.size(); ++i)
                if (walk_count(g, i, n) < 4)
                    failures.add("triple-chain path covers fewer than 4 paths in n iterates", p);
            if (!(c.entropy > std::log(4.0) / n))
                failures.add("triple-chain entropy is not above log(4)/n", p);
        }
    }
    rep.notes.push_back("pi-irreducible triple chains with zero-entropy openings: " +
                        std::to_string(chains));

    // The enumeration window can be too small to contain such chains, so the
    // same bounds also run on constructed fixtures: split one petal of a
    // zero-entropy two-petal pattern at a point x into two components and
    // keep the chains whose second opening has entropy zero.
    uint64_t constructed = 0;
    std::vector<Pattern> seen;
    for (const auto& s : two_petal_sequences(std::min(max_period, 14))) {
        Pattern o = build_flower(s);
        const int n = o.period();
        for (int ci = 0; ci < 2; ++ci) {
            const auto& c1 = o.components()[static_cast<size_t>(ci)];
            const auto& c2 = o.components()[static_cast<size_t>(1 - ci)];
            for (int x : c1) {
                if (x == 0) continue;  // splitting at the center makes a flower
                std::vector<int> rest;
                for (int y : c1)
                    if (y != x) rest.push_back(y);
                const int k = static_cast<int>(rest.size());
                for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
                    if (mask & 1u) continue;  // fix rest[0]'s side: unordered split
                    std::vector<int> a{x}, b{x};
                    for (int i = 0; i < k; ++i)
                        ((mask >> i) & 1u ? a : b).push_back(rest[static_cast<size_t>(i)]);
                    Pattern chain = Pattern::validate(n, {a, b, c2});
                    bool second_zero = true;
                    for (const auto& op : openings(chain))
                        if (op.inner == 0 && !is_zero_entropy(op.pattern)) second_zero = false;
                    if (!second_zero || pi_reducible(chain)) continue;
                    Pattern canon = chain.canonical();
                    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
                    seen.push_back(canon);
                    ++constructed;
                    CoveringGraph g(chain);
                    for (int i = 0; i < g.size(); ++i)
                        if (walk_count(g, i, n) < 4)
                            failures.add("constructed-chain path covers fewer than 4 paths", chain);
                    if (!(entropy(g, tol) > std::log(4.0) / n))
                        failures.add("constructed-chain entropy is not above log(4)/n", chain);
                }
            }
        }
    }
    rep.notes.push_back("constructed triple-chain fixtures: " + std::to_string(constructed));

    rep.count = paths_checked;
    if (failures.total) {
        rep.passed = false;
        rep.notes.insert(rep.notes.end(), failures.notes.begin(), failures.notes.end());
        rep.counterexamples = failures.patterns;
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report run_structure_suite(int max_n, double tol, bool parallel) {
    auto t0 = Clock::now();
    Report rep;
    rep.family = "structure";
    rep.n = max_n;
    rep.tol = tol;
    FailureLog failures;
    uint64_t examined = 0;

    for (int n = 1; n <= max_n; ++n) {
        std::vector<Pattern> pats = enumerate_patterns(n, parallel);
        examined += pats.size();
        std::mutex mu;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
        for (long long idx = 0; idx < static_cast<long long>(pats.size()); ++idx) {
            const Pattern& p = pats[static_cast<size_t>(idx)];
            FailureLog local;
            try {
                Classification c = classify(p, tol);

                if (zero_entropy_structural(p) != c.zero)
                    local.add("structural zero-entropy recursion disagrees with the SCC test", p);
                if (c.zero != (c.entropy < 1e-9))
                    local.add("zero flag disagrees with numeric entropy", p);

                auto mts = maximal_trivial_structure(p);
                if (!p.trivial() && c.pi_red.has_value() != mts.has_value())
                    local.add("pi-reducibility does not match the maximal trivial structure", p);
                if (mts && !p.trivial()) {
                    for (const BasicPath& pi : basic_paths(p)) {
                        bool in_block = pi.a % mts->p == pi.b % mts->p;
                        SplitResult st = split_time(p, pi);
                        if (in_block && !st.never()) local.add("in-block path splits", p);
                        if (!in_block && (st.never() || *st.splits_at >= n))
                            local.add("inter-block path does not split before n iterates", p);
                    }
                }

                if (c.zero && !p.trivial()) {
                    Pattern col = combinatorial_collapse(p);
                    if (!is_zero_entropy(col)) local.add("collapse of a zero-entropy pattern has positive entropy", p);

                    bool any_bidirectional = false;
                    for (int x : p.inner_points()) {
                        BranchingSequence bs = branching_sequence(p, x);
                        const size_t r = bs.entries.size() - 1;
                        if (r >= 1 && bs.entries[r].second != bs.entries[r - 1].second)
                            any_bidirectional = true;
                        Pattern fl = flower_of(p, x);
                        if (!(branching_sequence(fl, x) == fully_reduce(bs)))
                            local.add("flower branching sequence is not the fully reduced one", p);
                        if (!is_minimal(branching_sequence(fl, x)))
                            local.add("flower branching sequence is not minimal", p);
                    }
                    if (!any_bidirectional) local.add("no bidirectional inner point", p);
                }

                auto ops = openings(p);
                if (static_cast<int>(ops.size()) != opening_count_formula(p))
                    local.add("opening count does not match sum of C(valence,2)", p);
                for (const auto& o : ops) {
                    if (c.reducible && !is_reducible(o.pattern))
                        local.add("opening of a reducible pattern is not reducible", p);
                    if (n <= 8) {
                        double ho = entropy(o.pattern, tol);
                        if (c.entropy < ho - 1e-7)
                            local.add("opening increased entropy", p);
                    }
                }

                if (scrambled_components(p).empty()) local.add("no scrambled component", p);

                if (n <= 7) {
                    for (int blocks = 2; blocks < n; ++blocks) {
                        if (n % blocks != 0) continue;
                        for (int r = 0; r < blocks; ++r) {
                            Pattern sub = subordinated(p, blocks, r);
                            if (entropy(sub, tol) > blocks * c.entropy + 1e-7)
                                local.add("subordinated pattern exceeds p*h(P)", p);
                        }
                    }
                }

                if (n <= 6) {
                    CoveringGraph g(p);
                    if (g.size() > 0) {
                        double rho = spectral_radius(g.dense(), tol);
                        int lo = g.size(), hi = 0;
                        for (int i = 0; i < g.size(); ++i) {
                            lo = std::min(lo, g.out_degree(i));
                            hi = std::max(hi, g.out_degree(i));
                        }
                        if (rho < lo - 1e-7 || rho > hi + 1e-7)
                            local.add("spectral radius escapes the row-sum bounds", p);
                    }
                    for (const auto& o : ops) {
                        for (int x = 0; x < n; ++x) {
                            if (x != o.inner) {
                                if (!(flower_of(o.pattern, x) == flower_of(p, x)))
                                    local.add("opening away from x changed the x-flower", p);
                            } else {
                                Pattern fo = flower_of(o.pattern, x);
                                Pattern fp = flower_of(p, x);
                                bool found = false;
                                for (const auto& fop : openings(fp))
                                    if (fop.pattern == fo) found = true;
                                if (!found)
                                    local.add("opening at x is not an opening of the x-flower", p);
                            }
                        }
                    }
                }
            } catch (const Error& e) {
                local.add(std::string("exception: ") + e.what(), p);
            }
            if (local.total) {
                std::lock_guard<std::mutex> lock(mu);
                failures.merge(std::move(local));
            }
        }
    }

    // Fixture checks that need periods beyond the enumeration bound.
    for (const auto& s : two_petal_sequences(12)) {
        Pattern o = build_flower(s);
        if (!(time_reverse(o) == o.canonical()))
            failures.add("zero-entropy two-component pattern differs from its time reverse", o);
    }
    {
        const Pattern two_comp = Pattern::validate(8, {{0, 2, 6}, {0, 1, 3, 4, 5, 7}});
        std::vector<Pattern> bases{q_pattern(3), q_pattern(4), q_pattern(5), two_comp};
        for (const Pattern& r : bases)
            for (int p = 2; p <= 3; ++p) {
                Pattern ext = p_extension(r, p);
                if (std::abs(entropy(ext, tol) - entropy(r, tol) / p) > 1e-7)
                    failures.add("p-extension entropy is not h(R)/p", ext);
            }
    }

    rep.count = examined;
    rep.notes.push_back("patterns examined: " + std::to_string(examined));
    if (failures.total) {
        rep.passed = false;
        rep.notes.push_back("violations: " + std::to_string(failures.total));
        rep.notes.insert(rep.notes.end(), failures.notes.begin(), failures.notes.end());
        rep.counterexamples = failures.patterns;
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace treepat
