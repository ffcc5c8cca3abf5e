#include "qsurf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "qsurf/seeds.hpp"

namespace qsurf {

namespace {

std::string set_text(const IndexSet& s) {
    std::string r = "{";
    for (size_t i = 0; i < s.size(); ++i)
        r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

struct Recorder {
    CheckResult& r;
    void ok() { ++r.cases; }
    void fail(const std::string& detail) {
        ++r.cases;
        if (r.pass) {
            r.pass = false;
            r.detail = detail;
        }
    }
    void check(bool cond, const std::function<std::string()>& detail) {
        if (cond)
            ok();
        else
            fail(detail());
    }
};

void merge(CheckResult& into, const CheckResult& from) {
    into.cases += from.cases;
    into.skipped += from.skipped;
    if (into.pass && !from.pass) {
        into.pass = false;
        into.detail = from.detail;
    }
}

} // namespace

void parallel_for(size_t count, size_t jobs, const std::function<void(size_t)>& fn) {
    jobs = std::max<size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++)
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

std::vector<CheckResult> verify_string(const Surface& s, const StringWord& w) {
    std::vector<CheckResult> out{{"counts"},        {"bijection"},      {"counting lemmas"}, {"valuations"},
                                 {"factorization"}, {"bar invariance"}, {"positivity"}};
    Recorder counts{out[0]}, bij{out[1]}, lemmas{out[2]}, vals{out[3]}, fact{out[4]}, bar{out[5]}, pos{out[6]};
    const std::string ws = format_string(s.quiver, w);

    SnakeGraph g;
    std::vector<PerfectMatching> ms;
    try {
        g = label_snake(w, s);
        ms = enumerate_matchings(g);
    } catch (const std::exception& e) {
        counts.fail(ws + ": " + e.what());
        return out;
    }
    const auto subs = enumerate_canonical_submodules(w);
    counts.check(ms.size() == subs.size(), [&] {
        return ws + ": " + std::to_string(ms.size()) + " matchings, " + std::to_string(subs.size()) + " submodules";
    });
    if (g.d() <= 4)
        counts.check(ms == enumerate_matchings_bruteforce(g), [&] { return ws + ": transfer and brute force differ"; });
    else
        ++out[0].skipped;
    counts.check(twist_connectivity(g), [&] { return ws + ": twist graph is disconnected"; });

    std::set<IndexSet> image;
    std::vector<IndexSet> enclosed(ms.size());
    for (size_t i = 0; i < ms.size(); ++i) {
        try {
            enclosed[i] = matching_to_submodule(g, ms[i]).index_set;
            bij.check(is_canonical_submodule_bruteforce(s.quiver, w, enclosed[i]),
                      [&] { return ws + ": " + set_text(enclosed[i]) + " is not closed under the arrow action"; });
            image.insert(enclosed[i]);
        } catch (const std::exception& e) {
            bij.fail(ws + ", matching " + g.matching_text(ms[i]) + ": " + e.what());
        }
    }
    std::set<IndexSet> all;
    for (const auto& c : subs)
        all.insert(c.index_set);
    bij.check(image == all && image.size() == ms.size(), [&] { return ws + ": matching map is not a bijection"; });

    for (size_t i = 0; i < ms.size(); ++i) {
        const PerfectMatching& p = ms[i];
        const IndexSet& iset = enclosed[i];
        try {
            for (int k = 1; k <= static_cast<int>(s.n()); ++k) {
                lemmas.check(normalized(n_module(s, w, k, iset)) == normalized(n_snake_scan(g, p, k)), [&] {
                    return ws + ", submodule " + set_text(iset) + ", k=" + std::to_string(k) +
                           ": module counts differ from the snake scan";
                });
            }
            for (int j = 1; j <= static_cast<int>(g.d()); ++j) {
                if (!can_twist(g, p, j))
                    continue;
                int k = w.vertices[static_cast<size_t>(j - 1)];
                BigCounts bc = big_counts(s, w, k, j, iset);
                PairCounts m = m_pm(g, j, k), n = n_pm(g, j, p, k);
                lemmas.check(bc == BigCounts{m.minus, m.plus, n.minus, n.plus}, [&] {
                    return ws + ", submodule " + set_text(iset) + ", k=" + std::to_string(k) +
                           ", j=" + std::to_string(j) + ": N/M counts differ";
                });
                lemmas.check(omega(g, j, p) == omega_prime(s, w, j, iset), [&] {
                    return ws + ", submodule " + set_text(iset) + ", k=" + std::to_string(k) +
                           ", j=" + std::to_string(j) + ": Omega " + std::to_string(omega(g, j, p)) +
                           " vs Omega' " + std::to_string(omega_prime(s, w, j, iset));
                });
            }
        } catch (const std::exception& e) {
            lemmas.fail(ws + ", submodule " + set_text(iset) + ": " + e.what());
        }
    }

    try {
        MatchingValuation v = valuation_v(g);
        SubmoduleValuation vg = valuation_v_gamma(s, w);
        vals.check(v.at(minimal_matching(g)) == 0 && v.at(maximal_matching(g)) == 0,
                   [&] { return ws + ": extreme matchings are not valued 0"; });
        for (size_t i = 0; i < ms.size(); ++i)
            vals.check(v.at(ms[i]) == vg.at(enclosed[i]), [&] {
                return ws + ", submodule " + set_text(enclosed[i]) + ": v = " + std::to_string(v.at(ms[i])) +
                       ", v_gamma = " + std::to_string(vg.at(enclosed[i]));
            });
    } catch (const std::exception& e) {
        vals.fail(ws + ": " + e.what());
    }

    const IntVector index = x_of_matching(s, g, minimal_matching(g));
    for (size_t i = 0; i < ms.size(); ++i) {
        IntVector dim = dimension_vector(w, enclosed[i], s.n());
        IntVector e = index;
        for (size_t r = 0; r < e.size(); ++r)
            for (size_t c = 0; c < s.n(); ++c)
                e[r] += s.pair.b_tilde[r][c] * dim[c];
        fact.check(e == x_of_matching(s, g, ms[i]),
                   [&] { return ws + ", submodule " + set_text(enclosed[i]) + ": factorization fails"; });
    }

    try {
        for (int64_t scale : {int64_t{0}, int64_t{1}}) {
            TorusElement x = quantum_expansion(s, w, scale).element;
            bar.check(x.is_bar_invariant(), [&] { return ws + ": expansion is not bar-invariant"; });
            pos.check(x.nonnegative() && specialize_q1(x).positive(),
                      [&] { return ws + ": expansion has a negative coefficient"; });
        }
    } catch (const std::exception& e) {
        bar.fail(ws + ": " + e.what());
    }
    return out;
}

CheckResult verify_mutation_oracle(const Surface& s, size_t depth, size_t max_length) {
    CheckResult r{"mutation oracle"};
    Recorder rec{r};
    std::map<std::string, std::string> expansions; // canonical text -> string
    for (const StringWord& w : enumerate_strings(s.quiver, max_length))
        expansions.emplace(to_text(quantum_expansion(s, w).element), format_string(s.quiver, w));
    std::set<std::string> seen;
    const QuantumSeed start = QuantumSeed::initial(s.pair);
    for (const auto& x : start.cluster)
        seen.insert(to_text(x));
    std::vector<std::pair<std::vector<size_t>, QuantumSeed>> frontier{{{}, start}};
    for (size_t level = 0; level < depth; ++level) {
        std::vector<std::pair<std::vector<size_t>, QuantumSeed>> next;
        for (const auto& [seq, seed] : frontier)
            for (size_t k = 1; k <= s.n(); ++k) {
                if (!seq.empty() && seq.back() == k)
                    continue;
                std::vector<size_t> ks = seq;
                ks.push_back(k);
                QuantumSeed ms = mutate_seed(seed, k);
                const TorusElement& x = ms.cluster[k - 1];
                if (seen.insert(to_text(x)).second) {
                    // Crossings of the arc: the denominator degree over internal arcs.
                    LaurentPoly c = specialize_q1(x);
                    int64_t crossings = 0;
                    for (size_t i = 0; i < s.n(); ++i) {
                        int64_t lo = 0;
                        for (const auto& [g, coef] : c.terms())
                            lo = std::min(lo, g[i]);
                        crossings -= lo;
                    }
                    if (static_cast<size_t>(crossings) > max_length) {
                        ++r.skipped;
                    } else {
                        rec.check(expansions.count(to_text(x)) > 0, [&] {
                            std::string q;
                            for (size_t k2 : ks)
                                q += (q.empty() ? "" : ",") + std::to_string(k2);
                            return "sequence " + q + " gives " + to_text(x) + ", which no string expands to";
                        });
                    }
                }
                next.emplace_back(std::move(ks), std::move(ms));
            }
        frontier = std::move(next);
    }
    return r;
}

std::vector<CheckResult> verify_kronecker(const Surface& a, int max_s) {
    std::vector<CheckResult> out{{"kronecker equality"}, {"kronecker recursions"}};
    Recorder eq{out[0]}, rec{out[1]};
    for (int s = 0; s <= max_s; ++s) {
        for (Family f : {Family::G, Family::H}) {
            if (f == Family::H && s == 0)
                continue;
            EqualityReport e = equality_check(a, f, s);
            eq.check(e.equal, [&] {
                return std::string(f == Family::G ? "G_" : "H_") + std::to_string(s) + ": " + e.mismatches.front();
            });
        }
        WeightedSnake ws = build_weighted(a, Family::G, s);
        eq.check(r_s(a, Family::G, s) == quantum_expansion(a, ws.word).element,
                 [&] { return "r_" + std::to_string(s) + " differs from the expansion of G_" + std::to_string(s); });
        if (s >= 1) {
            LemmaReport l = recursion_lemma_checks(a, s);
            rec.check(l.ok, [&] { return l.first_failure; });
        }
    }
    return out;
}

std::vector<CheckResult> verify_surface(const Surface& s, const VerifyOptions& opt) {
    const auto strings = enumerate_strings(s.quiver, opt.max_length);
    std::vector<std::vector<CheckResult>> per(strings.size());
    parallel_for(strings.size(), opt.jobs, [&](size_t i) { per[i] = verify_string(s, strings[i]); });
    std::vector<CheckResult> out = verify_string(s, trivial_string(1));
    for (auto& c : out)
        c = CheckResult{c.name};
    for (const auto& r : per)
        for (size_t c = 0; c < out.size(); ++c)
            merge(out[c], r[c]);
    if (opt.mutation_depth > 0)
        out.push_back(verify_mutation_oracle(s, opt.mutation_depth, opt.max_length));
    if (opt.kronecker_s >= 0)
        for (auto& c : verify_kronecker(kronecker_surface(), opt.kronecker_s))
            out.push_back(c);
    return out;
}

} // namespace qsurf
