// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qsurf/cli.hpp"
#include "qsurf/kronecker.hpp"
#include "qsurf/seeds.hpp"
#include "qsurf/skein_mult.hpp"
#include "qsurf/verify.hpp"

using namespace qsurf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Tallies cases and keeps the first failure.
struct Tally {
    size_t cases = 0, failed = 0;
    std::string first;
    void check(bool ok, const std::function<std::string()>& what) {
        ++cases;
        if (!ok && failed++ == 0)
            first = what();
    }
    Outcome outcome(const std::string& summary) const {
        if (failed == 0)
            return {true, summary + ", " + std::to_string(cases) + " cases"};
        return {false, std::to_string(failed) + "/" + std::to_string(cases) + " failed; first: " + first};
    }
};

Surface corpus(const std::string& name) { return load_surface(std::string(QSURF_DATA_DIR) + "/" + name + ".json"); }

const std::vector<std::string> kCorpus{"annulus",        "pentagon",         "square",
                                       "hexagon_fan",    "hexagon_zigzag",   "hexagon_triangle",
                                       "heptagon_zigzag", "octagon_zigzag", "nonagon_triangle"};

TorusElement random_element(std::mt19937& rng, size_t rank) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), q(-3, 3), n(1, 3);
    TorusElement a(rank);
    for (int t = n(rng); t > 0; --t) {
        IntVector g(rank);
        for (auto& x : g)
            x = e(rng);
        a.add_term(g, QPoly::monomial(q(rng), c(rng)));
    }
    return a;
}

IntMatrix random_skew(std::mt19937& rng, size_t m) {
    std::uniform_int_distribution<int> e(-3, 3);
    IntMatrix l(m, IntVector(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            l[i][j] = e(rng);
            l[j][i] = -l[i][j];
        }
    return l;
}

// 1000 random triples; the automorphism law is checked as stated, and the
// order-reversing law alongside it.
Outcome torus_laws() {
    std::mt19937 rng(20240611);
    Tally assoc, comm, bar_auto, bar_anti, invol;
    for (int i = 0; i < 1000; ++i) {
        const size_t m = 2 + static_cast<size_t>(i % 3);
        IntMatrix l = random_skew(rng, m);
        TorusElement a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
        assoc.check(torus_mul(torus_mul(a, b, l), c, l) == torus_mul(a, torus_mul(b, c, l), l),
                    [&] { return "associativity: " + to_text(a) + ", " + to_text(b) + ", " + to_text(c); });
        IntVector g = a.terms().empty() ? IntVector(m, 1) : a.terms().begin()->first;
        IntVector h = b.terms().empty() ? IntVector(m, 1) : b.terms().begin()->first;
        TorusElement xg = TorusElement::monomial(g), xh = TorusElement::monomial(h);
        comm.check(torus_mul(xg, xh, l) == torus_mul(xh, xg, l).shifted(2 * lambda_form(l, g, h)),
                   [&] { return "q-commutation at " + format_vector(g) + ", " + format_vector(h); });
        TorusElement ab = torus_mul(a, b, l);
        invol.check(a.bar().bar() == a && (a + b).bar() == a.bar() + b.bar(),
                    [&] { return "bar is not an additive involution on " + to_text(a); });
        bar_anti.check(ab.bar() == torus_mul(b.bar(), a.bar(), l),
                       [&] { return "bar(ab) != bar(b)bar(a) for " + to_text(a) + ", " + to_text(b); });
        bar_auto.check(ab.bar() == torus_mul(a.bar(), b.bar(), l),
                       [&] { return to_text(a) + ", " + to_text(b); });
    }
    std::ostringstream s;
    s << "associativity " << assoc.cases - assoc.failed << "/" << assoc.cases << ", q-commutation "
      << comm.cases - comm.failed << "/" << comm.cases << ", bar additive involution " << invol.cases - invol.failed
      << "/" << invol.cases << ", bar(ab)=bar(b)bar(a) " << bar_anti.cases - bar_anti.failed << "/"
      << bar_anti.cases << ", bar(ab)=bar(a)bar(b) " << bar_auto.cases - bar_auto.failed << "/" << bar_auto.cases;
    bool pass = assoc.failed == 0 && comm.failed == 0 && invol.failed == 0 && bar_auto.failed == 0;
    if (!pass && bar_auto.failed > 0)
        s << "; bar reverses products, so it is an anti-automorphism, not a ring automorphism (first counterexample: "
          << bar_auto.first << ")";
    return {pass, s.str()};
}

bool same_seed(const QuantumSeed& a, const QuantumSeed& b) {
    return a.pair.b_tilde == b.pair.b_tilde && a.pair.lambda == b.pair.lambda && a.cluster == b.cluster;
}

Outcome seed_mutation() {
    std::vector<std::pair<std::string, CompatiblePair>> seeds{
        {"Kronecker", make_compatible_pair({{0, 2}, {-2, 0}}, {{0, 1}, {-1, 0}})},
        {"pentagon", corpus("pentagon").pair},
        {"hexagon_zigzag", corpus("hexagon_zigzag").pair},
        {"hexagon_fan", corpus("hexagon_fan").pair}};
    Tally t;
    size_t sequences = 0;
    for (const auto& [name, pair] : seeds) {
        const IntVector d = pair.d;
        std::function<void(const QuantumSeed&, std::string, size_t)> walk = [&](const QuantumSeed& s, std::string seq,
                                                                               size_t depth) {
            ++sequences;
            t.check(check_compatible(s.pair.b_tilde, s.pair.lambda) == d,
                    [&] { return name + " [" + seq + "]: D changed"; });
            for (const auto& x : s.cluster)
                t.check(x.is_bar_invariant() && x.nonnegative(),
                        [&] { return name + " [" + seq + "]: " + to_text(x) + " not bar-invariant and positive"; });
            for (size_t k = 1; k <= s.pair.n(); ++k) {
                QuantumSeed m;
                try {
                    m = mutate_seed(s, k);
                } catch (const Error& e) {
                    t.check(false, [&] { return name + " [" + seq + "] at " + std::to_string(k) + ": " + e.what(); });
                    continue;
                }
                t.check(same_seed(mutate_seed(m, k), s),
                        [&] { return name + " [" + seq + "]: mutation at " + std::to_string(k) + " is not involutive"; });
                if (depth < 8)
                    walk(m, seq + (seq.empty() ? "" : ",") + std::to_string(k), depth + 1);
            }
        };
        walk(QuantumSeed::initial(pair), "", 0);
    }
    return t.outcome("Kronecker, A2, A3 x2, " + std::to_string(sequences) + " sequences of length <= 8");
}

// Runs verify_string over the corpus once and hands out the named checks.
class CorpusRun {
  public:
    explicit CorpusRun(size_t max_length) {
        for (const auto& name : kCorpus) {
            Surface s = corpus(name);
            size_t count = 0;
            for (const StringWord& w : enumerate_strings(s.quiver, max_length)) {
                ++count;
                for (const auto& c : verify_string(s, w)) {
                    Tally& t = checks_[c.name];
                    t.cases += c.cases;
                    if (!c.pass && t.failed++ == 0)
                        t.first = name + ": " + c.detail;
                }
            }
            strings_[name] = count;
        }
    }
    Outcome result(const std::vector<std::string>& names, const std::string& summary) const {
        Tally all;
        for (const auto& n : names) {
            const Tally& t = checks_.at(n);
            all.cases += t.cases;
            if (t.failed > 0 && all.failed == 0)
                all.first = t.first;
            all.failed += t.failed;
        }
        size_t strings = 0;
        for (const auto& [n, c] : strings_)
            strings += c;
        return all.outcome(summary + ", " + std::to_string(strings) + " strings");
    }

  private:
    std::map<std::string, Tally> checks_;
    std::map<std::string, size_t> strings_;
};

Outcome expansion_oracle() {
    Tally t;
    Surface p = corpus("pentagon");
    const std::vector<std::pair<std::string, std::vector<size_t>>> cases{
        {"1", {1}}, {"2", {2}}, {"1 >a> 2", {1, 2}}, {"1 >a> 2", {2, 1}}};
    for (const auto& [text, seq] : cases) {
        OracleReport r = oracle_compare(p, parse_string(p.quiver, text), seq);
        t.check(r.equal, [&] { return "pentagon " + text + ": " + r.detail; });
    }
    Surface a = corpus("annulus");
    CheckResult m = verify_mutation_oracle(a, 5, 9);
    t.cases += m.cases;
    if (!m.pass)
        t.check(false, [&] { return m.detail; });
    t.check(m.skipped == 0, [&] { return std::to_string(m.skipped) + " Kronecker variables skipped"; });
    return t.outcome("pentagon sequences [1],[2],[1,2],[2,1]; Kronecker depth 5");
}

Outcome kronecker() {
    Surface a = kronecker_surface();
    CheckResult eq = verify_kronecker(a, 6)[0];
    Tally t;
    t.cases += eq.cases;
    if (!eq.pass)
        t.check(false, [&] { return eq.detail; });
    bool differs = false;
    for (int s = 1; s <= 6; ++s)
        for (Family f : {Family::G, Family::H})
            differs = differs || equality_check(a, f, s).alpha_differs_from_v;
    t.check(differs, [] { return "alpha and v agree on every matching"; });
    for (int s = 1; s <= 6; ++s) {
        LemmaReport l = recursion_lemma_checks(a, s);
        for (const auto& [name, tally] : l.tallies) {
            t.cases += static_cast<size_t>(tally.first);
            if (tally.second > 0)
                t.check(false, [&] { return l.first_failure; });
        }
        for (const char* anchor : {"G, v of the last two tiles is 1", "H, v of the last tile is s-1"})
            t.check(l.tallies.count(anchor) && l.tallies.at(anchor).first == 1,
                    [&] { return std::string(anchor) + " missing at s=" + std::to_string(s); });
    }
    return t.outcome("G_s and H_s for s <= 6, r_s, four recursions and both anchors");
}

Outcome skein() {
    Tally t;
    size_t arrow = 0, overlap = 0;
    for (const auto& name : kCorpus) {
        Surface s = corpus(name);
        auto strings = enumerate_strings(s.quiver, 4);
        for (size_t i = 0; i < strings.size(); ++i)
            for (size_t j = i; j < strings.size(); ++j) {
                if (extension_count(s, strings[i], strings[j]) != 1)
                    continue;
                const std::string where =
                    name + " (" + format_string(s.quiver, strings[i]) + ", " + format_string(s.quiver, strings[j]) + ")";
                try {
                    MultiplicationCertificate c = multiply_and_certify(s, strings[i], strings[j]);
                    bool ok = c.identity_verified && c.classical_verified && relative_exponent_check(c) &&
                              !relative_exponent_check(c.product, c.m1, c.m2.shifted(1), c.lambda_twice);
                    t.check(ok, [&] { return where + ": certificate incomplete"; });
                    if (ok)
                        ++(c.kind == ExtensionKind::Arrow ? arrow : overlap);
                } catch (const Error& e) {
                    t.check(false, [&] { return where + ": " + e.what(); });
                }
            }
    }
    t.check(arrow + overlap >= 10, [&] { return "only " + std::to_string(arrow + overlap) + " pairs certified"; });
    t.check(arrow > 0 && overlap > 0, [&] {
        return "kinds not both represented (" + std::to_string(arrow) + " arrow, " + std::to_string(overlap) +
               " overlap)";
    });
    return t.outcome(std::to_string(arrow) + " arrow and " + std::to_string(overlap) + " overlap pairs certified");
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f)
        return "<popen failed>";
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
        out.append(buf.data(), n);
    pclose(f);
    return out;
}

std::string in_process(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    run_cli(args, out, err);
    return out.str() + err.str();
}

Outcome determinism(const std::string& tool) {
    Tally t;
    const std::string data = std::string(QSURF_DATA_DIR) + "/";
    const std::vector<std::vector<std::string>> commands{
        {"verify", "--surface", data + "annulus.json", "--max-length", "7", "--mutation-depth", "4", "--kronecker", "3"},
        {"verify", "--surface", data + "hexagon_triangle.json", "--max-length", "6", "--mutation-depth", "3"},
        {"expand", "--surface", data + "annulus.json", "--string", "1 >a> 2 <b< 1 >a> 2", "--terms", "--q1"},
        {"--format", "structured", "expand", "--surface", data + "nonagon_triangle.json", "--string", "1"}};
    for (const auto& cmd : commands) {
        std::string line;
        for (const auto& a : cmd)
            line += " '" + a + "'";
        std::string reference = in_process(cmd);
        for (const char* jobs : {"1", "4"}) {
            auto with = cmd;
            with.insert(with.begin(), {"--jobs", jobs});
            t.check(in_process(with) == reference, [&] { return "--jobs " + std::string(jobs) + " differs:" + line; });
            if (!tool.empty())
                for (int run = 0; run < 2; ++run)
                    t.check(capture("'" + tool + "' --jobs " + jobs + line + " 2>&1") == reference,
                            [&] { return "separate process run differs:" + line; });
        }
    }
    return t.outcome("verify and expand, jobs 1 and 4, in process and as separate runs");
}

} // namespace

int main(int argc, char** argv) {
    const std::string tool = argc > 1 ? argv[1] : "";
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
    std::unique_ptr<CorpusRun> run;
    auto corpus_run = [&]() -> const CorpusRun& {
        if (!run)
            run = std::make_unique<CorpusRun>(7);
        return *run;
    };
    criteria.emplace_back("quantum torus laws", torus_laws);
    criteria.emplace_back("seed mutation", seed_mutation);
    criteria.emplace_back("matchings and canonical submodules biject",
                          [&] { return corpus_run().result({"counts", "bijection"}, "strings of length <= 7"); });
    criteria.emplace_back("counting lemmas match the snake graph",
                          [&] { return corpus_run().result({"counting lemmas"}, "every (string, submodule, k, j)"); });
    criteria.emplace_back("valuations", [&] {
        return corpus_run().result({"valuations"}, "v path independent, v(P-)=v(P+)=0, v_gamma = v");
    });
    criteria.emplace_back("expansions equal mutated variables", expansion_oracle);
    criteria.emplace_back("factorization through B",
                          [&] { return corpus_run().result({"factorization"}, "every matching of every graph"); });
    criteria.emplace_back("Kronecker equality and recursions", kronecker);
    criteria.emplace_back("skein multiplication", skein);
    criteria.emplace_back("determinism", [&] { return determinism(tool); });

    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("uncaught: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::printf("criterion %zu %s: %s (%.2fs) %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    secs, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
