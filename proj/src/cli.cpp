#include "qsurf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "qsurf/seeds.hpp"
#include "qsurf/verify.hpp"

namespace qsurf {

namespace {

using json = nlohmann::json;

struct Options {
    std::string surface;
    std::string format = "text";
    size_t jobs = 1;
    bool frozen = false;
    bool principal = false;
    std::string string;
    std::string v, w;
    std::string seq;
    std::string family = "G";
    int s = 0;
    bool q1 = false;
    bool terms = false;
    bool unit = false;
    bool check = false;
    bool valuations = false;
    size_t max_length = 5;
    size_t mutation_depth = 0;
    int kronecker = -1;
};

size_t default_jobs() {
    if (const char* env = std::getenv("QSURF_JOBS")) {
        try {
            long v = std::stol(env);
            if (v > 0)
                return static_cast<size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

SeedMode seed_mode(const Options& o) {
    if (o.frozen && o.principal)
        throw Error(ErrorCode::InvalidArgument, "--frozen and --principal are exclusive");
    return o.frozen ? SeedMode::Frozen : o.principal ? SeedMode::Principal : SeedMode::Auto;
}

Surface need_surface(const Options& o) {
    if (o.surface.empty())
        throw Error(ErrorCode::InvalidArgument, "--surface is required");
    return load_surface(o.surface, seed_mode(o));
}

StringWord need_string(const Surface& s, const std::string& text, const char* flag) {
    if (text.empty())
        throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
    StringWord w = parse_string(s.quiver, text);
    validate_string(s.quiver, w);
    return w;
}

json to_json(const IntVector& v) { return json(v); }
json to_json(const IntMatrix& m) { return json(m); }

std::string matrix_text(const IntMatrix& m) {
    std::string r = "[";
    for (size_t i = 0; i < m.size(); ++i)
        r += (i ? "," : "") + format_vector(m[i]);
    return r + "]";
}

std::string set_text(const IndexSet& s) {
    std::string r = "{";
    for (size_t i = 0; i < s.size(); ++i)
        r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

std::string half_text(int64_t twice) { return HalfInt::from_twice(twice).str(); }

bool structured(const Options& o) { return o.format == "structured"; }

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int cmd_validate(const Options& o, std::ostream& out) {
    Surface s = need_surface(o);
    GentleReport g = check_gentle(s.quiver);
    if (structured(o)) {
        emit(out, {{"type", "surface"},
                   {"name", s.name},
                   {"arcs", s.triangulation.m()},
                   {"internal_arcs", s.n()},
                   {"triangles", s.triangulation.triangles().size()},
                   {"arrows", s.quiver.arrows.size()},
                   {"relations", s.quiver.relations.size()},
                   {"gentle", g.ok},
                   {"seed", s.frozen ? "frozen" : "principal"},
                   {"b_tilde", to_json(s.pair.b_tilde)},
                   {"lambda", to_json(s.pair.lambda)},
                   {"d", to_json(s.pair.d)},
                   {"ok", true}});
        return 0;
    }
    out << "surface: " << s.name << "\n";
    out << "arcs: " << s.triangulation.m() << " (" << s.n() << " internal)\n";
    out << "triangles: " << s.triangulation.triangles().size() << "\n";
    out << "quiver: " << s.quiver.arrows.size() << " arrows, " << s.quiver.relations.size() << " relations, "
        << (g.ok ? "gentle" : "not gentle") << "\n";
    for (const Arrow& a : s.quiver.arrows)
        out << "  " << a.name << ": " << a.source << " -> " << a.target << "\n";
    out << "seed: " << (s.frozen ? "frozen boundary" : "principal") << ", d = " << format_vector(s.pair.d) << "\n";
    out << "B~: " << matrix_text(s.pair.b_tilde) << "\n";
    out << "lambda: " << matrix_text(s.pair.lambda) << "\n";
    out << "ok\n";
    return 0;
}

int cmd_expand(const Options& o, std::ostream& out) {
    Surface s = need_surface(o);
    StringWord w = need_string(s, o.string, "--string");
    ExpansionResult r = quantum_expansion(s, w, o.unit ? 1 : 0);
    std::string ws = format_string(s.quiver, w);
    if (structured(o)) {
        json head{{"type", "expansion"}, {"string", ws}, {"scale", r.scale}, {"element", to_text(r.element)},
                  {"terms", r.terms.size()}};
        if (o.q1)
            head["q1"] = to_text(classical_specialization(r));
        emit(out, head);
        if (o.terms)
            for (const ExpansionTerm& t : r.terms)
                emit(out, {{"type", "term"},
                           {"index_set", t.index_set},
                           {"dimension", to_json(t.dimension)},
                           {"valuation", t.valuation},
                           {"exponent", to_json(t.exponent)}});
        return 0;
    }
    out << "string: " << ws << "\n";
    out << "X = " << to_text(r.element) << "\n";
    if (o.q1)
        out << "q=1: " << to_text(classical_specialization(r)) << "\n";
    if (o.terms)
        for (const ExpansionTerm& t : r.terms)
            out << "  " << set_text(t.index_set) << " dim " << format_vector(t.dimension) << " v " << t.valuation
                << " exponent " << format_vector(t.exponent) << "\n";
    return 0;
}

int cmd_matchings(const Options& o, std::ostream& out) {
    Surface s = need_surface(o);
    StringWord w = need_string(s, o.string, "--string");
    SnakeGraph g = label_snake(w, s);
    MatchingValuation v = valuation_v(g);
    PerfectMatching lo = minimal_matching(g), hi = maximal_matching(g);
    if (!structured(o))
        out << "string: " << format_string(s.quiver, w) << "\n"
            << "tiles: " << g.d() << ", edges: " << g.edges.size() << ", matchings: " << v.size() << "\n";
    for (const auto& [p, val] : v) {
        IndexSet iset = enclosed_tiles(g, p);
        IntVector x = x_of_matching(s, g, p);
        std::string tag = p == lo ? "P-" : p == hi ? "P+" : "";
        if (structured(o)) {
            std::vector<std::string> names;
            for (int e : p)
                names.push_back(g.edge_name(e));
            emit(out, {{"type", "matching"}, {"edges", names}, {"enclosed", iset}, {"valuation", val},
                       {"exponent", to_json(x)}, {"extreme", tag}});
        } else {
            out << "  " << g.matching_text(p) << " enclosed " << set_text(iset) << " v " << val << " x "
                << format_vector(x) << (tag.empty() ? "" : " " + tag) << "\n";
        }
    }
    return 0;
}

int cmd_submodules(const Options& o, std::ostream& out) {
    Surface s = need_surface(o);
    StringWord w = need_string(s, o.string, "--string");
    SubmoduleValuation vg;
    if (o.valuations)
        vg = valuation_v_gamma(s, w);
    auto subs = enumerate_canonical_submodules(w);
    if (!structured(o))
        out << "string: " << format_string(s.quiver, w) << "\n"
            << "canonical submodules: " << subs.size() << "\n";
    for (const CanonicalSubmodule& c : subs) {
        IntVector dim = dimension_vector(w, c.index_set, s.n());
        if (structured(o)) {
            json j{{"type", "submodule"}, {"index_set", c.index_set}, {"dimension", to_json(dim)}};
            if (o.valuations)
                j["valuation"] = vg.at(c.index_set);
            emit(out, j);
        } else {
            out << "  " << set_text(c.index_set) << " dim " << format_vector(dim);
            if (o.valuations)
                out << " v " << vg.at(c.index_set);
            out << "\n";
        }
    }
    return 0;
}

std::vector<size_t> parse_seq(const std::string& text) {
    std::vector<size_t> ks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            long k = std::stol(item, &used);
            if (used != item.size() || k < 1)
                throw std::invalid_argument(item);
            ks.push_back(static_cast<size_t>(k));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "--seq: bad entry \"" + item + "\"");
        }
    }
    return ks;
}

int cmd_mutate(const Options& o, std::ostream& out) {
    Surface s = need_surface(o);
    std::vector<size_t> ks = parse_seq(o.seq);
    QuantumSeed seed = mutation_sequence(QuantumSeed::initial(s.pair), ks);
    if (structured(o)) {
        std::vector<std::string> vars;
        for (const auto& x : seed.cluster)
            vars.push_back(to_text(x));
        emit(out, {{"type", "seed"}, {"sequence", ks}, {"b_tilde", to_json(seed.pair.b_tilde)},
                   {"lambda", to_json(seed.pair.lambda)}, {"cluster", vars}});
        return 0;
    }
    out << "sequence: " << o.seq << "\n";
    out << "B~: " << matrix_text(seed.pair.b_tilde) << "\n";
    out << "lambda: " << matrix_text(seed.pair.lambda) << "\n";
    for (size_t i = 0; i < seed.cluster.size(); ++i)
        out << "X" << i + 1 << " = " << to_text(seed.cluster[i]) << "\n";
    return 0;
}

void report_checks(const Options& o, std::ostream& out, const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks) {
        if (structured(o)) {
            json j{{"type", "check"}, {"name", c.name}, {"pass", c.pass}, {"cases", c.cases}, {"skipped", c.skipped}};
            if (!c.pass)
                j["detail"] = c.detail;
            emit(out, j);
            continue;
        }
        out << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.cases << " cases";
        if (c.skipped)
            out << ", " << c.skipped << " skipped";
        out << ")";
        if (!c.pass)
            out << ": " << c.detail;
        out << "\n";
    }
}

bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int cmd_kronecker(const Options& o, std::ostream& out) {
    Surface a = o.surface.empty() ? kronecker_surface() : need_surface(o);
    if (o.family != "G" && o.family != "H")
        throw Error(ErrorCode::InvalidArgument, "--family must be G or H");
    Family f = o.family == "G" ? Family::G : Family::H;
    TorusElement r = r_s(a, f, o.s);
    std::string name = (f == Family::G ? "r_" : "h_") + std::to_string(o.s);
    WeightedSnake ws = build_weighted(a, f, o.s);
    if (structured(o))
        emit(out, {{"type", "kronecker"}, {"name", name}, {"string", format_string(a.quiver, ws.word)},
                   {"element", to_text(r)}});
    else
        out << name << " (" << format_string(a.quiver, ws.word) << ") = " << to_text(r) << "\n";
    if (!o.check)
        return 0;
    std::vector<CheckResult> checks{CheckResult("equality"), CheckResult("expansion"), CheckResult("recursions")};
    EqualityReport e = equality_check(a, f, o.s);
    checks[0].cases = 1;
    checks[0].pass = e.equal;
    if (!e.equal)
        checks[0].detail = e.mismatches.front();
    checks[1].cases = 1;
    checks[1].pass = r == quantum_expansion(a, ws.word).element;
    if (!checks[1].pass)
        checks[1].detail = first_difference(r, quantum_expansion(a, ws.word).element);
    if (o.s >= 1) {
        LemmaReport l = recursion_lemma_checks(a, o.s);
        for (const auto& [k, t] : l.tallies)
            checks[2].cases += static_cast<size_t>(t.first + t.second);
        checks[2].pass = l.ok;
        checks[2].detail = l.first_failure;
    } else {
        checks[2].skipped = 1;
    }
    report_checks(o, out, checks);
    return all_pass(checks) ? 0 : 1;
}

int cmd_skein(const Options& o, std::ostream& out) {
    Surface s = need_surface(o);
    StringWord v = need_string(s, o.v, "--v");
    StringWord w = need_string(s, o.w, "--w");
    MultiplicationCertificate c = multiply_and_certify(s, v, w);
    bool rel = relative_exponent_check(c);
    auto arc = [&](const ArcRef& r) {
        if (r.kind == ArcRef::Kind::Arc)
            return format_arc_ref(s, r);
        return format_string(s.quiver, r.word);
    };
    const char* kind = c.kind == ExtensionKind::Arrow ? "arrow" : "overlap";
    if (structured(o)) {
        emit(out, {{"type", "skein"},
                   {"kind", kind},
                   {"v", format_string(s.quiver, c.v)},
                   {"w", format_string(s.quiver, c.w)},
                   {"swapped", c.swapped},
                   {"u1", arc(c.quad.u1)},
                   {"u2", arc(c.quad.u2)},
                   {"u3", arc(c.quad.u3)},
                   {"u4", arc(c.quad.u4)},
                   {"candidate", c.quad.label},
                   {"lambda", half_text(c.lambda_twice)},
                   {"identity", c.identity_verified},
                   {"classical", c.classical_verified},
                   {"relative_exponent", rel}});
    } else {
        out << "extension: " << kind << (c.swapped ? " (from w to v)" : "") << "\n";
        out << "v: " << format_string(s.quiver, c.v) << "\n";
        out << "w: " << format_string(s.quiver, c.w) << "\n";
        out << "u1: " << arc(c.quad.u1) << "\n";
        out << "u2: " << arc(c.quad.u2) << "\n";
        out << "u3: " << arc(c.quad.u3) << "\n";
        out << "u4: " << arc(c.quad.u4) << "\n";
        out << "candidate: " << c.quad.label << "\n";
        out << "lambda: " << half_text(c.lambda_twice) << "\n";
        out << "X_w X_v = " << to_text(c.product) << "\n";
        out << "M1 = " << to_text(c.m1) << "\n";
        out << "M2 = " << to_text(c.m2) << "\n";
        out << "identity: " << (c.identity_verified ? "exact" : "fails") << "\n";
        out << "q=1 smoothing: " << (c.classical_verified ? "holds" : "fails") << "\n";
        out << "relative exponent: " << (rel ? "holds" : "fails") << "\n";
    }
    return c.identity_verified && c.classical_verified && rel ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<CheckResult> checks;
    auto stage = [&](const std::string& name, const std::function<void()>& fn) {
        CheckResult c(name);
        c.cases = 1;
        try {
            fn();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        checks.push_back(c);
        return c.pass;
    };
    if (o.surface.empty())
        throw Error(ErrorCode::InvalidArgument, "--surface is required");
    std::optional<Triangulation> t;
    std::optional<Surface> s;
    bool ok = stage("triangulation", [&] { t = Triangulation::from_file(o.surface); }) &&
              stage("gentle quiver", [&] {
                  GentleReport g = check_gentle(build_quiver(*t));
                  if (!g.ok)
                      throw Error(ErrorCode::InvalidTriangulation, g.reason);
              }) &&
              stage("compatible pair", [&] { s = load_surface(o.surface, seed_mode(o)); });
    if (ok) {
        VerifyOptions vo;
        vo.max_length = o.max_length;
        vo.mutation_depth = o.mutation_depth;
        vo.kronecker_s = o.kronecker;
        vo.jobs = o.jobs;
        for (auto& c : verify_surface(*s, vo))
            checks.push_back(c);
    }
    report_checks(o, out, checks);
    return all_pass(checks) ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    o.jobs = default_jobs();
    CLI::App app{"Quantum cluster expansions for triangulated surfaces", "qsurf"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--jobs", o.jobs, "Worker threads (default: QSURF_JOBS or 1)")->check(CLI::PositiveNumber);

    auto surface_opts = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--surface", o.surface, "Triangulation file (JSON)");
        if (required)
            opt->required();
        c->add_flag("--frozen", o.frozen, "Keep boundary arcs as frozen generators");
        c->add_flag("--principal", o.principal, "Evaluate boundary arcs to 1");
    };
    CLI::App* validate = app.add_subcommand("validate", "Check a triangulation and its seed");
    surface_opts(validate, true);
    CLI::App* verify = app.add_subcommand("verify", "Run the oracle-equivalence suite");
    surface_opts(verify, true);
    verify->add_option("--max-length", o.max_length, "Longest string checked");
    verify->add_option("--mutation-depth", o.mutation_depth, "Depth of the mutation oracle (0 skips)");
    verify->add_option("--kronecker", o.kronecker, "Also check the Kronecker family up to this s");
    CLI::App* expand = app.add_subcommand("expand", "Quantum Laurent expansion of a string");
    surface_opts(expand, true);
    expand->add_option("--string", o.string, "String, e.g. \"1 >a> 2 <b< 1\"")->required();
    expand->add_flag("--q1", o.q1, "Also print the classical specialization");
    expand->add_flag("--terms", o.terms, "Print the per-term table");
    expand->add_flag("--unit", o.unit, "Use q^{v/2} instead of q^{d v/2}");
    CLI::App* matchings = app.add_subcommand("matchings", "Perfect matchings of the snake graph");
    surface_opts(matchings, true);
    matchings->add_option("--string", o.string, "String")->required();
    CLI::App* submodules = app.add_subcommand("submodules", "Canonical submodules of a string module");
    surface_opts(submodules, true);
    submodules->add_option("--string", o.string, "String")->required();
    submodules->add_flag("--valuations", o.valuations, "Print module-side valuations");
    CLI::App* mutate = app.add_subcommand("mutate", "Mutate the initial seed");
    surface_opts(mutate, true);
    mutate->add_option("--seq", o.seq, "Comma-separated arcs, e.g. 1,2,1")->required();
    CLI::App* kron = app.add_subcommand("kronecker", "The Kronecker family on the annulus");
    surface_opts(kron, false);
    kron->add_option("--s", o.s, "Index s")->required()->check(CLI::NonNegativeNumber);
    kron->add_option("--family", o.family, "G or H");
    kron->add_flag("--check", o.check, "Check the equality and the recursions");
    CLI::App* skein = app.add_subcommand("skein-multiply", "Certify the product of two strings");
    surface_opts(skein, true);
    skein->add_option("--v", o.v, "First string")->required();
    skein->add_option("--w", o.w, "Second string")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (validate->parsed())
            return cmd_validate(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (expand->parsed())
            return cmd_expand(o, out);
        if (matchings->parsed())
            return cmd_matchings(o, out);
        if (submodules->parsed())
            return cmd_submodules(o, out);
        if (mutate->parsed())
            return cmd_mutate(o, out);
        if (kron->parsed())
            return cmd_kronecker(o, out);
        if (skein->parsed())
            return cmd_skein(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace qsurf
