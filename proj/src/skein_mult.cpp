#include "qsurf/skein_mult.hpp"

#include <set>

namespace qsurf {

namespace {

constexpr int64_t kSkeinD = 4;

int64_t lambda_factor(const Surface& s) {
    int64_t d = s.uniform_d();
    if (kSkeinD % d != 0)
        throw Error(ErrorCode::InvalidArgument, "seed d = " + std::to_string(d) + " does not divide 4");
    return kSkeinD / d;
}

// Exponent e with r = q^{e/2} m, if any.
std::optional<int64_t> scalar_shift(const TorusElement& r, const TorusElement& m) {
    if (r.is_zero() || m.is_zero())
        return std::nullopt;
    const auto& [g, c] = *m.terms().begin();
    auto it = r.terms().find(g);
    if (it == r.terms().end())
        return std::nullopt;
    int64_t e = it->second.min_exp() - c.min_exp();
    if (!(m.shifted(e) == r))
        return std::nullopt;
    return e;
}

} // namespace

IntMatrix skein_lambda(const Surface& s) {
    int64_t f = lambda_factor(s);
    IntMatrix l = s.pair.lambda;
    for (auto& row : l)
        for (auto& x : row)
            x *= f;
    return l;
}

TorusElement arc_element(const Surface& s, const ArcRef& r) {
    if (r.kind == ArcRef::Kind::String)
        return quantum_expansion(s, r.word, kSkeinD).element;
    int idx = s.lattice_index(r.arc);
    IntVector g(s.rank(), 0);
    if (idx >= 0)
        g[static_cast<size_t>(idx)] = 1;
    return TorusElement::monomial(g);
}

size_t extension_count(const Surface& s, const StringWord& v, const StringWord& w) {
    return arrow_extensions(s, v, w).size() + overlap_extensions(s, v, w).size() + arrow_extensions(s, w, v).size() +
           overlap_extensions(s, w, v).size();
}

bool relative_exponent_check(const TorusElement& product, const TorusElement& m1, const TorusElement& m2,
                             int64_t lambda_twice) {
    // Strip each term with the other's claimed exponent, then read off what is left.
    auto e1 = scalar_shift(product - m2.shifted(lambda_twice - 2), m1);
    auto e2 = scalar_shift(product - m1.shifted(lambda_twice + 2), m2);
    return e1 && e2 && *e1 - *e2 == 4;
}

bool relative_exponent_check(const MultiplicationCertificate& c) {
    return relative_exponent_check(c.product, c.m1, c.m2, c.lambda_twice);
}

MultiplicationCertificate multiply_and_certify(const Surface& s, const StringWord& v, const StringWord& w) {
    const QuiverWithRelations& q = s.quiver;
    auto forward_a = arrow_extensions(s, v, w);
    auto forward_o = overlap_extensions(s, v, w);
    auto backward_a = arrow_extensions(s, w, v);
    auto backward_o = overlap_extensions(s, w, v);
    size_t total = forward_a.size() + forward_o.size() + backward_a.size() + backward_o.size();
    if (total != 1)
        throw Error(ErrorCode::NoSolution, "the pair " + format_string(q, v) + ", " + format_string(q, w) + " has " +
                                               std::to_string(total) + " extensions; exactly one is required");
    MultiplicationCertificate cert;
    cert.swapped = forward_a.empty() && forward_o.empty();
    auto arrows = cert.swapped ? backward_a : forward_a;
    auto overlaps = cert.swapped ? backward_o : forward_o;

    std::vector<SmoothingQuadruple> candidates;
    if (!arrows.empty()) {
        const ArrowExtension& e = arrows.front();
        cert.kind = ExtensionKind::Arrow;
        cert.v = e.v;
        cert.w = e.w;
        auto u1 = ArcRef::of_string(e.u1);
        std::vector<std::pair<std::string, ArcRef>> u2s{{"third side", e.u2_arc},
                                                         {"trivial at source", ArcRef::of_string(e.u2_candidates[0])},
                                                         {"trivial at target", ArcRef::of_string(e.u2_candidates[1])}};
        std::vector<std::tuple<std::string, ArcRef, ArcRef>> tails{
            {"arc truncations", e.u3_arc, e.u4_arc},
            {"string truncations", ArcRef::of_string(e.u3), ArcRef::of_string(e.u4)}};
        for (const auto& [l2, u2] : u2s)
            for (const auto& [l34, u3, u4] : tails)
                candidates.push_back({ExtensionKind::Arrow, u1, u2, u3, u4, l2 + ", " + l34});
    } else {
        const OverlapExtension& e = overlaps.front();
        cert.kind = ExtensionKind::Overlap;
        cert.v = e.v;
        cert.w = e.w;
        candidates.push_back({ExtensionKind::Overlap, ArcRef::of_string(e.u1), ArcRef::of_string(e.u2), e.u3, e.u4,
                              "overlap"});
    }

    const IntMatrix lam = skein_lambda(s);
    const TorusElement xv = arc_element(s, ArcRef::of_string(cert.v));
    const TorusElement xw = arc_element(s, ArcRef::of_string(cert.w));
    cert.product = torus_mul(xw, xv, lam);

    bool found = false;
    for (const SmoothingQuadruple& cand : candidates) {
        TorusElement x1 = arc_element(s, cand.u1), x2 = arc_element(s, cand.u2);
        TorusElement x3 = arc_element(s, cand.u3), x4 = arc_element(s, cand.u4);
        BarNormalized n1, n2;
        try {
            n1 = bar_normalize(torus_mul(x1, x2, lam));
            n2 = bar_normalize(torus_mul(x3, x4, lam));
        } catch (const Error& err) {
            if (err.code() == ErrorCode::NotNormalizable)
                continue;
            throw;
        }
        std::set<int64_t> lambdas;
        for (const auto& [m, sign] : {std::make_pair(&n1.element, 2), std::make_pair(&n2.element, -2)}) {
            const auto& [g, c] = *m->terms().begin();
            auto it = cert.product.terms().find(g);
            if (it == cert.product.terms().end())
                continue;
            for (const auto& [e, coef] : it->second.terms())
                for (const auto& [e1, coef1] : c.terms())
                    lambdas.insert(e - e1 - sign);
        }
        std::vector<int64_t> good;
        for (int64_t l : lambdas)
            if (n1.element.shifted(l + 2) + n2.element.shifted(l - 2) == cert.product)
                good.push_back(l);
        if (good.size() > 1)
            throw Error(ErrorCode::AmbiguousSolution, std::to_string(good.size()) + " values of lambda for " +
                                                          cand.label);
        if (good.empty())
            continue;
        cert.solvable.push_back(cand.label);
        if (found)
            continue;
        found = true;
        cert.quad = cand;
        cert.lambda_twice = good.front();
        cert.m1 = n1.element;
        cert.m2 = n2.element;
        cert.identity_verified = true;
        LaurentPoly lhs = specialize_q1(xw) * specialize_q1(xv);
        LaurentPoly rhs = specialize_q1(x1) * specialize_q1(x2) + specialize_q1(x3) * specialize_q1(x4);
        cert.classical_verified = lhs == rhs;
    }
    if (!found)
        throw Error(ErrorCode::NoSolution, "no smoothing candidate satisfies the identity for " +
                                               format_string(q, cert.v) + ", " + format_string(q, cert.w));
    return cert;
}

} // namespace qsurf
