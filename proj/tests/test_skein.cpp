#include <doctest.h>

#include "common.hpp"

using namespace qsurf;
using qtest::str;

namespace {
ErrorCode certify_error(const Surface& s, const StringWord& v, const StringWord& w) {
    try {
        multiply_and_certify(s, v, w);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Mismatch;
}
} // namespace

TEST_CASE("pentagon simples") {
    Surface p = qtest::corpus("pentagon");
    CHECK(extension_count(p, str(p, "1"), str(p, "2")) == 1);
    MultiplicationCertificate c = multiply_and_certify(p, str(p, "1"), str(p, "2"));
    CHECK(c.kind == ExtensionKind::Arrow);
    CHECK(c.identity_verified);
    CHECK(c.classical_verified);
    CHECK(relative_exponent_check(c));
    CHECK_FALSE(relative_exponent_check(c.product, c.m1, c.m2.shifted(1), c.lambda_twice));
    // X_w X_v = q^{lambda+1} M1 + q^{lambda-1} M2, recomputed here.
    TorusElement rhs = c.m1.shifted(c.lambda_twice + 2) + c.m2.shifted(c.lambda_twice - 2);
    CHECK(c.product == rhs);
    CHECK(c.product == torus_mul(arc_element(p, ArcRef::of_string(c.w)), arc_element(p, ArcRef::of_string(c.v)),
                                 skein_lambda(p)));
}

TEST_CASE("preconditions") {
    Surface p = qtest::corpus("pentagon");
    CHECK(certify_error(p, str(p, "1"), str(p, "1")) == ErrorCode::NoSolution);
    Surface a = qtest::corpus("annulus");
    // Two arrows give a two-dimensional extension space.
    CHECK(extension_count(a, trivial_string(1), trivial_string(2)) == 2);
    CHECK(certify_error(a, trivial_string(1), trivial_string(2)) == ErrorCode::NoSolution);
}

TEST_CASE("arc elements") {
    Surface a = qtest::corpus("annulus");
    CHECK(arc_element(a, ArcRef::of_arc(1)) == qtest::mono({1, 0}));
    CHECK(arc_element(a, ArcRef::of_arc(3)) == TorusElement::one(2));
    CHECK(quantum_expansion(a, trivial_string(1), 4).element == arc_element(a, ArcRef::of_string(trivial_string(1))));
}

TEST_CASE("every single-extension pair on the corpus certifies") {
    size_t pairs = 0;
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        auto strings = enumerate_strings(s.quiver, 3);
        for (size_t i = 0; i < strings.size(); ++i)
            for (size_t j = i; j < strings.size(); ++j) {
                if (extension_count(s, strings[i], strings[j]) != 1)
                    continue;
                ++pairs;
                MultiplicationCertificate c = multiply_and_certify(s, strings[i], strings[j]);
                CHECK(c.identity_verified);
                CHECK(c.classical_verified);
                CHECK(relative_exponent_check(c));
                CHECK_FALSE(relative_exponent_check(c.product, c.m1, c.m2.shifted(1), c.lambda_twice));
                if (c.kind == ExtensionKind::Arrow)
                    CHECK(c.quad.label == "third side, arc truncations");
            }
    }
    CHECK(pairs > 20);
}
