#pragma once

#include "qsurf/expansion.hpp"

namespace qsurf {

enum class ExtensionKind { Arrow, Overlap };

struct SmoothingQuadruple {
    ExtensionKind kind = ExtensionKind::Arrow;
    ArcRef u1, u2, u3, u4;
    std::string label; // which candidate this is, for arrow extensions
};

struct MultiplicationCertificate {
    ExtensionKind kind = ExtensionKind::Arrow;
    // Roles after orienting the single extension; swapped is set when the
    // extension was found from w to v.
    StringWord v, w;
    bool swapped = false;
    SmoothingQuadruple quad;
    std::vector<std::string> solvable; // all candidate labels that satisfy the identity
    int64_t lambda_twice = 0;          // lambda in units of q^{1/2}
    TorusElement product;              // X_w X_v
    TorusElement m1, m2;               // bar-normalized smoothing products
    bool identity_verified = false;
    bool classical_verified = false;
};

// Number of arrow plus overlap extensions from v to w and from w to v.
size_t extension_count(const Surface& s, const StringWord& v, const StringWord& w);

// X_w X_v = q^{lambda+1} M1 + q^{lambda-1} M2 with M1, M2 the bar-normalized
// products of the smoothings. The lattice form is rescaled so that the seed
// has d = 4; q exponents are in that normalization.
MultiplicationCertificate multiply_and_certify(const Surface& s, const StringWord& v, const StringWord& w);

// Recovers the exponents of M1 and M2 in the product from the raw
// polynomials and checks they differ by q^2.
bool relative_exponent_check(const TorusElement& product, const TorusElement& m1, const TorusElement& m2,
                             int64_t lambda_twice);
bool relative_exponent_check(const MultiplicationCertificate& c);

// Expansion of an arc reference in the rescaled torus.
TorusElement arc_element(const Surface& s, const ArcRef& r);
IntMatrix skein_lambda(const Surface& s);

} // namespace qsurf
