#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsurf/error.hpp"

namespace qsurf {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<int64_t>;
using IntMatrix = std::vector<IntVector>;

// A value in (1/2)Z, stored doubled.
struct HalfInt {
    int64_t twice = 0;

    static HalfInt from_twice(int64_t t) { return HalfInt{t}; }
    static HalfInt from_int(int64_t v) { return HalfInt{2 * v}; }
    bool is_integer() const { return twice % 2 == 0; }
    HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
    HalfInt operator-() const { return HalfInt{-twice}; }
    auto operator<=>(const HalfInt&) const = default;
    std::string str() const;
};

// Laurent polynomial in q^{1/2}; keys are exponents of q^{1/2}.
class QPoly {
  public:
    using Map = std::map<int64_t, BigInt>;

    QPoly() = default;
    static QPoly monomial(int64_t twice_exp, const BigInt& coeff = 1);
    static QPoly constant(const BigInt& c) { return monomial(0, c); }

    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }
    int64_t min_exp() const { return terms_.begin()->first; }
    int64_t max_exp() const { return terms_.rbegin()->first; }

    void add_term(int64_t twice_exp, const BigInt& coeff);
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }

    QPoly shifted(int64_t twice) const;
    QPoly bar() const;
    // q^{1/2} -> q^{factor/2}
    QPoly rescaled(int64_t factor) const;
    BigInt at_one() const;
    bool nonnegative() const;
    // Exact quotient in Z[q^{+-1/2}]; throws NonExactDivision.
    QPoly divide_exact(const QPoly& d) const;

  private:
    Map terms_;
};

// Element of the based quantum torus: lattice vector -> coefficient.
class TorusElement {
  public:
    using Map = std::map<IntVector, QPoly>;

    TorusElement() = default;
    explicit TorusElement(size_t rank) : rank_(rank) {}

    static TorusElement monomial(const IntVector& g, const QPoly& c = QPoly::constant(1));
    static TorusElement one(size_t rank) { return monomial(IntVector(rank, 0)); }
    static TorusElement generator(size_t rank, size_t i);

    size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }
    // Number of (lattice vector, q-exponent) pairs.
    size_t term_count() const;

    void add_term(const IntVector& g, const QPoly& c);
    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    bool operator==(const TorusElement& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

    // Multiply by a central scalar.
    TorusElement scaled(const QPoly& c) const;
    TorusElement shifted(int64_t twice) const { return scaled(QPoly::monomial(twice)); }
    TorusElement bar() const;
    TorusElement rescaled(int64_t factor) const;
    bool is_bar_invariant() const { return bar() == *this; }
    bool nonnegative() const;

  private:
    void check_rank(const IntVector& g) const;

    size_t rank_ = 0;
    Map terms_;
};

struct CompatiblePair {
    IntMatrix b_tilde; // m x n
    IntMatrix lambda;  // m x m
    IntVector d;       // n

    size_t m() const { return lambda.size(); }
    size_t n() const { return b_tilde.empty() ? 0 : b_tilde[0].size(); }
};

int64_t lambda_form(const IntMatrix& lambda, const IntVector& g, const IntVector& h);

TorusElement torus_mul(const TorusElement& a, const TorusElement& b, const IntMatrix& lambda);
TorusElement torus_mul(const TorusElement& a, const TorusElement& b, const CompatiblePair& pair);

// b with b * X^g = a.
TorusElement torus_div_exact(const TorusElement& a, const IntVector& g, const IntMatrix& lambda);
TorusElement torus_div_exact(const TorusElement& a, const IntVector& g, const CompatiblePair& pair);

// y with y * b = a for an arbitrary nonzero b; throws NonExactDivision.
TorusElement torus_div_right(const TorusElement& a, const TorusElement& b, const IntMatrix& lambda);

struct BarNormalized {
    HalfInt shift;
    TorusElement element;
};
BarNormalized bar_normalize(const TorusElement& a);

// current_lambda gives the normalizing prefactor, torus_lambda multiplies in
// the torus the variables live in.
TorusElement cluster_monomial(const IntVector& a, const std::vector<TorusElement>& variables,
                              const IntMatrix& current_lambda, const IntMatrix& torus_lambda);

IntVector check_compatible(const IntMatrix& b_tilde, const IntMatrix& lambda);

std::string to_text(const QPoly& p);
std::string to_text(const TorusElement& a);
std::string format_vector(const IntVector& v);

} // namespace qsurf
