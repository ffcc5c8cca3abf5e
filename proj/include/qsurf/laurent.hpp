#pragma once

#include <map>
#include <string>

#include "qsurf/torus.hpp"

namespace qsurf {

// Commutative Laurent polynomial over Z; used for q = 1 checks.
class LaurentPoly {
  public:
    using Map = std::map<IntVector, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(size_t rank) : rank_(rank) {}
    static LaurentPoly monomial(const IntVector& g, const BigInt& c = 1);
    static LaurentPoly one(size_t rank) { return monomial(IntVector(rank, 0)); }
    static LaurentPoly generator(size_t rank, size_t i);

    size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    void add_term(const IntVector& g, const BigInt& c);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

    // Exact quotient; throws NonExactDivision.
    LaurentPoly divide_exact(const LaurentPoly& d) const;
    bool positive() const;

  private:
    size_t rank_ = 0;
    Map terms_;
};

LaurentPoly specialize_q1(const TorusElement& a);
std::string to_text(const LaurentPoly& p);

} // namespace qsurf
