#ifndef YSYS_ZPOLY_HPP
#define YSYS_ZPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ysys {

/// Sparse Laurent polynomial in one variable z with integer coefficients.
///
/// Terms are kept sorted by exponent and never store a zero coefficient.
/// Negative exponents are allowed so that A(z^{-1}) products can be formed;
/// the Y-datum boundary rejects them. Coefficient arithmetic is checked.
class ZPoly {
public:
    using Term = std::pair<int, std::int64_t>;

    ZPoly() = default;
    ZPoly(std::int64_t constant);
    static ZPoly monomial(int exponent, std::int64_t coeff = 1);
    static ZPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    /// f(1): sum of coefficients.
    std::int64_t eval_at_one() const;
    /// f(z^{-1}).
    ZPoly reversed() const;

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator-(const ZPoly& a);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly&, const ZPoly&) = default;
    friend bool operator<(const ZPoly& a, const ZPoly& b) { return a.terms_ < b.terms_; }

    /// Human readable, e.g. "1 + z^2 - z".
    std::string to_string(const std::string& var = "z") const;

private:
    std::vector<Term> terms_;
};

/// The z-integer [n]_r = (1 - z^{rn}) / (1 - z^r) = 1 + z^r + ... + z^{r(n-1)}.
ZPoly z_integer(int n, int r);

} // namespace ysys

#endif
