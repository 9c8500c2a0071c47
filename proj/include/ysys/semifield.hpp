#ifndef YSYS_SEMIFIELD_HPP
#define YSYS_SEMIFIELD_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ysys/mpoly.hpp"

namespace ysys {

// Three semifields share one value interface so that seeds and Y-system
// evolution are generic:  a + b,  a * b,  a / b,  inv(a),  pow(a, k),
// one_like(a),  a == b.

// ---------------------------------------------------------------------------
// Tropical semifield Trop(y): Laurent monomials, addition = componentwise min.

struct TropicalElem {
    std::vector<std::int64_t> exponents;

    static TropicalElem generator(std::size_t n, std::size_t v);
    friend bool operator==(const TropicalElem&, const TropicalElem&) = default;
};

/// Componentwise minimum of exponent vectors.
TropicalElem trop_add(const TropicalElem& a, const TropicalElem& b);
TropicalElem operator+(const TropicalElem& a, const TropicalElem& b);
TropicalElem operator*(const TropicalElem& a, const TropicalElem& b);
TropicalElem operator/(const TropicalElem& a, const TropicalElem& b);
TropicalElem inv(const TropicalElem& a);
TropicalElem pow(const TropicalElem& a, std::int64_t k);
TropicalElem one_like(const TropicalElem& a);

// ---------------------------------------------------------------------------
// Positive rationals.

class PosRat {
public:
    PosRat() : v_(1) {}
    PosRat(const mpq_class& v);
    PosRat(long num, long den = 1);

    const mpq_class& value() const { return v_; }
    std::string to_string() const { return v_.get_str(); }

    friend PosRat operator+(const PosRat& a, const PosRat& b) { return PosRat(Raw{}, a.v_ + b.v_); }
    friend PosRat operator*(const PosRat& a, const PosRat& b) { return PosRat(Raw{}, a.v_ * b.v_); }
    friend PosRat operator/(const PosRat& a, const PosRat& b) { return PosRat(Raw{}, a.v_ / b.v_); }
    friend bool operator==(const PosRat& a, const PosRat& b) { return a.v_ == b.v_; }

private:
    struct Raw {};
    PosRat(Raw, mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    mpq_class v_;
};

PosRat inv(const PosRat& a);
PosRat pow(const PosRat& a, std::int64_t k);
inline PosRat one_like(const PosRat&) { return PosRat(1); }

// ---------------------------------------------------------------------------
// Universal semifield Q_{>0}(y): subtraction-free rational functions.
//
// A value is stored in factored form
//     coeff * y^mono * prod_f P_f^{e_f}
// where each P_f is a primitive polynomial with at least two terms and no
// monomial factor, interned in a FactorTable shared by all values of one
// computation. Sums are expanded and split again by trial division against
// the table, so the factors of the universal Y-seed stay small without a
// multivariate gcd. Equality is decided exactly by cross-multiplication
// after cancelling common factors; a modular evaluation screen may reject
// unequal values early but never accepts on its own.

using FactorId = std::uint32_t;

class FactorTable {
public:
    explicit FactorTable(int nvars, std::size_t monomial_cap = 10000);

    int nvars() const { return nvars_; }
    std::size_t monomial_cap() const { return cap_; }
    void set_monomial_cap(std::size_t cap) { cap_ = cap; }
    std::size_t screen_points() const { return screen_points_; }
    void set_screen_points(std::size_t k) { screen_points_ = k; }

    /// p must be normalised (primitive, positive leading coefficient, no
    /// monomial content, at least two terms).
    FactorId intern(const MPoly& p);
    const MPoly& factor(FactorId id) const;
    std::size_t size() const;

    /// Random evaluation points for the screen; fixed seed, reproducible.
    const std::vector<std::vector<std::uint64_t>>& screen_points_mod();
    std::uint64_t factor_value_mod(FactorId id, std::size_t point);

private:
    int nvars_;
    std::size_t cap_;
    std::size_t screen_points_ = 8;
    mutable std::mutex mu_;
    std::vector<MPoly> polys_;
    std::unordered_multimap<std::size_t, FactorId> index_;
    std::vector<std::vector<std::uint64_t>> points_;
    std::vector<std::vector<std::uint64_t>> values_;
};

class RatFun {
public:
    using FactorPower = std::pair<FactorId, std::int32_t>;

    RatFun() = default;
    static RatFun constant(std::shared_ptr<FactorTable> table, const mpq_class& c);
    static RatFun generator(std::shared_ptr<FactorTable> table, int v);
    /// Any nonzero polynomial; it is normalised and split against the table.
    static RatFun from_poly(std::shared_ptr<FactorTable> table, const MPoly& p);
    static RatFun from_fraction(std::shared_ptr<FactorTable> table, const MPoly& num, const MPoly& den);

    const std::shared_ptr<FactorTable>& table() const { return table_; }
    const mpq_class& coeff() const { return coeff_; }
    const std::vector<std::int32_t>& mono() const { return mono_; }
    const std::vector<FactorPower>& factors() const { return factors_; }

    /// Expanded numerator and denominator (coefficient content is folded in).
    MPoly numerator() const;
    MPoly denominator() const;
    /// Total number of stored factor terms; a rough size measure.
    std::size_t weight() const;

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend RatFun inv(const RatFun& a);
    friend RatFun pow(const RatFun& a, std::int64_t k);

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::shared_ptr<FactorTable> table_;
    mpq_class coeff_ = 1;
    std::vector<std::int32_t> mono_;
    std::vector<FactorPower> factors_;

    friend RatFun times_poly(const RatFun& g, const MPoly& s);
    friend bool ratfun_equal(const RatFun& a, const RatFun& b);
};

RatFun one_like(const RatFun& a);

/// Exact equality by cross-multiplication (after the optional screen).
bool ratfun_equal(const RatFun& a, const RatFun& b);

/// Image under the semifield homomorphism y_v -> assignment[v].
PosRat semifield_eval(const RatFun& f, const std::vector<PosRat>& assignment);

} // namespace ysys

#endif
