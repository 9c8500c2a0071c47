#ifndef YSYS_MPOLY_HPP
#define YSYS_MPOLY_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ysys {

inline constexpr int kMaxVars = 16;

/// Exponent vector; lexicographic order on the array is the monomial order.
struct Monomial {
    std::array<std::int16_t, kMaxVars> e{};

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient(const Monomial& divisor) const;
    int total_degree() const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Prime used for modular screening of identities.
inline constexpr std::uint64_t kScreenPrime = (std::uint64_t{1} << 61) - 1;
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e);

/// Sparse multivariate polynomial with nonnegative exponents and checked
/// int64 coefficients. Terms are sorted by descending monomial.
class MPoly {
public:
    using Term = std::pair<Monomial, std::int64_t>;

    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly constant(int nvars, std::int64_t c);
    static MPoly variable(int nvars, int v);
    static MPoly monomial(int nvars, const Monomial& m, std::int64_t c = 1);
    /// Collects like terms; drops zeros.
    static MPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Term& leading() const { return terms_.front(); }
    const Term& trailing() const { return terms_.back(); }

    std::int64_t content() const;          ///< gcd of coefficients, sign of the leading one
    Monomial min_monomial() const;         ///< componentwise minimum exponent
    Monomial max_exponents() const;        ///< componentwise maximum exponent
    std::int64_t sum_of_coefficients() const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(std::int64_t c) const;
    MPoly times_monomial(const Monomial& m) const;
    /// Divides every coefficient by c (must divide exactly) and the monomial m.
    MPoly divided_by(std::int64_t c, const Monomial& m) const;
    MPoly pow(int k) const;

    /// this / d when d divides this exactly, std::nullopt otherwise.
    std::optional<MPoly> exact_divide(const MPoly& d) const;

    std::uint64_t eval_mod(const std::vector<std::uint64_t>& point) const;
    mpq_class eval(const std::vector<mpq_class>& point) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    std::size_t hash() const;
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;
};

} // namespace ysys

#endif
