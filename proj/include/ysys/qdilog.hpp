#ifndef YSYS_QDILOG_HPP
#define YSYS_QDILOG_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "ysys/matrix.hpp"
#include "ysys/polymat.hpp"
#include "ysys/ysystem.hpp"

namespace ysys {

/// Laurent polynomial in t = q^{1/2} with integer coefficients, stored densely.
class TPoly {
public:
    TPoly() = default;
    TPoly(long c) { if (c) { lo_ = 0; c_ = {mpz_class(c)}; } }
    static TPoly monomial(int e, const mpz_class& c = 1);

    bool is_zero() const { return c_.empty(); }
    int low() const { return lo_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    TPoly& operator+=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(const TPoly& a);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly shifted(int e) const;
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    int lo_ = 0;
    std::vector<mpz_class> c_;
};

/// Integer skew pairing <a,b> on Z^R.
struct SkewForm {
    IntMatrix m;
    explicit SkewForm(IntMatrix b);
    std::int64_t operator()(const std::vector<int>& a, const std::vector<int>& b) const;
    std::size_t rank() const { return m.rows(); }
};

/// Truncated series in the quantum torus x^a x^b = q^{<a,b>/2} x^{a+b},
/// supported on the nonnegative cone, total degree <= D.
///
/// The coefficient of x^a is N_a(t) / Den_{|a|}, with the universal
/// denominator Den_d = prod_{j<=d} (t^{2j} - 1)^{floor(d/j)}; only the
/// integer numerators N_a are stored.
class TorusSeries {
public:
    TorusSeries(std::shared_ptr<const SkewForm> form, int degree);
    static TorusSeries one(std::shared_ptr<const SkewForm> form, int degree);
    /// c x^a with c a Laurent polynomial in t (not divided by anything).
    static TorusSeries monomial(std::shared_ptr<const SkewForm> form, int degree, const std::vector<int>& a,
                                const TPoly& c = TPoly(1));

    int degree() const { return degree_; }
    const std::shared_ptr<const SkewForm>& form() const { return form_; }
    const std::map<std::vector<int>, TPoly>& numerators() const { return t_; }

    void add_numerator(const std::vector<int>& a, const TPoly& n);
    friend TorusSeries operator*(const TorusSeries& a, const TorusSeries& b);
    friend bool operator==(const TorusSeries& a, const TorusSeries& b) { return a.degree_ == b.degree_ && a.t_ == b.t_; }

    /// Least monomial (in lexicographic order) where the two series differ.
    std::optional<std::vector<int>> first_difference(const TorusSeries& o) const;
    nlohmann::json to_json() const;

private:
    std::shared_ptr<const SkewForm> form_;
    int degree_;
    std::map<std::vector<int>, TPoly> t_;
};

/// prod_{j<=d} (t^{2j} - 1)^{e_j}.
TPoly universal_denominator(int d);

/// Psi_q(x^beta)^sign truncated at degree D, where
/// Psi_q(qy) = (1 + q^{1/2} y) Psi_q(y), Psi_q(0) = 1.
TorusSeries dilog_factor(std::shared_ptr<const SkewForm> form, const std::vector<int>& beta, int sign, int degree);

struct DtOptions {
    bool reverse_front = false; ///< mutate each front set in reverse order
};

/// Ordered product of Psi(x^{eps c})^{eps} along `steps` evolution steps
/// (backward when negative). Throws PropertyError when the endpoint is not a
/// reddening point.
TorusSeries dt_invariant(const QuiverData& q, int steps, int degree, const DtOptions& opt = {});

struct IdentityResult {
    bool holds = false;
    int h_plus = 0;
    int h_minus = 0;
    int degree = 0;
    std::optional<std::vector<int>> first_mismatch;
    std::size_t terms = 0;
};

/// E(mu^{h+}) == E(mu^{-h-}) below the given degree.
IdentityResult identity_check(const MatrixPair& p, int degree, int reddening_bound = 200);

} // namespace ysys

#endif
