#ifndef YSYS_NAHM_HPP
#define YSYS_NAHM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "ysys/matrix.hpp"
#include "ysys/polymat.hpp"

namespace ysys {

using QMat = Matrix<mpq_class>;

QMat to_qmat(const IntMatrix& m);
QMat qmat_mul(const QMat& a, const QMat& b);
/// Throws ValidationError for a singular matrix.
QMat qmat_inverse(const QMat& a);
bool is_symmetric(const QMat& a);
/// Sylvester's criterion on the leading principal minors, exactly.
bool is_positive_definite(const QMat& a);
std::string to_string(const QMat& m);
nlohmann::json to_json(const QMat& m);

struct NahmMatrix {
    QMat K;
    bool symmetric = false;
    bool positive_definite = false;
};

/// K = A_+(1)^{-1} A_-(1).
NahmMatrix compute_K(const MatrixPair& p);

/// Truncated q-series with rational exponents over one common denominator.
class QSeries {
public:
    QSeries(mpq_class order = 0) : order_(std::move(order)) {}

    /// Integer exponents 0..order-1, coefficients given densely.
    static QSeries from_dense(const std::vector<mpz_class>& coeffs, const mpq_class& order);

    const mpq_class& order() const { return order_; }
    std::int64_t denominator() const { return den_; }
    /// exponent -> coefficient, exponents below the order, zero coefficients dropped.
    std::map<mpq_class, mpq_class> terms() const;
    mpq_class coefficient(const mpq_class& exponent) const;

    /// Adds c q^e when e < order.
    void add_term(const mpq_class& e, const mpq_class& c);
    /// this += q^shift * s (terms at or beyond the order are dropped).
    void add_shifted(const QSeries& s, const mpq_class& shift, const mpq_class& scale = 1);

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.terms() == b.terms() && a.order_ == b.order_; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    nlohmann::json to_json() const;
    std::string to_string() const;

private:
    void rescale(std::int64_t den);
    mpq_class order_;
    std::int64_t den_ = 1;
    std::map<std::int64_t, mpq_class> t_; // numerator of exponent over den_
};

/// 1/(q)_n truncated below q^order.
QSeries pochhammer_inverse(int n, int order);

enum class NahmStrategy { box, shells };

struct NahmOptions {
    NahmStrategy strategy = NahmStrategy::box;
    std::int64_t n_max = 10000;        ///< cap on every summation index
    std::size_t max_points = 5000000;  ///< cap on enumerated lattice points
};

/// sum over n in N^I of q^{n^T K n / 2 + n^T B + C} / prod (q)_{n_i}, exponents < order.
QSeries nahm_expand(const QMat& K, const std::vector<mpq_class>& B, const mpq_class& C, int order,
                    const NahmOptions& opt = {});

/// prod over n = +-residue mod 5 of 1/(1 - q^n), exponents < order.
QSeries rogers_ramanujan_product(int residue, int order);

struct Table2Row {
    std::string name;    ///< "table1:1", "table1:1op", ...
    int id;
    bool opposite;
    std::string K;       ///< expected K as text
    mpq_class minus_24C; ///< attached constant
};

const std::vector<Table2Row>& table2_rows();
QMat parse_qmat(const std::string& text);

nlohmann::json table2_report(int order);

} // namespace ysys

#endif
