#include "ysys/nahm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ysys/errors.hpp"
#include "ysys/presets.hpp"

namespace ysys {

// ---------------------------------------------------------------- exact matrices

QMat to_qmat(const IntMatrix& m)
{
    QMat q(m.rows(), m.cols(), mpq_class(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = mpq_class(static_cast<long>(m(i, j)));
    return q;
}

QMat qmat_mul(const QMat& a, const QMat& b)
{
    if (a.cols() != b.rows()) throw ValidationError("matrix shapes do not match");
    QMat c(a.rows(), b.cols(), mpq_class(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

QMat qmat_inverse(const QMat& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ValidationError("inverse of a non-square matrix");
    QMat m = a;
    QMat inv = QMat::identity(n, mpq_class(1), mpq_class(0));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) throw ValidationError("matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(c, j), m(piv, j));
            std::swap(inv(c, j), inv(piv, j));
        }
        const mpq_class p = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            const mpq_class f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

bool is_symmetric(const QMat& a)
{
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

namespace {

mpq_class determinant(QMat m)
{
    const std::size_t n = m.rows();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const mpq_class f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

} // namespace

bool is_positive_definite(const QMat& a)
{
    if (!is_symmetric(a)) return false;
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        QMat minor(k, k, mpq_class(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(i, j);
        if (determinant(minor) <= 0) return false;
    }
    return true;
}

std::string to_string(const QMat& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

nlohmann::json to_json(const QMat& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

QMat parse_qmat(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    const std::size_t n = j.size();
    QMat m(n, n, mpq_class(0));
    for (std::size_t r = 0; r < n; ++r) {
        if (j[r].size() != n) throw ValidationError("matrix text is not square");
        for (std::size_t c = 0; c < n; ++c) {
            mpq_class v(j[r][c].is_string() ? j[r][c].get<std::string>() : std::to_string(j[r][c].get<long>()));
            v.canonicalize();
            m(r, c) = v;
        }
    }
    return m;
}

NahmMatrix compute_K(const MatrixPair& p)
{
    auto [plus, minus] = eval_at_one(p);
    NahmMatrix out;
    out.K = qmat_mul(qmat_inverse(to_qmat(plus)), to_qmat(minus));
    out.symmetric = is_symmetric(out.K);
    out.positive_definite = out.symmetric && is_positive_definite(out.K);
    return out;
}

// ---------------------------------------------------------------- series

namespace {

std::int64_t to_i64(const mpz_class& z)
{
    if (!z.fits_slong_p()) throw ResourceError("exponent denominator does not fit in 64 bits");
    return z.get_si();
}

} // namespace

QSeries QSeries::from_dense(const std::vector<mpz_class>& coeffs, const mpq_class& order)
{
    QSeries s(order);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) s.add_term(mpq_class(static_cast<long>(k)), mpq_class(coeffs[k]));
    return s;
}

void QSeries::rescale(std::int64_t den)
{
    if (den % den_ != 0) throw InternalError("series rescale to a non-multiple denominator");
    const std::int64_t f = den / den_;
    if (f == 1) return;
    std::map<std::int64_t, mpq_class> t;
    for (auto& [k, c] : t_) t.emplace(k * f, c);
    t_ = std::move(t);
    den_ = den;
}

void QSeries::add_term(const mpq_class& e, const mpq_class& c)
{
    if (e >= order_ || c == 0) return;
    const std::int64_t d = to_i64(e.get_den());
    rescale(std::lcm(den_, d));
    mpq_class k = e * den_;
    k.canonicalize();
    auto& slot = t_[to_i64(k.get_num())];
    slot += c;
    if (slot == 0) t_.erase(to_i64(k.get_num()));
}

void QSeries::add_shifted(const QSeries& s, const mpq_class& shift, const mpq_class& scale)
{
    for (const auto& [e, c] : s.terms()) add_term(e + shift, c * scale);
}

std::map<mpq_class, mpq_class> QSeries::terms() const
{
    std::map<mpq_class, mpq_class> out;
    for (const auto& [k, c] : t_) {
        mpq_class e(k, den_);
        e.canonicalize();
        out.emplace(e, c);
    }
    return out;
}

mpq_class QSeries::coefficient(const mpq_class& exponent) const
{
    const auto all = terms();
    auto it = all.find(exponent);
    return it == all.end() ? mpq_class(0) : it->second;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries out(std::min(a.order_, b.order_));
    const auto ta = a.terms(), tb = b.terms();
    for (const auto& [ea, ca] : ta)
        for (const auto& [eb, cb] : tb) out.add_term(ea + eb, ca * cb);
    return out;
}

nlohmann::json QSeries::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms()) arr.push_back({e.get_str(), c.get_str()});
    return {{"order", order_.get_str()}, {"terms", arr}};
}

std::string QSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        os << (first ? "" : " + ") << c.get_str() << "*q^" << e.get_str();
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << order_.get_str() << ")";
    return os.str();
}

QSeries pochhammer_inverse(int n, int order)
{
    if (n < 0) throw ValidationError("pochhammer_inverse needs n >= 0");
    if (order <= 0) return QSeries(order);
    std::vector<mpz_class> c(order, 0);
    c[0] = 1;
    // Multiply by 1/(1 - q^k) in place.
    for (int k = 1; k <= n && k < order; ++k)
        for (int j = k; j < order; ++j) c[j] += c[j - k];
    return QSeries::from_dense(c, order);
}

QSeries rogers_ramanujan_product(int residue, int order)
{
    std::vector<mpz_class> c(std::max(order, 0), 0);
    if (order > 0) c[0] = 1;
    for (int k = 1; k < order; ++k) {
        const int m = k % 5;
        if (m != residue && m != 5 - residue) continue;
        for (int j = k; j < order; ++j) c[j] += c[j - k];
    }
    return QSeries::from_dense(c, order);
}

// ---------------------------------------------------------------- Nahm sums

namespace {

mpq_class quad_value(const QMat& K, const std::vector<mpq_class>& B, const mpq_class& C, const std::vector<std::int64_t>& n)
{
    mpq_class e = C;
    for (std::size_t i = 0; i < n.size(); ++i) {
        e += B[i] * n[i];
        for (std::size_t j = 0; j < n.size(); ++j) e += K(i, j) * n[i] * n[j] / 2;
    }
    return e;
}

void add_point(QSeries& out, const std::vector<std::int64_t>& n, const mpq_class& e, int order,
               std::map<std::pair<std::int64_t, int>, QSeries>& cache)
{
    // The product of 1/(q)_{n_i} only contributes below order - e.
    mpz_class room = 0;
    mpq_class r = order - e;
    mpz_class ceil_r = r.get_num() / r.get_den();
    if (ceil_r * r.get_den() < r.get_num()) ++ceil_r;
    const int len = static_cast<int>(ceil_r.get_si());
    QSeries prod = QSeries::from_dense({1}, len);
    for (std::int64_t k : n) {
        auto key = std::make_pair(k, len);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, pochhammer_inverse(static_cast<int>(std::min<std::int64_t>(k, len)), len)).first;
        prod = prod * it->second;
    }
    out.add_shifted(prod, e);
    (void)room;
}

void check_input(const QMat& K, const std::vector<mpq_class>& B)
{
    if (K.rows() != K.cols() || B.size() != K.rows()) throw ValidationError("Nahm data has inconsistent sizes");
    if (!is_positive_definite(K)) throw PropertyError("Nahm matrix is not symmetric positive definite");
}

QSeries expand_box(const QMat& K, const std::vector<mpq_class>& B, const mpq_class& C, int order, const NahmOptions& opt)
{
    const std::size_t d = K.rows();
    const QMat Kinv = qmat_inverse(K);
    // e(n) < order  <=>  (n+m)^T K (n+m) < T  with m = K^{-1} B.
    std::vector<mpq_class> m(d, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i] += Kinv(i, j) * B[j];
    mpq_class T = 2 * (order - C);
    for (std::size_t i = 0; i < d; ++i) T += B[i] * m[i];
    std::vector<std::int64_t> hi(d, -1);
    for (std::size_t i = 0; i < d; ++i) {
        // Largest n with n + m_i <= 0 or (n + m_i)^2 < T (K^{-1})_ii.
        const mpq_class lim = T * Kinv(i, i);
        std::int64_t n = 0;
        while (true) {
            const mpq_class x = n + m[i];
            if (x > 0 && x * x >= lim) break;
            if (n >= opt.n_max) throw ResourceError("Nahm summation cap reached before the box was certified");
            ++n;
        }
        hi[i] = n - 1;
    }
    QSeries out(order);
    if (T <= 0) return out;
    std::map<std::pair<std::int64_t, int>, QSeries> cache;
    std::vector<std::int64_t> n(d, 0);
    std::size_t points = 0;
    for (std::size_t i = 0; i < d; ++i)
        if (hi[i] < 0) return out;
    while (true) {
        if (++points > opt.max_points) throw ResourceError("Nahm box enumeration exceeded its point cap");
        const mpq_class e = quad_value(K, B, C, n);
        if (e < order) add_point(out, n, e, order, cache);
        std::size_t k = 0;
        while (k < d && n[k] == hi[k]) n[k++] = 0;
        if (k == d) break;
        ++n[k];
    }
    return out;
}

/// A rational t > 0 with K - t I positive definite.
mpq_class eigen_lower_bound(const QMat& K)
{
    mpq_class lo = 0, hi = K(0, 0);
    for (std::size_t i = 0; i < K.rows(); ++i) hi = std::min(hi, K(i, i));
    auto pd_shift = [&](const mpq_class& t) {
        QMat s = K;
        for (std::size_t i = 0; i < K.rows(); ++i) s(i, i) -= t;
        return is_positive_definite(s);
    };
    for (int it = 0; it < 30; ++it) {
        mpq_class mid = (lo + hi) / 2;
        if (pd_shift(mid))
            lo = mid;
        else
            hi = mid;
    }
    if (lo == 0) {
        // Fall back to a dyadic search below the bisection resolution.
        mpq_class t(1, 1 << 30);
        while (!pd_shift(t)) t /= 2;
        lo = t;
    }
    return lo;
}

void compositions(std::size_t d, std::int64_t s, std::vector<std::int64_t>& cur, std::size_t i,
                  const std::function<void(const std::vector<std::int64_t>&)>& f)
{
    if (i + 1 == d) {
        cur[i] = s;
        f(cur);
        return;
    }
    for (std::int64_t k = 0; k <= s; ++k) {
        cur[i] = k;
        compositions(d, s - k, cur, i + 1, f);
    }
}

QSeries expand_shells(const QMat& K, const std::vector<mpq_class>& B, const mpq_class& C, int order,
                      const NahmOptions& opt)
{
    const std::size_t d = K.rows();
    const mpq_class lambda = eigen_lower_bound(K);
    mpq_class bmin = 0;
    for (const auto& b : B) bmin = std::min(bmin, b);
    // On the shell sum(n) = s:  e(n) >= lambda s^2 / (2d) + s bmin + C,
    // increasing in s once s >= -bmin d / lambda.
    const mpq_class turn = -bmin * static_cast<long>(d) / lambda;
    QSeries out(order);
    std::map<std::pair<std::int64_t, int>, QSeries> cache;
    std::vector<std::int64_t> cur(d, 0);
    std::size_t points = 0;
    for (std::int64_t s = 0;; ++s) {
        const mpq_class bound = lambda * s * s / (2 * static_cast<long>(d)) + s * bmin + C;
        if (bound >= order && s >= turn) break;
        if (s > opt.n_max) throw ResourceError("Nahm shell enumeration cap reached before certification");
        compositions(d, s, cur, 0, [&](const std::vector<std::int64_t>& n) {
            if (++points > opt.max_points) throw ResourceError("Nahm shell enumeration exceeded its point cap");
            const mpq_class e = quad_value(K, B, C, n);
            if (e < order) add_point(out, n, e, order, cache);
        });
    }
    return out;
}

} // namespace

QSeries nahm_expand(const QMat& K, const std::vector<mpq_class>& B, const mpq_class& C, int order, const NahmOptions& opt)
{
    check_input(K, B);
    return opt.strategy == NahmStrategy::box ? expand_box(K, B, C, order, opt) : expand_shells(K, B, C, order, opt);
}

// ---------------------------------------------------------------- reference table

const std::vector<Table2Row>& table2_rows()
{
    static const std::vector<Table2Row> rows = {
        {"table1:1", 1, false, "[[\"4/3\",\"2/3\"],[\"2/3\",\"4/3\"]]", mpq_class(4, 5)},
        {"table1:1op", 1, true, "[[1,\"-1/2\"],[\"-1/2\",1]]", mpq_class(6, 5)},
        {"table1:2", 2, false, "[[\"3/2\",1],[1,2]]", mpq_class(5, 7)},
        {"table1:2op", 2, true, "[[1,\"-1/2\"],[\"-1/2\",\"3/4\"]]", mpq_class(9, 7)},
        {"table1:3", 3, false, "[[2,2],[2,4]]", mpq_class(4, 7)},
        {"table1:3op", 3, true, "[[1,\"-1/2\"],[\"-1/2\",\"1/2\"]]", mpq_class(10, 7)},
        {"table1:4", 4, false, "[[\"2/3\",\"1/3\"],[\"1/3\",\"2/3\"]]", mpq_class(1)},
        {"table1:4op", 4, true, "[[2,-1],[-1,2]]", mpq_class(1)},
        {"table1:5", 5, false, "[[1,1],[1,2]]", mpq_class(3, 4)},
        {"table1:5op", 5, true, "[[2,-1],[-1,1]]", mpq_class(5, 4)},
        {"table1:6", 6, false, "[[2,2],[2,4]]", mpq_class(4, 7)},
        {"table1:6op", 6, true, "[[1,\"-1/2\"],[\"-1/2\",\"1/2\"]]", mpq_class(10, 7)},
    };
    return rows;
}

nlohmann::json table2_report(int order)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : table2_rows()) {
        MatrixPair p = row_pair(row.id);
        if (row.opposite) p = opposite(p);
        const NahmMatrix nk = compute_K(p);
        const QMat expected = parse_qmat(row.K);
        const mpq_class C = -row.minus_24C / 24;
        nlohmann::json e;
        e["pair"] = row.name;
        e["K"] = to_json(nk.K);
        e["K_matches_reference"] = nk.K == expected;
        e["symmetric"] = nk.symmetric;
        e["positive_definite"] = nk.positive_definite;
        e["minus_24C"] = row.minus_24C.get_str();
        if (nk.positive_definite)
            e["series"] = nahm_expand(nk.K, std::vector<mpq_class>(nk.K.rows(), mpq_class(0)), C, order).to_json();
        out.push_back(e);
    }
    return out;
}

} // namespace ysys
