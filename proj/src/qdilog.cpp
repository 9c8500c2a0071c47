#include "ysys/qdilog.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ysys/errors.hpp"
#include "ysys/seed.hpp"
#include "ysys/semifield.hpp"

namespace ysys {

// ---------------------------------------------------------------- TPoly

TPoly TPoly::monomial(int e, const mpz_class& c)
{
    TPoly p;
    if (c != 0) {
        p.lo_ = e;
        p.c_ = {c};
    }
    return p;
}

void TPoly::trim()
{
    std::size_t a = 0, b = c_.size();
    while (a < b && c_[a] == 0) ++a;
    while (b > a && c_[b - 1] == 0) --b;
    if (a == b) {
        c_.clear();
        lo_ = 0;
        return;
    }
    if (a > 0 || b < c_.size()) c_ = std::vector<mpz_class>(c_.begin() + a, c_.begin() + b);
    lo_ += static_cast<int>(a);
}

TPoly& TPoly::operator+=(const TPoly& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(lo_, o.lo_);
    const int hi = std::max(lo_ + static_cast<int>(c_.size()), o.lo_ + static_cast<int>(o.c_.size()));
    std::vector<mpz_class> c(hi - lo, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[lo_ - lo + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[o.lo_ - lo + i] += o.c_[i];
    lo_ = lo;
    c_ = std::move(c);
    trim();
    return *this;
}

TPoly operator-(const TPoly& a)
{
    TPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

TPoly operator*(const TPoly& a, const TPoly& b)
{
    TPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

TPoly TPoly::shifted(int e) const
{
    TPoly r = *this;
    if (!r.is_zero()) r.lo_ += e;
    return r;
}

std::string TPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const int e = lo_ + static_cast<int>(i);
        os << (first ? "" : (c_[i] > 0 ? " + " : " - "));
        mpz_class a = first ? c_[i] : mpz_class(abs(c_[i]));
        if (e == 0)
            os << a.get_str();
        else
            os << a.get_str() << "*t^" << e;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- denominators

namespace {

std::mutex den_mu;

TPoly cyclo_power(int j, int e)
{
    TPoly base = TPoly::monomial(2 * j) + TPoly(-1);
    TPoly r(1);
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
}

/// Den_{d1+d2} / (Den_{d1} Den_{d2}), a polynomial.
const TPoly& denominator_ratio(int d1, int d2)
{
    static std::map<std::pair<int, int>, TPoly> cache;
    std::lock_guard lock(den_mu);
    auto key = std::minmax(d1, d2);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TPoly r(1);
    for (int j = 1; j <= d1 + d2; ++j) r = r * cyclo_power(j, (d1 + d2) / j - d1 / j - d2 / j);
    return cache.emplace(key, r).first->second;
}

int total_degree(const std::vector<int>& a)
{
    int s = 0;
    for (int x : a) s += x;
    return s;
}

} // namespace

TPoly universal_denominator(int d)
{
    TPoly r(1);
    for (int j = 1; j <= d; ++j) r = r * cyclo_power(j, d / j);
    return r;
}

// ---------------------------------------------------------------- torus

SkewForm::SkewForm(IntMatrix b) : m(std::move(b))
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) throw ValidationError("pairing matrix is not skew-symmetric");
}

std::int64_t SkewForm::operator()(const std::vector<int>& a, const std::vector<int>& b) const
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) s += static_cast<std::int64_t>(a[i]) * m(i, j) * b[j];
    }
    return s;
}

TorusSeries::TorusSeries(std::shared_ptr<const SkewForm> form, int degree) : form_(std::move(form)), degree_(degree)
{
    if (degree < 0) throw ValidationError("truncation degree must be nonnegative");
}

TorusSeries TorusSeries::one(std::shared_ptr<const SkewForm> form, int degree)
{
    const std::size_t r = form->rank();
    return monomial(std::move(form), degree, std::vector<int>(r, 0));
}

TorusSeries TorusSeries::monomial(std::shared_ptr<const SkewForm> form, int degree, const std::vector<int>& a,
                                  const TPoly& c)
{
    TorusSeries s(std::move(form), degree);
    if (a.size() != s.form_->rank()) throw ValidationError("lattice vector has the wrong length");
    for (int x : a)
        if (x < 0) throw ValidationError("lattice vector leaves the nonnegative cone");
    const int d = total_degree(a);
    if (d <= degree) s.add_numerator(a, c * universal_denominator(d));
    return s;
}

void TorusSeries::add_numerator(const std::vector<int>& a, const TPoly& n)
{
    if (total_degree(a) > degree_ || n.is_zero()) return;
    auto [it, fresh] = t_.emplace(a, n);
    if (!fresh) {
        it->second += n;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TorusSeries operator*(const TorusSeries& a, const TorusSeries& b)
{
    if (a.form_->rank() != b.form_->rank()) throw ValidationError("torus series of different rank");
    TorusSeries r(a.form_, std::min(a.degree_, b.degree_));
    std::vector<int> s(a.form_->rank());
    for (const auto& [ea, na] : a.t_) {
        const int da = total_degree(ea);
        for (const auto& [eb, nb] : b.t_) {
            const int db = total_degree(eb);
            if (da + db > r.degree_) continue;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = ea[i] + eb[i];
            const auto w = static_cast<int>((*a.form_)(ea, eb));
            r.add_numerator(s, (na * nb * denominator_ratio(da, db)).shifted(w));
        }
    }
    return r;
}

std::optional<std::vector<int>> TorusSeries::first_difference(const TorusSeries& o) const
{
    auto i = t_.begin(), j = o.t_.begin();
    while (i != t_.end() || j != o.t_.end()) {
        if (j == o.t_.end() || (i != t_.end() && i->first < j->first)) return i->first;
        if (i == t_.end() || j->first < i->first) return j->first;
        if (!(i->second == j->second)) return i->first;
        ++i;
        ++j;
    }
    return std::nullopt;
}

nlohmann::json TorusSeries::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [a, n] : t_) terms.push_back({{"exponent", a}, {"numerator", n.to_string()}});
    return {{"degree", degree_}, {"terms", terms}};
}

// ---------------------------------------------------------------- dilogarithms

TorusSeries dilog_factor(std::shared_ptr<const SkewForm> form, const std::vector<int>& beta, int sign, int degree)
{
    if (sign != 1 && sign != -1) throw ValidationError("dilogarithm exponent must be +1 or -1");
    const int d = total_degree(beta);
    for (int x : beta)
        if (x < 0) throw ValidationError("dilogarithm argument has a negative component");
    if (d == 0) throw ValidationError("dilogarithm argument is zero");
    TorusSeries s(form, degree);
    std::vector<int> a(beta.size(), 0);
    // Coefficient of y^k: t^k / prod_{j<=k}(t^{2j}-1) for Psi,
    // (-1)^k t^{k^2} / prod_{j<=k}(t^{2j}-1) for its inverse.
    for (int k = 0; k * d <= degree; ++k) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = k * beta[i];
        TPoly n = TPoly::monomial(sign > 0 ? k : k * k, (sign < 0 && k % 2) ? -1 : 1);
        for (int j = 1; j <= k * d; ++j) n = n * cyclo_power(j, (k * d) / j - (j <= k ? 1 : 0));
        s.add_numerator(a, n);
    }
    return s;
}

TorusSeries dt_invariant(const QuiverData& q, int steps, int degree, const DtOptions& opt)
{
    // <e_i, e_j> = B_ji; with this sign the factors multiply left to right.
    IntMatrix pairing = q.b;
    for (std::size_t i = 0; i < pairing.rows(); ++i)
        for (std::size_t j = 0; j < pairing.cols(); ++j) pairing(i, j) = q.b(j, i);
    auto form = std::make_shared<const SkewForm>(pairing);
    TorusSeries e = TorusSeries::one(form, degree);
    auto seed = initial_tropical(q.b);
    std::vector<int> front = q.front;
    if (opt.reverse_front) std::reverse(front.begin(), front.end());

    auto mutate_at = [&](int k) {
        const auto& c = seed.y[k].exponents;
        bool pos = false, neg = false;
        for (auto x : c) {
            pos = pos || x > 0;
            neg = neg || x < 0;
        }
        if (pos == neg) throw InternalError("c-vector is not sign-coherent");
        const int eps = pos ? 1 : -1;
        std::vector<int> beta(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) beta[i] = static_cast<int>(eps * c[i]);
        e = e * dilog_factor(form, beta, eps, degree);
        seed = mutate(seed, k);
    };

    for (int u = 0; u < std::abs(steps); ++u) {
        if (steps > 0) {
            for (int k : front) mutate_at(k);
            seed = apply_permutation(seed, q.nu);
        } else {
            seed = apply_permutation(seed, q.nu_inv);
            for (int k : front) mutate_at(k);
        }
    }
    if (steps != 0) {
        for (const auto& y : seed.y)
            for (auto x : y.exponents)
                if (x > 0) throw PropertyError("mutation sequence does not end at a reddening point");
    }
    return e;
}

IdentityResult identity_check(const MatrixPair& p, int degree, int reddening_bound)
{
    const QuiverData q = build_quiver(p);
    const Reddening red = find_reddening(p, reddening_bound);
    if (!red.h_plus || !red.h_minus) throw ResourceError("reddening not found within the step bound");
    IdentityResult r;
    r.h_plus = *red.h_plus;
    r.h_minus = *red.h_minus;
    r.degree = degree;
    const TorusSeries lhs = dt_invariant(q, r.h_plus, degree);
    const TorusSeries rhs = dt_invariant(q, -r.h_minus, degree);
    r.first_mismatch = lhs.first_difference(rhs);
    r.holds = !r.first_mismatch;
    r.terms = lhs.numerators().size();
    return r;
}

} // namespace ysys
