#include "ysys/semifield.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "ysys/checked.hpp"
#include "ysys/errors.hpp"

namespace ysys {

// ---------------------------------------------------------------- tropical

TropicalElem TropicalElem::generator(std::size_t n, std::size_t v)
{
    TropicalElem t{std::vector<std::int64_t>(n, 0)};
    t.exponents.at(v) = 1;
    return t;
}

namespace {

void same_generators(const TropicalElem& a, const TropicalElem& b)
{
    if (a.exponents.size() != b.exponents.size())
        throw ValidationError("tropical elements over different generator sets");
}

} // namespace

TropicalElem trop_add(const TropicalElem& a, const TropicalElem& b)
{
    same_generators(a, b);
    TropicalElem r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] = std::min(r.exponents[i], b.exponents[i]);
    return r;
}

TropicalElem operator+(const TropicalElem& a, const TropicalElem& b) { return trop_add(a, b); }

TropicalElem operator*(const TropicalElem& a, const TropicalElem& b)
{
    same_generators(a, b);
    TropicalElem r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] = add_ck(r.exponents[i], b.exponents[i]);
    return r;
}

TropicalElem operator/(const TropicalElem& a, const TropicalElem& b)
{
    same_generators(a, b);
    TropicalElem r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] = sub_ck(r.exponents[i], b.exponents[i]);
    return r;
}

TropicalElem inv(const TropicalElem& a)
{
    TropicalElem r = a;
    for (auto& e : r.exponents) e = sub_ck(0, e);
    return r;
}

TropicalElem pow(const TropicalElem& a, std::int64_t k)
{
    TropicalElem r = a;
    for (auto& e : r.exponents) e = mul_ck(e, k);
    return r;
}

TropicalElem one_like(const TropicalElem& a) { return TropicalElem{std::vector<std::int64_t>(a.exponents.size(), 0)}; }

// ---------------------------------------------------------------- positive rationals

PosRat::PosRat(const mpq_class& v) : v_(v)
{
    v_.canonicalize();
    if (sgn(v_) <= 0) throw ValidationError("PosRat requires a positive value, got " + v_.get_str());
}

PosRat::PosRat(long num, long den) : PosRat(mpq_class(num, den)) {}

PosRat inv(const PosRat& a) { return PosRat(1) / a; }

PosRat pow(const PosRat& a, std::int64_t k)
{
    PosRat r(1);
    PosRat b = k >= 0 ? a : inv(a);
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) r = r * b;
    return r;
}

// ---------------------------------------------------------------- factor table

FactorTable::FactorTable(int nvars, std::size_t monomial_cap) : nvars_(nvars), cap_(monomial_cap)
{
    if (nvars < 0 || nvars > kMaxVars)
        throw ResourceError("universal semifield supports at most " + std::to_string(kMaxVars) + " generators");
}

FactorId FactorTable::intern(const MPoly& p)
{
    std::lock_guard lock(mu_);
    const std::size_t h = p.hash();
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it)
        if (polys_[it->second] == p) return it->second;
    const FactorId id = static_cast<FactorId>(polys_.size());
    polys_.push_back(p);
    values_.emplace_back();
    index_.emplace(h, id);
    return id;
}

const MPoly& FactorTable::factor(FactorId id) const
{
    std::lock_guard lock(mu_);
    return polys_.at(id);
}

std::size_t FactorTable::size() const
{
    std::lock_guard lock(mu_);
    return polys_.size();
}

const std::vector<std::vector<std::uint64_t>>& FactorTable::screen_points_mod()
{
    std::lock_guard lock(mu_);
    if (points_.size() < screen_points_) {
        std::mt19937_64 rng(0x5eedULL + points_.size());
        std::uniform_int_distribution<std::uint64_t> dist(2, kScreenPrime - 1);
        while (points_.size() < screen_points_) {
            std::vector<std::uint64_t> pt(nvars_);
            for (auto& x : pt) x = dist(rng);
            points_.push_back(std::move(pt));
        }
    }
    return points_;
}

std::uint64_t FactorTable::factor_value_mod(FactorId id, std::size_t point)
{
    std::lock_guard lock(mu_);
    auto& vals = values_.at(id);
    if (vals.size() <= point) vals.resize(point + 1, UINT64_MAX);
    if (vals[point] == UINT64_MAX) vals[point] = polys_[id].eval_mod(points_.at(point));
    return vals[point];
}

// ---------------------------------------------------------------- rational functions

namespace {

std::int64_t to_i64(const mpz_class& z)
{
    if (!z.fits_slong_p()) throw ResourceError("coefficient does not fit in 64 bits");
    return z.get_si();
}

void same_table(const RatFun& a, const RatFun& b)
{
    if (!a.table() || a.table() != b.table())
        throw ValidationError("rational functions from different factor tables");
}

using FactorList = std::vector<RatFun::FactorPower>;

/// Merge of two sorted factor lists with exponents combined by op.
template <class Op>
FactorList merge_factors(const FactorList& a, const FactorList& b, Op op)
{
    FactorList out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        FactorId id;
        std::int64_t ea = 0, eb = 0;
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            id = a[i].first;
            ea = a[i++].second;
        } else if (i == a.size() || b[j].first < a[i].first) {
            id = b[j].first;
            eb = b[j++].second;
        } else {
            id = a[i].first;
            ea = a[i++].second;
            eb = b[j++].second;
        }
        std::int64_t e = op(ea, eb);
        if (e != 0) out.emplace_back(id, static_cast<std::int32_t>(e));
    }
    return out;
}

void check_cap(const MPoly& p, const FactorTable& t)
{
    if (p.size() > t.monomial_cap())
        throw ResourceError("rational function exceeds the monomial cap (" + std::to_string(p.size()) + " > " +
                            std::to_string(t.monomial_cap()) + ")");
}

/// prod over positive (sign=+1) or negative (sign=-1) parts, times y^{mono part}.
MPoly expand_part(const FactorTable& t, const std::vector<std::int32_t>& mono, const FactorList& f, int sign)
{
    Monomial m;
    for (std::size_t v = 0; v < mono.size(); ++v) {
        std::int32_t e = sign > 0 ? std::max(0, mono[v]) : std::max(0, -mono[v]);
        if (e > INT16_MAX) overflow("monomial exponent");
        m.e[v] = static_cast<std::int16_t>(e);
    }
    MPoly r = MPoly::monomial(t.nvars(), m, 1);
    for (const auto& [id, e] : f) {
        int k = sign > 0 ? e : -e;
        for (int i = 0; i < k; ++i) {
            r = r * t.factor(id);
            check_cap(r, t);
        }
    }
    return r;
}

} // namespace

RatFun RatFun::constant(std::shared_ptr<FactorTable> table, const mpq_class& c)
{
    if (sgn(c) == 0) throw ValidationError("zero is not an element of a semifield");
    RatFun r;
    r.mono_.assign(table->nvars(), 0);
    r.table_ = std::move(table);
    r.coeff_ = c;
    r.coeff_.canonicalize();
    return r;
}

RatFun RatFun::generator(std::shared_ptr<FactorTable> table, int v)
{
    if (v < 0 || v >= table->nvars()) throw ValidationError("generator index out of range");
    RatFun r = constant(std::move(table), 1);
    r.mono_[v] = 1;
    return r;
}

RatFun times_poly(const RatFun& g, const MPoly& s)
{
    if (s.is_zero()) throw ValidationError("zero is not an element of a semifield");
    FactorTable& t = *g.table_;
    RatFun r = g;
    std::int64_t c = s.content();
    Monomial m = s.min_monomial();
    MPoly rest = s.divided_by(c, m);
    r.coeff_ *= mpq_class(mpz_class(static_cast<long>(c)));
    r.coeff_.canonicalize();
    for (int v = 0; v < t.nvars(); ++v) r.mono_[v] += m.e[v];

    FactorList found;
    // Split off known factors. Every polynomial reaching this point is
    // subtraction-free, so a divisor never has more terms than the dividend.
    bool changed = !rest.is_constant();
    while (changed) {
        changed = false;
        const std::size_t n = t.size();
        for (FactorId id = 0; id < n && !rest.is_constant(); ++id) {
            const MPoly& f = t.factor(id);
            if (f.size() > rest.size()) continue;
            while (auto q = rest.exact_divide(f)) {
                rest = std::move(*q);
                found.emplace_back(id, 1);
                changed = true;
                if (rest.is_constant()) break;
            }
        }
    }
    if (!rest.is_constant()) {
        check_cap(rest, t);
        found.emplace_back(t.intern(rest), 1);
    } else if (rest.leading().second != 1) {
        throw InternalError("normalised polynomial left a non-unit constant");
    }
    std::sort(found.begin(), found.end());
    FactorList collected;
    for (const auto& fp : found) {
        if (!collected.empty() && collected.back().first == fp.first)
            collected.back().second += fp.second;
        else
            collected.push_back(fp);
    }
    r.factors_ = merge_factors(r.factors_, collected, [](std::int64_t x, std::int64_t y) { return x + y; });
    return r;
}

RatFun RatFun::from_poly(std::shared_ptr<FactorTable> table, const MPoly& p)
{
    return times_poly(constant(std::move(table), 1), p);
}

RatFun RatFun::from_fraction(std::shared_ptr<FactorTable> table, const MPoly& num, const MPoly& den)
{
    return from_poly(table, num) / from_poly(table, den);
}

MPoly RatFun::numerator() const
{
    return expand_part(*table_, mono_, factors_, +1).scaled(to_i64(coeff_.get_num()));
}

MPoly RatFun::denominator() const
{
    return expand_part(*table_, mono_, factors_, -1).scaled(to_i64(coeff_.get_den()));
}

std::size_t RatFun::weight() const
{
    std::size_t w = 1;
    for (const auto& [id, e] : factors_) w += table_->factor(id).size() * static_cast<std::size_t>(std::abs(e));
    return w;
}

RatFun operator*(const RatFun& a, const RatFun& b)
{
    same_table(a, b);
    RatFun r = a;
    r.coeff_ *= b.coeff_;
    for (std::size_t v = 0; v < r.mono_.size(); ++v) r.mono_[v] += b.mono_[v];
    r.factors_ = merge_factors(a.factors_, b.factors_, [](std::int64_t x, std::int64_t y) { return x + y; });
    return r;
}

RatFun inv(const RatFun& a)
{
    RatFun r = a;
    r.coeff_ = 1 / a.coeff_;
    for (auto& e : r.mono_) e = -e;
    for (auto& fp : r.factors_) fp.second = -fp.second;
    return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * inv(b); }

RatFun pow(const RatFun& a, std::int64_t k)
{
    RatFun r = RatFun::constant(a.table_, 1);
    if (k == 0) return r;
    r.coeff_ = 1;
    for (std::int64_t i = 0; i < (k > 0 ? k : -k); ++i) r.coeff_ *= a.coeff_;
    if (k < 0) r.coeff_ = 1 / r.coeff_;
    for (std::size_t v = 0; v < r.mono_.size(); ++v) r.mono_[v] = static_cast<std::int32_t>(mul_ck(a.mono_[v], k));
    r.factors_ = a.factors_;
    for (auto& fp : r.factors_) fp.second = static_cast<std::int32_t>(mul_ck(fp.second, k));
    return r;
}

RatFun one_like(const RatFun& a) { return RatFun::constant(a.table(), 1); }

RatFun operator+(const RatFun& a, const RatFun& b)
{
    same_table(a, b);
    const FactorTable& t = *a.table_;
    // Pull out the common part g = y^{min mono} * prod P^{min e}.
    RatFun g = RatFun::constant(a.table_, 1);
    for (std::size_t v = 0; v < g.mono_.size(); ++v) g.mono_[v] = std::min(a.mono_[v], b.mono_[v]);
    g.factors_ = merge_factors(a.factors_, b.factors_, [](std::int64_t x, std::int64_t y) { return std::min(x, y); });

    auto rest = [&](const RatFun& x) {
        std::vector<std::int32_t> m(x.mono_.size());
        for (std::size_t v = 0; v < m.size(); ++v) m[v] = x.mono_[v] - g.mono_[v];
        FactorList f = merge_factors(x.factors_, g.factors_, [](std::int64_t p, std::int64_t q) { return p - q; });
        return expand_part(t, m, f, +1);
    };
    const mpz_class da = a.coeff_.get_den(), db = b.coeff_.get_den();
    MPoly s = rest(a).scaled(to_i64(a.coeff_.get_num() * db)) + rest(b).scaled(to_i64(b.coeff_.get_num() * da));
    check_cap(s, t);
    g.coeff_ = mpq_class(1, 1) / mpq_class(da * db);
    g.coeff_.canonicalize();
    return times_poly(g, s);
}

namespace {

/// Value modulo the screening prime at a table point; nullopt if undefined there.
std::optional<std::uint64_t> value_mod(const RatFun& f, std::size_t point)
{
    FactorTable& t = *f.table();
    const auto& pt = t.screen_points_mod().at(point);
    auto zmod = [](const mpz_class& z) {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(kScreenPrime));
        if (r < 0) r += mpz_class(static_cast<unsigned long>(kScreenPrime));
        return static_cast<std::uint64_t>(r.get_ui());
    };
    std::uint64_t num = zmod(f.coeff().get_num()), den = zmod(f.coeff().get_den());
    for (std::size_t v = 0; v < f.mono().size(); ++v) {
        std::int32_t e = f.mono()[v];
        if (e > 0) num = mulmod(num, powmod(pt[v], e));
        if (e < 0) den = mulmod(den, powmod(pt[v], -e));
    }
    for (const auto& [id, e] : f.factors()) {
        std::uint64_t x = t.factor_value_mod(id, point);
        if (x == 0) return std::nullopt;
        if (e > 0) num = mulmod(num, powmod(x, e));
        else den = mulmod(den, powmod(x, -e));
    }
    if (den == 0) return std::nullopt;
    return mulmod(num, powmod(den, kScreenPrime - 2));
}

} // namespace

bool ratfun_equal(const RatFun& a, const RatFun& b)
{
    same_table(a, b);
    if (a.coeff_ == b.coeff_ && a.mono_ == b.mono_ && a.factors_ == b.factors_) return true;
    const std::size_t k = a.table_->screen_points();
    if (k > 0) {
        a.table_->screen_points_mod();
        for (std::size_t i = 0; i < k; ++i) {
            auto va = value_mod(a, i), vb = value_mod(b, i);
            if (va && vb && *va != *vb) return false;
        }
    }
    const RatFun d = a / b;
    return d.numerator() == d.denominator();
}

bool operator==(const RatFun& a, const RatFun& b) { return ratfun_equal(a, b); }

std::string RatFun::to_string(const std::vector<std::string>& names) const
{
    std::ostringstream os;
    os << coeff_.get_str();
    for (std::size_t v = 0; v < mono_.size(); ++v)
        if (mono_[v] != 0)
            os << " * " << (v < names.size() ? names[v] : "y" + std::to_string(v)) << "^" << mono_[v];
    for (const auto& [id, e] : factors_) os << " * (" << table_->factor(id).to_string(names) << ")^" << e;
    return os.str();
}

PosRat semifield_eval(const RatFun& f, const std::vector<PosRat>& assignment)
{
    const FactorTable& t = *f.table();
    if (static_cast<int>(assignment.size()) != t.nvars())
        throw ValidationError("semifield_eval: assignment must give a value for every generator");
    std::vector<mpq_class> pt;
    pt.reserve(assignment.size());
    for (const auto& x : assignment) pt.push_back(x.value());
    mpq_class r = f.coeff();
    for (std::size_t v = 0; v < f.mono().size(); ++v) {
        std::int32_t e = f.mono()[v];
        for (std::int32_t i = 0; i < std::abs(e); ++i) r = e > 0 ? mpq_class(r * pt[v]) : mpq_class(r / pt[v]);
    }
    for (const auto& [id, e] : f.factors()) {
        mpq_class x = t.factor(id).eval(pt);
        for (std::int32_t i = 0; i < std::abs(e); ++i) r = e > 0 ? mpq_class(r * x) : mpq_class(r / x);
    }
    return PosRat(r);
}

} // namespace ysys
