#include "ysys/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "ysys/checked.hpp"
#include "ysys/errors.hpp"

namespace ysys {

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    for (int v = 0; v < kMaxVars; ++v) {
        int s = int(e[v]) + int(o.e[v]);
        if (s > INT16_MAX || s < INT16_MIN) overflow("monomial exponent");
        r.e[v] = static_cast<std::int16_t>(s);
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const
{
    for (int v = 0; v < kMaxVars; ++v)
        if (e[v] > o.e[v]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& d) const
{
    Monomial r;
    for (int v = 0; v < kMaxVars; ++v) r.e[v] = static_cast<std::int16_t>(e[v] - d.e[v]);
    return r;
}

int Monomial::total_degree() const
{
    int s = 0;
    for (auto x : e) s += x;
    return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : m.e) {
        h ^= static_cast<std::uint16_t>(x);
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kScreenPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kScreenPrime) s -= kScreenPrime;
    return s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

MPoly MPoly::constant(int nvars, std::int64_t c)
{
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace_back(Monomial{}, c);
    return p;
}

MPoly MPoly::variable(int nvars, int v)
{
    if (v < 0 || v >= nvars || nvars > kMaxVars) throw ValidationError("variable index out of range");
    Monomial m;
    m.e[v] = 1;
    return monomial(nvars, m, 1);
}

MPoly MPoly::monomial(int nvars, const Monomial& m, std::int64_t c)
{
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    MPoly p(nvars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second = add_ck(p.terms_.back().second, t.second);
        else
            p.terms_.push_back(t);
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
    return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{}); }

std::int64_t MPoly::content() const
{
    if (terms_.empty()) return 0;
    std::int64_t g = 0;
    for (const auto& t : terms_) g = std::gcd(g, t.second);
    return terms_.front().second < 0 ? -g : g;
}

Monomial MPoly::min_monomial() const
{
    Monomial m;
    if (terms_.empty()) return m;
    m = terms_.front().first;
    for (const auto& t : terms_)
        for (int v = 0; v < kMaxVars; ++v) m.e[v] = std::min(m.e[v], t.first.e[v]);
    return m;
}

Monomial MPoly::max_exponents() const
{
    Monomial m;
    for (const auto& t : terms_)
        for (int v = 0; v < kMaxVars; ++v) m.e[v] = std::max(m.e[v], t.first.e[v]);
    return m;
}

std::int64_t MPoly::sum_of_coefficients() const
{
    std::int64_t s = 0;
    for (const auto& t : terms_) s = add_ck(s, t.second);
    return s;
}

namespace {

std::vector<MPoly::Term> merge_terms(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                                     bool subtract)
{
    std::vector<MPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.emplace_back(b[j].first, subtract ? sub_ck(0, b[j].second) : b[j].second);
            ++j;
        } else {
            std::int64_t c = subtract ? sub_ck(a[i].second, b[j].second) : add_ck(a[i].second, b[j].second);
            if (c != 0) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MPoly MPoly::operator+(const MPoly& o) const
{
    MPoly r(std::max(nvars_, o.nvars_));
    r.terms_ = merge_terms(terms_, o.terms_, false);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const
{
    MPoly r(std::max(nvars_, o.nvars_));
    r.terms_ = merge_terms(terms_, o.terms_, true);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const
{
    const int nv = std::max(nvars_, o.nvars_);
    if (is_zero() || o.is_zero()) return MPoly(nv);
    if (terms_.size() == 1) return o.times_monomial(terms_[0].first).scaled(terms_[0].second);
    if (o.terms_.size() == 1) return times_monomial(o.terms_[0].first).scaled(o.terms_[0].second);
    std::unordered_map<Monomial, std::int64_t, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(terms_.size() * o.terms_.size(), 1 << 22));
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto& slot = acc[ma * mb];
            slot = add_ck(slot, mul_ck(ca, cb));
        }
    MPoly r(nv);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, c);
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    return r;
}

MPoly MPoly::scaled(std::int64_t c) const
{
    MPoly r(nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second = mul_ck(t.second, c);
    return r;
}

MPoly MPoly::times_monomial(const Monomial& m) const
{
    MPoly r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
}

MPoly MPoly::divided_by(std::int64_t c, const Monomial& m) const
{
    MPoly r = *this;
    for (auto& t : r.terms_) {
        if (t.second % c != 0) throw InternalError("divided_by: coefficient not divisible");
        t.second /= c;
        t.first = t.first.quotient(m);
    }
    return r;
}

MPoly MPoly::pow(int k) const
{
    if (k < 0) throw ValidationError("negative power of a polynomial");
    MPoly r = constant(nvars_, 1);
    MPoly b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& d) const
{
    if (d.is_zero()) throw ValidationError("division by the zero polynomial");
    if (is_zero()) return MPoly(nvars_);
    // Cheap necessary conditions first.
    if (!d.leading().first.divides(leading().first) || leading().second % d.leading().second != 0)
        return std::nullopt;
    if (!d.trailing().first.divides(trailing().first) || trailing().second % d.trailing().second != 0)
        return std::nullopt;
    Monomial qmax = max_exponents();
    {
        Monomial dm = d.max_exponents();
        for (int v = 0; v < kMaxVars; ++v) {
            if (dm.e[v] > qmax.e[v]) return std::nullopt;
            qmax.e[v] = static_cast<std::int16_t>(qmax.e[v] - dm.e[v]);
        }
    }
    {
        std::int64_t ds = d.sum_of_coefficients(), ps = sum_of_coefficients();
        if (ds != 0 && ps % ds != 0) return std::nullopt;
        if (ds == 0 && ps != 0) return std::nullopt;
    }

    std::map<Monomial, std::int64_t, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace(t.first, t.second);
    std::vector<Term> q;
    const auto& [dlm, dlc] = d.leading();
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!dlm.divides(it->first) || it->second % dlc != 0) return std::nullopt;
        Monomial qm = it->first.quotient(dlm);
        for (int v = 0; v < kMaxVars; ++v)
            if (qm.e[v] > qmax.e[v]) return std::nullopt;
        std::int64_t qc = it->second / dlc;
        q.emplace_back(qm, qc);
        for (const auto& [dm, dc] : d.terms_) {
            Monomial m = dm * qm;
            auto jt = rem.find(m);
            // An overflowing intermediate just means this trial fails.
            std::int64_t delta, next;
            if (__builtin_mul_overflow(dc, qc, &delta)) return std::nullopt;
            if (jt == rem.end()) {
                if (__builtin_sub_overflow(std::int64_t{0}, delta, &next)) return std::nullopt;
                rem.emplace(m, next);
            } else {
                if (__builtin_sub_overflow(jt->second, delta, &next)) return std::nullopt;
                jt->second = next;
                if (jt->second == 0) rem.erase(jt);
            }
        }
    }
    MPoly r(nvars_);
    r.terms_ = std::move(q);
    return r;
}

std::uint64_t MPoly::eval_mod(const std::vector<std::uint64_t>& point) const
{
    std::uint64_t s = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t t = c >= 0 ? static_cast<std::uint64_t>(c) % kScreenPrime
                                 : (kScreenPrime - static_cast<std::uint64_t>(-(c + 1)) % kScreenPrime - 1);
        for (int v = 0; v < nvars_; ++v)
            if (m.e[v]) t = mulmod(t, powmod(point[v], static_cast<std::uint64_t>(m.e[v])));
        s += t;
        if (s >= kScreenPrime) s -= kScreenPrime;
    }
    return s;
}

mpq_class MPoly::eval(const std::vector<mpq_class>& point) const
{
    mpq_class s = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = mpq_class(mpz_class(static_cast<long>(c)));
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < m.e[v]; ++k) t *= point[v];
        s += t;
    }
    s.canonicalize();
    return s;
}

std::size_t MPoly::hash() const
{
    std::size_t h = terms_.size();
    MonomialHash mh;
    for (const auto& [m, c] : terms_) {
        h ^= mh(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::int64_t>{}(c) + (h << 6) + (h >> 2);
    }
    return h;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (int v = 0; v < nvars_; ++v) {
            if (!m.e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += v < static_cast<int>(names.size()) ? names[v] : "y" + std::to_string(v);
            if (m.e[v] != 1) mono += "^" + std::to_string(m.e[v]);
        }
        if (mono.empty())
            s += std::to_string(mag);
        else
            s += (mag != 1 ? std::to_string(mag) + "*" : "") + mono;
    }
    return s;
}

} // namespace ysys
