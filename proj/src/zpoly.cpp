#include "ysys/zpoly.hpp"

#include <algorithm>
#include <map>

#include "ysys/checked.hpp"
#include "ysys/errors.hpp"

namespace ysys {

ZPoly::ZPoly(std::int64_t constant)
{
    if (constant != 0) terms_.emplace_back(0, constant);
}

ZPoly ZPoly::monomial(int exponent, std::int64_t coeff)
{
    ZPoly p;
    if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
    return p;
}

ZPoly ZPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end());
    ZPoly p;
    for (const auto& [e, c] : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == e)
            p.terms_.back().second = add_ck(p.terms_.back().second, c);
        else
            p.terms_.emplace_back(e, c);
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
    return p;
}

std::int64_t ZPoly::coeff(int exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

int ZPoly::min_exponent() const
{
    if (terms_.empty()) throw ValidationError("min_exponent of zero polynomial");
    return terms_.front().first;
}

int ZPoly::max_exponent() const
{
    if (terms_.empty()) throw ValidationError("max_exponent of zero polynomial");
    return terms_.back().first;
}

std::int64_t ZPoly::eval_at_one() const
{
    std::int64_t s = 0;
    for (const auto& t : terms_) s = add_ck(s, t.second);
    return s;
}

ZPoly ZPoly::reversed() const
{
    ZPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
    return p;
}

namespace {

std::vector<ZPoly::Term> merge(const std::vector<ZPoly::Term>& a, const std::vector<ZPoly::Term>& b, int sign)
{
    std::vector<ZPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? b[j].second : sub_ck(0, b[j].second));
            ++j;
        } else {
            std::int64_t c = sign > 0 ? add_ck(a[i].second, b[j].second) : sub_ck(a[i].second, b[j].second);
            if (c != 0) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

ZPoly& ZPoly::operator+=(const ZPoly& o)
{
    terms_ = merge(terms_, o.terms_, +1);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o)
{
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

ZPoly operator-(const ZPoly& a)
{
    ZPoly p = a;
    for (auto& t : p.terms_) t.second = sub_ck(0, t.second);
    return p;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ZPoly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) prod.emplace_back(ea + eb, mul_ck(ca, cb));
    return ZPoly::from_terms(std::move(prod));
}

std::string ZPoly::to_string(const std::string& var) const
{
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            s += std::to_string(mag);
            continue;
        }
        if (mag != 1) s += std::to_string(mag) + "*";
        s += var;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

ZPoly z_integer(int n, int r)
{
    if (n < 0 || r < 1) throw ValidationError("z_integer requires n >= 0 and r >= 1");
    std::vector<ZPoly::Term> t;
    for (int k = 0; k < n; ++k) t.emplace_back(r * k, 1);
    return ZPoly::from_terms(std::move(t));
}

} // namespace ysys
