#include "ysys/polymat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ysys/checked.hpp"
#include "ysys/errors.hpp"

namespace ysys {

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows()) throw ValidationError("polynomial matrix shape mismatch");
    PolyMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            ZPoly s;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
            c(i, j) = std::move(s);
        }
    return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("polynomial matrix shape mismatch");
    PolyMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

PolyMatrix reversed(const PolyMatrix& m)
{
    PolyMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).reversed();
    return c;
}

IntMatrix eval_at_one(const PolyMatrix& m)
{
    IntMatrix c(m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).eval_at_one();
    return c;
}

std::int64_t YDatum::coeff(int i, int j, int p) const
{
    auto it = n.find({i, j, p});
    return it == n.end() ? 0 : it->second;
}

std::int64_t YDatum::plus(int i, int j, int p) const { return pos_part(coeff(i, j, p)); }
std::int64_t YDatum::minus(int i, int j, int p) const { return neg_part(coeff(i, j, p)); }

int YDatum::index_of(const std::string& label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ValidationError("unknown index label '" + label + "'");
    return static_cast<int>(it - labels.begin());
}

void validate(const YDatum& d)
{
    std::ostringstream msg;
    bool bad = false;
    if (d.r.size() != d.labels.size()) {
        msg << "r has " << d.r.size() << " entries for " << d.labels.size() << " indices; ";
        bad = true;
    }
    std::set<std::string> seen;
    for (const auto& l : d.labels)
        if (!seen.insert(l).second) {
            msg << "duplicate label '" << l << "'; ";
            bad = true;
        }
    for (std::size_t i = 0; i < d.r.size(); ++i)
        if (d.r[i] < 1) {
            msg << "r_" << d.labels[i] << " = " << d.r[i] << " must be >= 1; ";
            bad = true;
        }
    for (const auto& [key, v] : d.n) {
        auto [i, j, p] = key;
        const int n_idx = static_cast<int>(d.labels.size());
        if (i < 0 || j < 0 || i >= n_idx || j >= n_idx) {
            msg << "index out of range in n; ";
            bad = true;
            continue;
        }
        if (v == 0) continue;
        if (p <= 0 || i >= static_cast<int>(d.r.size()) || p >= d.r[i]) {
            msg << "support violation (need 0 < p < r_i) at (" << d.labels[i] << "," << d.labels[j] << "," << p
                << "); ";
            bad = true;
        }
    }
    if (bad) {
        std::string text = msg.str();
        text.resize(text.size() - 2); // trailing "; "
        throw ValidationError(text);
    }
}

YDatum make_ydatum(std::vector<std::string> labels, std::vector<int> r, const std::vector<InteractionSpec>& n)
{
    YDatum d{std::move(labels), std::move(r), {}};
    for (const auto& e : n) {
        if (e.v == 0) continue;
        auto key = InteractionKey{d.index_of(e.i), d.index_of(e.j), e.p};
        d.n[key] = add_ck(d.coeff(std::get<0>(key), std::get<1>(key), e.p), e.v);
        if (d.n[key] == 0) d.n.erase(key);
    }
    validate(d);
    return d;
}

MatrixPair ydatum_to_matrices(const YDatum& d)
{
    validate(d);
    const std::size_t n = d.rank();
    MatrixPair m{d.labels, PolyMatrix(n, n), PolyMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        ZPoly diag = ZPoly(1) + ZPoly::monomial(d.r[i]);
        m.plus(i, i) = diag;
        m.minus(i, i) = diag;
    }
    for (const auto& [key, v] : d.n) {
        auto [i, j, p] = key;
        if (v > 0)
            m.plus(i, j) -= ZPoly::monomial(p, v);
        else
            m.minus(i, j) -= ZPoly::monomial(p, -v);
    }
    return m;
}

YDatum matrices_to_ydatum(const MatrixPair& p)
{
    const std::size_t n = p.rank();
    if (p.plus.rows() != n || p.plus.cols() != n || p.minus.rows() != n || p.minus.cols() != n)
        throw ValidationError("A_+ and A_- must both be square of size |I|");
    YDatum d{p.labels, std::vector<int>(n, 0), {}};
    for (std::size_t i = 0; i < n; ++i) {
        // Diagonal: 1 + z^{r_i} - (terms strictly between 0 and r_i).
        int r_plus = p.plus(i, i).is_zero() ? 0 : p.plus(i, i).max_exponent();
        int r_minus = p.minus(i, i).is_zero() ? 0 : p.minus(i, i).max_exponent();
        if (r_plus != r_minus)
            throw ValidationError("diagonals of A_+ and A_- imply different r_" + p.labels[i]);
        if (r_plus < 1 || p.plus(i, i).coeff(r_plus) != 1 || p.plus(i, i).coeff(0) != 1 ||
            p.minus(i, i).coeff(r_plus) != 1 || p.minus(i, i).coeff(0) != 1)
            throw ValidationError("diagonal entry " + p.labels[i] + " is not of the form 1 + z^r - (lower terms)");
        d.r[i] = r_plus;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ZPoly np = -p.plus(i, j);
            ZPoly nm = -p.minus(i, j);
            if (i == j) {
                ZPoly n0 = ZPoly(1) + ZPoly::monomial(d.r[i]);
                np += n0;
                nm += n0;
            }
            auto take = [&](const ZPoly& poly, int sign, const char* which) {
                for (const auto& [e, c] : poly.terms()) {
                    if (c < 0)
                        throw ValidationError(std::string("N_") + which + " entry (" + p.labels[i] + "," +
                                              p.labels[j] + ") has a negative coefficient at z^" +
                                              std::to_string(e));
                    if (e <= 0 || e >= d.r[i])
                        throw ValidationError("support violation (need 0 < p < r_i) at (" + p.labels[i] + "," +
                                              p.labels[j] + "," + std::to_string(e) + ")");
                    auto key = InteractionKey{static_cast<int>(i), static_cast<int>(j), e};
                    if (d.n.count(key))
                        throw ValidationError("n^+ and n^- both nonzero at (" + p.labels[i] + "," + p.labels[j] +
                                              "," + std::to_string(e) + ")");
                    d.n[key] = sign * c;
                }
            };
            take(np, +1, "+");
            take(nm, -1, "-");
        }
    validate(d);
    return d;
}

PolyMatrix symplectic_defect(const MatrixPair& p)
{
    return p.plus * reversed(p.minus).transpose() - p.minus * reversed(p.plus).transpose();
}

bool check_symplectic(const MatrixPair& p)
{
    const PolyMatrix d = symplectic_defect(p);
    return std::all_of(d.data().begin(), d.data().end(), [](const ZPoly& e) { return e.is_zero(); });
}

std::pair<IntMatrix, IntMatrix> eval_at_one(const MatrixPair& p)
{
    return {eval_at_one(p.plus), eval_at_one(p.minus)};
}

MatrixPair opposite(const MatrixPair& p) { return {p.labels, p.minus, p.plus}; }

MatrixPair direct_sum(const MatrixPair& a, const MatrixPair& b)
{
    std::set<std::string> la(a.labels.begin(), a.labels.end());
    for (const auto& l : b.labels)
        if (la.count(l)) throw ValidationError("direct_sum: label '" + l + "' occurs in both summands");
    const std::size_t na = a.rank(), n = a.rank() + b.rank();
    MatrixPair s;
    s.labels = a.labels;
    s.labels.insert(s.labels.end(), b.labels.begin(), b.labels.end());
    s.plus = PolyMatrix(n, n);
    s.minus = PolyMatrix(n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            s.plus(i, j) = a.plus(i, j);
            s.minus(i, j) = a.minus(i, j);
        }
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) {
            s.plus(na + i, na + j) = b.plus(i, j);
            s.minus(na + i, na + j) = b.minus(i, j);
        }
    return s;
}

bool is_decomposable(const MatrixPair& p)
{
    const std::size_t n = p.rank();
    if (n <= 1) return false;
    std::vector<int> comp(n, -1);
    std::vector<std::size_t> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (comp[w] >= 0) continue;
            bool coupled = !p.plus(v, w).is_zero() || !p.plus(w, v).is_zero() || !p.minus(v, w).is_zero() ||
                           !p.minus(w, v).is_zero();
            if (coupled) {
                comp[w] = 0;
                stack.push_back(w);
            }
        }
    }
    return std::any_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

MatrixPair permute_indices(const MatrixPair& p, const std::vector<int>& perm)
{
    const std::size_t n = p.rank();
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(n);
    std::iota(iota.begin(), iota.end(), 0);
    if (sorted != iota) throw ValidationError("permute_indices: not a permutation");
    MatrixPair q{std::vector<std::string>(n), PolyMatrix(n, n), PolyMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        q.labels[k] = p.labels[perm[k]];
        for (std::size_t l = 0; l < n; ++l) {
            q.plus(k, l) = p.plus(perm[k], perm[l]);
            q.minus(k, l) = p.minus(perm[k], perm[l]);
        }
    }
    return q;
}

std::vector<int> r_values(const MatrixPair& p)
{
    std::vector<int> r(p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i) r[i] = p.plus(i, i).is_zero() ? 0 : p.plus(i, i).max_exponent();
    return r;
}

} // namespace ysys
