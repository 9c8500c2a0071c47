#include "ysys/classifier.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include <gmpxx.h>

#include "ysys/errors.hpp"
#include "ysys/slices.hpp"
#include "ysys/ysystem.hpp"

namespace ysys {

// ---------------------------------------------------------------- values at one

CandidatePair1 make_candidate(std::int64_t p11, std::int64_t p12, std::int64_t p21, std::int64_t p22, std::int64_t m11,
                              std::int64_t m12, std::int64_t m21, std::int64_t m22)
{
    return {IntMatrix(2, 2, std::vector<std::int64_t>{p11, p12, p21, p22}),
            IntMatrix(2, 2, std::vector<std::int64_t>{m11, m12, m21, m22})};
}

CandidatePair1 candidate_of(const MatrixPair& p)
{
    if (p.rank() != 2) throw ValidationError("the classifier handles rank 2 only");
    auto [plus, minus] = eval_at_one(p);
    return {plus, minus};
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

IntMatrix swap2(const IntMatrix& m)
{
    return IntMatrix(2, 2, std::vector<std::int64_t>{m(1, 1), m(1, 0), m(0, 1), m(0, 0)});
}

std::int64_t offmag(const IntMatrix& m) { return -(m(0, 1) + m(1, 0)); }

std::vector<std::int64_t> flat(const CandidatePair1& c)
{
    std::vector<std::int64_t> v = c.plus.data();
    v.insert(v.end(), c.minus.data().begin(), c.minus.data().end());
    return v;
}

} // namespace

CandidatePair1 swap_indices(const CandidatePair1& c) { return {swap2(c.plus), swap2(c.minus)}; }
CandidatePair1 opposite(const CandidatePair1& c) { return {c.minus, c.plus}; }

bool positivity_filter(const IntMatrix& a)
{
    const std::int64_t tr = a(0, 0) + a(1, 1);
    const std::int64_t det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    return tr > 0 && det > 0;
}

bool positivity_filter(const CandidatePair1& c)
{
    if (!positivity_filter(c.plus) || !positivity_filter(c.minus)) return false;
    // v = (1, t): need A_11 + t A_21 > 0 and A_12 + t A_22 > 0 for both matrices.
    mpq_class lo = 0;
    std::optional<mpq_class> hi;
    auto constrain = [&](std::int64_t c0, std::int64_t c1) {
        if (c1 == 0) return c0 > 0;
        mpq_class bound(-c0, c1);
        bound.canonicalize();
        if (c1 > 0)
            lo = std::max(lo, bound);
        else if (!hi || bound < *hi)
            hi = bound;
        return true;
    };
    for (const IntMatrix* m : {&c.plus, &c.minus}) {
        if (!constrain((*m)(0, 0), (*m)(1, 0))) return false;
        if (!constrain((*m)(0, 1), (*m)(1, 1))) return false;
    }
    return !hi || lo < *hi;
}

bool symplectic_at_one(const CandidatePair1& c)
{
    IntMatrix s(2, 2, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) s(i, j) += c.plus(i, k) * c.minus(j, k);
    return s(0, 1) == s(1, 0);
}

std::string clause_name(BanClause c)
{
    switch (c) {
    case BanClause::none: return "none";
    case BanClause::odd_two_two: return "odd off-diagonals with diagonal 2 in both";
    case BanClause::odd_two_one: return "odd off-diagonals with diagonals 2 and 1";
    case BanClause::unit_unit: return "rows (1,-1) in both";
    case BanClause::one_zero: return "row (1,0) against diagonal 1";
    case BanClause::triangular: return "common zero off-diagonal";
    }
    return "?";
}

namespace {

/// Patterns on the first rows of an oriented pair.
BanClause first_row_ban(const CandidatePair1& c)
{
    const std::int64_t p1 = c.plus(0, 0), a = -c.plus(0, 1), m1 = c.minus(0, 0), b = -c.minus(0, 1);
    if (p1 == 2 && m1 == 2 && a % 2 == 1 && b % 2 == 1) return BanClause::odd_two_two;
    if (p1 == 2 && m1 == 1 && a % 2 == 1 && b % 2 == 1) return BanClause::odd_two_one;
    if (p1 == 1 && a == 1 && m1 == 1 && b == 1) return BanClause::unit_unit;
    if (p1 == 1 && a == 0 && m1 == 1) return BanClause::one_zero;
    if (a == 0 && b == 0) return BanClause::triangular;
    return BanClause::none;
}

std::vector<CandidatePair1> orientations(const CandidatePair1& c)
{
    return {c, swap_indices(c), opposite(c), opposite(swap_indices(c))};
}

} // namespace

std::optional<BanViolation> ban_check(const CandidatePair1& c)
{
    const char* names[] = {"as given", "indices swapped", "signs changed", "indices swapped and signs changed"};
    auto all = orientations(c);
    for (std::size_t k = 0; k < all.size(); ++k) {
        BanClause b = first_row_ban(all[k]);
        if (b != BanClause::none) return BanViolation{b, clause_name(b) + " (" + names[k] + ")"};
    }
    return std::nullopt;
}

CandidatePair1 orient(const CandidatePair1& c)
{
    auto key = [](const CandidatePair1& x) {
        std::vector<std::int64_t> k{offmag(x.plus) - offmag(x.minus),
                                    -x.plus(1, 0) + x.plus(0, 1),
                                    x.plus(0, 0) - x.plus(1, 1),
                                    -x.minus(1, 0) + x.minus(0, 1),
                                    x.minus(0, 0) - x.minus(1, 1)};
        for (auto v : flat(x)) k.push_back(-v);
        return k;
    };
    auto all = orientations(c);
    return *std::max_element(all.begin(), all.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
}

PairSearchResult pair_search(const PairSearchOptions& opt)
{
    PairSearchResult res;
    std::vector<IntMatrix> positive;
    for (int d1 = opt.min_diag; d1 <= 2; ++d1)
        for (int d2 = opt.min_diag; d2 <= 2; ++d2)
            for (int o1 = 0; o1 <= opt.max_offdiag; ++o1)
                for (int o2 = 0; o2 <= opt.max_offdiag; ++o2) {
                    ++res.matrices;
                    IntMatrix m(2, 2, std::vector<std::int64_t>{d1, -o1, -o2, d2});
                    if (positivity_filter(m)) positive.push_back(m);
                }
    res.positive_matrices = positive.size();
    std::map<std::vector<std::int64_t>, CandidatePair1> classes;
    for (const auto& a : positive)
        for (const auto& b : positive) {
            CandidatePair1 c{a, b};
            if (!positivity_filter(c)) continue;
            ++res.pairs_positive;
            if (!symplectic_at_one(c)) continue;
            ++res.pairs_symplectic;
            if (opt.apply_bans && ban_check(c)) {
                ++res.banned;
                continue;
            }
            CandidatePair1 o = orient(c);
            classes.emplace(flat(o), o);
        }
    for (auto& [k, c] : classes) {
        for (const IntMatrix* m : {&c.plus, &c.minus}) {
            res.max_offdiag_surviving =
                static_cast<int>(std::max<std::int64_t>({res.max_offdiag_surviving, -(*m)(0, 1), -(*m)(1, 0)}));
            res.min_diag_surviving = static_cast<int>(std::min<std::int64_t>({res.min_diag_surviving, (*m)(0, 0), (*m)(1, 1)}));
        }
        res.survivors.push_back(c);
    }
    return res;
}

// ---------------------------------------------------------------- families

namespace {

ZPoly zm(int e, std::int64_t c = 1) { return ZPoly::monomial(e, c); }

std::optional<MatrixPair> checked_pair(PolyMatrix plus, PolyMatrix minus)
{
    MatrixPair p{{"1", "2"}, std::move(plus), std::move(minus)};
    try {
        matrices_to_ydatum(p);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
    return p;
}

PolyMatrix pm(ZPoly a, ZPoly b, ZPoly c, ZPoly d)
{
    return PolyMatrix(2, 2, std::vector<ZPoly>{std::move(a), std::move(b), std::move(c), std::move(d)});
}

std::vector<LiftFamily> make_families()
{
    std::vector<LiftFamily> fs;
    for (int n = 1; n <= 3; ++n) {
        LiftFamily f;
        f.id = n;
        f.name = "r1 = r, r2 = " + std::to_string(2 * n - 1) + "r";
        f.at_one = make_candidate(2, -1, -n, 2, 2, 0, -(n - 1), 2);
        f.make = [n](int r, int a) -> std::optional<MatrixPair> {
            if (r < 1 || a <= 0 || a >= r) return std::nullopt;
            const int r2 = (2 * n - 1) * r;
            ZPoly b, c;
            for (int i = 1; i <= n; ++i) b -= zm((2 * i - 1) * r - a);
            for (int i = 1; i <= n - 1; ++i) c -= zm(2 * i * r - a);
            return checked_pair(pm(1 + zm(r), -zm(a), b, 1 + zm(r2)), pm(1 + zm(r), ZPoly(), c, 1 + zm(r2)));
        };
        fs.push_back(f);
    }
    {
        LiftFamily f;
        f.id = 4;
        f.name = "r1 = r2 = 2r, A_- diagonal with middle term";
        f.at_one = make_candidate(2, -1, -1, 2, 1, 0, 0, 1);
        f.make = [](int r, int a) -> std::optional<MatrixPair> {
            if (r < 1 || a <= 0 || a >= 2 * r) return std::nullopt;
            const ZPoly d = 1 + zm(2 * r) - zm(r);
            return checked_pair(pm(1 + zm(2 * r), -zm(a), -zm(2 * r - a), 1 + zm(2 * r)), pm(d, ZPoly(), ZPoly(), d));
        };
        fs.push_back(f);
    }
    {
        LiftFamily f;
        f.id = 5;
        f.name = "r1 = 2r, r2 = 3r";
        f.at_one = make_candidate(2, -1, -2, 2, 1, 0, 0, 2);
        f.make = [](int r, int a) -> std::optional<MatrixPair> {
            if (r < 1 || a <= 0 || a >= 2 * r) return std::nullopt;
            return checked_pair(pm(1 + zm(2 * r), -zm(a), -zm(2 * r - a) - zm(3 * r - a), 1 + zm(3 * r)),
                                pm(1 + zm(2 * r) - zm(r), ZPoly(), ZPoly(), 1 + zm(3 * r)));
        };
        fs.push_back(f);
    }
    {
        LiftFamily f;
        f.id = 6;
        f.name = "r1 = r2 = 2r, A_+ with middle term";
        f.at_one = make_candidate(2, -1, -1, 1, 2, 0, 0, 2);
        f.make = [](int r, int a) -> std::optional<MatrixPair> {
            if (r < 1 || a <= 0 || a >= 2 * r) return std::nullopt;
            return checked_pair(pm(1 + zm(2 * r), -zm(a), -zm(2 * r - a), 1 + zm(2 * r) - zm(r)),
                                pm(1 + zm(2 * r), ZPoly(), ZPoly(), 1 + zm(2 * r)));
        };
        fs.push_back(f);
    }
    return fs;
}

MatrixPair relabel(MatrixPair p)
{
    p.labels = {"1", "2"};
    return p;
}

} // namespace

const std::vector<LiftFamily>& lift_families()
{
    static const std::vector<LiftFamily> fs = make_families();
    return fs;
}

std::optional<FamilyMatch> match_family(const CandidatePair1& c)
{
    for (const auto& f : lift_families())
        for (bool s : {false, true})
            for (bool o : {false, true}) {
                CandidatePair1 t = f.at_one;
                if (s) t = swap_indices(t);
                if (o) t = opposite(t);
                if (t == c) return FamilyMatch{&f, s, o};
            }
    return std::nullopt;
}

MatrixPair orient_instance(const MatrixPair& p, const FamilyMatch& m)
{
    MatrixPair q = p;
    if (m.swapped) q = relabel(permute_indices(q, {1, 0}));
    if (m.opposite) q = ysys::opposite(q);
    return q;
}

std::vector<std::int64_t> pair_order_key(const MatrixPair& p)
{
    const std::vector<int> r = r_values(p);
    std::vector<std::int64_t> key{0};
    for (int x : r) key[0] += x;
    key.insert(key.end(), r.begin(), r.end());
    const YDatum d = matrices_to_ydatum(p);
    for (int sign : {+1, -1})
        for (std::size_t i = 0; i < d.rank(); ++i)
            for (std::size_t j = 0; j < d.rank(); ++j) {
                std::vector<std::int64_t> exps;
                for (const auto& [k, v] : d.n) {
                    const auto [a, b, e] = k;
                    if (a != static_cast<int>(i) || b != static_cast<int>(j) || v * sign <= 0) continue;
                    for (std::int64_t t = 0; t < v * sign; ++t) exps.push_back(e);
                }
                key.push_back(static_cast<std::int64_t>(exps.size()));
                key.insert(key.end(), exps.begin(), exps.end());
            }
    return key;
}

namespace {

bool key_less(const MatrixPair& a, const MatrixPair& b) { return pair_order_key(a) < pair_order_key(b); }

void sort_unique(std::vector<MatrixPair>& v)
{
    std::sort(v.begin(), v.end(), key_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::vector<MatrixPair> family_instances(const FamilyMatch& m, int r_max)
{
    std::vector<MatrixPair> out;
    for (int r = 1; r <= r_max; ++r)
        for (int a = 1; a < 2 * r; ++a) {
            auto p = m.family->make(r, a);
            if (!p) continue;
            const auto rs = r_values(*p);
            if (*std::max_element(rs.begin(), rs.end()) > r_max) continue;
            out.push_back(orient_instance(*p, m));
        }
    sort_unique(out);
    return out;
}

// ---------------------------------------------------------------- lift search

namespace {

struct RowChoice {
    ZPoly plus_diag, minus_diag, plus_off, minus_off; // N_+- entries of the row
};

/// Nondecreasing exponent sequences of length m in [1, r-1], as polynomials.
void multisets(int r, int m, int lo, ZPoly acc, std::vector<ZPoly>& out)
{
    if (m == 0) {
        out.push_back(acc);
        return;
    }
    for (int e = lo; e < r; ++e) multisets(r, m - 1, e, acc + ZPoly::monomial(e), out);
}

bool disjoint(const ZPoly& a, const ZPoly& b)
{
    for (const auto& [e, c] : a.terms())
        if (b.coeff(e) != 0) return false;
    return true;
}

ZPoly antisym(const ZPoly& f, const ZPoly& g) { return f * g.reversed() - g * f.reversed(); }

/// Rows (N_ii^+, N_ii^-, N_ij^+, N_ij^-) with the given sums at 1 whose
/// diagonal defect entry vanishes.
std::vector<RowChoice> row_choices(int r, std::int64_t dp, std::int64_t dm, std::int64_t mp, std::int64_t mm)
{
    std::vector<ZPoly> offp, offm, diagp, diagm;
    multisets(r, static_cast<int>(mp), 1, ZPoly(), offp);
    multisets(r, static_cast<int>(mm), 1, ZPoly(), offm);
    multisets(r, static_cast<int>(dp), 1, ZPoly(), diagp);
    multisets(r, static_cast<int>(dm), 1, ZPoly(), diagm);
    std::map<ZPoly, std::vector<std::pair<ZPoly, ZPoly>>> by_defect;
    for (const auto& p : offp)
        for (const auto& m : offm)
            if (disjoint(p, m)) by_defect[antisym(p, m)].emplace_back(p, m);
    std::vector<RowChoice> out;
    const ZPoly base = 1 + ZPoly::monomial(r);
    for (const auto& p : diagp)
        for (const auto& m : diagm) {
            if (!disjoint(p, m)) continue;
            const ZPoly d = antisym(base - p, base - m);
            auto it = by_defect.find(-d);
            if (it == by_defect.end()) continue;
            for (const auto& [op, om] : it->second) out.push_back({p, m, op, om});
        }
    return out;
}

} // namespace

LiftResult lift_to_z(const CandidatePair1& c, int r_max)
{
    LiftResult res;
    const auto& P = c.plus;
    const auto& M = c.minus;
    for (int r1 = 1; r1 <= r_max; ++r1) {
        auto rows1 = row_choices(r1, 2 - P(0, 0), 2 - M(0, 0), -P(0, 1), -M(0, 1));
        if (rows1.empty()) continue;
        for (int r2 = 1; r2 <= r_max; ++r2) {
            auto rows2 = row_choices(r2, 2 - P(1, 1), 2 - M(1, 1), -P(1, 0), -M(1, 0));
            const ZPoly b1 = 1 + ZPoly::monomial(r1), b2 = 1 + ZPoly::monomial(r2);
            for (const auto& x : rows1)
                for (const auto& y : rows2) {
                    const ZPoly p11 = b1 - x.plus_diag, m11 = b1 - x.minus_diag;
                    const ZPoly p22 = b2 - y.plus_diag, m22 = b2 - y.minus_diag;
                    const ZPoly p12 = -x.plus_off, m12 = -x.minus_off, p21 = -y.plus_off, m21 = -y.minus_off;
                    // Off-diagonal entry of A_+(z) A_-(z^-1)^T - A_-(z) A_+(z^-1)^T.
                    const ZPoly d = p11 * m21.reversed() + p12 * m22.reversed() - m11 * p21.reversed() -
                                    m12 * p22.reversed();
                    if (!d.is_zero()) continue;
                    MatrixPair p{{"1", "2"}, pm(p11, p12, p21, p22), pm(m11, m12, m21, m22)};
                    if (!check_symplectic(p)) throw InternalError("lift search accepted a non-symplectic pair");
                    if (is_decomposable(p)) continue;
                    res.instances.push_back(p);
                }
        }
    }
    sort_unique(res.instances);
    res.family = match_family(c);
    if (res.family) {
        const auto expected = family_instances(*res.family, r_max);
        res.all_in_family = std::includes(expected.begin(), expected.end(), res.instances.begin(),
                                          res.instances.end(), key_less);
        res.family_complete = std::includes(res.instances.begin(), res.instances.end(), expected.begin(),
                                            expected.end(), key_less);
    }
    return res;
}

// ---------------------------------------------------------------- canonical forms

namespace {

struct PoolEntry {
    MatrixPair pair;
    std::vector<std::int64_t> slice_form;
};

std::mutex pool_mu;
std::map<std::tuple<int, bool, bool, int>, std::vector<PoolEntry>> pool_cache;

const std::vector<PoolEntry>& pool_for(const FamilyMatch& m, int r_max)
{
    std::lock_guard lock(pool_mu);
    auto key = std::make_tuple(m.family->id, m.swapped, m.opposite, r_max);
    auto it = pool_cache.find(key);
    if (it != pool_cache.end()) return it->second;
    std::vector<PoolEntry> pool;
    for (const auto& p : family_instances(m, r_max)) {
        pool.push_back({p, slice_canonical_form(p)});
        MatrixPair s = relabel(permute_indices(p, {1, 0}));
        pool.push_back({s, pool.back().slice_form});
    }
    return pool_cache.emplace(key, std::move(pool)).first->second;
}

} // namespace

MatrixPair canonicalize(const MatrixPair& p, int r_max)
{
    MatrixPair best = relabel(p);
    MatrixPair swapped = relabel(permute_indices(p, {1, 0}));
    if (key_less(swapped, best)) best = swapped;
    auto m = match_family(candidate_of(p));
    if (!m) return best;
    const auto form = slice_canonical_form(p);
    for (const auto& e : pool_for(*m, r_max))
        if (e.slice_form == form && key_less(e.pair, best)) best = e.pair;
    return best;
}

ClassificationReport classify(const ClassifyOptions& opt)
{
    ClassificationReport rep;
    PairSearchOptions po;
    po.apply_bans = opt.apply_bans;
    rep.search = pair_search(po);

    auto work = [&](const CandidatePair1& c) {
        std::optional<ClassEntry> out;
        LiftResult lift = lift_to_z(c, opt.r_max);
        if (lift.instances.empty()) return out;
        ClassEntry e;
        e.id = lift.family ? lift.family->family->id : 0;
        e.at_one = c;
        e.lift_instances = lift.instances.size();
        e.lift_consistent = lift.all_in_family && lift.family_complete;
        e.representative = canonicalize(lift.instances.front(), opt.r_max);
        e.instances_collapse = true;
        for (const auto& inst : lift.instances)
            if (!(canonicalize(inst, opt.r_max) == e.representative)) e.instances_collapse = false;
        Reddening red = find_reddening(e.representative, opt.reddening_bound);
        e.h_plus = red.h_plus;
        e.h_minus = red.h_minus;
        Reddening op = find_reddening(ysys::opposite(e.representative), opt.reddening_bound);
        e.h_plus_op = op.h_plus;
        e.h_minus_op = op.h_minus;
        e.period = find_period(e.representative, std::nullopt, opt.reddening_bound).period;
        out = e;
        return out;
    };

    std::vector<std::optional<ClassEntry>> results(rep.search.survivors.size());
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
    for (std::size_t start = 0; start < results.size(); start += jobs) {
        std::vector<std::future<std::optional<ClassEntry>>> fut;
        for (std::size_t k = start; k < std::min(results.size(), start + jobs); ++k)
            fut.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, work,
                                     std::cref(rep.search.survivors[k])));
        for (std::size_t k = 0; k < fut.size(); ++k) results[start + k] = fut[k].get();
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
        if (results[k])
            rep.classes.push_back(*results[k]);
        else
            rep.unliftable.push_back(rep.search.survivors[k]);
    }
    std::stable_sort(rep.classes.begin(), rep.classes.end(),
                     [](const ClassEntry& a, const ClassEntry& b) { return a.id < b.id; });
    return rep;
}

} // namespace ysys
