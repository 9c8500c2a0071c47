#ifndef YSYS_CLASSIFIER_HPP
#define YSYS_CLASSIFIER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ysys/polymat.hpp"

namespace ysys {

/// Values at z = 1 of a rank-2 pair.
struct CandidatePair1 {
    IntMatrix plus;
    IntMatrix minus;
    friend bool operator==(const CandidatePair1&, const CandidatePair1&) = default;
};

CandidatePair1 make_candidate(std::int64_t p11, std::int64_t p12, std::int64_t p21, std::int64_t p22, std::int64_t m11,
                              std::int64_t m12, std::int64_t m21, std::int64_t m22);
CandidatePair1 candidate_of(const MatrixPair& p);
std::string to_string(const IntMatrix& m);

/// Index swap and sign change (A_+ <-> A_-).
CandidatePair1 swap_indices(const CandidatePair1& c);
CandidatePair1 opposite(const CandidatePair1& c);

/// Trace and determinant positive.
bool positivity_filter(const IntMatrix& a);
/// Both matrices positive and some v = (1, t), t > 0, with v A_+ > 0 and v A_- > 0.
bool positivity_filter(const CandidatePair1& c);
/// A_+(1) A_-(1)^T symmetric.
bool symplectic_at_one(const CandidatePair1& c);

enum class BanClause { none, odd_two_two, odd_two_one, unit_unit, one_zero, triangular };

struct BanViolation {
    BanClause clause = BanClause::none;
    std::string description;
};

/// Checks every ban pattern in all four orientations (index swap, sign change).
std::optional<BanViolation> ban_check(const CandidatePair1& c);
std::string clause_name(BanClause c);

struct PairSearchOptions {
    int max_offdiag = 8; ///< off-diagonal magnitudes enumerated
    int min_diag = -2;   ///< diagonal range enumerated; positivity must cut it to {1,2}
    bool apply_bans = true;
};

struct PairSearchResult {
    std::vector<CandidatePair1> survivors; ///< one representative per class, sorted
    std::size_t matrices = 0;
    std::size_t positive_matrices = 0;
    std::size_t pairs_positive = 0;
    std::size_t pairs_symplectic = 0;
    std::size_t banned = 0;
    int max_offdiag_surviving = 0;
    int min_diag_surviving = 2;
};

/// Representative of the orbit under index swap and sign change: A_+ has the
/// larger off-diagonal mass, then |A_+21| >= |A_+12|, then larger leading diagonals.
CandidatePair1 orient(const CandidatePair1& c);

PairSearchResult pair_search(const PairSearchOptions& opt = {});

/// A two-parameter family of pairs, one per class of the classification.
struct LiftFamily {
    int id; ///< the class number 1..6
    std::string name;
    CandidatePair1 at_one;
    /// Instance for parameters (r, a); nullopt outside the valid range.
    std::function<std::optional<MatrixPair>(int r, int a)> make;
};

const std::vector<LiftFamily>& lift_families();

/// Family instance with the given orientation relative to the family's own.
struct FamilyMatch {
    const LiftFamily* family = nullptr;
    bool swapped = false;
    bool opposite = false;
};
std::optional<FamilyMatch> match_family(const CandidatePair1& c);
MatrixPair orient_instance(const MatrixPair& p, const FamilyMatch& m);
/// All instances of the matched family with every r_i <= r_max.
std::vector<MatrixPair> family_instances(const FamilyMatch& m, int r_max);

struct LiftResult {
    std::vector<MatrixPair> instances;  ///< every symplectic indecomposable pair found, sorted
    std::optional<FamilyMatch> family;  ///< family whose value at 1 equals the candidate
    bool all_in_family = false;         ///< each instance is a family instance
    bool family_complete = false;       ///< each family instance was found
};

/// Exhaustive search for A_+-(z) with the given values at 1 and r_i <= r_max.
LiftResult lift_to_z(const CandidatePair1& c, int r_max);

/// Total order used to pick representatives: (sum r, r, exponent lists of N_+ then N_-).
std::vector<std::int64_t> pair_order_key(const MatrixPair& p);

/// Least pair (in pair_order_key order) among the index-swap and slice
/// equivalents of p found among family instances with r_i <= r_max. The
/// sign change is not applied. Pairs whose values at 1 match no family are
/// only minimised over index swap.
MatrixPair canonicalize(const MatrixPair& p, int r_max = 12);

struct ClassEntry {
    int id = 0;
    CandidatePair1 at_one;
    MatrixPair representative;
    std::size_t lift_instances = 0;
    bool lift_consistent = false; ///< all_in_family && family_complete
    bool instances_collapse = false; ///< every instance canonicalises to the representative
    std::optional<int> h_plus, h_minus;
    std::optional<int> h_plus_op, h_minus_op;
    std::optional<int> period;
};

struct ClassifyOptions {
    int r_max = 12;
    bool apply_bans = true;
    int jobs = 1;
    int reddening_bound = 200;
};

struct ClassificationReport {
    PairSearchResult search;
    std::vector<ClassEntry> classes; ///< sorted by class id
    /// Candidates whose lift search found nothing (only nonempty without bans).
    std::vector<CandidatePair1> unliftable;
};

ClassificationReport classify(const ClassifyOptions& opt = {});

} // namespace ysys

#endif
