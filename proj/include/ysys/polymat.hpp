#ifndef YSYS_POLYMAT_HPP
#define YSYS_POLYMAT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ysys/matrix.hpp"
#include "ysys/zpoly.hpp"

namespace ysys {

using PolyMatrix = Matrix<ZPoly>;

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
/// Entrywise z -> z^{-1}.
PolyMatrix reversed(const PolyMatrix& m);
IntMatrix eval_at_one(const PolyMatrix& m);

/// Key (i, j, p) of an interaction coefficient n_{ij;p}, with dense indices.
using InteractionKey = std::tuple<int, int, int>;

/// The data (r, n) of a Y-system over an ordered, labelled index set.
///
/// Labels are opaque strings; everything internal uses the dense position
/// of a label in `labels`. Zero coefficients are never stored in `n`.
struct YDatum {
    std::vector<std::string> labels;
    std::vector<int> r;
    std::map<InteractionKey, std::int64_t> n;

    std::size_t rank() const { return labels.size(); }
    std::int64_t coeff(int i, int j, int p) const;
    std::int64_t plus(int i, int j, int p) const;  ///< max(0, n)
    std::int64_t minus(int i, int j, int p) const; ///< max(0, -n)
    int index_of(const std::string& label) const;

    friend bool operator==(const YDatum&, const YDatum&) = default;
};

struct InteractionSpec {
    std::string i;
    std::string j;
    int p;
    std::int64_t v;
};

/// Builds and validates a datum from labelled entries.
YDatum make_ydatum(std::vector<std::string> labels, std::vector<int> r, const std::vector<InteractionSpec>& n);

/// Throws ValidationError naming every violated (i,j,p) if r_i < 1 or some
/// n_{ij;p} is nonzero outside 0 < p < r_i.
void validate(const YDatum& d);

/// A_+(z) = N_0(z) - N_+(z), A_-(z) = N_0(z) - N_-(z) with N_0 = diag(1 + z^{r_i}).
struct MatrixPair {
    std::vector<std::string> labels;
    PolyMatrix plus;
    PolyMatrix minus;

    std::size_t rank() const { return labels.size(); }
    friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

MatrixPair ydatum_to_matrices(const YDatum& d);
YDatum matrices_to_ydatum(const MatrixPair& p);

/// A_+(z) A_-(z^{-1})^T == A_-(z) A_+(z^{-1})^T as Laurent matrices.
bool check_symplectic(const MatrixPair& p);
/// The difference A_+(z) A_-(z^{-1})^T - A_-(z) A_+(z^{-1})^T.
PolyMatrix symplectic_defect(const MatrixPair& p);

std::pair<IntMatrix, IntMatrix> eval_at_one(const MatrixPair& p);

/// Swaps A_+ and A_-; corresponds to Y -> Y^{-1}.
MatrixPair opposite(const MatrixPair& p);

/// Block-diagonal sum; the label sets must be disjoint.
MatrixPair direct_sum(const MatrixPair& a, const MatrixPair& b);

/// True when the index set splits into two nonempty parts with no coupling
/// in either A_+ or A_-.
bool is_decomposable(const MatrixPair& p);

/// Reorders indices: position k of the result is position perm[k] of p.
MatrixPair permute_indices(const MatrixPair& p, const std::vector<int>& perm);

/// Per-index r_i read off the diagonal.
std::vector<int> r_values(const MatrixPair& p);

} // namespace ysys

#endif
