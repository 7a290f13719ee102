#ifndef LPI_QDIFF_HPP
#define LPI_QDIFF_HPP

#include <vector>

#include "lpi/ideal.hpp"
#include "lpi/series.hpp"

namespace lpi {

/// The system F(x) = A.W(x).F(x q^S) for a column vector F of K series.
struct QDiffSystem {
    BinaryMatrix A;
    MonomialDiag weights;
    int S = 1;

    [[nodiscard]] std::size_t order() const noexcept { return weights.size(); }
};

/// Throws std::invalid_argument unless A is K x K with 0/1 entries and ones in
/// its first row and column, weights[0] = 1, weights[j] has positive x-degree
/// for j >= 1, and S >= 1.
void validate(const QDiffSystem& sys);

/// The system attached to an ideal through its associated digraph.
[[nodiscard]] QDiffSystem system_from_ideal(const SpanOneIdeal& ideal);

/// The unique solution with F_1(0) = ... = F_K(0) = 1, computed one x-degree at
/// a time. Row 1 is implicit in itself and is solved by dividing by
/// 1 - q^{nS}.
[[nodiscard]] std::vector<Series> solve(const QDiffSystem& sys, int x_max, int q_max);
[[nodiscard]] inline std::vector<Series> solve(const QDiffSystem& sys, int q_max)
{
    return solve(sys, q_max, q_max);
}

/// A.G over series.
[[nodiscard]] std::vector<Series> f_from_g(const BinaryMatrix& A, const std::vector<Series>& G);

/// F(x) - A.W(x).F(xq^S), entrywise.
[[nodiscard]] std::vector<Series> residual(const std::vector<Series>& F, const QDiffSystem& sys);
/// True iff the residual vanishes on the shared truncation region.
[[nodiscard]] bool check_system(const std::vector<Series>& F, const QDiffSystem& sys);

} // namespace lpi

#endif
