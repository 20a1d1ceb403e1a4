#ifndef TCARANK_TSVD_HPP
#define TCARANK_TSVD_HPP

#include <vector>

#include <Eigen/Dense>

namespace tcarank {

// Nonnegative matrix normalized to total 1, with its margins.
struct CorrespondenceTable {
    Eigen::MatrixXd p;
    Eigen::VectorXd row_masses;
    Eigen::VectorXd col_masses;
};

// Validates and normalizes a nonnegative count/score matrix.
CorrespondenceTable correspondence_table(const Eigen::MatrixXd& counts);

// First residual: p - r c'. Row and column sums of the result are zero.
Eigen::MatrixXd center(const CorrespondenceTable& table);

// One taxicab factor. Invariants (all exact up to fp rounding):
//   a = P u, b = P'v, u = sgn(b), v = sgn(a) with sgn(0) = -1,
//   ||a||_1 = ||b||_1 = lambda, 1'a = 1'b = 0 on centered residuals.
struct TaxicabFactor {
    Eigen::VectorXd u; // column-side sign vector, length J
    Eigen::VectorXd v; // row-side sign vector, length I
    Eigen::VectorXd a; // row basic vector, length I
    Eigen::VectorXd b; // column basic vector, length J
    double lambda = 0.0;
    bool exact = false; // found by complete enumeration
};

enum class SolveMethod { Exact, CrissCross, Auto };

struct TsvdOptions {
    SolveMethod method = SolveMethod::Auto;
    // Complete enumeration is used when min(I, J) does not exceed this.
    int exact_limit = 22;
};

// Globally optimal factor of a residual matrix, by enumerating sign
// vectors on the smaller dimension (2^(m-1) candidates, the first
// coordinate fixed to +1; ties broken lexicographically, -1 before +1).
TaxicabFactor tsvd_exact(const Eigen::MatrixXd& residual, int exact_limit = 22);

// Iterates the transition formulas (u = sgn(b), a = Pu; v = sgn(a),
// b = P'v) from each start row of the residual as initial b, keeping the
// best factor over starts. Ascent: lambda never decreases within a run.
// The result is feasible, hence lambda <= the exact optimum. When
// `lambda_trace` is given it receives the per-iteration lambda values of
// every run, in order.
TaxicabFactor tsvd_crisscross(const Eigen::MatrixXd& residual,
                              const std::vector<int>& start_rows = {},
                              std::vector<double>* lambda_trace = nullptr);

// Rank-one update P - a b'/lambda. The result annihilates u and v.
Eigen::MatrixXd deflate(const Eigen::MatrixXd& residual, const TaxicabFactor& factor);

struct TaxicabDecomposition {
    CorrespondenceTable table;
    std::vector<TaxicabFactor> factors; // extraction order; no lambda monotonicity implied
    double residual_norm = 0.0;         // entrywise L1 norm of the final residual
};

// Centers the table, then alternately extracts and deflates up to k
// factors. Extraction stops early once lambda < 1e-12 (numerical rank
// exhausted). Auto picks exact when min(I, J) <= exact_limit, otherwise
// criss-cross restarted from every row.
TaxicabDecomposition decompose(const CorrespondenceTable& table, int k,
                               const TsvdOptions& options = {});

// sgn with sgn(0) = -1.
inline double sign_or_minus(double x) { return x > 0.0 ? 1.0 : -1.0; }

Eigen::VectorXd sign_vector(const Eigen::VectorXd& x);

} // namespace tcarank

#endif
