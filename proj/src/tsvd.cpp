#include "tcarank/tsvd.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace tcarank {

namespace {

constexpr double kRankEps = 1e-12;

bool same_signs(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a.array() == b.array()).all();
}

// -1 before +1.
bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
}

// Iterates the transition formulas from a given column sign vector until
// the whole quadruple is self-consistent: a = Mu, v = sgn(a), b = M'v,
// u = sgn(b). Every iterate keeps lambda non-decreasing, so starting from
// an optimal u the optimum is preserved.
TaxicabFactor settle(const Eigen::MatrixXd& m, Eigen::VectorXd u,
                     std::vector<double>* lambda_trace) {
    std::vector<Eigen::VectorXd> visited;
    for (int iter = 0; iter < 256; ++iter) {
        Eigen::VectorXd a = m * u;
        Eigen::VectorXd v = sign_vector(a);
        Eigen::VectorXd b = m.transpose() * v;
        Eigen::VectorXd u_next = sign_vector(b);
        if (lambda_trace) {
            lambda_trace->push_back(a.lpNorm<1>());
            lambda_trace->push_back(b.lpNorm<1>());
        }
        if (same_signs(u_next, u)) {
            TaxicabFactor factor;
            factor.u = std::move(u);
            factor.v = std::move(v);
            factor.lambda = a.lpNorm<1>();
            factor.a = std::move(a);
            factor.b = std::move(b);
            return factor;
        }
        for (const auto& seen : visited)
            if (same_signs(seen, u_next))
                throw std::logic_error("tsvd: sign iteration cycled without a fixed point");
        visited.push_back(u);
        u = std::move(u_next);
    }
    throw std::logic_error("tsvd: sign iteration did not converge");
}

} // namespace

Eigen::VectorXd sign_vector(const Eigen::VectorXd& x) {
    return x.unaryExpr([](double value) { return sign_or_minus(value); });
}

CorrespondenceTable correspondence_table(const Eigen::MatrixXd& counts) {
    if (counts.rows() == 0 || counts.cols() == 0)
        throw std::invalid_argument("correspondence table: empty matrix");
    if ((counts.array() < 0.0).any())
        throw std::invalid_argument("correspondence table: negative entry");
    const double total = counts.sum();
    if (!(total > 0.0))
        throw std::invalid_argument("correspondence table: zero total");
    CorrespondenceTable table;
    table.p = counts / total;
    table.row_masses = table.p.rowwise().sum();
    table.col_masses = table.p.colwise().sum().transpose();
    if ((table.row_masses.array() <= 0.0).any())
        throw std::invalid_argument("correspondence table: zero row mass");
    if ((table.col_masses.array() <= 0.0).any())
        throw std::invalid_argument("correspondence table: zero column mass");
    return table;
}

Eigen::MatrixXd center(const CorrespondenceTable& table) {
    return table.p - table.row_masses * table.col_masses.transpose();
}

TaxicabFactor tsvd_exact(const Eigen::MatrixXd& residual, int exact_limit) {
    const Eigen::Index rows = residual.rows();
    const Eigen::Index cols = residual.cols();
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("tsvd_exact: empty matrix");
    const bool enumerate_cols = cols <= rows;
    const Eigen::Index n = enumerate_cols ? cols : rows;
    if (exact_limit < 1 || exact_limit > 62)
        throw std::invalid_argument("tsvd_exact: exact_limit out of range");
    if (n > exact_limit)
        throw std::invalid_argument("tsvd_exact: dimension exceeds the enumeration limit");

    // W maps the enumerated sign vector to the projected coordinates.
    const Eigen::MatrixXd w = enumerate_cols ? residual : Eigen::MatrixXd(residual.transpose());

    // Gray-code walk over sign vectors with coordinate 0 fixed to +1; each
    // step flips one coordinate, so the projection updates in O(rows).
    Eigen::VectorXd s = Eigen::VectorXd::Ones(n);
    Eigen::VectorXd proj = w.rowwise().sum();
    double best_lambda = proj.lpNorm<1>();
    Eigen::VectorXd best_s = s;
    const std::uint64_t candidates = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < candidates; ++i) {
        const int flip = std::countr_zero(i) + 1;
        s(flip) = -s(flip);
        proj += (2.0 * s(flip)) * w.col(flip);
        const double lambda = proj.lpNorm<1>();
        if (lambda > best_lambda) {
            best_lambda = lambda;
            best_s = s;
        } else if (lambda == best_lambda && lex_less(s, best_s)) {
            best_s = s;
        }
    }

    Eigen::VectorXd u0 =
        enumerate_cols ? best_s : sign_vector(residual.transpose() * best_s);
    TaxicabFactor factor = settle(residual, std::move(u0), nullptr);
    factor.exact = true;
    return factor;
}

TaxicabFactor tsvd_crisscross(const Eigen::MatrixXd& residual,
                              const std::vector<int>& start_rows,
                              std::vector<double>* lambda_trace) {
    const Eigen::Index rows = residual.rows();
    if (rows == 0 || residual.cols() == 0)
        throw std::invalid_argument("tsvd_crisscross: empty matrix");
    std::vector<int> starts = start_rows;
    if (starts.empty()) {
        starts.resize(rows);
        for (Eigen::Index i = 0; i < rows; ++i) starts[static_cast<std::size_t>(i)] = static_cast<int>(i);
    }
    bool have_best = false;
    TaxicabFactor best;
    for (int start : starts) {
        if (start < 0 || start >= rows)
            throw std::invalid_argument("tsvd_crisscross: start row out of range");
        Eigen::VectorXd b = residual.row(start).transpose();
        TaxicabFactor factor = settle(residual, sign_vector(b), lambda_trace);
        if (!have_best || factor.lambda > best.lambda ||
            (factor.lambda == best.lambda && lex_less(factor.u, best.u))) {
            best = std::move(factor);
            have_best = true;
        }
    }
    return best;
}

Eigen::MatrixXd deflate(const Eigen::MatrixXd& residual, const TaxicabFactor& factor) {
    if (!(factor.lambda > 0.0))
        throw std::invalid_argument("deflate: zero dispersion factor");
    return residual - (factor.a * factor.b.transpose()) / factor.lambda;
}

TaxicabDecomposition decompose(const CorrespondenceTable& table, int k,
                               const TsvdOptions& options) {
    const Eigen::Index smaller = std::min(table.p.rows(), table.p.cols());
    if (k < 0 || k > smaller - 1)
        throw std::invalid_argument("decompose: k exceeds min(I, J) - 1");
    TaxicabDecomposition decomposition;
    decomposition.table = table;
    Eigen::MatrixXd residual = center(table);
    for (int alpha = 0; alpha < k; ++alpha) {
        SolveMethod method = options.method;
        if (method == SolveMethod::Auto)
            method = smaller <= options.exact_limit ? SolveMethod::Exact : SolveMethod::CrissCross;
        TaxicabFactor factor = method == SolveMethod::Exact
                                   ? tsvd_exact(residual, options.exact_limit)
                                   : tsvd_crisscross(residual);
        if (factor.lambda < kRankEps) break; // numerical rank exhausted
        residual = deflate(residual, factor);
        decomposition.factors.push_back(std::move(factor));
    }
    decomposition.residual_norm = residual.cwiseAbs().sum();
    return decomposition;
}

} // namespace tcarank
