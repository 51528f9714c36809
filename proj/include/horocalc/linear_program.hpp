#ifndef HOROCALC_LINEAR_PROGRAM_HPP
#define HOROCALC_LINEAR_PROGRAM_HPP

#include <optional>
#include <vector>

#include "horocalc/scalar.hpp"

namespace horocalc {

enum class LpStatus
{
    Optimal,
    Infeasible,
    Unbounded
};

template <typename Scalar>
struct LpResult
{
    LpStatus status = LpStatus::Infeasible;
    Scalar value{};           // objective value when Optimal
    Vector<Scalar> solution;  // primal solution when Optimal
};

/**
 * Dense two-phase tableau simplex for
 *
 *     minimize c^T x   subject to   A x = b,  x >= 0.
 *
 * Entering and leaving variables follow Bland's smallest-index rule, so the
 * method terminates on degenerate problems. Intended for exact scalar types
 * (Rational); every pivot is an exact field operation.
 */
template <typename Scalar>
class SimplexSolver
{
public:
    SimplexSolver(const Matrix<Scalar>& A, const Vector<Scalar>& b, const Vector<Scalar>& c)
        : m_(A.rows()), n_(A.cols()), cost_(c)
    {
        if (b.size() != m_ || c.size() != n_)
            throw DimensionMismatch("inconsistent LP dimensions");
        // Tableau layout: [A | I_artificial | b] with the objective in the last row.
        tableau_ = Matrix<Scalar>::Zero(m_ + 1, n_ + m_ + 1);
        for (Eigen::Index i = 0; i < m_; ++i)
        {
            const bool flip = b(i) < 0;
            for (Eigen::Index j = 0; j < n_; ++j)
                tableau_(i, j) = flip ? Scalar(-A(i, j)) : A(i, j);
            tableau_(i, n_ + i) = Scalar(1);
            tableau_(i, rhs()) = flip ? Scalar(-b(i)) : b(i);
            basis_.push_back(n_ + i);
        }
    }

    LpResult<Scalar> solve()
    {
        LpResult<Scalar> result;
        // Phase 1: minimise the sum of artificial variables.
        tableau_.row(m_).setZero();
        for (Eigen::Index j = n_; j < n_ + m_; ++j)
            tableau_(m_, j) = Scalar(1);
        for (Eigen::Index i = 0; i < m_; ++i)
            tableau_.row(m_) -= tableau_.row(i);
        run(n_ + m_);
        if (-tableau_(m_, rhs()) != 0)
            return result;

        drive_out_artificials();

        // Phase 2 on the original objective, artificial columns excluded.
        tableau_.row(static_cast<Eigen::Index>(basis_.size())).setZero();
        const Eigen::Index rows = static_cast<Eigen::Index>(basis_.size());
        for (Eigen::Index j = 0; j < n_; ++j)
            tableau_(rows, j) = cost_(j);
        for (Eigen::Index i = 0; i < rows; ++i)
        {
            const Scalar cb = cost_(basis_[static_cast<std::size_t>(i)]);
            if (cb != 0)
                tableau_.row(rows) -= tableau_.row(i) * cb;
        }
        if (!run(n_))
        {
            result.status = LpStatus::Unbounded;
            return result;
        }
        result.status = LpStatus::Optimal;
        result.value = -tableau_(rows, rhs());
        result.solution = Vector<Scalar>::Zero(n_);
        for (Eigen::Index i = 0; i < rows; ++i)
            result.solution(basis_[static_cast<std::size_t>(i)]) = tableau_(i, rhs());
        return result;
    }

private:
    Eigen::Index rhs() const { return n_ + m_; }
    Eigen::Index objective_row() const { return static_cast<Eigen::Index>(basis_.size()); }

    void pivot(Eigen::Index row, Eigen::Index col)
    {
        const Scalar p = tableau_(row, col);
        tableau_.row(row) /= p;
        for (Eigen::Index i = 0; i < tableau_.rows(); ++i)
        {
            if (i == row || tableau_(i, col) == 0)
                continue;
            const Scalar f = tableau_(i, col);
            tableau_.row(i) -= tableau_.row(row) * f;
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    // Returns false on unboundedness. Columns >= `columns` never enter.
    bool run(Eigen::Index columns)
    {
        const Eigen::Index obj = objective_row();
        while (true)
        {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < columns; ++j)
                if (tableau_(obj, j) < 0)
                {
                    enter = j;
                    break;
                }
            if (enter < 0)
                return true;
            Eigen::Index leave = -1;
            Scalar best{};
            for (Eigen::Index i = 0; i < obj; ++i)
            {
                if (tableau_(i, enter) <= 0)
                    continue;
                Scalar ratio = tableau_(i, rhs()) / tableau_(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[static_cast<std::size_t>(i)] <
                                          basis_[static_cast<std::size_t>(leave)]))
                {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials()
    {
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(basis_.size());)
        {
            if (basis_[static_cast<std::size_t>(i)] < n_)
            {
                ++i;
                continue;
            }
            Eigen::Index col = -1;
            for (Eigen::Index j = 0; j < n_; ++j)
                if (tableau_(i, j) != 0)
                {
                    col = j;
                    break;
                }
            if (col >= 0)
            {
                pivot(i, col);
                ++i;
                continue;
            }
            // Redundant equality: drop the row, keeping the objective row last.
            const Eigen::Index last = tableau_.rows() - 1;
            Matrix<Scalar> reduced(tableau_.rows() - 1, tableau_.cols());
            for (Eigen::Index r = 0, out = 0; r <= last; ++r)
                if (r != i)
                    reduced.row(out++) = tableau_.row(r);
            tableau_ = std::move(reduced);
            basis_.erase(basis_.begin() + i);
        }
    }

    Eigen::Index m_;
    Eigen::Index n_;
    Vector<Scalar> cost_;
    Matrix<Scalar> tableau_;
    std::vector<Eigen::Index> basis_;
};

template <typename Scalar>
LpResult<Scalar> solve_standard_form(const Matrix<Scalar>& A, const Vector<Scalar>& b,
                                     const Vector<Scalar>& c)
{
    return SimplexSolver<Scalar>(A, b, c).solve();
}

/// Columns of `generators` as an LP constraint matrix.
template <typename Scalar>
Matrix<Scalar> column_matrix(const std::vector<Vector<Scalar>>& generators, Eigen::Index dim)
{
    Matrix<Scalar> m(dim, static_cast<Eigen::Index>(generators.size()));
    for (std::size_t j = 0; j < generators.size(); ++j)
        m.col(static_cast<Eigen::Index>(j)) = generators[j];
    return m;
}

/// Minimum of sum(alpha) over alpha >= 0 with sum alpha_i g_i = x, or nullopt
/// when x lies outside the cone spanned by the generators.
template <typename Scalar>
std::optional<Scalar> min_cone_coefficient_sum(const std::vector<Vector<Scalar>>& generators,
                                               const Vector<Scalar>& x)
{
    if (generators.empty())
    {
        if (std::all_of(x.begin(), x.end(), [](const Scalar& v) { return v == 0; }))
            return Scalar(0);
        return std::nullopt;
    }
    const Matrix<Scalar> A = column_matrix(generators, x.size());
    const Vector<Scalar> c = Vector<Scalar>::Constant(A.cols(), Scalar(1));
    LpResult<Scalar> r = solve_standard_form(A, x, c);
    if (r.status != LpStatus::Optimal)
        return std::nullopt;
    return r.value;
}

/// Whether x is a non-negative combination of the generators (Farkas test).
template <typename Scalar>
bool in_cone(const std::vector<Vector<Scalar>>& generators, const Vector<Scalar>& x)
{
    return min_cone_coefficient_sum(generators, x).has_value();
}

/// Whether x is a convex combination of the points.
template <typename Scalar>
bool in_convex_hull(const std::vector<Vector<Scalar>>& points, const Vector<Scalar>& x)
{
    if (points.empty())
        return false;
    const Eigen::Index d = x.size();
    Matrix<Scalar> A(d + 1, static_cast<Eigen::Index>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j)
    {
        A.block(0, static_cast<Eigen::Index>(j), d, 1) = points[j];
        A(d, static_cast<Eigen::Index>(j)) = Scalar(1);
    }
    Vector<Scalar> b(d + 1);
    b.head(d) = x;
    b(d) = Scalar(1);
    const Vector<Scalar> c = Vector<Scalar>::Zero(A.cols());
    return solve_standard_form(A, b, c).status == LpStatus::Optimal;
}

/**
 * Maximizes <objective, x> over free x subject to rows(normals) . x <= bounds.
 * Returns nullopt when infeasible; throws std::domain_error when unbounded.
 */
template <typename Scalar>
std::optional<Scalar> maximize_over_polyhedron(const Vector<Scalar>& objective,
                                               const std::vector<Vector<Scalar>>& normals,
                                               const std::vector<Scalar>& bounds)
{
    const Eigen::Index d = objective.size();
    const Eigen::Index m = static_cast<Eigen::Index>(normals.size());
    // x = x+ - x-, slack s >= 0:  N x+ - N x- + s = bounds.
    Matrix<Scalar> A = Matrix<Scalar>::Zero(m, 2 * d + m);
    Vector<Scalar> b(m);
    for (Eigen::Index i = 0; i < m; ++i)
    {
        const auto& n = normals[static_cast<std::size_t>(i)];
        A.block(i, 0, 1, d) = n.transpose();
        A.block(i, d, 1, d) = -n.transpose();
        A(i, 2 * d + i) = Scalar(1);
        b(i) = bounds[static_cast<std::size_t>(i)];
    }
    Vector<Scalar> c = Vector<Scalar>::Zero(2 * d + m);
    c.head(d) = -objective;
    c.segment(d, d) = objective;
    LpResult<Scalar> r = solve_standard_form(A, b, c);
    if (r.status == LpStatus::Infeasible)
        return std::nullopt;
    if (r.status == LpStatus::Unbounded)
        throw std::domain_error("linear program is unbounded");
    return Scalar(-r.value);
}

} // namespace horocalc

#endif // HOROCALC_LINEAR_PROGRAM_HPP
