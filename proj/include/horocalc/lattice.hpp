#ifndef HOROCALC_LATTICE_HPP
#define HOROCALC_LATTICE_HPP

#include <vector>

#include "horocalc/scalar.hpp"

namespace horocalc {

/**
 * An integer sublattice of Z^d stored by its column Hermite normal form.
 *
 * The basis is lower triangular in the column sense: column j has its first
 * non-zero entry (the pivot) at row pivot_rows()[j], pivot rows strictly
 * increase, pivots are positive, and every other entry of a pivot row lies in
 * [0, pivot). The form is unique, so two lattices are equal iff their bases
 * are equal entrywise.
 */
class Lattice
{
public:
    explicit Lattice(Eigen::Index dim);

    Eigen::Index dim() const { return dim_; }
    Eigen::Index rank() const { return basis_.cols(); }
    const Matrix<Integer>& basis() const { return basis_; }
    Point basis_vector(Eigen::Index j) const { return basis_.col(j); }
    const std::vector<Eigen::Index>& pivot_rows() const { return pivot_rows_; }

    /// Index [Z^d : L] for full-rank lattices; 0 when rank < dim.
    Integer index() const;

    /// Canonical representative of v modulo the lattice: every pivot
    /// coordinate of the result lies in [0, pivot).
    Point reduce(const Point& v) const;
    bool contains(const Point& v) const { return is_zero(reduce(v)); }

    friend bool operator==(const Lattice& a, const Lattice& b)
    {
        if (a.dim_ != b.dim_ || a.basis_.cols() != b.basis_.cols())
            return false;
        return std::equal(a.basis_.data(), a.basis_.data() + a.basis_.size(), b.basis_.data());
    }
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

    friend Lattice lattice_from(const std::vector<Point>& vectors, Eigen::Index dim);

private:
    Eigen::Index dim_;
    Matrix<Integer> basis_;
    std::vector<Eigen::Index> pivot_rows_;
};

/// Column Hermite normal form of the integer span of the columns of `m`;
/// zero columns are dropped.
Matrix<Integer> hermite_normal_form(Matrix<Integer> m);

/// The lattice spanned by `vectors` (all of dimension `dim`).
Lattice lattice_from(const std::vector<Point>& vectors, Eigen::Index dim);

/// Lattice generated by all differences u - v of the given points.
Lattice difference_lattice(const std::vector<Point>& points, Eigen::Index dim);

/// Throws DimensionMismatch when dimensions differ.
bool lattice_equal(const Lattice& a, const Lattice& b);

} // namespace horocalc

#endif // HOROCALC_LATTICE_HPP
