#include "horocalc/lattice.hpp"

namespace horocalc {

namespace {

struct ExtendedGcd
{
    Integer g, x, y;
};

// x*a + y*b = g with g >= 0.
ExtendedGcd extended_gcd(const Integer& a, const Integer& b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0)
    {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

} // namespace

Matrix<Integer> hermite_normal_form(Matrix<Integer> h)
{
    const Eigen::Index rows = h.rows();
    const Eigen::Index cols = h.cols();
    Eigen::Index pivot_col = 0;
    for (Eigen::Index i = 0; i < rows && pivot_col < cols; ++i)
    {
        for (Eigen::Index j = pivot_col + 1; j < cols; ++j)
        {
            if (h(i, j) == 0)
                continue;
            const Integer a = h(i, pivot_col);
            const Integer b = h(i, j);
            ExtendedGcd e = extended_gcd(a, b);
            Vector<Integer> c0 = h.col(pivot_col);
            Vector<Integer> cj = h.col(j);
            // Unimodular 2x2 column operation zeroing h(i, j).
            h.col(pivot_col) = c0 * e.x + cj * e.y;
            h.col(j) = c0 * Integer(b / e.g) - cj * Integer(a / e.g);
        }
        if (h(i, pivot_col) == 0)
            continue;
        if (h(i, pivot_col) < 0)
            h.col(pivot_col) = -h.col(pivot_col);
        const Integer p = h(i, pivot_col);
        for (Eigen::Index c = 0; c < pivot_col; ++c)
        {
            Integer q = floor_div(h(i, c), p);
            if (q != 0)
                h.col(c) -= h.col(pivot_col) * q;
        }
        ++pivot_col;
    }
    return h.leftCols(pivot_col);
}

Lattice::Lattice(Eigen::Index dim) : dim_(dim), basis_(dim, 0) {}

Lattice lattice_from(const std::vector<Point>& vectors, Eigen::Index dim)
{
    Matrix<Integer> m(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j)
    {
        if (vectors[j].size() != dim)
            throw DimensionMismatch("generator " + to_string(vectors[j]) + " in dimension " +
                                    std::to_string(dim));
        m.col(static_cast<Eigen::Index>(j)) = vectors[j];
    }
    Lattice out(dim);
    out.basis_ = hermite_normal_form(std::move(m));
    for (Eigen::Index j = 0; j < out.basis_.cols(); ++j)
    {
        Eigen::Index r = 0;
        while (out.basis_(r, j) == 0)
            ++r;
        out.pivot_rows_.push_back(r);
    }
    return out;
}

Lattice difference_lattice(const std::vector<Point>& points, Eigen::Index dim)
{
    std::vector<Point> diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(points[i] - points[0]);
    return lattice_from(diffs, dim);
}

Integer Lattice::index() const
{
    if (rank() < dim_)
        return Integer(0);
    Integer det = 1;
    for (Eigen::Index j = 0; j < rank(); ++j)
        det *= basis_(pivot_rows_[static_cast<std::size_t>(j)], j);
    return det;
}

Point Lattice::reduce(const Point& v) const
{
    if (v.size() != dim_)
        throw DimensionMismatch();
    Point out = v;
    for (Eigen::Index j = 0; j < rank(); ++j)
    {
        const Eigen::Index r = pivot_rows_[static_cast<std::size_t>(j)];
        Integer q = floor_div(out(r), basis_(r, j));
        if (q != 0)
            out -= basis_.col(j) * q;
    }
    return out;
}

bool lattice_equal(const Lattice& a, const Lattice& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("lattices of dimension " + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    return a == b;
}

} // namespace horocalc
