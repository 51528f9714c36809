#include "horocalc/scalar.hpp"

#include <sstream>

namespace horocalc {

Integer determinant(Matrix<Integer> m)
{
    const Eigen::Index n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return Integer(1);
    Integer sign = 1;
    Integer prev = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k)
    {
        if (m(k, k) == 0)
        {
            Eigen::Index swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return Integer(0);
            m.row(k).swap(m.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Point orthogonal_complement(const Matrix<Integer>& columns)
{
    const Eigen::Index d = columns.rows();
    if (columns.cols() != d - 1)
        throw std::invalid_argument("orthogonal_complement expects d-1 columns");
    Point normal(d);
    for (Eigen::Index i = 0; i < d; ++i)
    {
        Matrix<Integer> minor(d - 1, d - 1);
        for (Eigen::Index r = 0, out = 0; r < d; ++r)
        {
            if (r == i)
                continue;
            minor.row(out++) = columns.row(r);
        }
        Integer det = determinant(minor);
        normal(i) = (i % 2 == 0) ? det : Integer(-det);
    }
    return normal;
}

Eigen::Index rank(const Matrix<Integer>& columns)
{
    Matrix<Integer> m = columns;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c)
    {
        Eigen::Index pivot = r;
        while (pivot < rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        m.row(r).swap(m.row(pivot));
        for (Eigen::Index i = r + 1; i < rows; ++i)
        {
            if (m(i, c) == 0)
                continue;
            Integer a = m(r, c);
            Integer b = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                m(i, j) = m(i, j) * a - m(r, j) * b;
            m.row(i) = primitive(Point(m.row(i).transpose())).transpose();
        }
        ++r;
    }
    return r;
}

std::string to_string(const Point& p)
{
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < p.size(); ++i)
        os << (i ? "," : "") << p(i);
    os << ')';
    return os.str();
}

} // namespace horocalc
