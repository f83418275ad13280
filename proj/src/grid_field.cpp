#include "drp/grid_field.hpp"

#include <fmt/core.h>

#include "drp/errors.hpp"

namespace drp {

GridField GridField::zeros(int n_x, int n_t)
{
    if (n_x < 2 || n_t < 1)
        throw DimensionError(fmt::format("grid needs n_x >= 2 and n_t >= 1 (got {}, {})", n_x, n_t));
    GridField g;
    g.interior = Matrix::Zero(n_x - 1, n_t);
    g.initial_row = Vector::Zero(n_x + 1);
    g.left_boundary = Vector::Zero(n_t + 1);
    g.right_boundary = Vector::Zero(n_t + 1);
    return g;
}

double GridField::at(int i, int n) const
{
    if (n == 0) return initial_row(i);
    if (i == 0) return left_boundary(n);
    if (i == n_x()) return right_boundary(n);
    return interior(i - 1, n - 1);
}

Matrix GridField::full() const
{
    const int nx = n_x();
    const int nt = n_t();
    Matrix out(nx + 1, nt + 1);
    out.col(0) = initial_row;
    out.row(0).tail(nt) = left_boundary.tail(nt).transpose();
    out.row(nx).tail(nt) = right_boundary.tail(nt).transpose();
    out.block(1, 1, nx - 1, nt) = interior;
    return out;
}

void GridField::validate() const
{
    const int nx = n_x();
    const int nt = n_t();
    if (nx < 2 || nt < 1) throw DimensionError("grid field is empty");
    if (right_boundary.size() != left_boundary.size())
        throw DimensionError("left and right boundary sequences differ in length");
    if (interior.rows() != nx - 1 || interior.cols() != nt)
        throw DimensionError(fmt::format("interior is {}x{}, expected {}x{}", interior.rows(),
                                         interior.cols(), nx - 1, nt));
    if (initial_row(0) != left_boundary(0) || initial_row(nx) != right_boundary(0))
        throw PreconditionError("corner samples of initial row and boundary columns disagree");
}

}  // namespace drp
