#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qftforge/state.hpp"

namespace qftforge {

// Small dense complex matrix, row-major. Sized for verification work
// (2^n x 2^n with n <= 10), not for large linear algebra.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static CMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

CMatrix multiply(const CMatrix& lhs, const CMatrix& rhs);
CMatrix adjoint(const CMatrix& m);

double max_abs_diff(const CMatrix& a, const CMatrix& b);
// max-abs entry of U†U - I.
double unitarity_error(const CMatrix& u);

// Wire relabeling: qubit i of the input becomes wire_map[i], i.e.
// result[p(r)][p(c)] = u[r][c] with p permuting index bits by wire_map.
CMatrix relabel_wires(const CMatrix& u, std::span<const int> wire_map);

// Index with its bits permuted by wire_map (bit i -> bit wire_map[i]).
std::uint64_t permute_index_bits(std::uint64_t index, std::span<const int> wire_map);

}  // namespace qftforge
