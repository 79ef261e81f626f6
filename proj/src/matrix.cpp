#include "qftforge/matrix.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qftforge {

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = cplx{1.0, 0.0};
    return m;
}

CMatrix multiply(const CMatrix& lhs, const CMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("multiply: dimension mismatch");
    const std::size_t n = lhs.dim();
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx v = lhs(r, k);
            if (v == cplx{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += v * rhs(k, c);
            }
        }
    }
    return out;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double unitarity_error(const CMatrix& u) {
    return max_abs_diff(multiply(adjoint(u), u), CMatrix::identity(u.dim()));
}

std::uint64_t permute_index_bits(std::uint64_t index, std::span<const int> wire_map) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < wire_map.size(); ++i) {
        out |= ((index >> i) & 1u) << wire_map[i];
    }
    return out;
}

CMatrix relabel_wires(const CMatrix& u, std::span<const int> wire_map) {
    const std::size_t n = u.dim();
    if (n != (std::size_t{1} << wire_map.size())) {
        throw std::invalid_argument("relabel_wires: wire map does not match dimension");
    }
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::uint64_t pr = permute_index_bits(r, wire_map);
        for (std::size_t c = 0; c < n; ++c) {
            out(pr, permute_index_bits(c, wire_map)) = u(r, c);
        }
    }
    return out;
}

}  // namespace qftforge
