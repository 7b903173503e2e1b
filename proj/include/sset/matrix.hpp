// Exact integer matrices and Smith normal form over arbitrary-precision
// integers, with the transform bookkeeping needed to solve linear systems
// and compute induced maps on homology.

#ifndef SSET_MATRIX_HPP
#define SSET_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sset {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Int> data;  // row-major

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}

    Int& at(size_t i, size_t j) { return data[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return data[i * cols + j]; }

    static IntMatrix eye(size_t n);
    IntMatrix mul(const IntMatrix& other) const;
    IntMatrix hstack(const IntMatrix& other) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;
};

/// P * A * Q = D with P, Q unimodular and D diagonal with divisibility
/// d_1 | d_2 | ... (non-negative diagonal).
struct Smith {
    IntMatrix d;
    IntMatrix p;  // rows x rows
    IntMatrix q;  // cols x cols
    size_t rank = 0;
    /// Diagonal entries > 1 (the torsion invariant factors).
    std::vector<Int> torsion() const;
};

Smith smith_normal_form(const IntMatrix& a);

/// Solve A x = b over the integers; nullopt when no integral solution.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

/// Columns spanning ker A (a basis of the integer kernel).
IntMatrix kernel_basis(const IntMatrix& a);

/// Canonical invariants of the abelian group Z^cols(R) / im R columns...
/// presented by generators g_1..g_n and relation columns R (n x k).
struct AbelianInvariants {
    long long rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
    bool operator==(const AbelianInvariants&) const = default;
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    std::string str() const;  // e.g. "Z^2 (+) Z/2"
};

/// Invariants of the cokernel Z^n / column span of R (R is n x k).
AbelianInvariants cokernel_invariants(const IntMatrix& relations, size_t generators);

}  // namespace sset

#endif
