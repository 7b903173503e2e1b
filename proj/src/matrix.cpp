#include "sset/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sset {

IntMatrix IntMatrix::eye(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols != other.rows) throw std::runtime_error("IntMatrix::mul: shape mismatch");
    IntMatrix out(rows, other.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < other.cols; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
    if (rows != other.rows) throw std::runtime_error("IntMatrix::hstack: shape mismatch");
    IntMatrix out(rows, cols + other.cols);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) out.at(i, j) = at(i, j);
        for (size_t j = 0; j < other.cols; ++j) out.at(i, cols + j) = other.at(i, j);
    }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols) throw std::runtime_error("IntMatrix::apply: shape mismatch");
    std::vector<Int> out(rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> Smith::torsion() const {
    std::vector<Int> t;
    for (size_t i = 0; i < rank; ++i)
        if (d.at(i, i) > 1) t.push_back(d.at(i, i));
    return t;
}

Smith smith_normal_form(const IntMatrix& a) {
    Smith s;
    s.d = a;
    s.p = IntMatrix::eye(a.rows);
    s.q = IntMatrix::eye(a.cols);
    IntMatrix& d = s.d;
    IntMatrix& p = s.p;
    IntMatrix& q = s.q;

    auto swap_rows = [&](size_t i, size_t j) {
        for (size_t k = 0; k < d.cols; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (size_t k = 0; k < p.cols; ++k) std::swap(p.at(i, k), p.at(j, k));
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t k = 0; k < d.rows; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (size_t k = 0; k < q.rows; ++k) std::swap(q.at(k, i), q.at(k, j));
    };
    auto add_row = [&](size_t dst, size_t src, const Int& c) {  // row dst += c * row src
        for (size_t k = 0; k < d.cols; ++k) d.at(dst, k) += c * d.at(src, k);
        for (size_t k = 0; k < p.cols; ++k) p.at(dst, k) += c * p.at(src, k);
    };
    auto add_col = [&](size_t dst, size_t src, const Int& c) {
        for (size_t k = 0; k < d.rows; ++k) d.at(k, dst) += c * d.at(k, src);
        for (size_t k = 0; k < q.rows; ++k) q.at(k, dst) += c * q.at(k, src);
    };
    auto negate_row = [&](size_t i) {
        for (size_t k = 0; k < d.cols; ++k) d.at(i, k) = -d.at(i, k);
        for (size_t k = 0; k < p.cols; ++k) p.at(i, k) = -p.at(i, k);
    };

    size_t t = 0;
    const size_t n = std::min(a.rows, a.cols);
    while (t < n) {
        // find a pivot: smallest nonzero absolute value in the remaining block
        size_t pi = t, pj = t;
        Int best = 0;
        for (size_t i = t; i < d.rows; ++i)
            for (size_t j = t; j < d.cols; ++j) {
                Int v = abs(d.at(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (size_t i = t + 1; i < d.rows; ++i) {
            if (d.at(i, t) == 0) continue;
            Int c = d.at(i, t) / d.at(t, t);
            add_row(i, t, -c);
            if (d.at(i, t) != 0) clean = false;
        }
        for (size_t j = t + 1; j < d.cols; ++j) {
            if (d.at(t, j) == 0) continue;
            Int c = d.at(t, j) / d.at(t, t);
            add_col(j, t, -c);
            if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // re-pick a smaller pivot
        // divisibility: fold in any entry the pivot does not divide
        bool redo = false;
        for (size_t i = t + 1; i < d.rows && !redo; ++i)
            for (size_t j = t + 1; j < d.cols && !redo; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        if (d.at(t, t) < 0) negate_row(t);
        ++t;
    }
    s.rank = t;
    return s;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    Smith s = smith_normal_form(a);
    std::vector<Int> pb = s.p.apply(b);
    std::vector<Int> y(a.cols);
    for (size_t i = 0; i < pb.size(); ++i) {
        if (i < s.rank) {
            if (pb[i] % s.d.at(i, i) != 0) return std::nullopt;
            y[i] = pb[i] / s.d.at(i, i);
        } else if (pb[i] != 0) {
            return std::nullopt;
        }
    }
    return s.q.apply(y);
}

IntMatrix kernel_basis(const IntMatrix& a) {
    Smith s = smith_normal_form(a);
    IntMatrix out(a.cols, a.cols - s.rank);
    for (size_t j = s.rank; j < a.cols; ++j)
        for (size_t i = 0; i < a.cols; ++i) out.at(i, j - s.rank) = s.q.at(i, j);
    return out;
}

std::string AbelianInvariants::str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (rank == 1) s = "Z";
    else if (rank > 1) s = "Z^" + std::to_string(rank);
    for (const Int& t : torsion) {
        if (!s.empty()) s += " (+) ";
        s += "Z/" + t.str();
    }
    return s;
}

AbelianInvariants cokernel_invariants(const IntMatrix& relations, size_t generators) {
    AbelianInvariants inv;
    if (relations.cols == 0) {
        inv.rank = static_cast<long long>(generators);
        return inv;
    }
    Smith s = smith_normal_form(relations);
    inv.rank = static_cast<long long>(generators) - static_cast<long long>(s.rank);
    inv.torsion = s.torsion();
    return inv;
}

}  // namespace sset
