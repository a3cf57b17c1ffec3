#pragma once

#include "cospec/hypergraph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

// Dense order-k tensor over exact rationals, row-major over 0-based
// multi-indices (first index has the largest stride). Dense storage is
// capped at 10^7 entries; everything this library targets stays far below.
class Tensor {
  public:
    static constexpr std::size_t kMaxEntries = 10'000'000;

    Tensor(int order, int dim) : order_(order), dim_(dim) {
        if (order < 1) throw std::invalid_argument("tensor: order must be at least 1");
        if (dim < 1) throw std::invalid_argument("tensor: dim must be at least 1");
        std::size_t count = 1;
        for (int i = 0; i < order; ++i) {
            if (count > kMaxEntries / static_cast<std::size_t>(dim)) {
                throw std::invalid_argument("tensor: dim^order exceeds dense storage cap");
            }
            count *= static_cast<std::size_t>(dim);
        }
        entries_.resize(count);
    }

    int order() const { return order_; }
    int dim() const { return dim_; }
    std::size_t entry_count() const { return entries_.size(); }

    const Rational& entry(std::size_t linear) const { return entries_[linear]; }
    Rational& entry(std::size_t linear) { return entries_[linear]; }

    std::size_t linear_index(std::span<const int> idx) const {
        if (static_cast<int>(idx.size()) != order_) {
            throw std::invalid_argument("tensor: multi-index size differs from order");
        }
        std::size_t linear = 0;
        for (int d : idx) {
            if (d < 0 || d >= dim_) throw std::out_of_range("tensor: index out of range");
            linear = linear * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(d);
        }
        return linear;
    }

    const Rational& at(std::span<const int> idx) const { return entries_[linear_index(idx)]; }
    Rational& at(std::span<const int> idx) { return entries_[linear_index(idx)]; }
    const Rational& at(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }
    Rational& at(std::initializer_list<int> idx) {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }

    bool operator==(const Tensor&) const = default;

  private:
    int order_;
    int dim_;
    std::vector<Rational> entries_;
};

// All-ones diagonal, zero elsewhere. Acts as the identity for the tensor
// product below; preserving it under a sandwich is what separates plain
// cospectrality from cospectrality with the full E-characteristic spectrum.
inline Tensor unit_tensor(int order, int dim) {
    Tensor t(order, dim);
    std::size_t diag_stride = 0;
    std::size_t stride = 1;
    for (int s = 0; s < order; ++s) {
        diag_stride += stride;
        stride *= static_cast<std::size_t>(dim);
    }
    for (int i = 0; i < dim; ++i) t.entry(static_cast<std::size_t>(i) * diag_stride) = 1;
    return t;
}

// Order-k adjacency tensor: 1/(k-1)! at every permutation of every edge.
inline Tensor adjacency_tensor(const Hypergraph& g) {
    Tensor t(g.k(), g.n());
    const Rational value = Rational(1, factorial(g.k() - 1));
    for (const Edge& e : g.edges()) {
        std::vector<int> idx(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) idx[i] = e[i] - 1;
        do {
            t.at(std::span<const int>(idx)) = value;
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return t;
}

// General tensor-times-tensor product: for a of order m and b of order r,
// the result c has order (m-1)(r-1)+1 with
//   c_{i,A_1..A_{m-1}} = sum_{j_1..j_{m-1}} a_{i,j_1..j_{m-1}} * prod_s b_{j_s,A_s},
// each A_s a block of r-1 indices. With b an order-2 matrix this is the
// usual similarity-style multi-linear action.
inline Tensor shao_product(const Tensor& a, const Tensor& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("shao_product: dimension mismatch");
    if (a.order() < 2) throw std::invalid_argument("shao_product: left order must be at least 2");
    const int n = a.dim();
    const int m = a.order();
    const int out_order = (m - 1) * (b.order() - 1) + 1;
    Tensor c(out_order, n);

    std::size_t block = 1;  // n^(r-1): size of one slot block A_s
    for (int s = 1; s < b.order(); ++s) block *= static_cast<std::size_t>(n);
    std::size_t alpha_count = 1;  // block^(m-1)
    for (int s = 1; s < m; ++s) alpha_count *= block;
    std::size_t j_count = 1;  // n^(m-1)
    for (int s = 1; s < m; ++s) j_count *= static_cast<std::size_t>(n);

    std::vector<int> j_digits(static_cast<std::size_t>(m) - 1);
    for (std::size_t al = 0; al < a.entry_count(); ++al) {
        const Rational& av = a.entry(al);
        if (av.is_zero()) continue;
        const std::size_t i = al / j_count;
        std::size_t rest = al % j_count;
        for (std::size_t s = j_digits.size(); s-- > 0;) {
            j_digits[s] = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        for (std::size_t alpha = 0; alpha < alpha_count; ++alpha) {
            Rational term = av;
            std::size_t a_rest = alpha;
            for (std::size_t s = j_digits.size(); s-- > 0 && !term.is_zero();) {
                const std::size_t slot = a_rest % block;
                a_rest /= block;
                term *= b.entry(static_cast<std::size_t>(j_digits[s]) * block + slot);
            }
            if (term.is_zero()) continue;
            c.entry(i * alpha_count + alpha) += term;
        }
    }
    return c;
}

// Multi-linear change of basis: result_{i_1..i_k} =
// sum_{j_1..j_k} a_{j_1..j_k} * q_{i_1 j_1} * ... * q_{i_k j_k},
// computed one mode at a time (k passes of cost n^(k+1) with zero skipping)
// instead of the n^(2k) direct sum. Addition of exact rationals is
// order-independent, so the result matches the direct sum identically.
inline Tensor sandwich(const Matrix& q, const Tensor& a) {
    const int n = a.dim();
    const int k = a.order();
    if (q.rows() != n || q.cols() != n) {
        throw std::invalid_argument("sandwich: matrix shape must be dim x dim");
    }
    std::vector<std::vector<std::pair<int, Rational>>> col_nz(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const Rational& v = q.at(i, j);
            if (!v.is_zero()) col_nz[static_cast<std::size_t>(j)].emplace_back(i, v);
        }
    }
    Tensor cur = a;
    std::size_t stride = cur.entry_count();
    for (int mode = 0; mode < k; ++mode) {
        stride /= static_cast<std::size_t>(n);  // n^(k-1-mode)
        Tensor next(k, n);
        const std::size_t outer_count = cur.entry_count() / (stride * static_cast<std::size_t>(n));
        for (std::size_t outer = 0; outer < outer_count; ++outer) {
            const std::size_t base = outer * static_cast<std::size_t>(n) * stride;
            for (int j = 0; j < n; ++j) {
                const std::size_t row = base + static_cast<std::size_t>(j) * stride;
                for (std::size_t inner = 0; inner < stride; ++inner) {
                    const Rational& v = cur.entry(row + inner);
                    if (v.is_zero()) continue;
                    for (const auto& [i, qv] : col_nz[static_cast<std::size_t>(j)]) {
                        next.entry(base + static_cast<std::size_t>(i) * stride + inner) += qv * v;
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Invariance under every adjacent index transposition implies invariance
// under the full symmetric group.
inline bool is_symmetric(const Tensor& a) {
    const int n = a.dim();
    const int k = a.order();
    std::size_t stride_hi = a.entry_count() / static_cast<std::size_t>(n);
    for (int mode = 0; mode + 1 < k; ++mode) {
        const std::size_t stride_lo = stride_hi / static_cast<std::size_t>(n);
        for (std::size_t idx = 0; idx < a.entry_count(); ++idx) {
            const int d_hi = static_cast<int>(idx / stride_hi % static_cast<std::size_t>(n));
            const int d_lo = static_cast<int>(idx / stride_lo % static_cast<std::size_t>(n));
            if (d_hi >= d_lo) continue;
            const std::size_t swapped = idx +
                static_cast<std::size_t>(d_lo - d_hi) * stride_hi -
                static_cast<std::size_t>(d_lo - d_hi) * stride_lo;
            if (a.entry(idx) != a.entry(swapped)) return false;
        }
        stride_hi = stride_lo;
    }
    return true;
}

inline bool preserves_unit_tensor(const Matrix& q, int order) {
    if (q.rows() != q.cols()) throw std::invalid_argument("preserves_unit_tensor: matrix not square");
    const Tensor unit = unit_tensor(order, q.rows());
    return sandwich(q, unit) == unit;
}

// (A x)_i = sum over the remaining k-1 indices of a_{i,j_2..j_k} x_{j_2}...x_{j_k}.
inline std::vector<Rational> tensor_apply(const Tensor& a, const std::vector<Rational>& x) {
    const int n = a.dim();
    if (a.order() < 2) throw std::invalid_argument("tensor_apply: order must be at least 2");
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("tensor_apply: vector size mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(n));
    const std::size_t lead_stride = a.entry_count() / static_cast<std::size_t>(n);
    for (std::size_t idx = 0; idx < a.entry_count(); ++idx) {
        const Rational& v = a.entry(idx);
        if (v.is_zero()) continue;
        Rational term = v;
        std::size_t rest = idx % lead_stride;
        std::size_t scale = lead_stride;
        while (scale > 1 && !term.is_zero()) {
            scale /= static_cast<std::size_t>(n);
            term *= x[rest / scale];
            rest %= scale;
        }
        out[idx / lead_stride] += term;
    }
    return out;
}

enum class EigenMode { H, E };

struct EigenResidual {
    std::vector<Rational> residual;
    bool is_eigenpair = false;
};

// H mode: residual_i = (A x)_i - lambda * x_i^(k-1).
// E mode: residual_i = (A x)_i - lambda * x_i, requiring x^T x = 1.
inline EigenResidual eigenpair_residual(const Tensor& a, const Rational& lambda,
                                        const std::vector<Rational>& x, EigenMode mode) {
    const int k = a.order();
    bool all_zero = true;
    for (const Rational& xi : x) {
        if (!xi.is_zero()) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) throw std::invalid_argument("eigenpair_residual: zero vector");
    if (mode == EigenMode::E) {
        Rational norm = 0;
        for (const Rational& xi : x) norm += xi * xi;
        if (norm != 1) {
            throw std::invalid_argument("eigenpair_residual: E mode requires x^T x = 1");
        }
    }
    EigenResidual r;
    r.residual = tensor_apply(a, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (mode == EigenMode::H) {
            Rational p = 1;
            for (int s = 0; s + 1 < k; ++s) p *= x[i];
            r.residual[i] -= lambda * p;
        } else {
            r.residual[i] -= lambda * x[i];
        }
    }
    r.is_eigenpair = true;
    for (const Rational& v : r.residual) {
        if (!v.is_zero()) {
            r.is_eigenpair = false;
            break;
        }
    }
    return r;
}

// Sparse listing "(i_1,...,i_k) = p/q" with 1-based indices, one entry per
// line, linear (lexicographic) order.
inline std::string tensor_dump(const Tensor& a) {
    std::string out;
    std::vector<int> digits(static_cast<std::size_t>(a.order()));
    for (std::size_t idx = 0; idx < a.entry_count(); ++idx) {
        const Rational& v = a.entry(idx);
        if (v.is_zero()) continue;
        std::size_t rest = idx;
        for (std::size_t s = digits.size(); s-- > 0;) {
            digits[s] = static_cast<int>(rest % static_cast<std::size_t>(a.dim()));
            rest /= static_cast<std::size_t>(a.dim());
        }
        out += '(';
        for (std::size_t s = 0; s < digits.size(); ++s) {
            if (s > 0) out += ',';
            out += std::to_string(digits[s] + 1);
        }
        out += ") = " + rational_str(v) + '\n';
    }
    return out;
}

}  // namespace cospec
