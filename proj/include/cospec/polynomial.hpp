#pragma once

#include "cospec/matrix.hpp"
#include "cospec/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cospec {

// Univariate polynomial with exact rational coefficients, stored low degree
// first with trailing zeros stripped. The zero polynomial has no
// coefficients and degree -1.
class Polynomial {
  public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int i) const {
        static const Rational zero = 0;
        if (i < 0 || i > degree()) return zero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc *= x;
            acc += coeffs_[i];
        }
        return acc;
    }

    std::string str(std::string_view var = "x") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeff(i);
            if (c.is_zero()) continue;
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (out.empty()) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            const bool unit = (mag == 1 && i > 0);
            if (!unit) out += rational_str(mag);
            if (i > 0) {
                if (!unit) out += '*';
                out += var;
                if (i > 1) out += '^' + std::to_string(i);
            }
        }
        return out;
    }

    bool operator==(const Polynomial&) const = default;

  private:
    std::vector<Rational> coeffs_;
};

inline bool poly_equal(const Polynomial& a, const Polynomial& b) { return a == b; }

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence:
// M_1 = M, c_{n-k} = -tr(M_k)/k, M_{k+1} = M (M_k + c_{n-k} I). Every
// division is by an integer k, and with exact rationals the recurrence is an
// identity, not an approximation.
inline Polynomial char_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const int n = m.rows();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[static_cast<std::size_t>(n)] = 1;
    Matrix acc = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shifted = acc;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += coeffs[static_cast<std::size_t>(n - k + 1)];
            acc = m * shifted;
        }
        coeffs[static_cast<std::size_t>(n - k)] = -acc.trace() / k;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace cospec
