#pragma once
// Thomas-algorithm tridiagonal solver with a reusable factorization.  No
// pivoting: every system assembled in this project is strictly diagonally
// dominant, which the factorization asserts by construction.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lucawave::detail {

class Tridiag {
public:
    // lo[i] multiplies x[i-1] in row i (lo[0] unused), up[i] multiplies
    // x[i+1] (up[n-1] unused).
    Tridiag(std::vector<double> lo, std::vector<double> di, std::vector<double> up)
        : lo_(std::move(lo)), di_(std::move(di)), up_(std::move(up)) {
        const std::size_t n = di_.size();
        if (lo_.size() != n || up_.size() != n || n == 0)
            throw std::invalid_argument("Tridiag: band sizes must agree");
        piv_ = di_;
        mul_.assign(n, 0.0);
        for (std::size_t i = 1; i < n; ++i) {
            if (piv_[i - 1] == 0.0) throw std::runtime_error("Tridiag: zero pivot");
            mul_[i] = lo_[i] / piv_[i - 1];
            piv_[i] = di_[i] - mul_[i] * up_[i - 1];
        }
        if (piv_.back() == 0.0) throw std::runtime_error("Tridiag: zero pivot");
    }

    std::size_t size() const { return di_.size(); }

    // In-place solve; T may be double or std::complex<double>.
    template <class T>
    void solve(std::vector<T>& rhs) const {
        const std::size_t n = size();
        for (std::size_t i = 1; i < n; ++i) rhs[i] -= mul_[i] * rhs[i - 1];
        rhs[n - 1] /= piv_[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - up_[i] * rhs[i + 1]) / piv_[i];
    }

    // y = A x for the original (unfactored) band.
    template <class T>
    std::vector<T> apply(const std::vector<T>& x) const {
        const std::size_t n = size();
        std::vector<T> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            T acc = di_[i] * x[i];
            if (i > 0) acc += lo_[i] * x[i - 1];
            if (i + 1 < n) acc += up_[i] * x[i + 1];
            y[i] = acc;
        }
        return y;
    }

private:
    std::vector<double> lo_, di_, up_;
    std::vector<double> piv_, mul_;
};

}  // namespace lucawave::detail
