#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rgglab::graphkit::detail {

std::vector<double> CoveringSimplex::duals() const {
    // y = c_B' B^{-1}
    std::vector<double> y(m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) {
        const double cb = cost(basis_[r]);
        if (cb == 0.0) continue;
        for (std::size_t c = 0; c < m_; ++c) y[c] += cb * binv_[r * m_ + c];
    }
    return y;
}

void CoveringSimplex::refactor() {
    // Rebuild B^{-1} by Gauss-Jordan on the basis matrix.
    std::vector<double> mat(m_ * m_, 0.0);
    std::vector<double> col;
    for (std::size_t r = 0; r < m_; ++r) {
        column_vector(basis_[r], col);
        for (std::size_t i = 0; i < m_; ++i) mat[i * m_ + r] = col[i];
    }
    std::vector<double> inv(m_ * m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) inv[i * m_ + i] = 1.0;
    for (std::size_t piv = 0; piv < m_; ++piv) {
        std::size_t best = piv;
        for (std::size_t i = piv + 1; i < m_; ++i)
            if (std::fabs(mat[i * m_ + piv]) > std::fabs(mat[best * m_ + piv])) best = i;
        if (std::fabs(mat[best * m_ + piv]) < 1e-12)
            throw std::runtime_error("singular basis during refactorisation");
        if (best != piv) {
            for (std::size_t c = 0; c < m_; ++c) {
                std::swap(mat[best * m_ + c], mat[piv * m_ + c]);
                std::swap(inv[best * m_ + c], inv[piv * m_ + c]);
            }
        }
        const double inv_p = 1.0 / mat[piv * m_ + piv];
        for (std::size_t c = 0; c < m_; ++c) {
            mat[piv * m_ + c] *= inv_p;
            inv[piv * m_ + c] *= inv_p;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == piv) continue;
            const double f = mat[i * m_ + piv];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < m_; ++c) {
                mat[i * m_ + c] -= f * mat[piv * m_ + c];
                inv[i * m_ + c] -= f * inv[piv * m_ + c];
            }
        }
    }
    binv_.swap(inv);
    // refresh x_B = B^{-1} b
    for (std::size_t r = 0; r < m_; ++r) {
        double v = 0.0;
        for (std::size_t c = 0; c < m_; ++c) v += binv_[r * m_ + c] * b_[c];
        xb_[r] = std::max(v, 0.0);
    }
}

void CoveringSimplex::optimize() {
    if (basis_.empty()) throw std::logic_error("basis not initialised");
    constexpr double kRcTol = 1e-9;
    constexpr double kPivTol = 1e-11;
    constexpr long long kMaxIters = 200000;

    long long stall = 0;
    double last_obj = objective();
    bool bland = false;
    std::vector<double> y, acol, dir;

    const long long kNoVar = std::numeric_limits<long long>::min();
    for (long long iter = 0; iter < kMaxIters; ++iter) {
        y = duals();

        // Pricing over structural columns (cost 1) then surplus (cost 0,
        // column -e_r, reduced cost y_r).  Dantzig picks the most negative;
        // Bland mode picks the first negative in this fixed order.
        long long enter = kNoVar;
        double best_rc = bland ? -1e-12 : -kRcTol;
        for (std::size_t j = 0; j < columns_.size() && !(bland && enter != kNoVar); ++j) {
            double rc = 1.0;
            for (std::uint32_t r : columns_[j]) rc -= y[r];
            if (rc < best_rc - 1e-15) {
                best_rc = rc;
                enter = static_cast<long long>(j);
                if (bland) break;
            }
        }
        for (std::size_t r = 0; r < m_ && !(bland && enter != kNoVar); ++r) {
            const double rc = y[r];
            if (rc < best_rc - 1e-15) {
                best_rc = rc;
                enter = -static_cast<long long>(r) - 1;
                if (bland) break;
            }
        }
        if (enter == kNoVar) return; // optimal

        column_vector(enter, acol);
        dir.assign(m_, 0.0);
        for (std::size_t r = 0; r < m_; ++r) {
            double v = 0.0;
            for (std::size_t c = 0; c < m_; ++c) v += binv_[r * m_ + c] * acol[c];
            dir[r] = v;
        }

        // ratio test (ties to the smallest basis variable, Bland-safe)
        std::size_t leave = static_cast<std::size_t>(-1);
        double best_ratio = 0.0;
        for (std::size_t r = 0; r < m_; ++r) {
            if (dir[r] <= kPivTol) continue;
            const double ratio = xb_[r] / dir[r];
            if (leave == static_cast<std::size_t>(-1) || ratio < best_ratio - 1e-15 ||
                (std::fabs(ratio - best_ratio) <= 1e-15 && basis_[r] < basis_[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == static_cast<std::size_t>(-1))
            throw std::runtime_error("covering LP unbounded; inconsistent input");

        // pivot: basis r <- enter, eta update of B^{-1}
        const double piv = dir[leave];
        for (std::size_t c = 0; c < m_; ++c) binv_[leave * m_ + c] /= piv;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == leave) continue;
            const double f = dir[r];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < m_; ++c)
                binv_[r * m_ + c] -= f * binv_[leave * m_ + c];
        }
        const double step = best_ratio;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == leave) continue;
            xb_[r] = std::max(0.0, xb_[r] - step * dir[r]);
        }
        xb_[leave] = step;
        basis_[leave] = enter;

        if ((iter & 127) == 127) refactor();

        const double obj = objective();
        if (obj < last_obj - 1e-12) {
            last_obj = obj;
            stall = 0;
            bland = false;
        } else if (++stall > 64) {
            bland = true;
        }
    }
    throw std::runtime_error("simplex iteration cap exceeded");
}

} // namespace rgglab::graphkit::detail
