#pragma once

// Primal simplex for covering LPs
//     min 1'x   s.t.  A x >= b,  x >= 0
// with 0/1 columns, written as A x - s = b.  Columns are added
// incrementally (column generation) and the basis persists across
// re-optimisations.  Dantzig pricing with a Bland fallback once the
// objective stalls.  Internal to the library.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rgglab::graphkit::detail {

class CoveringSimplex {
public:
    explicit CoveringSimplex(std::size_t rows) : m_(rows), b_(rows, 1.0) {}

    void set_rhs(std::span<const double> b) {
        if (b.size() != m_) throw std::invalid_argument("rhs size mismatch");
        b_.assign(b.begin(), b.end());
    }

    // Adds a 0/1 column with unit cost; returns its index.
    std::size_t add_column(std::vector<std::uint32_t> support) {
        columns_.push_back(std::move(support));
        return columns_.size() - 1;
    }
    std::size_t num_columns() const { return columns_.size(); }

    // Installs the starting basis from `cols`, which must be exactly m
    // singleton columns, one per row (so the basis matrix is the identity).
    void init_singleton_basis(std::span<const std::size_t> cols) {
        if (cols.size() != m_) throw std::invalid_argument("basis needs m columns");
        basis_.assign(cols.begin(), cols.end());
        binv_.assign(m_ * m_, 0.0);
        std::vector<bool> seen(m_, false);
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& col = columns_[cols[i]];
            if (col.size() != 1 || col[0] >= m_ || seen[col[0]])
                throw std::invalid_argument("starting basis must be one singleton per row");
            seen[col[0]] = true;
        }
        // order basis so that basis_[r] covers row r
        std::vector<std::size_t> per_row(m_);
        for (std::size_t i = 0; i < m_; ++i) per_row[columns_[cols[i]][0]] = cols[i];
        for (std::size_t r = 0; r < m_; ++r) {
            basis_[r] = static_cast<long long>(per_row[r]);
            binv_[r * m_ + r] = 1.0;
        }
        xb_ = b_;
    }

    // Re-optimises from the current basis.  Throws on iteration cap.
    void optimize();

    double objective() const {
        double obj = 0.0;
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] >= 0) obj += xb_[r];
        return obj;
    }
    // Primal value of structural column j.
    double primal(std::size_t j) const {
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] == static_cast<long long>(j)) return xb_[r];
        return 0.0;
    }
    // Duals y (one per row).
    std::vector<double> duals() const;

private:
    std::size_t m_;
    std::vector<double> b_;
    std::vector<std::vector<std::uint32_t>> columns_; // structural, 0/1
    // basis_[r] >= 0: structural column index; -1-row: surplus of `row`
    std::vector<long long> basis_;
    std::vector<double> binv_; // m x m row-major
    std::vector<double> xb_;

    void column_vector(long long var, std::vector<double>& out) const {
        out.assign(m_, 0.0);
        if (var >= 0)
            for (std::uint32_t r : columns_[var]) out[r] = 1.0;
        else
            out[-(var + 1)] = -1.0;
    }
    double cost(long long var) const { return var >= 0 ? 1.0 : 0.0; }
    void refactor();
};

} // namespace rgglab::graphkit::detail
