#pragma once

#include <vector>

#include "kpar/errors.hpp"
#include "kpar/scalar.hpp"

namespace kpar {

using Vec = std::vector<FieldScalar>;

/// Row space in reduced row echelon form over an exact field.
/// Rows keep strictly increasing pivot columns; inserting a vector reduces
/// it against the basis and reports whether the rank grew.
class Subspace {
public:
    Subspace(int ambient_dim, Field field) : dim_(ambient_dim), field_(field) {}

    static Subspace row_reduce(const std::vector<Vec>& vectors, int ambient_dim, Field field) {
        Subspace s(ambient_dim, field);
        for (const auto& v : vectors) s.insert(v);
        return s;
    }

    int ambient_dim() const { return dim_; }
    Field field() const { return field_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }

    /// Adds a vector to the span; true iff it was independent.
    bool insert(Vec v) {
        check_dim(v);
        reduce(v);
        int p = pivot_of(v);
        if (p < 0) return false;
        FieldScalar lead = v[p].inv();
        for (auto& x : v) x = x * lead;
        // Clear column p in the existing rows to stay in RREF.
        for (auto& row : rows_) {
            if (!row[p].is_zero()) {
                FieldScalar c = row[p];
                for (int j = 0; j < dim_; ++j) row[j] = row[j] - c * v[j];
            }
        }
        std::size_t at = 0;
        while (at < rows_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, p);
        return true;
    }

    bool contains(Vec v) const {
        check_dim(v);
        reduce(v);
        return pivot_of(v) < 0;
    }

    bool is_zero_space() const { return rows_.empty(); }

    /// Zassenhaus: row reduce [A|A] stacked on [B|0]; rows whose left half
    /// vanished span the intersection on the right half.
    static Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.dim_ != b.dim_) throw DimensionMismatch();
        if (a.field_ != b.field_) throw FieldMismatch();
        int d = a.dim_;
        Subspace wide(2 * d, a.field_);
        FieldScalar z = FieldScalar::zero(a.field_);
        for (const auto& row : a.rows_) {
            Vec v(2 * d, z);
            for (int j = 0; j < d; ++j) v[j] = v[d + j] = row[j];
            wide.insert(std::move(v));
        }
        for (const auto& row : b.rows_) {
            Vec v(2 * d, z);
            for (int j = 0; j < d; ++j) v[j] = row[j];
            wide.insert(std::move(v));
        }
        Subspace meet(d, a.field_);
        for (const auto& row : wide.rows_) {
            bool left_zero = true;
            for (int j = 0; j < d && left_zero; ++j) left_zero = row[j].is_zero();
            if (left_zero) meet.insert(Vec(row.begin() + d, row.end()));
        }
        return meet;
    }

private:
    int dim_;
    Field field_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;

    void check_dim(const Vec& v) const {
        if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch();
    }

    static int pivot_of(const Vec& v) {
        for (int j = 0; j < static_cast<int>(v.size()); ++j) {
            if (!v[j].is_zero()) return j;
        }
        return -1;
    }

    void reduce(Vec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            FieldScalar c = v[pivots_[i]];
            if (!c.is_zero()) {
                for (int j = 0; j < dim_; ++j) v[j] = v[j] - c * rows_[i][j];
            }
        }
    }
};

} // namespace kpar
