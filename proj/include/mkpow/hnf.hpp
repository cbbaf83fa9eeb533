#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mkpow/integer.hpp"

namespace mkpow {

// Incremental row-style Hermite normal form over Z.
//
// Rows are inserted one at a time; the builder maintains an echelon basis of
// the integer row span (pivot entries positive, entries above each pivot
// reduced into [0, pivot)).  With track_transform enabled it also maintains,
// for every basis row, its expression as an integer combination of the
// inserted generators, so membership certificates can be read off.
class HnfBuilder {
public:
    explicit HnfBuilder(std::size_t dim, bool track_transform = false)
        : dim_(dim), track_(track_transform) {
        if (dim == 0) throw std::invalid_argument("HnfBuilder: dimension must be positive");
    }

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t generator_count() const { return n_gens_; }
    const std::vector<std::vector<Integer>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
    const std::vector<std::vector<Integer>>& transform() const { return transform_rows_; }

    // Insert a generator row.  Returns true if the row span grew.
    bool add(std::vector<Integer> v) {
        if (v.size() != dim_) throw std::invalid_argument("HnfBuilder: row has wrong dimension");
        std::vector<Integer> u;
        if (track_) {
            for (auto& t : transform_rows_) t.push_back(0);
            u.assign(n_gens_ + 1, Integer(0));
            u[n_gens_] = 1;
        }
        ++n_gens_;

        std::size_t old_rank = rows_.size();
        // Sweep existing pivots left to right, combining v into the basis.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t col = pivot_cols_[r];
            // Zero out v[col'] for any column col' < col that v leads in.
            std::size_t lead = leading_column(v);
            if (lead < col) {
                insert_row(r, std::move(v), std::move(u), lead);
                normalize();
                return true;
            }
            if (v[col] == 0) continue;
            if (divides(rows_[r][col], v[col])) {
                // Plain reduction leaves the basis row untouched.
                Integer c = v[col] / rows_[r][col];
                for (std::size_t j = col; j < dim_; ++j) v[j] -= c * rows_[r][j];
                if (track_)
                    for (std::size_t gidx = 0; gidx < n_gens_; ++gidx)
                        u[gidx] -= c * transform_rows_[r][gidx];
                continue;
            }
            // Two-row gcd step: replace basis row r by the gcd combination and
            // v by the cofactor row with v[col] = 0.
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       rows_[r][col].get_mpz_t(), v[col].get_mpz_t());
            Integer br = rows_[r][col] / g;
            Integer vc = v[col] / g;
            for (std::size_t j = 0; j < dim_; ++j) {
                Integer nb = s * rows_[r][j] + t * v[j];
                Integer nv = br * v[j] - vc * rows_[r][j];
                rows_[r][j] = nb;
                v[j] = nv;
            }
            if (track_) {
                for (std::size_t gidx = 0; gidx < n_gens_; ++gidx) {
                    Integer nb = s * transform_rows_[r][gidx] + t * u[gidx];
                    Integer nu = br * u[gidx] - vc * transform_rows_[r][gidx];
                    transform_rows_[r][gidx] = nb;
                    u[gidx] = nu;
                }
            }
        }
        std::size_t lead = leading_column(v);
        if (lead == dim_) {
            normalize();
            return rows_.size() != old_rank;
        }
        insert_row(rows_.size(), std::move(v), std::move(u), lead);
        normalize();
        return true;
    }

    // Exact membership of v in the integer row span.
    bool contains(const std::vector<Integer>& v) const {
        std::vector<Integer> w = v;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t col = pivot_cols_[r];
            if (w[col] == 0) continue;
            if (!divides(rows_[r][col], w[col])) return false;
            Integer c = w[col] / rows_[r][col];
            for (std::size_t j = col; j < dim_; ++j) w[j] -= c * rows_[r][j];
        }
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }

    // Coefficients of v over the ORIGINAL generators, if v lies in the span.
    // Requires track_transform.
    std::optional<std::vector<Integer>> coordinates(const std::vector<Integer>& v) const {
        if (!track_) throw std::logic_error("HnfBuilder: transform tracking disabled");
        std::vector<Integer> w = v;
        std::vector<Integer> coeffs(rows_.size(), Integer(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t col = pivot_cols_[r];
            if (w[col] == 0) continue;
            if (!divides(rows_[r][col], w[col])) return std::nullopt;
            coeffs[r] = w[col] / rows_[r][col];
            for (std::size_t j = col; j < dim_; ++j) w[j] -= coeffs[r] * rows_[r][j];
        }
        for (const auto& x : w)
            if (x != 0) return std::nullopt;
        std::vector<Integer> out(n_gens_, Integer(0));
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t gidx = 0; gidx < n_gens_; ++gidx)
                out[gidx] += coeffs[r] * transform_rows_[r][gidx];
        return out;
    }

private:
    std::size_t leading_column(const std::vector<Integer>& v) const {
        std::size_t j = 0;
        while (j < dim_ && v[j] == 0) ++j;
        return j;
    }

    void insert_row(std::size_t pos, std::vector<Integer> v, std::vector<Integer> u,
                    std::size_t lead) {
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivot_cols_.insert(pivot_cols_.begin() + pos, lead);
        if (track_) transform_rows_.insert(transform_rows_.begin() + pos, std::move(u));
    }

    // Restore HNF shape: positive pivots, entries above pivots reduced.
    // Pivot rows are processed in ascending order; reducing above row r only
    // touches columns >= pivot_cols_[r], so columns finished earlier stay
    // reduced and the result is canonical.
    void normalize() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t col = pivot_cols_[r];
            if (rows_[r][col] < 0) {
                for (auto& x : rows_[r]) x = -x;
                if (track_)
                    for (auto& x : transform_rows_[r]) x = -x;
            }
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t col = pivot_cols_[r];
            for (std::size_t above = 0; above < r; ++above) {
                Integer c;
                mpz_fdiv_q(c.get_mpz_t(), rows_[above][col].get_mpz_t(),
                           rows_[r][col].get_mpz_t());
                if (c == 0) continue;
                for (std::size_t j = col; j < dim_; ++j)
                    rows_[above][j] -= c * rows_[r][j];
                if (track_)
                    for (std::size_t gidx = 0; gidx < n_gens_; ++gidx)
                        transform_rows_[above][gidx] -= c * transform_rows_[r][gidx];
            }
        }
    }

    std::size_t dim_;
    bool track_;
    std::size_t n_gens_ = 0;
    std::vector<std::vector<Integer>> rows_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::vector<Integer>> transform_rows_;
};

}  // namespace mkpow
