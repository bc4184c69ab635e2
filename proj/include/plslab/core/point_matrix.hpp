#pragma once

#include "plslab/core/rat.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace plslab {

/// sign·√radicand
struct SqrtCoord {
    int sign = 0;
    Rat radicand;

    SqrtCoord() = default;
    SqrtCoord(int sign, Rat radicand);

    static SqrtCoord integer(const Int& value);

    friend bool operator==(const SqrtCoord& a, const SqrtCoord& b) = default;
};

/// Points as rows of square-root coordinates.
///
/// Column alignment (all nonzero entries of a column share one radicand) keeps every
/// squared distance and inner product rational.
class PointMatrix {
public:
    PointMatrix() = default;
    PointMatrix(std::size_t points, std::size_t columns);
    explicit PointMatrix(std::vector<std::vector<SqrtCoord>> rows);

    std::size_t points() const { return rows_.size(); }
    std::size_t columns() const { return columns_; }
    const std::vector<std::vector<SqrtCoord>>& rows() const { return rows_; }
    const SqrtCoord& at(std::size_t point, std::size_t column) const;
    void set(std::size_t point, std::size_t column, SqrtCoord value);
    /// Appends a zero column and returns its index.
    std::size_t add_column();
    /// Appends a zero row and returns its index.
    std::size_t add_point();

    /// Radicand shared by the column's nonzero entries; nullopt for an all-zero column.
    std::optional<Rat> column_radicand(std::size_t column) const;
    bool is_aligned() const;
    /// First alignment violation as a message, if any.
    std::optional<std::string> alignment_violation() const;
    /// Throws InvalidMatrixError unless column-aligned.
    void check_aligned() const;

    Rat squared_distance(std::size_t i, std::size_t j) const;
    Rat squared_norm(std::size_t i) const;
    Rat inner_product(std::size_t i, std::size_t j) const;
    /// True when no two rows coincide.
    bool is_injective() const;

    friend bool operator==(const PointMatrix& a, const PointMatrix& b) = default;

private:
    void check_point(std::size_t i) const;

    std::vector<std::vector<SqrtCoord>> rows_;
    std::size_t columns_ = 0;
};

} // namespace plslab
