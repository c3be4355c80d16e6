#pragma once

// Exhaustive generators for the D and B families. These are the slow,
// trusted oracle: no counting shortcuts, every member is constructed.
// Output order is the lexicographic order of the canonical encoding and does
// not depend on the number of worker threads.

#include "lastsq/arrangements.hpp"
#include "lastsq/bigint.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace lastsq {

enum class Family : std::uint8_t { D, B };
enum class Parity : std::uint8_t { Even, Odd };

struct ClassFilter {
    std::optional<SignClass> sign;
    std::optional<Parity> weight_parity;
    std::optional<std::size_t> exact_weight;

    /// Throws Error{InvalidFilter} if exact_weight contradicts weight_parity,
    /// or if weight constraints are applied to family D.
    void check(Family family) const;

    bool accepts(const SquareArrangement& arr) const noexcept;
    bool accepts(const DominoArrangement& arr) const noexcept;
};

struct EnumerationLimits {
    std::size_t max_domino_cells = 24;
    std::size_t max_square_cells = 16;

    /// Defaults, with both guards replaced by LASTSQ_MAX_CELLS when set.
    static EnumerationLimits from_env();
};

struct EnumerationOptions {
    EnumerationLimits limits{};
    unsigned jobs = 1;
};

std::vector<DominoArrangement> enumerate_D(std::size_t m, std::size_t r, const ClassFilter& filter = {},
                                           const EnumerationOptions& options = {});
std::vector<SquareArrangement> enumerate_B(std::size_t n, std::size_t r, const ClassFilter& filter = {},
                                           const EnumerationOptions& options = {});

/// Sequential visitation in canonical order, without materializing the set.
void for_each_D(std::size_t m, std::size_t r, const ClassFilter& filter,
                const std::function<void(const DominoArrangement&)>& visit, const EnumerationLimits& limits = {});
void for_each_B(std::size_t n, std::size_t r, const ClassFilter& filter,
                const std::function<void(const SquareArrangement&)>& visit, const EnumerationLimits& limits = {});

BigCount count(Family family, std::size_t size, std::size_t r, const ClassFilter& filter = {},
               const EnumerationOptions& options = {});

enum class StratumKind : std::uint8_t { LastDecoratedAt, LastBlackAt, WeightEquals, NonWhiteCount };

/// index meaning by kind: LastDecoratedAt -> cell j; LastBlackAt -> j with the
/// last black on cell n-j; WeightEquals -> the (even) weight 2k;
/// NonWhiteCount -> number of non-white cells.
struct StratumKey {
    StratumKind kind;
    std::size_t index;

    friend auto operator<=>(const StratumKey&, const StratumKey&) = default;
};

using Strata = std::map<StratumKey, BigCount>;

/// Counts per non-empty stratum. WeightEquals scans all of B(n,r) and keeps
/// even weights only; the other kinds scan B+(n,r) and partition it.
Strata stratify(std::size_t n, std::size_t r, StratumKind kind, const EnumerationLimits& limits = {});

} // namespace lastsq
