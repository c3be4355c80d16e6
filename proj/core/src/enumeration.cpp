#include "lastsq/enumeration.hpp"

#include "lastsq/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace lastsq {

void ClassFilter::check(Family family) const {
    if (family == Family::D && (weight_parity || exact_weight)) {
        throw Error(ErrorCode::InvalidFilter, "weight filters apply to family B only");
    }
    if (weight_parity && exact_weight) {
        const bool odd = (*exact_weight % 2) == 1;
        if (odd != (*weight_parity == Parity::Odd)) {
            throw Error(ErrorCode::InvalidFilter, "exact weight contradicts weight parity");
        }
    }
}

bool ClassFilter::accepts(const SquareArrangement& arr) const noexcept {
    if (sign && sign_class(arr) != *sign) return false;
    if (weight_parity || exact_weight) {
        const std::size_t k = weight(arr);
        if (weight_parity && ((k % 2 == 1) != (*weight_parity == Parity::Odd))) return false;
        if (exact_weight && k != *exact_weight) return false;
    }
    return true;
}

bool ClassFilter::accepts(const DominoArrangement& arr) const noexcept {
    return !sign || sign_class(arr) == *sign;
}

EnumerationLimits EnumerationLimits::from_env() {
    EnumerationLimits limits;
    if (const char* raw = std::getenv("LASTSQ_MAX_CELLS"); raw != nullptr && *raw != '\0') {
        char* end = nullptr;
        const unsigned long value = std::strtoul(raw, &end, 10);
        if (end == raw || *end != '\0' || value == 0) {
            throw Error(ErrorCode::RangeError, std::string("LASTSQ_MAX_CELLS is not a positive integer: ") + raw);
        }
        limits.max_domino_cells = value;
        limits.max_square_cells = value;
    }
    return limits;
}

namespace {

constexpr std::size_t kPrefixDepth = 5;

// Depth-first generators. Each walks the choices of one position in
// canonical character order, so leaves come out lexicographically sorted.
// A walk may start from a fixed prefix and stop at a given depth, which is
// how the parallel split hands disjoint subtrees to workers.

struct SquareWalk {
    std::size_t n;
    std::size_t r;

    using Buffer = SquareArrangement::Storage;

    // blacks that can still be placed on cells after index pos (0-based), last cell excluded
    std::size_t room_after(std::size_t pos) const noexcept { return (n >= pos + 2) ? n - 2 - pos : 0; }

    template <typename Leaf>
    void walk(Buffer& buf, std::size_t blacks_left, std::size_t stop, Leaf& leaf) const {
        const std::size_t pos = buf.size();
        if (pos == stop) {
            leaf(buf);
            return;
        }
        if (blacks_left > 0 && pos + 2 <= n && blacks_left - 1 <= room_after(pos)) {
            buf.push_back(SquareKind::Black);
            walk(buf, blacks_left - 1, stop, leaf);
            buf.pop_back();
        }
        const bool last = pos + 1 == n;
        if (last ? blacks_left == 0 : blacks_left <= room_after(pos)) {
            for (SquareKind kind : {SquareKind::Decorated, SquareKind::White}) {
                buf.push_back(kind);
                walk(buf, blacks_left, stop, leaf);
                buf.pop_back();
            }
        }
    }

    std::size_t blacks_in(const Buffer& buf) const {
        return static_cast<std::size_t>(std::count(buf.begin(), buf.end(), SquareKind::Black));
    }

    std::size_t depth() const noexcept { return n; }
};

struct DominoWalk {
    std::size_t m;
    std::size_t r;

    using Buffer = DominoArrangement::Storage;

    template <typename Leaf>
    void walk(Buffer& buf, std::size_t used, std::size_t dominoes_left, std::size_t stop, Leaf& leaf) const {
        const std::size_t pos = buf.size();
        if (pos == stop) {
            leaf(buf);
            return;
        }
        const auto try_tile = [&](TileKind kind) {
            const std::size_t w = tile_width(kind);
            const std::size_t d = dominoes_left - (kind == TileKind::Domino ? 1 : 0);
            if (used + w > m || m - used - w < 2 * d) return;
            buf.push_back(kind);
            walk(buf, used + w, d, stop, leaf);
            buf.pop_back();
        };
        if (pos == 0) {
            try_tile(TileKind::BlackSquare);
            return;
        }
        try_tile(TileKind::BlackSquare);
        if (dominoes_left > 0) try_tile(TileKind::Domino);
        try_tile(TileKind::WhiteSquare);
    }

    std::size_t depth() const noexcept { return m - r; }
};

void check_square_args(std::size_t n, std::size_t r, const EnumerationLimits& limits) {
    if (n < 1 || r + 1 > n) {
        throw Error(ErrorCode::RangeError,
                    "B(n,r) needs n >= 1 and r <= n-1, got n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
    if (n > limits.max_square_cells) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "n=" + std::to_string(n) + " exceeds guard " + std::to_string(limits.max_square_cells));
    }
}

void check_domino_args(std::size_t m, std::size_t r, const EnumerationLimits& limits) {
    if (m < 1 || 2 * r + 1 > m) {
        throw Error(ErrorCode::RangeError,
                    "D(m,r) needs m >= 1 and 2r <= m-1, got m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
    if (m > limits.max_domino_cells) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "m=" + std::to_string(m) + " exceeds guard " + std::to_string(limits.max_domino_cells));
    }
}

// Run `task(i)` for i in [0, count) on up to `jobs` threads.
template <typename Task>
void run_tasks(std::size_t count, unsigned jobs, Task&& task) {
    const std::size_t workers = std::min<std::size_t>(std::max(1U, jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count && !failed; i = next++) {
                    try {
                        task(i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<SquareArrangement::Storage> square_prefixes(const SquareWalk& walk) {
    std::vector<SquareArrangement::Storage> prefixes;
    SquareArrangement::Storage buf;
    auto collect = [&](const SquareArrangement::Storage& b) { prefixes.push_back(b); };
    walk.walk(buf, walk.r, std::min(kPrefixDepth, walk.depth()), collect);
    return prefixes;
}

std::vector<DominoArrangement::Storage> domino_prefixes(const DominoWalk& walk) {
    std::vector<DominoArrangement::Storage> prefixes;
    DominoArrangement::Storage buf;
    auto collect = [&](const DominoArrangement::Storage& b) { prefixes.push_back(b); };
    walk.walk(buf, 0, walk.r, std::min(kPrefixDepth, walk.depth()), collect);
    return prefixes;
}

template <typename Leaf>
void walk_square_from(const SquareWalk& walk, SquareArrangement::Storage prefix, Leaf& leaf) {
    const std::size_t left = walk.r - walk.blacks_in(prefix);
    walk.walk(prefix, left, walk.depth(), leaf);
}

template <typename Leaf>
void walk_domino_from(const DominoWalk& walk, DominoArrangement::Storage prefix, Leaf& leaf) {
    std::size_t used = 0;
    std::size_t placed = 0;
    for (TileKind t : prefix) {
        used += tile_width(t);
        placed += (t == TileKind::Domino) ? 1 : 0;
    }
    walk.walk(prefix, used, walk.r - placed, walk.depth(), leaf);
}

} // namespace

void for_each_D(std::size_t m, std::size_t r, const ClassFilter& filter,
                const std::function<void(const DominoArrangement&)>& visit, const EnumerationLimits& limits) {
    check_domino_args(m, r, limits);
    filter.check(Family::D);
    const DominoWalk walk{m, r};
    DominoArrangement::Storage buf;
    auto leaf = [&](const DominoArrangement::Storage& tiles) {
        const DominoArrangement arr = validate_domino(tiles);
        if (filter.accepts(arr)) visit(arr);
    };
    walk.walk(buf, 0, r, walk.depth(), leaf);
}

void for_each_B(std::size_t n, std::size_t r, const ClassFilter& filter,
                const std::function<void(const SquareArrangement&)>& visit, const EnumerationLimits& limits) {
    check_square_args(n, r, limits);
    filter.check(Family::B);
    const SquareWalk walk{n, r};
    SquareArrangement::Storage buf;
    auto leaf = [&](const SquareArrangement::Storage& cells) {
        const SquareArrangement arr = validate_square(cells);
        if (filter.accepts(arr)) visit(arr);
    };
    walk.walk(buf, r, walk.depth(), leaf);
}

std::vector<DominoArrangement> enumerate_D(std::size_t m, std::size_t r, const ClassFilter& filter,
                                           const EnumerationOptions& options) {
    check_domino_args(m, r, options.limits);
    filter.check(Family::D);
    const DominoWalk walk{m, r};
    const auto prefixes = domino_prefixes(walk);
    std::vector<std::vector<DominoArrangement>> parts(prefixes.size());
    run_tasks(prefixes.size(), options.jobs, [&](std::size_t i) {
        auto leaf = [&](const DominoArrangement::Storage& tiles) {
            DominoArrangement arr = validate_domino(tiles);
            if (filter.accepts(arr)) parts[i].push_back(std::move(arr));
        };
        walk_domino_from(walk, prefixes[i], leaf);
    });
    std::vector<DominoArrangement> out;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

std::vector<SquareArrangement> enumerate_B(std::size_t n, std::size_t r, const ClassFilter& filter,
                                           const EnumerationOptions& options) {
    check_square_args(n, r, options.limits);
    filter.check(Family::B);
    const SquareWalk walk{n, r};
    const auto prefixes = square_prefixes(walk);
    std::vector<std::vector<SquareArrangement>> parts(prefixes.size());
    run_tasks(prefixes.size(), options.jobs, [&](std::size_t i) {
        auto leaf = [&](const SquareArrangement::Storage& cells) {
            SquareArrangement arr = validate_square(cells);
            if (filter.accepts(arr)) parts[i].push_back(std::move(arr));
        };
        walk_square_from(walk, prefixes[i], leaf);
    });
    std::vector<SquareArrangement> out;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

BigCount count(Family family, std::size_t size, std::size_t r, const ClassFilter& filter,
               const EnumerationOptions& options) {
    std::vector<std::uint64_t> tallies;
    if (family == Family::D) {
        check_domino_args(size, r, options.limits);
        filter.check(Family::D);
        const DominoWalk walk{size, r};
        const auto prefixes = domino_prefixes(walk);
        tallies.assign(prefixes.size(), 0);
        run_tasks(prefixes.size(), options.jobs, [&](std::size_t i) {
            auto leaf = [&](const DominoArrangement::Storage& tiles) {
                if (filter.accepts(validate_domino(tiles))) ++tallies[i];
            };
            walk_domino_from(walk, prefixes[i], leaf);
        });
    } else {
        check_square_args(size, r, options.limits);
        filter.check(Family::B);
        const SquareWalk walk{size, r};
        const auto prefixes = square_prefixes(walk);
        tallies.assign(prefixes.size(), 0);
        run_tasks(prefixes.size(), options.jobs, [&](std::size_t i) {
            auto leaf = [&](const SquareArrangement::Storage& cells) {
                if (filter.accepts(validate_square(cells))) ++tallies[i];
            };
            walk_square_from(walk, prefixes[i], leaf);
        });
    }
    BigCount total = 0;
    for (std::uint64_t t : tallies) total += t;
    return total;
}

Strata stratify(std::size_t n, std::size_t r, StratumKind kind, const EnumerationLimits& limits) {
    std::map<StratumKey, std::uint64_t> tallies;
    ClassFilter filter;
    if (kind != StratumKind::WeightEquals) filter.sign = SignClass::Plus;

    for_each_B(n, r, filter, [&](const SquareArrangement& arr) {
        const auto cells = arr.cells();
        std::size_t index = 0;
        switch (kind) {
        case StratumKind::LastDecoratedAt: {
            for (std::size_t i = cells.size(); i-- > 0;) {
                if (cells[i] == SquareKind::Decorated) {
                    index = i + 1;
                    break;
                }
            }
            break;
        }
        case StratumKind::LastBlackAt: {
            // r = 0 has no black cell; the boundary sits at position 0, i.e. j = n
            index = n;
            for (std::size_t i = cells.size(); i-- > 0;) {
                if (cells[i] == SquareKind::Black) {
                    index = n - (i + 1);
                    break;
                }
            }
            break;
        }
        case StratumKind::WeightEquals: {
            index = weight(arr);
            if (index % 2 == 1) return;
            break;
        }
        case StratumKind::NonWhiteCount: {
            index = static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(),
                                                           [](SquareKind c) { return c != SquareKind::White; }));
            break;
        }
        }
        ++tallies[StratumKey{kind, index}];
    }, limits);

    Strata strata;
    for (const auto& [key, value] : tallies) strata.emplace(key, BigCount(value));
    return strata;
}

} // namespace lastsq
