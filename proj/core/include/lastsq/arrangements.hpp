#pragma once

// Two families of 1xN board tilings.
//
//  D: dominoes (white half left, black half right) plus black/white squares,
//     first cell always a black square.
//  B: white, black and decorated squares, last cell never black.
//
// Cells are numbered 1..N left to right. Both arrangement types are immutable
// values whose natural ordering is the lexicographic order of their canonical
// text encoding.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace lastsq {

enum class TileKind : std::uint8_t { BlackSquare, Domino, WhiteSquare };
enum class SquareKind : std::uint8_t { Black, Decorated, White };
enum class SignClass : std::uint8_t { Plus, Minus };

constexpr std::size_t tile_width(TileKind kind) noexcept { return kind == TileKind::Domino ? 2 : 1; }

char to_char(TileKind kind) noexcept;
char to_char(SquareKind kind) noexcept;
std::string_view to_string(SignClass sign) noexcept;

inline constexpr std::size_t kInlineCells = 32;

class DominoArrangement {
public:
    using Storage = boost::container::small_vector<TileKind, kInlineCells>;

    std::span<const TileKind> tiles() const noexcept { return {tiles_.data(), tiles_.size()}; }
    /// Board length m.
    std::size_t cells() const noexcept { return cells_; }
    /// Number of dominoes r.
    std::size_t dominoes() const noexcept { return dominoes_; }

    friend bool operator==(const DominoArrangement& a, const DominoArrangement& b) noexcept {
        return a.tiles_ == b.tiles_;
    }
    friend std::strong_ordering operator<=>(const DominoArrangement& a, const DominoArrangement& b) noexcept;

private:
    friend DominoArrangement validate_domino(Storage tiles);
    explicit DominoArrangement(Storage tiles);

    Storage tiles_;
    std::size_t cells_ = 0;
    std::size_t dominoes_ = 0;
};

class SquareArrangement {
public:
    using Storage = boost::container::small_vector<SquareKind, kInlineCells>;

    std::span<const SquareKind> cells() const noexcept { return {cells_.data(), cells_.size()}; }
    /// Board length n.
    std::size_t size() const noexcept { return cells_.size(); }
    /// Number of black cells r.
    std::size_t blacks() const noexcept { return blacks_; }
    /// 1-based cell access.
    SquareKind at(std::size_t cell) const { return cells_.at(cell - 1); }

    friend bool operator==(const SquareArrangement& a, const SquareArrangement& b) noexcept {
        return a.cells_ == b.cells_;
    }
    friend std::strong_ordering operator<=>(const SquareArrangement& a, const SquareArrangement& b) noexcept;

private:
    friend SquareArrangement validate_square(Storage cells);
    explicit SquareArrangement(Storage cells);

    Storage cells_;
    std::size_t blacks_ = 0;
};

/// Throws Error{EmptyBoard} or Error{FirstCellNotBlack}.
DominoArrangement validate_domino(std::span<const TileKind> tiles);
DominoArrangement validate_domino(DominoArrangement::Storage tiles);
/// Throws Error{EmptyBoard} or Error{LastCellBlack}.
SquareArrangement validate_square(std::span<const SquareKind> cells);
SquareArrangement validate_square(SquareArrangement::Storage cells);

/// Length of the black run ending at cell n-1; 0 when n = 1 or that cell is not black.
std::size_t weight(const SquareArrangement& arr) noexcept;

/// Plus iff a decorated cell lies strictly right of the last black cell
/// (the whole board when there is no black cell).
SignClass sign_class(const SquareArrangement& arr) noexcept;
/// Plus iff a white square lies strictly right of the last domino
/// (the whole board when there is no domino).
SignClass sign_class(const DominoArrangement& arr) noexcept;

std::string encode(const DominoArrangement& arr);
std::string encode(const SquareArrangement& arr);

/// Grammar: one of 'b','d','w' per tile. Throws ParseError (with byte offset)
/// on a foreign character, then the validate_domino errors.
DominoArrangement decode_domino(std::string_view text);
/// Grammar: one of 'b','t','w' per cell.
SquareArrangement decode_square(std::string_view text);

/// One-line diagram, e.g. "[#][ =#][ ]" for "bdw".
std::string render_ascii(const DominoArrangement& arr);
/// e.g. "[#][^]" for "bt".
std::string render_ascii(const SquareArrangement& arr);

} // namespace lastsq
