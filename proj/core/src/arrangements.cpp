#include "lastsq/arrangements.hpp"

#include "lastsq/error.hpp"

#include <algorithm>

namespace lastsq {

char to_char(TileKind kind) noexcept {
    switch (kind) {
    case TileKind::BlackSquare: return 'b';
    case TileKind::Domino: return 'd';
    case TileKind::WhiteSquare: return 'w';
    }
    return '?';
}

char to_char(SquareKind kind) noexcept {
    switch (kind) {
    case SquareKind::Black: return 'b';
    case SquareKind::Decorated: return 't';
    case SquareKind::White: return 'w';
    }
    return '?';
}

std::string_view to_string(SignClass sign) noexcept { return sign == SignClass::Plus ? "plus" : "minus"; }

DominoArrangement::DominoArrangement(Storage tiles) : tiles_(std::move(tiles)) {
    for (TileKind t : tiles_) {
        cells_ += tile_width(t);
        dominoes_ += (t == TileKind::Domino) ? 1 : 0;
    }
}

SquareArrangement::SquareArrangement(Storage cells) : cells_(std::move(cells)) {
    blacks_ = static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), SquareKind::Black));
}

std::strong_ordering operator<=>(const DominoArrangement& a, const DominoArrangement& b) noexcept {
    return std::lexicographical_compare_three_way(a.tiles_.begin(), a.tiles_.end(), b.tiles_.begin(), b.tiles_.end());
}

std::strong_ordering operator<=>(const SquareArrangement& a, const SquareArrangement& b) noexcept {
    return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end());
}

DominoArrangement validate_domino(DominoArrangement::Storage tiles) {
    if (tiles.empty()) {
        throw Error(ErrorCode::EmptyBoard, "domino arrangement has no tiles");
    }
    if (tiles.front() != TileKind::BlackSquare) {
        throw Error(ErrorCode::FirstCellNotBlack, "first cell must be a black square");
    }
    return DominoArrangement(std::move(tiles));
}

DominoArrangement validate_domino(std::span<const TileKind> tiles) {
    return validate_domino(DominoArrangement::Storage(tiles.begin(), tiles.end()));
}

SquareArrangement validate_square(SquareArrangement::Storage cells) {
    if (cells.empty()) {
        throw Error(ErrorCode::EmptyBoard, "square arrangement has no cells");
    }
    if (cells.back() == SquareKind::Black) {
        throw Error(ErrorCode::LastCellBlack, "last cell must not be black");
    }
    return SquareArrangement(std::move(cells));
}

SquareArrangement validate_square(std::span<const SquareKind> cells) {
    return validate_square(SquareArrangement::Storage(cells.begin(), cells.end()));
}

std::size_t weight(const SquareArrangement& arr) noexcept {
    const auto cells = arr.cells();
    std::size_t k = 0;
    // cells[size-2] is cell n-1
    for (std::size_t i = cells.size() - 1; i-- > 0 && cells[i] == SquareKind::Black;) {
        ++k;
    }
    return k;
}

SignClass sign_class(const SquareArrangement& arr) noexcept {
    const auto cells = arr.cells();
    for (std::size_t i = cells.size(); i-- > 0;) {
        if (cells[i] == SquareKind::Decorated) return SignClass::Plus;
        if (cells[i] == SquareKind::Black) return SignClass::Minus;
    }
    return SignClass::Minus;
}

SignClass sign_class(const DominoArrangement& arr) noexcept {
    const auto tiles = arr.tiles();
    for (std::size_t i = tiles.size(); i-- > 0;) {
        if (tiles[i] == TileKind::WhiteSquare) return SignClass::Plus;
        if (tiles[i] == TileKind::Domino) return SignClass::Minus;
    }
    return SignClass::Minus;
}

std::string encode(const DominoArrangement& arr) {
    std::string out;
    out.reserve(arr.tiles().size());
    for (TileKind t : arr.tiles()) out.push_back(to_char(t));
    return out;
}

std::string encode(const SquareArrangement& arr) {
    std::string out;
    out.reserve(arr.size());
    for (SquareKind c : arr.cells()) out.push_back(to_char(c));
    return out;
}

DominoArrangement decode_domino(std::string_view text) {
    DominoArrangement::Storage tiles;
    tiles.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'b': tiles.push_back(TileKind::BlackSquare); break;
        case 'd': tiles.push_back(TileKind::Domino); break;
        case 'w': tiles.push_back(TileKind::WhiteSquare); break;
        default: throw ParseError(i, std::string("unexpected character '") + text[i] + "' in domino arrangement");
        }
    }
    return validate_domino(std::move(tiles));
}

SquareArrangement decode_square(std::string_view text) {
    SquareArrangement::Storage cells;
    cells.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'b': cells.push_back(SquareKind::Black); break;
        case 't': cells.push_back(SquareKind::Decorated); break;
        case 'w': cells.push_back(SquareKind::White); break;
        default: throw ParseError(i, std::string("unexpected character '") + text[i] + "' in square arrangement");
        }
    }
    return validate_square(std::move(cells));
}

std::string render_ascii(const DominoArrangement& arr) {
    std::string out;
    for (TileKind t : arr.tiles()) {
        switch (t) {
        case TileKind::BlackSquare: out += "[#]"; break;
        case TileKind::Domino: out += "[ =#]"; break;
        case TileKind::WhiteSquare: out += "[ ]"; break;
        }
    }
    return out;
}

std::string render_ascii(const SquareArrangement& arr) {
    std::string out;
    for (SquareKind c : arr.cells()) {
        switch (c) {
        case SquareKind::Black: out += "[#]"; break;
        case SquareKind::Decorated: out += "[^]"; break;
        case SquareKind::White: out += "[ ]"; break;
        }
    }
    return out;
}

} // namespace lastsq
