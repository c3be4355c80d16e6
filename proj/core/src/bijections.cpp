#include "lastsq/bijections.hpp"

#include "lastsq/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <tuple>

namespace lastsq {

namespace {

std::string cells_text(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

bool strictly_increasing(const std::vector<std::size_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>{}) == v.end();
}

struct ExpandedCell {
    CellColor color;
    bool domino_left = false;
    bool domino_right = false;
};

// Cells 1..m as 0-based vector; a domino contributes a white then a black cell.
std::vector<ExpandedCell> expand(const DominoArrangement& arr) {
    std::vector<ExpandedCell> cells;
    cells.reserve(arr.cells());
    for (TileKind t : arr.tiles()) {
        switch (t) {
        case TileKind::BlackSquare: cells.push_back({CellColor::Black}); break;
        case TileKind::WhiteSquare: cells.push_back({CellColor::White}); break;
        case TileKind::Domino:
            cells.push_back({CellColor::White, true, false});
            cells.push_back({CellColor::Black, false, true});
            break;
        }
    }
    return cells;
}

TileKind square_of(CellColor c) { return c == CellColor::Black ? TileKind::BlackSquare : TileKind::WhiteSquare; }

SquareArrangement epsilon(std::size_t n, std::size_t r, SquareKind last) {
    if (n < 1 || r + 1 > n) {
        throw Error(ErrorCode::RangeError, "epsilon needs 0 <= r <= n-1, got n=" + std::to_string(n) +
                                               " r=" + std::to_string(r));
    }
    SquareArrangement::Storage cells(n, SquareKind::White);
    for (std::size_t i = n - 1 - r; i < n - 1; ++i) cells[i] = SquareKind::Black;
    cells[n - 1] = last;
    return validate_square(cells);
}

} // namespace

void MarkedColoredBoard::check() const {
    const auto fail = [this](const std::string& why) {
        throw Error(ErrorCode::RangeError, "invalid marked colored board (m=" + std::to_string(m) + " chosen=[" +
                                               cells_text(chosen) + "] marks=[" + cells_text(marks) + "]): " + why);
    };
    if (chosen.size() < 2 || chosen.size() % 2 != 0) fail("need an even number (>= 2) of chosen cells");
    if (!strictly_increasing(chosen)) fail("chosen cells must be strictly increasing");
    if (chosen.front() < 1 || chosen.back() > m) fail("chosen cell outside 1..m");
    if (!strictly_increasing(marks)) fail("marks must be strictly increasing");
    if (!marks.empty() && (marks.front() < 1 || marks.back() + 1 > pairs())) fail("mark slot outside 1..i-1");
}

std::string to_record(const MarkedColoredBoard& board) {
    nlohmann::ordered_json j;
    j["m"] = board.m;
    j["chosen"] = board.chosen;
    j["marks"] = board.marks;
    return j.dump();
}

MarkedColoredBoard board_from_record(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "malformed board record");
    }
    MarkedColoredBoard board;
    try {
        board.m = j.at("m").get<std::size_t>();
        board.chosen = j.at("chosen").get<std::vector<std::size_t>>();
        board.marks = j.at("marks").get<std::vector<std::size_t>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("board record needs integer fields m, chosen, marks (") + e.what() + ")");
    }
    board.check();
    return board;
}

std::vector<MarkedColoredBoard> enumerate_boards(std::size_t m, std::size_t r) {
    std::vector<MarkedColoredBoard> out;
    MarkedColoredBoard board;
    board.m = m;
    // pick marks once the chosen set is complete
    const auto pick_marks = [&](auto&& self, std::size_t next_slot) -> void {
        if (board.marks.size() == r) {
            out.push_back(board);
            return;
        }
        for (std::size_t t = next_slot; t + 1 <= board.pairs(); ++t) {
            if (board.pairs() - t < r - board.marks.size()) break;
            board.marks.push_back(t);
            self(self, t + 1);
            board.marks.pop_back();
        }
    };
    const auto pick_cells = [&](auto&& self, std::size_t next_cell) -> void {
        if (board.chosen.size() >= 2 && board.chosen.size() % 2 == 0 && board.pairs() >= r + 1) {
            pick_marks(pick_marks, 1);
        }
        for (std::size_t c = next_cell; c <= m; ++c) {
            board.chosen.push_back(c);
            self(self, c + 1);
            board.chosen.pop_back();
        }
    };
    pick_cells(pick_cells, 1);
    std::sort(out.begin(), out.end(), [](const MarkedColoredBoard& a, const MarkedColoredBoard& b) {
        return std::tie(a.chosen, a.marks) < std::tie(b.chosen, b.marks);
    });
    return out;
}

std::vector<CellColor> coloring_of(const MarkedColoredBoard& board) {
    board.check();
    std::vector<CellColor> colors(board.m);
    CellColor current = CellColor::Black;
    std::size_t next = 0;
    for (std::size_t cell = 1; cell <= board.m; ++cell) {
        colors[cell - 1] = current;
        if (next < board.chosen.size() && board.chosen[next] == cell) {
            current = (current == CellColor::Black) ? CellColor::White : CellColor::Black;
            ++next;
        }
    }
    return colors;
}

DominoArrangement board_to_domino(const MarkedColoredBoard& board) {
    const auto colors = coloring_of(board);
    std::vector<bool> domino_left(board.m + 2, false);
    for (std::size_t t : board.marks) {
        const std::size_t c = board.chosen[2 * t - 1];
        if (c + 1 > board.m || colors[c - 1] != CellColor::White || colors[c] != CellColor::Black) {
            throw_invariant("marked slot " + std::to_string(t) + " is not a white-to-black change");
        }
        domino_left[c] = true;
    }
    DominoArrangement::Storage tiles;
    for (std::size_t cell = 1; cell <= board.m; ++cell) {
        if (domino_left[cell]) {
            tiles.push_back(TileKind::Domino);
            ++cell;
        } else {
            tiles.push_back(square_of(colors[cell - 1]));
        }
    }
    DominoArrangement arr = validate_domino(tiles);
    if (sign_class(arr) != SignClass::Plus) throw_invariant("board image " + encode(arr) + " is not in D+");
    return arr;
}

MarkedColoredBoard domino_to_board(const DominoArrangement& arr) {
    if (sign_class(arr) != SignClass::Plus) {
        throw Error(ErrorCode::NotPlusClass, encode(arr) + " is not in D+");
    }
    const auto cells = expand(arr);
    MarkedColoredBoard board;
    board.m = cells.size();
    for (std::size_t c = 1; c < board.m; ++c) {
        if (cells[c - 1].color != cells[c].color) board.chosen.push_back(c);
    }
    if (board.chosen.size() % 2 == 1) board.chosen.push_back(board.m);
    for (std::size_t k = 0; k < board.chosen.size(); ++k) {
        const std::size_t c = board.chosen[k];
        if (c <= board.m && cells[c - 1].domino_left) {
            if (k % 2 == 0) throw_invariant("domino middle at an odd-indexed change in " + encode(arr));
            board.marks.push_back((k + 1) / 2);
        }
    }
    board.check();
    if (board.marks.size() != arr.dominoes()) throw_invariant("lost a domino mark for " + encode(arr));
    return board;
}

SquareArrangement domino_to_square(const DominoArrangement& arr) {
    if (sign_class(arr) != SignClass::Plus) {
        throw Error(ErrorCode::NotPlusClass, encode(arr) + " is not in D+");
    }
    const auto cells = expand(arr);
    SquareArrangement::Storage out;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const ExpandedCell& cell = cells[i];
        if (cell.domino_left) continue;
        if (cell.domino_right) {
            out.push_back(SquareKind::Black);
            continue;
        }
        const bool starts_interval = cell.color != cells[i - 1].color;
        out.push_back(starts_interval ? SquareKind::Decorated : SquareKind::White);
    }
    SquareArrangement image = validate_square(out);
    if (image.size() + 1 + arr.dominoes() != arr.cells() || image.blacks() != arr.dominoes() ||
        sign_class(image) != SignClass::Plus) {
        throw_invariant("image of " + encode(arr) + " is " + encode(image) + ", not in B+(m-1-r,r)");
    }
    return image;
}

DominoArrangement square_to_domino(const SquareArrangement& arr) {
    if (sign_class(arr) != SignClass::Plus) {
        throw Error(ErrorCode::NotPlusClass, encode(arr) + " is not in B+");
    }
    DominoArrangement::Storage tiles{TileKind::BlackSquare};
    CellColor current = CellColor::Black;
    for (SquareKind kind : arr.cells()) {
        switch (kind) {
        case SquareKind::Black:
            tiles.push_back(TileKind::Domino);
            current = CellColor::Black;
            break;
        case SquareKind::Decorated:
            current = (current == CellColor::Black) ? CellColor::White : CellColor::Black;
            tiles.push_back(square_of(current));
            break;
        case SquareKind::White: tiles.push_back(square_of(current)); break;
        }
    }
    DominoArrangement image = validate_domino(tiles);
    if (sign_class(image) != SignClass::Plus) {
        throw_invariant("image of " + encode(arr) + " is " + encode(image) + ", not in D+");
    }
    return image;
}

bool in_conjugation_domain(const SquareArrangement& arr) noexcept {
    const bool odd = weight(arr) % 2 == 1;
    return sign_class(arr) == SignClass::Plus ? odd : !odd;
}

ConjugationOutcome conjugate(const SquareArrangement& arr) {
    if (!in_conjugation_domain(arr)) return OutsideDomain{};

    const std::size_t n = arr.size();
    const std::size_t k = weight(arr);
    const std::size_t b = (k >= 1) ? n - k : n; // 1-based
    std::size_t a = 0;
    for (std::size_t c = b - 1; c >= 1; --c) {
        if (arr.at(c) != SquareKind::White) {
            a = c;
            break;
        }
    }

    if (a == 0) {
        const std::size_t r = arr.blacks();
        const SquareArrangement expected = (r % 2 == 1) ? epsilon_plus(n, r) : epsilon_minus(n, r);
        if (arr != expected) throw_invariant(encode(arr) + " has no conjugate but is not epsilon");
        return Exceptional{r % 2 == 1 ? SignClass::Plus : SignClass::Minus};
    }

    SquareArrangement::Storage cells(arr.cells().begin(), arr.cells().end());
    if (cells[a - 1] == SquareKind::Decorated) {
        cells[a - 1] = SquareKind::Black;
        cells[b - 1] = SquareKind::White;
    } else {
        if (cells[b - 2] != SquareKind::White) throw_invariant("cell before B is not white in " + encode(arr));
        cells[a - 1] = SquareKind::Decorated;
        cells[b - 2] = SquareKind::Black;
    }
    cells[n - 1] = (cells[n - 1] == SquareKind::White) ? SquareKind::Decorated : SquareKind::White;

    SquareArrangement image = validate_square(cells);
    if (image.blacks() != arr.blacks() || (weight(image) % 2) == (k % 2) || sign_class(image) == sign_class(arr)) {
        throw_invariant("conjugate of " + encode(arr) + " is " + encode(image) +
                        ", which does not flip weight parity and sign");
    }
    return image;
}

SquareArrangement epsilon_plus(std::size_t n, std::size_t r) {
    if (r % 2 == 0) throw Error(ErrorCode::ParityMismatch, "epsilon+ needs odd r, got " + std::to_string(r));
    return epsilon(n, r, SquareKind::Decorated);
}

SquareArrangement epsilon_minus(std::size_t n, std::size_t r) {
    if (r % 2 == 1) throw Error(ErrorCode::ParityMismatch, "epsilon- needs even r, got " + std::to_string(r));
    return epsilon(n, r, SquareKind::White);
}

} // namespace lastsq
