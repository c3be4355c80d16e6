#pragma once

// Executable versions of the three constructions linking the families:
//
//  * marked colored boards  <->  D+(m,r)
//  * D+(m,r)                <->  B+(m-1-r,r)
//  * conjugation, a partial involution on B+odd(n,r) u B-even(n,r) that flips
//    weight parity and sign class and is undefined on exactly one arrangement
//    (epsilon+ for odd r, epsilon- for even r).

#include "lastsq/arrangements.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lastsq {

/// 2i chosen cells c_1 < ... < c_2i on a board of length m, and r marks on
/// slots t in {1..i-1}; slot t is the white-to-black boundary after c_2t.
struct MarkedColoredBoard {
    std::size_t m = 0;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> marks;

    std::size_t pairs() const noexcept { return chosen.size() / 2; }

    /// Throws Error{RangeError} if the invariants do not hold.
    void check() const;

    friend bool operator==(const MarkedColoredBoard&, const MarkedColoredBoard&) = default;
};

/// {"m":4,"chosen":[1,2,3,4],"marks":[1]}
std::string to_record(const MarkedColoredBoard& board);
/// Inverse of to_record; throws ParseError on malformed text and RangeError
/// on an invalid board.
MarkedColoredBoard board_from_record(std::string_view text);

/// Every valid board of length m with r marks, ordered by (chosen, marks).
std::vector<MarkedColoredBoard> enumerate_boards(std::size_t m, std::size_t r);

enum class CellColor : std::uint8_t { Black, White };

std::vector<CellColor> coloring_of(const MarkedColoredBoard& board);

DominoArrangement board_to_domino(const MarkedColoredBoard& board);
/// Throws Error{NotPlusClass} unless arr is in D+.
MarkedColoredBoard domino_to_board(const DominoArrangement& arr);

/// D+(m,r) -> B+(m-1-r,r). Throws Error{NotPlusClass}.
SquareArrangement domino_to_square(const DominoArrangement& arr);
/// B+(n,r) -> D+(n+1+r,r). Throws Error{NotPlusClass}.
DominoArrangement square_to_domino(const SquareArrangement& arr);

struct Exceptional {
    SignClass which; ///< Plus: epsilon+, Minus: epsilon-

    friend bool operator==(const Exceptional&, const Exceptional&) = default;
};

struct OutsideDomain {
    friend bool operator==(const OutsideDomain&, const OutsideDomain&) = default;
};

using ConjugationOutcome = std::variant<SquareArrangement, Exceptional, OutsideDomain>;

/// True for B+ of odd weight and B- of even weight.
bool in_conjugation_domain(const SquareArrangement& arr) noexcept;

ConjugationOutcome conjugate(const SquareArrangement& arr);

/// White cells, then a black run of length r ending at cell n-1, then a
/// decorated (plus) or white (minus) last cell. epsilon_plus needs r odd,
/// epsilon_minus r even (ParityMismatch); both need 0 <= r <= n-1 (RangeError).
SquareArrangement epsilon_plus(std::size_t n, std::size_t r);
SquareArrangement epsilon_minus(std::size_t n, std::size_t r);

} // namespace lastsq
