#pragma once

#include "wg/affine.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wg {

// Reader for the generator file format accepted by `wallpaper identify`.
//
// One generator per line:
//
//     gen <name> = [[a,b],[c,d]] + (p/q, r/s)
//
// The matrix entries are integers, the translation entries rationals
// (a bare integer stands for an integral rational). Blank lines are
// skipped and '#' starts a comment running to the end of the line.
// The matrix must be invertible over the integers (determinant +1 or
// -1); anything the closure algorithm rejects later, such as a matrix
// of infinite order, is not this reader's concern.

struct NamedGenerator {
    std::string name;
    AffineElement element;
};

// Reported with the 1-based line and column of the offending character.
// what() already carries the position prefix; the accessors exist so
// callers can reformat. line() == 0 means the failure has no position
// (for example an unreadable file).
class GroupFileError : public std::runtime_error {
  public:
    GroupFileError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

  private:
    int line_ = 0;
    int column_ = 0;
    std::string message_;
};

// Parses the whole text. Throws GroupFileError on the first defect.
std::vector<NamedGenerator> parse_group_file(std::string_view text);

// Reads and parses a file; an unreadable path throws GroupFileError
// with line 0.
std::vector<NamedGenerator> read_group_file(const std::string& path);

// Convenience projection for feeding group_from_generators.
std::vector<AffineElement> elements_of(const std::vector<NamedGenerator>& generators);

}  // namespace wg
