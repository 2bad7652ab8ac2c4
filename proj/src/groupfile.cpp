#include "wg/groupfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace wg {

namespace {

std::string position_prefix(int line, int column) {
    if (line <= 0) return {};
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Scanner over one physical line. Columns are 1-based and refer to the
// original line, comments included, so reported positions match what the
// user sees in an editor.
class LineScanner {
  public:
    LineScanner(int line_no, std::string_view text) : line_(line_no), text_(text) {}

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }

    int column() const { return static_cast<int>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& what) const { fail_at(column(), what); }
    [[noreturn]] void fail_at(int column, const std::string& what) const {
        throw GroupFileError(line_, column, what);
    }

    void expect(char c) {
        skip_spaces();
        if (pos_ >= text_.size())
            fail(std::string("expected '") + c + "' before end of line");
        if (text_[pos_] != c)
            fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
        ++pos_;
    }

    // A run of identifier characters; empty if the next character is not one.
    std::string word() {
        skip_spaces();
        if (pos_ >= text_.size() || !is_name_start(text_[pos_])) return {};
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Integer integer(const char* what) {
        skip_spaces();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail_at(static_cast<int>(start) + 1, std::string("expected ") + what);
        Integer value(std::string(text_.substr(digits, pos_ - digits)));
        return negative ? -value : value;
    }

    Rational rational(const char* what) {
        Integer numerator = integer(what);
        skip_spaces();
        if (pos_ >= text_.size() || text_[pos_] != '/') return Rational(numerator);
        ++pos_;
        int denom_col = column();
        Integer denominator = integer("denominator");
        if (denominator == 0) fail_at(denom_col, "zero denominator");
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        return Rational(numerator, denominator);
    }

  private:
    int line_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

NamedGenerator parse_generator_line(int line_no, std::string_view line) {
    LineScanner in(line_no, line);

    in.skip_spaces();
    int keyword_col = in.column();
    std::string keyword = in.word();
    if (keyword != "gen")
        in.fail_at(keyword_col, "expected 'gen' to open a generator line");

    in.skip_spaces();
    int name_col = in.column();
    std::string name = in.word();
    if (name.empty()) in.fail_at(name_col, "expected a generator name");

    in.expect('=');

    in.skip_spaces();
    int matrix_col = in.column();
    Mat2 m;
    in.expect('[');
    in.expect('[');
    m.a = in.integer("matrix entry");
    in.expect(',');
    m.b = in.integer("matrix entry");
    in.expect(']');
    in.expect(',');
    in.expect('[');
    m.c = in.integer("matrix entry");
    in.expect(',');
    m.d = in.integer("matrix entry");
    in.expect(']');
    in.expect(']');

    Integer det = m.det();
    if (det != 1 && det != -1)
        in.fail_at(matrix_col,
                   "matrix must be invertible over the integers, determinant is " + det.str());

    in.expect('+');
    in.expect('(');
    Vec2 t;
    t.x = in.rational("translation entry");
    in.expect(',');
    t.y = in.rational("translation entry");
    in.expect(')');

    if (!in.at_end()) in.fail("unexpected text after generator");

    return {std::move(name), AffineElement{m, t}};
}

}  // namespace

GroupFileError::GroupFileError(int line, int column, const std::string& message)
    : std::runtime_error(position_prefix(line, column) + message),
      line_(line),
      column_(column),
      message_(message) {}

std::vector<NamedGenerator> parse_group_file(std::string_view text) {
    std::vector<NamedGenerator> out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line_no;
        std::size_t stop = text.find('\n', start);
        std::string_view line = text.substr(
            start, stop == std::string_view::npos ? text.size() - start : stop - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
        if (!blank) out.push_back(parse_generator_line(line_no, line));
        if (stop == std::string_view::npos) break;
        start = stop + 1;
    }
    return out;
}

std::vector<NamedGenerator> read_group_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GroupFileError(0, 0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_group_file(buffer.str());
}

std::vector<AffineElement> elements_of(const std::vector<NamedGenerator>& generators) {
    std::vector<AffineElement> out;
    out.reserve(generators.size());
    for (const NamedGenerator& g : generators) out.push_back(g.element);
    return out;
}

}  // namespace wg
