#include "wg/presentation.hpp"

#include "wg/holonomy.hpp"
#include "wg/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace wg {

Word Word::inverted() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

Word Word::powered(int exponent) const {
    const Word base = exponent >= 0 ? *this : inverted();
    const int count = std::abs(exponent);
    Word out;
    out.letters.reserve(base.letters.size() * static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
    return out;
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

namespace {

class WordParser {
public:
    WordParser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    Word parse() {
        Word w = parse_sequence();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return w;
    }

private:
    Word parse_sequence() {
        Word out;
        while (true) {
            skip_space();
            if (pos_ == text_.size() || text_[pos_] == ')') return out;
            if (text_[pos_] == '*') {
                ++pos_;
                skip_space();
            }
            if (pos_ == text_.size() || text_[pos_] == ')') fail("dangling '*'");
            out = out * parse_factor();
        }
    }

    Word parse_factor() {
        skip_space();
        if (pos_ == text_.size()) fail("expected a factor");
        if (text_[pos_] == '(') {
            ++pos_;
            Word inner = parse_sequence();
            skip_space();
            if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
            ++pos_;
            return inner.powered(parse_optional_exponent());
        }
        std::vector<int> letters = parse_name_letters();
        const int exponent = parse_optional_exponent();
        Word head;
        head.letters.assign(letters.begin(), letters.end() - 1);
        Word last;
        last.letters.push_back(letters.back());
        return head * last.powered(exponent);
    }

    // A run of identifier characters is either one generator name or a
    // juxtaposition of single-character generator names.
    std::vector<int> parse_name_letters() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a generator name");
        const std::string name = text_.substr(start, pos_ - start);
        if (auto k = lookup(name)) return {static_cast<int>(*k) + 1};
        std::vector<int> letters;
        for (char ch : name) {
            auto k = lookup(std::string(1, ch));
            if (!k) fail("unknown generator '" + name + "'");
            letters.push_back(static_cast<int>(*k) + 1);
        }
        return letters;
    }

    int parse_optional_exponent() {
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != '^') return 1;
        ++pos_;
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an exponent");
        const int value = std::stoi(text_.substr(start, pos_ - start));
        return negative ? -value : value;
    }

    std::optional<std::size_t> lookup(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("cannot parse word \"" + text_ + "\" at offset " +
                                    std::to_string(pos_) + ": " + message);
    }

    const std::string& text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& generator_names) {
    return WordParser(text, generator_names).parse();
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names) {
    if (w.letters.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i > 0) out += '*';
        const int letter = w.letters[i];
        const std::size_t k = static_cast<std::size_t>(std::abs(letter)) - 1;
        out += generator_names.at(k);
        if (letter < 0) out += "^-1";
    }
    return out;
}

std::size_t FinitePresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return i;
    throw std::invalid_argument("no generator named '" + name + "'");
}

AffineElement evaluate_word(const Word& w, const std::vector<AffineElement>& images) {
    AffineElement out{Mat2::identity(), Vec2{}};
    for (int letter : w.letters) {
        const auto& g = images.at(static_cast<std::size_t>(std::abs(letter)) - 1);
        out = compose(out, letter > 0 ? g : inverse(g));
    }
    return out;
}

Mat2 evaluate_word(const Word& w, const std::vector<Mat2>& images) {
    Mat2 out = Mat2::identity();
    for (int letter : w.letters) {
        const auto& g = images.at(static_cast<std::size_t>(std::abs(letter)) - 1);
        out = out * (letter > 0 ? g : g.inverse());
    }
    return out;
}

bool relators_hold(const FinitePresentation& p, const std::vector<AffineElement>& images) {
    if (images.size() != p.generators.size()) return false;
    const AffineElement id{Mat2::identity(), Vec2{}};
    for (const Word& r : p.relators)
        if (!(evaluate_word(r, images) == id)) return false;
    return true;
}

std::size_t AbelianInvariants::mod2_rank() const {
    std::size_t rank = free_rank;
    for (const Integer& d : torsion)
        if (d % 2 == 0) ++rank;
    return rank;
}

AbelianInvariants abelianization(const FinitePresentation& p) {
    const std::size_t n = p.generators.size();
    AbelianInvariants out;
    if (p.relators.empty() || n == 0) {
        out.free_rank = n;
        return out;
    }
    IntMatrix relations(p.relators.size(), IntVector(n, 0));
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (int letter : p.relators[i].letters) {
            const std::size_t k = static_cast<std::size_t>(std::abs(letter)) - 1;
            relations[i][k] += letter > 0 ? 1 : -1;
        }
    const IntVector invariants = smith_invariants(relations);
    out.free_rank = n - invariants.size();
    for (const Integer& d : invariants)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

std::string to_string(const AbelianInvariants& a) {
    std::vector<std::string> parts;
    if (a.free_rank == 1) parts.push_back("Z");
    if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
    for (const Integer& d : a.torsion) parts.push_back("Z/" + to_string(d));
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

namespace {

constexpr std::size_t kUndef = CosetTable::kUndefined;

std::size_t column_of(int letter) {
    const std::size_t k = static_cast<std::size_t>(std::abs(letter)) - 1;
    return 2 * k + (letter > 0 ? 0 : 1);
}

// Hand-rolled Todd-Coxeter state: a growing table over live and dead
// cosets, a union-find over coset ids, and a queue of pending merges.
class Enumerator {
public:
    Enumerator(const FinitePresentation& p, const std::vector<Word>& subgroup_generators,
               std::size_t max_cosets)
        : presentation_(p), subgroup_generators_(subgroup_generators), max_cosets_(max_cosets),
          columns_(2 * p.generators.size()) {}

    CosetTable run() {
        table_.push_back(std::vector<std::size_t>(columns_, kUndef));
        parent_.push_back(0);
        live_ = 1;

        for (const Word& w : subgroup_generators_)
            process_with_retry(0, [&] { scan_and_fill(0, w); });

        for (std::size_t pos = 0; pos < table_.size(); ++pos) {
            if (find(pos) != pos) continue;
            process_with_retry(pos, [&] {
                if (find(pos) != pos) return;
                for (const Word& r : presentation_.relators) {
                    scan_and_fill(pos, r);
                    if (find(pos) != pos) return;
                }
                for (std::size_t c = 0; c < columns_; ++c)
                    if (table_[pos][c] == kUndef) define(pos, c);
            });
        }
        return standardized(compacted());
    }

private:
    // Raised when a definition would break the budget; the per-coset retry
    // loop answers with a lookahead pass. Scans never see a merge mid-walk.
    struct RetryAfterLookahead {};

    template <typename Body>
    void process_with_retry(std::size_t coset, Body body) {
        while (true) {
            try {
                body();
                return;
            } catch (const RetryAfterLookahead&) {
                lookahead();
                // Insist on real headroom so a chain of overflowing
                // definitions cannot thrash in lookahead.
                if (live_ >= max_cosets_ - max_cosets_ / 10 ||
                    table_.size() > 20 * max_cosets_)
                    throw EnumerationBudgetExceeded{};
                if (find(coset) != coset) return;
            }
        }
    }
    std::size_t find(std::size_t k) {
        while (parent_[k] != k) {
            parent_[k] = parent_[parent_[k]];
            k = parent_[k];
        }
        return k;
    }

    void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        const std::size_t hi = std::max(a, b);
        parent_[hi] = std::min(a, b);
        --live_;
        merge_queue_.push_back(hi);
    }

    void coincidence(std::size_t a, std::size_t b) {
        merge(a, b);
        while (!merge_queue_.empty()) {
            const std::size_t dead = merge_queue_.front();
            merge_queue_.pop_front();
            for (std::size_t c = 0; c < columns_; ++c) {
                const std::size_t target = table_[dead][c];
                if (target == kUndef) continue;
                if (table_[target][c ^ 1] == dead) table_[target][c ^ 1] = kUndef;
                const std::size_t a1 = find(dead);
                const std::size_t b1 = find(target);
                if (table_[a1][c] != kUndef)
                    merge(b1, table_[a1][c]);
                else if (table_[b1][c ^ 1] != kUndef)
                    merge(a1, table_[b1][c ^ 1]);
                else {
                    table_[a1][c] = b1;
                    table_[b1][c ^ 1] = a1;
                }
            }
        }
    }

    void define(std::size_t a, std::size_t column) {
        if (live_ >= max_cosets_) throw RetryAfterLookahead{};
        const std::size_t fresh = table_.size();
        table_.push_back(std::vector<std::size_t>(columns_, kUndef));
        parent_.push_back(fresh);
        ++live_;
        table_[a][column] = fresh;
        table_[fresh][column ^ 1] = a;
    }

    void scan_and_fill(std::size_t start, const Word& w) { scan(start, w, true); }

    void scan(std::size_t start, const Word& w, bool fill) {
        std::size_t front = start;
        std::size_t back = start;
        std::ptrdiff_t i = 0;
        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.letters.size()) - 1;
        while (true) {
            while (i <= j && table_[front][column_of(w.letters[i])] != kUndef) {
                front = table_[front][column_of(w.letters[i])];
                ++i;
            }
            if (i > j) {
                if (front != back) coincidence(front, back);
                return;
            }
            while (j >= i && table_[back][column_of(w.letters[j]) ^ 1] != kUndef) {
                back = table_[back][column_of(w.letters[j]) ^ 1];
                --j;
            }
            if (j < i) {
                coincidence(front, back);
                return;
            }
            if (j == i) {
                const std::size_t c = column_of(w.letters[i]);
                table_[front][c] = back;
                table_[back][c ^ 1] = front;
                return;
            }
            if (!fill) return;
            define(front, column_of(w.letters[i]));
        }
    }

    void lookahead() {
        for (const Word& w : subgroup_generators_)
            if (find(0) == 0) scan(0, w, false);
        for (std::size_t a = 0; a < table_.size(); ++a) {
            if (find(a) != a) continue;
            for (const Word& r : presentation_.relators) {
                scan(a, r, false);
                if (find(a) != a) break;
            }
        }
    }

    CosetTable compacted() {
        std::vector<std::size_t> fresh_id(table_.size(), kUndef);
        std::size_t next = 0;
        for (std::size_t a = 0; a < table_.size(); ++a)
            if (find(a) == a) fresh_id[a] = next++;
        CosetTable out;
        out.generator_count = presentation_.generators.size();
        out.rows.reserve(next);
        for (std::size_t a = 0; a < table_.size(); ++a) {
            if (find(a) != a) continue;
            std::vector<std::size_t> row(columns_, kUndef);
            for (std::size_t c = 0; c < columns_; ++c)
                if (table_[a][c] != kUndef) row[c] = fresh_id[find(table_[a][c])];
            out.rows.push_back(std::move(row));
        }
        return out;
    }

    const FinitePresentation& presentation_;
    const std::vector<Word>& subgroup_generators_;
    const std::size_t max_cosets_;
    const std::size_t columns_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> parent_;
    std::deque<std::size_t> merge_queue_;
    std::size_t live_ = 0;
};

}  // namespace

std::size_t CosetTable::move(std::size_t coset, int letter) const {
    return rows.at(coset).at(column_of(letter));
}

std::size_t CosetTable::trace(std::size_t coset, const Word& w) const {
    for (int letter : w.letters) {
        if (coset == kUndefined) return kUndefined;
        coset = move(coset, letter);
    }
    return coset;
}

CosetTable coset_enumeration(const FinitePresentation& p,
                             const std::vector<Word>& subgroup_generators,
                             std::size_t max_cosets) {
    return Enumerator(p, subgroup_generators, max_cosets).run();
}

CosetTable standardized(const CosetTable& t) {
    const std::size_t n = t.rows.size();
    const std::size_t columns = 2 * t.generator_count;
    std::vector<std::size_t> relabel(n, CosetTable::kUndefined);
    std::vector<std::size_t> order;
    order.reserve(n);
    relabel[0] = 0;
    order.push_back(0);
    for (std::size_t at = 0; at < order.size(); ++at)
        for (std::size_t c = 0; c < columns; ++c) {
            const std::size_t b = t.rows[order[at]][c];
            if (b != CosetTable::kUndefined && relabel[b] == CosetTable::kUndefined) {
                relabel[b] = order.size();
                order.push_back(b);
            }
        }
    if (order.size() != n)
        throw std::invalid_argument("coset table is not transitive");
    CosetTable out;
    out.generator_count = t.generator_count;
    out.rows.assign(n, std::vector<std::size_t>(columns, CosetTable::kUndefined));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < columns; ++c) {
            const std::size_t b = t.rows[order[a]][c];
            if (b != CosetTable::kUndefined) out.rows[a][c] = relabel[b];
        }
    return out;
}

namespace {

// Backtracking search over partial coset tables in scan-order standard
// form. Every complete table found is the table of a distinct subgroup.
class LowIndexSearch {
public:
    LowIndexSearch(const FinitePresentation& p, std::size_t max_index)
        : presentation_(p), max_index_(max_index), columns_(2 * p.generators.size()) {}

    std::vector<CosetTable> run() {
        rows_.assign(1, std::vector<std::size_t>(columns_, kUndef));
        descend();
        return std::move(found_);
    }

private:
    struct Assignment {
        std::size_t row, column;
    };

    void descend() {
        const auto cell = first_undefined();
        if (!cell) {
            CosetTable t;
            t.generator_count = presentation_.generators.size();
            t.rows = rows_;
            found_.push_back(std::move(t));
            return;
        }
        const auto [r, c] = *cell;
        const std::size_t mark = trail_.size();
        for (std::size_t d = 0; d <= rows_.size(); ++d) {
            if (d == rows_.size()) {
                if (rows_.size() >= max_index_) break;
                rows_.push_back(std::vector<std::size_t>(columns_, kUndef));
                if (try_assignment(r, c, d)) descend();
                undo_to(mark);
                rows_.pop_back();
            } else {
                if (rows_[d][c ^ 1] != kUndef) continue;
                if (try_assignment(r, c, d)) descend();
                undo_to(mark);
            }
        }
    }

    std::optional<std::pair<std::size_t, std::size_t>> first_undefined() const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < columns_; ++c)
                if (rows_[r][c] == kUndef) return std::make_pair(r, c);
        return std::nullopt;
    }

    bool try_assignment(std::size_t r, std::size_t c, std::size_t d) {
        assign(r, c, d);
        return propagate();
    }

    void assign(std::size_t r, std::size_t c, std::size_t d) {
        rows_[r][c] = d;
        trail_.push_back({r, c});
        if (rows_[d][c ^ 1] == kUndef) {
            rows_[d][c ^ 1] = r;
            trail_.push_back({d, c ^ 1});
        }
    }

    // Scans every relator at every coset until no deduction is produced.
    // Returns false when a scan forces two cosets to coincide.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t a = 0; a < rows_.size(); ++a)
                for (const Word& w : presentation_.relators) {
                    const int state = scan_partial(a, w, changed);
                    if (state < 0) return false;
                }
        }
        return true;
    }

    int scan_partial(std::size_t a, const Word& w, bool& changed) {
        std::size_t front = a;
        std::size_t back = a;
        std::ptrdiff_t i = 0;
        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.letters.size()) - 1;
        while (i <= j && rows_[front][column_of(w.letters[i])] != kUndef) {
            front = rows_[front][column_of(w.letters[i])];
            ++i;
        }
        if (i > j) return front == back ? 0 : -1;
        while (j >= i && rows_[back][column_of(w.letters[j]) ^ 1] != kUndef) {
            back = rows_[back][column_of(w.letters[j]) ^ 1];
            --j;
        }
        if (j < i) return front == back ? 0 : -1;
        if (j == i) {
            const std::size_t c = column_of(w.letters[i]);
            if (rows_[back][c ^ 1] != kUndef && rows_[back][c ^ 1] != front) return -1;
            assign(front, c, back);
            changed = true;
        }
        return 0;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const auto [r, c] = trail_.back();
            trail_.pop_back();
            rows_[r][c] = kUndef;
        }
    }

    const FinitePresentation& presentation_;
    const std::size_t max_index_;
    const std::size_t columns_;
    std::vector<std::vector<std::size_t>> rows_;
    std::vector<Assignment> trail_;
    std::vector<CosetTable> found_;
};

CosetTable rebased(const CosetTable& t, std::size_t base) {
    if (base == 0) return standardized(t);
    CosetTable swapped = t;
    // Renumber so the chosen base becomes coset 0, then standardize.
    for (auto& row : swapped.rows)
        for (auto& entry : row) {
            if (entry == base)
                entry = 0;
            else if (entry == 0)
                entry = base;
        }
    std::swap(swapped.rows[0], swapped.rows[base]);
    return standardized(swapped);
}

}  // namespace

std::vector<CosetTable> low_index_subgroups(const FinitePresentation& p, std::size_t max_index,
                                            bool up_to_conjugacy) {
    std::vector<CosetTable> all = LowIndexSearch(p, max_index).run();
    if (!up_to_conjugacy) return all;
    std::set<std::vector<std::vector<std::size_t>>> seen;
    std::vector<CosetTable> out;
    for (const CosetTable& t : all) {
        CosetTable best = t;
        for (std::size_t base = 1; base < t.rows.size(); ++base) {
            CosetTable candidate = rebased(t, base);
            if (candidate < best) best = candidate;
        }
        if (seen.insert(best.rows).second) out.push_back(std::move(best));
    }
    return out;
}

SubgroupPresentation reidemeister_schreier(const FinitePresentation& p, const CosetTable& t) {
    const std::size_t n = t.rows.size();
    const std::size_t g = p.generators.size();
    for (const auto& row : t.rows)
        for (std::size_t entry : row)
            if (entry == CosetTable::kUndefined)
                throw std::invalid_argument("subgroup presentations need a complete coset table");

    // Schreier transversal along a breadth-first spanning tree.
    std::vector<Word> transversal(n);
    std::vector<bool> visited(n, false);
    std::vector<std::vector<bool>> tree_edge(n, std::vector<bool>(g, false));
    std::vector<std::size_t> order;
    order.reserve(n);
    visited[0] = true;
    order.push_back(0);
    for (std::size_t at = 0; at < order.size(); ++at) {
        const std::size_t a = order[at];
        for (std::size_t c = 0; c < 2 * g; ++c) {
            const std::size_t b = t.rows[a][c];
            if (visited[b]) continue;
            visited[b] = true;
            const int letter = static_cast<int>(c / 2) + 1;
            Word step;
            step.letters.push_back(c % 2 == 0 ? letter : -letter);
            transversal[b] = transversal[a] * step;
            if (c % 2 == 0)
                tree_edge[a][c / 2] = true;
            else
                tree_edge[b][c / 2] = true;
            order.push_back(b);
        }
    }
    if (order.size() != n) throw std::invalid_argument("coset table is not transitive");

    // One Schreier generator per non-tree (coset, generator) edge.
    std::vector<std::vector<std::ptrdiff_t>> schreier_index(n, std::vector<std::ptrdiff_t>(g, -1));
    SubgroupPresentation out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < g; ++k) {
            if (tree_edge[a][k]) continue;
            schreier_index[a][k] = static_cast<std::ptrdiff_t>(out.generator_words.size());
            out.presentation.generators.push_back(
                "s" + std::to_string(out.generator_words.size() + 1));
            Word step;
            step.letters.push_back(static_cast<int>(k) + 1);
            const std::size_t b = t.rows[a][2 * k];
            out.generator_words.push_back(transversal[a] * step * transversal[b].inverted());
        }

    std::set<std::vector<int>> seen_relators;
    for (std::size_t a = 0; a < n; ++a)
        for (const Word& r : p.relators) {
            Word rewritten;
            std::size_t c = a;
            for (int letter : r.letters) {
                const std::size_t k = static_cast<std::size_t>(std::abs(letter)) - 1;
                if (letter > 0) {
                    if (schreier_index[c][k] >= 0)
                        rewritten.letters.push_back(static_cast<int>(schreier_index[c][k]) + 1);
                    c = t.rows[c][2 * k];
                } else {
                    const std::size_t previous = t.rows[c][2 * k + 1];
                    if (schreier_index[previous][k] >= 0)
                        rewritten.letters.push_back(-(static_cast<int>(schreier_index[previous][k]) + 1));
                    c = previous;
                }
            }
            if (c != a) throw std::logic_error("relator trace left its starting coset");
            if (!rewritten.letters.empty() && seen_relators.insert(rewritten.letters).second)
                out.presentation.relators.push_back(std::move(rewritten));
        }
    return out;
}

namespace {

// The permutation action of the presentation's generators on the holonomy
// group, as a coset table for the subgroup of pure translations.
CosetTable holonomy_action_table(const FinitePresentation& p,
                                 const std::vector<AffineElement>& images) {
    std::vector<Mat2> linear;
    linear.reserve(images.size());
    for (const auto& g : images) linear.push_back(g.linear);
    std::vector<Mat2> elements = close_point_group(linear).elements;
    std::sort(elements.begin(), elements.end());
    std::map<Mat2, std::size_t> position;
    for (std::size_t i = 0; i < elements.size(); ++i) position.emplace(elements[i], i);

    CosetTable t;
    t.generator_count = p.generators.size();
    t.rows.assign(elements.size(),
                  std::vector<std::size_t>(2 * p.generators.size(), CosetTable::kUndefined));
    for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t k = 0; k < linear.size(); ++k) {
            t.rows[a][2 * k] = position.at(elements[a] * linear[k]);
            t.rows[a][2 * k + 1] = position.at(elements[a] * linear[k].inverse());
        }

    // Renumber so the identity holonomy is coset 0.
    const std::size_t id_at = position.at(Mat2::identity());
    if (id_at != 0) {
        for (auto& row : t.rows)
            for (auto& entry : row) {
                if (entry == id_at)
                    entry = 0;
                else if (entry == 0)
                    entry = id_at;
            }
        std::swap(t.rows[0], t.rows[id_at]);
    }
    return standardized(t);
}

}  // namespace

PresentationCertificate verify_presentation_against(const FinitePresentation& p,
                                                    const std::vector<AffineElement>& images,
                                                    const CrystalGroup& expected) {
    PresentationCertificate cert;
    if (images.size() != p.generators.size()) return cert;
    cert.relators_ok = relators_hold(p, images);

    try {
        cert.generates_ok = group_from_generators(images) == expected;
    } catch (const std::exception&) {
        cert.generates_ok = false;
    }
    if (!cert.relators_ok || !cert.generates_ok) return cert;

    // Words for a basis of the translation lattice, assembled from the
    // Schreier generators of the pure-translation subgroup.
    const SubgroupPresentation translations =
        reidemeister_schreier(p, holonomy_action_table(p, images));
    const std::size_t m = translations.generator_words.size();
    IntMatrix columns(2, IntVector(m, 0));
    for (std::size_t k = 0; k < m; ++k) {
        const AffineElement value = evaluate_word(translations.generator_words[k], images);
        if (!value.linear.is_identity())
            throw std::logic_error("translation subgroup word has nontrivial holonomy");
        const std::optional<Vec2> coords = expected.lattice.coordinates_of(value.translation);
        if (!coords || !coords->is_integral())
            throw std::logic_error("translation subgroup word lands outside the lattice");
        columns[0][k] = num(coords->x);
        columns[1][k] = num(coords->y);
    }
    std::vector<Word> basis_words;
    for (int axis = 0; axis < 2; ++axis) {
        const IntVector target = axis == 0 ? IntVector{1, 0} : IntVector{0, 1};
        const IntAffineSolutionSet combo = integer_solve(columns, target);
        if (!combo.solvable) return cert;
        Word w;
        for (std::size_t k = 0; k < m; ++k) {
            const Integer& coefficient = combo.particular[k];
            if (coefficient != 0)
                w = w * translations.generator_words[k].powered(static_cast<int>(coefficient));
        }
        basis_words.push_back(std::move(w));
    }

    const std::size_t point_order = expected.point_group_order();
    try {
        const CosetTable cosets = coset_enumeration(p, basis_words);
        cert.lattice_index_ok = cosets.index() == point_order;
        if (cert.lattice_index_ok) {
            const SubgroupPresentation lattice = reidemeister_schreier(p, cosets);
            cert.lattice_rank_ok =
                abelianization(lattice.presentation) == AbelianInvariants{2, {}};
        }
    } catch (const EnumerationBudgetExceeded&) {
        // leave the flags false
    }
    return cert;
}

}  // namespace wg
