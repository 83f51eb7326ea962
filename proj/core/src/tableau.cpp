#include "symrep/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace symrep {

StandardTableau::StandardTableau(Partition shape, std::vector<DiagramCell> position)
    : shape_(std::move(shape)), position_(std::move(position)) {
    int n = shape_.n();
    if (static_cast<int>(position_.size()) != n)
        throw std::invalid_argument("tableau must place entries 1..n");
    grid_.resize(static_cast<size_t>(shape_.num_parts()));
    for (int c = 1; c <= shape_.num_parts(); ++c)
        grid_[c - 1].assign(static_cast<size_t>(shape_.part(c)), 0);
    for (int r = 1; r <= n; ++r) {
        const auto& cell = position_[r - 1];
        if (!shape_.contains_cell(cell.col, cell.line))
            throw std::invalid_argument("tableau entry outside the diagram");
        int& slot = grid_[cell.col - 1][cell.line - 1];
        if (slot != 0) throw std::invalid_argument("tableau cell used twice");
        slot = r;
    }
    for (int r = 1; r <= n; ++r) {
        const auto& cell = position_[r - 1];
        if (cell.line > 1 && entry_at(cell.col, cell.line - 1) > r)
            throw std::invalid_argument("tableau not increasing along a column");
        if (cell.col > 1 && shape_.contains_cell(cell.col - 1, cell.line) &&
            entry_at(cell.col - 1, cell.line) > r)
            throw std::invalid_argument("tableau not increasing along a line");
    }
}

const DiagramCell& StandardTableau::cell_of(int entry) const {
    if (entry < 1 || entry > n())
        throw std::out_of_range("tableau entry out of range");
    return position_[entry - 1];
}

int StandardTableau::entry_at(int col, int line) const {
    return grid_[col - 1][line - 1];
}

int StandardTableau::axial_distance(int i, int j) const {
    const auto& ci = cell_of(i);
    const auto& cj = cell_of(j);
    return ci.col - cj.col + cj.line - ci.line;
}

bool StandardTableau::same_column(int r) const {
    return cell_of(r).col == cell_of(r + 1).col;
}

bool StandardTableau::same_line(int r) const {
    return cell_of(r).line == cell_of(r + 1).line;
}

std::optional<StandardTableau> StandardTableau::swap(int r) const {
    if (r < 1 || r >= n()) throw std::out_of_range("swap index out of range");
    if (same_column(r) || same_line(r)) return std::nullopt;
    auto pos = position_;
    std::iter_swap(pos.begin() + (r - 1), pos.begin() + r);
    return StandardTableau(shape_, std::move(pos));
}

int StandardTableau::weight_w() const {
    int inversions = 0;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if (col_of(i) > col_of(j)) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

mpq_class StandardTableau::weight_zeta() const {
    mpq_class out = 1;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if (col_of(i) > col_of(j)) {
                int d = axial_distance(i, j);
                if (d <= 1)
                    throw std::logic_error("axial distance <= 1 on an inverted pair");
                mpq_class factor(d - 1, d + 1);
                factor.canonicalize();
                out *= factor;
            }
    return out;
}

StandardTableau StandardTableau::conjugate() const {
    std::vector<DiagramCell> pos;
    pos.reserve(position_.size());
    for (const auto& cell : position_) pos.push_back({cell.line, cell.col});
    return StandardTableau(shape_.conjugate(), std::move(pos));
}

std::vector<int> StandardTableau::sort_key() const {
    std::vector<int> key;
    key.reserve(position_.size() * 2);
    for (const auto& cell : position_) {
        key.push_back(cell.col);
        key.push_back(cell.line);
    }
    return key;
}

std::string StandardTableau::to_string() const {
    // Printed line by line per the drawing convention.
    std::ostringstream out;
    int max_line = shape_.num_parts() ? shape_.part(1) : 0;
    for (int line = 1; line <= max_line; ++line) {
        bool first = true;
        for (int col = 1; col <= shape_.num_parts(); ++col) {
            if (!shape_.contains_cell(col, line)) break;
            if (!first) out << ' ';
            out << entry_at(col, line);
            first = false;
        }
        if (line < max_line) out << '\n';
    }
    return out.str();
}

namespace {
void enumerate_rec(const Partition& shape, int next, std::vector<int>& heights,
                   std::vector<DiagramCell>& pos, std::vector<StandardTableau>& out) {
    int n = shape.n();
    if (next > n) {
        out.emplace_back(shape, pos);
        return;
    }
    for (int col = 1; col <= shape.num_parts(); ++col) {
        int line = heights[col - 1] + 1;
        if (line > shape.part(col)) continue;
        // Entry to the left on the same line must already be placed.
        if (col > 1 && heights[col - 2] < line) continue;
        heights[col - 1] = line;
        pos.push_back({col, line});
        enumerate_rec(shape, next + 1, heights, pos, out);
        pos.pop_back();
        heights[col - 1] = line - 1;
    }
}
}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    std::vector<int> heights(static_cast<size_t>(shape.num_parts()), 0);
    std::vector<DiagramCell> pos;
    enumerate_rec(shape, 1, heights, pos, out);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) {
                  return a.sort_key() < b.sort_key();
              });
    return out;
}

}  // namespace symrep
