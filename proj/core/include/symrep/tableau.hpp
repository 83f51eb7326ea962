#ifndef SYMREP_TABLEAU_HPP
#define SYMREP_TABLEAU_HPP

#include <optional>
#include <string>
#include <vector>

#include "symrep/partition.hpp"

namespace symrep {

// Bijective filling of a diagram by 1..n, increasing along every line and
// every column. Stores both entry -> cell and cell -> entry for O(1) queries.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<DiagramCell> position);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    const DiagramCell& cell_of(int entry) const;
    int col_of(int entry) const { return cell_of(entry).col; }
    int line_of(int entry) const { return cell_of(entry).line; }
    int entry_at(int col, int line) const;

    // d_T(i,j) = c_i - c_j + l_j - l_i
    int axial_distance(int i, int j) const;

    bool same_column(int r) const;  // r and r+1 on the same column
    bool same_line(int r) const;

    // Exchange r and r+1; none when they share a line or column.
    std::optional<StandardTableau> swap(int r) const;
    // T < T_r in the tableau order: d_T(r+1, r) > 0.
    bool less_than_swapped(int r) const { return axial_distance(r + 1, r) > 0; }

    int weight_w() const;          // (-1)^{# column inversions}
    mpq_class weight_zeta() const; // product of (d-1)/(d+1) over column inversions

    StandardTableau conjugate() const;

    // Canonical sort key: (c_1, l_1, c_2, l_2, ...).
    std::vector<int> sort_key() const;

    std::string to_string() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    Partition shape_;
    std::vector<DiagramCell> position_;     // entry r at position_[r-1]
    std::vector<std::vector<int>> grid_;    // grid_[col-1][line-1] = entry
};

// All standard tableaux of the shape, in canonical order.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

}  // namespace symrep

#endif
