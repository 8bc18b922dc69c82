#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sortnet {

// A box (i, j) of a Young diagram, 1-based; i is the row (increasing
// downwards), j the column. Ordered row-major.
struct Box {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Box&, const Box&) = default;
  friend bool operator==(const Box&, const Box&) = default;

  // Componentwise partial order (i, j) <= (k, l).
  [[nodiscard]] bool precedes(const Box& other) const {
    return row <= other.row && col <= other.col;
  }
};

std::string to_string(const Box& box);

// Left-justified diagram given by weakly decreasing positive row lengths.
// Immutable value type; the transpose is computed on demand.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  // Throws DomainError unless rows are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> rows);

  // Shape (n-1, n-2, ..., 1); staircase(1) is the empty diagram.
  static YoungDiagram staircase(int n);

  [[nodiscard]] const std::vector<int>& rows() const { return rows_; }
  [[nodiscard]] int num_rows() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int num_cols() const { return rows_.empty() ? 0 : rows_.front(); }
  // Number of boxes |lambda|.
  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }

  // Length of row i (1-based); 0 for rows beyond the diagram.
  [[nodiscard]] int row_length(int i) const;
  // Length of column j (1-based); 0 for columns beyond the diagram.
  [[nodiscard]] int column_length(int j) const;
  [[nodiscard]] std::vector<int> column_lengths() const;
  [[nodiscard]] bool contains(const Box& box) const;

  [[nodiscard]] YoungDiagram transpose() const;

  // n if this is staircase(n) for some n >= 2, otherwise nullopt.
  [[nodiscard]] std::optional<int> staircase_size() const;

  // All boxes in row-major order.
  [[nodiscard]] std::vector<Box> boxes() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

std::string to_string(const YoungDiagram& diagram);

// Arm plus leg plus one. Throws DomainError if the box is outside.
int hook_length(const YoungDiagram& diagram, const Box& box);

// Boxes with hook length 1, in row-major order.
std::vector<Box> corners(const YoungDiagram& diagram);
bool is_corner(const YoungDiagram& diagram, const Box& box);

// Co-leg (strictly above in the same column) followed by co-arm (strictly
// left in the same row). Throws DomainError if the box is outside.
std::vector<Box> cohook(const YoungDiagram& diagram, const Box& box);

// Boxes >= corner, translated so that corner maps to (1, 1).
YoungDiagram subdiagram(const YoungDiagram& diagram, const Box& corner);

// Diagram with the given corner removed. Throws DomainError for non-corners.
YoungDiagram remove_corner(const YoungDiagram& diagram, const Box& corner);

// Every partition of `size`, in reverse lexicographic order of row vectors.
std::vector<YoungDiagram> partitions(int size);

// Parses "staircase:N" or a comma-separated row list such as "3,2,1".
YoungDiagram parse_shape(const std::string& text);

}  // namespace sortnet
