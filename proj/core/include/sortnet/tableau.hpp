#pragma once

#include <functional>
#include <vector>

#include "sortnet/young_diagram.hpp"

namespace sortnet {

// Bijective filling of a Young diagram with 1..|lambda|, strictly increasing
// along rows and columns. Entries are stored row by row.
class StandardTableau {
 public:
  StandardTableau() = default;
  // Validates shape, the entry set and monotonicity; throws DomainError.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  [[nodiscard]] const YoungDiagram& shape() const { return shape_; }
  [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
  [[nodiscard]] int size() const { return shape_.size(); }

  // T(x); the box must lie in the shape.
  [[nodiscard]] int at(const Box& box) const;
  // T^{-1}: element v (1-based) is the box holding entry v; element 0 unused.
  [[nodiscard]] std::vector<Box> positions() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  YoungDiagram shape_;
  std::vector<std::vector<int>> rows_;
};

// Builds a tableau from a shape and the box of each entry (positions[v] for
// v = 1..|lambda|; positions[0] ignored).
StandardTableau tableau_from_positions(const YoungDiagram& shape,
                                       const std::vector<Box>& positions);

// Partial filling: a finite set of boxes with integer entries, kept in
// row-major order. Used for subtableaux and motifs.
class Filling {
 public:
  struct Cell {
    Box box;
    int value = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  Filling() = default;
  // Throws DomainError on duplicate boxes.
  explicit Filling(std::vector<Cell> cells);
  static Filling from_tableau(const StandardTableau& tableau);

  [[nodiscard]] const std::vector<Cell>& cells() const { return cells_; }
  [[nodiscard]] std::size_t size() const { return cells_.size(); }
  [[nodiscard]] std::vector<Box> support() const;

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  std::vector<Cell> cells_;
};

// Restriction of the tableau to the subdiagram with top-left `corner`;
// boxes and entries keep their original coordinates and values.
Filling subtableau(const StandardTableau& tableau, const Box& corner);

// True iff the supports are translates of one another and the translation
// preserves the strict order of entries in both directions. Mismatched
// supports give false.
bool identically_ordered(const Filling& lhs, const Filling& rhs);

// Staircase grid (or any diagram) holding positive entries and zeros, where
// the zeros mark the vacated top-left region.
class SkewFilling {
 public:
  SkewFilling(YoungDiagram shape, std::vector<std::vector<int>> rows);

  [[nodiscard]] const YoungDiagram& shape() const { return shape_; }
  [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
  // Entry at box, 0 for boxes outside the shape.
  [[nodiscard]] int at(const Box& box) const;
  [[nodiscard]] int nonzero_count() const;

  // Zero region is a Young diagram nested in the shape and nonzero entries
  // strictly increase along rows and columns.
  [[nodiscard]] bool is_valid() const;

 private:
  YoungDiagram shape_;
  std::vector<std::vector<int>> rows_;
};

inline constexpr int kDefaultEnumerationCap = 12;

// Calls `visit` once for each standard tableau of the given shape.
// Throws CapacityError when |lambda| exceeds `cap`.
void for_each_syt(const YoungDiagram& shape,
                  const std::function<void(const StandardTableau&)>& visit,
                  int cap = kDefaultEnumerationCap);

std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape,
                                           int cap = kDefaultEnumerationCap);

}  // namespace sortnet
