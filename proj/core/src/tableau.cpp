#include "sortnet/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "sortnet/error.hpp"

namespace sortnet {

namespace {

std::vector<int> row_lengths_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lengths;
  lengths.reserve(rows.size());
  for (const auto& row : rows) {
    lengths.push_back(static_cast<int>(row.size()));
  }
  return lengths;
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : shape_(row_lengths_of(rows)), rows_(std::move(rows)) {
  const int total = shape_.size();
  std::vector<bool> seen(total + 1, false);
  for (int i = 0; i < shape_.num_rows(); ++i) {
    for (int j = 0; j < shape_.rows()[i]; ++j) {
      const int v = rows_[i][j];
      if (v < 1 || v > total || seen[v]) {
        throw DomainError("tableau entries must be exactly 1.." +
                          std::to_string(total));
      }
      seen[v] = true;
      if (j > 0 && rows_[i][j - 1] >= v) {
        throw DomainError("tableau rows must strictly increase");
      }
      if (i > 0 && rows_[i - 1][j] >= v) {
        throw DomainError("tableau columns must strictly increase");
      }
    }
  }
}

int StandardTableau::at(const Box& box) const {
  if (!shape_.contains(box)) {
    throw DomainError("box " + to_string(box) + " is outside the tableau");
  }
  return rows_[box.row - 1][box.col - 1];
}

std::vector<Box> StandardTableau::positions() const {
  std::vector<Box> out(size() + 1);
  for (int i = 0; i < shape_.num_rows(); ++i) {
    for (int j = 0; j < shape_.rows()[i]; ++j) {
      out[rows_[i][j]] = {i + 1, j + 1};
    }
  }
  return out;
}

StandardTableau tableau_from_positions(const YoungDiagram& shape,
                                       const std::vector<Box>& positions) {
  if (static_cast<int>(positions.size()) != shape.size() + 1) {
    throw DomainError("position list does not match the shape size");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(shape.num_rows());
  for (int len : shape.rows()) {
    rows.emplace_back(len, 0);
  }
  for (int v = 1; v <= shape.size(); ++v) {
    const Box& b = positions[v];
    if (!shape.contains(b)) {
      throw DomainError("position " + to_string(b) + " is outside the shape");
    }
    rows[b.row - 1][b.col - 1] = v;
  }
  return StandardTableau(std::move(rows));
}

Filling::Filling(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(),
            [](const Cell& a, const Cell& b) { return a.box < b.box; });
  for (std::size_t k = 1; k < cells_.size(); ++k) {
    if (cells_[k].box == cells_[k - 1].box) {
      throw DomainError("filling has duplicate box " + to_string(cells_[k].box));
    }
  }
}

Filling Filling::from_tableau(const StandardTableau& tableau) {
  std::vector<Cell> cells;
  cells.reserve(tableau.size());
  for (const Box& b : tableau.shape().boxes()) {
    cells.push_back({b, tableau.at(b)});
  }
  return Filling(std::move(cells));
}

std::vector<Box> Filling::support() const {
  std::vector<Box> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) {
    out.push_back(c.box);
  }
  return out;
}

Filling subtableau(const StandardTableau& tableau, const Box& corner) {
  const YoungDiagram& shape = tableau.shape();
  if (!shape.contains(corner)) {
    throw DomainError("subtableau corner " + to_string(corner) +
                      " is outside the shape");
  }
  std::vector<Filling::Cell> cells;
  for (int i = corner.row; i <= shape.num_rows(); ++i) {
    for (int j = corner.col; j <= shape.row_length(i); ++j) {
      cells.push_back({{i, j}, tableau.rows()[i - 1][j - 1]});
    }
  }
  return Filling(std::move(cells));
}

namespace {

// Dense ranks of the values (ties share a rank).
std::vector<int> ranks(const std::vector<Filling::Cell>& cells) {
  std::vector<int> values;
  values.reserve(cells.size());
  for (const auto& c : cells) values.push_back(c.value);
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values) {
    out.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  }
  return out;
}

}  // namespace

bool identically_ordered(const Filling& lhs, const Filling& rhs) {
  const auto& a = lhs.cells();
  const auto& b = rhs.cells();
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  // Row-major order is translation invariant, so the translation must pair
  // cells index by index.
  const int dr = b.front().box.row - a.front().box.row;
  const int dc = b.front().box.col - a.front().box.col;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k].box.row - a[k].box.row != dr || b[k].box.col - a[k].box.col != dc) {
      return false;
    }
  }
  return ranks(a) == ranks(b);
}

SkewFilling::SkewFilling(YoungDiagram shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (row_lengths_of(rows_) != shape_.rows()) {
    throw DomainError("skew filling rows do not match its shape");
  }
}

int SkewFilling::at(const Box& box) const {
  if (!shape_.contains(box)) return 0;
  return rows_[box.row - 1][box.col - 1];
}

int SkewFilling::nonzero_count() const {
  int count = 0;
  for (const auto& row : rows_) {
    count += static_cast<int>(std::count_if(row.begin(), row.end(),
                                            [](int v) { return v != 0; }));
  }
  return count;
}

bool SkewFilling::is_valid() const {
  int previous_zero_run = -1;
  for (int i = 1; i <= shape_.num_rows(); ++i) {
    int zero_run = 0;
    for (int j = 1; j <= shape_.row_length(i); ++j) {
      const int v = at({i, j});
      if (v < 0) return false;
      if (v == 0) {
        if (zero_run != j - 1) return false;  // zeros must be left-justified
        ++zero_run;
        continue;
      }
      if (at({i - 1, j}) >= v && i > 1) return false;
      if (at({i, j - 1}) >= v && j > 1) return false;
    }
    if (previous_zero_run >= 0 && zero_run > previous_zero_run) return false;
    previous_zero_run = zero_run;
  }
  return true;
}

namespace {

struct SytEnumeration {
  const YoungDiagram& shape;
  const std::function<void(const StandardTableau&)>& visit;
  std::vector<int> filled;  // current row lengths of the placed entries
  std::vector<std::vector<int>> rows;

  void run(int next_value) {
    if (next_value > shape.size()) {
      visit(StandardTableau(rows));
      return;
    }
    for (int i = 0; i < shape.num_rows(); ++i) {
      const int j = filled[i];
      if (j >= shape.rows()[i]) continue;
      if (i > 0 && filled[i - 1] <= j) continue;
      rows[i][j] = next_value;
      ++filled[i];
      run(next_value + 1);
      --filled[i];
    }
  }
};

}  // namespace

void for_each_syt(const YoungDiagram& shape,
                  const std::function<void(const StandardTableau&)>& visit,
                  int cap) {
  if (shape.size() > cap) {
    throw CapacityError("enumeration of " + std::to_string(shape.size()) +
                        "-box diagrams exceeds the cap of " +
                        std::to_string(cap) + " boxes");
  }
  SytEnumeration e{shape, visit, std::vector<int>(shape.num_rows(), 0), {}};
  for (int len : shape.rows()) e.rows.emplace_back(len, 0);
  e.run(1);
}

std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape, int cap) {
  std::vector<StandardTableau> out;
  for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); }, cap);
  return out;
}

}  // namespace sortnet
