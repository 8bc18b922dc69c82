#include "sortnet/young_diagram.hpp"

#include <charconv>
#include <sstream>

#include "sortnet/error.hpp"

namespace sortnet {

std::string to_string(const Box& box) {
  return "(" + std::to_string(box.row) + "," + std::to_string(box.col) + ")";
}

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) {
      throw DomainError("row lengths must be positive");
    }
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw DomainError("row lengths must be weakly decreasing");
    }
    size_ += rows_[i];
  }
}

YoungDiagram YoungDiagram::staircase(int n) {
  if (n < 1) {
    throw DomainError("staircase size must be at least 1");
  }
  std::vector<int> rows;
  rows.reserve(n - 1);
  for (int len = n - 1; len >= 1; --len) {
    rows.push_back(len);
  }
  return YoungDiagram(std::move(rows));
}

int YoungDiagram::row_length(int i) const {
  if (i < 1 || i > num_rows()) {
    return 0;
  }
  return rows_[i - 1];
}

int YoungDiagram::column_length(int j) const {
  if (j < 1) {
    return 0;
  }
  // rows are sorted, so count rows with length >= j by binary search
  int lo = 0;
  int hi = num_rows();
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (rows_[mid] >= j) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<int> YoungDiagram::column_lengths() const {
  std::vector<int> cols(num_cols(), 0);
  for (int len : rows_) {
    for (int j = 0; j < len; ++j) {
      ++cols[j];
    }
  }
  return cols;
}

bool YoungDiagram::contains(const Box& box) const {
  return box.row >= 1 && box.col >= 1 && box.col <= row_length(box.row);
}

YoungDiagram YoungDiagram::transpose() const {
  return YoungDiagram(column_lengths());
}

std::optional<int> YoungDiagram::staircase_size() const {
  const int rows = num_rows();
  if (rows == 0) {
    return std::nullopt;
  }
  for (int i = 0; i < rows; ++i) {
    if (rows_[i] != rows - i) {
      return std::nullopt;
    }
  }
  return rows + 1;
}

std::vector<Box> YoungDiagram::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int i = 1; i <= num_rows(); ++i) {
    for (int j = 1; j <= rows_[i - 1]; ++j) {
      out.push_back({i, j});
    }
  }
  return out;
}

std::string to_string(const YoungDiagram& diagram) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < diagram.num_rows(); ++i) {
    if (i > 0) os << ',';
    os << diagram.rows()[i];
  }
  os << ')';
  return os.str();
}

namespace {

void require_inside(const YoungDiagram& diagram, const Box& box) {
  if (!diagram.contains(box)) {
    throw DomainError("box " + to_string(box) + " is not in diagram " +
                      to_string(diagram));
  }
}

}  // namespace

int hook_length(const YoungDiagram& diagram, const Box& box) {
  require_inside(diagram, box);
  return diagram.row_length(box.row) - box.col +
         diagram.column_length(box.col) - box.row + 1;
}

std::vector<Box> corners(const YoungDiagram& diagram) {
  std::vector<Box> out;
  for (int i = 1; i <= diagram.num_rows(); ++i) {
    if (diagram.row_length(i + 1) < diagram.row_length(i)) {
      out.push_back({i, diagram.row_length(i)});
    }
  }
  return out;
}

bool is_corner(const YoungDiagram& diagram, const Box& box) {
  return diagram.contains(box) && box.col == diagram.row_length(box.row) &&
         diagram.row_length(box.row + 1) < box.col;
}

std::vector<Box> cohook(const YoungDiagram& diagram, const Box& box) {
  require_inside(diagram, box);
  std::vector<Box> out;
  out.reserve(box.row + box.col - 2);
  for (int i = 1; i < box.row; ++i) {
    out.push_back({i, box.col});
  }
  for (int j = 1; j < box.col; ++j) {
    out.push_back({box.row, j});
  }
  return out;
}

YoungDiagram subdiagram(const YoungDiagram& diagram, const Box& corner) {
  require_inside(diagram, corner);
  std::vector<int> rows;
  for (int i = corner.row; i <= diagram.num_rows(); ++i) {
    const int len = diagram.row_length(i) - corner.col + 1;
    if (len < 1) break;
    rows.push_back(len);
  }
  return YoungDiagram(std::move(rows));
}

YoungDiagram remove_corner(const YoungDiagram& diagram, const Box& corner) {
  if (!is_corner(diagram, corner)) {
    throw DomainError("box " + to_string(corner) + " is not a corner of " +
                      to_string(diagram));
  }
  std::vector<int> rows = diagram.rows();
  if (--rows[corner.row - 1] == 0) {
    rows.pop_back();
  }
  return YoungDiagram(std::move(rows));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions(int size) {
  if (size < 0) {
    throw DomainError("partition size must be non-negative");
  }
  std::vector<YoungDiagram> out;
  std::vector<int> current;
  partitions_rec(size, size, current, out);
  return out;
}

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

YoungDiagram parse_shape(const std::string& text) {
  constexpr std::string_view kStair = "staircase:";
  if (text.starts_with(kStair)) {
    return YoungDiagram::staircase(parse_int(std::string_view(text).substr(kStair.size())));
  }
  std::vector<int> rows;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    rows.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return YoungDiagram(std::move(rows));
}

}  // namespace sortnet
