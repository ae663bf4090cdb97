#include "catmat/hom_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "catmat/errors.hpp"

namespace catmat {

namespace {

CountMatrix from_rows(const std::vector<std::vector<Count>>& rows) {
  const auto n = rows.size();
  CountMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw ShapeError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return out;
}

Count parse_count(std::string_view token) {
  Count value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("entry out of range: '" + std::string(token) + "'");
  }
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("not a nonnegative integer: '" + std::string(token) + "'");
  }
  return value;
}

HomMatrix parse_plain(std::string_view text) {
  std::vector<std::vector<Count>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream tokens(line);
    std::string token;
    std::vector<Count> row;
    while (tokens >> token) {
      row.push_back(parse_count(token));
    }
    rows.push_back(std::move(row));
  }
  return HomMatrix(from_rows(rows));
}

HomMatrix parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON matrix: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("JSON matrix must be an object with an \"entries\" array");
  }
  std::vector<std::vector<Count>> rows;
  for (const auto& row : doc["entries"]) {
    if (!row.is_array()) {
      throw ParseError("JSON matrix rows must be arrays");
    }
    std::vector<Count> values;
    for (const auto& cell : row) {
      if (!cell.is_number_unsigned()) {
        throw ParseError("JSON matrix entries must be nonnegative integers, got " + cell.dump());
      }
      values.push_back(cell.get<Count>());
    }
    rows.push_back(std::move(values));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned()) {
      throw ParseError("\"n\" must be a nonnegative integer");
    }
    if (doc["n"].get<std::size_t>() != rows.size()) {
      throw ShapeError("\"n\" is " + doc["n"].dump() + " but there are " +
                       std::to_string(rows.size()) + " rows");
    }
  }
  return HomMatrix(from_rows(rows));
}

std::vector<Eigen::Index> to_indices(std::span<const std::size_t> ids) {
  std::vector<Eigen::Index> out(ids.size());
  std::transform(ids.begin(), ids.end(), out.begin(),
                 [](std::size_t i) { return static_cast<Eigen::Index>(i); });
  return out;
}

}  // namespace

HomMatrix::HomMatrix(CountMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw ShapeError("matrix is " + std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()) + ", expected square");
  }
}

HomMatrix::HomMatrix(std::initializer_list<std::initializer_list<Count>> rows) {
  std::vector<std::vector<Count>> data;
  for (const auto& row : rows) {
    data.emplace_back(row);
  }
  entries_ = from_rows(data);
}

Count HomMatrix::at(ObjectId from, ObjectId to) const {
  if (from.index >= order() || to.index >= order()) {
    throw IndexError("object index out of range for matrix of order " + std::to_string(order()));
  }
  return (*this)(from.index, to.index);
}

Count HomMatrix::total() const {
  Count sum = 0;
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    sum = checked::add(sum, entries_.data()[i]);
  }
  return sum;
}

bool operator==(const HomMatrix& lhs, const HomMatrix& rhs) {
  return lhs.order() == rhs.order() && (lhs.entries_.array() == rhs.entries_.array()).all();
}

HomMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json(text);
  }
  return parse_plain(text);
}

HomMatrix principal_submatrix(const HomMatrix& m, std::span<const std::size_t> keep) {
  for (std::size_t a = 0; a < keep.size(); ++a) {
    if (keep[a] >= m.order()) {
      throw IndexError("submatrix index " + std::to_string(keep[a]) + " out of range");
    }
    if (a > 0 && keep[a] <= keep[a - 1]) {
      throw IndexError("submatrix indices must be strictly increasing");
    }
  }
  const auto idx = to_indices(keep);
  return HomMatrix(CountMatrix(m.entries()(idx, idx)));
}

HomMatrix permute(const HomMatrix& m, std::span<const std::size_t> sigma) {
  if (sigma.size() != m.order()) {
    throw IndexError("permutation has wrong length");
  }
  std::vector<bool> seen(sigma.size(), false);
  for (auto s : sigma) {
    if (s >= sigma.size() || seen[s]) {
      throw IndexError("not a permutation of [0, n)");
    }
    seen[s] = true;
  }
  const auto idx = to_indices(sigma);
  return HomMatrix(CountMatrix(m.entries()(idx, idx)));
}

HomMatrix transpose(const HomMatrix& m) { return HomMatrix(CountMatrix(m.entries().transpose())); }

std::string format_matrix(const HomMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      out << (j ? " " : "") << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const HomMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.order(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.order(); ++j) {
      os << (j ? "," : "") << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

namespace checked {

Count add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("count addition overflows");
  }
  return out;
}

Count mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("count product overflows");
  }
  return out;
}

}  // namespace checked

}  // namespace catmat
