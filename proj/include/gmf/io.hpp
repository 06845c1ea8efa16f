#pragma once

// Matrix text files.
//
//   line 1            rows cols            (decimal integers, rows may be 0)
//   following lines   rows·cols decimal floats, whitespace separated, row-major
//
// Blank lines are ignored and a line whose first non-blank character is '#'
// is a comment. A multi-matrix document (used for witnesses) is a sequence of
// such blocks.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gmf/matcore.hpp"

namespace gmf::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Whitespace-separated tokens with comment and blank lines stripped.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t first = line.find_first_not_of(" \t\r\f\v");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t i = first;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
      }
    }
    pos = eol + 1;
  }
  return tokens;
}

inline long long parse_dim(const std::string& tok) {
  long long v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || v < 0) throw ParseError("invalid dimension '" + tok + "'");
  return v;
}

inline double parse_value(const std::string& tok) {
  double v = 0.0;
  const char* begin = tok.data();
  if (!tok.empty() && tok[0] == '+') ++begin;  // from_chars rejects a leading '+'
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("invalid number '" + tok + "'");
  if (!std::isfinite(v)) throw ParseError("non-finite entry '" + tok + "'");
  return v;
}

inline Matrix read_block(const std::vector<std::string>& tokens, std::size_t& at) {
  if (at + 2 > tokens.size()) throw ParseError("missing 'rows cols' header");
  const long long rows = parse_dim(tokens[at]);
  const long long cols = parse_dim(tokens[at + 1]);
  if (cols < 1) throw ParseError("column count must be positive");
  at += 2;
  const auto count = static_cast<std::size_t>(rows * cols);
  if (tokens.size() - at < count) {
    throw ParseError("expected " + std::to_string(count) + " entries, found " +
                     std::to_string(tokens.size() - at));
  }
  Matrix m(rows, cols);
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c) m(r, c) = parse_value(tokens[at++]);
  return m;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Exactly one matrix; trailing entries are an error.
inline Matrix parse_matrix(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  std::size_t at = 0;
  Matrix m = detail::read_block(tokens, at);
  if (at != tokens.size()) throw ParseError("trailing entries after matrix data");
  return m;
}

inline std::vector<Matrix> parse_matrices(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  std::vector<Matrix> out;
  std::size_t at = 0;
  while (at < tokens.size()) out.push_back(detail::read_block(tokens, at));
  return out;
}

inline Matrix read_matrix(const std::string& path) {
  try {
    return parse_matrix(detail::slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::vector<Matrix> read_matrices(const std::string& path) {
  try {
    return parse_matrices(detail::slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline std::string format_matrix(const Matrix& m, std::string_view comment = {}) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  return out;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

/// FNV-1a over rows, cols and the IEEE-754 bytes of the entries in row-major order.
inline std::uint64_t content_hash(const Matrix& m) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  const std::int64_t rows = m.rows();
  const std::int64_t cols = m.cols();
  feed(&rows, sizeof rows);
  feed(&cols, sizeof cols);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double v = m(r, c);
      feed(&v, sizeof v);
    }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline Matrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) throw ParseError("json matrix: size mismatch");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[k++].get<double>();
  return m;
}

inline nlohmann::json digest_json(const Matrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"hash", hex64(content_hash(m))}};
}

}  // namespace gmf::io
