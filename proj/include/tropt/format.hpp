// Text form of scalars, vectors and matrices, shared by tests and the CLI.
// Finite values print as decimal numbers; the semifield zero prints as the
// instance's token ("-inf" for max-plus, "inf" for min-times). Matrix
// literals separate entries by spaces and rows by semicolons:
//   "4 0 -inf; 2 3 1; 1 1 3"
#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "tropt/matrix.hpp"

namespace tropt {

inline std::string format_real(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

template <class SF>
std::string format_scalar(scalar<SF> s) {
  if (s.is_zero()) return std::string(SF::zero_token);
  return format_real(s.finite_value());
}

template <class SF>
scalar<SF> parse_scalar(const std::string& token) {
  if (token == SF::zero_token) return scalar<SF>::zero();
  const char* begin = token.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw parse_error("bad scalar literal '" + token + "'");
  try {
    return scalar<SF>(v);
  } catch (const domain_error&) {
    throw parse_error("scalar literal '" + token + "' outside the " +
                      std::string(SF::name) + " carrier set");
  }
}

namespace detail {
inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::vector<std::string> tokens(const std::string& row) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : row) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}
}  // namespace detail

template <class SF>
matrix<SF> parse_matrix(const std::string& literal) {
  auto rows = detail::split(literal, ';');
  std::vector<std::vector<scalar<SF>>> parsed;
  for (const auto& row : rows) {
    auto toks = detail::tokens(row);
    if (toks.empty()) continue;  // allow a trailing semicolon
    std::vector<scalar<SF>> entries;
    for (const auto& t : toks) entries.push_back(parse_scalar<SF>(t));
    if (!parsed.empty() && entries.size() != parsed.front().size())
      throw parse_error("ragged matrix literal");
    parsed.push_back(std::move(entries));
  }
  if (parsed.empty()) throw parse_error("empty matrix literal");
  matrix<SF> m(parsed.size(), parsed.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parsed[i][j];
  return m;
}

// A vector literal is a single space-separated row; parsed as a column.
template <class SF>
vector<SF> parse_vector(const std::string& literal) {
  auto toks = detail::tokens(literal);
  if (toks.empty()) throw parse_error("empty vector literal");
  vector<SF> v(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) v[i] = parse_scalar<SF>(toks[i]);
  return v;
}

template <class SF>
std::string format_matrix(const matrix<SF>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_scalar(m(i, j));
    }
  }
  return out;
}

template <class SF>
std::string format_vector(const vector<SF>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ' ';
    out += format_scalar(v[i]);
  }
  return out;
}

template <class SF>
std::string format_vector(const row_vector<SF>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ' ';
    out += format_scalar(v[i]);
  }
  return out;
}

}  // namespace tropt
