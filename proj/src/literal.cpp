#include "powermonoid/literal.hpp"

#include <charconv>
#include <vector>

namespace powermonoid {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Int parse_int(std::string_view text) {
  const std::string_view t = trim(text);
  std::string_view digits = t;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  Int value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (t.empty() || ec == std::errc::invalid_argument ||
      ptr != digits.data() + digits.size()) {
    throw ParseError("malformed integer '" + std::string(t) + "'", std::string(t));
  }
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of range '" + std::string(t) + "'", std::string(t));
  }
  return value;
}

FinSet parse_set(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty set literal", "");

  if (t.front() != '{') {
    const auto dots = t.find("..");
    if (dots == std::string_view::npos) {
      throw ParseError("malformed set literal '" + std::string(t) + "'",
                       std::string(t));
    }
    const Int lo = parse_int(t.substr(0, dots));
    const Int hi = parse_int(t.substr(dots + 2));
    if (lo > hi) {
      throw ParseError("empty interval '" + std::string(t) + "'", std::string(t));
    }
    return FinSet::interval(lo, hi);
  }

  if (t.back() != '}') {
    throw ParseError("set literal missing '}' in '" + std::string(t) + "'",
                     std::string(t));
  }
  std::string_view body = trim(t.substr(1, t.size() - 2));
  if (body.empty()) {
    throw ParseError("empty set not an element of the power monoid", "{}");
  }
  std::vector<Int> values;
  while (true) {
    const auto comma = body.find(',');
    values.push_back(parse_int(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return FinSet::from_values(std::move(values));
}

std::string to_string(const FinSet& x) {
  std::string out = "{";
  bool first = true;
  for (Int v : x) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace powermonoid
