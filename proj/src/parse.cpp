#include "sumorder/parse.hpp"

#include <cctype>
#include <charconv>
#include <istream>

#include "sumorder/errors.hpp"

namespace sumorder {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view tok) {
  tok = trim(tok);
  if (tok.empty()) throw input_error("empty integer token");
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw input_error("bad integer token: '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s,
                                    std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || seps.find(s[i]) != std::string_view::npos) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

Element parse_tuple(const GroupSpec& spec, std::string_view tok) {
  tok = trim(tok);
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
    throw input_error("expected a parenthesized tuple, got '" +
                      std::string(tok) + "'");
  tok.remove_prefix(1);
  tok.remove_suffix(1);
  std::vector<std::int64_t> coords;
  for (std::string_view part : split(tok, ","))
    coords.push_back(parse_int(part));
  return canonicalize(spec, coords);
}

}  // namespace

std::vector<Element> parse_element_list(const GroupSpec& spec,
                                        std::string_view text) {
  std::vector<Element> out;
  text = trim(text);
  if (text.empty()) return out;
  if (spec.rank() == 1) {
    for (std::string_view tok : split(text, ",;")) {
      tok = trim(tok);
      if (tok.empty()) continue;
      std::int64_t v = parse_int(tok);
      out.push_back(canonicalize(spec, std::span(&v, 1)));
    }
  } else {
    for (std::string_view tok : split(text, ";")) {
      tok = trim(tok);
      if (tok.empty()) continue;
      out.push_back(parse_tuple(spec, tok));
    }
  }
  if (out.size() > kMaxSetSize)
    throw guard_error("set size " + std::to_string(out.size()) +
                      " exceeds the " + std::to_string(kMaxSetSize) +
                      "-element ingestion cap");
  return out;
}

std::vector<std::vector<Element>> parse_set_file(const GroupSpec& spec,
                                                 std::istream& in) {
  std::vector<std::vector<Element>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    try {
      out.push_back(parse_element_list(spec, s));
    } catch (const input_error& e) {
      throw input_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string format_element(const Element& e) {
  if (e.rank() == 1) return std::to_string(e.coords()[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(e.coords()[i]);
  }
  out += ")";
  return out;
}

std::string format_element_list(std::span<const Element> elems) {
  std::string out;
  const bool tuples = !elems.empty() && elems.front().rank() > 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += tuples ? "; " : ", ";
    out += format_element(elems[i]);
  }
  return out;
}

namespace {

GroupSpec parse_atomic_group(std::string_view tok) {
  if (tok == "Z") return GroupSpec::integers();
  if (tok.size() >= 3 && tok.substr(0, 2) == "Z^") {
    const std::int64_t d = parse_int(tok.substr(2));
    if (d < 1 || d > static_cast<std::int64_t>(kMaxCoordinates)) {
      throw input_error("unsupported power in '" + std::string(tok) + "'");
    }
    if (d == 1) return GroupSpec::integers();
    return GroupSpec::product(
        std::vector<GroupSpec>(static_cast<std::size_t>(d),
                               GroupSpec::integers()));
  }
  if (tok.size() >= 3 && tok.substr(0, 2) == "F_") {
    return GroupSpec::prime_field(parse_int(tok.substr(2)));
  }
  if (tok.size() >= 3 && tok.substr(0, 2) == "Z_") {
    return GroupSpec::cyclic(parse_int(tok.substr(2)));
  }
  throw input_error("unrecognized group '" + std::string(tok) + "'");
}

}  // namespace

GroupSpec parse_group(std::string_view text) {
  std::vector<GroupSpec> parts;
  std::string_view rest = trim(text);
  while (true) {
    const std::size_t sep = rest.find(" x ");
    if (sep == std::string_view::npos) {
      parts.push_back(parse_atomic_group(trim(rest)));
      break;
    }
    parts.push_back(parse_atomic_group(trim(rest.substr(0, sep))));
    rest = rest.substr(sep + 3);
  }
  if (parts.size() == 1) return parts.front();
  return GroupSpec::product(std::move(parts));
}

}  // namespace sumorder
