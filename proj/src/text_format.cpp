#include "nakayama/text_format.hpp"

#include <charconv>

#include "nakayama/error.hpp"

namespace nakayama::text {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    parts.push_back(trim(s.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::parse_error, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::pair<int, int> parse_pair(std::string_view s, char sep) {
  const auto parts = split(s, sep);
  if (parts.size() != 2) {
    throw Error(Errc::parse_error, "expected <int>" + std::string(1, sep) + "<int>, got '" +
                                       std::string(s) + "'");
  }
  return {parse_int(parts[0]), parse_int(parts[1])};
}

}  // namespace

std::vector<Relation> parse_relations(std::string_view text) {
  std::vector<Relation> out;
  text = trim(text);
  if (text.empty()) return out;
  for (auto item : split(text, ',')) {
    const auto [start, arrows] = parse_pair(item, ':');
    out.push_back({start, arrows});
  }
  return out;
}

AlgebraPreset parse_preset(std::string_view text, std::optional<int> n) {
  text = trim(text);
  const auto colon = text.find(':');
  const auto name = trim(text.substr(0, colon));
  const auto args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (name == "auslander") {
    const int m = parse_int(args);
    if (n && *n != 2 * m - 1) {
      throw Error(Errc::invalid_preset_params, "auslander:" + std::to_string(m) + " has n = " +
                                                   std::to_string(2 * m - 1));
    }
    return presets::Auslander{m};
  }
  if (!n) throw Error(Errc::parse_error, "preset '" + std::string(name) + "' needs n");
  if (name == "linear") {
    if (!trim(args).empty()) throw Error(Errc::parse_error, "linear takes no arguments");
    return presets::Linear{*n};
  }
  if (name == "single") {
    const auto [start, arrows] = parse_pair(args, ',');
    return presets::Single{*n, start, arrows};
  }
  if (name == "rad") return presets::RadPower{*n, parse_int(args)};
  throw Error(Errc::parse_error, "unknown preset '" + std::string(name) + "'");
}

IntervalModule parse_interval(std::string_view text) {
  const auto [a, b] = parse_pair(text, ',');
  return {a, b};
}

NakayamaAlgebra parse_algebra(std::string_view text, bool auto_normalize) {
  std::optional<int> n;
  std::optional<std::string_view> rel;
  std::optional<std::string_view> preset_text;
  for (auto field : split(text, ';')) {
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::parse_error, "expected key=value, got '" + std::string(field) + "'");
    }
    const auto key = trim(field.substr(0, eq));
    const auto value = trim(field.substr(eq + 1));
    if (key == "n" && !n) {
      n = parse_int(value);
    } else if (key == "rel" && !rel) {
      rel = value;
    } else if (key == "preset" && !preset_text) {
      preset_text = value;
    } else {
      throw Error(Errc::parse_error, "unexpected or repeated key '" + std::string(key) + "'");
    }
  }
  if (rel && preset_text) throw Error(Errc::parse_error, "give either rel= or preset=, not both");
  if (preset_text) return preset(parse_preset(*preset_text, n));
  if (!n) throw Error(Errc::parse_error, "missing n=");
  const auto relations = rel ? parse_relations(*rel) : std::vector<Relation>{};
  return build_algebra(*n, relations, auto_normalize);
}

std::string format_algebra(const NakayamaAlgebra& alg) { return describe(alg); }

}  // namespace nakayama::text
