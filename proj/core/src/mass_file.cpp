#include "nmp/mass_file.hpp"

#include <string>
#include <utility>
#include <vector>

#include "nmp/error.hpp"
#include "text_util.hpp"

namespace nmp {
namespace {

std::vector<std::pair<Subset, double>> parse_assignments(const Frame& frame,
                                                         std::string_view rest,
                                                         int line) {
  std::vector<std::pair<Subset, double>> entries;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < rest.size() && detail::is_space(rest[i])) ++i;
  };
  while (true) {
    skip_space();
    if (i == rest.size()) break;
    if (rest[i] != '{') throw ParseError(line, "expected '{' in mass line");
    const auto close = rest.find('}', i);
    if (close == std::string_view::npos) throw ParseError(line, "missing '}'");
    Subset s;
    std::string label;
    auto flush = [&] {
      if (label.empty()) return;
      auto idx = frame.index_of(label);
      if (!idx) throw ParseError(line, "label '" + label + "' not in frame");
      s = s | Subset(std::uint32_t{1} << *idx);
      label.clear();
    };
    for (std::size_t k = i + 1; k < close; ++k) {
      const char c = rest[k];
      if (c == ',' || detail::is_space(c)) {
        flush();
      } else {
        label += c;
      }
    }
    flush();
    if (s.empty()) throw ParseError(line, "empty subset {}");
    i = close + 1;
    skip_space();
    if (i == rest.size() || rest[i] != '=') {
      throw ParseError(line, "expected '=' after subset");
    }
    ++i;
    skip_space();
    std::size_t end = i;
    while (end < rest.size() && !detail::is_space(rest[end]) && rest[end] != '{') {
      ++end;
    }
    auto v = detail::parse_number(rest.substr(i, end - i));
    if (!v) throw ParseError(line, "bad mass value");
    entries.emplace_back(s, *v);
    i = end;
  }
  if (entries.empty()) throw ParseError(line, "mass line has no assignments");
  return entries;
}

}  // namespace

MassFunction MassFile::effective() const {
  return discount ? nmp::discount(mass, *discount) : mass;
}

MassFile parse_mass_file(std::string_view text) {
  std::optional<Frame> frame;
  std::optional<MassFunction> mass;
  std::optional<double> rate;
  int line_no = 0;
  for (auto raw : detail::split_lines(text)) {
    ++line_no;
    auto line = detail::strip_comment(raw);
    auto words = detail::split_words(line);
    if (words.empty()) continue;
    const auto kw = words[0];
    if (kw == "frame") {
      if (frame) throw ParseError(line_no, "second frame line");
      std::vector<std::string> labels(words.begin() + 1, words.end());
      try {
        frame.emplace(std::move(labels));
      } catch (const InvalidArgument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (kw == "mass") {
      if (!frame) throw ParseError(line_no, "mass line before frame line");
      if (mass) throw ParseError(line_no, "second mass line");
      const auto rest = line.substr(line.find("mass") + 4);
      auto entries = parse_assignments(*frame, rest, line_no);
      try {
        mass = MassFunction::from_assignments(*frame, entries);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (kw == "discount") {
      if (rate) throw ParseError(line_no, "second discount line");
      if (words.size() != 2) throw ParseError(line_no, "expected: discount <rate>");
      auto v = detail::parse_number(words[1]);
      if (!v || *v < 0.0 || *v > 1.0) {
        throw ParseError(line_no, "discount rate must lie in [0, 1]");
      }
      rate = *v;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(kw) + "'");
    }
  }
  if (!frame) throw ParseError(line_no, "missing frame line");
  if (!mass) throw ParseError(line_no, "missing mass line");
  return MassFile{*std::move(mass), rate};
}

}  // namespace nmp
