#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cofib/poset.hpp"
#include "cofib/serialize.hpp"

// Poset files:
//   poset <name>
//   elements: <labels>
//   covers: a<b c<d ...
// Blank lines and # comments are ignored.

namespace cofib {

struct poset_file {
  std::string name;
  poset_ptr order;
};

namespace detail {

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct word {
  std::string text;
  std::size_t column;
};

inline std::vector<word> split_words(const std::string& line, std::size_t from) {
  std::vector<word> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace detail

inline poset_file parse_poset_file(std::string_view text) {
  struct content_line {
    std::string text;
    std::size_t number;
  };
  std::vector<content_line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back({raw, no});
  }
  auto header = [&](std::size_t idx, std::string_view key) -> std::vector<detail::word> {
    if (idx >= lines.size()) throw parse_error(lines.empty() ? 1 : lines.back().number + 1, 1, "missing '" + std::string(key) + "' line");
    const auto& l = lines[idx];
    auto start = l.text.find_first_not_of(" \t");
    if (l.text.compare(start, key.size(), key) != 0)
      throw parse_error(l.number, start + 1, "expected '" + std::string(key) + "'");
    return detail::split_words(l.text, start + key.size());
  };

  poset_file f;
  auto name = header(0, "poset ");
  if (name.size() != 1) throw parse_error(lines[0].number, 1, "expected 'poset <name>'");
  f.name = name[0].text;

  std::vector<std::string> labels;
  for (const auto& w : header(1, "elements:")) {
    if (!detail::valid_label(w.text)) throw parse_error(lines[1].number, w.column, "invalid label '" + w.text + "'");
    labels.push_back(w.text);
  }

  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& w : header(2, "covers:")) {
    auto lt = w.text.find('<');
    if (lt == std::string::npos) throw parse_error(lines[2].number, w.column, "expected a<b, got '" + w.text + "'");
    auto a = w.text.substr(0, lt), b = w.text.substr(lt + 1);
    if (!detail::valid_label(a) || !detail::valid_label(b))
      throw parse_error(lines[2].number, w.column, "invalid cover '" + w.text + "'");
    covers.emplace_back(a, b);
  }
  if (lines.size() > 3) throw parse_error(lines[3].number, 1, "unexpected content after covers line");
  f.order = make_ptr(from_covers(labels, covers));
  return f;
}

inline std::string write_poset_file(const std::string& name, const poset& p) {
  std::ostringstream out;
  out << "poset " << name << "\nelements:";
  for (std::size_t x = 0; x < p.size(); ++x) out << ' ' << p.label(x);
  out << "\ncovers:";
  for (auto [x, y] : p.covers()) out << ' ' << p.label(x) << '<' << p.label(y);
  out << '\n';
  return out.str();
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::invalid_argument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::invalid_argument, "cannot write " + path);
  out << text;
}

}  // namespace cofib
