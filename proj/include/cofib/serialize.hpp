#pragma once

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cofib/canonical.hpp"
#include "cofib/certificate.hpp"

// Certificate files. Posets are declared once by their Hasse diagrams and
// referenced as P<k>; nodes are numbered in pre-order across the whole file and
// a repeated subtree is written as @<number>.
//
//   cofib-certificate 1
//   object P3 <canonical key in hex>
//   poset P0 0 :
//   poset P1 2 : 0<1
//   cofibrant initial (RULE args... Pa->Pb [s0->t1 ...] sidemaps... children...)
//   minimum 0 (...)
//   certificate (...)

namespace cofib {

class parse_error : public error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : error(errc::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct certificate_file {
  poset_ptr object;  // null when the file carries bare certificates only
  std::optional<cofibrant_certificate> cofibrant;
  std::map<std::size_t, cert_ptr> minima;
  std::vector<cert_ptr> certificates;
};

namespace detail {

class cert_writer {
 public:
  std::string write(const certificate_file& f) {
    if (f.object) intern(f.object);
    if (f.cofibrant) collect(*f.cofibrant->cert);
    for (const auto& [m, c] : f.minima) collect(*c);
    for (const auto& c : f.certificates) collect(*c);

    std::ostringstream out;
    out << "cofib-certificate 1\n";
    if (f.object) out << "object P" << intern(f.object) << ' ' << hex_key(canonical(*f.object)) << '\n';
    for (std::size_t k = 0; k < pool_.size(); ++k) {
      out << "poset P" << k << ' ' << pool_[k]->size() << " :";
      for (auto [x, y] : pool_[k]->covers()) out << ' ' << x << '<' << y;
      out << '\n';
    }
    if (f.cofibrant) {
      out << "cofibrant " << (f.cofibrant->via == origin::initial ? "initial" : "terminal") << ' ';
      node(out, f.cofibrant->cert, 1);
      out << '\n';
    }
    for (const auto& [m, c] : f.minima) {
      out << "minimum " << m << ' ';
      node(out, c, 1);
      out << '\n';
    }
    for (const auto& c : f.certificates) {
      out << "certificate ";
      node(out, c, 1);
      out << '\n';
    }
    return out.str();
  }

 private:
  std::size_t intern(const poset_ptr& p) {
    if (auto it = by_ptr_.find(p.get()); it != by_ptr_.end()) return it->second;
    auto& bucket = by_hash_[p->hash()];
    for (auto k : bucket) {
      if (*pool_[k] == *p) {
        by_ptr_.emplace(p.get(), k);
        keep_.push_back(p);
        return k;
      }
    }
    const std::size_t k = pool_.size();
    pool_.push_back(p);
    bucket.push_back(k);
    by_ptr_.emplace(p.get(), k);
    return k;
  }

  void collect(const monotone_map& f) {
    intern(f.source);
    intern(f.target);
  }

  void collect(const certificate& c) {
    if (!seen_.insert(&c).second) return;
    collect(c.conclusion);
    for (const auto& s : c.side) collect(s);
    for (const auto& p : c.premises) collect(*p);
  }

  void map(std::ostream& out, const monotone_map& f) {
    out << 'P' << intern(f.source) << "->P" << intern(f.target) << " [";
    for (std::size_t x = 0; x < f.image.size(); ++x) out << (x ? " " : "") << 's' << x << "->t" << f.image[x];
    out << ']';
  }

  void node(std::ostream& out, const cert_ptr& c, std::size_t depth) {
    if (auto it = numbered_.find(c.get()); it != numbered_.end()) {
      out << '@' << it->second;
      return;
    }
    numbered_.emplace(c.get(), next_id_++);
    out << '(' << rule_name(c->kind);
    for (auto a : c->args) out << ' ' << a;
    out << ' ';
    map(out, c->conclusion);
    for (const auto& s : c->side) {
      out << ' ';
      map(out, s);
    }
    for (const auto& p : c->premises) {
      out << '\n' << std::string(2 * depth, ' ');
      node(out, p, depth + 1);
    }
    out << ')';
  }

  std::vector<poset_ptr> pool_;
  std::vector<poset_ptr> keep_;
  std::unordered_map<const poset*, std::size_t> by_ptr_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
  std::unordered_set<const certificate*> seen_;
  std::unordered_map<const certificate*, std::size_t> numbered_;
  std::size_t next_id_ = 0;
};

struct token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class cert_reader {
 public:
  explicit cert_reader(std::string_view text) { tokenize(text); }

  certificate_file read() {
    certificate_file f;
    expect_word("cofib-certificate");
    const auto& version = next("format version");
    if (version.text != "1") fail(version, "unsupported format version " + version.text);
    std::optional<std::pair<token, std::string>> object;
    while (pos_ < toks_.size()) {
      const token& kw = toks_[pos_++];
      if (kw.text == "poset") {
        read_poset(kw);
      } else if (kw.text == "object") {
        const auto& ref = next("object reference");
        object.emplace(ref, next("canonical key").text);
      } else if (kw.text == "cofibrant") {
        const auto& via = next("initial or terminal");
        if (via.text != "initial" && via.text != "terminal") fail(via, "expected initial or terminal");
        f.cofibrant = cofibrant_certificate{nullptr, via.text == "initial" ? origin::initial : origin::terminal,
                                            read_node()};
      } else if (kw.text == "minimum") {
        const auto& idx = next("minimum index");
        f.minima[number(idx)] = read_node();
      } else if (kw.text == "certificate") {
        f.certificates.push_back(read_node());
      } else {
        fail(kw, "unexpected '" + kw.text + "'");
      }
    }
    if (object) {
      f.object = poset_ref(object->first);
      if (hex_key(canonical(*f.object)) != object->second) fail(object->first, "object does not match its canonical key");
      if (f.cofibrant) f.cofibrant->object = f.object;
    } else if (f.cofibrant) {
      fail(toks_.empty() ? token{} : toks_.back(), "cofibrant entry without an object line");
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const token& t, const std::string& what) const { throw parse_error(t.line, t.column, what); }

  [[noreturn]] void fail_end(const std::string& what) const {
    throw parse_error(end_line_, end_column_, "unexpected end of input, expected " + what);
  }

  const token& next(const std::string& what) {
    if (pos_ >= toks_.size()) fail_end(what);
    return toks_[pos_++];
  }

  const token& peek(const std::string& what) const {
    if (pos_ >= toks_.size()) fail_end(what);
    return toks_[pos_];
  }

  void expect_word(std::string_view w) {
    const auto& t = next(std::string(w));
    if (t.text != w) fail(t, "expected '" + std::string(w) + "'");
  }

  std::size_t number(const token& t) const { return number(t, t.text); }

  std::size_t number(const token& t, std::string_view s) const {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) fail(t, "expected a number, got '" + t.text + "'");
    return v;
  }

  poset_ptr poset_ref(const token& t) const { return poset_ref(t, t.text); }

  poset_ptr poset_ref(const token& t, std::string_view s) const {
    if (s.size() < 2 || s[0] != 'P') fail(t, "expected a poset reference");
    auto k = number(t, s.substr(1));
    auto it = posets_.find(k);
    if (it == posets_.end()) fail(t, "undeclared poset P" + std::to_string(k));
    return it->second;
  }

  void read_poset(const token& kw) {
    const auto& name = next("poset name");
    if (name.text.size() < 2 || name.text[0] != 'P') fail(name, "expected a poset name P<k>");
    auto k = number(name, std::string_view(name.text).substr(1));
    const auto& size_tok = next("poset size");
    auto n = number(size_tok);
    const auto& colon = next("':'");
    if (colon.text != ":") fail(colon, "expected ':'");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    while (pos_ < toks_.size() && toks_[pos_].line == kw.line) {
      const auto& t = toks_[pos_++];
      auto lt = t.text.find('<');
      if (lt == std::string::npos) fail(t, "expected a cover i<j");
      auto x = number(t, std::string_view(t.text).substr(0, lt));
      auto y = number(t, std::string_view(t.text).substr(lt + 1));
      if (x >= n || y >= n) fail(t, "cover outside the poset");
      pairs.emplace_back(x, y);
    }
    try {
      if (!posets_.emplace(k, make_ptr(poset::from_pairs(n, pairs))).second) fail(name, "poset declared twice");
    } catch (const parse_error&) {
      throw;
    } catch (const error& e) {
      fail(name, e.what());
    }
  }

  monotone_map read_map() {
    const auto& t = next("map");
    auto arrow = t.text.find("->");
    if (arrow == std::string::npos) fail(t, "expected Pa->Pb");
    monotone_map f;
    f.source = poset_ref(t, std::string_view(t.text).substr(0, arrow));
    f.target = poset_ref(t, std::string_view(t.text).substr(arrow + 2));
    const auto& open = next("'['");
    if (open.text != "[") fail(open, "expected '['");
    for (;;) {
      const auto& e = next("map entry or ']'");
      if (e.text == "]") break;
      auto a = e.text.find("->");
      if (a == std::string::npos || e.text[0] != 's' || e.text.size() < a + 3 || e.text[a + 2] != 't')
        fail(e, "expected s<i>->t<j>");
      auto s = number(e, std::string_view(e.text).substr(1, a - 1));
      auto v = number(e, std::string_view(e.text).substr(a + 3));
      if (s != f.image.size()) fail(e, "map entries out of order");
      if (v >= f.target->size()) fail(e, "image outside the target");
      f.image.push_back(v);
    }
    if (f.image.size() != f.source->size()) fail(t, "map does not cover its source");
    return f;
  }

  cert_ptr read_node() {
    const auto& open = next("'(' or @ref");
    if (open.text[0] == '@') {
      auto k = number(open, std::string_view(open.text).substr(1));
      if (k >= nodes_.size() || !nodes_[k]) fail(open, "reference to an unfinished or unknown node");
      return nodes_[k];
    }
    if (open.text != "(") fail(open, "expected '('");
    const std::size_t id = nodes_.size();
    nodes_.emplace_back();
    const auto& name = next("rule name");
    auto kind = rule_from_name(name.text);
    if (!kind) fail(name, "unknown rule '" + name.text + "'");
    certificate c;
    c.kind = *kind;
    for (std::size_t a = 0; a < arg_count(*kind); ++a) c.args.push_back(number(next("rule argument")));
    c.conclusion = read_map();
    for (std::size_t s = 0; s < side_map_count(*kind); ++s) c.side.push_back(read_map());
    while (peek("')'").text != ")") c.premises.push_back(read_node());
    ++pos_;
    nodes_[id] = make_cert(std::move(c));
    return nodes_[id];
  }

  void tokenize(std::string_view text) {
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char ch) {
      if (ch == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    };
    while (i < text.size()) {
      char ch = text[i];
      if (ch == '#') {
        while (i < text.size() && text[i] != '\n') advance(text[i++]);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance(ch);
        ++i;
        continue;
      }
      if (ch == '(' || ch == ')' || ch == '[' || ch == ']') {
        toks_.push_back({std::string(1, ch), line, col});
        advance(ch);
        ++i;
        continue;
      }
      token t{{}, line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             std::string_view("()[]#").find(text[i]) == std::string_view::npos) {
        t.text.push_back(text[i]);
        advance(text[i++]);
      }
      toks_.push_back(std::move(t));
    }
    end_line_ = line;
    end_column_ = col;
  }

  std::vector<token> toks_;
  std::size_t pos_ = 0;
  std::size_t end_line_ = 1, end_column_ = 1;
  std::map<std::size_t, poset_ptr> posets_;
  std::vector<cert_ptr> nodes_;
};

}  // namespace detail

inline std::string serialize(const certificate_file& f) { return detail::cert_writer().write(f); }

inline std::string serialize(const cert_ptr& c) {
  certificate_file f;
  f.certificates.push_back(c);
  return serialize(f);
}

inline certificate_file deserialize_file(std::string_view text) { return detail::cert_reader(text).read(); }

inline cert_ptr deserialize(std::string_view text) {
  auto f = deserialize_file(text);
  if (f.certificates.size() != 1) throw parse_error(1, 1, "expected exactly one certificate entry");
  return f.certificates.front();
}

}  // namespace cofib
