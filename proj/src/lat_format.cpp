// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/lat_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace symlat {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(int line, std::vector<Token> tokens, int end_column)
      : line_(line), tokens_(std::move(tokens)), end_column_(end_column) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }
  SourceLocation here() const { return {line_, done() ? end_column_ : tokens_[pos_].column}; }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = done() ? "end of line" : "'" + std::string(tokens_[pos_].text) + "'";
    throw Error(ErrorCode::SyntaxError, "expected " + expected + ", found " + found, here());
  }

  Token take(const std::string& expected) {
    if (done()) fail(expected);
    return tokens_[pos_++];
  }

  std::string name(const std::string& what) {
    const Token t = take(what);
    const auto ok_char = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    };
    if (t.text.empty() || !(std::isalpha(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_') ||
        !std::all_of(t.text.begin(), t.text.end(), ok_char)) {
      --pos_;
      fail(what);
    }
    return std::string(t.text);
  }

  SiteId site_id(const std::string& what = "site id") {
    const Token t = take(what);
    std::uint32_t v = 0;
    const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
      --pos_;
      fail(what + " (non-negative integer)");
    }
    return SiteId{v};
  }

  bool is_site_id() const {
    if (done()) return false;
    const auto t = tokens_[pos_].text;
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  }

  bool accept(std::string_view word) {
    if (!done() && tokens_[pos_].text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  /// Returns the value part of `key=value` when the next token has that key.
  std::optional<Token> keyed(std::string_view key) {
    if (done()) return std::nullopt;
    const Token& t = tokens_[pos_];
    if (t.text.size() > key.size() && t.text.substr(0, key.size()) == key && t.text[key.size()] == '=') {
      ++pos_;
      const auto off = key.size() + 1;
      return Token{t.text.substr(off), t.column + static_cast<int>(off)};
    }
    return std::nullopt;
  }

  Token require_keyed(std::string_view key) {
    auto v = keyed(key);
    if (!v) fail(std::string(key) + "=<value>");
    return *v;
  }

  [[noreturn]] void fail_at(const Token& t, const std::string& expected) const {
    throw Error(ErrorCode::SyntaxError, "expected " + expected + ", found '" + std::string(t.text) + "'",
                SourceLocation{line_, t.column});
  }

  double number(const Token& t, const std::string& what) const {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size() || !std::isfinite(v)) fail_at(t, what);
    return v;
  }

  int integer(const Token& t, const std::string& what) const {
    int v = 0;
    const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size()) fail_at(t, what);
    return v;
  }

  int doubled(const Token& t, const std::string& what) const {
    const double v = number(t, what);
    const double two = 2.0 * v;
    if (std::abs(two - std::round(two)) > 1e-9 || std::abs(two) > 1e9) {
      fail_at(t, what + " (integer or half-integer)");
    }
    return static_cast<int>(std::lround(two));
  }

  Complex complex_value(const Token& t, const std::string& what) const {
    const auto comma = t.text.find(',');
    if (comma == std::string_view::npos) return {number(t, what), 0.0};
    const Token re{t.text.substr(0, comma), t.column};
    const Token im{t.text.substr(comma + 1), t.column + static_cast<int>(comma) + 1};
    return {number(re, what), number(im, what)};
  }

  std::optional<std::string> map_binding() {
    if (auto v = keyed("map")) {
      if (v->text.empty()) fail_at(*v, "map name");
      return std::string(v->text);
    }
    return std::nullopt;
  }

  void finish() {
    if (!done()) fail("end of line");
  }

  int line() const { return line_; }

 private:
  int line_;
  std::vector<Token> tokens_;
  int end_column_;
  std::size_t pos_ = 0;
};

Provenance parse_map_kind(LineParser& p) {
  if (p.accept("identity")) return IdentityMap{};
  if (p.accept("permutation")) return ExplicitPermutation{};
  if (p.accept("reflect")) {
    static const std::pair<const char*, ReflectionAxis> axes[] = {
        {"x", ReflectionAxis::vertical},
        {"y", ReflectionAxis::horizontal},
        {"diag", ReflectionAxis::diagonal},
        {"anti", ReflectionAxis::antidiagonal}};
    for (const auto& [key, axis] : axes) {
      if (auto v = p.keyed(key)) return Reflection{axis, p.doubled(*v, "reflection line")};
    }
    p.fail("x=, y=, diag= or anti=");
  }
  if (p.accept("translate")) {
    Translation t;
    t.dx = p.integer(p.require_keyed("dx"), "integer dx");
    t.dy = p.integer(p.require_keyed("dy"), "integer dy");
    return t;
  }
  if (p.accept("rotate")) {
    Rotation r;
    r.cx2 = p.doubled(p.require_keyed("cx"), "rotation centre");
    r.cy2 = p.doubled(p.require_keyed("cy"), "rotation centre");
    r.quarter_turns = p.integer(p.require_keyed("turns"), "integer quarter turns");
    return r;
  }
  if (p.accept("compose")) {
    Composition c;
    while (!p.done() && p.peek()->text != "strict") c.parts.push_back(p.name("map name"));
    if (c.parts.empty()) p.fail("map names to compose");
    return c;
  }
  return ExplicitPermutation{};
}

std::string half(int doubled) {
  return doubled % 2 == 0 ? std::to_string(doubled / 2) : format_number(doubled / 2.0);
}

std::string kind_text(const Provenance& k) {
  if (std::holds_alternative<ExplicitPermutation>(k)) return {};
  if (const auto* r = std::get_if<Reflection>(&k)) {
    const char* key = r->axis == ReflectionAxis::vertical     ? "x"
                      : r->axis == ReflectionAxis::horizontal ? "y"
                      : r->axis == ReflectionAxis::diagonal   ? "diag"
                                                              : "anti";
    return std::string(" reflect ") + key + "=" + half(r->offset2);
  }
  if (const auto* r = std::get_if<Rotation>(&k)) {
    return " rotate cx=" + half(r->cx2) + " cy=" + half(r->cy2) +
           " turns=" + std::to_string(r->quarter_turns);
  }
  return " " + describe(k);
}

void require_known(const std::set<std::string>& names, const std::string& name, SourceLocation where,
                   const std::string& what) {
  if (!names.count(name)) {
    throw Error(ErrorCode::UnknownReference, what + " '" + name + "' is not declared", where);
  }
}

}  // namespace

const MapDecl* LatticeSpecDocument::find_map(std::string_view n) const {
  for (const auto& m : maps) {
    if (m.name == n) return &m;
  }
  return nullptr;
}

std::string format_number(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, p) : std::to_string(v);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_number(z.real());
  return format_number(z.real()) + "," + format_number(z.imag());
}

LatticeSpecDocument parse_lattice_spec(std::string_view text) {
  LatticeSpecDocument doc;
  std::set<std::string> names;  // every named declaration shares one namespace
  std::map<std::uint32_t, SourceLocation> site_lines;
  MapDecl* open_map = nullptr;
  std::map<std::uint32_t, SourceLocation> map_sources;
  std::map<std::uint32_t, SourceLocation> map_targets;
  bool in_header = true;

  const auto declare = [&](const std::string& name, SourceLocation where) {
    if (!names.insert(name).second) {
      throw Error(ErrorCode::DuplicateDefinition, "name '" + name + "' is already declared", where);
    }
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string_view trimmed = raw;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ' || trimmed.back() == '\t')) {
      trimmed.remove_suffix(1);
    }
    if (in_header && !trimmed.empty() && trimmed.front() == '#') {
      doc.header.emplace_back(trimmed);
      continue;
    }
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    in_header = false;
    LineParser p(line_no, std::move(tokens), static_cast<int>(trimmed.size()) + 1);
    const SourceLocation start = p.here();

    if (open_map) {
      if (p.accept("end")) {
        p.finish();
        open_map = nullptr;
        continue;
      }
      const SourceLocation from_at = p.here();
      const SiteId from = p.site_id("site id or 'end'");
      if (!p.accept("->")) p.fail("'->'");
      const SourceLocation to_at = p.here();
      const SiteId to = p.site_id();
      p.finish();
      if (!map_sources.emplace(from.value, from_at).second) {
        throw Error(ErrorCode::DuplicateDefinition,
                    "map '" + open_map->name + "' already sends site " + std::to_string(from.value) + " (line " +
                        std::to_string(map_sources[from.value].line) + ")",
                    from_at);
      }
      if (!map_targets.emplace(to.value, to_at).second) {
        throw Error(ErrorCode::NotBijective,
                    "map '" + open_map->name + "' already has a site mapped to " + std::to_string(to.value) +
                        " (line " + std::to_string(map_targets[to.value].line) + ")",
                    to_at);
      }
      open_map->overrides.push_back({from, to, from_at});
      continue;
    }

    const std::string keyword(p.take("directive").text);
    if (keyword == "lattice") {
      if (doc.name) {
        throw Error(ErrorCode::DuplicateDefinition,
                    "lattice already declared on line " + std::to_string(doc.lattice_where.line), start);
      }
      doc.name = p.name("lattice name");
      doc.grid = p.accept("grid");
      doc.lattice_where = start;
      p.finish();
    } else if (keyword == "site") {
      Site s;
      const SourceLocation id_at = p.here();
      s.id = p.site_id();
      std::optional<int> x;
      std::optional<int> y;
      std::optional<Complex> v;
      while (!p.done()) {
        if (auto t = p.keyed("x")) {
          if (x) p.fail_at(*t, "a single x=");
          x = p.integer(*t, "integer x");
        } else if (auto t = p.keyed("y")) {
          if (y) p.fail_at(*t, "a single y=");
          y = p.integer(*t, "integer y");
        } else if (auto t = p.keyed("v")) {
          if (v) p.fail_at(*t, "a single v=");
          v = p.complex_value(*t, "potential <re>[,<im>]");
        } else {
          p.fail("x=, y= or v=");
        }
      }
      if (!x) p.fail("x=<int>");
      if (!y) p.fail("y=<int>");
      s.x = *x;
      s.y = *y;
      s.v = v.value_or(Complex{0.0, 0.0});
      if (auto [it, fresh] = site_lines.emplace(s.id.value, id_at); !fresh) {
        throw Error(ErrorCode::DuplicateSiteId,
                    "site " + std::to_string(s.id.value) + " already declared on line " +
                        std::to_string(it->second.line),
                    id_at);
      }
      doc.sites.push_back(s);
      doc.site_where.push_back(start);
    } else if (keyword == "hop") {
      Hopping h;
      h.a = p.site_id();
      h.b = p.site_id();
      h.h = p.complex_value(p.require_keyed("h"), "hopping <re>[,<im>]");
      p.finish();
      doc.hoppings.push_back(h);
      doc.hop_where.push_back(start);
    } else if (keyword == "map") {
      MapDecl m;
      m.where = start;
      m.name = p.name("map name");
      declare(m.name, start);
      m.kind = parse_map_kind(p);
      m.strict = p.accept("strict");
      p.finish();
      if (const auto* c = std::get_if<Composition>(&m.kind)) {
        for (const auto& part : c->parts) {
          if (part == m.name || !doc.find_map(part)) {
            throw Error(ErrorCode::UnknownReference,
                        "compose refers to '" + part + "', which is not a previously declared map", start);
          }
        }
      }
      doc.maps.push_back(std::move(m));
      open_map = &doc.maps.back();
      map_sources.clear();
      map_targets.clear();
    } else if (keyword == "region") {
      RegionDecl r;
      r.where = start;
      r.name = p.name("region name");
      declare(r.name, start);
      while (!p.done() && !p.peek()->text.starts_with("map=")) {
        const Token t = p.take("column <x>:<ymin>..<ymax>");
        const auto colon = t.text.find(':');
        const auto dots = t.text.find("..");
        if (colon == std::string_view::npos || dots == std::string_view::npos || dots < colon) {
          p.fail_at(t, "column <x>:<ymin>..<ymax>");
        }
        const int c0 = t.column;
        ColumnRange c;
        c.x = p.integer({t.text.substr(0, colon), c0}, "integer column");
        c.y_min = p.integer({t.text.substr(colon + 1, dots - colon - 1), c0 + static_cast<int>(colon) + 1},
                            "integer y_min");
        c.y_max = p.integer({t.text.substr(dots + 2), c0 + static_cast<int>(dots) + 2}, "integer y_max");
        r.columns.push_back(c);
      }
      if (r.columns.empty()) p.fail("column <x>:<ymin>..<ymax>");
      r.map = p.map_binding();
      p.finish();
      doc.regions.push_back(std::move(r));
    } else if (keyword == "domain" || keyword == "chain") {
      SiteListDecl d;
      d.where = start;
      d.name = p.name(keyword + " name");
      declare(d.name, start);
      while (p.is_site_id()) d.sites.push_back(p.site_id());
      if (d.sites.empty()) p.fail("site ids");
      d.map = p.map_binding();
      p.finish();
      (keyword == "domain" ? doc.domains : doc.chains).push_back(std::move(d));
    } else if (keyword == "loop") {
      LoopDecl l;
      l.where = start;
      l.name = p.name("loop name");
      declare(l.name, start);
      while (p.is_site_id()) l.sites.push_back(p.site_id());
      if (l.sites.empty()) p.fail("loop site ids");
      if (!p.accept("attach")) p.fail("'attach'");
      l.a = p.site_id("attachment site");
      if (p.is_site_id()) l.b = p.site_id("exterior site");
      if (p.accept("shift")) l.shift = p.integer(p.take("integer shift"), "integer shift");
      l.map = p.map_binding();
      p.finish();
      doc.loops.push_back(std::move(l));
    } else {
      throw Error(ErrorCode::SyntaxError,
                  "expected a directive (lattice, site, hop, map, region, domain, chain, loop), found '" +
                      keyword + "'",
                  start);
    }
  }
  if (open_map) {
    throw Error(ErrorCode::SyntaxError, "expected 'end' to close map '" + open_map->name + "'",
                SourceLocation{line_no, 1});
  }

  // References between declarations.
  const auto known_site = [&](SiteId id, SourceLocation where) {
    if (!site_lines.count(id.value)) {
      throw Error(ErrorCode::UnknownReference, "site " + std::to_string(id.value) + " is not declared", where);
    }
  };
  std::set<std::string> map_names;
  for (const auto& m : doc.maps) {
    map_names.insert(m.name);
    for (const auto& o : m.overrides) {
      known_site(o.from, o.where);
      known_site(o.to, o.where);
    }
  }
  for (const auto& r : doc.regions) {
    if (r.map) require_known(map_names, *r.map, r.where, "map");
  }
  for (const auto* list : {&doc.domains, &doc.chains}) {
    for (const auto& d : *list) {
      for (SiteId id : d.sites) known_site(id, d.where);
      if (d.map) require_known(map_names, *d.map, d.where, "map");
    }
  }
  for (const auto& l : doc.loops) {
    for (SiteId id : l.sites) known_site(id, l.where);
    known_site(l.a, l.where);
    if (l.b) known_site(*l.b, l.where);
    if (l.map) require_known(map_names, *l.map, l.where, "map");
  }
  return doc;
}

std::string serialize_lattice_spec(const LatticeSpecDocument& doc) {
  std::vector<std::string> groups;
  const auto ids = [](const std::vector<SiteId>& list) {
    std::string s;
    for (SiteId id : list) s += " " + std::to_string(id.value);
    return s;
  };
  const auto binding = [](const std::optional<std::string>& m) { return m ? " map=" + *m : std::string{}; };

  std::string head;
  for (const auto& h : doc.header) head += h + "\n";
  if (doc.name) head += "lattice " + *doc.name + (doc.grid ? " grid" : "") + "\n";
  if (!head.empty()) groups.push_back(head);

  std::string sites;
  for (const auto& s : doc.sites) {
    sites += "site " + std::to_string(s.id.value) + " x=" + std::to_string(s.x) + " y=" + std::to_string(s.y) +
             " v=" + format_complex(s.v) + "\n";
  }
  if (!sites.empty()) groups.push_back(sites);

  std::string hops;
  for (const auto& h : doc.hoppings) {
    hops += "hop " + std::to_string(h.a.value) + " " + std::to_string(h.b.value) + " h=" + format_complex(h.h) + "\n";
  }
  if (!hops.empty()) groups.push_back(hops);

  for (const auto& m : doc.maps) {
    std::string block = "map " + m.name + kind_text(m.kind) + (m.strict ? " strict" : "") + "\n";
    for (const auto& o : m.overrides) {
      block += "  " + std::to_string(o.from.value) + " -> " + std::to_string(o.to.value) + "\n";
    }
    block += "end\n";
    groups.push_back(block);
  }

  std::string decls;
  for (const auto& r : doc.regions) {
    decls += "region " + r.name;
    for (const auto& c : r.columns) {
      decls += " " + std::to_string(c.x) + ":" + std::to_string(c.y_min) + ".." + std::to_string(c.y_max);
    }
    decls += binding(r.map) + "\n";
  }
  for (const auto& d : doc.domains) decls += "domain " + d.name + ids(d.sites) + binding(d.map) + "\n";
  for (const auto& c : doc.chains) decls += "chain " + c.name + ids(c.sites) + binding(c.map) + "\n";
  for (const auto& l : doc.loops) {
    decls += "loop " + l.name + ids(l.sites) + " attach " + std::to_string(l.a.value);
    if (l.b) decls += " " + std::to_string(l.b->value);
    if (l.shift) decls += " shift " + std::to_string(*l.shift);
    decls += binding(l.map) + "\n";
  }
  if (!decls.empty()) groups.push_back(decls);

  std::string out;
  for (std::size_t i = 0; i < groups.size(); ++i) out += (i ? "\n" : "") + groups[i];
  return out;
}

}  // namespace symlat
