#include "stsurf/surface_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace stsurf {

namespace {

struct Token {
  std::string text;
  int line = 1, column = 1;
};

// Splits on whitespace outside (), [] and drops comments.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1, depth = 0;
  Token cur;
  bool in_token = false;
  auto flush = [&] {
    if (in_token) out.push_back(cur);
    in_token = false;
    cur = Token{};
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '#' && depth == 0) {
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
      --i;
      continue;
    }
    if (c == '\n') {
      if (depth != 0) throw ParseError(cur.line, cur.column, "unbalanced bracket in '" + cur.text + "'");
      flush();
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      flush();
      ++col;
      continue;
    }
    if (!in_token) {
      in_token = true;
      cur.line = line;
      cur.column = col;
    }
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') {
      if (--depth < 0) throw ParseError(line, col, "unexpected '" + std::string(1, c) + "'");
    }
    cur.text += c;
    ++col;
  }
  if (depth != 0) throw ParseError(cur.line, cur.column, "unbalanced bracket in '" + cur.text + "'");
  flush();
  return out;
}

struct KeyValue {
  std::string key, value;
  Token at;
};

KeyValue split(const Token& t) {
  const auto eq = t.text.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError(t.line, t.column, "expected key=value, found '" + t.text + "'");
  return {t.text.substr(0, eq), t.text.substr(eq + 1), t};
}

long long parse_int(const KeyValue& kv) {
  static const std::regex re("-?[0-9]{1,15}");
  if (!std::regex_match(kv.value, re)) throw ParseError(kv.at.line, kv.at.column, kv.key + " needs an integer");
  return std::stoll(kv.value);
}

Rational parse_rat(const KeyValue& kv, const std::string& text) {
  static const std::regex re("-?[0-9]+(/[0-9]+)?");
  if (!std::regex_match(text, re)) throw ParseError(kv.at.line, kv.at.column, "bad rational '" + text + "' in " + kv.key);
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw SemanticError(kv.at.line, kv.at.column, e.what());
  }
}

std::pair<Rational, Rational> parse_pair(const KeyValue& kv) {
  const auto comma = kv.value.find(',');
  if (comma == std::string::npos) throw ParseError(kv.at.line, kv.at.column, kv.key + " needs two comma-separated numbers");
  return {parse_rat(kv, kv.value.substr(0, comma)), parse_rat(kv, kv.value.substr(comma + 1))};
}

Permutation parse_perm(const KeyValue& kv, int k) {
  std::string text = kv.value;
  if (k <= 9) {
    // (123) lists digits
    static const std::regex compact("\\(([0-9]{2,})\\)");
    std::string expanded;
    auto begin = std::sregex_iterator(text.begin(), text.end(), compact);
    std::size_t last = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      expanded += text.substr(last, static_cast<std::size_t>(it->position()) - last);
      expanded += '(';
      const std::string digits = (*it)[1];
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) expanded += ' ';
        expanded += digits[i];
      }
      expanded += ')';
      last = static_cast<std::size_t>(it->position() + it->length());
    }
    text = expanded + text.substr(last);
  }
  try {
    return Permutation::parse(text, k);
  } catch (const NotABijection& e) {
    throw SemanticError(kv.at.line, kv.at.column, kv.key + " is not a permutation of 1.." + std::to_string(k) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(kv.at.line, kv.at.column, "bad cycle notation in " + kv.key + ": " + e.what());
  }
}

struct RawCut {
  Token at;
  std::vector<KeyValue> fields;
};

std::string rat_text(const Rational& r) { return to_string(r); }

}  // namespace

StaircaseSpec SurfaceDocument::staircase() const {
  return StaircaseSpec::build(origami(), group.value_or(GroupDescriptor::free(1)), cuts);
}

bool same_cut(const Cut& a, const Cut& b) {
  return a.start == b.start && a.dx == b.dx && a.dy == b.dy && a.length == b.length && a.value == b.value;
}

SurfaceDocument parse_surface(const std::string& text) {
  const auto tokens = tokenize(text);
  std::map<std::string, KeyValue> top;
  std::vector<RawCut> raw_cuts;
  static const std::set<std::string> keys{"name", "k", "h", "v", "group", "expect-genus", "expect-stratum"};
  static const std::set<std::string> cut_keys{"square", "at", "dir", "len", "value", "edge"};

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.text == "cut") {
      RawCut rc;
      rc.at = t;
      if (i + 1 >= tokens.size() || tokens[i + 1].text != "{") throw ParseError(t.line, t.column, "expected '{' after cut");
      i += 2;
      for (;; ++i) {
        if (i >= tokens.size()) throw ParseError(t.line, t.column, "unterminated cut block");
        if (tokens[i].text == "}") break;
        KeyValue kv = split(tokens[i]);
        if (!cut_keys.count(kv.key)) throw ParseError(kv.at.line, kv.at.column, "unknown cut key '" + kv.key + "'");
        for (const auto& f : rc.fields) {
          if (f.key == kv.key) throw ParseError(kv.at.line, kv.at.column, "duplicate cut key '" + kv.key + "'");
        }
        rc.fields.push_back(std::move(kv));
      }
      raw_cuts.push_back(std::move(rc));
      continue;
    }
    KeyValue kv = split(t);
    if (!keys.count(kv.key)) throw ParseError(t.line, t.column, "unknown key '" + kv.key + "'");
    if (top.count(kv.key)) throw ParseError(t.line, t.column, "duplicate key '" + kv.key + "'");
    top.emplace(kv.key, std::move(kv));
  }

  SurfaceDocument doc;
  if (!top.count("k")) throw ParseError(1, 1, "missing k");
  const KeyValue& kk = top.at("k");
  const long long k = parse_int(kk);
  if (k < 1 || k > 1'000'000) throw SemanticError(kk.at.line, kk.at.column, "k must be between 1 and 1000000");
  doc.k = static_cast<int>(k);
  doc.h = top.count("h") ? parse_perm(top.at("h"), doc.k) : Permutation::identity(doc.k);
  doc.v = top.count("v") ? parse_perm(top.at("v"), doc.k) : Permutation::identity(doc.k);
  if (top.count("name")) doc.name = top.at("name").value;
  if (top.count("expect-genus")) doc.expect_genus = static_cast<int>(parse_int(top.at("expect-genus")));
  if (top.count("expect-stratum")) doc.expect_stratum = top.at("expect-stratum").value;
  if (top.count("group")) {
    const auto& g = top.at("group");
    static const std::regex re("Z(\\^[0-9]+|/[0-9]+)?");
    if (!std::regex_match(g.value, re)) throw ParseError(g.at.line, g.at.column, "group must be Z, Z^d or Z/m");
    try {
      doc.group = GroupDescriptor::parse(g.value);
    } catch (const std::invalid_argument& e) {
      throw SemanticError(g.at.line, g.at.column, e.what());
    }
  }
  const Origami o = doc.origami();
  const GroupDescriptor group = doc.group.value_or(GroupDescriptor::free(1));

  for (const auto& rc : raw_cuts) {
    std::map<std::string, const KeyValue*> f;
    for (const auto& kv : rc.fields) f[kv.key] = &kv;
    if (!f.count("value")) throw ParseError(rc.at.line, rc.at.column, "cut needs value=");
    const KeyValue& val = *f.at("value");
    static const std::regex value_re("\\[?-?[0-9]+(,-?[0-9]+)*\\]?");
    if (!std::regex_match(val.value, value_re)) throw ParseError(val.at.line, val.at.column, "bad group value '" + val.value + "'");
    GroupValue value;
    try {
      value = GroupValue::parse(group, val.value);
    } catch (const std::invalid_argument& e) {
      throw SemanticError(val.at.line, val.at.column, e.what());
    }
    Cut c;
    if (f.count("edge")) {
      const KeyValue& e = *f.at("edge");
      if (f.size() != 2) throw ParseError(e.at.line, e.at.column, "edge= cuts take only edge= and value=");
      static const std::regex edge_re("(top|bottom|left|right):([0-9]+)");
      std::smatch m;
      if (!std::regex_match(e.value, m, edge_re)) throw ParseError(e.at.line, e.at.column, "edge must be side:square");
      const std::string side = m[1];
      const int sq = std::stoi(m[2]);
      const EdgeSide s = side == "top" ? EdgeSide::Top
                         : side == "bottom" ? EdgeSide::Bottom
                         : side == "left" ? EdgeSide::Left : EdgeSide::Right;
      try {
        c = Cut::edge(o, s, sq, value);
      } catch (const std::invalid_argument& err) {
        throw SemanticError(e.at.line, e.at.column, err.what());
      }
    } else {
      for (const char* need : {"square", "at", "dir", "len"}) {
        if (!f.count(need)) throw ParseError(rc.at.line, rc.at.column, std::string("cut needs ") + need + "=");
      }
      const KeyValue& sq = *f.at("square");
      c.start.square = static_cast<int>(parse_int(sq));
      if (c.start.square < 1 || c.start.square > doc.k) throw SemanticError(sq.at.line, sq.at.column, "no square " + sq.value);
      const auto [x, y] = parse_pair(*f.at("at"));
      const KeyValue& at = *f.at("at");
      if (x < 0 || x >= 1 || y < 0 || y >= 1) throw SemanticError(at.at.line, at.at.column, "offset must lie in [0,1)^2");
      c.start.x = x;
      c.start.y = y;
      const auto [dx, dy] = parse_pair(*f.at("dir"));
      c.dx = dx;
      c.dy = dy;
      c.length = parse_rat(*f.at("len"), f.at("len")->value);
      c.value = value;
    }
    doc.cuts.push_back(std::move(c));
  }

  // full validation of the cut system
  if (!doc.cuts.empty()) {
    try {
      (void)doc.staircase();
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      // InvalidCut messages name the cut as "cut N"
      std::size_t index = 0;
      static const std::regex num("cut ([0-9]+)");
      std::smatch m;
      if (std::regex_search(what, m, num)) index = static_cast<std::size_t>(std::stoul(m[1])) - 1;
      const Token& where = index < raw_cuts.size() ? raw_cuts[index].at : raw_cuts.front().at;
      throw SemanticError(where.line, where.column, what);
    }
  }
  return doc;
}

SurfaceDocument read_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_surface(ss.str());
}

std::string print_surface(const SurfaceDocument& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "name=" << doc.name << '\n';
  out << "k=" << doc.k << '\n';
  out << "h=" << doc.h.to_cycle_string() << '\n';
  out << "v=" << doc.v.to_cycle_string() << '\n';
  if (doc.group) out << "group=" << doc.group->to_string() << '\n';
  if (doc.expect_genus) out << "expect-genus=" << *doc.expect_genus << '\n';
  if (doc.expect_stratum) out << "expect-stratum=" << *doc.expect_stratum << '\n';
  for (const auto& c : doc.cuts) {
    out << "cut { square=" << c.start.square << " at=" << rat_text(c.start.x) << ',' << rat_text(c.start.y)
        << " dir=" << rat_text(c.dx) << ',' << rat_text(c.dy) << " len=" << rat_text(c.length)
        << " value=" << c.value.to_string() << " }\n";
  }
  return out.str();
}

SurfaceDocument document_for(const StaircaseSpec& spec, const std::string& name) {
  SurfaceDocument doc;
  doc.name = name;
  doc.k = spec.origami().squares();
  doc.h = spec.origami().sigma_h();
  doc.v = spec.origami().sigma_v();
  doc.group = spec.group();
  doc.cuts = spec.cuts();
  return doc;
}

}  // namespace stsurf
