#include "lefschetz/definition.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace lefschetz {

namespace {

struct Item {
  std::string text;
  std::size_t line;
  std::size_t column;  // 1-based column of text[0]
};

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Item trimmed(const std::string& s, std::size_t begin, std::size_t end, std::size_t line) {
  while (begin < end && is_blank(s[begin])) ++begin;
  while (end > begin && is_blank(s[end - 1])) --end;
  return Item{s.substr(begin, end - begin), line, begin + 1};
}

// Splits on commas and whitespace.
std::vector<Item> words(const Item& item) {
  std::vector<Item> out;
  std::size_t i = 0;
  const std::string& s = item.text;
  while (i < s.size()) {
    while (i < s.size() && (is_blank(s[i]) || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_blank(s[j]) && s[j] != ',') ++j;
    if (j > i) out.push_back(Item{s.substr(i, j - i), item.line, item.column + i});
    i = j;
  }
  return out;
}

// Splits on commas only (polynomials may contain spaces).
std::vector<Item> comma_items(const Item& item) {
  std::vector<Item> out;
  std::size_t start = 0;
  const std::string& s = item.text;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      Item part = trimmed(s, start, i, item.line);
      part.column += item.column - 1;
      if (!part.text.empty()) out.push_back(part);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

const NamedForm* Definition::find_form(const std::string& name) const {
  for (const auto& f : forms)
    if (f.name == name) return &f;
  return nullptr;
}

Definition parse_definition(const std::string& text, const std::string& source) {
  enum class Section { None, Ring, Weights, Ideal, Forms };
  std::map<Section, std::vector<Item>> items;
  std::map<Section, std::size_t> header_line;
  Section current = Section::None;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t end = raw.find('#');
    if (end == std::string::npos) end = raw.size();
    Item line = trimmed(raw, 0, end, lineno);
    if (line.text.empty()) continue;

    std::size_t colon = line.text.find(':');
    if (colon != std::string::npos) {
      std::string key = line.text.substr(0, colon);
      static const std::map<std::string, Section> keys{
          {"ring", Section::Ring}, {"weights", Section::Weights}, {"ideal", Section::Ideal}, {"forms", Section::Forms}};
      auto it = keys.find(key);
      if (it == keys.end())
        throw DefinitionError(ErrorKind::Parse, source, lineno, line.column, "unknown section '" + key + "'");
      if (header_line.contains(it->second))
        throw DefinitionError(ErrorKind::Parse, source, lineno, line.column, "duplicate section '" + key + "'");
      current = it->second;
      header_line[current] = lineno;
      Item rest = trimmed(line.text, colon + 1, line.text.size(), lineno);
      rest.column += line.column - 1;
      if (!rest.text.empty()) items[current].push_back(rest);
      continue;
    }
    if (current == Section::None)
      throw DefinitionError(ErrorKind::Parse, source, lineno, line.column, "content before any section header");
    items[current].push_back(line);
  }

  if (!header_line.contains(Section::Ring))
    throw DefinitionError(ErrorKind::Parse, source, lineno == 0 ? 1 : lineno, 1, "missing 'ring:' section");

  std::vector<Item> names;
  for (const auto& it : items[Section::Ring])
    for (auto& w : words(it)) names.push_back(w);
  if (names.empty())
    throw DefinitionError(ErrorKind::Parse, source, header_line[Section::Ring], 1, "ring has no variables");

  std::vector<int> weights(names.size(), 1);
  if (header_line.contains(Section::Weights)) {
    std::vector<Item> ws;
    for (const auto& it : items[Section::Weights])
      for (auto& w : words(it)) ws.push_back(w);
    if (ws.size() != names.size())
      throw DefinitionError(ErrorKind::Parse, source, header_line[Section::Weights], 1,
                            "expected " + std::to_string(names.size()) + " weights, found " +
                                std::to_string(ws.size()));
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const Item& w = ws[i];
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(w.text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != w.text.size() || value < 1)
        throw DefinitionError(ErrorKind::Parse, source, w.line, w.column, "weight '" + w.text + "' is not a positive integer");
      weights[i] = value;
    }
  }

  Definition def;
  def.source = source;
  std::vector<std::string> name_text;
  for (const auto& n : names) {
    // Validate one name at a time so the error points at it.
    try {
      make_ring({n.text});
    } catch (const Error& e) {
      std::string msg = e.what();
      throw DefinitionError(e.kind(), source, n.line, n.column, msg.substr(msg.find(": ") + 2));
    }
    if (std::find(name_text.begin(), name_text.end(), n.text) != name_text.end())
      throw DefinitionError(ErrorKind::Parse, source, n.line, n.column, "duplicate variable '" + n.text + "'");
    name_text.push_back(n.text);
  }
  def.ring = make_ring(name_text, weights);

  auto parse_at = [&](const Item& item) {
    try {
      return parse_polynomial(item.text, def.ring);
    } catch (const PolynomialParseError& e) {
      throw DefinitionError(ErrorKind::Parse, source, item.line, item.column + e.column() - 1, e.detail());
    }
  };

  for (const auto& line : items[Section::Ideal])
    for (const auto& item : comma_items(line)) {
      Polynomial f = parse_at(item);
      if (!f.is_homogeneous())
        throw DefinitionError(ErrorKind::Inhomogeneous, source, item.line, item.column,
                              "generator '" + item.text + "' is not homogeneous");
      if (!f.is_zero()) def.ideal.push_back(std::move(f));
    }

  for (const auto& line : items[Section::Forms]) {
    std::size_t eq = line.text.find('=');
    if (eq == std::string::npos)
      throw DefinitionError(ErrorKind::Parse, source, line.line, line.column, "expected 'name = expression'");
    Item name = trimmed(line.text, 0, eq, line.line);
    name.column += line.column - 1;
    Item expr = trimmed(line.text, eq + 1, line.text.size(), line.line);
    expr.column += line.column - 1;
    if (name.text.empty() || words(name).size() != 1)
      throw DefinitionError(ErrorKind::Parse, source, name.line, name.column, "malformed form name");
    if (def.find_form(name.text))
      throw DefinitionError(ErrorKind::Parse, source, name.line, name.column, "duplicate form '" + name.text + "'");
    Polynomial f = parse_at(expr);
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != 1))
      throw DefinitionError(ErrorKind::NotDegreeOne, source, expr.line, expr.column,
                            "form '" + name.text + "' is not of degree one");
    def.forms.push_back(NamedForm{name.text, std::move(f)});
  }
  return def;
}

Definition load_definition(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_definition(buf.str(), path);
}

GradedAlgebra build_algebra(const Definition& def, std::size_t max_dim) {
  return GradedAlgebra::from_quotient(quotient_of(def.ring, def.ideal, max_dim));
}

Polynomial resolve_form(const Definition& def, const std::string& name_or_expr) {
  if (const NamedForm* f = def.find_form(name_or_expr)) return f->polynomial;
  try {
    return parse_polynomial(name_or_expr, def.ring);
  } catch (const PolynomialParseError& e) {
    throw Error(ErrorKind::Parse, "--form '" + name_or_expr + "': column " + std::to_string(e.column()) + ": " + e.detail());
  }
}

}  // namespace lefschetz
