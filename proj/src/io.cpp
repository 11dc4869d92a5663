#include "orbitkit/io.hpp"

#include <cctype>
#include <sstream>

namespace orbitkit {
namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    char c = line[i];
    if (c == '=' || c == '+' || c == '-' || c == '*') {
      out.push_back({std::string(1, c), start + 1});
      ++i;
      continue;
    }
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=' &&
           line[i] != '+' && line[i] != '-' && line[i] != '*')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) {
  std::optional<std::size_t> dim;
  std::vector<std::string> names;
  bool have_basis = false;
  std::vector<BracketSpec> brackets;
  std::vector<std::size_t> bracket_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& kw = toks[0].text;
    if (kw == "dim") {
      if (dim) throw ParseError(line_no, toks[0].col, "duplicate 'dim' line");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].col, "expected 'dim N'");
      const auto& t = toks[1].text;
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line_no, toks[1].col, "dimension must be a nonnegative integer");
      dim = std::stoul(t);
    } else if (kw == "basis") {
      if (!dim) throw ParseError(line_no, toks[0].col, "'basis' before 'dim'");
      if (have_basis) throw ParseError(line_no, toks[0].col, "duplicate 'basis' line");
      for (std::size_t k = 1; k < toks.size(); ++k) {
        if (!is_identifier(toks[k].text)) throw ParseError(line_no, toks[k].col, "invalid basis name");
        for (const auto& n : names)
          if (n == toks[k].text) throw ParseError(line_no, toks[k].col, "duplicate basis name");
        names.push_back(toks[k].text);
      }
      if (names.size() != *dim)
        throw ParseError(line_no, toks[0].col,
                         "basis has " + std::to_string(names.size()) + " names, expected " + std::to_string(*dim));
      have_basis = true;
    } else if (kw == "bracket") {
      if (!have_basis) throw ParseError(line_no, toks[0].col, "'bracket' before 'basis'");
      auto lookup = [&](std::size_t k) {
        if (k >= toks.size()) throw ParseError(line_no, line.size() + 1, "unexpected end of line");
        for (std::size_t i = 0; i < names.size(); ++i)
          if (names[i] == toks[k].text) return i;
        throw ParseError(line_no, toks[k].col, "unknown basis element '" + toks[k].text + "'");
      };
      BracketSpec b;
      b.i = lookup(1);
      b.j = lookup(2);
      if (toks.size() < 4 || toks[3].text != "=")
        throw ParseError(line_no, toks.size() < 4 ? line.size() + 1 : toks[3].col, "expected '='");
      b.value = zero_vec<Rational>(names.size());
      std::size_t k = 4;
      if (k >= toks.size()) throw ParseError(line_no, line.size() + 1, "empty right-hand side");
      bool first = true;
      while (k < toks.size()) {
        Rational sign = 1;
        if (toks[k].text == "+" || toks[k].text == "-") {
          if (toks[k].text == "-") sign = -1;
          ++k;
        } else if (!first) {
          throw ParseError(line_no, toks[k].col, "expected '+' or '-'");
        }
        first = false;
        if (k >= toks.size()) throw ParseError(line_no, line.size() + 1, "dangling sign");
        Rational coeff = 1;
        if (!is_identifier(toks[k].text)) {
          auto q = parse_rational(toks[k].text);
          if (!q) throw ParseError(line_no, toks[k].col, "invalid coefficient '" + toks[k].text + "'");
          coeff = *q;
          ++k;
          if (k >= toks.size() || toks[k].text != "*")
            throw ParseError(line_no, k >= toks.size() ? line.size() + 1 : toks[k].col, "expected '*'");
          ++k;
        }
        if (k >= toks.size()) throw ParseError(line_no, line.size() + 1, "expected basis element");
        std::size_t c = lookup(k);
        b.value[c] += sign * coeff;
        ++k;
      }
      brackets.push_back(std::move(b));
      bracket_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, toks[0].col, "unknown keyword '" + kw + "'");
    }
    if (end == text.size()) break;
  }
  if (!dim) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'dim' line");
  if (!have_basis) throw ParseError(line_no, 1, "missing 'basis' line");
  try {
    return LieAlgebra::construct(names, brackets);
  } catch (const AntisymmetryViolation& e) {
    for (std::size_t k = brackets.size(); k-- > 0;)
      if ((brackets[k].i == e.i && brackets[k].j == e.j) || (brackets[k].i == e.j && brackets[k].j == e.i))
        throw AntisymmetryViolation(e.i, e.j, "line " + std::to_string(bracket_lines[k]) + ": " + e.what());
    throw;
  } catch (const JacobiViolation& e) {
    auto in_triple = [&](std::size_t a) { return a == e.i || a == e.j || a == e.k; };
    std::string lines;
    for (std::size_t k = 0; k < brackets.size(); ++k)
      if (in_triple(brackets[k].i) && in_triple(brackets[k].j))
        lines += (lines.empty() ? "" : ", ") + std::to_string(bracket_lines[k]);
    if (lines.empty()) throw;
    throw JacobiViolation(e.i, e.j, e.k, e.defect, "lines " + lines + ": " + e.what());
  }
}

std::string emit_algebra(const LieAlgebra& g) {
  std::ostringstream os;
  os << "dim " << g.dim() << "\n";
  os << "basis";
  for (const auto& n : g.names()) os << " " << n;
  os << "\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      auto v = g.bracket_basis(i, j);
      if (is_zero_vec(v)) continue;
      os << "bracket " << g.names()[i] << " " << g.names()[j] << " = " << format_vector(g, v) << "\n";
    }
  return os.str();
}

}  // namespace orbitkit
