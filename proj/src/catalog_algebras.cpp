#include "orbitkit/catalog_algebras.hpp"

namespace orbitkit::algebras {
namespace {

struct Entry {
  std::string a, b;
  std::vector<std::pair<Rational, std::string>> value;
};

LieAlgebra build(const std::vector<std::string>& names, const std::vector<Entry>& entries) {
  auto index = [&](const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    throw PreconditionFailed("unknown basis name " + n);
  };
  std::vector<BracketSpec> specs;
  for (const auto& e : entries) {
    BracketSpec s{index(e.a), index(e.b), zero_vec<Rational>(names.size())};
    for (const auto& [c, n] : e.value) s.value[index(n)] += c;
    specs.push_back(std::move(s));
  }
  return LieAlgebra::construct(names, specs);
}

}  // namespace

LieAlgebra abelian(std::size_t n) { return LieAlgebra::abelian(n); }

LieAlgebra heisenberg3() { return build({"e1", "e2", "e3"}, {{"e1", "e2", {{1, "e3"}}}}); }

LieAlgebra axb() { return build({"a", "b"}, {{"a", "b", {{1, "b"}}}}); }

LieAlgebra g49_0() {
  return build({"e0", "e1", "e2", "e3"},
               {{"e0", "e1", {{-1, "e1"}}}, {"e0", "e2", {{1, "e2"}}}, {"e1", "e2", {{1, "e3"}}}});
}

LieAlgebra b5() {
  return build({"d", "e0", "e1", "e2", "e3"}, {{"e1", "e2", {{1, "e3"}}},
                                               {"e0", "e1", {{-1, "e1"}}},
                                               {"e0", "e2", {{1, "e2"}}},
                                               {"d", "e2", {{1, "e2"}}},
                                               {"d", "e3", {{1, "e3"}}}});
}

LieAlgebra e2_motion() { return build({"a", "x", "y"}, {{"a", "x", {{1, "y"}}}, {"a", "y", {{-1, "x"}}}}); }

LieAlgebra heisenberg3_plus_line() { return build({"e1", "e2", "e3", "z"}, {{"e1", "e2", {{1, "e3"}}}}); }

std::optional<LieAlgebra> by_name(const std::string& name) {
  if (name == "heisenberg3") return heisenberg3();
  if (name == "axb") return axb();
  if (name == "g49_0") return g49_0();
  if (name == "b5") return b5();
  if (name == "e2-motion") return e2_motion();
  if (name == "heisenberg3+R") return heisenberg3_plus_line();
  if (name.rfind("abelian", 0) == 0) {
    std::string digits = name.substr(7);
    if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    std::size_t n = std::stoul(digits);
    if (n == 0) return std::nullopt;
    return abelian(n);
  }
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"abelian3", "heisenberg3", "heisenberg3+R", "axb", "g49_0", "b5", "e2-motion"};
}

}  // namespace orbitkit::algebras
