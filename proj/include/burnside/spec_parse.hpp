#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/group.hpp"
#include "burnside/perm.hpp"

namespace burnside {

// Standard families.  Each comes with a canonical spec string so that
// round-tripping through group_from_spec is stable.

inline PermGroup symmetric_group(int n) {
  if (n < 1) throw validity_error("Sym(n) requires n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, {{1, 2}}));
  if (n >= 3) {
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cyc[i] = i + 1;
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup::from_generators(n, gens, "Sym(" + std::to_string(n) + ")");
}

inline PermGroup alternating_group(int n) {
  if (n < 1) throw validity_error("Alt(n) requires n >= 1");
  std::vector<Perm> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(Perm::from_cycles(n, {{1, 2, k}}));
  return PermGroup::from_generators(n, gens, "Alt(" + std::to_string(n) + ")");
}

inline PermGroup cyclic_group(int n) {
  if (n < 1) throw validity_error("Cyclic(n) requires n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cyc[i] = i + 1;
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup::from_generators(n, gens, "Cyclic(" + std::to_string(n) + ")");
}

inline PermGroup dihedral_group(int n) {
  if (n < 3) throw validity_error("Dihedral(n) requires n >= 3");
  std::vector<int> rot(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rot[i] = i + 1;
  std::vector<int> refl_img(static_cast<size_t>(n));
  refl_img[0] = 0;  // reflection through vertex 1: i |-> n + 2 - i
  for (int i = 1; i < n; ++i) refl_img[i] = n - i;
  return PermGroup::from_generators(n, {Perm::from_cycles(n, {rot}), Perm(refl_img)},
                                    "Dihedral(" + std::to_string(n) + ")");
}

namespace detail {

constexpr int kMaxDegree = 10000;

class SpecParser {
public:
  explicit SpecParser(std::string text) : s_(std::move(text)) {}

  PermGroup parse_group() {
    std::string name = ident();
    PermGroup out = [&] {
      if (name == "Sym") return symmetric_group(int_arg());
      if (name == "Alt") return alternating_group(int_arg());
      if (name == "Cyclic") return cyclic_group(int_arg());
      if (name == "Dihedral") return dihedral_group(int_arg());
      if (name == "Perm") return perm_family();
      throw parse_error("unknown group family '" + name + "'");
    }();
    skip();
    if (pos_ != s_.size()) throw parse_error("trailing input after group spec");
    return out;
  }

  std::vector<Perm> parse_perm_list(int degree) {
    std::vector<Perm> out;
    out.push_back(perm(degree));
    while (try_consume(',')) out.push_back(perm(degree));
    skip();
    if (pos_ != s_.size()) throw parse_error("trailing input after permutation list");
    return out;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool try_consume(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) throw parse_error(std::string("expected '") + c + "' in group spec");
  }
  std::string ident() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error("expected a group family name");
    return s_.substr(start, pos_ - start);
  }
  int number() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error("expected a number");
    if (pos_ - start > 7) throw validity_error("number out of range");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  int int_arg() {
    expect('(');
    int n = number();
    expect(')');
    return n;
  }

  Perm perm(int degree) {
    std::vector<std::vector<int>> cycles;
    if (!try_consume('(')) throw parse_error("expected '(' starting a cycle");
    do {
      std::vector<int> cyc;
      cyc.push_back(number());
      while (true) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          cyc.push_back(number());
        } else {
          break;
        }
      }
      expect(')');
      cycles.push_back(std::move(cyc));
    } while (try_consume('('));
    return Perm::from_cycles(degree, cycles);
  }

  PermGroup perm_family() {
    expect('(');
    int degree = number();
    if (degree < 1 || degree > kMaxDegree) throw validity_error("degree out of range");
    expect(';');
    std::vector<Perm> gens;
    gens.push_back(perm(degree));
    while (try_consume(',')) gens.push_back(perm(degree));
    expect(')');
    std::string spec = "Perm(" + std::to_string(degree) + "; ";
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) spec += ", ";
      spec += gens[i].cycle_string();
    }
    spec += ")";
    return PermGroup::from_generators(degree, gens, spec);
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace detail

// Parses `Sym(n) | Alt(n) | Cyclic(n) | Dihedral(n) | Perm(d; p, ...)` with
// permutations in 1-based cycle notation; whitespace-insensitive.
inline PermGroup group_from_spec(const std::string& spec) {
  return detail::SpecParser(spec).parse_group();
}

// Parses a comma-separated list of permutations of the given degree, e.g.
// "(1 2)(3 4), (5 6)".  Used for subgroup selectors.
inline std::vector<Perm> parse_perms(const std::string& text, int degree) {
  return detail::SpecParser(text).parse_perm_list(degree);
}

}  // namespace burnside
