#include "hurwitz/parse.hpp"

#include <algorithm>
#include <cctype>

#include "hurwitz/errors.hpp"

namespace hurwitz {

const std::vector<BuiltinGroup>& builtin_groups() {
  static const std::vector<BuiltinGroup> table = {
      {"S3", 3, {"(1 2)", "(1 2 3)"}, false},
      {"S4", 4, {"(1 2)", "(1 2 3 4)"}, false},
      {"A4", 4, {"(1 2 3)", "(1 2)(3 4)"}, false},
      {"Z2", 2, {"(1 2)"}, true},
      {"Z3", 3, {"(1 2 3)"}, true},
      {"Z6", 6, {"(1 2 3 4 5 6)"}, true},
      {"V4", 4, {"(1 2)(3 4)", "(1 3)(2 4)"}, false},
  };
  return table;
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

const BuiltinGroup* find_builtin(std::string_view name) {
  std::string key = upper(name);
  for (const auto& b : builtin_groups())
    if (b.name == key) return &b;
  return nullptr;
}

}  // namespace

bool is_builtin(std::string_view name) { return find_builtin(name); }

std::shared_ptr<const PermGroup> make_builtin(std::string_view name,
                                              std::size_t order_cap) {
  const BuiltinGroup* b = find_builtin(name);
  if (!b) {
    std::string known;
    for (const auto& g : builtin_groups()) {
      if (!known.empty()) known += ", ";
      known += g.name;
    }
    throw InvalidInput("unknown builtin group \"" + std::string(name) +
                       "\"; known: " + known);
  }
  std::vector<Perm> gens;
  for (const auto& s : b->generators)
    gens.push_back(Perm::from_cycles(s, b->degree));
  return std::make_shared<PermGroup>(b->degree, std::move(gens), b->name,
                                     order_cap);
}

namespace {

std::vector<std::string> split_entries(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<Perm> parse_entries(std::string_view text, int degree,
                                const std::optional<Perm>& cyclic_generator) {
  std::vector<Perm> out;
  for (const auto& raw : split_entries(text)) {
    std::string tok = trim(raw);
    if (tok.empty()) throw InvalidInput("empty datum entry");
    auto mod = tok.find("mod");
    if (mod != std::string::npos && tok.find('(') == std::string::npos) {
      if (!cyclic_generator)
        throw InvalidInput(
            "additive entry \"" + tok +
            "\" is only available for builtin cyclic groups");
      int k, m;
      try {
        k = std::stoi(trim(tok.substr(0, mod)));
        m = std::stoi(trim(tok.substr(mod + 3)));
      } catch (const std::exception&) {
        throw InvalidInput("malformed additive entry \"" + tok + "\"");
      }
      const int ord = cyclic_generator->order();
      if (m != ord)
        throw InvalidInput("additive entry \"" + tok + "\" has modulus " +
                           std::to_string(m) + ", the group has order " +
                           std::to_string(ord));
      k = ((k % m) + m) % m;
      Perm p = Perm::identity(degree);
      for (int s = 0; s < k; ++s) p = p * (*cyclic_generator);
      out.push_back(std::move(p));
    } else {
      out.push_back(Perm::from_cycles(tok, degree));
    }
  }
  return out;
}

}  // namespace hurwitz
