#include "hurwitz/perm.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::uint64_t hash_ints(const std::vector<int>& v) {
  // FNV-1a
  std::uint64_t h = 14695981039346656037ull;
  for (int x : v) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw InvalidInput("permutation images are not a bijection of {0,...," +
                         std::to_string(degree() - 1) + "}");
    seen[x] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  Perm p;
  p.images_ = std::move(im);
  return p;
}

bool Perm::is_identity() const {
  for (int k = 0; k < degree(); ++k)
    if (images_[k] != k) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (int k = 0; k < degree(); ++k) r.images_[images_[k]] = k;
  return r;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw InvalidInput("degree mismatch in composition: " +
                       std::to_string(p.degree()) + " vs " +
                       std::to_string(q.degree()));
  Perm r;
  r.images_.resize(p.images_.size());
  for (int k = 0; k < p.degree(); ++k) r.images_[k] = p.images_[q.images_[k]];
  return r;
}

int Perm::order() const {
  long long ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int k = 0; k < degree(); ++k) {
    if (seen[k]) continue;
    long long len = 0;
    for (int x = k; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int k = 0; k < degree(); ++k) {
    if (seen[k] || images_[k] == k) continue;
    out += '(';
    bool first = true;
    for (int x = k; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm Perm::from_cycles(std::string_view text, int degree) {
  if (degree < 0) throw InvalidInput("negative degree");
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size())
    throw InvalidInput("empty permutation; the identity is written \"()\"");
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidInput("expected '(' in cycle notation near \"" +
                         std::string(text.substr(i)) + "\"");
    ++i;
    std::vector<int> cyc;
    while (true) {
      while (i < text.size() &&
             (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
        ++i;
      if (i == text.size()) throw InvalidInput("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidInput("unexpected character '" + std::string(1, text[i]) +
                           "' in cycle notation");
      int v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw InvalidInput("point " + std::to_string(v) +
                           " out of range 1.." + std::to_string(degree));
      for (int prev : cyc)
        if (prev == v - 1)
          throw InvalidInput("point " + std::to_string(v) +
                             " repeated inside a cycle");
      cyc.push_back(v - 1);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  // Product of the cycles, rightmost acting first.
  Perm result = Perm::identity(degree);
  for (const auto& cyc : cycles) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k)
      im[cyc[k]] = cyc[(k + 1) % cyc.size()];
    result = result * Perm(std::move(im));
  }
  return result;
}

}  // namespace hurwitz
