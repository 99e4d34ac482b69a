#include "hurwitz/braid.hpp"

#include <algorithm>
#include <cctype>

#include "hurwitz/errors.hpp"

namespace hurwitz {

BraidWord::BraidWord(int strands, std::vector<BraidGen> gens)
    : strands_(strands), gens_(std::move(gens)) {
  if (strands_ < 2) throw InvalidInput("braid words need at least 2 strands");
  for (const auto& g : gens_) {
    if (g.index < 1 || g.index > strands_ - 1)
      throw InvalidInput("braid generator index " + std::to_string(g.index) +
                         " out of range 1.." + std::to_string(strands_ - 1));
    if (g.sign != 1 && g.sign != -1)
      throw InvalidInput("braid generator sign must be +1 or -1");
  }
}

BraidWord& BraidWord::append(int index, int sign) {
  if (index < 1 || index > strands_ - 1)
    throw InvalidInput("braid generator index " + std::to_string(index) +
                       " out of range 1.." + std::to_string(strands_ - 1));
  gens_.push_back({index, sign});
  return *this;
}

BraidWord& BraidWord::append(const BraidWord& w) {
  if (w.strands_ != strands_)
    throw InvalidInput("strand count mismatch in word concatenation");
  gens_.insert(gens_.end(), w.gens_.begin(), w.gens_.end());
  return *this;
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidGen> out(gens_.rbegin(), gens_.rend());
  for (auto& g : out) g.sign = -g.sign;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::free_reduced() const {
  std::vector<BraidGen> out;
  for (const auto& g : gens_) {
    if (!out.empty() && out.back().index == g.index &&
        out.back().sign == -g.sign)
      out.pop_back();
    else
      out.push_back(g);
  }
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::str() const {
  std::string s;
  for (const auto& g : gens_) {
    if (!s.empty()) s += ' ';
    s += 's' + std::to_string(g.index);
    if (g.sign < 0) s += "^-1";
  }
  return s;
}

namespace {

void parse_pure_indices(std::string_view digits, int strands, int& i,
                        int& j) {
  auto sep = digits.find_first_of("_,");
  std::string a, b;
  if (sep != std::string_view::npos) {
    a = std::string(digits.substr(0, sep));
    b = std::string(digits.substr(sep + 1));
  } else if (digits.size() == 2) {
    a = digits[0];
    b = digits[1];
  } else {
    throw InvalidInput(
        "ambiguous pure-generator token \"A" + std::string(digits) +
        "\"; separate multi-digit indices as in \"A1_12\"");
  }
  if (a.empty() || b.empty() ||
      !std::all_of(a.begin(), a.end(), ::isdigit) ||
      !std::all_of(b.begin(), b.end(), ::isdigit))
    throw InvalidInput("malformed pure-generator indices \"" +
                       std::string(digits) + "\"");
  i = std::stoi(a);
  j = std::stoi(b);
  if (!(1 <= i && i < j && j <= strands - 1))
    throw InvalidInput("pure generator A" + std::to_string(i) +
                       std::to_string(j) + " needs 1 <= i < j <= " +
                       std::to_string(strands - 1));
}

}  // namespace

BraidWord BraidWord::parse(int strands, std::string_view text) {
  BraidWord word(strands);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    std::string tok(text.substr(pos, end - pos));
    pos = end;

    int exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      try {
        exponent = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw InvalidInput("malformed exponent in token \"" + tok + "\"");
      }
      tok = tok.substr(0, caret);
    }
    if (tok.empty()) throw InvalidInput("empty braid token");

    BraidWord base(strands);
    char head = static_cast<char>(
        std::tolower(static_cast<unsigned char>(tok[0])));
    if (head == 's') {
      int idx;
      try {
        idx = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw InvalidInput("malformed braid token \"" + tok + "\"");
      }
      base.append(idx, +1);
    } else if (head == 'a') {
      int i, j;
      parse_pure_indices(tok.substr(1), strands, i, j);
      base = pure_gen_word(strands, i, j);
    } else {
      throw InvalidInput("unknown braid token \"" + tok + "\"");
    }
    if (exponent < 0) {
      base = base.inverse();
      exponent = -exponent;
    }
    for (int k = 0; k < exponent; ++k) word.append(base);
  }
  return word;
}

void apply_sigma_ids(const PermGroup& g, std::vector<int>& ids, int i,
                     int sign) {
  const int n = static_cast<int>(ids.size());
  if (i < 1 || i > n - 1)
    throw InvalidInput("sigma index " + std::to_string(i) +
                       " out of range 1.." + std::to_string(n - 1));
  int a = ids[i - 1], b = ids[i];
  if (sign > 0) {
    ids[i - 1] = g.mul(g.mul(a, b), g.inv(a));
    ids[i] = a;
  } else {
    ids[i - 1] = b;
    ids[i] = g.mul(g.mul(g.inv(b), a), b);
  }
}

Datum apply_sigma(const Datum& d, int i, int sign) {
  std::vector<int> ids = d.entry_ids();
  apply_sigma_ids(d.group(), ids, i, sign);
  return Datum::from_ids_unchecked(d.group_ptr(), std::move(ids));
}

std::vector<int> apply_word_ids(const PermGroup& g, std::vector<int> ids,
                                const BraidWord& w) {
  if (w.strands() != static_cast<int>(ids.size()))
    throw InvalidInput("braid word on " + std::to_string(w.strands()) +
                       " strands applied to a tuple of length " +
                       std::to_string(ids.size()));
  for (const auto& gen : w.gens()) apply_sigma_ids(g, ids, gen.index, gen.sign);
  return ids;
}

Datum apply_word(const Datum& d, const BraidWord& w) {
  return Datum::from_ids_unchecked(
      d.group_ptr(), apply_word_ids(d.group(), d.entry_ids(), w));
}

BraidWord pure_gen_word(int strands, int i, int j) {
  if (strands < 3) throw InvalidInput("pure generators need n >= 3 strands");
  if (!(1 <= i && i < j && j <= strands - 1))
    throw InvalidInput("pure generator A" + std::to_string(i) +
                       std::to_string(j) + " needs 1 <= i < j <= " +
                       std::to_string(strands - 1));
  BraidWord w(strands);
  for (int k = j - 1; k >= i + 1; --k) w.append(k, +1);
  w.append(i, +1);
  w.append(i, +1);
  for (int k = i + 1; k <= j - 1; ++k) w.append(k, -1);
  return w;
}

std::string pure_gen_name(int i, int j) {
  if (i < 10 && j < 10) return "A" + std::to_string(i) + std::to_string(j);
  return "A" + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<PureGen> pure_generators(int strands) {
  if (strands < 3) throw InvalidInput("pure generators need n >= 3 strands");
  std::vector<PureGen> out;
  for (int i = 1; i <= strands - 2; ++i)
    for (int j = i + 1; j <= strands - 1; ++j)
      out.push_back({i, j, pure_gen_name(i, j), pure_gen_word(strands, i, j)});
  return out;
}

BraidWord full_twist_word(int strands) {
  BraidWord w(strands);
  for (const auto& a : pure_generators(strands)) w.append(a.word);
  return w;
}

BraidWord sphere_relation_word(int strands) {
  BraidWord w(strands);
  for (int k = 1; k <= strands - 2; ++k) w.append(k, +1);
  w.append(strands - 1, +1);
  w.append(strands - 1, +1);
  for (int k = strands - 2; k >= 1; --k) w.append(k, +1);
  return w;
}

}  // namespace hurwitz
