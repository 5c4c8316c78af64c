#include "anc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace anc {

Perm::Perm(int degree) : img_(degree) {
  if (degree < 0) throw Error("MalformedCycleNotation", "negative degree");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> one_based) {
  Perm p(static_cast<int>(one_based.size()));
  std::vector<bool> seen(one_based.size(), false);
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    int v = one_based[i];
    if (v < 1 || v > static_cast<int>(one_based.size()))
      throw Error("EntryOutOfRange", "image " + std::to_string(v));
    if (seen[v - 1]) throw Error("RepeatedEntry", "image " + std::to_string(v));
    seen[v - 1] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

Perm Perm::from_cycles(int degree,
                       const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > degree)
        throw Error("EntryOutOfRange", std::to_string(a));
      if (used[a - 1]) throw Error("RepeatedEntry", std::to_string(a));
      used[a - 1] = true;
      p.img_[a - 1] = b - 1;
    }
  }
  return p;
}

Perm Perm::parse(std::string_view text, int degree) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == 'e') {
    ++i;
    skip_ws();
    if (i != text.size())
      throw Error("MalformedCycleNotation", "trailing input after 'e'");
    return Perm(degree);
  }
  std::vector<std::vector<int>> cycles;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw Error("MalformedCycleNotation", "expected '('");
    ++i;
    std::vector<int> cyc;
    bool expect_int = true;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw Error("MalformedCycleNotation", "unterminated cycle");
      if (text[i] == ')') {
        if (expect_int)
          throw Error("MalformedCycleNotation", "empty entry in cycle");
        ++i;
        break;
      }
      if (text[i] == ',') {
        if (expect_int)
          throw Error("MalformedCycleNotation", "misplaced separator");
        ++i;
        expect_int = true;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("MalformedCycleNotation",
                    std::string("unexpected character '") + text[i] + "'");
      int v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cyc.push_back(v);
      expect_int = false;
    }
    if (cyc.empty())
      throw Error("MalformedCycleNotation", "empty cycle");
    cycles.push_back(std::move(cyc));
  }
  if (cycles.empty())
    throw Error("MalformedCycleNotation", "empty input");
  return from_cycles(degree, cycles);  // range/repeat errors surface here
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw Error("DegreeMismatch", "compose");
  Perm r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[i] = img_[rhs.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm Perm::conjugate(const Perm& w) const {
  if (degree() != w.degree()) throw Error("DegreeMismatch", "conjugate");
  return w.inverse() * (*this) * w;
}

Perm Perm::power(int e) const {
  Perm base = e >= 0 ? *this : inverse();
  int n = e >= 0 ? e : -e;
  Perm acc(degree());
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = true;
      cyc.push_back(j + 1);
      j = img_[j];
    } while (j != i);
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;  // already minimum-first and sorted by minimum
}

std::string Perm::str() const {
  auto cyc = cycles(false);
  if (cyc.empty()) return "e";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

std::uint64_t Perm::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < degree(); ++i)
    k |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
  return k;
}

CycleStats cycle_stats(const Perm& x) {
  CycleStats s;
  auto cyc = x.cycles(true);
  s.cyc = static_cast<int>(cyc.size());
  for (const auto& c : cyc) {
    s.cycle_type.push_back(static_cast<int>(c.size()));
    if (c.size() % 2 == 1) ++s.ocyc;
    if (c.size() > 1)
      for (int v : c) s.support.push_back(v);
  }
  std::sort(s.cycle_type.begin(), s.cycle_type.end(), std::greater<int>());
  std::sort(s.support.begin(), s.support.end());
  s.ell2 = x.degree() - s.cyc;
  s.is_even = s.ell2 % 2 == 0;
  return s;
}

CycleGen::CycleGen(std::vector<int> e) : entries(std::move(e)) {
  if (entries.size() < 2)
    throw Error("MalformedCycleNotation", "cycle generator needs k >= 2");
  auto mn = std::min_element(entries.begin(), entries.end());
  std::rotate(entries.begin(), mn, entries.end());
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("RepeatedEntry", "cycle generator");
}

Perm CycleGen::as_perm(int degree) const {
  return Perm::from_cycles(degree, {entries});
}

CycleGen CycleGen::inverse() const {
  std::vector<int> rev(entries.rbegin(), entries.rend());
  return CycleGen(std::move(rev));
}

std::string CycleGen::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ' ';
    os << entries[i];
  }
  os << ')';
  return os.str();
}

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets_rec(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CycleGen> enumerate_generators(int n, Family family, int k) {
  int klen = family == Family::Transpositions ? 2
             : family == Family::ThreeCycles  ? 3
                                              : k;
  if (klen < 2) throw Error("DegreeTooSmall", "k must be at least 2");
  if (n < klen) throw Error("DegreeTooSmall", "degree below cycle length");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  subsets_rec(n, klen, 1, cur, subsets);
  std::vector<CycleGen> out;
  for (auto& s : subsets) {
    // All distinct oriented cycles on this support: fix the minimum first,
    // permute the rest.
    std::vector<int> rest(s.begin() + 1, s.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> e;
      e.push_back(s[0]);
      e.insert(e.end(), rest.begin(), rest.end());
      out.push_back(CycleGen(std::move(e)));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Perm> enumerate_group(int n, int cap, bool even_only) {
  if (n > cap) throw Error("DegreeAboveOracleCap", std::to_string(n));
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    Perm p = Perm::from_images(img);
    if (!even_only || cycle_stats(p).is_even) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

std::vector<Perm> enumerate_alternating(int n, int cap) {
  return enumerate_group(n, cap, true);
}

std::vector<Perm> enumerate_symmetric(int n, int cap) {
  return enumerate_group(n, cap, false);
}

}  // namespace anc
