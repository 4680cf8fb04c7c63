#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "qreflect/check.hpp"

namespace qreflect {

// Words alternating natural numbers with letters from the three-element
// poset {x, y, z}, z on top and x, y parallel: a1 x1 a2 ... an xn a(n+1).
// A bare natural is the letter-free case. Serialized compactly: "2x3",
// "0z0", "1x1y2".
struct Word {
  std::vector<long> coeffs;   // length = letters.size() + 1
  std::vector<char> letters;  // entries from {'x','y','z'}

  int letter_count() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const Word&, const Word&) = default;
};

inline Word make_word(std::vector<long> coeffs, std::vector<char> letters) {
  if (coeffs.size() != letters.size() + 1)
    throw Error("word needs one more coefficient than letters");
  for (long c : coeffs)
    if (c < 0) throw Error("word coefficients are naturals");
  for (char l : letters)
    if (l != 'x' && l != 'y' && l != 'z')
      throw Error("word letters come from {x,y,z}");
  return Word{std::move(coeffs), std::move(letters)};
}

inline std::string to_string(const Word& w) {
  std::string out = std::to_string(w.coeffs[0]);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    out += w.letters[i];
    out += std::to_string(w.coeffs[i + 1]);
  }
  return out;
}

inline Word parse_word(const std::string& text) {
  std::vector<long> coeffs;
  std::vector<char> letters;
  std::size_t i = 0;
  auto read_nat = [&]() {
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
      throw Error("expected a digit in word '" + text + "'");
    long v = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return v;
  };
  coeffs.push_back(read_nat());
  while (i < text.size()) {
    letters.push_back(text[i++]);
    coeffs.push_back(read_nat());
  }
  return make_word(std::move(coeffs), std::move(letters));
}

inline bool letter_leq(char a, char b) { return a == b || b == 'z'; }

// Concatenation fusing the boundary naturals by addition.
inline Word word_mult(const Word& a, const Word& b) {
  Word out;
  out.coeffs = a.coeffs;
  out.coeffs.back() += b.coeffs.front();
  out.coeffs.insert(out.coeffs.end(), b.coeffs.begin() + 1, b.coeffs.end());
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

// Decides a <= b: equal letter counts; equality when letter-free; letters
// below pointwise; and the unique correction sequence c with c0 = 0,
// a_j(b) = a_j(a) + c(j-1) + c(j) and c(n+1) = 0, where c_i must be a
// natural when the i-th letters coincide and may be any integer otherwise.
inline bool word_leq(const Word& a, const Word& b) {
  const int n = a.letter_count();
  if (n != b.letter_count()) return false;
  if (n == 0) return a.coeffs[0] == b.coeffs[0];
  for (int i = 0; i < n; ++i)
    if (!letter_leq(a.letters[i], b.letters[i])) return false;
  long c_prev = 0;
  for (int j = 0; j < n; ++j) {
    long c = b.coeffs[j] - a.coeffs[j] - c_prev;
    if (a.letters[j] == b.letters[j] && c < 0) return false;
    c_prev = c;
  }
  return b.coeffs[n] - a.coeffs[n] - c_prev == 0;
}

struct JoinBound {
  int max_letters = 2;
  long max_coeff = 3;
};

namespace detail {

template <typename F>
void enumerate_coeffs(std::vector<long>& buf, std::size_t pos, long max_coeff,
                      F&& f) {
  if (pos == buf.size()) {
    f();
    return;
  }
  for (long v = 0; v <= max_coeff; ++v) {
    buf[pos] = v;
    enumerate_coeffs(buf, pos + 1, max_coeff, f);
  }
}

}  // namespace detail

// Least upper bound of a finite word set among the candidates within the
// bound; soundness is relative to the bound, which must be wide enough to
// contain the join when one exists.
inline std::optional<Word> bounded_join(const std::vector<Word>& words,
                                        JoinBound bound = {}) {
  if (words.empty()) return std::nullopt;
  const int n = words.front().letter_count();
  for (const Word& w : words)
    if (w.letter_count() != n) return std::nullopt;  // no common bound
  if (n > bound.max_letters) return std::nullopt;

  // candidate letters are per-position upper bounds of the input letters
  std::vector<std::vector<char>> letter_choices(n);
  for (int i = 0; i < n; ++i)
    for (char cand : {'x', 'y', 'z'}) {
      bool ub = true;
      for (const Word& w : words) ub = ub && letter_leq(w.letters[i], cand);
      if (ub) letter_choices[i].push_back(cand);
    }

  std::vector<Word> ubs;
  std::vector<int> pick(n, 0);
  while (true) {
    Word cand;
    cand.letters.resize(n);
    for (int i = 0; i < n; ++i) cand.letters[i] = letter_choices[i][pick[i]];
    cand.coeffs.assign(n + 1, 0);
    detail::enumerate_coeffs(cand.coeffs, 0, bound.max_coeff, [&]() {
      for (const Word& w : words)
        if (!word_leq(w, cand)) return;
      ubs.push_back(cand);
    });
    int i = 0;
    while (i < n && ++pick[i] == static_cast<int>(letter_choices[i].size()))
      pick[i++] = 0;
    if (i == n || n == 0) break;
  }
  for (const Word& u : ubs) {
    bool least = true;
    for (const Word& v : ubs)
      if (!word_leq(u, v)) {
        least = false;
        break;
      }
    if (least) return u;
  }
  return std::nullopt;
}

// The distributivity story of this posemigroup: M = {0x0, 0y0} has join
// 0z0 and every one-sided product distributes over it on a word sample,
// yet the two-sided translation 1 M 1 has join 0z0 while 1(vM)1 = 1z1.
inline Report word_example_checks(int sample_letters = 2,
                                  long sample_coeff = 3) {
  Report r;
  Word x0 = parse_word("0x0"), y0 = parse_word("0y0"), z0 = parse_word("0z0");
  std::vector<Word> M{x0, y0};
  auto vM = bounded_join(M, {1, 3});
  r.add("v{0x0,0y0} = 0z0", vM && *vM == z0,
        vM ? to_string(*vM) : "no bounded join");
  if (!vM) return r;

  std::vector<Word> sample;
  for (int n = 0; n <= sample_letters; ++n) {
    std::vector<long> coeffs(n + 1, 0);
    std::vector<char> letters(n, 'x');
    std::vector<int> lpick(n, 0);
    const char alphabet[3] = {'x', 'y', 'z'};
    while (true) {
      for (int i = 0; i < n; ++i) letters[i] = alphabet[lpick[i]];
      detail::enumerate_coeffs(coeffs, 0, sample_coeff, [&]() {
        sample.push_back(Word{coeffs, letters});
      });
      int i = 0;
      while (i < n && ++lpick[i] == 3) lpick[i++] = 0;
      if (i == n || n == 0) break;
    }
  }

  bool left = true, right = true;
  std::string lw, rw;
  for (const Word& alpha : sample) {
    JoinBound b{alpha.letter_count() + 1, sample_coeff};
    auto jl = bounded_join({word_mult(alpha, x0), word_mult(alpha, y0)}, b);
    if (!jl || !(*jl == word_mult(alpha, z0))) {
      left = false;
      lw = to_string(alpha);
    }
    auto jr = bounded_join({word_mult(x0, alpha), word_mult(y0, alpha)}, b);
    if (!jr || !(*jr == word_mult(z0, alpha))) {
      right = false;
      rw = to_string(alpha);
    }
    if (!left && !right) break;
  }
  r.add("a(vM) = v(aM) over the sample", left, lw);
  r.add("(vM)a = v(Ma) over the sample", right, rw);

  Word one = parse_word("1");
  Word lhs = word_mult(one, word_mult(*vM, one));
  auto rhs = bounded_join({word_mult(one, word_mult(x0, one)),
                           word_mult(one, word_mult(y0, one))},
                          {1, 3});
  r.add("1(vM)1 = 1z1", lhs == parse_word("1z1"), to_string(lhs));
  r.add("v(1M1) = 0z0", rhs && *rhs == z0, rhs ? to_string(*rhs) : "NONE");
  r.add("v(1M1) < 1(vM)1 strictly",
        rhs && word_leq(*rhs, lhs) && !word_leq(lhs, *rhs));
  return r;
}

}  // namespace qreflect
