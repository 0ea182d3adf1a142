// Test-side reference implementations, deliberately naive and independent
// of the library code they check.

#ifndef IETW_TESTS_ORACLES_HPP_
#define IETW_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ietw/iet.hpp"
#include "ietw/words.hpp"

namespace oracle {

  using ietw::Word;

  // Rank by position in the alphabet string.
  inline std::vector<int> ranks(std::string const& alphabet) {
    std::vector<int> r(256, -1);
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      r[static_cast<unsigned char>(alphabet[i])] = static_cast<int>(i);
    }
    return r;
  }

  inline bool lex_less(Word const& u, Word const& v, std::string const& alphabet) {
    auto r = ranks(alphabet);
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(), [&](char x, char y) {
      return r[static_cast<unsigned char>(x)] < r[static_cast<unsigned char>(y)];
    });
  }

  // Last column of the sorted rotation matrix.
  inline Word bwt(Word const& w, std::string const& alphabet) {
    std::vector<Word> rot;
    for (std::size_t i = 0; i < w.size(); ++i) {
      rot.push_back(w.substr(i) + w.substr(0, i));
    }
    std::stable_sort(rot.begin(), rot.end(), [&](auto const& x, auto const& y) {
      return lex_less(x, y, alphabet);
    });
    Word out;
    for (auto const& r : rot) {
      out.push_back(r.back());
    }
    return out;
  }

  inline Word power_prefix(Word const& u, std::size_t n) {
    Word out;
    while (out.size() < n) {
      out += u;
    }
    return out.substr(0, n);
  }

  // u^ω vs v^ω by comparing long prefixes: -1, 0, 1.
  inline int omega_cmp(Word const& u, Word const& v, std::string const& alphabet) {
    auto n = 2 * u.size() * v.size() + 2;
    auto x = power_prefix(u, n), y = power_prefix(v, n);
    if (x == y) {
      return 0;
    }
    return lex_less(x, y, alphabet) ? -1 : 1;
  }

  // Sorting all rotations of all words by ω-order, ties by input order.
  inline Word ebwt(std::vector<Word> const& words, std::string const& alphabet) {
    std::vector<Word> rot;
    for (auto const& w : words) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        rot.push_back(w.substr(i) + w.substr(0, i));
      }
    }
    std::stable_sort(rot.begin(), rot.end(), [&](auto const& x, auto const& y) {
      return omega_cmp(x, y, alphabet) < 0;
    });
    Word out;
    for (auto const& r : rot) {
      out.push_back(r.back());
    }
    return out;
  }

  inline bool is_primitive(Word const& w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
      if (w.size() % p == 0 && power_prefix(w.substr(0, p), w.size()) == w) {
        return false;
      }
    }
    return !w.empty();
  }

  inline bool is_lyndon(Word const& w, std::string const& alphabet) {
    if (!is_primitive(w)) {
      return false;
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (!lex_less(w, w.substr(i) + w.substr(0, i), alphabet)) {
        return false;
      }
    }
    return true;
  }

  // Letters of the word's transform form one run per letter, in this order.
  inline std::string block_order(Word const& t) {
    std::string order;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == 0 || t[i] != t[i - 1]) {
        if (order.find(t[i]) != std::string::npos) {
          return {};
        }
        order.push_back(t[i]);
      }
    }
    return order;
  }

  // All words of exactly length n over the letters.
  inline std::vector<Word> words_of_length(std::string const& letters, std::size_t n) {
    std::vector<Word> out{""};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Word> next;
      for (auto const& w : out) {
        for (char a : letters) {
          next.push_back(w + a);
        }
      }
      out = std::move(next);
    }
    return out;
  }

  inline bool pangrammatic(Word const& w, std::string const& letters) {
    return std::all_of(letters.begin(), letters.end(), [&](char a) {
      return w.find(a) != std::string::npos;
    });
  }

  // Golden rotation x -> x + 2α mod 1, α = (3 - √5)/2, in floating point,
  // coded by I_a = [0, 1-2α), I_b = [1-2α, 1-α), I_c = [1-α, 1).
  struct FloatGolden {
    double alpha = (3.0 - std::sqrt(5.0)) / 2.0;

    char letter(double x) const {
      if (x < 1 - 2 * alpha) {
        return 'a';
      }
      return x < 1 - alpha ? 'b' : 'c';
    }
    double step(double x) const {
      x += 2 * alpha;
      return x >= 1 ? x - 1 : x;
    }
    Word trajectory(double x, std::size_t n) const {
      Word w;
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(letter(x));
        x = step(x);
      }
      return w;
    }
  };

}  // namespace oracle

namespace fixtures {

  inline ietw::Iet golden() {
    using ietw::QuadNum;
    ietw::OrderedAlphabet A("abc");
    return ietw::Iet(A,
                     ietw::parse_permutation("bca", A),
                     {QuadNum::parse("(-2, 1, 1)", 5), QuadNum::parse("(3, -1, 2)", 5),
                      QuadNum::parse("(3, -1, 2)", 5)});
  }

  // α = (3 - √5)/2 and friends as exact values.
  inline ietw::QuadNum alpha() {
    return ietw::QuadNum::parse("(3, -1, 2)", 5);
  }

}  // namespace fixtures

#endif  // IETW_TESTS_ORACLES_HPP_
