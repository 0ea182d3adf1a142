#include "ietw/bwt.hpp"

#include <algorithm>
#include <numeric>

namespace ietw {

  LyndonMultiset::LyndonMultiset(std::vector<Word> entries, OrderedAlphabet alphabet)
      : entries_(std::move(entries)), alphabet_(std::move(alphabet)) {
    for (auto const& w : entries_) {
      alphabet_.check_word(w);
      if (!is_lyndon(w, alphabet_)) {
        throw Error("\"" + w + "\" is not a Lyndon word over \""
                    + alphabet_.letters() + "\"");
      }
    }
    std::sort(entries_.begin(), entries_.end(), [this](auto const& x, auto const& y) {
      return compare_lex(x, y, alphabet_) < 0;
    });
  }

  std::size_t LyndonMultiset::total_length() const noexcept {
    std::size_t n = 0;
    for (auto const& w : entries_) {
      n += w.size();
    }
    return n;
  }

  Word bwt(std::string_view w, OrderedAlphabet const& A) {
    if (w.empty()) {
      throw Error("bwt of the empty word is undefined");
    }
    auto const n = w.size();
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
      rank[i] = A.index(w[i]);
    }
    std::vector<std::size_t> start(n);
    std::iota(start.begin(), start.end(), 0);
    std::sort(start.begin(), start.end(), [&](std::size_t x, std::size_t y) {
      for (std::size_t k = 0; k < n; ++k) {
        auto rx = rank[(x + k) % n], ry = rank[(y + k) % n];
        if (rx != ry) {
          return rx < ry;
        }
      }
      return false;
    });
    Word out;
    out.reserve(n);
    for (auto s : start) {
      out.push_back(w[(s + n - 1) % n]);
    }
    return out;
  }

  Word ebwt(LyndonMultiset const& W) {
    if (W.size() == 0) {
      throw Error("ebwt of an empty multiset is undefined");
    }
    auto const&       A = W.alphabet();
    std::vector<Word> rots;
    for (auto const& w : W.entries()) {
      auto c = conjugates(w);
      rots.insert(rots.end(), c.begin(), c.end());
    }
    // Rotations with equal infinite powers are identical strings here (all
    // entries are primitive), so the order among ties does not matter.
    std::stable_sort(rots.begin(), rots.end(), [&A](auto const& x, auto const& y) {
      return compare_omega(x, y, A) < 0;
    });
    Word out;
    out.reserve(rots.size());
    for (auto const& r : rots) {
      out.push_back(r.back());
    }
    return out;
  }

  LyndonMultiset inverse_ebwt(std::string_view s, OrderedAlphabet const& A) {
    if (s.empty()) {
      throw Error("inverse ebwt of the empty string is undefined");
    }
    auto const n = s.size();
    // Standard permutation: positions of s stably sorted by letter.  The
    // row starting with the k-th smallest letter occurrence is followed (one
    // position later in its word) by row sigma[k].
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::stable_sort(sigma.begin(), sigma.end(), [&](std::size_t x, std::size_t y) {
      return A.index(s[x]) < A.index(s[y]);
    });
    std::vector<bool> seen(n, false);
    std::vector<Word> words;
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) {
        continue;
      }
      Word w;
      for (auto x = i; !seen[x]; x = sigma[x]) {
        seen[x] = true;
        w.push_back(s[sigma[x]]);
      }
      words.push_back(lyndon_representative(w, A));
    }
    return LyndonMultiset(std::move(words), A);
  }

  ClusteringReport analyse_blocks(Word transform, OrderedAlphabet const& A) {
    ClusteringReport rep;
    rep.support = A.support_of(transform);
    for (Letter a : transform) {
      if (rep.block_order.empty() || rep.block_order.back() != a) {
        rep.block_order.push_back(a);
      }
    }
    rep.transform = std::move(transform);
    rep.is_clustering = rep.block_order.size() == rep.support.size();
    if (rep.is_clustering) {
      std::vector<std::size_t> images;
      for (Letter a : rep.block_order) {
        images.push_back(rep.support.index(a));
      }
      rep.permutation = Permutation(std::move(images));
      rep.is_perfect  = rep.permutation->is_symmetric();
    }
    return rep;
  }

  ClusteringReport clustering_report(std::string_view w, OrderedAlphabet const& A) {
    return analyse_blocks(bwt(w, A), A);
  }

  ClusteringReport multiset_clustering_report(LyndonMultiset const& W) {
    return analyse_blocks(ebwt(W), W.alphabet());
  }

  bool is_pi_clustering(std::string_view       w,
                        Permutation const&     pi,
                        OrderedAlphabet const& A) {
    if (pi.size() != A.size()) {
      throw Error("permutation size does not match alphabet");
    }
    auto rep = clustering_report(w, A);
    if (!rep.is_clustering) {
      return false;
    }
    std::string expected;
    for (auto i : pi.images()) {
      if (rep.support.contains(A[i])) {
        expected.push_back(A[i]);
      }
    }
    return expected == rep.block_order;
  }

}  // namespace ietw
