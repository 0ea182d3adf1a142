#include "ietw/diet.hpp"

#include <algorithm>

namespace ietw {

  Diet::Diet(std::vector<std::size_t> composition, Permutation pi)
      : composition_(std::move(composition)), pi_(std::move(pi)) {
    auto const d = composition_.size();
    if (d == 0) {
      throw Error("a composition needs at least one part");
    }
    if (pi_.size() != d) {
      throw Error("permutation size does not match the number of parts");
    }
    for (auto part : composition_) {
      if (part == 0) {
        throw Error("composition parts must be positive");
      }
      n_ += part;
    }
    // t_i = (parts imaged before i) - (parts before i)
    auto const inv = pi_.inverse();
    shifts_.assign(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      long before_image = 0, before = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (inv(j) < inv(i)) {
          before_image += static_cast<long>(composition_[j]);
        }
        if (j < i) {
          before += static_cast<long>(composition_[j]);
        }
      }
      shifts_[i] = before_image - before;
    }
  }

  std::size_t Diet::block_of(std::size_t k) const {
    if (k < 1 || k > n_) {
      throw OutsideDomain(std::to_string(k) + " is outside {1.." + std::to_string(n_) + "}");
    }
    std::size_t upper = 0;
    for (std::size_t i = 0; i < composition_.size(); ++i) {
      upper += composition_[i];
      if (k <= upper) {
        return i;
      }
    }
    return composition_.size() - 1;  // unreachable
  }

  std::size_t Diet::apply(std::size_t k) const {
    return static_cast<std::size_t>(static_cast<long>(k) + shifts_[block_of(k)]);
  }

  Permutation diet_action(Diet const& D) {
    std::vector<std::size_t> images(D.n());
    for (std::size_t k = 1; k <= D.n(); ++k) {
      images[k - 1] = D.apply(k) - 1;
    }
    return Permutation(std::move(images));
  }

  std::vector<std::vector<std::size_t>> diet_orbits(Diet const& D) {
    auto cycles = diet_action(D).cycles();
    for (auto& c : cycles) {
      for (auto& x : c) {
        ++x;
      }
    }
    return cycles;
  }

  LyndonMultiset orbit_words(Diet const& D, OrderedAlphabet const& A) {
    if (A.size() != D.parts()) {
      throw Error("alphabet has " + std::to_string(A.size()) + " letters for "
                  + std::to_string(D.parts()) + " parts");
    }
    std::vector<Word> words;
    for (auto const& orbit : diet_orbits(D)) {
      Word w;
      for (auto k : orbit) {
        w.push_back(A[D.block_of(k)]);
      }
      words.push_back(lyndon_representative(w, A));
    }
    return LyndonMultiset(std::move(words), A);
  }

  Diet diet_from_multiset(LyndonMultiset const& W, Permutation const& pi) {
    auto const& A   = W.alphabet();
    auto        rep = multiset_clustering_report(W);
    if (!rep.is_clustering) {
      throw NotClustering("multiset is not clustering: ebwt = " + rep.transform);
    }
    if (rep.support.size() != A.size()) {
      throw NotClustering("multiset is not pangrammatic over \"" + A.letters() + "\"");
    }
    if (pi.size() != A.size() || rep.block_order != to_one_line(pi, A)) {
      throw NotClustering("multiset clusters as " + rep.block_order + ", not as the given permutation");
    }
    return Diet(parikh(W.entries(), A).counts(), pi);
  }

  std::set<std::size_t> diet_cylinder(Diet const& D, std::string_view w, OrderedAlphabet const& A) {
    A.check_word(w);
    std::set<std::size_t> out;
    for (std::size_t k = 1; k <= D.n(); ++k) {
      auto x  = k;
      bool ok = true;
      for (Letter a : w) {
        if (A[D.block_of(x)] != a) {
          ok = false;
          break;
        }
        x = D.apply(x);
      }
      if (ok) {
        out.insert(k);
      }
    }
    return out;
  }

  Iet diet_as_iet(Diet const& D, OrderedAlphabet const& A) {
    std::vector<QuadNum> lengths;
    for (auto part : D.composition()) {
      lengths.emplace_back(static_cast<long>(part));
    }
    return Iet(A, D.permutation(), std::move(lengths), QuadNum(0));
  }

}  // namespace ietw
