// Discrete interval exchanges on {1, ..., n}.

#ifndef IETW_DIET_HPP_
#define IETW_DIET_HPP_

#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

#include "bwt.hpp"
#include "iet.hpp"
#include "words.hpp"

namespace ietw {

  // T(k) = k + t_i for k in block i, the blocks being
  // (n_1 + ... + n_{i-1}, n_1 + ... + n_i] (1-indexed, right-closed).
  class Diet {
   public:
    Diet(std::vector<std::size_t> composition, Permutation pi);

    std::vector<std::size_t> const& composition() const noexcept {
      return composition_;
    }
    Permutation const& permutation() const noexcept {
      return pi_;
    }
    std::size_t parts() const noexcept {
      return composition_.size();
    }
    std::size_t n() const noexcept {
      return n_;
    }
    std::vector<long> const& shifts() const noexcept {
      return shifts_;
    }

    // 0-based block index of k in {1..n}.
    std::size_t block_of(std::size_t k) const;
    std::size_t apply(std::size_t k) const;

   private:
    std::vector<std::size_t> composition_;
    Permutation              pi_;
    std::size_t              n_ = 0;
    std::vector<long>        shifts_;
  };

  // μ on {0..n-1}, i.e. k -> T(k+1) - 1; print with to_cycle_string.
  Permutation diet_action(Diet const& D);

  // Orbits of μ, each from its smallest element, as sequences of 1-based
  // integers.
  std::vector<std::vector<std::size_t>> diet_orbits(Diet const& D);

  LyndonMultiset orbit_words(Diet const& D, OrderedAlphabet const& A);

  class NotClustering : public Error {
   public:
    using Error::Error;
  };

  // The DIET whose orbit words are W; W must be π-clustering and
  // pangrammatic.
  Diet diet_from_multiset(LyndonMultiset const& W, Permutation const& pi);

  // {k : the trajectory of k starts with w}, 1-based.
  std::set<std::size_t> diet_cylinder(Diet const& D, std::string_view w, OrderedAlphabet const& A);

  // The same map on [0, n) with integer k sitting in the cell [k-1, k).
  Iet diet_as_iet(Diet const& D, OrderedAlphabet const& A);

}  // namespace ietw

#endif  // IETW_DIET_HPP_
