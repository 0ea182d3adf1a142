// Burrows-Wheeler transform, the extended transform on multisets of Lyndon
// words, its inverse, and block ("clustering") analysis of the output.

#ifndef IETW_BWT_HPP_
#define IETW_BWT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "words.hpp"

namespace ietw {

  // A multiset of Lyndon words over a shared ordered alphabet.  Entries are
  // kept sorted lexicographically (for that alphabet), so two multisets are
  // equal iff their entry vectors are.
  class LyndonMultiset {
   public:
    LyndonMultiset(std::vector<Word> entries, OrderedAlphabet alphabet);

    std::vector<Word> const& entries() const noexcept {
      return entries_;
    }
    OrderedAlphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::size_t size() const noexcept {
      return entries_.size();
    }
    std::size_t total_length() const noexcept;

    bool operator==(LyndonMultiset const& other) const {
      return alphabet_ == other.alphabet_ && entries_ == other.entries_;
    }

   private:
    std::vector<Word> entries_;
    OrderedAlphabet   alphabet_;
  };

  struct ClusteringReport {
    Word transform;  // bwt or ebwt the analysis was run on
    bool is_clustering = false;
    // One entry per maximal run of the transform; when clustering this lists
    // each support letter once, in block order.
    std::string block_order;
    // Support letters of the source, in the order of the alphabet.
    OrderedAlphabet support;
    // i -> index (in support) of the letter of the (i+1)-th block.
    std::optional<Permutation> permutation;
    bool                       is_perfect = false;
  };

  Word bwt(std::string_view w, OrderedAlphabet const& A);
  Word ebwt(LyndonMultiset const& W);

  // Total: every nonempty string is the ebwt of exactly one Lyndon multiset.
  LyndonMultiset inverse_ebwt(std::string_view s, OrderedAlphabet const& A);

  // Block analysis of an arbitrary transform string.
  ClusteringReport analyse_blocks(Word transform, OrderedAlphabet const& A);

  ClusteringReport clustering_report(std::string_view w, OrderedAlphabet const& A);
  ClusteringReport multiset_clustering_report(LyndonMultiset const& W);

  // Is w π-clustering for the given image order over A (pangrammatic or
  // not: letters of A absent from w are skipped in π).
  bool is_pi_clustering(std::string_view       w,
                        Permutation const&     pi,
                        OrderedAlphabet const& A);

}  // namespace ietw

#endif  // IETW_BWT_HPP_
