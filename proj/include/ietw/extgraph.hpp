// Extension graphs of words in a finite language sample, and bounded-depth
// dendric / alsinic classification.

#ifndef IETW_EXTGRAPH_HPP_
#define IETW_EXTGRAPH_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iet.hpp"
#include "words.hpp"

namespace ietw {

  // All factors of length <= max_len of some language.
  class LanguageSample {
   public:
    LanguageSample(std::set<Word> factors, std::size_t max_len, OrderedAlphabet alphabet, std::string source);

    std::set<Word> const& factors() const noexcept {
      return factors_;
    }
    std::size_t max_len() const noexcept {
      return max_len_;
    }
    OrderedAlphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::string const& source() const noexcept {
      return source_;
    }
    bool contains(std::string_view v) const {
      return factors_.contains(Word(v));
    }

   private:
    std::set<Word>  factors_;
    std::size_t     max_len_;
    OrderedAlphabet alphabet_;
    std::string     source_;
  };

  // Factors of the bi-infinite word ...www...; alphabet defaults to the
  // letters of w sorted by character code.
  LanguageSample sample_from_periodic(std::string_view                w,
                                      std::size_t                     max_len,
                                      std::optional<OrderedAlphabet> A = std::nullopt);
  // Union of the periodic languages of each word.
  LanguageSample sample_from_multiset(std::vector<Word> const&        words,
                                      std::size_t                     max_len,
                                      std::optional<OrderedAlphabet> A = std::nullopt);
  LanguageSample sample_from_iet(Iet const& T, std::size_t max_len);

  using Edge = std::pair<Letter, Letter>;

  struct ExtensionGraph {
    std::string    left;   // L(v), alphabet order
    std::string    right;  // R(v), alphabet order
    std::set<Edge> edges;  // B(v)
  };

  ExtensionGraph extension_graph(LanguageSample const& S, std::string_view v);

  bool is_forest(ExtensionGraph const& g);
  bool is_tree(ExtensionGraph const& g);

  // For all edges (a,b), (c,d): a <_1 c implies b <=_2 d.
  bool is_compatible(ExtensionGraph const& g, OrderedAlphabet const& left_order, OrderedAlphabet const& right_order);

  // a <_π b iff a's image comes before b's, i.e. the image order itself.
  OrderedAlphabet order_from_permutation(Permutation const& pi, OrderedAlphabet const& A);

  bool is_bispecial(LanguageSample const& S, std::string_view v);

  // Verdicts over all v in S with |v| <= depth; never a claim about the
  // full language.
  struct Classification {
    std::size_t         depth = 0;
    bool                dendric = true;
    bool                alsinic = true;
    bool                ordered_dendric = true;
    bool                ordered_alsinic = true;
    std::optional<Word> not_tree;      // first witness, shortlex
    std::optional<Word> not_forest;
    std::optional<Word> incompatible;
  };

  Classification classify(LanguageSample const&  S,
                          OrderedAlphabet const& left_order,
                          OrderedAlphabet const& right_order,
                          std::size_t            depth);

  // Compatibility checked only at bispecial words of length <= depth.
  bool bispecial_compatible(LanguageSample const&  S,
                            OrderedAlphabet const& left_order,
                            OrderedAlphabet const& right_order,
                            std::size_t            depth);

  std::string edge_list(ExtensionGraph const& g);

  // Two columns: left vertices in left_order, right vertices in
  // right_order, one row per edge.
  std::string render(ExtensionGraph const&  g,
                     OrderedAlphabet const& left_order,
                     OrderedAlphabet const& right_order);

}  // namespace ietw

#endif  // IETW_EXTGRAPH_HPP_
