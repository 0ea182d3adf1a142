// Free-monoid morphisms between ordered alphabets, the elementary
// morphisms a -> ab and a -> ba, and the clustering-preserving cases.

#ifndef IETW_MORPHISM_HPP_
#define IETW_MORPHISM_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "words.hpp"

namespace ietw {

  class Morphism {
   public:
    // Every source letter needs a nonempty image over target.
    Morphism(OrderedAlphabet source, OrderedAlphabet target, std::map<Letter, Word> images);

    static Morphism identity(OrderedAlphabet const& A);

    // "a:ab,b:b,c:c"; the source alphabet is the order of the keys, the
    // target alphabet the letters of the images in order of first use
    // unless given.
    static Morphism parse(std::string_view                 spec,
                          std::optional<OrderedAlphabet> target = std::nullopt);

    OrderedAlphabet const& source() const noexcept {
      return source_;
    }
    OrderedAlphabet const& target() const noexcept {
      return target_;
    }
    Word const& image(Letter a) const;

    Word operator()(std::string_view w) const;

    // Same format parse() accepts, keys in source order.
    std::string to_string() const;

    bool operator==(Morphism const&) const = default;

   private:
    OrderedAlphabet        source_;
    OrderedAlphabet        target_;
    std::map<Letter, Word> images_;
  };

  // α_{a,b}: a -> ab, other letters fixed.
  Morphism make_alpha(Letter a, Letter b, OrderedAlphabet const& A);
  // ᾱ_{a,b}: a -> ba, other letters fixed.
  Morphism make_alpha_tilde(Letter a, Letter b, OrderedAlphabet const& A);

  // f ∘ g: g applies first.  Requires source(f) == target(g).
  Morphism compose(Morphism const& f, Morphism const& g);

  // Letter-to-letter a_i -> a_{μ(i)}, onto {μ(a_1) < ... < μ(a_d)}.
  Morphism rename(Permutation const& mu, OrderedAlphabet const& A);

  // The five ways a clustering word's image stays clustering.  For a word
  // that is π-clustering over A = {a_1 < ... < a_d} ("position" below means
  // position in the image order π):
  enum class ClusteringCase {
    rename = 1,        // any letter renaming μ
    alpha_first,       // α_{a,b}, b = a_1, a and b at positions i, i+1
    alpha_last,        // α_{a,b}, b = a_d, b and a at positions i, i+1
    tilde_first,       // ᾱ_{a,b}, b first in π, a = a_i, b = a_{i+1}
    tilde_last,        // ᾱ_{a,b}, b last in π, b = a_i, a = a_{i+1}
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // The alphabet on which the image is clustering.  Throws
  // PreconditionError naming the violated clause.  Case rename needs mu and
  // ignores a and b.
  OrderedAlphabet clustering_case_target(ClusteringCase                         c,
                                         Letter                            a,
                                         Letter                            b,
                                         Permutation const&                pi,
                                         OrderedAlphabet const&            A,
                                         std::optional<Permutation> const& mu = std::nullopt);

  // The case's morphism from A onto its target alphabet.
  Morphism clustering_case_morphism(ClusteringCase                         c,
                                    Letter                            a,
                                    Letter                            b,
                                    Permutation const&                pi,
                                    OrderedAlphabet const&            A,
                                    std::optional<Permutation> const& mu = std::nullopt);

}  // namespace ietw

#endif  // IETW_MORPHISM_HPP_
