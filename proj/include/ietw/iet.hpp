// Interval exchange transformations with exact endpoints.

#ifndef IETW_IET_HPP_
#define IETW_IET_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "quadnum.hpp"
#include "words.hpp"

namespace ietw {

  // Left-closed, right-open [left, right).  Empty when left >= right.
  struct Interval {
    QuadNum left;
    QuadNum right;

    static Interval empty_interval() {
      return {QuadNum(0), QuadNum(0)};
    }

    bool is_empty() const {
      return !(left < right);
    }
    QuadNum length() const {
      return is_empty() ? QuadNum(0) : right - left;
    }
    bool contains(QuadNum const& x) const {
      return left <= x && x < right;
    }
    bool contains(Interval const& J) const {
      return J.is_empty() || (left <= J.left && J.right <= right);
    }
    Interval shifted(QuadNum const& t) const {
      return {left + t, right + t};
    }
    Interval intersect(Interval const& J) const;
    std::string to_string() const;

    // Empty intervals compare equal to each other.
    friend bool operator==(Interval const& x, Interval const& y) {
      if (x.is_empty() || y.is_empty()) {
        return x.is_empty() && y.is_empty();
      }
      return x.left == y.left && x.right == y.right;
    }
  };

  class OutsideDomain : public Error {
   public:
    using Error::Error;
  };

  class NotInLanguage : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // The map T(x) = x + τ_a on I_a, where the pieces I_a tile
  // [origin, origin + Σ|I_a|) in alphabet order and their images tile the
  // same interval in the order given by the permutation.
  class Iet {
   public:
    Iet(OrderedAlphabet      alphabet,
        Permutation          pi,
        std::vector<QuadNum> lengths,
        QuadNum              origin = QuadNum(0));

    OrderedAlphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    Permutation const& permutation() const noexcept {
      return pi_;
    }
    std::size_t size() const noexcept {
      return alphabet_.size();
    }
    // Letters in the left-to-right order of their images.
    std::string image_order() const {
      return to_one_line(pi_, alphabet_);
    }

    QuadNum const& length(Letter a) const {
      return lengths_[alphabet_.index(a)];
    }
    std::vector<QuadNum> const& lengths() const noexcept {
      return lengths_;
    }
    QuadNum const& translation(Letter a) const {
      return tau_[alphabet_.index(a)];
    }
    QuadNum const& origin() const noexcept {
      return origin_;
    }

    Interval domain() const {
      return {origin_, end_};
    }
    Interval piece(Letter a) const;
    Interval image_piece(Letter a) const {
      return piece(a).shifted(translation(a));
    }

    // Letter of the piece containing x; throws OutsideDomain.
    Letter  letter_at(QuadNum const& x) const;
    QuadNum apply(QuadNum const& x) const;
    QuadNum apply_inverse(QuadNum const& y) const;

    bool operator==(Iet const& other) const {
      return alphabet_ == other.alphabet_ && pi_ == other.pi_
             && lengths_ == other.lengths_ && origin_ == other.origin_;
    }

   private:
    OrderedAlphabet      alphabet_;
    Permutation          pi_;
    std::vector<QuadNum> lengths_;
    QuadNum              origin_;
    QuadNum              end_;
    std::vector<QuadNum> starts_;  // left endpoint of each piece
    std::vector<QuadNum> tau_;
  };

  struct Discontinuities {
    std::vector<QuadNum> of_map;      // D(T): interior top division points
    std::vector<QuadNum> of_inverse;  // D(T^{-1}): interior image division points
  };

  Discontinuities discontinuities(Iet const& T);

  struct Connection {
    QuadNum     from;  // in D(T^{-1})
    QuadNum     to;    // in D(T)
    std::size_t steps;
  };

  struct KeaneVerdict {
    // Number of orbit lengths n = 0, 1, ... verified connection-free.
    std::size_t               regular_to_depth = 0;
    std::optional<Connection> failure;

    bool regular() const noexcept {
      return !failure.has_value();
    }
  };

  KeaneVerdict check_keane(Iet const& T, std::size_t depth);

  Word trajectory(Iet const& T, QuadNum x, std::size_t n);

  Interval cylinder(Iet const& T, std::string_view w);

  // Nonempty cylinders of every word of length <= n, by refinement.
  std::map<Word, Interval> cylinders(Iet const& T, std::size_t n);
  std::set<Word>           language(Iet const& T, std::size_t n);

  struct FirstReturn {
    QuadNum     point;
    std::size_t exponent;
    Word        path;  // letters of T^0(z), ..., T^{exponent-1}(z)
  };

  FirstReturn first_return(Iet const& T, Interval const& J, QuadNum z, std::size_t cap);

  // One branch of the map induced on J: every z in domain returns after
  // path.size() steps, landing at z + translation.
  struct InducedPiece {
    Interval domain;
    QuadNum  translation;
    Word     path;
  };

  // The map induced by T on J, as pieces sorted by domain.  Throws
  // CapExceeded if some point needs more than cap steps to return.
  std::vector<InducedPiece> induced_pieces(Iet const& T, Interval const& J, std::size_t cap);

  struct ReturnWordScan {
    std::set<Word> words;
    bool           complete = false;
    std::size_t    scanned  = 0;  // trajectory length examined
  };

  // Cuts a trajectory starting in I_w at successive occurrences of w.
  // Defaults: horizon 200·|w|·d, expected d.
  ReturnWordScan return_words_scan(Iet const&                 T,
                                   std::string_view           w,
                                   std::optional<std::size_t> horizon  = std::nullopt,
                                   std::optional<std::size_t> expected = std::nullopt);

  // u is a return word to w: uw is in the language, and w occurs in uw
  // exactly twice, as a prefix and as a suffix.
  bool is_return_word(Iet const& T, std::string_view w, std::string_view u);

}  // namespace ietw

#endif  // IETW_IET_HPP_
