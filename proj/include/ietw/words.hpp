// Finite words over ordered alphabets: lexicographic and omega orders,
// conjugacy, primitivity, Lyndon representatives, Parikh vectors, and the
// permutation type shared by every other module.

#ifndef IETW_WORDS_HPP_
#define IETW_WORDS_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ietw {

  using Letter = char;
  using Word   = std::string;

  // Base class for every error the library reports.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A finite set of letters together with a total order.  The order is the
  // position in the declaration string, never the character code.
  class OrderedAlphabet {
   public:
    OrderedAlphabet() { rank_.fill(-1); }
    explicit OrderedAlphabet(std::string_view letters);

    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t i) const {
      return letters_.at(i);
    }
    Letter front() const {
      return letters_.front();
    }
    Letter back() const {
      return letters_.back();
    }
    bool contains(Letter a) const noexcept {
      return rank_[static_cast<unsigned char>(a)] >= 0;
    }
    // 0-based position of a; throws Error when a is not a letter.
    std::size_t index(Letter a) const;

    std::string const& letters() const noexcept {
      return letters_;
    }

    // Throws Error naming the first symbol of w outside the alphabet.
    void check_word(std::string_view w) const;

    // Letters of this alphabet occurring in w, in this alphabet's order.
    OrderedAlphabet support_of(std::string_view w) const;

    bool operator==(OrderedAlphabet const& other) const noexcept {
      return letters_ == other.letters_;
    }

   private:
    std::string                  letters_;
    std::array<std::int16_t, 256> rank_;
  };

  // A bijection of {0, ..., n-1} in one-line notation.  For an interval
  // exchange over {a_1 < ... < a_d}, images()[i] is the index of the letter
  // whose image interval is the (i+1)-th from the left.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    // i -> n-1-i
    static Permutation symmetric(std::size_t n);

    std::size_t size() const noexcept {
      return images_.size();
    }
    std::size_t operator()(std::size_t i) const {
      return images_.at(i);
    }
    std::vector<std::size_t> const& images() const noexcept {
      return images_;
    }

    Permutation inverse() const;
    // (*this ∘ g)(i) = (*this)(g(i))
    Permutation after(Permutation const& g) const;

    bool is_identity() const noexcept;
    bool is_symmetric() const noexcept;
    bool is_circular() const;
    // No proper prefix {0..k-1}, 1 <= k < n, is mapped onto itself.
    bool is_irreducible() const noexcept;

    // All cycles, each starting from its smallest element, ordered by that
    // element.  Fixed points are included.
    std::vector<std::vector<std::size_t>> cycles() const;

    bool operator==(Permutation const&) const = default;

   private:
    std::vector<std::size_t> images_;
  };

  // Accepts one-line letter notation ("bca") or cycle notation
  // ("(a c)(b)", letters optionally separated by blanks or commas).
  Permutation parse_permutation(std::string_view text, OrderedAlphabet const& A);

  // One-line notation as the sequence of image letters.
  std::string to_one_line(Permutation const& pi, OrderedAlphabet const& A);

  // Cycle notation over 1-based integers, fixed points omitted, e.g.
  // "(1,4,7)(2,5)(3,6)"; the identity prints as "()".
  std::string to_cycle_string(Permutation const& pi);

  std::strong_ordering compare_lex(std::string_view  u,
                                   std::string_view  v,
                                   OrderedAlphabet const& A);

  // Order of the infinite powers u^ω and v^ω; decided within |u| + |v|
  // symbols.  Equal iff uv = vu.
  std::strong_ordering compare_omega(std::string_view  u,
                                     std::string_view  v,
                                     OrderedAlphabet const& A);

  // All |w| rotations, the i-th starting at position i (with repeats for
  // non-primitive words).
  std::vector<Word> conjugates(std::string_view w);

  struct PrimitiveRoot {
    Word        root;
    std::size_t power;
  };

  PrimitiveRoot primitive_root(std::string_view w);
  bool          is_primitive(std::string_view w);
  bool          is_lyndon(std::string_view w, OrderedAlphabet const& A);

  // The unique Lyndon conjugate of a primitive word.
  Word lyndon_representative(std::string_view w, OrderedAlphabet const& A);

  class ParikhVector {
   public:
    ParikhVector() = default;
    explicit ParikhVector(std::vector<std::size_t> counts)
        : counts_(std::move(counts)) {}

    std::size_t operator[](std::size_t i) const {
      return counts_.at(i);
    }
    std::size_t size() const noexcept {
      return counts_.size();
    }
    std::size_t total() const noexcept;
    std::vector<std::size_t> const& counts() const noexcept {
      return counts_;
    }

    ParikhVector& operator+=(ParikhVector const& other);
    friend ParikhVector operator+(ParikhVector a, ParikhVector const& b) {
      return a += b;
    }
    bool operator==(ParikhVector const&) const = default;

   private:
    std::vector<std::size_t> counts_;
  };

  ParikhVector parikh(std::string_view w, OrderedAlphabet const& A);
  ParikhVector parikh(std::vector<Word> const& words, OrderedAlphabet const& A);

  // Number of (possibly overlapping) occurrences of u as a factor of w.
  std::size_t count_occurrences(std::string_view w, std::string_view u);

}  // namespace ietw

#endif  // IETW_WORDS_HPP_
