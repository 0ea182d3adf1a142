#include "ietw/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ietw {

  ////////////////////////////////////////////////////////////////////////
  // OrderedAlphabet
  ////////////////////////////////////////////////////////////////////////

  OrderedAlphabet::OrderedAlphabet(std::string_view letters)
      : letters_(letters) {
    rank_.fill(-1);
    if (letters_.empty()) {
      throw Error("alphabet must contain at least one letter");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      auto& r = rank_[static_cast<unsigned char>(letters_[i])];
      if (r >= 0) {
        throw Error(std::string("duplicate letter '") + letters_[i]
                    + "' in alphabet \"" + letters_ + "\"");
      }
      r = static_cast<std::int16_t>(i);
    }
  }

  std::size_t OrderedAlphabet::index(Letter a) const {
    auto r = rank_[static_cast<unsigned char>(a)];
    if (r < 0) {
      throw Error(std::string("letter '") + a + "' is not in alphabet \""
                  + letters_ + "\"");
    }
    return static_cast<std::size_t>(r);
  }

  void OrderedAlphabet::check_word(std::string_view w) const {
    for (Letter a : w) {
      index(a);
    }
  }

  OrderedAlphabet OrderedAlphabet::support_of(std::string_view w) const {
    std::vector<bool> seen(size(), false);
    for (Letter a : w) {
      seen[index(a)] = true;
    }
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (seen[i]) {
        out.push_back(letters_[i]);
      }
    }
    if (out.empty()) {
      return OrderedAlphabet();
    }
    return OrderedAlphabet(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::size_t> images)
      : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || hit[x]) {
        throw Error("permutation images are not a bijection");
      }
      hit[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  Permutation Permutation::symmetric(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = n - 1 - i;
    }
    return Permutation(std::move(v));
  }

  Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(size());
    for (std::size_t i = 0; i < size(); ++i) {
      inv[images_[i]] = i;
    }
    return Permutation(std::move(inv));
  }

  Permutation Permutation::after(Permutation const& g) const {
    if (g.size() != size()) {
      throw Error("cannot compose permutations of different sizes");
    }
    std::vector<std::size_t> v(size());
    for (std::size_t i = 0; i < size(); ++i) {
      v[i] = images_[g.images_[i]];
    }
    return Permutation(std::move(v));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool Permutation::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < size(); ++i) {
      if (images_[i] != size() - 1 - i) {
        return false;
      }
    }
    return true;
  }

  bool Permutation::is_circular() const {
    return cycles().size() == 1;
  }

  bool Permutation::is_irreducible() const noexcept {
    // {0..k-1} is invariant iff the max image over the prefix is k-1.
    std::size_t mx = 0;
    for (std::size_t k = 1; k < size(); ++k) {
      mx = std::max(mx, images_[k - 1]);
      if (mx == k - 1) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool>                     seen(size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::vector<std::size_t> cyc;
      for (std::size_t x = i; !seen[x]; x = images_[x]) {
        seen[x] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  Permutation parse_permutation(std::string_view text, OrderedAlphabet const& A) {
    auto const d = A.size();
    if (text.find('(') == std::string_view::npos) {
      if (text.size() != d) {
        throw Error("one-line permutation \"" + std::string(text)
                    + "\" must list exactly " + std::to_string(d) + " letters");
      }
      std::vector<std::size_t> images;
      for (Letter a : text) {
        images.push_back(A.index(a));
      }
      return Permutation(std::move(images));
    }
    // Cycle notation: (x y z) means x -> y -> z -> x.
    std::vector<std::size_t> images(d);
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool>         mentioned(d, false);
    std::vector<std::size_t>  cyc;
    bool                      open = false;
    auto                      close_cycle = [&]() {
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        images[cyc[k]] = cyc[(k + 1) % cyc.size()];
      }
      cyc.clear();
    };
    for (char ch : text) {
      if (ch == '(') {
        if (open) {
          throw Error("nested '(' in cycle notation");
        }
        open = true;
      } else if (ch == ')') {
        if (!open) {
          throw Error("unbalanced ')' in cycle notation");
        }
        open = false;
        close_cycle();
      } else if (ch == ' ' || ch == ',' || ch == '\t') {
        continue;
      } else {
        if (!open) {
          throw Error("letter outside a cycle in \"" + std::string(text) + "\"");
        }
        auto i = A.index(ch);
        if (mentioned[i]) {
          throw Error(std::string("letter '") + ch + "' appears twice in cycles");
        }
        mentioned[i] = true;
        cyc.push_back(i);
      }
    }
    if (open) {
      throw Error("unterminated cycle in \"" + std::string(text) + "\"");
    }
    return Permutation(std::move(images));
  }

  std::string to_one_line(Permutation const& pi, OrderedAlphabet const& A) {
    if (pi.size() != A.size()) {
      throw Error("permutation size does not match alphabet");
    }
    std::string out;
    for (auto i : pi.images()) {
      out.push_back(A[i]);
    }
    return out;
  }

  std::string to_cycle_string(Permutation const& pi) {
    std::ostringstream os;
    bool               any = false;
    for (auto const& cyc : pi.cycles()) {
      if (cyc.size() == 1) {
        continue;
      }
      any = true;
      os << '(';
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        os << (k ? "," : "") << cyc[k] + 1;
      }
      os << ')';
    }
    return any ? os.str() : "()";
  }

  ////////////////////////////////////////////////////////////////////////
  // Orders
  ////////////////////////////////////////////////////////////////////////

  std::strong_ordering compare_lex(std::string_view  u,
                                   std::string_view  v,
                                   OrderedAlphabet const& A) {
    auto n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto c = A.index(u[i]) <=> A.index(v[i]);
      if (c != 0) {
        return c;
      }
    }
    A.check_word(u.substr(n));
    A.check_word(v.substr(n));
    return u.size() <=> v.size();
  }

  std::strong_ordering compare_omega(std::string_view  u,
                                     std::string_view  v,
                                     OrderedAlphabet const& A) {
    if (u.empty() || v.empty()) {
      throw Error("omega-order comparison needs nonempty words");
    }
    // Fine and Wilf: if u^ω and v^ω agree on |u| + |v| - gcd symbols they
    // are equal, so |u| + |v| symbols always decide.
    auto n = u.size() + v.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto c = A.index(u[i % u.size()]) <=> A.index(v[i % v.size()]);
      if (c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugates and primitivity
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> conjugates(std::string_view w) {
    if (w.empty()) {
      throw Error("the empty word has no conjugates to list");
    }
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word r(w.substr(i));
      r.append(w.substr(0, i));
      out.push_back(std::move(r));
    }
    return out;
  }

  PrimitiveRoot primitive_root(std::string_view w) {
    if (w.empty()) {
      throw Error("the empty word has no primitive root");
    }
    auto n = w.size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = p; i < n && periodic; ++i) {
        periodic = w[i] == w[i - p];
      }
      if (periodic) {
        return {Word(w.substr(0, p)), n / p};
      }
    }
    return {Word(w), 1};  // unreachable: p = n always succeeds
  }

  bool is_primitive(std::string_view w) {
    return primitive_root(w).power == 1;
  }

  bool is_lyndon(std::string_view w, OrderedAlphabet const& A) {
    if (w.empty() || !is_primitive(w)) {
      return false;
    }
    for (auto const& r : conjugates(w)) {
      if (compare_lex(r, w, A) < 0) {
        return false;
      }
    }
    return true;
  }

  Word lyndon_representative(std::string_view w, OrderedAlphabet const& A) {
    if (!is_primitive(w)) {
      throw Error("\"" + std::string(w)
                  + "\" is not primitive and has no Lyndon conjugate");
    }
    A.check_word(w);
    auto rots = conjugates(w);
    return *std::min_element(
        rots.begin(), rots.end(), [&A](auto const& x, auto const& y) {
          return compare_lex(x, y, A) < 0;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Parikh vectors
  ////////////////////////////////////////////////////////////////////////

  std::size_t ParikhVector::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
  }

  ParikhVector& ParikhVector::operator+=(ParikhVector const& other) {
    if (other.size() != size()) {
      throw Error("Parikh vectors over different alphabets");
    }
    for (std::size_t i = 0; i < size(); ++i) {
      counts_[i] += other.counts_[i];
    }
    return *this;
  }

  ParikhVector parikh(std::string_view w, OrderedAlphabet const& A) {
    std::vector<std::size_t> counts(A.size(), 0);
    for (Letter a : w) {
      ++counts[A.index(a)];
    }
    return ParikhVector(std::move(counts));
  }

  ParikhVector parikh(std::vector<Word> const& words, OrderedAlphabet const& A) {
    ParikhVector sum(std::vector<std::size_t>(A.size(), 0));
    for (auto const& w : words) {
      sum += parikh(w, A);
    }
    return sum;
  }

  std::size_t count_occurrences(std::string_view w, std::string_view u) {
    if (u.empty()) {
      return w.size() + 1;
    }
    std::size_t n = 0;
    for (auto pos = w.find(u); pos != std::string_view::npos;
         pos      = w.find(u, pos + 1)) {
      ++n;
    }
    return n;
  }

}  // namespace ietw
