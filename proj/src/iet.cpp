#include "ietw/iet.hpp"

#include <algorithm>
#include <deque>

namespace ietw {

  Interval Interval::intersect(Interval const& J) const {
    Interval out{std::max(left, J.left), std::min(right, J.right)};
    return out.is_empty() ? empty_interval() : out;
  }

  std::string Interval::to_string() const {
    if (is_empty()) {
      return "[)";
    }
    return "[" + left.to_string() + ", " + right.to_string() + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Iet
  ////////////////////////////////////////////////////////////////////////

  Iet::Iet(OrderedAlphabet      alphabet,
           Permutation          pi,
           std::vector<QuadNum> lengths,
           QuadNum              origin)
      : alphabet_(std::move(alphabet)),
        pi_(std::move(pi)),
        lengths_(std::move(lengths)),
        origin_(std::move(origin)) {
    auto const d = alphabet_.size();
    if (d == 0) {
      throw Error("an interval exchange needs at least one letter");
    }
    if (pi_.size() != d) {
      throw Error("permutation has " + std::to_string(pi_.size())
                  + " entries for an alphabet of " + std::to_string(d));
    }
    if (lengths_.size() != d) {
      throw Error("expected one length per letter");
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (lengths_[i].sign() <= 0) {
        throw Error(std::string("length of '") + alphabet_[i]
                    + "' must be positive, got " + lengths_[i].to_string());
      }
    }
    starts_.reserve(d);
    QuadNum x = origin_;
    for (std::size_t i = 0; i < d; ++i) {
      starts_.push_back(x);
      x += lengths_[i];
    }
    end_ = x;
    tau_.assign(d, QuadNum(0));
    QuadNum y = origin_;
    for (std::size_t pos = 0; pos < d; ++pos) {
      auto i  = pi_(pos);
      tau_[i] = y - starts_[i];
      y += lengths_[i];
    }
  }

  Interval Iet::piece(Letter a) const {
    auto i = alphabet_.index(a);
    return {starts_[i], starts_[i] + lengths_[i]};
  }

  Letter Iet::letter_at(QuadNum const& x) const {
    if (!domain().contains(x)) {
      throw OutsideDomain("point " + x.to_string() + " is outside "
                          + domain().to_string());
    }
    auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
    return alphabet_[static_cast<std::size_t>(it - starts_.begin()) - 1];
  }

  QuadNum Iet::apply(QuadNum const& x) const {
    return x + tau_[alphabet_.index(letter_at(x))];
  }

  QuadNum Iet::apply_inverse(QuadNum const& y) const {
    if (!domain().contains(y)) {
      throw OutsideDomain("point " + y.to_string() + " is outside "
                          + domain().to_string());
    }
    QuadNum edge = origin_;
    for (std::size_t pos = 0; pos < size(); ++pos) {
      auto i = pi_(pos);
      edge += lengths_[i];
      if (y < edge) {
        return y - tau_[i];
      }
    }
    throw OutsideDomain("point " + y.to_string() + " is outside the image");
  }

  ////////////////////////////////////////////////////////////////////////
  // Discontinuities and the Keane condition
  ////////////////////////////////////////////////////////////////////////

  Discontinuities discontinuities(Iet const& T) {
    Discontinuities out;
    auto const&     A = T.alphabet();
    for (std::size_t i = 1; i < A.size(); ++i) {
      out.of_map.push_back(T.piece(A[i]).left);
    }
    QuadNum y = T.origin();
    for (std::size_t pos = 0; pos + 1 < A.size(); ++pos) {
      y += T.lengths()[T.permutation()(pos)];
      out.of_inverse.push_back(y);
    }
    return out;
  }

  KeaneVerdict check_keane(Iet const& T, std::size_t depth) {
    auto const   D = discontinuities(T);
    auto         orbit = D.of_inverse;
    KeaneVerdict verdict;
    for (std::size_t n = 0; n < depth; ++n) {
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        if (std::find(D.of_map.begin(), D.of_map.end(), orbit[k]) != D.of_map.end()) {
          verdict.regular_to_depth = n;
          verdict.failure = Connection{D.of_inverse[k], orbit[k], n};
          return verdict;
        }
      }
      for (auto& x : orbit) {
        x = T.apply(x);
      }
    }
    verdict.regular_to_depth = depth;
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Trajectories, cylinders, language
  ////////////////////////////////////////////////////////////////////////

  Word trajectory(Iet const& T, QuadNum x, std::size_t n) {
    if (!T.domain().contains(x)) {
      throw OutsideDomain("point " + x.to_string() + " is outside "
                          + T.domain().to_string());
    }
    Word w;
    w.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      Letter a = T.letter_at(x);
      w.push_back(a);
      x += T.translation(a);
    }
    return w;
  }

  Interval cylinder(Iet const& T, std::string_view w) {
    T.alphabet().check_word(w);
    Interval S     = T.domain();
    QuadNum  shift = 0;
    for (Letter a : w) {
      S = S.intersect(T.piece(a).shifted(-shift));
      if (S.is_empty()) {
        return Interval::empty_interval();
      }
      shift += T.translation(a);
    }
    return S;
  }

  std::map<Word, Interval> cylinders(Iet const& T, std::size_t n) {
    struct Node {
      Word     w;
      Interval S;
      QuadNum  shift;  // T^{|w|} is x -> x + shift on S
    };
    std::map<Word, Interval> out;
    std::vector<Node>        level{{Word(), T.domain(), QuadNum(0)}};
    out.emplace(Word(), T.domain());
    auto const& A = T.alphabet();
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Node> next;
      for (auto const& node : level) {
        for (std::size_t i = 0; i < A.size(); ++i) {
          auto S = node.S.intersect(T.piece(A[i]).shifted(-node.shift));
          if (S.is_empty()) {
            continue;
          }
          Word w = node.w + A[i];
          out.emplace(w, S);
          next.push_back({std::move(w), S, node.shift + T.translation(A[i])});
        }
      }
      level = std::move(next);
    }
    return out;
  }

  std::set<Word> language(Iet const& T, std::size_t n) {
    std::set<Word> out;
    for (auto const& [w, I] : cylinders(T, n)) {
      out.insert(w);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced maps
  ////////////////////////////////////////////////////////////////////////

  FirstReturn first_return(Iet const& T, Interval const& J, QuadNum z, std::size_t cap) {
    if (!J.contains(z)) {
      throw OutsideDomain("point " + z.to_string() + " is not in " + J.to_string());
    }
    if (!T.domain().contains(J)) {
      throw OutsideDomain("interval " + J.to_string() + " is not inside the domain");
    }
    FirstReturn r{z, 0, Word()};
    do {
      if (r.exponent == cap) {
        throw CapExceeded("no return to " + J.to_string() + " within "
                          + std::to_string(cap) + " steps");
      }
      Letter a = T.letter_at(r.point);
      r.path.push_back(a);
      r.point += T.translation(a);
      ++r.exponent;
    } while (!J.contains(r.point));
    return r;
  }

  std::vector<InducedPiece> induced_pieces(Iet const& T, Interval const& J, std::size_t cap) {
    if (J.is_empty() || !T.domain().contains(J)) {
      throw OutsideDomain("cannot induce on " + J.to_string());
    }
    struct Pending {
      Interval dom;  // subset of J
      Interval cur;  // T^k(dom), outside J (or J itself when k = 0)
      Word     path;
    };
    std::vector<InducedPiece> out;
    std::deque<Pending>       work{{J, J, Word()}};
    auto const&               A = T.alphabet();
    while (!work.empty()) {
      auto item = std::move(work.front());
      work.pop_front();
      if (item.path.size() == cap) {
        throw CapExceeded("points of " + item.dom.to_string()
                          + " do not return within " + std::to_string(cap)
                          + " steps");
      }
      for (std::size_t i = 0; i < A.size(); ++i) {
        auto sub = item.cur.intersect(T.piece(A[i]));
        if (sub.is_empty()) {
          continue;
        }
        auto     offset = item.dom.left - item.cur.left;
        auto     next   = sub.shifted(T.translation(A[i]));
        Word     path   = item.path + A[i];
        // points of next came from next + back in J
        QuadNum  back   = offset - T.translation(A[i]);
        auto     inside = next.intersect(J);
        if (!inside.is_empty()) {
          out.push_back({inside.shifted(back), -back, path});
        }
        Interval lo{next.left, std::min(next.right, J.left)};
        Interval hi{std::max(next.left, J.right), next.right};
        for (auto const& part : {lo, hi}) {
          if (!part.is_empty()) {
            work.push_back({part.shifted(back), part, path});
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.domain.left < y.domain.left;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Return words
  ////////////////////////////////////////////////////////////////////////

  ReturnWordScan return_words_scan(Iet const&                 T,
                                   std::string_view           w,
                                   std::optional<std::size_t> horizon,
                                   std::optional<std::size_t> expected) {
    if (w.empty()) {
      throw Error("return words are scanned for a nonempty word");
    }
    auto Iw = cylinder(T, w);
    if (Iw.is_empty()) {
      throw NotInLanguage("\"" + std::string(w) + "\" is not in the language");
    }
    auto const limit  = horizon.value_or(200 * w.size() * T.size());
    auto const target = expected.value_or(T.size());

    ReturnWordScan scan;
    QuadNum        x    = midpoint(Iw.left, Iw.right);
    Word           t;
    std::size_t    last = 0;
    while (t.size() < limit && scan.words.size() < target) {
      Letter a = T.letter_at(x);
      t.push_back(a);
      x += T.translation(a);
      if (t.size() > w.size() && t.compare(t.size() - w.size(), w.size(), w) == 0) {
        auto pos = t.size() - w.size();
        scan.words.insert(t.substr(last, pos - last));
        last = pos;
      }
    }
    scan.scanned  = t.size();
    scan.complete = scan.words.size() >= target;
    return scan;
  }

  bool is_return_word(Iet const& T, std::string_view w, std::string_view u) {
    if (u.empty()) {
      return false;
    }
    if (w.empty()) {
      return u.size() == 1 && T.alphabet().contains(u[0]);
    }
    Word uw(u);
    uw.append(w);
    return uw.compare(0, w.size(), w) == 0 && count_occurrences(uw, w) == 2
           && !cylinder(T, uw).is_empty();
  }

}  // namespace ietw
