#include "ietw/morphism.hpp"

#include <sstream>

namespace ietw {

  Morphism::Morphism(OrderedAlphabet source, OrderedAlphabet target, std::map<Letter, Word> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    for (auto const& [a, img] : images_) {
      if (!source_.contains(a)) {
        throw Error(std::string("image given for '") + a
                    + "', which is not a source letter");
      }
      if (img.empty()) {
        throw Error(std::string("image of '") + a + "' is empty");
      }
      target_.check_word(img);
    }
    for (Letter a : source_.letters()) {
      if (!images_.contains(a)) {
        throw Error(std::string("no image for source letter '") + a + "'");
      }
    }
  }

  Morphism Morphism::identity(OrderedAlphabet const& A) {
    std::map<Letter, Word> images;
    for (Letter a : A.letters()) {
      images[a] = Word(1, a);
    }
    return Morphism(A, A, std::move(images));
  }

  Morphism Morphism::parse(std::string_view spec, std::optional<OrderedAlphabet> target) {
    std::map<Letter, Word> images;
    std::string            keys, used;
    std::size_t            pos = 0;
    while (pos <= spec.size()) {
      auto end   = spec.find(',', pos);
      auto entry = spec.substr(pos, end == std::string_view::npos ? spec.npos : end - pos);
      auto colon = entry.find(':');
      if (colon != 1) {
        throw Error("bad morphism entry \"" + std::string(entry)
                    + "\", expected <letter>:<word>");
      }
      Letter a = entry[0];
      Word   img(entry.substr(2));
      if (images.contains(a)) {
        throw Error(std::string("letter '") + a + "' mapped twice");
      }
      keys.push_back(a);
      for (Letter b : img) {
        if (used.find(b) == std::string::npos) {
          used.push_back(b);
        }
      }
      images[a] = std::move(img);
      if (end == std::string_view::npos) {
        break;
      }
      pos = end + 1;
    }
    OrderedAlphabet src(keys);
    if (!target) {
      // Source letters first, in their order, then any new image letters.
      std::string t = keys;
      for (Letter b : used) {
        if (t.find(b) == std::string::npos) {
          t.push_back(b);
        }
      }
      target = OrderedAlphabet(t);
    }
    return Morphism(std::move(src), *target, std::move(images));
  }

  Word const& Morphism::image(Letter a) const {
    auto it = images_.find(a);
    if (it == images_.end()) {
      throw Error(std::string("'") + a + "' is not a source letter");
    }
    return it->second;
  }

  Word Morphism::operator()(std::string_view w) const {
    Word out;
    for (Letter a : w) {
      out += image(a);
    }
    return out;
  }

  std::string Morphism::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < source_.size(); ++i) {
      os << (i ? "," : "") << source_[i] << ':' << image(source_[i]);
    }
    return os.str();
  }

  namespace {
    Morphism elementary(Letter a, Letter b, OrderedAlphabet const& A, bool tilde) {
      if (a == b) {
        throw Error(std::string("elementary morphism needs distinct letters, got '")
                    + a + "' twice");
      }
      A.index(a);
      A.index(b);
      std::map<Letter, Word> images;
      for (Letter c : A.letters()) {
        images[c] = Word(1, c);
      }
      images[a] = tilde ? Word{b, a} : Word{a, b};
      return Morphism(A, A, std::move(images));
    }
  }  // namespace

  Morphism make_alpha(Letter a, Letter b, OrderedAlphabet const& A) {
    return elementary(a, b, A, false);
  }

  Morphism make_alpha_tilde(Letter a, Letter b, OrderedAlphabet const& A) {
    return elementary(a, b, A, true);
  }

  Morphism compose(Morphism const& f, Morphism const& g) {
    if (!(f.source() == g.target())) {
      throw Error("cannot compose: source \"" + f.source().letters()
                  + "\" differs from target \"" + g.target().letters() + "\"");
    }
    std::map<Letter, Word> images;
    for (Letter a : g.source().letters()) {
      images[a] = f(g.image(a));
    }
    return Morphism(g.source(), f.target(), std::move(images));
  }

  Morphism rename(Permutation const& mu, OrderedAlphabet const& A) {
    if (mu.size() != A.size()) {
      throw Error("renaming permutation size does not match alphabet");
    }
    std::string            target;
    std::map<Letter, Word> images;
    for (std::size_t i = 0; i < A.size(); ++i) {
      target.push_back(A[mu(i)]);
      images[A[i]] = Word(1, A[mu(i)]);
    }
    return Morphism(A, OrderedAlphabet(target), std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Clustering-preserving cases
  ////////////////////////////////////////////////////////////////////////

  namespace {
    [[noreturn]] void violated(ClusteringCase c, std::string const& clause) {
      throw PreconditionError("case " + std::to_string(static_cast<int>(c))
                              + " precondition failed: " + clause);
    }
  }  // namespace

  OrderedAlphabet clustering_case_target(ClusteringCase                         c,
                                         Letter                            a,
                                         Letter                            b,
                                         Permutation const&                pi,
                                         OrderedAlphabet const&            A,
                                         std::optional<Permutation> const& mu) {
    auto const d = A.size();
    if (pi.size() != d) {
      throw Error("permutation size does not match alphabet");
    }
    if (c == ClusteringCase::rename) {
      if (!mu) {
        violated(c, "a renaming permutation is required");
      }
      return rename(*mu, A).target();
    }
    if (a == b) {
      violated(c, "a and b must be distinct");
    }
    auto const ia   = A.index(a);
    auto const ib   = A.index(b);
    auto const inv  = pi.inverse();
    auto const pa   = inv(ia);  // position of a in the image order
    auto const pb   = inv(ib);
    std::string const& L = A.letters();

    switch (c) {
      case ClusteringCase::alpha_first:
        if (ib != 0) {
          violated(c, "b must be the smallest letter a_1");
        }
        if (pb != pa + 1) {
          violated(c, "b must immediately follow a in the image order");
        }
        return A;
      case ClusteringCase::alpha_last:
        if (ib != d - 1) {
          violated(c, "b must be the largest letter a_d");
        }
        if (pa != pb + 1) {
          violated(c, "a must immediately follow b in the image order");
        }
        return A;
      case ClusteringCase::tilde_first: {
        if (pb != 0) {
          violated(c, "b must be first in the image order");
        }
        if (ib != ia + 1) {
          violated(c, "b must immediately follow a in the alphabet");
        }
        // a becomes the smallest letter
        std::string t(1, a);
        t += L.substr(0, ia);
        t += L.substr(ia + 1);
        return OrderedAlphabet(t);
      }
      case ClusteringCase::tilde_last: {
        if (pb != d - 1) {
          violated(c, "b must be last in the image order");
        }
        if (ia != ib + 1) {
          violated(c, "a must immediately follow b in the alphabet");
        }
        // a becomes the largest letter
        std::string t = L.substr(0, ia);
        t += L.substr(ia + 1);
        t.push_back(a);
        return OrderedAlphabet(t);
      }
      case ClusteringCase::rename:
        break;
    }
    throw Error("unknown clustering case");
  }

  Morphism clustering_case_morphism(ClusteringCase                         c,
                                    Letter                            a,
                                    Letter                            b,
                                    Permutation const&                pi,
                                    OrderedAlphabet const&            A,
                                    std::optional<Permutation> const& mu) {
    auto target = clustering_case_target(c, a, b, pi, A, mu);
    if (c == ClusteringCase::rename) {
      return rename(*mu, A);
    }
    bool tilde = c == ClusteringCase::tilde_first || c == ClusteringCase::tilde_last;
    auto f     = tilde ? make_alpha_tilde(a, b, A) : make_alpha(a, b, A);
    std::map<Letter, Word> images;
    for (Letter x : A.letters()) {
      images[x] = f.image(x);
    }
    return Morphism(A, std::move(target), std::move(images));
  }

}  // namespace ietw
