#include "ietw/extgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ietw {

  LanguageSample::LanguageSample(std::set<Word>  factors,
                                 std::size_t     max_len,
                                 OrderedAlphabet alphabet,
                                 std::string     source)
      : factors_(std::move(factors)),
        max_len_(max_len),
        alphabet_(std::move(alphabet)),
        source_(std::move(source)) {
    for (auto const& f : factors_) {
      alphabet_.check_word(f);
      if (f.size() > max_len_) {
        throw Error("factor \"" + f + "\" exceeds the sample bound");
      }
    }
  }

  namespace {

    OrderedAlphabet letters_of(std::vector<Word> const& words) {
      std::string s;
      for (auto const& w : words) {
        s += w;
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return OrderedAlphabet(s);
    }

    void add_periodic_factors(std::set<Word>& out, std::string_view w, std::size_t max_len) {
      if (w.empty()) {
        throw Error("a periodic language needs a nonempty period");
      }
      Word big;
      while (big.size() < w.size() + max_len) {
        big.append(w);
      }
      for (std::size_t len = 1; len <= max_len; ++len) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          out.insert(big.substr(i, len));
        }
      }
    }

  }  // namespace

  LanguageSample sample_from_periodic(std::string_view w, std::size_t max_len, std::optional<OrderedAlphabet> A) {
    return sample_from_multiset({Word(w)}, max_len, std::move(A));
  }

  LanguageSample sample_from_multiset(std::vector<Word> const&       words,
                                      std::size_t                    max_len,
                                      std::optional<OrderedAlphabet> A) {
    if (words.empty()) {
      throw Error("a multiset language needs at least one word");
    }
    std::set<Word> factors{Word()};
    std::string    source;
    for (auto const& w : words) {
      add_periodic_factors(factors, w, max_len);
      source += (source.empty() ? "" : ",") + w;
    }
    auto alphabet = A ? *A : letters_of(words);
    auto kind     = words.size() == 1 ? "periodic:" : "multiset:";
    return LanguageSample(std::move(factors), max_len, std::move(alphabet), kind + source);
  }

  LanguageSample sample_from_iet(Iet const& T, std::size_t max_len) {
    return LanguageSample(language(T, max_len), max_len, T.alphabet(), "iet");
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphs
  ////////////////////////////////////////////////////////////////////////

  ExtensionGraph extension_graph(LanguageSample const& S, std::string_view v) {
    if (v.size() + 2 > S.max_len()) {
      throw Error("sample of depth " + std::to_string(S.max_len())
                  + " is too short for the extension graph of a word of length "
                  + std::to_string(v.size()));
    }
    ExtensionGraph g;
    auto const&    A = S.alphabet();
    Word           buf;
    for (Letter a : A.letters()) {
      buf = Word(1, a) + Word(v);
      if (S.contains(buf)) {
        g.left.push_back(a);
      }
      buf = Word(v) + a;
      if (S.contains(buf)) {
        g.right.push_back(a);
      }
    }
    for (Letter a : g.left) {
      for (Letter b : g.right) {
        buf = Word(1, a) + Word(v) + b;
        if (S.contains(buf)) {
          g.edges.emplace(a, b);
        }
      }
    }
    return g;
  }

  bool is_forest(ExtensionGraph const& g) {
    // Union-find over left vertices 0..|L|-1 and right vertices |L|..
    std::vector<std::size_t> parent(g.left.size() + g.right.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& [a, b] : g.edges) {
      auto x = find(g.left.find(a));
      auto y = find(g.left.size() + g.right.find(b));
      if (x == y) {
        return false;
      }
      parent[x] = y;
    }
    return true;
  }

  bool is_tree(ExtensionGraph const& g) {
    auto vertices = g.left.size() + g.right.size();
    return vertices > 0 && is_forest(g) && g.edges.size() + 1 == vertices;
  }

  bool is_compatible(ExtensionGraph const&  g,
                     OrderedAlphabet const& left_order,
                     OrderedAlphabet const& right_order) {
    for (auto const& [a, b] : g.edges) {
      for (auto const& [c, d] : g.edges) {
        if (left_order.index(a) < left_order.index(c)
            && right_order.index(b) > right_order.index(d)) {
          return false;
        }
      }
    }
    return true;
  }

  OrderedAlphabet order_from_permutation(Permutation const& pi, OrderedAlphabet const& A) {
    return OrderedAlphabet(to_one_line(pi, A));
  }

  bool is_bispecial(LanguageSample const& S, std::string_view v) {
    auto g = extension_graph(S, v);
    return g.left.size() >= 2 && g.right.size() >= 2;
  }

  namespace {
    std::vector<Word> shortlex_upto(LanguageSample const& S, std::size_t depth) {
      if (depth + 2 > S.max_len()) {
        throw Error("classification to depth " + std::to_string(depth)
                    + " needs a sample of depth at least "
                    + std::to_string(depth + 2));
      }
      std::vector<Word> out;
      for (auto const& v : S.factors()) {
        if (v.size() <= depth) {
          out.push_back(v);
        }
      }
      std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return x.size() < y.size();
      });
      return out;
    }
  }  // namespace

  Classification classify(LanguageSample const&  S,
                          OrderedAlphabet const& left_order,
                          OrderedAlphabet const& right_order,
                          std::size_t            depth) {
    Classification c;
    c.depth = depth;
    for (auto const& v : shortlex_upto(S, depth)) {
      auto g = extension_graph(S, v);
      if (!is_tree(g)) {
        c.dendric = false;
        if (!c.not_tree) {
          c.not_tree = v;
        }
      }
      if (!is_forest(g)) {
        c.alsinic = false;
        if (!c.not_forest) {
          c.not_forest = v;
        }
      }
      if (!is_compatible(g, left_order, right_order) && !c.incompatible) {
        c.incompatible = v;
      }
    }
    c.ordered_dendric = c.dendric && !c.incompatible;
    c.ordered_alsinic = c.alsinic && !c.incompatible;
    return c;
  }

  bool bispecial_compatible(LanguageSample const&  S,
                            OrderedAlphabet const& left_order,
                            OrderedAlphabet const& right_order,
                            std::size_t            depth) {
    for (auto const& v : shortlex_upto(S, depth)) {
      auto g = extension_graph(S, v);
      if (g.left.size() >= 2 && g.right.size() >= 2
          && !is_compatible(g, left_order, right_order)) {
        return false;
      }
    }
    return true;
  }

  std::string edge_list(ExtensionGraph const& g) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto const& [a, b] : g.edges) {
      os << (first ? "" : ", ") << '(' << a << ',' << b << ')';
      first = false;
    }
    os << '}';
    return os.str();
  }

  std::string render(ExtensionGraph const&  g,
                     OrderedAlphabet const& left_order,
                     OrderedAlphabet const& right_order) {
    std::vector<Edge> edges(g.edges.begin(), g.edges.end());
    std::sort(edges.begin(), edges.end(), [&](Edge const& x, Edge const& y) {
      auto kx = std::make_pair(left_order.index(x.first), right_order.index(x.second));
      auto ky = std::make_pair(left_order.index(y.first), right_order.index(y.second));
      return kx < ky;
    });
    std::ostringstream os;
    os << "  L  (" << left_order.letters() << ")    R  (" << right_order.letters() << ")\n";
    Letter prev = 0;
    for (auto const& [a, b] : edges) {
      os << "  " << (a == prev ? ' ' : a) << " ----- " << b << '\n';
      prev = a;
    }
    return os.str();
  }

}  // namespace ietw
