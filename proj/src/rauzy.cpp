#include "ietw/rauzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace ietw {

  std::string to_string(StepKind k) {
    return k == StepKind::right ? "right" : "left";
  }

  std::string to_string(StepCase c) {
    return c == StepCase::top_longer ? "top_longer" : "top_shorter";
  }

  namespace {

    std::string erase_letter(std::string s, Letter a) {
      s.erase(s.find(a), 1);
      return s;
    }

    std::string insert_after(std::string s, Letter anchor, Letter a) {
      s.insert(s.find(anchor) + 1, 1, a);
      return s;
    }

    std::string insert_before(std::string s, Letter anchor, Letter a) {
      s.insert(s.find(anchor), 1, a);
      return s;
    }

    void ensure(bool ok, std::string const& what) {
      if (!ok) {
        throw std::logic_error("Rauzy step postcondition violated: " + what);
      }
    }

    // The combinatorial update each step must agree with.
    void check_step_contract(Iet const& before, Iet const& after, StepRecord const& s) {
      auto const& A     = before.alphabet().letters();
      auto const  img   = before.image_order();
      auto const  lp    = before.length(s.pivot);
      auto const  lq    = before.length(s.partner);
      bool const  right = s.kind == StepKind::right;

      std::string want_alphabet = A;
      std::string want_image    = img;
      Letter      shrunk        = s.pivot;
      QuadNum     new_len       = lp - lq;
      if (s.step_case == StepCase::top_longer) {
        auto rest  = erase_letter(img, s.partner);
        want_image = right ? insert_after(rest, s.pivot, s.partner)
                           : insert_before(rest, s.pivot, s.partner);
      } else {
        auto rest     = erase_letter(A, s.pivot);
        want_alphabet = right ? insert_after(rest, s.partner, s.pivot)
                              : insert_before(rest, s.partner, s.pivot);
        shrunk  = s.partner;
        new_len = lq - lp;
      }
      ensure(after.alphabet().letters() == want_alphabet,
             "alphabet " + after.alphabet().letters() + ", expected " + want_alphabet);
      ensure(after.image_order() == want_image,
             "image order " + after.image_order() + ", expected " + want_image);
      for (Letter a : A) {
        auto want = a == shrunk ? new_len : before.length(a);
        ensure(after.length(a) == want, std::string("length of ") + a);
      }
    }

  }  // namespace

  RauzyStep rauzy_step(Iet const& T, StepKind kind) {
    auto const d = T.size();
    if (d < 2) {
      throw DegenerateStep("a Rauzy step needs at least two letters");
    }
    bool const  right   = kind == StepKind::right;
    auto const& A       = T.alphabet();
    auto const  img     = T.image_order();
    Letter      pivot   = right ? A.back() : A.front();
    Letter      partner = right ? img.back() : img.front();
    if (pivot == partner) {
      throw DegenerateStep(std::string("the permutation fixes the ")
                           + (right ? "last" : "first") + " letter '" + pivot + "'");
    }
    auto const& lp = T.length(pivot);
    auto const& lq = T.length(partner);
    if (lp == lq) {
      throw ZeroConnection(std::string("pieces '") + pivot + "' and '" + partner
                           + "' have equal length " + lp.to_string());
    }
    bool const top_longer = lp > lq;
    auto const cut        = top_longer ? lq : lp;
    auto const D          = T.domain();
    Interval   J = right ? Interval{D.left, D.right - cut} : Interval{D.left + cut, D.right};

    std::vector<InducedPiece> pieces;
    try {
      pieces = induced_pieces(T, J, 2);
    } catch (CapExceeded const&) {
      throw DegenerateStep("first return to " + J.to_string() + " takes more than two steps");
    }
    if (pieces.size() != d) {
      throw DegenerateStep("induced map has " + std::to_string(pieces.size())
                           + " pieces, expected " + std::to_string(d));
    }

    // Pieces returning in one step keep their letter; the single piece that
    // needs two steps takes the letter left over.
    std::string names(d, '\0');
    std::string taken;
    std::size_t doubled = d;
    for (std::size_t k = 0; k < d; ++k) {
      auto const& path = pieces[k].path;
      if (path.size() == 1) {
        if (taken.find(path[0]) != std::string::npos) {
          throw DegenerateStep(std::string("two pieces return through '") + path[0] + "'");
        }
        names[k] = path[0];
        taken.push_back(path[0]);
      } else if (doubled == d) {
        doubled = k;
      } else {
        throw DegenerateStep("more than one piece needs two steps to return");
      }
    }
    if (doubled == d) {
      throw DegenerateStep("no piece needs two steps to return");
    }
    for (Letter a : A.letters()) {
      if (taken.find(a) == std::string::npos) {
        names[doubled] = a;
      }
    }
    ensure(pieces[doubled].path == std::string{partner, pivot},
           "two-step path " + pieces[doubled].path);

    OrderedAlphabet      post(names);
    std::vector<QuadNum> lengths;
    for (auto const& p : pieces) {
      lengths.push_back(p.domain.length());
    }
    std::vector<std::size_t> by_image(d);
    for (std::size_t k = 0; k < d; ++k) {
      by_image[k] = k;
    }
    std::sort(by_image.begin(), by_image.end(), [&](auto x, auto y) {
      return pieces[x].domain.left + pieces[x].translation
             < pieces[y].domain.left + pieces[y].translation;
    });
    Iet result(post, Permutation(by_image), std::move(lengths), J.left);
    for (std::size_t k = 0; k < d; ++k) {
      ensure(result.translation(names[k]) == pieces[k].translation,
             std::string("translation of ") + names[k]);
    }

    StepRecord rec{kind,
                   top_longer ? StepCase::top_longer : StepCase::top_shorter,
                   pivot,
                   partner,
                   A,
                   post};
    check_step_contract(T, result, rec);
    return {std::move(result), std::move(rec)};
  }

  RauzyStep rauzy_right(Iet const& T) {
    return rauzy_step(T, StepKind::right);
  }

  RauzyStep rauzy_left(Iet const& T) {
    return rauzy_step(T, StepKind::left);
  }

  Morphism step_morphism(StepRecord const& s) {
    std::map<Letter, Word> images;
    for (Letter a : s.pre_alphabet.letters()) {
      images[a] = Word(1, a);
    }
    if (s.step_case == StepCase::top_longer) {
      images[s.partner] = Word{s.partner, s.pivot};
    } else {
      images[s.pivot] = Word{s.partner, s.pivot};
    }
    return Morphism(s.post_alphabet, s.pre_alphabet, std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Induction onto a cylinder
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Search {
      Interval                target;
      std::size_t             cap;
      StepKind                prefer;
      std::size_t             budget;
      std::vector<StepRecord> steps;
      std::vector<Iet>        stages;

      bool run(Iet const& cur) {
        if (cur.domain() == target) {
          return true;
        }
        if (steps.size() == cap || budget == 0) {
          return false;
        }
        auto other = prefer == StepKind::right ? StepKind::left : StepKind::right;
        for (auto kind : {prefer, other}) {
          if (budget == 0) {
            break;
          }
          --budget;
          std::optional<RauzyStep> step;
          try {
            step = rauzy_step(cur, kind);
          } catch (ZeroConnection const&) {
            continue;
          } catch (DegenerateStep const&) {
            continue;
          }
          if (!step->result.domain().contains(target)) {
            continue;
          }
          steps.push_back(step->record);
          stages.push_back(step->result);
          if (run(stages.back())) {
            return true;
          }
          steps.pop_back();
          stages.pop_back();
        }
        return false;
      }
    };

  }  // namespace

  InductionTrace induce_to_cylinder(Iet const& T, std::string_view w, InductionOptions const& opts) {
    auto target = cylinder(T, w);
    if (target.is_empty()) {
      throw NotInLanguage("\"" + std::string(w) + "\" is not in the language");
    }
    if (opts.keane_depth > 0) {
      auto verdict = check_keane(T, opts.keane_depth);
      if (!verdict.regular()) {
        auto const& c = *verdict.failure;
        throw KeaneFailure("connection " + c.from.to_string() + " -> "
                           + c.to.to_string() + " after "
                           + std::to_string(c.steps) + " steps");
      }
    }
    auto const cap = opts.cap.value_or(64 * (w.size() + 1));
    Search     search{target, cap, opts.prefer, 64 * cap, {}, {}};
    search.stages.reserve(cap + 1);  // run() holds references into stages
    search.stages.push_back(T);
    if (!search.run(T)) {
      throw CapExceeded("no sequence of at most " + std::to_string(cap)
                        + " Rauzy steps reaches the cylinder of \""
                        + std::string(w) + "\"");
    }
    auto theta = Morphism::identity(T.alphabet());
    for (auto const& s : search.steps) {
      theta = compose(theta, step_morphism(s));
    }
    Iet final = search.stages.back();
    return {std::move(search.steps), std::move(search.stages), std::move(final), std::move(theta)};
  }

  std::set<Word> return_words_induction(Iet const& T, std::string_view w, InductionOptions const& opts) {
    auto           trace = induce_to_cylinder(T, w, opts);
    std::set<Word> out;
    for (Letter a : trace.theta.source().letters()) {
      out.insert(trace.theta.image(a));
    }
    return out;
  }

}  // namespace ietw
