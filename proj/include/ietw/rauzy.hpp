// Two-sided Rauzy induction: single right/left steps computed as exact
// first-return maps, the morphism each step contributes, and induction
// onto a cylinder.

#ifndef IETW_RAUZY_HPP_
#define IETW_RAUZY_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "iet.hpp"
#include "morphism.hpp"

namespace ietw {

  enum class StepKind { right, left };
  enum class StepCase { top_longer, top_shorter };

  // Raised when the pivot and partner pieces have equal length.
  class ZeroConnection : public Error {
   public:
    using Error::Error;
  };

  // Raised when the pivot letter is its own partner (the permutation fixes
  // the end), or the induced map is not a d-interval exchange.
  class DegenerateStep : public Error {
   public:
    using Error::Error;
  };

  struct StepRecord {
    StepKind        kind;
    StepCase        step_case;
    Letter          pivot;    // a_d (right) or a_1 (left) before the step
    Letter          partner;  // last (right) or first (left) image letter
    OrderedAlphabet pre_alphabet;
    OrderedAlphabet post_alphabet;
  };

  struct RauzyStep {
    Iet        result;
    StepRecord record;
  };

  RauzyStep rauzy_right(Iet const& T);
  RauzyStep rauzy_left(Iet const& T);
  RauzyStep rauzy_step(Iet const& T, StepKind kind);

  // α_{partner,pivot} when the top piece is longer, ᾱ_{pivot,partner}
  // otherwise; maps the post-step alphabet to the pre-step one.
  Morphism step_morphism(StepRecord const& s);

  struct InductionTrace {
    std::vector<StepRecord> steps;
    std::vector<Iet>        stages;  // stages[0] = T, stages[i+1] after steps[i]
    Iet                     final;
    Morphism                theta;   // θ_1 ∘ ... ∘ θ_n
  };

  struct InductionOptions {
    // Maximum number of steps; default 64·(|w|+1).
    std::optional<std::size_t> cap;
    // Branch tried first at every node.
    StepKind prefer = StepKind::right;
    // Depth of the connection check run before inducing; 0 skips it.
    std::size_t keane_depth = 1000;
  };

  class KeaneFailure : public Error {
   public:
    using Error::Error;
  };

  // Rauzy steps whose domains all contain I_w and whose last domain is I_w,
  // found by depth-first search.
  InductionTrace induce_to_cylinder(Iet const&              T,
                                    std::string_view        w,
                                    InductionOptions const& opts = {});

  // {θ(a) : a a letter}.
  std::set<Word> return_words_induction(Iet const&              T,
                                        std::string_view        w,
                                        InductionOptions const& opts = {});

  std::string to_string(StepKind k);
  std::string to_string(StepCase c);

}  // namespace ietw

#endif  // IETW_RAUZY_HPP_
