// IET spec files, the return-word verification harness, and its reports.

#ifndef IETW_CLI_HPP_
#define IETW_CLI_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "iet.hpp"
#include "words.hpp"

namespace ietw {

  class ParseError : public Error {
   public:
    ParseError(std::string const& source, std::size_t line, std::string const& what);

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  // Grammar, one "key = value" per line, '#' starts a comment:
  //   d = 5
  //   alphabet = abc
  //   pi = bca            (or cycles, "(a c b)")
  //   len.a = (-2, 1, 1)  (one per letter)
  //   origin = (0)        (optional)
  Iet parse_iet_text(std::string_view text, std::string const& source = "<input>");
  Iet parse_iet_file(std::string const& path);

  // Inverse of parse_iet_text.
  std::string format_iet(Iet const& T);

  struct ReturnWordCheck {
    Word        return_word;
    Word        bwt;
    std::string blocks;  // block order when clustering
    bool        clustering    = false;
    bool        pi_clustering = false;
    bool        perfect       = false;
  };

  struct WordRecord {
    Word                         w;
    bool                         method_agreement = false;
    std::set<Word>               induction;
    std::set<Word>               scan;
    std::vector<ReturnWordCheck> checks;  // one per induction return word
    std::string                  steps;   // "r"/"l" per Rauzy step
    std::string                  theta;
    std::optional<std::string>   error;
  };

  struct Failure {
    Word                word;
    std::optional<Word> return_word;
    std::optional<Word> bwt;
    std::string         reason;
  };

  struct VerificationReport {
    std::string              instance;
    std::size_t              max_len     = 0;
    std::size_t              keane_depth = 0;
    std::size_t              words_checked = 0;
    bool                     trace = false;
    std::vector<Failure>     failures;
    std::vector<WordRecord>  records;  // sorted shortlex

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  struct VerifyOptions {
    std::size_t                max_len = 4;
    std::size_t                keane_depth = 1000;
    std::optional<std::size_t> induction_cap;
    unsigned                   threads = 1;
    bool                       trace   = false;
  };

  // Defaults overridable through IETW_KEANE_DEPTH and IETW_INDUCTION_CAP.
  VerifyOptions default_verify_options();

  // Every w in language(T, max_len), ε included.  Throws KeaneFailure
  // (from rauzy.hpp) when T has a connection within keane_depth.
  VerificationReport verify_main_theorem(Iet const& T, VerifyOptions const& opts);

  enum class ReportFormat { text, json };

  // Deterministic: equal reports serialize to equal bytes.
  std::string emit_report(VerificationReport const& r, ReportFormat format);

}  // namespace ietw

#endif  // IETW_CLI_HPP_
