#ifndef GINLAB_PARSE_HPP
#define GINLAB_PARSE_HPP

#include <string>
#include <vector>

#include "ginlab/ring.hpp"

namespace ginlab {

// Polynomial expression grammar (whitespace insignificant):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | number '/' number | var ['^' int] | '(' poly ')' ['^' int]
// Coefficients are integers or a/b fractions; parenthesized sub-expressions
// are expanded. Errors carry the 0-based character position.
Polynomial parse_poly(const RingCtx& ctx, const std::string& text,
                      TermOrder order = TermOrder::degrevlex);

// Line-oriented ideal file:
//   # comment
//   ring: n=<int> field=<Q|Fp:prime>
//   vars: a b c           (optional)
//   order: <degrevlex|deglex|lex>   (optional, defaults to degrevlex)
//   gens:
//   <one polynomial per line>
struct IdealFile {
    RingCtx ring;
    TermOrder order = TermOrder::degrevlex;
    std::vector<Polynomial> gens;
    std::vector<std::string> gen_texts;
};

IdealFile parse_ideal_text(const std::string& text);
IdealFile parse_ideal_file(const std::string& path);

} // namespace ginlab

#endif
