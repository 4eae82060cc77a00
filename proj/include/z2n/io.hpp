#pragma once

#include <string>
#include <vector>

#include "z2n/gmatrix.hpp"
#include "z2n/grassmann.hpp"
#include "z2n/linmap.hpp"
#include "z2n/linspace.hpp"
#include "z2n/points.hpp"

namespace z2n {

// ---- canonical printing ----------------------------------------------------

// Name of flat coordinate `flat` of a shape: base coordinates are x1..xp,
// formal coordinates are "<degree-bits><1-based index>".
std::string coord_name(const GradedShape& shape, std::size_t flat);

std::string print_algebra(const AlgebraSpec& alg);
std::string print_matrix(const GMatrix& x);
std::string print_point(const LambdaPoint& x);
std::string print_series(const CoordSeries& s, const GradedShape& src);
std::string print_morphism(const Morphism& m);
std::string print_linmap(const BlockDiagMap& l);
std::string print_sym_word(const SymWord& w, int n);

// ---- parsing ---------------------------------------------------------------

// Line-oriented reader over a whole document: '#' starts a comment, blank
// lines are skipped, line/column positions are tracked for errors.
class Reader {
public:
    explicit Reader(const std::string& text);
    bool eof() const;
    // Next non-blank line (without consuming).
    const std::string& peek_line() const;
    int peek_line_number() const;
    std::string next_line();

private:
    std::vector<std::pair<int, std::string>> lines_;
    std::size_t pos_ = 0;
};

AlgebraPtr parse_algebra(Reader& r);
AlgebraPtr parse_algebra(const std::string& line);
GElement parse_element(const std::string& text, const AlgebraPtr& alg, int line_no = 1);
GradedShape parse_shape(const std::string& text);
GMatrix parse_matrix(Reader& r, const AlgebraPtr& alg);
LambdaPoint parse_point(Reader& r, const AlgebraPtr& alg);
Morphism parse_morphism(Reader& r);
BlockDiagMap parse_linmap(Reader& r);

} // namespace z2n
