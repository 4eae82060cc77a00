#include "z2n/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace z2n {

// ---- canonical printing ----------------------------------------------------

std::string coord_name(const GradedShape& shape, std::size_t flat) {
    const std::size_t b = shape.block_of(flat);
    if (b == 0) return "x" + std::to_string(flat + 1);
    const int n = shape.rank_n();
    return Degree::from_index(n, b).to_string() +
           std::to_string(flat - shape.offset(b) + 1);
}

std::string print_algebra(const AlgebraSpec& alg) {
    std::string s = "algebra n=" + std::to_string(alg.n()) + " gens";
    for (std::size_t j = 1; j < alg.num_degrees(); ++j)
        s += " " + alg.degree(j).to_string() + "*" + std::to_string(alg.gen_counts()[j - 1]);
    s += " cap=" + std::to_string(alg.cap());
    return s;
}

std::string print_matrix(const GMatrix& x) {
    std::string s = "matrix deg=" + x.degree().to_string() +
                    " rows=" + x.row_shape().to_string() +
                    " cols=" + x.col_shape().to_string() + "\n";
    for (std::size_t r = 0; r < x.num_rows(); ++r) {
        for (std::size_t c = 0; c < x.num_cols(); ++c) {
            if (c) s += " ; ";
            s += x.entry(r, c).to_string();
        }
        s += "\n";
    }
    return s;
}

std::string print_point(const LambdaPoint& x) {
    std::string s = "point shape=" + x.shape.to_string() + "\n";
    for (std::size_t c = 0; c < x.components.size(); ++c) {
        if (c) s += " ; ";
        s += x.components[c].to_string();
    }
    s += "\n";
    return s;
}

std::string print_series(const CoordSeries& s, const GradedShape& src) {
    const std::size_t p = src.counts[0];
    struct Term {
        XiMono xi;
        std::vector<std::uint32_t> base;
        Rational coef;
    };
    std::vector<Term> terms;
    for (const auto& [xi, poly] : s.terms)
        for (const auto& [e, c] : poly.terms()) terms.push_back({xi, e, c});
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        const bool neg = t.coef < 0;
        const Rational a = neg ? Rational(-t.coef) : t.coef;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string factors;
        for (std::size_t i = 0; i < p; ++i) {
            if (t.base[i] == 0) continue;
            if (!factors.empty()) factors += " ";
            factors += "x" + std::to_string(i + 1);
            if (t.base[i] > 1) factors += "^" + std::to_string(t.base[i]);
        }
        for (std::size_t i = 0; i < t.xi.size(); ++i) {
            if (t.xi[i] == 0) continue;
            if (!factors.empty()) factors += " ";
            factors += coord_name(src, p + i);
            if (t.xi[i] > 1) factors += "^" + std::to_string(t.xi[i]);
        }
        if (factors.empty()) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += factors;
        } else {
            out += rat_to_string(a) + " " + factors;
        }
    }
    return out;
}

std::string print_morphism(const Morphism& m) {
    std::string s = "morphism src=" + m.source_shape.to_string() +
                    " tgt=" + m.target_shape.to_string() +
                    " cap=" + std::to_string(m.cap) + "\n";
    for (std::size_t c = 0; c < m.pullbacks.size(); ++c)
        s += coord_name(m.target_shape, c) + " <- " +
             print_series(m.pullbacks[c], m.source_shape) + "\n";
    return s;
}

std::string print_linmap(const BlockDiagMap& l) {
    std::string s = "linmap src=" + l.src.to_string() + " tgt=" + l.tgt.to_string() + "\n";
    const int n = l.src.rank_n();
    for (std::size_t i = 0; i < l.blocks.size(); ++i) {
        if (l.tgt.counts[i] == 0 || l.src.counts[i] == 0) continue;
        s += "block " + Degree::from_index(n, i).to_string() + ":\n";
        for (const auto& row : l.blocks[i]) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) s += " ";
                s += rat_to_string(row[c]);
            }
            s += "\n";
        }
    }
    return s;
}

std::string print_sym_word(const SymWord& w, int n) {
    if (w.factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i) s += " ";
        s += Degree::from_index(n, w.factors[i].first).to_string() +
             std::to_string(w.factors[i].second + 1);
    }
    return s;
}

// ---- reader ----------------------------------------------------------------

Reader::Reader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        if (!blank) lines_.emplace_back(no, line);
    }
}

bool Reader::eof() const { return pos_ >= lines_.size(); }

const std::string& Reader::peek_line() const {
    if (eof()) {
        static const std::string empty;
        return empty;
    }
    return lines_[pos_].second;
}

int Reader::peek_line_number() const { return eof() ? -1 : lines_[pos_].first; }

std::string Reader::next_line() {
    if (eof()) throw SyntaxError(-1, 1, "unexpected end of input");
    return lines_[pos_++].second;
}

// ---- expression parsing ----------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// Parse context for coordinate series over a graded shape.
struct ExprCtx {
    GradedShape shape;
    FormalFrame frame;
    unsigned cap;
    int n;
};

struct Scan {
    const std::string& s;
    int line;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    int col() const { return static_cast<int>(i) + 1; }
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(line, col(), msg); }

    std::string read_digits() {
        std::string t;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t += s[i++];
        return t;
    }
};

CoordSeries cs_constant(const ExprCtx& ctx, const Rational& c) {
    CoordSeries out;
    if (c != 0)
        out.terms.emplace(XiMono(ctx.frame.num_formal(), 0),
                          Polynomial::constant(ctx.shape.counts[0], c));
    return out;
}

CoordSeries parse_series(const ExprCtx& ctx, Scan& sc);

// Returns the series and, for a bare formal coordinate, its index.
CoordSeries parse_atom(const ExprCtx& ctx, Scan& sc, long& formal_coord) {
    formal_coord = -1;
    const char c = sc.peek();
    if (c == '(') {
        ++sc.i;
        CoordSeries inner = parse_series(ctx, sc);
        if (sc.peek() != ')') sc.fail("expected ')'");
        ++sc.i;
        return inner;
    }
    if (c == 'x') {
        ++sc.i;
        const int col0 = sc.col();
        const std::string d = sc.read_digits();
        if (d.empty()) throw SyntaxError(sc.line, col0, "expected base variable index");
        const std::size_t k = std::stoull(d);
        if (k < 1 || k > ctx.shape.counts[0])
            throw SyntaxError(sc.line, col0, "base variable x" + d + " out of range");
        CoordSeries out;
        out.terms.emplace(XiMono(ctx.frame.num_formal(), 0),
                          Polynomial::variable(ctx.shape.counts[0], k - 1));
        return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        const int col0 = sc.col();
        const std::string d = sc.read_digits();
        // A digit token is a formal coordinate when it decomposes as
        // <n bits><valid 1-based index>; otherwise it is a number.
        if (d.size() > static_cast<std::size_t>(ctx.n)) {
            const std::string bits = d.substr(0, ctx.n);
            const std::string idx = d.substr(ctx.n);
            if (bits.find_first_not_of("01") == std::string::npos) {
                const Degree deg = Degree::from_string(bits);
                const std::size_t b = deg.index();
                if (b != 0 && idx[0] != '0') {
                    const std::size_t k = std::stoull(idx);
                    if (k >= 1 && k <= ctx.shape.counts[b]) {
                        const std::size_t flat = ctx.shape.offset(b) + k - 1;
                        formal_coord = static_cast<long>(flat - ctx.shape.counts[0]);
                        CoordSeries out;
                        XiMono m(ctx.frame.num_formal(), 0);
                        m[formal_coord] = 1;
                        out.terms.emplace(m, Polynomial::constant(ctx.shape.counts[0], 1));
                        return out;
                    }
                }
            }
        }
        // Rational literal.
        Rational num(d);
        if (sc.i < sc.s.size() && sc.s[sc.i] == '/') {
            ++sc.i;
            const std::string den = sc.read_digits();
            if (den.empty()) throw SyntaxError(sc.line, sc.col(), "expected denominator");
            if (Rational(den) == 0) throw SyntaxError(sc.line, col0, "zero denominator");
            num /= Rational(den);
        }
        return cs_constant(ctx, num);
    }
    sc.fail("expected a number, coordinate, or '('");
}

CoordSeries parse_factor(const ExprCtx& ctx, Scan& sc) {
    long formal_coord = -1;
    CoordSeries base = parse_atom(ctx, sc, formal_coord);
    if (sc.peek() == '^') {
        ++sc.i;
        const int col0 = sc.col();
        const std::string d = sc.read_digits();
        if (d.empty()) throw SyntaxError(sc.line, col0, "expected exponent");
        const std::uint32_t k = static_cast<std::uint32_t>(std::stoul(d));
        if (formal_coord >= 0 && k > 1 && ctx.frame.odd[formal_coord])
            throw ParityViolation("coordinate " +
                                  coord_name(ctx.shape,
                                             ctx.shape.counts[0] + formal_coord) +
                                  " has odd self-pairing; exponent must be 0 or 1 (line " +
                                  std::to_string(sc.line) + ")");
        return cs_pow(ctx.frame, base, k, ctx.cap);
    }
    return base;
}

bool starts_atom(Scan& sc) {
    const char c = sc.peek();
    return c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c));
}

CoordSeries parse_term(const ExprCtx& ctx, Scan& sc) {
    CoordSeries acc = parse_factor(ctx, sc);
    while (true) {
        if (sc.peek() == '*') {
            ++sc.i;
            acc = cs_mul(ctx.frame, acc, parse_factor(ctx, sc), ctx.cap);
        } else if (starts_atom(sc)) {
            acc = cs_mul(ctx.frame, acc, parse_factor(ctx, sc), ctx.cap);
        } else {
            return acc;
        }
    }
}

CoordSeries parse_series(const ExprCtx& ctx, Scan& sc) {
    bool neg = false;
    if (sc.peek() == '-') {
        ++sc.i;
        neg = true;
    } else if (sc.peek() == '+') {
        ++sc.i;
    }
    CoordSeries acc = parse_term(ctx, sc);
    if (neg) acc = cs_neg(acc);
    while (true) {
        const char c = sc.peek();
        if (c == '+' || c == '-') {
            ++sc.i;
            CoordSeries t = parse_term(ctx, sc);
            acc = cs_add(acc, c == '-' ? cs_neg(t) : t);
        } else {
            return acc;
        }
    }
}

ExprCtx element_ctx(const AlgebraPtr& alg) {
    std::vector<std::size_t> counts;
    counts.push_back(0);
    for (auto c : alg->gen_counts()) counts.push_back(c);
    ExprCtx ctx{GradedShape(std::move(counts)), {}, alg->cap(), alg->n()};
    ctx.frame = make_frame(ctx.shape);
    return ctx;
}

ExprCtx shape_ctx(const GradedShape& shape, unsigned cap) {
    ExprCtx ctx{shape, make_frame(shape), cap, shape.rank_n()};
    return ctx;
}

// key=value field extraction from a header token.
std::string field(const std::string& token, const std::string& key, int line) {
    if (token.rfind(key + "=", 0) != 0)
        throw SyntaxError(line, 1, "expected '" + key + "=...', got '" + token + "'");
    return token.substr(key.size() + 1);
}

Rational parse_rational_token(const std::string& t, int line) {
    const auto slash = t.find('/');
    std::string numpart = slash == std::string::npos ? t : t.substr(0, slash);
    bool neg = false;
    if (!numpart.empty() && (numpart[0] == '-' || numpart[0] == '+')) {
        neg = numpart[0] == '-';
        numpart = numpart.substr(1);
    }
    if (numpart.empty() || numpart.find_first_not_of("0123456789") != std::string::npos)
        throw SyntaxError(line, 1, "invalid rational '" + t + "'");
    Rational v(numpart);
    if (slash != std::string::npos) {
        const std::string den = t.substr(slash + 1);
        if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos ||
            Rational(den) == 0)
            throw SyntaxError(line, 1, "invalid rational '" + t + "'");
        v /= Rational(den);
    }
    return neg ? Rational(-v) : v;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

} // namespace

GradedShape parse_shape(const std::string& text) { return GradedShape::from_string(text); }

AlgebraPtr parse_algebra(const std::string& line) {
    Reader r(line);
    return parse_algebra(r);
}

AlgebraPtr parse_algebra(Reader& r) {
    const int line_no = r.peek_line_number();
    const auto toks = split_ws(r.next_line());
    if (toks.empty() || toks[0] != "algebra")
        throw SyntaxError(line_no, 1, "expected 'algebra ...'");
    if (toks.size() < 4) throw SyntaxError(line_no, 1, "incomplete algebra line");
    const int n = std::stoi(field(toks[1], "n", line_no));
    if (n < 1) throw SyntaxError(line_no, 1, "algebra needs n >= 1");
    if (toks[2] != "gens") throw SyntaxError(line_no, 1, "expected 'gens'");
    const std::size_t nz = (std::size_t(1) << n) - 1;
    std::vector<std::size_t> counts(nz, 0);
    std::size_t t = 3;
    for (; t < toks.size() && toks[t].rfind("cap=", 0) != 0; ++t) {
        const auto star = toks[t].find('*');
        if (star == std::string::npos)
            throw SyntaxError(line_no, 1, "expected '<bits>*<count>', got '" + toks[t] + "'");
        const Degree d = Degree::from_string(toks[t].substr(0, star));
        if (d.n() != n) throw SyntaxError(line_no, 1, "degree bits of wrong length");
        if (d.is_zero())
            throw SyntaxError(line_no, 1, "the zero degree cannot carry generators");
        counts[d.index() - 1] = std::stoull(toks[t].substr(star + 1));
    }
    if (t != toks.size() - 1)
        throw SyntaxError(line_no, 1, "algebra line must end with cap=<T>");
    const unsigned cap = static_cast<unsigned>(std::stoul(field(toks[t], "cap", line_no)));
    return make_algebra(n, std::move(counts), cap);
}

GElement parse_element(const std::string& text, const AlgebraPtr& alg, int line_no) {
    const ExprCtx ctx = element_ctx(alg);
    Scan sc{text, line_no};
    if (sc.done()) throw SyntaxError(line_no, 1, "empty element");
    const CoordSeries s = parse_series(ctx, sc);
    if (!sc.done()) sc.fail("unexpected trailing input");
    GElement out = GElement::zero(alg);
    for (const auto& [m, poly] : s.terms)
        for (const auto& [e, c] : poly.terms()) out.add_term(m, c);
    return out;
}

GMatrix parse_matrix(Reader& r, const AlgebraPtr& alg) {
    const int line_no = r.peek_line_number();
    const auto toks = split_ws(r.next_line());
    if (toks.size() != 4 || toks[0] != "matrix")
        throw SyntaxError(line_no, 1, "expected 'matrix deg=.. rows=.. cols=..'");
    const Degree deg = Degree::from_string(field(toks[1], "deg", line_no));
    const GradedShape rows = parse_shape(field(toks[2], "rows", line_no));
    const GradedShape cols = parse_shape(field(toks[3], "cols", line_no));
    std::vector<std::vector<GElement>> entries;
    for (std::size_t i = 0; i < rows.total(); ++i) {
        const int rln = r.peek_line_number();
        const auto cells = split_on(r.next_line(), ';');
        if (cells.size() != cols.total())
            throw SyntaxError(rln, 1,
                              "expected " + std::to_string(cols.total()) + " entries, got " +
                                  std::to_string(cells.size()));
        std::vector<GElement> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) row.push_back(parse_element(cell, alg, rln));
        entries.push_back(std::move(row));
    }
    return make_matrix(alg, rows, cols, deg, std::move(entries));
}

LambdaPoint parse_point(Reader& r, const AlgebraPtr& alg) {
    const int line_no = r.peek_line_number();
    const auto toks = split_ws(r.next_line());
    if (toks.size() != 2 || toks[0] != "point")
        throw SyntaxError(line_no, 1, "expected 'point shape=..'");
    const GradedShape shape = parse_shape(field(toks[1], "shape", line_no));
    const int cln = r.peek_line_number();
    const auto cells = split_on(r.next_line(), ';');
    if (cells.size() != shape.total())
        throw SyntaxError(cln, 1,
                          "expected " + std::to_string(shape.total()) + " components, got " +
                              std::to_string(cells.size()));
    std::vector<GElement> comps;
    comps.reserve(cells.size());
    for (const auto& cell : cells) comps.push_back(parse_element(cell, alg, cln));
    return make_point(alg, shape, std::move(comps));
}

Morphism parse_morphism(Reader& r) {
    const int line_no = r.peek_line_number();
    const auto toks = split_ws(r.next_line());
    if (toks.size() != 4 || toks[0] != "morphism")
        throw SyntaxError(line_no, 1, "expected 'morphism src=.. tgt=.. cap=..'");
    const GradedShape src = parse_shape(field(toks[1], "src", line_no));
    const GradedShape tgt = parse_shape(field(toks[2], "tgt", line_no));
    const unsigned cap = static_cast<unsigned>(std::stoul(field(toks[3], "cap", line_no)));
    const ExprCtx ctx = shape_ctx(src, cap);
    std::vector<CoordSeries> pullbacks(tgt.total());
    std::vector<bool> seen(tgt.total(), false);
    for (std::size_t k = 0; k < tgt.total(); ++k) {
        const int ln = r.peek_line_number();
        const std::string line = r.next_line();
        const auto arrow = line.find("<-");
        if (arrow == std::string::npos)
            throw SyntaxError(ln, 1, "expected '<coord> <- <series>'");
        const auto name_toks = split_ws(line.substr(0, arrow));
        if (name_toks.size() != 1)
            throw SyntaxError(ln, 1, "expected a single coordinate name before '<-'");
        std::size_t flat = tgt.total();
        for (std::size_t c = 0; c < tgt.total(); ++c)
            if (coord_name(tgt, c) == name_toks[0]) {
                flat = c;
                break;
            }
        if (flat == tgt.total())
            throw SyntaxError(ln, 1, "unknown target coordinate '" + name_toks[0] + "'");
        if (seen[flat])
            throw SyntaxError(ln, 1, "duplicate pullback for '" + name_toks[0] + "'");
        seen[flat] = true;
        const std::string expr = line.substr(arrow + 2);
        Scan sc{expr, ln};
        if (sc.done()) throw SyntaxError(ln, 1, "empty pullback series");
        pullbacks[flat] = parse_series(ctx, sc);
        if (!sc.done()) sc.fail("unexpected trailing input");
    }
    return make_morphism(src, tgt, cap, std::move(pullbacks));
}

BlockDiagMap parse_linmap(Reader& r) {
    const int line_no = r.peek_line_number();
    const auto toks = split_ws(r.next_line());
    if (toks.size() != 3 || toks[0] != "linmap")
        throw SyntaxError(line_no, 1, "expected 'linmap src=.. tgt=..'");
    const GradedShape src = parse_shape(field(toks[1], "src", line_no));
    const GradedShape tgt = parse_shape(field(toks[2], "tgt", line_no));
    std::vector<RatMat> blocks;
    for (std::size_t i = 0; i < src.num_degrees(); ++i)
        blocks.push_back(rm_zero(tgt.counts[i], src.counts[i]));
    const int n = src.rank_n();
    while (!r.eof() && split_ws(r.peek_line())[0] == "block") {
        const int ln = r.peek_line_number();
        auto head = split_ws(r.next_line());
        if (head.size() != 2 || head[1].empty() || head[1].back() != ':')
            throw SyntaxError(ln, 1, "expected 'block <bits>:'");
        head[1].pop_back();
        const Degree d = Degree::from_string(head[1]);
        if (d.n() != n) throw SyntaxError(ln, 1, "block degree bits of wrong length");
        const std::size_t i = d.index();
        for (std::size_t row = 0; row < tgt.counts[i]; ++row) {
            const int rln = r.peek_line_number();
            const auto cells = split_ws(r.next_line());
            if (cells.size() != src.counts[i])
                throw SyntaxError(rln, 1,
                                  "expected " + std::to_string(src.counts[i]) +
                                      " rationals, got " + std::to_string(cells.size()));
            for (std::size_t col = 0; col < cells.size(); ++col)
                blocks[i][row][col] = parse_rational_token(cells[col], rln);
        }
    }
    return make_blockdiag(src, tgt, std::move(blocks));
}

} // namespace z2n
