#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "z2n/action.hpp"
#include "z2n/io.hpp"

namespace {

using namespace z2n;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError(0, 0, "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_dim(const std::string& rows, const std::string& cols) {
    std::cout << gl0_dimension(parse_shape(rows), parse_shape(cols)).to_string() << "\n";
    return 0;
}

int cmd_invert(const std::string& path) {
    Reader r(slurp(path));
    const AlgebraPtr alg = parse_algebra(r);
    const GMatrix x = parse_matrix(r, alg);
    const GMatrix xi = invert(x);
    const GMatrix id = identity_matrix(alg, x.row_shape());
    if (mat_mul(x, xi) != id || mat_mul(xi, x) != id) {
        std::cerr << "internal error: inverse failed self-verification\n";
        return 4;
    }
    std::cout << print_matrix(xi);
    return 0;
}

int cmd_mul(const std::string& path) {
    Reader r(slurp(path));
    const AlgebraPtr alg = parse_algebra(r);
    const GMatrix x = parse_matrix(r, alg);
    const GMatrix y = parse_matrix(r, alg);
    std::cout << print_matrix(mat_mul(x, y));
    return 0;
}

int cmd_eval(const std::string& path) {
    Reader r(slurp(path));
    const AlgebraPtr alg = parse_algebra(r);
    const Morphism phi = parse_morphism(r);
    const LambdaPoint x = parse_point(r, alg);
    std::cout << print_point(evaluate(phi, x));
    return 0;
}

int cmd_act(const std::string& path) {
    Reader r(slurp(path));
    const AlgebraPtr alg = parse_algebra(r);
    const GMatrix x = parse_matrix(r, alg);
    const LambdaPoint v = parse_point(r, alg);
    std::cout << print_point(canonical_action(x, v));
    return 0;
}

int cmd_compose(const std::string& path) {
    Reader r(slurp(path));
    const Morphism first = parse_morphism(r);
    const Morphism second = parse_morphism(r);
    std::cout << print_morphism(compose(second, first));
    return 0;
}

int cmd_check_invertible(const std::string& path) {
    Reader r(slurp(path));
    const AlgebraPtr alg = parse_algebra(r);
    const GMatrix x = parse_matrix(r, alg);
    const InvertibilityCriteria c = invertibility_criteria(x);
    std::cout << "diagonal-body-blocks: " << (c.diagonal_body_blocks ? "yes" : "no") << "\n";
    std::cout << "diagonal-blocks-lambda: " << (c.diagonal_blocks_lambda ? "yes" : "no") << "\n";
    std::cout << "full-body-matrix: " << (c.full_body_matrix ? "yes" : "no") << "\n";
    if (c.diagonal_body_blocks != c.diagonal_blocks_lambda ||
        c.diagonal_body_blocks != c.full_body_matrix) {
        std::cerr << "internal error: invertibility criteria disagree\n";
        return 4;
    }
    std::cout << "invertible: " << (c.diagonal_body_blocks ? "yes" : "no") << "\n";
    return 0;
}

int cmd_check_action(const std::string& path, std::size_t samples, std::uint64_t seed,
                     const std::string& witness_path) {
    Reader r(slurp(path));
    const AlgebraPtr alg = parse_algebra(r);
    const int ln = r.peek_line_number();
    std::istringstream head(r.next_line());
    std::string kw, shape_text;
    head >> kw >> shape_text;
    if (kw != "shape") throw SyntaxError(ln, 1, "expected 'shape <p|q...>'");
    const GradedShape shape = parse_shape(shape_text);
    const ActionReport rep = check_action_axioms(alg, shape, samples, seed);
    const char* witness_note = rep.all_ok() ? "" : " (see witness file)";
    std::cout << "identity: " << (rep.identity_ok ? "ok" : "FAIL") << "\n";
    std::cout << "compatibility: " << (rep.compatibility_ok ? "ok" : "FAIL") << "\n";
    std::cout << "additivity: " << (rep.additivity_ok ? "ok" : "FAIL") << "\n";
    std::cout << "scaling: " << (rep.scaling_ok ? "ok" : "FAIL") << witness_note << "\n";
    if (!rep.all_ok()) {
        std::ofstream w(witness_path);
        w << rep.counterexample;
        std::cout << "witness: " << witness_path << "\n";
    }
    return 0;
}

int cmd_basis(int n, const std::string& dims_text, std::size_t k) {
    std::vector<std::size_t> dims;
    std::istringstream in(dims_text);
    std::string tok;
    while (std::getline(in, tok, ',')) dims.push_back(std::stoull(tok));
    for (const auto& w : sym_basis(n, dims, k)) std::cout << print_sym_word(w, n) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computer-algebra kernel for Z_2^n-graded commutative algebra"};
    app.require_subcommand(1);

    std::string rows, cols, path, dims_text;
    std::string witness_path = "witness.txt";
    std::size_t samples = 100, k = 0;
    std::uint64_t seed = 1;
    int n = 0;

    auto* dim = app.add_subcommand("dim", "Dimension of the degree-0 matrix space");
    dim->add_option("rows", rows)->required();
    dim->add_option("cols", cols)->required();

    auto* invert = app.add_subcommand("invert", "Invert a degree-0 matrix (self-verified)");
    invert->add_option("file", path)->required();

    auto* mul = app.add_subcommand("mul", "Multiply two graded matrices");
    mul->add_option("file", path)->required();

    auto* eval = app.add_subcommand("eval", "Evaluate a morphism at a point");
    eval->add_option("file", path)->required();

    auto* act = app.add_subcommand("act", "Apply the canonical action to a point");
    act->add_option("file", path)->required();

    auto* compose = app.add_subcommand("compose",
                                       "Compose two morphisms (second applied after first)");
    compose->add_option("file", path)->required();

    auto* chki = app.add_subcommand("check-invertible", "Report the invertibility criteria");
    chki->add_option("file", path)->required();

    auto* chka = app.add_subcommand("check-action", "Randomized action-axiom report");
    chka->add_option("file", path)->required();
    chka->add_option("--samples", samples);
    chka->add_option("--seed", seed);
    chka->add_option("--witness", witness_path);

    auto* basis = app.add_subcommand("basis", "Basis words of a symmetric-algebra slice");
    basis->add_option("n", n)->required();
    basis->add_option("dims", dims_text)->required();
    basis->add_option("k", k)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (dim->parsed()) return cmd_dim(rows, cols);
        if (invert->parsed()) return cmd_invert(path);
        if (mul->parsed()) return cmd_mul(path);
        if (eval->parsed()) return cmd_eval(path);
        if (act->parsed()) return cmd_act(path);
        if (compose->parsed()) return cmd_compose(path);
        if (chki->parsed()) return cmd_check_invertible(path);
        if (chka->parsed()) return cmd_check_action(path, samples, seed, witness_path);
        if (basis->parsed()) return cmd_basis(n, dims_text, k);
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParityViolation& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const KernelError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 4;
}
