#include <random>

#include "riordan/identities.hpp"
#include "riordan/riordan.hpp"
#include "riordan/sequences.hpp"

namespace riordan {

namespace {

Series poly(std::vector<Rational> c, int order) { return Series::from_coeffs(std::move(c), order); }

SeqVec finite_vec(std::vector<Rational> e) { return SeqVec::finite(std::move(e)); }

/// Images of v under the four Fibonacci/Lucas matrices.
struct Images {
    SeqVec w; // FF v
    SeqVec x; // LF v
    SeqVec y; // FS v
    SeqVec z; // LS v
};

Images images(const SeqVec& v, int w) {
    return {apply(pairs::FF(w), v), apply(pairs::LF(w), v), apply(pairs::FS(w), v), apply(pairs::LS(w), v)};
}

/// Runs fn once per input vector, labeling failures with the vector name.
template <class Fn>
Check over_inputs(const std::string& id, const std::string& what, const std::vector<LabeledVector>& inputs,
                  int order, int needed, Fn&& fn) {
    CheckBuilder b(id, what);
    if (order < needed) {
        b.skip("needs order >= " + std::to_string(needed) + ", got " + std::to_string(order));
    } else {
        for (std::size_t i = 0; i < inputs.size(); ++i) b.expect(inputs[i].label, [&] { return fn(i); });
    }
    return b.finish();
}

} // namespace

std::vector<LabeledVector> transform_inputs(int n, std::uint64_t seed, int random_count) {
    std::vector<LabeledVector> out;
    out.push_back({"e0", unit_vec(0, n)});
    out.push_back({"e1", unit_vec(1, n)});
    out.push_back({"zero", finite_vec(std::vector<Rational>(static_cast<std::size_t>(n)))});
    std::vector<Rational> ramp;
    for (int i = 0; i < n; ++i) ramp.emplace_back(i % 2 == 0 ? i + 1 : -(i + 1));
    out.push_back({"ramp", finite_vec(std::move(ramp))});
    std::mt19937_64 rng(seed);
    for (int r = 0; r < random_count; ++r) {
        std::vector<Rational> e;
        for (int i = 0; i < n; ++i) e.emplace_back(static_cast<long>(rng() % 11) - 5);
        out.push_back({"random" + std::to_string(r), finite_vec(std::move(e))});
    }
    return out;
}

Fragment check_transform_identities(const std::vector<LabeledVector>& inputs, int order) {
    const int w = order + kWorkingSlack;
    const Series one = Series::one(w);
    const Series t = Series::x(w) * catalan_series(w);
    const Series two = Series::constant(2, w);
    const RiordanPair df = catalog_pair("DFSinvD", w);
    const RiordanPair dl = catalog_pair("DLSinvD", w);
    auto with_t = [&](const Series& g) { return RiordanPair::classify(g, t); };

    const RiordanPair a1 = with_t((two - t) / t);
    const RiordanPair a2 = with_t((two - t) / (t - 2 * t * t));
    const RiordanPair a3 = with_t(t / (two - t));
    const RiordanPair a4 = with_t(t / ((one - 2 * t) * (two - t)));
    const RiordanPair b1 = with_t(one / (one + 2 * t));
    const RiordanPair b2 = with_t(one / (one - 4 * t * t));
    const RiordanPair b3 = with_t(one + 2 * t);
    const RiordanPair b4 = with_t((one + 2 * t) / (one - 2 * t));

    std::vector<Images> im;
    for (const auto& in : inputs) im.push_back(images(in.v, w));

    struct Clause {
        const char* id;
        const char* what;
        const RiordanPair* lhs_pair;
        SeqVec Images::*lhs_vec;
        const RiordanPair* rhs_pair;
        SeqVec Images::*rhs_vec;
    };
    const Clause clauses[] = {
        {"transform.first-kind.fibonacci-from-inverse", "((2-xC)/(xC), xC) FF v = D FS^-1 D LF v", &a1, &Images::w,
         &df, &Images::x},
        {"transform.first-kind.lucas-from-inverse", "((2-xC)/(xC-2x^2C^2), xC) FF v = D LS^-1 D LF v", &a2,
         &Images::w, &dl, &Images::x},
        {"transform.first-kind.fibonacci-from-invariant", "(xC/(2-xC), xC) LF v = D FS^-1 D FF v", &a3, &Images::x,
         &df, &Images::w},
        {"transform.first-kind.lucas-from-invariant", "(xC/((1-2xC)(2-xC)), xC) LF v = D LS^-1 D FF v", &a4,
         &Images::x, &dl, &Images::w},
        {"transform.second-kind.fibonacci-from-inverse", "(1/(1+2xC), xC) LS v = D FS^-1 D FS v", &b1, &Images::z,
         &df, &Images::y},
        {"transform.second-kind.lucas-from-inverse", "(1/(1-4x^2C^2), xC) LS v = D LS^-1 D FS v", &b2, &Images::z,
         &dl, &Images::y},
        {"transform.second-kind.fibonacci-from-invariant", "(1+2xC, xC) FS v = D FS^-1 D LS v", &b3, &Images::y,
         &df, &Images::z},
        {"transform.second-kind.lucas-from-invariant", "((1+2xC)/(1-2xC), xC) FS v = D LS^-1 D LS v", &b4,
         &Images::y, &dl, &Images::z},
    };

    Fragment out;
    for (const auto& c : clauses) {
        out.push_back(over_inputs(c.id, c.what, inputs, order, 2, [&](std::size_t i) {
            const Images& m = im[i];
            return differ(apply(*c.lhs_pair, m.*c.lhs_vec), apply(*c.rhs_pair, m.*c.rhs_vec), order);
        }));
    }
    return out;
}

Fragment check_gf_relations(const std::vector<LabeledVector>& inputs, int order) {
    const int w = order + kWorkingSlack;
    const Series x = Series::x(w);
    const Series one = Series::one(w);
    const Series one_minus_x = poly({1, -1}, w);
    const Series t = x * catalan_series(w);
    const Series u = x / one_minus_x;
    const Series mu = compose(motzkin_series(w), u);
    // x + (x^2/(1-x)) M(x/(1-x)), equal to xC
    const Series s = x + x * u * mu;
    const Series reflect = -u;

    auto pascal_action = [&](const Series& g) { return compose(g, reflect) / one_minus_x; };

    Fragment out;
    out.push_back(over_inputs("gf.pascal-invariant", "g = GF(LF v) satisfies (1/(1-x)) g(-x/(1-x)) = g", inputs,
                              order, 2, [&](std::size_t i) {
                                  const SeqVec& v = inputs[i].v;
                                  const Series g = apply(pairs::LF(w), v).generating_function();
                                  return differ(pascal_action(g), g, order);
                              }));
    out.push_back(over_inputs("gf.pascal-inverse-invariant", "g = GF(FF v) satisfies (1/(1-x)) g(-x/(1-x)) = -g",
                              inputs, order, 2, [&](std::size_t i) {
                                  const SeqVec& v = inputs[i].v;
                                  const Series g = apply(pairs::FF(w), v).generating_function();
                                  return differ(pascal_action(g), -g, order);
                              }));
    out.push_back(over_inputs("gf.invariant-to-inverse",
                              "(x/(2-x)) GF(LF v) = GF(FF v), which is inverse P-invariant", inputs, order, 2,
                              [&](std::size_t i) {
                                  const SeqVec& v = inputs[i].v;
                                  const Series g = apply(pairs::LF(w), v).generating_function();
                                  const Series h = x / poly({2, -1}, w) * g;
                                  if (auto d = differ(h, apply(pairs::FF(w), v).generating_function(), order)) return d;
                                  return differ(pascal_action(h), -h, order);
                              }));
    out.push_back(over_inputs("gf.second-kind-catalan", "h_v(xC) = h_-v(xC) / (1+2xC) with h_v = GF(FS v), h_-v = GF(LS v)",
                              inputs, order, 2, [&](std::size_t i) {
                                  const SeqVec& v = inputs[i].v;
                                  const Series hv = apply(pairs::FS(w), v).generating_function();
                                  const Series hm = apply(pairs::LS(w), v).generating_function();
                                  return differ(compose(hv, t), compose(hm, t) / (one + 2 * t), order);
                              }));
    out.push_back(over_inputs("gf.second-kind-motzkin",
                              "h_-v(s) = (1 + 2x + (2x^2/(1-x)) M(x/(1-x))) h_v(s), s = x + (x^2/(1-x)) M(x/(1-x))",
                              inputs, order, 2, [&](std::size_t i) {
                                  const SeqVec& v = inputs[i].v;
                                  if (auto d = differ(s, t, order)) {
                                      d->location = "s vs xC " + d->location;
                                      return d;
                                  }
                                  const Series hv = apply(pairs::FS(w), v).generating_function();
                                  const Series hm = apply(pairs::LS(w), v).generating_function();
                                  const Series factor = one + 2 * x + 2 * x * u * mu;
                                  return differ(compose(hm, s), factor * compose(hv, s), order);
                              }));
    return out;
}

} // namespace riordan
