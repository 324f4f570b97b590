#include "sdg/replay.hpp"

#include <sstream>
#include <stdexcept>

namespace sdg {

const std::array<std::array<int, 4>, 12>& term_labels() {
  static const std::array<std::array<int, 4>, 12> labels = {{
      {1, 2, 3, 4}, {1, 3, 4, 2}, {1, 4, 2, 3},
      {2, 1, 4, 3}, {2, 3, 1, 4}, {2, 4, 3, 1},
      {3, 1, 2, 4}, {3, 2, 4, 1}, {3, 4, 1, 2},
      {4, 1, 3, 2}, {4, 2, 1, 3}, {4, 3, 2, 1},
  }};
  return labels;
}

const std::array<std::map<int, int>, 12>& expected_end_vectors() {
  static const std::array<std::map<int, int>, 12> vecs = {{
      {{31, -1}, {33, -1}, {35, +1}, {39, -1}, {41, +1}, {47, +1}, {53, -1}},
      {{31, +1}, {32, -1}, {33, +1}, {34, -1}, {41, -1}, {45, +1}, {47, -1}, {51, +1}},
      {{32, +1}, {34, +1}, {35, -1}, {39, +1}, {45, -1}, {51, -1}, {53, +1}},
      {{33, +1}, {35, -1}, {36, -1}, {37, +1}, {39, +1}, {41, -1}, {46, -1}, {52, +1}},
      {{35, +1}, {37, -1}, {38, +1}, {39, -1}, {40, +1}, {43, -1}, {46, +1}, {49, -1}},
      {{33, -1}, {36, +1}, {38, -1}, {40, -1}, {41, +1}, {43, +1}, {49, +1}, {52, -1}},
      {{31, -1}, {34, +1}, {40, +1}, {42, +1}, {43, -1}, {45, -1}, {47, +1}, {50, -1}},
      {{34, -1}, {37, +1}, {40, -1}, {43, +1}, {44, -1}, {45, +1}, {46, -1}, {48, +1}},
      {{31, +1}, {37, -1}, {42, -1}, {44, +1}, {46, +1}, {47, -1}, {48, -1}, {50, +1}},
      {{32, -1}, {38, -1}, {44, +1}, {48, -1}, {49, +1}, {51, +1}, {53, -1}},
      {{32, +1}, {36, -1}, {38, +1}, {42, -1}, {49, -1}, {50, +1}, {51, -1}, {52, +1}},
      {{36, +1}, {42, +1}, {44, -1}, {48, +1}, {50, -1}, {52, -1}, {53, +1}},
  }};
  return vecs;
}

namespace {

std::string word_of(int a, int b, int c, int d) {
  return std::to_string(a) + std::to_string(b) + std::to_string(c) + std::to_string(d);
}

Microcube checked_diff(const Microcube& g1, const Microcube& g2,
                       const std::vector<int>& subscript, bool* cert_ok) {
  Microcube closed = strong_diff_sub(g1, g2, subscript);
  Permutation sigma = subscript_permutation(subscript, g1.arity());
  Microcube via_med = strong_diff_via_mediator(g1.permuted(sigma), g2.permuted(sigma));
  *cert_ok = (closed == via_med);
  if (!*cert_ok)
    throw std::logic_error("strong difference: closed form disagrees with mediator route");
  return closed;
}

std::string diff_report(const Microcube& got, const std::map<int, int>& want) {
  std::ostringstream os;
  os << "expected {";
  for (auto [pos, c] : want) os << " " << pos << ":" << c;
  os << " }, got {";
  for (int p = 1; p <= got.dim(); ++p)
    if (!got.coord(p).is_zero()) os << " " << p << ":" << got.coord(p).str();
  os << " }";
  return os.str();
}

}  // namespace

TermPieces compute_term(const std::map<std::string, Microcube>& cubes, int a, int b,
                        int c, int d) {
  auto g = [&](int p, int q, int r, int s) -> const Microcube& {
    return cubes.at(word_of(p, q, r, s));
  };
  bool ok = false;
  TermPieces t{};
  t.inner1 = checked_diff(g(a, b, c, d), g(a, b, d, c), {a, b}, &ok);
  t.inner2 = checked_diff(g(a, c, d, b), g(a, d, c, b), {a, b}, &ok);
  t.mid1 = checked_diff(t.inner1, t.inner2, {1}, &ok);
  t.inner3 = checked_diff(g(b, c, d, a), g(b, d, c, a), {a, b}, &ok);
  t.inner4 = checked_diff(g(c, d, b, a), g(d, c, b, a), {a, b}, &ok);
  t.mid2 = checked_diff(t.inner3, t.inner4, {1}, &ok);
  t.term = checked_diff(t.mid1, t.mid2, {}, &ok);
  return t;
}

ProofTrace replay_theorem_3_2() {
  std::map<std::string, Microcube> cubes;
  for (const auto& inj : build_injections())
    cubes.emplace(inj.word, Microcube::of_map(inj.map));

  ProofTrace trace;
  Monomial d1 = Monomial::var(1);

  for (int step = 1; step <= 12; ++step) {
    auto [a, b, c, d] = term_labels()[static_cast<std::size_t>(step - 1)];
    const std::string ab = std::to_string(a) + std::to_string(b);

    TermPieces pieces = compute_term(cubes, a, b, c, d);
    auto tag = [&](int k) { return "t3.2." + std::to_string(7 * (step - 1) + k); };
    auto lbl = [&](int p, int q, int r, int s) { return "gamma" + word_of(p, q, r, s); };

    auto push = [&](int k, std::string op, std::vector<std::string> in, Microcube out) {
      trace.entries.push_back({tag(k), std::move(op), std::move(in), std::move(out), true});
    };
    push(1, "strong_diff_sub[" + ab + "]", {lbl(a, b, c, d), lbl(a, b, d, c)}, pieces.inner1);
    push(2, "strong_diff_sub[" + ab + "]", {lbl(a, c, d, b), lbl(a, d, c, b)}, pieces.inner2);
    push(3, "strong_diff_sub[1]", {tag(1), tag(2)}, pieces.mid1);
    push(4, "strong_diff_sub[" + ab + "]", {lbl(b, c, d, a), lbl(b, d, c, a)}, pieces.inner3);
    push(5, "strong_diff_sub[" + ab + "]", {lbl(c, d, b, a), lbl(d, c, b, a)}, pieces.inner4);
    push(6, "strong_diff_sub[1]", {tag(4), tag(5)}, pieces.mid2);
    push(7, "strong_diff", {tag(3), tag(6)}, pieces.term);

    // compare with the displayed end vector
    const auto& want = expected_end_vectors()[static_cast<std::size_t>(step - 1)];
    std::map<int, Rational> got;
    for (int p = 1; p <= pieces.term.dim(); ++p) {
      const WeilPoly& coord = pieces.term.coord(p);
      for (const auto& [m, v] : coord.terms()) {
        if (m != d1)
          throw std::logic_error(tag(7) + ": term has a non-linear entry at position " +
                                 std::to_string(p));
        got[p] = v;
      }
    }
    bool match = got.size() == want.size();
    if (match)
      for (auto [pos, cexp] : want)
        if (got.count(pos) == 0 || got[pos] != cexp) { match = false; break; }
    if (!match)
      throw std::logic_error("end-vector mismatch at " + tag(7) + ": " +
                             diff_report(pieces.term, want));
    trace.end_vectors[static_cast<std::size_t>(step - 1)] = got;
    for (auto& [pos, v] : got) {
      trace.total[pos] += v;
      if (trace.total[pos] == 0) trace.total.erase(pos);
    }
  }

  trace.total_zero = trace.total.empty();
  if (!trace.total_zero) throw std::logic_error("t3.2.85: tangent sum is not zero");
  return trace;
}

}  // namespace sdg
