#include <cmath>
#include <random>

#include "dictionary.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "signals.hpp"
#include "test_helpers.hpp"

using namespace pursuit;

namespace {

Dictionary pair_dictionary() {
  // e1 and (e1+e2)/sqrt(2)
  Eigen::MatrixXd m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << 1, r,
       0, r;
  return Dictionary(std::move(m), "pair");
}

Dictionary three_atom_r2() {
  Eigen::MatrixXd m(2, 3);
  const double r = 1.0 / std::sqrt(2.0);
  m << 1, 0, r,
       0, 1, r;
  return Dictionary(std::move(m), "three");
}

}  // namespace

TEST_CASE("synthesize") {
  SUBCASE("orthonormal combination") {
    Dictionary d = Dictionary::orthonormal(3);
    SparseRepresentation rep(d.label());
    rep.set_coeff(0, 2.0);
    rep.set_coeff(2, -1.0);
    Eigen::VectorXd f = synthesize(d, rep);
    CHECK(f(0) == 2.0);
    CHECK(f(1) == 0.0);
    CHECK(f(2) == -1.0);
  }

  SUBCASE("empty representation gives the zero vector") {
    Dictionary d = Dictionary::orthonormal(4);
    CHECK(synthesize(d, SparseRepresentation()).norm() == 0.0);
  }

  SUBCASE("1*e1 + sqrt2*(e1+e2)/sqrt2 = (2, 1)") {
    Dictionary d = pair_dictionary();
    SparseRepresentation rep;
    rep.set_coeff(0, 1.0);
    rep.set_coeff(1, std::sqrt(2.0));
    Eigen::VectorXd f = synthesize(d, rep);
    CHECK(f(0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(f(1) == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("label and index mismatches") {
    Dictionary d = Dictionary::orthonormal(3);
    SparseRepresentation rep("some-other-dictionary");
    rep.set_coeff(0, 1.0);
    try {
      synthesize(d, rep);
      FAIL("expected dictionary_mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::dictionary_mismatch);
    }
    SparseRepresentation oob(d.label());
    oob.set_coeff(17, 1.0);
    try {
      synthesize(d, oob);
      FAIL("expected dictionary_mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::dictionary_mismatch);
    }
  }

  SUBCASE("linearity over random representations") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
      Dictionary d = testutil::random_dictionary(6, 8, gen);
      auto r1 = testutil::random_rep(7, 4, gen);
      auto r2 = testutil::random_rep(7, 4, gen);
      const double a = 2.5, b = -0.75;
      Eigen::VectorXd lhs =
          synthesize(d, rep_add(rep_scale(r1, a), rep_scale(r2, b)));
      Eigen::VectorXd rhs = a * synthesize(d, r1) + b * synthesize(d, r2);
      CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    }
  }
}

TEST_CASE("rep quasi norm") {
  SUBCASE("p = 1 is the absolute sum") {
    SparseRepresentation rep;
    rep.set_coeff(0, 3.0);
    rep.set_coeff(1, -4.0);
    CHECK(rep_quasi_norm(rep, 1.0) == doctest::Approx(7.0).epsilon(1e-15));
  }

  SUBCASE("p = 2 is outside the admissible range") {
    SparseRepresentation rep;
    rep.set_coeff(0, 3.0);
    try {
      rep_quasi_norm(rep, 2.0);
      FAIL("expected bad_exponent");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::bad_exponent);
    }
    try {
      rep_quasi_norm(rep, 0.9);
      FAIL("expected bad_exponent");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::bad_exponent);
    }
  }

  SUBCASE("three unit coefficients at p = 1.5") {
    SparseRepresentation rep;
    rep.set_coeff(0, 1.0);
    rep.set_coeff(1, 1.0);
    rep.set_coeff(2, 1.0);
    CHECK(rep_quasi_norm(rep, 1.5) ==
          doctest::Approx(std::pow(3.0, 2.0 / 3.0)).epsilon(1e-14));
  }

  SUBCASE("empty representation has norm 0") {
    CHECK(rep_quasi_norm(SparseRepresentation(), 1.3) == 0.0);
  }

  SUBCASE("norm properties over random representations") {
    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> pdist(1.0, 1.999);
    for (int trial = 0; trial < 100; ++trial) {
      auto r1 = testutil::random_rep(20, 5, gen);
      auto r2 = testutil::random_rep(20, 5, gen);
      const double p = pdist(gen);

      // Minkowski
      CHECK(rep_quasi_norm(rep_add(r1, r2), p) <=
            rep_quasi_norm(r1, p) + rep_quasi_norm(r2, p) + 1e-12);

      // power form holds unconditionally at p = 1
      CHECK(rep_add(r1, r2).power_sum(1.0) <=
            r1.power_sum(1.0) + r2.power_sum(1.0) + 1e-12);

      // power form is an equality for disjoint supports
      SparseRepresentation shifted;
      for (const auto& [index, value] : r2.entries())
        shifted.set_coeff(index + 21, value);
      CHECK(rep_add(r1, shifted).power_sum(p) ==
            doctest::Approx(r1.power_sum(p) + shifted.power_sum(p)).epsilon(1e-13));

      // with max|c| <= 1 the quasi-norm decreases as p grows
      SparseRepresentation small;
      for (const auto& [index, value] : r1.entries())
        small.set_coeff(index, value / (r1.max_abs_coeff() + 1e-9));
      const double q = pdist(gen);
      const double lo = std::min(p, q), hi = std::max(p, q);
      CHECK(rep_quasi_norm(small, hi) <= rep_quasi_norm(small, lo) + 1e-12);
    }
  }
}

TEST_CASE("sparse signal generator") {
  Dictionary d = Dictionary::orthonormal(64);

  SUBCASE("sparsity 0 is rejected") {
    try {
      gen_sparse_signal(d, 0, 1.0, 2.0, 1);
      FAIL("expected invalid_argument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_argument);
    }
  }

  SUBCASE("sparsity K covers the whole dictionary") {
    auto rep = gen_sparse_signal(d, 64, 1.0, 2.0, 3);
    CHECK(rep.support_size() == 64);
  }

  SUBCASE("sparsity above K is rejected") {
    try {
      gen_sparse_signal(d, 65, 1.0, 2.0, 1);
      FAIL("expected sparsity_too_large");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::sparsity_too_large);
    }
  }

  SUBCASE("deterministic and within amplitude bounds") {
    auto a = gen_sparse_signal(d, 5, 1.0, 2.0, 7);
    auto b = gen_sparse_signal(d, 5, 1.0, 2.0, 7);
    CHECK(a == b);
    CHECK(a.support_size() == 5);
    for (const auto& [index, value] : a.entries()) {
      CHECK(std::abs(value) >= 1.0);
      CHECK(std::abs(value) <= 2.0);
    }
    auto c = gen_sparse_signal(d, 5, 1.0, 2.0, 8);
    CHECK(a != c);
  }
}

TEST_CASE("pga coefficient step") {
  SUBCASE("exact cancellation empties the entry") {
    SparseRepresentation rep;
    rep.set_coeff(0, 2.0);
    auto out = pga_coefficient_step(rep, 0, 2.0);
    CHECK(out.empty());
  }

  SUBCASE("selection outside the support grows it") {
    SparseRepresentation rep;
    rep.set_coeff(0, 2.0);
    auto out = pga_coefficient_step(rep, 1, 0.5);
    CHECK(out.coeff(0) == 2.0);
    CHECK(out.coeff(1) == -0.5);
    CHECK(out.support_size() == 2);
  }

  SUBCASE("third atom of the R^2 triple") {
    Dictionary d = three_atom_r2();
    SparseRepresentation rep(d.label());
    rep.set_coeff(0, 1.0);
    rep.set_coeff(1, 1.0);
    // <e1+e2, (e1+e2)/sqrt2> = sqrt2, computed straight from the atoms
    const double ip = d.atoms().col(2).dot(synthesize(d, rep));
    CHECK(ip == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    auto out = pga_coefficient_step(rep, 2, ip);
    CHECK(out.coeff(2) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
    CHECK(out.coeff(0) == 1.0);
    CHECK(out.coeff(1) == 1.0);
  }

  SUBCASE("negative index is rejected") {
    try {
      pga_coefficient_step(SparseRepresentation(), -1, 1.0);
      FAIL("expected index_out_of_range");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::index_out_of_range);
    }
  }

  SUBCASE("synthesize-consistency bridge to the residual update") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 50; ++trial) {
      Dictionary d = testutil::random_dictionary(8, 10, gen);
      auto rep = testutil::random_rep(9, 5, gen);
      const int selected = static_cast<int>(gen() % 10);
      const double t = std::uniform_real_distribution<double>(-2.0, 2.0)(gen);
      Eigen::VectorXd lhs = synthesize(d, pga_coefficient_step(rep, selected, t));
      Eigen::VectorXd rhs = synthesize(d, rep) - t * d.atoms().col(selected);
      CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    }
  }
}

TEST_CASE("lemma 2 inner product bounds") {
  SUBCASE("orthonormal, lambda0 in the support: exact inner product") {
    Dictionary d = Dictionary::orthonormal(3);
    SparseRepresentation rep(d.label());
    rep.set_coeff(0, 2.0);
    LemmaReport r = check_lemma2(d, rep, 0, 0.0);
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == 0.0);
    CHECK(r.holds);
  }

  SUBCASE("orthonormal, lambda0 outside the support") {
    Dictionary d = Dictionary::orthonormal(3);
    SparseRepresentation rep(d.label());
    rep.set_coeff(0, 2.0);
    LemmaReport r = check_lemma2(d, rep, 1, 0.0);
    CHECK(r.lhs == 0.0);
    CHECK(r.holds);
  }

  SUBCASE("correlated triple, lambda0 outside") {
    Dictionary d = three_atom_r2();
    SparseRepresentation rep(d.label());
    rep.set_coeff(0, 1.0);
    LemmaReport r = check_lemma2(d, rep, 2, 0.0);
    CHECK(r.lhs == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.holds);
  }

  SUBCASE("empty representation is rejected") {
    Dictionary d = Dictionary::orthonormal(3);
    try {
      check_lemma2(d, SparseRepresentation(), 0, 0.0);
      FAIL("expected empty_representation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::empty_representation);
    }
  }

  SUBCASE("holds for every lambda0 with exactly synthesized signals") {
    std::mt19937_64 gen(14);
    for (int trial = 0; trial < 40; ++trial) {
      const int dim = 6 + static_cast<int>(gen() % 6);
      const int count = 3 + static_cast<int>(gen() % 5);
      Dictionary d = testutil::random_dictionary(dim, count, gen);
      auto rep = testutil::random_rep(count - 1, 3, gen);
      if (rep.empty()) continue;
      for (int lambda0 = 0; lambda0 < count; ++lambda0) {
        LemmaReport r = check_lemma2(d, rep, lambda0, 0.0);
        CAPTURE(trial);
        CAPTURE(lambda0);
        CHECK(r.holds);
      }
    }
  }
}

TEST_CASE("lemma 3 coefficient descent") {
  SUBCASE("orthonormal single-step removal") {
    SparseRepresentation before, after;
    before.set_coeff(0, 2.0);
    LemmaReport r = check_lemma3_descent(before, after, 1.0, 0.0);
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-15));  // 2 - (1/2)*2
    CHECK(r.holds);
  }

  SUBCASE("a no-progress step must fail the descent bound") {
    SparseRepresentation rep;
    rep.set_coeff(0, 1.0);
    rep.set_coeff(1, 1.0);
    LemmaReport r = check_lemma3_descent(rep, rep, 1.0, 0.0);
    CHECK(r.lhs == doctest::Approx(2.0));
    CHECK(r.rhs == doctest::Approx(1.5));
    CHECK_FALSE(r.holds);
  }

  SUBCASE("mu1 >= 1/3 violates the hypothesis") {
    SparseRepresentation rep;
    rep.set_coeff(0, 1.0);
    try {
      check_lemma3_descent(rep, rep, 1.0, 0.34);
      FAIL("expected hypothesis_violated");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::hypothesis_violated);
    }
  }

  SUBCASE("holds along a pursuit trajectory in the mu1 < 1/3 regime") {
    Dictionary d = Dictionary::incoherent(64, 64, 0.33, 3, 60);
    const double mu1 = d.coherence().mu1;
    REQUIRE(mu1 < 1.0 / 3.0);
    SparseRepresentation rep = gen_sparse_signal(d, 5, 1.0, 2.0, 4);

    // pure greedy steps done by hand: argmax of |<f, g>| over the atoms
    for (int step = 0; step < 60 && !rep.empty(); ++step) {
      Eigen::VectorXd f = synthesize(d, rep);
      Eigen::VectorXd dots = d.atoms().transpose() * f;
      int best = 0;
      for (int j = 1; j < d.size(); ++j)
        if (std::abs(dots(j)) > std::abs(dots(best))) best = j;
      SparseRepresentation next = pga_coefficient_step(rep, best, dots(best));
      LemmaReport r = check_lemma3_descent(rep, next, 1.0, mu1);
      CAPTURE(step);
      CHECK(r.holds);
      CHECK(r.detail.find("max_inequality=holds") != std::string::npos);
      rep = next;
    }
  }
}

TEST_CASE("representation file round trip") {
  SparseRepresentation rep("some-dict");
  rep.set_coeff(3, -0.12345678901234567);
  rep.set_coeff(17, 2.0 / 3.0);
  rep.set_coeff(40, 1e-17);
  const auto path = testutil::temp_path("rep_roundtrip.txt");
  rep.save(path.string());
  auto loaded = SparseRepresentation::load(path.string(), "some-dict");
  CHECK(loaded == rep);

  SUBCASE("blank line terminates parsing") {
    auto partial = SparseRepresentation::from_text("1 0.5\n\n2 0.25\n");
    CHECK(partial.support_size() == 1);
    CHECK(partial.coeff(1) == 0.5);
  }

  SUBCASE("empty text parses to the empty representation") {
    CHECK(SparseRepresentation::from_text("\n").empty());
  }

  SUBCASE("garbage is a parse error") {
    try {
      SparseRepresentation::from_text("a b\n");
      FAIL("expected parse_error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::parse_error);
    }
  }
}
