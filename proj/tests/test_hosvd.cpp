#include <doctest.h>

#include <algorithm>

#include "hosvd3/hosvd.hpp"
#include "test_support.hpp"

using namespace hosvd3;
using hosvd3::test::max_abs_diff;

namespace {

double relative_error(const ComplexTensor& a, const ComplexTensor& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::norm(a.elements()[i] - b.elements()[i]);
  return std::sqrt(d) / b.norm();
}

void check_ordering(const HosvdResult& r) {
  for (const auto& s : r.spectra) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(s[i] + 1e-12 >= s[i + 1]);
    CHECK(s.back() >= 0.0);
  }
}

}  // namespace

TEST_CASE("hosvd of |111>") {
  auto t = ComplexTensor::zeros({2, 2, 2});
  t.at({1, 1, 1}) = 1.0;
  const auto r = hosvd(t);
  CHECK(r.core == t);
  for (const auto& u : r.factors) CHECK(u == ComplexMatrix::identity(2));
  for (const auto& s : r.spectra) CHECK(s == std::vector<double>{1.0, 0.0});
  CHECK(r.degenerate_modes.empty());
  CHECK(reconstruct(r) == t);
}

TEST_CASE("hosvd of GHZ(0.8, 0.6) leaves the core unchanged") {
  const auto t = test::ghz(0.8, 0.6).tensor();
  const auto r = hosvd(t);
  CHECK(max_abs_diff(r.core, t) <= 1e-15);
  for (const auto& s : r.spectra) {
    CHECK(s[0] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(s[1] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(std::abs(s[0] * s[0] - 0.64) <= 1e-12);
  }
  CHECK(r.residuals.all_orthogonality == 0.0);
  CHECK(max_abs_diff(reconstruct(r), t) <= 1e-13);
}

TEST_CASE("hosvd rejects the zero tensor") {
  CHECK_THROWS_AS(hosvd(ComplexTensor::zeros({2, 2, 2})), DomainError);
}

TEST_CASE("hosvd post-conditions on random states against an RDM oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = test::random_state(rng);
    const auto t = s.tensor();
    const auto r = hosvd(t);

    CHECK(relative_error(reconstruct(r), t) <= 1e-12);
    CHECK(r.residuals.reconstruction <= 1e-12);
    CHECK(verify_all_orthogonality(r.core) <= 1e-12);
    check_ordering(r);
    for (const auto& u : r.factors) CHECK(validate_unitary(u) <= 1e-11);

    const auto rho = test::rdm_by_amplitude_sums(s);
    for (std::size_t n = 0; n < 3; ++n) {
      const auto want = test::quadratic_eigenvalues(rho[n]);
      CHECK(std::abs(r.spectra[n][0] * r.spectra[n][0] - want[0]) <= 1e-12);
      CHECK(std::abs(r.spectra[n][1] * r.spectra[n][1] - want[1]) <= 1e-12);
      CHECK(std::abs(r.spectra[n][0] * r.spectra[n][0] + r.spectra[n][1] * r.spectra[n][1] - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("hosvd on generic orders and dimensions") {
  std::mt19937_64 rng(47);
  const std::vector<std::vector<std::size_t>> shapes{{3, 2, 4}, {2, 2, 2, 2}, {5}, {3, 3}, {2, 3, 2, 3}};
  for (const auto& dims : shapes) {
    const auto t = test::random_tensor(rng, dims);
    const auto r = hosvd(t);
    CHECK(relative_error(reconstruct(r), t) <= 1e-12);
    CHECK(verify_all_orthogonality(r.core) <= 1e-12 * std::pow(t.norm(), 2));
    check_ordering(r);
    for (std::size_t n = 0; n < dims.size(); ++n) {
      double sum = 0.0;
      for (double v : r.spectra[n]) sum += v * v;
      CHECK(std::abs(sum - std::pow(t.norm(), 2)) <= 1e-12 * std::pow(t.norm(), 2));
    }
  }
}

TEST_CASE("mode_singular_values") {
  const auto g = test::ghz(1.0, 1.0).tensor();
  for (int mode = 1; mode <= 3; ++mode) {
    const auto s = mode_singular_values(g, mode);
    CHECK(s[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(s[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  }
  const auto w = test::w_state().tensor();
  for (int mode = 1; mode <= 3; ++mode) {
    const auto s = mode_singular_values(w, mode);
    CHECK(std::abs(s[0] - std::sqrt(2.0 / 3.0)) <= 1e-15);
    CHECK(std::abs(s[1] - std::sqrt(1.0 / 3.0)) <= 1e-15);
  }
  auto ket = ComplexTensor::zeros({2, 2, 2});
  ket.at({1, 1, 1}) = 1.0;
  for (int mode = 1; mode <= 3; ++mode) CHECK(mode_singular_values(ket, mode) == std::vector<double>{1.0, 0.0});
  CHECK_THROWS_AS(mode_singular_values(ket, 4), ArgumentError);
}

TEST_CASE("mode_singular_values matches the explicit three-qubit sums") {
  std::mt19937_64 rng(53);
  const auto t = test::random_tensor(rng, {2, 2, 2});
  auto sq = [&](std::size_t a, std::size_t b, std::size_t c) { return std::norm(t.at({a, b, c})); };
  const auto s1 = mode_singular_values(t, 1);
  const auto s2 = mode_singular_values(t, 2);
  const auto s3 = mode_singular_values(t, 3);
  CHECK(s1[0] == doctest::Approx(std::sqrt(sq(1, 1, 1) + sq(1, 1, 2) + sq(1, 2, 1) + sq(1, 2, 2))));
  CHECK(s1[1] == doctest::Approx(std::sqrt(sq(2, 1, 1) + sq(2, 1, 2) + sq(2, 2, 1) + sq(2, 2, 2))));
  CHECK(s2[0] == doctest::Approx(std::sqrt(sq(1, 1, 1) + sq(1, 1, 2) + sq(2, 1, 1) + sq(2, 1, 2))));
  CHECK(s2[1] == doctest::Approx(std::sqrt(sq(1, 2, 1) + sq(1, 2, 2) + sq(2, 2, 1) + sq(2, 2, 2))));
  CHECK(s3[0] == doctest::Approx(std::sqrt(sq(1, 1, 1) + sq(1, 2, 1) + sq(2, 1, 1) + sq(2, 2, 1))));
  CHECK(s3[1] == doctest::Approx(std::sqrt(sq(1, 1, 2) + sq(1, 2, 2) + sq(2, 1, 2) + sq(2, 2, 2))));
}

TEST_CASE("verify_all_orthogonality") {
  CHECK(verify_all_orthogonality(test::ghz(0.8, 0.6).tensor()) == 0.0);

  auto t = ComplexTensor::zeros({2, 2, 2});
  t.at({1, 1, 1}) = 1.0 / std::sqrt(2.0);
  t.at({2, 1, 1}) = 1.0 / std::sqrt(2.0);
  CHECK(verify_all_orthogonality(t) == doctest::Approx(0.5).epsilon(1e-15));

  // The three explicit qubit conditions, evaluated independently.
  std::mt19937_64 rng(59);
  const auto x = test::random_tensor(rng, {2, 2, 2});
  auto v = [&](std::size_t a, std::size_t b, std::size_t c) { return x.at({a, b, c}); };
  using std::conj;
  const Complex c1 = conj(v(1, 1, 1)) * v(2, 1, 1) + conj(v(1, 2, 1)) * v(2, 2, 1) + conj(v(1, 1, 2)) * v(2, 1, 2) +
                     conj(v(1, 2, 2)) * v(2, 2, 2);
  const Complex c2 = conj(v(1, 1, 1)) * v(1, 2, 1) + conj(v(2, 1, 1)) * v(2, 2, 1) + conj(v(1, 1, 2)) * v(1, 2, 2) +
                     conj(v(2, 1, 2)) * v(2, 2, 2);
  const Complex c3 = conj(v(1, 1, 1)) * v(1, 1, 2) + conj(v(2, 1, 1)) * v(2, 1, 2) + conj(v(1, 2, 1)) * v(1, 2, 2) +
                     conj(v(2, 2, 1)) * v(2, 2, 2);
  const double want = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
  CHECK(verify_all_orthogonality(x) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("reconstruct on 1000 random states") {
  std::mt19937_64 rng(61);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = test::random_state(rng).tensor();
    worst = std::max(worst, relative_error(reconstruct(hosvd(t)), t));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("property: spectra invariances") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = test::random_state(rng);
    const auto r = hosvd(s.tensor());

    // Core of a core.
    const auto rc = hosvd(r.core);
    for (std::size_t n = 0; n < 3; ++n)
      for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(rc.spectra[n][i] - r.spectra[n][i]) <= 1e-12);

    // Local unitaries.
    const auto u = test::random_local_unitaries(rng);
    const auto rv = hosvd(multilinear_transform(s.tensor(), u));
    for (std::size_t n = 0; n < 3; ++n)
      for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(rv.spectra[n][i] - r.spectra[n][i]) <= 1e-11);

    // Global phase.
    const Complex phase = std::polar(1.0, 0.37 * trial);
    const auto original = s.tensor();
    std::vector<Complex> rotated(original.elements().begin(), original.elements().end());
    for (auto& x : rotated) x *= phase;
    const auto rp = hosvd(ComplexTensor({2, 2, 2}, rotated));
    for (std::size_t n = 0; n < 3; ++n)
      for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(rp.spectra[n][i] - r.spectra[n][i]) <= 1e-13);

    // Mode relabelling permutes spectra.
    const std::array<int, 3> perm{2, 3, 1};
    const auto rq = hosvd(permute_modes(s.tensor(), perm));
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 2; ++i)
        CHECK(std::abs(rq.spectra[k][i] - r.spectra[static_cast<std::size_t>(perm[k] - 1)][i]) <= 1e-12);
  }
}

TEST_CASE("degenerate modes are flagged") {
  const auto r = hosvd(test::ghz(1.0, 1.0).tensor());
  CHECK(r.degenerate_modes == std::vector<int>{1, 2, 3});
  const auto s1 = hosvd(test::slice_s1().tensor());
  CHECK(s1.degenerate_modes == std::vector<int>{1, 2});
}
