#include "qsep/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <thread>

#include "qsep/concurrence.hpp"
#include "qsep/entropy.hpp"
#include "qsep/error.hpp"
#include "qsep/io.hpp"
#include "qsep/states.hpp"
#include "qsep/structure.hpp"

namespace qsep {

namespace {

enum Prop : int {
  kEigReconstruction,
  kPartialTraceProduct,
  kPartialTranspose,
  kSqrtSquared,
  kWernerGrid,
  kPauliReconstruction,
  kConcurrenceIdentity,
  kBlochNorms,
  kWernerDecomposition,
  kExampleSpectra,
  kMutualNonnegative,
  kTsallisContinuity,
  kProductStates,
  kPureConditional,
  kTsallisInfinity,
  kConcurrenceInvariance,
  kPptEquivalence,
  kPureRoutes,
  kMarginalPreservation,
  kKlein,
  kOverlapReconstruction,
  kConditionalProbabilities,
  kCommutingDecomposition,
  kDeficitBound,
  kPropCount
};

constexpr const char* kPropNames[kPropCount] = {
    "linalg.eig_reconstruction",
    "linalg.partial_trace_product",
    "linalg.partial_transpose",
    "linalg.sqrt_squared",
    "states.werner_grid",
    "states.pauli_reconstruction",
    "states.concurrence_identity",
    "states.bloch_norms",
    "states.werner_decomposition",
    "states.example_spectra",
    "entropy.mutual_nonnegative",
    "entropy.tsallis_continuity",
    "entropy.product_states",
    "entropy.pure_conditional",
    "entropy.tsallis_infinity_agreement",
    "concurrence.invariance",
    "concurrence.ppt_equivalence",
    "concurrence.pure_routes",
    "structure.marginal_preservation",
    "structure.klein",
    "structure.overlap_reconstruction",
    "structure.conditional_probabilities",
    "structure.commuting_decomposition",
    "structure.deficit_bound",
};

struct Check {
  int property;
  bool pass;
  std::string detail;
};

class Recorder {
 public:
  Recorder(std::vector<Check>& out, double scale) : out_(out), scale_(scale) {}

  double tol(double base) const { return base * scale_; }

  // Runs `body`, which returns an empty string on success or a failure
  // description. Exceptions count as failures.
  void run(Prop p, const std::function<std::string()>& body) {
    try {
      std::string detail = body();
      out_.push_back({p, detail.empty(), std::move(detail)});
    } catch (const std::exception& e) {
      out_.push_back({p, false, std::string("exception: ") + e.what()});
    }
  }

 private:
  std::vector<Check>& out_;
  double scale_;
};

std::string state_detail(const std::string& what, const ComplexMatrix& m) {
  return what + " state=" + io::matrix_to_json(m).dump();
}

double spectrum_gap(const RealVector& a, const RealVector& b) {
  const Eigen::Index n = std::max(a.size(), b.size());
  double gap = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = i < a.size() ? a(i) : 0.0;
    const double y = i < b.size() ? b(i) : 0.0;
    gap = std::max(gap, std::abs(x - y));
  }
  return gap;
}

ComplexMatrix random_hermitian(std::uint64_t seed, int n) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  return (g + g.adjoint()) * 0.5;
}

// Commuting, nonnegative-weight decomposition: diagonal factors rotated into
// one random local basis per side.
LocalDecomposition random_commuting_decomposition(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> count(2, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  const ComplexMatrix ua = random_unitary2(sample_seed(seed, 1));
  const ComplexMatrix ub = random_unitary2(sample_seed(seed, 2));
  const int k = count(gen);
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0.0;
  for (auto& x : w) total += (x = expo(gen));
  LocalDecomposition dec;
  for (int j = 0; j < k; ++j) {
    const double x = unit(gen);
    const double y = unit(gen);
    ComplexMatrix da = ComplexMatrix::Zero(2, 2);
    ComplexMatrix db = ComplexMatrix::Zero(2, 2);
    da(0, 0) = x;
    da(1, 1) = 1.0 - x;
    db(0, 0) = y;
    db(1, 1) = 1.0 - y;
    dec.terms.push_back({w[static_cast<std::size_t>(j)] / total, DensityMatrix::single(ua * da * ua.adjoint()),
                         DensityMatrix::single(ub * db * ub.adjoint())});
  }
  return dec;
}

void overlap_and_bound_checks(Recorder& rec, const DensityMatrix& rho, const Tolerances& tol,
                              const std::string& label) {
  rec.run(kOverlapReconstruction, [&]() -> std::string {
    const AlphaBetaFrame frame = alpha_beta_frame(rho, tol);
    const OverlapTensor t = overlap_tensor(rho, frame, tol);
    const double ea = (t.marginal_a() - frame.eig_a.values).cwiseAbs().maxCoeff();
    const double eb = (t.marginal_b() - frame.eig_b.values).cwiseAbs().maxCoeff();
    if (std::max(ea, eb) > rec.tol(1e-9))
      return state_detail(label + " marginal reconstruction residual " + io::format_number(std::max(ea, eb)), rho.matrix());
    return {};
  });
  rec.run(kDeficitBound, [&]() -> std::string {
    const double d = quantum_deficit(rho, tol);
    const double s = mutual_entropy(rho, tol);
    const double gap = deficit_mutual_gap(rho, tol);
    const double sd = spectral_entropy(decohere(rho, tol).joint.p.reshaped(), tol);
    const double alt = sd - von_neumann(partial_trace(rho, Subsystem::A), tol) -
                       von_neumann(partial_trace(rho, Subsystem::B), tol);
    if (d < -rec.tol(1e-9) || d > s + rec.tol(1e-9) || gap > rec.tol(1e-9) ||
        std::abs(gap - alt) > rec.tol(1e-9))
      return state_detail(label + " D=" + io::format_number(d) + " S=" + io::format_number(s) +
                              " gap=" + io::format_number(gap) + " alt=" + io::format_number(alt),
                          rho.matrix());
    return {};
  });
}

void audit_sample(std::uint64_t index, std::uint64_t seed, const Tolerances& tol, double scale,
                  std::vector<Check>& out) {
  Recorder rec(out, scale);
  auto sub = [&](std::uint64_t k) { return sample_seed(seed, k); };
  const int rank = 1 + static_cast<int>(index % 4);

  rec.run(kEigReconstruction, [&]() -> std::string {
    const ComplexMatrix h = random_hermitian(sub(1), 4);
    const EigenSystem e = hermitian_eig(h, tol);
    const ComplexMatrix& v = e.vectors;
    const double recon = max_abs(v * e.values.cast<Complex>().asDiagonal() * v.adjoint() - h);
    const double unit = max_abs(v.adjoint() * v - ComplexMatrix::Identity(4, 4));
    const double trace = std::abs(e.values.sum() - h.trace().real());
    if (recon > rec.tol(1e-9) || unit > rec.tol(1e-9) || trace > rec.tol(1e-9))
      return state_detail("recon=" + io::format_number(recon) + " unitarity=" + io::format_number(unit), h);
    return {};
  });

  const DensityMatrix qa = random_density(sub(2), Dims{2, 1}, 1 + static_cast<int>(index % 2));
  const DensityMatrix qb = random_density(sub(3), Dims{2, 1}, 1 + static_cast<int>((index / 2) % 2));
  const DensityMatrix product(tensor_product(qa.matrix(), qb.matrix()), Dims{2, 2}, tol);

  rec.run(kPartialTraceProduct, [&]() -> std::string {
    const double ea = max_abs(partial_trace(product, Subsystem::A).matrix() - qa.matrix());
    const double eb = max_abs(partial_trace(product, Subsystem::B).matrix() - qb.matrix());
    if (std::max(ea, eb) > rec.tol(1e-12))
      return state_detail("partial trace residual " + io::format_number(std::max(ea, eb)), product.matrix());
    return {};
  });

  const DensityMatrix rho = random_mixed(sub(4), rank);

  rec.run(kPartialTranspose, [&]() -> std::string {
    const ComplexMatrix pt = partial_transpose(rho, Subsystem::B);
    const double tr = std::abs(pt.trace() - Complex(1.0));
    const double inv = max_abs(partial_transpose(pt, rho.dims(), Subsystem::B) - rho.matrix());
    if (tr > rec.tol(1e-12) || inv > rec.tol(1e-12))
      return state_detail("trace err " + io::format_number(tr) + " involution err " + io::format_number(inv),
                          rho.matrix());
    return {};
  });

  rec.run(kSqrtSquared, [&]() -> std::string {
    const ComplexMatrix r = psd_function(rho.matrix(), MatrixFunction::Sqrt, tol);
    const double err = max_abs(r * r - rho.matrix());
    if (err > rec.tol(1e-8)) return state_detail("sqrt^2 residual " + io::format_number(err), rho.matrix());
    return {};
  });

  const PureStateAmplitudes amps = random_pure(sub(5));
  const DensityMatrix pure = pure_density(amps, tol);
  const auto [sa, sb] = bloch_vectors(amps);

  rec.run(kPauliReconstruction, [&]() -> std::string {
    const double err = max_abs(pauli_reconstruction(sa, sb, correlation_tensor(amps)) - pure.matrix());
    if (err > rec.tol(1e-9)) return state_detail("Pauli reconstruction residual " + io::format_number(err), pure.matrix());
    return {};
  });
  rec.run(kConcurrenceIdentity, [&]() -> std::string {
    const PurityCheck pc = purity_check(amps);
    if (pc.concurrence_identity > rec.tol(1e-10))
      return state_detail("concurrence identity residual " + io::format_number(pc.concurrence_identity), pure.matrix());
    return {};
  });
  rec.run(kBlochNorms, [&]() -> std::string {
    const double dn = std::abs(sa.norm() - sb.norm());
    const double ds = std::abs(von_neumann(partial_trace(pure, Subsystem::A), tol) -
                               von_neumann(partial_trace(pure, Subsystem::B), tol));
    if (dn > rec.tol(1e-10) || ds > rec.tol(1e-9))
      return state_detail("|sA|-|sB| " + io::format_number(dn) + " S(A)-S(B) " + io::format_number(ds),
                          pure.matrix());
    return {};
  });

  rec.run(kMutualNonnegative, [&]() -> std::string {
    const double s = mutual_entropy(rho, tol);
    if (s < -rec.tol(1e-10)) return state_detail("mutual " + io::format_number(s), rho.matrix());
    return {};
  });
  rec.run(kTsallisContinuity, [&]() -> std::string {
    const double s1 = von_neumann(rho, tol);
    const double up = tsallis(rho, 1.0 + 1e-4, tol);
    const double down = tsallis(rho, 1.0 - 1e-4, tol);
    if (std::abs(up - s1) > rec.tol(1e-3) || std::abs(down - s1) > rec.tol(1e-3) ||
        std::abs(0.5 * (up + down) - s1) > rec.tol(1e-6))
      return state_detail("S(1+h)=" + io::format_number(up) + " S(1-h)=" + io::format_number(down) +
                              " S1=" + io::format_number(s1),
                          rho.matrix());
    return {};
  });
  rec.run(kProductStates, [&]() -> std::string {
    const double diff = entropy_difference(product, Subsystem::A, 1.0, tol);
    const double sB = von_neumann(qb, tol);
    const double mutual = mutual_entropy(product, tol);
    if (std::abs(diff - sB) > rec.tol(1e-10) || diff < -rec.tol(1e-10) || std::abs(mutual) > rec.tol(1e-10))
      return state_detail("diff " + io::format_number(diff) + " S(B) " + io::format_number(sB) + " mutual " +
                              io::format_number(mutual),
                          product.matrix());
    return {};
  });
  rec.run(kPureConditional, [&]() -> std::string {
    const double ca = conditional_tsallis(pure, Subsystem::A, 1.0, tol);
    const double cb = conditional_tsallis(pure, Subsystem::B, 1.0, tol);
    const double c = pure_concurrence(amps);
    const bool zero = std::abs(ca) <= rec.tol(1e-10) && std::abs(cb) <= rec.tol(1e-10);
    if (ca > rec.tol(1e-10) || cb > rec.tol(1e-10) || zero != (c <= 1e-8))
      return state_detail("cond " + io::format_number(ca) + "/" + io::format_number(cb) + " C " +
                              io::format_number(c),
                          pure.matrix());
    return {};
  });

  rec.run(kConcurrenceInvariance, [&]() -> std::string {
    const double c = concurrence(rho, tol);
    const DensityMatrix flipped(spin_flip(rho), Dims{2, 2}, tol);
    const ComplexMatrix u = tensor_product(random_unitary2(sub(6)), random_unitary2(sub(7)));
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), Dims{2, 2}, tol);
    const double cf = concurrence(flipped, tol);
    const double cu = concurrence(rotated, tol);
    if (c < 0.0 || c > 1.0 + 1e-10 || std::abs(c - cf) > rec.tol(1e-8) || std::abs(c - cu) > rec.tol(1e-8))
      return state_detail("C=" + io::format_number(c) + " flip=" + io::format_number(cf) +
                              " LU=" + io::format_number(cu),
                          rho.matrix());
    return {};
  });
  rec.run(kPptEquivalence, [&]() -> std::string {
    const double c = concurrence(rho, tol);
    const double m = ppt_min_eigenvalue(rho, tol);
    if ((c > 1e-8) != (m < -1e-8))
      return state_detail("C=" + io::format_number(c) + " ppt_min=" + io::format_number(m), rho.matrix());
    return {};
  });
  rec.run(kPureRoutes, [&]() -> std::string {
    const double c1 = pure_concurrence(amps);
    const double c2 = concurrence(pure, tol);
    const double c3 = std::sqrt(std::max(0.0, 1.0 - sa.norm() * sa.norm()));
    if (std::abs(c1 - c2) > rec.tol(1e-8) || std::abs(c1 - c3) > rec.tol(1e-8))
      return state_detail("pure=" + io::format_number(c1) + " mixed=" + io::format_number(c2) +
                              " bloch=" + io::format_number(c3),
                          pure.matrix());
    return {};
  });

  rec.run(kMarginalPreservation, [&]() -> std::string {
    const Decoherence d = decohere(rho, tol);
    const double ea = max_abs(partial_trace(d.rho_d, Subsystem::A).matrix() -
                              partial_trace(rho, Subsystem::A).matrix());
    const double eb = max_abs(partial_trace(d.rho_d, Subsystem::B).matrix() -
                              partial_trace(rho, Subsystem::B).matrix());
    const double idem = max_abs(decohere(d.rho_d, tol).rho_d.matrix() - d.rho_d.matrix());
    const double ja = (d.joint.row_sums() - d.frame.eig_a.values).cwiseAbs().maxCoeff();
    const double jb = (d.joint.col_sums() - d.frame.eig_b.values).cwiseAbs().maxCoeff();
    if (std::max(ea, eb) > rec.tol(1e-9) || idem > rec.tol(1e-9) || std::max(ja, jb) > rec.tol(1e-10))
      return state_detail("marginal err " + io::format_number(std::max(ea, eb)) + " idempotence " +
                              io::format_number(idem) + " joint " + io::format_number(std::max(ja, jb)),
                          rho.matrix());
    return {};
  });
  rec.run(kKlein, [&]() -> std::string {
    for (const DensityMatrix* state : {&rho, &pure}) {
      const Decoherence d = decohere(*state, tol);
      const double s = von_neumann(*state, tol);
      const double sd = von_neumann(d.rho_d, tol);
      const bool equal = std::abs(sd - s) <= rec.tol(1e-8);
      if (sd < s - rec.tol(1e-9) || equal != commutes_with_marginals(*state, tol))
        return state_detail("S=" + io::format_number(s) + " Sd=" + io::format_number(sd), state->matrix());
      // The decohered state commutes with its marginals and has zero deficit.
      if (!commutes_with_marginals(d.rho_d, tol) || std::abs(quantum_deficit(d.rho_d, tol)) > rec.tol(1e-8))
        return state_detail("decohered state is not a fixed point", d.rho_d.matrix());
    }
    return {};
  });
  rec.run(kConditionalProbabilities, [&]() -> std::string {
    const Decoherence d = decohere(rho, tol);
    const RealVector q = d.joint.col_sums();
    const RealVector p = d.joint.row_sums();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double pab = d.joint.p(a, b);
        if (q(b) > tol.support && (pab / q(b) < -1e-12 || pab / q(b) > 1.0 + rec.tol(1e-10)))
          return state_detail("P(a|b) out of range", rho.matrix());
        if (p(a) > tol.support && (pab / p(a) < -1e-12 || pab / p(a) > 1.0 + rec.tol(1e-10)))
          return state_detail("P(b|a) out of range", rho.matrix());
      }
    return {};
  });
  rec.run(kCommutingDecomposition, [&]() -> std::string {
    const LocalDecomposition dec = random_commuting_decomposition(sub(8));
    if (!decomposition_commutes(dec, tol)) return "random commuting decomposition reported non-commuting";
    const DensityMatrix r = reconstruct(dec, tol);
    const double da = entropy_difference(r, Subsystem::A, 1.0, tol);
    const double db = entropy_difference(r, Subsystem::B, 1.0, tol);
    if (da < -rec.tol(1e-9) || db < -rec.tol(1e-9))
      return state_detail("diffs " + io::format_number(da) + "/" + io::format_number(db), r.matrix());
    return {};
  });

  overlap_and_bound_checks(rec, rho, tol, "random");
}

double power_trace(const DensityMatrix& rho, double q, const Tolerances& tol) {
  const RealVector spec = clip_spectrum(hermitian_eig(rho.matrix(), tol).values, tol);
  double s = 0.0;
  for (Eigen::Index i = 0; i < spec.size(); ++i) s += std::pow(spec(i), q);
  return s;
}

// Sign of S_q(A|B) at large q. Its denominator 1 + (1-q) S_q(side) equals
// Tr rho_side^q > 0, so the sign is that of Tr rho_side^q - Tr rho_AB^q;
// both traces underflow toward 1e-15 at q = 50, hence the relative test.
bool large_q_sign_nonnegative(const DensityMatrix& rho, Subsystem side, double q, const Tolerances& tol) {
  const double joint = power_trace(rho, q, tol);
  const double marginal = power_trace(partial_trace(rho, side), q, tol);
  return marginal - joint >= -1e-9 * std::max(joint, marginal);
}

std::vector<DensityMatrix> registry_states() {
  std::vector<DensityMatrix> out;
  for (ExampleId id : kAllExamples) out.push_back(example_state(id));
  auto [e, s] = isospectral_pair();
  out.push_back(e);
  out.push_back(s);
  for (int k = 0; k <= 10; ++k) out.push_back(werner(k / 10.0));
  return out;
}

void fixed_checks(const Tolerances& tol, double scale, std::vector<Check>& out) {
  Recorder rec(out, scale);

  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    rec.run(kWernerGrid, [&]() -> std::string {
      const DensityMatrix w = werner(p);
      const ComplexMatrix half = identity2() * 0.5;
      const double ma = max_abs(partial_trace(w, Subsystem::A).matrix() - half);
      const double mb = max_abs(partial_trace(w, Subsystem::B).matrix() - half);
      RealVector expected(4);
      expected << (3 * p + 1) / 4, (1 - p) / 4, (1 - p) / 4, (1 - p) / 4;
      const double spec = spectrum_gap(hermitian_eig(w.matrix(), tol).values, expected);
      if (std::max(ma, mb) > rec.tol(1e-12) || spec > rec.tol(1e-12))
        return "p=" + io::format_number(p) + " marginal " + io::format_number(std::max(ma, mb)) + " spectrum " +
               io::format_number(spec);
      return {};
    });
    rec.run(kWernerDecomposition, [&]() -> std::string {
      const LocalDecomposition dec = werner_local_decomposition(p);
      const double err = max_abs(reconstruct(dec, tol).matrix() - werner(p).matrix());
      const bool nonneg = dec.all_weights_nonnegative(1e-12);
      if (err > rec.tol(1e-12) || nonneg != (p <= 1.0 / 3.0 + 1e-12))
        return "p=" + io::format_number(p) + " reconstruction " + io::format_number(err);
      return {};
    });
  }

  const std::pair<ExampleId, std::array<double, 4>> spectra[] = {
      {ExampleId::E1, {5.0 / 6, 1.0 / 6, 0, 0}}, {ExampleId::E2, {4.0 / 6, 2.0 / 6, 0, 0}},
      {ExampleId::E3, {2.0 / 3, 1.0 / 3, 0, 0}}, {ExampleId::E4, {1, 0, 0, 0}},
      {ExampleId::E5, {0.5, 0.5, 0, 0}},         {ExampleId::E6, {0.5, 0.5, 0, 0}},
  };
  for (const auto& [id, expected] : spectra) {
    rec.run(kExampleSpectra, [&]() -> std::string {
      const RealVector ev = hermitian_eig(example_state(id).matrix(), tol).values;
      const double gap = spectrum_gap(ev, Eigen::Map<const RealVector>(expected.data(), 4));
      if (gap > rec.tol(1e-12)) return std::string(to_string(id)) + " spectrum gap " + io::format_number(gap);
      return {};
    });
  }

  std::vector<DensityMatrix> tinf_states;
  for (ExampleId id : kAllExamples) tinf_states.push_back(example_state(id));
  for (int k = 0; k <= 20; ++k) tinf_states.push_back(werner(k / 20.0));
  tinf_states.push_back(werner(1.0 / 3.0));
  for (const auto& s : tinf_states) {
    rec.run(kTsallisInfinity, [&]() -> std::string {
      const TsallisInfinityResult crit = tsallis_infinity_criterion(s, tol);
      const bool a50 = large_q_sign_nonnegative(s, Subsystem::A, 50.0, tol);
      const bool b50 = large_q_sign_nonnegative(s, Subsystem::B, 50.0, tol);
      if (crit.satisfied_a != a50 || crit.satisfied_b != b50)
        return state_detail("criterion disagrees with q=50", s.matrix());
      return {};
    });
  }

  for (const auto& s : registry_states()) overlap_and_bound_checks(rec, s, tol, "registry");
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool AuditSummary::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const AuditProperty& p) { return p.ok(); });
}

void AuditSummary::print(std::ostream& out) const {
  out << "audit n=" << options.n << " seed=" << options.seed << "\n";
  std::size_t failed = 0;
  for (const auto& p : properties) {
    out << (p.ok() ? "PASS " : "FAIL ") << p.name << " " << p.passed << "/" << p.total << "\n";
    if (!p.ok()) ++failed;
  }
  for (const auto& p : properties)
    for (const auto& f : p.failures) out << "  failure " << p.name << " " << f << "\n";
  if (failed == 0)
    out << "audit: all " << properties.size() << " properties passed\n";
  else
    out << "audit: " << failed << " of " << properties.size() << " properties failed\n";
}

AuditSummary run_audit(const AuditOptions& options) {
  if (options.n < 1) throw Error("n", options.n, "audit needs n >= 1");
  const Tolerances tol = Tolerances{}.scaled(options.tolerance_scale);
  const auto n = static_cast<std::size_t>(options.n);

  std::vector<std::vector<Check>> per_sample(n);
  const int jobs = std::max(1, std::min(options.jobs, options.n));
  auto worker = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < n; i += static_cast<std::size_t>(jobs))
      audit_sample(i, sample_seed(options.seed, i), tol, options.tolerance_scale, per_sample[i]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  std::vector<Check> fixed;
  fixed_checks(tol, options.tolerance_scale, fixed);

  AuditSummary summary;
  summary.options = options;
  for (int p = 0; p < kPropCount; ++p) summary.properties.push_back({kPropNames[p], 0, 0, {}});
  auto merge = [&](const Check& c, const std::string& where) {
    auto& prop = summary.properties[static_cast<std::size_t>(c.property)];
    ++prop.total;
    if (c.pass)
      ++prop.passed;
    else
      prop.failures.push_back(where + " " + c.detail);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& c : per_sample[i])
      merge(c, "sample=" + std::to_string(i) + " seed=" + std::to_string(sample_seed(options.seed, i)));
  for (const auto& c : fixed) merge(c, "fixed");
  return summary;
}

}  // namespace qsep
