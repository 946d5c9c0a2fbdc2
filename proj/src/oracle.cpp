#include "annealcert/oracle.hpp"

#include <cmath>
#include <ostream>
#include <vector>

namespace annealcert {

namespace {

ClosedFormPair make_pair_from_amplitudes(std::vector<cx> psi, std::vector<cx> phi) {
  QuantumState psi_state(std::move(psi));
  QuantumState phi_state(std::move(phi));
  ClosedFormPair out{psi_state, phi_state, 0.0, 0.0};
  out.exact_overlap = overlap(psi_state, phi_state);
  out.exact_distance = distance(psi_state, phi_state);
  return out;
}

}  // namespace

ClosedFormPair rabi_exact(double omega, double delta, double total_time) {
  const double half = 0.5 * omega;
  const double big_omega = std::hypot(half, delta);

  const cx psi0_amp(std::cos(half * total_time), -std::sin(half * total_time));

  cx phi0_amp, phi1_amp;
  if (big_omega == 0.0) {
    phi0_amp = 1.0;
    phi1_amp = 0.0;
  } else {
    const double c = std::cos(big_omega * total_time);
    const double s = std::sin(big_omega * total_time);
    phi0_amp = cx(c, -(half / big_omega) * s);
    phi1_amp = cx(0.0, -(delta / big_omega) * s);
  }
  return make_pair_from_amplitudes({psi0_amp, 0.0}, {phi0_amp, phi1_amp});
}

ClosedFormPair commuting_exact(double lam, double total_time) {
  const double phase = lam * total_time;
  return make_pair_from_amplitudes({1.0, 0.0}, {cx(std::cos(phase), -std::sin(phase)), 0.0});
}

ReferenceState richardson_reference(const HamiltonianFn& h, const QuantumState& psi0,
                                    double total_time) {
  const std::size_t base = 8 * default_step_count(h, total_time);
  const Trajectory coarse = evolve(h, psi0, total_time, base);
  const Trajectory fine = evolve(h, psi0, total_time, 2 * base);

  const std::vector<cx>& c = coarse.final_state().amplitudes();
  const std::vector<cx>& f = fine.final_state().amplitudes();
  std::vector<cx> extrapolated(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) extrapolated[i] = (4.0 * f[i] - c[i]) / 3.0;

  ReferenceState out{QuantumState(std::move(extrapolated), kTrajectoryNormTolerance),
                     distance(fine.final_state(), coarse.final_state()) / 3.0, 2 * base};
  return out;
}

namespace {

struct SelftestReporter {
  std::ostream& out;
  bool all_ok = true;

  void check(const std::string& name, bool ok, double value, double limit) {
    out << (ok ? "[ok]   " : "[FAIL] ") << name << " (value " << value << ", limit " << limit
        << ")\n";
    all_ok = all_ok && ok;
  }
};

}  // namespace

bool oracle_selftest(std::ostream& out) {
  SelftestReporter rep{out};

  // Closed-form self-consistency.
  {
    double worst_norm = 0.0, worst_identity = 0.0;
    for (double omega : {0.0, 0.5, 1.0, 2.0}) {
      for (double delta : {0.0, 0.3, 1.0}) {
        for (double T : {0.0, 1.0, 4.0, 10.0}) {
          const ClosedFormPair p = rabi_exact(omega, delta, T);
          worst_norm = std::max(worst_norm, std::abs(p.phi_T.norm() - 1.0));
          // distance^2 = 2 - 2 Re<psi|phi>, compared at the squared level
          // where the identity is well-conditioned for every distance.
          const double identity_gap = std::abs(p.exact_distance * p.exact_distance -
                                               (2.0 - 2.0 * p.exact_overlap.real()));
          worst_identity = std::max(worst_identity, identity_gap);
        }
      }
    }
    rep.check("rabi_exact normalization", worst_norm <= 1e-14, worst_norm, 1e-14);
    rep.check("rabi_exact distance/overlap identity", worst_identity <= 1e-14, worst_identity,
              1e-14);
  }

  // delta = 0 collapses the perturbed path onto the ideal one.
  {
    const ClosedFormPair p = rabi_exact(1.3, 0.0, 5.0);
    rep.check("rabi_exact delta=0 distance", p.exact_distance <= 1e-15, p.exact_distance, 1e-15);
  }

  // Transition probability sin^2(delta T) at omega = 0.
  {
    const ClosedFormPair p = rabi_exact(0.0, 0.3, 1.0);
    const double prob = std::norm(p.phi_T.amplitudes()[1]);
    const double expected = std::sin(0.3) * std::sin(0.3);
    const double err = std::abs(prob - expected);
    rep.check("rabi_exact transition probability", err <= 1e-14, err, 1e-14);
  }

  // Commuting closed form: distance 2|sin(lam T / 2)|, saturation ratio
  // monotone decreasing in lam T and -> 1 as lam T -> 0.
  {
    double worst = 0.0;
    double prev_ratio = 1.0;
    bool monotone = true;
    for (double phase : {1e-4, 0.01, 0.1, 0.5, 1.0, 2.0, 3.14159}) {
      const ClosedFormPair p = commuting_exact(phase, 1.0);
      worst = std::max(worst,
                       std::abs(p.exact_distance - 2.0 * std::abs(std::sin(0.5 * phase))));
      const double ratio = p.exact_distance / phase;
      if (ratio > prev_ratio + 1e-12) monotone = false;
      prev_ratio = ratio;
    }
    rep.check("commuting_exact closed form", worst <= 1e-14, worst, 1e-14);
    rep.check("commuting_exact saturation monotone", monotone, monotone ? 1.0 : 0.0, 1.0);
  }

  // Propagator agreement: evolve at default steps vs the closed forms.
  {
    double worst = 0.0;
    for (double omega : {0.0, 1.0, 2.0}) {
      for (double delta : {0.0, 0.5, 1.0}) {
        const double T = 3.0;
        const HermitianOperator h = from_pauli_terms(
            std::vector<PauliTerm>{{0.5 * omega, "Z"}, {delta, "X"}}, 1);
        const HamiltonianFn fn = [&h](double) { return h; };
        const Trajectory tr = evolve(fn, QuantumState::basis_state(1, 0), T,
                                     default_step_count(fn, T));
        const ClosedFormPair p = rabi_exact(omega, delta, T);
        worst = std::max(worst, distance(tr.final_state(), p.phi_T));
      }
    }
    rep.check("evolve vs rabi_exact", worst <= 1e-8, worst, 1e-8);
  }

  // Richardson reference against an exactly solvable case.
  {
    const HermitianOperator h =
        from_pauli_terms(std::vector<PauliTerm>{{0.5, "Z"}, {0.3, "X"}}, 1);
    const ReferenceState ref =
        richardson_reference([&h](double) { return h; }, QuantumState::basis_state(1, 0), 2.0);
    const ClosedFormPair p = rabi_exact(1.0, 0.3, 2.0);
    const double err = distance(ref.state, p.phi_T);
    rep.check("richardson_reference vs rabi_exact", err <= 1e-10, err, 1e-10);
  }

  // Zero Hamiltonian leaves the state alone.
  {
    const HamiltonianFn fn = [](double) { return HermitianOperator::zero(4); };
    const QuantumState psi0 = QuantumState::uniform_superposition(2);
    const ReferenceState ref = richardson_reference(fn, psi0, 5.0);
    const double err = distance(ref.state, psi0);
    rep.check("richardson_reference zero Hamiltonian", err <= 1e-14, err, 1e-14);
  }

  out << (rep.all_ok ? "oracle selftest: all checks passed\n"
                     : "oracle selftest: FAILURES detected\n");
  return rep.all_ok;
}

}  // namespace annealcert
