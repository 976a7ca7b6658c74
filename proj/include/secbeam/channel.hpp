#pragma once

#include <cstddef>
#include <vector>

#include "secbeam/numerics.hpp"
#include "secbeam/rng.hpp"

namespace secbeam {

using Cvec = std::vector<Complex>;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

struct Geometry {
  Point bs;
  Point irs;
  std::vector<Point> users;
  std::vector<Point> eves;
};

struct PathLossParams {
  double pl0_db = 30.0;   // attenuation at the reference distance
  double d0 = 1.0;        // reference distance in meters
  double exp_bs_mu = 3.2;
  double exp_bs_irs = 2.2;
  double exp_irs_mu = 2.2;
};

struct DopplerParams {
  double velocity = 10.0;             // m/s
  double carrier_freq = 2.0e9;        // Hz
  double light_speed = 2.99792458e8;  // m/s
  double t_delay = 1.0e-3;            // s

  double doppler_shift() const { return velocity * carrier_freq / light_speed; }
};

struct ErrorRadii {
  double bu = 0.0;
  double ru = 0.0;
  double be = 0.0;
  double re = 0.0;
};

// All channel blocks of one time slot, plus the per-link average power gains
// needed to redraw innovations with the right scale when the set evolves.
// Blocks: h_br is L x N, h_bu[k] has N entries, h_ru[k] has L, h_be[m] has N,
// h_re[m] has L.
struct ChannelSet {
  ComplexMatrix h_br;
  std::vector<Cvec> h_bu;
  std::vector<Cvec> h_ru;
  std::vector<Cvec> h_be;
  std::vector<Cvec> h_re;

  double gain_br = 0.0;
  std::vector<double> gain_bu;
  std::vector<double> gain_ru;
  std::vector<double> gain_be;
  std::vector<double> gain_re;

  std::size_t n_irs() const { return h_br.rows(); }
  std::size_t n_antennas() const { return h_br.cols(); }
  std::size_t n_users() const { return h_bu.size(); }
  std::size_t n_eves() const { return h_be.size(); }
};

// Linear power gain at distance d: pl0_db at d0, falling by
// 10 * exponent * log10(d / d0) dB.
double path_gain(double d, double exponent, const PathLossParams& plp);

// Jakes autocorrelation coefficient rho = J0(2 pi f_D T_delay).
double autocorrelation(const DopplerParams& dp);

// Rayleigh small-scale fading scaled by sqrt(path gain) on every link.
// Eavesdropper links reuse the user-link exponents. Set n_irs_elements to
// zero to model a deployment without the reflecting surface.
ChannelSet sample_initial(const Geometry& geom, std::size_t n_antennas,
                          std::size_t n_irs_elements, const PathLossParams& plp,
                          Rng& rng);

// Gauss-Markov step: h' = rho h + sqrt(1 - rho^2) g with fresh innovations g
// drawn at each block's own per-entry variance. rho = 1 returns the input.
ChannelSet evolve(const ChannelSet& h, double rho, Rng& rng);

// Adds a norm-bounded perturbation to every user/eavesdropper vector, drawn
// uniformly in the complex ball of the matching radius. The BS-IRS block is
// left untouched.
ChannelSet apply_error(const ChannelSet& h_est, const ErrorRadii& radii, Rng& rng);

}  // namespace secbeam
