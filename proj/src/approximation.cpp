#include "stsurf/approximation.hpp"

#include <algorithm>
#include <cctype>

namespace stsurf {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

long long checked_quotient(const Real& value) {
  if (value > Real(1e18)) throw InsufficientPrecision("partial quotient exceeds 64 bits; raise --precision or lower --depth");
  return static_cast<long long>(value);
}

long long narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX)) {
    throw InsufficientPrecision("convergent denominator exceeds 64 bits; lower --depth");
  }
  return static_cast<long long>(v);
}

}  // namespace

bool ApproximationReport::all_within_bound() const {
  return std::all_of(convergents.begin(), convergents.end(), [](const ConvergentReport& c) { return c.within_bound; });
}

Real parse_direction(const std::string& input) {
  const std::string text = trim(input);
  if (text == "golden") return (1 + boost::multiprecision::sqrt(Real(5))) / 2;
  if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') {
    const Rational n = parse_rational(text.substr(5, text.size() - 6));
    if (n <= 0) throw std::invalid_argument("sqrt argument must be positive");
    return boost::multiprecision::sqrt(Real(boost::multiprecision::numerator(n)) /
                                       Real(boost::multiprecision::denominator(n)));
  }
  if (text.rfind("cf:", 0) == 0) {
    std::vector<long long> quotients;
    std::size_t pos = 3;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const std::string item = trim(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      const Rational a = parse_rational(item);
      if (a < 1 || boost::multiprecision::denominator(a) != 1) {
        throw std::invalid_argument("partial quotients must be positive integers: '" + item + "'");
      }
      quotients.push_back(static_cast<long long>(boost::multiprecision::numerator(a)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (quotients.empty()) throw std::invalid_argument("empty continued fraction");
    Real x = 0;
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) x = 1 / (Real(*it) + x);
    return 1 / x;
  }
  if (text.find('/') != std::string::npos) {
    const Rational r = parse_rational(text);
    return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.' && c != 'e' && c != 'E' && c != '-' && c != '+') {
      throw std::invalid_argument("cannot parse direction '" + input + "'");
    }
  }
  if (text.empty()) throw std::invalid_argument("empty direction");
  return Real(text);
}

ApproximationReport approximation_report(const Origami& o, const Real& theta_in, int depth,
                                         const ApproximationOptions& options) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  PrecisionScope scope(options.digits);
  const Real theta(theta_in);
  if (theta <= 0) throw std::invalid_argument("direction slope must be positive");

  ApproximationReport report;
  report.theta = theta.str(30);
  report.squares = o.squares();
  report.transposed = theta < 1;
  if (depth == 0) return report;

  const Origami frame = report.transposed ? o.transpose() : o;
  const Real steep = report.transposed ? Real(1 / theta) : theta;
  const Real x = 1 / steep;  // theta', in (0, 1]
  const Real resolution = boost::multiprecision::pow(Real(10), -static_cast<int>(options.digits) + 10);
  const Real exact_zero = boost::multiprecision::pow(Real(10), -static_cast<int>(options.digits) + 5);

  // p_{-1}/q_{-1} = 1/0, p_0/q_0 = 0/1.
  std::vector<long long> ps{1, 0}, qs{0, 1};
  Real r = x;
  for (int i = 1; i <= depth + 1; ++i) {
    if (r <= 0) throw RationalDirection("direction " + report.theta + " is rational: expansion ends after " +
                                        std::to_string(i - 1) + " quotients");
    const Real inv = 1 / r;
    const Real a = boost::multiprecision::floor(inv);
    const long long ai = checked_quotient(a);
    r = inv - a;
    report.partial_quotients.push_back(ai);
    const std::size_t m = ps.size();
    ps.push_back(narrow(static_cast<__int128>(ai) * ps[m - 1] + ps[m - 2]));
    qs.push_back(narrow(static_cast<__int128>(ai) * qs[m - 1] + qs[m - 2]));
    const Real q_real(qs.back());
    if (q_real * q_real * resolution > 1) {
      throw InsufficientPrecision(std::to_string(options.digits) + " digits cannot resolve " +
                                  std::to_string(depth) + " convergents; raise --precision");
    }
    // A convergent that matches theta' to working precision ends the expansion.
    if (i <= depth && abs(q_real * x - Real(ps.back())) < exact_zero * q_real) {
      throw RationalDirection("direction " + report.theta + " is rational to " + std::to_string(options.digits) +
                              " digits: expansion ends after " + std::to_string(i) + " quotients");
    }
  }

  const int k = o.squares();
  const long long cap = options.fairly_good_cap > 0 ? options.fairly_good_cap : 4LL * k + 2;
  long long record = 0;
  for (int n = 1; n <= depth; ++n) {
    ConvergentReport c;
    c.index = n;
    c.p = ps[static_cast<std::size_t>(n) + 1];
    c.q = qs[static_cast<std::size_t>(n) + 1];
    c.next_quotient = report.partial_quotients[static_cast<std::size_t>(n)];
    const Slope steep_slope = Slope::make(c.p, c.q);
    c.direction = report.transposed ? steep_slope.transposed() : steep_slope;

    const auto dec = cylinder_decomposition(frame, steep_slope);
    c.cylinders = dec.cylinders.size();
    for (const auto& cyl : dec.cylinders) c.max_strips = std::max(c.max_strips, cyl.strips);

    const Real P(c.p), Q(c.q);
    const Real cross = abs(x * Q - P);
    const Real dot = x * P + Q;
    // h_j / alpha_j = strips * (P^2 + Q^2); tan of the angle = cross / dot
    const Real measured = Real(c.max_strips) * (P * P + Q * Q) * cross / dot;
    c.drift_per_strip = static_cast<double>((P * P + Q * Q) * (x * Q - P) / dot);
    c.measured = static_cast<double>(measured);
    c.bound_lo = static_cast<double>(k) / static_cast<double>(c.next_quotient + 1);
    c.bound_hi = static_cast<double>(k) / static_cast<double>(c.next_quotient);
    c.within_bound = c.measured >= c.bound_lo * (1 - options.tolerance) &&
                     c.measured <= c.bound_hi * (1 + options.tolerance);
    c.scaled_rotation_error = static_cast<double>(Real(k) * Q * cross);
    const double sharp_lo = static_cast<double>(k) / static_cast<double>(c.next_quotient + 2);
    c.within_sharp_bound = c.scaled_rotation_error > sharp_lo * (1 - options.tolerance) &&
                           c.scaled_rotation_error < c.bound_hi * (1 + options.tolerance);

    if (c.next_quotient > record) {
      record = c.next_quotient;
      report.good_witness.push_back(n);
    }
    if (c.next_quotient >= 2LL * k + 1 && c.next_quotient <= cap) report.fairly_good_witness.push_back(n);
    report.convergents.push_back(c);
  }
  // Finite-depth reading of "diverging" and "at least 2k+1 but bounded".
  report.good_candidate = report.good_witness.size() >= 3 && record > 2LL * k + 1;
  if (!report.good_candidate) report.good_witness.clear();
  report.fairly_good_candidate = report.fairly_good_witness.size() >= 2;
  if (!report.fairly_good_candidate) report.fairly_good_witness.clear();
  return report;
}

}  // namespace stsurf
