#include "hardy/timescale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/format.hpp"

namespace hardy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double inf = std::numeric_limits<double>::infinity();

double lattice_point(const UniformLattice& l, long long k) { return l.origin + static_cast<double>(k) * l.h; }

double q_point(const QLattice& q, long long k) { return std::pow(q.q, static_cast<double>(k)); }

bool close(double x, double t) { return std::abs(x - t) <= snap_tolerance(t); }

// index of the q-lattice point nearest to t (t > 0), or nullopt
std::optional<long long> q_index(const QLattice& q, double t) {
    if (!(t > 0) || !std::isfinite(t)) return std::nullopt;
    long long k = std::llround(std::log(t) / std::log(q.q));
    for (long long d : {0LL, -1LL, 1LL}) {
        if (close(q_point(q, k + d), t)) return k + d;
    }
    return std::nullopt;
}

std::optional<long long> lattice_index(const UniformLattice& l, double t) {
    if (!std::isfinite(t)) return std::nullopt;
    long long k = std::llround((t - l.origin) / l.h);
    if (close(lattice_point(l, k), t)) return k;
    return std::nullopt;
}

std::optional<std::size_t> set_index(const FiniteSet& s, double t) {
    auto it = std::lower_bound(s.points.begin(), s.points.end(), t);
    std::size_t i = static_cast<std::size_t>(it - s.points.begin());
    if (i < s.points.size() && close(s.points[i], t)) return i;
    if (i > 0 && close(s.points[i - 1], t)) return i - 1;
    return std::nullopt;
}

}  // namespace

double snap_tolerance(double t) { return 1e-12 * std::max(1.0, std::abs(t)); }

TimeScale TimeScale::real_interval(double lo, double hi) {
    if (!(lo < hi) || std::isnan(lo) || std::isinf(lo)) throw InputError("RealInterval needs finite lo < hi");
    return TimeScale(RealInterval{lo, hi});
}

TimeScale TimeScale::integers() { return TimeScale(UniformLattice{1.0, 0.0}); }

TimeScale TimeScale::lattice(double h, double origin) {
    if (!(h > 0) || !std::isfinite(h) || !std::isfinite(origin)) throw InputError("UniformLattice needs finite h > 0");
    return TimeScale(UniformLattice{h, origin});
}

TimeScale TimeScale::q_lattice(double q) {
    if (!(q > 1) || !std::isfinite(q)) throw InputError("QLattice needs q > 1");
    return TimeScale(QLattice{q});
}

TimeScale TimeScale::finite_set(std::vector<double> points) {
    if (points.size() < 2) throw InputError("FiniteSet needs at least two points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i])) throw InputError("FiniteSet points must be finite");
        if (i > 0 && !(points[i - 1] < points[i])) throw InputError("FiniteSet points must be strictly increasing");
    }
    return TimeScale(FiniteSet{std::move(points)});
}

bool TimeScale::is_integers() const {
    auto* l = std::get_if<UniformLattice>(&v_);
    return l && l->h == 1.0 && l->origin == 0.0;
}

std::optional<double> TimeScale::snap(double t) const {
    return std::visit(overloaded{
                          [&](const RealInterval& r) -> std::optional<double> {
                              if (std::isnan(t)) return std::nullopt;
                              if (t >= r.lo && t <= r.hi) return t;
                              if (close(r.lo, t)) return r.lo;
                              if (std::isfinite(r.hi) && close(r.hi, t)) return r.hi;
                              return std::nullopt;
                          },
                          [&](const UniformLattice& l) -> std::optional<double> {
                              if (auto k = lattice_index(l, t)) return lattice_point(l, *k);
                              return std::nullopt;
                          },
                          [&](const QLattice& q) -> std::optional<double> {
                              if (auto k = q_index(q, t)) return q_point(q, *k);
                              return std::nullopt;
                          },
                          [&](const FiniteSet& s) -> std::optional<double> {
                              if (auto i = set_index(s, t)) return s.points[*i];
                              return std::nullopt;
                          },
                      },
                      v_);
}

double TimeScale::member(double t) const {
    auto s = snap(t);
    if (!s) throw NotAMember(t);
    return *s;
}

Jump TimeScale::jump(double t) const {
    return std::visit(overloaded{
                          [&](const RealInterval& r) -> Jump {
                              double x = member(t);
                              PointClass c{RightClass::dense, LeftClass::dense};
                              if (x == r.hi) c.right = RightClass::maximum;
                              if (x == r.lo) c.left = LeftClass::minimum;
                              return {x, x, 0.0, c};
                          },
                          [&](const UniformLattice& l) -> Jump {
                              auto k = lattice_index(l, t);
                              if (!k) throw NotAMember(t);
                              double x = lattice_point(l, *k);
                              double s = lattice_point(l, *k + 1);
                              return {s, lattice_point(l, *k - 1), s - x, {RightClass::scattered, LeftClass::scattered}};
                          },
                          [&](const QLattice& q) -> Jump {
                              auto k = q_index(q, t);
                              if (!k) throw NotAMember(t);
                              double x = q_point(q, *k);
                              double s = q_point(q, *k + 1);
                              return {s, q_point(q, *k - 1), s - x, {RightClass::scattered, LeftClass::scattered}};
                          },
                          [&](const FiniteSet& fs) -> Jump {
                              auto i = set_index(fs, t);
                              if (!i) throw NotAMember(t);
                              const auto& p = fs.points;
                              double x = p[*i];
                              Jump j{x, x, 0.0, {RightClass::scattered, LeftClass::scattered}};
                              if (*i + 1 < p.size()) {
                                  j.sigma = p[*i + 1];
                                  j.mu = j.sigma - x;
                              } else {
                                  j.cls.right = RightClass::maximum;
                              }
                              if (*i > 0) {
                                  j.rho = p[*i - 1];
                              } else {
                                  j.cls.left = LeftClass::minimum;
                              }
                              return j;
                          },
                      },
                      v_);
}

std::vector<double> TimeScale::points_in(double a, double b) const {
    if (is_dense()) throw DenseUnsupported();
    double lo = member(a);
    double hi = member(b);
    std::vector<double> out;
    if (!(lo < hi)) return out;
    std::visit(overloaded{
                   [&](const RealInterval&) {},
                   [&](const UniformLattice& l) {
                       long long ka = *lattice_index(l, lo), kb = *lattice_index(l, hi);
                       out.reserve(static_cast<std::size_t>(kb - ka));
                       for (long long k = ka; k < kb; ++k) out.push_back(lattice_point(l, k));
                   },
                   [&](const QLattice& q) {
                       long long ka = *q_index(q, lo), kb = *q_index(q, hi);
                       out.reserve(static_cast<std::size_t>(kb - ka));
                       for (long long k = ka; k < kb; ++k) out.push_back(q_point(q, k));
                   },
                   [&](const FiniteSet& s) {
                       std::size_t ia = *set_index(s, lo), ib = *set_index(s, hi);
                       out.assign(s.points.begin() + static_cast<std::ptrdiff_t>(ia),
                                  s.points.begin() + static_cast<std::ptrdiff_t>(ib));
                   },
               },
               v_);
    return out;
}

double TimeScale::ceil_member(double t) const {
    if (auto s = snap(t)) return *s;
    return std::visit(overloaded{
                          [&](const RealInterval& r) { return std::clamp(t, r.lo, r.hi); },
                          [&](const UniformLattice& l) {
                              return lattice_point(l, static_cast<long long>(std::ceil((t - l.origin) / l.h)));
                          },
                          [&](const QLattice& q) {
                              if (!(t > 0)) throw NotAMember(t);
                              long long k = static_cast<long long>(std::ceil(std::log(t) / std::log(q.q)));
                              while (q_point(q, k) < t) ++k;
                              while (q_point(q, k - 1) >= t) --k;
                              return q_point(q, k);
                          },
                          [&](const FiniteSet& s) {
                              auto it = std::lower_bound(s.points.begin(), s.points.end(), t);
                              return it == s.points.end() ? s.points.back() : *it;
                          },
                      },
                      v_);
}

double TimeScale::floor_member(double t) const {
    if (auto s = snap(t)) return *s;
    return std::visit(overloaded{
                          [&](const RealInterval& r) { return std::clamp(t, r.lo, r.hi); },
                          [&](const UniformLattice& l) {
                              return lattice_point(l, static_cast<long long>(std::floor((t - l.origin) / l.h)));
                          },
                          [&](const QLattice& q) {
                              if (!(t > 0)) throw NotAMember(t);
                              long long k = static_cast<long long>(std::floor(std::log(t) / std::log(q.q)));
                              while (q_point(q, k) > t) --k;
                              while (q_point(q, k + 1) <= t) ++k;
                              return q_point(q, k);
                          },
                          [&](const FiniteSet& s) {
                              auto it = std::upper_bound(s.points.begin(), s.points.end(), t);
                              return it == s.points.begin() ? s.points.front() : *(it - 1);
                          },
                      },
                      v_);
}

std::optional<double> TimeScale::min() const {
    if (auto* r = std::get_if<RealInterval>(&v_)) return r->lo;
    if (auto* s = std::get_if<FiniteSet>(&v_)) return s->points.front();
    return std::nullopt;
}

std::optional<double> TimeScale::max() const {
    if (auto* r = std::get_if<RealInterval>(&v_)) {
        if (std::isfinite(r->hi)) return r->hi;
        return std::nullopt;
    }
    if (auto* s = std::get_if<FiniteSet>(&v_)) return s->points.back();
    return std::nullopt;
}

std::string TimeScale::literal() const {
    return std::visit(overloaded{
                          [](const RealInterval& r) {
                              return "R[" + format_double(r.lo) + "," + format_double(r.hi) + "]";
                          },
                          [](const UniformLattice& l) -> std::string {
                              if (l.h == 1.0 && l.origin == 0.0) return "Z";
                              if (l.origin == 0.0) return "hZ(" + format_double(l.h) + ")";
                              return "hZ(" + format_double(l.h) + "," + format_double(l.origin) + ")";
                          },
                          [](const QLattice& q) { return "qZ(" + format_double(q.q) + ")"; },
                          [](const FiniteSet& s) {
                              std::string out = "set[";
                              for (std::size_t i = 0; i < s.points.size(); ++i) {
                                  if (i) out += ",";
                                  out += format_double(s.points[i]);
                              }
                              return out + "]";
                          },
                      },
                      v_);
}

}  // namespace hardy
